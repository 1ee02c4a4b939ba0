//! The left, right and two-sided dual algebras of a Hom-coring.

use alloc::vec::Vec;

use crate::error::Result;
use crate::field::Field;
use crate::linalg::{unit_vec, LinearMap};
use crate::maps::MapAlgebra;

use super::HomCoring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualSide {
    /// Left `A`-linear maps with `(f ∗ˡ g)(c) = f(c₁g(c₂))`.
    Left,
    /// Right `A`-linear maps with `(f ∗ʳ g)(c) = g(f(c₁)c₂)`.
    Right,
    /// Bimodule maps with `(f ∗ g)(c) = f(c₁)g(c₂)`.
    TwoSided,
}

/// Maps `C → A` commuting with the automorphisms and linear on the chosen side(s), with unit `ε_C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualAlgebra<F> {
    pub side: DualSide,
    pub maps: MapAlgebra<F>,
}

fn constraints<F: Field>(c: &HomCoring<F>, side: DualSide) -> LinearMap<F> {
    let a = c.base();
    let (da, n) = (a.dim(), c.dim());
    let var = |r: usize, k: usize| r * n + k;
    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut push = |row: Vec<F>| {
        if row.iter().any(|x| !x.is_zero()) {
            rows.push(row);
        }
    };
    for r in 0..da {
        for x in 0..n {
            let mut row = alloc::vec![F::zero(); da * n];
            for k in 0..n {
                row[var(r, k)].add_assign_ref(c.chi().get(k, x));
            }
            for k in 0..da {
                row[var(k, x)].sub_assign_ref(a.alpha().get(r, k));
            }
            push(row);
        }
    }
    let left = matches!(side, DualSide::Left | DualSide::TwoSided);
    let right = matches!(side, DualSide::Right | DualSide::TwoSided);
    for i in 0..da {
        for x in 0..n {
            for r in 0..da {
                if left {
                    let mut row = alloc::vec![F::zero(); da * n];
                    for k in 0..n {
                        row[var(r, k)].add_assign_ref(c.left_action().get(k, i * n + x));
                    }
                    for k in 0..da {
                        row[var(k, x)].sub_assign_ref(a.mult().get(r, i * da + k));
                    }
                    push(row);
                }
                if right {
                    let mut row = alloc::vec![F::zero(); da * n];
                    for k in 0..n {
                        row[var(r, k)].add_assign_ref(c.right_action().get(k, x * da + i));
                    }
                    for k in 0..da {
                        row[var(k, x)].sub_assign_ref(a.mult().get(r, k * da + i));
                    }
                    push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return LinearMap::zeros(0, da * n);
    }
    LinearMap::from_rows(&rows).expect("rows of equal length")
}

/// The product of two maps `C → A` on the given side, evaluated on the lift of `Δ`.
pub fn dual_product<F: Field>(c: &HomCoring<F>, side: DualSide, f: &LinearMap<F>, g: &LinearMap<F>) -> LinearMap<F> {
    let a = c.base();
    let (da, n) = (a.dim(), c.dim());
    LinearMap::from_images(da, n, |x| {
        let d = c.delta(&unit_vec(n, x));
        match side {
            DualSide::Left => f.apply(d.apply_leg(1, g).apply(0, 2, c.right_action(), &[n]).data()),
            DualSide::Right => g.apply(d.apply_leg(0, f).apply(0, 2, c.left_action(), &[n]).data()),
            DualSide::TwoSided => d.apply_leg(0, f).apply_leg(1, g).apply(0, 2, a.mult(), &[da]).into_data(),
        }
    })
}

/// `*C`, `C*` or `*C*` with its convolution product, in the kernel basis of the constraint system.
pub fn dual_algebra<F: Field>(c: &HomCoring<F>, side: DualSide) -> Result<DualAlgebra<F>> {
    let (da, n) = (c.base().dim(), c.dim());
    let maps = MapAlgebra::from_constraints(da, n, &constraints(c, side), c.counit(), |f, g| dual_product(c, side, f, g), "dual algebra")?;
    Ok(DualAlgebra { side, maps })
}
