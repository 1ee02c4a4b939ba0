//! Algebras whose elements are linear maps cut out by linear constraints.

use alloc::vec::Vec;

use crate::check::Verdict;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{kernel_basis, solve, LinearMap};
use crate::structures::algebra::{check_hom_algebra, HomAlgebra};

/// A subspace of `rows × cols` matrices closed under a bilinear product.
///
/// Matrices are flattened row-major, so entry `(r, c)` of an element is
/// coordinate `r * cols + c` of the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapAlgebra<F> {
    rows: usize,
    cols: usize,
    basis: Vec<LinearMap<F>>,
    span: LinearMap<F>,
    algebra: HomAlgebra<F>,
}

impl<F: Field> MapAlgebra<F> {
    /// The kernel of `constraints` with the product `product`, and `unit` as its unit.
    pub fn from_constraints(
        rows: usize,
        cols: usize,
        constraints: &LinearMap<F>,
        unit: &LinearMap<F>,
        product: impl Fn(&LinearMap<F>, &LinearMap<F>) -> LinearMap<F>,
        what: &str,
    ) -> Result<Self> {
        constraints.require_shape(constraints.rows(), rows * cols, "constraint system")?;
        let flat = kernel_basis(constraints);
        let basis: Vec<LinearMap<F>> = flat.iter().map(|v| LinearMap::from_vec(rows, cols, v.clone()).expect("kernel vector has matrix size")).collect();
        let k = basis.len();
        let span = LinearMap::from_columns(rows * cols, &flat)?;
        let coords =
            |m: &LinearMap<F>, label: &str| -> Result<Vec<F>> { solve(&span, m.data()).ok_or_else(|| Error::NotClosed(alloc::format!("{label} of {what}"))) };
        let unit_coords = coords(unit, "unit")?;
        let mut mult = LinearMap::zeros(k, k * k);
        for i in 0..k {
            for j in 0..k {
                let p = product(&basis[i], &basis[j]);
                let c = coords(&p, "product")?;
                for (r, x) in c.into_iter().enumerate() {
                    mult.set(r, i * k + j, x);
                }
            }
        }
        let algebra = HomAlgebra::new(mult, unit_coords, LinearMap::identity(k))?;
        Ok(MapAlgebra { rows, cols, basis, span, algebra })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn map_shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn basis(&self) -> &[LinearMap<F>] {
        &self.basis
    }

    /// Structure constants in the computed basis, with identity automorphism.
    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    /// Coordinates of a map in the basis, if it lies in the subspace.
    pub fn coordinates(&self, m: &LinearMap<F>) -> Option<Vec<F>> {
        if m.rows() != self.rows || m.cols() != self.cols {
            return None;
        }
        solve(&self.span, m.data())
    }

    pub fn element(&self, coords: &[F]) -> LinearMap<F> {
        LinearMap::from_vec(self.rows, self.cols, self.span.apply(coords)).expect("span has matrix size")
    }

    /// Associativity and both unit laws on all basis tuples.
    pub fn check(&self) -> Result<Verdict<F>> {
        check_hom_algebra(&self.algebra)
    }
}
