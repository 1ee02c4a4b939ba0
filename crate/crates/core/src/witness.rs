//! Building module witnesses: free entwined modules, direct sums, transport and mutation.

use crate::entwining::EntwiningStructure;
use crate::error::{shape, Result};
use crate::field::Field;
use crate::linalg::{invert, unit_vec, LinearMap};
use crate::structures::module::{Action, Coaction, ModuleWitness, Side};
use crate::tensor::Tensor;

/// `N ⊗ C` for a right `A`-module `N`, with `μ = ν ⊗ γ`,
/// `ρ(n ⊗ c) = (ν⁻¹(n) ⊗ c₁) ⊗ c₂` and `(n ⊗ c)a = na_κ ⊗ γ(c^κ)`.
pub fn free_entwined_module<F: Field>(e: &EntwiningStructure<F>, n: &ModuleWitness<F>) -> Result<ModuleWitness<F>> {
    let (a, c) = (e.algebra(), e.coalgebra());
    let (da, dc, dn) = (a.dim(), c.dim(), n.dim());
    let act_n = n.action_map(Side::Right, da)?;
    let dm = dn * dc;
    let mu = n.mu().kron(c.gamma());
    let coaction = LinearMap::from_images(dm * dc, dm, |x| {
        let (k, y) = (x / dc, x % dc);
        Tensor::vector(n.mu_inv().column(k)).outer(&c.delta(&unit_vec(dc, y))).into_data()
    });
    let action = LinearMap::from_images(dm, dm * da, |col| {
        let (x, i) = (col / da, col % da);
        let (k, y) = (x / dc, x % dc);
        Tensor::vector(unit_vec(dn, k)).outer(&e.apply(&unit_vec(dc, y), &unit_vec(da, i))).apply(0, 2, act_n, &[dn]).apply_leg(1, c.gamma()).into_data()
    });
    Ok(ModuleWitness::new(mu)?.with_action(Side::Right, action).with_coaction(Side::Right, coaction))
}

/// Where the summand index sits in `M ⊗ K` (right) or `K ⊗ M` (left).
fn sum_index(side: Side, m: usize, k: usize, dm: usize, dk: usize) -> usize {
    match side {
        Side::Right => m * dk + k,
        Side::Left => k * dm + m,
    }
}

/// Block-diagonal sum of `X ⊗ K → X` style maps (`into_m`) or `X → X ⊗ K` style maps.
fn block_sum<F: Field>(x: &LinearMap<F>, y: &LinearMap<F>, dx: usize, dy: usize, dk: usize, side: Side, into_m: bool) -> LinearMap<F> {
    let d = dx + dy;
    let (small_rows, small_cols) = if into_m { (1, dk) } else { (dk, 1) };
    let mut out = LinearMap::zeros(d * small_rows, d * small_cols);
    for (map, offset, dim) in [(x, 0, dx), (y, dx, dy)] {
        for m_in in 0..dim {
            for k_in in 0..small_cols {
                let col_small = sum_index(side, m_in, k_in, dim, small_cols);
                let col = sum_index(side, offset + m_in, k_in, d, small_cols);
                for m_out in 0..dim {
                    for k_out in 0..small_rows {
                        let v = map.get(sum_index(side, m_out, k_out, dim, small_rows), col_small);
                        if !v.is_zero() {
                            out.set(sum_index(side, offset + m_out, k_out, d, small_rows), col, v.clone());
                        }
                    }
                }
            }
        }
    }
    out
}

/// `X ⊕ Y` with block-diagonal automorphism, action and coaction; both must carry the same kinds of structure.
pub fn direct_sum<F: Field>(x: &ModuleWitness<F>, y: &ModuleWitness<F>, acting_dim: usize, coacting_dim: usize) -> Result<ModuleWitness<F>> {
    let (dx, dy) = (x.dim(), y.dim());
    let mut out = ModuleWitness::new(block_sum(x.mu(), y.mu(), dx, dy, 1, Side::Right, true))?;
    match (&x.action, &y.action) {
        (Some(p), Some(q)) if p.side == q.side => {
            let (p_map, q_map) = (x.action_map(p.side, acting_dim)?, y.action_map(q.side, acting_dim)?);
            let map = block_sum(p_map, q_map, dx, dy, acting_dim, p.side, true);
            out.action = Some(Action { side: p.side, map });
        }
        (None, None) => {}
        _ => return Err(shape("summands carry different actions")),
    }
    match (&x.coaction, &y.coaction) {
        (Some(p), Some(q)) if p.side == q.side => {
            let (p_map, q_map) = (x.coaction_map(p.side, coacting_dim)?, y.coaction_map(q.side, coacting_dim)?);
            let map = block_sum(p_map, q_map, dx, dy, coacting_dim, p.side, false);
            out.coaction = Some(Coaction { side: p.side, map });
        }
        (None, None) => {}
        _ => return Err(shape("summands carry different coactions")),
    }
    Ok(out)
}

/// Transports all structure along an invertible `t: M → M'`.
pub fn transport<F: Field>(m: &ModuleWitness<F>, t: &LinearMap<F>, acting_dim: usize, coacting_dim: usize) -> Result<ModuleWitness<F>> {
    let d = m.dim();
    t.require_shape(d, d, "transport map")?;
    let t_inv = invert(t)?;
    let mut out = ModuleWitness::new(t.compose(m.mu()).compose(&t_inv))?;
    if let Some(a) = &m.action {
        let map = m.action_map(a.side, acting_dim)?;
        let id = LinearMap::identity(acting_dim);
        let map = match a.side {
            Side::Right => t.compose(map).compose(&t_inv.kron(&id)),
            Side::Left => t.compose(map).compose(&id.kron(&t_inv)),
        };
        out.action = Some(Action { side: a.side, map });
    }
    if let Some(c) = &m.coaction {
        let map = m.coaction_map(c.side, coacting_dim)?;
        let id = LinearMap::identity(coacting_dim);
        let map = match c.side {
            Side::Right => t.kron(&id).compose(map).compose(&t_inv),
            Side::Left => id.kron(t).compose(map).compose(&t_inv),
        };
        out.coaction = Some(Coaction { side: c.side, map });
    }
    Ok(out)
}

/// Adds one to entry `(row, col)` of a matrix.
pub fn bump<F: Field>(map: &LinearMap<F>, row: usize, col: usize) -> LinearMap<F> {
    let mut out = map.clone();
    let mut v = out.get(row, col).clone();
    v.add_assign_ref(&F::one());
    out.set(row, col, v);
    out
}

/// The right module `A` with `μ = α` and multiplication, repeated `copies` times.
pub fn free_right_module<F: Field>(a: &crate::structures::algebra::HomAlgebra<F>, copies: usize) -> Result<ModuleWitness<F>> {
    let one = ModuleWitness::regular(a, Side::Right);
    let mut out = one.clone();
    for _ in 1..copies {
        out = direct_sum(&out, &one, a.dim(), 0)?;
    }
    Ok(out)
}

/// The ground field as a right module through the counit, `m · b = ε(b)m`, with `μ = id`.
pub fn counit_module<F: Field>(b: &crate::structures::bialgebra::HomBialgebra<F>) -> ModuleWitness<F> {
    let action = LinearMap::from_vec(1, b.dim(), b.coalgebra().counit().data().to_vec()).expect("counit is a row");
    ModuleWitness::new(LinearMap::identity(1)).expect("identity is invertible").with_action(Side::Right, action)
}
