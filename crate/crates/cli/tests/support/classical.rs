//! Untwisted axioms written as sums over structure constants, independent of the library checkers.

use std::collections::BTreeMap;

use homent::linalg::LinearMap;
use homent::{Field, Rational as Q};

fn sum(it: impl Iterator<Item = Q>) -> Q {
    it.fold(Q::zero(), |acc, x| acc + x)
}

/// `Σ x·y` over `range`, skipping products with a zero factor.
fn dot(range: std::ops::Range<usize>, f: impl Fn(usize) -> (Q, Q)) -> Q {
    range.fold(Q::zero(), |acc, k| {
        let (x, y) = f(k);
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + x * y
        }
    })
}

fn delta(i: usize, j: usize) -> Q {
    if i == j {
        Q::one()
    } else {
        Q::zero()
    }
}

/// `e_i e_j = Σ_k m(i, j, k) e_k` with unit `Σ u(i) e_i`.
pub struct Alg<'a> {
    pub d: usize,
    pub mult: &'a LinearMap<Q>,
    pub unit: &'a [Q],
}

impl Alg<'_> {
    fn m(&self, i: usize, j: usize, k: usize) -> Q {
        self.mult.get(k, i * self.d + j).clone()
    }

    fn u(&self, i: usize) -> Q {
        self.unit[i].clone()
    }

    fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let d = self.d;
        (0..d).map(|k| sum((0..d * d).map(|ij| x[ij / d].clone() * y[ij % d].clone() * self.m(ij / d, ij % d, k)))).collect()
    }
}

/// `Δe_i = Σ D(i, p, q) e_p ⊗ e_q` and `ε(e_i) = e(i)`.
pub struct Coalg<'a> {
    pub d: usize,
    pub comult: &'a LinearMap<Q>,
    pub counit: &'a LinearMap<Q>,
}

impl Coalg<'_> {
    fn dl(&self, i: usize, p: usize, q: usize) -> Q {
        self.comult.get(p * self.d + q, i).clone()
    }

    fn e(&self, i: usize) -> Q {
        self.counit.get(0, i).clone()
    }
}

pub fn algebra(a: &Alg) -> bool {
    let d = a.d;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for t in 0..d {
                    let lhs = dot(0..d, |s| (a.m(i, j, s), a.m(s, k, t)));
                    let rhs = dot(0..d, |s| (a.m(j, k, s), a.m(i, s, t)));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    (0..d).all(|i| (0..d).all(|t| dot(0..d, |s| (a.u(s), a.m(s, i, t))) == delta(i, t) && dot(0..d, |s| (a.u(s), a.m(i, s, t))) == delta(i, t)))
}

pub fn coalgebra(c: &Coalg) -> bool {
    let d = c.d;
    for i in 0..d {
        for p in 0..d {
            for q in 0..d {
                for r in 0..d {
                    let lhs = dot(0..d, |s| (c.dl(i, s, r), c.dl(s, p, q)));
                    let rhs = dot(0..d, |s| (c.dl(i, p, s), c.dl(s, q, r)));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    (0..d).all(|i| (0..d).all(|x| dot(0..d, |p| (c.e(p), c.dl(i, p, x))) == delta(i, x) && dot(0..d, |q| (c.dl(i, x, q), c.e(q))) == delta(i, x)))
}

pub fn bialgebra(a: &Alg, c: &Coalg) -> bool {
    let d = a.d;
    if !algebra(a) || !coalgebra(c) {
        return false;
    }
    for i in 0..d {
        for j in 0..d {
            for p in 0..d {
                for q in 0..d {
                    let lhs = dot(0..d, |s| (a.m(i, j, s), c.dl(s, p, q)));
                    let mut rhs = Q::zero();
                    for (x1, x2, y1, y2) in quads(d) {
                        rhs += c.dl(i, x1, x2) * c.dl(j, y1, y2) * a.m(x1, y1, p) * a.m(x2, y2, q);
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            if dot(0..d, |s| (a.m(i, j, s), c.e(s))) != c.e(i) * c.e(j) {
                return false;
            }
        }
    }
    let unit_ok = (0..d).all(|p| (0..d).all(|q| dot(0..d, |s| (a.u(s), c.dl(s, p, q))) == a.u(p) * a.u(q)));
    unit_ok && dot(0..d, |s| (a.u(s), c.e(s))) == Q::one()
}

fn quads(d: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..d * d * d * d).map(move |n| (n / (d * d * d), (n / (d * d)) % d, (n / d) % d, n % d))
}

/// `S(h₁)h₂ = ε(h)1 = h₁S(h₂)` on top of the bialgebra axioms.
pub fn antipode(a: &Alg, c: &Coalg, s: &LinearMap<Q>) -> bool {
    let d = a.d;
    if !bialgebra(a, c) {
        return false;
    }
    let sm = |r: usize, col: usize| s.get(r, col).clone();
    for i in 0..d {
        for t in 0..d {
            let target = c.e(i) * a.u(t);
            let mut left = Q::zero();
            let mut right = Q::zero();
            for p in 0..d {
                for q in 0..d {
                    let dpq = c.dl(i, p, q);
                    if dpq.is_zero() {
                        continue;
                    }
                    for x in 0..d {
                        left += dpq.clone() * sm(x, p) * a.m(x, q, t);
                        right += dpq.clone() * sm(x, q) * a.m(p, x, t);
                    }
                }
            }
            if left != target || right != target {
                return false;
            }
        }
    }
    true
}

pub fn morphism(a: &Alg, b: &Alg, f: &LinearMap<Q>) -> bool {
    let fm = |r: usize, c: usize| f.get(r, c).clone();
    for i in 0..a.d {
        for j in 0..a.d {
            for t in 0..b.d {
                let lhs = dot(0..a.d, |s| (a.m(i, j, s), fm(t, s)));
                let rhs = sum((0..b.d * b.d).map(|xy| fm(xy / b.d, i) * fm(xy % b.d, j) * b.m(xy / b.d, xy % b.d, t)));
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    (0..b.d).all(|t| dot(0..a.d, |s| (a.u(s), fm(t, s))) == b.u(t))
}

/// `ψ(c ⊗ a) = Σ P(c, a, t, y) e_t ⊗ e_y`.
pub fn entwining(a: &Alg, c: &Coalg, psi: &LinearMap<Q>) -> bool {
    let (da, dc) = (a.d, c.d);
    let p = |x: usize, i: usize, t: usize, y: usize| psi.get(t * dc + y, x * da + i).clone();
    for x in 0..dc {
        for i in 0..da {
            for j in 0..da {
                for t in 0..da {
                    for y in 0..dc {
                        let lhs = dot(0..da, |s| (a.m(i, j, s), p(x, s, t, y)));
                        let mut rhs = Q::zero();
                        for i1 in 0..da {
                            for x1 in 0..dc {
                                let first = p(x, i, i1, x1);
                                if first.is_zero() {
                                    continue;
                                }
                                for j1 in 0..da {
                                    rhs += first.clone() * p(x1, j, j1, y) * a.m(i1, j1, t);
                                }
                            }
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
            for t in 0..da {
                for y in 0..dc {
                    if dot(0..da, |s| (a.u(s), p(x, s, t, y))) != a.u(t) * delta(x, y) {
                        return false;
                    }
                }
            }
            for t in 0..da {
                for q1 in 0..dc {
                    for q2 in 0..dc {
                        let lhs = dot(0..dc, |y| (p(x, i, t, y), c.dl(y, q1, q2)));
                        let mut rhs = Q::zero();
                        for (x1, x2) in (0..dc * dc).map(|n| (n / dc, n % dc)) {
                            let dx = c.dl(x, x1, x2);
                            if dx.is_zero() {
                                continue;
                            }
                            for i1 in 0..da {
                                rhs += dx.clone() * p(x2, i, i1, q2) * p(x1, i1, t, q1);
                            }
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
                if dot(0..dc, |y| (p(x, i, t, y), c.e(y))) != c.e(x) * delta(i, t) {
                    return false;
                }
            }
        }
    }
    true
}

/// `(m · a) = Σ act(m, a, t) e_t` for a right action of `a` on a space of dimension `dm`.
pub fn right_module(a: &Alg, dm: usize, act: &LinearMap<Q>) -> bool {
    let r = |m: usize, i: usize, t: usize| act.get(t, m * a.d + i).clone();
    for m in 0..dm {
        for t in 0..dm {
            for i in 0..a.d {
                for j in 0..a.d {
                    let lhs = dot(0..dm, |s| (r(m, i, s), r(s, j, t)));
                    let rhs = dot(0..a.d, |s| (a.m(i, j, s), r(m, s, t)));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            if dot(0..a.d, |s| (a.u(s), r(m, s, t))) != delta(m, t) {
                return false;
            }
        }
    }
    true
}

pub fn left_module(a: &Alg, dm: usize, act: &LinearMap<Q>) -> bool {
    let l = |i: usize, m: usize, t: usize| act.get(t, i * dm + m).clone();
    for m in 0..dm {
        for t in 0..dm {
            for i in 0..a.d {
                for j in 0..a.d {
                    let lhs = dot(0..dm, |s| (l(j, m, s), l(i, s, t)));
                    let rhs = dot(0..a.d, |s| (a.m(i, j, s), l(s, m, t)));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            if dot(0..a.d, |s| (a.u(s), l(s, m, t))) != delta(m, t) {
                return false;
            }
        }
    }
    true
}

pub fn right_comodule(c: &Coalg, dm: usize, rho: &LinearMap<Q>) -> bool {
    let r = |m: usize, x: usize, y: usize| rho.get(x * c.d + y, m).clone();
    for m in 0..dm {
        for x in 0..dm {
            for p in 0..c.d {
                for q in 0..c.d {
                    let lhs = dot(0..dm, |s| (r(m, s, q), r(s, x, p)));
                    let rhs = dot(0..c.d, |s| (r(m, x, s), c.dl(s, p, q)));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            if dot(0..c.d, |y| (r(m, x, y), c.e(y))) != delta(m, x) {
                return false;
            }
        }
    }
    true
}

pub fn left_comodule(c: &Coalg, dm: usize, lam: &LinearMap<Q>) -> bool {
    let l = |m: usize, y: usize, x: usize| lam.get(y * dm + x, m).clone();
    for m in 0..dm {
        for x in 0..dm {
            for p in 0..c.d {
                for q in 0..c.d {
                    let lhs = dot(0..c.d, |s| (l(m, s, x), c.dl(s, p, q)));
                    let rhs = dot(0..dm, |s| (l(m, p, s), l(s, q, x)));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
            if dot(0..c.d, |y| (c.e(y), l(m, y, x))) != delta(m, x) {
                return false;
            }
        }
    }
    true
}

/// Nonzero entries of each column of a map.
fn columns(map: &LinearMap<Q>) -> Vec<Vec<(usize, Q)>> {
    (0..map.cols()).map(|c| (0..map.rows()).filter_map(|r| Some((r, map.get(r, c).clone())).filter(|(_, x)| !x.is_zero())).collect()).collect()
}

/// Right `B`-comodule algebra `ρ: A → A ⊗ B`.
pub fn comodule_algebra(b: &Alg, bc: &Coalg, a: &Alg, rho: &LinearMap<Q>) -> bool {
    let (da, db) = (a.d, b.d);
    if !algebra(a) || !right_comodule(bc, da, rho) {
        return false;
    }
    let (r, ma, mb) = (columns(rho), columns(a.mult), columns(b.mult));
    for i in 0..da {
        for j in 0..da {
            let mut lhs = vec![Q::zero(); da * db];
            for (s, m) in &ma[i * da + j] {
                for (k, x) in &r[*s] {
                    lhs[*k] += m.clone() * x.clone();
                }
            }
            let mut rhs = vec![Q::zero(); da * db];
            for (k1, r1) in &r[i] {
                for (k2, r2) in &r[j] {
                    let (x1, y1, x2, y2) = (k1 / db, k1 % db, k2 / db, k2 % db);
                    let coef = r1.clone() * r2.clone();
                    for (x, u) in &ma[x1 * da + x2] {
                        for (y, v) in &mb[y1 * db + y2] {
                            rhs[x * db + y] += coef.clone() * u.clone() * v.clone();
                        }
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    (0..da).all(|x| (0..db).all(|y| sum((0..da).map(|s| a.u(s) * rho.get(x * db + y, s).clone())) == a.u(x) * b.u(y)))
}

/// Right `B`-module coalgebra `C ⊗ B → C`.
pub fn module_coalgebra(b: &Alg, bc: &Coalg, c: &Coalg, act: &LinearMap<Q>) -> bool {
    let (dc, db) = (c.d, b.d);
    if !coalgebra(c) || !right_module(b, dc, act) {
        return false;
    }
    let (ac, dcc, dbb) = (columns(act), columns(c.comult), columns(bc.comult));
    for x in 0..dc {
        for j in 0..db {
            let mut lhs = vec![Q::zero(); dc * dc];
            for (s, u) in &ac[x * db + j] {
                for (k, v) in &dcc[*s] {
                    lhs[*k] += u.clone() * v.clone();
                }
            }
            let mut rhs = vec![Q::zero(); dc * dc];
            for (kx, u) in &dcc[x] {
                for (kj, v) in &dbb[j] {
                    let (x1, x2, j1, j2) = (kx / dc, kx % dc, kj / db, kj % db);
                    let coef = u.clone() * v.clone();
                    for (p, s) in &ac[x1 * db + j1] {
                        for (q, t) in &ac[x2 * db + j2] {
                            rhs[p * dc + q] += coef.clone() * s.clone() * t.clone();
                        }
                    }
                }
            }
            if lhs != rhs || sum((0..dc).map(|s| act.get(s, x * db + j).clone() * c.e(s))) != c.e(x) * bc.e(j) {
                return false;
            }
        }
    }
    true
}

/// Left `B`-module algebra `B ⊗ A → A`.
pub fn module_algebra(b: &Alg, bc: &Coalg, a: &Alg, act: &LinearMap<Q>) -> bool {
    let (da, db) = (a.d, b.d);
    if !algebra(a) || !left_module(b, da, act) {
        return false;
    }
    let (ac, ma, dbb) = (columns(act), columns(a.mult), columns(bc.comult));
    for k in 0..db {
        for x in 0..da {
            for y in 0..da {
                let mut lhs = vec![Q::zero(); da];
                for (s, u) in &ma[x * da + y] {
                    for (t, v) in &ac[k * da + s] {
                        lhs[*t] += u.clone() * v.clone();
                    }
                }
                let mut rhs = vec![Q::zero(); da];
                for (kk, u) in &dbb[k] {
                    let (k1, k2) = (kk / db, kk % db);
                    for (x1, v) in &ac[k1 * da + x] {
                        for (y1, w) in &ac[k2 * da + y] {
                            let coef = u.clone() * v.clone() * w.clone();
                            for (t, m) in &ma[x1 * da + y1] {
                                rhs[*t] += coef.clone() * m.clone();
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        for t in 0..da {
            if sum((0..da).map(|s| a.u(s) * act.get(t, k * da + s).clone())) != bc.e(k) * a.u(t) {
                return false;
            }
        }
    }
    true
}

/// Left `B`-comodule coalgebra `C → B ⊗ C`.
pub fn comodule_coalgebra(b: &Alg, bc: &Coalg, c: &Coalg, lam: &LinearMap<Q>) -> bool {
    let (dc, db) = (c.d, b.d);
    if !coalgebra(c) || !left_comodule(bc, dc, lam) {
        return false;
    }
    let (lc, dcc, mb) = (columns(lam), columns(c.comult), columns(b.mult));
    for x in 0..dc {
        let mut lhs = vec![Q::zero(); db * dc * dc];
        for (k, u) in &lc[x] {
            let (kb, s) = (k / dc, k % dc);
            for (pq, v) in &dcc[s] {
                lhs[kb * dc * dc + pq] += u.clone() * v.clone();
            }
        }
        let mut rhs = vec![Q::zero(); db * dc * dc];
        for (kx, u) in &dcc[x] {
            let (x1, x2) = (kx / dc, kx % dc);
            for (l1, v) in &lc[x1] {
                for (l2, w) in &lc[x2] {
                    let (k1, p, k2, q) = (l1 / dc, l1 % dc, l2 / dc, l2 % dc);
                    let coef = u.clone() * v.clone() * w.clone();
                    for (k, m) in &mb[k1 * db + k2] {
                        rhs[(k * dc + p) * dc + q] += coef.clone() * m.clone();
                    }
                }
            }
        }
        if lhs != rhs {
            return false;
        }
        for k in 0..db {
            if sum((0..dc).map(|s| lam.get(k * dc + s, x).clone() * c.e(s))) != c.e(x) * b.u(k) {
                return false;
            }
        }
    }
    true
}

/// An invertible bialgebra endomorphism commuting with the antipode.
pub fn hopf_automorphism(a: &Alg, c: &Coalg, s: &LinearMap<Q>, phi: &LinearMap<Q>) -> bool {
    let d = a.d;
    if homent::linalg::rank(phi) != d || !morphism(a, a, phi) {
        return false;
    }
    let f = |r: usize, col: usize| phi.get(r, col).clone();
    for i in 0..d {
        for p in 0..d {
            for q in 0..d {
                let lhs = dot(0..d, |s| (f(s, i), c.dl(s, p, q)));
                let rhs = sum((0..d * d).map(|n| c.dl(i, n / d, n % d) * f(p, n / d) * f(q, n % d)));
                if lhs != rhs {
                    return false;
                }
            }
        }
        if dot(0..d, |s| (f(s, i), c.e(s))) != c.e(i) {
            return false;
        }
    }
    phi.compose(s) == s.compose(phi)
}

/// Right module and right comodule on a common space.
pub struct Witness<'a> {
    pub dm: usize,
    pub act: &'a LinearMap<Q>,
    pub rho: &'a LinearMap<Q>,
}

impl Witness<'_> {
    fn r(&self, m: usize, x: usize, y: usize, dc: usize) -> Q {
        self.rho.get(x * dc + y, m).clone()
    }

    fn a(&self, m: usize, i: usize, t: usize, da: usize) -> Q {
        self.act.get(t, m * da + i).clone()
    }

    /// `ρ(m · e_i)` against `rhs(m, i)`, both as vectors of `M ⊗ C`.
    fn compatible(&self, da: usize, dc: usize, rhs: impl Fn(usize, usize) -> Vec<Q>) -> bool {
        let (act, rho) = (columns(self.act), columns(self.rho));
        (0..self.dm).all(|m| {
            (0..da).all(|i| {
                let mut lhs = vec![Q::zero(); self.dm * dc];
                for (s, u) in &act[m * da + i] {
                    for (k, v) in &rho[*s] {
                        lhs[*k] += u.clone() * v.clone();
                    }
                }
                lhs == rhs(m, i)
            })
        })
    }

    fn base(&self, a: &Alg, c: &Coalg) -> bool {
        right_module(a, self.dm, self.act) && right_comodule(c, self.dm, self.rho)
    }
}

/// `ρ(ma) = m₀ a_κ ⊗ m₁^κ`.
pub fn entwined_module(a: &Alg, c: &Coalg, psi: &LinearMap<Q>, w: &Witness) -> bool {
    let (da, dc) = (a.d, c.d);
    let (act, rho, ps) = (columns(w.act), columns(w.rho), columns(psi));
    w.base(a, c)
        && w.compatible(da, dc, |m, i| {
            let mut out = vec![Q::zero(); w.dm * dc];
            for (k, r) in &rho[m] {
                let (m0, m1) = (k / dc, k % dc);
                for (ty, p) in &ps[m1 * da + i] {
                    let (t, y) = (ty / dc, ty % dc);
                    for (x, u) in &act[m0 * da + t] {
                        out[x * dc + y] += r.clone() * p.clone() * u.clone();
                    }
                }
            }
            out
        })
}

/// `ρ(ma) = m₀a₀ ⊗ m₁ · a₁` for a right comodule algebra `A` and right module coalgebra `C` over `B`.
pub fn dk_module(a: &Alg, db: usize, coaction: &LinearMap<Q>, c: &Coalg, action: &LinearMap<Q>, w: &Witness) -> bool {
    let (da, dc) = (a.d, c.d);
    let (act, rho, co, ac) = (columns(w.act), columns(w.rho), columns(coaction), columns(action));
    w.base(a, c)
        && w.compatible(da, dc, |m, i| {
            let mut out = vec![Q::zero(); w.dm * dc];
            for (k, r) in &rho[m] {
                let (m0, m1) = (k / dc, k % dc);
                for (ab, p) in &co[i] {
                    let (a0, b) = (ab / db, ab % db);
                    for (x, u) in &act[m0 * da + a0] {
                        for (y, v) in &ac[m1 * db + b] {
                            out[x * dc + y] += r.clone() * p.clone() * u.clone() * v.clone();
                        }
                    }
                }
            }
            out
        })
}

/// `ρ(mh) = m₀h ⊗ m₁`.
pub fn long_module(a: &Alg, c: &Coalg, w: &Witness) -> bool {
    let d = a.d;
    let (act, rho) = (columns(w.act), columns(w.rho));
    w.base(a, c)
        && w.compatible(d, d, |m, i| {
            let mut out = vec![Q::zero(); w.dm * d];
            for (k, r) in &rho[m] {
                let (m0, y) = (k / d, k % d);
                for (x, u) in &act[m0 * d + i] {
                    out[x * d + y] += r.clone() * u.clone();
                }
            }
            out
        })
}

/// `ρ(mh) = m₀h₂ ⊗ φ′(S(h₁))(m₁φ(h₃))`.
pub fn yd_module(a: &Alg, c: &Coalg, s: &LinearMap<Q>, phi: &LinearMap<Q>, varphi: &LinearMap<Q>, w: &Witness) -> bool {
    let d = a.d;
    let vs = varphi.compose(s);
    let unit = |i: usize| (0..d).map(|k| delta(i, k)).collect::<Vec<Q>>();
    let triple: Vec<Vec<Q>> = (0..d * d * d)
        .map(|n| {
            let (p, m1, r) = (n / (d * d), (n / d) % d, n % d);
            a.mul(&vs.column(p), &a.mul(&unit(m1), &phi.column(r)))
        })
        .collect();
    let twice: Vec<Vec<(usize, usize, usize, Q)>> = (0..d)
        .map(|h| {
            (0..d * d * d)
                .map(|n| (n / (d * d), (n / d) % d, n % d))
                .map(|(p, q, r)| (p, q, r, dot(0..d, |t| (c.dl(h, p, t), c.dl(t, q, r)))))
                .filter(|t| !t.3.is_zero())
                .collect()
        })
        .collect();
    let (act, rho) = (columns(w.act), columns(w.rho));
    w.base(a, c)
        && w.compatible(d, d, |m, i| {
            let mut out = vec![Q::zero(); w.dm * d];
            for (p, q, r, h) in &twice[i] {
                for (k, rv) in &rho[m] {
                    let (m0, m1) = (k / d, k % d);
                    for (x, u) in &act[m0 * d + q] {
                        let coef = h.clone() * rv.clone() * u.clone();
                        for (y, t) in triple[(p * d + m1) * d + r].iter().enumerate() {
                            if !t.is_zero() {
                                out[x * d + y] += coef.clone() * t.clone();
                            }
                        }
                    }
                }
            }
            out
        })
}

/// `ρ(ma) = m₀(m₁₋₁ · a) ⊗ m₁₀` for a left module algebra `A` and left comodule coalgebra `C` over `B`.
pub fn alt_dk_module(a: &Alg, action: &LinearMap<Q>, c: &Coalg, coaction: &LinearMap<Q>, w: &Witness) -> bool {
    let (da, dc) = (a.d, c.d);
    let (act, rho, ac, co) = (columns(w.act), columns(w.rho), columns(action), columns(coaction));
    w.base(a, c)
        && w.compatible(da, dc, |m, i| {
            let mut out = vec![Q::zero(); w.dm * dc];
            for (k, r) in &rho[m] {
                let (m0, m1) = (k / dc, k % dc);
                for (by, l) in &co[m1] {
                    let (b, y) = (by / dc, by % dc);
                    for (t, v) in &ac[b * da + i] {
                        for (x, u) in &act[m0 * da + t] {
                            out[x * dc + y] += r.clone() * l.clone() * v.clone() * u.clone();
                        }
                    }
                }
            }
            out
        })
}

type Sparse = BTreeMap<usize, Q>;

fn sparse(v: Vec<Q>) -> Sparse {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

fn add_to(v: &mut Sparse, k: usize, x: Q) {
    let entry = v.entry(k).or_insert_with(Q::zero);
    *entry += x;
    if entry.is_zero() {
        v.remove(&k);
    }
}

/// Membership in the span of relation vectors; each stored row is scaled to 1 at its smallest index.
struct Span {
    rows: BTreeMap<usize, Sparse>,
}

impl Span {
    fn new(relations: impl IntoIterator<Item = Sparse>) -> Self {
        let mut span = Span { rows: BTreeMap::new() };
        for r in relations {
            let r = span.reduce(r);
            if let Some((&p, lead)) = r.iter().next() {
                let inv = lead.inv().expect("nonzero pivot");
                span.rows.insert(p, r.into_iter().map(|(k, x)| (k, x * inv.clone())).collect());
            }
        }
        span
    }

    fn reduce(&self, mut v: Sparse) -> Sparse {
        let mut cursor = 0;
        while let Some((k, f)) = v.range(cursor..).find(|(k, _)| self.rows.contains_key(k)).map(|(&k, x)| (k, x.clone())) {
            for (&j, y) in &self.rows[&k] {
                add_to(&mut v, j, -(f.clone() * y.clone()));
            }
            cursor = k + 1;
        }
        v
    }

    fn contains(&self, v: Vec<Q>) -> bool {
        self.reduce(sparse(v)).is_empty()
    }
}

/// `X ⊗_A C ⊗_A C` as `((X ⊗_A C) ⊗ C) / balancing`, for `X` with right action `act_first`.
struct Triple {
    n: usize,
    normal: Vec<Sparse>,
    span: Span,
}

impl Triple {
    fn new(c: &Coring, first: usize, act_first: impl Fn(usize, usize, usize) -> Q) -> Self {
        let n = c.n;
        let pair = Span::new(c.relations(first, 1, 0, &act_first));
        let normal: Vec<Sparse> = (0..first * n).map(|k| pair.reduce(Sparse::from([(k, Q::one())]))).collect();
        let mut relations = Vec::new();
        for k in (0..first * n).filter(|k| !pair.rows.contains_key(k)) {
            let (u, z) = (k / n, k % n);
            for a in 0..c.a.d {
                for w in 0..n {
                    let mut v = Sparse::new();
                    for t in 0..n {
                        let x = c.r(z, a, t);
                        if !x.is_zero() {
                            for (j, y) in &normal[u * n + t] {
                                add_to(&mut v, j * n + w, x.clone() * y.clone());
                            }
                        }
                        let x = c.l(a, w, t);
                        if !x.is_zero() {
                            add_to(&mut v, k * n + t, -x);
                        }
                    }
                    relations.push(v);
                }
            }
        }
        Triple { n, normal, span: Span::new(relations) }
    }

    fn contains(&self, v: Vec<Q>) -> bool {
        let mut image = Sparse::new();
        for (idx, x) in v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in &self.normal[idx / self.n] {
                add_to(&mut image, j * self.n + idx % self.n, x.clone() * y.clone());
            }
        }
        self.span.reduce(image).is_empty()
    }
}

/// An `A`-bimodule `C` with `a · e_x = Σ left(a, x, t) e_t` and `e_x · a = Σ right(x, a, t) e_t`.
pub struct Coring<'a> {
    pub a: Alg<'a>,
    pub n: usize,
    pub left: &'a LinearMap<Q>,
    pub right: &'a LinearMap<Q>,
    pub comult: &'a LinearMap<Q>,
    pub counit: &'a LinearMap<Q>,
}

impl Coring<'_> {
    fn l(&self, a: usize, x: usize, t: usize) -> Q {
        self.left.get(t, a * self.n + x).clone()
    }

    fn r(&self, x: usize, a: usize, t: usize) -> Q {
        self.right.get(t, x * self.a.d + a).clone()
    }

    fn dl(&self, x: usize, y: usize, z: usize) -> Q {
        self.comult.get(y * self.n + z, x).clone()
    }

    fn e(&self, x: usize, b: usize) -> Q {
        self.counit.get(b, x).clone()
    }

    /// Relations `(u · a) ⊗ rest − u ⊗ (a · rest)` at position `at` of an `n`-fold tensor word.
    fn relations(&self, first: usize, words: usize, at: usize, right_of_first: impl Fn(usize, usize, usize) -> Q) -> Vec<Sparse> {
        let n = self.n;
        let len = first * n.pow(words as u32);
        let stride = |k: usize| if k == 0 { n.pow(words as u32) } else { n.pow((words - k) as u32) };
        let dim_at = |k: usize| if k == 0 { first } else { n };
        let mut out = Vec::new();
        for idx in 0..len {
            let coord = |k: usize| (idx / stride(k)) % dim_at(k);
            for a in 0..self.a.d {
                let mut v = Sparse::new();
                let (u, w) = (coord(at), coord(at + 1));
                let base = idx - u * stride(at) - w * stride(at + 1);
                for t in 0..dim_at(at) {
                    let c = if at == 0 { right_of_first(u, a, t) } else { self.r(u, a, t) };
                    if !c.is_zero() {
                        add_to(&mut v, base + t * stride(at) + w * stride(at + 1), c);
                    }
                }
                for t in 0..n {
                    let c = self.l(a, w, t);
                    if !c.is_zero() {
                        add_to(&mut v, base + u * stride(at) + t * stride(at + 1), -c);
                    }
                }
                out.push(v);
            }
        }
        out
    }
}

/// Bimodule laws, bilinearity of `Δ` and `ε` (with `Δ` compared in `C ⊗_A C`),
/// counit laws and coassociativity in `C ⊗_A C ⊗_A C`.
pub fn coring(c: &Coring) -> bool {
    let (n, da) = (c.n, c.a.d);
    if !left_module(&c.a, n, c.left) || !right_module(&c.a, n, c.right) {
        return false;
    }
    for (a, x, b, t) in (0..da * n * da * n).map(|k| (k / (n * da * n), (k / (da * n)) % n, (k / n) % da, k % n)) {
        let lhs = dot(0..n, |s| (c.l(a, x, s), c.r(s, b, t)));
        let rhs = dot(0..n, |s| (c.r(x, b, s), c.l(a, s, t)));
        if lhs != rhs {
            return false;
        }
    }
    let right_c = |u: usize, a: usize, t: usize| c.r(u, a, t);
    let r2 = Span::new(c.relations(n, 1, 0, right_c));
    let comult_of = |x: usize| (0..n * n).map(|k| c.dl(x, k / n, k % n)).collect::<Vec<Q>>();
    for a in 0..da {
        for x in 0..n {
            let mut diff = vec![Q::zero(); n * n];
            for s in 0..n {
                let coef = c.l(a, x, s);
                if coef.is_zero() {
                    continue;
                }
                for (d, v) in diff.iter_mut().zip(comult_of(s)) {
                    *d += coef.clone() * v;
                }
            }
            for (y, z) in (0..n * n).map(|k| (k / n, k % n)) {
                let dx = c.dl(x, y, z);
                if dx.is_zero() {
                    continue;
                }
                for t in 0..n {
                    diff[t * n + z] -= dx.clone() * c.l(a, y, t);
                }
            }
            if !r2.contains(diff) {
                return false;
            }
            let mut diff = vec![Q::zero(); n * n];
            for s in 0..n {
                let coef = c.r(x, a, s);
                if coef.is_zero() {
                    continue;
                }
                for (d, v) in diff.iter_mut().zip(comult_of(s)) {
                    *d += coef.clone() * v;
                }
            }
            for (y, z) in (0..n * n).map(|k| (k / n, k % n)) {
                let dx = c.dl(x, y, z);
                if dx.is_zero() {
                    continue;
                }
                for t in 0..n {
                    diff[y * n + t] -= dx.clone() * c.r(z, a, t);
                }
            }
            if !r2.contains(diff) {
                return false;
            }
            for b in 0..da {
                let lhs = dot(0..n, |s| (c.l(a, x, s), c.e(s, b)));
                let rhs = dot(0..da, |k| (c.e(x, k), c.a.m(a, k, b)));
                let lhs2 = dot(0..n, |s| (c.r(x, a, s), c.e(s, b)));
                let rhs2 = dot(0..da, |k| (c.e(x, k), c.a.m(k, a, b)));
                if lhs != rhs || lhs2 != rhs2 {
                    return false;
                }
            }
        }
    }
    for x in 0..n {
        for t in 0..n {
            let mut left = Q::zero();
            let mut right = Q::zero();
            for (y, z) in (0..n * n).map(|k| (k / n, k % n)) {
                let dx = c.dl(x, y, z);
                if dx.is_zero() {
                    continue;
                }
                for b in 0..da {
                    left += dx.clone() * c.e(y, b) * c.l(b, z, t);
                    right += dx.clone() * c.e(z, b) * c.r(y, b, t);
                }
            }
            if left != delta(x, t) || right != delta(x, t) {
                return false;
            }
        }
    }
    let r3 = Triple::new(c, n, right_c);
    (0..n).all(|x| {
        let mut diff = vec![Q::zero(); n * n * n];
        for (y, z) in (0..n * n).map(|k| (k / n, k % n)) {
            let dx = c.dl(x, y, z);
            if dx.is_zero() {
                continue;
            }
            for (p, q) in (0..n * n).map(|k| (k / n, k % n)) {
                diff[(p * n + q) * n + z] += dx.clone() * c.dl(y, p, q);
                diff[(y * n + p) * n + q] -= dx.clone() * c.dl(z, p, q);
            }
        }
        r3.contains(diff)
    })
}

/// A right `A`-module `M` with a coaction lift `M → M ⊗ C` over the coring `c`.
pub fn coring_comodule(c: &Coring, w: &Witness) -> bool {
    let (n, da, dm) = (c.n, c.a.d, w.dm);
    if !right_module(&c.a, dm, w.act) {
        return false;
    }
    let act = |m: usize, a: usize, t: usize| w.a(m, a, t, da);
    let rho = |m: usize| (0..dm * n).map(|k| w.r(m, k / n, k % n, n)).collect::<Vec<Q>>();
    let r_mc = Span::new(c.relations(dm, 1, 0, act));
    for m in 0..dm {
        for a in 0..da {
            let mut diff = vec![Q::zero(); dm * n];
            for s in 0..dm {
                let coef = act(m, a, s);
                for (d, v) in diff.iter_mut().zip(rho(s)) {
                    *d += coef.clone() * v;
                }
            }
            for (m0, x) in (0..dm * n).map(|k| (k / n, k % n)) {
                let r = w.r(m, m0, x, n);
                for t in 0..n {
                    diff[m0 * n + t] -= r.clone() * c.r(x, a, t);
                }
            }
            if !r_mc.contains(diff) {
                return false;
            }
        }
        for t in 0..dm {
            let mut acc = Q::zero();
            for (m0, x) in (0..dm * n).map(|k| (k / n, k % n)) {
                let r = w.r(m, m0, x, n);
                if r.is_zero() {
                    continue;
                }
                for b in 0..da {
                    acc += r.clone() * c.e(x, b) * act(m0, b, t);
                }
            }
            if acc != delta(m, t) {
                return false;
            }
        }
    }
    let r_mcc = Triple::new(c, dm, act);
    (0..dm).all(|m| {
        let mut diff = vec![Q::zero(); dm * n * n];
        for (m0, x) in (0..dm * n).map(|k| (k / n, k % n)) {
            let r = w.r(m, m0, x, n);
            if r.is_zero() {
                continue;
            }
            for (p, q) in (0..dm * n).map(|k| (k / n, k % n)) {
                diff[(p * n + q) * n + x] += r.clone() * w.r(m0, p, q, n);
            }
            for (y, z) in (0..n * n).map(|k| (k / n, k % n)) {
                diff[(m0 * n + y) * n + z] -= r.clone() * c.dl(x, y, z);
            }
        }
        r_mcc.contains(diff)
    })
}
