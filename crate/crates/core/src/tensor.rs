//! Elements of tensor products of coordinate spaces.
//!
//! The basis of `V_0 ⊗ … ⊗ V_{n-1}` is ordered lexicographically with the first
//! leg most significant, so `(i, j)` in `V ⊗ W` sits at `i * dim W + j`. Every
//! leg manipulation in the crate goes through [`Tensor::apply`] and
//! [`Tensor::permute`].

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;
use crate::linalg::LinearMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor<F> {
    dims: Vec<usize>,
    data: Vec<F>,
}

impl<F: Field> Tensor<F> {
    pub fn new(dims: &[usize], data: Vec<F>) -> Self {
        assert_eq!(dims.iter().product::<usize>(), data.len(), "tensor data does not match its legs");
        Tensor { dims: dims.to_vec(), data }
    }

    pub fn zeros(dims: &[usize]) -> Self {
        Tensor { dims: dims.to_vec(), data: vec![F::zero(); dims.iter().product()] }
    }

    /// A single-leg tensor.
    pub fn vector(v: Vec<F>) -> Self {
        Tensor { dims: vec![v.len()], data: v }
    }

    /// Basis tensor `e_{i_0} ⊗ … ⊗ e_{i_{n-1}}`.
    pub fn basis(dims: &[usize], index: &[usize]) -> Self {
        let mut t = Self::zeros(dims);
        t.data[flat_index(dims, index)] = F::one();
        t
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn outer(&self, other: &Tensor<F>) -> Tensor<F> {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut data = vec![F::zero(); self.data.len() * other.data.len()];
        let n = other.data.len();
        for (i, a) in self.data.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.data.iter().enumerate() {
                if !b.is_zero() {
                    data[i * n + j] = a.mul_ref(b);
                }
            }
        }
        Tensor { dims, data }
    }

    /// Applies `map` to the `count` consecutive legs starting at `start`,
    /// replacing them by legs of sizes `out_dims`.
    pub fn apply(&self, start: usize, count: usize, map: &LinearMap<F>, out_dims: &[usize]) -> Tensor<F> {
        assert!(start + count <= self.dims.len(), "leg range out of bounds");
        let in_block: usize = self.dims[start..start + count].iter().product();
        let out_block: usize = out_dims.iter().product();
        assert_eq!(map.cols(), in_block, "map domain does not match the legs");
        assert_eq!(map.rows(), out_block, "map codomain does not match the output legs");
        let suffix: usize = self.dims[start + count..].iter().product();
        let mut dims = self.dims[..start].to_vec();
        dims.extend_from_slice(out_dims);
        dims.extend_from_slice(&self.dims[start + count..]);
        let mut data = vec![F::zero(); dims.iter().product()];
        let entries = map.data();
        for (idx, x) in self.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let s = idx % suffix;
            let m = (idx / suffix) % in_block;
            let p = idx / (suffix * in_block);
            for r in 0..out_block {
                let v = &entries[r * in_block + m];
                if !v.is_zero() {
                    data[(p * out_block + r) * suffix + s].mul_add_assign(x, v);
                }
            }
        }
        Tensor { dims, data }
    }

    /// Applies `map` to the single leg `leg`.
    pub fn apply_leg(&self, leg: usize, map: &LinearMap<F>) -> Tensor<F> {
        self.apply(leg, 1, map, &[map.rows()])
    }

    /// Reorders legs: leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor<F> {
        let n = self.dims.len();
        assert_eq!(perm.len(), n, "permutation length");
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut data = vec![F::zero(); self.data.len()];
        let mut index = vec![0usize; n];
        for (idx, x) in self.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            unflatten(&self.dims, idx, &mut index);
            let mut out = 0;
            for (i, &p) in perm.iter().enumerate() {
                out = out * dims[i] + index[p];
            }
            data[out] = x.clone();
        }
        Tensor { dims, data }
    }

    /// Merges all legs into one.
    pub fn flatten(self) -> Tensor<F> {
        Tensor::vector(self.data)
    }

    /// Nonzero entries with their multi-indices.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &F)> + '_ {
        self.data.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(move |(idx, x)| {
            let mut index = vec![0; self.dims.len()];
            unflatten(&self.dims, idx, &mut index);
            (index, x)
        })
    }
}

pub fn flat_index(dims: &[usize], index: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), index.len());
    index.iter().zip(dims).fold(0, |acc, (&i, &d)| {
        debug_assert!(i < d);
        acc * d + i
    })
}

pub fn unflatten(dims: &[usize], mut idx: usize, out: &mut [usize]) {
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
}

/// The swap `V ⊗ W → W ⊗ V`.
pub fn flip_map<F: Field>(v: usize, w: usize) -> LinearMap<F> {
    LinearMap::from_images(v * w, w * v, |c| {
        let (i, j) = (c / w, c % w);
        let mut out = vec![F::zero(); v * w];
        out[j * v + i] = F::one();
        out
    })
}

/// Outer product of two coordinate vectors, flattened.
pub fn pair<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    Tensor::vector(a.to_vec()).outer(&Tensor::vector(b.to_vec())).into_data()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn basis_ordering_is_lexicographic() {
        let t = Tensor::<Rational>::basis(&[2, 3, 4], &[1, 2, 3]);
        assert_eq!(t.data().iter().position(|x| *x == q(1)), Some(12 + 8 + 3));
        let mut idx = [0; 3];
        unflatten(&[2, 3, 4], 23, &mut idx);
        assert_eq!(idx, [1, 2, 3]);
    }

    #[test]
    fn apply_on_middle_leg() {
        let double = LinearMap::identity(3).scale(&q(2));
        let t = Tensor::<Rational>::basis(&[2, 3, 2], &[1, 1, 0]);
        let u = t.apply_leg(1, &double);
        assert_eq!(u, Tensor::basis(&[2, 3, 2], &[1, 1, 0]).apply_leg(0, &LinearMap::identity(2).scale(&q(2))));
    }

    #[test]
    fn apply_two_legs_changes_shape() {
        // Sum map k^2 ⊗ k^2 → k^1 on legs 1,2 of a 3-leg tensor.
        let sum = LinearMap::from_vec(1, 4, vec![q(1); 4]).unwrap();
        let t = Tensor::<Rational>::basis(&[3, 2, 2], &[2, 1, 0]);
        let u = t.apply(1, 2, &sum, &[1]);
        assert_eq!(u.dims(), &[3, 1]);
        assert_eq!(u, Tensor::basis(&[3, 1], &[2, 0]));
    }

    #[test]
    fn permute_and_flip_agree() {
        for (i, j) in [(0, 1), (1, 0), (1, 2), (0, 2)] {
            let t = Tensor::<Rational>::basis(&[2, 3], &[i, j]);
            let flipped = t.apply(0, 2, &flip_map(2, 3), &[3, 2]);
            assert_eq!(flipped.data(), t.permute(&[1, 0]).data());
            assert_eq!(flipped, Tensor::basis(&[3, 2], &[j, i]));
        }
    }

    #[test]
    fn cyclic_permutation() {
        let t = Tensor::<Rational>::basis(&[2, 3, 4], &[1, 2, 3]);
        assert_eq!(t.permute(&[2, 0, 1]), Tensor::basis(&[4, 2, 3], &[3, 1, 2]));
    }

    #[test]
    fn outer_products() {
        let a = Tensor::vector(vec![q(1), q(2)]);
        let b = Tensor::vector(vec![q(3), q(0), q(1)]);
        assert_eq!(a.outer(&b).data(), &[q(3), q(0), q(1), q(6), q(0), q(2)]);
        assert_eq!(pair(&[q(1), q(2)], &[q(3), q(0), q(1)]), a.outer(&b).into_data());
    }
}
