//! Rank-3 structure constants, rank-2 tensors and the multilinear plumbing
//! shared by every checker.
//!
//! Index convention: for a bilinear operation `∘`, `c[i][j][k]` is the
//! coefficient of `e_k` in `e_i ∘ e_j`. Slot `i` is the left operand, `j` the
//! right operand, `k` the output.

use num_traits::Zero;

use crate::error::{expect_dim, Error, Result};
use crate::exact::{zero_vector, Rational, Vector};
use crate::linalg::LinearMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    left: usize,
    right: usize,
    out: usize,
    entries: Vec<Rational>,
}

impl StructureConstants {
    pub fn zeros(left: usize, right: usize, out: usize) -> Self {
        StructureConstants {
            left,
            right,
            out,
            entries: vec![Rational::zero(); left * right * out],
        }
    }

    /// Constants of an operation `V × V → V` with `dim V = n`.
    pub fn square(n: usize) -> Self {
        Self::zeros(n, n, n)
    }

    /// Collects `(i, j, k, value)` entries into an `n`-dimensional table.
    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut c = Self::square(n);
        for (i, j, k, v) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::input(format!(
                    "structure constant index ({i}, {j}, {k}) out of range for dimension {n}"
                )));
            }
            c.set(i, j, k, v);
        }
        Ok(c)
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn is_square_of(&self, n: usize) -> bool {
        self.shape() == (n, n, n)
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        (i * self.right + j) * self.out
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.entries[self.offset(i, j) + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let o = self.offset(i, j);
        self.entries[o + k] = value;
    }

    /// Coordinates of `e_i ∘ e_j`.
    pub fn on_basis(&self, i: usize, j: usize) -> &[Rational] {
        let o = self.offset(i, j);
        &self.entries[o..o + self.out]
    }

    pub(crate) fn set_on_basis(&mut self, i: usize, j: usize, value: &[Rational]) {
        let o = self.offset(i, j);
        self.entries[o..o + self.out].clone_from_slice(value);
    }

    pub fn apply(&self, u: &[Rational], v: &[Rational]) -> Result<Vector> {
        expect_dim("bilinear left argument", self.left, u.len())?;
        expect_dim("bilinear right argument", self.right, v.len())?;
        Ok(self.apply_unchecked(u, v))
    }

    pub(crate) fn apply_unchecked(&self, u: &[Rational], v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.out);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                for (o, c) in out.iter_mut().zip(self.on_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &w * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `e_i ∘ (-)`.
    pub fn left_multiplication(&self, i: usize) -> LinearMap {
        LinearMap::from_fn(self.out, self.right, |k, j| self.get(i, j, k).clone())
    }

    /// Matrix of `(-) ∘ e_j`.
    pub fn right_multiplication(&self, j: usize) -> LinearMap {
        LinearMap::from_fn(self.out, self.left, |k, i| self.get(i, j, k).clone())
    }

    /// Matrix of `u ∘ (-)` for an arbitrary left argument.
    pub fn left_multiplication_by(&self, u: &[Rational]) -> LinearMap {
        LinearMap::from_fn(self.out, self.right, |k, j| {
            u.iter()
                .enumerate()
                .filter(|(_, ui)| !ui.is_zero())
                .fold(Rational::zero(), |acc, (i, ui)| acc + ui * self.get(i, j, k))
        })
    }

    /// The opposite operation `x ∘ᵒᵖ y = y ∘ x`.
    pub fn flipped(&self) -> Self {
        let mut c = Self::zeros(self.right, self.left, self.out);
        for i in 0..self.left {
            for j in 0..self.right {
                c.set_on_basis(j, i, self.on_basis(i, j));
            }
        }
        c
    }

    pub fn scaled(&self, a: &Rational) -> Self {
        StructureConstants {
            entries: self.entries.iter().map(|e| a * e).collect(),
            ..*self
        }
    }

    pub fn negated(&self) -> Self {
        StructureConstants {
            entries: self.entries.iter().map(|e| -e).collect(),
            ..*self
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.left == self.right
            && (0..self.left).all(|i| (0..i).all(|j| self.on_basis(i, j) == self.on_basis(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.left == self.right
            && (0..self.left).all(|i| {
                (0..=i).all(|j| {
                    self.on_basis(i, j)
                        .iter()
                        .zip(self.on_basis(j, i))
                        .all(|(a, b)| (a + b).is_zero())
                })
            })
    }

    /// Nonzero entries in `(i, j, k)` lexicographic order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let (l, r, o) = self.shape();
        (0..l).flat_map(move |i| {
            (0..r).flat_map(move |j| {
                (0..o).filter_map(move |k| {
                    let v = self.get(i, j, k);
                    (!v.is_zero()).then_some((i, j, k, v))
                })
            })
        })
    }

    /// Relabels the basis: new basis vector `perm[i]` is old basis vector `i`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.left;
        if !self.is_square_of(n) || perm.len() != n {
            return Err(Error::input("basis permutation length does not match dimension"));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::input("not a permutation"));
            }
        }
        let mut c = Self::square(n);
        for (i, j, k, v) in self.nonzero_entries() {
            c.set(perm[i], perm[j], perm[k], v.clone());
        }
        Ok(c)
    }
}

/// `Σᵢⱼ uᵢ vⱼ c[i][j][·]`
pub fn bilinear_apply(c: &StructureConstants, u: &[Rational], v: &[Rational]) -> Result<Vector> {
    c.apply(u, v)
}

/// An element of `V ⊗ W`; `t[i][j]` is the coefficient of `eᵢ ⊗ fⱼ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2(LinearMap);

impl Tensor2 {
    pub fn zeros(left: usize, right: usize) -> Self {
        Tensor2(LinearMap::zeros(left, right))
    }

    pub fn from_fn(left: usize, right: usize, f: impl FnMut(usize, usize) -> Rational) -> Self {
        Tensor2(LinearMap::from_fn(left, right, f))
    }

    /// `eᵢ ⊗ fⱼ`
    pub fn elementary(left: usize, right: usize, i: usize, j: usize) -> Self {
        Self::from_fn(left, right, |a, b| {
            if (a, b) == (i, j) {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        })
    }

    pub fn legs(&self) -> (usize, usize) {
        (self.0.rows(), self.0.cols())
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.0.get(i, j)
    }

    /// `(f ⊗ g) t`
    pub fn map_legs(&self, f: &LinearMap, g: &LinearMap) -> Tensor2 {
        Tensor2(&(f * &self.0) * &g.transpose())
    }

    /// `(f ⊗ id) t`
    pub fn map_left(&self, f: &LinearMap) -> Tensor2 {
        Tensor2(f * &self.0)
    }

    /// `(id ⊗ g) t`
    pub fn map_right(&self, g: &LinearMap) -> Tensor2 {
        Tensor2(&self.0 * &g.transpose())
    }

    /// Row-major coordinates.
    pub fn coordinates(&self) -> Vector {
        self.0.entries().to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        Tensor2(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        Tensor2(&self.0 - &other.0)
    }
}

/// The switch `τ(v ⊗ w) = w ⊗ v`.
pub fn flip_tau(t: &Tensor2) -> Tensor2 {
    Tensor2(t.0.transpose())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_rational(self) -> Rational {
        match self {
            Sign::Plus => Rational::from_integer(1.into()),
            Sign::Minus => Rational::from_integer((-1).into()),
        }
    }
}

/// Dual linear map `θ*` defined by `⟨θ*(x)ξ, v⟩ = -⟨ξ, θ(x)v⟩`, so the matrix
/// of `θ*(x)` in the dual basis is `-θ(x)ᵀ`; the result is multiplied by `sign`
/// (`Sign::Minus` yields `-θ*`).
pub fn dualize_action(theta: &[LinearMap], sign: Sign) -> Result<Vec<LinearMap>> {
    let size = theta.first().map_or(0, LinearMap::rows);
    let factor = -sign.as_rational();
    theta
        .iter()
        .map(|m| {
            if !m.is_square() {
                return Err(Error::input("dual of a non-square action matrix"));
            }
            expect_dim("action family matrix size", size, m.rows())?;
            Ok(m.transpose().scale(&factor))
        })
        .collect()
}
