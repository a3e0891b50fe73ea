//! Algebras given by structure constants and their axiom checkers.

use crate::error::{Error, Result};
use crate::exact::{add, basis_vector, Rational, Vector};
use crate::linalg::LinearMap;
use crate::report::{CheckReport, Identity};
use crate::tensor::StructureConstants;
use crate::MAX_DIM;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Assoc,
    CommAssoc,
    AlmostPoisson,
    AwbLeft,
    AwbRight,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Assoc => "assoc",
            AlgebraKind::CommAssoc => "comm-assoc",
            AlgebraKind::AlmostPoisson => "almost-poisson",
            AlgebraKind::AwbLeft => "awb-left",
            AlgebraKind::AwbRight => "awb-right",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "assoc" => AlgebraKind::Assoc,
            "comm-assoc" => AlgebraKind::CommAssoc,
            "almost-poisson" => AlgebraKind::AlmostPoisson,
            "awb-left" => AlgebraKind::AwbLeft,
            "awb-right" => AlgebraKind::AwbRight,
            _ => return None,
        })
    }

    pub fn needs_bracket(self) -> bool {
        matches!(
            self,
            AlgebraKind::AlmostPoisson | AlgebraKind::AwbLeft | AlgebraKind::AwbRight
        )
    }
}

/// Which slot of the bracket is a derivation of the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AwbVariant {
    /// `{x, y·z} = {x,y}·z + y·{x,z}`
    Left,
    /// `[x·y, z] = x·[y,z] + [x,z]·y`
    Right,
}

/// A finite-dimensional algebra: a product and an optional bracket on `𝕂ⁿ`.
///
/// The kind records what the data is meant to be; symmetry of the product or
/// antisymmetry of the bracket is not enforced here, it is what the checkers
/// verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    kind: AlgebraKind,
    product: StructureConstants,
    bracket: Option<StructureConstants>,
}

pub(crate) fn check_dim_limit(n: usize) -> Result<()> {
    if n > MAX_DIM {
        Err(Error::DimensionLimit(n))
    } else {
        Ok(())
    }
}

impl AlgebraData {
    pub fn new(
        kind: AlgebraKind,
        product: StructureConstants,
        bracket: Option<StructureConstants>,
    ) -> Result<Self> {
        let n = product.shape().0;
        check_dim_limit(n)?;
        if !product.is_square_of(n) {
            return Err(Error::input("product constants must have shape (n, n, n)"));
        }
        if let Some(b) = &bracket {
            if !b.is_square_of(n) {
                return Err(Error::input(format!(
                    "bracket constants must have shape ({n}, {n}, {n})"
                )));
            }
        } else if kind.needs_bracket() {
            return Err(Error::input(format!("kind {} requires a bracket", kind.name())));
        }
        Ok(AlgebraData {
            kind,
            product,
            bracket,
        })
    }

    /// The algebra with all operations zero.
    pub fn zero(kind: AlgebraKind, n: usize) -> Result<Self> {
        let bracket = kind.needs_bracket().then(|| StructureConstants::square(n));
        Self::new(kind, StructureConstants::square(n), bracket)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.product.shape().0
    }

    pub fn product(&self) -> &StructureConstants {
        &self.product
    }

    pub fn bracket(&self) -> Option<&StructureConstants> {
        self.bracket.as_ref()
    }

    pub(crate) fn require_bracket(&self) -> Result<&StructureConstants> {
        self.bracket
            .as_ref()
            .ok_or_else(|| Error::input("algebra has no bracket"))
    }

    pub fn with_kind(&self, kind: AlgebraKind) -> Result<Self> {
        Self::new(kind, self.product.clone(), self.bracket.clone())
    }

    pub fn mul(&self, u: &[Rational], v: &[Rational]) -> Result<Vector> {
        self.product.apply(u, v)
    }

    pub fn bracket_of(&self, u: &[Rational], v: &[Rational]) -> Result<Vector> {
        self.require_bracket()?.apply(u, v)
    }

    /// `L(eᵢ)` for every basis vector.
    pub fn left_multiplications(&self) -> Vec<LinearMap> {
        (0..self.dim()).map(|i| self.product.left_multiplication(i)).collect()
    }

    /// `R(eᵢ)` for every basis vector.
    pub fn right_multiplications(&self) -> Vec<LinearMap> {
        (0..self.dim()).map(|i| self.product.right_multiplication(i)).collect()
    }

    /// `ad(eᵢ) = [eᵢ, -]` for every basis vector.
    pub fn adjoints(&self) -> Result<Vec<LinearMap>> {
        let b = self.require_bracket()?;
        Ok((0..self.dim()).map(|i| b.left_multiplication(i)).collect())
    }

    /// `[-, eᵢ]` for every basis vector.
    pub fn right_adjoints(&self) -> Result<Vec<LinearMap>> {
        let b = self.require_bracket()?;
        Ok((0..self.dim()).map(|i| b.right_multiplication(i)).collect())
    }

    /// Same product, bracket `{x, y}ᵒᵖ = {y, x}`.
    pub fn opposite_bracket(&self) -> Result<Self> {
        let flipped = self.require_bracket()?.flipped();
        let kind = match self.kind {
            AlgebraKind::AwbLeft => AlgebraKind::AwbRight,
            AlgebraKind::AwbRight => AlgebraKind::AwbLeft,
            k => k,
        };
        Self::new(kind, self.product.clone(), Some(flipped))
    }

    /// Both operations multiplied by `a`.
    pub fn scaled(&self, a: &Rational) -> Self {
        AlgebraData {
            kind: self.kind,
            product: self.product.scaled(a),
            bracket: self.bracket.as_ref().map(|b| b.scaled(a)),
        }
    }

    /// Relabels the basis: new basis vector `perm[i]` is old basis vector `i`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        Ok(AlgebraData {
            kind: self.kind,
            product: self.product.permuted(perm)?,
            bracket: self.bracket.as_ref().map(|b| b.permuted(perm)).transpose()?,
        })
    }

    /// The operations restricted to the coordinate block `range`, assuming it
    /// spans a subalgebra.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Result<Self> {
        let n = self.dim();
        if range.end > n {
            return Err(Error::input("restriction range out of bounds"));
        }
        let block = |c: &StructureConstants| {
            let m = range.len();
            let mut out = StructureConstants::square(m);
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        out.set(
                            i,
                            j,
                            k,
                            c.get(range.start + i, range.start + j, range.start + k).clone(),
                        );
                    }
                }
            }
            out
        };
        Self::new(self.kind, block(&self.product), self.bracket.as_ref().map(block))
    }
}

pub(crate) fn basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| basis_vector(n, i)).collect()
}

fn op(c: &StructureConstants, u: &[Rational], v: &[Rational]) -> Vector {
    c.apply_unchecked(u, v)
}

pub fn check_associativity(product: &StructureConstants) -> CheckReport {
    let n = product.shape().0;
    let e = basis(n);
    let mut report = CheckReport::new();
    for i in 0..n {
        for j in 0..n {
            let ij = product.on_basis(i, j);
            for k in 0..n {
                let lhs = op(product, ij, &e[k]);
                let rhs = op(product, &e[i], product.on_basis(j, k));
                report.expect_eq(Identity::Associativity, &[i, j, k], lhs, rhs);
            }
        }
    }
    report.finish()
}

pub(crate) fn check_commutativity(product: &StructureConstants) -> CheckReport {
    let n = product.shape().0;
    let mut report = CheckReport::new();
    for i in 0..n {
        for j in i + 1..n {
            report.expect_eq(
                Identity::Commutativity,
                &[i, j],
                product.on_basis(i, j).to_vec(),
                product.on_basis(j, i).to_vec(),
            );
        }
    }
    report
}

pub(crate) fn check_antisymmetry(bracket: &StructureConstants) -> CheckReport {
    let n = bracket.shape().0;
    let mut report = CheckReport::new();
    for i in 0..n {
        for j in i..n {
            let rhs: Vector = bracket.on_basis(j, i).iter().map(|x| -x).collect();
            report.expect_eq(Identity::Antisymmetry, &[i, j], bracket.on_basis(i, j).to_vec(), rhs);
        }
    }
    report
}

/// `{x, y·z} = {x,y}·z + y·{x,z}` on all basis triples.
pub(crate) fn check_left_derivation(
    product: &StructureConstants,
    bracket: &StructureConstants,
    identity: Identity,
) -> CheckReport {
    let n = product.shape().0;
    let e = basis(n);
    let mut report = CheckReport::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = op(bracket, &e[i], product.on_basis(j, k));
                let rhs = add(
                    &op(product, bracket.on_basis(i, j), &e[k]),
                    &op(product, &e[j], bracket.on_basis(i, k)),
                );
                report.expect_eq(identity, &[i, j, k], lhs, rhs);
            }
        }
    }
    report
}

/// `[x·y, z] = x·[y,z] + [x,z]·y` on all basis triples.
pub(crate) fn check_right_derivation(
    product: &StructureConstants,
    bracket: &StructureConstants,
) -> CheckReport {
    let n = product.shape().0;
    let e = basis(n);
    let mut report = CheckReport::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = op(bracket, product.on_basis(i, j), &e[k]);
                let rhs = add(
                    &op(product, &e[i], bracket.on_basis(j, k)),
                    &op(product, bracket.on_basis(i, k), &e[j]),
                );
                report.expect_eq(Identity::RightBiderivation, &[i, j, k], lhs, rhs);
            }
        }
    }
    report
}

/// Commutativity and associativity of the product.
pub fn check_comm_assoc(a: &AlgebraData) -> CheckReport {
    let mut report = check_commutativity(a.product());
    report.merge(check_associativity(a.product()));
    report.finish()
}

/// Commutative associative product, skew bracket and the Leibniz rule
/// `[x, y·z] = [x,y]·z + y·[x,z]`.
pub fn check_almost_poisson(a: &AlgebraData) -> Result<CheckReport> {
    let bracket = a.require_bracket()?;
    let mut report = check_comm_assoc(a);
    report.merge(check_antisymmetry(bracket));
    report.merge(check_left_derivation(a.product(), bracket, Identity::Leibniz));
    Ok(report.finish())
}

/// Associative product whose bracket is a biderivation in the slot given by
/// `variant`.
pub fn check_awb(a: &AlgebraData, variant: AwbVariant) -> Result<CheckReport> {
    let bracket = a.require_bracket()?;
    let mut report = check_associativity(a.product());
    report.merge(match variant {
        AwbVariant::Left => check_left_derivation(a.product(), bracket, Identity::LeftBiderivation),
        AwbVariant::Right => check_right_derivation(a.product(), bracket),
    });
    Ok(report.finish())
}

/// For a left AWB, checks that the opposite bracket makes a right AWB.
pub fn check_opposite_bracket(a: &AlgebraData) -> Result<CheckReport> {
    let left = check_awb(a, AwbVariant::Left)?;
    if !left.passed() {
        return Err(Error::Precondition {
            what: "left AWB",
            report: left,
        });
    }
    check_awb(&a.opposite_bracket()?, AwbVariant::Right)
}

/// Runs the checker matching the algebra's kind.
pub fn check_algebra(a: &AlgebraData) -> Result<CheckReport> {
    match a.kind() {
        AlgebraKind::Assoc => Ok(check_associativity(a.product())),
        AlgebraKind::CommAssoc => Ok(check_comm_assoc(a)),
        AlgebraKind::AlmostPoisson => check_almost_poisson(a),
        AlgebraKind::AwbLeft => check_awb(a, AwbVariant::Left),
        AlgebraKind::AwbRight => check_awb(a, AwbVariant::Right),
    }
}
