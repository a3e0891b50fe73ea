//! Matched pairs of commutative associative and almost Poisson algebras and
//! the bowtie algebra on `A₁ ⊕ A₂` (coordinates of `A₁` first).

use crate::algebra::{
    basis, check_almost_poisson, check_comm_assoc, check_dim_limit, AlgebraData, AlgebraKind,
};
use crate::error::{Error, Result};
use crate::exact::{add, sub, Rational};
use crate::linalg::LinearMap;
use crate::report::{CheckReport, Identity, Scope};
use crate::representation::{
    action_at, check_ap_compatibility, check_multiplicative, extend_constants, validate_family,
};
use crate::tensor::{Sign, StructureConstants};

/// `μ₁, ϱ₁` are indexed by the basis of `A₁` and act on `A₂`; `μ₂, ϱ₂` are
/// indexed by the basis of `A₂` and act on `A₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    a1: AlgebraData,
    a2: AlgebraData,
    mu1: Vec<LinearMap>,
    rho1: Option<Vec<LinearMap>>,
    mu2: Vec<LinearMap>,
    rho2: Option<Vec<LinearMap>>,
}

impl MatchedPairData {
    pub fn new(
        a1: AlgebraData,
        a2: AlgebraData,
        mu1: Vec<LinearMap>,
        rho1: Option<Vec<LinearMap>>,
        mu2: Vec<LinearMap>,
        rho2: Option<Vec<LinearMap>>,
    ) -> Result<Self> {
        let (n1, n2) = (a1.dim(), a2.dim());
        check_dim_limit(n1 + n2)?;
        validate_family(&mu1, n1, n2)?;
        validate_family(&mu2, n2, n1)?;
        if rho1.is_some() != rho2.is_some() {
            return Err(Error::input("either both or neither of rho1, rho2 must be given"));
        }
        if let Some(r) = &rho1 {
            validate_family(r, n1, n2)?;
        }
        if let Some(r) = &rho2 {
            validate_family(r, n2, n1)?;
        }
        Ok(MatchedPairData {
            a1,
            a2,
            mu1,
            rho1,
            mu2,
            rho2,
        })
    }

    /// Both algebras act trivially on each other.
    pub fn trivial(a1: AlgebraData, a2: AlgebraData, with_rho: bool) -> Result<Self> {
        let (n1, n2) = (a1.dim(), a2.dim());
        let on2 = || vec![LinearMap::zeros(n2, n2); n1];
        let on1 = || vec![LinearMap::zeros(n1, n1); n2];
        Self::new(a1, a2, on2(), with_rho.then(on2), on1(), with_rho.then(on1))
    }

    pub fn a1(&self) -> &AlgebraData {
        &self.a1
    }

    pub fn a2(&self) -> &AlgebraData {
        &self.a2
    }

    pub fn mu1(&self) -> &[LinearMap] {
        &self.mu1
    }

    pub fn rho1(&self) -> Option<&[LinearMap]> {
        self.rho1.as_deref()
    }

    pub fn mu2(&self) -> &[LinearMap] {
        &self.mu2
    }

    pub fn rho2(&self) -> Option<&[LinearMap]> {
        self.rho2.as_deref()
    }

    /// The same data with the roles of `A₁` and `A₂` exchanged.
    pub fn swapped(&self) -> Self {
        MatchedPairData {
            a1: self.a2.clone(),
            a2: self.a1.clone(),
            mu1: self.mu2.clone(),
            rho1: self.rho2.clone(),
            mu2: self.mu1.clone(),
            rho2: self.rho1.clone(),
        }
    }

    pub fn with_actions(&self, mu1: Vec<LinearMap>, rho1: Option<Vec<LinearMap>>, mu2: Vec<LinearMap>, rho2: Option<Vec<LinearMap>>) -> Result<Self> {
        Self::new(self.a1.clone(), self.a2.clone(), mu1, rho1, mu2, rho2)
    }

    fn rhos(&self) -> Result<(&[LinearMap], &[LinearMap])> {
        match (&self.rho1, &self.rho2) {
            (Some(r1), Some(r2)) => Ok((r1, r2)),
            _ => Err(Error::input("matched pair of almost Poisson algebras needs rho1 and rho2")),
        }
    }
}

/// `θ(x)v` for `x` in coordinates and `v` in coordinates.
fn act(family: &[LinearMap], x: &[Rational], v: &[Rational], size: usize) -> Vec<Rational> {
    action_at(family, x, size).apply_unchecked(v)
}

/// The compatibility `μ₁(x₁)(x₂·y₂) = (μ₁(x₁)x₂)·y₂ + μ₁(μ₂(x₂)x₁)y₂` with
/// `(first, second)` in the roles of `(A₁, A₂)`.
fn product_compatibility(
    p2: &StructureConstants,
    mu1: &[LinearMap],
    mu2: &[LinearMap],
    n1: usize,
    n2: usize,
    identity: Identity,
    report: &mut CheckReport,
) {
    let e1 = basis(n1);
    let e2 = basis(n2);
    for i in 0..n1 {
        for (a, mu2_a) in mu2.iter().enumerate() {
            let mu2_a_x1 = mu2_a.apply_unchecked(&e1[i]);
            for (b, e2_b) in e2.iter().enumerate() {
                let lhs = mu1[i].apply_unchecked(p2.on_basis(a, b));
                let rhs = add(
                    &p2.apply_unchecked(&mu1[i].column(a), e2_b),
                    &act(mu1, &mu2_a_x1, e2_b, n2),
                );
                report.expect_eq(identity, &[i, a, b], lhs, rhs);
            }
        }
    }
}

/// `ϱ₂(x₂)(x₁·y₁) = (ϱ₂(x₂)x₁)·y₁ + x₁·(ϱ₂(x₂)y₁) − μ₂(ϱ₁(x₁)x₂)y₁ − μ₂(ϱ₁(y₁)x₂)x₁`
#[allow(clippy::too_many_arguments)]
fn rho_compatibility(
    p1: &StructureConstants,
    rho1: &[LinearMap],
    mu2: &[LinearMap],
    rho2: &[LinearMap],
    n1: usize,
    n2: usize,
    identity: Identity,
    report: &mut CheckReport,
) {
    let e1 = basis(n1);
    let e2 = basis(n2);
    for a in 0..n2 {
        for i in 0..n1 {
            let r_x1 = rho2[a].column(i);
            let rho1_x1_x2 = rho1[i].apply_unchecked(&e2[a]);
            for j in 0..n1 {
                let lhs = rho2[a].apply_unchecked(p1.on_basis(i, j));
                let rho1_y1_x2 = rho1[j].apply_unchecked(&e2[a]);
                let mut rhs = add(
                    &p1.apply_unchecked(&r_x1, &e1[j]),
                    &p1.apply_unchecked(&e1[i], &rho2[a].column(j)),
                );
                rhs = sub(&rhs, &act(mu2, &rho1_x1_x2, &e1[j], n1));
                rhs = sub(&rhs, &act(mu2, &rho1_y1_x2, &e1[i], n1));
                report.expect_eq(identity, &[a, i, j], lhs, rhs);
            }
        }
    }
}

/// `[x₁, μ₂(x₂)y₁]₁ − ϱ₂(μ₁(y₁)x₂)x₁ = μ₂(ϱ₁(x₁)x₂)y₁ − (ϱ₂(x₂)x₁)·y₁ + μ₂(x₂)[x₁,y₁]₁`
#[allow(clippy::too_many_arguments)]
fn bracket_compatibility(
    a1: &AlgebraData,
    b1: &StructureConstants,
    mu1: &[LinearMap],
    rho1: &[LinearMap],
    mu2: &[LinearMap],
    rho2: &[LinearMap],
    n2: usize,
    identity: Identity,
    report: &mut CheckReport,
) {
    let n1 = a1.dim();
    let p1 = a1.product();
    let e1 = basis(n1);
    let e2 = basis(n2);
    for i in 0..n1 {
        let rho1_x1 = &rho1[i];
        for a in 0..n2 {
            let rho1_x1_x2 = rho1_x1.apply_unchecked(&e2[a]);
            for j in 0..n1 {
                let mu1_y1_x2 = mu1[j].apply_unchecked(&e2[a]);
                let lhs = sub(
                    &b1.apply_unchecked(&e1[i], &mu2[a].column(j)),
                    &act(rho2, &mu1_y1_x2, &e1[i], n1),
                );
                let rhs = add(
                    &sub(
                        &act(mu2, &rho1_x1_x2, &e1[j], n1),
                        &p1.apply_unchecked(&rho2[a].column(i), &e1[j]),
                    ),
                    &mu2[a].apply_unchecked(b1.on_basis(i, j)),
                );
                report.expect_eq(identity, &[i, a, j], lhs, rhs);
            }
        }
    }
}

fn check_caa_parts(mp: &MatchedPairData, report: &mut CheckReport) {
    let (n1, n2) = (mp.a1.dim(), mp.a2.dim());
    report.absorb(check_multiplicative(mp.a1.product(), &mp.mu1, n2), Scope::First);
    report.absorb(check_multiplicative(mp.a2.product(), &mp.mu2, n1), Scope::Second);
    product_compatibility(
        mp.a2.product(),
        &mp.mu1,
        &mp.mu2,
        n1,
        n2,
        Identity::MatchedProductFirst,
        report,
    );
    product_compatibility(
        mp.a1.product(),
        &mp.mu2,
        &mp.mu1,
        n2,
        n1,
        Identity::MatchedProductSecond,
        report,
    );
}

/// Both algebras commutative associative, `μ₁, μ₂` representations and the
/// two product compatibilities.
pub fn check_matched_pair_caa(mp: &MatchedPairData) -> CheckReport {
    let mut report = CheckReport::new();
    report.absorb(check_comm_assoc(&mp.a1), Scope::First);
    report.absorb(check_comm_assoc(&mp.a2), Scope::Second);
    check_caa_parts(mp, &mut report);
    report.finish()
}

/// Both algebras almost Poisson, a matched pair of the underlying commutative
/// associative algebras, `(A₂, ϱ₁, μ₁)` and `(A₁, ϱ₂, μ₂)` representations,
/// and the four mixed compatibilities.
pub fn check_matched_pair_ap(mp: &MatchedPairData) -> Result<CheckReport> {
    let (rho1, rho2) = mp.rhos()?;
    let (n1, n2) = (mp.a1.dim(), mp.a2.dim());
    let b1 = mp.a1.require_bracket()?;
    let b2 = mp.a2.require_bracket()?;
    let mut report = CheckReport::new();
    report.absorb(check_almost_poisson(&mp.a1)?, Scope::First);
    report.absorb(check_almost_poisson(&mp.a2)?, Scope::Second);
    check_caa_parts(mp, &mut report);
    report.absorb(
        check_ap_compatibility(&mp.a1, b1, &mp.mu1, rho1, n2),
        Scope::First,
    );
    report.absorb(
        check_ap_compatibility(&mp.a2, b2, &mp.mu2, rho2, n1),
        Scope::Second,
    );
    rho_compatibility(mp.a1.product(), rho1, &mp.mu2, rho2, n1, n2, Identity::MatchedRhoOnFirst, &mut report);
    rho_compatibility(mp.a2.product(), rho2, &mp.mu1, rho1, n2, n1, Identity::MatchedRhoOnSecond, &mut report);
    bracket_compatibility(&mp.a1, b1, &mp.mu1, rho1, &mp.mu2, rho2, n2, Identity::MatchedBracketFirst, &mut report);
    bracket_compatibility(&mp.a2, b2, &mp.mu2, rho2, &mp.mu1, rho1, n1, Identity::MatchedBracketSecond, &mut report);
    Ok(report.finish())
}

/// Adds the `A₁` components of the mixed terms: `eᵢ ∘ f_b` gets
/// `s · θ(f_b)eᵢ` and `f_a ∘ eⱼ` gets `θ(f_a)eⱼ`.
fn add_first_block_terms(out: &mut StructureConstants, theta: &[LinearMap], n1: usize, s: Sign) {
    let s = s.as_rational();
    for (b, m) in theta.iter().enumerate() {
        for i in 0..n1 {
            for k in 0..n1 {
                let v = m.get(k, i);
                out.set(i, n1 + b, k, &s * v);
                out.set(n1 + b, i, k, v.clone());
            }
        }
    }
}

/// Product `(x₁+x₂)·(y₁+y₂) = x₁·y₁ + μ₂(x₂)y₁ + μ₂(y₂)x₁ + x₂·y₂ + μ₁(x₁)y₂ + μ₁(y₁)x₂`
/// and, when `ϱ` is present, bracket
/// `[x₁+x₂, y₁+y₂] = [x₁,y₁] + ϱ₂(x₂)y₁ − ϱ₂(y₂)x₁ + [x₂,y₂] + ϱ₁(x₁)y₂ − ϱ₁(y₁)x₂`.
pub fn bowtie(mp: &MatchedPairData) -> Result<AlgebraData> {
    let (n1, n2) = (mp.a1.dim(), mp.a2.dim());
    let mut product = extend_constants(
        mp.a1.product(),
        n2,
        Some(&mp.mu1),
        Some((&mp.mu1, Sign::Plus)),
        Some(mp.a2.product()),
    );
    add_first_block_terms(&mut product, &mp.mu2, n1, Sign::Plus);
    let Some(rho1) = &mp.rho1 else {
        return AlgebraData::new(AlgebraKind::CommAssoc, product, None);
    };
    let rho2 = mp.rho2.as_ref().expect("rho families come in pairs");
    let mut bracket = extend_constants(
        mp.a1.require_bracket()?,
        n2,
        Some(rho1),
        Some((rho1, Sign::Minus)),
        Some(mp.a2.require_bracket()?),
    );
    add_first_block_terms(&mut bracket, rho2, n1, Sign::Minus);
    AlgebraData::new(AlgebraKind::AlmostPoisson, product, Some(bracket))
}

/// The block swap `A₁ ⊕ A₂ → A₂ ⊕ A₁` as a basis permutation.
pub fn block_swap(n1: usize, n2: usize) -> Vec<usize> {
    (0..n1).map(|i| n2 + i).chain(0..n2).collect()
}
