//! Representations, module algebras, dual representations and the
//! semi-direct / hemisemi-direct products on `A ⊕ V`.
//!
//! Block layout of every product on `A ⊕ V`: coordinates `0..dim A` are the
//! `A` block, coordinates `dim A..dim A + dim V` the `V` block.

use crate::algebra::{
    basis, check_algebra, check_almost_poisson, check_comm_assoc, check_dim_limit, AlgebraData,
    AlgebraKind,
};
use crate::error::{expect_dim, Error, Result};
use crate::exact::{add, neg, Rational};
use crate::linalg::{combine, LinearMap};
use crate::report::{CheckReport, Identity, Scope};
use crate::tensor::{dualize_action, Sign, StructureConstants};

/// Action families, one matrix per basis vector of the acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Actions {
    /// A module over a (commutative) associative algebra.
    Assoc { mu: Vec<LinearMap> },
    /// A representation `(V, ϱ, μ)` of an almost Poisson algebra.
    AlmostPoisson {
        mu: Vec<LinearMap>,
        rho: Vec<LinearMap>,
    },
    /// A representation `(V, l, r, L, R)` of an AWB.
    Awb {
        l: Vec<LinearMap>,
        r: Vec<LinearMap>,
        bracket_left: Vec<LinearMap>,
        bracket_right: Vec<LinearMap>,
    },
}

impl Actions {
    pub fn profile(&self) -> &'static str {
        match self {
            Actions::Assoc { .. } => "{mu}",
            Actions::AlmostPoisson { .. } => "{mu,rho}",
            Actions::Awb { .. } => "{l,r,L,R}",
        }
    }

    fn families(&self) -> Vec<&[LinearMap]> {
        match self {
            Actions::Assoc { mu } => vec![mu],
            Actions::AlmostPoisson { mu, rho } => vec![mu, rho],
            Actions::Awb {
                l,
                r,
                bracket_left,
                bracket_right,
            } => vec![l, r, bracket_left, bracket_right],
        }
    }

    /// `μ` for the associative and almost Poisson profiles.
    pub fn mu(&self) -> Option<&[LinearMap]> {
        match self {
            Actions::Assoc { mu } | Actions::AlmostPoisson { mu, .. } => Some(mu),
            Actions::Awb { .. } => None,
        }
    }

    pub fn rho(&self) -> Option<&[LinearMap]> {
        match self {
            Actions::AlmostPoisson { rho, .. } => Some(rho),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationData {
    base: AlgebraData,
    carrier_dim: usize,
    actions: Actions,
}

pub(crate) fn validate_family(
    family: &[LinearMap],
    count: usize,
    size: usize,
) -> Result<()> {
    expect_dim("action family length", count, family.len())?;
    for m in family {
        expect_dim("action matrix rows", size, m.rows())?;
        expect_dim("action matrix columns", size, m.cols())?;
    }
    Ok(())
}

impl RepresentationData {
    pub fn new(base: AlgebraData, carrier_dim: usize, actions: Actions) -> Result<Self> {
        check_dim_limit(carrier_dim)?;
        check_dim_limit(base.dim() + carrier_dim)?;
        for family in actions.families() {
            validate_family(family, base.dim(), carrier_dim)?;
        }
        Ok(RepresentationData {
            base,
            carrier_dim,
            actions,
        })
    }

    /// `(A, L)`: the algebra acting on itself by left multiplication.
    pub fn regular(base: &AlgebraData) -> Self {
        RepresentationData {
            base: base.clone(),
            carrier_dim: base.dim(),
            actions: Actions::Assoc {
                mu: base.left_multiplications(),
            },
        }
    }

    /// `(A, ad, L)` for an algebra with bracket.
    pub fn adjoint(base: &AlgebraData) -> Result<Self> {
        Ok(RepresentationData {
            base: base.clone(),
            carrier_dim: base.dim(),
            actions: Actions::AlmostPoisson {
                mu: base.left_multiplications(),
                rho: base.adjoints()?,
            },
        })
    }

    /// `(A, l, r, L, R)` with `l, r` the left/right multiplications and
    /// `L(x) = {x, -}`, `R(y) = {-, y}`.
    pub fn awb_regular(base: &AlgebraData) -> Result<Self> {
        Ok(RepresentationData {
            base: base.clone(),
            carrier_dim: base.dim(),
            actions: Actions::Awb {
                l: base.left_multiplications(),
                r: base.right_multiplications(),
                bracket_left: base.adjoints()?,
                bracket_right: base.right_adjoints()?,
            },
        })
    }

    /// All actions zero, with the same profile as `profile`.
    pub fn zero_like(base: &AlgebraData, carrier_dim: usize, profile: &Actions) -> Result<Self> {
        let zeros = || vec![LinearMap::zeros(carrier_dim, carrier_dim); base.dim()];
        let actions = match profile {
            Actions::Assoc { .. } => Actions::Assoc { mu: zeros() },
            Actions::AlmostPoisson { .. } => Actions::AlmostPoisson {
                mu: zeros(),
                rho: zeros(),
            },
            Actions::Awb { .. } => Actions::Awb {
                l: zeros(),
                r: zeros(),
                bracket_left: zeros(),
                bracket_right: zeros(),
            },
        };
        Self::new(base.clone(), carrier_dim, actions)
    }

    pub fn base(&self) -> &AlgebraData {
        &self.base
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn actions(&self) -> &Actions {
        &self.actions
    }

    fn profile_error(&self, expected: &'static str) -> Error {
        Error::Profile {
            expected,
            found: self.actions.profile(),
        }
    }
}

/// `θ(x)` for an arbitrary `x` given in coordinates.
pub(crate) fn action_at(family: &[LinearMap], x: &[Rational], size: usize) -> LinearMap {
    combine(family, x, size, size)
}

fn matrix_eq(report: &mut CheckReport, identity: Identity, indices: &[usize], lhs: LinearMap, rhs: LinearMap) {
    report.expect_eq(identity, indices, lhs.entries().to_vec(), rhs.entries().to_vec());
}

/// `μ(x·y) = μ(x)μ(y)`
pub(crate) fn check_multiplicative(product: &StructureConstants, mu: &[LinearMap], size: usize) -> CheckReport {
    let n = product.shape().0;
    let mut report = CheckReport::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = action_at(mu, product.on_basis(i, j), size);
            matrix_eq(&mut report, Identity::Multiplicative, &[i, j], lhs, &mu[i] * &mu[j]);
        }
    }
    report
}

/// `ϱ(x·y) = μ(y)ϱ(x) + μ(x)ϱ(y)` and `μ([x,y]) = ϱ(x)μ(y) − μ(y)ϱ(x)`.
pub(crate) fn check_ap_compatibility(
    base: &AlgebraData,
    bracket: &StructureConstants,
    mu: &[LinearMap],
    rho: &[LinearMap],
    size: usize,
) -> CheckReport {
    let n = base.dim();
    let product = base.product();
    let mut report = CheckReport::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = action_at(rho, product.on_basis(i, j), size);
            let rhs = &(&mu[j] * &rho[i]) + &(&mu[i] * &rho[j]);
            matrix_eq(&mut report, Identity::RhoOfProduct, &[i, j], lhs, rhs);

            let lhs = action_at(mu, bracket.on_basis(i, j), size);
            let rhs = &(&rho[i] * &mu[j]) - &(&mu[j] * &rho[i]);
            matrix_eq(&mut report, Identity::MuOfBracket, &[i, j], lhs, rhs);
        }
    }
    report
}

fn check_bimodule(product: &StructureConstants, l: &[LinearMap], r: &[LinearMap], size: usize) -> CheckReport {
    let n = product.shape().0;
    let mut report = CheckReport::new();
    for i in 0..n {
        for j in 0..n {
            let xy = product.on_basis(i, j);
            matrix_eq(&mut report, Identity::BimoduleLeft, &[i, j], action_at(l, xy, size), &l[i] * &l[j]);
            matrix_eq(&mut report, Identity::BimoduleRight, &[i, j], action_at(r, xy, size), &r[j] * &r[i]);
            matrix_eq(&mut report, Identity::BimoduleCommute, &[i, j], &l[i] * &r[j], &r[j] * &l[i]);
        }
    }
    report
}

/// Module axioms over an associative algebra: `μ(x·y) = μ(x)μ(y)` for the
/// `{mu}` profile, the bimodule axioms for the `{l,r,L,R}` profile.
pub fn check_assoc_rep(rep: &RepresentationData) -> Result<CheckReport> {
    let product = rep.base.product();
    let size = rep.carrier_dim;
    let report = match &rep.actions {
        Actions::Assoc { mu } => check_multiplicative(product, mu, size),
        Actions::Awb { l, r, .. } => check_bimodule(product, l, r, size),
        Actions::AlmostPoisson { .. } => return Err(rep.profile_error("{mu} or {l,r,L,R}")),
    };
    Ok(report.finish())
}

/// Representation axioms of an almost Poisson algebra. Validity of the base
/// algebra itself is not part of this check.
pub fn check_ap_rep(rep: &RepresentationData) -> Result<CheckReport> {
    let Actions::AlmostPoisson { mu, rho } = &rep.actions else {
        return Err(rep.profile_error("{mu,rho}"));
    };
    let bracket = rep.base.require_bracket()?;
    let size = rep.carrier_dim;
    let mut report = check_multiplicative(rep.base.product(), mu, size);
    report.merge(check_ap_compatibility(&rep.base, bracket, mu, rho, size));
    Ok(report.finish())
}

/// Representation axioms of a left AWB: bimodule plus
/// `L(x)l(y) = l({x,y}) + l(y)L(x)`, `L(x)r(y) = r(y)L(x) + r({x,y})`,
/// `R(x·y) = r(y)R(x) + l(x)R(y)`.
pub fn check_awb_rep(rep: &RepresentationData) -> Result<CheckReport> {
    let Actions::Awb {
        l,
        r,
        bracket_left: bl,
        bracket_right: br,
    } = &rep.actions
    else {
        return Err(rep.profile_error("{l,r,L,R}"));
    };
    let bracket = rep.base.require_bracket()?;
    let product = rep.base.product();
    let size = rep.carrier_dim;
    let n = rep.base.dim();
    let mut report = check_bimodule(product, l, r, size);
    for i in 0..n {
        for j in 0..n {
            let xy_bracket = bracket.on_basis(i, j);
            let rhs = &action_at(l, xy_bracket, size) + &(&l[j] * &bl[i]);
            matrix_eq(&mut report, Identity::BracketActionLeft, &[i, j], &bl[i] * &l[j], rhs);

            let rhs = &(&r[j] * &bl[i]) + &action_at(r, xy_bracket, size);
            matrix_eq(&mut report, Identity::BracketActionRight, &[i, j], &bl[i] * &r[j], rhs);

            let lhs = action_at(br, product.on_basis(i, j), size);
            let rhs = &(&r[j] * &br[i]) + &(&l[i] * &br[j]);
            matrix_eq(&mut report, Identity::RightBracketOfProduct, &[i, j], lhs, rhs);
        }
    }
    Ok(report.finish())
}

/// Runs the representation checker matching the profile.
pub fn check_rep(rep: &RepresentationData) -> Result<CheckReport> {
    match rep.actions {
        Actions::Assoc { .. } => check_assoc_rep(rep),
        Actions::AlmostPoisson { .. } => check_ap_rep(rep),
        Actions::Awb { .. } => check_awb_rep(rep),
    }
}

/// `(V*, −μ*)` for the `{mu}` profile, `(V*, ϱ*, −μ*)` for `{mu,rho}`.
pub fn dual_rep(rep: &RepresentationData) -> Result<RepresentationData> {
    let actions = match &rep.actions {
        Actions::Assoc { mu } => Actions::Assoc {
            mu: dualize_action(mu, Sign::Minus)?,
        },
        Actions::AlmostPoisson { mu, rho } => Actions::AlmostPoisson {
            mu: dualize_action(mu, Sign::Minus)?,
            rho: dualize_action(rho, Sign::Plus)?,
        },
        Actions::Awb { .. } => return Err(rep.profile_error("{mu} or {mu,rho}")),
    };
    RepresentationData::new(rep.base.clone(), rep.carrier_dim, actions)
}

/// Constants on `A ⊕ V` extending `base`: `eᵢ ∘ f_b` is `left[i] f_b` and
/// `f_a ∘ eⱼ` is `sign · right[j] f_a`; `V ∘ V` is `carrier` (zero if absent).
pub(crate) fn extend_constants(
    base: &StructureConstants,
    size: usize,
    left: Option<&[LinearMap]>,
    right: Option<(&[LinearMap], Sign)>,
    carrier: Option<&StructureConstants>,
) -> StructureConstants {
    let n = base.shape().0;
    let total = n + size;
    let mut out = StructureConstants::square(total);
    for (i, j, k, v) in base.nonzero_entries() {
        out.set(i, j, k, v.clone());
    }
    if let Some(left) = left {
        for (i, m) in left.iter().enumerate() {
            for b in 0..size {
                for a in 0..size {
                    out.set(i, n + b, n + a, m.get(a, b).clone());
                }
            }
        }
    }
    if let Some((right, sign)) = right {
        let s = sign.as_rational();
        for (j, m) in right.iter().enumerate() {
            for a in 0..size {
                for c in 0..size {
                    out.set(n + a, j, n + c, &s * m.get(c, a));
                }
            }
        }
    }
    if let Some(carrier) = carrier {
        for (a, b, c, v) in carrier.nonzero_entries() {
            out.set(n + a, n + b, n + c, v.clone());
        }
    }
    out
}

/// `(x+u)·(y+v) = x·y + μ(x)v + μ(y)u` and
/// `[x+u, y+v] = [x,y] + ϱ(x)v − ϱ(y)u` on `A ⊕ V`.
pub fn semidirect_ap(rep: &RepresentationData) -> Result<AlgebraData> {
    let Actions::AlmostPoisson { mu, rho } = &rep.actions else {
        return Err(rep.profile_error("{mu,rho}"));
    };
    let size = rep.carrier_dim;
    let bracket = rep.base.require_bracket()?;
    let product = extend_constants(rep.base.product(), size, Some(mu), Some((mu, Sign::Plus)), None);
    let bracket = extend_constants(bracket, size, Some(rho), Some((rho, Sign::Minus)), None);
    AlgebraData::new(AlgebraKind::AlmostPoisson, product, Some(bracket))
}

/// `(x+u)·(y+v) = x·y + μ(x)v + μ(y)u` on `A ⊕ V`.
pub fn semidirect_assoc(rep: &RepresentationData) -> Result<AlgebraData> {
    let mu = rep.actions.mu().ok_or_else(|| rep.profile_error("{mu}"))?;
    let product = extend_constants(rep.base.product(), rep.carrier_dim, Some(mu), Some((mu, Sign::Plus)), None);
    AlgebraData::new(AlgebraKind::CommAssoc, product, None)
}

/// `(x+u)·(y+v) = x·y + l(x)v + r(y)u` and
/// `{x+u, y+v} = {x,y} + L(x)v + R(y)u` on `A ⊕ V`.
pub fn awb_semidirect(rep: &RepresentationData) -> Result<AlgebraData> {
    let Actions::Awb {
        l,
        r,
        bracket_left,
        bracket_right,
    } = &rep.actions
    else {
        return Err(rep.profile_error("{l,r,L,R}"));
    };
    let size = rep.carrier_dim;
    let bracket = rep.base.require_bracket()?;
    let product = extend_constants(rep.base.product(), size, Some(l), Some((r, Sign::Plus)), None);
    let bracket = extend_constants(
        bracket,
        size,
        Some(bracket_left),
        Some((bracket_right, Sign::Plus)),
        None,
    );
    AlgebraData::new(AlgebraKind::AwbLeft, product, Some(bracket))
}

/// Hemisemi-direct product: `(x+u)·(y+v) = x·y + μ(x)v`, and when `ϱ` is
/// present `{x+u, y+v} = [x,y] + ϱ(x)v`, giving a left AWB.
pub fn hemisemi_direct(rep: &RepresentationData) -> Result<AlgebraData> {
    let size = rep.carrier_dim;
    match &rep.actions {
        Actions::Assoc { mu } => {
            let product = extend_constants(rep.base.product(), size, Some(mu), None, None);
            AlgebraData::new(AlgebraKind::Assoc, product, None)
        }
        Actions::AlmostPoisson { mu, rho } => {
            let bracket = rep.base.require_bracket()?;
            let product = extend_constants(rep.base.product(), size, Some(mu), None, None);
            let bracket = extend_constants(bracket, size, Some(rho), None, None);
            AlgebraData::new(AlgebraKind::AwbLeft, product, Some(bracket))
        }
        Actions::Awb { .. } => Err(rep.profile_error("{mu} or {mu,rho}")),
    }
}

/// A representation together with compatible operations on the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebraData {
    rep: RepresentationData,
    carrier_product: StructureConstants,
    carrier_bracket: Option<StructureConstants>,
}

impl ModuleAlgebraData {
    pub fn new(
        rep: RepresentationData,
        carrier_product: StructureConstants,
        carrier_bracket: Option<StructureConstants>,
    ) -> Result<Self> {
        let m = rep.carrier_dim;
        if !carrier_product.is_square_of(m) {
            return Err(Error::input("carrier product shape does not match the carrier dimension"));
        }
        if let Some(b) = &carrier_bracket {
            if !b.is_square_of(m) {
                return Err(Error::input("carrier bracket shape does not match the carrier dimension"));
            }
        }
        Ok(ModuleAlgebraData {
            rep,
            carrier_product,
            carrier_bracket,
        })
    }

    /// `(A, ·, [,], ad, L)`: an algebra as a module algebra over itself.
    pub fn adjoint(base: &AlgebraData) -> Result<Self> {
        let rep = RepresentationData::adjoint(base)?;
        Self::new(rep, base.product().clone(), base.bracket().cloned())
    }

    /// `(A, ·, L)` for an algebra without bracket.
    pub fn regular(base: &AlgebraData) -> Result<Self> {
        Self::new(RepresentationData::regular(base), base.product().clone(), None)
    }

    pub fn rep(&self) -> &RepresentationData {
        &self.rep
    }

    pub fn carrier_product(&self) -> &StructureConstants {
        &self.carrier_product
    }

    pub fn carrier_bracket(&self) -> Option<&StructureConstants> {
        self.carrier_bracket.as_ref()
    }

    /// The carrier operations as an algebra.
    pub fn carrier_algebra(&self) -> Result<AlgebraData> {
        match &self.carrier_bracket {
            Some(b) => AlgebraData::new(
                AlgebraKind::AlmostPoisson,
                self.carrier_product.clone(),
                Some(b.clone()),
            ),
            None => AlgebraData::new(AlgebraKind::CommAssoc, self.carrier_product.clone(), None),
        }
    }
}

/// `A` and `V` commutative associative, `μ` a representation and
/// `μ(x)(a·b) = (μ(x)a)·b`.
pub fn check_module_comm_assoc(m: &ModuleAlgebraData) -> Result<CheckReport> {
    let mu = m.rep.actions.mu().ok_or_else(|| m.rep.profile_error("{mu}"))?;
    let size = m.rep.carrier_dim;
    let cp = &m.carrier_product;
    let base = &m.rep.base;
    let mut report = CheckReport::new();
    report.absorb(check_comm_assoc(&base.with_kind(AlgebraKind::CommAssoc)?), Scope::Base);
    report.absorb(
        check_comm_assoc(&AlgebraData::new(AlgebraKind::CommAssoc, cp.clone(), None)?),
        Scope::Carrier,
    );
    report.merge(check_multiplicative(base.product(), mu, size));
    let e = basis(size);
    for (i, mi) in mu.iter().enumerate() {
        for a in 0..size {
            for (b, eb) in e.iter().enumerate() {
                let lhs = mi.apply_unchecked(cp.on_basis(a, b));
                let rhs = cp.apply_unchecked(&mi.column(a), eb);
                report.expect_eq(Identity::ModuleProduct, &[i, a, b], lhs, rhs);
            }
        }
    }
    Ok(report.finish())
}

/// Module commutative associative algebra, representation of the almost
/// Poisson algebra `A`, `V` almost Poisson, and
/// `ϱ(x)(a·b) = (ϱ(x)a)·b + a·(ϱ(x)b)`, `[a, μ(x)b] = −(ϱ(x)a)·b + μ(x)[a,b]`.
pub fn check_module_ap(m: &ModuleAlgebraData) -> Result<CheckReport> {
    let Actions::AlmostPoisson { mu, rho } = &m.rep.actions else {
        return Err(m.rep.profile_error("{mu,rho}"));
    };
    let cb = m
        .carrier_bracket
        .as_ref()
        .ok_or_else(|| Error::input("module almost Poisson algebra needs a carrier bracket"))?;
    let base = &m.rep.base;
    let size = m.rep.carrier_dim;
    let cp = &m.carrier_product;

    let mut report = CheckReport::new();
    let base_ap = base.with_kind(AlgebraKind::AlmostPoisson)?;
    report.absorb(check_almost_poisson(&base_ap)?, Scope::Base);
    report.absorb(check_algebra(&m.carrier_algebra()?)?, Scope::Carrier);
    report.merge(check_multiplicative(base.product(), mu, size));
    report.merge(check_ap_compatibility(base, base.require_bracket()?, mu, rho, size));

    let e = basis(size);
    for i in 0..base.dim() {
        for a in 0..size {
            let mu_a = mu[i].column(a);
            let rho_a = rho[i].column(a);
            for b in 0..size {
                let lhs = mu[i].apply_unchecked(cp.on_basis(a, b));
                let rhs = cp.apply_unchecked(&mu_a, &e[b]);
                report.expect_eq(Identity::ModuleProduct, &[i, a, b], lhs, rhs);

                let lhs = rho[i].apply_unchecked(cp.on_basis(a, b));
                let rhs = add(
                    &cp.apply_unchecked(&rho_a, &e[b]),
                    &cp.apply_unchecked(&e[a], &rho[i].column(b)),
                );
                report.expect_eq(Identity::ModuleRhoDerivation, &[i, a, b], lhs, rhs);

                let lhs = cb.apply_unchecked(&e[a], &mu[i].column(b));
                let rhs = add(
                    &neg(&cp.apply_unchecked(&rho_a, &e[b])),
                    &mu[i].apply_unchecked(cb.on_basis(a, b)),
                );
                report.expect_eq(Identity::ModuleBracketMu, &[i, a, b], lhs, rhs);
            }
        }
    }
    Ok(report.finish())
}
