//! Weighted relative Rota-Baxter operators and almost tridendriform Poisson
//! algebras.

use crate::algebra::{basis, check_almost_poisson, AlgebraData, AlgebraKind};
use crate::error::{expect_dim, Error, Result};
use crate::exact::{add, scale, sub, Vector};
use crate::linalg::LinearMap;
use crate::report::{CheckReport, Identity};
use crate::representation::{action_at, check_module_ap, check_module_comm_assoc, Actions};
use crate::tensor::StructureConstants;

use super::OperatorData;

/// `ℛ(a)·ℛ(b) = ℛ(μ(ℛ(a))b + μ(ℛ(b))a + λ a·_V b)` and, for a module almost
/// Poisson algebra, `[ℛ(a), ℛ(b)] = ℛ(ϱ(ℛ(a))b − ϱ(ℛ(b))a + λ[a,b]_V)`.
///
/// Validity of the module algebra itself is a precondition, checked by
/// [`dendrify`] but not here.
pub fn check_weighted_rrb(op: &OperatorData) -> Result<CheckReport> {
    let (module, weight) = op.rota_baxter_parts()?;
    let rep = module.rep();
    let base = rep.base();
    let size = rep.carrier_dim();
    let r = op.map();
    let mu = rep.actions().mu().ok_or_else(|| Error::Profile {
        expected: "{mu} or {mu,rho}",
        found: rep.actions().profile(),
    })?;
    let with_bracket = match (rep.actions().rho(), module.carrier_bracket()) {
        (Some(rho), Some(cb)) => Some((rho, cb, base.require_bracket()?)),
        _ => None,
    };
    let e = basis(size);
    let images: Vec<Vector> = (0..size).map(|c| r.column(c)).collect();
    let mut report = CheckReport::new();
    for a in 0..size {
        for b in 0..size {
            let lhs = base.product().apply_unchecked(&images[a], &images[b]);
            let inner = add(
                &add(
                    &action_at(mu, &images[a], size).apply_unchecked(&e[b]),
                    &action_at(mu, &images[b], size).apply_unchecked(&e[a]),
                ),
                &scale(weight, module.carrier_product().on_basis(a, b)),
            );
            report.expect_eq(Identity::RotaBaxterProduct, &[a, b], lhs, r.apply_unchecked(&inner));

            if let Some((rho, cb, bracket)) = with_bracket {
                let lhs = bracket.apply_unchecked(&images[a], &images[b]);
                let inner = add(
                    &sub(
                        &action_at(rho, &images[a], size).apply_unchecked(&e[b]),
                        &action_at(rho, &images[b], size).apply_unchecked(&e[a]),
                    ),
                    &scale(weight, cb.on_basis(a, b)),
                );
                report.expect_eq(Identity::RotaBaxterBracket, &[a, b], lhs, r.apply_unchecked(&inner));
            }
        }
    }
    Ok(report.finish())
}

/// Four operations `({,}, ⋄, ·, ▷)` on one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TridendriformData {
    bracket: StructureConstants,
    diamond: StructureConstants,
    dot: StructureConstants,
    triangle: StructureConstants,
}

impl TridendriformData {
    pub fn new(
        bracket: StructureConstants,
        diamond: StructureConstants,
        dot: StructureConstants,
        triangle: StructureConstants,
    ) -> Result<Self> {
        let n = bracket.shape().0;
        crate::algebra::check_dim_limit(n)?;
        for c in [&bracket, &diamond, &dot, &triangle] {
            if !c.is_square_of(n) {
                return Err(Error::input(format!(
                    "all four tridendriform operations must have shape ({n}, {n}, {n})"
                )));
            }
        }
        Ok(TridendriformData {
            bracket,
            diamond,
            dot,
            triangle,
        })
    }

    pub fn zero(n: usize) -> Result<Self> {
        let z = || StructureConstants::square(n);
        Self::new(z(), z(), z(), z())
    }

    pub fn dim(&self) -> usize {
        self.dot.shape().0
    }

    pub fn bracket(&self) -> &StructureConstants {
        &self.bracket
    }

    pub fn diamond(&self) -> &StructureConstants {
        &self.diamond
    }

    pub fn dot(&self) -> &StructureConstants {
        &self.dot
    }

    pub fn triangle(&self) -> &StructureConstants {
        &self.triangle
    }

    /// `x ∘ y = x▷y + y▷x + x·y`
    pub fn induced_product(&self) -> StructureConstants {
        let n = self.dim();
        let mut c = StructureConstants::square(n);
        for i in 0..n {
            for j in 0..n {
                let v = add(
                    &add(self.triangle.on_basis(i, j), self.triangle.on_basis(j, i)),
                    self.dot.on_basis(i, j),
                );
                c.set_on_basis(i, j, &v);
            }
        }
        c
    }

    /// `{x, y}_c = x⋄y − y⋄x + {x,y}`
    pub fn induced_bracket(&self) -> StructureConstants {
        let n = self.dim();
        let mut c = StructureConstants::square(n);
        for i in 0..n {
            for j in 0..n {
                let v = add(
                    &sub(self.diamond.on_basis(i, j), self.diamond.on_basis(j, i)),
                    self.bracket.on_basis(i, j),
                );
                c.set_on_basis(i, j, &v);
            }
        }
        c
    }
}

/// `{a,b} = λ[a,b]_V`, `a⋄b = ϱ(ℛ(a))b`, `a·b = λ a·_V b`, `a▷b = μ(ℛ(a))b`.
///
/// Requires a valid module algebra and a weighted relative Rota-Baxter
/// operator; otherwise a precondition error is returned. For the associative
/// profile the bracket and `⋄` are zero.
pub fn dendrify(op: &OperatorData) -> Result<TridendriformData> {
    let (module, weight) = op.rota_baxter_parts()?;
    let rep = module.rep();
    let mut gate = match (rep.actions(), module.carrier_bracket()) {
        (Actions::AlmostPoisson { .. }, Some(_)) => check_module_ap(module)?,
        _ => check_module_comm_assoc(module)?,
    };
    gate.merge(check_weighted_rrb(op)?);
    if !gate.passed() {
        return Err(Error::Precondition {
            what: "module algebra with weighted relative Rota-Baxter operator",
            report: gate,
        });
    }
    let size = rep.carrier_dim();
    let r = op.map();
    let induced = |family: &[LinearMap]| {
        let mut c = StructureConstants::square(size);
        for a in 0..size {
            let m = action_at(family, &r.column(a), size);
            for b in 0..size {
                c.set_on_basis(a, b, &m.column(b));
            }
        }
        c
    };
    let mu = rep.actions().mu().expect("gated on a module profile");
    let (bracket, diamond) = match (rep.actions().rho(), module.carrier_bracket()) {
        (Some(rho), Some(cb)) => (cb.scaled(weight), induced(rho)),
        _ => (StructureConstants::square(size), StructureConstants::square(size)),
    };
    TridendriformData::new(
        bracket,
        diamond,
        module.carrier_product().scaled(weight),
        induced(mu),
    )
}

/// Commutative dendriform trialgebra axioms for `(·, ▷)`, almost Poisson
/// axioms for `({,}, ·)`, and the four compatibilities with `⋄` and the
/// induced operations. An asymmetric `·` or a non-skew `{,}` is an input
/// error.
pub fn check_tridendriform(t: &TridendriformData) -> Result<CheckReport> {
    if !t.dot.is_symmetric() {
        return Err(Error::input("tridendriform dot operation must be symmetric"));
    }
    if !t.bracket.is_antisymmetric() {
        return Err(Error::input("tridendriform bracket must be antisymmetric"));
    }
    let n = t.dim();
    let e = basis(n);
    let circ = t.induced_product();
    let curly = t.induced_bracket();
    let (dot, tri, dia, br) = (&t.dot, &t.triangle, &t.diamond, &t.bracket);

    let mut report = CheckReport::new();
    let inner = AlgebraData::new(AlgebraKind::AlmostPoisson, dot.clone(), Some(br.clone()))?;
    report.merge(check_almost_poisson(&inner)?);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // (x∘y)▷z = x▷(y▷z)
                let lhs = tri.apply_unchecked(circ.on_basis(x, y), &e[z]);
                let rhs = tri.apply_unchecked(&e[x], tri.on_basis(y, z));
                report.expect_eq(Identity::TriangleAction, &[x, y, z], lhs, rhs);

                // (x▷y)·z = x▷(y·z)
                let lhs = dot.apply_unchecked(tri.on_basis(x, y), &e[z]);
                let rhs = tri.apply_unchecked(&e[x], dot.on_basis(y, z));
                report.expect_eq(Identity::TriangleDot, &[x, y, z], lhs, rhs);

                // x⋄(y·z) = (x⋄y)·z + y·(x⋄z)
                let lhs = dia.apply_unchecked(&e[x], dot.on_basis(y, z));
                let rhs = add(
                    &dot.apply_unchecked(dia.on_basis(x, y), &e[z]),
                    &dot.apply_unchecked(&e[y], dia.on_basis(x, z)),
                );
                report.expect_eq(Identity::DiamondDerivation, &[x, y, z], lhs, rhs);

                // {x, z▷y} = z▷{x,y} − y·(z⋄x)
                let lhs = br.apply_unchecked(&e[x], tri.on_basis(z, y));
                let rhs = sub(
                    &tri.apply_unchecked(&e[z], br.on_basis(x, y)),
                    &dot.apply_unchecked(&e[y], dia.on_basis(z, x)),
                );
                report.expect_eq(Identity::BracketTriangle, &[x, y, z], lhs, rhs);

                // (y∘z)⋄x = z▷(y⋄x) + y▷(z⋄x)
                let lhs = dia.apply_unchecked(circ.on_basis(y, z), &e[x]);
                let rhs = add(
                    &tri.apply_unchecked(&e[z], dia.on_basis(y, x)),
                    &tri.apply_unchecked(&e[y], dia.on_basis(z, x)),
                );
                report.expect_eq(Identity::DiamondOfInduced, &[x, y, z], lhs, rhs);

                // {x,z}_c▷y = x⋄(z▷y) − z▷(x⋄y)
                let lhs = tri.apply_unchecked(curly.on_basis(x, z), &e[y]);
                let rhs = sub(
                    &dia.apply_unchecked(&e[x], tri.on_basis(z, y)),
                    &tri.apply_unchecked(&e[z], dia.on_basis(x, y)),
                );
                report.expect_eq(Identity::TriangleOfInduced, &[x, y, z], lhs, rhs);
            }
        }
    }
    Ok(report.finish())
}

/// `(V, ∘, {,}_c)`; requires [`check_tridendriform`] to pass.
pub fn associated_ap(t: &TridendriformData) -> Result<AlgebraData> {
    let report = check_tridendriform(t)?;
    if !report.passed() {
        return Err(Error::Precondition {
            what: "almost tridendriform Poisson algebra",
            report,
        });
    }
    AlgebraData::new(
        AlgebraKind::AlmostPoisson,
        t.induced_product(),
        Some(t.induced_bracket()),
    )
}

/// `f(x∘y) = f(x)·f(y)` and, when both algebras have brackets,
/// `f({x,y}) = [f(x), f(y)]`, on basis pairs of `src`.
pub fn check_homomorphism(f: &LinearMap, src: &AlgebraData, dst: &AlgebraData) -> Result<CheckReport> {
    expect_dim("homomorphism rows", dst.dim(), f.rows())?;
    expect_dim("homomorphism columns", src.dim(), f.cols())?;
    let n = src.dim();
    let images: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    let mut report = CheckReport::new();
    let mut pairs = vec![(src.product(), dst.product(), Identity::PreservesProduct)];
    if let (Some(a), Some(b)) = (src.bracket(), dst.bracket()) {
        pairs.push((a, b, Identity::PreservesBracket));
    }
    for i in 0..n {
        for j in 0..n {
            for (s, d, identity) in &pairs {
                let lhs = f.apply_unchecked(s.on_basis(i, j));
                let rhs = d.apply_unchecked(&images[i], &images[j]);
                report.expect_eq(*identity, &[i, j], lhs, rhs);
            }
        }
    }
    Ok(report.finish())
}
