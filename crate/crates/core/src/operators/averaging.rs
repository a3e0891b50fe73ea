//! Relative averaging operators, Nijenhuis operators and graphs.

use crate::algebra::{basis, check_dim_limit, AlgebraData, AlgebraKind};
use crate::error::{expect_dim, Error, Result};
use crate::exact::{add, direct_sum, sub, Rational, Vector};
use crate::linalg::LinearMap;
use crate::report::{CheckReport, Identity};
use crate::representation::{action_at, hemisemi_direct};
use crate::tensor::StructureConstants;

use super::{BracketForm, OperatorData};

/// `𝒦(u)·𝒦(v) = 𝒦(μ(𝒦(u))v)` and, when `ϱ` is present,
/// `[𝒦(u), 𝒦(v)] = 𝒦(ϱ(𝒦(u))v)`.
pub fn check_relative_averaging(op: &OperatorData) -> Result<CheckReport> {
    check_relative_averaging_with(op, BracketForm::Rho)
}

/// As [`check_relative_averaging`], with the action on the right of the
/// bracket condition chosen by `form`.
pub fn check_relative_averaging_with(op: &OperatorData, form: BracketForm) -> Result<CheckReport> {
    let rep = op.averaging_rep()?;
    let k = op.map();
    let base = rep.base();
    let size = rep.carrier_dim();
    let mu = rep.actions().mu().expect("averaging operators carry mu");
    let rho = rep.actions().rho();
    let bracket = match rho {
        Some(_) => Some(base.require_bracket()?),
        None => None,
    };
    let e = basis(size);
    let images: Vec<Vector> = (0..size).map(|c| k.column(c)).collect();
    let mut report = CheckReport::new();
    for u in 0..size {
        let mu_ku = action_at(mu, &images[u], size);
        let rho_ku = rho.map(|r| action_at(r, &images[u], size));
        for v in 0..size {
            let lhs = base.product().apply_unchecked(&images[u], &images[v]);
            let rhs = k.apply_unchecked(&mu_ku.apply_unchecked(&e[v]));
            report.expect_eq(Identity::AveragingProduct, &[u, v], lhs, rhs);
            if let (Some(bracket), Some(rho_ku)) = (bracket, &rho_ku) {
                let lhs = bracket.apply_unchecked(&images[u], &images[v]);
                let acting = match form {
                    BracketForm::Rho => rho_ku,
                    BracketForm::Mu => &mu_ku,
                };
                let rhs = k.apply_unchecked(&acting.apply_unchecked(&e[v]));
                report.expect_eq(Identity::AveragingBracket, &[u, v], lhs, rhs);
            }
        }
    }
    Ok(report.finish())
}

/// `N(x)·N(y) = N(N(x)·y + x·N(y) − N(x·y))` and, when a bracket is present,
/// `{N(x), N(y)} = N({N(x),y} + {x,N(y)} − N({x,y}))`.
pub fn check_nijenhuis_awb(n: &LinearMap, a: &AlgebraData) -> Result<CheckReport> {
    let dim = a.dim();
    expect_dim("Nijenhuis operator rows", dim, n.rows())?;
    expect_dim("Nijenhuis operator columns", dim, n.cols())?;
    let mut report = CheckReport::new();
    nijenhuis_identity(n, a.product(), Identity::NijenhuisProduct, &mut report);
    if let Some(bracket) = a.bracket() {
        nijenhuis_identity(n, bracket, Identity::NijenhuisBracket, &mut report);
    }
    Ok(report.finish())
}

fn nijenhuis_identity(n: &LinearMap, c: &StructureConstants, identity: Identity, report: &mut CheckReport) {
    let dim = n.rows();
    let e = basis(dim);
    let images: Vec<Vector> = (0..dim).map(|i| n.column(i)).collect();
    for i in 0..dim {
        for j in 0..dim {
            let lhs = c.apply_unchecked(&images[i], &images[j]);
            let inner = sub(
                &add(
                    &c.apply_unchecked(&images[i], &e[j]),
                    &c.apply_unchecked(&e[i], &images[j]),
                ),
                &n.apply_unchecked(c.on_basis(i, j)),
            );
            report.expect_eq(identity, &[i, j], lhs, n.apply_unchecked(&inner));
        }
    }
}

/// `N_𝒦(x + u) = 𝒦(u)` on `A ⊕ V`, together with the hemisemi-direct product
/// it is checked against.
pub fn nijenhuis_from_operator(op: &OperatorData) -> Result<(LinearMap, AlgebraData)> {
    let rep = op.averaging_rep()?;
    let hemi = hemisemi_direct(rep)?;
    let n = rep.base().dim();
    let k = op.map();
    let total = n + rep.carrier_dim();
    let matrix = LinearMap::from_fn(total, total, |r, c| {
        if r < n && c >= n {
            k.get(r, c - n).clone()
        } else {
            Rational::from_integer(0.into())
        }
    });
    Ok((matrix, hemi))
}

/// Closure of the graph `{𝒦(u) + u}` under the hemisemi-direct operations,
/// decided by exact rank computations. A violation at `(u, v)` records the
/// product of the graph vectors and the graph vector with the same `V` part.
pub fn graph_subalgebra_check(op: &OperatorData) -> Result<CheckReport> {
    let rep = op.averaging_rep()?;
    let hemi = hemisemi_direct(rep)?;
    let n = rep.base().dim();
    let size = rep.carrier_dim();
    check_dim_limit(n + size)?;
    let k = op.map();
    let e = basis(size);
    let graph: Vec<Vector> = (0..size).map(|c| direct_sum(&k.column(c), &e[c])).collect();
    let span = LinearMap::from_columns(&graph, n + size)?;
    let lift = |w: &Vector| -> Vector {
        let v_part = &w[n..];
        direct_sum(&k.apply_unchecked(v_part), v_part)
    };
    let mut report = CheckReport::new();
    let mut ops = vec![(hemi.product(), Identity::GraphClosedProduct)];
    if let Some(b) = hemi.bracket() {
        ops.push((b, Identity::GraphClosedBracket));
    }
    for u in 0..size {
        for v in 0..size {
            for (c, identity) in &ops {
                let w = c.apply_unchecked(&graph[u], &graph[v]);
                if !span.column_span_contains(&w)? {
                    let rhs = lift(&w);
                    report.expect_eq(*identity, &[u, v], w, rhs);
                }
            }
        }
    }
    Ok(report.finish())
}

/// `u ·_𝒦 v = μ(𝒦(u))v` and `{u, v}_𝒦 = ϱ(𝒦(u))v` on `V`. Without `ϱ` the
/// result is an associative algebra without bracket.
pub fn induced_awb(op: &OperatorData) -> Result<AlgebraData> {
    induced_awb_with(op, BracketForm::Rho)
}

/// As [`induced_awb`], gated on the averaging condition in the given form.
pub fn induced_awb_with(op: &OperatorData, form: BracketForm) -> Result<AlgebraData> {
    let report = check_relative_averaging_with(op, form)?;
    if !report.passed() {
        return Err(Error::Precondition {
            what: "relative averaging operator",
            report,
        });
    }
    let rep = op.averaging_rep()?;
    let size = rep.carrier_dim();
    let k = op.map();
    let induced = |family: &[LinearMap]| {
        let mut c = StructureConstants::square(size);
        for u in 0..size {
            let m = action_at(family, &k.column(u), size);
            for v in 0..size {
                c.set_on_basis(u, v, &m.column(v));
            }
        }
        c
    };
    let mu = rep.actions().mu().expect("averaging operators carry mu");
    match rep.actions().rho() {
        Some(rho) => AlgebraData::new(AlgebraKind::AwbLeft, induced(mu), Some(induced(rho))),
        None => AlgebraData::new(AlgebraKind::Assoc, induced(mu), None),
    }
}
