//! Shared generators and a naive oracle that evaluates the defining
//! identities directly on nested coefficient tables.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::Zero;
use poisson_workbench::algebra::{AlgebraData, AlgebraKind};
use poisson_workbench::document::Document;
use poisson_workbench::exact::rat;
use poisson_workbench::fixtures;
use poisson_workbench::{LinearMap, Rational, StructureConstants};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Table = Vec<Vec<Vec<Rational>>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-1..=1)
}

pub fn fixture_algebra(name: &str) -> AlgebraData {
    match fixtures::load(name).unwrap() {
        Document::Algebra(a) => a,
        other => panic!("{name} is a {}", other.kind_name()),
    }
}

pub fn params(values: [i64; 4]) -> BTreeMap<String, Rational> {
    ["alpha", "beta", "gamma", "nu"]
        .into_iter()
        .zip(values)
        .map(|(k, v)| (k.to_string(), rat(v)))
        .collect()
}

// ---- oracle ----

pub fn table_of(c: &StructureConstants) -> Table {
    let (a, b, k) = c.shape();
    (0..a)
        .map(|i| (0..b).map(|j| (0..k).map(|l| c.get(i, j, l).clone()).collect()).collect())
        .collect()
}

pub fn zero_table(n: usize) -> Table {
    vec![vec![vec![Rational::zero(); n]; n]; n]
}

pub fn op(t: &Table, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let n = t[0][0].len();
    let mut out = vec![Rational::zero(); n];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            if xi.is_zero() || yj.is_zero() {
                continue;
            }
            for k in 0..n {
                out[k] += xi * yj * &t[i][j][k];
            }
        }
    }
    out
}

pub fn e(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|k| if k == i { rat(1) } else { rat(0) }).collect()
}

fn plus(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn minus(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn commutative(p: &Table) -> bool {
    let n = p.len();
    (0..n).all(|i| (0..n).all(|j| p[i][j] == p[j][i]))
}

pub fn antisymmetric(b: &Table) -> bool {
    let n = b.len();
    (0..n).all(|i| (0..n).all(|j| b[i][j].iter().zip(&b[j][i]).all(|(x, y)| x == &-y)))
}

pub fn associative(p: &Table) -> bool {
    let n = p.len();
    triples(n).all(|(x, y, z)| {
        let (x, y, z) = (e(n, x), e(n, y), e(n, z));
        op(p, &op(p, &x, &y), &z) == op(p, &x, &op(p, &y, &z))
    })
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

/// Triples `(x, y, z)` where `{x, y·z} ≠ {x,y}·z + y·{x,z}`.
pub fn leibniz_failures(p: &Table, b: &Table) -> Vec<(usize, usize, usize)> {
    let n = p.len();
    triples(n)
        .filter(|&(x, y, z)| {
            let (x, y, z) = (e(n, x), e(n, y), e(n, z));
            let lhs = op(b, &x, &op(p, &y, &z));
            let rhs = plus(&op(p, &op(b, &x, &y), &z), &op(p, &y, &op(b, &x, &z)));
            lhs != rhs
        })
        .collect()
}

pub fn almost_poisson(p: &Table, b: &Table) -> bool {
    commutative(p) && associative(p) && antisymmetric(b) && leibniz_failures(p, b).is_empty()
}

pub fn awb_left(p: &Table, b: &Table) -> bool {
    associative(p) && leibniz_failures(p, b).is_empty()
}

pub fn algebra_tables(a: &AlgebraData) -> (Table, Table) {
    let p = table_of(a.product());
    let b = a.bracket().map(table_of).unwrap_or_else(|| zero_table(a.dim()));
    (p, b)
}

/// Direct coalgebra axioms on `D[k][i][j]`, `d[k][i][j]`.
pub fn coalgebra_ok(cop: &Table, cob: &Table) -> bool {
    let n = cop.len();
    let sum = |f: &dyn Fn(usize) -> Rational| (0..n).map(f).fold(Rational::zero(), |a, b| a + b);
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if cop[k][i][j] != cop[k][j][i] || cob[k][i][j] != -&cob[k][j][i] {
                    return false;
                }
                for l in 0..n {
                    let left = sum(&|m| &cop[k][m][l] * &cop[m][i][j]);
                    let right = sum(&|m| &cop[k][i][m] * &cop[m][j][l]);
                    if left != right {
                        return false;
                    }
                    // coefficient of eᵢ⊗eⱼ⊗e_l in (δ⊗id)Δ(e_k) versus the Leibniz terms
                    let a = sum(&|m| &cob[k][i][m] * &cop[m][j][l]);
                    let b = sum(&|m| &cop[k][m][l] * &cob[m][i][j]);
                    let c = sum(&|m| &cop[k][j][m] * &cob[m][i][l]);
                    if a != b + c {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn apply_matrix(m: &LinearMap, v: &[Rational]) -> Vec<Rational> {
    (0..m.rows())
        .map(|r| (0..m.cols()).fold(Rational::zero(), |acc, c| acc + m.get(r, c) * &v[c]))
        .collect()
}

fn combination(family: &[LinearMap], x: &[Rational]) -> LinearMap {
    let n = family[0].rows();
    let mut out = LinearMap::zeros(n, family[0].cols());
    for (m, c) in family.iter().zip(x) {
        for r in 0..out.rows() {
            for col in 0..out.cols() {
                let v = out.get(r, col) + c * m.get(r, col);
                out.set(r, col, v);
            }
        }
    }
    out
}

/// `θ(x)v` for a family `θ` and coordinates `x`.
pub fn act(family: &[LinearMap], x: &[Rational], v: &[Rational]) -> Vec<Rational> {
    apply_matrix(&combination(family, x), v)
}

/// `𝒦(u)·𝒦(v) = 𝒦(μ(𝒦(u))v)` and `[𝒦(u),𝒦(v)] = 𝒦(ϱ(𝒦(u))v)` on basis pairs.
pub fn averaging_ok(
    k: &LinearMap,
    product: &Table,
    bracket: Option<&Table>,
    mu: &[LinearMap],
    rho: Option<&[LinearMap]>,
) -> bool {
    let m = k.cols();
    for u in 0..m {
        let ku = apply_matrix(k, &e(m, u));
        for v in 0..m {
            let kv = apply_matrix(k, &e(m, v));
            let acted = apply_matrix(&combination(mu, &ku), &e(m, v));
            if op(product, &ku, &kv) != apply_matrix(k, &acted) {
                return false;
            }
            if let (Some(b), Some(rho)) = (bracket, rho) {
                let acted = apply_matrix(&combination(rho, &ku), &e(m, v));
                if op(b, &ku, &kv) != apply_matrix(k, &acted) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn minus_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    minus(a, b)
}

// ---- generators ----

fn constants(n: usize, entries: &[(usize, usize, usize, i64)]) -> StructureConstants {
    StructureConstants::from_entries(n, entries.iter().map(|&(i, j, k, v)| (i, j, k, rat(v)))).unwrap()
}

/// Unit `e1`, square-zero `e2`, `e3`, bracket `[e2,e3] = e2`: product and
/// bracket interact, unlike the decoupled fixtures.
pub fn coupled_ap() -> AlgebraData {
    fixture_algebra("ap3d-coupled")
}

/// A random almost Poisson algebra: a bracket on the first `m` coordinates,
/// optionally an idempotent `e_n` that the bracket ignores.
pub fn random_ap(rng: &mut ChaCha8Rng, n: usize) -> AlgebraData {
    let idempotent = n > 1 && rng.gen_bool(0.5);
    let m = if idempotent { n - 1 } else { n };
    let mut entries = Vec::new();
    let mut product = Vec::new();
    if idempotent {
        product.push((n - 1, n - 1, n - 1, 1));
    }
    for i in 0..m {
        for j in i + 1..m {
            for k in 0..m {
                let v = small(rng);
                if v != 0 {
                    entries.push((i, j, k, v));
                    entries.push((j, i, k, -v));
                }
            }
        }
    }
    AlgebraData::new(
        AlgebraKind::AlmostPoisson,
        constants(n, &product),
        Some(constants(n, &entries)),
    )
    .unwrap()
}

/// A left AWB from the two-dimensional parametric family or from an almost
/// Poisson algebra.
pub fn random_awb(rng: &mut ChaCha8Rng) -> AlgebraData {
    if rng.gen_bool(0.5) {
        let nonzero = [-2i64, -1, 1, 2];
        let alpha = *nonzero.choose(rng).unwrap();
        let beta = *nonzero.choose(rng).unwrap();
        let values = [alpha, beta, rng.gen_range(-2..=2), rng.gen_range(-2..=2)];
        match fixtures::load_with("awb2d-parametric", &params(values)).unwrap() {
            Document::Algebra(a) => a,
            _ => unreachable!(),
        }
    } else if rng.gen_bool(0.5) {
        fixture_algebra("awb2d")
    } else {
        let n = rng.gen_range(1..=3);
        random_ap(rng, n).with_kind(AlgebraKind::AwbLeft).unwrap()
    }
}

/// Adds ±1 to one entry of one matrix.
pub fn perturb(rng: &mut ChaCha8Rng, family: &mut [LinearMap]) {
    if family.is_empty() || family[0].rows() == 0 {
        return;
    }
    let m = family.choose_mut(rng).unwrap();
    let (r, c) = (rng.gen_range(0..m.rows()), rng.gen_range(0..m.cols()));
    let delta = if rng.gen_bool(0.5) { rat(1) } else { rat(-1) };
    let v = m.get(r, c) + delta;
    m.set(r, c, v);
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64) -> LinearMap {
    LinearMap::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(density) {
            rat(if rng.gen_bool(0.5) { 1 } else { -1 })
        } else {
            rat(0)
        }
    })
}
