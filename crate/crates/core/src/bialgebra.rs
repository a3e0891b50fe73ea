//! Coalgebras, almost Poisson D-bialgebras, the double on `A ⊕ A*` and
//! Manin triples.
//!
//! A coalgebra tensor stores `D[k][i][j]`, the coefficient of `eᵢ ⊗ eⱼ` in
//! `Δ(e_k)`. Dual bases are paired by `⟨eᵢ, ξⱼ⟩ = δᵢⱼ`.

use num_traits::Zero;

use crate::algebra::{check_almost_poisson, check_dim_limit, AlgebraData, AlgebraKind};
use crate::error::{expect_dim, Error, Result};
use crate::exact::{dot, zero_vector, Rational, Vector};
use crate::linalg::LinearMap;
use crate::matched_pair::{bowtie, check_matched_pair_ap, MatchedPairData};
use crate::report::{CheckReport, Identity, Scope};
use crate::tensor::{dualize_action, flip_tau, Sign, StructureConstants, Tensor2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    coproduct: StructureConstants,
    cobracket: StructureConstants,
}

impl CoalgebraData {
    pub fn new(coproduct: StructureConstants, cobracket: StructureConstants) -> Result<Self> {
        let n = coproduct.shape().0;
        check_dim_limit(n)?;
        if !coproduct.is_square_of(n) || !cobracket.is_square_of(n) {
            return Err(Error::input(format!(
                "coalgebra tensors must both have shape ({n}, {n}, {n})"
            )));
        }
        Ok(CoalgebraData {
            coproduct,
            cobracket,
        })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(StructureConstants::square(n), StructureConstants::square(n))
    }

    pub fn dim(&self) -> usize {
        self.coproduct.shape().0
    }

    /// `D[k][i][j]` for `Δ`.
    pub fn coproduct(&self) -> &StructureConstants {
        &self.coproduct
    }

    /// `d[k][i][j]` for `δ`.
    pub fn cobracket(&self) -> &StructureConstants {
        &self.cobracket
    }

    /// `Δ(e_k)`
    pub fn coproduct_of(&self, k: usize) -> Tensor2 {
        leg_tensor(&self.coproduct, k)
    }

    /// `δ(e_k)`
    pub fn cobracket_of(&self, k: usize) -> Tensor2 {
        leg_tensor(&self.cobracket, k)
    }
}

fn leg_tensor(c: &StructureConstants, k: usize) -> Tensor2 {
    let n = c.shape().1;
    Tensor2::from_fn(n, n, |i, j| c.get(k, i, j).clone())
}

/// `Δ(x)` for `x` in coordinates.
fn leg_tensor_at(c: &StructureConstants, x: &[Rational]) -> Tensor2 {
    let n = c.shape().1;
    Tensor2::from_fn(n, n, |i, j| {
        x.iter()
            .enumerate()
            .filter(|(_, xk)| !xk.is_zero())
            .fold(Rational::zero(), |acc, (k, xk)| acc + xk * c.get(k, i, j))
    })
}

/// `Σ_m a[k][i][m] · b[m][j][l]` for every `(i, j, l)`: the leg-wise
/// composition `(id ⊗ b) a` evaluated on `e_k`, flattened.
fn compose_right(a: &StructureConstants, b: &StructureConstants, k: usize) -> Vector {
    let n = a.shape().0;
    let mut out = zero_vector(n * n * n);
    for i in 0..n {
        for m in 0..n {
            let x = a.get(k, i, m);
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                for l in 0..n {
                    let y = b.get(m, j, l);
                    if !y.is_zero() {
                        out[(i * n + j) * n + l] += x * y;
                    }
                }
            }
        }
    }
    out
}

/// `Σ_m a[k][m][l] · b[m][i][j]`: `(b ⊗ id) a` on `e_k`, flattened.
fn compose_left(a: &StructureConstants, b: &StructureConstants, k: usize) -> Vector {
    let n = a.shape().0;
    let mut out = zero_vector(n * n * n);
    for m in 0..n {
        for l in 0..n {
            let x = a.get(k, m, l);
            if x.is_zero() {
                continue;
            }
            for i in 0..n {
                for j in 0..n {
                    let y = b.get(m, i, j);
                    if !y.is_zero() {
                        out[(i * n + j) * n + l] += x * y;
                    }
                }
            }
        }
    }
    out
}

/// `(τ ⊗ id)(id ⊗ b) a` on `e_k`: component `(i, j, l)` is
/// `Σ_m a[k][j][m] · b[m][i][l]`.
fn compose_right_flipped(a: &StructureConstants, b: &StructureConstants, k: usize) -> Vector {
    let n = a.shape().0;
    let mut out = zero_vector(n * n * n);
    for j in 0..n {
        for m in 0..n {
            let x = a.get(k, j, m);
            if x.is_zero() {
                continue;
            }
            for i in 0..n {
                for l in 0..n {
                    let y = b.get(m, i, l);
                    if !y.is_zero() {
                        out[(i * n + j) * n + l] += x * y;
                    }
                }
            }
        }
    }
    out
}

/// Cocommutativity and coassociativity of `Δ`, co-antisymmetry of `δ` and
/// the co-Leibniz rule
/// `(id⊗Δ)δ − (δ⊗id)Δ − (τ⊗id)(id⊗δ)Δ = 0`, each checked on every `e_k`.
pub fn check_coalgebra(c: &CoalgebraData) -> CheckReport {
    let n = c.dim();
    let mut report = CheckReport::new();
    for k in 0..n {
        let delta_k = c.coproduct_of(k);
        report.expect_eq(
            Identity::Cocommutativity,
            &[k],
            delta_k.coordinates(),
            flip_tau(&delta_k).coordinates(),
        );
        report.expect_eq(
            Identity::Coassociativity,
            &[k],
            compose_right(&c.coproduct, &c.coproduct, k),
            compose_left(&c.coproduct, &c.coproduct, k),
        );
        let cob_k = c.cobracket_of(k);
        let flipped: Vector = flip_tau(&cob_k).coordinates().iter().map(|x| -x).collect();
        report.expect_eq(Identity::CoAntisymmetry, &[k], cob_k.coordinates(), flipped);

        let lhs = compose_right(&c.cobracket, &c.coproduct, k);
        let a = compose_left(&c.coproduct, &c.cobracket, k);
        let b = compose_right_flipped(&c.coproduct, &c.cobracket, k);
        let rhs = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        report.expect_eq(Identity::CoLeibniz, &[k], lhs, rhs);
    }
    report.finish()
}

/// The algebra on `A*` with `ξᵢ·ξⱼ = Σ_k D[k][i][j] ξ_k` and
/// `[ξᵢ, ξⱼ] = Σ_k d[k][i][j] ξ_k`.
pub fn dualize_coalgebra(c: &CoalgebraData) -> AlgebraData {
    let transpose = |t: &StructureConstants| {
        let n = t.shape().0;
        let mut out = StructureConstants::square(n);
        for (k, i, j, v) in t.nonzero_entries() {
            out.set(i, j, k, v.clone());
        }
        out
    };
    AlgebraData::new(
        AlgebraKind::AlmostPoisson,
        transpose(&c.coproduct),
        Some(transpose(&c.cobracket)),
    )
    .expect("square constants of a valid coalgebra")
}

/// The coalgebra whose dual algebra is `a`; a missing bracket encodes as `δ = 0`.
pub fn encode_as_coalgebra(a: &AlgebraData) -> CoalgebraData {
    let n = a.dim();
    let transpose = |t: &StructureConstants| {
        let mut out = StructureConstants::square(n);
        for (i, j, k, v) in t.nonzero_entries() {
            out.set(k, i, j, v.clone());
        }
        out
    };
    let cobracket = a.bracket().map(transpose).unwrap_or_else(|| StructureConstants::square(n));
    CoalgebraData {
        coproduct: transpose(a.product()),
        cobracket,
    }
}

/// An algebra together with a coalgebra structure on the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraData {
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
}

impl BialgebraData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData) -> Result<Self> {
        expect_dim("bialgebra coalgebra dimension", algebra.dim(), coalgebra.dim())?;
        algebra.require_bracket()?;
        Ok(BialgebraData { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }
}

/// `Δ(x·y) = (L(x)⊗id)Δ(y) + (id⊗L(y))Δ(x)` on basis pairs.
pub fn check_infinitesimal(b: &BialgebraData) -> CheckReport {
    let n = b.algebra.dim();
    let l = b.algebra.left_multiplications();
    let product = b.algebra.product();
    let delta = &b.coalgebra.coproduct;
    let mut report = CheckReport::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = leg_tensor_at(delta, product.on_basis(i, j));
            let rhs = b
                .coalgebra
                .coproduct_of(j)
                .map_left(&l[i])
                .add(&b.coalgebra.coproduct_of(i).map_right(&l[j]));
            report.expect_eq(Identity::Infinitesimal, &[i, j], lhs.coordinates(), rhs.coordinates());
        }
    }
    report.finish()
}

fn precondition_gate(b: &BialgebraData) -> Result<()> {
    let mut pre = CheckReport::new();
    pre.absorb(check_almost_poisson(&b.algebra)?, Scope::Base);
    pre.absorb(check_coalgebra(&b.coalgebra), Scope::Coalgebra);
    if pre.passed() {
        Ok(())
    } else {
        Err(Error::Precondition {
            what: "almost Poisson algebra and almost Poisson coalgebra",
            report: pre.finish(),
        })
    }
}

/// Infinitesimal condition plus
/// `δ(x·y) + (ad(y)⊗id)Δ(x) − (id⊗L(x))δ(y) + (ad(x)⊗id)Δ(y) − (id⊗L(y))δ(x) = 0`
/// and
/// `Δ([x,y]) − (L(y)⊗id)δ(x) − (id⊗ad(x))Δ(y) + (id⊗L(y))δ(x) − (ad(x)⊗id)Δ(y) = 0`.
///
/// The algebra must be almost Poisson and the coalgebra an almost Poisson
/// coalgebra; otherwise a precondition error is returned.
pub fn check_dbialgebra(b: &BialgebraData) -> Result<CheckReport> {
    precondition_gate(b)?;
    let n = b.algebra.dim();
    let l = b.algebra.left_multiplications();
    let ad = b.algebra.adjoints()?;
    let product = b.algebra.product();
    let bracket = b.algebra.require_bracket()?;
    let c = &b.coalgebra;
    let mut report = check_infinitesimal(b);
    for i in 0..n {
        for j in 0..n {
            let lhs = leg_tensor_at(&c.cobracket, product.on_basis(i, j));
            let rhs = c
                .cobracket_of(j)
                .map_right(&l[i])
                .add(&c.cobracket_of(i).map_right(&l[j]))
                .sub(&c.coproduct_of(i).map_left(&ad[j]))
                .sub(&c.coproduct_of(j).map_left(&ad[i]));
            report.expect_eq(Identity::ProductCobracket, &[i, j], lhs.coordinates(), rhs.coordinates());

            let lhs = leg_tensor_at(&c.coproduct, bracket.on_basis(i, j));
            let rhs = c
                .cobracket_of(i)
                .map_left(&l[j])
                .add(&c.coproduct_of(j).map_right(&ad[i]))
                .sub(&c.cobracket_of(i).map_right(&l[j]))
                .add(&c.coproduct_of(j).map_left(&ad[i]));
            report.expect_eq(Identity::BracketCoproduct, &[i, j], lhs.coordinates(), rhs.coordinates());
        }
    }
    Ok(report.finish())
}

/// The matched pair `(A, A*, ϱ₁, μ₁, ϱ₂, μ₂)` with `ϱ₁ = ad*`, `μ₁ = −L*`,
/// `ϱ₂ = ad*_{A*}`, `μ₂ = −L*_{A*}`, where `θ*` has matrix `−θᵀ`.
pub fn build_dual_maps(b: &BialgebraData) -> Result<MatchedPairData> {
    let a = &b.algebra;
    let dual = dualize_coalgebra(&b.coalgebra);
    MatchedPairData::new(
        a.clone(),
        dual.clone(),
        dualize_action(&a.left_multiplications(), Sign::Minus)?,
        Some(dualize_action(&a.adjoints()?, Sign::Plus)?),
        dualize_action(&dual.left_multiplications(), Sign::Minus)?,
        Some(dualize_action(&dual.adjoints()?, Sign::Plus)?),
    )
}

/// A symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: LinearMap,
}

impl BilinearForm {
    pub fn new(gram: LinearMap) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::input("Gram matrix must be square"));
        }
        if gram != gram.transpose() {
            return Err(Error::input("Gram matrix must be symmetric"));
        }
        Ok(BilinearForm { gram })
    }

    /// `ω_d(x + ξ, y + η) = ⟨x, η⟩ + ⟨ξ, y⟩` on `A ⊕ A*` with `dim A = n`.
    pub fn standard_pairing(n: usize) -> Self {
        let gram = LinearMap::from_fn(2 * n, 2 * n, |r, c| {
            if r + n == c || c + n == r {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        });
        BilinearForm { gram }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &LinearMap {
        &self.gram
    }

    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        dot(u, &self.gram.apply_unchecked(v))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }
}

/// The double `A ⋈ A*` with the standard pairing.
pub fn build_double(b: &BialgebraData) -> Result<(AlgebraData, BilinearForm)> {
    let double = bowtie(&build_dual_maps(b)?)?;
    Ok((double, BilinearForm::standard_pairing(b.algebra.dim())))
}

/// Two sets of basis indices of the ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl Split {
    /// `(A, A*)` inside `A ⊕ A*` with `dim A = n`.
    pub fn standard(n: usize) -> Self {
        Split {
            first: (0..n).collect(),
            second: (n..2 * n).collect(),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for &i in self.first.iter().chain(&self.second) {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::input("split summands must be disjoint basis index sets"));
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::input("split summands must span the whole space"));
        }
        Ok(())
    }
}

fn check_closure(
    c: &StructureConstants,
    members: &[usize],
    identity: Identity,
    scope: Scope,
    report: &mut CheckReport,
) {
    let n = c.shape().0;
    let outside: Vec<usize> = (0..n).filter(|k| !members.contains(k)).collect();
    for &i in members {
        for &j in members {
            let v = c.on_basis(i, j);
            let leak: Vector = outside.iter().map(|&k| v[k].clone()).collect();
            if leak.iter().any(|x| !x.is_zero()) {
                let mut sub = CheckReport::new();
                sub.expect_eq(identity, &[i, j], leak.clone(), zero_vector(leak.len()));
                report.absorb(sub, scope);
            }
        }
    }
}

/// Almost Poisson axioms of `a`, invariance of `form` under both operations,
/// closure and isotropy of both summands, and nondegeneracy of the form.
pub fn check_manin_triple(a: &AlgebraData, split: &Split, form: &BilinearForm) -> Result<CheckReport> {
    let n = a.dim();
    expect_dim("bilinear form", n, form.dim())?;
    split.validate(n)?;
    let bracket = a.require_bracket()?;
    let product = a.product();
    let mut report = check_almost_poisson(a)?;

    let e = crate::algebra::basis(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = form.eval(product.on_basis(i, j), &e[k]);
                let rhs = form.eval(&e[i], product.on_basis(j, k));
                report.expect_scalar_eq(Identity::InvariantProduct, &[i, j, k], lhs, rhs);
                let lhs = form.eval(bracket.on_basis(i, j), &e[k]);
                let rhs = form.eval(&e[i], bracket.on_basis(j, k));
                report.expect_scalar_eq(Identity::InvariantBracket, &[i, j, k], lhs, rhs);
            }
        }
    }
    for (members, scope) in [(&split.first, Scope::First), (&split.second, Scope::Second)] {
        check_closure(product, members, Identity::SubalgebraClosure, scope, &mut report);
        check_closure(bracket, members, Identity::SubalgebraClosure, scope, &mut report);
        let mut iso = CheckReport::new();
        for &i in members.iter() {
            for &j in members.iter() {
                let value = form.gram.get(i, j).clone();
                iso.expect_scalar_eq(Identity::Isotropy, &[i, j], value, Rational::zero());
            }
        }
        report.absorb(iso, scope);
    }
    let rank = form.gram.rank();
    if rank < n {
        report.expect_scalar_eq(
            Identity::Nondegeneracy,
            &[],
            Rational::from_integer(rank.into()),
            Rational::from_integer(n.into()),
        );
    }
    Ok(report.finish())
}

/// Verdicts of the three equivalent conditions on a bialgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub dbialgebra: CheckReport,
    pub matched_pair: CheckReport,
    pub manin_triple: CheckReport,
}

impl EquivalenceReport {
    pub fn verdicts(&self) -> [bool; 3] {
        [
            self.dbialgebra.passed(),
            self.matched_pair.passed(),
            self.manin_triple.passed(),
        ]
    }

    pub fn agree(&self) -> bool {
        let [a, b, c] = self.verdicts();
        a == b && b == c
    }
}

/// D-bialgebra verdict, matched-pair verdict on the dual maps, and Manin
/// triple verdict on the double with the standard split and pairing.
pub fn equivalence_report(b: &BialgebraData) -> Result<EquivalenceReport> {
    let dbialgebra = check_dbialgebra(b)?;
    let matched_pair = check_matched_pair_ap(&build_dual_maps(b)?)?;
    let (double, form) = build_double(b)?;
    let manin_triple = check_manin_triple(&double, &Split::standard(b.algebra.dim()), &form)?;
    Ok(EquivalenceReport {
        dbialgebra,
        matched_pair,
        manin_triple,
    })
}
