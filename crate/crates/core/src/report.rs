//! Check reports: a verdict plus every violated identity instance.

use std::fmt;

use crate::exact::{format_vector, Rational, Vector};

/// Every identity the workbench can verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    // algebras
    Commutativity,
    Associativity,
    Antisymmetry,
    /// `[x, y·z] = [x,y]·z + y·[x,z]` for an almost Poisson algebra.
    Leibniz,
    /// `{x, y·z} = {x,y}·z + y·{x,z}`
    LeftBiderivation,
    /// `[x·y, z] = x·[y,z] + [x,z]·y`
    RightBiderivation,

    // representations
    /// `μ(x·y) = μ(x)μ(y)`
    Multiplicative,
    /// `l(x·y) = l(x)l(y)`
    BimoduleLeft,
    /// `r(x·y) = r(y)r(x)`
    BimoduleRight,
    /// `l(x)r(y) = r(y)l(x)`
    BimoduleCommute,
    /// `ϱ(x·y) = μ(y)ϱ(x) + μ(x)ϱ(y)`
    RhoOfProduct,
    /// `μ([x,y]) = ϱ(x)μ(y) - μ(y)ϱ(x)`
    MuOfBracket,
    /// `L(x)l(y) = l({x,y}) + l(y)L(x)`
    BracketActionLeft,
    /// `L(x)r(y) = r(y)L(x) + r({x,y})`
    BracketActionRight,
    /// `R(x·y) = r(y)R(x) + l(x)R(y)`
    RightBracketOfProduct,
    /// `μ(x)(a·b) = (μ(x)a)·b`
    ModuleProduct,
    /// `ϱ(x)(a·b) = (ϱ(x)a)·b + a·(ϱ(x)b)`
    ModuleRhoDerivation,
    /// `[a, μ(x)b] = -(ϱ(x)a)·b + μ(x)[a,b]`
    ModuleBracketMu,

    // matched pairs
    /// `μ₁(x₁)(x₂·y₂) = (μ₁(x₁)x₂)·y₂ + μ₁(μ₂(x₂)x₁)y₂`
    MatchedProductFirst,
    /// `μ₂(x₂)(x₁·y₁) = (μ₂(x₂)x₁)·y₁ + μ₂(μ₁(x₁)x₂)y₁`
    MatchedProductSecond,
    /// `ϱ₂` acting on a product of `A₁`.
    MatchedRhoOnFirst,
    /// `ϱ₁` acting on a product of `A₂`.
    MatchedRhoOnSecond,
    /// Bracket of `A₁` against `μ₂`.
    MatchedBracketFirst,
    /// Bracket of `A₂` against `μ₁`.
    MatchedBracketSecond,

    // coalgebras and bialgebras
    Cocommutativity,
    Coassociativity,
    CoAntisymmetry,
    CoLeibniz,
    /// `Δ(x·y) = (L(x)⊗id)Δ(y) + (id⊗L(y))Δ(x)`
    Infinitesimal,
    /// Compatibility of the product with `δ` and of the bracket with `Δ`.
    ProductCobracket,
    /// Compatibility of the bracket with `Δ` and of the product with `δ`.
    BracketCoproduct,

    // Manin triples
    InvariantProduct,
    InvariantBracket,
    SubalgebraClosure,
    Isotropy,
    Nondegeneracy,

    // operators
    RotaBaxterProduct,
    RotaBaxterBracket,
    AveragingProduct,
    AveragingBracket,
    NijenhuisProduct,
    NijenhuisBracket,
    GraphClosedProduct,
    GraphClosedBracket,
    PreservesProduct,
    PreservesBracket,

    // tridendriform
    /// `(x∘y)▷z = x▷(y▷z)` with `∘` the induced product.
    TriangleAction,
    /// `(x▷y)·z = x▷(y·z)`
    TriangleDot,
    /// `x⋄(y·z) = (x⋄y)·z + y·(x⋄z)`
    DiamondDerivation,
    /// `[x, z▷y] = z▷[x,y] - y·(z⋄x)`
    BracketTriangle,
    /// `(y∘z)⋄x = z▷(y⋄x) + y▷(z⋄x)`
    DiamondOfInduced,
    /// `{x,z}▷y = x⋄(z▷y) - z▷(x⋄y)` with `{,}` the induced bracket.
    TriangleOfInduced,
}

impl Identity {
    pub fn name(self) -> &'static str {
        use Identity::*;
        match self {
            Commutativity => "commutativity",
            Associativity => "associativity",
            Antisymmetry => "antisymmetry",
            Leibniz => "leibniz",
            LeftBiderivation => "left-biderivation",
            RightBiderivation => "right-biderivation",
            Multiplicative => "multiplicative",
            BimoduleLeft => "bimodule-left",
            BimoduleRight => "bimodule-right",
            BimoduleCommute => "bimodule-commute",
            RhoOfProduct => "rho-of-product",
            MuOfBracket => "mu-of-bracket",
            BracketActionLeft => "bracket-action-left",
            BracketActionRight => "bracket-action-right",
            RightBracketOfProduct => "right-bracket-of-product",
            ModuleProduct => "module-product",
            ModuleRhoDerivation => "module-rho-derivation",
            ModuleBracketMu => "module-bracket-mu",
            MatchedProductFirst => "matched-product-first",
            MatchedProductSecond => "matched-product-second",
            MatchedRhoOnFirst => "matched-rho-on-first",
            MatchedRhoOnSecond => "matched-rho-on-second",
            MatchedBracketFirst => "matched-bracket-first",
            MatchedBracketSecond => "matched-bracket-second",
            Cocommutativity => "cocommutativity",
            Coassociativity => "coassociativity",
            CoAntisymmetry => "co-antisymmetry",
            CoLeibniz => "co-leibniz",
            Infinitesimal => "infinitesimal",
            ProductCobracket => "product-cobracket",
            BracketCoproduct => "bracket-coproduct",
            InvariantProduct => "invariant-product",
            InvariantBracket => "invariant-bracket",
            SubalgebraClosure => "subalgebra-closure",
            Isotropy => "isotropy",
            Nondegeneracy => "nondegeneracy",
            RotaBaxterProduct => "rota-baxter-product",
            RotaBaxterBracket => "rota-baxter-bracket",
            AveragingProduct => "averaging-product",
            AveragingBracket => "averaging-bracket",
            NijenhuisProduct => "nijenhuis-product",
            NijenhuisBracket => "nijenhuis-bracket",
            GraphClosedProduct => "graph-closed-product",
            GraphClosedBracket => "graph-closed-bracket",
            PreservesProduct => "preserves-product",
            PreservesBracket => "preserves-bracket",
            TriangleAction => "triangle-action",
            TriangleDot => "triangle-dot",
            DiamondDerivation => "diamond-derivation",
            BracketTriangle => "bracket-triangle",
            DiamondOfInduced => "diamond-of-induced",
            TriangleOfInduced => "triangle-of-induced",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which part of a compound structure a violation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scope {
    Base,
    Carrier,
    First,
    Second,
    Coalgebra,
    Source,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::Base => "base",
            Scope::Carrier => "carrier",
            Scope::First => "first",
            Scope::Second => "second",
            Scope::Coalgebra => "coalgebra",
            Scope::Source => "source",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: Identity,
    pub scope: Option<Scope>,
    /// Zero-based basis indices of the failing instance.
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Violation {
    /// Indices rendered one-based, e.g. `(2,2,1)`.
    pub fn locus(&self) -> String {
        let parts: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(scope) = self.scope {
            write!(f, "{}/", scope.name())?;
        }
        write!(
            f,
            "{} at {}: lhs {} rhs {}",
            self.identity,
            self.locus(),
            format_vector(&self.lhs),
            format_vector(&self.rhs)
        )
    }
}

/// Verdict plus violations. The verdict is derived, so `passed()` holds exactly
/// when there are no violations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Lexicographically first failing instance.
    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn has(&self, identity: Identity) -> bool {
        self.violations.iter().any(|v| v.identity == identity)
    }

    pub fn find(&self, identity: Identity) -> Option<&Violation> {
        self.violations.iter().find(|v| v.identity == identity)
    }

    pub fn identities(&self) -> Vec<Identity> {
        let mut ids: Vec<Identity> = self.violations.iter().map(|v| v.identity).collect();
        ids.sort();
        ids.dedup();
        ids
    }

    /// Compares `lhs` and `rhs`, recording a violation if they differ.
    pub fn expect_eq(&mut self, identity: Identity, indices: &[usize], lhs: Vector, rhs: Vector) {
        if lhs != rhs {
            self.violations.push(Violation {
                identity,
                scope: None,
                indices: indices.to_vec(),
                lhs,
                rhs,
            });
        }
    }

    pub fn expect_scalar_eq(&mut self, identity: Identity, indices: &[usize], lhs: Rational, rhs: Rational) {
        self.expect_eq(identity, indices, vec![lhs], vec![rhs]);
    }

    pub fn push(&mut self, violation: Violation) {
        self.violations.push(violation);
    }

    /// Appends `other`, tagging untagged violations with `scope`.
    pub fn absorb(&mut self, other: CheckReport, scope: Scope) {
        self.violations.extend(other.violations.into_iter().map(|mut v| {
            v.scope.get_or_insert(scope);
            v
        }));
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.violations.extend(other.violations);
    }

    /// Restores the canonical order: lexicographic by indices, stable otherwise.
    pub(crate) fn finish(mut self) -> Self {
        self.violations.sort_by(|a, b| a.indices.cmp(&b.indices));
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass");
        }
        write!(f, "fail ({} violation(s))", self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}
