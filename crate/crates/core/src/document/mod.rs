//! The JSON interchange format.
//!
//! One JSON object per document, dispatched on `"kind"`. Structure constants
//! are lists of `[i, j, k, c]` entries with 1-based indices (for coalgebras
//! `[k, i, j, c]`: the coefficient of `eᵢ ⊗ eⱼ` in `Δ(e_k)`). Matrices are
//! lists of rows. A coefficient is an integer, a rational string `"p/q"`, or
//! an expression over the names in the top-level `"params"` map.
//!
//! ```json
//! {
//!   "kind": "algebra",
//!   "algebra_kind": "awb-left",
//!   "dim": 2,
//!   "product": [[1, 1, 1, "1"], [1, 2, 2, "1"]],
//!   "bracket": [[1, 2, 2, "1"], [2, 1, 2, "-1"]]
//! }
//! ```
//!
//! For `comm-assoc` and `almost-poisson` data only one of each mirrored pair
//! needs to be listed: products are symmetrized and brackets antisymmetrized.

mod expr;

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{Map, Value};

use crate::algebra::{AlgebraData, AlgebraKind};
use crate::bialgebra::{BialgebraData, CoalgebraData};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, rat, Rational};
use crate::linalg::LinearMap;
use crate::matched_pair::MatchedPairData;
use crate::operators::{OperatorContext, OperatorData, TridendriformData};
use crate::representation::{Actions, ModuleAlgebraData, RepresentationData};
use crate::tensor::StructureConstants;
use crate::MAX_DIM;

/// A parsed and validated document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Algebra(AlgebraData),
    Representation(RepresentationData),
    ModuleAlgebra(ModuleAlgebraData),
    MatchedPair(MatchedPairData),
    Coalgebra(CoalgebraData),
    Bialgebra(BialgebraData),
    Operator(OperatorData),
    Tridendriform(TridendriformData),
}

impl Document {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::Representation(_) => "representation",
            Document::ModuleAlgebra(_) => "module-algebra",
            Document::MatchedPair(_) => "matched-pair",
            Document::Coalgebra(_) => "coalgebra",
            Document::Bialgebra(_) => "bialgebra",
            Document::Operator(_) => "operator",
            Document::Tridendriform(_) => "tridendriform",
        }
    }
}

macro_rules! document_from {
    ($($variant:ident($ty:ty)),* $(,)?) => {
        $(impl From<$ty> for Document {
            fn from(value: $ty) -> Self {
                Document::$variant(value)
            }
        })*
    };
}

document_from!(
    Algebra(AlgebraData),
    Representation(RepresentationData),
    ModuleAlgebra(ModuleAlgebraData),
    MatchedPair(MatchedPairData),
    Coalgebra(CoalgebraData),
    Bialgebra(BialgebraData),
    Operator(OperatorData),
    Tridendriform(TridendriformData),
);

pub fn parse_document(text: &str) -> Result<Document> {
    parse_document_with(text, &BTreeMap::new())
}

/// Parses a document, with `overrides` taking precedence over the values in
/// its `"params"` map.
pub fn parse_document_with(text: &str, overrides: &BTreeMap<String, Rational>) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| {
        Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    let root = as_object(&value, "document")?;
    let mut params = match root.get("params") {
        None => BTreeMap::new(),
        Some(p) => {
            let map = as_object(p, "params")?;
            let mut out = BTreeMap::new();
            for (name, v) in map {
                let locus = format!("params.{name}");
                let value = match v {
                    Value::String(s) => parse_rational(s).map_err(|e| Error::parse(&locus, e.to_string()))?,
                    Value::Number(_) => integer(v, &locus)?,
                    _ => return Err(Error::parse(locus, "parameter values must be rational strings")),
                };
                out.insert(name.clone(), value);
            }
            out
        }
    };
    for (name, value) in overrides {
        if !params.contains_key(name) {
            return Err(Error::parse("params", format!("document declares no parameter {name:?}")));
        }
        params.insert(name.clone(), value.clone());
    }
    let reader = Reader { params };
    let kind = root
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse("kind", "missing document kind"))?;
    Ok(match kind {
        "algebra" => Document::Algebra(reader.algebra(root, "")?),
        "representation" => Document::Representation(reader.representation(root, "")?),
        "module-algebra" => Document::ModuleAlgebra(reader.module_algebra(root, "")?),
        "matched-pair" => Document::MatchedPair(reader.matched_pair(root)?),
        "coalgebra" => Document::Coalgebra(reader.coalgebra(root)?),
        "bialgebra" => Document::Bialgebra(reader.bialgebra(root)?),
        "operator" => Document::Operator(reader.operator(root)?),
        "tridendriform" => Document::Tridendriform(reader.tridendriform(root)?),
        other => return Err(Error::parse("kind", format!("unknown document kind {other:?}"))),
    })
}

fn as_object<'a>(value: &'a Value, locus: &str) -> Result<&'a Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| Error::parse(locus, "expected a JSON object"))
}

fn as_array<'a>(value: &'a Value, locus: &str) -> Result<&'a Vec<Value>> {
    value
        .as_array()
        .ok_or_else(|| Error::parse(locus, "expected a JSON array"))
}

fn integer(value: &Value, locus: &str) -> Result<Rational> {
    value
        .as_i64()
        .map(rat)
        .ok_or_else(|| Error::parse(locus, "numbers must be integers; write fractions as \"p/q\" strings"))
}

fn join(prefix: &str, field: &str) -> String {
    if prefix.is_empty() {
        field.to_string()
    } else {
        format!("{prefix}.{field}")
    }
}

fn check_keys(map: &Map<String, Value>, prefix: &str, allowed: &[&str]) -> Result<()> {
    for key in map.keys() {
        if key != "kind" && key != "params" && !allowed.contains(&key.as_str()) {
            return Err(Error::parse(join(prefix, key), "unknown field"));
        }
    }
    Ok(())
}

fn check_nested_kind(map: &Map<String, Value>, prefix: &str, expected: &str) -> Result<()> {
    match map.get("kind").map(|k| k.as_str()) {
        None => Ok(()),
        Some(Some(k)) if k == expected => Ok(()),
        _ => Err(Error::parse(join(prefix, "kind"), format!("expected kind {expected:?}"))),
    }
}

fn required<'a>(map: &'a Map<String, Value>, prefix: &str, key: &str) -> Result<&'a Value> {
    map.get(key)
        .ok_or_else(|| Error::parse(join(prefix, key), "missing required field"))
}

fn dimension(map: &Map<String, Value>, prefix: &str, key: &str) -> Result<usize> {
    let locus = join(prefix, key);
    let n = required(map, prefix, key)?
        .as_u64()
        .ok_or_else(|| Error::parse(&locus, "expected a non-negative integer"))?;
    if n > MAX_DIM as u64 {
        return Err(Error::parse(locus, format!("dimension {n} exceeds the limit of {MAX_DIM}")));
    }
    Ok(n as usize)
}

fn wrap(locus: &str) -> impl Fn(Error) -> Error + '_ {
    let locus = if locus.is_empty() { "document" } else { locus };
    move |e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(locus, other.to_string()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mirror {
    None,
    Symmetric,
    Antisymmetric,
}

struct Reader {
    params: BTreeMap<String, Rational>,
}

impl Reader {
    fn scalar(&self, value: &Value, locus: &str) -> Result<Rational> {
        match value {
            Value::Number(_) => integer(value, locus),
            Value::String(s) => match parse_rational(s) {
                Ok(r) => Ok(r),
                Err(_) => expr::evaluate(s, &self.params).map_err(|m| Error::parse(locus, m)),
            },
            _ => Err(Error::parse(locus, "expected a rational string or an integer")),
        }
    }

    /// Reads `[a, b, c, coef]` entries into `t[a][b][c]`.
    fn constants(&self, value: &Value, n: usize, locus: &str, mirror: Mirror) -> Result<StructureConstants> {
        let mut seen: BTreeMap<(usize, usize, usize), (Rational, String)> = BTreeMap::new();
        for (pos, entry) in as_array(value, locus)?.iter().enumerate() {
            let here = format!("{locus}[{pos}]");
            let items = as_array(entry, &here)?;
            if items.len() != 4 {
                return Err(Error::parse(here, "entries have the form [i, j, k, coefficient]"));
            }
            let mut idx = [0usize; 3];
            for (slot, item) in idx.iter_mut().zip(items) {
                let i = item.as_u64().unwrap_or(0) as usize;
                if i == 0 || i > n {
                    return Err(Error::parse(&here, format!("indices must be integers in 1..={n}")));
                }
                *slot = i - 1;
            }
            let [a, b, c] = idx;
            let v = self.scalar(&items[3], &here)?;
            if mirror == Mirror::Antisymmetric && a == b && !v.is_zero() {
                return Err(Error::parse(here, "an antisymmetric bracket has no diagonal entries"));
            }
            let mut implied = vec![((a, b, c), v.clone())];
            match mirror {
                Mirror::Symmetric if a != b => implied.push(((b, a, c), v)),
                Mirror::Antisymmetric if a != b => implied.push(((b, a, c), -v)),
                _ => {}
            }
            for (key, v) in implied {
                if let Some((old, origin)) = seen.get(&key) {
                    if *old != v {
                        return Err(Error::parse(here, format!("contradicts {origin}")));
                    }
                } else {
                    seen.insert(key, (v, here.clone()));
                }
            }
        }
        Ok(StructureConstants::from_entries(n, seen.into_iter().map(|((a, b, c), (v, _))| (a, b, c, v)))
            .expect("indices validated"))
    }

    fn matrix(&self, value: &Value, rows: usize, cols: usize, locus: &str) -> Result<LinearMap> {
        let list = as_array(value, locus)?;
        if list.len() != rows {
            return Err(Error::parse(locus, format!("expected {rows} rows, found {}", list.len())));
        }
        let mut m = LinearMap::zeros(rows, cols);
        for (r, row) in list.iter().enumerate() {
            let here = format!("{locus}[{r}]");
            let items = as_array(row, &here)?;
            if items.len() != cols {
                return Err(Error::parse(here, format!("expected {cols} columns, found {}", items.len())));
            }
            for (c, item) in items.iter().enumerate() {
                m.set(r, c, self.scalar(item, &format!("{here}[{c}]"))?);
            }
        }
        Ok(m)
    }

    fn family(&self, value: &Value, count: usize, size: usize, locus: &str) -> Result<Vec<LinearMap>> {
        let list = as_array(value, locus)?;
        if list.len() != count {
            return Err(Error::parse(
                locus,
                format!("expected one matrix per basis vector ({count}), found {}", list.len()),
            ));
        }
        list.iter()
            .enumerate()
            .map(|(i, m)| self.matrix(m, size, size, &format!("{locus}[{i}]")))
            .collect()
    }

    fn nested<'a>(&self, map: &'a Map<String, Value>, prefix: &str, key: &str) -> Result<(&'a Map<String, Value>, String)> {
        let locus = join(prefix, key);
        Ok((as_object(required(map, prefix, key)?, &locus)?, locus))
    }

    fn algebra(&self, map: &Map<String, Value>, prefix: &str) -> Result<AlgebraData> {
        check_nested_kind(map, prefix, "algebra")?;
        check_keys(map, prefix, &["algebra_kind", "dim", "product", "bracket"])?;
        let kind_locus = join(prefix, "algebra_kind");
        let kind = required(map, prefix, "algebra_kind")?
            .as_str()
            .and_then(AlgebraKind::from_name)
            .ok_or_else(|| {
                Error::parse(
                    &kind_locus,
                    "expected one of assoc, comm-assoc, almost-poisson, awb-left, awb-right",
                )
            })?;
        let n = dimension(map, prefix, "dim")?;
        let symmetric = matches!(kind, AlgebraKind::CommAssoc | AlgebraKind::AlmostPoisson);
        let product = match map.get("product") {
            Some(v) => self.constants(
                v,
                n,
                &join(prefix, "product"),
                if symmetric { Mirror::Symmetric } else { Mirror::None },
            )?,
            None => StructureConstants::square(n),
        };
        let bracket_mirror = if kind == AlgebraKind::AlmostPoisson {
            Mirror::Antisymmetric
        } else {
            Mirror::None
        };
        let bracket = match map.get("bracket") {
            Some(v) => Some(self.constants(v, n, &join(prefix, "bracket"), bracket_mirror)?),
            None if kind.needs_bracket() => Some(StructureConstants::square(n)),
            None => None,
        };
        AlgebraData::new(kind, product, bracket).map_err(wrap(prefix))
    }

    fn representation(&self, map: &Map<String, Value>, prefix: &str) -> Result<RepresentationData> {
        check_nested_kind(map, prefix, "representation")?;
        check_keys(map, prefix, &REPRESENTATION_FIELDS)?;
        self.representation_fields(map, prefix)
    }

    fn representation_fields(&self, map: &Map<String, Value>, prefix: &str) -> Result<RepresentationData> {
        let (base_map, base_locus) = self.nested(map, prefix, "base")?;
        let base = self.algebra(base_map, &base_locus)?;
        let size = dimension(map, prefix, "carrier_dim")?;
        let n = base.dim();
        let fam = |key: &str| -> Result<Option<Vec<LinearMap>>> {
            map.get(key)
                .map(|v| self.family(v, n, size, &join(prefix, key)))
                .transpose()
        };
        let present: Vec<&str> = ["mu", "rho", "l", "r", "bracket_left", "bracket_right"]
            .into_iter()
            .filter(|k| map.contains_key(*k))
            .collect();
        let actions = match present.as_slice() {
            ["mu"] => Actions::Assoc { mu: fam("mu")?.unwrap() },
            ["mu", "rho"] => Actions::AlmostPoisson {
                mu: fam("mu")?.unwrap(),
                rho: fam("rho")?.unwrap(),
            },
            ["l", "r", "bracket_left", "bracket_right"] => Actions::Awb {
                l: fam("l")?.unwrap(),
                r: fam("r")?.unwrap(),
                bracket_left: fam("bracket_left")?.unwrap(),
                bracket_right: fam("bracket_right")?.unwrap(),
            },
            _ => {
                return Err(Error::parse(
                    if prefix.is_empty() { "actions" } else { prefix },
                    "actions must be {mu}, {mu, rho} or {l, r, bracket_left, bracket_right}",
                ))
            }
        };
        RepresentationData::new(base, size, actions).map_err(wrap(prefix))
    }

    fn module_algebra(&self, map: &Map<String, Value>, prefix: &str) -> Result<ModuleAlgebraData> {
        check_nested_kind(map, prefix, "module-algebra")?;
        let mut allowed = REPRESENTATION_FIELDS.to_vec();
        allowed.extend(["carrier_product", "carrier_bracket"]);
        check_keys(map, prefix, &allowed)?;
        let rep = self.representation_fields(map, prefix)?;
        let m = rep.carrier_dim();
        let product = match map.get("carrier_product") {
            Some(v) => self.constants(v, m, &join(prefix, "carrier_product"), Mirror::Symmetric)?,
            None => StructureConstants::square(m),
        };
        let bracket = map
            .get("carrier_bracket")
            .map(|v| self.constants(v, m, &join(prefix, "carrier_bracket"), Mirror::Antisymmetric))
            .transpose()?;
        ModuleAlgebraData::new(rep, product, bracket).map_err(wrap(prefix))
    }

    fn matched_pair(&self, map: &Map<String, Value>) -> Result<MatchedPairData> {
        check_keys(map, "", &["a1", "a2", "mu1", "rho1", "mu2", "rho2"])?;
        let (m1, l1) = self.nested(map, "", "a1")?;
        let (m2, l2) = self.nested(map, "", "a2")?;
        let a1 = self.algebra(m1, &l1)?;
        let a2 = self.algebra(m2, &l2)?;
        let (n1, n2) = (a1.dim(), a2.dim());
        let mu1 = self.family(required(map, "", "mu1")?, n1, n2, "mu1")?;
        let mu2 = self.family(required(map, "", "mu2")?, n2, n1, "mu2")?;
        let rho1 = map.get("rho1").map(|v| self.family(v, n1, n2, "rho1")).transpose()?;
        let rho2 = map.get("rho2").map(|v| self.family(v, n2, n1, "rho2")).transpose()?;
        MatchedPairData::new(a1, a2, mu1, rho1, mu2, rho2).map_err(wrap("matched-pair"))
    }

    fn coalgebra_tensors(&self, map: &Map<String, Value>, n: usize) -> Result<CoalgebraData> {
        let tensor = |key: &str| match map.get(key) {
            Some(v) => self.constants(v, n, key, Mirror::None),
            None => Ok(StructureConstants::square(n)),
        };
        CoalgebraData::new(tensor("coproduct")?, tensor("cobracket")?).map_err(wrap("coalgebra"))
    }

    fn coalgebra(&self, map: &Map<String, Value>) -> Result<CoalgebraData> {
        check_keys(map, "", &["dim", "coproduct", "cobracket"])?;
        let n = dimension(map, "", "dim")?;
        self.coalgebra_tensors(map, n)
    }

    fn bialgebra(&self, map: &Map<String, Value>) -> Result<BialgebraData> {
        check_keys(map, "", &["algebra", "coproduct", "cobracket"])?;
        let (m, locus) = self.nested(map, "", "algebra")?;
        let algebra = self.algebra(m, &locus)?;
        let coalgebra = self.coalgebra_tensors(map, algebra.dim())?;
        BialgebraData::new(algebra, coalgebra).map_err(wrap("bialgebra"))
    }

    fn operator(&self, map: &Map<String, Value>) -> Result<OperatorData> {
        check_keys(map, "", &["operator_kind", "map", "weight", "module", "representation"])?;
        let kind = required(map, "", "operator_kind")?.as_str();
        match kind {
            Some("rota-baxter") => {
                let (m, locus) = self.nested(map, "", "module")?;
                let module = self.module_algebra(m, &locus)?;
                let rep = module.rep();
                let k = self.matrix(required(map, "", "map")?, rep.base().dim(), rep.carrier_dim(), "map")?;
                let weight = self.scalar(required(map, "", "weight")?, "weight")?;
                OperatorData::rota_baxter(k, module, weight).map_err(wrap("operator"))
            }
            Some("averaging") => {
                if map.contains_key("weight") {
                    return Err(Error::parse("weight", "averaging operators carry no weight"));
                }
                let (m, locus) = self.nested(map, "", "representation")?;
                let rep = self.representation(m, &locus)?;
                let k = self.matrix(required(map, "", "map")?, rep.base().dim(), rep.carrier_dim(), "map")?;
                OperatorData::averaging(k, rep).map_err(wrap("operator"))
            }
            _ => Err(Error::parse("operator_kind", "expected \"rota-baxter\" or \"averaging\"")),
        }
    }

    fn tridendriform(&self, map: &Map<String, Value>) -> Result<TridendriformData> {
        check_keys(map, "", &["dim", "bracket", "diamond", "dot", "triangle"])?;
        let n = dimension(map, "", "dim")?;
        let op = |key: &str| match map.get(key) {
            Some(v) => self.constants(v, n, key, Mirror::None),
            None => Ok(StructureConstants::square(n)),
        };
        TridendriformData::new(op("bracket")?, op("diamond")?, op("dot")?, op("triangle")?)
            .map_err(wrap("tridendriform"))
    }
}

const REPRESENTATION_FIELDS: [&str; 8] = [
    "base",
    "carrier_dim",
    "mu",
    "rho",
    "l",
    "r",
    "bracket_left",
    "bracket_right",
];

fn scalar_value(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn constants_value(c: &StructureConstants) -> Value {
    Value::Array(
        c.nonzero_entries()
            .map(|(a, b, k, v)| {
                Value::Array(vec![
                    Value::from(a + 1),
                    Value::from(b + 1),
                    Value::from(k + 1),
                    scalar_value(v),
                ])
            })
            .collect(),
    )
}

fn matrix_value(m: &LinearMap) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array((0..m.cols()).map(|c| scalar_value(m.get(r, c))).collect()))
            .collect(),
    )
}

fn family_value(f: &[LinearMap]) -> Value {
    Value::Array(f.iter().map(matrix_value).collect())
}

fn object(kind: Option<&str>, fields: Vec<(&str, Value)>) -> Map<String, Value> {
    let mut map = Map::new();
    if let Some(kind) = kind {
        map.insert("kind".into(), Value::from(kind));
    }
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    map
}

fn algebra_value(a: &AlgebraData, kind: Option<&str>) -> Map<String, Value> {
    let mut fields = vec![
        ("algebra_kind", Value::from(a.kind().name())),
        ("dim", Value::from(a.dim())),
        ("product", constants_value(a.product())),
    ];
    if let Some(b) = a.bracket() {
        fields.push(("bracket", constants_value(b)));
    }
    object(kind, fields)
}

fn representation_value(rep: &RepresentationData, kind: Option<&str>) -> Map<String, Value> {
    let mut fields = vec![
        ("base", Value::Object(algebra_value(rep.base(), None))),
        ("carrier_dim", Value::from(rep.carrier_dim())),
    ];
    match rep.actions() {
        Actions::Assoc { mu } => fields.push(("mu", family_value(mu))),
        Actions::AlmostPoisson { mu, rho } => {
            fields.push(("mu", family_value(mu)));
            fields.push(("rho", family_value(rho)));
        }
        Actions::Awb {
            l,
            r,
            bracket_left,
            bracket_right,
        } => {
            fields.push(("l", family_value(l)));
            fields.push(("r", family_value(r)));
            fields.push(("bracket_left", family_value(bracket_left)));
            fields.push(("bracket_right", family_value(bracket_right)));
        }
    }
    object(kind, fields)
}

fn module_value(m: &ModuleAlgebraData, kind: Option<&str>) -> Map<String, Value> {
    let mut map = representation_value(m.rep(), kind);
    map.insert("carrier_product".into(), constants_value(m.carrier_product()));
    if let Some(b) = m.carrier_bracket() {
        map.insert("carrier_bracket".into(), constants_value(b));
    }
    map
}

/// The document as a JSON value; parameters appear already substituted.
pub fn to_value(doc: &Document) -> Value {
    let kind = Some(doc.kind_name());
    Value::Object(match doc {
        Document::Algebra(a) => algebra_value(a, kind),
        Document::Representation(r) => representation_value(r, kind),
        Document::ModuleAlgebra(m) => module_value(m, kind),
        Document::MatchedPair(mp) => {
            let mut fields = vec![
                ("a1", Value::Object(algebra_value(mp.a1(), None))),
                ("a2", Value::Object(algebra_value(mp.a2(), None))),
                ("mu1", family_value(mp.mu1())),
                ("mu2", family_value(mp.mu2())),
            ];
            if let (Some(r1), Some(r2)) = (mp.rho1(), mp.rho2()) {
                fields.push(("rho1", family_value(r1)));
                fields.push(("rho2", family_value(r2)));
            }
            object(kind, fields)
        }
        Document::Coalgebra(c) => object(
            kind,
            vec![
                ("dim", Value::from(c.dim())),
                ("coproduct", constants_value(c.coproduct())),
                ("cobracket", constants_value(c.cobracket())),
            ],
        ),
        Document::Bialgebra(b) => object(
            kind,
            vec![
                ("algebra", Value::Object(algebra_value(b.algebra(), None))),
                ("coproduct", constants_value(b.coalgebra().coproduct())),
                ("cobracket", constants_value(b.coalgebra().cobracket())),
            ],
        ),
        Document::Operator(op) => {
            let mut fields = vec![("map", matrix_value(op.map()))];
            match op.context() {
                OperatorContext::RotaBaxter { module, weight } => {
                    fields.insert(0, ("operator_kind", Value::from("rota-baxter")));
                    fields.push(("weight", scalar_value(weight)));
                    fields.push(("module", Value::Object(module_value(module, None))));
                }
                OperatorContext::Averaging { rep } => {
                    fields.insert(0, ("operator_kind", Value::from("averaging")));
                    fields.push(("representation", Value::Object(representation_value(rep, None))));
                }
            }
            object(kind, fields)
        }
        Document::Tridendriform(t) => object(
            kind,
            vec![
                ("dim", Value::from(t.dim())),
                ("bracket", constants_value(t.bracket())),
                ("diamond", constants_value(t.diamond())),
                ("dot", constants_value(t.dot())),
                ("triangle", constants_value(t.triangle())),
            ],
        ),
    })
}

/// Serializes with one entry or matrix row per line.
pub fn to_json(doc: &Document) -> String {
    let mut out = String::new();
    render(&to_value(doc), 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|i| !i.is_array() && !i.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

/// Matrices (lists of rows of strings) short enough to fit on one line.
fn is_short_matrix(v: &Value) -> bool {
    let Value::Array(rows) = v else { return false };
    let rows_ok = rows.iter().all(|r| match r {
        Value::Array(items) => is_flat(r) && items.iter().all(Value::is_string),
        _ => false,
    });
    rows_ok && !rows.is_empty() && inline(v).len() <= 72
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(_) if is_short_matrix(v) => out.push_str(&inline(v)),
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (pos, (k, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::from(k.as_str()).to_string());
                out.push_str(": ");
                render(item, indent + 1, out);
                if pos + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if !is_flat(v) && !items.is_empty() => {
            out.push_str("[\n");
            for (pos, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render(item, indent + 1, out);
                if pos + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        other => out.push_str(&inline(other)),
    }
}
