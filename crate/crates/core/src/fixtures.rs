//! The bundled fixture corpus, also shipped as files under `fixtures/`.

use crate::document::{parse_document, parse_document_with, Document};
use crate::error::{Error, Result};
use crate::exact::Rational;
use std::collections::BTreeMap;

macro_rules! corpus {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name, ".json")))),*]
    };
}

/// `(name, source)` for every bundled fixture.
pub const CORPUS: &[(&str, &str)] = corpus!(
    "awb2d",
    "awb2d-parametric",
    "awb2d-broken",
    "awb2d-regular-rep",
    "ap3d-example",
    "ap3d-decoupled",
    "ap3d-coupled",
    "ap2d-broken",
    "avg-3d",
    "avg-3d-broken",
    "lie2d",
    "adjoint-rep-lie2d",
    "comm2d",
    "noncomm2d",
    "zero-cobracket-2d",
    "bialgebra-2d",
    "bialgebra-2d-broken",
    "coalgebra-1d",
    "coalgebra-noncocomm-2d",
    "matched-pair-dual-2d",
    "rb-identity-lie2d",
    "rb-projection-3d",
    "tridendriform-lie2d",
);

pub fn names() -> impl Iterator<Item = &'static str> {
    CORPUS.iter().map(|(name, _)| *name)
}

pub fn source(name: &str) -> Option<&'static str> {
    CORPUS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

pub fn load(name: &str) -> Result<Document> {
    parse_document(source(name).ok_or_else(|| unknown(name))?)
}

/// Loads a parametric fixture with the given parameter values.
pub fn load_with(name: &str, params: &BTreeMap<String, Rational>) -> Result<Document> {
    parse_document_with(source(name).ok_or_else(|| unknown(name))?, params)
}

fn unknown(name: &str) -> Error {
    Error::Input(format!("no bundled fixture named {name:?}"))
}
