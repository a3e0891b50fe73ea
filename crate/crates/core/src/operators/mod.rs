//! Linear operators `V → A`: weighted relative Rota-Baxter operators and
//! relative averaging operators, with the structures they induce on `V`.

mod averaging;
mod rota_baxter;

pub use averaging::{
    check_nijenhuis_awb, check_relative_averaging, check_relative_averaging_with,
    graph_subalgebra_check, induced_awb, induced_awb_with, nijenhuis_from_operator,
};
pub use rota_baxter::{
    associated_ap, check_homomorphism, check_tridendriform, check_weighted_rrb, dendrify,
    TridendriformData,
};

use crate::error::{expect_dim, Error, Result};
use crate::exact::Rational;
use crate::linalg::LinearMap;
use crate::representation::{Actions, ModuleAlgebraData, RepresentationData};

/// What an operator is checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorContext {
    RotaBaxter {
        module: ModuleAlgebraData,
        weight: Rational,
    },
    Averaging {
        rep: RepresentationData,
    },
}

/// Which action appears on the right of the averaging bracket condition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BracketForm {
    /// `[𝒦(u), 𝒦(v)] = 𝒦(ϱ(𝒦(u))v)`
    #[default]
    Rho,
    /// `[𝒦(u), 𝒦(v)] = 𝒦(μ(𝒦(u))v)`
    Mu,
}

impl BracketForm {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "rho" => Some(BracketForm::Rho),
            "mu" => Some(BracketForm::Mu),
            _ => None,
        }
    }
}

/// A linear map `V → A` (matrix of shape `dim A × dim V`) with its context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorData {
    map: LinearMap,
    context: OperatorContext,
}

impl OperatorData {
    pub fn rota_baxter(map: LinearMap, module: ModuleAlgebraData, weight: Rational) -> Result<Self> {
        let rep = module.rep();
        Self::check_shape(&map, rep)?;
        Ok(OperatorData {
            map,
            context: OperatorContext::RotaBaxter { module, weight },
        })
    }

    pub fn averaging(map: LinearMap, rep: RepresentationData) -> Result<Self> {
        Self::check_shape(&map, &rep)?;
        if let Actions::Awb { .. } = rep.actions() {
            return Err(Error::Profile {
                expected: "{mu} or {mu,rho}",
                found: rep.actions().profile(),
            });
        }
        Ok(OperatorData {
            map,
            context: OperatorContext::Averaging { rep },
        })
    }

    fn check_shape(map: &LinearMap, rep: &RepresentationData) -> Result<()> {
        expect_dim("operator rows (target dimension)", rep.base().dim(), map.rows())?;
        expect_dim("operator columns (source dimension)", rep.carrier_dim(), map.cols())
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn context(&self) -> &OperatorContext {
        &self.context
    }

    pub fn rep(&self) -> &RepresentationData {
        match &self.context {
            OperatorContext::RotaBaxter { module, .. } => module.rep(),
            OperatorContext::Averaging { rep } => rep,
        }
    }

    pub fn weight(&self) -> Option<&Rational> {
        match &self.context {
            OperatorContext::RotaBaxter { weight, .. } => Some(weight),
            OperatorContext::Averaging { .. } => None,
        }
    }

    pub fn source_dim(&self) -> usize {
        self.map.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.map.rows()
    }

    pub(crate) fn averaging_rep(&self) -> Result<&RepresentationData> {
        match &self.context {
            OperatorContext::Averaging { rep } => Ok(rep),
            OperatorContext::RotaBaxter { .. } => {
                Err(Error::input("expected an averaging operator, found a Rota-Baxter operator"))
            }
        }
    }

    pub(crate) fn rota_baxter_parts(&self) -> Result<(&ModuleAlgebraData, &Rational)> {
        match &self.context {
            OperatorContext::RotaBaxter { module, weight } => Ok((module, weight)),
            OperatorContext::Averaging { .. } => {
                Err(Error::input("Rota-Baxter check needs a weight and a module algebra"))
            }
        }
    }
}
