//! Self-similar control functions: iterated roots, factor approximants and
//! the shifted-root fixture.

mod factor;
mod root;
mod shifted;

pub use factor::{build_factor_approximant, FactorApproximant};
pub use root::{build_iterated_root, RootApproximant};
pub use shifted::ShiftedRoot;

use crate::error::SelfSimError;
use crate::series::PowerSeries;
use rug::Float;
use serde::{Deserialize, Serialize};

/// Expansion variable used when building a control function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum VarMap {
    #[default]
    Identity,
    /// Even series handled in `z = x^2`.
    Square,
}

impl VarMap {
    pub fn factor(self) -> u32 {
        match self {
            VarMap::Identity => 1,
            VarMap::Square => 2,
        }
    }

    /// Rewrites an x-series in the mapped variable.
    pub fn to_mapped(self, f: &PowerSeries) -> Result<PowerSeries, SelfSimError> {
        Ok(match self {
            VarMap::Identity => f.clone(),
            VarMap::Square => f.to_even_variable()?,
        })
    }

    /// Mapped order needed so the x-series reaches `x_order`.
    pub fn mapped_order(self, x_order: usize) -> usize {
        x_order / self.factor() as usize
    }

    /// x-order needed for a given mapped order.
    pub fn x_order(self, mapped: usize) -> usize {
        mapped * self.factor() as usize
    }
}

/// The reference behaviour `K(x) ~ amplitude * x^exponent` is supplied
/// with a precomputed expansion; used when `K` is a known closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactControl {
    pub series: PowerSeries,
    pub amplitude: Float,
    pub exponent: Float,
}

/// Anything usable as `K(x)` in the corrected scheme.
#[derive(Clone, Debug, PartialEq)]
pub enum ControlFunction {
    Root(RootApproximant),
    Factor(FactorApproximant),
    Shifted(ShiftedRoot),
    Exact(ExactControl),
}

impl ControlFunction {
    /// Expansion of `K` in x through `order`.
    pub fn to_series(&self, order: usize) -> Result<PowerSeries, SelfSimError> {
        match self {
            ControlFunction::Root(r) => Ok(r.to_series(order)),
            ControlFunction::Factor(f) => f.to_series(order),
            ControlFunction::Shifted(s) => Ok(s.to_series(order)),
            ControlFunction::Exact(e) => {
                if e.series.order() < order {
                    return Err(SelfSimError::InsufficientCoefficients {
                        needed: order,
                        available: e.series.order(),
                    });
                }
                Ok(e.series.truncate(order))
            }
        }
    }

    /// Amplitude `B` of `K(x) ~ B x^s` at large x.
    pub fn amplitude(&self) -> Result<Float, SelfSimError> {
        match self {
            ControlFunction::Root(r) => r.amplitude(),
            ControlFunction::Factor(f) => f.amplitude(),
            ControlFunction::Shifted(s) => Ok(s.amplitude()),
            ControlFunction::Exact(e) => Ok(e.amplitude.clone()),
        }
    }

    /// Large-variable exponent `s`.
    pub fn exponent(&self) -> Float {
        match self {
            ControlFunction::Root(r) => r.s().clone(),
            ControlFunction::Factor(f) => f.exponent(),
            ControlFunction::Shifted(s) => Float::new(s.v2.prec()),
            ControlFunction::Exact(e) => e.exponent.clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ControlFunction::Root(_) => "root",
            ControlFunction::Factor(_) => "factor",
            ControlFunction::Shifted(_) => "shifted_root",
            ControlFunction::Exact(_) => "exact",
        }
    }
}
