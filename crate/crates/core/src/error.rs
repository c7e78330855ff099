//! Crate-wide error type.

use crate::cpx::Cpx;
use crate::planarmaps::DomainTag;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{name} = {value} is outside {expected}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("point {point} lies outside {domain}")]
    OutsideDomain { domain: DomainTag, point: Cpx },

    #[error("|z| = {modulus} exceeds the evaluation radius cap {cap}")]
    BeyondRadiusCap { cap: f64, modulus: f64 },

    #[error("cannot compose: inner map lands in {inner} but outer map expects {outer}")]
    Composition { inner: DomainTag, outer: DomainTag },

    #[error("curve in {curve} cannot be measured with the density of {density}")]
    CurveDensityMismatch { curve: DomainTag, density: DomainTag },

    #[error("value {value} escaped the declared codomain {codomain}")]
    CodomainViolation { codomain: DomainTag, value: Cpx },

    #[error("rejected {rejected} candidate maps in a row; generator starved")]
    GeneratorStarved { rejected: u32 },

    #[error("polyline needs at least 2 vertices, got {0}")]
    DegeneratePolyline(usize),

    #[error("boundary signal needs at least {min} samples, got {got}")]
    SignalTooShort { min: usize, got: usize },

    #[error("signal deserialization failed: {0}")]
    SignalFormat(String),

    #[error("non-finite value produced in {context}")]
    NonFinite { context: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
