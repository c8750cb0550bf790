//! Gröbner bases and the ideal-theoretic services built on them: normal
//! forms, ideal equality, dimension and degree, elimination, saturation,
//! and real-root counting for univariate eliminants.

mod buchberger;
mod dimension;
mod ops;
pub mod sturm;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{Ideal, Monomial, Polynomial, Ring};

pub use dimension::{dimension_and_degree, hilbert_numerator, DimDegree};
pub use ops::{eliminate, ideal_equals, intersect, quotient, saturate, saturate_by_all};
pub use sturm::{sturm_count, Bound, UniPoly};

/// Environment variable overriding the default reduction budget.
pub const BUDGET_ENV: &str = "GT_GB_BUDGET";

/// Default number of reduction steps one Gröbner computation may take.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Resource limits for Gröbner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbConfig {
    /// Maximum number of reduction steps per basis computation.
    pub budget: u64,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl GbConfig {
    pub fn with_budget(budget: u64) -> Self {
        GbConfig { budget }
    }

    /// Default config, overridden by `GT_GB_BUDGET` when set and valid.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(GbConfig::with_budget)
            .unwrap_or_default()
    }
}

/// Reduced Gröbner basis of an ideal with respect to its ring's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Monic, auto-reduced, sorted by increasing leading monomial.
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.polys.clone()).expect("same ring")
    }

    /// Unique remainder of `f`; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !(Arc::ptr_eq(f.ring(), &self.ring) || **f.ring() == *self.ring) {
            return Err(Error::RingMismatch(
                "polynomial and basis live in different rings".into(),
            ));
        }
        Ok(buchberger::reduce_by(f, &self.polys))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let s = buchberger::s_polynomial(&self.polys[i], &self.polys[j]);
                if !buchberger::reduce_by(&s, &self.polys).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of `ideal` in its ring's monomial order.
pub fn groebner_basis(ideal: &Ideal, cfg: &GbConfig) -> Result<GroebnerBasis> {
    let polys = buchberger::buchberger(ideal.ring(), ideal.gens(), cfg)?;
    Ok(GroebnerBasis {
        ring: ideal.ring().clone(),
        polys,
    })
}

/// Normal form of `f` with respect to a Gröbner basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}
