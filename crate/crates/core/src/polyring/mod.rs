//! Sparse multivariate polynomials over `QQ` or `ZZ/p`, structured variable
//! names, and ideals.

mod field;
mod monomial;
mod parse;
mod poly;
mod ring;

use std::sync::Arc;

pub use field::{format_rational, parse_rational, CoefField, ModInt, Scalar};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::{Polynomial, Term};
pub(crate) use poly::sub_mul_term;
pub use ring::{Ring, VarName};

use crate::error::{Error, Result};
use crate::gametensor::Format;

/// `probabilityRing`: one variable per pure profile, tensor index order.
pub fn probability_ring(format: &Format, field: CoefField, label: &str) -> Result<Arc<Ring>> {
    Ring::probability(format, field, label)
}

/// `nashEquilibriumRing`: variables `p_{i,j}` ordered by `(i, j)`.
pub fn nash_equilibrium_ring(format: &Format, field: CoefField) -> Result<Arc<Ring>> {
    Ring::nash(format, field)
}

/// An ideal given by generators in a common ring.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: Arc<Ring>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !(Arc::ptr_eq(g.ring(), &ring) || **g.ring() == *ring) {
                return Err(Error::RingMismatch(
                    "generator does not belong to the ideal's ring".into(),
                ));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring, gens })
    }

    pub fn zero(ring: Arc<Ring>) -> Self {
        Ideal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: Arc<Ring>) -> Self {
        let one = ring.one();
        Ideal {
            ring,
            gens: vec![one],
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Ideal sum.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
