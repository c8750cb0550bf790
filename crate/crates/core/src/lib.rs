//! Exact computations on finite normal-form games.
//!
//! Payoff tensors live in [`gametensor`]. Polynomial rings, ideals and
//! Gröbner bases are in [`polyring`] and [`groebner`]. On top of those:
//! totally mixed Nash equilibria ([`nash`]), correlated equilibrium
//! polytopes ([`correlated`], built on [`polytope`]), Spohn varieties
//! ([`spohn`]) and their intersection with conditional independence
//! models ([`ci`]).
//!
//! ```
//! use gametheory::gametensor::Game;
//! use gametheory::correlated::correlated_equilibria;
//!
//! let ce = correlated_equilibria(&Game::bach_or_stravinsky()).unwrap();
//! assert_eq!(ce.f_vector().unwrap(), vec![5, 9, 6, 1]);
//! ```

pub mod ci;
pub mod cli;
pub mod correlated;
pub mod error;
pub mod gamefile;
pub mod gametensor;
pub mod groebner;
pub mod nash;
pub mod polytope;
pub mod spohn;
pub mod polyring;

pub use error::{Error, Result};
