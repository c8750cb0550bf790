use crate::error::Result;
use crate::polyring::{Ideal, Monomial, MonomialOrder};

use super::{groebner_basis, GbConfig};

/// Krull dimension of `R/I` and, where defined, its degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimDegree {
    /// `-1` for the unit ideal.
    pub krull_dim: i64,
    /// `None` for the unit ideal and for positive-dimensional
    /// non-homogeneous ideals.
    pub degree: Option<u64>,
}

impl DimDegree {
    pub fn codim(&self, nvars: usize) -> i64 {
        nvars as i64 - self.krull_dim
    }
}

pub fn dimension_and_degree(ideal: &Ideal, cfg: &GbConfig) -> Result<DimDegree> {
    let ring = ideal.ring();
    let grevlex = if *ring.order() == MonomialOrder::Grevlex {
        ring.clone()
    } else {
        ring.with_order(MonomialOrder::Grevlex)?
    };
    let gens = ideal.gens().iter().map(|g| g.reorder(&grevlex)).collect();
    let gb = groebner_basis(&Ideal::new(grevlex, gens)?, cfg)?;
    if gb.is_unit() {
        return Ok(DimDegree {
            krull_dim: -1,
            degree: None,
        });
    }
    let lms = gb.leading_monomials();
    let n = ring.nvars();
    let dim = max_independent_set(n, &lms);
    let degree = if dim == 0 || ideal.is_homogeneous() {
        let num = hilbert_numerator(&lms);
        degree_from_numerator(num, n - dim)
    } else {
        None
    };
    Ok(DimDegree {
        krull_dim: dim as i64,
        degree,
    })
}

fn support_mask(m: &Monomial) -> u128 {
    m.support().fold(0u128, |acc, v| acc | (1u128 << v))
}

/// Size of the largest variable set containing the support of no leading
/// monomial.
fn max_independent_set(n: usize, lms: &[Monomial]) -> usize {
    assert!(n <= 128, "too many variables for dimension search");
    let masks: Vec<u128> = lms.iter().map(support_mask).collect();
    let mut best = 0;
    search(0, n, 0, 0, &masks, &mut best);
    best
}

fn search(v: usize, n: usize, set: u128, size: usize, masks: &[u128], best: &mut usize) {
    if size + (n - v) <= *best {
        return;
    }
    if v == n {
        *best = size;
        return;
    }
    let with = set | (1u128 << v);
    if !masks.iter().any(|&m| m & !with == 0) {
        search(v + 1, n, with, size + 1, masks, best);
    }
    search(v + 1, n, set, size, masks, best);
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^n` of
/// `k[x_1..x_n] / (gens)`, coefficients from `t^0` upward. `n` is the
/// monomials' arity.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    numerator(gens)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let nvars = gens[0].nvars();
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let pivot = (0..nvars).filter(|&v| counts[v] > 1).max_by_key(|&v| counts[v]);
    let Some(x) = pivot else {
        // Pairwise coprime: product of (1 - t^deg).
        let mut acc = vec![1i64];
        for g in &gens {
            acc = mul_one_minus_power(&acc, g.degree() as usize);
        }
        return acc;
    };
    let xm = Monomial::var(nvars, x, 1);
    // I + (x)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponents()[x] == 0).cloned().collect();
    plus.push(xm.clone());
    // I : x
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exponents()[x] > 0 {
                xm.quotient_of(g)
            } else {
                g.clone()
            }
        })
        .collect();
    let a = numerator(minimalize(plus));
    let b = numerator(minimalize(colon));
    let len = a.len().max(b.len() + 1);
    let mut out = vec![0i64; len];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in b.iter().enumerate() {
        out[k + 1] += c;
    }
    trim(out)
}

fn mul_one_minus_power(p: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; p.len() + d];
    for (k, &c) in p.iter().enumerate() {
        out[k] += c;
        out[k + d] -= c;
    }
    trim(out)
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Divides by `(1-t)^codim` and evaluates at 1.
fn degree_from_numerator(mut num: Vec<i64>, codim: usize) -> Option<u64> {
    for _ in 0..codim {
        // synthetic division by (1 - t): q_k = sum_{i<=k} a_i
        let total: i64 = num.iter().sum();
        if total != 0 {
            return None;
        }
        let mut q = Vec::with_capacity(num.len().saturating_sub(1));
        let mut run = 0;
        for &c in &num[..num.len() - 1] {
            run += c;
            q.push(run);
        }
        num = if q.is_empty() { vec![0] } else { q };
    }
    let v: i64 = num.iter().sum();
    u64::try_from(v).ok().filter(|&d| d > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_polynomial, CoefField, Ring, VarName};
    use std::sync::Arc;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(
            names.iter().map(|n| VarName::Aux(n.to_string())).collect(),
            CoefField::Rationals,
            MonomialOrder::Grevlex,
        )
        .unwrap()
    }

    fn dd(r: &Arc<Ring>, gens: &[&str]) -> DimDegree {
        let i = Ideal::new(
            r.clone(),
            gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect(),
        )
        .unwrap();
        dimension_and_degree(&i, &GbConfig::default()).unwrap()
    }

    #[test]
    fn small_cases() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(dd(&r, &[]), DimDegree { krull_dim: 3, degree: Some(1) });
        assert_eq!(dd(&r, &["1"]), DimDegree { krull_dim: -1, degree: None });
        assert_eq!(dd(&r, &["x*y"]), DimDegree { krull_dim: 2, degree: Some(2) });
        assert_eq!(dd(&r, &["x^2 - 1", "y - 2", "z"]), DimDegree { krull_dim: 0, degree: Some(2) });
        assert_eq!(dd(&r, &["x^3", "y", "z^2"]), DimDegree { krull_dim: 0, degree: Some(6) });
        // twisted cubic
        assert_eq!(
            dd(&ring(&["w", "x", "y", "z"]), &["x^2 - w*y", "x*y - w*z", "y^2 - x*z"]),
            DimDegree { krull_dim: 2, degree: Some(3) }
        );
        // affine, positive dimensional, not homogeneous
        assert_eq!(dd(&r, &["x^2 - y"]), DimDegree { krull_dim: 2, degree: None });
    }

    #[test]
    fn numerator_of_simple_ideals() {
        let m = |e: &[u16]| Monomial::from_exponents(e);
        assert_eq!(hilbert_numerator(&[m(&[1, 1])]), vec![1, 0, -1]);
        assert_eq!(hilbert_numerator(&[m(&[1, 0]), m(&[0, 1])]), vec![1, -2, 1]);
        assert_eq!(
            hilbert_numerator(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]),
            vec![1, 0, -3, 2]
        );
    }
}
