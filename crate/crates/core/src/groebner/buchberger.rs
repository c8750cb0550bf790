//! Buchberger's algorithm with the Gebauer–Möller pair criteria.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{sub_mul_term, Monomial, MonomialOrder, Polynomial, Ring, Term};

use super::GbConfig;

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Working set: every polynomial ever added stays in `polys`; `active`
/// marks the current basis.
struct Basis<'a> {
    order: &'a MonomialOrder,
    polys: Vec<Vec<Term>>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    steps: u64,
    budget: u64,
}

impl Basis<'_> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded {
                steps: self.steps - 1,
                context: String::new(),
            });
        }
        Ok(())
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        (0..self.polys.len()).find(|&k| self.active[k] && self.lm(k).divides(m))
    }

    /// Full (top and tail) reduction of `p` by the active polynomials,
    /// returned monic.
    fn reduce(&mut self, p: Vec<Term>) -> Result<Vec<Term>> {
        let mut rem = p;
        let mut start = 0;
        let mut out: Vec<Term> = Vec::new();
        while start < rem.len() {
            let (m, c) = &rem[start];
            match self.find_divisor(m) {
                Some(k) => {
                    self.tick()?;
                    let q = self.lm(k).quotient_of(m);
                    let c = c.clone();
                    rem = sub_mul_term(&rem[start..], &c, &q, &self.polys[k], self.order);
                    start = 0;
                }
                None => {
                    out.push(rem[start].clone());
                    start += 1;
                }
            }
        }
        Ok(make_monic(out))
    }

    fn s_poly(&self, i: usize, j: usize, lcm: &Monomial) -> Vec<Term> {
        let qi = self.lm(i).quotient_of(lcm);
        let qj = self.lm(j).quotient_of(lcm);
        let one = self.polys[i][0].1.field().one();
        let left: Vec<Term> = self.polys[i][1..]
            .iter()
            .map(|(m, c)| (m.mul(&qi), c.clone()))
            .collect();
        sub_mul_term(&left, &one, &qj, &self.polys[j][1..], self.order)
    }
}

fn make_monic(mut terms: Vec<Term>) -> Vec<Term> {
    if let Some((_, lc)) = terms.first() {
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero");
            for (_, c) in terms.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
    terms
}

/// Gebauer–Möller update for a new basis element `h`.
fn update(basis: &mut Basis<'_>, pairs: &mut Vec<Pair>, h: usize) {
    let lm_h = basis.lm(h).clone();
    let sugar_h = basis.sugar[h];
    let candidates: Vec<usize> = (0..h).filter(|&g| basis.active[g]).collect();
    let lcms: Vec<Monomial> = candidates.iter().map(|&g| lm_h.lcm(basis.lm(g))).collect();

    // Chain criterion among the new pairs.
    let mut keep = vec![true; candidates.len()];
    for a in 0..candidates.len() {
        let coprime = lm_h.is_coprime(basis.lm(candidates[a]));
        if coprime {
            continue;
        }
        for b in 0..candidates.len() {
            if a == b || !keep[b] {
                continue;
            }
            if lcms[b].divides(&lcms[a]) && (lcms[b] != lcms[a] || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    // Product criterion: coprime leading monomials need no pair. A coprime
    // pair with the same lcm as another still removes that one above.
    let mut new_pairs = Vec::new();
    for (k, &g) in candidates.iter().enumerate() {
        if !keep[k] || lm_h.is_coprime(basis.lm(g)) {
            continue;
        }
        let lcm = lcms[k].clone();
        let sugar = (sugar_h + lm_h.quotient_of(&lcm).degree())
            .max(basis.sugar[g] + basis.lm(g).quotient_of(&lcm).degree());
        new_pairs.push(Pair {
            i: g,
            j: h,
            lcm,
            sugar,
        });
    }

    // Old pairs made redundant by h.
    pairs.retain(|p| {
        let kills = lm_h.divides(&p.lcm)
            && lm_h.lcm(basis.lm(p.i)) != p.lcm
            && lm_h.lcm(basis.lm(p.j)) != p.lcm;
        !kills
    });
    pairs.extend(new_pairs);

    for g in candidates {
        if lm_h.divides(basis.lm(g)) {
            basis.active[g] = false;
        }
    }
    basis.active[h] = true;
}

/// Reduced Gröbner basis: monic, auto-reduced, sorted by increasing leading
/// monomial.
pub(crate) fn buchberger(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    cfg: &GbConfig,
) -> Result<Vec<Polynomial>> {
    let order = ring.order();
    let mut basis = Basis {
        order,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        steps: 0,
        budget: cfg.budget,
    };
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Vec<Term>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.terms().to_vec())
        .collect();
    // Deterministic insertion: smallest leading monomial first.
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));

    for p in inputs {
        let deg = p.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        let r = basis.reduce(p)?;
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return Ok(vec![ring.one()]);
        }
        basis.polys.push(r);
        basis.sugar.push(deg);
        basis.active.push(false);
        let h = basis.polys.len() - 1;
        update(&mut basis, &mut pairs, h);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = basis.s_poly(pair.i, pair.j, &pair.lcm);
        basis.tick()?;
        let r = basis.reduce(s)?;
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return Ok(vec![ring.one()]);
        }
        basis.polys.push(r);
        basis.sugar.push(pair.sugar);
        basis.active.push(false);
        let h = basis.polys.len() - 1;
        update(&mut basis, &mut pairs, h);
    }

    interreduce(ring, &mut basis)
}

fn interreduce(ring: &Arc<Ring>, basis: &mut Basis<'_>) -> Result<Vec<Polynomial>> {
    let order = ring.order().clone();
    let mut idx: Vec<usize> = (0..basis.polys.len()).filter(|&k| basis.active[k]).collect();
    // Minimal basis: drop elements whose leading monomial is divisible by
    // another's (ties keep the earlier one).
    let snapshot = idx.clone();
    idx.retain(|&k| {
        !snapshot.iter().any(|&o| {
            o != k
                && basis.lm(o).divides(basis.lm(k))
                && (basis.lm(o) != basis.lm(k) || o < k)
        })
    });
    idx.sort_by(|&a, &b| order.cmp(basis.lm(a), basis.lm(b)));
    for &k in &idx {
        basis.active[k] = false;
    }
    let mut out: Vec<Vec<Term>> = Vec::with_capacity(idx.len());
    for &k in &idx {
        for &o in &idx {
            basis.active[o] = o != k;
        }
        let lead = basis.polys[k][0].clone();
        let tail = basis.polys[k][1..].to_vec();
        let mut reduced = vec![lead];
        if !tail.is_empty() {
            let t = basis.reduce_tail(tail)?;
            reduced.extend(t);
        }
        out.push(make_monic(reduced));
    }
    for (slot, &k) in idx.iter().enumerate() {
        basis.polys[k] = out[slot].clone();
    }
    Ok(out
        .into_iter()
        .map(|t| Polynomial::from_sorted(ring.clone(), t))
        .collect())
}

impl Basis<'_> {
    /// Like `reduce` but without normalizing the result.
    fn reduce_tail(&mut self, p: Vec<Term>) -> Result<Vec<Term>> {
        let mut rem = p;
        let mut start = 0;
        let mut out = Vec::new();
        while start < rem.len() {
            let (m, c) = &rem[start];
            match self.find_divisor(m) {
                Some(k) => {
                    self.tick()?;
                    let q = self.lm(k).quotient_of(m);
                    let c = c.clone();
                    rem = sub_mul_term(&rem[start..], &c, &q, &self.polys[k], self.order);
                    start = 0;
                }
                None => {
                    out.push(rem[start].clone());
                    start += 1;
                }
            }
        }
        Ok(out)
    }
}

/// Remainder of `f` on division by a list of monic polynomials (full
/// reduction). The list need not be a Gröbner basis.
pub(crate) fn reduce_by(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let order = ring.order();
    let mut rem = f.terms().to_vec();
    let mut start = 0;
    let mut out = Vec::new();
    while start < rem.len() {
        let (m, c) = &rem[start];
        match divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)))
        {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let q = lm.quotient_of(m);
                let c = c / lc;
                rem = sub_mul_term(&rem[start..], &c, &q, g.terms(), order);
                start = 0;
            }
            None => {
                out.push(rem[start].clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted(ring, out)
}

pub(crate) fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, cf) = f.leading_term().expect("nonzero");
    let (lg, cg) = g.leading_term().expect("nonzero");
    let lcm = lf.lcm(lg);
    let a = f.mul_term(&lf.quotient_of(&lcm), &cf.inv().unwrap());
    let b = g.mul_term(&lg.quotient_of(&lcm), &cg.inv().unwrap());
    &a - &b
}
