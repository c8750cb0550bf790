use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

use super::field::Scalar;
use super::monomial::{Monomial, MonomialOrder};
use super::ring::{Ring, VarName};

pub type Term = (Monomial, Scalar);

/// Sparse polynomial; terms are kept sorted by decreasing monomial under the
/// ring's order and never carry a zero coefficient.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring)
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    /// Builds a polynomial from arbitrary terms: merges repeated monomials,
    /// drops zeros and sorts.
    pub fn from_terms(ring: Arc<Ring>, mut terms: Vec<Term>) -> Self {
        let order = ring.order().clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|(_, c)| c.is_zero()) {
                out.pop();
            }
        }
        Polynomial { ring, terms: out }
    }

    /// Wraps terms already in canonical form.
    pub(crate) fn from_sorted(ring: Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp_monomials(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant term, or zero.
    pub fn constant_coeff(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Indices of variables that occur.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponents()[var]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial::from_sorted(self.ring.clone(), terms)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect();
        Polynomial::from_sorted(self.ring.clone(), terms)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a full assignment indexed like the ring's variables.
    pub fn evaluate_at(&self, values: &[Scalar]) -> Scalar {
        assert_eq!(values.len(), self.ring.nvars());
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &values[i].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Evaluates at a (possibly partial) named assignment covering every
    /// variable that occurs.
    pub fn evaluate(&self, point: &HashMap<VarName, Scalar>) -> Result<Scalar> {
        let field = self.ring.field();
        let mut values = vec![field.zero(); self.ring.nvars()];
        for i in self.support() {
            let v = &self.ring.vars()[i];
            let val = point
                .get(v)
                .ok_or_else(|| Error::MissingAssignment(v.to_string()))?;
            if !field.contains(val) {
                return Err(Error::FieldMismatch(format!(
                    "value for {v} is not in {field}"
                )));
            }
            values[i] = val.clone();
        }
        Ok(self.evaluate_at(&values))
    }

    /// Substitutes a polynomial of `target` for each variable.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Moves the polynomial into `target` through a variable map:
    /// `map[i] = Some(j)` sends variable `i` to variable `j` of `target`.
    /// Fails if a variable mapped to `None` occurs.
    pub fn map_to(&self, target: &Arc<Ring>, map: &[Option<usize>]) -> Result<Polynomial> {
        if target.field() != self.ring.field() {
            return Err(Error::FieldMismatch("cannot map between fields".into()));
        }
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut out = Monomial::one(n);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| {
                    Error::RingMismatch(format!(
                        "variable {} has no image",
                        self.ring.var_name(i)
                    ))
                })?;
                out.exps_mut()[j] += e;
            }
            terms.push((out, c.clone()));
        }
        Ok(Polynomial::from_terms(target.clone(), terms))
    }

    /// Same polynomial viewed in a ring with identical variables but
    /// possibly another order.
    pub fn reorder(&self, target: &Arc<Ring>) -> Polynomial {
        assert_eq!(target.vars(), self.ring.vars());
        Polynomial::from_terms(target.clone(), self.terms.clone())
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn divide_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let (lm, lc) = d.leading_term().unwrap();
        let inv = lc.inv().unwrap();
        let order = self.ring.order().clone();
        let mut rem = self.terms.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.first() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c * &inv;
            rem = sub_mul_term(&rem, &qc, &qm, &d.terms, &order);
            quot.push((qm, qc));
        }
        Some(Polynomial::from_sorted(self.ring.clone(), quot))
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring,
            "polynomials from different rings"
        );
    }
}

/// `a - c * m * b` on canonical term lists.
pub(crate) fn sub_mul_term(
    a: &[Term],
    c: &Scalar,
    m: &Monomial,
    b: &[Term],
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let next_b = |j: usize| -> (Monomial, Scalar) { (b[j].0.mul(m), -&(&b[j].1 * c)) };
    let mut pending: Option<Term> = if b.is_empty() { None } else { Some(next_b(0)) };
    while i < a.len() || pending.is_some() {
        match (a.get(i), pending.as_ref()) {
            (Some(ta), Some(tb)) => match order.cmp(&ta.0, &tb.0) {
                Ordering::Greater => {
                    out.push(ta.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = (j < b.len()).then(|| next_b(j));
                }
                Ordering::Equal => {
                    let s = &ta.1 + &tb.1;
                    if !s.is_zero() {
                        out.push((ta.0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                    pending = (j < b.len()).then(|| next_b(j));
                }
            },
            (Some(ta), None) => {
                out.push(ta.clone());
                i += 1;
            }
            (None, Some(_)) => {
                out.push(pending.take().unwrap());
                j += 1;
                pending = (j < b.len()).then(|| next_b(j));
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn merge(a: &[Term], b: &[Term], negate_b: bool, order: &MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let take_b = |t: &Term| -> Term {
        if negate_b {
            (t.0.clone(), -&t.1)
        } else {
            t.clone()
        }
    };
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(take_b(&b[j]));
                j += 1;
            }
            Ordering::Equal => {
                let s = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !s.is_zero() {
                    out.push((a[i].0.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(take_b));
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let terms = merge(&self.terms, &rhs.terms, false, self.ring.order());
        Polynomial::from_sorted(self.ring.clone(), terms)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let terms = merge(&self.terms, &rhs.terms, true, self.ring.order());
        Polynomial::from_sorted(self.ring.clone(), terms)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                acc.entry(m)
                    .and_modify(|x| *x = &*x + &c)
                    .or_insert(c);
            }
        }
        Polynomial::from_terms(self.ring.clone(), acc.into_iter().collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial::from_sorted(self.ring.clone(), terms)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Terms in decreasing order, `*` between factors, `^` for powers:
    /// `-3*p_{0,0}*p_{1,0} + 2*p_{0,1}^2 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = c.sign_and_abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if abs != "1" || m.is_one() {
                factors.push(abs);
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.var_name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.var_name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
