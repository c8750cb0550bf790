//! Univariate polynomials over QQ, Sturm chains, and exact real root
//! isolation.

use std::cmp::Ordering;
use std::fmt;

use num::{BigRational, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::{format_rational, Polynomial};

/// Dense univariate polynomial, coefficients from the constant term up,
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Reads a polynomial involving only variable `var` over QQ.
    pub fn from_polynomial(p: &Polynomial, var: usize) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (m, c) in p.terms() {
            if m.support().any(|v| v != var) {
                return Err(Error::InvalidArgument(
                    "polynomial is not univariate in the requested variable".into(),
                ));
            }
            let q = c
                .as_rational()
                .ok_or_else(|| Error::UnsupportedField("real roots need QQ coefficients".into()))?;
            let e = m.exponents()[var] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigRational::zero());
            }
            coeffs[e] = q.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            Some(lc) => UniPoly::new(self.coeffs.iter().map(|c| c / lc).collect()),
            None => self.clone(),
        }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        UniPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) - other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (UniPoly::new(Vec::new()), self.clone());
        };
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / lc;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.div_rem(d).1
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `f / gcd(f, f')`.
    pub fn square_free(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    fn sign_at(&self, b: &Bound) -> Ordering {
        match b {
            Bound::Finite(x) => sign(&self.eval(x)),
            Bound::PosInf => self.leading_coeff().map_or(Ordering::Equal, sign),
            Bound::NegInf => match self.leading_coeff() {
                None => Ordering::Equal,
                Some(lc) if self.coeffs.len() % 2 == 1 => sign(lc),
                Some(lc) => sign(lc).reverse(),
            },
        }
    }
}

fn sign(q: &BigRational) -> Ordering {
    if q.is_positive() {
        Ordering::Greater
    } else if q.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let one = abs == BigRational::from_integer(1.into());
            match k {
                0 => write!(f, "{}", format_rational(&abs))?,
                _ => {
                    if !one {
                        write!(f, "{}*", format_rational(&abs))?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Interval endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Bound {
    pub fn int(v: i64) -> Bound {
        Bound::Finite(BigRational::from_integer(v.into()))
    }
}

struct SturmChain(Vec<UniPoly>);

impl SturmChain {
    fn new(f: &UniPoly) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(UniPoly::new(r.coeffs.into_iter().map(|c| -c).collect()));
        }
        SturmChain(chain)
    }

    fn variations(&self, at: &Bound) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.0 {
            let s = p.sign_at(at);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Roots in the half-open interval `(a, b]`.
    fn count_half_open(&self, a: &Bound, b: &Bound) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    fn count_open(&self, a: &Bound, b: &Bound) -> usize {
        let n = self.count_half_open(a, b);
        match b {
            Bound::Finite(x) if self.0[0].eval(x).is_zero() => n - 1,
            _ => n,
        }
    }
}

/// Number of distinct real roots of `f` in the open interval `(a, b)`.
pub fn sturm_count(f: &UniPoly, a: &Bound, b: &Bound) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("Sturm count of the zero polynomial".into()));
    }
    if bound_cmp(a, b) != Ordering::Less {
        return Ok(0);
    }
    let sf = f.square_free();
    if sf.degree() == Some(0) {
        return Ok(0);
    }
    Ok(SturmChain::new(&sf).count_open(a, b))
}

fn bound_cmp(a: &Bound, b: &Bound) -> Ordering {
    match (a, b) {
        (Bound::Finite(x), Bound::Finite(y)) => x.cmp(y),
        (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, Bound::PosInf) => Ordering::Equal,
        (Bound::NegInf, _) | (_, Bound::PosInf) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

/// A real root of a square-free polynomial: either an exact rational or
/// the unique root in an open interval `(lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealRoot {
    Exact(BigRational),
    Interval(BigRational, BigRational),
}

/// Maximum number of bisections spent refining one root.
pub const MAX_BISECTIONS: usize = 128;

/// Isolates the distinct roots of `f` in the open interval `(lo, hi)`.
pub fn isolate_roots(f: &UniPoly, lo: &BigRational, hi: &BigRational) -> Result<Vec<RealRoot>> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot isolate roots of zero".into()));
    }
    let sf = f.square_free();
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&sf);
    let mut out = Vec::new();
    isolate_rec(&sf, &chain, lo.clone(), hi.clone(), 0, &mut out)?;
    Ok(out)
}

fn isolate_rec(
    f: &UniPoly,
    chain: &SturmChain,
    lo: BigRational,
    hi: BigRational,
    depth: usize,
    out: &mut Vec<RealRoot>,
) -> Result<()> {
    let n = chain.count_open(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()));
    if n == 0 {
        return Ok(());
    }
    if n == 1 {
        if f.degree() == Some(1) {
            let c = f.coeffs();
            out.push(RealRoot::Exact(-&c[0] / &c[1]));
        } else {
            out.push(RealRoot::Interval(lo, hi));
        }
        return Ok(());
    }
    if depth >= MAX_BISECTIONS * 4 {
        return Err(Error::CannotCertify("root isolation did not separate roots".into()));
    }
    let mid = (&lo + &hi) / BigRational::from_integer(2.into());
    isolate_rec(f, chain, lo, mid.clone(), depth + 1, out)?;
    if f.eval(&mid).is_zero() {
        out.push(RealRoot::Exact(mid.clone()));
    }
    isolate_rec(f, chain, mid, hi, depth + 1, out)
}

/// Sign of `q(alpha)`, where `alpha` is the root of the square-free `f`
/// described by `root`.
pub fn sign_at_root(f: &UniPoly, root: &RealRoot, q: &UniPoly) -> Result<Ordering> {
    let (mut lo, mut hi) = match root {
        RealRoot::Exact(x) => return Ok(sign(&q.eval(x))),
        RealRoot::Interval(lo, hi) => (lo.clone(), hi.clone()),
    };
    if q.is_zero() {
        return Ok(Ordering::Equal);
    }
    if q.degree() == Some(0) {
        return Ok(sign(&q.coeffs[0]));
    }
    let f = f.square_free();
    let g = f.gcd(q);
    if g.degree().unwrap_or(0) > 0
        && sturm_count(&g, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))? > 0
    {
        return Ok(Ordering::Equal);
    }
    let fchain = SturmChain::new(&f);
    let qs = q.square_free();
    let qchain = SturmChain::new(&qs);
    let two = BigRational::from_integer(2.into());
    for _ in 0..=MAX_BISECTIONS {
        let (a, b) = (Bound::Finite(lo.clone()), Bound::Finite(hi.clone()));
        if qchain.count_open(&a, &b) == 0 {
            let mid = (&lo + &hi) / &two;
            return Ok(sign(&q.eval(&mid)));
        }
        let mid = (&lo + &hi) / &two;
        if f.eval(&mid).is_zero() {
            return Ok(sign(&q.eval(&mid)));
        }
        if fchain.count_open(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone())) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::CannotCertify(format!(
        "sign not resolved after {MAX_BISECTIONS} bisections"
    )))
}
