//! Double description method for polyhedral cones `{z : g_k . z >= 0}`.

use num::{Signed, Zero};

use super::linalg::{dot, make_primitive, Q};

#[derive(Clone, Debug)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64).max(1)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, o: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn subset_of(&self, o: &BitSet) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: Vec<Q>,
    zeros: BitSet,
}

/// Generators of a cone: `lineality` spans its largest linear subspace and
/// `rays` are its extreme rays modulo that subspace.
pub struct ConeGenerators {
    pub lineality: Vec<Vec<Q>>,
    pub rays: Vec<Vec<Q>>,
}

fn axpy(v: &mut [Q], t: &Q, l: &[Q]) {
    for (x, y) in v.iter_mut().zip(l) {
        *x = &*x - t * y;
    }
}

pub fn double_description(dim: usize, constraints: &[Vec<Q>]) -> ConeGenerators {
    let n = constraints.len();
    let mut lineality: Vec<Vec<Q>> = (0..dim)
        .map(|i| {
            let mut e = vec![Q::zero(); dim];
            e[i] = super::linalg::int(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (c, g) in constraints.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot(g, l).is_zero()) {
            let l0 = lineality.remove(pos);
            let gl0 = dot(g, &l0);
            for l in lineality.iter_mut() {
                let t = dot(g, l) / &gl0;
                axpy(l, &t, &l0);
                make_primitive(l);
            }
            for r in rays.iter_mut() {
                let t = dot(g, &r.v) / &gl0;
                axpy(&mut r.v, &t, &l0);
                make_primitive(&mut r.v);
                r.zeros.set(c);
            }
            let mut v = l0;
            if gl0.is_negative() {
                for x in v.iter_mut() {
                    *x = -&*x;
                }
            }
            let mut zeros = BitSet::new(n);
            for k in 0..c {
                zeros.set(k);
            }
            rays.push(Ray { v, zeros });
            continue;
        }

        let vals: Vec<Q> = rays.iter().map(|r| dot(g, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                let blocked = (0..rays.len())
                    .any(|r| r != p && r != q && common.subset_of(&rays[r].zeros));
                if blocked {
                    continue;
                }
                let mut v: Vec<Q> = rays[q].v.iter().map(|x| x * &vals[p]).collect();
                axpy(&mut v, &vals[q], &rays[p].v);
                make_primitive(&mut v);
                let mut zeros = common;
                zeros.set(c);
                created.push(Ray { v, zeros });
            }
        }
        let old = std::mem::take(&mut rays);
        for (k, mut r) in old.into_iter().enumerate() {
            if vals[k].is_zero() {
                r.zeros.set(c);
                rays.push(r);
            } else if vals[k].is_positive() {
                rays.push(r);
            }
        }
        rays.extend(created);
    }

    ConeGenerators {
        lineality,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}
