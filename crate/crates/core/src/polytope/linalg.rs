//! Exact rational linear algebra on dense row-major matrices.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type Q = BigRational;

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Reduces `m` in place to reduced row echelon form, dropping zero rows.
/// Columns are visited in `col_order`. Returns pivot columns per row.
pub fn rref_with_order(m: &mut Vec<Vec<Q>>, col_order: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for &c in col_order {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][c].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..m[r].len() {
                    let delta = &f * &m[row][k];
                    m[r][k] = &m[r][k] - delta;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    m.truncate(row);
    pivots
}

pub fn rref(m: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let ncols = m.first().map_or(0, |r| r.len());
    let order: Vec<usize> = (0..ncols).collect();
    rref_with_order(m, &order)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : rows * x = 0}` in `ncols` unknowns.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scales `v` by a positive rational so its entries are coprime integers.
pub fn make_primitive(v: &mut [Q]) {
    let mut lcm = BigInt::one();
    for x in v.iter() {
        lcm = lcm.lcm(x.denom());
    }
    let mut g = BigInt::zero();
    for x in v.iter() {
        let n = x.numer() * (&lcm / x.denom());
        g = g.gcd(&n);
    }
    if g.is_zero() {
        return;
    }
    let scale = Q::new(lcm, g.abs());
    for x in v.iter_mut() {
        *x = &*x * &scale;
    }
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn int(v: i64) -> Q {
    Q::from_integer(v.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = vec![row(&[1, 1, 1]), row(&[2, 2, 2]), row(&[0, 1, -1])];
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for r in &m {
            assert!(dot(r, &ns[0]).is_zero());
        }
    }

    #[test]
    fn primitive_vectors() {
        let mut v = vec![Q::new(1.into(), 2.into()), Q::new((-3).into(), 4.into()), int(0)];
        make_primitive(&mut v);
        assert_eq!(v, row(&[2, -3, 0]));
    }
}
