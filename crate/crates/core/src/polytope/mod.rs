//! Exact rational polytopes: inequality and vertex descriptions, conversion
//! between them, dimension, face counts and membership.

mod dd;
pub mod linalg;

use std::collections::BTreeSet;
use std::fmt;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::format_rational;

pub use linalg::Q;
use linalg::{dot, int, is_zero_vec, make_primitive, nullspace, rank, rref, rref_with_order};

/// Largest number of faces `f_vector` will enumerate.
pub const MAX_FACES: usize = 1_000_000;

/// `normal . x <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: Vec<Q>,
    pub rhs: Q,
}

/// `normal . x = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    pub normal: Vec<Q>,
    pub rhs: Q,
}

impl Halfspace {
    pub fn new(normal: Vec<Q>, rhs: Q) -> Self {
        Halfspace { normal, rhs }
    }

    pub fn satisfied_by(&self, x: &[Q]) -> bool {
        dot(&self.normal, x) <= self.rhs
    }

    pub fn is_tight_at(&self, x: &[Q]) -> bool {
        dot(&self.normal, x) == self.rhs
    }
}

impl Hyperplane {
    pub fn new(normal: Vec<Q>, rhs: Q) -> Self {
        Hyperplane { normal, rhs }
    }

    pub fn satisfied_by(&self, x: &[Q]) -> bool {
        dot(&self.normal, x) == self.rhs
    }
}

fn write_row(f: &mut fmt::Formatter<'_>, v: &[Q]) -> fmt::Result {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    write!(f, "[{}]", parts.join(", "))
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.normal)?;
        write!(f, " . x <= {}", format_rational(&self.rhs))
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.normal)?;
        write!(f, " . x = {}", format_rational(&self.rhs))
    }
}

/// `{x : A x <= b, C x = d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    ambient: usize,
    inequalities: Vec<Halfspace>,
    equations: Vec<Hyperplane>,
}

fn check_width(ambient: usize, w: usize) -> Result<()> {
    if w != ambient {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            got: w,
        });
    }
    Ok(())
}

impl HPolytope {
    pub fn new(
        ambient: usize,
        inequalities: Vec<Halfspace>,
        equations: Vec<Hyperplane>,
    ) -> Result<Self> {
        for h in &inequalities {
            check_width(ambient, h.normal.len())?;
        }
        for h in &equations {
            check_width(ambient, h.normal.len())?;
        }
        Ok(HPolytope {
            ambient,
            inequalities,
            equations,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn inequalities(&self) -> &[Halfspace] {
        &self.inequalities
    }

    pub fn equations(&self) -> &[Hyperplane] {
        &self.equations
    }

    pub fn contains_point(&self, x: &[Q]) -> Result<bool> {
        check_width(self.ambient, x.len())?;
        Ok(self.inequalities.iter().all(|h| h.satisfied_by(x))
            && self.equations.iter().all(|h| h.satisfied_by(x)))
    }

    pub fn vertices(&self) -> Result<VPolytope> {
        vertex_enumeration(self)
    }
}

/// Convex hull of an irredundant vertex list, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    ambient: usize,
    vertices: Vec<Vec<Q>>,
}

impl VPolytope {
    /// Takes the given points as the vertex list (deduplicated and sorted);
    /// use [`VPolytope::convex_hull`] when some points may be redundant.
    pub fn new(ambient: usize, vertices: Vec<Vec<Q>>) -> Result<Self> {
        for v in &vertices {
            check_width(ambient, v.len())?;
        }
        let set: BTreeSet<Vec<Q>> = vertices.into_iter().collect();
        Ok(VPolytope {
            ambient,
            vertices: set.into_iter().collect(),
        })
    }

    pub fn empty(ambient: usize) -> Self {
        VPolytope {
            ambient,
            vertices: Vec::new(),
        }
    }

    pub fn convex_hull(ambient: usize, points: Vec<Vec<Q>>) -> Result<Self> {
        let all = VPolytope::new(ambient, points)?;
        if all.vertices.len() <= 1 {
            return Ok(all);
        }
        all.facets()?.to_hpolytope(ambient)?.vertices()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Vec<Q>] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Affine dimension, `-1` when empty.
    pub fn dim(&self) -> i64 {
        affine_dim(&self.vertices)
    }

    pub fn facets(&self) -> Result<FacetDescription> {
        facet_enumeration(self)
    }

    pub fn f_vector(&self) -> Result<Vec<usize>> {
        f_vector(self)
    }

    /// Exact membership, decided through the facet description.
    pub fn contains_point(&self, x: &[Q]) -> Result<bool> {
        check_width(self.ambient, x.len())?;
        if self.is_empty() {
            return Ok(false);
        }
        let fd = self.facets()?;
        Ok(fd.facets.iter().all(|h| h.satisfied_by(x)) && fd.hull.iter().all(|h| h.satisfied_by(x)))
    }
}

fn affine_dim(points: &[Vec<Q>]) -> i64 {
    let Some(first) = points.first() else {
        return -1;
    };
    let diffs: Vec<Vec<Q>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs) as i64
}

/// Facet inequalities plus the equations of the affine hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetDescription {
    /// Primitive integer rows, reduced modulo the hull equations, sorted.
    pub facets: Vec<Halfspace>,
    pub hull: Vec<Hyperplane>,
}

impl FacetDescription {
    pub fn to_hpolytope(&self, ambient: usize) -> Result<HPolytope> {
        HPolytope::new(ambient, self.facets.clone(), self.hull.clone())
    }
}

/// Vertices of a bounded H-polytope by double description.
pub fn vertex_enumeration(h: &HPolytope) -> Result<VPolytope> {
    let m = h.ambient;
    // Parametrize the affine solution set of the equations: x = x0 + N y.
    let mut aug: Vec<Vec<Q>> = h
        .equations
        .iter()
        .map(|e| {
            let mut r = e.normal.clone();
            r.push(e.rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&m) {
        return Ok(VPolytope::empty(m));
    }
    let mut x0 = vec![Q::zero(); m];
    for (r, &p) in pivots.iter().enumerate() {
        x0[p] = aug[r][m].clone();
    }
    let coeff_rows: Vec<Vec<Q>> = aug.iter().map(|r| r[..m].to_vec()).collect();
    let basis = nullspace(&coeff_rows, m);
    let k = basis.len();

    // Cone over (y, lambda): lambda >= 0 and lambda (b - a.x0) - (a N) y >= 0.
    let mut cons = Vec::with_capacity(h.inequalities.len() + 1);
    let mut lam = vec![Q::zero(); k + 1];
    lam[k] = int(1);
    cons.push(lam);
    for ineq in &h.inequalities {
        let mut g: Vec<Q> = basis.iter().map(|b| -dot(&ineq.normal, b)).collect();
        g.push(&ineq.rhs - dot(&ineq.normal, &x0));
        if is_zero_vec(&g[..k]) {
            if g[k].is_negative() {
                return Ok(VPolytope::empty(m));
            }
            continue;
        }
        cons.push(g);
    }
    let gens = dd::double_description(k + 1, &cons);
    let (finite, recession): (Vec<_>, Vec<_>) =
        gens.rays.into_iter().partition(|r| r[k].is_positive());
    if finite.is_empty() {
        return Ok(VPolytope::empty(m));
    }
    if !gens.lineality.is_empty() || !recession.is_empty() {
        return Err(Error::Unbounded);
    }
    let verts = finite
        .into_iter()
        .map(|r| {
            let lam = &r[k];
            let mut x = x0.clone();
            for (j, b) in basis.iter().enumerate() {
                let yj = &r[j] / lam;
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi = &*xi + &yj * bi;
                }
            }
            x
        })
        .collect();
    VPolytope::new(m, verts)
}

/// Facets and affine hull of a nonempty V-polytope.
pub fn facet_enumeration(v: &VPolytope) -> Result<FacetDescription> {
    if v.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    let m = v.ambient;
    // Valid inequalities (a, beta) with beta - a.v >= 0 for every vertex.
    let cons: Vec<Vec<Q>> = v
        .vertices
        .iter()
        .map(|p| {
            let mut g: Vec<Q> = p.iter().map(|x| -x).collect();
            g.push(int(1));
            g
        })
        .collect();
    let gens = dd::double_description(m + 1, &cons);

    // Hull equations, reduced with beta as the leading column so that facet
    // rows can be brought to a canonical representative.
    let mut lin = gens.lineality.clone();
    let mut order = vec![m];
    order.extend(0..m);
    let lin_pivots = rref_with_order(&mut lin, &order);

    let mut facets = BTreeSet::new();
    for mut r in gens.rays {
        // Rays tight at no vertex are the trivial inequality 0 <= 1.
        let tight = v
            .vertices
            .iter()
            .any(|p| dot(&r[..m], p) == r[m]);
        if !tight {
            continue;
        }
        for (row, &p) in lin.iter().zip(&lin_pivots) {
            if !r[p].is_zero() {
                let t = r[p].clone();
                for (x, y) in r.iter_mut().zip(row) {
                    *x = &*x - &t * y;
                }
            }
        }
        make_primitive(&mut r);
        let rhs = r.pop().unwrap();
        facets.insert(Halfspace::new(r, rhs));
    }

    let mut hull_rows = gens.lineality;
    rref(&mut hull_rows);
    let hull = hull_rows
        .into_iter()
        .map(|mut r| {
            make_primitive(&mut r);
            if r.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                for x in r.iter_mut() {
                    *x = -&*x;
                }
            }
            let rhs = r.pop().unwrap();
            Hyperplane::new(r, rhs)
        })
        .collect();
    Ok(FacetDescription {
        facets: facets.into_iter().collect(),
        hull,
    })
}

/// Face counts by dimension `0..=dim`, from vertex-facet incidences.
pub fn f_vector(v: &VPolytope) -> Result<Vec<usize>> {
    let fd = facet_enumeration(v)?;
    let d = v.dim() as usize;
    let n = v.vertices.len();
    let incid: Vec<Vec<usize>> = fd
        .facets
        .iter()
        .map(|h| (0..n).filter(|&i| h.is_tight_at(&v.vertices[i])).collect())
        .collect();
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = vec![(0..n).collect()];
    faces.insert(frontier[0].clone());
    while let Some(face) = frontier.pop() {
        for fac in &incid {
            let sub: Vec<usize> = face.iter().copied().filter(|i| fac.binary_search(i).is_ok()).collect();
            if sub.is_empty() || sub.len() == face.len() {
                continue;
            }
            if faces.insert(sub.clone()) {
                if faces.len() > MAX_FACES {
                    return Err(Error::BudgetExceeded {
                        steps: MAX_FACES as u64,
                        context: " while enumerating faces".into(),
                    });
                }
                frontier.push(sub);
            }
        }
    }
    let mut counts = vec![0usize; d + 1];
    for f in &faces {
        let pts: Vec<Vec<Q>> = f.iter().map(|&i| v.vertices[i].clone()).collect();
        counts[affine_dim(&pts) as usize] += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn simplex(m: usize) -> HPolytope {
        let ineqs = (0..m)
            .map(|i| {
                let mut a = vec![int(0); m];
                a[i] = int(-1);
                Halfspace::new(a, int(0))
            })
            .collect();
        HPolytope::new(m, ineqs, vec![Hyperplane::new(vec![int(1); m], int(1))]).unwrap()
    }

    #[test]
    fn simplex_conversions() {
        let v = simplex(4).vertices().unwrap();
        assert_eq!(
            v.vertices(),
            &[row(&[0, 0, 0, 1]), row(&[0, 0, 1, 0]), row(&[0, 1, 0, 0]), row(&[1, 0, 0, 0])]
        );
        assert_eq!(v.dim(), 3);
        let fd = v.facets().unwrap();
        assert_eq!(fd.facets.len(), 4);
        assert!(fd.facets.iter().all(|h| h.rhs.is_zero()));
        assert_eq!(fd.hull, vec![Hyperplane::new(vec![int(1); 4], int(1))]);
        assert_eq!(v.f_vector().unwrap(), vec![4, 6, 4, 1]);
        assert!(v.contains_point(&row(&[1, 0, 0, 0])).unwrap());
        assert!(!v.contains_point(&row(&[2, 0, 0, -1])).unwrap());
        assert!(v.contains_point(&row(&[1, 0])).is_err());
    }

    #[test]
    fn degenerate_cases() {
        let infeasible = HPolytope::new(
            1,
            vec![Halfspace::new(row(&[1]), int(-1)), Halfspace::new(row(&[-1]), int(0))],
            vec![],
        )
        .unwrap();
        assert!(infeasible.vertices().unwrap().is_empty());
        assert_eq!(VPolytope::empty(2).dim(), -1);
        assert!(!VPolytope::empty(2).contains_point(&row(&[0, 0])).unwrap());

        let ray = HPolytope::new(1, vec![Halfspace::new(row(&[-1]), int(0))], vec![]).unwrap();
        assert_eq!(ray.vertices().unwrap_err(), Error::Unbounded);

        let point = VPolytope::new(2, vec![vec![q(1, 2), q(1, 3)]]).unwrap();
        let fd = point.facets().unwrap();
        assert!(fd.facets.is_empty());
        assert_eq!(fd.hull.len(), 2);
        assert_eq!(point.dim(), 0);
        assert_eq!(point.f_vector().unwrap(), vec![1]);

        let seg = VPolytope::new(2, vec![row(&[0, 0]), row(&[1, 1])]).unwrap();
        assert_eq!(seg.f_vector().unwrap(), vec![2, 1]);
    }

    #[test]
    fn hull_drops_interior_points() {
        let pts = vec![row(&[0, 0]), row(&[2, 0]), row(&[0, 2]), row(&[2, 2]), row(&[1, 1])];
        let p = VPolytope::convex_hull(2, pts).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.f_vector().unwrap(), vec![4, 4, 1]);
    }
}
