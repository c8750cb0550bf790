//! Correlated equilibrium polytopes and joint expected payoffs.

use std::sync::OnceLock;

use num::Zero;

use crate::error::{Error, Result};
use crate::gametensor::Game;
use crate::polyring::CoefField;
use crate::polytope::{
    linalg::{int, Q},
    FacetDescription, HPolytope, Halfspace, Hyperplane, VPolytope,
};

fn rational_payoffs(game: &Game) -> Result<Vec<Vec<Q>>> {
    if game.field() != CoefField::Rationals {
        return Err(Error::UnsupportedField(
            "correlated equilibria need QQ payoffs".into(),
        ));
    }
    let idx: Vec<Vec<usize>> = game.format().indices().collect();
    Ok((0..game.players())
        .map(|i| {
            idx.iter()
                .map(|j| game.payoff(i, j).as_rational().unwrap().clone())
                .collect()
        })
        .collect())
}

/// Incentive constraints for every player `i` and ordered pair `k != l`
/// (rows in that order), then `p >= 0`, then `sum p = 1`. Coordinates
/// follow tensor index order.
pub fn correlated_equilibrium_hrep(game: &Game) -> Result<HPolytope> {
    let payoffs = rational_payoffs(game)?;
    let format = game.format();
    let m = format.size();
    let idx: Vec<Vec<usize>> = format.indices().collect();
    let mut ineqs = Vec::new();
    for (i, &d) in format.dims().iter().enumerate() {
        for k in 0..d {
            for l in (0..d).filter(|&l| l != k) {
                // sum_{j: j_i = k} (X_j - X_{j[i <- l]}) p_j >= 0
                let mut a = vec![Q::zero(); m];
                for (pos, j) in idx.iter().enumerate().filter(|(_, j)| j[i] == k) {
                    let mut dev = j.clone();
                    dev[i] = l;
                    let diff = &payoffs[i][pos] - &payoffs[i][format.linear_index(&dev)];
                    a[pos] = -diff;
                }
                ineqs.push(Halfspace::new(a, int(0)));
            }
        }
    }
    for pos in 0..m {
        let mut a = vec![Q::zero(); m];
        a[pos] = int(-1);
        ineqs.push(Halfspace::new(a, int(0)));
    }
    let eq = Hyperplane::new(vec![int(1); m], int(1));
    HPolytope::new(m, ineqs, vec![eq])
}

/// `P_X` with lazily computed vertex and facet descriptions.
#[derive(Debug)]
pub struct CEPolytope {
    hrep: HPolytope,
    vrep: OnceLock<VPolytope>,
    facets: OnceLock<FacetDescription>,
}

pub fn correlated_equilibria(game: &Game) -> Result<CEPolytope> {
    Ok(CEPolytope {
        hrep: correlated_equilibrium_hrep(game)?,
        vrep: OnceLock::new(),
        facets: OnceLock::new(),
    })
}

impl CEPolytope {
    pub fn hrep(&self) -> &HPolytope {
        &self.hrep
    }

    pub fn vrep(&self) -> Result<&VPolytope> {
        if let Some(v) = self.vrep.get() {
            return Ok(v);
        }
        let v = self.hrep.vertices()?;
        Ok(self.vrep.get_or_init(|| v))
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> Result<&[Vec<Q>]> {
        Ok(self.vrep()?.vertices())
    }

    pub fn facets(&self) -> Result<&FacetDescription> {
        if let Some(f) = self.facets.get() {
            return Ok(f);
        }
        let f = self.vrep()?.facets()?;
        Ok(self.facets.get_or_init(|| f))
    }

    pub fn dim(&self) -> Result<i64> {
        Ok(self.vrep()?.dim())
    }

    pub fn f_vector(&self) -> Result<Vec<usize>> {
        self.vrep()?.f_vector()
    }

    pub fn contains_point(&self, x: &[Q]) -> Result<bool> {
        self.hrep.contains_point(x)
    }
}

/// Component `i` is `sum_j X^(i)_j p_j`.
pub fn joint_expected_payoffs(game: &Game, p: &[Q]) -> Result<Vec<Q>> {
    let payoffs = rational_payoffs(game)?;
    let m = game.format().size();
    if p.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: p.len(),
        });
    }
    Ok(payoffs
        .iter()
        .map(|x| x.iter().zip(p).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gametensor::Format;
    use crate::polyring::parse_rational;

    fn qs(v: &[&str]) -> Vec<Q> {
        v.iter().map(|s| parse_rational(s).unwrap()).collect()
    }

    #[test]
    fn bos_rows() {
        let h = correlated_equilibrium_hrep(&Game::bach_or_stravinsky()).unwrap();
        assert_eq!(h.inequalities().len(), 8);
        assert_eq!(h.equations().len(), 1);
        // player 0, recommended 0, deviation 1: 3 p00 - 2 p01 >= 0
        assert_eq!(h.inequalities()[0].normal, qs(&["-3", "2", "0", "0"]));
    }

    #[test]
    fn zero_game_is_simplex() {
        let g = Game::zeros(Format::new(vec![2, 2]).unwrap(), CoefField::Rationals);
        let ce = correlated_equilibria(&g).unwrap();
        assert_eq!(ce.dim().unwrap(), 3);
        assert_eq!(ce.vertices().unwrap().len(), 4);
        assert_eq!(ce.f_vector().unwrap(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn payoffs() {
        let g = Game::bach_or_stravinsky();
        assert_eq!(joint_expected_payoffs(&g, &qs(&["1", "0", "0", "0"])).unwrap(), qs(&["3", "2"]));
        assert_eq!(
            joint_expected_payoffs(&g, &qs(&["1/2", "0", "0", "1/2"])).unwrap(),
            qs(&["5/2", "5/2"])
        );
        assert!(joint_expected_payoffs(&g, &qs(&["1"])).is_err());
        let gp = Game::zeros(Format::new(vec![2]).unwrap(), CoefField::Prime(7));
        assert!(correlated_equilibrium_hrep(&gp).is_err());
    }
}
