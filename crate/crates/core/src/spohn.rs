//! Spohn matrices, the Spohn ideal, the Konstanz matrix and conditional
//! expected payoffs.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gametensor::Game;
use crate::polyring::{Ideal, Monomial, Polynomial, Ring, Scalar, VarName};

/// Label of the ring's probability variables, after checking the ring is
/// the probability ring of the game's format and field.
pub(crate) fn check_probability_ring(ring: &Arc<Ring>, game: &Game) -> Result<String> {
    let label = match ring.vars().first() {
        Some(VarName::Prob { label, .. }) => label.clone(),
        _ => return Err(Error::RingMismatch("not a probability ring".into())),
    };
    let expected = Ring::probability(game.format(), game.field(), &label)?;
    if ring.vars() != expected.vars() {
        return Err(Error::RingMismatch(format!(
            "ring is not the probability ring of format {}",
            game.format()
        )));
    }
    if ring.field() != game.field() {
        return Err(Error::FieldMismatch(format!(
            "ring over {} but game over {}",
            ring.field(),
            game.field()
        )));
    }
    Ok(label)
}

/// The `d_i x 2` matrix of player `i`: row `k` holds the marginal
/// `p_{+..k..+}` and the payoff-weighted sum `sum_{j_i = k} X^(i)_j p_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpohnMatrix {
    pub player: usize,
    pub rows: Vec<[Polynomial; 2]>,
}

impl SpohnMatrix {
    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.rows[row][col]
    }
}

fn linear_form(ring: &Arc<Ring>, coeffs: Vec<(usize, Scalar)>) -> Polynomial {
    let n = ring.nvars();
    Polynomial::from_terms(
        ring.clone(),
        coeffs
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(v, c)| (Monomial::var(n, v, 1), c))
            .collect(),
    )
}

pub fn spohn_matrices(ring: &Arc<Ring>, game: &Game) -> Result<Vec<SpohnMatrix>> {
    check_probability_ring(ring, game)?;
    let format = game.format();
    let idx: Vec<Vec<usize>> = format.indices().collect();
    let one = game.field().one();
    Ok((0..format.players())
        .map(|i| {
            let rows = (0..format.dims()[i])
                .map(|k| {
                    let cols: Vec<usize> = (0..idx.len()).filter(|&c| idx[c][i] == k).collect();
                    let marginal = linear_form(ring, cols.iter().map(|&c| (c, one.clone())).collect());
                    let weighted = linear_form(
                        ring,
                        cols.iter().map(|&c| (c, game.payoff(i, &idx[c]))).collect(),
                    );
                    [marginal, weighted]
                })
                .collect();
            SpohnMatrix { player: i, rows }
        })
        .collect())
}

/// All 2x2 minors `M[r,0] M[s,1] - M[r,1] M[s,0]` (`r < s`) of all Spohn
/// matrices, player by player.
pub fn spohn_ideal(ring: &Arc<Ring>, game: &Game) -> Result<Ideal> {
    let mut gens = Vec::new();
    for m in spohn_matrices(ring, game)? {
        for r in 0..m.rows.len() {
            for s in r + 1..m.rows.len() {
                gens.push(&(m.entry(r, 0) * m.entry(s, 1)) - &(m.entry(r, 1) * m.entry(s, 0)));
            }
        }
    }
    Ideal::new(ring.clone(), gens)
}

/// `K_X(k)` on the chart `z_i = (k_i : 1)`, over the probability ring
/// extended by `label_0, ..., label_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KonstanzMatrix {
    pub ring: Arc<Ring>,
    /// `(player, strategy)` of each row.
    pub row_labels: Vec<(usize, usize)>,
    pub rows: Vec<Vec<Polynomial>>,
}

pub fn konstanz_matrix(ring: &Arc<Ring>, game: &Game, label: &str) -> Result<KonstanzMatrix> {
    check_probability_ring(ring, game)?;
    let format = game.format();
    let ext = ring.extend(
        (0..format.players())
            .map(|player| VarName::Konstanz {
                label: label.to_string(),
                player,
            })
            .collect(),
    )?;
    let base = ring.nvars();
    let idx: Vec<Vec<usize>> = format.indices().collect();
    let mut row_labels = Vec::new();
    let mut rows = Vec::new();
    for (i, &d) in format.dims().iter().enumerate() {
        let k_i = ext.var(base + i);
        for k in 0..d {
            let row = idx
                .iter()
                .map(|j| {
                    if j[i] == k {
                        &k_i - &ext.constant(game.payoff(i, j))
                    } else {
                        ext.zero()
                    }
                })
                .collect();
            row_labels.push((i, k));
            rows.push(row);
        }
    }
    Ok(KonstanzMatrix {
        ring: ext,
        row_labels,
        rows,
    })
}

impl KonstanzMatrix {
    /// `K * vec(p)` with `p` the probability variables in index order.
    pub fn times_probability_vector(&self) -> Vec<Polynomial> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(self.ring.zero(), |acc, (c, e)| &acc + &(e * &self.ring.var(c)))
            })
            .collect()
    }
}

/// Checks `K * vec(p) = stack_i M_i(p) * (k_i, -1)^T` as polynomials.
pub fn konstanz_identity_holds(ring: &Arc<Ring>, game: &Game, label: &str) -> Result<bool> {
    let k = konstanz_matrix(ring, game, label)?;
    let lhs = k.times_probability_vector();
    let embed: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
    let mut rhs = Vec::new();
    for m in spohn_matrices(ring, game)? {
        let k_i = k.ring.var(ring.nvars() + m.player);
        for row in &m.rows {
            let a = row[0].map_to(&k.ring, &embed)?;
            let b = row[1].map_to(&k.ring, &embed)?;
            rhs.push(&(&a * &k_i) - &b);
        }
    }
    Ok(lhs == rhs)
}

/// `E^(i)_k(p)`: player `i`'s expected payoff conditioned on playing `k`.
pub fn conditional_expected_payoff(
    game: &Game,
    p: &[Scalar],
    player: usize,
    strategy: usize,
) -> Result<Scalar> {
    let format = game.format();
    if p.len() != format.size() {
        return Err(Error::DimensionMismatch {
            expected: format.size(),
            got: p.len(),
        });
    }
    if player >= format.players() || strategy >= format.dims()[player] {
        return Err(Error::InvalidArgument(format!(
            "no strategy {strategy} for player {player}"
        )));
    }
    if p.iter().any(|x| x.field() != game.field()) {
        return Err(Error::FieldMismatch("point and game fields differ".into()));
    }
    let field = game.field();
    let mut marginal = field.zero();
    let mut weighted = field.zero();
    for (pos, j) in format.indices().enumerate() {
        if j[player] == strategy {
            marginal = &marginal + &p[pos];
            weighted = &weighted + &(&game.payoff(player, &j) * &p[pos]);
        }
    }
    let inv = marginal
        .inv()
        .ok_or(Error::UndefinedMarginal { player, strategy })?;
    Ok(&weighted * &inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gametensor::Format;
    use crate::polyring::{parse_rational, probability_ring, CoefField};

    fn q(s: &str) -> Scalar {
        Scalar::Rational(parse_rational(s).unwrap())
    }

    fn strings(ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn bos_spohn() {
        let g = Game::bach_or_stravinsky();
        let r = probability_ring(g.format(), g.field(), "p").unwrap();
        let ms = spohn_matrices(&r, &g).unwrap();
        let m0: Vec<String> = ms[0].rows.iter().flatten().map(|p| p.to_string()).collect();
        assert_eq!(m0, ["p_{0,0} + p_{0,1}", "3*p_{0,0}", "p_{1,0} + p_{1,1}", "2*p_{1,1}"]);
        let m1: Vec<String> = ms[1].rows.iter().flatten().map(|p| p.to_string()).collect();
        assert_eq!(m1, ["p_{0,0} + p_{1,0}", "2*p_{0,0}", "p_{0,1} + p_{1,1}", "3*p_{1,1}"]);
        let i = spohn_ideal(&r, &g).unwrap();
        assert_eq!(
            strings(i.gens()),
            [
                "-3*p_{0,0}*p_{1,0} - p_{0,0}*p_{1,1} + 2*p_{0,1}*p_{1,1}",
                "-2*p_{0,0}*p_{0,1} + p_{0,0}*p_{1,1} + 3*p_{1,0}*p_{1,1}"
            ]
        );
    }

    #[test]
    fn bos_konstanz() {
        let g = Game::bach_or_stravinsky();
        let r = probability_ring(g.format(), g.field(), "p").unwrap();
        let k = konstanz_matrix(&r, &g, "k").unwrap();
        let rows: Vec<Vec<String>> = k.rows.iter().map(|r| strings(r)).collect();
        assert_eq!(
            rows,
            [
                ["k_0 - 3", "k_0", "0", "0"],
                ["0", "0", "k_0", "k_0 - 2"],
                ["k_1 - 2", "0", "k_1", "0"],
                ["0", "k_1", "0", "k_1 - 3"]
            ]
        );
        assert!(konstanz_identity_holds(&r, &g, "k").unwrap());
    }

    #[test]
    fn conditional_payoffs() {
        let g = Game::bach_or_stravinsky();
        let p = [q("1/2"), q("0"), q("0"), q("1/2")];
        assert_eq!(conditional_expected_payoff(&g, &p, 0, 0).unwrap(), q("3"));
        assert_eq!(conditional_expected_payoff(&g, &p, 0, 1).unwrap(), q("2"));
        let p = [q("1"), q("0"), q("0"), q("0")];
        assert_eq!(
            conditional_expected_payoff(&g, &p, 0, 1).unwrap_err(),
            Error::UndefinedMarginal { player: 0, strategy: 1 }
        );
        let z = Game::zeros(Format::new(vec![2, 2]).unwrap(), CoefField::Rationals);
        let p = [q("1/4"), q("1/4"), q("1/4"), q("1/4")];
        assert_eq!(conditional_expected_payoff(&z, &p, 1, 0).unwrap(), q("0"));
    }

    #[test]
    fn ring_checks() {
        let g = Game::bach_or_stravinsky();
        let wrong = probability_ring(&Format::new(vec![2, 3]).unwrap(), g.field(), "p").unwrap();
        assert!(spohn_matrices(&wrong, &g).is_err());
        let nash = Ring::nash(g.format(), g.field()).unwrap();
        assert!(spohn_ideal(&nash, &g).is_err());
    }
}
