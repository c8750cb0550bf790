//! Nash equilibrium ideals, counts of totally mixed equilibria, and the
//! parameter-specialization workflow.

use std::cmp::Ordering;
use std::sync::Arc;

use num::{BigRational, BigUint, One, Zero};

use crate::error::{Error, Result};
use crate::gametensor::{Format, Game, Tensor};
use crate::groebner::sturm::{isolate_roots, sign_at_root, UniPoly};
use crate::groebner::{groebner_basis, GbConfig};
use crate::polyring::{
    parse_polynomial, CoefField, Ideal, Monomial, MonomialOrder, Polynomial, Ring, Scalar,
    VarName,
};
use crate::polytope::{linalg::int, VPolytope};

fn offsets(format: &Format) -> Vec<usize> {
    let mut off = Vec::with_capacity(format.players());
    let mut acc = 0;
    for &d in format.dims() {
        off.push(acc);
        acc += d;
    }
    off
}

fn check_nash_ring(ring: &Arc<Ring>, game: &Game) -> Result<()> {
    let expected = Ring::nash(game.format(), game.field())?;
    if ring.vars() != expected.vars() {
        return Err(Error::RingMismatch(format!(
            "ring is not the equilibrium ring of format {}",
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
    Ok(())
}

/// Multilinear generators for every player `i` and strategy `k >= 1`, in
/// that order, followed by one normalization `sum_j p_{i,j} - 1` per player.
/// Zero generators are dropped.
pub fn nash_equilibrium_ideal(ring: &Arc<Ring>, game: &Game) -> Result<Ideal> {
    check_nash_ring(ring, game)?;
    let format = game.format();
    let off = offsets(format);
    let nv = ring.nvars();
    let mut gens = Vec::new();
    for i in 0..format.players() {
        for k in 1..format.dims()[i] {
            let mut terms = Vec::new();
            for idx in format.indices().filter(|idx| idx[i] == 0) {
                let mut hi = idx.clone();
                hi[i] = k;
                let c = &game.payoff(i, &hi) - &game.payoff(i, &idx);
                if c.is_zero() {
                    continue;
                }
                let mut exps = vec![0u16; nv];
                for (l, &j) in idx.iter().enumerate() {
                    if l != i {
                        exps[off[l] + j] = 1;
                    }
                }
                terms.push((Monomial::from_exponents(&exps), c));
            }
            gens.push(Polynomial::from_terms(ring.clone(), terms));
        }
    }
    for (i, &d) in format.dims().iter().enumerate() {
        let mut g = -&ring.one();
        for j in 0..d {
            g = &g + &ring.var(off[i] + j);
        }
        gens.push(g);
    }
    Ideal::new(ring.clone(), gens)
}

/// Lex basis of the equilibrium ideal in shape position: the eliminant in
/// the last variable and `x_k = g_k(x_last)` for the others.
struct ShapeBasis {
    eliminant: Polynomial,
    last: usize,
    coords: Vec<UniPoly>,
}

fn shape_basis(game: &Game, cfg: &GbConfig) -> Result<Option<ShapeBasis>> {
    if game.field() != CoefField::Rationals {
        return Err(Error::UnsupportedField(
            "equilibrium counting needs QQ payoffs".into(),
        ));
    }
    let ring = Ring::nash(game.format(), game.field())?.with_order(MonomialOrder::Lex)?;
    let ideal = nash_equilibrium_ideal(&ring, game)?;
    let gb = groebner_basis(&ideal, cfg)?;
    if gb.is_unit() {
        return Ok(None);
    }
    let n = ring.nvars();
    let lms = gb.leading_monomials();
    for v in 0..n {
        if !lms.iter().any(|m| m.support().all(|s| s == v)) {
            return Err(Error::NotZeroDimensional);
        }
    }
    let last = n - 1;
    let polys = gb.polys();
    let not_shape = || Error::CannotCertify("lex basis is not in shape position".into());
    if polys.len() != n {
        return Err(not_shape());
    }
    let eliminant = polys[0].clone();
    if eliminant.support() != [last] {
        return Err(not_shape());
    }
    let mut coords = vec![UniPoly::new(Vec::new()); last];
    for (k, p) in polys[1..].iter().enumerate() {
        let target = last - 1 - k;
        let lm = p.leading_monomial().unwrap();
        if lm.degree() != 1 || lm.exponents()[target] != 1 {
            return Err(not_shape());
        }
        let rest = &ring.var(target) - p;
        coords[target] = UniPoly::from_polynomial(&rest, last).map_err(|_| not_shape())?;
    }
    Ok(Some(ShapeBasis {
        eliminant,
        last,
        coords,
    }))
}

/// The monic generator of `I ∩ QQ[x_last]` for the equilibrium ideal, with
/// `x_last` the last variable of the equilibrium ring.
pub fn nash_eliminant(game: &Game, cfg: &GbConfig) -> Result<Polynomial> {
    let ring = Ring::nash(game.format(), game.field())?;
    match shape_basis(game, cfg)? {
        Some(s) => Ok(s.eliminant.reorder(&ring)),
        None => Ok(ring.one()),
    }
}

/// Number of distinct real equilibria with every coordinate in `(0, 1)`.
pub fn count_totally_mixed_nash(game: &Game, cfg: &GbConfig) -> Result<usize> {
    let Some(shape) = shape_basis(game, cfg)? else {
        return Ok(0);
    };
    let h = UniPoly::from_polynomial(&shape.eliminant, shape.last)?;
    let roots = isolate_roots(&h, &BigRational::zero(), &BigRational::one())?;
    let one = UniPoly::from_i64(&[1]);
    let mut count = 0;
    'roots: for root in &roots {
        for g in &shape.coords {
            if sign_at_root(&h, root, g)? != Ordering::Greater {
                continue 'roots;
            }
            if sign_at_root(&h, root, &g.sub(&one))? != Ordering::Less {
                continue 'roots;
            }
        }
        count += 1;
    }
    Ok(count)
}

/// Newton polytopes `Delta^(i)` of the generic multilinear equations, in
/// `R^(d_0 + ... + d_{n-1})`.
pub fn delta_list(format: &Format) -> Result<Vec<VPolytope>> {
    if format.players() < 2 {
        return Err(Error::InvalidArgument("need at least two players".into()));
    }
    let off = offsets(format);
    let total: usize = format.dims().iter().sum();
    (0..format.players())
        .map(|i| {
            let mut dims = format.dims().to_vec();
            dims[i] = 1;
            let sub = Format::new(dims)?;
            let verts = sub
                .indices()
                .map(|idx| {
                    let mut v = vec![int(0); total];
                    for (l, &j) in idx.iter().enumerate() {
                        if l != i {
                            v[off[l] + j] = int(1);
                        }
                    }
                    v
                })
                .collect();
            VPolytope::new(total, verts)
        })
        .collect()
}

/// Slot `index` of player `block`'s block of `d_block - 1` slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub block: usize,
    pub index: usize,
}

/// `sets[i]`: the `d_i - 1` slots assigned to player `i`, none from its own
/// block. The sets partition all slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDerangement {
    pub sets: Vec<Vec<Slot>>,
}

pub fn block_derangements(format: &Format) -> Vec<BlockDerangement> {
    let dims = format.dims();
    let slots: Vec<Slot> = dims
        .iter()
        .enumerate()
        .flat_map(|(block, &d)| (0..d - 1).map(move |index| Slot { block, index }))
        .collect();
    let mut room: Vec<usize> = dims.iter().map(|d| d - 1).collect();
    let mut owner = vec![0usize; slots.len()];
    let mut out = Vec::new();
    assign(0, &slots, &mut room, &mut owner, &mut out);
    out
}

fn assign(
    k: usize,
    slots: &[Slot],
    room: &mut [usize],
    owner: &mut [usize],
    out: &mut Vec<BlockDerangement>,
) {
    if k == slots.len() {
        let mut sets = vec![Vec::new(); room.len()];
        for (s, &o) in slots.iter().zip(owner.iter()) {
            sets[o].push(*s);
        }
        out.push(BlockDerangement { sets });
        return;
    }
    for p in 0..room.len() {
        if p == slots[k].block || room[p] == 0 {
            continue;
        }
        room[p] -= 1;
        owner[k] = p;
        assign(k + 1, slots, room, owner, out);
        room[p] += 1;
    }
}

/// Coefficient of `prod h_i^(d_i - 1)` in `prod_i (sum_{j != i} h_j)^(d_i - 1)`.
pub fn number_tmne(format: &Format) -> Result<BigUint> {
    if format.players() < 2 {
        return Err(Error::InvalidArgument("need at least two players".into()));
    }
    let dims = format.dims();
    let n = dims.len();
    // Dense coefficients indexed by exponent vectors with e_j <= d_j - 1,
    // in mixed radix d_j.
    let size = format.size();
    let mut stride = vec![1usize; n];
    for j in (0..n.saturating_sub(1)).rev() {
        stride[j] = stride[j + 1] * dims[j + 1];
    }
    let mut coeffs = vec![BigUint::zero(); size];
    coeffs[0] = BigUint::one();
    for i in 0..n {
        for _ in 0..dims[i] - 1 {
            let mut next = vec![BigUint::zero(); size];
            for (pos, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for j in (0..n).filter(|&j| j != i) {
                    let e = (pos / stride[j]) % dims[j];
                    if e + 1 < dims[j] {
                        next[pos + stride[j]] += c;
                    }
                }
            }
            coeffs = next;
        }
    }
    Ok(coeffs[size - 1].clone())
}

/// A game whose rational payoffs are affine in one parameter `e`:
/// entry = constant + slope * e.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricGame {
    constant: Game,
    slope: Game,
}

/// Parses `c + m*e` style expressions, e.g. `"1+e"`, `"-5/2 + 3*e"`.
pub fn parse_affine(s: &str) -> Result<(BigRational, BigRational)> {
    let ring = Ring::new(
        vec![VarName::Aux("e".into())],
        CoefField::Rationals,
        MonomialOrder::Grevlex,
    )?;
    let p = parse_polynomial(&ring, s)?;
    if p.total_degree().unwrap_or(0) > 1 {
        return Err(Error::NonAffineParameter(s.to_string()));
    }
    let mut c = BigRational::zero();
    let mut m = BigRational::zero();
    for (mono, coef) in p.terms() {
        let q = coef.as_rational().unwrap().clone();
        if mono.is_one() {
            c = q;
        } else {
            m = q;
        }
    }
    Ok((c, m))
}

impl ParametricGame {
    pub fn new(constant: Game, slope: Game) -> Result<Self> {
        if constant.format() != slope.format() {
            return Err(Error::InvalidFormat("constant and slope formats differ".into()));
        }
        if constant.field() != CoefField::Rationals || slope.field() != CoefField::Rationals {
            return Err(Error::UnsupportedField("parameters need QQ payoffs".into()));
        }
        Ok(ParametricGame { constant, slope })
    }

    /// A game with no parameter dependence.
    pub fn constant(game: Game) -> Result<Self> {
        let slope = Game::zeros(game.format().clone(), game.field());
        ParametricGame::new(game, slope)
    }

    /// Builds from per-player maps of index to affine expression strings.
    pub fn from_expressions(
        format: &Format,
        entries: &[Vec<(Vec<usize>, String)>],
    ) -> Result<Self> {
        let mut cs = Vec::new();
        let mut ms = Vec::new();
        for player in entries {
            let mut c = Tensor::zeros(format.clone(), CoefField::Rationals);
            let mut m = Tensor::zeros(format.clone(), CoefField::Rationals);
            for (idx, expr) in player {
                let (a, b) = parse_affine(expr)?;
                c.set(idx, Scalar::Rational(a))?;
                m.set(idx, Scalar::Rational(b))?;
            }
            cs.push(c);
            ms.push(m);
        }
        ParametricGame::new(Game::new(cs)?, Game::new(ms)?)
    }

    pub fn is_constant(&self) -> bool {
        self.slope.tensors().iter().all(|t| t.nonzero_entries().next().is_none())
    }

    pub fn format(&self) -> &Format {
        self.constant.format()
    }

    /// `specializeParameter`.
    pub fn specialize(&self, e: &BigRational) -> Result<Game> {
        let e = Scalar::Rational(e.clone());
        let tensors = self
            .constant
            .tensors()
            .iter()
            .zip(self.slope.tensors())
            .map(|(c, m)| {
                let mut t = c.clone();
                for (idx, v) in m.nonzero_entries() {
                    t.set(idx, &c.get(idx) + &(v * &e))?;
                }
                Ok(t)
            })
            .collect::<Result<Vec<_>>>()?;
        Game::new(tensors)
    }
}

pub fn specialize_parameter(game: &ParametricGame, e: &BigRational) -> Result<Game> {
    game.specialize(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gametensor::Tensor;
    use crate::polyring::parse_rational;

    fn fmt(d: &[usize]) -> Format {
        Format::new(d.to_vec()).unwrap()
    }

    #[test]
    fn bos_generators() {
        let g = Game::bach_or_stravinsky();
        let r = Ring::nash(g.format(), g.field()).unwrap();
        let i = nash_equilibrium_ideal(&r, &g).unwrap();
        let s: Vec<String> = i.gens().iter().map(|p| p.to_string()).collect();
        assert_eq!(
            s,
            [
                "-3*p_{1,0} + 2*p_{1,1}",
                "-2*p_{0,0} + 3*p_{0,1}",
                "p_{0,0} + p_{0,1} - 1",
                "p_{1,0} + p_{1,1} - 1"
            ]
        );
        assert_eq!(count_totally_mixed_nash(&g, &GbConfig::default()).unwrap(), 1);
    }

    #[test]
    fn zero_game_keeps_normalizations() {
        let g = Game::zeros(fmt(&[2, 2]), CoefField::Rationals);
        let r = Ring::nash(g.format(), g.field()).unwrap();
        assert_eq!(nash_equilibrium_ideal(&r, &g).unwrap().gens().len(), 2);
        assert_eq!(
            count_totally_mixed_nash(&g, &GbConfig::default()).unwrap_err(),
            Error::NotZeroDimensional
        );
    }

    #[test]
    fn ring_must_match() {
        let g = Game::bach_or_stravinsky();
        let r = Ring::nash(&fmt(&[2, 3]), g.field()).unwrap();
        assert!(nash_equilibrium_ideal(&r, &g).is_err());
        let r = Ring::nash(g.format(), CoefField::Prime(101)).unwrap();
        assert!(nash_equilibrium_ideal(&r, &g).is_err());
    }

    #[test]
    fn counting_formula() {
        assert_eq!(number_tmne(&fmt(&[2, 2, 2])).unwrap(), BigUint::from(2u32));
        assert_eq!(number_tmne(&fmt(&[3, 3, 3])).unwrap(), BigUint::from(10u32));
        assert_eq!(number_tmne(&fmt(&[2, 2])).unwrap(), BigUint::from(1u32));
        assert_eq!(number_tmne(&fmt(&[2, 3])).unwrap(), BigUint::from(0u32));
        assert!(number_tmne(&fmt(&[3])).is_err());
    }

    #[test]
    fn derangements() {
        assert_eq!(block_derangements(&fmt(&[2, 2, 2])).len(), 2);
        assert_eq!(block_derangements(&fmt(&[3, 3, 3])).len(), 10);
        assert!(block_derangements(&fmt(&[2, 3])).is_empty());
        for d in block_derangements(&fmt(&[3, 2, 2])) {
            for (i, set) in d.sets.iter().enumerate() {
                assert!(set.iter().all(|s| s.block != i));
            }
        }
    }

    #[test]
    fn delta_polytopes() {
        let dl = delta_list(&fmt(&[2, 2, 2])).unwrap();
        assert_eq!(dl.iter().map(|p| p.dim()).collect::<Vec<_>>(), vec![2, 2, 2]);
        assert!(dl.iter().all(|p| p.vertices().len() == 4));
        let dl = delta_list(&fmt(&[2, 2])).unwrap();
        assert_eq!(dl.iter().map(|p| p.dim()).collect::<Vec<_>>(), vec![1, 1]);
        assert!(delta_list(&fmt(&[2])).is_err());
    }

    #[test]
    fn affine_parsing() {
        let (c, m) = parse_affine("1+e").unwrap();
        assert_eq!((c, m), (parse_rational("1").unwrap(), parse_rational("1").unwrap()));
        let (c, m) = parse_affine("-5/2 - 3*e").unwrap();
        assert_eq!((c, m), (parse_rational("-5/2").unwrap(), parse_rational("-3").unwrap()));
        assert!(matches!(parse_affine("e^2"), Err(Error::NonAffineParameter(_))));

        let f = fmt(&[2]);
        let p = ParametricGame::from_expressions(&f, &[vec![(vec![0], "1 + 2*e".into())]]).unwrap();
        let g = p.specialize(&parse_rational("-1/2").unwrap()).unwrap();
        assert_eq!(g.tensor(0), &Tensor::zeros(f, CoefField::Rationals));
    }
}
