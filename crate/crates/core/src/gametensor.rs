//! Payoff tensors, games, index enumeration and expected payoffs.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polyring::{CoefField, Scalar};

/// Largest number of entries a format may address.
pub const MAX_TENSOR_SIZE: usize = 1_000_000;

/// Bounds of random integer payoffs over `QQ`.
pub const RANDOM_RATIONAL_RANGE: (i64, i64) = (-100, 100);

/// Strategy counts `(d_0, ..., d_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Format {
    dims: Vec<usize>,
}

impl Format {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidFormat("a format needs at least one player".into()));
        }
        if let Some(pos) = dims.iter().position(|&d| d == 0) {
            return Err(Error::InvalidFormat(format!(
                "player {pos} has no strategies"
            )));
        }
        let mut size: usize = 1;
        for &d in &dims {
            size = size
                .checked_mul(d)
                .filter(|&s| s <= MAX_TENSOR_SIZE)
                .ok_or_else(|| {
                    Error::InvalidFormat(format!(
                        "{dims:?} has more than {MAX_TENSOR_SIZE} entries"
                    ))
                })?;
        }
        Ok(Format { dims })
    }

    /// Parses `"2,2,2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let dims = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidFormat(format!("not a format: {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Format::new(dims)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn players(&self) -> usize {
        self.dims.len()
    }

    /// Number of pure profiles.
    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    /// All index tuples, lexicographic with the last index varying fastest.
    pub fn indices(&self) -> IndexIter<'_> {
        IndexIter {
            dims: &self.dims,
            next: Some(vec![0; self.dims.len()]),
        }
    }

    /// Position of an index tuple in `indices()`.
    pub fn linear_index(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.dims).fold(0, |acc, (&j, &d)| acc * d + j)
    }

    pub fn contains(&self, idx: &[usize]) -> bool {
        idx.len() == self.dims.len() && idx.iter().zip(&self.dims).all(|(j, d)| j < d)
    }
}

impl std::fmt::Display for Format {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub struct IndexIter<'a> {
    dims: &'a [usize],
    next: Option<Vec<usize>>,
}

impl Iterator for IndexIter<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for k in (0..succ.len()).rev() {
            succ[k] += 1;
            if succ[k] < self.dims[k] {
                self.next = Some(succ);
                return Some(cur);
            }
            succ[k] = 0;
        }
        Some(cur)
    }
}

/// `enumerateTensorIndices`.
pub fn enumerate_tensor_indices(format: &Format) -> Vec<Vec<usize>> {
    format.indices().collect()
}

/// A payoff tensor with sparse exact entries; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    format: Format,
    field: CoefField,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    /// `zeroTensor`.
    pub fn zeros(format: Format, field: CoefField) -> Self {
        Tensor {
            format,
            field,
            entries: BTreeMap::new(),
        }
    }

    /// `randomTensor`: uniform field elements over `ZZ/p`, uniform integers
    /// in `RANDOM_RATIONAL_RANGE` over `QQ`. Deterministic in the seed.
    pub fn random(format: Format, field: CoefField, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_from(format, field, &mut rng)
    }

    fn random_from(format: Format, field: CoefField, rng: &mut ChaCha8Rng) -> Self {
        let mut t = Tensor::zeros(format, field);
        let indices: Vec<_> = t.format.indices().collect();
        for idx in indices {
            let v = match field {
                CoefField::Rationals => {
                    field.from_i64(rng.gen_range(RANDOM_RATIONAL_RANGE.0..=RANDOM_RATIONAL_RANGE.1))
                }
                CoefField::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
            };
            if !v.is_zero() {
                t.entries.insert(idx, v);
            }
        }
        t
    }

    pub fn format(&self) -> &Format {
        &self.format
    }

    pub fn field(&self) -> CoefField {
        self.field
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        self.entries
            .get(idx)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, idx: &[usize], value: Scalar) -> Result<()> {
        if !self.format.contains(idx) {
            return Err(Error::InvalidArgument(format!(
                "index {idx:?} out of range for format {}",
                self.format
            )));
        }
        if !self.field.contains(&value) {
            return Err(Error::FieldMismatch(format!(
                "entry {value} is not in {}",
                self.field
            )));
        }
        if value.is_zero() {
            self.entries.remove(idx);
        } else {
            self.entries.insert(idx.to_vec(), value);
        }
        Ok(())
    }

    pub fn set_i64(&mut self, idx: &[usize], value: i64) -> Result<()> {
        self.set(idx, self.field.from_i64(value))
    }

    /// Nonzero entries in index order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.entries.iter()
    }
}

/// An ordered list of one payoff tensor per player.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Game {
    tensors: Vec<Tensor>,
}

impl Game {
    pub fn new(tensors: Vec<Tensor>) -> Result<Self> {
        let first = tensors
            .first()
            .ok_or_else(|| Error::InvalidArgument("a game needs at least one tensor".into()))?;
        let (format, field) = (first.format.clone(), first.field);
        if tensors.len() != format.players() {
            return Err(Error::DimensionMismatch {
                expected: format.players(),
                got: tensors.len(),
            });
        }
        for t in &tensors {
            if t.format != format {
                return Err(Error::InvalidFormat(format!(
                    "tensor format {} differs from {}",
                    t.format, format
                )));
            }
            if t.field != field {
                return Err(Error::FieldMismatch("tensors over different fields".into()));
            }
        }
        Ok(Game { tensors })
    }

    /// `randomGame`: one independent stream per player.
    pub fn random(format: Format, field: CoefField, seed: u64) -> Self {
        let tensors = (0..format.players())
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i as u64 + 1);
                Tensor::random_from(format.clone(), field, &mut rng)
            })
            .collect();
        Game { tensors }
    }

    /// The all-zero game.
    pub fn zeros(format: Format, field: CoefField) -> Self {
        let tensors = (0..format.players())
            .map(|_| Tensor::zeros(format.clone(), field))
            .collect();
        Game { tensors }
    }

    pub fn format(&self) -> &Format {
        &self.tensors[0].format
    }

    pub fn field(&self) -> CoefField {
        self.tensors[0].field
    }

    pub fn players(&self) -> usize {
        self.tensors.len()
    }

    pub fn tensors(&self) -> &[Tensor] {
        &self.tensors
    }

    pub fn tensor(&self, i: usize) -> &Tensor {
        &self.tensors[i]
    }

    pub fn payoff(&self, player: usize, idx: &[usize]) -> Scalar {
        self.tensors[player].get(idx)
    }

    /// Bach or Stravinsky: both prefer coordination, player 0 prefers
    /// strategy 0 (payoff 3 vs 2), player 1 prefers strategy 1.
    pub fn bach_or_stravinsky() -> Self {
        let f = Format::new(vec![2, 2]).unwrap();
        let mut a = Tensor::zeros(f.clone(), CoefField::Rationals);
        let mut b = Tensor::zeros(f, CoefField::Rationals);
        a.set_i64(&[0, 0], 3).unwrap();
        a.set_i64(&[1, 1], 2).unwrap();
        b.set_i64(&[0, 0], 2).unwrap();
        b.set_i64(&[1, 1], 3).unwrap();
        Game::new(vec![a, b]).unwrap()
    }
}

/// A mixed strategy for every player.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedProfile {
    strategies: Vec<Vec<Scalar>>,
}

impl MixedProfile {
    /// Each vector must sum to one and have a common field.
    pub fn new(strategies: Vec<Vec<Scalar>>) -> Result<Self> {
        let field = strategies
            .iter()
            .flatten()
            .next()
            .map(|s| s.field())
            .ok_or_else(|| Error::InvalidArgument("empty profile".into()))?;
        for (i, v) in strategies.iter().enumerate() {
            if v.iter().any(|s| !field.contains(s)) {
                return Err(Error::FieldMismatch("profile mixes fields".into()));
            }
            let total = v.iter().fold(field.zero(), |a, b| &a + b);
            if !total.is_one() {
                return Err(Error::InvalidArgument(format!(
                    "strategy of player {i} sums to {total}, not 1"
                )));
            }
        }
        Ok(MixedProfile { strategies })
    }

    /// The pure profile playing `choice[i]` for each player.
    pub fn pure(format: &Format, field: CoefField, choice: &[usize]) -> Result<Self> {
        if !format.contains(choice) {
            return Err(Error::InvalidArgument(format!("{choice:?} is not a profile")));
        }
        let strategies = format
            .dims()
            .iter()
            .zip(choice)
            .map(|(&d, &c)| {
                (0..d)
                    .map(|j| if j == c { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        Ok(MixedProfile { strategies })
    }

    pub fn strategies(&self) -> &[Vec<Scalar>] {
        &self.strategies
    }

    /// Probability of a pure profile under independent play.
    pub fn joint_probability(&self, idx: &[usize]) -> Scalar {
        let field = self.strategies[0][0].field();
        idx.iter()
            .enumerate()
            .fold(field.one(), |acc, (i, &j)| &acc * &self.strategies[i][j])
    }
}

/// `pi_i(p)`: expected payoff of `player` under independent mixing.
pub fn expected_payoff(game: &Game, player: usize, profile: &MixedProfile) -> Result<Scalar> {
    let format = game.format();
    if player >= game.players() {
        return Err(Error::InvalidArgument(format!("no player {player}")));
    }
    let strategies = profile.strategies();
    if strategies.len() != format.players() {
        return Err(Error::DimensionMismatch {
            expected: format.players(),
            got: strategies.len(),
        });
    }
    for (v, &d) in strategies.iter().zip(format.dims()) {
        if v.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.len(),
            });
        }
    }
    if strategies[0][0].field() != game.field() {
        return Err(Error::FieldMismatch("profile and game fields differ".into()));
    }
    let mut acc = game.field().zero();
    for (idx, x) in game.tensor(player).nonzero_entries() {
        acc = &acc + &(x * &profile.joint_probability(idx));
    }
    Ok(acc)
}
