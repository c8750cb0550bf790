//! Conditional independence statements, player graphs, CI ideals, and the
//! Spohn CI variety.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gametensor::{Format, Game};
use crate::groebner::{groebner_basis, saturate, GbConfig};
use crate::polyring::{Ideal, Monomial, Polynomial, Ring, VarName};
use crate::spohn::spohn_ideal;

/// An undirected graph on the players, with display labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlayerGraph {
    labels: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
}

/// `"1"`, ..., `"n"`.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn label_index(labels: &[String], l: &str) -> Option<usize> {
    labels.iter().position(|x| x == l.trim())
}

fn check_labels(labels: &[String]) -> Result<()> {
    let set: BTreeSet<&String> = labels.iter().collect();
    if set.len() != labels.len() {
        return Err(Error::InvalidGraph("labels are not distinct".into()));
    }
    if labels.iter().any(|l| l.trim().is_empty()) {
        return Err(Error::InvalidGraph("empty label".into()));
    }
    Ok(())
}

impl PlayerGraph {
    /// Edges are pairs of labels.
    pub fn new(labels: Vec<String>, edges: &[(String, String)]) -> Result<Self> {
        check_labels(&labels)?;
        let mut adj = vec![BTreeSet::new(); labels.len()];
        for (a, b) in edges {
            let find = |l: &String| {
                label_index(&labels, l)
                    .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {l}")))
            };
            let (i, j) = (find(a)?, find(b)?);
            if i == j {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            adj[i].insert(j);
            adj[j].insert(i);
        }
        Ok(PlayerGraph { labels, adj })
    }

    /// Parses `"1-2,2-3"`; labels default to `1..=n`.
    pub fn parse(s: &str, n: usize, labels: Option<Vec<String>>) -> Result<Self> {
        let labels = labels.unwrap_or_else(|| default_labels(n));
        if labels.len() != n {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {n} players",
                labels.len()
            )));
        }
        let mut edges = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| Error::InvalidGraph(format!("bad edge {part:?}")))?;
            edges.push((a.trim().to_string(), b.trim().to_string()));
        }
        PlayerGraph::new(labels, &edges)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// True iff every path from `a` to `b` meets `c`.
    pub fn separates(&self, c: &BTreeSet<usize>, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> bool {
        let mut seen = vec![false; self.vertices()];
        let mut queue: VecDeque<usize> = a.iter().copied().collect();
        for &v in a {
            seen[v] = true;
        }
        while let Some(v) = queue.pop_front() {
            if b.contains(&v) {
                return false;
            }
            for w in self.neighbors(v) {
                if !seen[w] && !c.contains(&w) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        true
    }
}

/// `X_A ⟂ X_B | X_C` over zero-based player indices, with `min A < min B`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CIStatement {
    a: BTreeSet<usize>,
    b: BTreeSet<usize>,
    c: BTreeSet<usize>,
}

impl CIStatement {
    pub fn new(a: BTreeSet<usize>, b: BTreeSet<usize>, c: BTreeSet<usize>) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidStatement("A and B must be nonempty".into()));
        }
        if !a.is_disjoint(&b) || !a.is_disjoint(&c) || !b.is_disjoint(&c) {
            return Err(Error::InvalidStatement("A, B, C must be disjoint".into()));
        }
        let (a, b) = if a.first() < b.first() { (a, b) } else { (b, a) };
        Ok(CIStatement { a, b, c })
    }

    pub fn a(&self) -> &BTreeSet<usize> {
        &self.a
    }

    pub fn b(&self) -> &BTreeSet<usize> {
        &self.b
    }

    pub fn c(&self) -> &BTreeSet<usize> {
        &self.c
    }

    fn max_player(&self) -> Option<usize> {
        self.a.iter().chain(&self.b).chain(&self.c).max().copied()
    }

    /// Parses `"1|3|2;1,2|4|"` against the given labels.
    pub fn parse_list(s: &str, labels: &[String]) -> Result<Vec<CIStatement>> {
        let parse_set = |part: &str| -> Result<BTreeSet<usize>> {
            part.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| {
                    label_index(labels, t)
                        .ok_or_else(|| Error::InvalidStatement(format!("unknown label {t:?}")))
                })
                .collect()
        };
        s.split(';')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|stmt| {
                let parts: Vec<&str> = stmt.split('|').collect();
                if parts.len() != 3 {
                    return Err(Error::InvalidStatement(format!(
                        "expected A|B|C, got {stmt:?}"
                    )));
                }
                CIStatement::new(parse_set(parts[0])?, parse_set(parts[1])?, parse_set(parts[2])?)
            })
            .collect()
    }

    pub fn display_with(&self, labels: &[String]) -> String {
        let set = |s: &BTreeSet<usize>| {
            s.iter()
                .map(|&i| labels.get(i).cloned().unwrap_or_else(|| i.to_string()))
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("{}|{}|{}", set(&self.a), set(&self.b), set(&self.c))
    }
}

impl fmt::Display for CIStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.max_player().map_or(0, |m| m + 1);
        write!(f, "{}", self.display_with(&default_labels(n)))
    }
}

/// All separating triples `(A, B, C)` of the graph, canonical and
/// deduplicated, in a fixed order.
pub fn global_markov(g: &PlayerGraph) -> Vec<CIStatement> {
    let n = g.vertices();
    let mut out = Vec::new();
    let mut role = vec![0u8; n];
    loop {
        let set = |r: u8| -> BTreeSet<usize> { (0..n).filter(|&v| role[v] == r).collect() };
        let (a, b, c) = (set(1), set(2), set(3));
        if !a.is_empty() && !b.is_empty() && a.first() < b.first() && g.separates(&c, &a, &b) {
            out.push(CIStatement { a, b, c });
        }
        // next assignment in base 4, last vertex fastest
        let mut k = n;
        loop {
            if k == 0 {
                out.sort();
                return out;
            }
            k -= 1;
            role[k] += 1;
            if role[k] < 4 {
                break;
            }
            role[k] = 0;
        }
    }
}

/// Format of a probability ring, read off its variables.
pub fn probability_format(ring: &Ring) -> Result<Format> {
    match ring.vars().last() {
        Some(VarName::Prob { index, .. }) => Format::new(index.iter().map(|j| j + 1).collect()),
        _ => Err(Error::RingMismatch("not a probability ring".into())),
    }
}

/// Marginal linear form: sum of the variables whose index restricts to
/// `values` on `players`.
fn marginal(ring: &Arc<Ring>, format: &Format, players: &[usize], values: &[usize]) -> Polynomial {
    let n = ring.nvars();
    let one = ring.field().one();
    let terms = format
        .indices()
        .enumerate()
        .filter(|(_, idx)| players.iter().zip(values).all(|(&p, &v)| idx[p] == v))
        .map(|(pos, _)| (Monomial::var(n, pos, 1), one.clone()))
        .collect();
    Polynomial::from_terms(ring.clone(), terms)
}

fn states(format: &Format, players: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    if players.is_empty() {
        return vec![Vec::new()];
    }
    let dims = players.iter().map(|&p| format.dims()[p]).collect();
    Format::new(dims).unwrap().indices().collect()
}

/// 2x2 determinants `q[iA,iB,iC] q[jA,jB,iC] - q[iA,jB,iC] q[jA,iB,iC]` of
/// the marginal tensor `q` over `A ∪ B ∪ C`, for `iA < jA`, `iB < jB`.
pub fn ci_ideal(ring: &Arc<Ring>, statements: &[CIStatement]) -> Result<Ideal> {
    let format = probability_format(ring)?;
    let mut gens = Vec::new();
    let mut seen = BTreeSet::new();
    for s in statements {
        if s.max_player().is_some_and(|m| m >= format.players()) {
            return Err(Error::InvalidStatement(format!(
                "statement {s} mentions a player outside 1..{}",
                format.players()
            )));
        }
        let players: Vec<usize> = s.a.iter().chain(&s.b).chain(&s.c).copied().collect();
        let (ra, rb, rc) = (states(&format, &s.a), states(&format, &s.b), states(&format, &s.c));
        let q = |x: &[usize], y: &[usize], z: &[usize]| {
            let values: Vec<usize> = x.iter().chain(y).chain(z).copied().collect();
            marginal(ring, &format, &players, &values)
        };
        for ic in &rc {
            for (ka, ia) in ra.iter().enumerate() {
                for ja in &ra[ka + 1..] {
                    for (kb, ib) in rb.iter().enumerate() {
                        for jb in &rb[kb + 1..] {
                            let det = &(&q(ia, ib, ic) * &q(ja, jb, ic))
                                - &(&q(ia, jb, ic) * &q(ja, ib, ic));
                            if !det.is_zero() && seen.insert(det.to_string()) {
                                gens.push(det);
                            }
                        }
                    }
                }
            }
        }
    }
    Ideal::new(ring.clone(), gens)
}

pub fn ci_ideal_of_graph(ring: &Arc<Ring>, g: &PlayerGraph) -> Result<Ideal> {
    let format = probability_format(ring)?;
    if g.vertices() != format.players() {
        return Err(Error::InvalidGraph(format!(
            "graph has {} vertices but the game has {} players",
            g.vertices(),
            format.players()
        )));
    }
    ci_ideal(ring, &global_markov(g))
}

/// Coordinate variables in index order, then the marginals
/// `p_{+..k..+}` by player and strategy.
pub fn hyperplane_forms(ring: &Arc<Ring>) -> Result<Vec<Polynomial>> {
    let format = probability_format(ring)?;
    let mut forms = ring.gens();
    for (i, &d) in format.dims().iter().enumerate() {
        for k in 0..d {
            forms.push(marginal(ring, &format, &[i], &[k]));
        }
    }
    Ok(forms)
}

/// Stage of the saturation pipeline reported to progress callbacks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SaturationPhase {
    CiIdeal,
    InputIdeal,
    Sum,
}

impl fmt::Display for SaturationPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SaturationPhase::CiIdeal => "CI ideal",
            SaturationPhase::InputIdeal => "input ideal",
            SaturationPhase::Sum => "sum",
        })
    }
}

/// The verbose trace line for a completed step.
pub fn progress_line(phase: SaturationPhase, step: usize) -> String {
    format!("Completed step {step} of saturating {phase}")
}

fn saturate_phase(
    ideal: &Ideal,
    forms: &[Polynomial],
    phase: SaturationPhase,
    cfg: &GbConfig,
    progress: &mut dyn FnMut(SaturationPhase, usize),
) -> Result<Ideal> {
    let mut cur = ideal.clone();
    for (k, f) in forms.iter().enumerate() {
        if !cur.gens().is_empty() {
            cur = saturate(&cur, f, cfg).map_err(|e| match e {
                Error::BudgetExceeded { steps, .. } => Error::BudgetExceeded {
                    steps,
                    context: format!(" while saturating {phase}, step {}", k + 1),
                },
                e => e,
            })?;
        }
        progress(phase, k + 1);
    }
    Ok(cur)
}

/// `sat(sat(V, W) + sat(I_C, W), W)`, or the unit ideal when `V + I_C`
/// already is. `progress` is called after every saturating form.
pub fn intersect_with_ci_model(
    v: &Ideal,
    statements: &[CIStatement],
    cfg: &GbConfig,
    progress: &mut dyn FnMut(SaturationPhase, usize),
) -> Result<Ideal> {
    let ring = v.ring();
    let ic = ci_ideal(ring, statements)?;
    if groebner_basis(&v.sum(&ic)?, cfg)?.is_unit() {
        return Ok(Ideal::unit(ring.clone()));
    }
    let forms = hyperplane_forms(ring)?;
    let ic_sat = saturate_phase(&ic, &forms, SaturationPhase::CiIdeal, cfg, progress)?;
    let v_sat = saturate_phase(v, &forms, SaturationPhase::InputIdeal, cfg, progress)?;
    let sum = v_sat.sum(&ic_sat)?;
    let out = saturate_phase(&sum, &forms, SaturationPhase::Sum, cfg, progress)?;
    Ok(groebner_basis(&out, cfg)?.to_ideal())
}

/// Ideal of the Spohn CI variety of `game` under the given statements.
pub fn spohn_ci(
    ring: &Arc<Ring>,
    game: &Game,
    statements: &[CIStatement],
    cfg: &GbConfig,
    progress: &mut dyn FnMut(SaturationPhase, usize),
) -> Result<Ideal> {
    let v = spohn_ideal(ring, game)?;
    intersect_with_ci_model(&v, statements, cfg, progress)
}
