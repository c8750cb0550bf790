use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{Ideal, MonomialOrder, Polynomial, Ring, VarName};

use super::{groebner_basis, GbConfig};

fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn fresh_aux(ring: &Ring, stem: &str) -> VarName {
    let mut k = 0usize;
    loop {
        let name = if k == 0 {
            stem.to_string()
        } else {
            format!("{stem}{k}")
        };
        if ring.index_of_name(&name).is_none() {
            return VarName::Aux(name);
        }
        k += 1;
    }
}

/// `ring[t]` with an elimination order for `t`, plus the embedding map.
fn with_elimination_var(ring: &Arc<Ring>) -> Result<(Arc<Ring>, Vec<Option<usize>>)> {
    let t = fresh_aux(ring, "t");
    let mut vars = ring.vars().to_vec();
    vars.push(t);
    let mut mask = vec![false; vars.len()];
    *mask.last_mut().unwrap() = true;
    let ext = Ring::new(vars, ring.field(), MonomialOrder::Block(mask))?;
    let embed = (0..ring.nvars()).map(Some).collect();
    Ok((ext, embed))
}

/// Generators of `ext`'s ideal free of the last variable, mapped back.
fn drop_last_var(ring: &Arc<Ring>, polys: &[Polynomial]) -> Result<Ideal> {
    let t = ring.nvars();
    let mut map: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
    map.push(None);
    let gens = polys
        .iter()
        .filter(|p| p.degree_in(t) == 0)
        .map(|p| p.map_to(ring, &map))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring.clone(), gens)
}

/// True iff both ideals have the same reduced Gröbner basis.
pub fn ideal_equals(a: &Ideal, b: &Ideal, cfg: &GbConfig) -> Result<bool> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch("ideals live in different rings".into()));
    }
    let ga = groebner_basis(a, cfg)?;
    let gb = groebner_basis(b, cfg)?;
    Ok(ga.polys() == gb.polys())
}

/// `I ∩ k[other variables]`, returned in the original ring.
pub fn eliminate(ideal: &Ideal, vars: &[usize], cfg: &GbConfig) -> Result<Ideal> {
    let ring = ideal.ring();
    if let Some(&bad) = vars.iter().find(|&&v| v >= ring.nvars()) {
        return Err(Error::InvalidArgument(format!("no variable with index {bad}")));
    }
    if vars.is_empty() {
        return Ok(ideal.clone());
    }
    let mut mask = vec![false; ring.nvars()];
    for &v in vars {
        mask[v] = true;
    }
    let block = ring.with_order(MonomialOrder::Block(mask.clone()))?;
    let gens = ideal.gens().iter().map(|g| g.reorder(&block)).collect();
    let gb = groebner_basis(&Ideal::new(block, gens)?, cfg)?;
    let kept = gb
        .polys()
        .iter()
        .filter(|p| vars.iter().all(|&v| p.degree_in(v) == 0))
        .map(|p| p.reorder(ring))
        .collect();
    Ideal::new(ring.clone(), kept)
}

/// `(I : f^∞)` via an auxiliary variable `t`: eliminate `t` from
/// `I + (1 - t f)`.
pub fn saturate(ideal: &Ideal, f: &Polynomial, cfg: &GbConfig) -> Result<Ideal> {
    let ring = ideal.ring();
    if !same_ring(f.ring(), ring) {
        return Err(Error::RingMismatch("saturating polynomial ring differs".into()));
    }
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot saturate by zero".into()));
    }
    if f.is_constant() || ideal.gens().is_empty() {
        return Ok(ideal.clone());
    }
    let (ext, embed) = with_elimination_var(ring)?;
    let t = ext.var(ring.nvars());
    let mut gens = ideal
        .gens()
        .iter()
        .map(|g| g.map_to(&ext, &embed))
        .collect::<Result<Vec<_>>>()?;
    let f_ext = f.map_to(&ext, &embed)?;
    gens.push(&ext.one() - &(&t * &f_ext));
    let gb = groebner_basis(&Ideal::new(ext, gens)?, cfg)?;
    drop_last_var(ring, gb.polys())
}

/// Saturates by each polynomial in turn, calling `on_step(k)` after the
/// `k`-th (one-based) form. Stops early once the ideal becomes the unit
/// ideal.
pub fn saturate_by_all(
    ideal: &Ideal,
    forms: &[Polynomial],
    cfg: &GbConfig,
    mut on_step: impl FnMut(usize),
) -> Result<Ideal> {
    let mut cur = ideal.clone();
    for (k, f) in forms.iter().enumerate() {
        if !is_unit_generated(&cur) {
            cur = saturate(&cur, f, cfg)?;
        }
        on_step(k + 1);
    }
    Ok(cur)
}

fn is_unit_generated(i: &Ideal) -> bool {
    i.gens().iter().any(|g| g.is_constant() && !g.is_zero())
}

/// `I ∩ J` via `t I + (1 - t) J`, eliminating `t`.
pub fn intersect(a: &Ideal, b: &Ideal, cfg: &GbConfig) -> Result<Ideal> {
    let ring = a.ring();
    if !same_ring(ring, b.ring()) {
        return Err(Error::RingMismatch("ideals live in different rings".into()));
    }
    if a.gens().is_empty() || b.gens().is_empty() {
        return Ok(Ideal::zero(ring.clone()));
    }
    let (ext, embed) = with_elimination_var(ring)?;
    let t = ext.var(ring.nvars());
    let one_minus_t = &ext.one() - &t;
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(&t * &g.map_to(&ext, &embed)?);
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &g.map_to(&ext, &embed)?);
    }
    let gb = groebner_basis(&Ideal::new(ext, gens)?, cfg)?;
    drop_last_var(ring, gb.polys())
}

/// Ideal quotient `(I : f)`.
pub fn quotient(ideal: &Ideal, f: &Polynomial, cfg: &GbConfig) -> Result<Ideal> {
    let ring = ideal.ring();
    if f.is_zero() {
        return Err(Error::InvalidArgument("quotient by zero".into()));
    }
    let principal = Ideal::new(ring.clone(), vec![f.clone()])?;
    let both = intersect(ideal, &principal, cfg)?;
    let gens = both
        .gens()
        .iter()
        .map(|g| {
            g.divide_exact(f)
                .ok_or_else(|| Error::CannotCertify("intersection generator not divisible".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring.clone(), gens)
}
