use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gametensor::Format;

use super::field::{CoefField, Scalar};
use super::monomial::{Monomial, MonomialOrder};
use super::poly::Polynomial;

/// Structured variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VarName {
    /// Probability that `player` plays `strategy`, printed `p_{i,j}`.
    Nash { player: usize, strategy: usize },
    /// Joint probability of a pure profile, printed `p_{j0,...,j(n-1)}`.
    Prob { label: String, index: Vec<usize> },
    /// Konstanz chart variable of a player, printed `k_i`.
    Konstanz { label: String, player: usize },
    /// Helper variable for saturation and elimination.
    Aux(String),
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarName::Nash { player, strategy } => write!(f, "p_{{{player},{strategy}}}"),
            VarName::Prob { label, index } => {
                write!(f, "{label}_{{")?;
                for (k, j) in index.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{j}")?;
                }
                write!(f, "}}")
            }
            VarName::Konstanz { label, player } => write!(f, "{label}_{player}"),
            VarName::Aux(s) => write!(f, "{s}"),
        }
    }
}

/// A polynomial ring over a coefficient field with a fixed monomial order.
#[derive(Debug)]
pub struct Ring {
    vars: Vec<VarName>,
    field: CoefField,
    order: MonomialOrder,
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.field == other.field && self.order == other.order
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(vars: Vec<VarName>, field: CoefField, order: MonomialOrder) -> Result<Arc<Ring>> {
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a ring needs at least one variable".into()));
        }
        if let MonomialOrder::Block(mask) = &order {
            if mask.len() != vars.len() {
                return Err(Error::InvalidArgument(
                    "block order mask does not match the number of variables".into(),
                ));
            }
        }
        let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        let mut lookup = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if lookup.insert(n.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate variable {n}")));
            }
        }
        Ok(Arc::new(Ring {
            vars,
            field,
            order,
            names,
            lookup,
        }))
    }

    /// Ring of joint probabilities `label_{j0,...}` in tensor index order.
    pub fn probability(format: &Format, field: CoefField, label: &str) -> Result<Arc<Ring>> {
        validate_label(label)?;
        let vars = format
            .indices()
            .map(|index| VarName::Prob {
                label: label.to_string(),
                index,
            })
            .collect();
        Ring::new(vars, field, MonomialOrder::Grevlex)
    }

    /// Ring of per-player mixed-strategy variables `p_{i,j}`, ordered by
    /// player then strategy.
    pub fn nash(format: &Format, field: CoefField) -> Result<Arc<Ring>> {
        let vars = format
            .dims()
            .iter()
            .enumerate()
            .flat_map(|(player, &d)| (0..d).map(move |strategy| VarName::Nash { player, strategy }))
            .collect();
        Ring::new(vars, field, MonomialOrder::Grevlex)
    }

    pub fn vars(&self) -> &[VarName] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> CoefField {
        self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, v: &VarName) -> Option<usize> {
        self.vars.iter().position(|w| w == v)
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.order.cmp(a, b)
    }

    /// Same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>> {
        Ring::new(self.vars.clone(), self.field, order)
    }

    /// Appends variables. Under a block order the new variables are not
    /// flagged for elimination.
    pub fn extend(&self, extra: Vec<VarName>) -> Result<Arc<Ring>> {
        let n_extra = extra.len();
        let mut vars = self.vars.clone();
        vars.extend(extra);
        let order = match &self.order {
            MonomialOrder::Block(mask) => {
                let mut mask = mask.clone();
                mask.extend(std::iter::repeat(false).take(n_extra));
                MonomialOrder::Block(mask)
            }
            o => o.clone(),
        };
        Ring::new(vars, self.field, order)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        Polynomial::from_terms(
            self.clone(),
            vec![(Monomial::var(self.nvars(), i, 1), self.field.one())],
        )
    }

    pub fn var_by_name(self: &Arc<Self>, v: &VarName) -> Option<Polynomial> {
        self.index_of(v).map(|i| self.var(i))
    }

    pub fn constant(self: &Arc<Self>, c: Scalar) -> Polynomial {
        Polynomial::from_terms(self.clone(), vec![(Monomial::one(self.nvars()), c)])
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial::from_terms(self.clone(), Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn gens(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }
}

fn validate_label(label: &str) -> Result<()> {
    let ok = !label.is_empty()
        && label.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
        && label.chars().all(|c| c.is_ascii_alphanumeric());
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("invalid variable label {label:?}")))
    }
}
