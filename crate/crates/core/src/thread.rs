//! Finite fragments of threads.
//!
//! A thread of the inverse system would pick `x_α ∈ X_α` for every index
//! with `f^β_α(x_β) = x_α` whenever `α ≤ β`. No such thread exists over the
//! countable ordinals, but every finite restriction of one is a compatible
//! [`Family`], and the properties that rule out a full thread can be checked
//! on those fragments:
//!
//! * the order of each member is above its index, so the orders dominate the
//!   indices;
//! * within a compatible family with a top, the order of a member is a
//!   function of its length, and length never decreases with the index.
//!
//! Together these force the orders of a full thread into a sequence indexed
//! by lengths (natural numbers) that is cofinal in the index set, which is
//! impossible when the index set has uncountable cofinality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Debug, Display};

use thiserror::Error;

use crate::bonding::{section, BondingError, MapSpec};
use crate::ordinal::Successor;
use crate::point::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("a family needs at least one member")]
    Empty,
    #[error("member at key {key} has index {index}")]
    WrongIndex { key: String, index: String },
    #[error("family is not compatible")]
    Incompatible,
    #[error("new key {beta} must exceed the current maximum {max}")]
    KeyNotAbove { beta: String, max: String },
    #[error(transparent)]
    Bonding(#[from] BondingError),
}

/// A finite map from indices to points, each point a member of the `X`
/// named by its key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family<T: Ord> {
    members: BTreeMap<T, Point<T>>,
}

/// One line of an order/length profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileRow<T> {
    pub index: T,
    pub length: usize,
    pub order: T,
}

impl<T: Ord + Clone + Debug> Family<T> {
    pub fn new(members: BTreeMap<T, Point<T>>) -> Result<Self, FamilyError> {
        if members.is_empty() {
            return Err(FamilyError::Empty);
        }
        for (k, p) in &members {
            if !p.is_member(k) {
                return Err(FamilyError::WrongIndex {
                    key: format!("{k:?}"),
                    index: format!("{:?}", p.index()),
                });
            }
        }
        Ok(Family { members })
    }

    pub fn singleton(p: Point<T>) -> Self {
        Family {
            members: BTreeMap::from([(p.index().clone(), p)]),
        }
    }

    pub fn members(&self) -> &BTreeMap<T, Point<T>> {
        &self.members
    }

    pub fn get(&self, key: &T) -> Option<&Point<T>> {
        self.members.get(key)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn keys(&self) -> impl Iterator<Item = &T> {
        self.members.keys()
    }

    /// The member at the largest key.
    pub fn top(&self) -> (&T, &Point<T>) {
        self.members.last_key_value().expect("nonempty family")
    }

    /// Keeps only the given keys; `None` if none of them are present.
    pub fn restrict(&self, keys: &BTreeSet<T>) -> Option<Self> {
        let members: BTreeMap<T, Point<T>> = self
            .members
            .iter()
            .filter(|(k, _)| keys.contains(k))
            .map(|(k, p)| (k.clone(), p.clone()))
            .collect();
        (!members.is_empty()).then_some(Family { members })
    }

    /// The thread condition on every pair of keys `a ≤ b`.
    pub fn is_compatible(&self) -> bool {
        let keys: Vec<&T> = self.members.keys().collect();
        keys.iter().enumerate().all(|(i, b)| {
            keys[..i].iter().all(|a| {
                MapSpec::new((*b).clone(), (*a).clone())
                    .and_then(|f| f.apply(&self.members[*b]))
                    .as_ref()
                    == Ok(&self.members[*a])
            })
        })
    }

    /// Adds `beta` above the current top by lifting the top member along
    /// `f^beta_top`. The witness `gamma` defaults to the successor of `beta`.
    pub fn extend(&self, beta: T, gamma: Option<T>) -> Result<Self, FamilyError>
    where
        T: Successor,
    {
        if !self.is_compatible() {
            return Err(FamilyError::Incompatible);
        }
        let (max, top) = self.top();
        if beta <= *max {
            return Err(FamilyError::KeyNotAbove {
                beta: format!("{beta:?}"),
                max: format!("{max:?}"),
            });
        }
        let lifted = section(max, &beta, top, gamma)?;
        let mut members = self.members.clone();
        members.insert(beta, lifted);
        Ok(Family { members })
    }

    /// One row per key, in key order.
    pub fn order_length_profile(&self) -> Vec<ProfileRow<T>> {
        self.members
            .iter()
            .map(|(k, p)| ProfileRow {
                index: k.clone(),
                length: p.length(),
                order: p.order().clone(),
            })
            .collect()
    }

    /// Whether members of equal length have equal order. Requires a
    /// compatible family; its top plays the common upper index.
    pub fn check_order_function_of_length(&self) -> Result<bool, FamilyError> {
        if !self.is_compatible() {
            return Err(FamilyError::Incompatible);
        }
        let mut by_length: BTreeMap<usize, &T> = BTreeMap::new();
        for p in self.members.values() {
            if let Some(prev) = by_length.insert(p.length(), p.order()) {
                if prev != p.order() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every member's order lies above its index.
    pub fn orders_dominate_indices(&self) -> bool {
        self.members.iter().all(|(k, p)| p.order() > k)
    }

    /// Lengths never decrease as the key increases.
    pub fn lengths_nondecreasing(&self) -> bool {
        let lengths: Vec<usize> = self.members.values().map(Point::length).collect();
        lengths.windows(2).all(|w| w[0] <= w[1])
    }
}

/// The family `{a ↦ f^gamma_a(top) : a ∈ indices}`.
pub fn project_family<T: Ord + Clone + Debug>(
    gamma: &T,
    top: &Point<T>,
    indices: &BTreeSet<T>,
) -> Result<Family<T>, FamilyError> {
    if indices.is_empty() {
        return Err(FamilyError::Empty);
    }
    let mut members = BTreeMap::new();
    for a in indices {
        let spec = MapSpec::new(gamma.clone(), a.clone())?;
        members.insert(a.clone(), spec.apply(top)?);
    }
    Ok(Family { members })
}

impl<T: Ord + Display> Display for Family<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, p)) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {p}")?;
        }
        f.write_str("}")
    }
}
