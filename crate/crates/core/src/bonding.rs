//! Bonding maps `f^β_α : X_β → X_α` for `α ≤ β` and their sections.
//!
//! For `x = (α₁, α₂, …, α₂ₙ) ∈ X_β`:
//!
//! * Case I, `α ≤ α₁`: `f(x) = (α, α₂)`.
//! * Case II, `α > α₁`: take the least pair position `j ∈ 1..n` with
//!   `α ≤ α₂ⱼ₊₁` and set `f(x) = (α₁, …, α₂ⱼ, α, α₂ⱼ₊₂)`.
//!
//! Case II compares with `≤`. With a strict comparison `f^α_α` would not be
//! the identity and `(0, a, 2, b, 3, c) ↦ (0, a, 2, b)` under `f³₂` would
//! fail. Such a `j` exists because `α ≤ β = α₂ₙ₋₁`.
//!
//! A section of `f^β_α` at `x ∈ X_α` appends the pair `(β, γ)` for some
//! `γ > β`, which is the preimage used to show every bonding map is onto.

use std::fmt::{self, Display};

use thiserror::Error;

use crate::ordinal::Successor;
use crate::point::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BondingError {
    #[error("point {point} is not in X_{expected}")]
    NotMember { point: String, expected: String },
    #[error("bonding maps go downward: target {lower} is above source {upper}")]
    TargetAboveSource { upper: String, lower: String },
    #[error("indices must satisfy {0}")]
    Ordering(String),
    #[error("section witness {gamma} must lie above {beta}")]
    WitnessNotAbove { beta: String, gamma: String },
}

/// The pair `(β, α)` naming `f^β_α : X_β → X_α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MapSpec<T> {
    source: T,
    target: T,
}

impl<T: Ord + Clone + fmt::Debug> MapSpec<T> {
    pub fn new(source: T, target: T) -> Result<Self, BondingError> {
        if target > source {
            return Err(BondingError::TargetAboveSource {
                upper: format!("{source:?}"),
                lower: format!("{target:?}"),
            });
        }
        Ok(MapSpec { source, target })
    }

    /// `f^a_a`.
    pub fn identity(a: T) -> Self {
        MapSpec {
            source: a.clone(),
            target: a,
        }
    }

    pub fn source(&self) -> &T {
        &self.source
    }

    pub fn target(&self) -> &T {
        &self.target
    }

    /// Applies the bonding map to a member of `X_source`.
    pub fn apply(&self, x: &Point<T>) -> Result<Point<T>, BondingError> {
        check_member(x, &self.source)?;
        Ok(project_unchecked(&self.target, x))
    }
}

impl<T: Display> Display for MapSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f^{}_{}", self.source, self.target)
    }
}

fn check_member<T: Ord + Clone + fmt::Debug>(x: &Point<T>, a: &T) -> Result<(), BondingError> {
    if x.is_member(a) {
        Ok(())
    } else {
        Err(BondingError::NotMember {
            point: format!("{:?}", x.entries()),
            expected: format!("{a:?}"),
        })
    }
}

/// `f^{index(x)}_target(x)`; the caller guarantees `target ≤ index(x)`.
fn project_unchecked<T: Ord + Clone>(target: &T, x: &Point<T>) -> Point<T> {
    let e = x.entries();
    if target <= &e[0] {
        return Point::from_valid(vec![target.clone(), e[1].clone()]);
    }
    let j = (1..x.length())
        .find(|&j| target <= &e[2 * j])
        .expect("target ≤ index guarantees a pair position");
    let mut out = Vec::with_capacity(2 * j + 2);
    out.extend_from_slice(&e[..2 * j]);
    out.push(target.clone());
    out.push(e[2 * j + 1].clone());
    Point::from_valid(out)
}

/// `f^{spec.source}_{spec.target}(x)`.
pub fn project<T: Ord + Clone + fmt::Debug>(spec: &MapSpec<T>, x: &Point<T>) -> Result<Point<T>, BondingError> {
    spec.apply(x)
}

/// Lifts `x ∈ X_alpha` to `X_beta` so that `f^beta_alpha` sends the lift
/// back to `x`. Appends `(beta, gamma)`; `gamma` defaults to the successor
/// of `beta`.
pub fn section<T: Ord + Clone + fmt::Debug + Successor>(
    alpha: &T,
    beta: &T,
    x: &Point<T>,
    gamma: Option<T>,
) -> Result<Point<T>, BondingError> {
    let gamma = gamma.unwrap_or_else(|| beta.successor());
    section_with_witness(alpha, beta, x, gamma)
}

/// [`section`] with an explicit witness `gamma > beta`.
pub fn section_with_witness<T: Ord + Clone + fmt::Debug>(
    alpha: &T,
    beta: &T,
    x: &Point<T>,
    gamma: T,
) -> Result<Point<T>, BondingError> {
    check_member(x, alpha)?;
    if beta < alpha {
        return Err(BondingError::TargetAboveSource {
            upper: format!("{beta:?}"),
            lower: format!("{alpha:?}"),
        });
    }
    if gamma <= *beta {
        return Err(BondingError::WitnessNotAbove {
            beta: format!("{beta:?}"),
            gamma: format!("{gamma:?}"),
        });
    }
    if beta == alpha {
        return Ok(x.clone());
    }
    let mut entries = x.entries().to_vec();
    entries.push(beta.clone());
    entries.push(gamma);
    Ok(Point::from_valid(entries))
}

/// `f^alpha_alpha(x) = x`.
pub fn check_identity<T: Ord + Clone + fmt::Debug>(alpha: &T, x: &Point<T>) -> Result<bool, BondingError> {
    let id = MapSpec::identity(alpha.clone());
    Ok(id.apply(x)? == *x)
}

/// `f^beta_alpha ∘ f^gamma_beta = f^gamma_alpha` at `x ∈ X_gamma`.
pub fn check_composition<T: Ord + Clone + fmt::Debug>(
    alpha: &T,
    beta: &T,
    gamma: &T,
    x: &Point<T>,
) -> Result<bool, BondingError> {
    if !(alpha <= beta && beta <= gamma) {
        return Err(BondingError::Ordering(format!("{alpha:?} ≤ {beta:?} ≤ {gamma:?}")));
    }
    check_member(x, gamma)?;
    let mid = project_unchecked(beta, x);
    Ok(project_unchecked(alpha, &mid) == project_unchecked(alpha, x))
}
