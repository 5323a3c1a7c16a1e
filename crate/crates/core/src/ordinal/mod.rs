//! Countable ordinals below ε₀ in Cantor normal form.
//!
//! An ordinal is stored as the finite sum `ω^e₁·c₁ + ω^e₂·c₂ + … + ω^eₖ·cₖ`
//! with `e₁ > e₂ > … > eₖ` and every `cᵢ ≥ 1`. The empty sum is zero. Because
//! the representation is canonical, structural equality is ordinal equality
//! and the lexicographic order on term sequences is the ordinal order.
//!
//! The coefficient type is generic (see [`Coefficient`]); the crate root
//! exports [`crate::Ordinal`] (arbitrary precision) and
//! [`crate::SmallOrdinal`] (`u64` coefficients, overflow panics in debug).

mod format;
mod parse;
mod random;

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, ToPrimitive, Unsigned};
use serde::{Deserialize, Serialize};

pub use parse::{ParseError, ParseErrorKind};
pub use random::{random_ordinal, GenConfig};

/// Scalar type usable as a Cantor normal form coefficient.
pub trait Coefficient:
    Clone + Ord + Hash + Debug + Display + FromStr + Unsigned + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Clone
        + Ord
        + Hash
        + Debug
        + Display
        + FromStr
        + Unsigned
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Three-valued result of comparing two ordinals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Comparison {
    #[serde(rename = "LT")]
    Lt,
    #[serde(rename = "EQ")]
    Eq,
    #[serde(rename = "GT")]
    Gt,
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Comparison::Lt,
            Ordering::Equal => Comparison::Eq,
            Ordering::Greater => Comparison::Gt,
        }
    }
}

impl From<Comparison> for Ordering {
    fn from(c: Comparison) -> Self {
        match c {
            Comparison::Lt => Ordering::Less,
            Comparison::Eq => Ordering::Equal,
            Comparison::Gt => Ordering::Greater,
        }
    }
}

impl Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Lt => "LT",
            Comparison::Eq => "EQ",
            Comparison::Gt => "GT",
        })
    }
}

/// One summand `ω^exponent · coefficient`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term<C> {
    exponent: Cnf<C>,
    coefficient: C,
}

impl<C: Coefficient> Term<C> {
    pub fn exponent(&self) -> &Cnf<C> {
        &self.exponent
    }

    pub fn coefficient(&self) -> &C {
        &self.coefficient
    }
}

/// An ordinal below ε₀ in Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cnf<C> {
    terms: Vec<Term<C>>,
}

impl<C: Coefficient> Cnf<C> {
    pub fn zero() -> Self {
        Cnf { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_natural(1u32)
    }

    /// The first infinite ordinal.
    pub fn omega() -> Self {
        Self::power_of_omega(Self::one())
    }

    pub fn from_natural<N: Into<u64>>(n: N) -> Self {
        let n = n.into();
        if n == 0 {
            return Self::zero();
        }
        let c = C::from_u64(n).expect("coefficient type cannot hold value");
        Cnf {
            terms: vec![Term {
                exponent: Self::zero(),
                coefficient: c,
            }],
        }
    }

    /// Finite ordinal from an already-built coefficient value.
    pub fn from_coefficient(c: C) -> Self {
        Self::monomial(Self::zero(), c)
    }

    /// `ω^exponent`.
    pub fn power_of_omega(exponent: Self) -> Self {
        Cnf {
            terms: vec![Term {
                exponent,
                coefficient: C::one(),
            }],
        }
    }

    /// `ω^exponent · coefficient`; zero when the coefficient is zero.
    pub fn monomial(exponent: Self, coefficient: C) -> Self {
        if coefficient.is_zero() {
            return Self::zero();
        }
        Cnf {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, checking the
    /// canonical-form invariants. Returns `None` if exponents are not
    /// strictly decreasing or a coefficient is zero.
    pub fn from_terms(terms: Vec<(Self, C)>) -> Option<Self> {
        for w in terms.windows(2) {
            if w[0].0 <= w[1].0 {
                return None;
            }
        }
        if terms.iter().any(|(_, c)| c.is_zero()) {
            return None;
        }
        Some(Cnf {
            terms: terms
                .into_iter()
                .map(|(exponent, coefficient)| Term {
                    exponent,
                    coefficient,
                })
                .collect(),
        })
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for 0, 1, 2, …
    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// The value as a coefficient if this ordinal is finite.
    pub fn as_natural(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    /// The value as a `u64` if this ordinal is finite and fits.
    pub fn to_u64(&self) -> Option<u64> {
        self.as_natural().and_then(|c| c.to_u64())
    }

    /// True for successor ordinals (finite part nonzero).
    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    /// True for nonzero ordinals that are not successors.
    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// Leading exponent; `None` for zero.
    pub fn degree(&self) -> Option<&Self> {
        self.terms.first().map(|t| &t.exponent)
    }

    /// Nesting depth of exponents: 0 for zero, 1 for nonzero finite.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.depth())
            .max()
            .unwrap_or(0)
    }

    /// Checks the canonical-form invariants recursively.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|t| !t.coefficient.is_zero() && t.exponent.is_canonical())
            && self.terms.windows(2).all(|w| w[0].exponent > w[1].exponent)
    }

    /// Lexicographic CNF comparison: leading exponents, then coefficients,
    /// then the remainders.
    pub fn compare(&self, other: &Self) -> Comparison {
        self.cmp(other).into()
    }

    pub fn successor(&self) -> Self {
        self.add(&Self::one())
    }

    /// Ordinal sum `self + rhs`. Terms of `self` whose exponent is below the
    /// leading exponent of `rhs` are absorbed.
    pub fn add(&self, rhs: &Self) -> Self {
        let Some(lead) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term<C>> = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut rest = rhs.terms.iter();
        for t in &self.terms {
            match t.exponent.cmp(&lead.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => {
                    terms.push(Term {
                        exponent: t.exponent.clone(),
                        coefficient: t.coefficient.clone() + lead.coefficient.clone(),
                    });
                    rest.next();
                    break;
                }
                Ordering::Less => break,
            }
        }
        terms.extend(rest.cloned());
        Cnf { terms }
    }

    /// Ordinal product `self · rhs`, distributing `self` over the terms of
    /// `rhs` from the left.
    pub fn multiply(&self, rhs: &Self) -> Self {
        let Some(lead) = self.terms.first() else {
            return Self::zero();
        };
        let mut out = Self::zero();
        for t in &rhs.terms {
            let piece = if t.exponent.is_zero() {
                // (ω^e₁·c₁ + rest) · n = ω^e₁·(c₁·n) + rest
                let mut terms = self.terms.clone();
                terms[0].coefficient = lead.coefficient.clone() * t.coefficient.clone();
                Cnf { terms }
            } else {
                Self::monomial(lead.exponent.add(&t.exponent), t.coefficient.clone())
            };
            out = out.add(&piece);
        }
        out
    }

    /// Parses the ordinal text grammar; see [`parse`](Self::parse).
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        parse::parse(text)
    }

    /// Converts to another coefficient type, failing if a coefficient does
    /// not fit.
    pub fn convert<D: Coefficient>(&self) -> Option<Cnf<D>> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = D::from_u64(t.coefficient.to_u64()?)?;
            terms.push(Term {
                exponent: t.exponent.convert()?,
                coefficient: c,
            });
        }
        Some(Cnf { terms })
    }
}

impl<C: Coefficient> Default for Cnf<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> PartialOrd for Cnf<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<C: Coefficient> Ord for Cnf<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let o = a
                .exponent
                .cmp(&b.exponent)
                .then_with(|| a.coefficient.cmp(&b.coefficient));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl<C: Coefficient> FromStr for Cnf<C> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

impl<C: Coefficient> Debug for Cnf<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cnf({self})")
    }
}

impl<C: Coefficient> std::ops::Add for &Cnf<C> {
    type Output = Cnf<C>;

    fn add(self, rhs: Self) -> Cnf<C> {
        Cnf::add(self, rhs)
    }
}

impl<C: Coefficient> std::ops::Mul for &Cnf<C> {
    type Output = Cnf<C>;

    fn mul(self, rhs: Self) -> Cnf<C> {
        self.multiply(rhs)
    }
}

/// Types with an immediate successor in their order. Used to pick the
/// default witness when lifting a point along a bonding map.
pub trait Successor {
    fn successor(&self) -> Self;
}

impl<C: Coefficient> Successor for Cnf<C> {
    fn successor(&self) -> Self {
        Cnf::successor(self)
    }
}

macro_rules! int_successor {
    ($($t:ty),*) => {$(
        impl Successor for $t {
            fn successor(&self) -> Self {
                self + 1
            }
        }
    )*};
}

int_successor!(u8, u16, u32, u64, usize, i32, i64);
