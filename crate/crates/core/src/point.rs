//! Points: even-length sequences `(α₁, α₂, …, α₂ₙ₋₁, α₂ₙ)` over a totally
//! ordered set satisfying
//!
//! * (i)   `α₁ < α₂`;
//! * (ii)  `α₂ᵢ₋₁ < α₂ᵢ₊₂` for `0 < i < n`;
//! * (iii) `α₂ᵢ₊₁ < α₂ᵢ₊₂` and `α₂ᵢ₊₁ ≮ α₂ⱼ₊₁` for `0 ≤ j < i < n`,
//!
//! where `a ≮ b` means neither `a < b` nor `a = b`. Over a total order that
//! is `a > b`, so the odd-position entries form a strictly increasing chain
//! and (ii) follows from (i) and (iii). The validator still checks every
//! condition separately, with the literal definition of `≮`.
//!
//! The *index* of a point is `α₂ₙ₋₁`, its *order* is `α₂ₙ` and its *length*
//! is `n`. `X_α` is the set of points with index `α`.

use std::collections::BTreeSet;
use std::fmt::{self, Display};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ordinal::{Cnf, Coefficient, ParseError};

/// `a ≮ b`: neither `a < b` nor `a = b`.
pub fn not_less<T: PartialOrd>(a: &T, b: &T) -> bool {
    !(a < b) && !(a == b)
}

/// Why a sequence is not a point. Subscripts use the 1-based positions of
/// the defining conditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointError {
    #[error("a point needs at least two entries")]
    Empty,
    #[error("a point needs an even number of entries, got {0}")]
    OddLength(usize),
    #[error("condition (i) fails: α_1 < α_2")]
    ConditionI,
    /// `α₂ᵢ₋₁ < α₂ᵢ₊₂` fails for this `i`.
    #[error("condition (ii) fails for i = {i}: α_{} < α_{}", 2 * i - 1, 2 * i + 2)]
    ConditionII { i: usize },
    /// `α₂ᵢ₊₁ < α₂ᵢ₊₂` fails for this `i`.
    #[error("condition (iii) fails for i = {i}: α_{} < α_{}", 2 * i + 1, 2 * i + 2)]
    ConditionIIIOrder { i: usize },
    /// `α₂ᵢ₊₁ ≮ α₂ⱼ₊₁` fails for this `(i, j)`.
    #[error("condition (iii) fails for i = {i}, j = {j}: α_{} ≮ α_{}", 2 * i + 1, 2 * j + 1)]
    ConditionIIIChain { i: usize, j: usize },
}

/// A validated point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<T> {
    entries: Vec<T>,
}

/// Checks conditions (i)–(iii) in order and reports the first failure.
pub fn validate<T: PartialOrd>(entries: &[T]) -> Result<(), PointError> {
    if entries.is_empty() {
        return Err(PointError::Empty);
    }
    if entries.len() % 2 != 0 {
        return Err(PointError::OddLength(entries.len()));
    }
    let n = entries.len() / 2;
    // a(k) is α_k with 1-based k
    let a = |k: usize| &entries[k - 1];

    if !(a(1) < a(2)) {
        return Err(PointError::ConditionI);
    }
    for i in 1..n {
        if !(a(2 * i - 1) < a(2 * i + 2)) {
            return Err(PointError::ConditionII { i });
        }
    }
    for i in 0..n {
        if !(a(2 * i + 1) < a(2 * i + 2)) {
            return Err(PointError::ConditionIIIOrder { i });
        }
        for j in 0..i {
            if !not_less(a(2 * i + 1), a(2 * j + 1)) {
                return Err(PointError::ConditionIIIChain { i, j });
            }
        }
    }
    Ok(())
}

impl<T: Ord + Clone> Point<T> {
    /// Validates `entries` and wraps them as a point.
    pub fn new(entries: Vec<T>) -> Result<Self, PointError> {
        validate(&entries)?;
        Ok(Point { entries })
    }

    /// The point `(index, order)`.
    pub fn pair(index: T, order: T) -> Result<Self, PointError> {
        Self::new(vec![index, order])
    }

    pub(crate) fn from_valid(entries: Vec<T>) -> Self {
        debug_assert_eq!(validate(&entries), Ok(()));
        Point { entries }
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    /// `α₂ₙ₋₁`.
    pub fn index(&self) -> &T {
        &self.entries[self.entries.len() - 2]
    }

    /// `α₂ₙ`.
    pub fn order(&self) -> &T {
        &self.entries[self.entries.len() - 1]
    }

    /// `n`, half the number of entries.
    pub fn length(&self) -> usize {
        self.entries.len() / 2
    }

    /// Membership in `X_a`.
    pub fn is_member(&self, a: &T) -> bool {
        self.index() == a
    }

    /// `(α₂ᵢ₊₁, α₂ᵢ₊₂)` for `i = 0..n`.
    pub fn pairs(&self) -> impl Iterator<Item = (&T, &T)> {
        self.entries.chunks_exact(2).map(|p| (&p[0], &p[1]))
    }

    /// Odd-position entries `α₁, α₃, …, α₂ₙ₋₁`.
    pub fn chain(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().step_by(2)
    }

    /// The schema this point instantiates.
    pub fn schema(&self) -> Schema<T> {
        Schema {
            chain: self.chain().cloned().collect(),
        }
    }
}

impl<T: Display> Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Failure to read a point from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointParseError {
    #[error("expected a parenthesised, comma-separated list")]
    Brackets,
    #[error("entry {entry}: {source}")]
    Entry {
        entry: usize,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Invalid(#[from] PointError),
}

/// Reads `"(" ordinal ("," ordinal)* ")"` without validating conditions.
pub fn parse_entries<C: Coefficient>(text: &str) -> Result<Vec<Cnf<C>>, PointParseError> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or(PointParseError::Brackets)?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .enumerate()
        .map(|(entry, s)| s.parse().map_err(|source| PointParseError::Entry { entry: entry + 1, source }))
        .collect()
}

impl<C: Coefficient> std::str::FromStr for Point<Cnf<C>> {
    type Err = PointParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Point::new(parse_entries(s)?)?)
    }
}

/// The strictly increasing chain of odd-position entries shared by a family
/// of points, ending at the common index. Each schema is one "type" of
/// member of `X_target`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Schema<T> {
    chain: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("schemas are enumerated for finite ordinals only")]
    NotFinite,
    #[error("2^{0} schemas is too many to enumerate (limit 2^{MAX_SCHEMA_TARGET})")]
    TooLarge(u64),
    #[error("schema chain must be nonempty and strictly increasing")]
    BadChain,
}

/// Largest `k` accepted by [`enumerate_schemas`].
pub const MAX_SCHEMA_TARGET: u64 = 24;

impl<T: Ord + Clone> Schema<T> {
    pub fn new(chain: Vec<T>) -> Result<Self, SchemaError> {
        if chain.is_empty() || chain.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SchemaError::BadChain);
        }
        Ok(Schema { chain })
    }

    pub fn chain(&self) -> &[T] {
        &self.chain
    }

    pub fn target(&self) -> &T {
        self.chain.last().expect("nonempty chain")
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True if the odd entries of `p` are exactly this chain.
    pub fn matches(&self, p: &Point<T>) -> bool {
        p.length() == self.chain.len() && p.chain().eq(self.chain.iter())
    }

    /// Completes the chain with the given even entries.
    pub fn instantiate(&self, orders: &[T]) -> Result<Point<T>, PointError> {
        if orders.len() != self.chain.len() {
            return Err(PointError::OddLength(self.chain.len() + orders.len()));
        }
        let entries = self
            .chain
            .iter()
            .zip(orders)
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        Point::new(entries)
    }
}

impl<T: Display> Schema<T> {
    /// The point shape with placeholders for the even entries, e.g.
    /// `(0, *, 1, *, 3, *)`.
    pub fn shape(&self) -> String {
        let parts: Vec<String> = self.chain.iter().map(|c| format!("{c}, *")).collect();
        format!("({})", parts.join(", "))
    }
}

impl<T: Display> Display for Schema<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.chain.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// All schemas with finite target `k`: every strictly increasing chain over
/// `{0, …, k}` ending at `k`. There are `2^k`, ordered by the subset of
/// `{0, …, k−1}` read as a binary number (bit `i` set means `i` is present).
pub fn enumerate_schemas<C: Coefficient>(k: &Cnf<C>) -> Result<Vec<Schema<Cnf<C>>>, SchemaError> {
    let k = k
        .as_natural()
        .ok_or(SchemaError::NotFinite)?
        .to_u64()
        .ok_or(SchemaError::TooLarge(u64::MAX))?;
    if k > MAX_SCHEMA_TARGET {
        return Err(SchemaError::TooLarge(k));
    }
    let target = Cnf::from_natural(k);
    Ok((0u64..1 << k)
        .map(|mask| {
            let mut chain: Vec<Cnf<C>> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(Cnf::from_natural)
                .collect();
            chain.push(target.clone());
            Schema { chain }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SampleError {
    #[error("the pool does not contain the requested index")]
    IndexNotInPool,
    #[error("the pool has no element above the requested index")]
    NothingAbove,
}

/// Seeded random member of `X_a` with all entries from `pool`.
pub fn sample_point<T: Ord + Clone>(a: &T, pool: &BTreeSet<T>, seed: u64) -> Result<Point<T>, SampleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_point_with(&mut rng, a, pool)
}

/// [`sample_point`] drawing from a caller-supplied generator.
///
/// Each pool element below `a` joins the odd chain with probability ½; each
/// even entry is uniform over the pool elements above its odd entry.
pub fn sample_point_with<T: Ord + Clone, R: Rng + ?Sized>(
    rng: &mut R,
    a: &T,
    pool: &BTreeSet<T>,
) -> Result<Point<T>, SampleError> {
    if !pool.contains(a) {
        return Err(SampleError::IndexNotInPool);
    }
    if pool.range(a..).nth(1).is_none() {
        return Err(SampleError::NothingAbove);
    }
    let mut chain: Vec<&T> = pool.range(..a).filter(|_| rng.gen_bool(0.5)).collect();
    chain.push(a);
    let elems: Vec<&T> = pool.iter().collect();
    let mut entries = Vec::with_capacity(2 * chain.len());
    for c in chain {
        let above = &elems[elems.partition_point(|e| *e <= c)..];
        let order = above.choose(rng).expect("a is below the pool maximum");
        entries.push(c.clone());
        entries.push((*order).clone());
    }
    Ok(Point::from_valid(entries))
}
