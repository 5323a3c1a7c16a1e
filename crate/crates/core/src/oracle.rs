//! Brute-force verification of the bonding-map laws.
//!
//! [`exhaustive_oracle`] enumerates every point over a small pool and checks
//! each law on every applicable case. [`run_laws`] samples the same laws at
//! random over pools too large to enumerate. Both produce one
//! [`CheckRecord`] per law.

use std::collections::BTreeSet;
use std::fmt::{Debug, Display};

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bonding::{check_composition, check_identity, section_with_witness, MapSpec};
use crate::point::{sample_point_with, validate, Point};
use crate::thread::project_family;

/// Outcome of one law over all of its cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub first_counterexample: Option<String>,
}

impl CheckRecord {
    fn new(name: &str) -> Self {
        CheckRecord {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            first_counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Result of [`exhaustive_oracle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub pool: Vec<String>,
    /// Points found by building chains and completing them.
    pub points: usize,
    /// Points found by a pair-by-pair search filtered by the literal
    /// conditions.
    pub recount: usize,
    pub checks: Vec<CheckRecord>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.points == self.recount && self.checks.iter().all(CheckRecord::passed)
    }
}

/// Result of [`run_laws`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub pool: Vec<String>,
    pub samples: usize,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }
}

/// Conditions (i)–(iii) as three literal quantified loops over 0-based
/// positions, independent of [`validate`].
pub fn literal_conditions<T: PartialOrd>(s: &[T]) -> bool {
    if s.is_empty() || s.len() % 2 == 1 {
        return false;
    }
    let n = s.len() / 2;
    // (i) α1 < α2
    let cond_i = s[0] < s[1];
    // (ii) α(2i-1) < α(2i+2) for 0 < i < n
    let mut cond_ii = true;
    for i in 1..n {
        cond_ii &= s[2 * i - 2] < s[2 * i + 1];
    }
    // (iii) α(2i+1) < α(2i+2), and α(2i+1) ≮ α(2j+1) for 0 ≤ j < i < n
    let mut cond_iii = true;
    for i in 0..n {
        cond_iii &= s[2 * i] < s[2 * i + 1];
        for j in 0..i {
            let less = s[2 * i] < s[2 * j];
            let equal = s[2 * i] == s[2 * j];
            cond_iii &= !less && !equal;
        }
    }
    cond_i && cond_ii && cond_iii
}

/// Every point with entries in `pool`, built from chains of odd entries
/// (nonempty strictly increasing subsets) and all even completions.
pub fn enumerate_points<T: Ord + Clone>(pool: &BTreeSet<T>) -> Vec<Point<T>> {
    let elems: Vec<&T> = pool.iter().collect();
    let mut out = Vec::new();
    let mut chain: Vec<usize> = Vec::new();
    chains(&elems, 0, &mut chain, &mut out);
    out.sort();
    out
}

fn chains<T: Ord + Clone>(elems: &[&T], start: usize, chain: &mut Vec<usize>, out: &mut Vec<Point<T>>) {
    if !chain.is_empty() {
        complete(elems, chain, &mut Vec::new(), out);
    }
    for i in start..elems.len() {
        chain.push(i);
        chains(elems, i + 1, chain, out);
        chain.pop();
    }
}

fn complete<T: Ord + Clone>(elems: &[&T], chain: &[usize], evens: &mut Vec<usize>, out: &mut Vec<Point<T>>) {
    let k = evens.len();
    if k == chain.len() {
        let entries = chain
            .iter()
            .zip(evens.iter())
            .flat_map(|(&a, &b)| [elems[a].clone(), elems[b].clone()])
            .collect();
        out.push(Point::from_valid(entries));
        return;
    }
    for b in chain[k] + 1..elems.len() {
        evens.push(b);
        complete(elems, chain, evens, out);
        evens.pop();
    }
}

/// Independent recount: extends sequences two entries at a time over all of
/// `pool × pool`, keeping prefixes that satisfy [`literal_conditions`].
fn recount_points<T: Ord + Clone>(pool: &BTreeSet<T>) -> Vec<Vec<T>> {
    let mut found = Vec::new();
    let mut frontier: Vec<Vec<T>> = vec![Vec::new()];
    while let Some(prefix) = frontier.pop() {
        for b in pool.iter().rev() {
            for a in pool.iter().rev() {
                let mut next = prefix.clone();
                next.push(a.clone());
                next.push(b.clone());
                if literal_conditions(&next) {
                    found.push(next.clone());
                    frontier.push(next);
                }
            }
        }
    }
    found.sort();
    found
}

fn all_sequences<T: Clone>(pool: &[T], len: usize) -> Vec<Vec<T>> {
    let mut seqs: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..len {
        seqs = seqs
            .into_iter()
            .flat_map(|s| {
                pool.iter().map(move |e| {
                    let mut t = s.clone();
                    t.push(e.clone());
                    t
                })
            })
            .collect();
    }
    seqs
}

fn show<T: Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Longest sequence checked by the validator-agreement pass.
pub const VALIDATOR_MAX_LEN: usize = 6;

/// Exhaustively checks every law over the points with entries in `pool`.
pub fn exhaustive_oracle<T: Ord + Clone + Debug + Display>(pool: &BTreeSet<T>) -> OracleReport {
    let points = enumerate_points(pool);
    let recount = recount_points(pool);
    let elems: Vec<T> = pool.iter().cloned().collect();

    let mut enumeration = CheckRecord::new("enumeration recount");
    let built: Vec<Vec<T>> = points.iter().map(|p| p.entries().to_vec()).collect();
    enumeration.record(built == recount, || {
        format!("chain enumeration found {}, literal search found {}", built.len(), recount.len())
    });

    let mut validator = CheckRecord::new("validator agreement");
    for len in (2..=VALIDATOR_MAX_LEN).step_by(2) {
        for s in all_sequences(&elems, len) {
            validator.record(validate(&s).is_ok() == literal_conditions(&s), || show(&s));
        }
    }

    let mut identity = CheckRecord::new("identity");
    let mut well_defined = CheckRecord::new("projection well-defined");
    let mut monotone = CheckRecord::new("length monotonicity");
    let mut subsequence = CheckRecord::new("subsequence");
    let mut composition = CheckRecord::new("composition");
    let mut lemma = CheckRecord::new("order is a function of length");

    for x in &points {
        let gamma = x.index();
        identity.record(check_identity(gamma, x) == Ok(true), || x.to_string());

        let below: Vec<&T> = pool.range(..=gamma).collect();
        for (ai, &alpha) in below.iter().enumerate() {
            let y = MapSpec::new(gamma.clone(), alpha.clone())
                .and_then(|f| f.apply(x))
                .expect("alpha ≤ gamma and x ∈ X_gamma");
            well_defined.record(validate(y.entries()).is_ok() && y.is_member(alpha), || {
                format!("f^{gamma}_{alpha}{x} = {y}")
            });
            monotone.record(y.length() <= x.length(), || format!("f^{gamma}_{alpha}{x} = {y}"));
            subsequence.record(is_projection_subsequence(&y, x), || format!("f^{gamma}_{alpha}{x} = {y}"));
            for &beta in &below[ai..] {
                composition.record(check_composition(alpha, beta, gamma, x) == Ok(true), || {
                    format!("α={alpha}, β={beta}, γ={gamma}, x={x}")
                });
            }
        }

        // every nonempty key subset of [0, gamma]
        for mask in 1u64..(1 << below.len()) {
            let keys: BTreeSet<T> = below
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, k)| (*k).clone())
                .collect();
            let ok = project_family(gamma, x, &keys).is_ok_and(|f| {
                f.is_compatible()
                    && f.check_order_function_of_length() == Ok(true)
                    && f.orders_dominate_indices()
                    && f.lengths_nondecreasing()
            });
            lemma.record(ok, || format!("top {x}, keys {}", show(&keys.into_iter().collect::<Vec<_>>())));
        }
    }

    let mut lift = CheckRecord::new("section round-trip");
    for (ai, alpha) in elems.iter().enumerate() {
        let members: Vec<&Point<T>> = points.iter().filter(|p| p.is_member(alpha)).collect();
        for (bi, beta) in elems.iter().enumerate().skip(ai) {
            for gamma in &elems[bi + 1..] {
                for x in &members {
                    let ok = section_with_witness(alpha, beta, x, gamma.clone()).is_ok_and(|y| {
                        validate(y.entries()).is_ok()
                            && y.is_member(beta)
                            && MapSpec::new(beta.clone(), alpha.clone()).and_then(|f| f.apply(&y)).as_ref() == Ok(*x)
                    });
                    lift.record(ok, || format!("α={alpha}, β={beta}, γ={gamma}, x={x}"));
                }
            }
        }
    }

    OracleReport {
        pool: elems.iter().map(ToString::to_string).collect(),
        points: points.len(),
        recount: recount.len(),
        checks: vec![
            enumeration,
            validator,
            identity,
            well_defined,
            composition,
            lift,
            monotone,
            subsequence,
            lemma,
        ],
    }
}

/// `y` keeps every entry of `x` up to its own last pair except the
/// substituted index, and keeps the order of the pair it replaced.
pub fn is_projection_subsequence<T: Ord + Clone>(y: &Point<T>, x: &Point<T>) -> bool {
    let (ye, xe) = (y.entries(), x.entries());
    let m = ye.len();
    m <= xe.len() && ye[..m - 2] == xe[..m - 2] && ye[m - 1] == xe[m - 1]
}

/// Samples `samples` random cases of each law with entries drawn from
/// `pool`. Indices with nothing above them in the pool are never used as
/// point indices.
pub fn run_laws<T: Ord + Clone + Debug + Display>(pool: &BTreeSet<T>, samples: usize, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elems: Vec<T> = pool.iter().cloned().collect();
    let feasible: Vec<&T> = elems.iter().take(elems.len().saturating_sub(1)).collect();

    let mut identity = CheckRecord::new("identity");
    let mut composition = CheckRecord::new("composition");
    let mut lift = CheckRecord::new("section round-trip");
    let mut well_defined = CheckRecord::new("projection well-defined");
    let mut monotone = CheckRecord::new("length monotonicity");

    if !feasible.is_empty() {
        for _ in 0..samples {
            let gamma = *feasible.iter().choose(&mut rng).expect("nonempty");
            let x = sample_point_with(&mut rng, gamma, pool).expect("gamma has an element above it");
            identity.record(check_identity(gamma, &x) == Ok(true), || x.to_string());

            let mut ab: Vec<&T> = pool.range(..=gamma).choose_multiple(&mut rng, 2);
            if ab.len() < 2 {
                ab.push(ab[0]);
            }
            ab.sort();
            let (alpha, beta) = (ab[0], ab[1]);
            composition.record(check_composition(alpha, beta, gamma, &x) == Ok(true), || {
                format!("α={alpha}, β={beta}, γ={gamma}, x={x}")
            });
            let y = MapSpec::new(gamma.clone(), alpha.clone()).and_then(|f| f.apply(&x));
            well_defined.record(
                y.as_ref().is_ok_and(|y| validate(y.entries()).is_ok() && y.is_member(alpha)),
                || format!("f^{gamma}_{alpha}{x}"),
            );
            monotone.record(y.is_ok_and(|y| y.length() <= x.length()), || format!("f^{gamma}_{alpha}{x}"));

            // section: alpha ≤ beta < gamma, x ∈ X_alpha
            let alpha = *feasible.iter().choose(&mut rng).expect("nonempty");
            let x = sample_point_with(&mut rng, alpha, pool).expect("alpha has an element above it");
            let beta = feasible.iter().filter(|b| **b >= alpha).choose(&mut rng).expect("alpha itself");
            let witness = pool.range::<T, _>(*beta..).skip(1).choose(&mut rng).expect("beta is feasible");
            let ok = section_with_witness(alpha, beta, &x, witness.clone()).is_ok_and(|y| {
                validate(y.entries()).is_ok()
                    && y.is_member(beta)
                    && MapSpec::new((*beta).clone(), alpha.clone()).and_then(|f| f.apply(&y)) == Ok(x.clone())
            });
            lift.record(ok, || format!("α={alpha}, β={beta}, γ={witness}, x={x}"));
        }
    }

    LawReport {
        pool: elems.iter().map(ToString::to_string).collect(),
        samples,
        seed,
        checks: vec![identity, composition, lift, well_defined, monotone],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pool(n: u64) -> BTreeSet<u64> {
        (0..n).collect()
    }

    #[test]
    fn literal_conditions_examples() {
        assert!(literal_conditions(&[0, 2, 1, 3]));
        assert!(!literal_conditions(&[0, 2, 1, 1]));
        assert!(!literal_conditions(&[1, 5, 0, 7]));
        assert!(!literal_conditions::<u64>(&[]));
        assert!(!literal_conditions(&[0, 1, 2]));
    }

    #[test]
    fn pool_of_two() {
        let pts = enumerate_points(&pool(2));
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].entries(), &[0, 1]);
        let r = exhaustive_oracle(&pool(2));
        assert!(r.passed(), "{r:?}");
        assert_eq!((r.points, r.recount), (1, 1));
    }

    #[test]
    fn pool_of_three() {
        let pts: Vec<Vec<u64>> = enumerate_points(&pool(3)).into_iter().map(Point::into_entries).collect();
        assert_eq!(pts, vec![vec![0, 1], vec![0, 1, 1, 2], vec![0, 2], vec![0, 2, 1, 2], vec![1, 2]]);
        let r = exhaustive_oracle(&pool(3));
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.recount, 5);
    }

    #[test]
    fn counterexamples_are_reported() {
        let mut c = CheckRecord::new("x");
        c.record(true, || unreachable!());
        c.record(false, || "first".into());
        c.record(false, || "second".into());
        assert_eq!((c.cases, c.failures), (3, 2));
        assert_eq!(c.first_counterexample.as_deref(), Some("first"));
        assert!(!c.passed());
    }

    #[test]
    fn laws_on_naturals() {
        let r = run_laws(&pool(6), 500, 3);
        assert!(r.passed(), "{r:?}");
        assert!(r.checks.iter().all(|c| c.cases == 500));
        assert_eq!(run_laws(&pool(6), 50, 9), run_laws(&pool(6), 50, 9));
    }

    #[test]
    fn laws_on_singleton_pool_do_nothing() {
        let r = run_laws(&pool(1), 10, 0);
        assert!(r.checks.iter().all(|c| c.cases == 0));
    }
}
