use std::collections::BTreeSet;

use proptest::prelude::*;
use translim::oracle::{exhaustive_oracle, is_projection_subsequence, run_laws};
use translim::point::validate;
use translim::{
    check_composition, check_identity, enumerate_schemas, project_family, sample_point, section, Family, MapSpec,
    OrdPoint, Ordinal, Point,
};

/// Conditions (i)–(iii) written straight from their quantifiers, 1-based.
fn conditions_hold(s: &[u64]) -> bool {
    if s.is_empty() || s.len() % 2 != 0 {
        return false;
    }
    let n = s.len() / 2;
    let a = |k: usize| s[k - 1];
    let mut ok = a(1) < a(2);
    for i in 1..n {
        ok &= a(2 * i - 1) < a(2 * i + 2);
    }
    for i in 0..n {
        ok &= a(2 * i + 1) < a(2 * i + 2);
        for j in 0..i {
            ok &= !(a(2 * i + 1) < a(2 * j + 1)) && a(2 * i + 1) != a(2 * j + 1);
        }
    }
    ok
}

fn sequences(pool: &[u64], len: usize) -> Vec<Vec<u64>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|s| {
                pool.iter().map(move |&e| {
                    let mut t = s.clone();
                    t.push(e);
                    t
                })
            })
            .collect()
    })
}

fn transfinite_pool() -> BTreeSet<Ordinal> {
    ["0", "1", "2", "3", "w", "w + 1", "w*2", "w^2"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

#[test]
fn validator_completeness_over_small_pool() {
    let pool = [0, 1, 2, 3, 4];
    let mut accepted = 0;
    for len in [2, 4, 6] {
        for s in sequences(&pool, len) {
            let ok = validate(&s).is_ok();
            assert_eq!(ok, conditions_hold(&s), "{s:?}");
            accepted += ok as usize;
        }
    }
    assert!(accepted > 0);
}

#[test]
fn condition_ii_is_redundant_over_total_orders() {
    let pool = [0, 1, 2, 3, 4];
    for len in [2, 4, 6, 8] {
        for s in sequences(&pool, len) {
            let n = s.len() / 2;
            let i_holds = s[0] < s[1];
            let iii_holds = (0..n).all(|i| s[2 * i] < s[2 * i + 1] && (0..i).all(|j| s[2 * i] > s[2 * j]));
            if i_holds && iii_holds {
                assert!(conditions_hold(&s), "{s:?}");
            }
        }
    }
}

#[test]
fn schema_soundness_and_completeness() {
    for k in 0..=4u64 {
        let schemas = enumerate_schemas(&Ordinal::from_natural(k)).unwrap();
        for s in &schemas {
            // smallest completion and a spread-out one
            let chain: Vec<u64> = s.chain().iter().map(|c| c.to_u64().unwrap()).collect();
            for bump in [1, 3] {
                let entries: Vec<Ordinal> = chain
                    .iter()
                    .flat_map(|&c| [Ordinal::from_natural(c), Ordinal::from_natural(c + bump)])
                    .collect();
                let p = OrdPoint::new(entries).unwrap();
                assert!(s.matches(&p));
            }
        }
        // every finite point with index k matches exactly one schema
        let pool: Vec<u64> = (0..=k + 1).collect();
        for seq in valid_sequences(&pool) {
            if seq[seq.len() - 2] != k {
                continue;
            }
            let p = OrdPoint::new(seq.into_iter().map(Ordinal::from_natural).collect()).unwrap();
            assert_eq!(schemas.iter().filter(|s| s.matches(&p)).count(), 1, "{p}");
        }
    }
}

/// All sequences over `pool` satisfying the conditions, grown pair by pair
/// (every even prefix of a point is a point).
fn valid_sequences(pool: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        for &a in pool {
            for &b in pool {
                let mut next = prefix.clone();
                next.extend([a, b]);
                if conditions_hold(&next) {
                    out.push(next.clone());
                    stack.push(next);
                }
            }
        }
    }
    out
}

#[test]
fn ten_thousand_samples_are_points() {
    let pool = transfinite_pool();
    let indices: Vec<&Ordinal> = pool.iter().take(pool.len() - 1).collect();
    for seed in 0..10_000u64 {
        let a = indices[(seed % indices.len() as u64) as usize];
        let p = sample_point(a, &pool, seed).unwrap();
        assert_eq!(validate(p.entries()), Ok(()));
        assert!(p.is_member(a));
        assert!(p.index() < p.order());
    }
}

#[test]
fn exhaustive_oracle_over_five_naturals() {
    let pool: BTreeSet<u64> = (0..5).collect();
    let report = exhaustive_oracle(&pool);
    assert_eq!(report.points, report.recount);
    for c in &report.checks {
        assert!(c.cases > 0, "{} ran no cases", c.name);
        assert!(c.passed(), "{c:?}");
    }
}

#[test]
fn exhaustive_oracle_over_transfinite_pool() {
    let pool: BTreeSet<Ordinal> = ["0", "1", "w", "w + 1", "w*2"].iter().map(|s| s.parse().unwrap()).collect();
    let report = exhaustive_oracle(&pool);
    assert!(report.passed(), "{report:?}");
    // same shape as five naturals: only the order type of the pool matters
    let nat = exhaustive_oracle(&(0u64..5).collect());
    assert_eq!(report.points, nat.points);
}

#[test]
fn sampled_laws_over_transfinite_pool() {
    let report = run_laws(&transfinite_pool(), 2_000, 11);
    assert!(report.passed(), "{report:?}");
}

fn small_point() -> impl Strategy<Value = Point<u64>> {
    (0u64..8, any::<u64>()).prop_map(|(a, seed)| {
        let pool: BTreeSet<u64> = (0..10).collect();
        sample_point(&a, &pool, seed).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn identity_and_well_definedness(x in small_point(), t in 0u64..8) {
        let g = *x.index();
        prop_assert!(check_identity(&g, &x).unwrap());
        let a = t.min(g);
        let y = MapSpec::new(g, a).unwrap().apply(&x).unwrap();
        prop_assert_eq!(validate(y.entries()), Ok(()));
        prop_assert!(y.is_member(&a));
        prop_assert!(y.length() <= x.length());
        prop_assert!(is_projection_subsequence(&y, &x));
    }

    #[test]
    fn composition(x in small_point(), s in 0u64..8, t in 0u64..8) {
        let g = *x.index();
        let (a, b) = (s.min(t).min(g), s.max(t).min(g));
        prop_assert!(check_composition(&a, &b, &g, &x).unwrap());
    }

    #[test]
    fn section_round_trip(x in small_point(), up in 0u64..5, extra in 1u64..4) {
        let a = *x.index();
        let b = a + up;
        let y = section(&a, &b, &x, Some(b + extra)).unwrap();
        prop_assert_eq!(validate(y.entries()), Ok(()));
        prop_assert!(y.is_member(&b));
        prop_assert_eq!(MapSpec::new(b, a).unwrap().apply(&y).unwrap(), x.clone());
        let z = section(&a, &b, &x, None).unwrap();
        prop_assert_eq!(MapSpec::new(b, a).unwrap().apply(&z).unwrap(), x);
    }

    #[test]
    fn projected_families_are_compatible(x in small_point(), mask in 1u16..512) {
        let g = *x.index();
        let keys: BTreeSet<u64> = (0..=g).filter(|k| mask & (1 << k) != 0).collect();
        prop_assume!(!keys.is_empty());
        let f = project_family(&g, &x, &keys).unwrap();
        prop_assert!(f.is_compatible());
        prop_assert!(f.orders_dominate_indices());
        prop_assert!(f.lengths_nondecreasing());
        prop_assert_eq!(f.check_order_function_of_length(), Ok(true));
    }

    #[test]
    fn extension_grows_length_by_one(steps in 1usize..12, gaps in prop::collection::vec(1u64..4, 12)) {
        let mut f = Family::singleton(Point::pair(0u64, 1).unwrap());
        let mut key = 0;
        for gap in gaps.iter().take(steps) {
            let before = f.top().1.length();
            key += gap;
            f = f.extend(key, None).unwrap();
            let (k, top) = f.top();
            prop_assert_eq!(top.length(), before + 1);
            prop_assert!(top.order() > k);
        }
        prop_assert!(f.is_compatible());
        let orders: Vec<u64> = f.order_length_profile().iter().map(|r| r.order).collect();
        prop_assert!(*orders.iter().max().unwrap() > key);
    }
}

#[test]
fn orders_grow_without_bound_along_extensions() {
    let mut f = Family::singleton(OrdPoint::pair(Ordinal::zero(), Ordinal::one()).unwrap());
    for n in 1..=40u64 {
        f = f.extend(Ordinal::from_natural(n), None).unwrap();
        let max_order = f.order_length_profile().into_iter().map(|r| r.order).max().unwrap();
        assert!(max_order > Ordinal::from_natural(n));
    }
    assert_eq!(f.top().1.length(), 41);
}
