//! Worked examples: the `f^3_2` table, the `f^4_3 ∘ f^6_4 = f^6_3`
//! computation, and a growing compatible family that exhibits the
//! obstruction to a full thread.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bonding::MapSpec;
use crate::thread::{Family, ProfileRow};
use crate::{OrdPoint, Ordinal};

#[derive(Debug, Clone, Copy)]
enum Slot {
    Lit(u64),
    Sym(usize),
}

use Slot::{Lit, Sym};

/// Symbolic rows of `f^3_2`: input shape and expected image, with
/// `Sym(0..4)` standing for α, β, γ, δ.
const F32_ROWS: [(&[Slot], &[Slot]); 8] = [
    (&[Lit(3), Sym(0)], &[Lit(2), Sym(0)]),
    (&[Lit(0), Sym(0), Lit(3), Sym(1)], &[Lit(0), Sym(0), Lit(2), Sym(1)]),
    (&[Lit(1), Sym(0), Lit(3), Sym(1)], &[Lit(1), Sym(0), Lit(2), Sym(1)]),
    (&[Lit(2), Sym(0), Lit(3), Sym(1)], &[Lit(2), Sym(0)]),
    (
        &[Lit(0), Sym(0), Lit(1), Sym(1), Lit(3), Sym(2)],
        &[Lit(0), Sym(0), Lit(1), Sym(1), Lit(2), Sym(2)],
    ),
    (&[Lit(0), Sym(0), Lit(2), Sym(1), Lit(3), Sym(2)], &[Lit(0), Sym(0), Lit(2), Sym(1)]),
    (&[Lit(1), Sym(0), Lit(2), Sym(1), Lit(3), Sym(2)], &[Lit(1), Sym(0), Lit(2), Sym(1)]),
    (
        &[Lit(0), Sym(0), Lit(1), Sym(1), Lit(2), Sym(2), Lit(3), Sym(3)],
        &[Lit(0), Sym(0), Lit(1), Sym(1), Lit(2), Sym(2)],
    ),
];

const SYMBOLS: [&str; 4] = ["α", "β", "γ", "δ"];

fn symbolic(slots: &[Slot]) -> String {
    let parts: Vec<String> = slots
        .iter()
        .map(|s| match s {
            Lit(n) => n.to_string(),
            Sym(i) => SYMBOLS[*i].to_string(),
        })
        .collect();
    format!("({})", parts.join(", "))
}

fn instantiate(slots: &[Slot], values: &[Ordinal; 4]) -> OrdPoint {
    let entries = slots
        .iter()
        .map(|s| match s {
            Lit(n) => Ordinal::from_natural(*n),
            Sym(i) => values[*i].clone(),
        })
        .collect();
    OrdPoint::new(entries).expect("table rows are points for any α, β, γ, δ > 3")
}

/// Values substituted for α, β, γ, δ.
pub fn f32_instantiation(transfinite: bool) -> [Ordinal; 4] {
    let w = Ordinal::omega();
    if transfinite {
        [w.clone(), w.successor(), w.multiply(&Ordinal::from_natural(2u8)), w.multiply(&w)]
    } else {
        [4u8, 5, 6, 7].map(Ordinal::from_natural)
    }
}

#[derive(Debug, Clone)]
pub struct F32Row {
    pub symbolic_input: String,
    pub symbolic_output: String,
    pub input: OrdPoint,
    pub output: OrdPoint,
    pub expected: OrdPoint,
    /// 1 for Case I, 2 for Case II.
    pub case: u8,
}

impl F32Row {
    pub fn verified(&self) -> bool {
        self.output == self.expected
    }
}

/// Instantiates every row of the `f^3_2` table and applies the map.
pub fn table_f32(values: &[Ordinal; 4]) -> Vec<F32Row> {
    let three = Ordinal::from_natural(3u8);
    let two = Ordinal::from_natural(2u8);
    let f = MapSpec::new(three, two.clone()).expect("2 ≤ 3");
    F32_ROWS
        .iter()
        .map(|(input, expected)| {
            let x = instantiate(input, values);
            let output = f.apply(&x).expect("row input lies in X_3");
            let case = if two <= x.entries()[0] { 1 } else { 2 };
            F32Row {
                symbolic_input: symbolic(input),
                symbolic_output: symbolic(expected),
                expected: instantiate(expected, values),
                input: x,
                output,
                case,
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct CompositionDemo {
    pub x: OrdPoint,
    /// `f^6_4(x)`
    pub y: OrdPoint,
    /// `f^4_3(y)`
    pub composed: OrdPoint,
    /// `f^6_3(x)`
    pub direct: OrdPoint,
    /// `(0, α, 1, β, 3, γ)` with α, β, γ := 1, 2, 4.
    pub expected: OrdPoint,
}

impl CompositionDemo {
    pub fn verified(&self) -> bool {
        self.composed == self.direct && self.direct == self.expected && self.y.is_member(&Ordinal::from_natural(4u8))
    }
}

/// `f^4_3 ∘ f^6_4 = f^6_3` at `x = (0, 1, 1, 2, 3, 4, 5, 6, 6, 7)`.
pub fn composition_example() -> CompositionDemo {
    let n = |k: u64| Ordinal::from_natural(k);
    let x = OrdPoint::new([0, 1, 1, 2, 3, 4, 5, 6, 6, 7].map(n).to_vec()).expect("point in X_6");
    let f64_ = MapSpec::new(n(6), n(4)).expect("4 ≤ 6");
    let f43 = MapSpec::new(n(4), n(3)).expect("3 ≤ 4");
    let f63 = MapSpec::new(n(6), n(3)).expect("3 ≤ 6");
    let y = f64_.apply(&x).expect("x ∈ X_6");
    let composed = f43.apply(&y).expect("y ∈ X_4");
    let direct = f63.apply(&x).expect("x ∈ X_6");
    let expected = OrdPoint::new([0, 1, 1, 2, 3, 4].map(n).to_vec()).expect("point in X_3");
    CompositionDemo {
        x,
        y,
        composed,
        direct,
        expected,
    }
}

/// Why the profile rules out a thread over all countable ordinals.
pub const THREAD_FOOTER: &str = "\
Every member's order exceeds its index, so the orders of a thread over all
countable ordinals would be cofinal in [0, w1). Within a compatible family
the order of a member depends only on its length, a natural number, so
those orders form a sequence indexed by lengths. Unbounded lengths would
give a countable cofinal sequence in [0, w1); bounded lengths would give a
largest countable ordinal. Neither exists, so no full thread exists and the
inverse limit is empty even though every X_a is nonempty and every bonding
map is onto.";

#[derive(Debug, Clone)]
pub struct ThreadDemo {
    pub family: Family<Ordinal>,
    pub profile: Vec<ProfileRow<Ordinal>>,
    pub compatible: bool,
    pub orders_dominate_indices: bool,
    pub order_function_of_length: bool,
    pub lengths_nondecreasing: bool,
    pub max_order_exceeds_every_index: bool,
}

impl ThreadDemo {
    pub fn passed(&self) -> bool {
        self.compatible
            && self.orders_dominate_indices
            && self.order_function_of_length
            && self.lengths_nondecreasing
            && self.max_order_exceeds_every_index
    }
}

/// Grows a compatible family over keys `0..=n` from `(0, 1)` by repeated
/// sections. Each new witness is the larger of the previous order and the
/// new key, plus a seeded offset in `1..=3`.
pub fn thread_demo(n: u64, seed: u64) -> ThreadDemo {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = OrdPoint::pair(Ordinal::zero(), Ordinal::one()).expect("0 < 1");
    let mut family = Family::singleton(start);
    for k in 1..=n {
        let beta = Ordinal::from_natural(k);
        let prev = family.top().1.order().clone();
        let base = prev.max(beta.clone());
        let gamma = base.add(&Ordinal::from_natural(rng.gen_range(1u64..=3)));
        family = family.extend(beta, Some(gamma)).expect("witness lies above the new key");
    }
    let profile = family.order_length_profile();
    let max_order = profile.iter().map(|r| &r.order).max().expect("nonempty");
    ThreadDemo {
        compatible: family.is_compatible(),
        orders_dominate_indices: family.orders_dominate_indices(),
        order_function_of_length: family.check_order_function_of_length() == Ok(true),
        lengths_nondecreasing: family.lengths_nondecreasing(),
        max_order_exceeds_every_index: profile.iter().all(|r| *max_order > r.index),
        profile,
        family,
    }
}
