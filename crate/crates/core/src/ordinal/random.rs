use rand::Rng;

use super::{Cnf, Coefficient};

/// Bounds for [`random_ordinal`].
#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    /// Maximum exponent nesting depth.
    pub max_depth: usize,
    /// Coefficients are drawn from `1..=max_coefficient`.
    pub max_coefficient: u64,
    /// Maximum number of terms at each level.
    pub max_terms: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_depth: 3,
            max_coefficient: 9,
            max_terms: 3,
        }
    }
}

/// Draws a canonical ordinal with depth at most `cfg.max_depth`.
pub fn random_ordinal<C: Coefficient, R: Rng + ?Sized>(rng: &mut R, cfg: &GenConfig) -> Cnf<C> {
    if cfg.max_depth == 0 {
        return Cnf::zero();
    }
    let n = rng.gen_range(0..=cfg.max_terms);
    let inner = GenConfig {
        max_depth: cfg.max_depth - 1,
        ..*cfg
    };
    let mut exponents: Vec<Cnf<C>> = (0..n).map(|_| random_ordinal(rng, &inner)).collect();
    exponents.sort_by(|a, b| b.cmp(a));
    exponents.dedup();
    let terms = exponents
        .into_iter()
        .map(|e| {
            let c = C::from_u64(rng.gen_range(1..=cfg.max_coefficient.max(1))).expect("coefficient fits");
            (e, c)
        })
        .collect();
    Cnf::from_terms(terms).expect("sorted distinct exponents")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Ordinal;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = GenConfig::default();
        for _ in 0..2000 {
            let a: Ordinal = random_ordinal(&mut rng, &cfg);
            assert!(a.is_canonical());
            assert!(a.depth() <= 3);
            for t in a.terms() {
                assert!(*t.coefficient() <= 9u32.into());
            }
        }
    }
}
