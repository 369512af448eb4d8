//! Deterministic random sampling of ring elements and module elements.
//!
//! Every sampler is a ChaCha8 stream keyed by `(seed, stream)`, so any
//! trial can be replayed in isolation and trials can run in any order.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::calculus::{OneForm, VectorField};
use crate::linalg::Vector;
use crate::rings::{Monomial, Poly, RatFunc, Ring, RingElement, RingKind, Series};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    pub coeff_bound: i64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            seed: 1,
            trials: 100,
            max_degree: 3,
            max_terms: 4,
            coeff_bound: 9,
        }
    }
}

impl SamplerConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    cfg: SamplerConfig,
}

impl Sampler {
    pub fn new(cfg: &SamplerConfig, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(stream);
        Sampler {
            rng,
            cfg: cfg.clone(),
        }
    }

    fn coefficient(&mut self) -> Rational {
        let b = self.cfg.coeff_bound.max(1);
        Rational::from_integer(self.rng.random_range(-b..=b).into())
    }

    fn poly(&mut self, nvars: usize) -> Poly {
        let nterms = self.rng.random_range(1..=self.cfg.max_terms.max(1));
        let mut terms = BTreeMap::new();
        for _ in 0..nterms {
            let degree = self.rng.random_range(0..=self.cfg.max_degree);
            let mut exps = vec![0u32; nvars];
            for _ in 0..degree {
                exps[self.rng.random_range(0..nvars)] += 1;
            }
            let c = self.coefficient();
            terms.entry(Monomial::from_exponents(exps)).or_insert(c);
        }
        Poly::from_terms(nvars, terms)
    }

    fn nonzero_poly(&mut self, nvars: usize) -> Poly {
        for _ in 0..16 {
            let p = self.poly(nvars);
            if !p.is_zero() {
                return p;
            }
        }
        Poly::one(nvars)
    }

    /// A random element: sparse for polynomial carriers, dense to full precision for series.
    pub fn element(&mut self, ring: &Ring) -> RingElement {
        let n = ring.nvars();
        match ring.kind {
            RingKind::Poly => RingElement::from_poly(ring, self.poly(n)),
            RingKind::RatFunc => {
                let num = self.poly(n);
                let den = self.nonzero_poly(n);
                RingElement::from_ratfunc(
                    ring,
                    RatFunc::new(num, den).expect("nonzero denominator"),
                )
                .expect("ratfunc ring")
            }
            RingKind::Series => {
                let prec = ring.truncation.expect("series truncation");
                let coeffs = (0..prec).map(|_| self.coefficient()).collect();
                RingElement::from_series(ring, Series::new(coeffs)).expect("series ring")
            }
        }
    }

    pub fn nonzero_element(&mut self, ring: &Ring) -> RingElement {
        for _ in 0..16 {
            let e = self.element(ring);
            if !e.is_zero() {
                return e;
            }
        }
        RingElement::one(ring)
    }

    pub fn vector(&mut self, ring: &Ring, len: usize) -> Vector {
        let entries = (0..len).map(|_| self.element(ring)).collect();
        Vector::new(ring, entries).expect("same ring")
    }

    pub fn vector_field(&mut self, ring: &Ring) -> VectorField {
        VectorField::from_vector(self.vector(ring, ring.nvars())).expect("rank matches")
    }

    pub fn one_form(&mut self, ring: &Ring) -> OneForm {
        OneForm::from_vector(self.vector(ring, ring.nvars())).expect("rank matches")
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.random_range(0..upper)
    }
}

/// One sampled element, reproducible from `(cfg.seed, stream)`.
pub fn sample_element(cfg: &SamplerConfig, ring: &Ring, stream: u64) -> RingElement {
    Sampler::new(cfg, stream).element(ring)
}
