//! Seeded coefficient jitter around a curvette.
//!
//! Exponents and the sign character are kept, so every sample has the
//! same coordinate values as the base point and is centered whenever the
//! base point is. Sample k uses its own ChaCha stream, so any sample can be
//! regenerated on its own.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GenSeries, Rat};
use crate::curvette::SemiCurvette;
use crate::error::Result;

/// Each coefficient is kept with probability 1/2, otherwise shifted by an
/// integer in [−2, 2]; shifts that would make it zero are redrawn.
pub fn jitter(base: &SemiCurvette, rng: &mut ChaCha8Rng) -> Result<SemiCurvette> {
    let mut entries = Vec::with_capacity(base.n());
    for e in base.entries() {
        let mut terms = Vec::new();
        for (g, c) in e.terms() {
            let mut c = c.clone();
            if rng.gen_bool(0.5) {
                loop {
                    let d: i64 = rng.gen_range(-2..=2);
                    let next = &c + Rat::from_integer(d.into());
                    if next != Rat::from_integer(0.into()) {
                        c = next;
                        break;
                    }
                }
            }
            terms.push((c, g.clone()));
        }
        entries.push(GenSeries::from_terms(e.rank(), terms, e.truncation().cloned())?);
    }
    SemiCurvette::new(entries, base.sign_char().clone())
}

pub fn sample(base: &SemiCurvette, seed: u64, k: usize) -> Result<SemiCurvette> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    jitter(base, &mut rng)
}

pub fn samples(base: &SemiCurvette, seed: u64, count: usize) -> Result<Vec<SemiCurvette>> {
    (0..count).map(|k| sample(base, seed, k)).collect()
}
