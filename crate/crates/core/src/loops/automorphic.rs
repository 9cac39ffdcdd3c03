use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::inner::{inner_maps, InnerMap};
use super::CayleyLoop;
use crate::error::{Error, Result};

/// Above this order, identity (A) is sampled unless exhaustive mode is forced.
pub const EXHAUSTIVE_A_LIMIT: usize = 100;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;

/// `(x(yz)) \ ((xy)z)`.
#[inline]
pub fn associator(q: &CayleyLoop, x: u32, y: u32, z: u32) -> u32 {
    q.ldiv(q.mul(x, q.mul(y, z)), q.mul(q.mul(x, y), z))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    /// Exhaustive below [`EXHAUSTIVE_A_LIMIT`], sampled above it.
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutomorphicMethod {
    /// Every inner generator is checked to be an automorphism.
    Inner,
    /// Identity (A); commutative loops only.
    IdentityA { coverage: Coverage, samples: u64, seed: u64 },
}

impl AutomorphicMethod {
    pub fn identity_a() -> Self {
        AutomorphicMethod::IdentityA { coverage: Coverage::Auto, samples: DEFAULT_SAMPLES, seed: 0 }
    }

    pub fn identity_a_exhaustive() -> Self {
        AutomorphicMethod::IdentityA { coverage: Coverage::Exhaustive, samples: 0, seed: 0 }
    }

    pub fn identity_a_sampled(samples: u64, seed: u64) -> Self {
        AutomorphicMethod::IdentityA { coverage: Coverage::Sampled, samples, seed }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AutomorphicWitness {
    /// `map(a*b) != map(a)*map(b)`.
    Inner { map: InnerMap, a: u32, b: u32 },
    /// A quadruple `(y, x, a, b)` violating identity (A).
    IdentityA { y: u32, x: u32, a: u32, b: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutomorphicCheck {
    /// `"inner"` or `"identity_a"`.
    pub method: &'static str,
    pub exhaustive: bool,
    /// Number of product identities evaluated.
    pub checked: u64,
    pub counterexample: Option<AutomorphicWitness>,
}

impl AutomorphicCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub fn is_automorphic(q: &CayleyLoop, method: AutomorphicMethod) -> Result<AutomorphicCheck> {
    match method {
        AutomorphicMethod::Inner => Ok(check_inner(q)),
        AutomorphicMethod::IdentityA { coverage, samples, seed } => {
            if let Some((a, b)) = q.commutativity_witness() {
                return Err(Error::NotCommutative { a, b });
            }
            let exhaustive = match coverage {
                Coverage::Exhaustive => true,
                Coverage::Sampled => false,
                Coverage::Auto => q.order() <= EXHAUSTIVE_A_LIMIT,
            };
            Ok(if exhaustive { identity_a_exhaustive(q) } else { identity_a_sampled(q, samples, seed) })
        }
    }
}

/// Checks every inner generator as an automorphism. For a commutative loop
/// only the `L_{x,y}` are scanned.
fn check_inner(q: &CayleyLoop) -> AutomorphicCheck {
    let n = q.order() as u64;
    let left_only = q.is_commutative();
    let maps: Vec<InnerMap> = inner_maps(q, left_only).collect();
    let counterexample = maps.par_iter().find_map_first(|m| {
        let perm = m.permutation(q);
        perm.automorphism_witness(q).map(|(a, b)| AutomorphicWitness::Inner { map: *m, a, b })
    });
    AutomorphicCheck { method: "inner", exhaustive: true, checked: maps.len() as u64 * n * n, counterexample }
}

/// Evaluates (A) for a fixed pair `(y, x)` over all `(a, b)`, i.e. whether
/// `L_{x,y}` is a homomorphism.
fn identity_a_row(q: &CayleyLoop, y: u32, x: u32) -> Option<AutomorphicWitness> {
    let yx = q.mul(y, x);
    let lxy = |z: u32| q.ldiv(yx, q.mul(y, q.mul(x, z)));
    let images: Vec<u32> = q.elements().map(lxy).collect();
    for a in q.elements() {
        for b in q.elements() {
            if images[q.mul(a, b) as usize] != q.mul(images[a as usize], images[b as usize]) {
                return Some(AutomorphicWitness::IdentityA { y, x, a, b });
            }
        }
    }
    None
}

#[inline]
fn identity_a_holds(q: &CayleyLoop, y: u32, x: u32, a: u32, b: u32) -> bool {
    let yx = q.mul(y, x);
    let l = |z: u32| q.ldiv(yx, q.mul(y, q.mul(x, z)));
    l(q.mul(a, b)) == q.mul(l(a), l(b))
}

fn identity_a_exhaustive(q: &CayleyLoop) -> AutomorphicCheck {
    let n = q.order() as u32;
    let counterexample = (0..n * n)
        .into_par_iter()
        .find_map_first(|k| identity_a_row(q, k / n, k % n));
    let n = n as u64;
    AutomorphicCheck { method: "identity_a", exhaustive: true, checked: n * n * n * n, counterexample }
}

const SAMPLE_CHUNK: u64 = 1 << 14;

/// Seeded sampler: chunk `c` draws from stream `c` of a ChaCha8 generator,
/// so results do not depend on the worker count.
fn identity_a_sampled(q: &CayleyLoop, samples: u64, seed: u64) -> AutomorphicCheck {
    let n = q.order() as u32;
    let chunks = samples.div_ceil(SAMPLE_CHUNK);
    let counterexample = (0..chunks).into_par_iter().find_map_first(|c| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(c);
        let count = SAMPLE_CHUNK.min(samples - c * SAMPLE_CHUNK);
        (0..count).find_map(|_| {
            let (y, x, a, b) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            (!identity_a_holds(q, y, x, a, b)).then_some(AutomorphicWitness::IdentityA { y, x, a, b })
        })
    });
    AutomorphicCheck { method: "identity_a", exhaustive: false, checked: samples, counterexample }
}
