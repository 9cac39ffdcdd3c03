//! Quotients of `F_p` by 3-dimensional central subloops.

use super::subspace::Subspace3;
use crate::error::Result;
use crate::free::{FpElement, FpLoop};
use crate::loops::CayleyLoop;

/// `F_p / N` for a subspace `N` of the center.
///
/// `Z(F_p) / N` is one-dimensional, read off by the functional `f` with
/// kernel `N`, so the coset of `u` is determined by `(u1, u2, f(u3..u6))` and
/// gets index `u1 + p u2 + p^2 f(u3..u6)`.
#[derive(Debug, Clone)]
pub struct FpQuotient {
    fp: FpLoop,
    subspace: Subspace3,
    functional: [u32; 4],
    /// A central vector with `f(e) = 1`.
    lift: [u32; 4],
    table: CayleyLoop,
}

impl FpQuotient {
    pub fn new(n: &Subspace3) -> Result<Self> {
        let p = n.p();
        let fp = FpLoop::new(p)?;
        let functional = n.dual();
        let j = functional.iter().position(|&c| c == 1).expect("dual is normalized");
        let mut lift = [0u32; 4];
        lift[j] = 1;
        let mut out = Self { fp, subspace: *n, functional, lift, table: CayleyLoop::from_fn(1, |_, _| 0)? };
        let reps: Vec<FpElement> = (0..p * p * p).map(|i| out.representative(i)).collect();
        out.table = CayleyLoop::from_fn(reps.len(), |a, b| out.project(&fp.mul(&reps[a], &reps[b])) as usize)?;
        debug_assert!(out.is_well_defined(&reps));
        Ok(out)
    }

    pub fn p(&self) -> u32 {
        self.fp.p()
    }

    pub fn subspace(&self) -> &Subspace3 {
        &self.subspace
    }

    pub fn loop_(&self) -> &CayleyLoop {
        &self.table
    }

    pub fn into_loop(self) -> CayleyLoop {
        self.table
    }

    /// The coset index of `u`.
    pub fn project(&self, u: &FpElement) -> u32 {
        let p = self.p();
        let c = u.central_part();
        let t = (0..4).map(|k| self.functional[k] as u64 * c[k] as u64).sum::<u64>() % p as u64;
        u.0[0] + p * u.0[1] + p * p * t as u32
    }

    /// A fixed element of coset `idx`.
    pub fn representative(&self, idx: u32) -> FpElement {
        let p = self.p();
        let (a1, a2, t) = (idx % p, (idx / p) % p, idx / (p * p));
        let c = self.lift.map(|e| e * t % p);
        FpElement([a1, a2, c[0], c[1], c[2], c[3]])
    }

    /// Shifting representatives by basis vectors of `N` leaves products unchanged.
    fn is_well_defined(&self, reps: &[FpElement]) -> bool {
        let gens = [self.fp.x(), self.fp.y()];
        self.subspace.basis().iter().all(|n| {
            reps.iter().all(|r| {
                let shifted = self.fp.mul(r, &FpElement::from_central(*n));
                self.project(&shifted) == self.project(r)
                    && gens.iter().all(|g| self.project(&self.fp.mul(&shifted, g)) == self.project(&self.fp.mul(r, g)))
            })
        })
    }
}

/// The Cayley table of `F_p / N`, of order `p^3`.
pub fn quotient_loop(n: &Subspace3) -> Result<CayleyLoop> {
    Ok(FpQuotient::new(n)?.into_loop())
}
