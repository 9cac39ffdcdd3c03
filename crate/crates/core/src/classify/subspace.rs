//! Three-dimensional subspaces of `(Z_p)^4`.

use std::fmt;

use serde::{Serialize, Serializer};

use super::action::ActionMatrix;
use super::linalg::rref;
use crate::error::{Error, Result};
use crate::primes::{inv_mod, require_prime};

/// Largest prime the orbit machinery accepts.
pub const MAX_PRIME: u32 = 13;

pub(crate) fn require_small_prime(p: u32, cap: u32) -> Result<()> {
    require_prime(p as u64)?;
    if p > cap {
        return Err(Error::PrimeCapExceeded { p, cap });
    }
    Ok(())
}

/// A 3-dimensional subspace held as its canonical RREF basis, so equal
/// subspaces compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace3 {
    p: u32,
    basis: [[u32; 4]; 3],
}

impl Subspace3 {
    pub fn from_rows(p: u32, rows: &[[u32; 4]]) -> Result<Self> {
        let r = rref(p, rows.iter().map(|r| r.map(|v| v % p).to_vec()).collect());
        if r.len() != 3 {
            return Err(Error::Degenerate(format!("rows span a subspace of dimension {}, not 3", r.len())));
        }
        let mut basis = [[0; 4]; 3];
        for (dst, src) in basis.iter_mut().zip(&r) {
            dst.copy_from_slice(src);
        }
        Ok(Self { p, basis })
    }

    /// The kernel of the functional `v -> f . v`.
    pub fn from_dual(p: u32, f: [u32; 4]) -> Result<Self> {
        let j = f.iter().position(|&c| c % p != 0).ok_or_else(|| Error::Degenerate("zero functional".into()))?;
        let inv = inv_mod(f[j] % p, p) as u64;
        let rows: Vec<[u32; 4]> = (0..4)
            .filter(|&k| k != j)
            .map(|k| {
                let mut v = [0u32; 4];
                v[k] = 1;
                v[j] = ((p as u64 - (f[k] % p) as u64 * inv % p as u64) % p as u64) as u32;
                v
            })
            .collect();
        Self::from_rows(p, &rows)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn basis(&self) -> &[[u32; 4]; 3] {
        &self.basis
    }

    /// The functional whose kernel is this subspace, scaled so its first
    /// nonzero entry is 1.
    pub fn dual(&self) -> [u32; 4] {
        let p = self.p;
        let pivots: Vec<usize> = self.basis.iter().map(|r| r.iter().position(|&v| v != 0).unwrap()).collect();
        let free = (0..4).find(|c| !pivots.contains(c)).unwrap();
        let mut f = [0u32; 4];
        f[free] = 1;
        for (row, &pc) in self.basis.iter().zip(&pivots) {
            f[pc] = (p - row[free]) % p;
        }
        let lead = f.iter().copied().find(|&v| v != 0).unwrap();
        let inv = inv_mod(lead, p) as u64;
        f.map(|v| (v as u64 * inv % p as u64) as u32)
    }

    pub fn contains(&self, v: [u32; 4]) -> bool {
        let f = self.dual();
        f.iter().zip(v).map(|(&a, b)| a as u64 * b as u64).sum::<u64>() % self.p as u64 == 0
    }

    /// All `p^3` vectors of the subspace.
    pub fn vectors(&self) -> Vec<[u32; 4]> {
        let p = self.p;
        let mut out = Vec::with_capacity((p * p * p) as usize);
        for c0 in 0..p {
            for c1 in 0..p {
                for c2 in 0..p {
                    let mut v = [0u32; 4];
                    for (k, slot) in v.iter_mut().enumerate() {
                        *slot = (c0 * self.basis[0][k] + c1 * self.basis[1][k] + c2 * self.basis[2][k]) % p;
                    }
                    out.push(v);
                }
            }
        }
        out
    }

    pub fn image(&self, m: &ActionMatrix) -> Subspace3 {
        Self::from_rows(self.p, &self.basis.map(|r| m.apply(r))).expect("action matrices are invertible")
    }

    /// Row-major basis entries as one digit each (base 36 above `p = 10`).
    pub fn digits(&self) -> String {
        self.basis.iter().flatten().map(|&d| std::char::from_digit(d, 36).unwrap()).collect()
    }
}

impl fmt::Display for Subspace3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits())
    }
}

impl Serialize for Subspace3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.digits())
    }
}

/// Every 3-dimensional subspace, sorted by canonical basis.
pub fn grassmannian3(p: u32) -> Result<Vec<Subspace3>> {
    require_small_prime(p, MAX_PRIME)?;
    let mut out = Vec::new();
    for lead in 0..4 {
        let tail = 3 - lead;
        for k in 0..p.pow(tail as u32) {
            let mut f = [0u32; 4];
            f[lead] = 1;
            let mut k = k;
            for slot in f.iter_mut().skip(lead + 1) {
                *slot = k % p;
                k /= p;
            }
            out.push(Subspace3::from_dual(p, f)?);
        }
    }
    out.sort();
    Ok(out)
}
