use serde::Serialize;

use super::cayley::DEFAULT_ORDER_CAP;
use super::CayleyLoop;
use crate::error::{Error, Result};
use crate::primes::require_prime;

/// A finite abelian group `Z_{m_1} x ... x Z_{m_k}`.
///
/// Elements are indexed in mixed radix with the first factor least
/// significant, so index 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    moduli: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(moduli: Vec<u32>) -> Self {
        assert!(moduli.iter().all(|&m| m >= 1), "moduli must be positive");
        Self { moduli }
    }

    /// `(Z_m)^k`.
    pub fn power(m: u32, k: usize) -> Self {
        Self::new(vec![m; k])
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().map(|&m| m as u64).product()
    }

    pub fn coords(&self, mut idx: u32) -> Vec<u32> {
        self.moduli
            .iter()
            .map(|&m| {
                let c = idx % m;
                idx /= m;
                c
            })
            .collect()
    }

    /// Index of a coordinate vector; coordinates are reduced modulo each factor.
    pub fn index_of(&self, coords: &[i64]) -> u32 {
        assert_eq!(coords.len(), self.moduli.len());
        let mut idx = 0u64;
        for (&c, &m) in coords.iter().zip(&self.moduli).rev() {
            idx = idx * m as u64 + c.rem_euclid(m as i64) as u64;
        }
        idx as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for &m in &self.moduli {
            let s = (a % m + b % m) % m;
            out += s * place;
            place *= m;
            a /= m;
            b /= m;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for &m in &self.moduli {
            out += ((m - a % m) % m) * place;
            place *= m;
            a /= m;
        }
        out
    }

    pub fn cayley(&self) -> Result<CayleyLoop> {
        let n = self.order();
        if n > DEFAULT_ORDER_CAP as u64 {
            return Err(Error::OrderCapExceeded { order: n, cap: DEFAULT_ORDER_CAP });
        }
        CayleyLoop::from_fn(n as usize, |a, b| self.add(a as u32, b as u32) as usize)
    }

    /// E.g. `Z3xZ9`.
    pub fn name(&self) -> String {
        self.moduli.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x")
    }
}

/// The abelian groups of order `p^3`: `(Z_p)^3`, `Z_p x Z_{p^2}`, `Z_{p^3}`.
pub fn catalog_group_descriptors(p: u32) -> [AbelianGroup; 3] {
    [AbelianGroup::power(p, 3), AbelianGroup::new(vec![p, p * p]), AbelianGroup::new(vec![p * p * p])]
}

pub fn catalog_groups(p: u32) -> Result<[CayleyLoop; 3]> {
    require_prime(p as u64)?;
    let n = (p as u64).pow(3);
    if n > DEFAULT_ORDER_CAP as u64 {
        return Err(Error::OrderCapExceeded { order: n, cap: DEFAULT_ORDER_CAP });
    }
    let [a, b, c] = catalog_group_descriptors(p);
    Ok([a.cayley()?, b.cayley()?, c.cayley()?])
}

/// The commutative automorphic loop of order 8 with trivial center, with
/// the 1-based labels of its usual presentation shifted down to `0..8`.
pub fn exceptional_loop_8() -> CayleyLoop {
    const ROWS: [[u32; 8]; 8] = [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, 1, 4, 3, 6, 5, 8, 7],
        [3, 4, 1, 2, 7, 8, 5, 6],
        [4, 3, 2, 1, 8, 7, 6, 5],
        [5, 6, 7, 8, 1, 4, 2, 3],
        [6, 5, 8, 7, 4, 1, 3, 2],
        [7, 8, 5, 6, 2, 3, 1, 4],
        [8, 7, 6, 5, 3, 2, 4, 1],
    ];
    let rows: Vec<Vec<u32>> = ROWS.iter().map(|r| r.iter().map(|v| v - 1).collect()).collect();
    CayleyLoop::from_rows(&rows).expect("exceptional table is a loop")
}
