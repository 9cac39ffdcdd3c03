//! Central extensions `L x Z` twisted by a loop cocycle.

use crate::error::{Error, Result};
use crate::loops::{AbelianGroup, CayleyLoop, DEFAULT_ORDER_CAP};

/// A map `theta: L x L -> Z` between finite abelian groups, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    base: AbelianGroup,
    fiber: AbelianGroup,
    values: Vec<u32>,
}

impl Cocycle {
    pub fn from_fn(base: AbelianGroup, fiber: AbelianGroup, theta: impl Fn(u32, u32) -> u32) -> Self {
        let n = base.order() as u32;
        let values = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| theta(a, b)).collect();
        Self { base, fiber, values }
    }

    pub fn base(&self) -> &AbelianGroup {
        &self.base
    }

    pub fn fiber(&self) -> &AbelianGroup {
        &self.fiber
    }

    #[inline]
    pub fn value(&self, a: u32, b: u32) -> u32 {
        self.values[(a as u64 * self.base.order() + b as u64) as usize]
    }

    /// First pair violating `theta(x, 1) = theta(1, x) = 1`.
    pub fn normalization_witness(&self) -> Option<(u32, u32, u32)> {
        (0..self.base.order() as u32).find_map(|x| {
            [(x, 0), (0, x)].into_iter().find_map(|(a, b)| {
                let v = self.value(a, b);
                (v != 0).then_some((a, b, v))
            })
        })
    }
}

/// The loop on `L x Z` with `(x1, z1)(x2, z2) = (x1 x2, z1 z2 theta(x1, x2))`.
///
/// Pair `(l, z)` has index `l + |L| * z`.
#[derive(Debug, Clone)]
pub struct CentralExtension {
    cocycle: Cocycle,
    table: CayleyLoop,
}

impl CentralExtension {
    pub fn loop_(&self) -> &CayleyLoop {
        &self.table
    }

    pub fn into_loop(self) -> CayleyLoop {
        self.table
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn index(&self, l: u32, z: u32) -> u32 {
        l + self.cocycle.base.order() as u32 * z
    }

    pub fn split(&self, idx: u32) -> (u32, u32) {
        let nl = self.cocycle.base.order() as u32;
        (idx % nl, idx / nl)
    }

    /// `theta(x1,x2) theta(x1x2,x3) theta(x2,x3)^-1 theta(x1,x2x3)^-1`, an
    /// element of `Z`, for base elements `x1, x2, x3`.
    pub fn associator_from_cocycle(&self, x1: u32, x2: u32, x3: u32) -> u32 {
        let (l, z, th) = (&self.cocycle.base, &self.cocycle.fiber, &self.cocycle);
        let pos = z.add(th.value(x1, x2), th.value(l.add(x1, x2), x3));
        let neg = z.add(th.value(x2, x3), th.value(x1, l.add(x2, x3)));
        z.add(pos, z.neg(neg))
    }
}

pub fn central_extension(cocycle: Cocycle) -> Result<CentralExtension> {
    if let Some((a, b, value)) = cocycle.normalization_witness() {
        return Err(Error::CocycleNotNormalized { a, b, value });
    }
    let (nl, nz) = (cocycle.base.order(), cocycle.fiber.order());
    let n = nl * nz;
    if n > DEFAULT_ORDER_CAP as u64 {
        return Err(Error::OrderCapExceeded { order: n, cap: DEFAULT_ORDER_CAP });
    }
    let (l, z) = (&cocycle.base, &cocycle.fiber);
    let nl32 = nl as u32;
    let table = CayleyLoop::from_fn(n as usize, |a, b| {
        let (l1, z1) = (a as u32 % nl32, a as u32 / nl32);
        let (l2, z2) = (b as u32 % nl32, b as u32 / nl32);
        let lz = l.add(l1, l2);
        let zz = z.add(z.add(z1, z2), cocycle.value(l1, l2));
        (lz + nl32 * zz) as usize
    })?;
    Ok(CentralExtension { cocycle, table })
}
