use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::quotient::quotient_unchecked;
use super::subloop::{associator_subloop, center};
use super::CayleyLoop;

/// Nilpotency class, or `NotNilpotent` when the upper central series
/// stalls above the trivial loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nilpotency {
    Class(u32),
    NotNilpotent,
}

impl Serialize for Nilpotency {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Nilpotency::Class(c) => s.serialize_u32(*c),
            Nilpotency::NotNilpotent => s.serialize_str("not nilpotent"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StructureProfile {
    pub order: usize,
    /// Element order -> count. Orders come from left-bracketed powers; an
    /// element whose powers never return to 1 is counted under 0.
    pub order_spectrum: BTreeMap<u32, usize>,
    pub center_size: usize,
    pub associator_subloop_size: usize,
    pub nilpotency_class: Nilpotency,
    pub is_group: bool,
    pub is_commutative: bool,
    pub is_power_associative: bool,
}

/// Left-bracketed powers `x^0..=x^n`.
fn powers(q: &CayleyLoop, x: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(q.order() + 1);
    let mut acc = 0;
    out.push(acc);
    for _ in 0..q.order() {
        acc = q.mul(x, acc);
        out.push(acc);
    }
    out
}

/// Smallest `k >= 1` with `x^k = 1`, or 0 if there is none.
pub fn element_order(q: &CayleyLoop, x: u32) -> u32 {
    let mut acc = x;
    for k in 1..=q.order() as u32 {
        if acc == 0 {
            return k;
        }
        acc = q.mul(x, acc);
    }
    0
}

/// `x^i * x^j = x^(i+j)` for all `x` and all `i + j <= n`.
pub fn power_associativity_witness(q: &CayleyLoop) -> Option<(u32, usize, usize)> {
    let n = q.order();
    q.elements().into_par_iter().find_map_first(|x| {
        let pw = powers(q, x);
        match pw[1..].iter().position(|&e| e == 0) {
            // x^m = 1 makes the left-bracketed sequence periodic with period m,
            // so residues mod m cover every split.
            Some(idx) => {
                let m = idx + 1;
                for i in 0..m {
                    for j in 0..m {
                        if q.mul(pw[i], pw[j]) != pw[(i + j) % m] {
                            return Some((x, i, j));
                        }
                    }
                }
                None
            }
            None => {
                for i in 0..=n {
                    for j in 0..=n - i {
                        if q.mul(pw[i], pw[j]) != pw[i + j] {
                            return Some((x, i, j));
                        }
                    }
                }
                None
            }
        }
    })
}

pub fn is_power_associative(q: &CayleyLoop) -> bool {
    power_associativity_witness(q).is_none()
}

pub fn order_spectrum(q: &CayleyLoop) -> BTreeMap<u32, usize> {
    let mut spectrum = BTreeMap::new();
    for x in q.elements() {
        *spectrum.entry(element_order(q, x)).or_insert(0) += 1;
    }
    spectrum
}

/// Iterates `Q -> Q/Z(Q)` until the trivial loop or a trivial center.
pub fn nilpotency_class(q: &CayleyLoop) -> Nilpotency {
    let mut current = q.clone();
    let mut class = 0;
    loop {
        if current.order() == 1 {
            return Nilpotency::Class(class);
        }
        let z = center(&current);
        if z.len() == 1 {
            return Nilpotency::NotNilpotent;
        }
        class += 1;
        // The center is always normal.
        current = quotient_unchecked(&current, &z).loop_;
    }
}

pub fn structure_profile(q: &CayleyLoop) -> StructureProfile {
    let z = center(q);
    let assoc = associator_subloop(q);
    let nilpotency_class = if z.len() == q.order() {
        Nilpotency::Class(u32::from(q.order() > 1))
    } else {
        nilpotency_class(q)
    };
    StructureProfile {
        order: q.order(),
        order_spectrum: order_spectrum(q),
        center_size: z.len(),
        associator_subloop_size: assoc.len(),
        nilpotency_class,
        is_group: assoc.len() == 1,
        is_commutative: q.is_commutative(),
        is_power_associative: is_power_associative(q),
    }
}
