use rayon::prelude::*;

use super::inner::inner_maps;
use super::subloop::Subloop;
use super::CayleyLoop;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Quotient {
    pub loop_: CayleyLoop,
    /// Element index to coset index; the coset of 0 is 0.
    pub coset_of: Vec<u32>,
}

/// `Q/H` after checking that `H` is a subloop fixed setwise by every inner
/// generator.
pub fn quotient(q: &CayleyLoop, h: &Subloop) -> Result<Quotient> {
    if let Some((a, b, product)) = h.closure_witness(q) {
        return Err(Error::NotSubloop { a, b, product });
    }
    let mask = h.mask();
    let left_only = q.is_commutative();
    let maps: Vec<_> = inner_maps(q, left_only).collect();
    let violation = maps.par_iter().find_map_first(|m| {
        h.members().iter().find_map(|&e| {
            let img = m.apply(q, e);
            (!mask[img as usize]).then_some(Error::NotNormal { map: *m, element: e, image: img })
        })
    });
    if let Some(err) = violation {
        return Err(err);
    }
    Ok(quotient_unchecked(q, h))
}

/// Coset construction for a subloop already known to be normal.
pub fn quotient_unchecked(q: &CayleyLoop, h: &Subloop) -> Quotient {
    const UNSET: u32 = u32::MAX;
    let n = q.order();
    let mut coset_of = vec![UNSET; n];
    let mut reps = Vec::with_capacity(n / h.len().max(1));
    for x in q.elements() {
        if coset_of[x as usize] != UNSET {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &m in h.members() {
            coset_of[q.mul(x, m) as usize] = c;
        }
    }
    let k = reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[q.mul(a, b) as usize]);
        }
    }
    debug_assert!(
        q.elements().all(|a| q.elements().all(|b| {
            table[coset_of[a as usize] as usize * k + coset_of[b as usize] as usize]
                == coset_of[q.mul(a, b) as usize]
        })),
        "cosets are not a congruence"
    );
    let loop_ = CayleyLoop::from_flat_with_cap(k, table, usize::MAX).expect("quotient of a loop by a normal subloop");
    Quotient { loop_, coset_of }
}
