//! Homomorphisms out of `F_p`, determined by the images of `x` and `y`.

use rayon::prelude::*;

use super::quotient::FpQuotient;
use super::subspace::{grassmannian3, require_small_prime, Subspace3};
use crate::error::{Error, Result};
use crate::free::{FpElement, FpLoop};
use crate::loops::{
    associator, element_order, is_automorphic, is_power_associative, nilpotency_class, AutomorphicMethod,
    CayleyLoop, Nilpotency, UnionFind, EXHAUSTIVE_A_LIMIT,
};

/// A loop of order `p^3` in the variety of which `F_p` is free.
#[derive(Debug, Clone, Copy)]
pub struct FreeTarget<'a> {
    p: u32,
    q: &'a CayleyLoop,
}

impl<'a> FreeTarget<'a> {
    pub fn new(p: u32, q: &'a CayleyLoop) -> Result<Self> {
        require_small_prime(p, super::MAX_PRIME)?;
        let outside = |why: String| Err(Error::OutsideVariety(why));
        if q.order() as u64 != (p as u64).pow(3) {
            return outside(format!("order {} is not {p}^3", q.order()));
        }
        if let Some((a, b)) = q.commutativity_witness() {
            return outside(format!("{a}*{b} != {b}*{a}"));
        }
        if !is_power_associative(q) {
            return outside("not power-associative".into());
        }
        let method = if q.order() <= EXHAUSTIVE_A_LIMIT {
            AutomorphicMethod::identity_a_exhaustive()
        } else {
            AutomorphicMethod::Inner
        };
        if let Some(w) = is_automorphic(q, method)?.counterexample {
            return outside(format!("not automorphic: {w:?}"));
        }
        let p2 = p * p;
        if let Some(x) = q.elements().find(|&x| p2 % element_order(q, x) != 0) {
            return outside(format!("element {x} has order {}", element_order(q, x)));
        }
        let bad_associator = q.elements().find_map(|a| {
            q.elements().find_map(|b| {
                q.elements().map(|c| associator(q, a, b, c)).find(|&v| p % element_order(q, v) != 0)
            })
        });
        if let Some(v) = bad_associator {
            return outside(format!("associator {v} has order {}", element_order(q, v)));
        }
        match nilpotency_class(q) {
            Nilpotency::Class(c) if c <= 2 => {}
            other => return outside(format!("nilpotency class {other:?}")),
        }
        Ok(Self { p, q })
    }

    pub fn loop_(&self) -> &CayleyLoop {
        self.q
    }

    /// The homomorphism `F_p -> Q` with `x -> a`, `y -> b`, evaluated on the
    /// canonical word `x^u1 y^u2 (x^p)^u3 (y^p)^u4 (x,x,y)^u5 (x,y,y)^u6`.
    pub fn hom(&self, a: u32, b: u32) -> FreeHom {
        let (p, q) = (self.p, self.q);
        let letters = [a, b, q.pow(a, p as u64), q.pow(b, p as u64), associator(q, a, a, b), associator(q, a, b, b)];
        let powers: Vec<Vec<u32>> = letters.iter().map(|&l| (0..p as u64).map(|e| q.pow(l, e)).collect()).collect();
        let n = (p as usize).pow(6);
        let mut images = Vec::with_capacity(n);
        let mut hit = vec![false; q.order()];
        for idx in 0..n {
            let mut rest = idx;
            let mut acc = 0;
            for pw in &powers {
                acc = q.mul(acc, pw[rest % p as usize]);
                rest /= p as usize;
            }
            hit[acc as usize] = true;
            images.push(acc);
        }
        FreeHom { fp: FpLoop::new(p).expect("prime checked"), images, surjective: hit.iter().all(|&h| h) }
    }
}

#[derive(Debug, Clone)]
pub struct FreeHom {
    fp: FpLoop,
    /// Indexed by [`FpLoop::index`].
    images: Vec<u32>,
    surjective: bool,
}

impl FreeHom {
    pub fn image(&self, u: &FpElement) -> u32 {
        self.images[self.fp.index(u) as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    /// Whether every element of the central subloop `N` maps to the identity.
    pub fn kernel_contains(&self, n: &Subspace3) -> bool {
        n.vectors().into_iter().all(|v| self.image(&FpElement::from_central(v)) == 0)
    }

    pub fn kernel(&self) -> Vec<FpElement> {
        (0..self.images.len() as u32).filter(|&i| self.images[i as usize] == 0).map(|i| self.fp.element(i)).collect()
    }

    /// The kernel as a subspace of the center, if it is a central subloop of order `p^3`.
    pub fn kernel_subspace(&self) -> Option<Subspace3> {
        let k = self.kernel();
        let p = self.fp.p();
        if k.len() as u32 != p * p * p || !k.iter().all(FpElement::is_central) {
            return None;
        }
        let rows: Vec<[u32; 4]> = k.iter().map(FpElement::central_part).collect();
        Subspace3::from_rows(p, &rows).ok()
    }
}

/// Groups the subspaces `N` by isomorphism of `F_p / N`: `N1 ~ N2` when some
/// surjection `F_p -> F_p / N2` has kernel `N1`.
pub fn iso_classes_via_free(p: u32) -> Result<Vec<Vec<Subspace3>>> {
    require_small_prime(p, 3)?;
    let all = grassmannian3(p)?;
    let position = |s: &Subspace3| all.binary_search(s).expect("kernels are subspaces");
    let kernels: Vec<Result<Vec<Subspace3>>> = all
        .par_iter()
        .map(|n2| {
            let quotient = FpQuotient::new(n2)?;
            let target = FreeTarget::new(p, quotient.loop_())?;
            let q = quotient.loop_();
            let mut found = Vec::new();
            for a in q.elements() {
                for b in q.elements() {
                    let h = target.hom(a, b);
                    if h.is_surjective() {
                        let k = h.kernel_subspace().ok_or_else(|| {
                            Error::Degenerate(format!("surjection onto F_p/{n2} with non-central kernel"))
                        })?;
                        found.push(k);
                    }
                }
            }
            Ok(found)
        })
        .collect();
    let mut uf = UnionFind::new(all.len());
    for (i, ks) in kernels.into_iter().enumerate() {
        for k in ks? {
            uf.union(i as u32, position(&k) as u32);
        }
    }
    let mut blocks: Vec<Vec<Subspace3>> = vec![Vec::new(); all.len()];
    for (i, s) in all.iter().enumerate() {
        blocks[uf.find(i as u32) as usize].push(*s);
    }
    blocks.retain(|b| !b.is_empty());
    blocks.sort();
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{compute_orbits, named_representative, OrbitLabel};
    use crate::loops::{exceptional_loop_8, AbelianGroup};

    #[test]
    fn canonical_projection_has_kernel_n() {
        for p in [2, 3] {
            for n in grassmannian3(p).unwrap() {
                let quotient = FpQuotient::new(&n).unwrap();
                let fp = FpLoop::new(p).unwrap();
                let target = FreeTarget::new(p, quotient.loop_()).unwrap();
                let (a, b) = (quotient.project(&fp.x()), quotient.project(&fp.y()));
                let h = target.hom(a, b);
                assert!(h.is_surjective());
                assert!(h.kernel_contains(&n));
                assert_eq!(h.kernel_subspace(), Some(n));
                for u in fp.elements() {
                    assert_eq!(h.image(&u), quotient.project(&u));
                }
            }
        }
    }

    #[test]
    fn trivial_images_give_trivial_hom() {
        let q = FpQuotient::new(&named_representative(3, OrbitLabel::O3).unwrap()).unwrap();
        let h = FreeTarget::new(3, q.loop_()).unwrap().hom(0, 0);
        assert!(!h.is_surjective());
        assert!(h.images().iter().all(|&v| v == 0));
    }

    #[test]
    fn q3_and_q4_differ_at_p2() {
        let q3 = FpQuotient::new(&named_representative(2, OrbitLabel::O3).unwrap()).unwrap();
        let n4 = named_representative(2, OrbitLabel::O4).unwrap();
        let target = FreeTarget::new(2, q3.loop_()).unwrap();
        let mut surjections = 0;
        for a in 0..8 {
            for b in 0..8 {
                let h = target.hom(a, b);
                if h.is_surjective() {
                    surjections += 1;
                    assert!(!h.kernel_contains(&n4), "a={a} b={b}");
                }
            }
        }
        assert!(surjections > 0);
    }

    #[test]
    fn targets_outside_the_variety_are_rejected() {
        assert!(matches!(FreeTarget::new(2, &exceptional_loop_8()), Err(Error::OutsideVariety(_))));
        let z8 = AbelianGroup::new(vec![8]).cayley().unwrap();
        assert!(matches!(FreeTarget::new(2, &z8), Err(Error::OutsideVariety(_))));
        let z2z4 = AbelianGroup::new(vec![2, 4]).cayley().unwrap();
        assert!(FreeTarget::new(2, &z2z4).is_ok());
    }

    #[test]
    fn agrees_with_orbits() {
        for p in [2, 3] {
            let via_free = iso_classes_via_free(p).unwrap();
            assert_eq!(via_free, compute_orbits(p).unwrap().partition(), "p={p}");
        }
    }
}
