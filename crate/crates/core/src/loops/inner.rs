use std::fmt;

use serde::Serialize;

use super::CayleyLoop;

/// A bijection on `0..n`, stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Returns `None` unless `images` hits each of `0..n` exactly once.
    pub fn new(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n as u32).collect() }
    }

    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Self { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    /// First pair `(a, b)` with `φ(ab) != φ(a)φ(b)`.
    pub fn automorphism_witness(&self, q: &CayleyLoop) -> Option<(u32, u32)> {
        for a in q.elements() {
            let fa = self.apply(a);
            for b in q.elements() {
                if self.apply(q.mul(a, b)) != q.mul(fa, self.apply(b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// One of the standard generators of the inner mapping group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum InnerMap {
    /// `L_{x,y} = L_{yx}^{-1} L_y L_x`
    L { x: u32, y: u32 },
    /// `R_{x,y} = R_{xy}^{-1} R_y R_x`
    R { x: u32, y: u32 },
    /// `T_x = L_x^{-1} R_x`
    T { x: u32 },
}

impl fmt::Display for InnerMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            InnerMap::L { x, y } => write!(f, "L_{{{x},{y}}}"),
            InnerMap::R { x, y } => write!(f, "R_{{{x},{y}}}"),
            InnerMap::T { x } => write!(f, "T_{x}"),
        }
    }
}

impl InnerMap {
    #[inline]
    pub fn apply(&self, q: &CayleyLoop, z: u32) -> u32 {
        match *self {
            InnerMap::L { x, y } => q.ldiv(q.mul(y, x), q.mul(y, q.mul(x, z))),
            InnerMap::R { x, y } => q.rdiv(q.mul(q.mul(z, x), y), q.mul(x, y)),
            InnerMap::T { x } => q.ldiv(x, q.mul(z, x)),
        }
    }

    pub fn permutation(&self, q: &CayleyLoop) -> Permutation {
        Permutation { images: q.elements().map(|z| self.apply(q, z)).collect() }
    }
}

/// All generators `L_{x,y}`, `R_{x,y}`, `T_x` in a fixed order; with
/// `left_only`, just the `L_{x,y}` (sufficient for commutative loops).
pub fn inner_maps(q: &CayleyLoop, left_only: bool) -> impl Iterator<Item = InnerMap> + '_ {
    let n = q.order() as u32;
    let pairs = move || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let left = pairs().map(|(x, y)| InnerMap::L { x, y });
    let rest = (!left_only)
        .then(move || pairs().map(|(x, y)| InnerMap::R { x, y }).chain((0..n).map(|x| InnerMap::T { x })))
        .into_iter()
        .flatten();
    left.chain(rest)
}

/// Streams `(generator, permutation)` pairs.
pub fn inner_generators(q: &CayleyLoop, left_only: bool) -> impl Iterator<Item = (InnerMap, Permutation)> + '_ {
    inner_maps(q, left_only).map(move |m| (m, m.permutation(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::exceptional_loop_8;

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 0, 2]).is_some());
        assert!(Permutation::new(vec![1, 1, 2]).is_none());
        assert!(Permutation::new(vec![0, 3]).is_none());
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).images(), &[2, 0, 1]);
    }

    #[test]
    fn translations_by_identity_are_trivial() {
        let q = exceptional_loop_8();
        for y in q.elements() {
            assert!(InnerMap::L { x: 0, y }.permutation(&q).is_identity());
        }
    }

    #[test]
    fn abelian_group_has_trivial_inner_maps() {
        let q = CayleyLoop::from_fn(6, |a, b| (a + b) % 6).unwrap();
        assert!(inner_generators(&q, false).all(|(_, p)| p.is_identity()));
        assert_eq!(inner_maps(&q, false).count(), 36 + 36 + 6);
        assert_eq!(inner_maps(&q, true).count(), 36);
    }

    #[test]
    fn exceptional_loop_has_nontrivial_left_inner_map() {
        let q = exceptional_loop_8();
        let nontrivial = inner_generators(&q, true).filter(|(_, p)| !p.is_identity()).count();
        assert!(nontrivial > 0);
    }
}
