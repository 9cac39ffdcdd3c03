//! The finite quotient `F_p` of the free loop, realized on `(Z_p)^6`.
//!
//! Coordinates 1-2 carry the images of the generators `x`, `y`; coordinates
//! 3-6 are the central part in the basis `x^p, y^p, (x,x,y), (x,y,y)`.
//! Signed corrections are evaluated over `i64` and reduced to `0..p`.

use std::fmt;

use crate::error::{Error, Result};
use crate::loops::{CayleyLoop, DEFAULT_ORDER_CAP};
use crate::primes::require_prime;

/// Modular overflow indicator: 1 iff `a + b >= p`, for `0 <= a, b < p`.
#[inline]
pub fn overflow(p: u32, a: u32, b: u32) -> u32 {
    debug_assert!(a < p && b < p);
    u32::from(a + b >= p)
}

/// `[k, a]_p = sum_{i=1}^{k-1} overflow(a, i*a mod p)`; 0 for `k <= 1`.
///
/// The summand has period `p` in `i` and a full period sums to `a`, so the
/// value is `q*a + [r+1, a]_p` where `k - 1 = q*p + r`.
pub fn bracket(p: u32, k: u64, a: u32) -> u64 {
    if k <= 1 {
        return 0;
    }
    let (q, r) = ((k - 1) / p as u64, (k - 1) % p as u64);
    let partial: u64 = (1..=r).map(|i| overflow(p, a, ((i * a as u64) % p as u64) as u32) as u64).sum();
    q * a as u64 + partial
}

/// `sum_{i=1}^{k-1} (i + i^2)` reduced mod `p`, from the closed form
/// `(k-1)k/2 + (k-1)k(2k-1)/6`. The value mod `p` depends only on `k mod 6p`.
pub fn power_correction(p: u32, k: u64) -> u32 {
    let k = (k % (6 * p as u64)) as u128;
    if k == 0 {
        return 0;
    }
    let s = (k - 1) * k / 2 + (k - 1) * k * (2 * k - 1) / 6;
    (s % p as u128) as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FpElement(pub [u32; 6]);

impl FpElement {
    pub const IDENTITY: FpElement = FpElement([0; 6]);

    pub fn is_identity(&self) -> bool {
        self.0 == [0; 6]
    }

    /// Whether the element lies in `0 x 0 x (Z_p)^4`.
    pub fn is_central(&self) -> bool {
        self.0[0] == 0 && self.0[1] == 0
    }

    /// Coordinates 3-6.
    pub fn central_part(&self) -> [u32; 4] {
        [self.0[2], self.0[3], self.0[4], self.0[5]]
    }

    pub fn from_central(c: [u32; 4]) -> Self {
        FpElement([0, 0, c[0], c[1], c[2], c[3]])
    }

    /// Text form `p:a1,a2,a3,a4,a5,a6`.
    pub fn to_text(&self, p: u32) -> String {
        let a = self.0;
        format!("{p}:{},{},{},{},{},{}", a[0], a[1], a[2], a[3], a[4], a[5])
    }

    pub fn parse(s: &str) -> Result<(u32, FpElement)> {
        let bad = |msg: String| Error::Parse { line: 1, msg };
        let (p, rest) = s.trim().split_once(':').ok_or_else(|| bad(format!("expected `p:a1,...,a6`, found `{s}`")))?;
        let p: u32 = p.trim().parse().map_err(|_| bad(format!("invalid prime `{p}`")))?;
        require_prime(p as u64)?;
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(bad(format!("expected 6 coordinates, found {}", parts.len())));
        }
        let mut a = [0u32; 6];
        for (slot, part) in a.iter_mut().zip(parts) {
            let v: u32 = part.parse().map_err(|_| bad(format!("invalid coordinate `{part}`")))?;
            if v >= p {
                return Err(bad(format!("coordinate {v} not reduced mod {p}")));
            }
            *slot = v;
        }
        Ok((p, FpElement(a)))
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Arithmetic of `F_p` for a fixed prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FpLoop {
    p: u32,
}

impl FpLoop {
    pub fn new(p: u32) -> Result<Self> {
        require_prime(p as u64)?;
        Ok(Self { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// `p^6`.
    pub fn order(&self) -> u64 {
        (self.p as u64).pow(6)
    }

    #[inline]
    fn r(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn reduce(&self, a: [i64; 6]) -> FpElement {
        FpElement(a.map(|v| self.r(v)))
    }

    pub fn x(&self) -> FpElement {
        FpElement([1, 0, 0, 0, 0, 0])
    }

    pub fn y(&self) -> FpElement {
        FpElement([0, 1, 0, 0, 0, 0])
    }

    #[inline]
    pub fn mul(&self, u: &FpElement, v: &FpElement) -> FpElement {
        let p = self.p;
        let [a1, a2, a3, a4, a5, a6] = u.0.map(i64::from);
        let [b1, b2, b3, b4, b5, b6] = v.0.map(i64::from);
        let o1 = overflow(p, u.0[0], v.0[0]) as i64;
        let o2 = overflow(p, u.0[1], v.0[1]) as i64;
        self.reduce([
            a1 + b1,
            a2 + b2,
            a3 + b3 + o1,
            a4 + b4 + o2,
            a5 + b5 - a1 * b1 * (a2 + b2),
            a6 + b6 + a2 * b2 * (a1 + b1),
        ])
    }

    /// The unique `w` with `u * w = v`, by back-substitution.
    #[inline]
    pub fn ldiv(&self, u: &FpElement, v: &FpElement) -> FpElement {
        let p = self.p;
        let [a1, a2, a3, a4, a5, a6] = u.0.map(i64::from);
        let [b1, b2, b3, b4, b5, b6] = v.0.map(i64::from);
        let w1 = self.r(b1 - a1);
        let w2 = self.r(b2 - a2);
        let (w1i, w2i) = (w1 as i64, w2 as i64);
        self.reduce([
            w1i,
            w2i,
            b3 - a3 - overflow(p, u.0[0], w1) as i64,
            b4 - a4 - overflow(p, u.0[1], w2) as i64,
            b5 - a5 + a1 * w1i * b2,
            b6 - a6 - a2 * w2i * b1,
        ])
    }

    /// `u^k` from the closed power formula.
    pub fn pow(&self, u: &FpElement, k: u64) -> FpElement {
        if k == 0 {
            return FpElement::IDENTITY;
        }
        let p = self.p;
        let [a1, a2, a3, a4, a5, a6] = u.0.map(i64::from);
        let km = (k % p as u64) as i64;
        let s = power_correction(p, k) as i64;
        let b1 = (bracket(p, k, u.0[0]) % p as u64) as i64;
        let b2 = (bracket(p, k, u.0[1]) % p as u64) as i64;
        self.reduce([
            km * a1,
            km * a2,
            km * a3 + b1,
            km * a4 + b2,
            km * a5 - a1 * a1 * a2 * s,
            km * a6 + a1 * a2 * a2 * s,
        ])
    }

    /// `u^k` as `k` left-bracketed products.
    pub fn pow_iterated(&self, u: &FpElement, k: u64) -> FpElement {
        let mut acc = FpElement::IDENTITY;
        for _ in 0..k {
            acc = self.mul(u, &acc);
        }
        acc
    }

    /// Closed form `(0,0,0,0, j1 D, j2 D)` with `D = i1 k2 - i2 k1`, reading
    /// `(i1,i2)`, `(j1,j2)`, `(k1,k2)` off the first two coordinates.
    pub fn associator(&self, u: &FpElement, v: &FpElement, w: &FpElement) -> FpElement {
        let [i1, i2, ..] = u.0.map(i64::from);
        let [j1, j2, ..] = v.0.map(i64::from);
        let [k1, k2, ..] = w.0.map(i64::from);
        let d = i1 * k2 - i2 * k1;
        self.reduce([0, 0, 0, 0, j1 * d, j2 * d])
    }

    /// `(u(vw)) \ ((uv)w)`.
    pub fn associator_by_definition(&self, u: &FpElement, v: &FpElement, w: &FpElement) -> FpElement {
        let lhs = self.mul(&self.mul(u, v), w);
        let rhs = self.mul(u, &self.mul(v, w));
        self.ldiv(&rhs, &lhs)
    }

    /// Mixed-radix index, first coordinate least significant.
    pub fn index(&self, u: &FpElement) -> u32 {
        u.0.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    pub fn element(&self, mut idx: u32) -> FpElement {
        let mut a = [0u32; 6];
        for c in a.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        FpElement(a)
    }

    pub fn elements(&self) -> impl Iterator<Item = FpElement> + '_ {
        (0..self.order() as u32).map(move |i| self.element(i))
    }

    /// The full Cayley table, indexed by [`FpLoop::index`].
    pub fn cayley(&self) -> Result<CayleyLoop> {
        self.cayley_with_cap(DEFAULT_ORDER_CAP)
    }

    pub fn cayley_with_cap(&self, cap: usize) -> Result<CayleyLoop> {
        let n = self.order();
        if n > cap as u64 {
            return Err(Error::OrderCapExceeded { order: n, cap });
        }
        let elems: Vec<FpElement> = self.elements().collect();
        CayleyLoop::from_fn(n as usize, |a, b| self.index(&self.mul(&elems[a], &elems[b])) as usize)
    }

    /// Exponents `(a1..a6)` of the word
    /// `x^a1 y^a2 (x^p)^a3 (y^p)^a4 (x,x,y)^a5 (x,y,y)^a6`, after checking that
    /// the word, multiplied out left to right, gives back `u`.
    pub fn canonical_word(&self, u: &FpElement) -> Result<[u32; 6]> {
        let (x, y) = (self.x(), self.y());
        let p = self.p as u64;
        let letters = [
            x,
            y,
            self.pow(&x, p),
            self.pow(&y, p),
            self.associator_by_definition(&x, &x, &y),
            self.associator_by_definition(&x, &y, &y),
        ];
        let value = letters
            .iter()
            .zip(u.0)
            .fold(FpElement::IDENTITY, |acc, (letter, e)| self.mul(&acc, &self.pow(letter, e as u64)));
        if value != *u {
            return Err(Error::DecompositionMismatch { expected: u.to_text(self.p), got: value.to_text(self.p) });
        }
        Ok(u.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u32) -> FpLoop {
        FpLoop::new(p).unwrap()
    }

    #[test]
    fn overflow_examples() {
        for b in 0..5 {
            assert_eq!(overflow(5, 0, b), 0);
        }
        assert_eq!(overflow(2, 1, 1), 1);
        assert_eq!(overflow(5, 2, 3), 1);
        assert_eq!(overflow(5, 2, 2), 0);
    }

    fn bracket_by_definition(p: u32, k: u64, a: u32) -> u64 {
        (1..k).map(|i| overflow(p, a, ((i * a as u64) % p as u64) as u32) as u64).sum()
    }

    #[test]
    fn bracket_examples() {
        for p in [2u32, 3, 5, 7] {
            for a in 0..p {
                assert_eq!(bracket(p, 1, a), 0);
                assert_eq!(bracket(p, p as u64, a), a as u64);
                for k in 0..4 * p as u64 {
                    assert_eq!(bracket(p, k, a), bracket_by_definition(p, k, a));
                }
            }
        }
        assert_eq!(bracket(3, 3, 2), 2);
    }

    #[test]
    fn power_correction_matches_sum() {
        for p in [2u32, 3, 5, 7] {
            for k in 0..100u64 {
                let direct: u64 = (1..k).map(|i| i + i * i).sum();
                assert_eq!(power_correction(p, k) as u64, direct % p as u64, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn product_examples() {
        let f = fp(2);
        assert_eq!(f.mul(&f.x(), &f.x()), FpElement([0, 0, 1, 0, 0, 0]));
        for p in [2, 3, 5] {
            let f = fp(p);
            let (x, y) = (f.x(), f.y());
            let o = overflow(p, 1, 1);
            assert_eq!(f.mul(&f.mul(&x, &x), &y), FpElement([2 % p, 1, o, 0, 0, 0]));
            assert_eq!(f.mul(&x, &f.mul(&x, &y)), f.reduce([2, 1, o as i64, 0, -1, 0]));
        }
    }

    #[test]
    fn ldiv_example() {
        let f = fp(2);
        let xp = FpElement([0, 0, 1, 0, 0, 0]);
        assert_eq!(f.ldiv(&f.x(), &xp), f.x());
        assert_eq!(f.ldiv(&FpElement::IDENTITY, &xp), xp);
    }

    #[test]
    fn powers() {
        let f = fp(3);
        assert_eq!(f.pow(&FpElement([1, 1, 0, 0, 0, 0]), 3), FpElement([0, 0, 1, 1, 1, 2]));
        let u = FpElement([2, 1, 0, 2, 1, 1]);
        assert_eq!(f.pow(&u, 1), u);
        assert_eq!(f.pow(&u, 0), FpElement::IDENTITY);
        // p = 3 branch: (0,0,a1,a2,a1^2 a2,-a1 a2^2)
        for u in f.elements() {
            let [a1, a2, ..] = u.0.map(i64::from);
            assert_eq!(f.pow(&u, 3), f.reduce([0, 0, a1, a2, a1 * a1 * a2, -a1 * a2 * a2]));
        }
        for p in [2u32, 5, 7] {
            let f = fp(p);
            for idx in (0..f.order() as u32).step_by(37) {
                let u = f.element(idx);
                assert_eq!(f.pow(&u, p as u64), FpElement([0, 0, u.0[0], u.0[1], 0, 0]));
            }
        }
    }

    #[test]
    fn associator_examples() {
        for p in [2, 3, 5] {
            let f = fp(p);
            let (x, y) = (f.x(), f.y());
            assert_eq!(f.associator(&x, &x, &y), FpElement([0, 0, 0, 0, 1, 0]));
            assert_eq!(f.associator(&x, &y, &y), FpElement([0, 0, 0, 0, 0, 1]));
            assert_eq!(f.associator_by_definition(&x, &x, &y), FpElement([0, 0, 0, 0, 1, 0]));
            assert_eq!(f.associator_by_definition(&x, &y, &y), FpElement([0, 0, 0, 0, 0, 1]));
        }
    }

    #[test]
    fn canonical_words() {
        let f = fp(3);
        assert_eq!(f.canonical_word(&FpElement::IDENTITY).unwrap(), [0; 6]);
        assert_eq!(f.canonical_word(&FpElement([1, 2, 0, 0, 0, 0])).unwrap(), [1, 2, 0, 0, 0, 0]);
        for u in f.elements() {
            assert_eq!(f.canonical_word(&u).unwrap(), u.0);
        }
    }

    #[test]
    fn indexing() {
        let f = fp(3);
        assert_eq!(f.index(&FpElement::IDENTITY), 0);
        assert_eq!(f.index(&f.x()), 1);
        assert_eq!(f.index(&f.y()), 3);
        for i in 0..729 {
            assert_eq!(f.index(&f.element(i)), i);
        }
    }

    #[test]
    fn text_form() {
        let (p, u) = FpElement::parse("3:1,2,0,0,2,1").unwrap();
        assert_eq!(p, 3);
        assert_eq!(u, FpElement([1, 2, 0, 0, 2, 1]));
        assert_eq!(u.to_text(3), "3:1,2,0,0,2,1");
        assert!(FpElement::parse("3:1,2,3,0,0,0").is_err());
        assert!(FpElement::parse("4:1,2,3,0,0,0").is_err());
        assert!(FpElement::parse("3:1,2").is_err());
    }

    #[test]
    fn cayley_cap() {
        assert_eq!(fp(2).cayley().unwrap().order(), 64);
        assert!(matches!(fp(5).cayley(), Err(Error::OrderCapExceeded { .. })));
    }

    fn element(p: u32) -> impl Strategy<Value = FpElement> {
        prop::array::uniform6(0..p).prop_map(FpElement)
    }

    proptest! {
        #[test]
        fn ldiv_inverts_mul_p5(u in element(5), w in element(5)) {
            let f = fp(5);
            prop_assert_eq!(f.ldiv(&u, &f.mul(&u, &w)), w);
        }

        #[test]
        fn canonical_word_round_trip_p5(u in element(5)) {
            prop_assert_eq!(fp(5).canonical_word(&u).unwrap(), u.0);
        }

        #[test]
        fn canonical_word_round_trip_p2(u in element(2)) {
            prop_assert_eq!(fp(2).canonical_word(&u).unwrap(), u.0);
        }
    }
}
