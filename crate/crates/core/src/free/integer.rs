//! The free commutative automorphic loop `F` of nilpotency class two on
//! generators `x1, x2`. The tuple `(a1, a2, a3, a4)` stands for
//! `x1^a1 x2^a2 z1^a3 z2^a4` with `z1 = (x1, x1, x2)`, `z2 = (x1, x2, x2)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeElement(pub [BigInt; 4]);

impl FreeElement {
    pub fn new(a: [i64; 4]) -> Self {
        Self(a.map(BigInt::from))
    }

    pub fn identity() -> Self {
        Self::new([0; 4])
    }

    pub fn x1() -> Self {
        Self::new([1, 0, 0, 0])
    }

    pub fn x2() -> Self {
        Self::new([0, 1, 0, 0])
    }

    pub fn z1() -> Self {
        Self::new([0, 0, 1, 0])
    }

    pub fn z2() -> Self {
        Self::new([0, 0, 0, 1])
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "{a},{b},{c},{d}")
    }
}

impl FromStr for FreeElement {
    type Err = Error;

    /// `a1,a2,a3,a4` with optional signs.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Parse { line: 1, msg: format!("expected 4 comma-separated integers, found `{s}`") });
        }
        let mut out: [BigInt; 4] = Default::default();
        for (slot, part) in out.iter_mut().zip(parts) {
            *slot = part
                .strip_prefix('+')
                .unwrap_or(part)
                .parse()
                .map_err(|_| Error::Parse { line: 1, msg: format!("invalid integer `{part}`") })?;
        }
        Ok(Self(out))
    }
}

/// `(a1+b1, a2+b2, a3+b3 - a1 b1 (a2+b2), a4+b4 + a2 b2 (a1+b1))`.
pub fn free_mul(u: &FreeElement, v: &FreeElement) -> FreeElement {
    let [a1, a2, a3, a4] = &u.0;
    let [b1, b2, b3, b4] = &v.0;
    let s1 = a1 + b1;
    let s2 = a2 + b2;
    let c3 = a3 + b3 - a1 * b1 * &s2;
    let c4 = a4 + b4 + a2 * b2 * &s1;
    FreeElement([s1, s2, c3, c4])
}

/// The unique `w` with `u * w = v`, solved coordinate by coordinate.
pub fn free_ldiv(u: &FreeElement, v: &FreeElement) -> FreeElement {
    let [a1, a2, a3, a4] = &u.0;
    let [b1, b2, b3, b4] = &v.0;
    let w1 = b1 - a1;
    let w2 = b2 - a2;
    // u*w has third coordinate a3 + w3 - a1 w1 (a2 + w2) = a3 + w3 - a1 w1 b2
    let w3 = b3 - a3 + a1 * &w1 * b2;
    let w4 = b4 - a4 - a2 * &w2 * b1;
    FreeElement([w1, w2, w3, w4])
}

/// Closed form: `(0, 0, b1 D, b2 D)` with `D = a1 c2 - a2 c1`.
pub fn free_associator(u: &FreeElement, v: &FreeElement, w: &FreeElement) -> FreeElement {
    let [a1, a2, ..] = &u.0;
    let [b1, b2, ..] = &v.0;
    let [c1, c2, ..] = &w.0;
    let d = a1 * c2 - a2 * c1;
    FreeElement([BigInt::zero(), BigInt::zero(), b1 * &d, b2 * &d])
}

/// `(u(vw)) \ ((uv)w)` evaluated with [`free_mul`] and [`free_ldiv`].
pub fn free_associator_by_definition(u: &FreeElement, v: &FreeElement, w: &FreeElement) -> FreeElement {
    let lhs = free_mul(&free_mul(u, v), w);
    let rhs = free_mul(u, &free_mul(v, w));
    free_ldiv(&rhs, &lhs)
}
