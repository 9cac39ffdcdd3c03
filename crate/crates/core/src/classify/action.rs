//! `GL_2(p)` and its induced linear action on `Z(F_p) = (Z_p)^4`.
//!
//! Vectors of the center are rows `(c1, c2, c3, c4)` in the basis
//! `x^p, y^p, (x,x,y), (x,y,y)`. An [`ActionMatrix`] acts on the right,
//! `v -> v M`, so row `i` of `M` is the image of basis vector `i`. With this
//! convention `action_matrix(rho * sigma) = action_matrix(rho) * action_matrix(sigma)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::primes::{primitive_root, require_prime};

/// `(a1 a2; b1 b2)` over `Z_p`; the induced automorphism sends
/// `x -> x^a1 y^a2` and `y -> x^b1 y^b2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    p: u32,
    m: [[u32; 2]; 2],
}

impl Mat2 {
    pub fn new(p: u32, m: [[u32; 2]; 2]) -> Result<Self> {
        let m = m.map(|row| row.map(|v| v % p));
        let out = Self { p, m };
        if out.det() == 0 {
            return Err(Error::Degenerate(format!("matrix {out} is singular mod {p}")));
        }
        Ok(out)
    }

    pub fn identity(p: u32) -> Self {
        Self { p, m: [[1, 0], [0, 1]] }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn entries(&self) -> [[u32; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> u32 {
        let p = self.p as u64;
        let [[a1, a2], [b1, b2]] = self.m.map(|r| r.map(u64::from));
        ((a1 * b2 + p * p - (a2 * b1) % (p * p)) % p) as u32
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let p = self.p;
        let mut m = [[0u32; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = ((0..2).map(|k| self.m[i][k] as u64 * other.m[k][j] as u64).sum::<u64>() % p as u64) as u32;
            }
        }
        Mat2 { p, m }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a1, a2], [b1, b2]] = self.m;
        write!(f, "({a1} {a2}; {b1} {b2})")
    }
}

/// All of `GL_2(p)`, identity first, then in lexicographic order.
pub fn gl2_enumerate(p: u32) -> Result<Vec<Mat2>> {
    require_prime(p as u64)?;
    let id = Mat2::identity(p);
    let mut out = vec![id];
    for a1 in 0..p {
        for a2 in 0..p {
            for b1 in 0..p {
                for b2 in 0..p {
                    if let Ok(m) = Mat2::new(p, [[a1, a2], [b1, b2]]) {
                        if m != id {
                            out.push(m);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Two transvections and a diagonal matrix with a primitive root; together
/// they generate `GL_2(p)`.
pub fn gl2_generators(p: u32) -> Vec<Mat2> {
    let g = primitive_root(p);
    let mut gens = vec![Mat2 { p, m: [[1, 1], [0, 1]] }, Mat2 { p, m: [[1, 0], [1, 1]] }];
    if g != 1 {
        gens.push(Mat2 { p, m: [[g, 0], [0, 1]] });
    }
    gens
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ActionMatrix {
    p: u32,
    m: [[u32; 4]; 4],
}

impl ActionMatrix {
    pub fn identity(p: u32) -> Self {
        let mut m = [[0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        Self { p, m }
    }

    pub fn from_rows(p: u32, m: [[u32; 4]; 4]) -> Self {
        Self { p, m: m.map(|r| r.map(|v| v % p)) }
    }

    pub fn rows(&self) -> [[u32; 4]; 4] {
        self.m
    }

    /// `v M`.
    pub fn apply(&self, v: [u32; 4]) -> [u32; 4] {
        let mut out = [0u64; 4];
        for (i, &vi) in v.iter().enumerate() {
            for (j, o) in out.iter_mut().enumerate() {
                *o += vi as u64 * self.m[i][j] as u64;
            }
        }
        out.map(|o| (o % self.p as u64) as u32)
    }

    pub fn mul(&self, other: &ActionMatrix) -> ActionMatrix {
        ActionMatrix { p: self.p, m: self.m.map(|row| other.apply(row)) }
    }

    /// The block sending `x^p, y^p` to the associator coordinates.
    pub fn v_to_w_block(&self) -> [[u32; 2]; 2] {
        [[self.m[0][2], self.m[0][3]], [self.m[1][2], self.m[1][3]]]
    }

    pub fn is_invertible(&self) -> bool {
        crate::classify::linalg::rank(self.p, self.m.iter().map(|r| r.to_vec()).collect()) == 4
    }
}

/// The action of `rho` on the center:
///
/// - `x^p -> a1 x^p + a2 y^p` (plus `a1^2 a2 (x,x,y) - a1 a2^2 (x,y,y)` when `p = 3`),
/// - `y^p -> b1 x^p + b2 y^p` (plus the same correction in `b` when `p = 3`),
/// - `(x,x,y) -> det * (a1 (x,x,y) + a2 (x,y,y))`,
/// - `(x,y,y) -> det * (b1 (x,x,y) + b2 (x,y,y))`.
pub fn action_matrix(rho: &Mat2) -> ActionMatrix {
    let p = rho.p as i64;
    let [[a1, a2], [b1, b2]] = rho.m.map(|r| r.map(i64::from));
    let d = rho.det() as i64;
    let (ca, cb) = if p == 3 {
        ((a1 * a1 * a2, -a1 * a2 * a2), (b1 * b1 * b2, -b1 * b2 * b2))
    } else {
        ((0, 0), (0, 0))
    };
    let r = |v: i64| v.rem_euclid(p) as u32;
    ActionMatrix {
        p: rho.p,
        m: [
            [r(a1), r(a2), r(ca.0), r(ca.1)],
            [r(b1), r(b2), r(cb.0), r(cb.1)],
            [0, 0, r(a1 * d), r(a2 * d)],
            [0, 0, r(b1 * d), r(b2 * d)],
        ],
    }
}
