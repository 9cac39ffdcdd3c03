use std::fmt::Write as _;

use crate::error::{Error, Line, Result};

/// Largest loop order accepted by default.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Which division to take in [`CayleyLoop::divide`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `a\b`, the unique `x` with `a*x = b`.
    Left,
    /// `b/a`, the unique `y` with `y*a = b`.
    Right,
}

/// A finite loop given by its multiplication table over the indices
/// `0..n`, with the identity pinned at index 0.
///
/// Division tables are computed once on construction, so `\` and `/` are
/// single lookups like the product.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyLoop {
    n: usize,
    table: Vec<u32>,
    ldiv: Vec<u32>,
    rdiv: Vec<u32>,
}

impl std::fmt::Debug for CayleyLoop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CayleyLoop").field("order", &self.n).finish_non_exhaustive()
    }
}

impl CayleyLoop {
    /// Validates a square table of rows and builds the loop.
    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare { row: i, len: row.len(), expected: n });
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, flat)
    }

    /// Builds a loop from a row-major table of length `n*n`.
    pub fn from_flat(n: usize, table: Vec<u32>) -> Result<Self> {
        Self::from_flat_with_cap(n, table, DEFAULT_ORDER_CAP)
    }

    pub fn from_flat_with_cap(n: usize, table: Vec<u32>, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if n > cap {
            return Err(Error::OrderCapExceeded { order: n as u64, cap });
        }
        assert_eq!(table.len(), n * n, "flat table length must be n*n");
        for (k, &v) in table.iter().enumerate() {
            if v as usize >= n {
                return Err(Error::EntryOutOfRange {
                    row: k / n,
                    col: k % n,
                    value: v as u64,
                    order: n,
                });
            }
        }

        const UNSET: u32 = u32::MAX;
        let mut ldiv = vec![UNSET; n * n];
        let mut rdiv = vec![UNSET; n * n];
        for a in 0..n {
            for x in 0..n {
                let b = table[a * n + x] as usize;
                // a*x = b  =>  a\b = x and b/x = a
                if ldiv[a * n + b] != UNSET {
                    return Err(Error::NotLatinSquare { line: Line::Row(a), value: b as u32 });
                }
                ldiv[a * n + b] = x as u32;
                if rdiv[b * n + x] != UNSET {
                    return Err(Error::NotLatinSquare { line: Line::Column(x), value: b as u32 });
                }
                rdiv[b * n + x] = a as u32;
            }
        }

        for j in 0..n {
            if table[j] as usize != j {
                return Err(Error::NotIdentity { line: Line::Row(0), position: j });
            }
            if table[j * n] as usize != j {
                return Err(Error::NotIdentity { line: Line::Column(0), position: j });
            }
        }

        Ok(Self { n, table, ldiv, rdiv })
    }

    /// Builds a loop from a product function on `0..n`.
    pub fn from_fn(n: usize, mut mul: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(mul(a, b) as u32);
            }
        }
        Self::from_flat(n, table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n + b as usize]
    }

    /// `a\b`.
    #[inline]
    pub fn ldiv(&self, a: u32, b: u32) -> u32 {
        self.ldiv[a as usize * self.n + b as usize]
    }

    /// `b/a`.
    #[inline]
    pub fn rdiv(&self, b: u32, a: u32) -> u32 {
        self.rdiv[b as usize * self.n + a as usize]
    }

    pub fn divide(&self, a: u32, b: u32, side: Side) -> u32 {
        match side {
            Side::Left => self.ldiv(a, b),
            Side::Right => self.rdiv(b, a),
        }
    }

    pub fn row(&self, a: u32) -> &[u32] {
        let start = a as usize * self.n;
        &self.table[start..start + self.n]
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.n as u32
    }

    /// First pair with `ab != ba`, if any.
    pub fn commutativity_witness(&self) -> Option<(u32, u32)> {
        for a in self.elements() {
            for b in a + 1..self.n as u32 {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    pub fn is_associative(&self) -> bool {
        self.elements().all(|a| {
            self.elements().all(|b| {
                let ab = self.mul(a, b);
                self.elements().all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    /// Left-bracketed power: `x^0 = 1`, `x^(k+1) = x * x^k`.
    pub fn pow(&self, x: u32, k: u64) -> u32 {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(x, acc);
        }
        acc
    }

    /// Relabels the loop by a bijection `perm` fixing 0: the new table
    /// satisfies `perm[a]*perm[b] = perm[a*b]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        let n = self.n;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] as usize * n + perm[b] as usize] = perm[self.table[a * n + b] as usize];
            }
        }
        Self::from_flat(n, table)
    }

    /// Renders the table in the plain text format read by [`CayleyLoop::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.n * self.n * 3 + 16);
        writeln!(out, "order {}", self.n).unwrap();
        for a in 0..self.n {
            let row = &self.table[a * self.n..(a + 1) * self.n];
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    out.push(' ');
                }
                write!(out, "{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text format: a header line `order n`, then `n` rows of `n`
    /// space-separated indices. Lines starting with `#` and blank lines are
    /// skipped. Line numbers in errors are 1-based.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
        let n: usize = header
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse { line: hline, msg: format!("expected `order n`, found `{header}`") })?;
        if n == 0 {
            return Err(Error::Parse { line: hline, msg: "order must be positive".into() });
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::OrderCapExceeded { order: n as u64, cap: DEFAULT_ORDER_CAP });
        }

        let mut table = Vec::with_capacity(n * n);
        let mut last_line = hline;
        for row in 0..n {
            let (lno, line) = lines.next().ok_or_else(|| Error::Parse {
                line: last_line + 1,
                msg: format!("expected {n} rows, found {row}"),
            })?;
            last_line = lno;
            let before = table.len();
            for tok in line.split_whitespace() {
                let v: u64 = tok
                    .parse()
                    .map_err(|_| Error::Parse { line: lno, msg: format!("invalid entry `{tok}`") })?;
                if v >= n as u64 {
                    return Err(Error::Parse {
                        line: lno,
                        msg: format!("entry {v} out of range for order {n}"),
                    });
                }
                table.push(v as u32);
            }
            let got = table.len() - before;
            if got != n {
                return Err(Error::Parse { line: lno, msg: format!("expected {n} entries, found {got}") });
            }
        }
        if let Some((lno, _)) = lines.next() {
            return Err(Error::Parse { line: lno, msg: "trailing content after table".into() });
        }
        Self::from_flat(n, table)
    }
}
