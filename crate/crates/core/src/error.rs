use std::fmt;

use crate::loops::InnerMap;

/// A row or column of a multiplication table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row(usize),
    Column(usize),
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {i}"),
            Line::Column(j) => write!(f, "column {j}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("empty table")]
    EmptyTable,

    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: u64, order: usize },

    #[error("not a Latin square: {line} repeats {value}")]
    NotLatinSquare { line: Line, value: u32 },

    #[error("index 0 is not an identity: {line} differs at position {position}")]
    NotIdentity { line: Line, position: usize },

    #[error("order cap exceeded: order {order} > cap {cap}")]
    OrderCapExceeded { order: u64, cap: usize },

    #[error("not commutative: {a}*{b} != {b}*{a}")]
    NotCommutative { a: u32, b: u32 },

    #[error("not a subloop: {a}*{b} = {product} is missing")]
    NotSubloop { a: u32, b: u32, product: u32 },

    #[error("subloop not normal: {map} sends {element} to {image}")]
    NotNormal { map: InnerMap, element: u32, image: u32 },

    #[error("cocycle not normalized: theta({a}, {b}) = {value} != 0")]
    CocycleNotNormalized { a: u32, b: u32, value: u32 },

    #[error("decomposition mismatch: word evaluates to {got}, expected {expected}")]
    DecompositionMismatch { expected: String, got: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {p} exceeds cap {cap}")]
    PrimeCapExceeded { p: u32, cap: u32 },

    #[error("O5 undefined for p=2")]
    O5Undefined,

    #[error("{0}")]
    Degenerate(String),

    #[error("unlabeled orbit found: orbit of {0} matches no named representative")]
    UnlabeledOrbit(String),

    #[error("orbit labels {0} and {1} fall into the same orbit")]
    MergedLabels(String, String),

    #[error("target outside variety: {0}")]
    OutsideVariety(String),

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("budget exceeded after {0} nodes")]
    BudgetExceeded(u64),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
