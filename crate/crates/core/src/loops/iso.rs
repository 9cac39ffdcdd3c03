//! Isomorphism search between Cayley loops.
//!
//! The search maps a generating sequence of the first loop one element at a
//! time. Each assignment is propagated through products of everything mapped
//! so far, so a conflict prunes the branch early and a full assignment of
//! the generators fixes the whole bijection.

use super::profile::{element_order, structure_profile};
use super::subloop::{associator_subloop, center, Subloop};
use super::CayleyLoop;
use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoOutcome {
    /// `map[a]` is the image of `a`; the map is an isomorphism.
    Isomorphic(Vec<u32>),
    /// No isomorphism exists.
    NotIsomorphic(NonIsoReason),
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonIsoReason {
    /// A structure-profile field differs.
    Invariant(&'static str),
    /// The backtracking search ran to completion.
    SearchExhausted { nodes: u64 },
}

#[derive(Debug, Clone, Copy)]
pub struct IsoOptions {
    /// Compare structure profiles before searching.
    pub use_invariants: bool,
    pub node_budget: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        Self { use_invariants: true, node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// Per-element signature `(order, in center, in associator subloop)`.
fn signatures(q: &CayleyLoop) -> Vec<(u32, bool, bool)> {
    let z = center(q).mask();
    let a = associator_subloop(q).mask();
    q.elements().map(|x| (element_order(q, x), z[x as usize], a[x as usize])).collect()
}

pub fn is_isomorphic(q1: &CayleyLoop, q2: &CayleyLoop) -> Result<IsoOutcome> {
    is_isomorphic_with(q1, q2, IsoOptions::default())
}

pub fn is_isomorphic_with(q1: &CayleyLoop, q2: &CayleyLoop, opts: IsoOptions) -> Result<IsoOutcome> {
    if q1.order() != q2.order() {
        return Ok(IsoOutcome::NotIsomorphic(NonIsoReason::Invariant("order")));
    }
    if opts.use_invariants {
        let (a, b) = (structure_profile(q1), structure_profile(q2));
        let differing = [
            ("order_spectrum", a.order_spectrum != b.order_spectrum),
            ("center_size", a.center_size != b.center_size),
            ("associator_subloop_size", a.associator_subloop_size != b.associator_subloop_size),
            ("nilpotency_class", a.nilpotency_class != b.nilpotency_class),
            ("is_group", a.is_group != b.is_group),
            ("is_commutative", a.is_commutative != b.is_commutative),
            ("is_power_associative", a.is_power_associative != b.is_power_associative),
        ]
        .into_iter()
        .find(|(_, d)| *d);
        if let Some((field, _)) = differing {
            return Ok(IsoOutcome::NotIsomorphic(NonIsoReason::Invariant(field)));
        }
    }
    Search::new(q1, q2, opts.node_budget).run()
}

struct Search<'a> {
    q1: &'a CayleyLoop,
    q2: &'a CayleyLoop,
    sig1: Vec<(u32, bool, bool)>,
    sig2: Vec<(u32, bool, bool)>,
    gens: Vec<u32>,
    map: Vec<u32>,
    used: Vec<bool>,
    /// Domain elements in assignment order, for undo.
    trail: Vec<u32>,
    nodes: u64,
    budget: u64,
}

const UNMAPPED: u32 = u32::MAX;

impl<'a> Search<'a> {
    fn new(q1: &'a CayleyLoop, q2: &'a CayleyLoop, budget: u64) -> Self {
        let sig1 = signatures(q1);
        let sig2 = signatures(q2);
        let n = q1.order();
        Self {
            q1,
            q2,
            gens: Vec::new(),
            map: vec![UNMAPPED; n],
            used: vec![false; n],
            trail: Vec::new(),
            sig1,
            sig2,
            nodes: 0,
            budget,
        }
    }

    /// Generators of `q1`, rarest signature class first.
    fn choose_generators(&mut self) {
        let n = self.q1.order();
        let class_size = |s: &(u32, bool, bool)| self.sig2.iter().filter(|t| *t == s).count();
        let mut order: Vec<u32> = (1..n as u32).collect();
        order.sort_by_key(|&x| (class_size(&self.sig1[x as usize]), x));
        let mut span = Subloop::trivial(self.q1);
        for x in order {
            if span.len() == n {
                break;
            }
            if !span.contains(x) {
                self.gens.push(x);
                span = Subloop::generated_by(self.q1, &self.gens);
            }
        }
    }

    fn run(mut self) -> Result<IsoOutcome> {
        let mut ms1 = self.sig1.clone();
        let mut ms2 = self.sig2.clone();
        ms1.sort_unstable();
        ms2.sort_unstable();
        if ms1 != ms2 {
            return Ok(IsoOutcome::NotIsomorphic(NonIsoReason::SearchExhausted { nodes: 0 }));
        }
        self.choose_generators();
        if !self.assign(0, 0) {
            return Ok(IsoOutcome::NotIsomorphic(NonIsoReason::SearchExhausted { nodes: 0 }));
        }
        if self.search(0)? {
            debug_assert!(self.verify());
            return Ok(IsoOutcome::Isomorphic(self.map));
        }
        Ok(IsoOutcome::NotIsomorphic(NonIsoReason::SearchExhausted { nodes: self.nodes }))
    }

    fn search(&mut self, level: usize) -> Result<bool> {
        if level == self.gens.len() {
            return Ok(self.trail.len() == self.q1.order());
        }
        let g = self.gens[level];
        if self.map[g as usize] != UNMAPPED {
            return self.search(level + 1);
        }
        for cand in self.q2.elements() {
            if self.used[cand as usize] || self.sig2[cand as usize] != self.sig1[g as usize] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.nodes));
            }
            let mark = self.trail.len();
            if self.assign(g, cand) && self.search(level + 1)? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }

    fn undo(&mut self, mark: usize) {
        for x in self.trail.drain(mark..) {
            self.used[self.map[x as usize] as usize] = false;
            self.map[x as usize] = UNMAPPED;
        }
    }

    fn set(&mut self, x: u32, y: u32) -> bool {
        let cur = self.map[x as usize];
        if cur != UNMAPPED {
            return cur == y;
        }
        if self.used[y as usize] || self.sig1[x as usize] != self.sig2[y as usize] {
            return false;
        }
        self.map[x as usize] = y;
        self.used[y as usize] = true;
        self.trail.push(x);
        true
    }

    /// Maps `x -> y` and closes under products with everything already
    /// mapped. Leaves partial state on failure; the caller undoes it.
    fn assign(&mut self, x: u32, y: u32) -> bool {
        let start = self.trail.len();
        if !self.set(x, y) {
            return false;
        }
        let mut cursor = start;
        while cursor < self.trail.len() {
            let e = self.trail[cursor];
            cursor += 1;
            let fe = self.map[e as usize];
            let mut i = 0;
            while i < self.trail.len() {
                let m = self.trail[i];
                let fm = self.map[m as usize];
                if !self.set(self.q1.mul(e, m), self.q2.mul(fe, fm))
                    || !self.set(self.q1.mul(m, e), self.q2.mul(fm, fe))
                {
                    return false;
                }
                i += 1;
            }
        }
        true
    }

    fn verify(&self) -> bool {
        self.q1.elements().all(|a| {
            self.q1.elements().all(|b| {
                self.map[self.q1.mul(a, b) as usize] == self.q2.mul(self.map[a as usize], self.map[b as usize])
            })
        })
    }
}

/// Checks that `map` is an isomorphism `q1 -> q2`.
pub fn is_isomorphism(q1: &CayleyLoop, q2: &CayleyLoop, map: &[u32]) -> bool {
    if q1.order() != q2.order() || map.len() != q1.order() {
        return false;
    }
    let mut seen = vec![false; q2.order()];
    for &y in map {
        if y as usize >= seen.len() || std::mem::replace(&mut seen[y as usize], true) {
            return false;
        }
    }
    q1.elements().all(|a| q1.elements().all(|b| map[q1.mul(a, b) as usize] == q2.mul(map[a as usize], map[b as usize])))
}
