use rayon::prelude::*;

use super::automorphic::associator;
use super::CayleyLoop;

/// A subloop of some parent loop, as a sorted list of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subloop {
    parent_order: usize,
    members: Vec<u32>,
}

impl Subloop {
    /// Wraps a member list without checking closure.
    pub fn from_members(parent_order: usize, mut members: Vec<u32>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { parent_order, members }
    }

    pub fn trivial(q: &CayleyLoop) -> Self {
        Self { parent_order: q.order(), members: vec![0] }
    }

    pub fn whole(q: &CayleyLoop) -> Self {
        Self { parent_order: q.order(), members: q.elements().collect() }
    }

    /// The subloop generated by `gens`. In a finite loop, closure under
    /// multiplication already gives closure under both divisions.
    pub fn generated_by(q: &CayleyLoop, gens: &[u32]) -> Self {
        let n = q.order();
        let mut inside = vec![false; n];
        let mut members = vec![0u32];
        inside[0] = true;
        let mut frontier = 0;
        for &g in gens {
            if !inside[g as usize] {
                inside[g as usize] = true;
                members.push(g);
            }
        }
        while frontier < members.len() {
            let e = members[frontier];
            frontier += 1;
            let mut i = 0;
            while i < members.len() {
                let m = members[i];
                for prod in [q.mul(e, m), q.mul(m, e)] {
                    if !inside[prod as usize] {
                        inside[prod as usize] = true;
                        members.push(prod);
                    }
                }
                i += 1;
            }
        }
        Self::from_members(n, members)
    }

    /// The smallest normal subloop containing `gens`: the class of 0 in the
    /// smallest congruence identifying every generator with 0.
    pub fn normal_closure(q: &CayleyLoop, gens: &[u32]) -> Self {
        let n = q.order();
        let mut uf = UnionFind::new(n);
        let mut pending: Vec<(u32, u32)> = gens.iter().map(|&g| (0, g)).collect();
        while let Some((a, b)) = pending.pop() {
            if !uf.union(a, b) {
                continue;
            }
            for x in q.elements() {
                pending.push((q.mul(x, a), q.mul(x, b)));
                pending.push((q.mul(a, x), q.mul(b, x)));
            }
        }
        let root = uf.find(0);
        let members = q.elements().filter(|&e| uf.find(e) == root).collect();
        Self::from_members(n, members)
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, e: u32) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.parent_order];
        for &e in &self.members {
            m[e as usize] = true;
        }
        m
    }

    /// First product of members that leaves the set, if any.
    pub fn closure_witness(&self, q: &CayleyLoop) -> Option<(u32, u32, u32)> {
        let mask = self.mask();
        if !mask[0] {
            return Some((0, 0, 0));
        }
        for &a in &self.members {
            for &b in &self.members {
                let c = q.mul(a, b);
                if !mask[c as usize] {
                    return Some((a, b, c));
                }
            }
        }
        None
    }
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n as u32).collect() }
    }

    pub(crate) fn find(&mut self, mut a: u32) -> u32 {
        while self.parent[a as usize] != a {
            let up = self.parent[self.parent[a as usize] as usize];
            self.parent[a as usize] = up;
            a = up;
        }
        a
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSubsets {
    pub center: Subloop,
    pub left_nucleus: Subloop,
    pub middle_nucleus: Subloop,
    pub right_nucleus: Subloop,
    pub nucleus: Subloop,
    pub associator_subloop: Subloop,
}

fn collect<F: Fn(u32) -> bool + Sync>(q: &CayleyLoop, pred: F) -> Subloop {
    let members = q.elements().into_par_iter().filter(|&a| pred(a)).collect();
    Subloop::from_members(q.order(), members)
}

/// `(ax)y = a(xy)` for all x, y.
pub fn left_nucleus(q: &CayleyLoop) -> Subloop {
    collect(q, |a| q.elements().all(|x| q.elements().all(|y| q.mul(q.mul(a, x), y) == q.mul(a, q.mul(x, y)))))
}

/// `(xa)y = x(ay)` for all x, y.
pub fn middle_nucleus(q: &CayleyLoop) -> Subloop {
    collect(q, |a| q.elements().all(|x| q.elements().all(|y| q.mul(q.mul(x, a), y) == q.mul(x, q.mul(a, y)))))
}

/// `(xy)a = x(ya)` for all x, y.
pub fn right_nucleus(q: &CayleyLoop) -> Subloop {
    collect(q, |a| q.elements().all(|x| q.elements().all(|y| q.mul(q.mul(x, y), a) == q.mul(x, q.mul(y, a)))))
}

fn intersect(a: &Subloop, b: &Subloop) -> Subloop {
    Subloop::from_members(a.parent_order, a.members.iter().copied().filter(|&e| b.contains(e)).collect())
}

/// Elements that commute with everything and lie in all three nuclei.
pub fn center(q: &CayleyLoop) -> Subloop {
    collect(q, |a| {
        q.elements().all(|x| q.mul(a, x) == q.mul(x, a))
            && q.elements().all(|x| {
                q.elements().all(|y| {
                    q.mul(q.mul(a, x), y) == q.mul(a, q.mul(x, y))
                        && q.mul(q.mul(x, a), y) == q.mul(x, q.mul(a, y))
                        && q.mul(q.mul(x, y), a) == q.mul(x, q.mul(y, a))
                })
            })
    })
}

/// All distinct associator values.
pub fn associator_values(q: &CayleyLoop) -> Vec<u32> {
    let n = q.order();
    let seen = q
        .elements()
        .into_par_iter()
        .fold(
            || vec![false; n],
            |mut seen, x| {
                for y in q.elements() {
                    for z in q.elements() {
                        seen[associator(q, x, y, z) as usize] = true;
                    }
                }
                seen
            },
        )
        .reduce(
            || vec![false; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(s, t)| *s |= t);
                a
            },
        );
    (0..n as u32).filter(|&e| seen[e as usize]).collect()
}

pub fn associator_subloop(q: &CayleyLoop) -> Subloop {
    Subloop::normal_closure(q, &associator_values(q))
}

pub fn invariant_subsets(q: &CayleyLoop) -> InvariantSubsets {
    let left_nucleus = left_nucleus(q);
    let middle_nucleus = middle_nucleus(q);
    let right_nucleus = right_nucleus(q);
    let nucleus = intersect(&intersect(&left_nucleus, &middle_nucleus), &right_nucleus);
    let center = Subloop::from_members(
        q.order(),
        nucleus
            .members()
            .iter()
            .copied()
            .filter(|&a| q.elements().all(|x| q.mul(a, x) == q.mul(x, a)))
            .collect(),
    );
    InvariantSubsets {
        center,
        left_nucleus,
        middle_nucleus,
        right_nucleus,
        nucleus,
        associator_subloop: associator_subloop(q),
    }
}
