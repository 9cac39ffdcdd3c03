//! Orbits of `GL_2(p)` on the 3-dimensional subspaces of `Z(F_p)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::action::{action_matrix, gl2_enumerate, gl2_generators, ActionMatrix};
use super::subspace::{grassmannian3, require_small_prime, Subspace3, MAX_PRIME};
use crate::error::{Error, Result};
use crate::primes::{is_square_mod, smallest_non_residue};

pub const SCHEMA_VERSION: u32 = 1;

/// Above this prime, orbits are grown from generators instead of the full group.
pub const FULL_ENUMERATION_LIMIT: u32 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitLabel {
    O1,
    O2,
    O3,
    O4,
    O5,
}

impl OrbitLabel {
    pub const ALL: [OrbitLabel; 5] = [Self::O1, Self::O2, Self::O3, Self::O4, Self::O5];

    /// Labels that name a nonempty orbit at `p`.
    pub fn for_prime(p: u32) -> &'static [OrbitLabel] {
        if p == 2 { &Self::ALL[..4] } else { &Self::ALL }
    }

    pub fn index(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.index())
    }
}

impl FromStr for OrbitLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let i = s.trim_start_matches(['O', 'Q', 'o', 'q']).parse::<usize>().ok();
        match i {
            Some(i @ 1..=5) => Ok(Self::ALL[i - 1]),
            _ => Err(Error::Parse { line: 1, msg: format!("unknown orbit label `{s}`") }),
        }
    }
}

impl Serialize for OrbitLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

const XP: [u32; 4] = [1, 0, 0, 0];
const YP: [u32; 4] = [0, 1, 0, 0];
const XXY: [u32; 4] = [0, 0, 1, 0];
const XYY: [u32; 4] = [0, 0, 0, 1];

fn comb(p: u32, terms: &[(i64, [u32; 4])]) -> [u32; 4] {
    let mut out = [0i64; 4];
    for (c, v) in terms {
        for k in 0..4 {
            out[k] += c * v[k] as i64;
        }
    }
    out.map(|v| v.rem_euclid(p as i64) as u32)
}

/// The listed representative of an orbit, with `lambda` the smallest
/// quadratic non-residue.
pub fn named_representative(p: u32, label: OrbitLabel) -> Result<Subspace3> {
    let lambda = smallest_non_residue(p).unwrap_or(1);
    named_representative_with(p, label, lambda)
}

/// As [`named_representative`] with an explicit non-residue for `O5`.
pub fn named_representative_with(p: u32, label: OrbitLabel, lambda: u32) -> Result<Subspace3> {
    require_small_prime(p, MAX_PRIME)?;
    use OrbitLabel::*;
    if label == O5 && p == 2 {
        return Err(Error::O5Undefined);
    }
    if label == O5 && p != 3 && is_square_mod(lambda, p) {
        return Err(Error::Degenerate(format!("{lambda} is a square mod {p}")));
    }
    let rows = match (p == 3, label) {
        (_, O1) => [XP, XXY, XYY],
        (_, O2) => [XP, YP, XXY],
        (false, O3) => [XP, comb(p, &[(1, YP), (1, XYY)]), XXY],
        (false, O4) => [YP, comb(p, &[(1, XP), (1, XYY)]), XXY],
        (false, O5) => [YP, comb(p, &[(lambda as i64, XP), (1, XYY)]), XXY],
        (true, O3) => [comb(p, &[(1, XP), (1, XYY)]), YP, XXY],
        (true, O4) => [comb(p, &[(1, XP), (-1, XYY)]), YP, XXY],
        (true, O5) => [comb(p, &[(1, XP), (-1, XYY)]), comb(p, &[(1, YP), (1, XYY)]), XXY],
    };
    Subspace3::from_rows(p, &rows)
}

#[derive(Debug, Clone, Serialize)]
pub struct Orbit {
    pub label: OrbitLabel,
    pub size: usize,
    /// Lexicographically least member.
    pub representative: Subspace3,
    pub named_representative: Subspace3,
    pub members: Vec<Subspace3>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub schema_version: u32,
    pub p: u32,
    pub total_subspaces: usize,
    pub orbits: Vec<Orbit>,
}

impl OrbitReport {
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.size).collect()
    }

    pub fn orbit(&self, label: OrbitLabel) -> Option<&Orbit> {
        self.orbits.iter().find(|o| o.label == label)
    }

    /// Members of each orbit, blocks sorted.
    pub fn partition(&self) -> Vec<Vec<Subspace3>> {
        let mut blocks: Vec<Vec<Subspace3>> = self.orbits.iter().map(|o| o.members.clone()).collect();
        blocks.sort();
        blocks
    }

    pub fn label_of(&self, s: &Subspace3) -> Option<OrbitLabel> {
        self.orbits.iter().find(|o| o.members.binary_search(s).is_ok()).map(|o| o.label)
    }
}

fn orbit_by_group(start: Subspace3, group: &[ActionMatrix]) -> BTreeSet<Subspace3> {
    group.iter().map(|m| start.image(m)).collect()
}

fn orbit_by_generators(start: Subspace3, gens: &[ActionMatrix]) -> BTreeSet<Subspace3> {
    let mut seen = BTreeSet::from([start]);
    let mut frontier = vec![start];
    while let Some(s) = frontier.pop() {
        for g in gens {
            let t = s.image(g);
            if seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    seen
}

/// Unlabeled orbits as sorted member lists, in order of least member.
pub fn raw_orbits(p: u32) -> Result<Vec<Vec<Subspace3>>> {
    let all = grassmannian3(p)?;
    let mats: Vec<ActionMatrix> = if p <= FULL_ENUMERATION_LIMIT {
        gl2_enumerate(p)?.iter().map(action_matrix).collect()
    } else {
        gl2_generators(p).iter().map(action_matrix).collect()
    };
    let mut assigned: HashMap<Subspace3, usize> = HashMap::new();
    let mut out = Vec::new();
    for s in all {
        if assigned.contains_key(&s) {
            continue;
        }
        let orbit = if p <= FULL_ENUMERATION_LIMIT { orbit_by_group(s, &mats) } else { orbit_by_generators(s, &mats) };
        for m in &orbit {
            assigned.insert(*m, out.len());
        }
        out.push(orbit.into_iter().collect());
    }
    Ok(out)
}

pub fn compute_orbits(p: u32) -> Result<OrbitReport> {
    let raw = raw_orbits(p)?;
    let total = raw.iter().map(Vec::len).sum();
    let mut labels: Vec<Option<(OrbitLabel, Subspace3)>> = vec![None; raw.len()];
    for &label in OrbitLabel::for_prime(p) {
        let named = named_representative(p, label)?;
        let i = raw.iter().position(|o| o.binary_search(&named).is_ok()).expect("the orbits cover every subspace");
        if let Some((other, _)) = labels[i] {
            return Err(Error::MergedLabels(other.to_string(), label.to_string()));
        }
        labels[i] = Some((label, named));
    }
    let mut orbits = Vec::with_capacity(raw.len());
    for (members, label) in raw.into_iter().zip(labels) {
        let Some((label, named)) = label else {
            return Err(Error::UnlabeledOrbit(format!(
                "orbit of {} with {} members at p={p}",
                members[0],
                members.len()
            )));
        };
        orbits.push(Orbit { label, size: members.len(), representative: members[0], named_representative: named, members });
    }
    orbits.sort_by_key(|o| o.label);
    Ok(OrbitReport { schema_version: SCHEMA_VERSION, p, total_subspaces: total, orbits })
}
