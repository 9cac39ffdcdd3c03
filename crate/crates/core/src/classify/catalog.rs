//! The seven commutative automorphic loops of order `p^3`, with certificates.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::free_hom::FreeTarget;
use super::orbits::{compute_orbits, OrbitLabel, SCHEMA_VERSION};
use super::quotient::FpQuotient;
use super::subspace::{require_small_prime, Subspace3};
use crate::error::{Error, Result};
use crate::free::{FpElement, FpLoop};
use crate::loops::{
    catalog_group_descriptors, exceptional_loop_8, is_automorphic, is_isomorphic, is_isomorphic_with,
    structure_profile, AutomorphicCheck, AutomorphicMethod, CayleyLoop, IsoOptions, IsoOutcome, NonIsoReason,
    StructureProfile, Subloop, DEFAULT_SAMPLES, EXHAUSTIVE_A_LIMIT,
};

/// Default upper bound on `p`; the certificates at `p = 7` already take minutes.
pub const DEFAULT_PRIME_CAP: u32 = 7;

#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    /// Check identity (A) exhaustively on every entry, whatever its order.
    pub exhaustive: bool,
    /// Samples for the identity (A) check on `F_p` when it is not exhaustive.
    pub samples: u64,
    pub seed: u64,
    pub prime_cap: u32,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { exhaustive: false, samples: DEFAULT_SAMPLES, seed: 0, prime_cap: DEFAULT_PRIME_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    Group { descriptor: String },
    Orbit { label: OrbitLabel, subspace: Subspace3 },
    #[serde(rename = "exceptional-8")]
    Exceptional8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NonIsoMethod {
    /// A structure-profile field differs.
    Invariant,
    /// Backtracking over generator images found no isomorphism.
    Backtracking,
    /// No surjection from `F_p` onto one quotient has the other's kernel.
    FreeHomScan,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonIsoWitness {
    pub other: String,
    pub method: NonIsoMethod,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificates {
    pub axioms: bool,
    pub commutative: bool,
    pub automorphic: AutomorphicCheck,
    /// Whether the images of `x` and `y` generate the loop; quotient entries only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_generated: Option<bool>,
    pub noniso_witnesses: Vec<NonIsoWitness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub construction: Construction,
    /// Text table format.
    pub cayley_table: String,
    pub profile: StructureProfile,
    pub certificates: Certificates,
    #[serde(skip)]
    pub table: CayleyLoop,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitSummary {
    pub label: OrbitLabel,
    pub size: usize,
    pub representative: Subspace3,
    pub named_representative: Subspace3,
}

/// `F_p / N1` for `N1` in `O1`, which is a group.
#[derive(Debug, Clone, Serialize)]
pub struct GroupQuotient {
    pub label: OrbitLabel,
    pub subspace: Subspace3,
    pub associative: bool,
    pub isomorphic_to: String,
    /// `map[a]` is the image of coset `a` in the group.
    pub isomorphism: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FreeLoopCheck {
    pub order: u64,
    /// `"identity_a"` on the Cayley table, or `"identity_a_closed_form"`
    /// evaluated with the coordinate formulas when the table is too large.
    pub method: &'static str,
    pub exhaustive: bool,
    pub checked: u64,
    pub violations: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub p: u32,
    pub orbits: Vec<OrbitSummary>,
    pub total_subspaces: usize,
    pub free_loop: FreeLoopCheck,
    pub group_quotient: GroupQuotient,
    pub entries: Vec<CatalogEntry>,
}

impl ClassificationReport {
    pub fn entry(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn fail(what: impl Into<String>) -> Error {
    Error::CertificationFailed(what.into())
}

/// Identity (A) on `F_p`: exhaustive at `p = 2`, sampled on the table at
/// `p = 3`, and sampled with the closed-form product above that.
fn check_free_loop(p: u32, opts: &ClassifyOptions) -> Result<FreeLoopCheck> {
    let fp = FpLoop::new(p)?;
    if p <= 3 {
        let table = fp.cayley()?;
        let method = if p == 2 || opts.exhaustive {
            AutomorphicMethod::identity_a_exhaustive()
        } else {
            AutomorphicMethod::identity_a_sampled(opts.samples, opts.seed)
        };
        let c = is_automorphic(&table, method)?;
        return Ok(FreeLoopCheck {
            order: fp.order(),
            method: c.method,
            exhaustive: c.exhaustive,
            checked: c.checked,
            violations: c.counterexample.is_some() as u64,
        });
    }
    const CHUNK: u64 = 1 << 12;
    let chunks = opts.samples.div_ceil(CHUNK);
    let violations: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            rng.set_stream(c);
            let count = CHUNK.min(opts.samples - c * CHUNK);
            let mut draw = || FpElement(std::array::from_fn(|_| rng.gen_range(0..p)));
            (0..count)
                .filter(|_| {
                    let (y, x, a, b) = (draw(), draw(), draw(), draw());
                    let yx = fp.mul(&y, &x);
                    let l = |z: &FpElement| fp.ldiv(&yx, &fp.mul(&y, &fp.mul(&x, z)));
                    l(&fp.mul(&a, &b)) != fp.mul(&l(&a), &l(&b))
                })
                .count() as u64
        })
        .sum();
    Ok(FreeLoopCheck {
        order: fp.order(),
        method: "identity_a_closed_form",
        exhaustive: false,
        checked: opts.samples,
        violations,
    })
}

fn automorphic_certificate(q: &CayleyLoop, p: u32, opts: &ClassifyOptions) -> Result<AutomorphicCheck> {
    let method = if opts.exhaustive || q.order() <= EXHAUSTIVE_A_LIMIT {
        AutomorphicMethod::identity_a_exhaustive()
    } else if p >= 5 {
        AutomorphicMethod::Inner
    } else {
        AutomorphicMethod::identity_a_exhaustive()
    };
    is_automorphic(q, method)
}

fn make_entry(
    name: String,
    construction: Construction,
    table: CayleyLoop,
    two_generated: Option<bool>,
    p: u32,
    opts: &ClassifyOptions,
) -> Result<CatalogEntry> {
    let axioms = CayleyLoop::from_flat(table.order(), table.table().to_vec()).is_ok();
    let commutative = table.is_commutative();
    if !axioms || !commutative {
        return Err(fail(format!("{name}: axioms={axioms} commutative={commutative}")));
    }
    let automorphic = automorphic_certificate(&table, p, opts)?;
    if let Some(w) = automorphic.counterexample {
        return Err(fail(format!("{name}: not automorphic, witness {w:?}")));
    }
    if two_generated == Some(false) {
        return Err(fail(format!("{name}: images of x and y do not generate")));
    }
    Ok(CatalogEntry {
        name,
        construction,
        cayley_table: table.to_text(),
        profile: structure_profile(&table),
        certificates: Certificates { axioms, commutative, automorphic, two_generated, noniso_witnesses: Vec::new() },
        table,
    })
}

/// Scans every `(a, b)` in `target` for a surjection `F_p -> target` whose
/// kernel contains `n`; returns the number of pairs scanned.
fn free_hom_scan(p: u32, target: &CayleyLoop, n: &Subspace3) -> Result<std::result::Result<u64, (u32, u32)>> {
    let t = FreeTarget::new(p, target)?;
    let order = target.order() as u32;
    let found = (0..order * order).into_par_iter().find_map_first(|k| {
        let (a, b) = (k / order, k % order);
        let h = t.hom(a, b);
        (h.is_surjective() && h.kernel_contains(n)).then_some((a, b))
    });
    Ok(match found {
        Some(pair) => Err(pair),
        None => Ok(order as u64 * order as u64),
    })
}

fn separate(p: u32, a: &CatalogEntry, b: &CatalogEntry) -> Result<(NonIsoWitness, NonIsoWitness)> {
    let pair = |method, detail: String| {
        (
            NonIsoWitness { other: b.name.clone(), method, detail: detail.clone() },
            NonIsoWitness { other: a.name.clone(), method, detail },
        )
    };
    if p == 3 {
        if let (Construction::Orbit { subspace: na, .. }, Construction::Orbit { subspace: nb, .. }) =
            (&a.construction, &b.construction)
        {
            let forward = free_hom_scan(p, &b.table, na)?;
            let backward = free_hom_scan(p, &a.table, nb)?;
            return match (forward, backward) {
                (Ok(n1), Ok(n2)) => Ok(pair(
                    NonIsoMethod::FreeHomScan,
                    format!(
                        "no surjection onto {} has kernel {na} ({n1} generator pairs); no surjection onto {} has kernel {nb} ({n2} generator pairs)",
                        b.name, a.name
                    ),
                )),
                (Err((x, y)), _) | (_, Err((x, y))) => {
                    Err(fail(format!("{} and {} are isomorphic: generator pair ({x}, {y})", a.name, b.name)))
                }
            };
        }
    }
    let opts = IsoOptions { use_invariants: p != 2, ..Default::default() };
    match is_isomorphic_with(&a.table, &b.table, opts)? {
        IsoOutcome::NotIsomorphic(NonIsoReason::Invariant(field)) => {
            Ok(pair(NonIsoMethod::Invariant, format!("{field} differs")))
        }
        IsoOutcome::NotIsomorphic(NonIsoReason::SearchExhausted { nodes }) => {
            Ok(pair(NonIsoMethod::Backtracking, format!("search exhausted after {nodes} nodes")))
        }
        IsoOutcome::Isomorphic(_) => Err(fail(format!("{} and {} are isomorphic", a.name, b.name))),
    }
}

/// Builds and certifies the seven loops of order `p^3`. Any failed check is
/// an error; no partial catalog is returned.
pub fn classify_p3(p: u32, opts: ClassifyOptions) -> Result<ClassificationReport> {
    require_small_prime(p, opts.prime_cap)?;
    let orbit_report = compute_orbits(p)?;
    let free_loop = check_free_loop(p, &opts)?;
    if free_loop.violations > 0 {
        return Err(fail(format!("identity (A) fails on F_{p}")));
    }

    let groups = catalog_group_descriptors(p);
    let fp = FpLoop::new(p)?;
    let group_quotient = {
        let n1 = orbit_report.orbit(OrbitLabel::O1).expect("O1 is always labeled").named_representative;
        let q1 = FpQuotient::new(&n1)?;
        let target = groups[1].cayley()?;
        let associative = q1.loop_().is_associative();
        match is_isomorphic(q1.loop_(), &target)? {
            IsoOutcome::Isomorphic(map) if associative => GroupQuotient {
                label: OrbitLabel::O1,
                subspace: n1,
                associative,
                isomorphic_to: groups[1].name(),
                isomorphism: map,
            },
            _ => return Err(fail(format!("F_{p}/N1 is not isomorphic to {}", groups[1].name()))),
        }
    };

    let mut entries = Vec::with_capacity(7);
    for g in &groups {
        let construction = Construction::Group { descriptor: g.name() };
        entries.push(make_entry(g.name(), construction, g.cayley()?, None, p, &opts)?);
    }
    for o in orbit_report.orbits.iter().filter(|o| o.label != OrbitLabel::O1) {
        let q = FpQuotient::new(&o.named_representative)?;
        let gens = [q.project(&fp.x()), q.project(&fp.y())];
        let two_generated = Subloop::generated_by(q.loop_(), &gens).len() == q.loop_().order();
        let name = format!("Q{}", o.label.index());
        if q.loop_().is_associative() {
            return Err(fail(format!("{name} is associative")));
        }
        let construction = Construction::Orbit { label: o.label, subspace: o.named_representative };
        entries.push(make_entry(name, construction, q.into_loop(), Some(two_generated), p, &opts)?);
    }
    if p == 2 {
        entries.push(make_entry("exceptional-8".into(), Construction::Exceptional8, exceptional_loop_8(), None, p, &opts)?);
    }
    if entries.len() != 7 {
        return Err(fail(format!("{} entries instead of 7", entries.len())));
    }

    let pairs: Vec<(usize, usize)> = (0..7).flat_map(|i| (i + 1..7).map(move |j| (i, j))).collect();
    for (i, j) in pairs {
        let (wi, wj) = separate(p, &entries[i], &entries[j])?;
        entries[i].certificates.noniso_witnesses.push(wi);
        entries[j].certificates.noniso_witnesses.push(wj);
    }

    Ok(ClassificationReport {
        schema_version: SCHEMA_VERSION,
        p,
        orbits: orbit_report
            .orbits
            .iter()
            .map(|o| OrbitSummary {
                label: o.label,
                size: o.size,
                representative: o.representative,
                named_representative: o.named_representative,
            })
            .collect(),
        total_subspaces: orbit_report.total_subspaces,
        free_loop,
        group_quotient,
        entries,
    })
}
