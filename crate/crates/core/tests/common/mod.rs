//! Property suites shared by the integration tests and the acceptance run.
//! Each returns how many instances were checked and how many failed.

#![allow(dead_code)]

use caloop::free::{central_extension, fp_cocycle, free_mul, FpElement, FpLoop, FreeElement};
use caloop::loops::CayleyLoop;
use num_bigint::BigInt;
use num_traits::Euclid;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    pub violations: u64,
}

impl Tally {
    pub fn add(self, other: Tally) -> Tally {
        Tally { checked: self.checked + other.checked, violations: self.violations + other.violations }
    }

    fn of(results: impl IntoIterator<Item = bool>) -> Tally {
        results.into_iter().fold(Tally::default(), |t, ok| Tally { checked: t.checked + 1, violations: t.violations + !ok as u64 })
    }
}

/// Loop arithmetic where every derived operation comes from `mul` and `ldiv`.
pub trait Arith: Sync {
    type E: Copy + Eq + Send;
    fn mul(&self, a: Self::E, b: Self::E) -> Self::E;
    fn ldiv(&self, a: Self::E, b: Self::E) -> Self::E;
    fn one(&self) -> Self::E;

    fn inv(&self, a: Self::E) -> Self::E {
        self.ldiv(a, self.one())
    }

    /// `(a(bc)) \ ((ab)c)`.
    fn assoc(&self, a: Self::E, b: Self::E, c: Self::E) -> Self::E {
        self.ldiv(self.mul(a, self.mul(b, c)), self.mul(self.mul(a, b), c))
    }

    fn pow(&self, a: Self::E, k: u64) -> Self::E {
        (0..k).fold(self.one(), |acc, _| self.mul(a, acc))
    }

    fn prod(&self, xs: &[Self::E]) -> Self::E {
        xs.iter().fold(self.one(), |acc, &x| self.mul(acc, x))
    }
}

impl Arith for CayleyLoop {
    type E = u32;
    fn mul(&self, a: u32, b: u32) -> u32 {
        CayleyLoop::mul(self, a, b)
    }
    fn ldiv(&self, a: u32, b: u32) -> u32 {
        CayleyLoop::ldiv(self, a, b)
    }
    fn one(&self) -> u32 {
        0
    }
}

impl Arith for FpLoop {
    type E = FpElement;
    fn mul(&self, a: FpElement, b: FpElement) -> FpElement {
        FpLoop::mul(self, &a, &b)
    }
    fn ldiv(&self, a: FpElement, b: FpElement) -> FpElement {
        FpLoop::ldiv(self, &a, &b)
    }
    fn one(&self) -> FpElement {
        FpElement::IDENTITY
    }
}

pub fn random_fp(rng: &mut ChaCha8Rng, p: u32) -> FpElement {
    FpElement(std::array::from_fn(|_| rng.gen_range(0..p)))
}

/// `(a,b,a) = 1`, `(a,b,c) = (c,b,a)^-1`, `(a,b,c)(b,c,a)(c,a,b) = 1`.
pub fn class2_identities<A: Arith>(q: &A, a: A::E, b: A::E, c: A::E) -> [bool; 3] {
    [
        q.assoc(a, b, a) == q.one(),
        q.assoc(a, b, c) == q.inv(q.assoc(c, b, a)),
        q.prod(&[q.assoc(a, b, c), q.assoc(b, c, a), q.assoc(c, a, b)]) == q.one(),
    ]
}

/// The three linearity identities and the rearrangement identity
/// `(ab)(cd) = (ac)(bd)(ac,b,d)(b,a,c)(d,c,ab)`.
pub fn aclass2_identities<A: Arith>(q: &A, a: A::E, b: A::E, c: A::E, d: A::E) -> [bool; 4] {
    let ab = q.mul(a, b);
    let ac = q.mul(a, c);
    [
        q.assoc(ab, c, d) == q.mul(q.assoc(a, c, d), q.assoc(b, c, d)),
        q.assoc(a, b, q.mul(c, d)) == q.mul(q.assoc(a, b, c), q.assoc(a, b, d)),
        q.assoc(a, q.mul(b, c), d)
            == q.prod(&[q.assoc(a, d, b), q.assoc(a, d, c), q.assoc(b, a, d), q.assoc(c, a, d)]),
        q.mul(ab, q.mul(c, d))
            == q.prod(&[q.mul(ac, q.mul(b, d)), q.assoc(ac, b, d), q.assoc(b, a, c), q.assoc(d, c, ab)]),
    ]
}

/// `(a^i1 b^i2, a^j1 b^j2, a^k1 b^k2) = (a,a,b)^(j1 D) (a,b,b)^(j2 D)` with
/// `D = i1 k2 - i2 k1`, exponents taken modulo `modulus`.
pub fn aclass2_closed_form<A: Arith>(q: &A, a: A::E, b: A::E, e: [u64; 6], modulus: u64) -> bool {
    let [i1, i2, j1, j2, k1, k2] = e;
    let word = |x: u64, y: u64| q.mul(q.pow(a, x), q.pow(b, y));
    let lhs = q.assoc(word(i1, i2), word(j1, j2), word(k1, k2));
    let d = (i1 as i64 * k2 as i64 - i2 as i64 * k1 as i64).rem_euclid(modulus as i64) as u64;
    let rhs = q.mul(q.pow(q.assoc(a, a, b), j1 * d % modulus), q.pow(q.assoc(a, b, b), j2 * d % modulus));
    lhs == rhs
}

fn sampled<F>(samples: u64, seed: u64, f: F) -> Tally
where
    F: Fn(&mut ChaCha8Rng) -> Tally + Sync,
{
    const CHUNK: u64 = 1 << 12;
    (0..samples.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            (0..CHUNK.min(samples - c * CHUNK)).map(|_| f(&mut rng)).fold(Tally::default(), Tally::add)
        })
        .reduce(Tally::default, Tally::add)
}

/// The Class2 and AClass2 suites on `F_2`, over every tuple of its Cayley table.
pub fn associator_suite_exhaustive_p2() -> Tally {
    let t = FpLoop::new(2).unwrap().cayley().unwrap();
    let n = t.order() as u32;
    let class2: Tally = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut t_ = Tally::default();
            for b in 0..n {
                for c in 0..n {
                    t_ = t_.add(Tally::of(class2_identities(&t, a, b, c)));
                }
            }
            t_
        })
        .reduce(Tally::default, Tally::add);
    let aclass2: Tally = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut t_ = Tally::default();
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        t_ = t_.add(Tally::of(aclass2_identities(&t, a, b, c, d)));
                    }
                }
            }
            t_
        })
        .reduce(Tally::default, Tally::add);
    // Exponents range over Z_{p^2} = Z_4, where every element's order divides.
    let closed: Tally = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut t_ = Tally::default();
            for b in 0..n {
                for e in 0..4u64.pow(6) {
                    let ex: [u64; 6] = std::array::from_fn(|k| (e >> (2 * k)) & 3);
                    t_ = t_.add(Tally::of([aclass2_closed_form(&t, a, b, ex, 4)]));
                }
            }
            t_
        })
        .reduce(Tally::default, Tally::add);
    class2.add(aclass2).add(closed)
}

/// The same suites on `F_p`, evaluated on random tuples.
pub fn associator_suite_sampled(p: u32, samples: u64, seed: u64) -> Tally {
    let f = FpLoop::new(p).unwrap();
    let m = (p * p) as u64;
    sampled(samples, seed, |rng| {
        let [a, b, c, d] = std::array::from_fn(|_| random_fp(rng, p));
        let ex: [u64; 6] = std::array::from_fn(|_| rng.gen_range(0..m));
        Tally::of(
            class2_identities(&f, a, b, c)
                .into_iter()
                .chain(aclass2_identities(&f, a, b, c, d))
                .chain([aclass2_closed_form(&f, a, b, ex, m)]),
        )
    })
}

/// Identity (A) on `F_2`: every `L_{x,y}` is a homomorphism, all 64^4 quadruples.
pub fn identity_a_exhaustive_p2() -> Tally {
    let t = FpLoop::new(2).unwrap().cayley().unwrap();
    let n = t.order() as u32;
    (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (x, y) = (k / n, k % n);
            let yx = t.mul(y, x);
            let l = |z: u32| t.ldiv(yx, t.mul(y, t.mul(x, z)));
            let mut tally = Tally::default();
            for a in 0..n {
                for b in 0..n {
                    tally = tally.add(Tally::of([l(t.mul(a, b)) == t.mul(l(a), l(b))]));
                }
            }
            tally
        })
        .reduce(Tally::default, Tally::add)
}

/// Identity (A) on random quadruples of `F_p`, with closed-form arithmetic.
pub fn identity_a_sampled(p: u32, samples: u64, seed: u64) -> Tally {
    let f = FpLoop::new(p).unwrap();
    sampled(samples, seed, |rng| {
        let [x, y, a, b] = std::array::from_fn(|_| random_fp(rng, p));
        let yx = f.mul(&y, &x);
        let l = |z: &FpElement| f.ldiv(&yx, &f.mul(&y, &f.mul(&x, z)));
        Tally::of([l(&f.mul(&a, &b)) == f.mul(&l(&a), &l(&b))])
    })
}

/// Closed-form powers against iterated products, all `k <= p^2`.
pub fn pow_vs_iterated(p: u32, elements: impl Iterator<Item = FpElement>) -> Tally {
    let f = FpLoop::new(p).unwrap();
    let m = (p * p) as u64;
    let elements: Vec<FpElement> = elements.collect();
    elements
        .par_iter()
        .map(|u| {
            let mut acc = FpElement::IDENTITY;
            let mut t = Tally::of([f.pow(u, 0) == acc]);
            for k in 1..=m {
                acc = f.mul(u, &acc);
                t = t.add(Tally::of([f.pow(u, k) == acc]));
            }
            t
        })
        .reduce(Tally::default, Tally::add)
}

pub fn pow_exhaustive(p: u32) -> Tally {
    let f = FpLoop::new(p).unwrap();
    pow_vs_iterated(p, f.elements())
}

pub fn pow_sampled(p: u32, samples: u64, seed: u64) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elems: Vec<FpElement> = (0..samples).map(|_| random_fp(&mut rng, p)).collect();
    pow_vs_iterated(p, elems.into_iter())
}

/// Closed-form associator against `(u(vw)) \ ((uv)w)`.
pub fn associator_closed_vs_definition_exhaustive(p: u32) -> Tally {
    let f = FpLoop::new(p).unwrap();
    let elems: Vec<FpElement> = f.elements().collect();
    elems
        .par_iter()
        .map(|u| {
            let mut t = Tally::default();
            for v in &elems {
                for w in &elems {
                    t = t.add(Tally::of([f.associator(u, v, w) == f.associator_by_definition(u, v, w)]));
                }
            }
            t
        })
        .reduce(Tally::default, Tally::add)
}

pub fn associator_closed_vs_definition_sampled(p: u32, samples: u64, seed: u64) -> Tally {
    let f = FpLoop::new(p).unwrap();
    sampled(samples, seed, |rng| {
        let [u, v, w] = std::array::from_fn(|_| random_fp(rng, p));
        Tally::of([f.associator(&u, &v, &w) == f.associator_by_definition(&u, &v, &w)])
    })
}

/// The central extension by the `F_p` cocycle, compared cell by cell with
/// the `F_p` table. Both index `(l, z)` as `l + p^2 z`.
pub fn extension_matches_table(p: u32) -> Tally {
    let ext = central_extension(fp_cocycle(p)).unwrap();
    let table = FpLoop::new(p).unwrap().cayley().unwrap();
    Tally::of(ext.loop_().table().iter().zip(table.table()).map(|(a, b)| a == b))
        .add(Tally::of([ext.loop_().order() == table.order()]))
}

/// The quotient map `F -> F_p`: `a1, a2` split into base-`p` digits, `a3, a4`
/// reduced mod `p`.
pub fn project(p: u32, u: &FreeElement) -> FpElement {
    let big_p = BigInt::from(p);
    let p2 = &big_p * &big_p;
    let digit = |v: &BigInt| -> u32 { v.try_into().unwrap() };
    let [a1, a2, a3, a4] = &u.0;
    let (r1, r2) = (a1.rem_euclid(&p2), a2.rem_euclid(&p2));
    FpElement([
        digit(&(&r1 % &big_p)),
        digit(&(&r2 % &big_p)),
        digit(&(&r1 / &big_p)),
        digit(&(&r2 / &big_p)),
        digit(&a3.rem_euclid(&big_p)),
        digit(&a4.rem_euclid(&big_p)),
    ])
}

pub fn projection_is_homomorphism(p: u32, samples: u64, seed: u64, range: i64) -> Tally {
    let f = FpLoop::new(p).unwrap();
    sampled(samples, seed, |rng| {
        let mut draw = || FreeElement::new(std::array::from_fn(|_| rng.gen_range(-range..=range)));
        let (u, v) = (draw(), draw());
        Tally::of([project(p, &free_mul(&u, &v)) == f.mul(&project(p, &u), &project(p, &v))])
    })
}
