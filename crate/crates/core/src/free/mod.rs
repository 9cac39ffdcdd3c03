//! Free commutative automorphic loops of nilpotency class two on two
//! generators: the integer model `F` and its finite quotient `F_p`.

mod extension;
mod fp;
mod integer;

pub use extension::{central_extension, CentralExtension, Cocycle};
pub use fp::{bracket, overflow, power_correction, FpElement, FpLoop};
pub use integer::{free_associator, free_associator_by_definition, free_ldiv, free_mul, FreeElement};

use crate::loops::AbelianGroup;

/// The cocycle `(Z_p)^2 x (Z_p)^2 -> (Z_p)^4` whose central extension is
/// `F_p`: `((a1,b1)_p, (a2,b2)_p, -a1 b1 (a2+b2), a2 b2 (a1+b1))`.
pub fn fp_cocycle(p: u32) -> Cocycle {
    let base = AbelianGroup::power(p, 2);
    let fiber = AbelianGroup::power(p, 4);
    let (b, f) = (base.clone(), fiber.clone());
    Cocycle::from_fn(base, fiber, move |u, v| {
        let (a, c) = (b.coords(u), b.coords(v));
        let (a1, a2, b1, b2) = (a[0] as i64, a[1] as i64, c[0] as i64, c[1] as i64);
        f.index_of(&[
            overflow(p, a[0], c[0]) as i64,
            overflow(p, a[1], c[1]) as i64,
            -a1 * b1 * (a2 + b2),
            a2 * b2 * (a1 + b1),
        ])
    })
}

/// The free-loop cocycle `(-a1 b1 (a2+b2), a2 b2 (a1+b1))` read on residues
/// mod `p`, as a cocycle `(Z_p)^2 x (Z_p)^2 -> (Z_p)^2`.
pub fn reduced_free_cocycle(p: u32) -> Cocycle {
    let base = AbelianGroup::power(p, 2);
    let fiber = AbelianGroup::power(p, 2);
    let (b, f) = (base.clone(), fiber.clone());
    Cocycle::from_fn(base, fiber, move |u, v| {
        let (a, c) = (b.coords(u), b.coords(v));
        let (a1, a2, b1, b2) = (a[0] as i64, a[1] as i64, c[0] as i64, c[1] as i64);
        f.index_of(&[-a1 * b1 * (a2 + b2), a2 * b2 * (a1 + b1)])
    })
}
