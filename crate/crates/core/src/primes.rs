use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

pub fn require_prime(n: u64) -> Result<()> {
    if is_prime(n) { Ok(()) } else { Err(Error::NotPrime(n)) }
}

/// `a^-1 mod p`, for `a` not divisible by the prime `p`.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let (mut base, mut acc) = ((a % p) as u64, 1u64);
    let p = p as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u32
}

/// Smallest quadratic non-residue mod an odd prime.
pub fn smallest_non_residue(p: u32) -> Option<u32> {
    let squares: Vec<bool> = {
        let mut s = vec![false; p as usize];
        for b in 0..p as u64 {
            s[(b * b % p as u64) as usize] = true;
        }
        s
    };
    (1..p).find(|&a| !squares[a as usize])
}

pub fn is_square_mod(a: u32, p: u32) -> bool {
    (0..p as u64).any(|b| b * b % p as u64 == (a % p) as u64)
}

/// Smallest generator of the multiplicative group mod `p`.
pub fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&g| {
            let mut x = 1u64;
            for k in 1..p - 1 {
                x = x * g as u64 % p as u64;
                if x == 1 && k < p - 1 {
                    return false;
                }
            }
            true
        })
        .expect("primes have primitive roots")
}
