//! Row reduction over `Z_p`.

use crate::primes::inv_mod;

/// Reduced row-echelon form; zero rows are dropped.
pub fn rref(p: u32, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let cols = rows.first().map_or(0, Vec::len);
    let pp = p as u64;
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] % p != 0) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = inv_mod(rows[r][c] % p, p) as u64;
        for v in rows[r].iter_mut() {
            *v = ((*v as u64 * inv) % pp) as u32;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let f = rows[i][c] as u64;
            for j in 0..cols {
                let sub = f * rows[r][j] as u64 % pp;
                rows[i][j] = ((rows[i][j] as u64 + pp - sub) % pp) as u32;
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

pub fn rank(p: u32, rows: Vec<Vec<u32>>) -> usize {
    rref(p, rows).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_canonical_form() {
        let rows = vec![vec![0, 2, 4], vec![1, 1, 1], vec![1, 3, 0]];
        // det = 0*(0-3) - 2*(0-1) + 4*(3-1) = 10 = 0 mod 5
        assert_eq!(rank(5, rows.clone()), 2);
        let r = rref(5, rows);
        assert_eq!(r, vec![vec![1, 0, 4], vec![0, 1, 2]]);
    }

    #[test]
    fn row_order_and_scaling_do_not_matter() {
        let a = rref(7, vec![vec![3, 1, 0, 2], vec![0, 0, 5, 1]]);
        let b = rref(7, vec![vec![0, 0, 3, 2], vec![6, 2, 0, 4]]);
        assert_eq!(a, b);
    }
}
