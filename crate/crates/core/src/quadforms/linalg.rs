//! Dense linear algebra over F_p on small integer matrices.

use alloc::vec::Vec;

/// Rank of a matrix over F_p, destroying the input.
pub fn rank_mod_p(rows: &mut [Vec<u32>], p: u32) -> usize {
    let p64 = p as u64;
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = crate::arith::inv_mod_p(rows[rank][col], p) as u64;
        for c in col..ncols {
            rows[rank][c] = (rows[rank][c] as u64 * inv % p64) as u32;
        }
        for r in 0..nrows {
            if r == rank || rows[r][col] == 0 {
                continue;
            }
            let factor = rows[r][col] as u64;
            for c in col..ncols {
                let sub = factor * rows[rank][c] as u64 % p64;
                rows[r][c] = ((rows[r][c] as u64 + p64 - sub) % p64) as u32;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}
