//! Integer kernels by unimodular column operations.

use crate::error::{Error, Result};

/// A ℤ-basis of {m ∈ ℤⁿ : A·m = 0} for an integer matrix given by rows.
pub fn integer_kernel(rows: &[Vec<i128>], n: usize) -> Result<Vec<Vec<i128>>> {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    // u holds the accumulated column operations; column j of u is u[·][j].
    let mut u: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut p = 0;
    for r in 0..a.len() {
        if p == n {
            break;
        }
        // Euclid across columns p..n until only column p is nonzero in row r.
        loop {
            let nz: Vec<usize> = (p..n).filter(|&j| a[r][j] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let piv = *nz.iter().min_by_key(|&&j| a[r][j].unsigned_abs()).unwrap();
            swap_cols(&mut a, &mut u, p, piv);
            let mut done = true;
            for j in p + 1..n {
                if a[r][j] != 0 {
                    let q = a[r][j].div_euclid(a[r][p]);
                    sub_col(&mut a, &mut u, j, p, q)?;
                    if a[r][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[r][p] != 0 {
            p += 1;
        }
    }
    Ok((p..n).map(|j| (0..n).map(|i| u[i][j]).collect()).collect())
}

fn swap_cols(a: &mut [Vec<i128>], u: &mut [Vec<i128>], i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut().chain(u.iter_mut()) {
        row.swap(i, j);
    }
}

/// column j -= q · column p
fn sub_col(a: &mut [Vec<i128>], u: &mut [Vec<i128>], j: usize, p: usize, q: i128) -> Result<()> {
    for row in a.iter_mut().chain(u.iter_mut()) {
        let d = q.checked_mul(row[p]).ok_or(Error::Overflow)?;
        row[j] = row[j].checked_sub(d).ok_or(Error::Overflow)?;
    }
    Ok(())
}

/// Extended gcd: returns (g, x, y) with a·x + b·y = g ≥ 0.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    ext_gcd(a, b).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dot(a: &[i128], b: &[i128]) -> i128 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn kernel_of_weights() {
        let k = integer_kernel(&[vec![3, 4, 5]], 3).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(dot(v, &[3, 4, 5]), 0);
        }
        // Index one in the full kernel: the 2×2 minors have gcd 1.
        let m = [k[0][0] * k[1][1] - k[0][1] * k[1][0], k[0][0] * k[1][2] - k[0][2] * k[1][0], k[0][1] * k[1][2] - k[0][2] * k[1][1]];
        assert_eq!(m.iter().fold(0, |g, &x| gcd(g, x)), 1);
    }

    #[test]
    fn kernel_rank_one() {
        let k = integer_kernel(&[vec![1, 0, 0], vec![0, 1, 2]], 3).unwrap();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(v == &vec![0, 2, -1] || v == &vec![0, -2, 1]);
    }

    #[test]
    fn ext_gcd_identity() {
        for (a, b) in [(12, 18), (-4, 6), (0, 5), (7, 0), (-3, -9)] {
            let (g, x, y) = ext_gcd(a, b);
            assert_eq!(a * x + b * y, g);
            assert!(g >= 0);
        }
    }
}
