use num_bigint::BigInt;
use num_integer::Integer;

use super::matrix::IntMatrix;

/// Reduces an integer to {0, 1}.
pub fn mod2(x: &BigInt) -> u8 {
    u8::from(x.is_odd())
}

/// Some `x` over 𝔽₂ with `M·x ≡ b (mod 2)`, or `None` if the system is
/// inconsistent. Free variables are set to zero.
pub fn solve_mod2(m: &IntMatrix, b: &[u8]) -> Option<Vec<u8>> {
    assert_eq!(
        b.len(),
        m.rows(),
        "right-hand side length must equal row count"
    );
    let cols = m.cols();
    let mut rows: Vec<(Vec<u8>, u8)> = (0..m.rows())
        .map(|i| (m.row(i).iter().map(mod2).collect(), b[i] & 1))
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows.len()).find(|&i| rows[i].0[c] == 1) else {
            continue;
        };
        rows.swap(r, k);
        for i in 0..rows.len() {
            if i != r && rows[i].0[c] == 1 {
                let (coeffs, rhs) = rows[r].clone();
                for (x, y) in rows[i].0.iter_mut().zip(&coeffs) {
                    *x ^= y;
                }
                rows[i].1 ^= rhs;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|(_, rhs)| *rhs == 1) {
        return None;
    }
    let mut x = vec![0u8; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i].1;
    }
    Some(x)
}

/// `M·x mod 2`.
pub fn apply_mod2(m: &IntMatrix, x: &[u8]) -> Vec<u8> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .zip(x)
                .fold(0u8, |acc, (a, &xi)| acc ^ (mod2(a) & xi))
        })
        .collect()
}
