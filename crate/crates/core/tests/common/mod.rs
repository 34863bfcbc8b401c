//! Oracles shared by the integration tests, written independently of the library.
#![allow(dead_code)]

use cartan_sheaf::GradedDims;

/// `1 + q + ... + q^{k-1}`.
fn q_integer(k: usize) -> Vec<i128> {
    vec![1; k.max(1)]
}

fn mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn q_factorial(n: usize) -> Vec<i128> {
    (1..=n).fold(vec![1], |acc, k| mul(&acc, &q_integer(k)))
}

/// Exact division of polynomials with leading coefficient 1 in the divisor.
fn div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dl = den.len();
    assert_eq!(den[dl - 1], 1);
    let mut quot = vec![0; rem.len() + 1 - dl];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dl - 1];
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "division is not exact");
    quot
}

/// `[N]_q! / ∏ [b_i]_q!` with `q = t²`, as graded dimensions.
pub fn q_multinomial(blocks: &[usize]) -> GradedDims {
    let n: usize = blocks.iter().sum();
    let den = blocks.iter().fold(vec![1], |acc, &b| mul(&acc, &q_factorial(b)));
    let p = div_exact(&q_factorial(n), &den);
    GradedDims::from_pairs(p.iter().enumerate().filter(|(_, c)| **c != 0).map(|(k, c)| (2 * k as i64, *c as u64)))
}

/// Block sizes of the flag type with jumps at the elements of `indices` (a subset of
/// `1..N-1`).
pub fn block_sizes(n: usize, indices: &[usize]) -> Vec<usize> {
    let mut cuts = vec![0];
    cuts.extend_from_slice(indices);
    cuts.push(n);
    cuts.windows(2).map(|w| w[1] - w[0]).collect()
}

#[test]
fn oracle_self_check() {
    assert_eq!(q_multinomial(&[1, 1]), GradedDims::from_pairs([(0, 1), (2, 1)]));
    assert_eq!(q_multinomial(&[2, 2]).total(), 6);
    assert_eq!(block_sizes(4, &[1, 3]), vec![1, 2, 1]);
}
