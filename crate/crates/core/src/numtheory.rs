//! Coprimality, modular inverses and perfect-star edge lengths.

use crate::error::{Error, Result};
use crate::path::{is_permutation, step_of, Path};

/// `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_x, mut x) = (1, 0);
    let (mut old_y, mut y) = (0, 1);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_x, x) = (x, old_x - q * x);
        (old_y, y) = (y, old_y - q * y);
    }
    if old_r < 0 {
        (-old_r, -old_x, -old_y)
    } else {
        (old_r, old_x, old_y)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
}

/// Edge lengths `L` with `2 <= L < N/2` and `gcd(L, N) = 1`; one regular star `{N/L}` each.
pub fn valid_perfect_edge_lengths(len: usize) -> Vec<u32> {
    (2..len)
        .take_while(|&l| 2 * l < len)
        .filter(|&l| is_coprime(l as u64, len as u64))
        .map(|l| l as u32)
        .collect()
}

/// The constant-step path from `start`. Fails if `|step|` is outside
/// `[2, N/2)` or the walk revisits a node before covering the circle.
pub fn perfect_path(len: usize, step: i32, start: usize) -> Result<Path> {
    let edge = step.unsigned_abs() as usize;
    if len < 5 || edge < 2 || 2 * edge >= len || start >= len {
        return Err(Error::InvalidEdgeLength { step, len });
    }
    let nodes: Vec<usize> = (0..len as i64)
        .map(|k| (start as i64 + k * i64::from(step)).rem_euclid(len as i64) as usize)
        .collect();
    if !is_permutation(&nodes) {
        return Err(Error::InvalidEdgeLength { step, len });
    }
    Path::new(nodes)
}

/// The inverse of `value` modulo `modulus`, reported as a step in `(-N/2, N/2]`.
pub fn modular_inverse(value: i32, modulus: usize) -> Result<i32> {
    let m = modulus as i64;
    let no_inverse = || Error::NoInverse {
        value: i64::from(value),
        modulus: m,
    };
    if m < 2 {
        return Err(no_inverse());
    }
    let (g, x, _) = extended_gcd(i64::from(value).rem_euclid(m), m);
    if g != 1 {
        return Err(no_inverse());
    }
    let residue = x.rem_euclid(m) as i32;
    Ok(step_of(residue, modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coprimality() {
        assert!(is_coprime(3, 7));
        assert!(!is_coprime(2, 6));
        assert!(is_coprime(3, 10));
        assert!(is_coprime(1, 1));
    }

    #[test]
    fn extended_gcd_identity() {
        for a in 0..40i64 {
            for b in 0..40i64 {
                let (g, x, y) = extended_gcd(a, b);
                assert_eq!(a * x + b * y, g);
                assert_eq!(g as u64, gcd(a as u64, b as u64));
            }
        }
    }

    #[test]
    fn edge_length_sets() {
        assert!(valid_perfect_edge_lengths(6).is_empty());
        assert_eq!(valid_perfect_edge_lengths(5), vec![2]);
        assert_eq!(valid_perfect_edge_lengths(7), vec![2, 3]);
        assert_eq!(valid_perfect_edge_lengths(8), vec![3]);
        assert_eq!(valid_perfect_edge_lengths(9), vec![2, 4]);
        assert_eq!(valid_perfect_edge_lengths(10), vec![3]);
    }

    #[test]
    fn perfect_path_construction() {
        assert_eq!(perfect_path(5, 2, 0).unwrap().nodes(), &[0, 2, 4, 1, 3]);
        assert_eq!(
            perfect_path(7, -3, 0).unwrap().nodes(),
            &[0, 4, 1, 5, 2, 6, 3]
        );
        assert!(matches!(
            perfect_path(6, 2, 0),
            Err(Error::InvalidEdgeLength { step: 2, len: 6 })
        ));
        assert!(perfect_path(10, 5, 0).is_err());
        assert!(perfect_path(7, 1, 0).is_err());
        assert!(perfect_path(7, 2, 7).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(modular_inverse(-3, 7).unwrap(), 2);
        assert_eq!(modular_inverse(2, 5).unwrap(), -2);
        assert_eq!(modular_inverse(1, 7).unwrap(), 1);
        assert!(matches!(
            modular_inverse(2, 6),
            Err(Error::NoInverse { .. })
        ));
    }

    #[test]
    fn inverse_matches_trial_multiplication() {
        for n in 2..60usize {
            for s in -(n as i32)..=(n as i32) {
                let trial = (0..n as i64).find(|&k| (k * i64::from(s)).rem_euclid(n as i64) == 1);
                match (modular_inverse(s, n), trial) {
                    (Ok(inv), Some(k)) => {
                        assert_eq!(i64::from(inv).rem_euclid(n as i64), k);
                        assert!(2 * inv <= n as i32 && 2 * inv > -(n as i32));
                    }
                    (Err(_), None) => {}
                    (got, want) => panic!("n={n} s={s}: {got:?} vs {want:?}"),
                }
            }
        }
    }
}
