use crate::error::{Error, Result};
use crate::perm::Permutation;

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Cycles on consecutive points, with the given lengths, starting at point 0.
fn consecutive_cycles(n: usize, lengths: &[usize]) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut start = 0;
    for &len in lengths {
        for i in 0..len {
            images[start + i] = (start + (i + 1) % len) as u32;
        }
        start += len;
    }
    Permutation::from_images(images).expect("disjoint cycles")
}

/// Two even permutations of degree `n` whose classes invariably generate
/// `A_n` even up to `S_n`-conjugacy.
///
/// * `n` even, `n > 6`: a 2-cycle with an `(n−2)`-cycle, and a `p`-cycle with
///   an `(n−p)`-cycle, `p` the least prime `≤ n−3` not dividing `n`.
/// * `n` odd, `n ≥ 7`: an `n`-cycle and a `p`-cycle, `p` the least odd prime
///   `≤ n−3` not dividing `n`.
/// * `n = 6`: elements of orders 4 and 5.
/// * `n = 5`: a 5-cycle and a 3-cycle (no odd prime `≤ 2` exists).
pub fn alternating_pair(n: usize) -> Result<(Permutation, Permutation)> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!(
            "alternating pairs need n >= 5, got {n}"
        )));
    }
    let pair = match n {
        5 => (consecutive_cycles(5, &[5]), consecutive_cycles(5, &[3])),
        6 => (consecutive_cycles(6, &[4, 2]), consecutive_cycles(6, &[5])),
        _ if n % 2 == 0 => {
            let p = (2..=n - 3)
                .find(|&p| is_prime(p) && n % p != 0)
                .expect("some prime at most n-3 does not divide n");
            (
                consecutive_cycles(n, &[2, n - 2]),
                consecutive_cycles(n, &[p, n - p]),
            )
        }
        _ => {
            let p = (3..=n - 3)
                .find(|&p| is_prime(p) && n % p != 0)
                .expect("some odd prime at most n-3 does not divide n");
            (consecutive_cycles(n, &[n]), consecutive_cycles(n, &[p]))
        }
    };
    debug_assert!(pair.0.is_even() && pair.1.is_even());
    Ok(pair)
}
