//! Two-color clique Ramsey numbers `r(a, b)`.

/// Exact value when known, else the binomial upper bound `C(a + b − 2, a − 1)`.
/// Saturates at `u64::MAX`.
pub fn ramsey(a: usize, b: usize) -> u64 {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, _) => 0,
        (1, _) => 1,
        (2, b) => b as u64,
        (3, 3) => 6,
        (3, 4) => 9,
        (3, 5) => 14,
        (4, 4) => 18,
        (4, 5) => 25,
        _ => binomial((a + b - 2) as u64, (a - 1) as u64),
    }
}

/// Whether `ramsey(a, b)` is an exact value rather than an upper bound.
pub fn is_exact(a: usize, b: usize) -> bool {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a <= 2 || matches!((a, b), (3, 3) | (3, 4) | (3, 5) | (4, 4) | (4, 5))
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_and_fallback() {
        assert_eq!(ramsey(3, 3), 6);
        assert_eq!(ramsey(5, 4), 25);
        assert_eq!(ramsey(2, 7), 7);
        assert_eq!(ramsey(1, 9), 1);
        // C(8, 4)
        assert_eq!(ramsey(5, 5), 70);
        assert!(!is_exact(5, 5));
        assert_eq!(ramsey(8, 8), 3432);
        assert_eq!(ramsey(200, 200), u64::MAX);
    }

    #[test]
    fn binomial_bound_dominates_table() {
        for (a, b) in [(3, 3), (3, 4), (3, 5), (4, 4), (4, 5)] {
            assert!(ramsey(a, b) <= binomial((a + b - 2) as u64, (a - 1) as u64));
        }
    }
}
