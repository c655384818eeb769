//! Small counting helpers shared across modules.

use num_bigint::BigInt;
use num_traits::One;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn big_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `(sum parts)! / prod(part!)`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut total = 0u64;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= big_binomial(total, p);
    }
    acc
}

/// Möbius function.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n >= 1);
    let mut result = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut current: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

/// Advances `v` to the next lexicographic arrangement of its multiset of
/// entries. Returns `false` (leaving `v` sorted) after the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct rearrangements of a multiset, in lexicographic order.
pub fn multiset_permutations<T: Ord + Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut current = items.to_vec();
    current.sort();
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

/// All vectors of `len` nonnegative integers summing to `total`.
pub fn weak_compositions(total: u32, len: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == len {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=rest {
            cur.push(a);
            rec(rest - a, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, len, &mut Vec::with_capacity(len), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(multiset_permutations(&[1, 1, 2]).len(), 3);
        assert_eq!(weak_compositions(3, 3).len(), 10);
        assert_eq!(weak_compositions(0, 0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn mobius_values() {
        let got: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(got, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }
}
