//! Small enumeration helpers shared across modules.

/// All `k`-subsets of `0..n` as increasing index vectors, lexicographic.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All weakly increasing sequences of length `k` over `0..n`.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut idx = vec![0usize; k];
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] + 1 < n) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[i];
        }
    }
}

/// All permutations of `0..n` with their signs, lexicographic.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    loop {
        out.push((a.clone(), permutation_sign(&a)));
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]) else {
            return out;
        };
        let j = (0..n).rev().find(|&j| a[j] > a[i]).unwrap();
        a.swap(i, j);
        a[i + 1..].reverse();
    }
}

/// Sign of a permutation of `0..n` (or of any list of distinct keys).
pub fn permutation_sign<T: Ord>(a: &[T]) -> i64 {
    let mut inv = 0usize;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] > a[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
