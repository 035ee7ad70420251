#![allow(dead_code)] // shared across test binaries that each use a subset

//! Independent oracles for the integration and acceptance suites.
//!
//! Everything here is deliberately written from scratch against the
//! definitions, without touching the library's search or counting paths, so
//! that the tests cross-check two genuinely different routes.

use std::collections::HashSet;

use cubevc_core::ConceptClass;

/// All k-element subsets of {1,...,n} as sorted vectors.
pub fn subsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn rec(start: u32, n: u32, k: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(acc.clone());
            return;
        }
        for c in start..=n.saturating_sub(k - 1) {
            acc.push(c);
            rec(c + 1, n, k - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// VC dimension straight from the definition: scan every coordinate set of
/// every size and collect projection patterns into a hash set. No pruning,
/// no early stopping across sizes.
pub fn naive_vc(class: &ConceptClass) -> i32 {
    if class.is_empty() {
        return -1;
    }
    let n = class.n();
    let vertices: Vec<u32> = class.indices().collect();
    let mut best = 0i32;
    for size in 1..=n {
        for coords in subsets(n, size) {
            let mut patterns: HashSet<u32> = HashSet::new();
            for &v in &vertices {
                let mut p = 0u32;
                for (j, &c) in coords.iter().enumerate() {
                    if v >> (n - c) & 1 == 1 {
                        p |= 1 << j;
                    }
                }
                patterns.insert(p);
            }
            if patterns.len() == 1usize << size {
                best = size as i32;
            }
        }
    }
    best
}

/// Phi_d(n) from Pascal's triangle, no factorials.
pub fn pascal_phi(n: u32, d: u32) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64];
        for w in row.windows(2) {
            next.push(w[0] + w[1]);
        }
        next.push(1);
        row = next;
    }
    row.iter().take(d as usize + 1).sum()
}

pub fn naive_is_maximum(class: &ConceptClass) -> bool {
    let d = naive_vc(class);
    d >= 0 && class.cardinality() == pascal_phi(class.n(), d as u32)
}

/// Number of axis-aligned k-cubes inside the class, by explicit membership
/// of every candidate cube's vertex list.
pub fn naive_k_cube_count(class: &ConceptClass, k: u32) -> u64 {
    let n = class.n();
    let mut count = 0u64;
    for free in subsets(n, k) {
        let anchored: Vec<u32> = (1..=n).filter(|c| !free.contains(c)).collect();
        for pattern in 0..1u64 << anchored.len() {
            let mut base = 0u32;
            for (j, &c) in anchored.iter().enumerate() {
                if pattern >> (anchored.len() - 1 - j) & 1 == 1 {
                    base |= 1 << (n - c);
                }
            }
            let inside = (0..1u32 << k).all(|sub| {
                let mut v = base;
                for (j, &c) in free.iter().enumerate() {
                    if sub >> j & 1 == 1 {
                        v |= 1 << (n - c);
                    }
                }
                class.contains(v)
            });
            if inside {
                count += 1;
            }
        }
    }
    count
}

/// Visits every extension of `class` by `need` vertices drawn from `pool`.
pub fn for_each_extension<F: FnMut(&ConceptClass)>(class: &ConceptClass, pool: &[u32], need: usize, f: &mut F) {
    fn rec<F: FnMut(&ConceptClass)>(class: &ConceptClass, pool: &[u32], start: usize, need: usize, f: &mut F) {
        if need == 0 {
            f(class);
            return;
        }
        if pool.len() - start < need {
            return;
        }
        for i in start..pool.len() {
            rec(&class.with_vertex(pool[i]), pool, i + 1, need - 1, f);
        }
    }
    rec(class, pool, 0, need, f);
}

/// All maximum classes of the given VC dimension containing `class`, by
/// extension sweep and naive verification. Sorted.
pub fn brute_force_maximum_superclasses(class: &ConceptClass, target_vc: u32) -> Vec<ConceptClass> {
    let target_card = pascal_phi(class.n(), target_vc);
    assert!(target_card >= class.cardinality());
    let need = (target_card - class.cardinality()) as usize;
    let pool: Vec<u32> = class.complement().indices().collect();
    let mut out = Vec::new();
    for_each_extension(class, &pool, need, &mut |candidate| {
        if naive_vc(candidate) == target_vc as i32 && naive_is_maximum(candidate) {
            out.push(candidate.clone());
        }
    });
    out.sort_unstable();
    out
}
