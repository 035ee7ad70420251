//! VC dimension, the Sauer bound, deficiency, maximum/maximal predicates,
//! complete-collection extraction and cube counting in complements.

use alloc::vec;
use alloc::vec::Vec;

use crate::cube::{bitpos, enumerate_k_cubes, ConceptClass, CubeCollection, Subcube};
use crate::error::{Error, Result};
use crate::util::Combinations;

/// Exact binomial coefficient; saturates far above anything a 24-cube needs.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// The Sauer bound Phi_d(n) = sum_{i=0}^{d} C(n,i).
pub fn sauer_bound(n: u32, d: u32) -> Result<u64> {
    if d > n {
        return Err(Error::BadParameter { name: "d", reason: "exceeds n" });
    }
    Ok((0..=d).map(|i| binomial(n, i)).sum())
}

/// Projection patterns realized by a class on a coordinate set.
#[derive(Clone, Debug)]
pub struct ShatterWitness {
    /// 1-based coordinates, ascending.
    pub coords: Vec<u32>,
    /// The realized patterns, as a class of the |coords|-cube.
    pub achieved_patterns: ConceptClass,
}

impl ShatterWitness {
    pub fn is_shattered(&self) -> bool {
        self.achieved_patterns.cardinality() == 1u64 << self.coords.len()
    }
}

/// Projects the class onto `coords` and records which patterns occur.
pub fn shatter_witness(class: &ConceptClass, coords: &[u32]) -> Result<ShatterWitness> {
    let n = class.n();
    let mut sorted = coords.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != coords.len() {
        return Err(Error::BadParameter { name: "coords", reason: "contains duplicates" });
    }
    for &c in &sorted {
        crate::cube::check_coord(c, n)?;
    }
    let s = sorted.len() as u32;
    let mut achieved = ConceptClass::empty(s)?;
    let positions: Vec<u32> = sorted.iter().map(|&c| bitpos(n, c)).collect();
    let full = 1u64 << s;
    let mut seen = 0u64;
    for v in class.indices() {
        let mut pat = 0u32;
        for (j, &p) in positions.iter().enumerate() {
            pat |= (v >> p & 1) << (s as usize - 1 - j);
        }
        if !achieved.contains(pat) {
            achieved = achieved.with_vertex(pat);
            seen += 1;
            if seen == full {
                break;
            }
        }
    }
    Ok(ShatterWitness { coords: sorted, achieved_patterns: achieved })
}

/// True when some coordinate set of size `s` is shattered.
pub(crate) fn exists_shattered(class: &ConceptClass, s: u32) -> bool {
    let n = class.n();
    if s > n || (class.cardinality() as u128) < (1u128 << s) {
        return false;
    }
    if s == 0 {
        return !class.is_empty();
    }
    let mut positions: Vec<u32> = vec![0; s as usize];
    let mut pattern_seen: Vec<u64> = Vec::new();
    for coords in Combinations::new(n, s) {
        for (j, &c) in coords.iter().enumerate() {
            positions[j] = bitpos(n, c);
        }
        let full = 1u64 << s;
        let words = full.div_ceil(64) as usize;
        pattern_seen.clear();
        pattern_seen.resize(words, 0);
        let mut count = 0u64;
        for v in class.indices() {
            let mut pat = 0u64;
            for (j, &p) in positions.iter().enumerate() {
                pat |= ((v >> p & 1) as u64) << (s as usize - 1 - j);
            }
            let w = (pat >> 6) as usize;
            let bit = 1u64 << (pat & 63);
            if pattern_seen[w] & bit == 0 {
                pattern_seen[w] |= bit;
                count += 1;
                if count == full {
                    break;
                }
            }
        }
        if count == full {
            return true;
        }
    }
    false
}

/// The VC dimension: the size of the largest shattered coordinate set.
///
/// Returns -1 for the empty class by convention; every nonempty class has
/// dimension at least 0. The search runs over ascending set sizes and stops
/// at the first size with no shattered set.
pub fn vc_dimension(class: &ConceptClass) -> i32 {
    if class.is_empty() {
        return -1;
    }
    let n = class.n();
    for s in 1..=n {
        if !exists_shattered(class, s) {
            return (s - 1) as i32;
        }
    }
    n as i32
}

/// VC dimension of a class known to be nonempty.
pub(crate) fn vc_dim_nonempty(class: &ConceptClass) -> Result<u32> {
    if class.is_empty() {
        return Err(Error::EmptyClass);
    }
    Ok(vc_dimension(class) as u32)
}

/// Sauer bound, cardinality and their gap for a nonempty class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeficiencyReport {
    pub d: u32,
    pub sauer: u64,
    pub cardinality: u64,
    pub deficiency: u64,
}

pub fn deficiency(class: &ConceptClass) -> Result<DeficiencyReport> {
    let d = vc_dim_nonempty(class)?;
    let sauer = sauer_bound(class.n(), d)?;
    let cardinality = class.cardinality();
    let deficiency = sauer
        .checked_sub(cardinality)
        .ok_or(Error::InvariantViolation { what: "class cardinality exceeds its Sauer bound" })?;
    Ok(DeficiencyReport { d, sauer, cardinality, deficiency })
}

/// True when the class meets its Sauer bound with equality.
pub fn is_maximum(class: &ConceptClass) -> Result<bool> {
    Ok(deficiency(class)?.deficiency == 0)
}

/// True when no vertex can be added without increasing the VC dimension.
pub fn is_maximal(class: &ConceptClass) -> Result<bool> {
    let d = vc_dim_nonempty(class)?;
    if class.is_full() {
        return Err(Error::FullCube);
    }
    if d == class.n() {
        // only the full cube has VC dimension n, so this cannot happen for a
        // proper subset
        return Err(Error::InvariantViolation { what: "proper subset with VC dimension n" });
    }
    for v in class.complement().indices() {
        if !exists_shattered(&class.with_vertex(v), d + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For each direction set of size k, searches `class` for a k-cube with that
/// free set, taking the lexicographically least anchor. Returns the resulting
/// collection when every direction set succeeds, `None` otherwise.
pub fn complete_collection_in(class: &ConceptClass, k: u32) -> Result<Option<CubeCollection>> {
    let n = class.n();
    if k > n {
        return Err(Error::BadParameter { name: "k", reason: "exceeds the ambient dimension" });
    }
    let mut cubes = Vec::with_capacity(binomial(n, k) as usize);
    'direction: for free in Combinations::new(n, k) {
        for pattern in 0..1u64 << (n - k) {
            let cube = Subcube::from_free_coords(n, &free, pattern as u32)?;
            if cube.is_inside(class) {
                cubes.push(cube);
                continue 'direction;
            }
        }
        return Ok(None);
    }
    Ok(Some(CubeCollection::new(n, k, cubes)?))
}

/// VC dimension computed purely from complete collections in the complement:
/// the dimension is d exactly when the complement contains an
/// (n-d-1)-complete collection but no (n-d)-complete collection.
pub fn vc_dim_via_complement(class: &ConceptClass) -> Result<u32> {
    if class.is_empty() {
        return Err(Error::EmptyClass);
    }
    let n = class.n();
    let comp = class.complement();
    if comp.is_empty() {
        return Ok(n);
    }
    // containment of t-complete collections is monotone downward in t, so the
    // first failure pins the dimension
    let mut t_max = None;
    for t in 0..n {
        if complete_collection_in(&comp, t)?.is_some() {
            t_max = Some(t);
        } else {
            break;
        }
    }
    match t_max {
        Some(t) => Ok(n - t - 1),
        None => Err(Error::InvariantViolation { what: "nonempty complement contains no 0-complete collection" }),
    }
}

/// Actual k-cube count in the complement of a maximal class, together with
/// the lower bound sum_{i=k}^{n-d-1} C(i,k) C(n,i). The bound is met with
/// equality exactly for maximum classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubeCountReport {
    pub count: u64,
    pub lower_bound: u64,
}

pub fn count_k_cubes_in_complement(class: &ConceptClass, k: u32) -> Result<CubeCountReport> {
    let n = class.n();
    let d = vc_dim_nonempty(class)?;
    if !is_maximal(class)? {
        return Err(Error::NotMaximal);
    }
    if n < d + 2 || k >= n - d - 1 {
        return Err(Error::BadParameter { name: "k", reason: "must satisfy 0 <= k < n - d - 1" });
    }
    let count = enumerate_k_cubes(&class.complement(), k)?.len() as u64;
    let lower_bound = (k..=n - d - 1).map(|i| binomial(i, k) * binomial(n, i)).sum();
    Ok(CubeCountReport { count, lower_bound })
}
