//! Generators for concrete class families: the majority-anchored classes
//! that resist embedding into low-dimension maximum classes (with their
//! maximum witnesses), classification of maximal-but-not-maximum classes,
//! symmetric Boolean function classes with maximum extensions, and maximum
//! classes built from generating sets of monomial sums.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::cube::{bitpos, full_mask, ConceptClass, CubeCollection, Subcube};
use crate::error::{Error, Result};
use crate::symmetry::canonical_word;
use crate::util::Combinations;
use crate::vc::{binomial, is_maximal, is_maximum, sauer_bound, vc_dimension};

/// A VC-d class whose complement is anchored by a two-block majority rule,
/// together with the coordinate blocks.
#[derive(Clone, Debug)]
pub struct MajorityClass {
    pub class: ConceptClass,
    /// First block: coordinates 1..=ceil(n/2).
    pub a_coords: Vec<u32>,
    /// Second block: the remaining coordinates.
    pub b_coords: Vec<u32>,
}

fn majority_blocks(n: u32) -> (Vec<u32>, Vec<u32>) {
    let a_size = n.div_ceil(2);
    ((1..=a_size).collect(), (a_size + 1..=n).collect())
}

fn check_majority_params(d: u32, n: u32) -> Result<()> {
    crate::cube::check_dim(n)?;
    if !d.is_multiple_of(2) {
        return Err(Error::BadParameter { name: "d", reason: "must be even" });
    }
    if n <= 2 * d + 2 {
        return Err(Error::BadParameter { name: "n", reason: "must exceed 2d + 2" });
    }
    Ok(())
}

/// The complement collection of the majority-anchored class: one
/// (n-d-1)-cube per (d+1)-subset T of the coordinates, anchored all-zero on T
/// when the majority of T lies in the first block and all-one otherwise.
pub fn majority_anchor_collection(d: u32, n: u32) -> Result<CubeCollection> {
    check_majority_params(d, n)?;
    let (a, _) = majority_blocks(n);
    let a_mask: u32 = a.iter().map(|&c| 1u32 << bitpos(n, c)).sum();
    let mut cubes = Vec::with_capacity(binomial(n, d + 1) as usize);
    for anchor_coords in Combinations::new(n, d + 1) {
        let mut mask = 0u32;
        for &c in &anchor_coords {
            mask |= 1 << bitpos(n, c);
        }
        let in_a = (mask & a_mask).count_ones();
        let values = if in_a > d + 1 - in_a { 0 } else { mask };
        cubes.push(Subcube::new(n, mask, values)?);
    }
    CubeCollection::new(n, n - d - 1, cubes)
}

/// The majority-anchored VC-d class itself (the complement of the collection
/// above) with its two coordinate blocks.
pub fn majority_anchor_class(d: u32, n: u32) -> Result<MajorityClass> {
    let collection = majority_anchor_collection(d, n)?;
    let (a_coords, b_coords) = majority_blocks(n);
    Ok(MajorityClass { class: collection.union_class().complement(), a_coords, b_coords })
}

/// The witness collection: one (n-2d-1)-cube per (2d+1)-subset T, anchored
/// zero on the first block's coordinates of T and one on the second block's.
/// Its union lies inside the majority class's complement.
pub fn majority_witness_collection(d: u32, n: u32) -> Result<CubeCollection> {
    check_majority_params(d, n)?;
    let (a, _) = majority_blocks(n);
    let a_mask: u32 = a.iter().map(|&c| 1u32 << bitpos(n, c)).sum();
    let mut cubes = Vec::with_capacity(binomial(n, 2 * d + 1) as usize);
    for anchor_coords in Combinations::new(n, 2 * d + 1) {
        let mut mask = 0u32;
        for &c in &anchor_coords {
            mask |= 1 << bitpos(n, c);
        }
        let values = mask & !a_mask; // zero on the A block, one on the B block
        cubes.push(Subcube::new(n, mask, values)?);
    }
    CubeCollection::new(n, n - 2 * d - 1, cubes)
}

/// The 2d-maximum class containing the majority-anchored class: the
/// complement of the witness collection's union.
pub fn majority_anchor_witness(d: u32, n: u32) -> Result<ConceptClass> {
    Ok(majority_witness_collection(d, n)?.union_class().complement())
}

/// Canonical representatives of all maximal-but-not-maximum VC-d classes of
/// the n-cube under the full symmetry group.
///
/// Exhaustive: a full subset sweep for n <= 4, and for n = 5 a sweep over all
/// unions of one (n-d-1)-cube per direction set. A class is maximal exactly
/// when its complement is such a union that is minimal under vertex removal,
/// which the sweep tests directly.
pub fn classify_maximal(n: u32, d: u32) -> Result<Vec<ConceptClass>> {
    if !(2..=5).contains(&n) || d > 2 {
        return Err(Error::BudgetExceeded { what: "classification is exhaustive and capped at n <= 5, d <= 2" });
    }
    if d >= n {
        return Err(Error::BadParameter { name: "d", reason: "must be below n for a maximal-not-maximum class" });
    }
    let mut canon: BTreeSet<u64> = BTreeSet::new();
    if n <= 4 {
        let size = 1u64 << (1 << n);
        for bits in 1..size - 1 {
            let class = ConceptClass::from_word(n, bits);
            if vc_dimension(&class) != d as i32 {
                continue;
            }
            if is_maximum(&class)? || !is_maximal(&class)? {
                continue;
            }
            canon.insert(canonical_word(n, bits));
        }
    } else {
        // n = 5: every vertex index fits a u32 exactly
        for union in minimal_complete_unions(n, d)? {
            canon.insert(canonical_word(n, !union as u64));
        }
        // minimal unions whose complement is maximum are maximal too, but
        // not wanted here
        canon.retain(|&w| !is_maximum(&ConceptClass::from_word(n, w)).unwrap());
    }
    let mut out: Vec<ConceptClass> = canon.into_iter().map(|w| ConceptClass::from_word(n, w)).collect();
    out.sort_unstable();
    for class in &out {
        debug_assert!(is_maximal(class).unwrap() && !is_maximum(class).unwrap());
    }
    Ok(out)
}

/// All unions of one (n-d-1)-cube per direction set that are minimal under
/// vertex removal, as vertex masks of the 5-cube. Minimality is equivalent
/// to the complement being a maximal class of VC dimension exactly d.
fn minimal_complete_unions(n: u32, d: u32) -> Result<Vec<u32>> {
    debug_assert!(n == 5);
    let k = n - d - 1;
    let direction_sets: Vec<Vec<u32>> = Combinations::new(n, k).collect();
    let anchors = 1usize << (n - k);
    // vertex masks per (direction set, anchor)
    let mut masks: Vec<Vec<u32>> = Vec::with_capacity(direction_sets.len());
    for free in &direction_sets {
        let mut row = Vec::with_capacity(anchors);
        for pattern in 0..anchors {
            let cube = Subcube::from_free_coords(n, free, pattern as u32)?;
            let mut m = 0u32;
            for v in cube.vertex_indices() {
                m |= 1 << v;
            }
            row.push(m);
        }
        masks.push(row);
    }

    // all 2^n vertex bits; n = 5 fills a u32 exactly
    let full_vertices = u32::MAX;
    let is_minimal = |union: u32| -> bool {
        // every vertex of the union must be critical for some direction set:
        // removing it leaves that set with no embedded cube
        let mut critical = 0u32;
        for row in &masks {
            let mut kill = full_vertices;
            for &m in row {
                if union & m == m {
                    kill &= m;
                }
            }
            critical |= kill;
        }
        union & !critical == 0
    };

    // direct-mapped cache over recently seen unions; misses only cost a
    // recheck, so collisions are harmless
    let cache_bits = 22;
    let mut cache = vec![u32::MAX; 1 << cache_bits];
    let mut survivors: Vec<u32> = Vec::new();

    let depth = direction_sets.len();
    let mut stack_union = vec![0u32; depth + 1];
    let mut stack_choice = vec![0usize; depth];
    let mut level = 0usize;
    loop {
        if stack_choice[level] == anchors {
            stack_choice[level] = 0;
            if level == 0 {
                break;
            }
            level -= 1;
            stack_choice[level] += 1;
            continue;
        }
        let union = stack_union[level] | masks[level][stack_choice[level]];
        if level + 1 == depth {
            let h = (union.wrapping_mul(0x9e37_79b9) >> (32 - cache_bits)) as usize;
            if cache[h] != union {
                cache[h] = union;
                if is_minimal(union) {
                    survivors.push(union);
                }
            }
            stack_choice[level] += 1;
        } else {
            stack_union[level + 1] = union;
            level += 1;
        }
    }
    survivors.sort_unstable();
    survivors.dedup();
    Ok(survivors)
}

/// The monomials of n variables (subsets of the variable set, encoded as
/// vertices of the n-cube) ordered by degree and then lexicographically, and
/// the induced partition of the 2^n coordinates into degree classes.
#[derive(Clone, Debug)]
pub struct MonomialOrdering {
    pub n: u32,
    /// `order[j-1]` is the monomial at coordinate j of the 2^n-cube.
    pub order: Vec<u32>,
    /// `classes[i]` lists the 1-based coordinates of degree i, ascending.
    pub classes: Vec<Vec<u32>>,
}

pub fn monomial_ordering(n: u32) -> MonomialOrdering {
    let mut order = Vec::with_capacity(1 << n);
    let mut classes = Vec::with_capacity(n as usize + 1);
    for degree in 0..=n {
        let mut class = Vec::new();
        for vars in Combinations::new(n, degree) {
            let mut m = 0u32;
            for &v in &vars {
                m |= 1 << bitpos(n, v);
            }
            class.push(order.len() as u32 + 1);
            order.push(m);
        }
        classes.push(class);
    }
    MonomialOrdering { n, order, classes }
}

fn check_symmetric_range(n: u32, max: u32) -> Result<()> {
    if n < 2 || n > max {
        return Err(Error::BadParameter { name: "n", reason: "out of the supported range for this construction" });
    }
    Ok(())
}

/// The class of symmetric Boolean functions of n variables, as vertices of
/// the 2^n-cube under the monomial ordering: all functions constant on each
/// degree class. Has 2^{n+1} members and VC dimension n+1.
pub fn symmetric_function_class(n: u32) -> Result<ConceptClass> {
    check_symmetric_range(n, 4)?;
    let mo = monomial_ordering(n);
    let ambient = 1u32 << n;
    let mut indices = Vec::with_capacity(1 << (n + 1));
    for pattern in 0..1u64 << (n + 1) {
        let mut index = 0u32;
        for (j, &m) in mo.order.iter().enumerate() {
            let degree = m.count_ones();
            if pattern >> degree & 1 == 1 {
                index |= 1 << bitpos(ambient, j as u32 + 1);
            }
        }
        indices.push(index);
    }
    ConceptClass::from_indices(ambient, indices)
}

/// The complement collection of the maximum extension of the symmetric
/// function class: one (2^n - n - 2)-cube per (n+2)-subset of coordinates,
/// anchored all-zero except for a single one placed at the first coordinate
/// of the earliest degree class holding two or more anchor coordinates.
pub fn symmetric_extension_collection(n: u32) -> Result<CubeCollection> {
    check_symmetric_range(n, 3)?;
    let mo = monomial_ordering(n);
    let ambient = 1u32 << n;
    let anchor_len = n + 2;
    let mut cubes = Vec::with_capacity(binomial(ambient, anchor_len) as usize);
    for coords in Combinations::new(ambient, anchor_len) {
        let mut mask = 0u32;
        for &c in &coords {
            mask |= 1 << bitpos(ambient, c);
        }
        // earliest degree class with two of the anchor coordinates; its first
        // anchored coordinate carries the single one
        let mut special = None;
        'classes: for class in &mo.classes {
            let mut hits = 0;
            let mut first = None;
            for &coord in class {
                if coords.binary_search(&coord).is_ok() {
                    hits += 1;
                    if first.is_none() {
                        first = Some(coord);
                    }
                    if hits >= 2 {
                        special = first;
                        break 'classes;
                    }
                }
            }
        }
        let special = special.ok_or(Error::InvariantViolation {
            what: "an anchor set met every degree class at most once",
        })?;
        let values = 1 << bitpos(ambient, special);
        cubes.push(Subcube::new(ambient, mask, values)?);
    }
    CubeCollection::new(ambient, ambient - anchor_len, cubes)
}

/// A maximum class of VC dimension n+1 containing the symmetric function
/// class.
pub fn symmetric_maximum_extension(n: u32) -> Result<ConceptClass> {
    Ok(symmetric_extension_collection(n)?.union_class().complement())
}

/// An ordered generating set: 2^n sums of distinct full-degree monomials,
/// each later sum differing from exactly one earlier sum by one monomial.
/// The sums are linearly independent over GF(2).
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    /// Number of base variables; the sums live in the 2^n-cube.
    pub n: u32,
    /// `sums[i]` is s_{i+1}, as a vertex of the 2^n-cube whose coordinates
    /// mark which monomials appear.
    pub sums: Vec<u32>,
}

impl GeneratingSet {
    pub fn ambient(&self) -> u32 {
        1 << self.n
    }

    /// The chain/uniqueness and independence invariants.
    pub fn validate(&self) -> Result<()> {
        let count = 1usize << self.n;
        if self.sums.len() != count {
            return Err(Error::BadParameter { name: "sums", reason: "must contain exactly 2^n entries" });
        }
        if self.sums[0].count_ones() != 1 {
            return Err(Error::BadParameter { name: "sums", reason: "must start with a single monomial" });
        }
        for i in 1..count {
            let parents = (0..i).filter(|&j| (self.sums[i] ^ self.sums[j]).count_ones() == 1).count();
            if parents != 1 {
                return Err(Error::BadParameter {
                    name: "sums",
                    reason: "each entry must be one monomial away from exactly one earlier entry",
                });
            }
        }
        if gf2_rank(&self.sums) != count {
            return Err(Error::BadParameter { name: "sums", reason: "must be linearly independent over GF(2)" });
        }
        Ok(())
    }

    /// The generating set together with the zero function: a path through the
    /// 2^n-cube, i.e. a 1-maximum class.
    pub fn with_zero_class(&self) -> Result<ConceptClass> {
        let mut indices = vec![0u32];
        indices.extend_from_slice(&self.sums);
        ConceptClass::from_indices(self.ambient(), indices)
    }
}

fn gf2_rank(rows: &[u32]) -> usize {
    let mut basis: Vec<u32> = Vec::new();
    let mut rank = 0;
    for &row in rows {
        let mut r = row;
        for &b in &basis {
            r = r.min(r ^ b);
        }
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
            rank += 1;
        }
    }
    rank
}

/// The default generating set: the nested chain s_i = {m_1, ..., m_i} over
/// the canonical monomial enumeration.
pub fn generating_set(n: u32) -> Result<GeneratingSet> {
    if !(1..=4).contains(&n) {
        return Err(Error::BadParameter { name: "n", reason: "must be between 1 and 4" });
    }
    let ambient = 1u32 << n;
    let sums: Vec<u32> = (1..=ambient).map(|i| (full_mask(ambient) >> (ambient - i)) << (ambient - i)).collect();
    let g = GeneratingSet { n, sums };
    g.validate()?;
    Ok(g)
}

/// Builds a generating set from parent-pointer steps: `steps[0]` names the
/// first monomial (1-based coordinate); `steps[i] = (j, m)` sets
/// s_{i+1} = s_j + m for an earlier 1-based index j.
pub fn generating_set_from_steps(n: u32, steps: &[(usize, u32)]) -> Result<GeneratingSet> {
    if !(1..=4).contains(&n) {
        return Err(Error::BadParameter { name: "n", reason: "must be between 1 and 4" });
    }
    let ambient = 1u32 << n;
    if steps.len() != ambient as usize {
        return Err(Error::BadParameter { name: "steps", reason: "must contain exactly 2^n entries" });
    }
    let mut sums: Vec<u32> = Vec::with_capacity(steps.len());
    for (i, &(parent, mono)) in steps.iter().enumerate() {
        crate::cube::check_coord(mono, ambient)?;
        let bit = 1u32 << bitpos(ambient, mono);
        if i == 0 {
            if parent != 0 {
                return Err(Error::BadParameter { name: "steps", reason: "first entry must have parent 0" });
            }
            sums.push(bit);
        } else {
            if parent == 0 || parent > i {
                return Err(Error::BadParameter { name: "steps", reason: "parent must name an earlier entry" });
            }
            sums.push(sums[parent - 1] ^ bit);
        }
    }
    let g = GeneratingSet { n, sums };
    g.validate()?;
    Ok(g)
}

/// All sums of at most k distinct generating-set elements: a maximum class of
/// VC dimension k in the 2^n-cube with exactly Phi_k(2^n) members.
pub fn boolean_sum_class(g: &GeneratingSet, k: u32) -> Result<ConceptClass> {
    let ambient = g.ambient();
    if k > ambient {
        return Err(Error::BadParameter { name: "k", reason: "exceeds the number of generators" });
    }
    let mut members = vec![0u32];
    let mut frontier = vec![(0u32, 0usize)]; // (sum, next generator index)
    for _ in 0..k {
        let mut next = Vec::new();
        for &(sum, start) in &frontier {
            for (j, &s) in g.sums.iter().enumerate().skip(start) {
                let v = sum ^ s;
                members.push(v);
                next.push((v, j + 1));
            }
        }
        frontier = next;
    }
    let class = ConceptClass::from_indices(ambient, members)?;
    let expected = sauer_bound(ambient, k)?;
    if class.cardinality() != expected {
        return Err(Error::InvariantViolation {
            what: "two distinct generator subsets produced the same sum",
        });
    }
    Ok(class)
}
