//! Symmetries of the n-cube (coordinate permutations combined with
//! coordinate flips) and canonical forms of classes under the full group.

use alloc::vec;
use alloc::vec::Vec;

use crate::cube::{bitpos, ConceptClass};
use crate::error::{Error, Result};

/// Canonical forms sweep the whole group of order 2^n * n!, so they are
/// capped at this dimension.
pub const MAX_CANONICAL_DIM: u32 = 8;

/// A symmetry of the n-cube: first permute coordinates, then complement the
/// coordinates in `flips`.
///
/// `perm[i-1]` is the image of coordinate i (both 1-based); `flips` is a set
/// of target coordinates given as a mask in vertex-bit space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeSymmetry {
    n: u32,
    perm: Vec<u32>,
    flips: u32,
}

impl CubeSymmetry {
    pub fn new(n: u32, perm: Vec<u32>, flip_coords: &[u32]) -> Result<Self> {
        crate::cube::check_dim(n)?;
        if perm.len() != n as usize {
            return Err(Error::BadParameter { name: "perm", reason: "must list an image for every coordinate" });
        }
        let mut seen = vec![false; n as usize + 1];
        for &img in &perm {
            crate::cube::check_coord(img, n)?;
            if seen[img as usize] {
                return Err(Error::BadParameter { name: "perm", reason: "is not a permutation" });
            }
            seen[img as usize] = true;
        }
        let mut flips = 0u32;
        for &c in flip_coords {
            crate::cube::check_coord(c, n)?;
            flips |= 1 << bitpos(n, c);
        }
        Ok(CubeSymmetry { n, perm, flips })
    }

    pub fn identity(n: u32) -> Result<Self> {
        CubeSymmetry::new(n, (1..=n).collect(), &[])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Image of coordinate `i` (1-based).
    pub fn image_of(&self, i: u32) -> Result<u32> {
        crate::cube::check_coord(i, self.n)?;
        Ok(self.perm[i as usize - 1])
    }

    /// The flipped target coordinates, 1-based ascending.
    pub fn flipped_coords(&self) -> Vec<u32> {
        (1..=self.n).filter(|&c| self.flips >> bitpos(self.n, c) & 1 == 1).collect()
    }

    pub fn apply_index(&self, index: u32) -> u32 {
        let n = self.n;
        let mut out = 0u32;
        for i in 1..=n {
            let bit = index >> bitpos(n, i) & 1;
            out |= bit << bitpos(n, self.perm[i as usize - 1]);
        }
        out ^ self.flips
    }

    /// Image class under this symmetry.
    pub fn apply_class(&self, class: &ConceptClass) -> Result<ConceptClass> {
        if class.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: class.n() });
        }
        ConceptClass::from_indices(self.n, class.indices().map(|v| self.apply_index(v)))
    }

    /// self after other: (self.compose(other)).apply = self.apply(other.apply(..)).
    pub fn compose(&self, other: &CubeSymmetry) -> Result<CubeSymmetry> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let n = self.n;
        let perm: Vec<u32> = (1..=n).map(|i| self.perm[other.perm[i as usize - 1] as usize - 1]).collect();
        // flips of `other` land on other's targets, which `self` then permutes
        let mut moved = 0u32;
        for i in 1..=n {
            if other.flips >> bitpos(n, i) & 1 == 1 {
                moved |= 1 << bitpos(n, self.perm[i as usize - 1]);
            }
        }
        Ok(CubeSymmetry { n, perm, flips: moved ^ self.flips })
    }

    pub fn inverse(&self) -> CubeSymmetry {
        let n = self.n;
        let mut perm = vec![0u32; n as usize];
        for i in 1..=n {
            perm[self.perm[i as usize - 1] as usize - 1] = i;
        }
        // undo the flip before un-permuting: pull flips back along the inverse
        let mut flips = 0u32;
        for i in 1..=n {
            if self.flips >> bitpos(n, self.perm[i as usize - 1]) & 1 == 1 {
                flips |= 1 << bitpos(n, i);
            }
        }
        CubeSymmetry { n, perm, flips }
    }
}

/// All permutations of 1..=n in a deterministic order (Heap's algorithm).
fn permutations(n: u32) -> Vec<Vec<u32>> {
    let mut items: Vec<u32> = (1..=n).collect();
    let mut out = Vec::new();
    fn heap(k: usize, items: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    if n == 0 {
        out.push(Vec::new());
    } else {
        heap(n as usize, &mut items, &mut out);
    }
    out
}

/// Runs `visit` on the vertex relabeling table of every symmetry of the
/// n-cube, in a deterministic order. One table is kept live at a time, so
/// the group is never materialized.
pub(crate) fn for_each_vertex_table<F: FnMut(&[u32])>(n: u32, mut visit: F) {
    let size = 1usize << n;
    let mut base = vec![0u32; size];
    let mut table = vec![0u32; size];
    for perm in permutations(n) {
        for v in 0..size as u32 {
            let mut out = 0u32;
            for i in 1..=n {
                let bit = v >> bitpos(n, i) & 1;
                out |= bit << bitpos(n, perm[i as usize - 1]);
            }
            base[v as usize] = out;
        }
        for flips in 0..size as u32 {
            for (t, &b) in table.iter_mut().zip(&base) {
                *t = b ^ flips;
            }
            visit(&table);
        }
    }
}

/// The lexicographically least class in the orbit of `class` under all cube
/// symmetries. Constant on orbits and idempotent.
pub fn canonical_form(class: &ConceptClass) -> Result<ConceptClass> {
    let n = class.n();
    if n > MAX_CANONICAL_DIM {
        return Err(Error::DimensionOutOfRange { n, max: MAX_CANONICAL_DIM });
    }
    if n <= 6 {
        return Ok(ConceptClass::from_word(n, canonical_word(n, class.as_word())));
    }
    let mut best: Option<ConceptClass> = None;
    for_each_vertex_table(n, |table| {
        let image =
            ConceptClass::from_indices(n, class.indices().map(|v| table[v as usize])).unwrap();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    });
    Ok(best.unwrap())
}

/// Word-packed canonical form for n <= 6; the whole class fits in a u64.
pub(crate) fn canonical_word(n: u32, word: u64) -> u64 {
    let mut best = u64::MAX;
    let mut best_set = false;
    for perm in permutations(n) {
        // permute the vertex bits once, then roll over all flips
        let mut permuted = 0u64;
        let mut w = word;
        while w != 0 {
            let v = w.trailing_zeros();
            w &= w - 1;
            let mut out = 0u32;
            for i in 1..=n {
                let bit = v >> bitpos(n, i) & 1;
                out |= bit << bitpos(n, perm[i as usize - 1]);
            }
            permuted |= 1u64 << out;
        }
        for flips in 0..1u32 << n {
            let image = xor_relabel(n, permuted, flips);
            if !best_set || word_class_less(image, best) {
                best = image;
                best_set = true;
            }
        }
    }
    best
}

/// Relabels a word-packed class by XORing every vertex index with `mask`,
/// using butterfly swaps instead of a per-vertex loop.
fn xor_relabel(n: u32, mut word: u64, mask: u32) -> u64 {
    let _ = n;
    if mask & 1 != 0 {
        word = (word & 0x5555_5555_5555_5555) << 1 | (word >> 1) & 0x5555_5555_5555_5555;
    }
    if mask & 2 != 0 {
        word = (word & 0x3333_3333_3333_3333) << 2 | (word >> 2) & 0x3333_3333_3333_3333;
    }
    if mask & 4 != 0 {
        word = (word & 0x0f0f_0f0f_0f0f_0f0f) << 4 | (word >> 4) & 0x0f0f_0f0f_0f0f_0f0f;
    }
    if mask & 8 != 0 {
        word = (word & 0x00ff_00ff_00ff_00ff) << 8 | (word >> 8) & 0x00ff_00ff_00ff_00ff;
    }
    if mask & 16 != 0 {
        word = (word & 0x0000_ffff_0000_ffff) << 16 | (word >> 16) & 0x0000_ffff_0000_ffff;
    }
    if mask & 32 != 0 {
        word = word.rotate_right(32);
    }
    word
}

/// The class order from ConceptClass::cmp, specialized to word-packed
/// classes: the class containing the smallest differing vertex sorts first.
#[inline]
pub(crate) fn word_class_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let diff = a ^ b;
    a & (diff & diff.wrapping_neg()) != 0
}
