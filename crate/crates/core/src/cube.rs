//! The binary n-cube: vertices, concept classes, axis-aligned subcubes and
//! cube collections.
//!
//! Conventions used across the crate:
//!
//! * Coordinates are 1-based and coordinate 1 is the leftmost character of a
//!   serialized bit string.
//! * A vertex is stored as the integer whose binary expansion, with
//!   coordinate 1 as the most significant of the n bits, spells the vertex.
//!   Coordinate `i` therefore sits at bit position `n - i`.
//! * A concept class is a characteristic bit vector over all 2^n vertex
//!   indices, giving O(1) membership tests and fast population counts.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::util::Combinations;

/// Largest supported cube dimension. Characteristic vectors are dense, so
/// every class of dimension n occupies 2^n bits of memory.
pub const MAX_DIM: u32 = 24;

pub(crate) fn check_dim(n: u32) -> Result<()> {
    if n > MAX_DIM {
        return Err(Error::DimensionOutOfRange { n, max: MAX_DIM });
    }
    Ok(())
}

pub(crate) fn check_coord(coord: u32, n: u32) -> Result<()> {
    if coord == 0 || coord > n {
        return Err(Error::CoordOutOfRange { coord, n });
    }
    Ok(())
}

/// Bit position of coordinate `coord` inside a vertex index of the n-cube.
#[inline]
pub(crate) fn bitpos(n: u32, coord: u32) -> u32 {
    n - coord
}

/// A point of {0,1}^n.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    n: u32,
    index: u32,
}

impl Vertex {
    pub fn new(n: u32, index: u32) -> Result<Self> {
        check_dim(n)?;
        if n < 32 && index >= (1u32 << n) {
            return Err(Error::BadParameter { name: "index", reason: "exceeds 2^n - 1" });
        }
        Ok(Vertex { n, index })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Value of coordinate `coord` (1-based).
    pub fn bit(&self, coord: u32) -> Result<bool> {
        check_coord(coord, self.n)?;
        Ok(self.index >> bitpos(self.n, coord) & 1 == 1)
    }

    /// Number of coordinates with value 1.
    pub fn weight(&self) -> u32 {
        self.index.count_ones()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for coord in 1..=self.n {
            let bit = self.index >> bitpos(self.n, coord) & 1;
            write!(f, "{bit}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({self})")
    }
}

/// A set of vertices of a fixed n-cube.
///
/// Values are immutable once constructed; all operations return new classes.
///
/// ```
/// use cubevc_core::ConceptClass;
/// let c = ConceptClass::from_indices(2, [0b00, 0b01]).unwrap();
/// assert_eq!(c.complement().cardinality(), 2);
/// assert_eq!(c.complement().complement(), c);
/// ```
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConceptClass {
    n: u32,
    words: Vec<u64>,
}

impl ConceptClass {
    fn word_count(n: u32) -> usize {
        if n >= 6 {
            1usize << (n - 6)
        } else {
            1
        }
    }

    pub fn empty(n: u32) -> Result<Self> {
        check_dim(n)?;
        Ok(ConceptClass { n, words: vec![0; Self::word_count(n)] })
    }

    pub fn full(n: u32) -> Result<Self> {
        let mut class = Self::empty(n)?;
        if n >= 6 {
            class.words.fill(u64::MAX);
        } else {
            class.words[0] = (1u64 << (1u32 << n)) - 1;
        }
        Ok(class)
    }

    pub fn singleton(n: u32, index: u32) -> Result<Self> {
        let mut class = Self::empty(n)?;
        if n < 32 && index >= (1u32 << n) {
            return Err(Error::BadParameter { name: "index", reason: "exceeds 2^n - 1" });
        }
        class.set(index);
        Ok(class)
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(n: u32, indices: I) -> Result<Self> {
        let mut class = Self::empty(n)?;
        for index in indices {
            if index >= (1u64 << n) as u32 {
                return Err(Error::BadParameter { name: "index", reason: "exceeds 2^n - 1" });
            }
            class.set(index);
        }
        Ok(class)
    }

    pub fn from_vertices<'a, I: IntoIterator<Item = &'a Vertex>>(n: u32, vertices: I) -> Result<Self> {
        let mut class = Self::empty(n)?;
        for v in vertices {
            if v.n != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.n });
            }
            class.set(v.index);
        }
        Ok(class)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Total number of vertices of the ambient cube, 2^n.
    pub fn ambient_size(&self) -> u64 {
        1u64 << self.n
    }

    #[inline]
    pub fn contains(&self, index: u32) -> bool {
        self.words[(index >> 6) as usize] >> (index & 63) & 1 == 1
    }

    pub fn contains_vertex(&self, v: &Vertex) -> bool {
        v.n == self.n && self.contains(v.index)
    }

    #[inline]
    pub(crate) fn set(&mut self, index: u32) {
        self.words[(index >> 6) as usize] |= 1u64 << (index & 63);
    }

    #[inline]
    pub(crate) fn clear(&mut self, index: u32) {
        self.words[(index >> 6) as usize] &= !(1u64 << (index & 63));
    }

    pub fn cardinality(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.cardinality() == self.ambient_size()
    }

    /// Vertex indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let base = (wi as u32) << 6;
            BitIter { word }.map(move |b| base + b)
        })
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let n = self.n;
        self.indices().map(move |index| Vertex { n, index })
    }

    pub fn complement(&self) -> ConceptClass {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        if self.n < 6 {
            out.words[0] &= (1u64 << (1u32 << self.n)) - 1;
        }
        out
    }

    fn check_same_cube(&self, other: &ConceptClass) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn union(&self, other: &ConceptClass) -> Result<ConceptClass> {
        self.check_same_cube(other)?;
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        Ok(out)
    }

    pub fn intersection(&self, other: &ConceptClass) -> Result<ConceptClass> {
        self.check_same_cube(other)?;
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
        Ok(out)
    }

    pub fn difference(&self, other: &ConceptClass) -> Result<ConceptClass> {
        self.check_same_cube(other)?;
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        Ok(out)
    }

    pub fn with_vertex(&self, index: u32) -> ConceptClass {
        let mut out = self.clone();
        out.set(index);
        out
    }

    pub fn without_vertex(&self, index: u32) -> ConceptClass {
        let mut out = self.clone();
        out.clear(index);
        out
    }

    pub fn is_subset_of(&self, other: &ConceptClass) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// The class as a single word; only valid for n <= 6.
    pub(crate) fn as_word(&self) -> u64 {
        debug_assert!(self.n <= 6);
        self.words[0]
    }

    pub(crate) fn from_word(n: u32, word: u64) -> ConceptClass {
        debug_assert!(n <= 6);
        ConceptClass { n, words: vec![word] }
    }

    /// True when membership is closed under zeroing any subset of coordinates.
    pub fn is_closed_below(&self) -> bool {
        // enough to check single-coordinate zeroing
        self.indices().all(|v| {
            (0..self.n).all(|b| v >> b & 1 == 0 || self.contains(v & !(1 << b)))
        })
    }
}

/// Classes are ordered by their first differing vertex: the class containing
/// it sorts first. For classes of equal cardinality this is the lexicographic
/// order on their sorted vertex lists, which is the order used everywhere a
/// "canonically ordered" or "least" class is required.
impl Ord for ConceptClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                if a != b {
                    let diff = a ^ b;
                    let low = diff & diff.wrapping_neg();
                    return if a & low != 0 { Ordering::Less } else { Ordering::Greater };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for ConceptClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ConceptClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConceptClass(n={}, {{", self.n)?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}})")
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(b)
    }
}

/// An axis-aligned subcube, described by its anchored coordinates (with their
/// fixed values) and its free coordinates (its "colors" or directions).
///
/// Serialized as a string over {0,1,*} with '*' marking free coordinates:
/// `0**1` is the square of the 4-cube anchored at coordinates 1 -> 0, 4 -> 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subcube {
    n: u32,
    // The derived lexicographic order on (n, anchor_mask, anchor_values) is
    // exactly the canonical cube order: free sets ascending, then anchor
    // values ascending in string reading order.
    anchor_mask: u32,
    anchor_values: u32,
}

impl Subcube {
    pub fn new(n: u32, anchor_mask: u32, anchor_values: u32) -> Result<Self> {
        check_dim(n)?;
        let full = full_mask(n);
        if anchor_mask & !full != 0 {
            return Err(Error::BadParameter { name: "anchor_mask", reason: "has bits outside the cube" });
        }
        if anchor_values & !anchor_mask != 0 {
            return Err(Error::BadParameter { name: "anchor_values", reason: "set outside the anchor" });
        }
        Ok(Subcube { n, anchor_mask, anchor_values })
    }

    /// The 0-dimensional cube consisting of a single vertex.
    pub fn point(n: u32, index: u32) -> Result<Self> {
        Subcube::new(n, full_mask(n), index)
    }

    /// Builds a cube from 1-based free coordinates and an anchor pattern read
    /// in ascending coordinate order.
    pub fn from_free_coords(n: u32, free: &[u32], anchor_pattern: u32) -> Result<Self> {
        check_dim(n)?;
        let mut free_mask = 0u32;
        for &c in free {
            check_coord(c, n)?;
            free_mask |= 1 << bitpos(n, c);
        }
        if free_mask.count_ones() as usize != free.len() {
            return Err(Error::BadParameter { name: "free", reason: "contains duplicates" });
        }
        let anchor_mask = full_mask(n) & !free_mask;
        let m = anchor_mask.count_ones();
        if anchor_pattern >= (1u64 << m) as u32 {
            return Err(Error::BadParameter { name: "anchor_pattern", reason: "exceeds 2^|anchor| - 1" });
        }
        // spread pattern bits over anchored positions, coordinate-ascending
        let mut values = 0u32;
        let mut j = m;
        for coord in 1..=n {
            let pos = bitpos(n, coord);
            if anchor_mask >> pos & 1 == 1 {
                j -= 1;
                if anchor_pattern >> j & 1 == 1 {
                    values |= 1 << pos;
                }
            }
        }
        Subcube::new(n, anchor_mask, values)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> u32 {
        self.n - self.anchor_mask.count_ones()
    }

    pub fn anchor_mask(&self) -> u32 {
        self.anchor_mask
    }

    pub fn anchor_values(&self) -> u32 {
        self.anchor_values
    }

    pub fn free_mask(&self) -> u32 {
        full_mask(self.n) & !self.anchor_mask
    }

    /// 1-based free coordinates, ascending.
    pub fn free_coords(&self) -> Vec<u32> {
        (1..=self.n).filter(|&c| self.free_mask() >> bitpos(self.n, c) & 1 == 1).collect()
    }

    /// 1-based anchored coordinates, ascending.
    pub fn anchor_coords(&self) -> Vec<u32> {
        (1..=self.n).filter(|&c| self.anchor_mask >> bitpos(self.n, c) & 1 == 1).collect()
    }

    #[inline]
    pub fn contains_index(&self, index: u32) -> bool {
        index & self.anchor_mask == self.anchor_values
    }

    pub fn is_free(&self, coord: u32) -> Result<bool> {
        check_coord(coord, self.n)?;
        Ok(self.anchor_mask >> bitpos(self.n, coord) & 1 == 0)
    }

    /// The 2^dim vertex indices of this cube, ascending.
    pub fn vertex_indices(&self) -> Vec<u32> {
        let free = self.free_mask();
        let mut out = Vec::with_capacity(1 << self.dim());
        let mut s = 0u32;
        loop {
            out.push(self.anchor_values | s);
            if s == free {
                break;
            }
            s = s.wrapping_sub(free) & free;
        }
        out
    }

    /// The vertices of this cube.
    pub fn vertices(&self) -> Vec<Vertex> {
        let n = self.n;
        self.vertex_indices().into_iter().map(|index| Vertex { n, index }).collect()
    }

    pub fn is_inside(&self, class: &ConceptClass) -> bool {
        if class.n() != self.n {
            return false;
        }
        let free = self.free_mask();
        let mut s = 0u32;
        loop {
            if !class.contains(self.anchor_values | s) {
                return false;
            }
            if s == free {
                return true;
            }
            s = s.wrapping_sub(free) & free;
        }
    }

    pub fn to_class(&self) -> ConceptClass {
        let mut class = ConceptClass::empty(self.n).unwrap();
        for idx in self.vertex_indices() {
            class.set(idx);
        }
        class
    }

    /// Intersection of two cubes of the same ambient cube, if nonempty.
    pub fn intersect(&self, other: &Subcube) -> Option<Subcube> {
        if self.n != other.n {
            return None;
        }
        let common = self.anchor_mask & other.anchor_mask;
        if self.anchor_values & common != other.anchor_values & common {
            return None;
        }
        Some(Subcube {
            n: self.n,
            anchor_mask: self.anchor_mask | other.anchor_mask,
            anchor_values: self.anchor_values | other.anchor_values,
        })
    }

    /// True when `self` is a face of `other` (a subcube obtained by anchoring
    /// some of `other`'s free coordinates).
    pub fn is_face_of(&self, other: &Subcube) -> bool {
        self.n == other.n
            && self.anchor_mask & other.anchor_mask == other.anchor_mask
            && self.anchor_values & other.anchor_mask == other.anchor_values
    }

    /// Removes coordinate `x`, producing a cube of the (n-1)-cube. If `x` was
    /// free the dimension drops by one, otherwise the anchor entry is dropped.
    pub fn project_out(&self, x: u32) -> Result<Subcube> {
        check_coord(x, self.n)?;
        if self.n == 0 {
            return Err(Error::CoordOutOfRange { coord: x, n: 0 });
        }
        let pos = bitpos(self.n, x);
        Ok(Subcube {
            n: self.n - 1,
            anchor_mask: drop_bit(self.anchor_mask, pos),
            anchor_values: drop_bit(self.anchor_values, pos),
        })
    }

    /// Inserts a new coordinate at position `x` (1-based in the enlarged
    /// cube), anchored to `level` if given, free otherwise.
    pub fn insert_coord(&self, x: u32, level: Option<u32>) -> Result<Subcube> {
        let n = self.n + 1;
        check_dim(n)?;
        check_coord(x, n)?;
        let pos = bitpos(n, x);
        let mut anchor_mask = insert_bit(self.anchor_mask, pos, 0);
        let mut anchor_values = insert_bit(self.anchor_values, pos, 0);
        if let Some(level) = level {
            anchor_mask |= 1 << pos;
            anchor_values |= (level & 1) << pos;
        }
        Ok(Subcube { n, anchor_mask, anchor_values })
    }

    /// Restriction to coordinates {1..=i}: the cube of the i-cube reachable
    /// as the image of this cube under the prefix projection.
    pub(crate) fn prefix_cube(&self, i: u32) -> Subcube {
        debug_assert!(i <= self.n);
        let shift = self.n - i;
        Subcube { n: i, anchor_mask: self.anchor_mask >> shift, anchor_values: self.anchor_values >> shift }
    }
}

impl fmt::Display for Subcube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for coord in 1..=self.n {
            let pos = bitpos(self.n, coord);
            if self.anchor_mask >> pos & 1 == 0 {
                write!(f, "*")?;
            } else {
                write!(f, "{}", self.anchor_values >> pos & 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Subcube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subcube({self})")
    }
}

#[inline]
pub(crate) fn full_mask(n: u32) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Removes bit `pos`, shifting higher bits down.
#[inline]
pub(crate) fn drop_bit(value: u32, pos: u32) -> u32 {
    let low = value & ((1u32 << pos) - 1);
    let high = value >> (pos + 1);
    (high << pos) | low
}

/// Inserts `bit` at position `pos`, shifting higher bits up.
#[inline]
pub(crate) fn insert_bit(value: u32, pos: u32, bit: u32) -> u32 {
    let low = value & ((1u32 << pos) - 1);
    let high = value >> pos;
    (high << (pos + 1)) | (bit << pos) | low
}

/// An ordered list of subcubes of equal dimension in a common ambient cube.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeCollection {
    n: u32,
    k: u32,
    cubes: Vec<Subcube>,
}

impl CubeCollection {
    pub fn new(n: u32, k: u32, cubes: Vec<Subcube>) -> Result<Self> {
        check_dim(n)?;
        if k > n {
            return Err(Error::BadParameter { name: "k", reason: "exceeds the ambient dimension" });
        }
        for c in &cubes {
            if c.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.n() });
            }
            if c.dim() != k {
                return Err(Error::BadParameter { name: "cubes", reason: "must all have the common dimension k" });
            }
        }
        Ok(CubeCollection { n, k, cubes })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The common cube dimension.
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn cubes(&self) -> &[Subcube] {
        &self.cubes
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    /// The union of all member cubes as a class.
    pub fn union_class(&self) -> ConceptClass {
        let mut class = ConceptClass::empty(self.n).unwrap();
        for cube in &self.cubes {
            for idx in cube.vertex_indices() {
                class.set(idx);
            }
        }
        class
    }

    /// True when the collection has exactly one k-cube per direction set of
    /// size k, i.e. C(n,k) cubes covering every free set.
    pub fn is_complete(&self) -> bool {
        let expected = crate::vc::binomial(self.n, self.k);
        if self.cubes.len() as u64 != expected {
            return false;
        }
        let mut seen: Vec<u32> = self.cubes.iter().map(|c| c.free_mask()).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len() as u64 == expected
    }

    /// Member cubes in canonical order: free set ascending lexicographic,
    /// then anchor value ascending.
    pub fn sorted(&self) -> CubeCollection {
        let mut cubes = self.cubes.clone();
        cubes.sort_unstable();
        CubeCollection { n: self.n, k: self.k, cubes }
    }
}

/// All axis-aligned k-subcubes fully contained in `class`, in canonical order
/// (free set ascending lexicographic, then anchor value ascending).
pub fn enumerate_k_cubes(class: &ConceptClass, k: u32) -> Result<Vec<Subcube>> {
    let n = class.n();
    if k > n {
        return Err(Error::BadParameter { name: "k", reason: "exceeds the ambient dimension" });
    }
    let mut out = Vec::new();
    for free in Combinations::new(n, k) {
        let anchored = (n - k) as u64;
        for pattern in 0..1u64 << anchored {
            let cube = Subcube::from_free_coords(n, &free, pattern as u32)?;
            if cube.is_inside(class) {
                out.push(cube);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_of(n: u32, strings: &[&str]) -> ConceptClass {
        let idx = strings.iter().map(|s| u32::from_str_radix(s, 2).unwrap());
        ConceptClass::from_indices(n, idx).unwrap()
    }

    #[test]
    fn vertex_display_coordinate_one_leftmost() {
        let v = Vertex::new(3, 0b101).unwrap();
        assert_eq!(alloc::format!("{v}"), "101");
        assert!(v.bit(1).unwrap());
        assert!(!v.bit(2).unwrap());
        assert!(v.bit(3).unwrap());
    }

    #[test]
    fn complement_involutive_and_sized() {
        let c = class_of(2, &["00"]);
        let comp = c.complement();
        assert_eq!(comp, class_of(2, &["01", "10", "11"]));
        assert_eq!(comp.complement(), c);

        let full = ConceptClass::full(2).unwrap();
        assert!(full.complement().is_empty());

        // |complement| = 2^n - |C| on random classes
        let mut rng = crate::rng::SplitMix64::new(7);
        for _ in 0..50 {
            let n = 2 + (rng.next_u64() % 7) as u32;
            let card = rng.next_u64() % (1 << n);
            let c = crate::rng::random_class(n, card, &mut rng).unwrap();
            assert_eq!(c.complement().cardinality(), (1 << n) - c.cardinality());
            assert_eq!(c.complement().complement(), c);
        }
    }

    #[test]
    fn class_order_prefers_smaller_vertices() {
        let a = class_of(2, &["00", "11"]);
        let b = class_of(2, &["01", "10"]);
        assert!(a < b);
        let c = class_of(2, &["00"]);
        assert!(c < b);
    }

    #[test]
    fn subcube_vertices_and_membership() {
        // n=3, anchor 1 -> 0, free {2,3}
        let sq = Subcube::from_free_coords(3, &[2, 3], 0).unwrap();
        let idx = sq.vertex_indices();
        assert_eq!(idx, vec![0b000, 0b001, 0b010, 0b011]);
        assert_eq!(alloc::format!("{sq}"), "0**");

        let pt = Subcube::point(3, 0b101).unwrap();
        assert_eq!(pt.vertex_indices(), vec![0b101]);
        assert_eq!(pt.dim(), 0);

        let all = Subcube::from_free_coords(3, &[1, 2, 3], 0).unwrap();
        assert_eq!(all.vertex_indices().len(), 8);
    }

    #[test]
    fn subcube_order_is_free_set_then_anchor() {
        // squares of the 3-cube: free {1,2} before {1,3} before {2,3}
        let c12 = Subcube::from_free_coords(3, &[1, 2], 0).unwrap();
        let c13 = Subcube::from_free_coords(3, &[1, 3], 0).unwrap();
        let c23 = Subcube::from_free_coords(3, &[2, 3], 0).unwrap();
        let c23b = Subcube::from_free_coords(3, &[2, 3], 1).unwrap();
        let mut v = vec![c23b, c23, c13, c12];
        v.sort_unstable();
        assert_eq!(v, vec![c12, c13, c23, c23b]);
    }

    #[test]
    fn anchor_pattern_reads_in_coordinate_order() {
        // free {2}, anchors on {1,3}; pattern 0b10 means coordinate 1 -> 1, 3 -> 0
        let c = Subcube::from_free_coords(3, &[2], 0b10).unwrap();
        assert_eq!(alloc::format!("{c}"), "1*0");
    }

    #[test]
    fn enumerate_k_cubes_of_full_cube() {
        let full = ConceptClass::full(3).unwrap();
        // squares: one free pair choice times 2 anchors
        assert_eq!(enumerate_k_cubes(&full, 2).unwrap().len(), 6);
        assert_eq!(enumerate_k_cubes(&full, 3).unwrap().len(), 1);
        assert_eq!(enumerate_k_cubes(&full, 0).unwrap().len(), 8);

        let single = ConceptClass::singleton(3, 5).unwrap();
        assert!(enumerate_k_cubes(&single, 1).unwrap().is_empty());
    }

    #[test]
    fn edge_count_of_closed_below_class() {
        // all vertices of weight <= 2 in the 4-cube hold 16 edges
        let c = crate::lift::closed_below_maximum(4, 2).unwrap();
        assert_eq!(enumerate_k_cubes(&c, 1).unwrap().len(), 16);
    }

    #[test]
    fn enumerate_k_cubes_matches_membership_definition() {
        let mut rng = crate::rng::SplitMix64::new(11);
        for _ in 0..20 {
            let n = 3 + (rng.next_u64() % 3) as u32;
            let c = crate::rng::random_class(n, 1 << (n - 1), &mut rng).unwrap();
            for k in 0..=n {
                let listed = enumerate_k_cubes(&c, k).unwrap();
                // independent membership cross-check
                let mut count = 0u64;
                for free in Combinations::new(n, k) {
                    for pattern in 0..1u64 << (n - k) {
                        let cube = Subcube::from_free_coords(n, &free, pattern as u32).unwrap();
                        if cube.vertex_indices().iter().all(|&v| c.contains(v)) {
                            count += 1;
                        }
                    }
                }
                assert_eq!(listed.len() as u64, count);
                assert!(listed.iter().all(|cube| cube.is_inside(&c)));
                // canonical order is strictly increasing
                assert!(listed.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn drop_and_insert_bits_roundtrip() {
        assert_eq!(drop_bit(0b1011, 1), 0b101);
        assert_eq!(insert_bit(0b101, 1, 1), 0b1011);
        for v in 0..64u32 {
            for pos in 0..6 {
                assert_eq!(drop_bit(insert_bit(v, pos, 0), pos), v);
                assert_eq!(drop_bit(insert_bit(v, pos, 1), pos), v);
            }
        }
    }

    #[test]
    fn collection_completeness() {
        let cubes: Vec<Subcube> = Combinations::new(3, 2)
            .map(|free| Subcube::from_free_coords(3, &free, 0).unwrap())
            .collect();
        let cc = CubeCollection::new(3, 2, cubes).unwrap();
        assert!(cc.is_complete());
        assert_eq!(cc.union_class().cardinality(), 7); // cube minus 111

        let partial = CubeCollection::new(3, 2, cc.cubes()[..2].to_vec()).unwrap();
        assert!(!partial.is_complete());
    }
}
