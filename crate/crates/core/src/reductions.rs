//! Projections, tails and reductions, iterated reductions of cube
//! collections, the face graph, and the tree test for maximum classes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cube::{bitpos, drop_bit, ConceptClass, CubeCollection, Subcube};
use crate::error::{Error, Result};
use crate::util::{Combinations, Dsu};
use crate::vc::binomial;

/// Image class after deleting the given coordinates. The remaining
/// coordinates keep their relative order and are renumbered from 1.
pub fn project_drop(class: &ConceptClass, coords: &[u32]) -> Result<ConceptClass> {
    let n = class.n();
    let mut sorted = coords.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != coords.len() {
        return Err(Error::BadParameter { name: "coords", reason: "contains duplicates" });
    }
    if sorted.is_empty() {
        return Err(Error::BadParameter { name: "coords", reason: "must be nonempty" });
    }
    if sorted.len() == n as usize {
        return Err(Error::BadParameter { name: "coords", reason: "must be a proper subset of the coordinates" });
    }
    for &c in &sorted {
        crate::cube::check_coord(c, n)?;
    }
    let mut out = ConceptClass::empty(n - sorted.len() as u32)?;
    for v in class.indices() {
        let mut image = v;
        // coordinate c sits at bit n-c, so ascending coordinates have
        // descending positions; dropping in that order keeps later positions
        // valid
        for &c in &sorted {
            image = drop_bit(image, bitpos(n, c));
        }
        out.set(image);
    }
    Ok(out)
}

/// The image, reduction and tail of a class under projection along one
/// coordinate.
#[derive(Clone, Debug)]
pub struct ProjectionSplit {
    /// The dropped coordinate.
    pub coord: u32,
    /// p(C): the image in the (n-1)-cube.
    pub image: ConceptClass,
    /// Vertices of the (n-1)-cube both of whose extensions lie in C.
    pub reduction: ConceptClass,
    /// Vertices of C with unique image, kept in the n-cube.
    pub tail: ConceptClass,
}

pub fn split_along(class: &ConceptClass, x: u32) -> Result<ProjectionSplit> {
    let n = class.n();
    crate::cube::check_coord(x, n)?;
    let bit = 1u32 << bitpos(n, x);
    let mut image = ConceptClass::empty(n - 1)?;
    let mut reduction = ConceptClass::empty(n - 1)?;
    let mut tail = ConceptClass::empty(n)?;
    for v in class.indices() {
        if v & bit != 0 {
            continue; // handle each fiber once, from its x=0 end
        }
        let lo = class.contains(v);
        let hi = class.contains(v | bit);
        let w = drop_bit(v, bitpos(n, x));
        if lo || hi {
            image.set(w);
        }
        if lo && hi {
            reduction.set(w);
        } else if lo {
            tail.set(v);
        } else if hi {
            tail.set(v | bit);
        }
    }
    // cover fibers whose x=0 vertex is absent
    for v in class.indices() {
        if v & bit != 0 && !class.contains(v & !bit) {
            let w = drop_bit(v, bitpos(n, x));
            image.set(w);
            tail.set(v);
        }
    }
    Ok(ProjectionSplit { coord: x, image, reduction, tail })
}

/// One edge of an iterated reduction: a cube of the collection joining the
/// projected images of its two faces along the extra direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrEdge {
    /// Node indices into `IteratedReductionGraph::nodes`.
    pub a: usize,
    pub b: usize,
    /// The cube's free direction outside S (1-based, in the original cube).
    pub direction: u32,
    /// The originating d-cube.
    pub cube: Subcube,
}

/// The multigraph of d-cubes over their (d-1)-faces for a fixed direction set
/// S of size d-1, with nodes identified by their image in the (n-d+1)-cube.
#[derive(Clone, Debug)]
pub struct IteratedReductionGraph {
    /// The direction set S, 1-based ascending.
    pub directions: Vec<u32>,
    /// Dimension of the cube the nodes are projected into (n-d+1).
    pub ambient: u32,
    /// Projected node indices, ascending.
    pub nodes: Vec<u32>,
    pub edges: Vec<IrEdge>,
    pub component_count: usize,
    pub is_forest: bool,
}

impl IteratedReductionGraph {
    pub fn is_tree(&self) -> bool {
        self.is_forest && self.component_count == 1 && !self.nodes.is_empty()
    }

    /// DOT rendering: nodes labeled by projected bit strings, edges by the
    /// extra direction index.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph iterated_reduction {\n");
        for &node in &self.nodes {
            let label = index_string(node, self.ambient);
            out.push_str(&format!("  \"{label}\";\n"));
        }
        for e in &self.edges {
            let a = index_string(self.nodes[e.a], self.ambient);
            let b = index_string(self.nodes[e.b], self.ambient);
            out.push_str(&format!("  \"{a}\" -- \"{b}\" [label=\"{}\"];\n", e.direction));
        }
        out.push_str("}\n");
        out
    }
}

fn index_string(index: u32, n: u32) -> String {
    let mut s = String::with_capacity(n as usize);
    for coord in 1..=n {
        s.push(if index >> bitpos(n, coord) & 1 == 1 { '1' } else { '0' });
    }
    s
}

/// Builds the iterated reduction of `cc` for the direction set `s` of size
/// k-1, where k is the collection's cube dimension.
///
/// Non-complete collections are accepted for diagnostics; for a complete
/// collection the result is always a forest, and a cycle is reported as a
/// structural error in the input.
pub fn iterated_reduction(cc: &CubeCollection, s: &[u32]) -> Result<IteratedReductionGraph> {
    let n = cc.n();
    let d = cc.k();
    if d == 0 || s.len() as u32 != d - 1 {
        return Err(Error::BadParameter { name: "s", reason: "must contain exactly k-1 directions" });
    }
    let mut directions = s.to_vec();
    directions.sort_unstable();
    directions.dedup();
    if directions.len() != s.len() {
        return Err(Error::BadParameter { name: "s", reason: "contains duplicates" });
    }
    for &c in &directions {
        crate::cube::check_coord(c, n)?;
    }
    let mut s_mask = 0u32;
    for &c in &directions {
        s_mask |= 1 << bitpos(n, c);
    }

    let ambient = n - d + 1;
    let mut node_ids: BTreeMap<u32, usize> = BTreeMap::new();
    let mut raw_edges: Vec<(u32, u32, u32, Subcube)> = Vec::new();
    for cube in cc.cubes() {
        let free = cube.free_mask();
        if free & s_mask != s_mask {
            continue;
        }
        let extra = free & !s_mask;
        debug_assert_eq!(extra.count_ones(), 1);
        let extra_coord = n - extra.trailing_zeros();
        // the two faces with free set exactly S, projected out of S;
        // ascending coordinates have descending bit positions, so dropping in
        // that order keeps later positions valid
        let project = |mut idx: u32| {
            for coord in 1..=n {
                if s_mask >> bitpos(n, coord) & 1 == 1 {
                    idx = drop_bit(idx, bitpos(n, coord));
                }
            }
            idx
        };
        let anchor0 = cube.anchor_values();
        let node0 = project(anchor0);
        let node1 = project(anchor0 | extra);
        raw_edges.push((node0, node1, extra_coord, *cube));
        node_ids.entry(node0).or_insert(0);
        node_ids.entry(node1).or_insert(0);
    }
    let nodes: Vec<u32> = node_ids.keys().copied().collect();
    for (i, (_, id)) in node_ids.iter_mut().enumerate() {
        *id = i;
    }
    raw_edges.sort_by_key(|&(_, _, _, cube)| cube);
    let mut dsu = Dsu::new(nodes.len());
    let mut is_forest = true;
    let mut edges = Vec::with_capacity(raw_edges.len());
    for (a, b, direction, cube) in raw_edges {
        let ia = node_ids[&a];
        let ib = node_ids[&b];
        if !dsu.union(ia, ib) {
            is_forest = false; // parallel edges count as cycles
        }
        edges.push(IrEdge { a: ia, b: ib, direction, cube });
    }
    if !is_forest && cc.is_complete() {
        return Err(Error::InvariantViolation {
            what: "a complete collection produced a cyclic iterated reduction",
        });
    }
    Ok(IteratedReductionGraph {
        directions,
        ambient,
        component_count: dsu.components(),
        nodes,
        edges,
        is_forest,
    })
}

/// Tree test for maximum classes: a complete collection's union is maximum
/// exactly when all its iterated reductions are connected.
pub fn is_maximum_via_trees(cc: &CubeCollection) -> Result<bool> {
    if !cc.is_complete() {
        return Err(Error::NotComplete);
    }
    let d = cc.k();
    if d == 0 {
        return Ok(true); // a single vertex
    }
    for s in Combinations::new(cc.n(), d - 1) {
        if !iterated_reduction(cc, &s)?.is_tree() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique d-complete collection whose union is the given d-maximum class:
/// exactly one d-cube per direction set lies inside it.
///
/// A direction set with zero or two-or-more embedded cubes, or a collection
/// that fails to cover the class, proves the input was not maximum.
pub fn unique_complete_collection(class: &ConceptClass) -> Result<CubeCollection> {
    let n = class.n();
    let d = crate::vc::vc_dim_nonempty(class)?;
    let mut cubes = Vec::with_capacity(binomial(n, d) as usize);
    for free in Combinations::new(n, d) {
        let mut found: Option<Subcube> = None;
        for pattern in 0..1u64 << (n - d) {
            let cube = Subcube::from_free_coords(n, &free, pattern as u32)?;
            if cube.is_inside(class) {
                if found.is_some() {
                    return Err(Error::NotMaximum { reason: "two cubes share a direction set" });
                }
                found = Some(cube);
            }
        }
        match found {
            Some(cube) => cubes.push(cube),
            None => return Err(Error::NotMaximum { reason: "a direction set has no embedded cube" }),
        }
    }
    let cc = CubeCollection::new(n, d, cubes)?;
    if cc.union_class() != *class {
        return Err(Error::NotMaximum { reason: "the one-cube-per-direction collection does not cover the class" });
    }
    Ok(cc)
}

/// Bipartite incidence graph between the d-cubes of a collection and their
/// (d-1)-faces.
#[derive(Clone, Debug)]
pub struct FaceGraph {
    pub cubes: Vec<Subcube>,
    /// Distinct (d-1)-faces, canonical order.
    pub faces: Vec<Subcube>,
    /// (cube index, face index) incidences.
    pub edges: Vec<(usize, usize)>,
}

impl FaceGraph {
    /// The subgraph induced by cubes and faces whose free directions contain
    /// all of `s`, as (cube index, face index) pairs.
    pub fn induced_by_directions(&self, s: &[u32]) -> Vec<(usize, usize)> {
        let contains_all = |cube: &Subcube| {
            s.iter().all(|&c| cube.is_free(c).unwrap_or(false))
        };
        self.edges
            .iter()
            .copied()
            .filter(|&(ci, fi)| contains_all(&self.cubes[ci]) && contains_all(&self.faces[fi]))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph face_graph {\n");
        for cube in &self.cubes {
            out.push_str(&format!("  \"{cube}\" [shape=box];\n"));
        }
        for face in &self.faces {
            out.push_str(&format!("  \"{face}\";\n"));
        }
        for &(ci, fi) in &self.edges {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.cubes[ci], self.faces[fi]));
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the face graph of a collection: one node per member cube, one per
/// distinct codimension-one face, an edge for each incidence.
pub fn face_graph(cc: &CubeCollection) -> FaceGraph {
    let cubes: Vec<Subcube> = cc.cubes().to_vec();
    let mut face_set: BTreeSet<Subcube> = BTreeSet::new();
    for cube in &cubes {
        for face in codim_one_faces(cube) {
            face_set.insert(face);
        }
    }
    let faces: Vec<Subcube> = face_set.into_iter().collect();
    let index: BTreeMap<Subcube, usize> = faces.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut edges = Vec::new();
    for (ci, cube) in cubes.iter().enumerate() {
        for face in codim_one_faces(cube) {
            edges.push((ci, index[&face]));
        }
    }
    FaceGraph { cubes, faces, edges }
}

/// The 2*dim faces obtained by anchoring one free coordinate of `cube`.
fn codim_one_faces(cube: &Subcube) -> Vec<Subcube> {
    let n = cube.n();
    let mut out = Vec::with_capacity(2 * cube.dim() as usize);
    for coord in 1..=n {
        if cube.is_free(coord).unwrap() {
            let pos = bitpos(n, coord);
            for level in 0..2u32 {
                let mask = cube.anchor_mask() | 1 << pos;
                let values = cube.anchor_values() | level << pos;
                out.push(Subcube::new(n, mask, values).unwrap());
            }
        }
    }
    out
}
