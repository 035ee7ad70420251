//! Shifting toward closed-below form and its inverse, lifting: splitting a
//! cube collection along a coordinate into crossing cubes and liftable
//! components, and enumerating all maximum classes by iterated lifts from the
//! canonical closed-below class.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::cube::{bitpos, ConceptClass, CubeCollection, Subcube};
use crate::error::{Error, Result};
use crate::util::{Combinations, Dsu};
use crate::vc::binomial;

/// Moves every vertex with coordinate `x` set to its x=0 partner unless that
/// partner is already present. Preserves cardinality.
pub fn shift_down(class: &ConceptClass, x: u32) -> Result<ConceptClass> {
    let n = class.n();
    crate::cube::check_coord(x, n)?;
    let bit = 1u32 << bitpos(n, x);
    let mut out = ConceptClass::empty(n)?;
    for v in class.indices() {
        let blocked = v & bit == 0 || class.contains(v & !bit);
        out.set(if blocked { v } else { v & !bit });
    }
    Ok(out)
}

/// Round-robin shifting over coordinates 1..=n until a full pass changes
/// nothing. The result is closed-below with the same cardinality. Terminates
/// because every effective move strictly decreases the total weight.
pub fn shift_to_closed_below(class: &ConceptClass) -> ConceptClass {
    let n = class.n();
    let mut current = class.clone();
    loop {
        let mut changed = false;
        for x in 1..=n {
            let next = shift_down(&current, x).unwrap();
            if next != current {
                changed = true;
                current = next;
            }
        }
        if !changed {
            return current;
        }
    }
}

/// The canonical closed-below maximum class: all vertices of weight at most d.
pub fn closed_below_maximum(n: u32, d: u32) -> Result<ConceptClass> {
    crate::cube::check_dim(n)?;
    if d > n {
        return Err(Error::BadParameter { name: "d", reason: "exceeds n" });
    }
    ConceptClass::from_indices(n, (0..1u64 << n).map(|v| v as u32).filter(|v| v.count_ones() <= d))
}

/// The unique complete collection of the closed-below maximum class: for each
/// direction set, the cube anchored all-zero off it.
pub fn closed_below_collection(n: u32, d: u32) -> Result<CubeCollection> {
    crate::cube::check_dim(n)?;
    if d > n {
        return Err(Error::BadParameter { name: "d", reason: "exceeds n" });
    }
    let cubes: Result<Vec<Subcube>> =
        Combinations::new(n, d).map(|free| Subcube::from_free_coords(n, &free, 0)).collect();
    CubeCollection::new(n, d, cubes?)
}

/// A group of projected cubes that lift together: they are chained by shared
/// vertices outside the reduction class.
#[derive(Clone, Debug)]
pub struct LiftComponent {
    /// Cubes in the (n-1)-cube, canonical order.
    pub cubes: Vec<Subcube>,
    /// Union of the cubes' vertices minus the reduction class.
    pub vertex_support: ConceptClass,
}

/// Result of splitting a collection along a coordinate.
#[derive(Clone, Debug)]
pub struct ComponentSplit {
    /// The cubes free in the split coordinate, unchanged in the n-cube. Their
    /// projections are the reduction cubes.
    pub crossing: CubeCollection,
    /// Non-crossing cubes, projected along the coordinate and grouped.
    pub components: Vec<LiftComponent>,
    /// Union of the projected crossing cubes, a class of the (n-1)-cube.
    pub reduction_class: ConceptClass,
}

/// Splits `cc` along coordinate `x`: cubes free in `x` cross both levels and
/// project onto the reduction; the remaining cubes are projected and grouped
/// into components. Two projected cubes belong to the same component exactly
/// when a chain of shared vertices outside the reduction class links them.
pub fn split_components(cc: &CubeCollection, x: u32) -> Result<ComponentSplit> {
    let n = cc.n();
    crate::cube::check_coord(x, n)?;
    let mut crossing = Vec::new();
    let mut projected = Vec::new();
    for cube in cc.cubes() {
        if cube.is_free(x)? {
            crossing.push(*cube);
        } else {
            projected.push(cube.project_out(x)?);
        }
    }
    let mut reduction_class = ConceptClass::empty(n - 1)?;
    for cube in &crossing {
        let proj = cube.project_out(x)?;
        reduction_class = reduction_class.union(&proj.to_class())?;
    }

    let mut dsu = Dsu::new(projected.len());
    for i in 0..projected.len() {
        for j in i + 1..projected.len() {
            if let Some(meet) = projected[i].intersect(&projected[j]) {
                if meet.vertex_indices().iter().any(|&v| !reduction_class.contains(v)) {
                    dsu.union(i, j);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Subcube>> = BTreeMap::new();
    for (i, cube) in projected.iter().enumerate() {
        groups.entry(dsu.find(i)).or_default().push(*cube);
    }
    let mut components = Vec::new();
    for (_, mut cubes) in groups {
        cubes.sort_unstable();
        let mut support = ConceptClass::empty(n - 1)?;
        for cube in &cubes {
            support = support.union(&cube.to_class())?;
        }
        let vertex_support = support.difference(&reduction_class)?;
        components.push(LiftComponent { cubes, vertex_support });
    }
    // deterministic component order
    components.sort_by(|a, b| a.cubes.cmp(&b.cubes));
    let k = cc.k();
    Ok(ComponentSplit {
        crossing: CubeCollection::new(n, k, crossing)?,
        components,
        reduction_class,
    })
}

/// Reassembles a collection from a split: crossing cubes stay, component `i`
/// is re-embedded with coordinate `x` anchored at `levels[i]`.
pub(crate) fn assemble(split: &ComponentSplit, x: u32, levels: &[u32]) -> Result<CubeCollection> {
    debug_assert_eq!(levels.len(), split.components.len());
    let n = split.crossing.n();
    let k = split.crossing.k();
    let mut cubes = Vec::with_capacity(binomial(n, k) as usize);
    cubes.extend_from_slice(split.crossing.cubes());
    for (component, &level) in split.components.iter().zip(levels) {
        for cube in &component.cubes {
            cubes.push(cube.insert_coord(x, Some(level))?);
        }
    }
    CubeCollection::new(n, k, cubes)
}

/// All d-maximum classes of the n-cube, deduplicated and in canonical order.
///
/// Starting from the closed-below collection, every coordinate is processed
/// in ascending order; at each step each queued collection is split and its
/// components are re-placed at every combination of levels. Each output is
/// verified against the Sauer bound before being returned.
pub fn enumerate_maximum_classes(n: u32, d: u32) -> Result<Vec<ConceptClass>> {
    if n > 5 {
        return Err(Error::BudgetExceeded { what: "maximum-class enumeration is capped at n <= 5" });
    }
    if d > n {
        return Err(Error::BadParameter { name: "d", reason: "exceeds n" });
    }
    let mut queue: BTreeMap<ConceptClass, CubeCollection> = BTreeMap::new();
    let start = closed_below_collection(n, d)?;
    queue.insert(start.union_class(), start);
    for x in 1..=n {
        let mut next: BTreeMap<ConceptClass, CubeCollection> = BTreeMap::new();
        for (_, cc) in queue {
            let split = split_components(&cc, x)?;
            for_each_level_choice(split.components.len(), &mut |levels| {
                let lifted = assemble(&split, x, levels)?;
                next.entry(lifted.union_class()).or_insert(lifted);
                Ok(())
            })?;
        }
        queue = next;
    }
    let classes: Vec<ConceptClass> = queue.into_keys().collect();
    for class in &classes {
        if !crate::vc::is_maximum(class)? || crate::vc::vc_dimension(class) != d as i32 {
            return Err(Error::InvariantViolation { what: "a lifted class failed the Sauer equality check" });
        }
    }
    Ok(classes)
}

/// Runs `f` on every 0/1 level vector of the given length.
pub(crate) fn for_each_level_choice<F>(len: usize, f: &mut F) -> Result<()>
where
    F: FnMut(&[u32]) -> Result<()>,
{
    let mut levels = alloc::vec![0u32; len];
    loop {
        f(&levels)?;
        // odometer increment
        let mut i = 0;
        loop {
            if i == len {
                return Ok(());
            }
            if levels[i] == 0 {
                levels[i] = 1;
                break;
            }
            levels[i] = 0;
            i += 1;
        }
    }
}
