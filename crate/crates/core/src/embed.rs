//! Embedding machinery: exhaustive search for all maximum superclasses of a
//! prescribed VC dimension, the constructive embedding over a maximum
//! projection, and deficiency-driven embedding.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::cube::{bitpos, insert_bit, ConceptClass, CubeCollection};
use crate::error::{Error, Result};
use crate::lift::{assemble, closed_below_collection, split_components};
use crate::reductions::{project_drop, split_along};
use crate::vc::{deficiency, is_maximum, vc_dim_nonempty, vc_dimension};

/// Default cap on queue pushes for the superclass search. The lifting queue
/// can grow exponentially with the cube dimension; the cap keeps runs
/// deterministic and bounded. Results are only reported for complete runs.
pub const DEFAULT_SEARCH_BUDGET: u64 = 200_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub popped: u64,
    pub pushed: u64,
    pub pruned: u64,
}

/// Outcome of the maximum-superclass search.
#[derive(Clone, Debug)]
pub struct EmbeddingResult {
    /// d + k, the VC dimension every reported class has.
    pub target_vc: u32,
    /// All (d+k)-maximum classes containing the input, canonically ordered.
    /// Empty when `truncated` is set: a capped run reports no classes.
    pub classes: Vec<ConceptClass>,
    pub stats: SearchStats,
    /// True when the push budget ran out before the search finished.
    pub truncated: bool,
    /// The maximal class the search actually ran on (the input, greedily
    /// enlarged in canonical vertex order without raising its VC dimension).
    pub enlarged: ConceptClass,
}

/// Greedily adds complement vertices, in ascending vertex order, that do not
/// raise the VC dimension, until none can be added.
pub fn maximal_enlargement(class: &ConceptClass) -> Result<ConceptClass> {
    let d = vc_dim_nonempty(class)?;
    if class.is_full() {
        return Ok(class.clone());
    }
    let mut current = class.clone();
    'outer: loop {
        for v in current.complement().indices() {
            if !crate::vc::exists_shattered(&current.with_vertex(v), d + 1) {
                current = current.with_vertex(v);
                continue 'outer;
            }
        }
        return Ok(current);
    }
}

/// Finds every (d+k)-maximum class containing `class`, where d is the class's
/// VC dimension.
///
/// The search works on the complement side. The input is first enlarged to a
/// maximal class, so that its complement is the union of an
/// (n-d-1)-complete collection. A queue of (n-d-k-1)-complete collections is
/// seeded with the closed-below one; each coordinate is processed in
/// ascending order by splitting every queued collection along it and
/// re-placing each connected component at every level whose projection onto
/// the processed coordinates stays inside the projected complement.
/// Collections with an unplaceable component are discarded. Survivors of the
/// final round are complemented, verified, and returned.
pub fn maximum_embeddings(class: &ConceptClass, k: u32, budget: Option<u64>) -> Result<EmbeddingResult> {
    let n = class.n();
    let d = vc_dim_nonempty(class)?;
    if k == 0 {
        return Err(Error::BadParameter { name: "k", reason: "must be positive" });
    }
    if d + k >= n {
        return Err(Error::BadParameter { name: "k", reason: "must satisfy d + k < n" });
    }
    let enlarged = maximal_enlargement(class)?;
    debug_assert_eq!(vc_dimension(&enlarged), d as i32);
    let compl = enlarged.complement();
    let m = n - d - k - 1;
    let budget = budget.unwrap_or(DEFAULT_SEARCH_BUDGET);

    let mut stats = SearchStats::default();
    let mut truncated = false;
    let mut queue: Vec<CubeCollection> = vec![closed_below_collection(n, m)?];
    'stages: for i in 1..=n {
        let prefix = project_prefix(&compl, i)?;
        let mut next: BTreeMap<ConceptClass, CubeCollection> = BTreeMap::new();
        for cc in queue.drain(..) {
            stats.popped += 1;
            let split = split_components(&cc, i)?;
            // crossing cubes stay at both levels; their restriction to the
            // processed coordinates must already fit
            if !split.crossing.cubes().iter().all(|c| c.prefix_cube(i).is_inside(&prefix)) {
                stats.pruned += 1;
                continue;
            }
            let mut feasible: Vec<Vec<u32>> = Vec::with_capacity(split.components.len());
            let mut dead = false;
            for comp in &split.components {
                let mut levels = Vec::new();
                for level in 0..2u32 {
                    let fits = comp.cubes.iter().all(|c| {
                        c.insert_coord(i, Some(level)).unwrap().prefix_cube(i).is_inside(&prefix)
                    });
                    if fits {
                        levels.push(level);
                    }
                }
                if levels.is_empty() {
                    dead = true;
                    break;
                }
                feasible.push(levels);
            }
            if dead {
                stats.pruned += 1;
                continue;
            }
            // push the cross-product of feasible level choices
            let mut choice: Vec<usize> = vec![0; feasible.len()];
            loop {
                let levels: Vec<u32> =
                    choice.iter().zip(&feasible).map(|(&ci, opts)| opts[ci]).collect();
                let lifted = assemble(&split, i, &levels)?;
                if let alloc::collections::btree_map::Entry::Vacant(e) = next.entry(lifted.union_class()) {
                    e.insert(lifted);
                    stats.pushed += 1;
                    if stats.pushed >= budget {
                        truncated = true;
                        break 'stages;
                    }
                }
                let mut pos = 0;
                loop {
                    if pos == choice.len() {
                        break;
                    }
                    choice[pos] += 1;
                    if choice[pos] < feasible[pos].len() {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == choice.len() {
                    break;
                }
            }
        }
        queue = next.into_values().collect();
    }

    let target_vc = d + k;
    let mut classes = Vec::new();
    if !truncated {
        for cc in &queue {
            let result = cc.union_class().complement();
            let sound = is_maximum(&result)?
                && vc_dimension(&result) == target_vc as i32
                && class.is_subset_of(&result)
                && enlarged.is_subset_of(&result);
            if !sound {
                return Err(Error::InvariantViolation {
                    what: "superclass search produced an unsound candidate",
                });
            }
            classes.push(result);
        }
        classes.sort_unstable();
    }
    Ok(EmbeddingResult { target_vc, classes, stats, truncated, enlarged })
}

/// Projection onto the first `i` coordinates.
fn project_prefix(class: &ConceptClass, i: u32) -> Result<ConceptClass> {
    let n = class.n();
    debug_assert!(i >= 1 && i <= n);
    let shift = n - i;
    let mut out = ConceptClass::empty(i)?;
    for v in class.indices() {
        out.set(v >> shift);
    }
    Ok(out)
}

/// Re-embeds a class of the (g-1)-cube into the g-cube with a new coordinate
/// at position `pos` anchored to `level`.
fn insert_level(class: &ConceptClass, pos: u32, level: u32) -> Result<ConceptClass> {
    let g = class.n() + 1;
    let p = bitpos(g, pos);
    let mut out = ConceptClass::empty(g)?;
    for v in class.indices() {
        out.set(insert_bit(v, p, level & 1));
    }
    Ok(out)
}

/// An (m-1)-maximum subclass of an m-maximum class `q`, in the same cube.
///
/// Built recursively: the reduction A of q along its least coordinate is
/// re-embedded at level 0, and an (m-2)-maximum subclass of A is stacked at
/// level 1. The two layers meet the Pascal identity for the Sauer bound, so
/// the result is maximum.
fn maximum_subclass_shrink(q: &ConceptClass) -> Result<ConceptClass> {
    let m = vc_dim_nonempty(q)?;
    debug_assert!(m >= 1);
    let reduction = split_along(q, 1)?.reduction;
    if m == 1 {
        // the reduction is a single vertex; keep it at level 0
        return insert_level(&reduction, 1, 0);
    }
    let inner = maximum_subclass_shrink(&reduction)?;
    insert_level(&reduction, 1, 0)?.union(&insert_level(&inner, 1, 1)?)
}

/// Constructive embedding: given a class whose projection p(C) after deleting
/// `drop` is d-maximum (d the class's VC dimension), builds a
/// (d+|drop|)-maximum class containing C.
///
/// Coordinates are re-inserted one at a time in reverse order of `drop`. At
/// each step the complement Q of the current maximum class is kept whole at
/// level 0 and an (m-1)-maximum subclass of Q is stacked at level 1 (where m
/// is Q's VC dimension); when Q is a single vertex it is kept at level 0
/// alone. The complement after all re-insertions is the result.
pub fn embed_via_maximum_projection(class: &ConceptClass, drop: &[u32]) -> Result<ConceptClass> {
    let n = class.n();
    let d = vc_dim_nonempty(class)?;
    if drop.is_empty() {
        if !is_maximum(class)? {
            return Err(Error::NotMaximum { reason: "with no dropped coordinates the class itself must be maximum" });
        }
        return Ok(class.clone());
    }
    let projected = project_drop(class, drop)?;
    if vc_dimension(&projected) != d as i32 || !is_maximum(&projected)? {
        return Err(Error::NotMaximum { reason: "the projection of the class must be maximum of the same VC dimension" });
    }

    let mut current = projected;
    for j in (0..drop.len()).rev() {
        let coord = drop[j];
        // coordinates dropped before this one are still absent, so the
        // insertion position is shifted down by those below it
        let absent_below = drop[..j].iter().filter(|&&c| c < coord).count() as u32;
        let pos = coord - absent_below;
        let q = current.complement();
        let layered = if q.is_empty() {
            ConceptClass::empty(current.n() + 1)?
        } else if q.cardinality() == 1 {
            insert_level(&q, pos, 0)?
        } else {
            let shrunk = maximum_subclass_shrink(&q)?;
            debug_assert!(shrunk.is_subset_of(&q));
            insert_level(&q, pos, 0)?.union(&insert_level(&shrunk, pos, 1)?)?
        };
        current = layered.complement();
    }
    if vc_dimension(&current) != (d + drop.len() as u32) as i32
        || !is_maximum(&current)?
        || !class.is_subset_of(&current)
    {
        return Err(Error::InvariantViolation { what: "re-insertion failed to produce a maximum superclass" });
    }
    debug_assert_eq!(current.n(), n);
    Ok(current)
}

/// The least coordinate whose deletion keeps the VC dimension and strictly
/// reduces the deficiency. Such a coordinate always exists for non-maximum
/// classes; not finding one is reported as an invariant violation.
pub fn find_deficiency_reducing_coordinate(class: &ConceptClass) -> Result<u32> {
    let report = deficiency(class)?;
    if report.deficiency == 0 {
        return Err(Error::BadParameter { name: "class", reason: "is already maximum; nothing to reduce" });
    }
    let n = class.n();
    for x in 1..=n {
        let p = project_drop(class, &[x])?;
        if vc_dimension(&p) == report.d as i32 && deficiency(&p)?.deficiency < report.deficiency {
            return Ok(x);
        }
    }
    Err(Error::InvariantViolation { what: "no single-coordinate projection reduces the deficiency" })
}

/// A maximum superclass found by deficiency reduction.
#[derive(Clone, Debug)]
pub struct DeficiencyEmbedding {
    pub superclass: ConceptClass,
    /// VC dimension of the superclass: d plus the number of drops, at most
    /// d plus the input's deficiency.
    pub vc: u32,
    /// The projection chain, as 1-based coordinates of the original cube in
    /// the order they were dropped.
    pub dropped: Vec<u32>,
}

/// Repeatedly projects along deficiency-reducing coordinates until the image
/// is maximum (at most D projections for a class of deficiency D), then
/// unwinds with the constructive embedding.
pub fn embed_by_deficiency(class: &ConceptClass) -> Result<DeficiencyEmbedding> {
    let d = vc_dim_nonempty(class)?;
    let d_total = deficiency(class)?.deficiency;
    let mut remaining: Vec<u32> = (1..=class.n()).collect();
    let mut dropped: Vec<u32> = Vec::new();
    let mut image = class.clone();
    while !is_maximum(&image)? {
        if dropped.len() as u64 >= d_total {
            return Err(Error::InvariantViolation {
                what: "deficiency reduction took more steps than the initial deficiency",
            });
        }
        let x = find_deficiency_reducing_coordinate(&image)?;
        dropped.push(remaining.remove(x as usize - 1));
        image = project_drop(&image, &[x])?;
    }
    if dropped.is_empty() {
        return Ok(DeficiencyEmbedding { superclass: class.clone(), vc: d, dropped });
    }
    let superclass = embed_via_maximum_projection(class, &dropped)?;
    let vc = d + dropped.len() as u32;
    Ok(DeficiencyEmbedding { superclass, vc, dropped })
}
