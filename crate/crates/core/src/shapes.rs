//! Brute-force census of unicursal star polygons up to plane rotation.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::classify::{is_star_path, shape_class, StarClass, Symmetry};
use crate::error::{Error, Result};
use crate::path::{edge_matrix_of_nodes, EdgeMatrix, Path};

pub const MIN_CENSUS_LEN: usize = 5;
pub const MAX_CENSUS_LEN: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    pub key: EdgeMatrix,
    pub class: StarClass,
    pub symmetry: Symmetry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeCensus {
    pub len: usize,
    /// Sorted by key.
    pub shapes: Vec<Shape>,
}

impl ShapeCensus {
    pub fn count(&self, class: StarClass) -> usize {
        self.shapes.iter().filter(|s| s.class == class).count()
    }

    pub fn asymmetric(&self) -> usize {
        self.count(StarClass::Asymmetric)
    }

    pub fn symmetric(&self) -> usize {
        self.count(StarClass::Symmetric)
    }

    pub fn perfect(&self) -> usize {
        self.count(StarClass::Perfect)
    }

    pub fn total(&self) -> usize {
        self.shapes.len()
    }

    /// `(asymmetric, symmetric, perfect, total)`.
    pub fn row(&self) -> (usize, usize, usize, usize) {
        (
            self.asymmetric(),
            self.symmetric(),
            self.perfect(),
            self.total(),
        )
    }
}

/// The rotation-invariant key of a star path's polygon.
pub fn shape_of(path: &Path) -> Result<EdgeMatrix> {
    if !is_star_path(&path.steps()) {
        return Err(Error::NotAStar);
    }
    Ok(path.edge_matrix().canonical())
}

/// Enumerates every star path starting at node 0 and buckets the polygons
/// by canonical edge matrix. Fixing the start only removes rotated copies;
/// the canonical key absorbs the remaining duplicates (other start nodes
/// and the reversed direction).
pub fn enumerate_star_shapes(len: usize) -> Result<ShapeCensus> {
    if !(MIN_CENSUS_LEN..=MAX_CENSUS_LEN).contains(&len) {
        return Err(Error::UnsupportedLength {
            len,
            min: MIN_CENSUS_LEN,
            max: MAX_CENSUS_LEN,
        });
    }
    // second node must not neighbour node 0
    let branches: Vec<usize> = (2..len - 1).collect();

    #[cfg(feature = "parallel")]
    let keys: BTreeSet<EdgeMatrix> = {
        use rayon::prelude::*;
        branches
            .into_par_iter()
            .map(|second| scan_branch(len, second))
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            })
            .into_iter()
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let keys: BTreeSet<EdgeMatrix> = branches
        .into_iter()
        .flat_map(|second| scan_branch(len, second))
        .collect();

    let shapes = keys
        .into_iter()
        .map(|key| {
            let (class, symmetry) = shape_class(&key);
            Shape {
                key,
                class,
                symmetry,
            }
        })
        .collect();
    Ok(ShapeCensus { len, shapes })
}

fn scan_branch(len: usize, second: usize) -> HashSet<EdgeMatrix> {
    let mut keys = HashSet::new();
    let mut nodes = vec![0; len];
    nodes[1] = second;
    let used = 1u32 | (1 << second);
    extend(&mut nodes, 2, used, &mut keys);
    keys
}

#[inline]
fn adjacent(a: usize, b: usize, len: usize) -> bool {
    let d = a.abs_diff(b);
    d == 1 || d == len - 1
}

fn extend(nodes: &mut [usize], depth: usize, used: u32, keys: &mut HashSet<EdgeMatrix>) {
    let len = nodes.len();
    let prev = nodes[depth - 1];
    if depth == len {
        if !adjacent(prev, nodes[0], len) {
            keys.insert(edge_matrix_of_nodes(nodes).canonical());
        }
        return;
    }
    for next in 1..len {
        if used & (1 << next) != 0 || adjacent(prev, next, len) {
            continue;
        }
        nodes[depth] = next;
        extend(nodes, depth + 1, used | (1 << next), keys);
    }
}

/// A path drawing the polygon encoded by `edges`, starting at node 0.
pub fn representative_path(edges: &EdgeMatrix) -> Option<Path> {
    let len = edges.len();
    let neighbour = |node: usize, entry: i32| {
        let step = if entry == 0 {
            (len / 2) as i64
        } else {
            i64::from(entry)
        };
        (node as i64 + step).rem_euclid(len as i64) as usize
    };
    let mut nodes = Vec::with_capacity(len);
    let (mut prev, mut cur) = (usize::MAX, 0);
    for _ in 0..len {
        nodes.push(cur);
        let [a, b] = edges.columns()[cur];
        let (na, nb) = (neighbour(cur, a), neighbour(cur, b));
        let next = if nb != prev { nb } else { na };
        (prev, cur) = (cur, next);
    }
    if cur != 0 {
        return None;
    }
    let path = Path::new(nodes).ok()?;
    (path.edge_matrix() == *edges).then_some(path)
}
