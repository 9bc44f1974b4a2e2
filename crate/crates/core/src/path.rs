//! Integer arithmetic on paths around the letter circle.
//!
//! A path lists, for each letter of the second word, the node (position in the
//! first word) it came from. Everything downstream works on the signed circular
//! steps between consecutive nodes rather than on raw position differences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `0..N` describing how the second word is traced over the
/// first word's letter circle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Path(Vec<usize>);

impl Path {
    /// Validates that `nodes` is a permutation of `0..nodes.len()` with at least two entries.
    pub fn new(nodes: Vec<usize>) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::PathTooShort {
                len: nodes.len(),
                min: 2,
            });
        }
        if !is_permutation(&nodes) {
            let len = nodes.len();
            return Err(Error::NotPermutation { nodes, len });
        }
        Ok(Path(nodes))
    }

    pub fn identity(len: usize) -> Result<Self> {
        Path::new((0..len).collect())
    }

    pub fn nodes(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_nodes(self) -> Vec<usize> {
        self.0
    }

    pub fn differences(&self) -> DiffVector {
        path_differences(self)
    }

    pub fn steps(&self) -> StepVector {
        steps_of_nodes(&self.0)
    }

    pub fn edge_matrix(&self) -> EdgeMatrix {
        edge_matrix(self)
    }

    /// Adds `offset` to every node label modulo `N`, i.e. rotates the drawing in the plane.
    pub fn relabeled(&self, offset: usize) -> Path {
        let n = self.len();
        Path(self.0.iter().map(|&p| (p + offset) % n).collect())
    }
}

impl TryFrom<Vec<usize>> for Path {
    type Error = Error;

    fn try_from(nodes: Vec<usize>) -> Result<Self> {
        Path::new(nodes)
    }
}

impl From<Path> for Vec<usize> {
    fn from(path: Path) -> Self {
        path.0
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

pub(crate) fn is_permutation(nodes: &[usize]) -> bool {
    let mut seen = vec![false; nodes.len()];
    for &p in nodes {
        if p >= nodes.len() || std::mem::replace(&mut seen[p], true) {
            return false;
        }
    }
    true
}

/// Raw differences `p[n+1] - p[n]`, wrapping from the last node back to the first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiffVector(Vec<i32>);

impl DiffVector {
    /// Each entry must be nonzero and lie in `[-(N-1), N-1]`.
    pub fn new(diffs: Vec<i32>) -> Result<Self> {
        let len = diffs.len();
        if let Some(&diff) = diffs
            .iter()
            .find(|&&d| d == 0 || d.unsigned_abs() as usize >= len)
        {
            return Err(Error::InvalidDifference { diff, len });
        }
        Ok(DiffVector(diffs))
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Signed circular steps, each in `(-N/2, N/2]` and never zero. Positive is clockwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepVector(Vec<i32>);

impl StepVector {
    pub fn new(steps: Vec<i32>) -> Result<Self> {
        let len = steps.len();
        if let Some(&step) = steps.iter().find(|&&s| !step_in_range(s, len)) {
            return Err(Error::InvalidStep { step, len });
        }
        Ok(StepVector(steps))
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }
}

impl fmt::Display for StepVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

fn step_in_range(step: i32, len: usize) -> bool {
    let twice = 2 * i64::from(step);
    let len = len as i64;
    step != 0 && twice <= len && twice > -len
}

pub fn path_differences(path: &Path) -> DiffVector {
    let nodes = path.nodes();
    let n = nodes.len();
    DiffVector(
        (0..n)
            .map(|k| nodes[(k + 1) % n] as i32 - nodes[k] as i32)
            .collect(),
    )
}

/// Maps a raw difference onto the unique step with the same residue modulo `len`.
#[inline]
pub(crate) fn step_of(diff: i32, len: usize) -> i32 {
    let len = len as i32;
    let twice = 2 * diff.abs();
    if twice < len {
        diff
    } else if twice == len {
        len / 2
    } else if diff > 0 {
        diff - len
    } else {
        diff + len
    }
}

pub fn steps_from_diffs(diffs: &DiffVector) -> StepVector {
    let len = diffs.len();
    StepVector(diffs.0.iter().map(|&d| step_of(d, len)).collect())
}

pub(crate) fn steps_of_nodes(nodes: &[usize]) -> StepVector {
    let n = nodes.len();
    StepVector(
        (0..n)
            .map(|k| step_of(nodes[(k + 1) % n] as i32 - nodes[k] as i32, n))
            .collect(),
    )
}

/// Walks `steps` from `start`, returning the visited nodes. The result is not
/// checked for being a permutation; a revisit shows up as a repeated node.
pub fn apply_steps(start: usize, steps: &StepVector) -> Vec<usize> {
    let n = steps.len() as i64;
    let mut node = start as i64;
    let mut nodes = Vec::with_capacity(steps.len());
    for &s in steps.as_slice() {
        nodes.push(node as usize);
        node = (node + i64::from(s)).rem_euclid(n);
    }
    nodes
}

/// For each node label, the two sorted steps leaving that node along the
/// polygon. Diameters (step `N/2`) are stored as `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeMatrix(Vec<[i32; 2]>);

impl EdgeMatrix {
    /// Builds a matrix from explicit columns, sorting each one.
    pub fn from_columns(cols: Vec<[i32; 2]>) -> Self {
        EdgeMatrix(cols.into_iter().map(sorted_pair).collect())
    }

    pub fn columns(&self) -> &[[i32; 2]] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Circular shift: column `n` of the result is column `(n + k) mod N` of `self`.
    pub fn shifted(&self, k: usize) -> EdgeMatrix {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut cols = Vec::with_capacity(n);
        cols.extend_from_slice(&self.0[k..]);
        cols.extend_from_slice(&self.0[..k]);
        EdgeMatrix(cols)
    }

    /// Mirror image across the axis that maps node `m` to node `(axis - m) mod N`.
    pub fn reflected(&self, axis: usize) -> EdgeMatrix {
        let n = self.0.len();
        EdgeMatrix(
            (0..n)
                .map(|m| negated(self.0[(axis % n + n - m) % n]))
                .collect(),
        )
    }

    /// Whether the reflection through `axis` leaves the matrix unchanged, without allocating.
    pub(crate) fn is_fixed_by_reflection(&self, axis: usize) -> bool {
        let n = self.0.len();
        (0..n).all(|m| self.0[m] == negated(self.0[(axis % n + n - m) % n]))
    }

    /// Whether shifting by `k` columns leaves the matrix unchanged, without allocating.
    pub(crate) fn is_fixed_by_shift(&self, k: usize) -> bool {
        let n = self.0.len();
        (0..n).all(|m| self.0[m] == self.0[(m + k) % n])
    }

    /// The lexicographically least circular shift.
    pub fn canonical(&self) -> EdgeMatrix {
        self.shifted(least_rotation(&self.0))
    }

    /// Renders the matrix as `e1:e2` column pairs joined by `|`.
    pub fn to_key_string(&self) -> String {
        let cols: Vec<String> = self.0.iter().map(|[a, b]| format!("{a}:{b}")).collect();
        cols.join("|")
    }
}

impl fmt::Display for EdgeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_key_string())
    }
}

#[inline]
fn sorted_pair([a, b]: [i32; 2]) -> [i32; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

#[inline]
fn negated([a, b]: [i32; 2]) -> [i32; 2] {
    [-b, -a]
}

#[inline]
fn edge_entry(step: i32, len: usize) -> i32 {
    if 2 * step.unsigned_abs() as usize == len {
        0
    } else {
        step
    }
}

pub fn edge_matrix(path: &Path) -> EdgeMatrix {
    edge_matrix_of_nodes(path.nodes())
}

pub(crate) fn edge_matrix_of_nodes(nodes: &[usize]) -> EdgeMatrix {
    let n = nodes.len();
    let mut cols = vec![[0; 2]; n];
    let mut prev = edge_entry(step_of(nodes[0] as i32 - nodes[n - 1] as i32, n), n);
    for k in 0..n {
        let next = edge_entry(step_of(nodes[(k + 1) % n] as i32 - nodes[k] as i32, n), n);
        cols[nodes[k]] = sorted_pair([next, -prev]);
        prev = next;
    }
    EdgeMatrix(cols)
}

pub fn canonical_shape_key(edges: &EdgeMatrix) -> EdgeMatrix {
    edges.canonical()
}

/// Start index of the lexicographically least rotation (Booth-style two-pointer scan).
pub(crate) fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let at = |i: usize| &s[i % n];
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        match at(i + k).cmp(at(j + k)) {
            std::cmp::Ordering::Equal => k += 1,
            std::cmp::Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            std::cmp::Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("[")?;
    for (i, item) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    f.write_str("]")
}
