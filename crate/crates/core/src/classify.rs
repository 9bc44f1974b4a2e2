//! Star detection, perfection, symmetry orders and path selection.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::enumerate::{check_cap, for_each_path, AnagramPair};
use crate::error::{Error, Result};
use crate::path::{edge_matrix_of_nodes, step_of, EdgeMatrix, Path, StepVector};

/// Shortest word that can form a star.
pub const MIN_STAR_LEN: usize = 5;

/// Ordered from worst to best.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarClass {
    NonStar,
    Asymmetric,
    Symmetric,
    Perfect,
}

impl StarClass {
    pub const ALL: [StarClass; 4] = [
        StarClass::NonStar,
        StarClass::Asymmetric,
        StarClass::Symmetric,
        StarClass::Perfect,
    ];

    pub const STARS: [StarClass; 3] = [
        StarClass::Asymmetric,
        StarClass::Symmetric,
        StarClass::Perfect,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StarClass::NonStar => "non-star",
            StarClass::Asymmetric => "asymmetric",
            StarClass::Symmetric => "symmetric",
            StarClass::Perfect => "perfect",
        }
    }

    pub fn is_star(self) -> bool {
        self != StarClass::NonStar
    }
}

impl fmt::Display for StarClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StarClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        StarClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown star class {s:?}"))
    }
}

/// Rotational and reflective symmetry orders of a star polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symmetry {
    pub rotational: u32,
    pub reflective: u32,
}

impl Symmetry {
    pub fn of(edges: &EdgeMatrix) -> Symmetry {
        Symmetry {
            rotational: rotational_order(edges),
            reflective: reflective_order(edges),
        }
    }

    pub fn total(self) -> u32 {
        self.rotational + self.reflective
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: StarClass,
    /// `None` for non-stars, whose symmetry is never computed.
    pub symmetry: Option<Symmetry>,
    pub path: Path,
    /// The constant step `S` of a perfect star.
    pub perfect_step: Option<i32>,
}

impl Classification {
    pub fn o_rot(&self) -> Option<u32> {
        self.symmetry.map(|s| s.rotational)
    }

    pub fn o_ref(&self) -> Option<u32> {
        self.symmetry.map(|s| s.reflective)
    }

    /// `L = |S|` for perfect stars.
    pub fn edge_length(&self) -> Option<u32> {
        self.perfect_step.map(i32::unsigned_abs)
    }

    /// Tie-break score: `O_rot + O_ref`, with undetermined orders counting as -1 each.
    pub fn score(&self) -> i64 {
        self.symmetry.map_or(-2, |s| i64::from(s.total()))
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.class.as_str())?;
        if let Some(sym) = self.symmetry {
            write!(f, ", O_rot={}, O_ref={}", sym.rotational, sym.reflective)?;
        }
        if let Some(s) = self.perfect_step {
            write!(f, ", S={s}")?;
        }
        Ok(())
    }
}

pub fn is_star_path(steps: &StepVector) -> bool {
    steps.as_slice().iter().all(|s| s.abs() != 1)
}

/// The constant step `S` when every step equals it and `|S| > 1`.
pub fn is_perfect_path(steps: &StepVector) -> Option<i32> {
    let (&first, rest) = steps.as_slice().split_first()?;
    (first.abs() > 1 && rest.iter().all(|&s| s == first)).then_some(first)
}

/// `N / K` for the least column shift `K` that reproduces the matrix.
pub fn rotational_order(edges: &EdgeMatrix) -> u32 {
    let n = edges.len();
    if n == 0 {
        return 1;
    }
    let period = (1..=n)
        .filter(|&k| n.is_multiple_of(k))
        .find(|&k| edges.is_fixed_by_shift(k))
        .unwrap_or(n);
    (n / period) as u32
}

/// Number of mirror axes. Axis `c` maps node `m` to `(c - m) mod N`; the
/// matrix is symmetric about it when each column equals the negated, re-sorted
/// column of its mirror node. Nodes on the axis are their own mirror, which
/// reduces to `e1 = -e2`.
pub fn reflective_order(edges: &EdgeMatrix) -> u32 {
    (0..edges.len())
        .filter(|&axis| edges.is_fixed_by_reflection(axis))
        .count() as u32
}

/// Class of an abstract star shape from its edge matrix.
pub fn shape_class(edges: &EdgeMatrix) -> (StarClass, Symmetry) {
    let sym = Symmetry::of(edges);
    let class = if sym.rotational as usize == edges.len() {
        StarClass::Perfect
    } else if sym.total() > 1 {
        StarClass::Symmetric
    } else {
        StarClass::Asymmetric
    };
    (class, sym)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Verdict {
    pub class: StarClass,
    pub symmetry: Option<Symmetry>,
    pub perfect_step: Option<i32>,
}

impl Verdict {
    fn score(&self) -> i64 {
        self.symmetry.map_or(-2, |s| i64::from(s.total()))
    }
}

/// Classifies raw path nodes, skipping allocation for the common non-star case.
pub(crate) fn judge(nodes: &[usize]) -> Verdict {
    let n = nodes.len();
    let step_at = |k: usize| step_of(nodes[(k + 1) % n] as i32 - nodes[k] as i32, n);
    if (0..n).any(|k| step_at(k).abs() == 1) {
        return Verdict {
            class: StarClass::NonStar,
            symmetry: None,
            perfect_step: None,
        };
    }
    let first = step_at(0);
    if (1..n).all(|k| step_at(k) == first) {
        let order = n as u32;
        return Verdict {
            class: StarClass::Perfect,
            symmetry: Some(Symmetry {
                rotational: order,
                reflective: order,
            }),
            perfect_step: Some(first),
        };
    }
    let sym = Symmetry::of(&edge_matrix_of_nodes(nodes));
    let class = if sym.total() > 1 {
        StarClass::Symmetric
    } else {
        StarClass::Asymmetric
    };
    Verdict {
        class,
        symmetry: Some(sym),
        perfect_step: None,
    }
}

pub fn classify_path(path: &Path) -> Result<Classification> {
    if path.len() < MIN_STAR_LEN {
        return Err(Error::WordTooShort { len: path.len() });
    }
    let v = judge(path.nodes());
    Ok(Classification {
        class: v.class,
        symmetry: v.symmetry,
        path: path.clone(),
        perfect_step: v.perfect_step,
    })
}

/// Keeps the best path seen so far: highest class, then highest
/// `O_rot + O_ref`, then the latest offered.
#[derive(Debug, Default)]
pub(crate) struct Selector {
    best: Option<(Verdict, Vec<usize>)>,
}

impl Selector {
    pub fn offer(&mut self, verdict: Verdict, nodes: &[usize]) {
        match &mut self.best {
            Some((best, best_nodes)) => {
                if verdict.class > best.class
                    || (verdict.class == best.class && verdict.score() >= best.score())
                {
                    *best = verdict;
                    best_nodes.clear();
                    best_nodes.extend_from_slice(nodes);
                }
            }
            None => self.best = Some((verdict, nodes.to_vec())),
        }
    }

    pub fn finish(self) -> Option<Classification> {
        self.best.map(|(v, nodes)| Classification {
            class: v.class,
            symmetry: v.symmetry,
            path: Path::new(nodes).expect("enumerated path"),
            perfect_step: v.perfect_step,
        })
    }
}

/// Classifies every path of the pair and returns the winner.
pub fn classify_anagram(pair: &AnagramPair, cap: Option<u64>) -> Result<Classification> {
    if pair.len() < MIN_STAR_LEN {
        return Err(Error::WordTooShort { len: pair.len() });
    }
    check_cap(pair, cap)?;
    let mut selector = Selector::default();
    for_each_path(pair, |nodes| selector.offer(judge(nodes), nodes));
    Ok(selector.finish().expect("an anagram has at least one path"))
}
