use std::fmt;
use std::str::FromStr;

use super::bileveled::{compose_decomposition, forest_decomposition, BiLeveledTree};
use super::planar::{left_comb, right_comb};
use crate::error::{Error, Result};

/// A composition `(a_1, …, a_k)` of `n = Σ a_i`. The empty composition is the
/// degree-0 unit and renders as `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// All compositions of `n`, ordered by their parts.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::default()];
        }
        // subsets of the n-1 gaps, read as cut points
        let mut out: Vec<Composition> = (0..1u64 << (n - 1))
            .map(|mask| {
                let mut parts = Vec::new();
                let mut run = 1;
                for gap in 0..n - 1 {
                    if mask & (1 << gap) != 0 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                Composition(parts)
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Composition::default());
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, "compositions are written (a1,a2,...)"))?;
        let parts = inner
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(s, format!("bad part {part:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts).map_err(|e| Error::parse(s, e.to_string()))
    }
}

/// Collapses the circled tree to a left comb and each hanging tree to a right
/// comb, reading off `(|s_1| + 1, …, |s_p| + 1)`.
pub fn qsym_composition(b: &BiLeveledTree) -> Composition {
    let dec = forest_decomposition(b);
    Composition(dec.hanging.iter().map(|s| s.len() + 1).collect())
}

/// The comb of combs: a circled left comb with one node per part, carrying a
/// right comb of `a_i - 1` nodes above leaf `i` (counting from 0).
pub fn composition_to_bileveled(c: &Composition) -> BiLeveledTree {
    if c.0.is_empty() {
        return BiLeveledTree::unit();
    }
    let hanging: Vec<_> = c.0.iter().map(|&a| right_comb(a - 1)).collect();
    compose_decomposition(&left_comb(c.0.len()), &hanging)
        .expect("a left comb base always gives a valid bi-leveled tree")
}
