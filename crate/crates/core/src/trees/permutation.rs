use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation. The empty word is the
/// degree-0 unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            let i = v as usize;
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::parse(
                    render(&word),
                    format!("not a permutation of 1..{n}"),
                ));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(word))
    }

    pub(crate) fn from_vec_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn reversed_identity(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    /// Relative order of an arbitrary word of distinct values.
    pub fn standardize(values: &[u32]) -> Self {
        let mut idx: Vec<usize> = (0..values.len()).collect();
        idx.sort_by_key(|&i| values[i]);
        let mut out = vec![0; values.len()];
        for (rank, i) in idx.into_iter().enumerate() {
            out[i] = rank as u32 + 1;
        }
        Permutation(out)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Position (0-based) of each value, indexed by `value - 1`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v as usize - 1] = i;
        }
        pos
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
            .sum()
    }

    /// All of `S_n`, in canonical order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut used = vec![false; n];
        let mut cur = Vec::with_capacity(n);
        fn go(n: usize, used: &mut [bool], cur: &mut Vec<u32>, out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v as u32 + 1);
                    go(n, used, cur, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        go(n, &mut used, &mut cur, &mut out);
        if n > 9 {
            out.sort();
        }
        out
    }

    /// Whether the word contains `pattern` (a permutation in one-line
    /// notation) as a subsequence in the same relative order.
    pub fn contains_pattern(&self, pattern: &[u32]) -> bool {
        let k = pattern.len();
        let w = &self.0;
        let mut chosen = Vec::with_capacity(k);
        k == 0 || search(w, 0, pattern, &mut chosen)
    }

    /// Like [`Permutation::contains_pattern`], but the first letter of the
    /// pattern must be matched by the first letter of the word.
    pub fn contains_pinned_pattern(&self, pattern: &[u32]) -> bool {
        let Some(&first) = self.0.first() else {
            return pattern.is_empty();
        };
        if pattern.is_empty() {
            return true;
        }
        let mut chosen = vec![first];
        search(&self.0, 1, pattern, &mut chosen)
    }
}

fn search(w: &[u32], start: usize, pattern: &[u32], chosen: &mut Vec<u32>) -> bool {
    let k = chosen.len();
    if k == pattern.len() {
        return true;
    }
    for i in start..w.len() {
        let v = w[i];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &p)| (c < v) == (p < pattern[k]));
        if consistent {
            chosen.push(v);
            if search(w, i + 1, pattern, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn render(word: &[u32]) -> String {
    if word.len() <= 9 {
        word.iter()
            .map(|v| char::from_digit(*v, 10).unwrap_or('?'))
            .collect()
    } else {
        word.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.0))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::parse(s, format!("bad letter {part:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::parse(s, format!("bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word).map_err(|_| Error::parse(s, "not a permutation"))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.len() <= 9 && other.len() <= 9 {
            self.0.cmp(&other.0)
        } else {
            self.to_string().cmp(&other.to_string())
        }
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
