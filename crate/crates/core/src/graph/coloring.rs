use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// A vertex colouring with colours in `1..=palette`.
///
/// The map covers exactly the vertices it claims to colour; for a colouring
/// of a whole graph that is every vertex `0..n`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub palette: usize,
    pub colors: BTreeMap<usize, usize>,
}

impl Coloring {
    pub fn new(palette: usize) -> Self {
        Coloring {
            palette,
            colors: BTreeMap::new(),
        }
    }

    /// Colouring of `0..colors.len()` from a dense vector.
    pub fn from_dense(palette: usize, colors: &[usize]) -> Self {
        Coloring {
            palette,
            colors: colors.iter().copied().enumerate().collect(),
        }
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors.get(&v).copied()
    }

    pub fn set(&mut self, v: usize, color: usize) {
        self.colors.insert(v, color);
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest colour actually used.
    pub fn max_color(&self) -> usize {
        self.colors.values().copied().max().unwrap_or(0)
    }

    /// Number of distinct colours used.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Renames vertices through `map` (local id -> global id).
    pub fn relabel(&self, map: &[usize]) -> Coloring {
        Coloring {
            palette: self.palette,
            colors: self.colors.iter().map(|(&v, &c)| (map[v], c)).collect(),
        }
    }

    /// Adds `offset` to every colour and to the palette.
    pub fn shifted(&self, offset: usize) -> Coloring {
        Coloring {
            palette: self.palette + offset,
            colors: self.colors.iter().map(|(&v, &c)| (v, c + offset)).collect(),
        }
    }

    /// Copies every entry of `other` into `self`; the palette becomes the max.
    pub fn absorb(&mut self, other: &Coloring) {
        self.palette = self.palette.max(other.palette);
        self.colors
            .extend(other.colors.iter().map(|(&v, &c)| (v, c)));
    }

    /// DIMACS-style listing: a `p palette <k>` header and `v <vertex> <color>`
    /// lines with 1-based vertex ids.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p palette {}\n", self.palette);
        for (&v, &c) in &self.colors {
            out.push_str(&format!("v {} {}\n", v + 1, c));
        }
        out
    }
}
