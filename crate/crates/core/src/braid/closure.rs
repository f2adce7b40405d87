//! Combinatorics of the braid closure: strand permutation, link components
//! and pairwise linking numbers.

use std::fmt;

use super::BraidWord;

/// A bijection of `{1..n}`. `images[k]` is the image of strand `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from 1-based images; `None` if not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based strand `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Permutation {
            images: self.images.iter().map(|&v| other.image(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Cycles in order of their least element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 1..=self.len() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i - 1] {
                seen[i - 1] = true;
                cycle.push(i);
                i = self.image(i);
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// Assignment of strands to the components of the closed braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandComponentMap {
    component_of_strand: Vec<usize>,
    component_count: usize,
}

impl StrandComponentMap {
    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Component ids of strands `1..=n`, in strand order.
    pub fn component_of_strand(&self) -> &[usize] {
        &self.component_of_strand
    }

    /// Component id of the 1-based strand `i`.
    pub fn component_of(&self, strand: usize) -> usize {
        self.component_of_strand[strand - 1]
    }

    /// 1-based strands of component `id`, ascending.
    pub fn strands_of(&self, id: usize) -> Vec<usize> {
        self.component_of_strand
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == id)
            .map(|(k, _)| k + 1)
            .collect()
    }
}

/// Pairwise linking numbers of the closure components; the diagonal is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkingMatrix {
    entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, p: usize, q: usize) -> i64 {
        self.entries[p][q]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Total linking of component `p` with every other component.
    pub fn total_with(&self, p: usize) -> i64 {
        self.entries[p].iter().sum()
    }
}

pub(super) fn closure_permutation(w: &BraidWord) -> Permutation {
    // occupant[p] = strand currently at position p (0-based)
    let mut occupant: Vec<usize> = (0..w.strand_count()).collect();
    for &e in w.letters() {
        let i = e.unsigned_abs() as usize;
        occupant.swap(i - 1, i);
    }
    let mut images = vec![0; w.strand_count()];
    for (position, &strand) in occupant.iter().enumerate() {
        images[strand] = position + 1;
    }
    Permutation { images }
}

pub(super) fn components(w: &BraidWord) -> StrandComponentMap {
    let cycles = closure_permutation(w).cycles();
    let mut component_of_strand = vec![0; w.strand_count()];
    for (id, cycle) in cycles.iter().enumerate() {
        for &strand in cycle {
            component_of_strand[strand - 1] = id;
        }
    }
    StrandComponentMap {
        component_of_strand,
        component_count: cycles.len(),
    }
}

pub(super) fn linking_matrix(w: &BraidWord) -> LinkingMatrix {
    let map = components(w);
    let k = map.component_count();
    let mut doubled = vec![vec![0i64; k]; k];
    let mut occupant: Vec<usize> = (0..w.strand_count()).collect();
    for &e in w.letters() {
        let i = e.unsigned_abs() as usize;
        let a = map.component_of_strand[occupant[i - 1]];
        let b = map.component_of_strand[occupant[i]];
        if a != b {
            let sign = i64::from(e.signum());
            doubled[a][b] += sign;
            doubled[b][a] += sign;
        }
        occupant.swap(i - 1, i);
    }
    let entries = doubled
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    debug_assert!(v % 2 == 0, "odd inter-component crossing count");
                    v / 2
                })
                .collect()
        })
        .collect();
    LinkingMatrix { entries }
}
