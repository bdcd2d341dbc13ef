//! The intersection table: per edge-pair value domains in {0,1,2}, with a
//! union-find over edges whose pairs are pinned to 2 (classes).
//!
//! Domains are 3-bit masks and only ever shrink; a pair pinned to 2 merges
//! the two classes, reconciling their rows. The union-find keeps the
//! "same class" relation an equivalence relation by construction, and row
//! reconciliation enforces rule 1 (merged edges relate identically to
//! every third class).

use thiserror::Error;

use super::sigma::{sigma_oracle, Sigma};
use crate::graph::{DistanceMatrix, Graph};

/// Domain masks for an intersection value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Value;

impl Value {
    pub const ZERO: u8 = 0b001;
    pub const ONE: u8 = 0b010;
    pub const TWO: u8 = 0b100;
    pub const U02: u8 = 0b101;
    pub const U012: u8 = 0b111;

    pub fn is_determined(mask: u8) -> bool {
        mask.count_ones() == 1
    }

    pub fn determined(mask: u8) -> Option<u8> {
        match mask {
            Self::ZERO => Some(0),
            Self::ONE => Some(1),
            Self::TWO => Some(2),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("intersection table contradiction")]
pub struct Contradiction;

/// Search state: the table over edge pairs plus the edge classing.
#[derive(Debug, Clone)]
pub struct SearchState {
    pub ne: usize,
    /// Row-major symmetric domain matrix over edge indices; authoritative
    /// only at union-find roots.
    val: Vec<u8>,
    parent: Vec<u32>,
    /// Pending merges discovered while writing domains.
    pending: Vec<(usize, usize)>,
}

impl SearchState {
    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> u8 {
        if a == b {
            return Value::TWO;
        }
        self.val[a * self.ne + b]
    }

    /// Intersect the domain of the pair `(a, b)` (both class roots) with
    /// `mask`. Pins to 2 queue a class merge.
    pub fn restrict(&mut self, a: usize, b: usize, mask: u8) -> Result<bool, Contradiction> {
        if a == b {
            return if mask & Value::TWO != 0 {
                Ok(false)
            } else {
                Err(Contradiction)
            };
        }
        let old = self.val[a * self.ne + b];
        let new = old & mask;
        if new == 0 {
            return Err(Contradiction);
        }
        if new == old {
            return Ok(false);
        }
        self.val[a * self.ne + b] = new;
        self.val[b * self.ne + a] = new;
        if new == Value::TWO {
            self.pending.push((a, b));
        }
        Ok(true)
    }

    /// Drain queued merges to a fixpoint (rule 1). Returns whether any
    /// merge happened.
    pub fn drain_merges(&mut self) -> Result<bool, Contradiction> {
        let mut changed = false;
        while let Some((a, b)) = self.pending.pop() {
            let (ra, rb) = (self.find(a), self.find(b));
            if ra == rb {
                continue;
            }
            changed = true;
            let (keep, gone) = (ra.min(rb), ra.max(rb));
            self.parent[gone] = keep as u32;
            // reconcile rows: every third class must relate equally
            for c in 0..self.ne {
                if self.parent[c] as usize != c || c == keep || c == gone {
                    continue;
                }
                let merged = self.get(keep, c) & self.get(gone, c);
                if merged == 0 {
                    return Err(Contradiction);
                }
                let old = self.get(keep, c);
                if merged != old {
                    self.val[keep * self.ne + c] = merged;
                    self.val[c * self.ne + keep] = merged;
                    if merged == Value::TWO {
                        self.pending.push((keep, c));
                    }
                }
            }
        }
        Ok(changed)
    }

    /// Current class representatives, ascending.
    pub fn roots(&self) -> Vec<usize> {
        (0..self.ne)
            .filter(|&e| self.parent[e] as usize == e)
            .collect()
    }

    /// Lexicographically first undetermined pair of roots, if any.
    pub fn first_open_pair(&self) -> Option<(usize, usize)> {
        let roots = self.roots();
        for (i, &a) in roots.iter().enumerate() {
            for &b in &roots[i + 1..] {
                if !Value::is_determined(self.get(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Edge members of each class, classes ordered by smallest edge.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let roots = self.roots();
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); roots.len()];
        for e in 0..self.ne {
            let r = self.find(e);
            let idx = roots.binary_search(&r).expect("root present");
            groups[idx].push(e);
        }
        groups
    }
}

impl SearchState {
    /// A state over `ne` formal edge classes with every off-diagonal pair
    /// fully open; the starting point for rule-level tests.
    pub fn synthetic(ne: usize) -> SearchState {
        let mut val = vec![Value::U012; ne * ne];
        for e in 0..ne {
            val[e * ne + e] = Value::TWO;
        }
        SearchState {
            ne,
            val,
            parent: (0..ne as u32).collect(),
            pending: Vec::new(),
        }
    }
}

/// Seed the table from the σ oracle: pins for |σ| ∈ {1,2}, the parity
/// restriction {0,2} for σ = 0, full uncertainty when the oracle does not
/// apply. Pairs of distinct edges sharing a vertex additionally exclude 2,
/// since equal coordinate sets would collapse their far endpoints into one
/// address.
pub fn seed_table(g: &Graph, dm: &DistanceMatrix, s: usize) -> Result<SearchState, Contradiction> {
    let ne = g.edge_count();
    let mut st = SearchState {
        ne,
        val: vec![Value::U012; ne * ne],
        parent: (0..ne as u32).collect(),
        pending: Vec::new(),
    };
    for a in 0..ne {
        st.val[a * ne + a] = Value::TWO;
    }
    for a in 0..ne {
        let (u, v) = g.edges[a];
        for b in a + 1..ne {
            let (x, y) = g.edges[b];
            let shares_vertex = u == x || u == y || v == x || v == y;
            let base = if shares_vertex {
                Value::ZERO | Value::ONE
            } else {
                Value::U012
            };
            let mask = match sigma_oracle(dm, s, (u, v), (x, y)) {
                Sigma::Known(sig) => match sig.unsigned_abs() {
                    2 => Value::TWO,
                    1 => Value::ONE,
                    _ => Value::U02,
                },
                Sigma::Unknown => Value::U012,
            };
            st.restrict(a, b, base & mask)?;
        }
    }
    st.drain_merges()?;
    Ok(st)
}
