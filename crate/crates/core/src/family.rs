//! Parameters of the dumbbell (B) and theta (C) bicyclic base families.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Two hypercycles joined at a vertex or by a hyperpath.
    B,
    /// Three hyperpaths sharing their ends.
    C,
}

/// A base hypergraph `B_i(p, l, q)` or `C_i(p, q, l)` plus a count of pendant
/// edges hung from it.
///
/// For B, `p` and `q` are the two cycle lengths and `l` the connecting path.
/// In `B_2` the `p`-cycle is attached through one of its degree-2 vertices and
/// the `q`-cycle through a cored vertex. For C, `p`, `q` and `l` are the three
/// path lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub variant: u8,
    pub p: usize,
    pub q: usize,
    pub l: usize,
    pub pendants: usize,
}

impl FamilySpec {
    pub fn b(variant: u8, p: usize, q: usize, l: usize) -> Self {
        FamilySpec { family: Family::B, variant, p, q, l, pendants: 0 }
    }

    pub fn c(variant: u8, p: usize, q: usize, l: usize) -> Self {
        FamilySpec { family: Family::C, variant, p, q, l, pendants: 0 }
    }

    pub fn with_pendants(self, pendants: usize) -> Self {
        FamilySpec { pendants, ..self }
    }

    /// Edges of the base, before pendants.
    pub fn base_edge_count(&self) -> usize {
        self.p + self.q + self.l
    }

    pub fn edge_count(&self) -> usize {
        self.base_edge_count() + self.pendants
    }

    /// `(p + q + l)(k - 1) - 1`
    pub fn base_vertex_count(&self, k: usize) -> usize {
        self.base_edge_count() * (k - 1) - 1
    }

    pub fn vertex_count(&self, k: usize) -> usize {
        self.base_vertex_count(k) + self.pendants * (k - 1)
    }

    /// Whether `(p, q, l)` lies in the parameter range the family is defined
    /// for at uniformity `k`.
    pub fn is_legal(&self, k: usize) -> bool {
        let FamilySpec { family, variant, p, q, l, .. } = *self;
        if k < 3 {
            return false;
        }
        match (family, variant) {
            (Family::B, 1..=3) => q >= p && p >= 3,
            (Family::C, 1) => (p == 1 && 1 < q && q <= l) || (1 < p && p <= q && q <= l),
            (Family::C, 2) => {
                (q == 1 && 1 < p && p <= l) || (q > 1 && 1 <= p && p < q && q - 1 <= l)
            }
            (Family::C, 3) => {
                (q > 2 && 1 <= p && p <= q - 2 && q - 2 <= l)
                    || (q == 2 && 1 <= p && p <= l)
                    || (q == 1 && k > 3 && 1 < p && p <= l)
            }
            _ => false,
        }
    }

    pub fn check(&self, k: usize) -> Result<()> {
        if self.is_legal(k) {
            Ok(())
        } else {
            Err(Error::IllegalParameters(format!("{self} is not a legal family at k={k}")))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::B => 'B',
            Family::C => 'C',
        };
        // B is conventionally written with the path length in the middle
        match self.family {
            Family::B => write!(f, "{fam}{}(p={}, l={}, q={})", self.variant, self.p, self.l, self.q)?,
            Family::C => write!(f, "{fam}{}(p={}, q={}, l={})", self.variant, self.p, self.q, self.l)?,
        }
        if self.pendants > 0 {
            write!(f, "+{}", self.pendants)?;
        }
        Ok(())
    }
}
