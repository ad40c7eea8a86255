//! Unit moves on the multiplicity table and the four ways a partition of
//! order `n` arises from one of order `n − 1` under total differentiation.

use super::{Part, TwoDimPartition};
use crate::error::{Error, Result};

fn replace_one(p: &TwoDimPartition, from: Part, to: Part) -> TwoDimPartition {
    let mut parts = p.parts().to_vec();
    let at = parts.iter().position(|&x| x == from).expect("caller checked membership");
    parts.remove(at);
    let insert_at = parts.partition_point(|&x| x > to);
    parts.insert(insert_at, to);
    TwoDimPartition::from_sorted_unchecked(parts)
}

/// `A_{i,j}`: moves one unit of multiplicity from `(i, j)` to `(i − 1, j)`.
///
/// Defined for `i > 0`, `(i, j) ≠ (1, 0)` and `e_p(i, j) > 0`.
pub fn a_move(p: &TwoDimPartition, i: u32, j: u32) -> Result<TwoDimPartition> {
    if i == 0 || (i, j) == (1, 0) || !p.contains(i, j) {
        return Err(Error::MoveUndefined {
            kind: "A",
            i,
            j,
            partition: p.to_string(),
        });
    }
    Ok(replace_one(p, Part::new_unchecked(i, j), Part::new_unchecked(i - 1, j)))
}

/// `B_{i,j}`: moves one unit of multiplicity from `(i, j)` to `(i, j − 1)`.
///
/// Defined for `j > 0`, `(i, j) ≠ (0, 1)` and `e_p(i, j) > 0`.
pub fn b_move(p: &TwoDimPartition, i: u32, j: u32) -> Result<TwoDimPartition> {
    if j == 0 || (i, j) == (0, 1) || !p.contains(i, j) {
        return Err(Error::MoveUndefined {
            kind: "B",
            i,
            j,
            partition: p.to_string(),
        });
    }
    Ok(replace_one(p, Part::new_unchecked(i, j), Part::new_unchecked(i, j - 1)))
}

/// `p \ parts`: removes one copy of each listed part. The result must be
/// non-empty.
pub fn remove_parts(p: &TwoDimPartition, parts: &[Part]) -> Result<TwoDimPartition> {
    let mut remaining = p.parts().to_vec();
    for part in parts {
        match remaining.iter().position(|x| x == part) {
            Some(at) => {
                remaining.remove(at);
            }
            None => {
                return Err(Error::MissingPart {
                    i: part.i(),
                    j: part.j(),
                    partition: p.to_string(),
                })
            }
        }
    }
    if remaining.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(TwoDimPartition::from_sorted_unchecked(remaining))
}

/// The four relations by which a term `F_{x,y,p} / F_y^|p|` of order `n` is
/// produced from a term of order `n − 1` indexed by `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaCase {
    /// `q = p \ (1,1)`: `∂/∂x` hitting `F_y^{−|q|}`.
    RemoveMixed,
    /// `q = A_{i,j}(p)`: `∂/∂x` hitting one factor of `F_{x,y,q}`.
    AMove { i: u32, j: u32 },
    /// `q = p \ {(1,0),(0,2)}`: `−(F_x/F_y) ∂/∂y` hitting `F_y^{−|q|}`.
    RemoveXAndYy,
    /// `q = B_{i,j}(p \ (1,0))`: `−(F_x/F_y) ∂/∂y` hitting a factor.
    BMoveAfterRemoveX { i: u32, j: u32 },
}

impl LemmaCase {
    /// Case number 1 through 4 in the order listed above.
    pub fn number(self) -> u8 {
        match self {
            LemmaCase::RemoveMixed => 1,
            LemmaCase::AMove { .. } => 2,
            LemmaCase::RemoveXAndYy => 3,
            LemmaCase::BMoveAfterRemoveX { .. } => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaRelation {
    pub case: LemmaCase,
    pub q: TwoDimPartition,
}

/// Every non-empty `q` related to `p` by one of the four cases.
pub fn lemma_relations(p: &TwoDimPartition) -> Vec<LemmaRelation> {
    let mut out = Vec::new();
    let x = Part::new_unchecked(1, 0);
    let xy = Part::new_unchecked(1, 1);
    let yy = Part::new_unchecked(0, 2);

    if let Ok(q) = remove_parts(p, &[xy]) {
        out.push(LemmaRelation {
            case: LemmaCase::RemoveMixed,
            q,
        });
    }
    for &part in p.multiplicities().keys() {
        if let Ok(q) = a_move(p, part.i(), part.j()) {
            out.push(LemmaRelation {
                case: LemmaCase::AMove {
                    i: part.i(),
                    j: part.j(),
                },
                q,
            });
        }
    }
    if let Ok(q) = remove_parts(p, &[x, yy]) {
        out.push(LemmaRelation {
            case: LemmaCase::RemoveXAndYy,
            q,
        });
    }
    if let Ok(without_x) = remove_parts(p, &[x]) {
        for &part in without_x.multiplicities().keys() {
            if let Ok(q) = b_move(&without_x, part.i(), part.j()) {
                out.push(LemmaRelation {
                    case: LemmaCase::BMoveAfterRemoveX {
                        i: part.i(),
                        j: part.j(),
                    },
                    q,
                });
            }
        }
    }
    out
}
