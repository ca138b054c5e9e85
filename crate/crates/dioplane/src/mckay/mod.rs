//! The McKay correspondence engine.
//!
//! Finite subgroups of SU(2) are built as exact quaternion groups over
//! cyclotomic fields, their character tables assembled (in closed form for
//! the cyclic and binary dihedral families, from a validated embedded asset
//! for 2T/2O/2I), and the decomposition V ⊗ Vᵢ = Σ mᵢⱼ Vⱼ turned into a
//! graph that is matched against the affine Â/D̃/Ê templates.

mod chartab;
mod graph;
mod group;
mod quaternion;

pub use chartab::{character_table, validate_table, CharacterTable};
pub use graph::{identify_affine_diagram, mckay_matrix, AffineDiagram, McKayGraph};
pub use group::{build_group, ConjugacyClass, FiniteSubgroupSU2, SubgroupFamily};
pub use quaternion::CyclotomicQuaternion;

use thiserror::Error;

/// Errors from the group/character/graph pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McKayError {
    #[error("invalid subgroup family specification `{0}`")]
    InvalidFamily(String),
    /// Generator closure blew past twice the expected order: corrupted
    /// generator data.
    #[error("closure of {family} exceeded twice the expected order {expected}")]
    ClosureExceeded { family: String, expected: usize },
    #[error("{family} closed at order {got}, expected {expected}")]
    WrongOrder {
        family: String,
        expected: usize,
        got: usize,
    },
    /// The embedded table and the computed group disagree.
    #[error("character data integrity failure: {0}")]
    DataIntegrity(String),
    /// A tensor multiplicity failed to reduce to a nonnegative integer.
    #[error("McKay matrix entry ({i},{j}) is not a nonnegative integer")]
    NonIntegerEntry { i: usize, j: usize },
    /// No affine template matched; the correspondence guarantees one, so
    /// this flags a bug upstream.
    #[error("no affine ADE diagram matches a graph on {nodes} nodes")]
    NoDiagramMatch { nodes: usize },
}

/// Parses a family spec as used by the command line: `2T`, `2O`, `2I`,
/// `C <n>`, `BD <n>`.
pub fn parse_family(tokens: &[&str]) -> Result<SubgroupFamily, McKayError> {
    let err = || McKayError::InvalidFamily(tokens.join(" "));
    match tokens {
        ["2T"] => Ok(SubgroupFamily::BinaryTetrahedral),
        ["2O"] => Ok(SubgroupFamily::BinaryOctahedral),
        ["2I"] => Ok(SubgroupFamily::BinaryIcosahedral),
        ["C", n] => {
            let n: u32 = n.parse().map_err(|_| err())?;
            if n == 0 {
                return Err(err());
            }
            Ok(SubgroupFamily::Cyclic(n))
        }
        ["BD", n] => {
            let n: u32 = n.parse().map_err(|_| err())?;
            if n == 0 {
                return Err(err());
            }
            Ok(SubgroupFamily::BinaryDihedral(n))
        }
        _ => Err(err()),
    }
}
