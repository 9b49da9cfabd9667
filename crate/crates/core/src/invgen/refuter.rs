use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{GroupHandle, Permutation};

/// Outcome of the randomized necessary-condition check. Never a proof of
/// invariable generation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RefuterVerdict {
    /// At 1-based trial `trial`, conjugating element `i` by `conjugators[i]`
    /// gave a set that does not generate the group.
    Refuted {
        trial: usize,
        #[serde(serialize_with = "one_based")]
        conjugators: Vec<Permutation>,
    },
    Unrefuted { trials: usize },
}

impl RefuterVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, RefuterVerdict::Refuted { .. })
    }
}

fn one_based<S: serde::Serializer>(perms: &[Permutation], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(perms.iter().map(|p| p.to_string()))
}

/// Replaces each element by an independent uniform conjugate, `trials` times,
/// and checks generation by stabilizer-chain order.
///
/// Conjugators come from `conjugators_from` when given (an overgroup
/// normalizing the group, for twisted invariable generation), otherwise from
/// the group itself.
pub fn invgen_sample_refuter<R: Rng + ?Sized>(
    group: &GroupHandle,
    elements: &[Permutation],
    trials: usize,
    rng: &mut R,
    conjugators_from: Option<&GroupHandle>,
) -> Result<RefuterVerdict> {
    for e in elements {
        if !group.contains(e)? {
            return Err(Error::NotInGroup);
        }
    }
    let source = conjugators_from.unwrap_or(group);
    if source.degree() != group.degree() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: source.degree(),
        });
    }
    for trial in 1..=trials {
        let conjugators: Vec<Permutation> =
            elements.iter().map(|_| source.random_element(rng)).collect();
        let conjugated: Vec<Permutation> = elements
            .iter()
            .zip(&conjugators)
            .map(|(e, g)| e.conjugate_by(g))
            .collect();
        if !GroupHandle::generates_order(&conjugated, group.order()) {
            return Ok(RefuterVerdict::Refuted { trial, conjugators });
        }
    }
    Ok(RefuterVerdict::Unrefuted { trials })
}
