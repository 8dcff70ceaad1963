//! Finite presentations and their regular permutation representations.

mod todd_coxeter;
mod word;

use thiserror::Error;

use crate::group::{Group, GroupError, DEFAULT_ELEMENT_CAP};

pub use todd_coxeter::{enumerate, CosetTable};
pub use word::Word;

/// Default coset cap for enumeration.
pub const DEFAULT_MAX_COSETS: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CosetError {
    #[error("coset table overflow: more than {max_cosets} cosets defined")]
    TableOverflow { max_cosets: usize },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("generator {0} has no assigned element")]
    UnboundGenerator(usize),
    #[error("relator {index} does not evaluate to the identity")]
    RelatorViolated { index: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self, CosetError> {
        let n = generator_names.len();
        for (i, name) in generator_names.iter().enumerate() {
            if generator_names[..i].contains(name) {
                return Err(CosetError::InvalidWord(format!("generator {name} declared twice")));
            }
        }
        for w in &relators {
            if let Some(&(g, _)) = w.syllables().iter().find(|(g, _)| *g >= n) {
                return Err(CosetError::InvalidWord(format!(
                    "relator uses generator index {g} but only {n} are declared"
                )));
            }
        }
        Ok(Presentation {
            generator_names,
            relators,
        })
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }
}

/// Enumerates the cosets of the trivial subgroup and returns the regular
/// permutation representation as a p-group. Every relator is checked
/// against the result.
pub fn enumerate_group(
    pres: &Presentation,
    prime: u64,
    max_cosets: usize,
) -> Result<Group, CosetError> {
    let table = enumerate(pres, max_cosets)?;
    let order = table.order();
    let group = Group::from_generators(
        order,
        table.generator_permutations(),
        prime,
        DEFAULT_ELEMENT_CAP.max(order),
    )?;
    debug_assert_eq!(group.order(), order);
    for (index, rel) in pres.relators().iter().enumerate() {
        let value = evaluate_word(&group, rel, group.generator_indices())?;
        if value != 0 {
            return Err(CosetError::RelatorViolated { index });
        }
    }
    Ok(group)
}

/// Evaluates `w` in `g` with generator `i` of the word sent to element
/// `assignment[i]`.
pub fn evaluate_word(g: &Group, w: &Word, assignment: &[usize]) -> Result<usize, CosetError> {
    w.syllables().iter().try_fold(0usize, |acc, &(gen, exp)| {
        let x = *assignment.get(gen).ok_or(CosetError::UnboundGenerator(gen))?;
        Ok(g.mul(acc, g.pow(x, exp)))
    })
}
