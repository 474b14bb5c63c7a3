//! Breadth-first search for holonomy products with eigenvalue 1.
//!
//! A cycle of fiber classes `α_1 → α_2 → ... → α_k → α_1`, where each step
//! applies the holonomy of some base generator (or its inverse), exists iff the
//! product of those matrices fixes `α_1`. Such cycles sweep out long cylinders
//! whose two ends are homologous, which is the homological shadow of an
//! embedded torus. Products are enumerated over freely reduced words, shortest
//! first, and deduplicated by exact matrix equality.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::linalg::bareiss;
use crate::symplectic::{HolonomyProblem, SymplecticMatrix};
use crate::{QSubspace, QVector, ZMatrix};

pub const DEFAULT_MAX_STATES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("maximum word length must be at least 1")]
    ZeroLength,
    #[error("search stored more than {limit} distinct products; raise --max-states or lower --max-len")]
    StateLimit { limit: usize },
    #[error("vector is not fixed by the product of {word}")]
    NotFixed { word: Word },
    #[error("vector has length {found}, expected {expected}")]
    VectorLength { expected: usize, found: usize },
}

/// A base generator `g_i` (0-based `index`) or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.index + 1)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the base generators, read left to right: the leftmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    fn extended(&self, l: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(l);
        Word(v)
    }

    /// Shortest first, then lexicographic in letter order `g1, g1^-1, g2, ...`.
    pub fn canonical_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Holonomy matrices for each letter, in letter order.
struct Alphabet {
    letters: Vec<Letter>,
    matrices: Vec<SymplecticMatrix>,
}

impl Alphabet {
    fn new(p: &HolonomyProblem) -> Self {
        let mut letters = Vec::new();
        let mut matrices = Vec::new();
        for (index, m) in p.matrices().iter().enumerate() {
            letters.push(Letter { index, inverse: false });
            matrices.push(m.clone());
            letters.push(Letter { index, inverse: true });
            matrices.push(m.inverse());
        }
        Alphabet { letters, matrices }
    }

    fn matrix(&self, l: Letter) -> &SymplecticMatrix {
        &self.matrices[2 * l.index + usize::from(l.inverse)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_len: usize,
    /// Cap on stored distinct products, the identity included.
    pub max_states: usize,
    /// Expand each BFS level on the rayon pool; output does not depend on it.
    pub parallel: bool,
}

impl SearchConfig {
    pub fn new(max_len: usize) -> Self {
        SearchConfig {
            max_len,
            max_states: DEFAULT_MAX_STATES,
            parallel: true,
        }
    }
}

/// A distinct product with its canonical witness word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub word: Word,
    pub matrix: SymplecticMatrix,
}

/// All distinct products of nonempty freely reduced words of length at most
/// `max_len`, each with its shortest-then-lexicographic witness, in that order.
///
/// Every distinct product is expanded once; a word whose prefix repeats an
/// earlier product reaches nothing new, so the result is still complete.
pub fn enumerate_products(p: &HolonomyProblem, cfg: &SearchConfig) -> Result<Vec<Product>, SearchError> {
    if cfg.max_len == 0 {
        return Err(SearchError::ZeroLength);
    }
    let alphabet = Alphabet::new(p);
    let identity = SymplecticMatrix::identity(p.fiber_genus());
    let mut seen: HashSet<ZMatrix> = HashSet::new();
    seen.insert(identity.matrix().clone());
    let mut identity_yielded = false;
    let mut out = Vec::new();
    let mut frontier = vec![Product {
        word: Word::default(),
        matrix: identity,
    }];

    for _ in 0..cfg.max_len {
        let expand = |node: &Product| -> Vec<Product> {
            alphabet
                .letters
                .iter()
                .filter(|&&l| node.word.0.last().is_none_or(|&last| !last.cancels(l)))
                .map(|&l| Product {
                    word: node.word.extended(l),
                    matrix: alphabet.matrix(l).compose(&node.matrix),
                })
                .collect()
        };
        let candidates: Vec<Vec<Product>> = if cfg.parallel {
            frontier.par_iter().map(expand).collect()
        } else {
            frontier.iter().map(expand).collect()
        };

        let mut next = Vec::new();
        for cand in candidates.into_iter().flatten() {
            if cand.matrix.is_identity() {
                if !identity_yielded {
                    identity_yielded = true;
                    out.push(cand);
                }
                continue;
            }
            if seen.contains(cand.matrix.matrix()) {
                continue;
            }
            if seen.len() >= cfg.max_states {
                return Err(SearchError::StateLimit { limit: cfg.max_states });
            }
            seen.insert(cand.matrix.matrix().clone());
            out.push(cand.clone());
            next.push(cand);
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Annotations {
    /// The product is the identity on homology although the word is nonempty:
    /// the mapping class may still be nontrivial (Torelli), so no fixed curve follows.
    pub product_is_identity: bool,
    /// Fiber genus 2, where disjoint homologous simple closed curves are
    /// isotopic; a hit is a stronger, still inconclusive, torus candidate.
    pub fiber_genus_two_note: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub word: Word,
    pub product: SymplecticMatrix,
    /// `Ker(P − I)`, nonzero.
    pub fixed_space: QSubspace,
    /// Orbit of the first fixed basis vector along the word.
    pub cycle: Vec<QVector>,
    pub annotations: Annotations,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub products_enumerated: usize,
    pub hits: Vec<SearchHit>,
}

/// Products with eigenvalue 1, one hit per distinct product, in canonical word order.
pub fn find_fixed_classes(p: &HolonomyProblem, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    let products = enumerate_products(p, cfg)?;
    let alphabet = Alphabet::new(p);
    let genus_two = p.fiber_genus() == 2;
    let check = |prod: &Product| -> Option<SearchHit> {
        let shifted = prod.matrix.matrix().minus_identity();
        let det = bareiss::determinant(&shifted).expect("square");
        if !det.is_zero() {
            return None;
        }
        let fixed_space = prod.matrix.to_rational().minus_identity().kernel_basis();
        let first = fixed_space.basis().first()?.clone();
        let cycle = orbit(&alphabet, &prod.word, &first);
        Some(SearchHit {
            word: prod.word.clone(),
            product: prod.matrix.clone(),
            fixed_space,
            cycle,
            annotations: Annotations {
                product_is_identity: prod.matrix.is_identity(),
                fiber_genus_two_note: genus_two,
            },
        })
    };
    let hits: Vec<SearchHit> = if cfg.parallel {
        products.par_iter().filter_map(check).collect()
    } else {
        products.iter().filter_map(check).collect()
    };
    Ok(SearchOutcome {
        products_enumerated: products.len(),
        hits,
    })
}

fn orbit(alphabet: &Alphabet, word: &Word, v: &[crate::Rational]) -> Vec<QVector> {
    let mut out = Vec::with_capacity(word.len());
    let mut cur = v.to_vec();
    for &l in word.letters() {
        out.push(cur.clone());
        cur = alphabet.matrix(l).apply(&cur).expect("vector length checked");
    }
    out
}

/// `(v, M_{i_1} v, M_{i_2} M_{i_1} v, ...)`, one class per letter; closes up
/// because the full product fixes `v`.
pub fn cycle_from_hit(p: &HolonomyProblem, hit: &SearchHit, v: &[crate::Rational]) -> Result<Vec<QVector>, SearchError> {
    let n = 2 * p.fiber_genus();
    if v.len() != n {
        return Err(SearchError::VectorLength {
            expected: n,
            found: v.len(),
        });
    }
    if hit.product.apply(v).expect("length checked") != v {
        return Err(SearchError::NotFixed { word: hit.word.clone() });
    }
    Ok(orbit(&Alphabet::new(p), &hit.word, v))
}
