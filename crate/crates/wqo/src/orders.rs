//! Words over a base quasi-order: the embedding order, the strict prefix
//! order, badness of finite sequences, and the lexicographic comparison of
//! infinite sequences.

use std::sync::Arc;

use crate::fuel::{Fuel, Result};
use crate::seq::{CanonicalZero, InfSeq};

/// A decidable reflexive-transitive relation on letters. Reflexivity and
/// transitivity are not assumed by construction; the property suites check
/// them on the instances that ship.
#[derive(Clone)]
pub struct QuasiOrder<L> {
    leq: Arc<dyn Fn(&L, &L) -> bool + Send + Sync>,
}

impl<L> QuasiOrder<L> {
    pub fn new<F>(leq: F) -> Self
    where
        F: Fn(&L, &L) -> bool + Send + Sync + 'static,
    {
        QuasiOrder { leq: Arc::new(leq) }
    }

    /// Discrete order: letters relate only to themselves.
    pub fn equality() -> Self
    where
        L: PartialEq + Send + Sync + 'static,
    {
        QuasiOrder::new(|a: &L, b: &L| a == b)
    }

    /// Total order: every letter relates to every letter.
    pub fn always() -> Self {
        QuasiOrder::new(|_: &L, _: &L| true)
    }

    pub fn leq(&self, a: &L, b: &L) -> bool {
        (self.leq)(a, b)
    }
}

/// A finite sequence of letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<L>(pub Vec<L>);

impl<L: std::fmt::Debug> std::fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "w{:?}", self.0)
    }
}

impl<L> Word<L> {
    pub fn new(letters: Vec<L>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }
}

impl<L: CanonicalZero> Word<L> {
    /// Split off the last letter: `⟨x₁…x_k⟩ ↦ (⟨x₁…x_{k−1}⟩, x_k)`, with
    /// the empty word mapping to `(⟨⟩, 0)`.
    pub fn decompose(&self) -> (Word<L>, L) {
        match self.0.split_last() {
            None => (Word::empty(), L::zero()),
            Some((last, init)) => (Word(init.to_vec()), last.clone()),
        }
    }
}

impl<L: Clone + Send + Sync + 'static> CanonicalZero for Word<L> {
    fn zero() -> Self {
        Word::empty()
    }
}

/// Greedy left-to-right embedding: returns a strictly increasing map
/// `f : {0..|a|−1} → {0..|b|−1}` with `a_i ≼ b_{f(i)}` pointwise, if one
/// exists. Taking the earliest admissible match at each step is complete:
/// any witness can be shifted left match by match.
pub fn embeds<L>(a: &Word<L>, b: &Word<L>, base: &QuasiOrder<L>) -> Option<Vec<usize>> {
    let mut witness = Vec::with_capacity(a.len());
    let mut cursor = 0;
    for letter in a.letters() {
        let found = (cursor..b.len()).find(|&j| base.leq(letter, &b.0[j]))?;
        witness.push(found);
        cursor = found + 1;
    }
    Some(witness)
}

/// Reference semantics for `embeds`: backtracking search over all strictly
/// increasing maps. Test oracle; exponential in `|a|`.
pub fn brute_embeds<L>(a: &Word<L>, b: &Word<L>, base: &QuasiOrder<L>) -> bool {
    fn go<L>(a: &[L], b: &[L], start: usize, base: &QuasiOrder<L>) -> bool {
        match a.first() {
            None => true,
            Some(x) => (start..b.len())
                .any(|j| base.leq(x, &b[j]) && go(&a[1..], b, j + 1, base)),
        }
    }
    go(a.letters(), b.letters(), 0, base)
}

/// `a ⊲ b` iff `|a| < |b|` and the letters agree below `|a|`.
pub fn is_strict_prefix<L: PartialEq>(a: &Word<L>, b: &Word<L>) -> bool {
    a.len() < b.len() && a.letters() == &b.letters()[..a.len()]
}

/// Strict prefix as a letter relation for the recursors over word
/// sequences.
pub fn strict_prefix_lt<L: PartialEq + Send + Sync + 'static>(
) -> Arc<dyn Fn(&Word<L>, &Word<L>) -> bool + Send + Sync> {
    Arc::new(|a, b| is_strict_prefix(a, b))
}

/// No pair `i < j` embeds: the badness predicate on finite sequences of
/// words.
pub fn is_bad<L>(s: &[Word<L>], base: &QuasiOrder<L>) -> bool {
    for j in 1..s.len() {
        for i in 0..j {
            if embeds(&s[i], &s[j], base).is_some() {
                return false;
            }
        }
    }
    true
}

/// Least `n < bound` where `u` and `v` share a prefix of length `n` and
/// `u_n ⊲ v_n`; the bounded, witnessed form of the lexicographic order.
pub fn lex_less_witnessed<T, F>(
    u: &InfSeq<T>,
    v: &InfSeq<T>,
    lt: F,
    bound: usize,
    fuel: &mut Fuel,
) -> Result<Option<usize>>
where
    T: CanonicalZero + PartialEq,
    F: Fn(&T, &T) -> bool,
{
    for n in 0..bound {
        let un = u.get(n, fuel)?;
        let vn = v.get(n, fuel)?;
        if lt(&un, &vn) {
            return Ok(Some(n));
        }
        if un != vn {
            return Ok(None);
        }
    }
    Ok(None)
}
