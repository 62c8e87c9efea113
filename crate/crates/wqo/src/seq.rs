//! Finitely-described total infinite sequences.
//!
//! A sequence is an explicit prefix plus a tail rule; evaluation at any
//! index is deterministic and, for generator tails, memoized. The two
//! truncation operators live here as well: `InfSeq::truncate` zero-pads
//! past a cutoff, and `settle` searches for the least cutoff that a control
//! functional certifies as sufficient.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::fuel::{Error, Fuel, Result};

/// Types with a designated zero element: 0 for naturals, false for
/// booleans, the empty word for words, the constant-zero function for
/// function values.
pub trait CanonicalZero: Clone + Send + Sync + 'static {
    fn zero() -> Self;

    fn is_zero(&self) -> bool
    where
        Self: PartialEq,
    {
        *self == Self::zero()
    }
}

impl CanonicalZero for bool {
    fn zero() -> Self {
        false
    }
}

impl CanonicalZero for usize {
    fn zero() -> Self {
        0
    }
}

impl CanonicalZero for () {
    fn zero() -> Self {}
}

impl<T: Clone + Send + Sync + 'static> CanonicalZero for Vec<T> {
    fn zero() -> Self {
        Vec::new()
    }
}

/// Letters a sequence or recursor ranges over: zero-equipped, hashable
/// values usable as memo keys.
pub trait Letter: CanonicalZero + Eq + std::hash::Hash {}
impl<T: CanonicalZero + Eq + std::hash::Hash> Letter for T {}

/// Tail rule evaluated at absolute indices past the prefix.
pub type GenRule<T> = Arc<dyn Fn(usize, &mut Fuel) -> Result<T> + Send + Sync>;

enum Tail<T> {
    ConstantZero,
    RepeatLast,
    Periodic(Vec<T>),
    Generator { name: String, rule: GenRule<T> },
}

struct Inner<T> {
    prefix: Vec<T>,
    tail: Tail<T>,
    memo: Mutex<HashMap<usize, T>>,
}

/// A total function from natural indices to `T`, carried as a finite
/// description. Values are immutable after construction; the memo cache is
/// internally synchronized and observationally invisible.
pub struct InfSeq<T> {
    inner: Arc<Inner<T>>,
}

impl<T> Clone for InfSeq<T> {
    fn clone(&self) -> Self {
        InfSeq { inner: self.inner.clone() }
    }
}

impl<T: CanonicalZero + fmt::Debug + PartialEq> fmt::Debug for InfSeq<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InfSeq({:?} ++ {})", self.inner.prefix, self.tail_name())
    }
}

impl<T: CanonicalZero> InfSeq<T> {
    fn build(prefix: Vec<T>, tail: Tail<T>) -> Self {
        InfSeq { inner: Arc::new(Inner { prefix, tail, memo: Mutex::new(HashMap::new()) }) }
    }

    /// The all-zero sequence.
    pub fn zero() -> Self {
        Self::build(Vec::new(), Tail::ConstantZero)
    }

    /// Explicit prefix followed by canonical zeros.
    pub fn from_prefix_zero(prefix: Vec<T>) -> Self {
        Self::build(prefix, Tail::ConstantZero)
    }

    /// Explicit prefix whose last element repeats forever (all zeros when
    /// the prefix is empty).
    pub fn repeat_last(prefix: Vec<T>) -> Self {
        if prefix.is_empty() {
            Self::zero()
        } else {
            Self::build(prefix, Tail::RepeatLast)
        }
    }

    /// Explicit prefix followed by a cyclic block (all zeros when the block
    /// is empty).
    pub fn periodic(prefix: Vec<T>, block: Vec<T>) -> Self {
        if block.is_empty() {
            Self::from_prefix_zero(prefix)
        } else {
            Self::build(prefix, Tail::Periodic(block))
        }
    }

    /// Pure index rule, memoized.
    pub fn generator<F>(name: impl Into<String>, rule: F) -> Self
    where
        F: Fn(usize) -> T + Send + Sync + 'static,
    {
        Self::generator_fallible(name, move |n, _| Ok(rule(n)))
    }

    /// Index rule that may recurse through fuel-metered evaluations.
    /// Successful values are memoized, so two evaluations at the same index
    /// always agree.
    pub fn generator_fallible<F>(name: impl Into<String>, rule: F) -> Self
    where
        F: Fn(usize, &mut Fuel) -> Result<T> + Send + Sync + 'static,
    {
        Self::build(Vec::new(), Tail::Generator { name: name.into(), rule: Arc::new(rule) })
    }

    fn tail_name(&self) -> String {
        match &self.inner.tail {
            Tail::ConstantZero => "zero".into(),
            Tail::RepeatLast => "repeat_last".into(),
            Tail::Periodic(b) => format!("periodic[{}]", b.len()),
            Tail::Generator { name, .. } => format!("gen:{name}"),
        }
    }

    pub fn get(&self, n: usize, fuel: &mut Fuel) -> Result<T> {
        let prefix = &self.inner.prefix;
        if n < prefix.len() {
            return Ok(prefix[n].clone());
        }
        match &self.inner.tail {
            Tail::ConstantZero => Ok(T::zero()),
            Tail::RepeatLast => Ok(prefix.last().cloned().unwrap_or_else(T::zero)),
            Tail::Periodic(block) => Ok(block[(n - prefix.len()) % block.len()].clone()),
            Tail::Generator { rule, .. } => {
                if let Some(v) = self.inner.memo.lock().unwrap().get(&n) {
                    return Ok(v.clone());
                }
                let v = rule(n, fuel)?;
                self.inner.memo.lock().unwrap().insert(n, v.clone());
                Ok(v)
            }
        }
    }

    /// First `n` values as a finite sequence.
    pub fn take(&self, n: usize, fuel: &mut Fuel) -> Result<Vec<T>> {
        (0..n).map(|i| self.get(i, fuel)).collect()
    }

    /// Zero extension: keep indices below `m`, canonical zero beyond. The
    /// result always has a `ConstantZero` tail with support `m`.
    pub fn truncate(&self, m: usize, fuel: &mut Fuel) -> Result<InfSeq<T>> {
        Ok(Self::from_prefix_zero(self.take(m, fuel)?))
    }

    /// `head ++ self`, shifting the tail rule accordingly.
    pub fn prepend(&self, head: Vec<T>) -> InfSeq<T> {
        let offset = head.len();
        let mut prefix = head;
        prefix.extend_from_slice(&self.inner.prefix);
        let tail = match &self.inner.tail {
            Tail::ConstantZero => Tail::ConstantZero,
            Tail::RepeatLast => {
                // An empty prefix under RepeatLast denoted all zeros; keep
                // that meaning rather than repeating the new head.
                if self.inner.prefix.is_empty() {
                    Tail::ConstantZero
                } else {
                    Tail::RepeatLast
                }
            }
            Tail::Periodic(b) => Tail::Periodic(b.clone()),
            Tail::Generator { name, .. } => {
                let base = self.clone();
                Tail::Generator {
                    name: format!("{name}>>{offset}"),
                    rule: Arc::new(move |n, fuel| base.get(n - offset, fuel)),
                }
            }
        };
        Self::build(prefix, tail)
    }

    /// `self|at ∗ suffix`: first `at` values of `self`, then `suffix`.
    pub fn splice(&self, at: usize, suffix: &InfSeq<T>, fuel: &mut Fuel) -> Result<InfSeq<T>> {
        Ok(suffix.prepend(self.take(at, fuel)?))
    }

    /// `Some(len)` when the tail is `ConstantZero`; every index at or past
    /// the bound evaluates to zero.
    pub fn support_bound(&self) -> Option<usize> {
        match self.inner.tail {
            Tail::ConstantZero => Some(self.inner.prefix.len()),
            _ => None,
        }
    }

    /// An index bound below which every distinct value of the sequence
    /// occurs, when the tail structure reveals one.
    pub fn search_bound(&self) -> Option<usize> {
        let p = self.inner.prefix.len();
        match &self.inner.tail {
            Tail::ConstantZero | Tail::RepeatLast => Some(p + 1),
            Tail::Periodic(b) => Some(p + b.len()),
            Tail::Generator { .. } => None,
        }
    }

    /// Pointwise map. Zero-tailed descriptions are preserved when `f`
    /// preserves zero; otherwise the result falls back to a memoized
    /// generator over `self`.
    pub fn map<U, F>(&self, name: impl Into<String>, f: F) -> InfSeq<U>
    where
        U: CanonicalZero + PartialEq,
        T: PartialEq,
        F: Fn(&T) -> U + Send + Sync + 'static,
    {
        if self.support_bound().is_some() && f(&T::zero()) == U::zero() {
            InfSeq::from_prefix_zero(self.inner.prefix.iter().map(&f).collect())
        } else {
            let base = self.clone();
            InfSeq::generator_fallible(name, move |n, fuel| Ok(f(&base.get(n, fuel)?)))
        }
    }
}

impl<T: CanonicalZero + PartialEq> InfSeq<T> {
    /// The materialized prefix with trailing zeros trimmed, for zero-tailed
    /// sequences only. Equal keys mean pointwise-equal sequences.
    pub fn canonical_prefix(&self) -> Option<Vec<T>> {
        self.support_bound()?;
        let mut p = self.inner.prefix.clone();
        while p.last().map(|v| v.is_zero()).unwrap_or(false) {
            p.pop();
        }
        Some(p)
    }

    /// Pointwise equality up to both support bounds. Defined only between
    /// zero-tailed sequences; `None` otherwise.
    pub fn finite_eq(&self, other: &InfSeq<T>) -> Option<bool> {
        let a = self.canonical_prefix()?;
        let b = other.canonical_prefix()?;
        Some(a == b)
    }
}

impl<T: CanonicalZero> CanonicalZero for InfSeq<T> {
    fn zero() -> Self {
        InfSeq::zero()
    }
}

/// Result of settling a sequence under a control functional: the truncation
/// together with the least threshold that the control accepted.
#[derive(Clone, Debug)]
pub struct Settled<T> {
    pub seq: InfSeq<T>,
    pub threshold: usize,
}

/// Search m = 0, 1, 2, … for the least cutoff with
/// `control(truncate(alpha, m)) < m`, spending one fuel unit per probe, and
/// return the truncation at that cutoff. A control functional that depends
/// on more than a finite part of its argument makes the search run forever;
/// the budget converts that into a `FuelExhausted` report.
pub fn settle<T, F>(alpha: &InfSeq<T>, control: F, fuel: &mut Fuel) -> Result<Settled<T>>
where
    T: CanonicalZero,
    F: Fn(&InfSeq<T>, &mut Fuel) -> Result<usize>,
{
    for m in 0.. {
        fuel.spend(1)?;
        let truncated = alpha.truncate(m, fuel)?;
        if control(&truncated, fuel)? < m {
            return Ok(Settled { seq: truncated, threshold: m });
        }
    }
    unreachable!("search range is unbounded")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat_seq(prefix: Vec<usize>) -> InfSeq<usize> {
        InfSeq::from_prefix_zero(prefix)
    }

    #[test]
    fn tail_rules_evaluate() {
        let mut fuel = Fuel::unlimited();
        let z: InfSeq<usize> = InfSeq::zero();
        assert_eq!(z.get(7, &mut fuel).unwrap(), 0);

        let r = InfSeq::repeat_last(vec![4, 9]);
        assert_eq!(r.take(4, &mut fuel).unwrap(), vec![4, 9, 9, 9]);

        let p = InfSeq::periodic(vec![7], vec![1, 2]);
        assert_eq!(p.take(6, &mut fuel).unwrap(), vec![7, 1, 2, 1, 2, 1]);

        let g = InfSeq::generator("sq", |n| n * n);
        assert_eq!(g.get(5, &mut fuel).unwrap(), 25);
        assert_eq!(g.get(5, &mut fuel).unwrap(), 25);
    }

    #[test]
    fn truncate_at_zero_is_all_zero() {
        let mut fuel = Fuel::unlimited();
        let u = InfSeq::generator("id", |n| n);
        let t = u.truncate(0, &mut fuel).unwrap();
        assert_eq!(t.take(5, &mut fuel).unwrap(), vec![0; 5]);
        assert_eq!(t.support_bound(), Some(0));
    }

    #[test]
    fn truncate_cuts_and_pads() {
        let mut fuel = Fuel::unlimited();
        let u = InfSeq::generator("succ", |n| n + 1); // 1,2,3,4,…
        let t = u.truncate(2, &mut fuel).unwrap();
        assert_eq!(t.take(5, &mut fuel).unwrap(), vec![1, 2, 0, 0, 0]);
    }

    #[test]
    fn truncate_keeps_boundary_value() {
        let mut fuel = Fuel::unlimited();
        let u = InfSeq::generator("double", |n| 2 * n);
        for m in 1..6 {
            let t = u.truncate(m, &mut fuel).unwrap();
            assert_eq!(t.get(m - 1, &mut fuel).unwrap(), u.get(m - 1, &mut fuel).unwrap());
        }
    }

    #[test]
    fn settle_constant_control() {
        let mut fuel = Fuel::new(100);
        let u = InfSeq::repeat_last(vec![3]);
        let s = settle(&u, |_, _| Ok(0), &mut fuel).unwrap();
        assert_eq!(s.threshold, 1);
        assert_eq!(s.seq.take(3, &mut fuel).unwrap(), vec![3, 0, 0]);
    }

    #[test]
    fn settle_head_control() {
        // Independent check: scan thresholds by hand for F(β) = β₀ on (3,3,3,…).
        let mut fuel = Fuel::new(1000);
        let u = InfSeq::repeat_last(vec![3]);
        let control = |beta: &InfSeq<usize>, fuel: &mut Fuel| beta.get(0, fuel);
        let mut expected = None;
        for m in 0..10 {
            let t = u.truncate(m, &mut fuel).unwrap();
            if t.get(0, &mut fuel).unwrap() < m {
                expected = Some(m);
                break;
            }
        }
        let s = settle(&u, control, &mut fuel).unwrap();
        assert_eq!(Some(s.threshold), expected);
        assert_eq!(s.threshold, 4);
        assert!(s.seq.finite_eq(&u.truncate(4, &mut fuel).unwrap()).unwrap());
    }

    #[test]
    fn settle_exhausts_on_diverging_control() {
        // F(β) = least n with β_n = 0 gives F(truncate(α,m)) = m on an
        // all-ones sequence, so the search condition never fires.
        let mut fuel = Fuel::new(500);
        let u = InfSeq::repeat_last(vec![1usize]);
        let control = |beta: &InfSeq<usize>, fuel: &mut Fuel| {
            let mut n = 0;
            loop {
                if beta.get(n, fuel)? == 0 {
                    return Ok(n);
                }
                n += 1;
            }
        };
        let err = settle(&u, control, &mut fuel).unwrap_err();
        assert!(err.is_fuel());
    }

    #[test]
    fn splice_and_prepend_shift_tails() {
        let mut fuel = Fuel::unlimited();
        let base = InfSeq::generator("id", |n| n);
        let s = base.prepend(vec![100, 200]);
        assert_eq!(s.take(5, &mut fuel).unwrap(), vec![100, 200, 0, 1, 2]);

        let u = nat_seq(vec![5, 6, 7]);
        let v = InfSeq::periodic(vec![], vec![1, 2]);
        let spliced = u.splice(2, &v, &mut fuel).unwrap();
        assert_eq!(spliced.take(6, &mut fuel).unwrap(), vec![5, 6, 1, 2, 1, 2]);

        // repeat_last over an empty prefix means all zeros, also after a prepend
        let w = InfSeq::repeat_last(Vec::<usize>::new()).prepend(vec![9]);
        assert_eq!(w.take(3, &mut fuel).unwrap(), vec![9, 0, 0]);
    }

    #[test]
    fn canonical_prefix_trims() {
        let a = nat_seq(vec![1, 0, 2, 0, 0]);
        let b = nat_seq(vec![1, 0, 2]);
        assert_eq!(a.canonical_prefix().unwrap(), vec![1, 0, 2]);
        assert!(a.finite_eq(&b).unwrap());
        let g: InfSeq<usize> = InfSeq::generator("id", |n| n);
        assert!(g.canonical_prefix().is_none());
    }

    #[test]
    fn map_preserves_zero_tails() {
        let mut fuel = Fuel::unlimited();
        let a = nat_seq(vec![1, 2, 3]);
        let doubled = a.map("double", |x| x * 2);
        assert_eq!(doubled.support_bound(), Some(3));
        assert_eq!(doubled.take(4, &mut fuel).unwrap(), vec![2, 4, 6, 0]);
        // A non-zero-preserving map must not claim a zero tail.
        let bumped = a.map("bump", |x| x + 1);
        assert_eq!(bumped.support_bound(), None);
        assert_eq!(bumped.take(4, &mut fuel).unwrap(), vec![2, 3, 4, 1]);
    }

    /// Control templates that depend on at most the first `k` entries.
    fn template_control(k: usize, coeffs: Vec<usize>, offset: usize) -> impl Fn(&InfSeq<usize>, &mut Fuel) -> Result<usize> {
        move |beta, fuel| {
            let mut acc = offset;
            for i in 0..k {
                acc += coeffs[i % coeffs.len().max(1)].wrapping_mul(beta.get(i, fuel)?) % 17;
            }
            Ok(acc % 23)
        }
    }

    proptest! {
        #[test]
        fn truncate_idempotent(prefix in proptest::collection::vec(0usize..9, 0..8), m in 0usize..10) {
            let mut fuel = Fuel::unlimited();
            let u = InfSeq::periodic(prefix, vec![3, 1]);
            let once = u.truncate(m, &mut fuel).unwrap();
            let twice = once.truncate(m, &mut fuel).unwrap();
            for i in 0..=m + 1 {
                prop_assert_eq!(once.get(i, &mut fuel).unwrap(), twice.get(i, &mut fuel).unwrap());
            }
        }

        #[test]
        fn settle_laws(
            prefix in proptest::collection::vec(0usize..6, 0..6),
            k in 1usize..4,
            coeffs in proptest::collection::vec(1usize..7, 1..4),
            offset in 0usize..8,
        ) {
            let mut fuel = Fuel::new(100_000);
            let u = InfSeq::periodic(prefix, vec![2, 5, 1]);
            let control = template_control(k, coeffs, offset);

            // shape: settled = truncate(α, threshold) and control(settled) < threshold
            let s = settle(&u, &control, &mut fuel).unwrap();
            let direct = u.truncate(s.threshold, &mut fuel).unwrap();
            prop_assert!(s.seq.finite_eq(&direct).unwrap());
            prop_assert!(control(&s.seq, &mut fuel).unwrap() < s.threshold);

            // idempotence: settling the settled sequence changes nothing
            let s2 = settle(&s.seq, &control, &mut fuel).unwrap();
            prop_assert_eq!(s2.threshold, s.threshold);
            prop_assert!(s2.seq.finite_eq(&s.seq).unwrap());

            // locality: any sequence agreeing below the threshold settles identically
            let agreeing = s.seq.splice(s.threshold, &InfSeq::repeat_last(vec![4]), &mut fuel).unwrap();
            let s3 = settle(&agreeing, &control, &mut fuel).unwrap();
            prop_assert_eq!(s3.threshold, s.threshold);
            prop_assert!(s3.seq.finite_eq(&s.seq).unwrap());
        }
    }
}
