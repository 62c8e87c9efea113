//! Realizers for the boolean base case: the binary product of selection
//! functions, an approximate excluded-middle solver, the
//! eventually-constant-value realizer, and their assembly into a monotone
//! constant-value subsequence finder for boolean sequences.

use std::sync::{Arc, Mutex};

use crate::fuel::{Fuel, Result};
use crate::seq::{CanonicalZero, InfSeq};

/// A fuel-metered function on naturals. Used both as realizer output and as
/// the argument type of the higher-order functionals below.
#[derive(Clone)]
pub struct NatFn(Arc<dyn Fn(usize, &mut Fuel) -> Result<usize> + Send + Sync>);

impl NatFn {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(usize, &mut Fuel) -> Result<usize> + Send + Sync + 'static,
    {
        NatFn(Arc::new(f))
    }

    pub fn pure<F>(f: F) -> Self
    where
        F: Fn(usize) -> usize + Send + Sync + 'static,
    {
        NatFn::new(move |n, _| Ok(f(n)))
    }

    pub fn constant(k: usize) -> Self {
        NatFn::pure(move |_| k)
    }

    pub fn identity() -> Self {
        NatFn::pure(|n| n)
    }

    pub fn eval(&self, n: usize, fuel: &mut Fuel) -> Result<usize> {
        (self.0)(n, fuel)
    }

    pub fn take(&self, n: usize, fuel: &mut Fuel) -> Result<Vec<usize>> {
        (0..n).map(|i| self.eval(i, fuel)).collect()
    }
}

impl CanonicalZero for NatFn {
    fn zero() -> Self {
        NatFn::constant(0)
    }
}

/// A player strategy `(ℕ→ℕ) → ℕ` in a two-move sequential game.
#[derive(Clone)]
pub struct SelectionFn(Arc<dyn Fn(&NatFn, &mut Fuel) -> Result<usize> + Send + Sync>);

impl SelectionFn {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(&NatFn, &mut Fuel) -> Result<usize> + Send + Sync + 'static,
    {
        SelectionFn(Arc::new(f))
    }

    pub fn constant(k: usize) -> Self {
        SelectionFn::new(move |_, _| Ok(k))
    }

    pub fn eval(&self, p: &NatFn, fuel: &mut Fuel) -> Result<usize> {
        fuel.spend(1)?;
        (self.0)(p, fuel)
    }
}

/// A counterexample functional `(ℕ→ℕ) → ℕ` bounding how far a candidate
/// subsequence must stay correct.
#[derive(Clone)]
pub struct Omega(Arc<dyn Fn(&NatFn, &mut Fuel) -> Result<usize> + Send + Sync>);

impl Omega {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(&NatFn, &mut Fuel) -> Result<usize> + Send + Sync + 'static,
    {
        Omega(Arc::new(f))
    }

    pub fn constant(k: usize) -> Self {
        Omega::new(move |_, _| Ok(k))
    }

    pub fn eval(&self, g: &NatFn, fuel: &mut Fuel) -> Result<usize> {
        fuel.spend(1)?;
        (self.0)(g, fuel)
    }
}

/// Challenge functional for the eventually-constant realizer: given a
/// candidate constant and a point function, names the point at which the
/// claim is tested.
#[derive(Clone)]
pub struct ConstChallenge(Arc<dyn Fn(bool, &NatFn, &mut Fuel) -> Result<usize> + Send + Sync>);

impl ConstChallenge {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(bool, &NatFn, &mut Fuel) -> Result<usize> + Send + Sync + 'static,
    {
        ConstChallenge(Arc::new(f))
    }

    pub fn eval(&self, c: bool, f: &NatFn, fuel: &mut Fuel) -> Result<usize> {
        fuel.spend(1)?;
        (self.0)(c, f, fuel)
    }

    /// The one-sided selection function `self(c, ·)`.
    pub fn fix(&self, c: bool) -> SelectionFn {
        let inner = self.0.clone();
        SelectionFn(Arc::new(move |p, fuel| inner(c, p, fuel)))
    }
}

/// Counterexample pair for the approximate excluded-middle solver.
#[derive(Clone)]
pub struct LemChallenge(Arc<dyn Fn(bool, usize, &NatFn, &mut Fuel) -> Result<usize> + Send + Sync>);

impl LemChallenge {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(bool, usize, &NatFn, &mut Fuel) -> Result<usize> + Send + Sync + 'static,
    {
        LemChallenge(Arc::new(f))
    }

    pub fn eval(&self, b: bool, n: usize, h: &NatFn, fuel: &mut Fuel) -> Result<usize> {
        fuel.spend(1)?;
        (self.0)(b, n, h, fuel)
    }
}

pub type Payoff = Arc<dyn Fn(usize, usize) -> usize + Send + Sync>;

/// Binary product of selection functions: optimal play of the two-move game
/// with payoff `q`. Returns the first move and the induced reply:
/// `b[i] = δ(λj.q(i,j))`, `a = ε(λi.q(i,b[i]))`, result `(a, b[a])`.
pub fn sel_product(
    eps: &SelectionFn,
    delta: &SelectionFn,
    q: &Payoff,
    fuel: &mut Fuel,
) -> Result<(usize, usize)> {
    let reply = {
        let delta = delta.clone();
        let q = q.clone();
        move |i: usize, fuel: &mut Fuel| {
            let q = q.clone();
            delta.eval(&NatFn::new(move |j, _| Ok(q(i, j))), fuel)
        }
    };
    let first = {
        let reply = reply.clone();
        let q = q.clone();
        NatFn::new(move |i, fuel| Ok(q(i, reply(i, fuel)?)))
    };
    let a = eps.eval(&first, fuel)?;
    let b_a = reply(a, fuel)?;
    Ok((a, b_a))
}

/// Approximate excluded middle for claims "there is an n such that P(n, k)
/// holds for every k". Against counterexample functionals `phi` and `psi`
/// the returned triple `(b, n, h)` is correct in the sense that
/// `b = false` asserts `P(n, phi(false, n, h))` and `b = true` asserts
/// `¬P(psi(true, n, h), h(psi(true, n, h)))`.
pub fn lem_sigma2<P>(
    p: P,
    phi: &LemChallenge,
    psi: &LemChallenge,
    fuel: &mut Fuel,
) -> Result<(bool, usize, NatFn)>
where
    P: Fn(usize, usize) -> bool + Send + Sync + 'static,
{
    let h_r = {
        let phi = phi.clone();
        NatFn::new(move |i, fuel| phi.eval(false, i, &NatFn::zero(), fuel))
    };
    let n_l = psi.eval(true, 0, &h_r, fuel)?;
    if p(n_l, phi.eval(false, n_l, &NatFn::zero(), fuel)?) {
        Ok((false, n_l, NatFn::zero()))
    } else {
        Ok((true, 0, h_r))
    }
}

/// Given a boolean sequence, produce a value `c` and a point function `f`
/// approximating "x equals c at arbitrarily late points": at the challenged
/// index `n = challenge(c, f)` one has `f(n) ≥ n` and `x_{f(n)} = c`.
pub fn eventually_constant_value(
    x: &InfSeq<bool>,
    challenge: &ConstChallenge,
    fuel: &mut Fuel,
) -> Result<(bool, NatFn)> {
    let q: Payoff = Arc::new(std::cmp::max);
    let (a, b_a) = sel_product(&challenge.fix(true), &challenge.fix(false), &q, fuel)?;
    if !x.get(a.max(b_a), fuel)? {
        Ok((false, NatFn::pure(move |i| a.max(i))))
    } else {
        let challenge = challenge.clone();
        let f = NatFn::new(move |i, fuel| {
            challenge.eval(false, &NatFn::pure(move |j| i.max(j)), fuel)
        });
        Ok((true, f))
    }
}

/// Turn a pointwise bound `f` with `f(n) ≥ n` into a strictly increasing
/// enumeration: `g(0) = f(0)`, `g(n+1) = f(g(n)+1)`. Memoized, so `g(n)`
/// costs one `f` evaluation beyond the cache.
pub fn monotone_from_pointwise(f: &NatFn) -> NatFn {
    let cache: Arc<Mutex<Vec<usize>>> = Arc::new(Mutex::new(Vec::new()));
    let f = f.clone();
    NatFn::new(move |n, fuel| {
        let mut known = cache.lock().unwrap();
        while known.len() <= n {
            let next = match known.last() {
                None => f.eval(0, fuel)?,
                Some(&prev) => f.eval(prev + 1, fuel)?,
            };
            known.push(next);
        }
        Ok(known[n])
    })
}

/// A realizer producing, for any letter sequence and counterexample
/// functional, an approximately monotone subsequence with related values.
pub type SubseqRealizer<L> =
    Arc<dyn Fn(&InfSeq<L>, &Omega, &mut Fuel) -> Result<NatFn> + Send + Sync>;

/// Boolean instance: the returned `g` satisfies `g(i) < g(j)` and
/// `x_{g(i)} = x_{g(j)}` for all `i < j ≤ ω(g)`.
///
/// The challenge functional handed to the eventually-constant realizer
/// probes, in order, the points `0, g(0)+1, …, g(k−1)+1` that the monotone
/// enumeration of a candidate `f` would visit up to `k = ω(g)`, and returns
/// the first point where `f(n) ≥ n ∧ x_{f(n)} = c` fails (0 when none
/// does). The realizer's guarantee at that single point then clears every
/// probed one.
pub fn constant_subseq_bool(x: &InfSeq<bool>, omega: &Omega, fuel: &mut Fuel) -> Result<NatFn> {
    let challenge = {
        let x = x.clone();
        let omega = omega.clone();
        ConstChallenge::new(move |c, f, fuel| {
            let g = monotone_from_pointwise(f);
            let k = omega.eval(&g, fuel)?;
            for t in 0..=k {
                let n = if t == 0 { 0 } else { g.eval(t - 1, fuel)? + 1 };
                let fn_val = f.eval(n, fuel)?;
                if !(fn_val >= n && x.get(fn_val, fuel)? == c) {
                    return Ok(n);
                }
            }
            Ok(0)
        })
    };
    let (_, f) = eventually_constant_value(x, &challenge, fuel)?;
    Ok(monotone_from_pointwise(&f))
}

pub fn bool_subseq_realizer() -> SubseqRealizer<bool> {
    Arc::new(|x, omega, fuel| constant_subseq_bool(x, omega, fuel))
}
