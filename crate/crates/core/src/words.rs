//! Bi-letters, words, the four flexions and word-level pullbacks.

use std::fmt;

use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalar::Scalar;

/// A bi-letter `(u; v)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Biletter<S> {
    pub u: S,
    pub v: S,
}

impl<S: Scalar> Biletter<S> {
    pub fn new(u: S, v: S) -> Self {
        Biletter { u, v }
    }

    pub fn negate(&self) -> Self {
        Biletter::new(-self.u.clone(), -self.v.clone())
    }
}

impl<S: Scalar> fmt::Display for Biletter<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.u, self.v)
    }
}

/// A finite sequence of bi-letters; the empty word is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word<S> {
    letters: Vec<Biletter<S>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flexion {
    /// `ful(a, b)`: first letter of `b` absorbs the `u`-sum of `a`.
    Ful,
    /// `fur(a, b)`: last letter of `a` absorbs the `u`-sum of `b`.
    Fur,
    /// `fll(a, b)`: every `v` of `b` is shifted by `-v_last(a)`.
    Fll,
    /// `flr(a, b)`: every `v` of `a` is shifted by `-v_first(b)`.
    Flr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordTransform {
    Reverse,
    Negate,
    SwapPullback,
}

impl<S: Scalar> Word<S> {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn new(letters: Vec<Biletter<S>>) -> Self {
        Word { letters }
    }

    /// Builds a word from integer pairs; test and fixture helper.
    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        Word::new(
            pairs
                .iter()
                .map(|&(u, v)| Biletter::new(S::from_int(u), S::from_int(v)))
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Biletter<S>] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<&Biletter<S>> {
        self.letters.first()
    }

    pub fn last(&self) -> Option<&Biletter<S>> {
        self.letters.last()
    }

    /// Subword `[i, j)`.
    pub fn slice(&self, i: usize, j: usize) -> Self {
        Word::new(self.letters[i..j].to_vec())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn push(&mut self, letter: Biletter<S>) {
        self.letters.push(letter);
    }

    pub fn u_sum(&self) -> S {
        self.letters
            .iter()
            .fold(S::zero(), |acc, l| acc + l.u.clone())
    }

    pub fn reverse(&self) -> Self {
        Word::new(self.letters.iter().rev().cloned().collect())
    }

    pub fn negate(&self) -> Self {
        Word::new(self.letters.iter().map(Biletter::negate).collect())
    }

    /// `((v_r; u_1+..+u_r), (v_{r-1}-v_r; u_1+..+u_{r-1}), .., (v_1-v_2; u_1))`.
    pub fn swap_pullback(&self) -> Self {
        let r = self.len();
        let mut prefix = Vec::with_capacity(r);
        let mut acc = S::zero();
        for l in &self.letters {
            acc = acc + l.u.clone();
            prefix.push(acc.clone());
        }
        let mut out = Vec::with_capacity(r);
        for k in (0..r).rev() {
            let v = if k + 1 < r {
                self.letters[k].v.clone() - self.letters[k + 1].v.clone()
            } else {
                self.letters[k].v.clone()
            };
            out.push(Biletter::new(v, prefix[k].clone()));
        }
        Word::new(out)
    }

    pub fn transform(&self, kind: WordTransform) -> Self {
        match kind {
            WordTransform::Reverse => self.reverse(),
            WordTransform::Negate => self.negate(),
            WordTransform::SwapPullback => self.swap_pullback(),
        }
    }

    /// All two-block factorizations `w = a b`, from `a = ∅` to `b = ∅`.
    pub fn splits(&self) -> impl Iterator<Item = (Word<S>, Word<S>)> + '_ {
        (0..=self.len()).map(move |i| (self.slice(0, i), self.slice(i, self.len())))
    }

    fn with_v_shift(&self, shift: &S) -> Self {
        Word::new(
            self.letters
                .iter()
                .map(|l| Biletter::new(l.u.clone(), l.v.clone() - shift.clone()))
                .collect(),
        )
    }
}

pub fn ful<S: Scalar>(a: &Word<S>, b: &Word<S>) -> Word<S> {
    if a.is_empty() || b.is_empty() {
        return b.clone();
    }
    let mut out = b.clone();
    out.letters[0].u = a.u_sum() + out.letters[0].u.clone();
    out
}

pub fn fur<S: Scalar>(a: &Word<S>, b: &Word<S>) -> Word<S> {
    if a.is_empty() || b.is_empty() {
        return a.clone();
    }
    let mut out = a.clone();
    let last = out.letters.len() - 1;
    out.letters[last].u = out.letters[last].u.clone() + b.u_sum();
    out
}

pub fn fll<S: Scalar>(a: &Word<S>, b: &Word<S>) -> Word<S> {
    match a.last() {
        Some(l) if !b.is_empty() => b.with_v_shift(&l.v),
        _ => b.clone(),
    }
}

pub fn flr<S: Scalar>(a: &Word<S>, b: &Word<S>) -> Word<S> {
    match b.first() {
        Some(l) if !a.is_empty() => a.with_v_shift(&l.v),
        _ => a.clone(),
    }
}

pub fn flexion<S: Scalar>(kind: Flexion, a: &Word<S>, b: &Word<S>) -> Word<S> {
    match kind {
        Flexion::Ful => ful(a, b),
        Flexion::Fur => fur(a, b),
        Flexion::Fll => fll(a, b),
        Flexion::Flr => flr(a, b),
    }
}

/// All interleavings of `a` and `b`, with multiplicity.
pub fn shuffles<S: Scalar>(a: &Word<S>, b: &Word<S>) -> Vec<Word<S>> {
    fn go<S: Scalar>(
        a: &[Biletter<S>],
        b: &[Biletter<S>],
        prefix: &mut Vec<Biletter<S>>,
        out: &mut Vec<Word<S>>,
    ) {
        if a.is_empty() || b.is_empty() {
            let mut w = prefix.clone();
            w.extend_from_slice(a);
            w.extend_from_slice(b);
            out.push(Word::new(w));
            return;
        }
        prefix.push(a[0].clone());
        go(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0].clone());
        go(a, &b[1..], prefix, out);
        prefix.pop();
    }
    let mut out = Vec::new();
    go(&a.letters, &b.letters, &mut Vec::new(), &mut out);
    out
}

/// Magnitude bounds for sampled letters: `p/q` with `0 < |p| <= max_numer`, `1 <= q <= max_denom`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    pub max_numer: i64,
    pub max_denom: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_numer: 100,
            max_denom: 20,
        }
    }
}

pub fn sample_scalar<S: Scalar, R: Rng + ?Sized>(rng: &mut R, bounds: Bounds) -> S {
    let mut p = rng.gen_range(1..=bounds.max_numer.max(1));
    if rng.gen_bool(0.5) {
        p = -p;
    }
    let q = rng.gen_range(1..=bounds.max_denom.max(1));
    S::ratio(p, q)
}

/// `r` independent bi-letters with nonzero rational entries.
pub fn sample_word<S: Scalar, R: Rng + ?Sized>(rng: &mut R, r: usize, bounds: Bounds) -> Word<S> {
    Word::new(
        (0..r)
            .map(|_| Biletter::new(sample_scalar(rng, bounds), sample_scalar(rng, bounds)))
            .collect(),
    )
}

impl<S: Scalar> fmt::Display for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

// JSON form: [["p/q","r/s"], ...]
impl<S: Scalar> Serialize for Word<S> {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        let pairs: Vec<[String; 2]> = self
            .letters
            .iter()
            .map(|l| [l.u.to_fraction_string(), l.v.to_fraction_string()])
            .collect();
        pairs.serialize(serializer)
    }
}

impl<'de, S: Scalar> Deserialize<'de> for Word<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<[String; 2]> = Vec::deserialize(deserializer)?;
        let mut letters = Vec::with_capacity(pairs.len());
        for [u, v] in pairs {
            let u = S::parse_fraction(&u).ok_or_else(|| D::Error::custom(format!("bad rational {u:?}")))?;
            let v = S::parse_fraction(&v).ok_or_else(|| D::Error::custom(format!("bad rational {v:?}")))?;
            letters.push(Biletter::new(u, v));
        }
        Ok(Word::new(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::Zero;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    type W = Word<Rat>;

    fn w(p: &[(i64, i64)]) -> W {
        Word::from_ints(p)
    }

    #[test]
    fn flexion_examples() {
        assert_eq!(ful(&w(&[(1, 2)]), &w(&[(3, 4), (5, 6)])), w(&[(4, 4), (5, 6)]));
        assert_eq!(flr(&w(&[(1, 2), (3, 4)]), &w(&[(5, 6)])), w(&[(1, -4), (3, -2)]));
        assert_eq!(fur(&w(&[(1, 2), (3, 4)]), &w(&[(5, 6), (7, 8)])), w(&[(1, 2), (15, 4)]));
        assert_eq!(fll(&w(&[(1, 2), (3, 4)]), &w(&[(5, 6), (7, 8)])), w(&[(5, 2), (7, 4)]));
    }

    #[test]
    fn flexion_boundaries() {
        let a = w(&[(1, 2), (3, 4)]);
        let e = W::empty();
        assert_eq!(ful(&a, &e), e);
        assert_eq!(flr(&a, &e), a);
        assert_eq!(fur(&a, &e), a);
        assert_eq!(fll(&a, &e), e);
        assert_eq!(ful(&e, &a), a);
        assert_eq!(fur(&e, &a), e);
        assert_eq!(fll(&e, &a), a);
        assert_eq!(flr(&e, &a), e);
    }

    #[test]
    fn word_transforms() {
        let x = w(&[(1, 2), (3, 4)]);
        assert_eq!(x.negate(), w(&[(-1, -2), (-3, -4)]));
        assert_eq!(x.reverse(), w(&[(3, 4), (1, 2)]));
        assert_eq!(w(&[(5, 7)]).swap_pullback(), w(&[(7, 5)]));
        // ((v2; u1+u2), (v1-v2; u1))
        assert_eq!(x.swap_pullback(), w(&[(4, 4), (-2, 1)]));
    }

    #[test]
    fn shuffle_counts() {
        let x = w(&[(1, 1)]);
        let y = w(&[(2, 2)]);
        let s = shuffles(&x, &y);
        assert_eq!(s.len(), 2);
        assert!(s.contains(&w(&[(1, 1), (2, 2)])));
        assert!(s.contains(&w(&[(2, 2), (1, 1)])));
        assert_eq!(shuffles(&w(&[(1, 1), (2, 2)]), &w(&[(3, 3), (4, 4)])).len(), 6);
        assert_eq!(shuffles(&W::empty(), &x), vec![x.clone()]);
    }

    #[test]
    fn sampling_is_deterministic_and_nonzero() {
        let b = Bounds { max_numer: 100, max_denom: 20 };
        let mut r1 = ChaCha8Rng::seed_from_u64(42);
        let mut r2 = ChaCha8Rng::seed_from_u64(42);
        let a: W = sample_word(&mut r1, 3, b);
        let c: W = sample_word(&mut r2, 3, b);
        assert_eq!(a, c);
        assert_eq!(a.len(), 3);
        for l in a.letters() {
            assert!(!l.u.is_zero() && !l.v.is_zero());
        }
        let mut r0 = ChaCha8Rng::seed_from_u64(1);
        assert!(sample_word::<Rat, _>(&mut r0, 0, b).is_empty());
    }

    #[test]
    fn resampled_words_are_fresh() {
        // a retry draws the next word from the same stream; it should differ
        let b = Bounds::default();
        let mut fresh = 0;
        for seed in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let first: W = sample_word(&mut rng, 2, b);
            let retry: W = sample_word(&mut rng, 2, b);
            if first != retry {
                fresh += 1;
            }
        }
        assert_eq!(fresh, 100);
    }

    #[test]
    fn json_round_trip() {
        let x: W = Word::new(vec![Biletter::new(Rat::ratio(1, 2), Rat::ratio(-3, 4))]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"[["1/2","-3/4"]]"#);
        let back: W = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    fn arb_word(max: usize) -> impl Strategy<Value = W> {
        prop::collection::vec(((-20i64..20), (1i64..6), (-20i64..20), (1i64..6)), 0..=max).prop_map(|v| {
            Word::new(
                v.into_iter()
                    .map(|(a, b, c, d)| Biletter::new(Rat::ratio(a, b), Rat::ratio(c, d)))
                    .collect(),
            )
        })
    }

    fn multiset(ws: Vec<W>) -> HashMap<W, usize> {
        let mut m = HashMap::new();
        for x in ws {
            *m.entry(x).or_insert(0) += 1;
        }
        m
    }

    proptest! {
        #[test]
        fn swap_pullback_is_involution(x in arb_word(5)) {
            prop_assert_eq!(x.swap_pullback().swap_pullback(), x);
        }

        #[test]
        fn flexion_length_and_conservation(a in arb_word(4), b in arb_word(4)) {
            let f = ful(&a, &b);
            prop_assert_eq!(f.len(), b.len());
            let l = flr(&a, &b);
            prop_assert_eq!(l.len(), a.len());
            // ful/fur touch exactly one u; fll/flr only v's
            let changed_u = f.letters().iter().zip(b.letters()).filter(|(x, y)| x.u != y.u).count();
            prop_assert!(changed_u <= 1);
            prop_assert!(f.letters().iter().zip(b.letters()).all(|(x, y)| x.v == y.v));
            prop_assert!(l.letters().iter().zip(a.letters()).all(|(x, y)| x.u == y.u));
            let r = fll(&a, &b);
            prop_assert!(r.letters().iter().zip(b.letters()).all(|(x, y)| x.u == y.u));
            let ur = fur(&a, &b);
            prop_assert_eq!(ur.u_sum(), if a.is_empty() { Rat::zero() } else { a.u_sum() + b.u_sum() });
        }

        #[test]
        fn reversal_duality(a in arb_word(4), b in arb_word(4)) {
            prop_assert_eq!(fll(&a, &b).reverse(), flr(&b.reverse(), &a.reverse()));
            prop_assert_eq!(ful(&a, &b).reverse(), fur(&b.reverse(), &a.reverse()));
        }

        #[test]
        fn shuffles_are_symmetric(a in arb_word(3), b in arb_word(3)) {
            prop_assert_eq!(multiset(shuffles(&a, &b)), multiset(shuffles(&b, &a)));
        }
    }
}
