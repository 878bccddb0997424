//! Bimould expression graph and its exact, memoized evaluator.
//!
//! Moulds are nodes of an append-only [`Graph`]; structurally identical
//! nodes are hash-consed into one id, so shared subexpressions (the canonical
//! moulds in particular) are evaluated once per word. Evaluation goes through
//! an [`EvalContext`], which owns the memo tables and may be shared between
//! threads.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};
use sha2::{Digest as _, Sha256};

use crate::scalar::Scalar;
use crate::words::{fll, flr, ful, fur, Biletter, Word, WordTransform};

/// Handle of a node in a [`Graph`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MouldId(pub(crate) u32);

impl MouldId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for MouldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Value class at the empty word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmptyClass {
    /// `A(∅) = 1`.
    Group,
    /// `A(∅) = 0`.
    Lie,
    Free,
}

/// One-letter function; `None` signals a vanishing denominator.
pub type LetterFn<S> = Arc<dyn Fn(&Biletter<S>) -> Option<S> + Send + Sync>;
/// Whole-word function; `None` signals a vanishing denominator.
pub type WordFn<S> = Arc<dyn Fn(&Word<S>) -> Option<S> + Send + Sync>;

/// A closure compared by identity, so that it can sit inside hash-consed nodes.
#[derive(Clone)]
pub(crate) struct Opaque<F> {
    id: u32,
    name: Arc<str>,
    f: F,
}

impl<F> PartialEq for Opaque<F> {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}
impl<F> Eq for Opaque<F> {}
impl<F> Hash for Opaque<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

/// Word pullbacks: `A ↦ A ∘ τ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Pull {
    Anti,
    Neg,
    Swap,
    /// `neg ∘ anti ∘ swap ∘ anti ∘ swap`.
    Push,
    /// `swap ∘ anti ∘ swap ∘ anti ∘ neg`.
    PushInv,
}

impl Pull {
    /// Word map `τ` with `(op A)(w) = A(τ(w))`.
    ///
    /// For a composite operator `op1 ∘ op2`, `τ = τ2 ∘ τ1`: the outermost
    /// operator acts on the word first.
    pub fn apply<S: Scalar>(self, w: &Word<S>) -> Word<S> {
        use WordTransform::*;
        let chain: &[WordTransform] = match self {
            Pull::Anti => &[Reverse],
            Pull::Neg => &[Negate],
            Pull::Swap => &[SwapPullback],
            Pull::Push => &[Negate, Reverse, SwapPullback, Reverse, SwapPullback],
            Pull::PushInv => &[SwapPullback, Reverse, SwapPullback, Reverse, Negate],
        };
        chain.iter().fold(w.clone(), |acc, t| acc.transform(*t))
    }
}

/// Seeded pseudorandom mould: a digest of the exact word mapped to a bounded rational.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DigestSpec {
    pub seed: u64,
    pub max_numer: i64,
    pub max_denom: i64,
}

impl DigestSpec {
    pub fn new(seed: u64) -> Self {
        DigestSpec {
            seed,
            max_numer: 1000,
            max_denom: 97,
        }
    }

    pub fn value<S: Scalar>(&self, w: &Word<S>) -> S {
        let mut h = Sha256::new();
        h.update(b"flexion-digest");
        h.update(self.seed.to_le_bytes());
        for l in w.letters() {
            h.update(l.u.digest_bytes());
            h.update(b";");
            h.update(l.v.digest_bytes());
            h.update(b"|");
        }
        let out = h.finalize();
        let a = u64::from_le_bytes(out[0..8].try_into().unwrap());
        let b = u64::from_le_bytes(out[8..16].try_into().unwrap());
        let span = (2 * self.max_numer + 1) as u64;
        let p = (a % span) as i64 - self.max_numer;
        let q = (b % self.max_denom as u64) as i64 + 1;
        S::ratio(p, q)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) enum Node<S: Scalar> {
    Zero,
    One,
    /// Length-1 mould given by a letter function.
    Letter(Opaque<LetterFn<S>>),
    /// Closed-form mould; its value at ∅ is fixed by the class (`Free` calls the function).
    Closed(Opaque<WordFn<S>>, EmptyClass),
    Digest(DigestSpec),
    Lin(Vec<(S, MouldId)>),
    Pull(Pull, MouldId),
    Pari(MouldId),
    Mantar(MouldId),
    Der(MouldId),
    Leng(usize, MouldId),
    PushSym(MouldId),
    Mu(MouldId, MouldId),
    /// `mu` without the `a = ∅` term.
    MuTail(MouldId, MouldId),
    InvMu(MouldId),
    Swamu(MouldId, MouldId),
    Answamu(MouldId, MouldId),
    Amit { x: MouldId, a: MouldId },
    Anit { y: MouldId, a: MouldId },
    Gaxit { x: MouldId, y: MouldId, a: MouldId, skip_full: bool },
    /// Self-referential solution: value `at_empty(∅)` at ∅, else `body(w)`,
    /// divided by `ℓ(w)` when `len_div`.
    Fix { at_empty: MouldId, body: MouldId, len_div: bool },
    /// Placeholder for a `Fix` node whose body is still under construction.
    Pending(u32),
    ToSeries { oz: MouldId, o: MouldId },
    ETerDisplay { b: MouldId, e: MouldId },
    TripleSum { b: MouldId, mid: MouldId, right: MouldId },
}

#[derive(Clone)]
struct NodeEntry<S: Scalar> {
    node: Node<S>,
    class: EmptyClass,
    label: Arc<str>,
}

/// Append-only, hash-consed store of mould expressions.
#[derive(Clone)]
pub struct Graph<S: Scalar> {
    nodes: Vec<NodeEntry<S>>,
    cons: HashMap<Node<S>, MouldId>,
    names: HashMap<MouldId, String>,
    next_opaque: u32,
    max_len: usize,
}

/// Default cap on evaluated word lengths; series operators are expanded up to it.
pub const DEFAULT_MAX_LEN: usize = 6;

impl<S: Scalar> Default for Graph<S> {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_LEN)
    }
}

impl<S: Scalar> Graph<S> {
    /// `max_len` bounds the word lengths at which series-defined moulds
    /// (expari, logari, adari series) may be evaluated.
    pub fn new(max_len: usize) -> Self {
        let mut g = Graph {
            nodes: Vec::new(),
            cons: HashMap::new(),
            names: HashMap::new(),
            next_opaque: 0,
            max_len,
        };
        g.intern(Node::Zero);
        g.intern(Node::One);
        g
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn class(&self, id: MouldId) -> EmptyClass {
        self.nodes[id.index()].class
    }

    /// Human-readable node label, e.g. `mu#12` or a user-given name.
    pub fn label(&self, id: MouldId) -> String {
        match self.names.get(&id) {
            Some(n) => format!("{n}{id}"),
            None => format!("{}{id}", self.nodes[id.index()].label),
        }
    }

    /// Attaches a display name used in error paths.
    pub fn name(&mut self, id: MouldId, name: &str) -> MouldId {
        self.names.entry(id).or_insert_with(|| name.to_string());
        id
    }

    pub(crate) fn node(&self, id: MouldId) -> &Node<S> {
        &self.nodes[id.index()].node
    }

    fn empty_value(&self, id: MouldId) -> Option<S> {
        match self.class(id) {
            EmptyClass::Group => Some(S::one()),
            EmptyClass::Lie => Some(S::zero()),
            EmptyClass::Free => None,
        }
    }

    fn class_of_value(v: Option<S>) -> EmptyClass {
        match v {
            Some(x) if x.is_zero() => EmptyClass::Lie,
            Some(x) if x.is_one() => EmptyClass::Group,
            _ => EmptyClass::Free,
        }
    }

    fn infer_class(&self, node: &Node<S>) -> EmptyClass {
        use EmptyClass::*;
        let prod = |a: &MouldId, b: &MouldId| {
            Self::class_of_value(
                self.empty_value(*a)
                    .zip(self.empty_value(*b))
                    .map(|(x, y)| x * y),
            )
        };
        match node {
            Node::Zero | Node::Letter(_) | Node::Digest(_) | Node::ToSeries { .. } => Lie,
            Node::One => Group,
            Node::Closed(_, c) => *c,
            Node::Lin(terms) => {
                let mut acc = Some(S::zero());
                for (c, id) in terms {
                    acc = acc.zip(self.empty_value(*id)).map(|(s, e)| s + c.clone() * e);
                }
                Self::class_of_value(acc)
            }
            Node::Pull(_, a) | Node::Pari(a) | Node::PushSym(a) => self.class(*a),
            Node::Mantar(a) => Self::class_of_value(self.empty_value(*a).map(|x| -x)),
            Node::Der(_) => Lie,
            Node::Leng(r, a) => {
                if *r == 0 {
                    self.class(*a)
                } else {
                    Lie
                }
            }
            Node::Mu(a, b) | Node::Swamu(a, b) | Node::Answamu(a, b) => prod(a, b),
            Node::MuTail(..) | Node::Amit { .. } | Node::Anit { .. } => Lie,
            Node::InvMu(_) => Group,
            Node::Gaxit { a, skip_full, .. } => {
                if *skip_full {
                    Lie
                } else {
                    self.class(*a)
                }
            }
            Node::Fix { at_empty, .. } => self.class(*at_empty),
            Node::Pending(_) => Free,
            Node::ETerDisplay { b, .. } => self.class(*b),
            Node::TripleSum { b, mid, right } => Self::class_of_value(
                self.empty_value(*b)
                    .zip(self.empty_value(*mid))
                    .zip(self.empty_value(*right))
                    .map(|((x, y), z)| x * y * z),
            ),
        }
    }

    fn node_label(node: &Node<S>) -> Arc<str> {
        let s: &str = match node {
            Node::Zero => "0",
            Node::One => "1",
            Node::Letter(o) => return o.name.clone(),
            Node::Closed(o, _) => return o.name.clone(),
            Node::Digest(_) => "digest",
            Node::Lin(_) => "lin",
            Node::Pull(Pull::Anti, _) => "anti",
            Node::Pull(Pull::Neg, _) => "neg",
            Node::Pull(Pull::Swap, _) => "swap",
            Node::Pull(Pull::Push, _) => "push",
            Node::Pull(Pull::PushInv, _) => "push_inv",
            Node::Pari(_) => "pari",
            Node::Mantar(_) => "mantar",
            Node::Der(_) => "der",
            Node::Leng(..) => "leng",
            Node::PushSym(_) => "pushsym",
            Node::Mu(..) => "mu",
            Node::MuTail(..) => "mu_tail",
            Node::InvMu(_) => "invmu",
            Node::Swamu(..) => "swamu",
            Node::Answamu(..) => "answamu",
            Node::Amit { .. } => "amit",
            Node::Anit { .. } => "anit",
            Node::Gaxit { .. } => "gaxit",
            Node::Fix { .. } => "fix",
            Node::Pending(_) => "pending",
            Node::ToSeries { .. } => "To",
            Node::ETerDisplay { .. } => "E-ter",
            Node::TripleSum { .. } => "triple_sum",
        };
        Arc::from(s)
    }

    pub(crate) fn intern(&mut self, node: Node<S>) -> MouldId {
        if let Some(id) = self.cons.get(&node) {
            return *id;
        }
        let id = MouldId(u32::try_from(self.nodes.len()).expect("graph too large"));
        let class = self.infer_class(&node);
        let label = Self::node_label(&node);
        self.cons.insert(node.clone(), id);
        self.nodes.push(NodeEntry { node, class, label });
        id
    }

    fn fresh_opaque<F>(&mut self, name: &str, f: F) -> Opaque<F> {
        let id = self.next_opaque;
        self.next_opaque += 1;
        Opaque {
            id,
            name: Arc::from(name),
            f,
        }
    }

    // ---- primitives -------------------------------------------------------

    pub fn zero(&self) -> MouldId {
        MouldId(0)
    }

    /// The unit mould: 1 at ∅, 0 elsewhere.
    pub fn one(&self) -> MouldId {
        MouldId(1)
    }

    /// Length-1 mould `w1 ↦ f(w1)`.
    pub fn letter(&mut self, name: &str, f: LetterFn<S>) -> MouldId {
        let o = self.fresh_opaque(name, f);
        self.intern(Node::Letter(o))
    }

    pub fn closed(&mut self, name: &str, class: EmptyClass, f: WordFn<S>) -> MouldId {
        let o = self.fresh_opaque(name, f);
        self.intern(Node::Closed(o, class))
    }

    /// Lie-class pseudorandom mould, a deterministic function of `(spec, word)`.
    pub fn digest(&mut self, spec: DigestSpec) -> MouldId {
        self.intern(Node::Digest(spec))
    }

    /// `Σ c_i A_i`; zero coefficients and repeated operands are merged away.
    pub fn lin(&mut self, terms: &[(S, MouldId)]) -> MouldId {
        let mut merged: Vec<(S, MouldId)> = Vec::new();
        for (c, id) in terms {
            if *id == self.zero() {
                continue;
            }
            match merged.iter_mut().find(|(_, m)| m == id) {
                Some(slot) => slot.0 = slot.0.clone() + c.clone(),
                None => merged.push((c.clone(), *id)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        match merged.as_slice() {
            [] => self.zero(),
            [(c, id)] if c.is_one() => *id,
            _ => self.intern(Node::Lin(merged)),
        }
    }

    pub fn add(&mut self, a: MouldId, b: MouldId) -> MouldId {
        self.lin(&[(S::one(), a), (S::one(), b)])
    }

    pub fn sub(&mut self, a: MouldId, b: MouldId) -> MouldId {
        self.lin(&[(S::one(), a), (-S::one(), b)])
    }

    pub fn scale(&mut self, c: S, a: MouldId) -> MouldId {
        self.lin(&[(c, a)])
    }

    /// `-A` (additive negation; the letter negation is [`Graph::neg`]).
    pub fn minus(&mut self, a: MouldId) -> MouldId {
        self.lin(&[(-S::one(), a)])
    }

    /// `1 + A`.
    pub fn one_plus(&mut self, a: MouldId) -> MouldId {
        let one = self.one();
        self.add(one, a)
    }

    /// `1 - A`.
    pub fn one_minus(&mut self, a: MouldId) -> MouldId {
        let one = self.one();
        self.sub(one, a)
    }

    // ---- unary operators --------------------------------------------------

    pub fn pull(&mut self, kind: Pull, a: MouldId) -> MouldId {
        self.intern(Node::Pull(kind, a))
    }

    /// `anti(A)(w) = A(reverse w)`.
    pub fn anti(&mut self, a: MouldId) -> MouldId {
        self.pull(Pull::Anti, a)
    }

    /// `neg(A)(w) = A(-w)`.
    pub fn neg(&mut self, a: MouldId) -> MouldId {
        self.pull(Pull::Neg, a)
    }

    pub fn swap(&mut self, a: MouldId) -> MouldId {
        self.pull(Pull::Swap, a)
    }

    pub fn push(&mut self, a: MouldId) -> MouldId {
        self.pull(Pull::Push, a)
    }

    pub fn push_inv(&mut self, a: MouldId) -> MouldId {
        self.pull(Pull::PushInv, a)
    }

    /// `pari(A)(w) = (-1)^ℓ(w) A(w)`.
    pub fn pari(&mut self, a: MouldId) -> MouldId {
        self.intern(Node::Pari(a))
    }

    /// `mantar(A)(w) = (-1)^(ℓ(w)-1) A(reverse w)`.
    pub fn mantar(&mut self, a: MouldId) -> MouldId {
        self.intern(Node::Mantar(a))
    }

    /// `der(A)(w) = ℓ(w) A(w)`.
    pub fn der(&mut self, a: MouldId) -> MouldId {
        self.intern(Node::Der(a))
    }

    /// Length-`r` component of `A`.
    pub fn leng(&mut self, r: usize, a: MouldId) -> MouldId {
        self.intern(Node::Leng(r, a))
    }

    /// Per-length average of `push^k(A)`, `k = 0..=ℓ`.
    pub fn pushsym(&mut self, a: MouldId) -> MouldId {
        self.intern(Node::PushSym(a))
    }

    // ---- products -----------------------------------------------------------

    /// `mu(A,B)(w) = Σ_{w=ab} A(a) B(b)`.
    pub fn mu(&mut self, a: MouldId, b: MouldId) -> MouldId {
        let one = self.one();
        if a == one {
            return b;
        }
        if b == one {
            return a;
        }
        if a == self.zero() || b == self.zero() {
            return self.zero();
        }
        self.intern(Node::Mu(a, b))
    }

    pub(crate) fn mu_tail(&mut self, a: MouldId, b: MouldId) -> MouldId {
        self.intern(Node::MuTail(a, b))
    }

    /// `lu(A,B) = mu(A,B) - mu(B,A)`.
    pub fn lu(&mut self, a: MouldId, b: MouldId) -> MouldId {
        let ab = self.mu(a, b);
        let ba = self.mu(b, a);
        self.sub(ab, ba)
    }

    /// Inverse for `mu`; the operand must be group-class.
    pub fn invmu(&mut self, a: MouldId) -> MouldId {
        if a == self.one() {
            return a;
        }
        self.intern(Node::InvMu(a))
    }

    /// Reserves an id for a self-referential mould; finish with [`Graph::close_fix`].
    pub(crate) fn open_fix(&mut self) -> MouldId {
        let tag = self.next_opaque;
        self.next_opaque += 1;
        let id = MouldId(u32::try_from(self.nodes.len()).expect("graph too large"));
        self.nodes.push(NodeEntry {
            node: Node::Pending(tag),
            class: EmptyClass::Free,
            label: Arc::from("pending"),
        });
        id
    }

    pub(crate) fn close_fix(&mut self, id: MouldId, at_empty: MouldId, body: MouldId, len_div: bool, label: &str) {
        assert!(matches!(self.node(id), Node::Pending(_)), "fix node already closed");
        let node = Node::Fix {
            at_empty,
            body,
            len_div,
        };
        let class = self.infer_class(&node);
        self.nodes[id.index()] = NodeEntry {
            node,
            class,
            label: Arc::from(label),
        };
    }
}

/// Failure of a single evaluation.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    /// A denominator vanished; `path` runs from the failing node outwards.
    #[error("division by zero at {word} in {}", path.join(" <- "))]
    DivByZero { path: Vec<String>, word: String },
    #[error("word length {len} exceeds the graph's length cap {cap}")]
    LengthCap { len: usize, cap: usize },
    #[error("{node} is {class:?}-class but evaluates to {value} at the empty word")]
    ClassViolation {
        node: String,
        class: EmptyClass,
        value: String,
    },
    #[error("evaluation depth limit exceeded at {node}")]
    DepthLimit { node: String },
}

impl EvalError {
    pub fn is_div_by_zero(&self) -> bool {
        matches!(self, EvalError::DivByZero { .. })
    }

    fn wrap(mut self, label: impl FnOnce() -> String) -> Self {
        if let EvalError::DivByZero { path, .. } = &mut self {
            if path.len() < 24 {
                path.push(label());
            }
        }
        self
    }
}

/// Evaluation counters.
#[derive(Default, Debug)]
pub struct EvalStats {
    pub evaluations: AtomicU64,
    pub memo_hits: AtomicU64,
}

/// Memoizing evaluator over a frozen graph; `Sync`, so one context can serve many threads.
pub struct EvalContext<'g, S: Scalar> {
    graph: &'g Graph<S>,
    memo: Vec<RwLock<HashMap<Word<S>, S>>>,
    pub retry_cap: usize,
    pub stats: EvalStats,
}

const MAX_DEPTH: usize = 4096;

impl<'g, S: Scalar> EvalContext<'g, S> {
    pub fn new(graph: &'g Graph<S>) -> Self {
        EvalContext {
            graph,
            memo: (0..graph.len()).map(|_| RwLock::new(HashMap::new())).collect(),
            retry_cap: 8,
            stats: EvalStats::default(),
        }
    }

    pub fn graph(&self) -> &'g Graph<S> {
        self.graph
    }

    pub fn eval(&self, id: MouldId, w: &Word<S>) -> Result<S, EvalError> {
        self.cap(w)?;
        self.ev(id, w, 0)
    }

    /// Number of memoized values for a node.
    pub fn memo_len(&self, id: MouldId) -> usize {
        self.memo[id.index()].read().unwrap().len()
    }

    fn ev(&self, id: MouldId, w: &Word<S>, depth: usize) -> Result<S, EvalError> {
        if depth > MAX_DEPTH {
            return Err(EvalError::DepthLimit {
                node: self.graph.label(id),
            });
        }
        let node = self.graph.node(id);
        let memoized = !matches!(
            node,
            Node::Zero | Node::One | Node::Letter(_) | Node::Pull(..) | Node::Pari(_) | Node::Mantar(_) | Node::Der(_) | Node::Leng(..)
        );
        if memoized {
            if let Some(v) = self.memo[id.index()].read().unwrap().get(w) {
                self.stats.memo_hits.fetch_add(1, Ordering::Relaxed);
                return Ok(v.clone());
            }
        }
        self.stats.evaluations.fetch_add(1, Ordering::Relaxed);
        let v = self
            .compute(node, id, w, depth + 1)
            .map_err(|e| e.wrap(|| self.graph.label(id)))?;
        if w.is_empty() {
            self.check_class(id, &v)?;
        }
        if memoized {
            self.memo[id.index()]
                .write()
                .unwrap()
                .entry(w.clone())
                .or_insert_with(|| v.clone());
        }
        Ok(v)
    }

    fn check_class(&self, id: MouldId, v: &S) -> Result<(), EvalError> {
        let class = self.graph.class(id);
        let ok = match class {
            EmptyClass::Group => v.is_one(),
            EmptyClass::Lie => v.is_zero(),
            EmptyClass::Free => true,
        };
        if ok {
            Ok(())
        } else {
            Err(EvalError::ClassViolation {
                node: self.graph.label(id),
                class,
                value: v.to_fraction_string(),
            })
        }
    }

    fn div_zero(w: &Word<S>) -> EvalError {
        EvalError::DivByZero {
            path: Vec::new(),
            word: w.to_string(),
        }
    }

    fn cap(&self, w: &Word<S>) -> Result<(), EvalError> {
        if w.len() > self.graph.max_len {
            Err(EvalError::LengthCap {
                len: w.len(),
                cap: self.graph.max_len,
            })
        } else {
            Ok(())
        }
    }

    /// Product of `factors[i].0` evaluated at `factors[i].1`, shortest words
    /// first; stops at the first zero factor. Self-referential moulds rely on
    /// this: their full-length value only ever meets a vanishing cofactor.
    fn product(&self, factors: &mut [(MouldId, Word<S>)], depth: usize) -> Result<S, EvalError> {
        factors.sort_by_key(|(_, w)| w.len());
        let mut acc = S::one();
        for (id, w) in factors.iter() {
            let v = self.ev(*id, w, depth)?;
            if v.is_zero() {
                return Ok(S::zero());
            }
            acc = acc * v;
        }
        Ok(acc)
    }

    fn compute(&self, node: &Node<S>, id: MouldId, w: &Word<S>, depth: usize) -> Result<S, EvalError> {
        let r = w.len();
        match node {
            Node::Zero => Ok(S::zero()),
            Node::One => Ok(if r == 0 { S::one() } else { S::zero() }),
            Node::Letter(o) => {
                if r == 1 {
                    (o.f)(&w.letters()[0]).ok_or_else(|| Self::div_zero(w))
                } else {
                    Ok(S::zero())
                }
            }
            Node::Closed(o, class) => match (r, class) {
                (0, EmptyClass::Group) => Ok(S::one()),
                (0, EmptyClass::Lie) => Ok(S::zero()),
                _ => (o.f)(w).ok_or_else(|| Self::div_zero(w)),
            },
            Node::Digest(spec) => Ok(if r == 0 { S::zero() } else { spec.value(w) }),
            Node::Lin(terms) => {
                let mut acc = S::zero();
                for (c, m) in terms {
                    acc = acc + c.clone() * self.ev(*m, w, depth)?;
                }
                Ok(acc)
            }
            Node::Pull(kind, a) => self.ev(*a, &kind.apply(w), depth),
            Node::Pari(a) => Ok(sign::<S>(r) * self.ev(*a, w, depth)?),
            Node::Mantar(a) => {
                let v = self.ev(*a, &w.reverse(), depth)?;
                Ok(if r % 2 == 1 { v } else { -v })
            }
            Node::Der(a) => Ok(S::from_int(r as i64) * self.ev(*a, w, depth)?),
            Node::Leng(k, a) => {
                if r == *k {
                    self.ev(*a, w, depth)
                } else {
                    Ok(S::zero())
                }
            }
            Node::PushSym(a) => {
                let mut acc = S::zero();
                let mut x = w.clone();
                for _ in 0..=r {
                    acc = acc + self.ev(*a, &x, depth)?;
                    x = Pull::Push.apply(&x);
                }
                Ok(acc / S::from_int(r as i64 + 1))
            }
            Node::Mu(a, b) => self.mu_sum(*a, *b, w, 0, depth),
            Node::MuTail(a, b) => self.mu_sum(*a, *b, w, 1, depth),
            Node::InvMu(a) => {
                if r == 0 {
                    return Ok(S::one());
                }
                let mut acc = S::zero();
                for i in 1..=r {
                    acc = acc + self.product(&mut [(*a, w.slice(0, i)), (id, w.slice(i, r))], depth)?;
                }
                Ok(-acc)
            }
            Node::Swamu(a, b) => {
                let mut acc = S::zero();
                for (x, y) in w.splits() {
                    acc = acc + self.product(&mut [(*a, ful(&x, &y)), (*b, flr(&x, &y))], depth)?;
                }
                Ok(acc)
            }
            Node::Answamu(a, b) => {
                let mut acc = S::zero();
                for (x, y) in w.splits() {
                    acc = acc + self.product(&mut [(*a, fur(&x, &y)), (*b, fll(&x, &y))], depth)?;
                }
                Ok(acc)
            }
            Node::Amit { x, a } => {
                let mut acc = S::zero();
                for i in 0..r {
                    for j in i + 1..r {
                        let (pa, pb, pc) = (w.slice(0, i), w.slice(i, j), w.slice(j, r));
                        let arg = pa.concat(&ful(&pb, &pc));
                        acc = acc + self.product(&mut [(*a, arg), (*x, flr(&pb, &pc))], depth)?;
                    }
                }
                Ok(acc)
            }
            Node::Anit { y, a } => {
                let mut acc = S::zero();
                for i in 1..r {
                    for j in i + 1..=r {
                        let (pa, pb, pc) = (w.slice(0, i), w.slice(i, j), w.slice(j, r));
                        let arg = fur(&pa, &pb).concat(&pc);
                        acc = acc + self.product(&mut [(*a, arg), (*y, fll(&pa, &pb))], depth)?;
                    }
                }
                Ok(acc)
            }
            Node::Gaxit { x, y, a, skip_full } => self.gaxit_sum(*x, *y, *a, *skip_full, w, depth),
            Node::Fix {
                at_empty,
                body,
                len_div,
            } => {
                if r == 0 {
                    return self.ev(*at_empty, w, depth);
                }
                self.cap(w)?;
                let v = self.ev(*body, w, depth)?;
                Ok(if *len_div { v / S::from_int(r as i64) } else { v })
            }
            Node::Pending(_) => panic!("evaluated an unfinished self-referential mould {id}"),
            Node::ToSeries { oz, o } => self.to_series(*oz, *o, w, depth),
            Node::ETerDisplay { b, e } => {
                if r == 0 {
                    return self.ev(*b, w, depth);
                }
                let head = w.slice(0, r - 1);
                let last = w.slice(r - 1, r);
                let plain = self.ev(*b, w, depth)?;
                let second = self.product(&mut [(*b, head.clone()), (*e, last.clone())], depth)?;
                let third = self.product(&mut [(*b, fur(&head, &last)), (*e, fll(&head, &last))], depth)?;
                Ok(plain - second + third)
            }
            Node::TripleSum { b, mid, right } => {
                let mut acc = S::zero();
                for i in 0..=r {
                    for j in i..=r {
                        let (pa, pb, pc) = (w.slice(0, i), w.slice(i, j), w.slice(j, r));
                        acc = acc
                            + self.product(
                                &mut [(*b, fur(&pa, &pb)), (*mid, fll(&pa, &pb)), (*right, pc)],
                                depth,
                            )?;
                    }
                }
                Ok(acc)
            }
        }
    }

    fn mu_sum(&self, a: MouldId, b: MouldId, w: &Word<S>, from: usize, depth: usize) -> Result<S, EvalError> {
        let r = w.len();
        let mut acc = S::zero();
        for i in from..=r {
            acc = acc + self.product(&mut [(a, w.slice(0, i)), (b, w.slice(i, r))], depth)?;
        }
        Ok(acc)
    }

    /// Sum over nonempty kept-position sets; maximal runs of kept letters form
    /// the blocks `b_i`, and each interior gap is split as `c_i a_{i+1}` in all ways.
    fn gaxit_sum(
        &self,
        x: MouldId,
        y: MouldId,
        a: MouldId,
        skip_full: bool,
        w: &Word<S>,
        depth: usize,
    ) -> Result<S, EvalError> {
        let r = w.len();
        if r == 0 {
            return if skip_full { Ok(S::zero()) } else { self.ev(a, w, depth) };
        }
        let letters = w.letters();
        let empty = Word::empty();
        let x0 = self.ev(x, &empty, depth)?;
        let y0 = self.ev(y, &empty, depth)?;
        let mut acc = S::zero();
        for mask in 1u32..(1u32 << r) {
            if skip_full && mask == (1u32 << r) - 1 {
                continue;
            }
            // maximal runs [start, end)
            let mut runs: Vec<(usize, usize)> = Vec::new();
            let mut i = 0;
            while i < r {
                if mask >> i & 1 == 1 {
                    let start = i;
                    while i < r && mask >> i & 1 == 1 {
                        i += 1;
                    }
                    runs.push((start, i));
                } else {
                    i += 1;
                }
            }
            let s = runs.len();
            // interior gap k lies between runs[k] and runs[k+1]; its cut ranges over the gap
            let gaps: Vec<(usize, usize)> = (0..s - 1).map(|k| (runs[k].1, runs[k + 1].0)).collect();
            let mut cut: Vec<usize> = gaps.iter().map(|g| g.0).collect();
            loop {
                let mut outer = Vec::with_capacity(r);
                let mut factors: Vec<(MouldId, Word<S>)> = Vec::with_capacity(2 * s + 1);
                let mut coeff = S::one();
                for (k, &(bs, be)) in runs.iter().enumerate() {
                    let a_start = if k == 0 { 0 } else { cut[k - 1] };
                    let c_end = if k + 1 == s { r } else { cut[k] };
                    let ak = Word::new(letters[a_start..bs].to_vec());
                    let bk = Word::new(letters[bs..be].to_vec());
                    let ck = Word::new(letters[be..c_end].to_vec());
                    outer.extend_from_slice(ful(&ak, &fur(&bk, &ck)).letters());
                    if ak.is_empty() {
                        coeff = coeff * x0.clone();
                    } else {
                        factors.push((x, flr(&ak, &bk)));
                    }
                    if ck.is_empty() {
                        coeff = coeff * y0.clone();
                    } else {
                        factors.push((y, fll(&bk, &ck)));
                    }
                }
                if !coeff.is_zero() {
                    factors.push((a, Word::new(outer)));
                    acc = acc + coeff * self.product(&mut factors, depth)?;
                }
                let mut k = 0;
                while k < cut.len() && cut[k] == gaps[k].1 {
                    cut[k] = gaps[k].0;
                    k += 1;
                }
                if k == cut.len() {
                    break;
                }
                cut[k] += 1;
            }
        }
        Ok(acc)
    }

    fn to_series(&self, oz: MouldId, o: MouldId, w: &Word<S>, depth: usize) -> Result<S, EvalError> {
        let s = w.len();
        if s == 0 {
            return Ok(S::zero());
        }
        let mut acc = S::zero();
        for j in 1..=s {
            let pre = w.slice(0, j - 1);
            let bj = w.slice(j - 1, j);
            let post = w.slice(j, s);
            let weight = S::from_int((s + 1 - j) as i64);
            let t = self.product(
                &mut [
                    (oz, flr(&pre, &bj)),
                    (o, ful(&pre, &fur(&bj, &post))),
                    (oz, fll(&bj, &post)),
                ],
                depth,
            )?;
            acc = acc + weight * t;
        }
        Ok(acc / S::from_int((s * (s + 1)) as i64))
    }
}

fn sign<S: Scalar>(r: usize) -> S {
    if r % 2 == 0 {
        S::one()
    } else {
        -S::one()
    }
}
