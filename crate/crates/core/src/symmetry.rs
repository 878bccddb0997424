//! Structured random bimoulds and symmetry checks built on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::canonical::Canon;
use crate::check::Check;
use crate::engine::{DigestSpec, Graph, MouldId};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileKind {
    /// Digest-valued, lie-class.
    Generic,
    /// Length-1 only, `A(u;v) = A(-u;-v)`.
    EvenLength1,
    /// `ari`-bracket combinations of length-1 generators.
    Alternal,
    /// `expari` of an alternal.
    Symmetral,
    /// `pushsym` of a generic mould.
    PushInvariant,
    /// Even length-1 elements and their `ari`-brackets.
    AlAlSeed,
    /// `adari(ess)` of an `AlAlSeed`.
    AlOl,
}

impl ProfileKind {
    pub const ALL: [ProfileKind; 7] = [
        ProfileKind::Generic,
        ProfileKind::EvenLength1,
        ProfileKind::Alternal,
        ProfileKind::Symmetral,
        ProfileKind::PushInvariant,
        ProfileKind::AlAlSeed,
        ProfileKind::AlOl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProfileKind::Generic => "generic",
            ProfileKind::EvenLength1 => "even_length1",
            ProfileKind::Alternal => "alternal",
            ProfileKind::Symmetral => "symmetral",
            ProfileKind::PushInvariant => "push_invariant",
            ProfileKind::AlAlSeed => "al_al_seed",
            ProfileKind::AlOl => "al_ol",
        }
    }
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProfileKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ProfileKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown profile `{s}`"))
    }
}

/// Recipe for a test bimould; generation is a pure function of all fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile {
    pub kind: ProfileKind,
    pub seed: u64,
    /// Nesting depth of `ari`-brackets (bracketed kinds only).
    pub depth: usize,
}

impl Profile {
    pub fn new(kind: ProfileKind, seed: u64) -> Self {
        Profile { kind, seed, depth: 2 }
    }

    pub fn depth(mut self, depth: usize) -> Self {
        self.depth = depth;
        self
    }
}

fn sub_seed(seed: u64, kind: ProfileKind, i: u64) -> u64 {
    // splitmix64 finalizer over (seed, kind, index)
    let mut z = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((kind as u64) << 32)
        .wrapping_add(i.wrapping_mul(0xBF58_476D_1CE4_E5B9));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Operators whose fixed points the suites test for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedOp {
    Push,
    Mantar,
    Gantar,
    Neg,
    OMantar,
    ENegpush,
    EPush,
    ESena,
}

impl NamedOp {
    pub const ALL: [NamedOp; 8] = [
        NamedOp::Push,
        NamedOp::Mantar,
        NamedOp::Gantar,
        NamedOp::Neg,
        NamedOp::OMantar,
        NamedOp::ENegpush,
        NamedOp::EPush,
        NamedOp::ESena,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedOp::Push => "push",
            NamedOp::Mantar => "mantar",
            NamedOp::Gantar => "gantar",
            NamedOp::Neg => "neg",
            NamedOp::OMantar => "O-mantar",
            NamedOp::ENegpush => "E-negpush",
            NamedOp::EPush => "E-push",
            NamedOp::ESena => "E-sena",
        }
    }
}

impl fmt::Display for NamedOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedOp::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown operator `{s}`"))
    }
}

impl<S: Scalar> Graph<S> {
    /// `f + neg(f)` for the length-1 part `f` of a digest mould.
    fn even_generator(&mut self, seed: u64) -> MouldId {
        let d = self.digest(DigestSpec::new(seed));
        let l = self.leng(1, d);
        let n = self.neg(l);
        self.add(l, n)
    }

    /// `g_0 + Σ_{k=1..depth} c_k · ari(g_k, previous)`: a left-nested bracket
    /// chain over the given length-1 generators, every partial bracket kept.
    fn bracket_chain(&mut self, gens: &[MouldId]) -> MouldId {
        let mut acc = gens[0];
        let mut cur = gens[0];
        for (k, &g) in gens.iter().enumerate().skip(1) {
            cur = self.ari(g, cur);
            acc = self.lin(&[(S::one(), acc), (S::from_int(k as i64 + 1), cur)]);
        }
        acc
    }

    /// Builds the test mould described by `profile`; `AlOl` uses `c.plain` (ess).
    pub fn gen_bimould(&mut self, profile: Profile, c: &Canon) -> MouldId {
        let seed = |i: u64| sub_seed(profile.seed, profile.kind, i);
        let depth = profile.depth.max(1);
        let id = match profile.kind {
            ProfileKind::Generic => self.digest(DigestSpec::new(seed(0))),
            ProfileKind::EvenLength1 => self.even_generator(seed(0)),
            ProfileKind::Alternal => {
                let gens: Vec<MouldId> = (0..=depth as u64)
                    .map(|i| {
                        if i % 2 == 0 {
                            let d = self.digest(DigestSpec::new(seed(i)));
                            self.leng(1, d)
                        } else {
                            self.even_generator(seed(i))
                        }
                    })
                    .collect();
                self.bracket_chain(&gens)
            }
            ProfileKind::Symmetral => {
                let a = self.gen_bimould(Profile::new(ProfileKind::Alternal, seed(0)).depth(depth), c);
                self.expari(a)
            }
            ProfileKind::PushInvariant => {
                let d = self.digest(DigestSpec::new(seed(0)));
                self.pushsym(d)
            }
            ProfileKind::AlAlSeed => {
                let gens: Vec<MouldId> = (0..=depth as u64).map(|i| self.even_generator(seed(i))).collect();
                self.bracket_chain(&gens)
            }
            ProfileKind::AlOl => {
                let a = self.gen_bimould(Profile::new(ProfileKind::AlAlSeed, seed(0)).depth(depth), c);
                self.adari(c.plain, a)
            }
        };
        self.name(id, &format!("{}#{}", profile.kind, profile.seed))
    }

    /// Applies a named operator.
    pub fn apply_named(&mut self, op: NamedOp, c: &Canon, a: MouldId) -> MouldId {
        match op {
            NamedOp::Push => self.push(a),
            NamedOp::Mantar => self.mantar(a),
            NamedOp::Gantar => self.gantar(a),
            NamedOp::Neg => self.neg(a),
            NamedOp::OMantar => self.o_mantar(c, a),
            NamedOp::ENegpush => self.e_negpush(c, a),
            NamedOp::EPush => self.e_push(c, a),
            NamedOp::ESena => self.e_sena(c, a),
        }
    }

    /// The two alternality checks behind O-alternality: on `ganit(oz)^{-1}(A)`
    /// and on `gamit(oz)^{-1}(A)`. Both verdicts agree for a correct engine.
    pub fn o_alternal_checks(&mut self, c: &Canon, name: &str, a: MouldId) -> [Check; 2] {
        let via_ganit = self.ganit_inv(c.oz, a);
        let via_gamit = self.gamit_inv(c.oz, a);
        [
            Check::alternal(format!("{name} is O-alternal (ganit route)"), via_ganit),
            Check::alternal(format!("{name} is O-alternal (gamit route)"), via_gamit),
        ]
    }

    /// `op(A) = A`.
    pub fn invariance_check(&mut self, op: NamedOp, c: &Canon, name: &str, a: MouldId) -> Check {
        let image = self.apply_named(op, c, a);
        Check::equal(format!("{name} is {op}-invariant"), image, a)
    }

    /// Alternality of `swap(A)`.
    pub fn swap_alternal_check(&mut self, name: &str, a: MouldId) -> Check {
        let s = self.swap(a);
        Check::alternal(format!("swap({name}) is alternal"), s)
    }
}
