//! Suite contents. Each suite adds its checks to a shared graph.

use flexion_core::canonical::{Canon, FlexionUnit};
use flexion_core::check::{Check, Expect, Property};
use flexion_core::symmetry::{NamedOp, Profile, ProfileKind};
use flexion_core::{MouldId, Pull, Rat, RatGraph, Scalar};

/// Combinatorial items that are computed directly rather than sampled.
#[derive(Clone, Debug)]
pub enum ScalarJob {
    NegelonScan { r_max: i64, h_min: i64, expect: Expect },
    TupleCount { r_max: i64, h_min: i64, expected: usize },
    Vandermonde { n_max: i64 },
    Convolution { n_max: i64 },
    FiniteDifference { n_max: i64 },
}

#[derive(Clone, Debug)]
pub enum Item {
    Mould(Check),
    Scalar(String, ScalarJob),
}

/// What every suite builder sees.
pub struct Env<'a> {
    /// Canonical moulds of the configured unit.
    pub c: &'a Canon,
    /// Canonical moulds of the conjugate unit; its `dotted` is ëss and its `plain` is oss.
    pub m: &'a Canon,
    pub unit: &'a FlexionUnit<Rat>,
    pub seed: u64,
    pub max_length: usize,
}

impl Env<'_> {
    fn profile(&self, g: &mut RatGraph, kind: ProfileKind, i: u64) -> MouldId {
        let seed = self.seed.wrapping_mul(1_000_003).wrapping_add(i);
        g.gen_bimould(Profile::new(kind, seed), self.c)
    }

    fn generic(&self, g: &mut RatGraph, i: u64) -> MouldId {
        self.profile(g, ProfileKind::Generic, i)
    }

    /// `1 + generic`.
    fn group(&self, g: &mut RatGraph, i: u64) -> MouldId {
        let a = self.generic(g, i);
        g.one_plus(a)
    }

    fn ess(&self) -> MouldId {
        self.c.plain
    }

    fn oess(&self) -> MouldId {
        self.c.dotted
    }

    fn eess(&self) -> MouldId {
        self.m.dotted
    }

    fn oss(&self) -> MouldId {
        self.m.plain
    }
}

pub struct Items {
    pub items: Vec<Item>,
    max_length: usize,
}

impl Items {
    pub fn new(max_length: usize) -> Self {
        Items {
            items: Vec::new(),
            max_length,
        }
    }

    /// Checks whose length range is empty at this suite's length are dropped.
    fn check(&mut self, c: Check) {
        let hi = c.max_length.map_or(self.max_length, |m| m.min(self.max_length));
        if c.min_length <= hi {
            self.items.push(Item::Mould(c));
        }
    }

    fn eq(&mut self, name: impl Into<String>, lhs: MouldId, rhs: MouldId) {
        self.check(Check::equal(name, lhs, rhs));
    }

    fn eq_to(&mut self, name: impl Into<String>, lhs: MouldId, rhs: MouldId, max: usize) {
        self.check(Check::equal(name, lhs, rhs).up_to(max));
    }

    /// Negative control: a counterexample must be found.
    fn counter(&mut self, name: impl Into<String>, lhs: MouldId, rhs: MouldId) {
        self.check(Check::equal(name, lhs, rhs).negative());
    }

    fn alternal(&mut self, name: impl Into<String>, a: MouldId) {
        self.check(Check::alternal(name, a));
    }

    fn symmetral(&mut self, name: impl Into<String>, a: MouldId) {
        self.check(Check::symmetral(name, a));
    }

    fn scalar(&mut self, name: impl Into<String>, job: ScalarJob) {
        self.items.push(Item::Scalar(name.into(), job));
    }
}

fn q(n: i64, d: i64) -> Rat {
    Rat::from_int(n) / Rat::from_int(d)
}

pub fn build(name: &str, g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    match name {
        "unit-axioms" => unit_axioms(g, env, t),
        "algebra-core" => algebra_core(g, env, t),
        "swamu" => swamu(g, env, t),
        "symmetry" => symmetry(g, env, t),
        "mould-constants" => mould_constants(g, env, t),
        "dilator" => dilator(g, env, t),
        "fundamental" => fundamental(g, env, t),
        "senary" => senary(g, env, t),
        "push-sena" => push_sena(g, env, t),
        "lemmas-6" => lemmas_6(g, env, t),
        "negelon" => negelon(g, env, t),
        other => unreachable!("suite `{other}` is not registered"),
    }
}

fn unit_axioms(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    let zero = g.zero();
    let one = g.one();
    let [te, to] = env.unit.tripartite_moulds(g);
    t.check(Check::equal("tripartite relation for E", te, zero).from_length(2).up_to(2));
    t.check(Check::equal("tripartite relation for O on swapped letters", to, zero).from_length(2).up_to(2));

    let a = env.generic(g, 0);
    let b = env.generic(g, 1);
    let c = env.generic(g, 2);
    let ga = env.group(g, 3);
    let gb = env.group(g, 4);

    for (name, kind) in [("anti", Pull::Anti), ("neg", Pull::Neg), ("swap", Pull::Swap)] {
        let x = g.pull(kind, a);
        let xx = g.pull(kind, x);
        t.eq(format!("{name} is an involution"), xx, a);
    }
    let p = g.pari(a);
    let pp = g.pari(p);
    t.eq("pari is an involution", pp, a);
    let m = g.mantar(a);
    let mm = g.mantar(m);
    t.eq("mantar is an involution", mm, a);

    let pa = g.push(a);
    let pia = g.push_inv(pa);
    t.eq("push_inv(push A) = A", pia, a);
    let ia = g.push_inv(a);
    let pia = g.push(ia);
    t.eq("push(push_inv A) = A", pia, a);
    for r in 1..=env.max_length {
        let mut x = a;
        for _ in 0..=r {
            x = g.push(x);
        }
        let lhs = g.leng(r, x);
        let rhs = g.leng(r, a);
        t.check(Check::equal(format!("push has order {} at length {r}", r + 1), lhs, rhs).from_length(r).up_to(r));
    }
    let l1p = g.leng(1, pa);
    let na = g.neg(a);
    let l1n = g.leng(1, na);
    t.eq_to("push = neg at length 1", l1p, l1n, 1);
    let np = g.neg(pa);
    let x = g.swap(a);
    let x = g.anti(x);
    let x = g.swap(x);
    let asas = g.anti(x);
    t.eq("neg(push A) = anti(swap(anti(swap A)))", np, asas);
    let anti_a = g.anti(a);
    let pari_anti = g.pari(anti_a);
    let mpa = g.minus(pari_anti);
    t.eq("mantar = -pari∘anti", m, mpa);
    let am = g.anti(m);
    let mp = g.minus(p);
    t.eq("anti∘mantar = -pari", am, mp);

    let ab = g.mu(a, b);
    let ab_c = g.mu(ab, c);
    let bc = g.mu(b, c);
    let a_bc = g.mu(a, bc);
    t.eq("mu is associative", ab_c, a_bc);
    let iga = g.invmu(ga);
    let x = g.mu(ga, iga);
    t.eq("mu(A, invmu A) = 1", x, one);
    let x = g.mu(iga, ga);
    t.eq("mu(invmu A, A) = 1", x, one);
    let x = g.mu(ga, gb);
    t.eq_to("mu of group-class moulds is group-class", x, one, 0);
    let x = g.lu(a, b);
    t.eq_to("lu of lie-class moulds is lie-class", x, zero, 0);

    let pb = g.pari(b);
    let pga = g.pari(ga);
    let pairs: [(&str, fn(&mut RatGraph, MouldId, MouldId) -> MouldId); 4] = [
        ("mu", |g, x, y| g.mu(x, y)),
        ("swamu", |g, x, y| g.swamu(x, y)),
        ("answamu", |g, x, y| g.answamu(x, y)),
        ("preari", |g, x, y| g.preari(x, y)),
    ];
    for (name, op) in pairs {
        let lhs = op(g, a, b);
        let lhs = g.pari(lhs);
        let rhs = op(g, p, pb);
        t.eq(format!("pari distributes over {name}"), lhs, rhs);
    }
    let lhs = g.pari(iga);
    let rhs = g.invmu(pga);
    t.eq("pari distributes over invmu", lhs, rhs);

    let l2 = g.leng(2, a);
    let lhs = g.der(l2);
    let rhs = g.scale(Rat::from_int(2), l2);
    t.eq("der∘leng_2 = 2·leng_2", lhs, rhs);

    let al = env.profile(g, ProfileKind::Alternal, 5);
    let mal = g.mantar(al);
    t.eq("alternal A is mantar-invariant", mal, al);
    let sy = env.profile(g, ProfileKind::Symmetral, 6);
    let gsy = g.gantar(sy);
    t.eq("symmetral S is gantar-invariant", gsy, sy);
    let msy = g.mantar(sy);
    let isy = g.invmu(sy);
    let misy = g.minus(isy);
    t.eq("symmetral S has mantar(S) = -invmu(S)", msy, misy);

    let ba = g.mu(b, a);
    t.counter("mu is commutative", ab, ba);
    t.counter("generic A is mantar-invariant", m, a);
    t.counter("generic A is push-invariant", pa, a);
}

fn algebra_core(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    let (c, zero, one) = (env.c, g.zero(), g.one());
    let a = env.generic(g, 10);
    let b = env.generic(g, 11);
    let x = env.generic(g, 12);
    let y = env.generic(g, 13);
    let gm = env.group(g, 14);
    let gn = env.group(g, 15);

    let ab = g.mu(a, b);
    let lhs = g.axit(x, y, ab);
    let xa = g.axit(x, y, a);
    let xb = g.axit(x, y, b);
    let t1 = g.mu(xa, b);
    let t2 = g.mu(a, xb);
    let rhs = g.add(t1, t2);
    t.eq("axit(X,Y) is a mu-derivation", lhs, rhs);

    let arit_short = g.arit(x, a);
    t.eq_to("arit vanishes at length <= 1", arit_short, zero, 1);
    let ab_ = g.ari(a, b);
    let ba_ = g.ari(b, a);
    let mba = g.minus(ba_);
    t.eq("ari is antisymmetric", ab_, mba);
    let aa = g.ari(a, a);
    t.eq("ari(A, A) = 0", aa, zero);
    let bx = g.ari(b, x);
    let j1 = g.ari(a, bx);
    let xa_ = g.ari(x, a);
    let j2 = g.ari(b, xa_);
    let ab2 = g.ari(a, b);
    let j3 = g.ari(x, ab2);
    let jac = g.lin(&[(Rat::from_int(1), j1), (Rat::from_int(1), j2), (Rat::from_int(1), j3)]);
    t.eq("ari satisfies the Jacobi identity", jac, zero);

    let ad1 = g.adari(one, a);
    t.eq("adari(1)(A) = A", ad1, a);
    let closed = g.adari(gm, a);
    let series = g.adari_series(gm, a);
    t.eq("adari closed form = adari series", closed, series);
    let mn = g.gari(gm, gn);
    let lhs = g.adari(mn, a);
    let inner = g.adari(gn, a);
    let rhs = g.adari(gm, inner);
    t.eq("adari(gari(M,N)) = adari(M)∘adari(N)", lhs, rhs);
    let lhs = g.adari(gm, ab_);
    let ma = g.adari(gm, a);
    let mb = g.adari(gm, b);
    let rhs = g.ari(ma, mb);
    t.eq("adari(M) preserves ari", lhs, rhs);

    let gx = env.group(g, 16);
    let gy = env.group(g, 17);
    let lhs = g.gaxit(gx, gy, a);
    let inv = g.gamit_inv(gx, gy);
    let inner = g.ganit(inv, a);
    let sep1 = g.gamit(gx, inner);
    t.eq_to("gaxit(X,Y) = gamit(X)∘ganit(gamit(X)^-1(Y))", lhs, sep1, 3);
    let inv = g.ganit_inv(gy, gx);
    let inner = g.gamit(inv, a);
    let sep2 = g.ganit(gy, inner);
    t.eq_to("gaxit(X,Y) = ganit(Y)∘gamit(ganit(Y)^-1(X))", lhs, sep2, 3);
    let naive = {
        let inner = g.gamit(gx, a);
        g.ganit(gy, inner)
    };
    t.check(Check::equal("gaxit(X,Y) = ganit(Y)∘gamit(X)", lhs, naive).up_to(3).negative());
    let act_one = g.gaxit(gx, gy, one);
    t.eq("gaxit(X,Y)(1) = 1", act_one, one);

    // linear part in t of gaxit(1+tX, 1) and gaxit(1, 1+tY) from t = 1, 2
    let x2 = g.scale(Rat::from_int(2), x);
    let y2 = g.scale(Rat::from_int(2), y);
    let (ox, ox2, oy, oy2) = (g.one_plus(x), g.one_plus(x2), g.one_plus(y), g.one_plus(y2));
    let f1 = g.gamit(ox, a);
    let f2 = g.gamit(ox2, a);
    let lin = g.lin(&[(Rat::from_int(2), f1), (q(-1, 2), f2), (q(-3, 2), a)]);
    let am = g.amit(x, a);
    t.eq_to("linear part of gamit(1+tX) is amit(X)", lin, am, 3);
    let f1 = g.ganit(oy, a);
    let f2 = g.ganit(oy2, a);
    let lin = g.lin(&[(Rat::from_int(2), f1), (q(-1, 2), f2), (q(-3, 2), a)]);
    let an = g.anit(y, a);
    t.eq_to("linear part of ganit(1+tY) is anit(Y)", lin, an, 3);

    let lhs = g.ganit(c.os, c.o);
    let rhs = g.sub(c.os, one);
    t.eq("ganit(os)(O) = os - 1", lhs, rhs);
    let ios = g.invmu(c.os);
    let garit_side = g.garit(ios, a);
    let inner = g.gamit_inv(c.os_swap, a);
    let lhs = g.ganit(c.os, inner);
    t.eq("ganit(os)∘gamit(os_swap)^-1 = garit(invmu os)", lhs, garit_side);
    let inner = g.gamit_inv(c.os, a);
    let literal = g.ganit(c.os, inner);
    t.counter("ganit(os)∘gamit(os)^-1 = garit(invmu os) (same os on both sides)", literal, garit_side);
    let anti_t = g.anti(c.os_swap);
    let pat = g.pari(anti_t);
    let inner = g.ganit(pat, a);
    let lhs = g.ganit(c.oz, inner);
    t.eq("ganit(oz)∘ganit(pari anti os_swap) = id", lhs, a);

    let igm = g.invgari(gm);
    let x1 = g.gari(gm, igm);
    t.eq("gari(M, invgari M) = 1", x1, one);
    let x1 = g.gari(igm, gm);
    t.eq("gari(invgari M, M) = 1", x1, one);
    let gmn = g.gari(gm, gn);
    let l = g.leng(1, gmn);
    let lm = g.leng(1, gm);
    let ln = g.leng(1, gn);
    let r = g.add(lm, ln);
    t.eq_to("gari(A,B) = A + B at length 1", l, r, 1);
    let ea = g.expari(a);
    let la = g.logari(ea);
    t.eq("logari(expari A) = A", la, a);
    let a1 = g.leng(1, a);
    let s = g.expari(a1);
    let ds = g.der(s);
    let ps = g.preari(s, a1);
    t.eq("der(expari A) = preari(expari A, A) for length-1 A", ds, ps);

    let lhs = g.preari(c.es, b);
    let esb = g.mu(c.es, b);
    let es1 = g.sub(c.es, one);
    let an = g.answamu(es1, b);
    let inner = g.sub(esb, an);
    let rhs = g.swamu(c.es, inner);
    t.eq("preari(es,B) = swamu(es, mu(es,B) - answamu(es-1,B))", lhs, rhs);

    let lhs = g.girat(c.oz, a);
    let rhs = g.gaxit(c.oz, c.oz, a);
    t.eq("girat(oz) = gaxit(oz,oz)", lhs, rhs);
    let lhs = g.girat_inv(c.oz, c.oz);
    let rhs = g.one_plus(c.o);
    t.eq("girat(oz)^-1(oz) = 1 + O", lhs, rhs);
    let (sa, sb) = (g.swap(gm), g.swap(b));
    let pr = g.preira(sa, sb);
    let lhs = g.swap(pr);
    let rhs = g.preari(gm, b);
    t.eq("swap∘preira∘(swap, swap) = preari", lhs, rhs);
}

fn swamu(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    let a = env.generic(g, 20);
    let b = env.generic(g, 21);
    let cc = env.generic(g, 22);
    let ga = env.group(g, 23);

    let lhs = g.swamu(a, b);
    let (sa, sb) = (g.swap(a), g.swap(b));
    let m = g.mu(sa, sb);
    let conj = g.swap(m);
    t.eq("swamu flexion sum = swap(mu(swap A, swap B))", lhs, conj);
    let lhs = g.answamu(a, b);
    let (aa, ab) = (g.anti(a), g.anti(b));
    let sw = g.swamu(aa, ab);
    let rhs = g.anti(sw);
    t.eq("answamu flexion sum = anti(swamu(anti A, anti B))", lhs, rhs);
    let sa_ = g.anti(a);
    let sa_ = g.swap(sa_);
    let sb_ = g.anti(b);
    let sb_ = g.swap(sb_);
    let m = g.mu(sa_, sb_);
    let m = g.swap(m);
    let rhs = g.anti(m);
    t.eq("answamu flexion sum = anti∘swap(mu(swap∘anti A, swap∘anti B))", lhs, rhs);

    let sw = g.swamu(a, b);
    let lhs = g.push(sw);
    let (pa, pb) = (g.push(a), g.push(b));
    let rhs = g.answamu(pb, pa);
    t.eq("push(swamu(A,B)) = answamu(push B, push A)", lhs, rhs);

    let ab = g.mu(a, b);
    let lhs = g.swamu(ab, cc);
    let sac = g.swamu(a, cc);
    let rhs = g.mu(sac, b);
    t.eq("swamu(mu(A,B),C) = mu(swamu(A,C),B) for lie-class A", lhs, rhs);
    let lhs = g.answamu(ab, cc);
    let abc = g.answamu(b, cc);
    let rhs = g.mu(a, abc);
    t.eq("answamu(mu(A,B),C) = mu(A,answamu(B,C)) for lie-class B", lhs, rhs);
    let an = g.answamu(a, b);
    let lhs = g.swamu(an, cc);
    let rhs = g.answamu(sac, b);
    t.eq("swamu(answamu(A,B),C) = answamu(swamu(A,C),B) for lie-class A", lhs, rhs);

    let gab = g.mu(ga, b);
    let lhs = g.swamu(gab, cc);
    let sgc = g.swamu(ga, cc);
    let rhs = g.mu(sgc, b);
    t.counter("swamu(mu(A,B),C) = mu(swamu(A,C),B) for group-class A", lhs, rhs);
    let sw = g.swamu(a, b);
    let m = g.mu(a, b);
    t.counter("swamu = mu", sw, m);
}

fn symmetry(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    let c = env.c;
    let even = env.profile(g, ProfileKind::EvenLength1, 30);
    let ne = g.neg(even);
    t.eq_to("even_length1 is neg-invariant", ne, even, 1);
    let al = env.profile(g, ProfileKind::Alternal, 31);
    t.alternal("alternal generator is alternal", al);
    let sy = env.profile(g, ProfileKind::Symmetral, 32);
    t.symmetral("symmetral generator is symmetral", sy);
    let d = env.generic(g, 33);
    let ps = g.pushsym(d);
    t.check(g.invariance_check(NamedOp::Push, c, "pushsym(generic)", ps));
    let pps = g.pushsym(ps);
    t.eq("pushsym is idempotent", pps, ps);
    let l = g.leng(1, ps);
    let d1 = g.leng(1, d);
    let nd = g.neg(d);
    let nd1 = g.leng(1, nd);
    let avg = g.lin(&[(q(1, 2), d1), (q(1, 2), nd1)]);
    t.eq_to("pushsym at length 1 averages A and neg A", l, avg, 1);

    let s1 = env.profile(g, ProfileKind::AlAlSeed, 34);
    let s2 = env.profile(g, ProfileKind::AlAlSeed, 35);
    t.alternal("al_al_seed is alternal", s1);
    t.check(g.swap_alternal_check("al_al_seed", s1));
    t.check(g.invariance_check(NamedOp::Neg, c, "al_al_seed", s1));
    t.check(g.invariance_check(NamedOp::Push, c, "al_al_seed", s1));
    let br = g.ari(s1, s2);
    t.alternal("ari of two al_al_seed elements is alternal", br);
    t.check(g.swap_alternal_check("ari of two al_al_seed elements", br));

    for (label, sec) in [("ess", env.ess()), ("ëss", env.eess())] {
        let fwd = g.adari(sec, s1);
        t.alternal(format!("adari({label})(al_al_seed) is alternal"), fwd);
        let sw = g.swap(fwd);
        for ch in g.o_alternal_checks(c, &format!("swap(adari({label})(al_al_seed))"), sw) {
            t.check(ch);
        }
    }

    let alol = env.profile(g, ProfileKind::AlOl, 36);
    let alol2 = env.profile(g, ProfileKind::AlOl, 37);
    let ie = g.invgari(env.ess());
    let back = g.adari(ie, alol);
    t.alternal("adari(invgari ess)(al_ol) is alternal", back);
    t.check(g.swap_alternal_check("adari(invgari ess)(al_ol)", back));
    let sw = g.swap(alol);
    t.check(g.invariance_check(NamedOp::OMantar, c, "swap(al_ol)", sw));
    t.check(g.invariance_check(NamedOp::ENegpush, c, "al_ol", alol));
    t.check(g.invariance_check(NamedOp::EPush, c, "al_ol", alol));
    let br = g.ari(alol, alol2);
    t.alternal("ari of two al_ol elements is alternal", br);
    let sbr = g.swap(br);
    for ch in g.o_alternal_checks(c, "swap(ari of two al_ol elements)", sbr) {
        t.check(ch);
    }

    let gen = env.generic(g, 38);
    t.check(g.invariance_check(NamedOp::Push, c, "generic", gen).negative());
    for ch in g.o_alternal_checks(c, "generic", gen) {
        t.check(ch.negative());
    }
    t.check(Check::alternal("generic is alternal", gen).negative());
    let ggen = g.one_plus(gen);
    t.check(Check::symmetral("1 + generic is symmetral", ggen).negative());
}

fn mould_constants(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    let (c, m, one) = (env.c, env.m, g.one());
    t.eq("oz = invmu(1 - O) matches the letter product", c.oz, c.oz_product);
    t.eq("es = swap(oz) matches its closed form", c.es, c.es_product);
    let poz = g.pari(c.oz);
    let opo = g.one_plus(c.o);
    let iopo = g.invmu(opo);
    t.eq("pari(oz) = invmu(1 + O)", poz, iopo);
    let ses = g.swap(c.es);
    t.eq("swap(es) = oz", ses, c.oz);
    t.check(Check::symmetral("oz is symmetral", c.oz).negative());
    t.symmetral("es is symmetral", c.es);
    let ies = g.invmu(c.es);
    let pes = g.push(c.es);
    t.eq("invmu(es) = push(es)", ies, pes);
    let gos = g.gantar(c.os);
    t.eq("os is gantar-invariant", gos, c.os);
    let sez = g.swap(c.ez);
    t.eq("os_swap = swap(ez)", c.os_swap, sez);

    let ro1 = c.ro_component(g, 1);
    t.eq_to("ro_1 = O at length 1", ro1, c.o, 1);
    let to1 = g.leng(1, c.to_series);
    let half_o = g.scale(q(1, 2), c.o);
    t.eq_to("To = O/2 at length 1", to1, half_o, 1);

    for (label, x) in [("ess", env.ess()), ("öss", env.oess()), ("ëss", env.eess()), ("oss", env.oss())] {
        t.eq_to(format!("{label}(∅) = 1"), x, one, 0);
    }
    let sw = g.swap(env.oess());
    t.eq("swap(öss) = ess", sw, env.ess());
    let sw = g.swap(env.eess());
    t.eq("swap(ëss) = oss", sw, env.oss());

    let ness = g.neg(env.ess());
    let fr = g.fragari(ness, env.ess());
    t.eq_to("fragari(neg ess, ess) = es", fr, c.es, 3);
    let a = env.generic(g, 40);
    let lhs = g.e_neg(c, a);
    for (label, x) in [("ess", env.ess()), ("ëss", env.eess())] {
        let inv = g.adari_inv(x, a);
        let n = g.neg(inv);
        let rhs = g.adari(x, n);
        t.eq_to(format!("E-neg = adari({label})∘neg∘adari({label})^-1"), lhs, rhs, 3);
    }

    let mes = m.es;
    t.counter("es equals the es of the conjugate unit", c.es, mes);
    let noess = g.neg(env.oess());
    let fr = g.fragari(noess, env.oess());
    t.check(Check::equal("fragari(neg öss, öss) = es", fr, c.es).up_to(3).negative());
}

fn dilator(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    let c = env.c;
    for ch in g.o_alternal_checks(c, "To", c.to_series) {
        t.check(ch);
    }
    t.alternal("dilator ganit(oz)^-1(To) is alternal", c.dilator);
    let ds = g.der(c.ode);
    let ps = g.preari(c.ode, c.dilator);
    t.eq("der(S) = preari(S, D) for the dilator ODE solution", ds, ps);
    t.symmetral("ess is symmetral", env.ess());
    t.symmetral("öss is symmetral", env.oess());
    t.symmetral("ëss is symmetral", env.eess());
    t.symmetral("oss is symmetral", env.oss());

    for i in 0..3 {
        let d = env.profile(g, ProfileKind::Alternal, 50 + i);
        let s = g.solve_dilator_ode(d);
        t.symmetral(format!("ODE solution of alternal D #{i} is symmetral"), s);
    }
    for i in 0..3 {
        let s = env.profile(g, ProfileKind::Symmetral, 60 + i);
        let d = g.dilator_of(s);
        t.alternal(format!("dilator of symmetral S #{i} is alternal"), d);
        let back = g.solve_dilator_ode(d);
        t.eq(format!("ODE solution of the dilator of S #{i} is S"), back, s);
    }

    let bal = env.profile(g, ProfileKind::Alternal, 70);
    let a = env.generic(g, 71);
    let arit = g.arit(bal, a);
    t.check(Check::shuffle(
        "arit(B)(A) on a shuffle expands into four flexion sums for alternal B",
        Property::AritShuffle { arit, a, b: bal },
    ));
    let sx = env.profile(g, ProfileKind::Symmetral, 72);
    let sy = env.profile(g, ProfileKind::Symmetral, 73);
    let action = g.gaxit(sx, sy, c.o);
    let xy = g.mu(sx, sy);
    t.check(Check::shuffle(
        "gaxit(X,Y)(O) on a shuffle expands into single-letter sums for symmetral X, Y",
        Property::GaxitShuffle {
            action,
            x: sx,
            y: sy,
            xy,
            o: c.o,
        },
    ));

    let gen = env.generic(g, 74);
    let s = g.solve_dilator_ode(gen);
    t.check(Check::symmetral("ODE solution of generic D is symmetral", s).negative());
    let gs = env.group(g, 75);
    let d = g.dilator_of(gs);
    t.check(Check::alternal("dilator of 1 + generic is alternal", d).negative());
    let arit = g.arit(gen, a);
    t.check(
        Check::shuffle(
            "arit(B)(A) shuffle expansion for generic B",
            Property::AritShuffle { arit, a, b: gen },
        )
        .negative(),
    );
}

fn fundamental(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    let c = env.c;
    let ga = env.group(g, 80);
    let sga = g.swap(ga);
    for (label, b) in [("öss", env.oess()), ("oss", env.oss())] {
        let sb = g.swap(b);
        let fr = g.fragari(sga, sb);
        let lhs = g.swap(fr);
        let fr = g.fragari(ga, b);
        let rhs = g.ganit(c.oz, fr);
        t.eq(
            format!("swap(fragari(swap A, swap {label})) = ganit(oz)(fragari(A, {label}))"),
            lhs,
            rhs,
        );
    }
    let sb = g.swap(env.ess());
    let fr = g.fragari(sga, sb);
    let lhs = g.swap(fr);
    let fr = g.fragari(ga, env.ess());
    let rhs = g.ganit(c.oz, fr);
    t.counter("swap(fragari(swap A, swap ess)) = ganit(oz)(fragari(A, ess))", lhs, rhs);

    for i in 0..2 {
        let a = env.profile(g, ProfileKind::PushInvariant, 81 + i);
        let sa = g.swap(a);
        let ad = g.adari(env.ess(), a);
        let lhs = g.swap(ad);
        let ad = g.adari(env.oess(), sa);
        let rhs = g.ganit(c.oz, ad);
        t.eq(format!("swap(adari(ess)(A)) = ganit(oz)(adari(öss)(swap A)), push-invariant A #{i}"), lhs, rhs);
        let ad = g.adari(env.eess(), sa);
        let rhs = g.ganit(c.oz, ad);
        t.counter(format!("swap(adari(ess)(A)) = ganit(oz)(adari(ëss)(swap A)), push-invariant A #{i}"), lhs, rhs);
        let ad = g.adari(env.eess(), a);
        let lhs = g.swap(ad);
        let ad = g.adari(env.oss(), sa);
        let rhs = g.ganit(c.oz, ad);
        t.eq(format!("swap(adari(ëss)(A)) = ganit(oz)(adari(oss)(swap A)), push-invariant A #{i}"), lhs, rhs);
    }
    let a = env.generic(g, 83);
    let l1 = g.adari(env.ess(), a);
    let l1 = g.leng(1, l1);
    let la = g.leng(1, a);
    t.eq_to("leng_1∘adari(ess) = leng_1", l1, la, 1);

    let sa = g.swap(a);
    let ad = g.adari(env.ess(), a);
    let lhs = g.swap(ad);
    let ad = g.adari(env.oess(), sa);
    let rhs = g.ganit(c.oz, ad);
    t.counter("swap(adari(ess)(A)) = ganit(oz)(adari(öss)(swap A)) for generic A", lhs, rhs);
}

fn senary(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    let (c, zero) = (env.c, g.zero());
    let b = env.generic(g, 90);

    let et = g.e_ter(c, b);
    t.eq_to("E-ter(B) = B at length <= 1", et, b, 1);
    let ex = g.e_ter_explicit(c, b);
    t.eq("E-ter(B) = mu(B, 1-E) + answamu(B, E)", et, ex);
    let back = g.e_ter_inv(c, et);
    t.eq("E-ter^-1(E-ter B) = B", back, b);
    let i1 = g.e_ter_inv(c, b);
    let i2 = g.e_ter_inv_triple(c, b);
    t.eq("E-ter^-1 answamu form = triple-sum form", i1, i2);

    let es = g.e_swap(c, b);
    let back = g.e_swap_inv(c, es);
    t.eq_to("E-swap^-1(E-swap B) = B", back, b, 3);
    let f1 = g.e_swap_inv(c, b);
    let f2 = g.e_swap_inv_form2(c, b);
    let f3 = g.e_swap_inv_form3(c, b);
    t.eq_to("E-swap^-1 first form = second form", f1, f2, 3);
    t.eq_to("E-swap^-1 first form = third form", f1, f3, 3);
    let f2l = g.e_swap_inv_form2_literal(c, b);
    t.check(Check::equal("E-swap^-1 first form = second form with inner swap on answamu", f1, f2l).up_to(3).negative());

    let ep = g.e_push(c, b);
    let back = g.e_push_inv(c, ep);
    t.eq_to("E-push^-1(E-push B) = B", back, b, 3);
    let x1 = g.e_push_inv(c, b);
    let x2 = g.e_push_inv_explicit(c, b);
    t.eq_to("E-push^-1 compositional = explicit", x1, x2, 3);
    let sb = g.swap(b);
    let x = g.mantar(sb);
    let x = g.e_swap(c, x);
    let x = g.mantar(x);
    let rhs = g.neg(x);
    t.eq_to("E-push = neg∘mantar∘E-swap∘mantar∘swap", ep, rhs, 3);
    let mb = g.mantar(b);
    let lhs = g.gaxit(c.oz, c.oz, mb);
    let om = g.o_mantar(c, b);
    t.eq_to("gaxit(oz,oz)∘mantar = O-mantar", lhs, om, 3);
    let omm = g.o_mantar(c, om);
    t.eq_to("O-mantar is an involution", omm, b, 3);

    let s1 = g.e_sena(c, b);
    let s2 = g.e_sena_explicit(c, b);
    t.eq("E-sena compositional = explicit", s1, s2);
    let p1 = g.e_push(c, b);
    t.eq_to("E-sena(B) = E-push(B) at length <= 1", s1, p1, 1);
    for i in 0..10 {
        let bi = env.generic(g, 100 + i);
        let s = g.e_sena(c, bi);
        let lhs = g.sub(bi, s);
        let p = g.e_push(c, bi);
        let d = g.sub(bi, p);
        let rhs = g.swamu(c.es, d);
        t.eq(format!("(id - E-sena)(B) = swamu(es, (id - E-push)(B)), generic B #{i}"), lhs, rhs);
    }
    let mob = g.mu(c.o, b);
    let ss = g.e_sena(c, sb);
    let ss = g.swap(ss);
    let omo = g.one_minus(c.o);
    let t2 = g.mu(omo, ss);
    let arg = g.add(mob, t2);
    let lhs = g.o_rush(c, arg);
    let rhs = g.mu(b, omo);
    t.eq("O-Rush(mu(O,B) + mu(1-O, swap∘E-sena∘swap(B))) = mu(B, 1-O)", lhs, rhs);
    let r2 = g.rush_r2(c, mob);
    let r3 = g.rush_r3(c, mob);
    let r4 = g.rush_r4(c, mob);
    let comb = g.lin(&[(Rat::from_int(-1), r2), (Rat::from_int(1), r3), (Rat::from_int(-1), r4)]);
    t.eq("(-R2 + R3 - R4)(mu(O,M)) = 0", comb, zero);
    let r0 = g.o_rush(c, zero);
    t.eq("O-Rush(0) = 0", r0, zero);

    for i in 0..5 {
        let alol = env.profile(g, ProfileKind::AlOl, 110 + i);
        let d = g.senary_defect(c, alol);
        t.eq(format!("senary relation E-ter = push∘mantar∘E-ter∘mantar on al_ol #{i}"), d, zero);
        if i == 0 {
            t.check(g.invariance_check(NamedOp::ENegpush, c, "al_ol #0", alol));
            t.check(g.invariance_check(NamedOp::EPush, c, "al_ol #0", alol));
            t.check(g.invariance_check(NamedOp::ESena, c, "al_ol #0", alol));
        }
    }

    let d = g.senary_defect(c, b);
    t.counter("senary relation on generic B", d, zero);
    t.check(g.invariance_check(NamedOp::EPush, c, "generic B", b).negative());
    t.check(g.invariance_check(NamedOp::ESena, c, "generic B", b).negative());
}

fn push_sena(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    let c = env.c;
    let ie = g.invgari(env.ess());
    for i in 0..5 {
        let a = env.profile(g, ProfileKind::PushInvariant, 120 + i);
        let fwd = g.adari(env.ess(), a);
        t.check(g.invariance_check(NamedOp::ESena, c, &format!("adari(ess)(pushsym #{i})"), fwd));
        let fwd2 = g.adari(env.eess(), a);
        t.check(g.invariance_check(NamedOp::ESena, c, &format!("adari(ëss)(pushsym #{i})"), fwd2));
        let back = g.adari(ie, fwd);
        t.check(g.invariance_check(NamedOp::Push, c, &format!("adari(invgari ess)(adari(ess)(pushsym #{i}))"), back));
    }
    let gen = env.generic(g, 130);
    let img = g.adari(env.ess(), gen);
    t.check(g.invariance_check(NamedOp::ESena, c, "adari(ess)(generic)", img).negative());
}

fn lemmas_6(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    let c = env.c;
    let x = env.generic(g, 140);
    let a = env.generic(g, 141);
    let bm = env.generic(g, 142);

    let mx = g.mantar(x);
    let ma = g.mantar(a);
    let lhs = g.irat(mx, ma);
    let px = g.push_inv(x);
    let ir = g.irat(px, a);
    let rhs = g.mantar(ir);
    t.eq("irat(mantar X)∘mantar = mantar∘irat(push_inv X)", lhs, rhs);

    let sy = env.profile(g, ProfileKind::Symmetral, 143);
    for (label, s) in [("symmetral S", sy), ("os", c.os)] {
        let lhs = g.axit(a, bm, s);
        let ms = g.mantar(s);
        let inner = g.axit(a, bm, ms);
        let l = g.mu(s, inner);
        let rhs = g.mu(l, s);
        t.eq(format!("axit(A,B)(X) = mu(X, axit(A,B)(mantar X), X) for gantar-invariant X = {label}"), lhs, rhs);
    }
    for (label, s) in [("os", c.os), ("oss", env.oss())] {
        let gs = g.gantar(s);
        t.eq(format!("{label} is gantar-invariant"), gs, s);
        let l = g.garit(s, ma);
        let r = g.garit(s, a);
        let r = g.mantar(r);
        t.eq(format!("garit({label}) commutes with mantar"), l, r);
    }
    let gx = env.group(g, 144);
    let l = g.garit(gx, ma);
    let r = g.garit(gx, a);
    let r = g.mantar(r);
    t.counter("garit(X) commutes with mantar for X = 1 + generic", l, r);

    for (label, s) in [("oss", env.oss()), ("öss", env.oess())] {
        let is = g.invgari(s);
        let lhs = g.garit(s, is);
        let rhs = g.invmu(s);
        t.eq(format!("garit({label})(invgari {label}) = invmu {label}"), lhs, rhs);
        let mis = g.mantar(is);
        let lhs = g.garit(s, mis);
        let rhs = g.minus(s);
        t.eq(format!("garit({label})(mantar(invgari {label})) = -{label}"), lhs, rhs);
        let pa = g.anti(s);
        let pa = g.pari(pa);
        let ims = g.invmu(s);
        t.eq(format!("pari(anti {label}) = invmu {label}"), pa, ims);
    }

    let sa = g.swap(a);
    for (sec_label, sec, partner_label, partner) in [
        ("ëss", env.eess(), "oss", env.oss()),
        ("ess", env.ess(), "öss", env.oess()),
    ] {
        let ad = g.adari(sec, a);
        let sw = g.swap(ad);
        let lhs = g.ganit_inv(c.oz, sw);
        let pr = g.preira(partner, sa);
        let rhs = g.fragari(pr, partner);
        t.eq_to(
            format!("ganit(oz)^-1(swap(adari({sec_label})(A))) = fragari(preira({partner_label}, swap A), {partner_label})"),
            lhs,
            rhs,
            3,
        );
        let mad = g.adari(sec, ma);
        let adm = g.mantar(ad);
        t.eq(format!("mantar commutes with adari({sec_label})"), mad, adm);
    }

    let b = env.generic(g, 145);
    for (label, sec) in [("ëss", env.eess()), ("ess", env.ess())] {
        let ai = g.adari_inv(sec, b);
        let pi = g.push_inv(ai);
        let d = g.sub(ai, pi);
        let lhs = g.swamu(sec, d);
        let epi = g.e_push_inv(c, b);
        let d = g.sub(b, epi);
        let rhs = g.gari(d, sec);
        t.eq_to(
            format!("swamu({label}, (id - push_inv)(adari({label})^-1 B)) = gari((id - E-push^-1)(B), {label})"),
            lhs,
            rhs,
            3,
        );
    }
}

fn negelon(g: &mut RatGraph, env: &Env<'_>, t: &mut Items) {
    t.scalar("F(r,k,l,h) = 0 for 2 <= r <= 12, h >= 1, k+l+h <= r-1", ScalarJob::NegelonScan {
        r_max: 12,
        h_min: 1,
        expect: Expect::Holds,
    });
    t.scalar("parameter range 2 <= r <= 12, h >= 1, k+l+h <= r-1 has C(14,4) = 1001 tuples", ScalarJob::TupleCount {
        r_max: 12,
        h_min: 1,
        expected: 1001,
    });
    t.scalar("F(r,k,l,h) = 0 with h = 0 allowed", ScalarJob::NegelonScan {
        r_max: 12,
        h_min: 0,
        expect: Expect::Fails,
    });
    t.scalar("Vandermonde step", ScalarJob::Vandermonde { n_max: 12 });
    t.scalar("convolution step", ScalarJob::Convolution { n_max: 10 });
    t.scalar("finite-difference step", ScalarJob::FiniteDifference { n_max: 12 });

    let s = env.profile(g, ProfileKind::Symmetral, 150);
    let gs = env.group(g, 151);
    for (label, x) in [("symmetral S", s), ("S = 1 + generic", gs)] {
        for n in [1usize, 3] {
            let lhs = g.mu_power(x, n);
            let rhs = g.mu_factor_expansion(x, n);
            t.eq(format!("mu^{n}(S) = Σ C({n},i) mu^i(S-1), {label}"), lhs, rhs);
        }
    }
    let lhs = g.mu_power(gs, 3);
    let one = g.one();
    let red = g.sub(gs, one);
    let wrong = g.lin(&[(Rat::from_int(1), one), (Rat::from_int(3), red)]);
    t.counter("mu^3(S) = 1 + 3(S-1)", lhs, wrong);
}
