//! The E/O-twisted operator family around the senary relation.
//!
//! Every operator is a constructor on [`Graph`] taking the unit's [`Canon`]
//! first and the operand last. Where several closed forms exist, the plain
//! name is the implementation and the `_explicit`/`_form*` variants are kept
//! for cross-checking.

use crate::canonical::Canon;
use crate::engine::{Graph, MouldId, Node};
use crate::scalar::Scalar;

impl<S: Scalar> Graph<S> {
    /// `O-mantar = ganit(oz) ∘ mantar ∘ ganit(oz)^{-1}`.
    pub fn o_mantar(&mut self, c: &Canon, a: MouldId) -> MouldId {
        let t = self.ganit_inv(c.oz, a);
        let t = self.mantar(t);
        self.ganit(c.oz, t)
    }

    /// `E-negpush = mantar ∘ swap ∘ O-mantar ∘ swap`.
    pub fn e_negpush(&mut self, c: &Canon, a: MouldId) -> MouldId {
        let t = self.swap(a);
        let t = self.o_mantar(c, t);
        let t = self.swap(t);
        self.mantar(t)
    }

    /// Inverse of [`Graph::e_negpush`]; every factor is an involution.
    pub fn e_negpush_inv(&mut self, c: &Canon, a: MouldId) -> MouldId {
        let t = self.mantar(a);
        let t = self.swap(t);
        let t = self.o_mantar(c, t);
        self.swap(t)
    }

    /// `E-neg = neg ∘ adari(es)`.
    pub fn e_neg(&mut self, c: &Canon, a: MouldId) -> MouldId {
        let t = self.adari(c.es, a);
        self.neg(t)
    }

    pub fn e_neg_inv(&mut self, c: &Canon, a: MouldId) -> MouldId {
        let t = self.neg(a);
        self.adari_inv(c.es, t)
    }

    /// `E-push = E-neg ∘ E-negpush`.
    pub fn e_push(&mut self, c: &Canon, a: MouldId) -> MouldId {
        let t = self.e_negpush(c, a);
        self.e_neg(c, t)
    }

    /// `E-push^{-1} = E-negpush^{-1} ∘ E-neg^{-1}`.
    pub fn e_push_inv(&mut self, c: &Canon, a: MouldId) -> MouldId {
        let t = self.e_neg_inv(c, a);
        self.e_negpush_inv(c, t)
    }

    /// `E-push^{-1}(C) = swap(mu(O-Rush(swap C), oz))`.
    pub fn e_push_inv_explicit(&mut self, c: &Canon, x: MouldId) -> MouldId {
        let sx = self.swap(x);
        let r = self.o_rush(c, sx);
        let m = self.mu(r, c.oz);
        self.swap(m)
    }

    /// `E-swap = adari(es) ∘ swap ∘ gaxit(oz, oz)`.
    pub fn e_swap(&mut self, c: &Canon, a: MouldId) -> MouldId {
        let t = self.gaxit(c.oz, c.oz, a);
        let t = self.swap(t);
        self.adari(c.es, t)
    }

    /// `E-swap^{-1}(B) = mu(swap(preari(pari es, B)), 1 + O)`.
    pub fn e_swap_inv(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let pes = self.pari(c.es);
        let p = self.preari(pes, b);
        let s = self.swap(p);
        let opo = self.one_plus(c.o);
        self.mu(s, opo)
    }

    /// `mu(pari oz, swap(mu(1 + pari es, B) - answamu(pari es, B)), 1 + O)`.
    pub fn e_swap_inv_form2(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let pes = self.pari(c.es);
        let poz = self.pari(c.oz);
        let opo = self.one_plus(c.o);
        let one_pes = self.one_plus(pes);
        let m = self.mu(one_pes, b);
        let an = self.answamu(pes, b);
        let d = self.sub(m, an);
        let s = self.swap(d);
        let t = self.mu(poz, s);
        self.mu(t, opo)
    }

    /// Literal reading of the second form with `swap` applied to the `answamu`
    /// term only: `mu(pari oz, swap(mu(1 + pari es, B) - swap(answamu(pari es, B))), 1 + O)`.
    pub fn e_swap_inv_form2_literal(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let pes = self.pari(c.es);
        let poz = self.pari(c.oz);
        let opo = self.one_plus(c.o);
        let one_pes = self.one_plus(pes);
        let m = self.mu(one_pes, b);
        let an = self.answamu(pes, b);
        let san = self.swap(an);
        let d = self.sub(m, san);
        let s = self.swap(d);
        let t = self.mu(poz, s);
        self.mu(t, opo)
    }

    /// `mu(pari oz, mu(swap B, 1 + O) + swap(answamu(E, B) - mu(E, B)))`.
    pub fn e_swap_inv_form3(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let poz = self.pari(c.oz);
        let opo = self.one_plus(c.o);
        let sb = self.swap(b);
        let m1 = self.mu(sb, opo);
        let an = self.answamu(c.e, b);
        let me = self.mu(c.e, b);
        let d = self.sub(an, me);
        let sd = self.swap(d);
        let inner = self.add(m1, sd);
        self.mu(poz, inner)
    }

    /// `E-ter(B)(w) = B(w) - B(w') E(w_r) + B(fur(w', w_r)) E(fll(w', w_r))`, `w = w' w_r`.
    pub fn e_ter(&mut self, c: &Canon, b: MouldId) -> MouldId {
        if b == self.zero() {
            return b;
        }
        self.intern(Node::ETerDisplay { b, e: c.e })
    }

    /// `mu(B, 1 - E) + answamu(B, E)`.
    pub fn e_ter_explicit(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let ome = self.one_minus(c.e);
        let m = self.mu(b, ome);
        let an = self.answamu(b, c.e);
        self.add(m, an)
    }

    /// `E-ter^{-1}(B) = mu(answamu(B, invmu es), es)`.
    pub fn e_ter_inv(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let ies = self.invmu(c.es);
        let an = self.answamu(b, ies);
        self.mu(an, c.es)
    }

    /// `E-ter^{-1}(B)(w) = Σ_{w=abc} B(fur(a,b)) invmu(es)(fll(a,b)) es(c)`.
    pub fn e_ter_inv_triple(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let ies = self.invmu(c.es);
        self.intern(Node::TripleSum {
            b,
            mid: ies,
            right: c.es,
        })
    }

    /// `push ∘ mantar ∘ E-ter ∘ mantar`.
    fn senary_image(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let t = self.mantar(b);
        let t = self.e_ter(c, t);
        let t = self.mantar(t);
        self.push(t)
    }

    /// `E-sena = E-ter^{-1} ∘ push ∘ mantar ∘ E-ter ∘ mantar`.
    pub fn e_sena(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let t = self.senary_image(c, b);
        self.e_ter_inv(c, t)
    }

    /// `mu(swap(push^{-1}(mu(oz, swap(B + mu(E,B) - swamu(B,E))))), es)`.
    pub fn e_sena_explicit(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let me = self.mu(c.e, b);
        let sw = self.swamu(b, c.e);
        let inner = self.lin(&[(S::one(), b), (S::one(), me), (-S::one(), sw)]);
        let si = self.swap(inner);
        let m = self.mu(c.oz, si);
        let p = self.push_inv(m);
        let s = self.swap(p);
        self.mu(s, c.es)
    }

    /// `E-ter(B) - (push ∘ mantar ∘ E-ter ∘ mantar)(B)`; vanishes exactly on
    /// solutions of the senary relation.
    pub fn senary_defect(&mut self, c: &Canon, b: MouldId) -> MouldId {
        let t = self.e_ter(c, b);
        let s = self.senary_image(c, b);
        self.sub(t, s)
    }

    /// `O-Rush(X) = mu(1 - O, push X) + push(mu(O, X)) - push(swamu(X, O))`.
    pub fn o_rush(&mut self, c: &Canon, x: MouldId) -> MouldId {
        let r1 = self.push(x);
        let r2 = self.rush_r2(c, x);
        let r3 = self.rush_r3(c, x);
        let r4 = self.rush_r4(c, x);
        self.lin(&[(S::one(), r1), (-S::one(), r2), (S::one(), r3), (-S::one(), r4)])
    }

    /// `R2(X) = mu(O, push X)`.
    pub fn rush_r2(&mut self, c: &Canon, x: MouldId) -> MouldId {
        let p = self.push(x);
        self.mu(c.o, p)
    }

    /// `R3(X) = push(mu(O, X))`.
    pub fn rush_r3(&mut self, c: &Canon, x: MouldId) -> MouldId {
        let m = self.mu(c.o, x);
        self.push(m)
    }

    /// `R4(X) = push(swamu(X, O))`.
    pub fn rush_r4(&mut self, c: &Canon, x: MouldId) -> MouldId {
        let s = self.swamu(x, c.o);
        self.push(s)
    }
}
