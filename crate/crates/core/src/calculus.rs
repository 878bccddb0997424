//! Flexion derivations, the GARI group action and its relatives.
//!
//! All constructors are methods on [`Graph`]; operands and results are
//! [`MouldId`]s. Operator-valued notions such as `ganit(oz)` are exposed as
//! two-argument constructors taking the operand last.

use crate::engine::{Graph, MouldId, Node};
use crate::scalar::Scalar;

fn factorial<S: Scalar>(n: usize) -> S {
    (1..=n).fold(S::one(), |acc, k| acc * S::from_int(k as i64))
}

impl<S: Scalar> Graph<S> {
    /// `amit(X)(A)(w) = Σ_{w=abc, b,c≠∅} A(a ⧺ ful(b,c)) X(flr(b,c))`.
    pub fn amit(&mut self, x: MouldId, a: MouldId) -> MouldId {
        if x == self.zero() || a == self.zero() {
            return self.zero();
        }
        self.intern(Node::Amit { x, a })
    }

    /// `anit(Y)(A)(w) = Σ_{w=abc, a,b≠∅} A(fur(a,b) ⧺ c) Y(fll(a,b))`.
    pub fn anit(&mut self, y: MouldId, a: MouldId) -> MouldId {
        if y == self.zero() || a == self.zero() {
            return self.zero();
        }
        self.intern(Node::Anit { y, a })
    }

    /// `axit(X,Y)(A) = amit(X)(A) + anit(Y)(A)`.
    pub fn axit(&mut self, x: MouldId, y: MouldId, a: MouldId) -> MouldId {
        let m = self.amit(x, a);
        let n = self.anit(y, a);
        self.add(m, n)
    }

    /// `arit(X)(A) = axit(X,-X)(A)`.
    pub fn arit(&mut self, x: MouldId, a: MouldId) -> MouldId {
        let m = self.amit(x, a);
        let n = self.anit(x, a);
        self.sub(m, n)
    }

    /// `irat(X)(A) = axit(X, -push X)(A)`.
    pub fn irat(&mut self, x: MouldId, a: MouldId) -> MouldId {
        let px = self.push(x);
        let y = self.minus(px);
        self.axit(x, y, a)
    }

    /// `preari(A,B) = arit(B)(A) + mu(A,B)`.
    pub fn preari(&mut self, a: MouldId, b: MouldId) -> MouldId {
        let t = self.arit(b, a);
        let m = self.mu(a, b);
        self.add(t, m)
    }

    /// `ari(A,B) = arit(B)(A) - arit(A)(B) + lu(A,B)`.
    pub fn ari(&mut self, a: MouldId, b: MouldId) -> MouldId {
        let t1 = self.arit(b, a);
        let t2 = self.arit(a, b);
        let l = self.lu(a, b);
        self.lin(&[(S::one(), t1), (-S::one(), t2), (S::one(), l)])
    }

    /// Group action `gaxit(X,Y)(A)`; `X` and `Y` should be group-class.
    pub fn gaxit(&mut self, x: MouldId, y: MouldId, a: MouldId) -> MouldId {
        let one = self.one();
        if x == one && y == one {
            return a;
        }
        if a == self.zero() {
            return a;
        }
        self.intern(Node::Gaxit {
            x,
            y,
            a,
            skip_full: false,
        })
    }

    pub fn gamit(&mut self, x: MouldId, a: MouldId) -> MouldId {
        let one = self.one();
        self.gaxit(x, one, a)
    }

    pub fn ganit(&mut self, y: MouldId, a: MouldId) -> MouldId {
        let one = self.one();
        self.gaxit(one, y, a)
    }

    /// `gaxit(X,Y)^{-1}(A)`, solved by length recursion: the full-length value
    /// enters `gaxit(X,Y)(Z)(w)` only through the all-kept term `Z(w)`.
    pub fn gaxit_inv(&mut self, x: MouldId, y: MouldId, a: MouldId) -> MouldId {
        let one = self.one();
        if x == one && y == one {
            return a;
        }
        let z = self.open_fix();
        let rest = self.intern(Node::Gaxit {
            x,
            y,
            a: z,
            skip_full: true,
        });
        let body = self.sub(a, rest);
        self.close_fix(z, a, body, false, "gaxit_inv");
        z
    }

    pub fn gamit_inv(&mut self, x: MouldId, a: MouldId) -> MouldId {
        let one = self.one();
        self.gaxit_inv(x, one, a)
    }

    pub fn ganit_inv(&mut self, y: MouldId, a: MouldId) -> MouldId {
        let one = self.one();
        self.gaxit_inv(one, y, a)
    }

    /// `garit(S)(A) = gaxit(S, invmu S)(A)`.
    pub fn garit(&mut self, s: MouldId, a: MouldId) -> MouldId {
        let is = self.invmu(s);
        self.gaxit(s, is, a)
    }

    /// `garit(S)^{-1}(Y) = fragari(mu(Y,S), S)`.
    pub fn garit_inv(&mut self, s: MouldId, y: MouldId) -> MouldId {
        let m = self.mu(y, s);
        self.fragari(m, s)
    }

    /// `gari(A,B) = mu(garit(B)(A), B)`.
    pub fn gari(&mut self, a: MouldId, b: MouldId) -> MouldId {
        let t = self.garit(b, a);
        self.mu(t, b)
    }

    /// The `X` with `gari(A,X) = 1`: `X(w) = -Σ_{w=ab, a≠∅} garit(X)(A)(a) X(b)`.
    pub fn invgari(&mut self, a: MouldId) -> MouldId {
        let one = self.one();
        if a == one {
            return a;
        }
        let x = self.open_fix();
        let g = self.garit(x, a);
        let tail = self.mu_tail(g, x);
        let body = self.minus(tail);
        self.close_fix(x, one, body, false, "invgari");
        x
    }

    /// `fragari(A,B) = gari(A, invgari B)`.
    pub fn fragari(&mut self, a: MouldId, b: MouldId) -> MouldId {
        let ib = self.invgari(b);
        self.gari(a, ib)
    }

    /// Iterated `preari` powers `P_1 = A`, `P_{n+1} = preari(P_n, A)`, up to the length cap.
    fn preari_powers(&mut self, a: MouldId) -> Vec<MouldId> {
        let mut powers = vec![a];
        for _ in 1..self.max_len() {
            let last = *powers.last().unwrap();
            let next = self.preari(last, a);
            powers.push(next);
        }
        powers
    }

    /// `expari(A) = 1 + Σ_{n≥1} P_n / n!`; exact at every length up to the cap.
    pub fn expari(&mut self, a: MouldId) -> MouldId {
        let mut terms = vec![(S::one(), self.one())];
        for (i, p) in self.preari_powers(a).into_iter().enumerate() {
            terms.push((S::one() / factorial::<S>(i + 1), p));
        }
        self.lin(&terms)
    }

    /// The lie-class `A` with `expari(A) = M`, by length recursion.
    pub fn logari(&mut self, m: MouldId) -> MouldId {
        let one = self.one();
        if m == one {
            return self.zero();
        }
        let a = self.open_fix();
        let powers = self.preari_powers(a);
        let mut terms = vec![(S::one(), m), (-S::one(), one)];
        for (i, p) in powers.into_iter().enumerate().skip(1) {
            terms.push((-S::one() / factorial::<S>(i + 1), p));
        }
        let body = self.lin(&terms);
        let zero = self.zero();
        self.close_fix(a, zero, body, false, "logari");
        a
    }

    /// `adari(M)(A) = gari(preari(M,A), invgari M)`.
    pub fn adari(&mut self, m: MouldId, a: MouldId) -> MouldId {
        if m == self.one() {
            return a;
        }
        let p = self.preari(m, a);
        let im = self.invgari(m);
        self.gari(p, im)
    }

    /// `adari(M)^{-1} = adari(invgari M)`.
    pub fn adari_inv(&mut self, m: MouldId, a: MouldId) -> MouldId {
        let im = self.invgari(m);
        self.adari(im, a)
    }

    /// `A + Σ_{n≥1} ari(L, ari(L, … A))/n!` with `L = logari(M)`.
    pub fn adari_series(&mut self, m: MouldId, a: MouldId) -> MouldId {
        let l = self.logari(m);
        let mut terms = vec![(S::one(), a)];
        let mut cur = a;
        for n in 1..=self.max_len() {
            cur = self.ari(l, cur);
            terms.push((S::one() / factorial::<S>(n), cur));
        }
        self.lin(&terms)
    }

    /// `swamu(A,B)(w) = Σ_{w=ab} A(ful(a,b)) B(flr(a,b))`.
    pub fn swamu(&mut self, a: MouldId, b: MouldId) -> MouldId {
        self.intern(Node::Swamu(a, b))
    }

    /// `answamu(A,B)(w) = Σ_{w=ab} A(fur(a,b)) B(fll(a,b))`.
    pub fn answamu(&mut self, a: MouldId, b: MouldId) -> MouldId {
        self.intern(Node::Answamu(a, b))
    }

    /// `gira(A,B) = swap(gari(swap A, swap B))`.
    pub fn gira(&mut self, a: MouldId, b: MouldId) -> MouldId {
        let (sa, sb) = (self.swap(a), self.swap(b));
        let g = self.gari(sa, sb);
        self.swap(g)
    }

    /// `preira(A,B) = swap(preari(swap A, swap B))`.
    pub fn preira(&mut self, a: MouldId, b: MouldId) -> MouldId {
        let (sa, sb) = (self.swap(a), self.swap(b));
        let g = self.preari(sa, sb);
        self.swap(g)
    }

    /// `fragira(A,B) = swap(fragari(swap A, swap B))`.
    pub fn fragira(&mut self, a: MouldId, b: MouldId) -> MouldId {
        let (sa, sb) = (self.swap(a), self.swap(b));
        let g = self.fragari(sa, sb);
        self.swap(g)
    }

    /// `girat(B)(A) = mu(gira(A,B), invmu B)`.
    pub fn girat(&mut self, b: MouldId, a: MouldId) -> MouldId {
        let g = self.gira(a, b);
        let ib = self.invmu(b);
        self.mu(g, ib)
    }

    /// `girat(B)^{-1}(Y) = fragira(mu(Y,B), B)`.
    pub fn girat_inv(&mut self, b: MouldId, y: MouldId) -> MouldId {
        let m = self.mu(y, b);
        self.fragira(m, b)
    }

    /// `gantar = anti ∘ pari ∘ invmu`.
    pub fn gantar(&mut self, a: MouldId) -> MouldId {
        let i = self.invmu(a);
        let p = self.pari(i);
        self.anti(p)
    }
}
