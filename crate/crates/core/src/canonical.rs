//! Flexion units and the named bimoulds built from them.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{EmptyClass, Graph, LetterFn, MouldId, Node};
use crate::scalar::Scalar;
use crate::words::{sample_scalar, Biletter, Bounds, Word};

/// A flexion unit `E` together with its conjugate `O`.
#[derive(Clone)]
pub struct FlexionUnit<S: Scalar> {
    pub name: String,
    pub e: LetterFn<S>,
    pub o: LetterFn<S>,
}

impl<S: Scalar> FlexionUnit<S> {
    /// `E(u;v) = 1/u`, `O(u;v) = 1/v`.
    pub fn polar() -> Self {
        FlexionUnit {
            name: "polar".to_string(),
            e: Arc::new(|l: &Biletter<S>| S::one().checked_quot(&l.u)),
            o: Arc::new(|l: &Biletter<S>| S::one().checked_quot(&l.v)),
        }
    }

    /// Exchanges the roles of `E` and `O`.
    pub fn conjugate(&self) -> Self {
        let name = match self.name.strip_suffix("-conjugate") {
            Some(base) => base.to_string(),
            None => format!("{}-conjugate", self.name),
        };
        FlexionUnit {
            name,
            e: self.o.clone(),
            o: self.e.clone(),
        }
    }

    /// Units selectable by name.
    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "polar" => Some(Self::polar()),
            "polar-conjugate" => Some(Self::polar().conjugate()),
            _ => None,
        }
    }

    pub fn names() -> &'static [&'static str] {
        &["polar", "polar-conjugate"]
    }

    /// `E(w1)E(w2) - E(u1+u2;v1)E(u2;v2-v1) - E(u1+u2;v2)E(u1;v1-v2)`.
    pub fn tripartite_defect(&self, w1: &Biletter<S>, w2: &Biletter<S>) -> Option<S> {
        tripartite_defect(&self.e, w1, w2)
    }

    /// Runs the tripartite relation for `E`, and its swapped form for `O`, at
    /// `samples` random letter pairs. Pairs hitting a pole are redrawn.
    pub fn check_tripartite<R: Rng + ?Sized>(&self, rng: &mut R, samples: usize) -> Result<(), String> {
        let bounds = Bounds::default();
        let mut done = 0;
        let mut attempts = 0;
        while done < samples {
            attempts += 1;
            if attempts > 100 * samples.max(1) {
                return Err(format!("unit {}: too many poles while sampling", self.name));
            }
            let w1 = Biletter::new(sample_scalar(rng, bounds), sample_scalar(rng, bounds));
            let w2 = Biletter::new(sample_scalar(rng, bounds), sample_scalar(rng, bounds));
            let d_e = self.tripartite_defect(&w1, &w2);
            let flip = |l: &Biletter<S>| Biletter::new(l.v.clone(), l.u.clone());
            let d_o = tripartite_defect(&self.o, &flip(&w1), &flip(&w2));
            match (d_e, d_o) {
                (Some(a), Some(b)) if a.is_zero() && b.is_zero() => done += 1,
                (Some(_), Some(_)) => {
                    return Err(format!("unit {}: tripartite relation fails at {w1}, {w2}", self.name))
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// [`FlexionUnit::check_tripartite`] with a seeded generator.
    pub fn check_tripartite_seeded(&self, seed: u64, samples: usize) -> Result<(), String> {
        self.check_tripartite(&mut ChaCha8Rng::seed_from_u64(seed), samples)
    }

    /// The tripartite defects as length-2 moulds: `[E, O on swapped letters]`,
    /// zero at every other length.
    pub fn tripartite_moulds(&self, g: &mut Graph<S>) -> [MouldId; 2] {
        let e = self.e.clone();
        let o = self.o.clone();
        let flip = |l: &Biletter<S>| Biletter::new(l.v.clone(), l.u.clone());
        let de = g.closed(
            &format!("tripartite_E[{}]", self.name),
            EmptyClass::Lie,
            Arc::new(move |w: &Word<S>| match w.letters() {
                [w1, w2] => tripartite_defect(&e, w1, w2),
                _ => Some(S::zero()),
            }),
        );
        let d_o = g.closed(
            &format!("tripartite_O[{}]", self.name),
            EmptyClass::Lie,
            Arc::new(move |w: &Word<S>| match w.letters() {
                [w1, w2] => tripartite_defect(&o, &flip(w1), &flip(w2)),
                _ => Some(S::zero()),
            }),
        );
        [de, d_o]
    }
}

fn tripartite_defect<S: Scalar>(e: &LetterFn<S>, w1: &Biletter<S>, w2: &Biletter<S>) -> Option<S> {
    let (u1, v1, u2, v2) = (&w1.u, &w1.v, &w2.u, &w2.v);
    let s = u1.clone() + u2.clone();
    let lhs = e(w1)? * e(w2)?;
    let t1 = e(&Biletter::new(s.clone(), v1.clone()))? * e(&Biletter::new(u2.clone(), v2.clone() - v1.clone()))?;
    let t2 = e(&Biletter::new(s, v2.clone()))? * e(&Biletter::new(u1.clone(), v1.clone() - v2.clone()))?;
    Some(lhs - t1 - t2)
}

/// Product of a letter function over letters produced from the word.
fn letter_product<S: Scalar>(
    f: &LetterFn<S>,
    w: &Word<S>,
    letter_at: impl Fn(&Word<S>, usize) -> Biletter<S>,
) -> Option<S> {
    let mut acc = S::one();
    for i in 0..w.len() {
        acc = acc * f(&letter_at(w, i))?;
    }
    Some(acc)
}

fn prefix_u<S: Scalar>(w: &Word<S>, i: usize) -> S {
    w.letters()[..=i].iter().fold(S::zero(), |acc, l| acc + l.u.clone())
}

fn v_at<S: Scalar>(w: &Word<S>, i: isize) -> S {
    if i < 0 || i as usize >= w.len() {
        S::zero()
    } else {
        w.letters()[i as usize].v.clone()
    }
}

/// The canonical moulds of one flexion unit, built once into a graph.
#[derive(Clone, Debug)]
pub struct Canon {
    pub unit: String,
    /// `E` and `O` as length-1 moulds.
    pub e: MouldId,
    pub o: MouldId,
    /// `oz = invmu(1 - O)`, `ez = invmu(1 - E)`.
    pub oz: MouldId,
    pub ez: MouldId,
    /// `oz(w) = Π O(w_i)` in closed form.
    pub oz_product: MouldId,
    /// `es = swap(oz)`.
    pub es: MouldId,
    /// `es(w) = Π E(u_1+…+u_i; v_i - v_{i+1})`, `v_{r+1} = 0`.
    pub es_product: MouldId,
    /// `os(w) = Π O(u_1+…+u_i; v_i - v_{i-1})`, `v_0 = 0`.
    pub os: MouldId,
    /// `Π O(u_1+…+u_i; v_i - v_{i+1})`, `v_{r+1} = 0`; equals `swap(ez)`.
    pub os_swap: MouldId,
    /// `Σ_r ro_r / (r(r+1))`.
    pub to_series: MouldId,
    /// `ganit(oz)^{-1}(To)`.
    pub dilator: MouldId,
    /// Group-class solution `S` of `der S = preari(S, D)`.
    pub ode: MouldId,
    /// `invgari(S)`.
    pub dotted: MouldId,
    /// `swap(dotted)`.
    pub plain: MouldId,
}

impl Canon {
    pub fn build<S: Scalar>(g: &mut Graph<S>, unit: &FlexionUnit<S>) -> Canon {
        let tag = |s: &str| format!("{s}[{}]", unit.name);
        let e = g.letter(&tag("E"), unit.e.clone());
        let o = g.letter(&tag("O"), unit.o.clone());

        let one_minus_o = g.one_minus(o);
        let oz = g.invmu(one_minus_o);
        g.name(oz, &tag("oz"));
        let one_minus_e = g.one_minus(e);
        let ez = g.invmu(one_minus_e);
        g.name(ez, &tag("ez"));

        let of = unit.o.clone();
        let oz_product = g.closed(
            &tag("oz_product"),
            EmptyClass::Group,
            Arc::new(move |w: &Word<S>| letter_product(&of, w, |w, i| w.letters()[i].clone())),
        );
        let es = g.swap(oz);
        g.name(es, &tag("es"));
        let ef = unit.e.clone();
        let es_product = g.closed(
            &tag("es_product"),
            EmptyClass::Group,
            Arc::new(move |w: &Word<S>| {
                letter_product(&ef, w, |w, i| {
                    Biletter::new(prefix_u(w, i), v_at(w, i as isize) - v_at(w, i as isize + 1))
                })
            }),
        );
        let of = unit.o.clone();
        let os = g.closed(
            &tag("os"),
            EmptyClass::Group,
            Arc::new(move |w: &Word<S>| {
                letter_product(&of, w, |w, i| {
                    Biletter::new(prefix_u(w, i), v_at(w, i as isize) - v_at(w, i as isize - 1))
                })
            }),
        );
        let of = unit.o.clone();
        let os_swap = g.closed(
            &tag("os_swap"),
            EmptyClass::Group,
            Arc::new(move |w: &Word<S>| {
                letter_product(&of, w, |w, i| {
                    Biletter::new(prefix_u(w, i), v_at(w, i as isize) - v_at(w, i as isize + 1))
                })
            }),
        );

        let to_series = g.intern(Node::ToSeries { oz, o });
        g.name(to_series, &tag("To"));
        let dilator = g.ganit_inv(oz, to_series);
        g.name(dilator, &tag("dilator"));
        let ode = g.solve_dilator_ode(dilator);
        g.name(ode, &tag("ode"));
        let dotted = g.invgari(ode);
        g.name(dotted, &tag("dotted"));
        let plain = g.swap(dotted);
        g.name(plain, &tag("plain"));

        Canon {
            unit: unit.name.clone(),
            e,
            o,
            oz,
            ez,
            oz_product,
            es,
            es_product,
            os,
            os_swap,
            to_series,
            dilator,
            ode,
            dotted,
            plain,
        }
    }

    /// Length-`r` component `ro_r = r(r+1) · leng_r(To)`.
    pub fn ro_component<S: Scalar>(&self, g: &mut Graph<S>, r: usize) -> MouldId {
        let l = g.leng(r, self.to_series);
        g.scale(S::from_int((r * (r + 1)) as i64), l)
    }
}

impl<S: Scalar> Graph<S> {
    /// The group-class `S` with `der S = preari(S, D)`: at length `r`,
    /// `S(w) = preari(S, D)(w) / r`, where the right side only meets shorter
    /// values of `S` because `D(∅) = 0`.
    pub fn solve_dilator_ode(&mut self, d: MouldId) -> MouldId {
        let s = self.open_fix();
        let body = self.preari(s, d);
        let one = self.one();
        self.close_fix(s, one, body, true, "dilator_ode");
        s
    }

    /// Recovers `D` from a group-class `S` through `der S = preari(S, D)`:
    /// `D(w) = der(S)(w) - arit(D)(S)(w) - Σ_{w=ab, a≠∅} S(a) D(b)`, where the
    /// right side only meets shorter values of `D`.
    pub fn dilator_of(&mut self, s: MouldId) -> MouldId {
        let d = self.open_fix();
        let ds = self.der(s);
        let t = self.arit(d, s);
        let m = self.mu_tail(s, d);
        let body = self.lin(&[(S::one(), ds), (-S::one(), t), (-S::one(), m)]);
        let zero = self.zero();
        self.close_fix(d, zero, body, false, "dilator_of");
        d
    }
}
