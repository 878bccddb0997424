use flexion_core::check::Expect;
use flexion_core::negelon::{
    convolution_step, f_value, finite_difference_step, negelon_scan, tuples, vandermonde_step,
};
use flexion_core::Rat;
use num_traits::{One, Zero};

fn c(n: i64, k: i64) -> Rat {
    if k < 0 || n < 0 || k > n {
        return Rat::zero();
    }
    (0..k).fold(Rat::one(), |acc, i| acc * Rat::from_integer((n - i).into()) / Rat::from_integer((i + 1).into()))
}

/// Single sum over n after the Vandermonde and telescoping steps; valid for every h.
fn f_reduced(r: i64, k: i64, l: i64, h: i64) -> Rat {
    let mut total = Rat::zero();
    for n in 0..r {
        let inner = (0..=n).fold(Rat::zero(), |acc, d| {
            acc + Rat::from_integer((d + 1).into()) * c(d + 1, l) * c(n - d, k)
        });
        let term = c(r, n + 1) * c(n + 1, h) * inner / Rat::from_integer(((n + 1) * (n + 2)).into());
        total = if n % 2 == 0 { total + term } else { total - term };
    }
    total
}

#[test]
fn hand_examples() {
    assert!(f_value::<Rat>(2, 0, 0, 1).is_zero());
    assert!(f_value::<Rat>(12, 3, 4, 4).is_zero());
    assert!(!f_value::<Rat>(3, 0, 0, 0).is_zero());
}

#[test]
fn quadruple_sum_matches_reduced_form() {
    for r in 1..=7 {
        for k in 0..=r {
            for l in 0..=r {
                for h in 0..=r {
                    assert_eq!(f_value::<Rat>(r, k, l, h), f_reduced(r, k, l, h), "r={r} k={k} l={l} h={h}");
                }
            }
        }
    }
}

#[test]
fn h_zero_value_at_r3() {
    assert_eq!(f_value::<Rat>(3, 0, 0, 0), f_reduced(3, 0, 0, 0));
}

#[test]
fn tuple_counts() {
    assert_eq!(tuples(2, 1), vec![(2, 0, 0, 1)]);
    // Σ_{r=2..12} C(r+1, 3) = C(14, 4)
    assert_eq!(tuples(12, 1).len(), 1001);
    for r in 2..=12 {
        let brute = (0..r)
            .flat_map(|k| (0..r).flat_map(move |l| (1..r).map(move |h| (k, l, h))))
            .filter(|(k, l, h)| k + l + h <= r - 1)
            .count();
        let got = tuples(r, 1).into_iter().filter(|t| t.0 == r).count();
        assert_eq!(got, brute, "r={r}");
    }
}

#[test]
fn scan_holds_with_h_positive_and_fails_without() {
    let scan = negelon_scan::<Rat>("F", 12, 1, Expect::Holds);
    assert!(scan.passed());
    assert_eq!(scan.points.len(), 1001);
    let control = negelon_scan::<Rat>("F with h = 0", 12, 0, Expect::Fails);
    assert!(control.passed());
    assert!(control.failed_points > 0);
}

#[test]
fn summation_steps() {
    assert!(vandermonde_step::<Rat>("v", 10).passed());
    assert!(convolution_step::<Rat>("c", 8).passed());
    assert!(finite_difference_step::<Rat>("d", 10).passed());
}
