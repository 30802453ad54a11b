mod common;

use common::*;
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepvar::decide::{
    brute_force_solutions, excluded_family_solutions, solution_family, ExcludedFamily,
    HypothesisFailure,
};
use sepvar::decompose::is_indecomposable;
use sepvar::{decide_infinite, decide_vs_polynomial, parse_powersum, PowerSumSpec, PowerSumTerm, Verdict};

fn random_spec<R: Rng>(rng: &mut R, var: &str) -> PowerSumSpec {
    let n = rng.gen_range(1..=5);
    let d = rng.gen_range(1..=3);
    let mut terms = Vec::new();
    for _ in 0..d {
        let deg = rng.gen_range(0..=3);
        terms.push(PowerSumTerm::new(rand_poly(rng, deg, 3), rand_nonzero(rng, 3)));
    }
    PowerSumSpec::new(n, terms)
        .unwrap_or_else(|_| parse_powersum(G3_SRC).unwrap())
        .with_var(var)
}

/// The full hypothesis conjunction, computed from the public checks.
fn hypotheses_hold(g: &PowerSumSpec, h: &PowerSumSpec) -> bool {
    let gx = g.expand();
    g.validate_shape().ok
        && h.validate_shape().ok
        && gx.deg() >= 2
        && is_indecomposable(&gx).unwrap()
}

#[test]
fn hypothesis_gate_and_forward_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut decided = 0;
    for _ in 0..300 {
        let g = random_spec(&mut rng, "x");
        let h = if rng.gen_bool(0.4) {
            // build H = G ∘ P as a power sum by composing the roots
            let deg = rng.gen_range(1..=2);
            let pp = rand_poly(&mut rng, deg, 3);
            let terms = g
                .terms
                .iter()
                .map(|t| PowerSumTerm::new(t.root.compose(&pp), t.coeff.clone()))
                .collect();
            PowerSumSpec::new(g.n, terms).unwrap_or_else(|_| g.clone())
        } else {
            random_spec(&mut rng, "y")
        };
        let decision = decide_infinite(&g, &h);
        let gate = hypotheses_hold(&g, &h);
        match &decision.verdict {
            Verdict::HypothesisViolation(reasons) => {
                assert!(!gate);
                assert!(!reasons.is_empty());
            }
            Verdict::Finite => assert!(gate),
            Verdict::Infinite(pp) => {
                assert!(gate);
                decided += 1;
                let gx = g.expand();
                let hx = h.expand();
                assert_eq!(gx.compose(pp), hx);
                let ts: Vec<_> = (-50..=50).map(int).collect();
                let z = pp
                    .coeffs()
                    .iter()
                    .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
                for s in solution_family(pp, &ts, &z).unwrap() {
                    assert!(s.satisfies(&gx, &hx));
                }
                if decision.target_indecomposable == Some(true) {
                    assert_eq!(pp.deg(), 1);
                }
            }
        }
    }
    assert!(decided > 0);
}

#[test]
fn linear_witness_for_indecomposable_targets() {
    let g = parse_powersum(G3_SRC).unwrap();
    for lin in [p(&[1, 2]), p(&[-3, 1]), p(&[0, -1])] {
        // H(y) = G_3(λ(y)) written in Binet form with composed roots
        let terms = g
            .terms
            .iter()
            .map(|t| PowerSumTerm::new(t.root.compose(&lin), t.coeff.clone()))
            .collect();
        let h = PowerSumSpec::new(3, terms).unwrap();
        let dec = decide_infinite(&g, &h);
        assert_eq!(dec.target_indecomposable, Some(true));
        assert_eq!(dec.verdict, Verdict::Infinite(lin));
    }
}

#[test]
fn oracle_containment() {
    let g = g3_poly();
    let h = h3_poly();
    let Verdict::Infinite(pp) = decide_infinite(&parse_powersum(G3_SRC).unwrap(), &parse_powersum(H3_SRC).unwrap()).verdict else {
        panic!("expected infinite");
    };
    let grid = brute_force_solutions(&g, &h, &BigInt::one(), 15).unwrap();
    let ts: Vec<_> = (-3..=3).map(int).collect();
    for s in solution_family(&pp, &ts, &BigInt::one()).unwrap() {
        assert!(grid.iter().any(|q| q.x == s.x && q.y == s.y), "missing {:?}", s);
    }
    for s in &grid {
        assert!(s.satisfies(&g, &h));
    }
}

#[test]
fn brute_force_matches_exhaustive_grid() {
    // independent check: plain double loop
    let f = g3_poly();
    let g = h3_poly();
    let z = BigInt::from(2);
    let got = brute_force_solutions(&f, &g, &z, 6).unwrap();
    let mut expected = Vec::new();
    for a in -6..=6 {
        for b in -6..=6 {
            if f.eval(&rat(a, 2)) == g.eval(&rat(b, 2)) {
                expected.push((rat(a, 2), rat(b, 2)));
            }
        }
    }
    let got: Vec<_> = got.into_iter().map(|s| (s.x, s.y)).collect();
    assert_eq!(got, expected);
}

#[test]
fn excluded_family_random_tuples() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let ts: Vec<BigInt> = (-10..=10).map(BigInt::from).collect();
    for _ in 0..100 {
        let fam = ExcludedFamily {
            a: rand_nonzero(&mut rng, 9),
            b: rand_rational(&mut rng, 9),
            c: rand_rational(&mut rng, 9),
            d: rand_rational(&mut rng, 9),
            e: rand_nonzero(&mut rng, 9),
            f: rand_nonzero(&mut rng, 9),
            n: rng.gen_range(1..=7),
            m: rng.gen_range(1..=7),
        };
        let pts = excluded_family_solutions(&fam, &ts).unwrap();
        let (lhs, rhs) = (fam.lhs(), fam.rhs());
        for s in &pts {
            assert!(s.satisfies(&lhs, &rhs));
            assert!(s.clears());
        }
    }
}

#[test]
fn decide_poly_hypotheses() {
    let g = parse_powersum(G3_SRC).unwrap();
    let Verdict::HypothesisViolation(r) = decide_vs_polynomial(&g, &p(&[0, 0, 0, 1])).verdict else {
        panic!()
    };
    assert!(r.contains(&HypothesisFailure::TargetDegree { degree: Some(3) }));
    assert!(r.iter().any(|x| matches!(x, HypothesisFailure::TargetLinearPower { .. })));

    let Verdict::HypothesisViolation(r) = decide_vs_polynomial(&g, &p(&[4])).verdict else {
        panic!()
    };
    assert_eq!(r.len(), 2);
}
