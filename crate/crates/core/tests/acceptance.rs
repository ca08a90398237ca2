//! Acceptance suite: the headline computations and the property windows that
//! gate a release. All comparisons are exact (rational arithmetic, tolerance
//! zero). Each criterion prints one pass line; run with `--nocapture` to see
//! them.

use std::collections::BTreeMap;

use conformal_hochschild::closed::{
    closed_anick_diff, der10_identity_check, f3_element, k2_basis_explicit, tilde_partial_fast,
    u2_diff3, u3_diff,
};
use conformal_hochschild::cohomology::{regular_dim, Calculator, Method};
use conformal_hochschild::current::{
    current_cohomology_dim, current_cohomology_table, current_matrix, d_kernel_oracle,
    FiniteAlgebra,
};
use conformal_hochschild::linalg::{in_span, rat, rat_int, same_span, Rational};
use conformal_hochschild::morse::{
    anick_diff_paths, enumerate_chains, tilde_partial_general, AnickChain, DeltaEngine, GEngine,
};
use conformal_hochschild::rewrite::LinComb;
use conformal_hochschild::selftest::{run_derivation_suite, run_morse_suite};
use conformal_hochschild::Family;

fn chain(idx: &[u32]) -> AnickChain {
    AnickChain::new(idx.to_vec())
}

fn lc(terms: &[(&[u32], Rational)]) -> LinComb<AnickChain> {
    let mut out = LinComb::zero();
    for (t, c) in terms {
        out.add_term(chain(t), c.clone());
    }
    out
}

fn window_chains(family: Family, len_max: usize, deg_max: u32) -> Vec<AnickChain> {
    let mut out = Vec::new();
    for n in 1..=len_max {
        for d in 0..=deg_max {
            out.extend(enumerate_chains(family, n, d));
        }
    }
    out
}

#[test]
fn criterion_01_u3_cohomology_table() {
    let mut calc = Calculator::new(Family::U3, Method::Both, true);
    let report = calc.cohomology_table(5, 12).expect("table");
    let expected: BTreeMap<usize, usize> =
        [(1, 0), (2, 1), (3, 1), (4, 0), (5, 0)].into_iter().collect();
    assert_eq!(report.totals, expected, "U(3) totals");
    // the single classes sit in degree 3
    for e in &report.entries {
        let want = usize::from((e.n == 2 || e.n == 3) && e.d == 3);
        assert_eq!(e.cohomology, want, "cell ({}, {})", e.n, e.d);
    }
    println!(
        "CRITERION 1: PASS — U(3) n<=5, d<=12, method=both: H^1=0, H^2=1 (d=3), H^3=1 (d=3), H^4=H^5=0"
    );
}

#[test]
fn criterion_02_u2_cohomology_table() {
    let mut calc = Calculator::new(Family::U2, Method::Both, true);
    let report = calc.cohomology_table(4, 12).expect("table");
    for n in 1..=4 {
        assert_eq!(report.total(n), 0, "U(2) H^{n}");
    }
    println!("CRITERION 2: PASS — U(2) n<=4, d<=12: all totals vanish");
}

#[test]
fn criterion_03_oracle_equivalence() {
    let mut u3 = 0usize;
    let mut engine = DeltaEngine::new(Family::U3, true);
    for c in window_chains(Family::U3, 5, 10) {
        if c.len() < 2 {
            continue;
        }
        assert_eq!(u3_diff(&c), engine.delta(&c), "U(3) closed vs paths on {c}");
        u3 += 1;
    }
    let mut u2 = 0usize;
    let mut engine = DeltaEngine::new(Family::U2, true);
    for d in 0..=10 {
        for c in enumerate_chains(Family::U2, 3, d) {
            assert_eq!(u2_diff3(&c), engine.delta(&c), "U(2) closed vs paths on {c}");
            u2 += 1;
        }
    }
    println!(
        "CRITERION 3: PASS — closed-form differentials equal path sums on {u3} U(3) chains \
         (n<=5, d<=10) and {u2} U(2) 3-chains (d<=10)"
    );
}

#[test]
fn criterion_04_derivation_equivalence() {
    // fast = general and both commute with the differential, n <= 4, d <= 10
    let mut checked = 0usize;
    for family in [Family::U3, Family::U2] {
        let mut g_engine = GEngine::new(family);
        let mut delta = DeltaEngine::new(family, true);
        for c in window_chains(family, 4, 10) {
            let fast = tilde_partial_fast(family, &c);
            let general = {
                let g = g_engine.g(&c);
                let mut derived = LinComb::zero();
                for (b, coeff) in g.iter() {
                    derived.add_scaled(
                        &conformal_hochschild::morse::slotwise_derivative(family, b),
                        coeff,
                    );
                }
                conformal_hochschild::morse::project_to_chains(family, &derived)
            };
            assert_eq!(fast, general, "{family}: derivation routes differ on {c}");
            if c.len() >= 2 {
                let delta_c = delta.delta(&c);
                let mut delta_tilde = LinComb::zero();
                for (t, coeff) in fast.iter() {
                    delta_tilde.add_scaled(&delta.delta(t), coeff);
                }
                let mut tilde_delta = LinComb::zero();
                for (t, coeff) in delta_c.iter() {
                    tilde_delta.add_scaled(&tilde_partial_fast(family, t), coeff);
                }
                assert_eq!(delta_tilde, tilde_delta, "{family}: chain map fails on {c}");
            }
            checked += 1;
        }
    }
    // the full derivation suite adds the trivial-path and bidegree checks
    for check in run_derivation_suite() {
        assert!(check.passed, "{check}");
    }
    println!(
        "CRITERION 4: PASS — fast and transferred derivations agree and commute with the \
         differential on {checked} chains (n<=4, d<=10, both families)"
    );
}

#[test]
fn criterion_05_golden_values() {
    // delta_2([1|0]) = -[0]
    assert_eq!(anick_diff_paths(Family::U3, &chain(&[1, 0])), lc(&[(&[0], rat_int(-1))]));
    // delta_2([n|m]) = -n(n-1)/(n+m-1) [n+m-1], 2 <= n <= 8, m <= 8
    for n in 2..=8u32 {
        for m in 0..=8u32 {
            let want = lc(&[(
                &[n + m - 1],
                -Rational::new(
                    (i64::from(n) * i64::from(n - 1)).into(),
                    (i64::from(n) + i64::from(m) - 1).into(),
                ),
            )]);
            let c = chain(&[n, m]);
            assert_eq!(anick_diff_paths(Family::U3, &c), want, "delta_2 [{n}|{m}]");
            assert_eq!(u3_diff(&c), want, "closed delta_2 [{n}|{m}]");
        }
    }
    // delta_3([n|1|0]) = (2-n)[n|0] + n[n-1|1] for 2 <= n <= 8, with the
    // non-chain [1|1] term projected away at n = 2
    for n in 2..=8u32 {
        let mut want = LinComb::zero();
        want.add_term(chain(&[n, 0]), rat_int(2 - i64::from(n)));
        if n > 2 {
            want.add_term(chain(&[n - 1, 1]), rat_int(i64::from(n)));
        }
        let c = chain(&[n, 1, 0]);
        assert_eq!(anick_diff_paths(Family::U3, &c), want, "delta_3 [{n}|1|0]");
        assert_eq!(u3_diff(&c), want, "closed delta_3 [{n}|1|0]");
    }
    // delta_3(f_3) = 0
    assert!(f3_element().flat_map(|c| anick_diff_paths(Family::U3, c)).is_zero());
    // U(2): delta_3([2|1|0]) = 2[1|1] - [2|0], delta_3([1|1|0]) = 0,
    // derivation of [2|1|0] is 2[1|1|0]
    assert_eq!(
        anick_diff_paths(Family::U2, &chain(&[2, 1, 0])),
        lc(&[(&[1, 1], rat_int(2)), (&[2, 0], rat_int(-1))])
    );
    assert!(anick_diff_paths(Family::U2, &chain(&[1, 1, 0])).is_zero());
    assert_eq!(
        tilde_partial_general(Family::U2, &chain(&[2, 1, 0])),
        lc(&[(&[1, 1, 0], rat_int(2))])
    );
    println!("CRITERION 5: PASS — golden differential and derivation values hold exactly");
}

#[test]
fn criterion_06_kernel_structure() {
    let mut calc = Calculator::new(Family::U3, Method::Both, true);
    // dim K_1 = 1 with basis [0]
    let k1 = calc.kernel_basis(1, 0).expect("kernel");
    assert_eq!(k1.dim(), 1);
    assert_eq!(k1.basis_chains(0), lc(&[(&[0], rat_int(1))]));
    // K_2 basis: e_1 and e_d for 3 <= d <= 12; cycles for both maps
    for d in 0..=12u32 {
        let kernel = calc.kernel_basis(2, d).expect("kernel");
        let explicit = k2_basis_explicit(d);
        if explicit.is_zero() {
            assert_eq!(kernel.dim(), 0, "K_2 degree {d}");
            continue;
        }
        let ev = kernel.space.to_vector(&explicit).expect("vector");
        assert_eq!(kernel.dim(), 1, "K_2 degree {d}");
        assert!(same_span(&kernel.basis, &[ev]), "e_{d} spans K_2 degree {d}");
        assert!(explicit.flat_map(|c| tilde_partial_fast(Family::U3, c)).is_zero());
        if d >= 3 {
            assert!(explicit.flat_map(u3_diff).is_zero(), "delta e_{d}");
        }
    }
    // dim K_3^{(d)} = d - 3 for 4 <= d <= 12
    for d in 4..=12u32 {
        assert_eq!(calc.kernel_basis(3, d).expect("kernel").dim() as u32, d - 3, "K_3 degree {d}");
    }
    // kernel dimensions match the regular-chain counts for n in 3..=5, d <= 10
    for n in 3..=5usize {
        for d in 0..=10u32 {
            let expected: usize = std::iter::once(1u32)
                .chain(3..=d.max(2))
                .filter(|&j| j <= d)
                .map(|j| regular_dim(Family::U3, n - 2, d - j))
                .sum();
            assert_eq!(calc.kernel_basis(n, d).expect("kernel").dim(), expected, "K_{n} deg {d}");
        }
    }
    // dim im from K_4 is d - 4 for 5 <= d <= 12
    for d in 5..=12u32 {
        assert_eq!(
            calc.restricted_diff_matrix(4, d + 1).expect("matrix").rank() as u32,
            d - 4,
            "image into degree {d}"
        );
    }
    // e_{d+1} lies in the restricted image from K_3 for 3 <= d <= 10
    for d in 3..=10u32 {
        let target = calc.kernel_basis(2, d + 1).expect("kernel");
        let e_next = target.space.to_vector(&k2_basis_explicit(d + 1)).expect("vector");
        let source = calc.kernel_basis(3, d + 2).expect("kernel");
        let mut images = Vec::new();
        for i in 0..source.dim() {
            let mut image = LinComb::zero();
            for (c, coeff) in source.basis_chains(i).iter() {
                image.add_scaled(&closed_anick_diff(Family::U3, c).expect("closed"), coeff);
            }
            images.push(target.space.to_vector(&image).expect("vector"));
        }
        assert!(in_span(&images, &e_next), "e_{} not hit", d + 1);
    }
    println!("CRITERION 6: PASS — kernel bases, dimensions, and image ranks are as predicted");
}

#[test]
fn criterion_07_current_conformal() {
    let m2 = FiniteAlgebra::mat(2);
    // matrix current algebra: zero cohomology for n <= 3, y-degree <= 3
    for n in 1..=3usize {
        for d in 0..=3u32 {
            assert_eq!(current_cohomology_dim(&m2, n, d), 0, "matrix algebra at ({n}, {d})");
        }
    }
    // H^1 totals equal dim(A/A^2)
    for (algebra, want) in [
        (FiniteAlgebra::mat(2), 0usize),
        (FiniteAlgebra::trunc_poly(2), 1),
        (FiniteAlgebra::trunc_poly(3), 1),
    ] {
        let report = current_cohomology_table(&algebra, 1, 3);
        assert_eq!(report.total(1), want, "{}", algebra.name());
        assert_eq!(algebra.dim() - algebra.square_dim(), want, "{}", algebra.name());
    }
    // the differential squares to zero throughout the window
    for algebra in [FiniteAlgebra::mat(2), FiniteAlgebra::trunc_poly(2), FiniteAlgebra::trunc_poly(3)]
    {
        for n in 2..=3usize {
            for d in 0..=3u32 {
                let upper = current_matrix(&algebra, n + 1, d);
                let lower = current_matrix(&algebra, n, d);
                assert!(lower.matmul(&upper).is_zero(), "{} at ({n}, {d})", algebra.name());
            }
        }
    }
    // the difference-variable kernel oracle
    for n in 2..=4usize {
        assert!(d_kernel_oracle(n, 4), "kernel oracle at n = {n}");
    }
    println!(
        "CRITERION 7: PASS — matrix current algebra vanishes (n<=3, d<=3), H^1 = dim(A/A^2), \
         d∘d = 0, kernel oracle holds (n<=4, deg<=4)"
    );
}

#[test]
fn criterion_08_morse_well_formedness() {
    for check in run_morse_suite() {
        assert!(check.passed, "{check}");
    }
    println!(
        "CRITERION 8: PASS — partner involution, ±1 matching weights, acyclicity, filtration, \
         and pruning soundness on the n<=5, d<=10 window"
    );
}

#[test]
fn criterion_09_appending_identity() {
    let mut checked = 0usize;
    for n in 3..=5usize {
        for d in 0..=10u32 {
            for c in enumerate_chains(Family::U3, n - 1, d) {
                if c.last() < 2 {
                    continue;
                }
                let v = LinComb::from_term(c.clone(), rat_int(1));
                assert!(der10_identity_check(n, d, &v).expect("valid input"), "chain {c}");
                checked += 1;
            }
            // a non-basis homogeneous combination exercises linearity
            let regular: Vec<AnickChain> = enumerate_chains(Family::U3, n - 1, d)
                .into_iter()
                .filter(|c| c.last() >= 2)
                .collect();
            if regular.len() >= 2 {
                let mut v = LinComb::zero();
                v.add_term(regular[0].clone(), rat(2, 3));
                v.add_term(regular[1].clone(), rat_int(-5));
                assert!(der10_identity_check(n, d, &v).expect("valid input"));
                checked += 1;
            }
        }
    }
    println!(
        "CRITERION 9: PASS — the appending identity holds for {checked} homogeneous inputs \
         with last index >= 2 (length <= 4, degree <= 10)"
    );
}
