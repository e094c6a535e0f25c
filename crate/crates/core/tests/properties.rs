use std::f64::consts::TAU;

use butson::cyclo::totient;
use butson::fixtures::{fourier, w19};
use butson::format::{parse_grid, parse_json, write_grid, write_json};
use butson::petrescu::{check_system_a, check_system_b, extract_blocks};
use butson::{cyclotomic_poly, CycElem, Eisenstein, ExponentMatrix, IntPolynomial, Move, SearchConfig};
use num_complex::Complex64;
use proptest::prelude::*;

fn float_value(c: &CycElem) -> Complex64 {
    let q = c.q() as f64;
    c.coeffs()
        .iter()
        .enumerate()
        .map(|(j, &k)| Complex64::from_polar(k as f64, TAU * j as f64 / q))
        .sum()
}

fn elem(max_q: u32) -> impl Strategy<Value = CycElem> {
    (1..=max_q).prop_flat_map(|q| {
        prop::collection::vec(-4i64..=4, q as usize).prop_map(move |c| CycElem::new(q, c).unwrap())
    })
}

fn same_q_pair() -> impl Strategy<Value = (CycElem, CycElem)> {
    (1u32..=12).prop_flat_map(|q| {
        let v = prop::collection::vec(-4i64..=4, q as usize);
        (v.clone(), v).prop_map(move |(a, b)| (CycElem::new(q, a).unwrap(), CycElem::new(q, b).unwrap()))
    })
}

/// Integer combinations of rotated sums over subgroups, which always vanish.
fn vanishing(max_q: u32) -> impl Strategy<Value = CycElem> {
    (2..=max_q).prop_flat_map(|q| {
        let divisors: Vec<u32> = (2..=q).filter(|p| q % p == 0).collect();
        prop::collection::vec((prop::sample::select(divisors), 0..q, -3i64..=3), 1..5).prop_map(
            move |terms| {
                let mut c = vec![0i64; q as usize];
                for (p, shift, k) in terms {
                    for m in 0..p {
                        c[((shift + m * (q / p)) % q) as usize] += k;
                    }
                }
                CycElem::new(q, c).unwrap()
            },
        )
    })
}

fn exponent_matrix(max_n: usize, max_q: u32) -> impl Strategy<Value = ExponentMatrix> {
    (1..=max_n, 1..=max_n, 1..=max_q).prop_flat_map(|(r, c, q)| {
        prop::collection::vec(0..q, r * c)
            .prop_map(move |e| ExponentMatrix::new(q, r, c, e).unwrap())
    })
}

fn moves_for(n: usize, q: u32) -> impl Strategy<Value = Vec<Move>> {
    let mv = prop_oneof![
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(Move::PermuteRows),
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle().prop_map(Move::PermuteCols),
        (0..n, 0..n).prop_map(|(a, b)| Move::SwapRows(a, b)),
        (0..n, 0..n).prop_map(|(a, b)| Move::SwapCols(a, b)),
        (0..n, 0..q).prop_map(|(row, exponent)| Move::ScaleRow { row, exponent }),
        (0..n, 0..q).prop_map(|(col, exponent)| Move::ScaleCol { col, exponent }),
    ];
    prop::collection::vec(mv, 0..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn zero_test_matches_floating_point(c in elem(12)) {
        let z = float_value(&c).norm();
        prop_assert_eq!(c.is_zero(), z < 1e-9, "value {} has modulus {}", c, z);
    }

    #[test]
    fn subgroup_sums_vanish(c in vanishing(12)) {
        prop_assert!(c.is_zero());
        prop_assert!(float_value(&c).norm() < 1e-9);
    }

    #[test]
    fn ring_operations_match_floating_point((a, b) in same_q_pair()) {
        let (fa, fb) = (float_value(&a), float_value(&b));
        let close = |x: &CycElem, y: Complex64| (float_value(x) - y).norm() < 1e-6;
        prop_assert!(close(&a.add(&b).unwrap(), fa + fb));
        prop_assert!(close(&a.sub(&b).unwrap(), fa - fb));
        prop_assert!(close(&a.mul(&b).unwrap(), fa * fb));
        prop_assert!(close(&a.conj(), fa.conj()));
        prop_assert!(close(&a.canonical().unwrap(), fa));
        let (re, im) = a.approx();
        prop_assert!((Complex64::new(re, im) - fa).norm() < 1e-9);
        prop_assert_eq!(a == b, (fa - fb).norm() < 1e-9);
    }

    #[test]
    fn canonical_form_is_a_normal_form((a, b) in same_q_pair()) {
        prop_assert_eq!(a == b, a.canonical().unwrap().coeffs() == b.canonical().unwrap().coeffs());
        let once = a.canonical().unwrap();
        let twice = once.canonical().unwrap();
        prop_assert_eq!(twice.coeffs(), once.coeffs());
    }

    #[test]
    fn scaling_and_exact_division(c in elem(12), k in 2i64..7) {
        let scaled = c.scale(k).unwrap();
        prop_assert_eq!(scaled.div_exact(k).unwrap(), c.clone());
        let plus_one = scaled.add(&CycElem::from_int(c.q(), 1)).unwrap();
        prop_assert!(plus_one.div_exact(k).is_err());
    }

    #[test]
    fn eisenstein_agrees_with_generic(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50, j in 0u32..6) {
        let (x, y) = (Eisenstein::new(a, b), Eisenstein::new(c, d));
        let (gx, gy) = (x.to_cyc(), y.to_cyc());
        prop_assert_eq!(x.mul(y).to_cyc(), gx.mul(&gy).unwrap());
        prop_assert_eq!((x + y).to_cyc(), gx.add(&gy).unwrap());
        prop_assert_eq!(x.conj().to_cyc(), gx.conj());
        prop_assert_eq!(x.mul_root(j).to_cyc(), gx.mul_root(j));
        prop_assert_eq!(Eisenstein::from_cyc(&gx.mul(&gy).unwrap()).unwrap(), x.mul(y));
        prop_assert_eq!(x.norm(), x.mul(x.conj()).a);
        prop_assert_eq!(x.mul(x.conj()).b, 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn equivalence_moves_preserve_bh(moves in moves_for(19, 6)) {
        let mut m = w19();
        for mv in &moves {
            m = m.apply(mv).unwrap();
        }
        prop_assert!(m.verify_bh().unwrap().is_hadamard);
        prop_assert!(m.dephase().verify_bh().unwrap().is_hadamard);
        prop_assert!(m.conj_transpose().verify_bh().unwrap().is_hadamard);
        prop_assert!(m.dephase().is_dephased());
        prop_assert_eq!(m.dephase().dephase(), m.dephase());
    }

    #[test]
    fn moves_preserve_failure(moves in moves_for(19, 6), i in 0usize..19, j in 0usize..19, bump in 1u32..6) {
        let mut m = w19();
        m.set(i, j, (m.get(i, j) + bump) % 6).unwrap();
        for mv in &moves {
            m = m.apply(mv).unwrap();
        }
        prop_assert!(!m.verify_bh().unwrap().is_hadamard);
        prop_assert!(!m.dephase().verify_bh().unwrap().is_hadamard);
    }

    #[test]
    fn fourier_survives_moves(n in 2usize..=8, seed in any::<u64>()) {
        let mut m = fourier(n);
        let q = n as u32;
        let mut s = seed;
        for _ in 0..6 {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let r = (s >> 33) as usize;
            let mv = match r % 3 {
                0 => Move::SwapRows(r % n, (r / 7) % n),
                1 => Move::ScaleCol { col: r % n, exponent: (r / 11) as u32 % q },
                _ => Move::SwapCols(r % n, (r / 13) % n),
            };
            m = m.apply(&mv).unwrap();
        }
        prop_assert!(m.verify_bh().unwrap().is_hadamard);
    }

    #[test]
    fn rows_and_columns_agree(m in exponent_matrix(6, 6)) {
        if m.is_square() {
            let r = m.verify_bh().unwrap();
            prop_assert!(r.rows_agree_with_columns());
            let pairs = m.n_rows() * (m.n_rows() - 1) / 2;
            prop_assert!(r.violations.len() <= pairs);
            prop_assert!(r.violations.windows(2).all(|w| (w[0].i, w[0].k) < (w[1].i, w[1].k)));
        } else {
            prop_assert!(m.verify_bh().is_err());
        }
    }

    #[test]
    fn dephasing_reflects_bh(m in exponent_matrix(5, 6)) {
        if m.is_square() {
            prop_assert_eq!(m.verify_bh().unwrap().is_hadamard, m.dephase().verify_bh().unwrap().is_hadamard);
        }
    }

    #[test]
    fn formats_round_trip(m in exponent_matrix(8, 12)) {
        prop_assert_eq!(parse_grid(&write_grid(&m), None).unwrap(), m.clone());
        let doc = write_json(&m);
        let back = parse_json(&doc).unwrap();
        prop_assert_eq!(write_json(&back), doc);
        prop_assert_eq!(back, m);
    }
}

#[test]
fn cyclotomic_polynomials_divide_x_to_the_q_minus_one() {
    for q in 1..=30u32 {
        let phi = cyclotomic_poly(q).unwrap();
        assert_eq!(phi.degree(), Some(totient(q) as usize), "q = {q}");
        assert_eq!(phi.leading(), 1);
        let (_, rem) = IntPolynomial::x_pow_minus_one(q as usize).div_rem(&phi).unwrap();
        assert!(rem.is_zero(), "q = {q}");
        // the primitive root is a zero of Φ_q and no other root is
        for j in 0..q {
            let z = Complex64::from_polar(1.0, TAU * j as f64 / q as f64);
            let v: Complex64 = phi.coeffs().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c as f64);
            let coprime = (1..=q).all(|d| d == 1 || q % d != 0 || j % d != 0);
            assert_eq!(v.norm() < 1e-6, coprime, "q = {q}, j = {j}");
        }
    }
}

fn corpus() -> Vec<butson::PetrescuBlocks> {
    let mut out = vec![extract_blocks(&w19(), 6).unwrap()];
    for (s, q) in [(1, 2), (1, 4), (1, 6), (2, 6), (3, 4)] {
        let mut cfg = SearchConfig::new(s, q);
        cfg.max_solutions = 0;
        out.extend(butson::registry::run(&cfg).unwrap().solutions.into_iter().map(|sol| sol.blocks));
    }
    let mut cfg = SearchConfig::new(6, 6);
    cfg.max_solutions = 3;
    out.extend(butson::registry::run(&cfg).unwrap().solutions.into_iter().map(|sol| sol.blocks));
    out
}

#[test]
fn both_systems_hold_on_every_solution() {
    for b in corpus() {
        let a = check_system_a(&b).unwrap();
        let bb = check_system_b(&b).unwrap();
        assert!(a.passed() && bb.passed(), "s = {}, q = {}", b.s, b.q);
        assert!(b.assemble().verify_bh().unwrap().is_hadamard);
        assert_eq!(extract_blocks(&b.assemble(), b.s).unwrap(), b);
    }
}

#[test]
fn systems_fail_together_on_perturbed_blocks() {
    let b = extract_blocks(&w19(), 6).unwrap();
    for (i, j) in [(0, 0), (3, 4), (5, 5)] {
        let mut x = b.x.clone();
        x.set(i, j, (x.get(i, j) + 1) % 6).unwrap();
        let p = butson::PetrescuBlocks { x, ..b.clone() };
        assert!(!check_system_a(&p).unwrap().passed());
        assert!(!check_system_b(&p).unwrap().passed());
    }
}
