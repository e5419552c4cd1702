//! Acceptance gate: one test per criterion, each printing its own
//! pass line and asserting its stated time budget.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torusbook::{
    apply_unimodular, canonical_cycle, commuting_hyperbolic_candidates, cutting_cycle,
    deg_mod12, diophantine_solutions, enumerate_involutions, factorization_real_obstruction,
    hurwitz_classes_two, hurwitz_move, hyperbolic_conjugate, intersection, is_real_hyperbolic,
    odd_bipalindromic_split, pairing_and_type, pairs_equivalent, real_filling_verdict,
    realness_by_search, recognize_positive_twist, two_twist_diophantine, twist_matrix,
    CaseStatus, FiberKind, GenusOneFibration, HyperbolicRealness, Involution, Mat2,
    MoveDirection, ObstructionVerdict, OpenBookMonodromy, PrimitiveClass,
    RealFillingConclusion, RealnessCertificate, SwappedStatus, TraceSign, TwistFactorization,
};

fn cl(p: i64, q: i64) -> PrimitiveClass {
    PrimitiveClass::new(p, q).unwrap()
}

fn fac(cycles: &[(i64, i64)]) -> TwistFactorization {
    TwistFactorization::new(cycles.iter().map(|&(p, q)| cl(p, q)).collect())
}

fn target() -> Mat2 {
    Mat2::new(-39, 25, -25, 16)
}

fn within(start: Instant, budget: Duration, what: &str) {
    let spent = start.elapsed();
    assert!(spent <= budget, "{what} took {spent:?}, budget {budget:?}");
}

#[test]
fn criterion_1_total_monodromy() {
    let start = Instant::now();
    assert_eq!(*fac(&[(3, 5), (1, 0)]).total_monodromy(), target());
    within(start, Duration::from_secs(1), "criterion 1");
    println!("[acceptance] criterion 1 PASS");
}

#[test]
fn criterion_2_realness_certificate() {
    let start = Instant::now();
    let explicit = RealnessCertificate::checked(
        Involution::new(Mat2::new(5, -3, 8, -5)).unwrap(),
        Involution::new(Mat2::new(-120, 77, -187, 120)).unwrap(),
        target(),
    )
    .unwrap();
    assert!(explicit.verifies(&target()));

    let cert = realness_by_search(&target(), 200).unwrap().expect("certificate within 200");
    assert!(cert.verifies(&target()));
    // c m c = m^-1 at the matrix level
    let c = cert.c.matrix();
    assert_eq!(&(c * &target()) * c, target().inverse().unwrap());
    within(start, Duration::from_secs(5), "criterion 2");
    println!("[acceptance] criterion 2 PASS");
}

#[test]
fn criterion_3_cutting_cycle() {
    let start = Instant::now();
    let cycle = cutting_cycle(&target()).unwrap();
    let word: Vec<BigInt> = [1, 3, 1, 3].iter().map(|&a| BigInt::from(a)).collect();
    assert_eq!(canonical_cycle(cycle.word()).unwrap(), word);
    assert_eq!(cycle.sign(), TraceSign::Minus);
    assert!(cycle.verify_against(&target()));
    let split = odd_bipalindromic_split(cycle.word()).unwrap().expect("odd bipalindromic");
    assert_eq!(split.first, vec![BigInt::from(1)]);
    assert_eq!(
        split.second,
        [3, 1, 3].iter().map(|&a| BigInt::from(a)).collect::<Vec<_>>()
    );
    within(start, Duration::from_secs(1), "criterion 3");
    println!("[acceptance] criterion 3 PASS");
}

#[test]
fn criterion_4_diophantine_orbit() {
    let start = Instant::now();
    let form = two_twist_diophantine(&target()).unwrap();
    assert_eq!(form.to_string(), "25a^2 - 55ab + 25b^2 = 25");
    let sols = diophantine_solutions(&form, 40).unwrap();
    for w in [cl(1, 0), cl(0, 1), cl(3, 5), cl(5, 8), cl(16, 25), cl(25, 39)] {
        assert!(sols.contains(&w), "missing solution {w}");
    }
    // +-[[-3,5],[-5,8]] maps the solution set into itself (classes absorb the sign)
    let s = Mat2::new(-3, 5, -5, 8);
    let cands = commuting_hyperbolic_candidates(&target()).expect("hyperbolic commutant");
    assert!(cands.contains(&s) && cands.contains(&s.neg()));
    for w in &sols {
        let image = apply_unimodular(&s, w);
        assert!(form.is_solution(image.p(), image.q()), "{w} -> {image} left the set");
    }
    within(start, Duration::from_secs(5), "criterion 4");
    println!("[acceptance] criterion 4 PASS");
}

#[test]
fn criterion_5_two_hurwitz_classes() {
    let start = Instant::now();
    let h = hurwitz_classes_two(&target(), 40).unwrap();
    let a = fac(&[(3, 5), (1, 0)]);
    let b = fac(&[(5, 8), (0, 1)]);
    assert_eq!(h.classes.len(), 2);
    assert!(h.classes.contains(&a) && h.classes.contains(&b));
    assert!(!pairs_equivalent(&a, &b).unwrap().equivalent);
    assert!(pairs_equivalent(&a, &fac(&[(16, 25), (3, 5)])).unwrap().equivalent);
    within(start, Duration::from_secs(5), "criterion 5");
    println!("[acceptance] criterion 5 PASS");
}

#[test]
fn criterion_6_obstructions() {
    let start = Instant::now();
    for rep in [fac(&[(3, 5), (1, 0)]), fac(&[(5, 8), (0, 1)])] {
        let r = factorization_real_obstruction(&rep).unwrap();
        assert_eq!(r.intersection, BigInt::from(5));
        assert_eq!(r.case_invariant, CaseStatus::Obstructed);
        assert_eq!(r.swapped_pairing, Some(BigInt::from(10)));
        assert_eq!(r.case_swapped, SwappedStatus::Obstructed);
        assert_eq!(r.verdict, ObstructionVerdict::NotReal);
    }
    within(start, Duration::from_secs(1), "criterion 6");
    println!("[acceptance] criterion 6 PASS");
}

#[test]
fn criterion_7_real_filling_verdict() {
    let start = Instant::now();
    let ob = OpenBookMonodromy::new(target(), 2).unwrap();
    let rep = real_filling_verdict(&ob, 200).unwrap();
    assert_eq!(rep.open_book.is_real(), Some(true));
    assert!(rep.filling.fillable);
    assert_eq!(rep.filling.classes.len(), 2);
    assert_eq!(rep.conclusion, RealFillingConclusion::NoneReal);
    within(start, Duration::from_secs(10), "criterion 7");
    println!("[acceptance] criterion 7 PASS");
}

// ---- criterion 8: randomized property suites, fixed seeds ----

const CASES: usize = 120;

fn random_class(rng: &mut ChaCha8Rng) -> PrimitiveClass {
    loop {
        let p: i64 = rng.random_range(-9..=9);
        let q: i64 = rng.random_range(-9..=9);
        if (p, q) != (0, 0) && p.gcd(&q) == 1 {
            return cl(p, q);
        }
    }
}

fn random_conjugator(rng: &mut ChaCha8Rng) -> Mat2 {
    let a = Mat2::new(1, 1, 0, 1);
    let b = Mat2::new(1, 0, -1, 1);
    let mut k = Mat2::identity();
    for _ in 0..rng.random_range(1..=4) {
        let exp: i64 = rng.random_range(-3..=3);
        let gen = if rng.random_bool(0.5) { &a } else { &b };
        let step = if exp < 0 { gen.inverse().unwrap() } else { gen.clone() };
        for _ in 0..exp.unsigned_abs() {
            k = &k * &step;
        }
    }
    k
}

/// Hyperbolic product of two twists; intersection >= 3 forces trace <= -7.
fn random_hyperbolic(rng: &mut ChaCha8Rng) -> Mat2 {
    loop {
        let x = random_class(rng);
        let y = random_class(rng);
        if intersection(&x, &y) >= BigInt::from(3) {
            return &twist_matrix(&y) * &twist_matrix(&x);
        }
    }
}

fn suite_twist_recognize_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..CASES {
        let w = random_class(&mut rng);
        let k: u64 = rng.random_range(1..=5);
        let m = twist_matrix(&w).pow(k);
        let (found, mult) = recognize_positive_twist(&m).unwrap().expect("twist power");
        assert_eq!(found, w);
        assert_eq!(mult, BigInt::from(k));
    }
}

fn suite_hurwitz_moves() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..CASES {
        let n = rng.random_range(2..=5);
        let f = TwistFactorization::new((0..n).map(|_| random_class(&mut rng)).collect());
        let i = rng.random_range(1..n);
        let dir = if rng.random_bool(0.5) { MoveDirection::L } else { MoveDirection::R };
        let moved = hurwitz_move(&f, i, dir).unwrap();
        assert_eq!(moved.total_monodromy(), f.total_monodromy());
        let back = hurwitz_move(
            &moved,
            i,
            if dir == MoveDirection::L { MoveDirection::R } else { MoveDirection::L },
        )
        .unwrap();
        assert_eq!(back, f);

        // on pairs, two L-moves = conjugation by the inverse product
        let pair = TwistFactorization::new(vec![random_class(&mut rng), random_class(&mut rng)]);
        let twice = hurwitz_move(
            &hurwitz_move(&pair, 1, MoveDirection::L).unwrap(),
            1,
            MoveDirection::L,
        )
        .unwrap();
        let inv = pair.total_monodromy().inverse().unwrap();
        let conj = TwistFactorization::new(
            pair.cycles().iter().map(|w| apply_unimodular(&inv, w)).collect(),
        );
        assert_eq!(twice, conj);
    }
}

fn suite_cutting_conjugation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for _ in 0..CASES {
        let m = random_hyperbolic(&mut rng);
        let k = random_conjugator(&mut rng);
        let conj = &(&k * &m) * &k.inverse().unwrap();
        let cm = cutting_cycle(&m).unwrap();
        let cc = cutting_cycle(&conj).unwrap();
        assert!(cm.verify_against(&m));
        assert!(cc.verify_against(&conj));
        assert_eq!(cm.sign(), cc.sign());
        assert_eq!(
            canonical_cycle(cm.word()).unwrap(),
            canonical_cycle(cc.word()).unwrap()
        );
        assert!(hyperbolic_conjugate(&m, &conj).unwrap());
    }
}

fn suite_pairing_bound() {
    // exhaustive rather than sampled: every involution within 30
    let all = enumerate_involutions(30).unwrap();
    assert!(all.len() >= CASES);
    for c in &all {
        let (pairing, _) = pairing_and_type(c);
        assert!(pairing == BigInt::from(1) || pairing == BigInt::from(2), "pairing {pairing}");
    }
}

fn suite_deg_word_independence() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let a = Mat2::new(1, 1, 0, 1);
    let b = Mat2::new(1, 0, -1, 1);
    for _ in 0..CASES {
        let mut m = Mat2::identity();
        let mut sum: i64 = 0;
        for _ in 0..rng.random_range(1..=6) {
            let exp: i64 = rng.random_range(-4..=4);
            let gen = if rng.random_bool(0.5) { &a } else { &b };
            let step = if exp < 0 { gen.inverse().unwrap() } else { gen.clone() };
            for _ in 0..exp.unsigned_abs() {
                m = &m * &step;
            }
            sum += exp;
        }
        let expected = sum.rem_euclid(12) as u8;
        assert_eq!(deg_mod12(&m).unwrap(), expected);

        // additivity under concatenation
        let n = random_hyperbolic(&mut rng);
        let both = deg_mod12(&(&n * &m)).unwrap();
        let split = (i64::from(deg_mod12(&m).unwrap()) + i64::from(deg_mod12(&n).unwrap()))
            .rem_euclid(12) as u8;
        assert_eq!(both, split);
    }
}

fn suite_realness_deciders_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    for _ in 0..CASES {
        let m = random_hyperbolic(&mut rng);
        if let Some(cert) = realness_by_search(&m, 60).unwrap() {
            assert!(cert.verifies(&m));
            let by_cycle = is_real_hyperbolic(&m).unwrap();
            assert!(
                matches!(by_cycle, HyperbolicRealness::Real { .. }),
                "certificate found but cycle test denies realness for {m}"
            );
        }
    }
}

fn suite_open_book_mod12() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for _ in 0..CASES {
        let n = rng.random_range(0..=5);
        let cycles: Vec<PrimitiveClass> = (0..n).map(|_| random_class(&mut rng)).collect();
        let fib = GenusOneFibration::new(cycles, FiberKind::TorusWithBoundary);
        let ob = fib.boundary_open_book().unwrap();
        assert_eq!(ob.deg(), n as i64);
        let shift: i64 = rng.random_range(-2..=2);
        assert!(OpenBookMonodromy::new(ob.matrix().clone(), ob.deg() + 12 * shift).is_ok());
        assert!(OpenBookMonodromy::new(ob.matrix().clone(), ob.deg() + 1).is_err());
    }
}

#[test]
fn criterion_8_property_suites() {
    let start = Instant::now();
    suite_twist_recognize_round_trip();
    suite_hurwitz_moves();
    suite_cutting_conjugation_invariance();
    suite_pairing_bound();
    suite_deg_word_independence();
    suite_realness_deciders_agree();
    suite_open_book_mod12();
    within(start, Duration::from_secs(60), "criterion 8");
    println!("[acceptance] criterion 8 PASS");
}

#[test]
fn criterion_9_negative_control() {
    let start = Instant::now();
    let m = Mat2::new(12, 5, 7, 3);
    match is_real_hyperbolic(&m).unwrap() {
        HyperbolicRealness::NotReal { cycle } => {
            assert!(cycle.verify_against(&m));
        }
        HyperbolicRealness::Real { .. } => panic!("negative control reported real"),
    }
    assert!(realness_by_search(&m, 500).unwrap().is_none());
    within(start, Duration::from_secs(10), "criterion 9");
    println!("[acceptance] criterion 9 PASS");
}
