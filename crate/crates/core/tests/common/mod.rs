//! Seed-pinned randomized suites shared by the `properties` tests and the
//! acceptance harness.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sovhopf::cobraid::{check_order_independence, sweedler_cobraiding, Cobraiding};
use sovhopf::exactmath::{FieldDesc, Matrix, Poly, Scalar};
use sovhopf::forms::{character_inverse, convolve_characters};
use sovhopf::hopf_pres::builtin_sweedler_pres;
use sovhopf::ncalg::{eval_scalar, ideal_membership, GenSet, NCPoly, Presentation, Word};
use sovhopf::universal::build_hf;
use sovhopf::{GenCharacter, HopfAlgebra};

pub const CASES: u32 = 1000;

fn runner(seed: u8) -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

fn q_field() -> FieldDesc {
    FieldDesc::rational_functions("q").unwrap()
}

fn small_poly() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 0..4)
}

/// Elements of `ℚ(q)` with small numerator and denominator.
fn scalar_q() -> impl Strategy<Value = Scalar> {
    (small_poly(), small_poly()).prop_map(|(n, d)| {
        let f = q_field();
        let d = if Poly::from_i64s(&d).is_zero() { vec![1] } else { d };
        Scalar::from_polys(&f, Poly::from_i64s(&n), Poly::from_i64s(&d)).unwrap()
    })
}

fn scalar_rat() -> impl Strategy<Value = Scalar> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| Scalar::from_ratio(&FieldDesc::Rationals, n, d))
}

fn scalar_any() -> impl Strategy<Value = Scalar> {
    prop_oneof![scalar_q(), scalar_rat().prop_map(|s| s.cast_constant(&q_field()).unwrap())]
}

fn check(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

pub fn field_axioms() -> Result<u32, String> {
    let strat = (scalar_any(), scalar_any(), scalar_any());
    runner(1)
        .run(&strat, |(a, b, c)| {
            let f = q_field();
            let (zero, one) = (Scalar::zero(&f), Scalar::one(&f));
            check(&a + &b == &b + &a, "a+b=b+a")?;
            check(&a * &b == &b * &a, "ab=ba")?;
            check(&(&a + &b) + &c == &a + &(&b + &c), "(a+b)+c")?;
            check(&(&a * &b) * &c == &a * &(&b * &c), "(ab)c")?;
            check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "a(b+c)")?;
            check(&a + &zero == a && &a * &one == a, "units")?;
            check((&a + &(-&a)).is_zero(), "a-a")?;
            if !a.is_zero() {
                check((&a * &a.inv().unwrap()).is_one(), "a·a⁻¹")?;
                check(b.checked_div(&a).unwrap() == &b * &a.inv().unwrap(), "b/a")?;
            } else {
                check(a.inv().is_err(), "0⁻¹")?;
            }
            check(Scalar::parse(&f, &a.to_string()).unwrap() == a, "render/parse")?;
            Ok(())
        })
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

fn ncpoly(gens: GenSet) -> impl Strategy<Value = NCPoly> {
    let term = (prop::collection::vec(0u32..3, 0..4), scalar_any());
    prop::collection::vec(term, 0..4).prop_map(move |terms| {
        NCPoly::from_terms(&gens, &q_field(), terms.into_iter().map(|(w, c)| (Word::from_letters(w), c)))
    })
}

pub fn ring_axioms() -> Result<u32, String> {
    let gens = GenSet::new(&["x", "y", "z"]).unwrap();
    let strat = (ncpoly(gens.clone()), ncpoly(gens.clone()), ncpoly(gens.clone()));
    runner(2)
        .run(&strat, |(a, b, c)| {
            let one = NCPoly::one(&gens, &q_field());
            check(&a + &b == &b + &a, "a+b=b+a")?;
            check(&(&a + &b) + &c == &a + &(&b + &c), "(a+b)+c")?;
            check(&(&a * &b) * &c == &a * &(&b * &c), "(ab)c")?;
            check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "a(b+c)")?;
            check(&(&a + &b) * &c == &(&a * &c) + &(&b * &c), "(a+b)c")?;
            check(&a * &one == a && &one * &a == a, "unit")?;
            check((&a + &(-&a)).is_zero(), "a-a")?;
            check(a.is_zero() || b.is_zero() || (&a * &b).degree() == a.degree() + b.degree(), "degree")?;
            check(NCPoly::parse(&gens, &q_field(), &a.render()).unwrap() == a, "render/parse")?;
            Ok(())
        })
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

/// Invertible 2×2 rational matrices.
fn gl2() -> impl Strategy<Value = Matrix> {
    prop::array::uniform4(-5i64..=5)
        .prop_filter("singular", |m| m[0] * m[3] - m[1] * m[2] != 0)
        .prop_map(|m| Matrix::from_i64(&FieldDesc::Rationals, &[&m[0..2], &m[2..4]]))
}

/// Characters of `H(I₂)` are `u ↦ M`, `v ↦ ᵗM⁻¹`, and convolution is the
/// matrix product.
fn hf_character(m: &Matrix) -> GenCharacter {
    let inv_t = m.inverse().unwrap().transpose();
    let values = m.to_rows().concat().into_iter().chain(inv_t.to_rows().concat()).collect();
    GenCharacter::new("M", values)
}

pub fn convolution_group_laws() -> Result<u32, String> {
    let h = build_hf(&Matrix::identity(&FieldDesc::Rationals, 2)).unwrap();
    let a = &h.hopf;
    let eps = a.counit_character();
    runner(3)
        .run(&(gl2(), gl2(), gl2()), |(x, y, z)| {
            let (p, r, s) = (hf_character(&x), hf_character(&y), hf_character(&z));
            check(a.check_character(&p).unwrap().is_pass(), "character")?;
            let conv = |f: &GenCharacter, g: &GenCharacter| convolve_characters(a, f, g).unwrap();
            check(conv(&conv(&p, &r), &s).values == conv(&p, &conv(&r, &s)).values, "associativity")?;
            check(conv(&p, &eps).values == p.values && conv(&eps, &p).values == p.values, "unit")?;
            let inv = character_inverse(a, &p).map_err(|e| TestCaseError::fail(e.to_string()))?;
            check(conv(&p, &inv).values == eps.values && conv(&inv, &p).values == eps.values, "inverse")?;
            check(conv(&p, &r).values == hf_character(&x.mul(&y).unwrap()).values, "matrix product")?;
            Ok(())
        })
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

pub fn sweedler_cobraidings() -> Vec<Cobraiding> {
    ["1", "2", "-1/3"]
        .iter()
        .map(|t| sweedler_cobraiding(&Scalar::parse(&FieldDesc::Rationals, t).unwrap()).unwrap())
        .collect()
}

pub fn sigma_order_independence(cbs: &[Cobraiding]) -> Result<u32, String> {
    let word = || prop::collection::vec(0u32..2, 0..6).prop_map(Word::from_letters);
    runner(4)
        .run(&(0..cbs.len(), word(), word()), |(i, w, z)| {
            let v = check_order_independence(&cbs[i], &[(w, z)]).unwrap();
            check(v.is_pass(), &v.to_string())
        })
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

#[derive(Debug, Default)]
pub struct MembershipTally {
    pub members: usize,
    pub members_found: usize,
    pub non_members: usize,
    pub false_positives: usize,
}

fn random_poly(rng: &mut ChaCha8Rng, gens: &GenSet, field: &FieldDesc, max_len: usize, terms: usize) -> NCPoly {
    let n = gens.len() as u32;
    NCPoly::from_terms(
        gens,
        field,
        (0..terms).map(|_| {
            let len = rng.gen_range(0..=max_len);
            let w = Word::from_letters((0..len).map(|_| rng.gen_range(0..n)).collect());
            (w, Scalar::from_ratio(field, rng.gen_range(-6..=6), rng.gen_range(1..=4)))
        }),
    )
}

/// Random `Σ c·x·r·y` with `deg(x) + deg(y) ≤ slack`.
fn random_member(rng: &mut ChaCha8Rng, pres: &Presentation, slack: usize) -> NCPoly {
    let (gens, field) = (pres.gens(), pres.field());
    let mut p = NCPoly::zero(gens, field);
    for _ in 0..rng.gen_range(1..=4) {
        let r = &pres.relations()[rng.gen_range(0..pres.relations().len())];
        let lx = rng.gen_range(0..=slack);
        let x = &random_poly(rng, gens, field, 0, 1) + &NCPoly::monomial(gens, random_word(rng, gens.len(), lx), Scalar::one(field));
        let y = NCPoly::monomial(gens, random_word(rng, gens.len(), slack - lx), Scalar::one(field));
        p = &p + &(&(&x * r) * &y);
    }
    p
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| rng.gen_range(0..n as u32)).collect())
}

/// Members of the Sweedler and `H(I₂)` ideals must be found at the degree
/// they were built in; candidates that a character does not kill must never
/// be reported as members.
pub fn membership_soundness(seed: u64, members: usize, non_members: usize) -> MembershipTally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sw = builtin_sweedler_pres().unwrap();
    let hf = build_hf(&Matrix::identity(&FieldDesc::Rationals, 2)).unwrap();
    let f = FieldDesc::Rationals;
    let sw_chars = vec![
        vec![Scalar::one(&f), Scalar::zero(&f)],
        vec![-Scalar::one(&f), Scalar::zero(&f)],
    ];
    let eps_hf = hf.hopf.counit_character().values;
    let mut tally = MembershipTally::default();
    for i in 0..members {
        let (pres, slack) = if i % 4 == 3 { (hf.hopf.presentation(), 1) } else { (sw.presentation(), 2) };
        let p = random_member(&mut rng, pres, slack);
        let d = pres.max_relation_degree() + slack;
        tally.members += 1;
        if ideal_membership(&p, pres, d).unwrap().is_member() {
            tally.members_found += 1;
        }
    }
    while tally.non_members < non_members {
        let sweedler = tally.non_members % 4 != 3;
        let (pres, chars, d) = if sweedler {
            (sw.presentation(), sw_chars.clone(), 4)
        } else {
            (hf.hopf.presentation(), vec![eps_hf.clone()], 3)
        };
        let noise = random_poly(&mut rng, pres.gens(), pres.field(), 2, 3);
        let p = &random_member(&mut rng, pres, d - pres.max_relation_degree()) + &noise;
        if p.degree() > d || chars.iter().all(|c| eval_scalar(c, &p).is_zero()) {
            continue;
        }
        tally.non_members += 1;
        if ideal_membership(&p, pres, d).unwrap().is_member() {
            tally.false_positives += 1;
        }
    }
    tally
}
