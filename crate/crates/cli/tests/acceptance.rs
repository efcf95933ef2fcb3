//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criterion 6 fails: `a·S(a) ≡ 1` for `SL(E_q)`, `n = 3`, has no certificate
//! in the truncated ideal at `D = N + 1 = 4`. The line reports the smallest
//! degree where it is certified. The process exits nonzero if any other
//! criterion fails or if criterion 6 starts passing.

#[path = "../../core/tests/common/mod.rs"]
mod common;
mod support;

use sovhopf::cobraid::{
    check_cobraiding, check_cotwist, check_lemma_a2_on, check_s2, round_trip_character, round_trip_cotwist,
    sweedler_basis_words, sweedler_cobraiding, sweedler_phi, thm_a3_backward, thm_a3_forward,
};
use sovhopf::corep::{dims, regular_corep};
use sovhopf::exactmath::{FieldDesc, Matrix, Scalar};
use sovhopf::forms::{verify_sovereign, verify_sovereign_fd};
use sovhopf::hopf_fd::{builtin_group_algebra, builtin_sweedler, cyclic_table, FinHopf};
use sovhopf::hopf_pres::{builtin_laurent, builtin_sweedler_pres, PresentedHopf};
use sovhopf::ncalg::NCPoly;
use sovhopf::sle::{
    build_eq, build_sle, check_left_inverse, check_right_inverse, expected_beta_eq, find_beta, sovereign_char_beta,
};
use sovhopf::universal::{build_hf, iso_conjugate, iso_transpose_inverse, verify_hf};
use sovhopf::{Bound, GenCharacter, HopfAlgebra, Verdict};
use sovhopf_cli::Workbench;
use std::time::Instant;

const EXPECTED_FAIL: &[u32] = &[6];

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn pass(v: &Verdict, what: &str) -> Result<(), String> {
    if v.is_pass() {
        Ok(())
    } else {
        Err(format!("{what}: {v}"))
    }
}

fn qf() -> FieldDesc {
    FieldDesc::rational_functions("q").unwrap()
}

fn q() -> Scalar {
    Scalar::var(&qf()).unwrap()
}

fn diag_1_q() -> Matrix {
    Matrix::diag(&qf(), &[Scalar::one(&qf()), q()])
}

fn hf_suite() -> Outcome {
    let ms = [
        ("I2", Matrix::identity(&FieldDesc::Rationals, 2)),
        ("diag(1,q)", diag_1_q()),
        ("[[0,1],[1,0]]", Matrix::from_i64(&FieldDesc::Rationals, &[&[0, 1], &[1, 0]])),
    ];
    let mut out = Vec::new();
    for (name, f) in ms {
        let t = Instant::now();
        let h = build_hf(&f).map_err(err)?;
        let v = verify_hf(&h, Bound::Fixed(4)).map_err(err)?;
        for c in &v.report.checks {
            pass(&c.verdict, &format!("{name} {}", c.name))?;
        }
        let (tr, tri) = (f.trace().map_err(err)?, f.inverse().map_err(err)?.trace().map_err(err)?);
        ensure!(v.dims.left == tr && v.dims.right == tri, "{name}: dims ({}, {})", v.dims.left, v.dims.right);
        let secs = t.elapsed().as_secs_f64();
        ensure!(secs <= 60.0, "{name} took {secs:.1} s");
        out.push(format!("{name}: {} checks, dims ({}, {})", v.report.checks.len(), v.dims.left, v.dims.right));
    }
    Ok(out.join("; "))
}

fn asymmetry() -> Outcome {
    let h = build_hf(&diag_1_q()).map_err(err)?;
    let d = dims(&h.hopf, &h.corep_u, &h.character).map_err(err)?;
    let (l, r) = (&Scalar::one(&qf()) + &q(), Scalar::parse(&qf(), "(q+1)/q").map_err(err)?);
    ensure!(d.left == l && d.right == r, "dims ({}, {})", d.left, d.right);
    ensure!(d.left != d.right, "dims coincide");
    Ok(format!("left {} ≠ right {}", d.left, d.right))
}

fn relation_set(f: &Matrix) -> Result<Vec<String>, String> {
    let h = build_hf(f).map_err(err)?;
    let mut rs: Vec<String> = h.hopf.presentation().relations().iter().map(NCPoly::render).collect();
    rs.sort();
    rs.dedup();
    Ok(rs)
}

fn prop_isomorphisms() -> Outcome {
    let f = diag_1_q();
    let h = build_hf(&f).map_err(err)?;
    let k = Matrix::from_i64(&qf(), &[&[1, 1], &[0, 1]]);
    pass(&iso_conjugate(&h, &k, Bound::Fixed(2)).map_err(err)?, "iso_conjugate")?;
    pass(&iso_transpose_inverse(&h, Bound::Fixed(2)).map_err(err)?, "iso_transpose_inverse")?;
    let base = relation_set(&f)?;
    for lambda in [Scalar::from_int(&qf(), 2), q()] {
        ensure!(relation_set(&f.scale(&lambda))? == base, "H({lambda}F) ≠ H(F)");
    }
    Ok(format!("both isomorphisms at D=2; H(λF) = H(F) for λ ∈ {{2, q}} ({} relations)", base.len()))
}

fn finite_pass(h: &FinHopf) -> Result<(), String> {
    for (name, v) in h.verify_all() {
        pass(&v, &format!("{} {name}", h.label))?;
    }
    Ok(())
}

fn pres_pass(h: &PresentedHopf) -> Result<(), String> {
    let r = h.verify(Bound::default()).map_err(err)?;
    for c in &r.checks {
        pass(&c.verdict, &format!("{} {}", h.label, c.name))?;
    }
    Ok(())
}

fn sweedler_char(h: &FinHopf) -> GenCharacter {
    let f = h.field().clone();
    let s = |n| Scalar::from_int(&f, n);
    GenCharacter::new("Phi", vec![s(1), s(-1), s(0), s(0)])
}

fn sweedler() -> Outcome {
    let h = builtin_sweedler();
    finite_pass(&h)?;
    pres_pass(&builtin_sweedler_pres().map_err(err)?)?;
    ensure!(!h.is_involutory(), "Sweedler reported involutory");
    let phi = sweedler_char(&h);
    pass(&verify_sovereign_fd(&h, &phi).map_err(err)?, "Φ sovereign (matrix form)")?;
    pass(&verify_sovereign(&h, &phi, Bound::default()).map_err(err)?, "Φ sovereign")?;
    let d = dims(&h, &regular_corep(&h), &phi).map_err(err)?;
    ensure!(d.left.is_zero() && d.right.is_zero(), "regular dims ({}, {})", d.left, d.right);
    let eps = h.counit_character();
    ensure!(verify_sovereign_fd(&h, &eps).map_err(err)?.is_fail(), "ε passes on Sweedler (matrix form)");
    ensure!(verify_sovereign(&h, &eps, Bound::default()).map_err(err)?.is_fail(), "ε passes on Sweedler");
    Ok("axioms pass, not involutory, Φ sovereign, regular dims (0, 0), ε fails".into())
}

fn involutory_equivalence() -> Outcome {
    let mut names = Vec::new();
    for n in [2, 3] {
        let h = builtin_group_algebra(&format!("k[Z/{n}]"), &cyclic_table(n)).map_err(err)?;
        finite_pass(&h)?;
        ensure!(h.is_involutory(), "{} not involutory", h.label);
        let eps = h.counit_character();
        pass(&verify_sovereign_fd(&h, &eps).map_err(err)?, &h.label)?;
        pass(&verify_sovereign(&h, &eps, Bound::default()).map_err(err)?, &h.label)?;
        names.push(h.label);
    }
    let hi = build_hf(&Matrix::identity(&FieldDesc::Rationals, 2)).map_err(err)?.hopf;
    for h in [builtin_laurent().map_err(err)?, hi] {
        pres_pass(&h)?;
        for g in 0..h.gens().len() as u32 {
            let x = NCPoly::generator(h.gens(), h.presentation().field(), g);
            let s2 = h.antipode_poly(&h.antipode_poly(&x).map_err(err)?).map_err(err)?;
            pass(&h.vanish_poly(&(&s2 - &x), Bound::default()).map_err(err)?, &format!("{} S² = id", h.label))?;
        }
        pass(&verify_sovereign(&h, &h.counit_character(), Bound::default()).map_err(err)?, &h.label)?;
        names.push(h.label.clone());
    }
    let sw = builtin_sweedler();
    ensure!(verify_sovereign_fd(&sw, &sw.counit_character()).map_err(err)?.is_fail(), "ε passes on Sweedler");
    Ok(format!("ε sovereign on {}; fails on Sweedler", names.join(", ")))
}

fn sle_eq() -> Outcome {
    let mut out = Vec::new();
    let mut failure = None;
    for n in [2usize, 3] {
        let t = Instant::now();
        let e = build_eq(n, &q()).map_err(err)?;
        let big_n = e.arity;
        let beta = find_beta(&e).ok_or("no β")?;
        ensure!(beta == expected_beta_eq(n, &q()).map_err(err)?, "n={n}: β = {beta:?}");
        let a = build_sle(&e).map_err(err)?;
        pass(&sovereign_char_beta(&a, Bound::Fixed(big_n + 2)).map_err(err)?, &format!("n={n} Φ_β"))?;
        let d = Bound::Fixed(big_n + 1);
        pass(&check_left_inverse(&a, d).map_err(err)?, &format!("n={n} S(a)·a"))?;
        let right = check_right_inverse(&a, d).map_err(err)?;
        if !right.is_pass() {
            let certified = (big_n + 2..=2 * big_n)
                .find(|&k| check_right_inverse(&a, Bound::Fixed(k)).is_ok_and(|v| v.is_pass()))
                .map_or("not certified up to 2N".to_string(), |k| format!("certified at D={k}"));
            failure.get_or_insert(format!("n={n}: a·S(a) ≡ 1 {} at D={}; {certified}", right.kind(), big_n + 1));
        }
        let secs = t.elapsed().as_secs_f64();
        let limit = if n == 3 { 120.0 } else { 60.0 };
        ensure!(secs <= limit, "n={n} took {secs:.1} s");
        out.push(format!("n={n} β and Φ_β ok ({secs:.1} s)"));
    }
    match failure {
        Some(f) => Err(format!("{}; {f}", out.join(", "))),
        None => Ok(out.join(", ")),
    }
}

fn appendix() -> Outcome {
    let cb = sweedler_cobraiding(&Scalar::one(&FieldDesc::Rationals)).map_err(err)?;
    pass(&check_cobraiding(&cb, Bound::default()).map_err(err)?, "cobraiding")?;
    pass(&check_s2(&cb, Bound::default()).map_err(err)?, "S² = β∗id∗λ")?;
    let basis = sweedler_basis_words();
    let pairs: Vec<_> = basis.iter().flat_map(|x| basis.iter().map(move |y| (x.clone(), y.clone()))).collect();
    ensure!(pairs.len() == 16, "{} basis pairs", pairs.len());
    pass(&check_lemma_a2_on(&cb, &pairs).map_err(err)?, "β cotwist identity on basis pairs")?;
    let phi = sweedler_phi(&cb);
    pass(&round_trip_character(&cb, &phi).map_err(err)?, "Φ → τ → Φ")?;
    let tau = thm_a3_forward(&cb, &phi).map_err(err)?;
    pass(&check_cotwist(&cb, &tau, 3).map_err(err)?.overall(), "τ cotwist")?;
    pass(&round_trip_cotwist(&cb, &tau, 3).map_err(err)?, "τ → Φ → τ")?;
    let back = thm_a3_backward(&cb, &tau).map_err(err)?;
    ensure!(back.values == phi.values, "backward gives {:?}", back.values);
    Ok("cobraiding, S², 16 basis pairs, round trips on words ≤ 3".into())
}

fn membership() -> Outcome {
    let t = common::membership_soundness(7, 100, 20);
    ensure!(t.members_found == t.members, "{t:?}");
    ensure!(t.non_members == 20 && t.false_positives == 0, "{t:?}");
    Ok(format!("{}/{} members found, {} false positives in {}", t.members_found, t.members, t.false_positives, t.non_members))
}

fn properties() -> Outcome {
    let cbs = common::sweedler_cobraidings();
    let suites: [(&str, Result<u32, String>); 4] = [
        ("field", common::field_axioms()),
        ("ring", common::ring_axioms()),
        ("convolution", common::convolution_group_laws()),
        ("σ order", common::sigma_order_independence(&cbs)),
    ];
    let mut out = Vec::new();
    for (name, r) in suites {
        let n = r.map_err(|e| format!("{name}: {e}"))?;
        ensure!(n >= 1000, "{name}: only {n} cases");
        out.push(format!("{name} {n}"));
    }
    Ok(out.join(", "))
}

fn remark_equivalence() -> Outcome {
    let (mut compared, mut skipped) = (0, Vec::new());
    for e in support::CORPUS.iter().filter(|e| e.exit != 3) {
        let text = std::fs::read_to_string(support::input(e.name)).map_err(err)?;
        let wb = Workbench::from_json(&text).map_err(err)?;
        let r = wb.verify(wb.policy(None, None)).map_err(err)?;
        let axioms = ["algebra", "coalgebra", "bialgebra", "antipode", "antipode_axiom", "antipode_inverse"];
        if r.checks.iter().any(|c| axioms.contains(&c.name.as_str()) && c.verdict != "pass") {
            skipped.push(e.name);
            continue;
        }
        for c in r.checks.iter().filter(|c| c.name.starts_with("verify_sovereign[")) {
            let label = &c.name["verify_sovereign".len()..];
            let other = r.check(&format!("verify_remark_38{label}")).ok_or(format!("{}: no remark check{label}", e.name))?;
            ensure!(c.verdict == other.verdict, "{}{label}: {} vs {}", e.name, c.verdict, other.verdict);
            compared += 1;
        }
    }
    Ok(format!("{compared} characters agree; not Hopf algebras, skipped: {}", skipped.join(", ")))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 10] = [
        (1, "H(F) suite", hf_suite),
        (2, "left/right dimension asymmetry", asymmetry),
        (3, "H(F) isomorphisms", prop_isomorphisms),
        (4, "Sweedler H4", sweedler),
        (5, "involutory equivalence", involutory_equivalence),
        (6, "SL(E_q) n=2,3", sle_eq),
        (7, "cobraiding on Sweedler", appendix),
        (8, "membership soundness", membership),
        (9, "property suites", properties),
        (10, "sovereign vs S² criterion", remark_equivalence),
    ];
    let mut unexpected = Vec::new();
    for (i, name, run) in criteria {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("{tag} criterion {i:>2} {name} ({secs:.1} s): {detail}");
        if outcome.is_ok() == EXPECTED_FAIL.contains(&i) {
            unexpected.push(i);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: outcomes as expected; criteria {EXPECTED_FAIL:?} fail");
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
