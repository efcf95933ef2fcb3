use sovhopf::exactmath::{FieldDesc, Scalar};
use sovhopf::sle::{
    build_eq, build_sle, check_invertibility, check_star_solutions, expected_beta_eq, sle_dims, sovereign_char_beta,
};
use sovhopf::Bound;

fn q() -> Scalar {
    Scalar::var(&FieldDesc::rational_functions("q").unwrap()).unwrap()
}

#[test]
fn eq3_beta_and_sovereign() {
    let a = build_sle(&build_eq(3, &q()).unwrap()).unwrap();
    assert!(check_star_solutions(&a.e, &a.lambda, &a.mu));
    assert_eq!(a.beta.clone().unwrap(), expected_beta_eq(3, &q()).unwrap());
    assert!(sovereign_char_beta(&a, Bound::Fixed(5)).unwrap().is_pass());
    let d = sle_dims(&a).unwrap();
    let s: Scalar = expected_beta_eq(3, &q()).unwrap().iter().fold(Scalar::zero(q().field()), |acc, b| &acc + b);
    assert_eq!(d.left, s);
}

#[test]
fn eq3_left_inverse_in_low_degree() {
    let a = build_sle(&build_eq(3, &q()).unwrap()).unwrap();
    let (l, r) = check_invertibility(&a, Bound::Fixed(4), Bound::Fixed(4)).unwrap();
    assert!(l.is_pass());
    // a·S(a) - 1 has no certificate below degree 2N; never a false failure
    assert!(!r.is_fail() && !r.is_pass());
}
