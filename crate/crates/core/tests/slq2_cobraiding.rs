use sovhopf::cobraid::*;
use sovhopf::exactmath::{FieldDesc, Scalar};
use sovhopf::Bound;

#[test]
fn slq2_solved_cobraiding() {
    let (a, cb) = slq2_cobraiding().unwrap();
    let s = Scalar::var(&FieldDesc::rational_functions("s").unwrap()).unwrap();
    let t = cb.sigma_table();
    // generator order a11, a12, a21, a22
    assert_eq!(t[0], s);
    assert_eq!(t[3], s.inv().unwrap());
    assert_eq!(t[15], s);
    assert_eq!(t[9], &s - &s.pow(-3).unwrap());
    assert_eq!(t.iter().filter(|v| !v.is_zero()).count(), 5);

    assert!(check_cobraiding(&cb, Bound::default()).unwrap().is_pass());
    assert!(check_s2(&cb, Bound::default()).unwrap().is_pass());
    assert!(check_lemma_a2(&cb, 2).unwrap().is_pass());

    let phi = a.character.clone().unwrap();
    let tau = thm_a3_forward(&cb, &phi).unwrap();
    assert!(check_cotwist(&cb, &tau, 2).unwrap().overall().is_pass());
    assert!(round_trip_character(&cb, &phi).unwrap().is_pass());
    assert!(round_trip_cotwist(&cb, &tau, 2).unwrap().is_pass());
}
