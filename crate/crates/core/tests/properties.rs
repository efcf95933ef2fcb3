mod common;

#[test]
fn field_axioms() {
    assert_eq!(common::field_axioms(), Ok(common::CASES));
}

#[test]
fn free_algebra_ring_axioms() {
    assert_eq!(common::ring_axioms(), Ok(common::CASES));
}

#[test]
fn character_convolution_group_laws() {
    assert_eq!(common::convolution_group_laws(), Ok(common::CASES));
}

#[test]
fn sigma_recursion_order_independence() {
    let cbs = common::sweedler_cobraidings();
    assert_eq!(common::sigma_order_independence(&cbs), Ok(common::CASES));
}

#[test]
fn membership_oracle_is_sound() {
    let t = common::membership_soundness(7, 100, 20);
    assert_eq!(t.members_found, t.members, "{t:?}");
    assert_eq!(t.false_positives, 0, "{t:?}");
}
