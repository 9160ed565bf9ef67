use polyb::exactmath::{rat, Integer};
use polyb::identities::{run_all, run_identity, Ranges};
use polyb::models::{callan_poly_enum, count_tableaux, enum_barred, tableau_poly, tableau_poly2};
use polyb::polybern::{bhat_closed, callan_poly_closed};

#[test]
fn barred_enumeration_matches_closed_form() {
    for n in 0..=4 {
        for k in 0..=4 {
            for m in 0..=2 {
                assert_eq!(
                    Integer::from(enum_barred(n, k, m).count()),
                    bhat_closed(n, k, m),
                    "(n, k, m) = ({n}, {k}, {m})"
                );
            }
        }
    }
}

#[test]
fn callan_and_tableau_polynomials_agree() {
    for n in 0..=4 {
        for k in 0..=4 {
            let closed = callan_poly_closed(n, k);
            assert_eq!(callan_poly_enum(n, k), closed, "Callan ({n}, {k})");
            if n * k <= 12 {
                assert_eq!(tableau_poly(n, k), closed, "tableaux ({n}, {k})");
            }
        }
    }
}

#[test]
fn tableau_counts_and_specialisations() {
    for n in 0..=4 {
        for k in 0..=3 {
            let count = count_tableaux(n, k);
            let p2 = tableau_poly2(n, k);
            assert_eq!(p2.eval(&rat(1, 1), &rat(1, 1)), rat(1, 1) * count.clone());
            assert_eq!(rat(1, 1) * count, callan_poly_closed(n, k).eval(&rat(1, 1)));
            assert_eq!(p2.swap(), tableau_poly2(k, n));
        }
    }
}

#[test]
fn desk_run_is_clean_and_stable() {
    let first = run_all(&Ranges::desk());
    assert!(first.iter().all(|r| r.passed()));
    let again = run_all(&Ranges::desk());
    assert_eq!(
        serde_json::to_string(&first).unwrap(),
        serde_json::to_string(&again).unwrap()
    );
}

#[test]
fn report_json_shape() {
    let report = run_identity("LAH", &Ranges::up_to(3, 0, 0, 3)).unwrap();
    let v: serde_json::Value = serde_json::to_value(&report).unwrap();
    assert_eq!(v["name"], "LAH");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["cases_checked"], 16);
    assert_eq!(v["ranges"]["n"], serde_json::json!([0, 3]));
    assert!(v["failures"].as_array().unwrap().is_empty());
}
