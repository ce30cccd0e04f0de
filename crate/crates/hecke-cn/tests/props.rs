//! Property tests for the structural invariants: monotone tableaux, valid
//! folds, conservation, saturation behavior, stabilizer bounds, enumeration
//! against the brute-force oracle, and size identities of the bipartition
//! algorithms.

use hecke_cn::checks::oracles;
use hecke_cn::{
    ds, enumerate_distinguished, enumerate_mp, expected_params, ls_rho, orbit_defect, BoxPos,
    CentralCharacter, Coset, ETableau, Partition, Rat,
};
use proptest::prelude::*;

fn arb_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted positive parts")
    })
}

/// Quarter-integer parameters, always generic.
fn arb_m() -> impl Strategy<Value = Rat> {
    (-8i64..8).prop_map(|k| Rat::new(2 * k + 1, 4))
}

proptest! {
    #[test]
    fn e_values_increase_along_rows_and_decrease_down_columns(
        sigma in arb_partition(6, 6),
        m in arb_m(),
    ) {
        let t = ETableau::new(sigma.clone(), m);
        for (i, &p) in sigma.parts().iter().enumerate() {
            let row = i as u32 + 1;
            for c in 1..p {
                let a = t.e_value(BoxPos::new(row, c)).unwrap();
                let b = t.e_value(BoxPos::new(row, c + 1)).unwrap();
                prop_assert!(a < b);
            }
            if row > 1 {
                for c in 1..=p {
                    let above = t.e_value(BoxPos::new(row - 1, c)).unwrap();
                    let here = t.e_value(BoxPos::new(row, c)).unwrap();
                    prop_assert!(here < above);
                }
            }
        }
    }

    #[test]
    fn fold_is_distinguished_and_conserves_the_character(
        sigma in arb_partition(6, 6),
        m in arb_m(),
    ) {
        let t = ETableau::new(sigma.clone(), m);
        let fold = t.fold_to_distinguished().unwrap();
        // strictly nested maxima and minima, everything marked, m inside
        let segs = fold.segments();
        for w in segs.windows(2) {
            prop_assert!(w[0].lo < w[1].lo && w[1].hi < w[0].hi);
        }
        for it in fold.items() {
            prop_assert!(it.marked);
            prop_assert!(it.seg.contains_value(m));
        }
        prop_assert!(fold.adapted_to(&t.central_character().unwrap()));
        // hook sizes sum to n
        let total: u32 = t.hook_decomposition().iter().map(|h| h.size()).sum();
        prop_assert_eq!(total, sigma.n());
    }

    #[test]
    fn ds_output_conserves_the_character(
        sigma in arb_partition(5, 5),
        m in arb_m(),
    ) {
        let t = ETableau::new(sigma.clone(), m);
        let d = ds(&sigma, m).unwrap();
        prop_assert!(d.adapted_to(&t.central_character().unwrap()));
    }

    #[test]
    fn saturation_is_idempotent_and_grows_markings(
        sigma in arb_partition(4, 4),
        m in arb_m(),
    ) {
        let d = ds(&sigma, m).unwrap();
        let sat = d.saturate_marking();
        prop_assert_eq!(sat.clone().saturate_marking(), sat.clone());
        prop_assert_eq!(sat.strip_marks(), d.strip_marks());
        let marked_before = d.items().iter().filter(|it| it.marked).count();
        let marked_after = sat.items().iter().filter(|it| it.marked).count();
        prop_assert!(marked_after >= marked_before);
    }

    #[test]
    fn stabilizer_dims_bound(sigma in arb_partition(4, 4), m in arb_m()) {
        let t = ETableau::new(sigma.clone(), m);
        let cc = t.central_character().unwrap();
        let bare = ds(&sigma, m).unwrap().strip_marks();
        let (rank, dim) = bare.stabilizer_dims(&cc).unwrap();
        prop_assert!(dim >= rank);
        let segs = bare.segments();
        let has_pair = segs.iter().enumerate().any(|(i, a)| {
            segs.iter()
                .enumerate()
                .any(|(j, b)| i != j && a.dominated_by(b).unwrap())
        });
        prop_assert_eq!(dim == rank, !has_pair);
    }

    #[test]
    fn gl_segments_are_symmetric(sigma in arb_partition(6, 4)) {
        for seg in hecke_cn::gl_tempered_segments(&sigma) {
            prop_assert_eq!(seg.lo, -seg.hi);
        }
    }
}

#[test]
fn enumeration_matches_brute_force_oracle() {
    let m: Rat = "1/4".parse().unwrap();
    for shape in ["2,1", "3,1", "2,2", "2,1,1", "3,2", "1,1,1"] {
        let sigma: Partition = shape.parse().unwrap();
        let cc = ETableau::new(sigma, m).central_character().unwrap();
        let ours = enumerate_mp(&cc).unwrap().len() as u64;
        let brute = oracles::brute_force_orbit_count(&cc.sp_offsets());
        assert_eq!(ours, brute, "shape {shape}");
        // union of segment values reproduces the character for every orbit
        for mp in enumerate_mp(&cc).unwrap() {
            assert!(mp.adapted_to(&cc));
        }
    }
}

#[test]
fn same_orbit_is_an_equivalence_on_enumerated_orbits() {
    let m: Rat = "1/4".parse().unwrap();
    let sigma: Partition = "2,1".parse().unwrap();
    let cc = ETableau::new(sigma, m).central_character().unwrap();
    let orbits = enumerate_mp(&cc).unwrap();
    for a in &orbits {
        assert!(a.same_orbit(a).unwrap());
        for b in &orbits {
            assert_eq!(a.same_orbit(b).unwrap(), b.same_orbit(a).unwrap());
            if a.same_orbit(b).unwrap() {
                assert_eq!(a, b, "representatives are canonical");
            }
        }
    }
}

#[test]
fn fold_has_maximal_orbit_dimension() {
    for shape in ["2,1", "3,1", "2,2", "3,2,1", "4,2", "2,2,1,1"] {
        let sigma: Partition = shape.parse().unwrap();
        for s in ["1/4", "9/4"] {
            let m: Rat = s.parse().unwrap();
            let t = ETableau::new(sigma.clone(), m);
            let cc = t.central_character().unwrap();
            let fold_dim = t
                .fold_to_distinguished()
                .unwrap()
                .strip_marks()
                .orbit_dim(&cc)
                .unwrap();
            for mp in enumerate_mp(&cc).unwrap() {
                let dim = mp.strip_marks().orbit_dim(&cc).unwrap();
                assert!(dim <= fold_dim, "{mp} at {shape}, m = {m}");
            }
        }
    }
}

#[test]
fn ls_rho_size_identity_on_distinguished_orbits() {
    for n in 0..=8u32 {
        for s in ["1/4", "3/4", "9/4"] {
            let m: Rat = s.parse().unwrap();
            let (d, ell) = expected_params(n, m).unwrap();
            for orbit in enumerate_distinguished(ell, d).unwrap() {
                assert_eq!(orbit_defect(&orbit), d);
                let bp = ls_rho(&orbit).unwrap();
                let expected_n = (ell as i64 - d * (2 * d - 1)) / 4;
                assert_eq!(bp.size() as i64, expected_n, "orbit {orbit}");
            }
        }
    }
}

#[test]
fn characters_reject_wrong_cosets() {
    let m: Rat = "3/4".parse().unwrap();
    assert!(CentralCharacter::new(m, vec![(Rat::new(1, 2), Coset::Sp)]).is_err());
    assert!(CentralCharacter::new(m, vec![(Rat::new(1, 3), Coset::Gl)]).is_err());
    assert!(CentralCharacter::new(m, vec![(Rat::new(7, 4), Coset::Sp)]).is_ok());
}
