use num_bigint::BigInt;
use tautchi::complexes::*;
use tautchi::linalg::QMatrix;
use tautchi::rational::{choose, int};
use tautchi::symgroup::{IndexSet, Permutation};

fn all_pairs(max_k: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_k).flat_map(|k| (1..=k).map(move |ell| (k, ell)))
}

#[test]
fn d_squared_vanishes_and_dims_match() {
    for (k, ell) in all_pairs(7) {
        let c = build_r_complex(k, ell).unwrap();
        assert!(c.check_d_squared().unwrap(), "k={k} l={ell}");
        assert_eq!(c.dim(-1), 1 << k);
        for i in 0..=c.max_degree() {
            assert_eq!(BigInt::from(c.dim(i)), dim_formula(k, ell, i as usize), "k={k} l={ell} i={i}");
        }
        assert_eq!(c.max_degree() as usize, k - ell);
    }
}

#[test]
fn cohomology_is_concentrated_in_degree_minus_one() {
    for (k, ell) in all_pairs(7) {
        let c = build_r_complex(k, ell).unwrap();
        let report = verify_exactness(&c).unwrap();
        assert!(report.passed(), "k={k} l={ell}: {report:?}");
        // H^{-1} = ker φ̃ has dimension 2^k - dim U_ℓ.
        let h = BigInt::from(report.cohomology(-1).unwrap());
        assert_eq!(h, BigInt::from(1u64 << k) - dim_u(k, ell));
    }
}

#[test]
fn alternating_dimension_sum() {
    for k in 1..=20 {
        for ell in 1..=k {
            let direct: BigInt = (ell..=k).map(|j| choose(k as u64, j as u64)).sum();
            assert_eq!(euler_char_formula(k, ell), direct, "k={k} l={ell}");
            assert_eq!(dim_u(k, ell), direct);
        }
    }
}

#[test]
fn phi_restricted_to_u_is_injective_onto_kernel() {
    for (k, ell) in all_pairs(6) {
        let c = build_r_complex(k, ell).unwrap();
        let r = lemma_ul_check(&c).unwrap();
        assert!(r.passed(), "k={k} l={ell}: {r:?}");
        assert_eq!(BigInt::from(r.dim_u), dim_u(k, ell));
    }
}

#[test]
fn group_actions_are_chain_maps() {
    for (k, ell) in all_pairs(5) {
        let c = build_r_complex(k, ell).unwrap();
        let hat = attach_s2_hat(&c).unwrap();
        let tilde = attach_s2_tilde(&c).unwrap();
        assert!(hat.all_signed_permutations() && tilde.all_signed_permutations());
        attach_sk(&c).unwrap();
        attach_sk_times_s2(&c, TauConvention::Hat).unwrap();
        attach_sk_times_s2(&c, TauConvention::Tilde).unwrap();
    }
}

#[test]
fn actions_satisfy_group_relations() {
    for (k, ell) in all_pairs(4) {
        let c = build_r_complex(k, ell).unwrap();
        let perms = Permutation::all(k);
        for d in c.degrees() {
            let id = QMatrix::identity(c.dim(d));
            for conv in [TauConvention::Hat, TauConvention::Tilde] {
                let t = c.tau_matrix(d, conv).unwrap();
                assert_eq!(t.mul(&t).unwrap(), id, "tau^2 k={k} l={ell} d={d}");
                for s in &perms {
                    let m = c.sk_matrix(s, d).unwrap();
                    assert_eq!(m.mul(&t).unwrap(), t.mul(&m).unwrap(), "tau commutes k={k} l={ell}");
                }
            }
            for s in &perms {
                let ms = c.sk_matrix(s, d).unwrap();
                for u in &perms {
                    let mu = c.sk_matrix(u, d).unwrap();
                    assert_eq!(ms.mul(&mu).unwrap(), c.sk_matrix(&s.compose(u), d).unwrap(), "k={k} l={ell} d={d}");
                }
            }
            // Coxeter relations for adjacent transpositions.
            for a in 0..k.saturating_sub(1) {
                let sa = c.sk_matrix(&Permutation::transposition(k, a, a + 1), d).unwrap();
                assert_eq!(sa.mul(&sa).unwrap(), id);
                if a + 2 < k {
                    let sb = c.sk_matrix(&Permutation::transposition(k, a + 1, a + 2), d).unwrap();
                    let aba = sa.mul(&sb).unwrap().mul(&sa).unwrap();
                    let bab = sb.mul(&sa).unwrap().mul(&sb).unwrap();
                    assert_eq!(aba, bab);
                }
            }
        }
    }
}

#[test]
fn sk_invariants_vanish_in_positive_degrees() {
    for (k, ell) in all_pairs(6) {
        let c = build_r_complex(k, ell).unwrap();
        for d in 1..=c.max_degree() {
            let r = invariant_dim(&c, d, GroupSpec::sk()).unwrap();
            assert_eq!(r.projector_rank, 0, "k={k} l={ell} d={d}");
            assert_eq!(r.trace_dim, int(0));
        }
        // In degree -1 the invariants are spanned by the orbit sums over |A| = j.
        assert_eq!(invariant_dim(&c, -1, GroupSpec::sk()).unwrap().projector_rank, k + 1);
    }
}

#[test]
fn tau_acts_freely_away_from_full_m() {
    for (k, ell) in all_pairs(6) {
        let c = build_r_complex(k, ell).unwrap();
        for conv in [TauConvention::Hat, TauConvention::Tilde] {
            let r = invariant_dim(&c, -1, GroupSpec::s2(conv)).unwrap();
            assert_eq!(r.projector_rank, 1 << (k - 1));
            for d in 0..=c.max_degree() {
                let full = c.labels(d).unwrap().iter().any(|l| matches!(l, BasisLabel::Wedge { m, .. } if *m == IndexSet::full(k)));
                if !full {
                    let r = invariant_dim(&c, d, GroupSpec::s2(conv)).unwrap();
                    assert_eq!(2 * r.projector_rank, c.dim(d), "k={k} l={ell} d={d}");
                }
            }
        }
    }
}

#[test]
fn trace_and_projector_agree_for_every_group() {
    let specs = [
        GroupSpec::s2(TauConvention::Hat),
        GroupSpec::s2(TauConvention::Tilde),
        GroupSpec::sk(),
        GroupSpec::sk().twisted(),
        GroupSpec::sk_times_s2(TauConvention::Hat),
        GroupSpec::sk_times_s2(TauConvention::Tilde).twisted(),
    ];
    for (k, ell) in all_pairs(5) {
        let c = build_r_complex(k, ell).unwrap();
        for spec in specs {
            for d in c.degrees() {
                let r = invariant_dim(&c, d, spec).unwrap();
                assert_eq!(r.trace_dim, int(r.projector_rank as i64));
            }
        }
    }
}

#[test]
fn n_brute_force_matches_closed_form() {
    for (k, ell) in all_pairs(7) {
        let r = nkl_brute(k, ell).unwrap();
        assert!(r.agrees(), "{r:?}");
    }
    for k in 1..=7 {
        assert_eq!(n_closed_form(k, k), BigInt::from(0));
    }
}

#[test]
fn multiplicities_split_the_tensor_square() {
    // Invariants of S_2 on R̂ split into symmetric and alternating parts.
    for ell in 1..=2 {
        let sym = sym_power_multiplicity(2, ell).unwrap() as i64;
        let ext = ext_power_multiplicity(2, ell).unwrap();
        let n: i64 = n_closed_form(2, ell).try_into().unwrap();
        assert_eq!(sym + ext, n, "l={ell}");
    }
}

#[test]
fn out_of_range_is_rejected() {
    assert!(build_r_complex(0, 1).is_err());
    assert!(build_r_complex(3, 4).is_err());
    assert!(build_r_complex(MAX_BUILD_K + 1, 1).is_err());
    assert!(nkl_brute(MAX_GROUP_K + 1, 1).is_err());
    let c = build_r_complex(3, 1).unwrap();
    assert!(c.differential(5).is_err());
}
