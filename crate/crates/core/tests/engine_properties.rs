use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use permpat::arith::factorial;
use permpat::engines::{abc_bac_p, abc_p, abcd_p, build_table, GridFamily, TableGrid};
use permpat::perm::{gen_poly, Oracle, Pattern};

fn single_index(family: GridFamily) -> bool {
    family.index_arity() == 1
}

#[test]
fn engines_match_brute_force_up_to_8() {
    let oracle = Oracle::default();
    for family in GridFamily::ALL {
        let grid = build_table(family, 8);
        for n in 0..=8 {
            let (fam, _, _) = family.oracle_query(n, &vec![0; family.index_arity()]);
            let brute = oracle.brute_table(n, fam).unwrap();
            for (cell_n, index, value) in grid.cells() {
                if cell_n != n {
                    continue;
                }
                let (_, occ, thr) = family.oracle_query(n, &index);
                assert_eq!(&brute.count(&occ, &thr).unwrap(), value, "{family} n={n} index={index:?}");
            }
        }
    }
}

#[test]
fn zero_and_one_columns_agree() {
    for family in GridFamily::ALL.into_iter().filter(|&f| single_index(f)) {
        let grid = build_table(family, 30);
        for n in 1..=30 {
            assert_eq!(grid.get(n, &[0]), grid.get(n, &[1]), "{family} n={n}");
        }
    }
    let cube = build_table(GridFamily::Abcd, 20);
    for n in 1..=20 {
        for i in 0..=n {
            assert_eq!(cube.get(n, &[0, i]), cube.get(n, &[1, i]));
            assert_eq!(cube.get(n, &[i, 0]), cube.get(n, &[i, 1]));
        }
    }
}

#[test]
fn difference_and_sum_forms_agree() {
    let grid = build_table(GridFamily::Abc, 30);
    let p = |n: usize, i: usize| grid.get(n, &[i]).unwrap().clone();
    for n in 1..=30 {
        for i in 1..n {
            assert_eq!(p(n, i) - p(n, i + 1), p(n - 1, i - 1), "n={n} I={i}");
        }
        for i in 1..=n {
            let sum: BigInt = (i..=n).map(|k| p(n - 1, k - 1)).sum();
            assert_eq!(p(n, i), sum, "n={n} I={i}");
        }
    }
}

#[test]
fn abcd_collapse_below_diagonal() {
    let cube = build_table(GridFamily::Abcd, 20);
    for n in 1..=20 {
        for i1 in 1..=n {
            for i2 in i1 + 1..=n {
                assert_eq!(cube.get(n, &[i1, i2]), cube.get(n, &[i2, i2]));
            }
        }
        assert_eq!(cube.get(n, &[n, n]), Some(&BigInt::from(1)));
    }
}

#[test]
fn values_do_not_increase_with_thresholds() {
    for family in GridFamily::ALL {
        let grid = build_table(family, 30);
        for n in 0..=30 {
            if single_index(family) {
                for i in 0..n {
                    assert!(grid.get(n, &[i]) >= grid.get(n, &[i + 1]), "{family} n={n} I={i}");
                }
            } else {
                for a in 0..=n {
                    for b in 0..n {
                        assert!(grid.get(n, &[a, b]) >= grid.get(n, &[a, b + 1]));
                        assert!(grid.get(n, &[b, a]) >= grid.get(n, &[b + 1, a]));
                    }
                }
            }
        }
    }
}

#[test]
fn occurrence_counts_partition_the_symmetric_group() {
    let p = build_table(GridFamily::Abc, 8);
    let p1 = build_table(GridFamily::AbcOne, 8);
    let p2 = build_table(GridFamily::AbcTwo, 8);
    for n in 0..=8 {
        let i = 1.min(n);
        let engines = p.get(n, &[i]).unwrap() + p1.get(n, &[i]).unwrap() + p2.get(n, &[i]).unwrap();
        let poly = gen_poly(n, &Pattern::abc()).unwrap().univariate_coeffs().unwrap();
        let rest: BigInt = poly.iter().skip(3).sum();
        assert_eq!(engines + rest, factorial(n as u64), "n={n}");
    }
}

#[test]
fn pair_avoiders_double() {
    for n in 1..=20 {
        assert_eq!(abc_bac_p(n).unwrap(), BigInt::from(1u64 << (n - 1)));
    }
}

#[test]
fn stored_values_are_nonnegative() {
    for family in GridFamily::ALL {
        assert!(build_table(family, 25).cells().iter().all(|(_, _, v)| !v.is_negative()));
    }
}

proptest! {
    #[test]
    fn single_values_agree_with_grids(n in 0usize..25, a in 0usize..25, b in 0usize..25) {
        let (i1, i2) = (a.min(n), b.min(n));
        let flat = build_table(GridFamily::Abc, n);
        let cube = build_table(GridFamily::Abcd, n);
        prop_assert_eq!(&abc_p(n, i1).unwrap(), flat.get(n, &[i1]).unwrap());
        prop_assert_eq!(&abcd_p(n, i1, i2).unwrap(), cube.get(n, &[i1, i2]).unwrap());
    }

    #[test]
    fn grids_are_prefixes_of_larger_grids(family_ix in 0usize..9, small in 0usize..12, extra in 0usize..8) {
        let family = GridFamily::ALL[family_ix];
        let a = build_table(family, small);
        let b = build_table(family, small + extra);
        for (n, index, v) in a.cells() {
            prop_assert_eq!(Some(v), b.get(n, &index));
        }
    }

    #[test]
    fn json_export_round_trips(family_ix in 0usize..9, n_max in 0usize..10) {
        let grid = build_table(GridFamily::ALL[family_ix], n_max);
        prop_assert_eq!(TableGrid::from_json(&grid.to_json()).unwrap(), grid);
    }

    #[test]
    fn out_of_domain_is_rejected(n in 0usize..15, over in 1usize..5) {
        prop_assert!(abc_p(n, n + over).is_err());
        prop_assert!(abcd_p(n, n + over, 0).is_err());
        prop_assert!(abcd_p(n, 0, n + over).is_err());
    }
}
