use std::collections::BTreeMap;

use proptest::prelude::*;

use super::*;
use crate::algebra::{Monomial, Polynomial, Var};
use crate::lpp::{last_passage, last_passage_table, LppMatrix};
use crate::shapes::{part, Partition, SkewShape};
use crate::tableaux::{increasing_elegant, rpp, set_valued, ssyt, ssyt_to_gt, SetTableau, Tableau};

fn rpps_up_to(top: &Partition, n: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    for lam in top.subpartitions() {
        for k in 1..=n {
            out.extend(rpp(&SkewShape::straight(lam.clone()), k).into_iter().filter(|t| t.max_entry() == k || lam.is_empty()));
        }
    }
    out
}

fn matrix_weight(m: &LppMatrix) -> Monomial {
    let l = m.rows() as u32;
    let mut pairs = Vec::new();
    for i in 1..=m.rows() {
        for j in 1..=m.cols() {
            let k = m.get(i, j) as i32;
            pairs.push((Var::t(l + 1 - i as u32), k));
            pairs.push((Var::x(j as u32), k));
        }
    }
    Monomial::from_pairs(pairs)
}

#[test]
fn rsk_example() {
    let m = LppMatrix::from_display(&[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 0, 2, 0]]).unwrap();
    let (p, q) = rsk(&m);
    assert_eq!(p, Tableau::from_rows(&[&[1, 1, 3], &[3, 3, 4]]).unwrap());
    assert_eq!(q, Tableau::from_rows(&[&[1, 1, 2], &[2, 3, 3]]).unwrap());
    assert_eq!(rsk_inverse(&p, &q, 3, 4).unwrap(), m);
    let (p0, q0) = rsk(&LppMatrix::zeros(2, 3));
    assert_eq!((p0, q0), (Tableau::empty(), Tableau::empty()));
}

#[test]
fn rsk_round_trip_and_lis() {
    for m in LppMatrix::all_bounded(2, 2, 2) {
        let (p, q) = rsk(&m);
        assert!(p.is_ssyt() && q.is_ssyt());
        assert_eq!(rsk_inverse(&p, &q, 2, 2).unwrap(), m);
    }
    for m in LppMatrix::all_bounded(2, 3, 2) {
        let (p, _) = rsk(&m);
        let g = last_passage_table(&m, None).unwrap();
        assert_eq!(p.shape().outer.first(), g[2][3] as usize, "{m}");
    }
}

#[test]
fn rsk_inverse_rejects_mismatch() {
    let p = Tableau::from_rows(&[&[1, 2]]).unwrap();
    let q = Tableau::from_rows(&[&[1], &[2]]).unwrap();
    assert!(rsk_inverse(&p, &q, 2, 2).is_err());
}

#[test]
fn phi_examples() {
    let t = Tableau::from_rows(&[&[1, 1, 4], &[1, 3, 4], &[3, 3]]).unwrap();
    assert_eq!(phi(&t, 3, 4).unwrap().display_rows(), vec![vec![1, 0, 0, 0], vec![1, 0, 0, 1], vec![0, 0, 2, 0]]);
    type Case<'a> = (&'a [&'a [u32]], [[u64; 2]; 3]);
    let table: [Case; 5] = [
        (&[&[1, 1], &[1]], [[1, 0], [1, 0], [0, 0]]),
        (&[&[1, 1], &[2]], [[2, 0], [0, 1], [0, 0]]),
        (&[&[1, 2], &[1]], [[0, 1], [1, 0], [0, 0]]),
        (&[&[1, 2], &[2]], [[1, 1], [0, 1], [0, 0]]),
        (&[&[2, 2], &[2]], [[0, 1], [0, 1], [0, 0]]),
    ];
    for (rows, want) in table {
        let t = Tableau::from_rows(rows).unwrap();
        let m = phi(&t, 3, 2).unwrap();
        assert_eq!(m.display_rows(), want.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), "{t}");
        assert_eq!(phi_inverse(&m).unwrap(), t);
    }
    // Constant RPP: a single column of Φ, read off the column counts.
    let ones = Tableau::from_rows(&[&[1, 1], &[1, 1]]).unwrap();
    assert_eq!(phi(&ones, 2, 1).unwrap().display_rows(), vec![vec![0], vec![2]]);
}

#[test]
fn phi_is_a_weighted_bijection() {
    for t in rpps_up_to(&part(&[3, 2, 1]), 3) {
        let lam = t.shape().outer.clone();
        for l in [lam.len().max(1), lam.len() + 1] {
            let m = phi(&t, l, 3).unwrap();
            assert_eq!(last_passage(&m, None).unwrap(), lam, "{t}");
            assert_eq!(phi_inverse(&m).unwrap(), t);
            let tl = Monomial::from_pairs(lam.padded(l).iter().enumerate().map(|(i, &k)| (Var::t(i as u32 + 1), k as i32)));
            let b = Monomial::from_pairs(t.vertical_repeats().iter().enumerate().map(|(i, &k)| (Var::t(i as u32 + 1), -k)));
            let a = Monomial::from_pairs(t.column_counts().into_iter().map(|(v, k)| (Var::x(v), k)));
            assert_eq!(matrix_weight(&m), tl.mul(&b).mul(&a), "{t}");
        }
    }
}

#[test]
fn phi_inverse_is_exhaustively_unique() {
    // Every bounded 2x2 and 3x2 matrix has exactly one preimage.
    for (r, c) in [(2, 2), (3, 2)] {
        for m in LppMatrix::all_bounded(r, c, 2) {
            let t = phi_inverse(&m).unwrap();
            assert_eq!(phi(&t, r, c).unwrap(), m);
        }
    }
}

#[test]
fn deflation_trivial_and_round_trip() {
    let t = Tableau::from_rows(&[&[1, 1, 2], &[2, 3]]).unwrap();
    let (p, e) = deflate(&t).unwrap();
    assert_eq!(p, t);
    assert_eq!(e.shape().size(), 0);
    for lam in part(&[2, 2]).subpartitions() {
        for t in rpp(&SkewShape::straight(lam), 2) {
            let (p, e) = deflate(&t).unwrap();
            assert!(p.is_ssyt() && e.is_elegant(), "{t} -> {p}, {e}");
            assert_eq!(inflate(&p, &e).unwrap(), t);
        }
    }
}

#[test]
fn inflation_is_a_bijection() {
    // Pairs (P, E) over λ ⊆ 321, n ≤ 3 against RPPs: both directions.
    for lam in part(&[3, 2, 1]).subpartitions() {
        for n in 1..=3 {
            let rpps = rpp(&SkewShape::straight(lam.clone()), n);
            let mut pairs = 0;
            for mu in lam.subpartitions() {
                let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
                let es = crate::tableaux::elegant(&shape);
                for p in ssyt(&SkewShape::straight(mu.clone()), n) {
                    for e in &es {
                        let t = inflate(&p, e).unwrap();
                        assert!(t.is_rpp() && t.max_entry() <= n);
                        // Label i becomes a column repeat in row i.
                        let mut labels = vec![0; lam.len()];
                        for &v in e.rows().iter().flatten() {
                            labels[v as usize - 1] += 1;
                        }
                        assert_eq!(t.vertical_repeats(), labels);
                        assert_eq!(deflate(&t).unwrap(), (p.clone(), e.clone()));
                        pairs += 1;
                    }
                }
            }
            assert_eq!(pairs, rpps.len(), "λ = {lam}, n = {n}");
        }
    }
}

#[test]
fn displayed_pair_inflates() {
    let p = Tableau::from_rows(&[&[1, 1, 3, 4], &[3]]).unwrap();
    let e = Tableau::new(SkewShape::new(part(&[4, 3, 2, 2]), part(&[4, 1])).unwrap(), vec![vec![], vec![1, 1], vec![1, 2], vec![3, 3]]).unwrap();
    assert!(e.is_elegant());
    let t = inflate(&p, &e).unwrap();
    assert!(t.is_rpp());
    assert_eq!(t.vertical_repeats(), vec![3, 1, 2, 0]);
    assert_eq!(deflate(&t).unwrap(), (p, e));
}

#[test]
fn deflation_matches_rsk_of_phi() {
    for t in rpps_up_to(&part(&[3, 2, 1]), 3) {
        let lam = t.shape().outer.clone();
        let l = lam.len().max(1);
        let (p, q) = rsk(&phi(&t, l, 3).unwrap());
        assert!(q.shape().outer.contained_in(&lam));
        assert_eq!(left_edge(&q, l).unwrap(), lam, "{t}");
        let e = psi(&q, &lam, l).unwrap();
        assert_eq!(deflate(&t).unwrap(), (p, e), "{t}");
    }
}

#[test]
fn psi_bijection_and_weights() {
    let lam = part(&[3, 2, 1]);
    let l = 3;
    let mut seen = 0;
    for mu in lam.subpartitions() {
        let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
        let qs: Vec<Tableau> = ssyt(&SkewShape::straight(mu.clone()), l as u32).into_iter().filter(|q| left_edge(q, l).unwrap() == lam).collect();
        let es = crate::tableaux::elegant(&shape);
        assert_eq!(qs.len(), es.len(), "μ = {mu}");
        for q in qs {
            let e = psi(&q, &lam, l).unwrap();
            assert!(e.is_elegant());
            assert_eq!(psi_inverse(&e, l).unwrap(), q);
            // t^E = t^λ ∏ t_{ℓ+1-q}^{-1}.
            let tl = Monomial::from_pairs(lam.padded(l).iter().enumerate().map(|(i, &k)| (Var::t(i as u32 + 1), k as i32)));
            let tq = Monomial::from_pairs(q.rows().iter().flatten().map(|&v| (Var::t(l as u32 + 1 - v), -1)));
            assert_eq!(e.t_weight(), tl.mul(&tq));
            seen += 1;
        }
    }
    assert!(seen > 0);
    let q = Tableau::from_rows(&[&[1, 1, 2], &[2]]).unwrap();
    assert!(psi(&q, &part(&[3, 2, 1]), 3).is_err());
    // Full shape: empty elegant tableau.
    let full = Tableau::from_rows(&[&[1, 2], &[2]]).unwrap();
    assert_eq!(psi(&full, &part(&[2, 1]), 2).unwrap().shape().size(), 0);
}

#[test]
fn psi_four_row_counts() {
    // GT rows (λ1, μ2, μ3, μ4), (λ2, x, y), (λ3, z), (λ4).
    let (l1, l2, l3, l4, m2, m3, m4, x, y, z) = (5, 4, 3, 2, 2, 1, 0, 2, 1, 1);
    let gt = crate::tableaux::GtPattern { rows: vec![vec![l4], vec![l3, z], vec![l2, x, y], vec![l1, m2, m3, m4]] };
    assert!(gt.is_valid());
    let q = crate::tableaux::gt_to_ssyt(&gt).unwrap();
    let lam = part(&[l1, l2, l3, l4]);
    let e = psi(&q, &lam, 4).unwrap();
    let count = |row: usize, v: u32| e.rows()[row - 1].iter().filter(|&&w| w == v).count();
    assert_eq!([count(2, 1), count(3, 1), count(4, 1)], [l2 - m2, x - m3, y - m4]);
    assert_eq!([count(3, 2), count(4, 2)], [l3 - x, z - y]);
    assert_eq!(count(4, 3), l4 - z);
}

#[test]
fn rectification_is_order_independent() {
    for outer in part(&[3, 3, 2]).subpartitions() {
        for inner in outer.subpartitions() {
            let shape = SkewShape::new(outer.clone(), inner).unwrap();
            for t in ssyt(&shape, 2) {
                let a = rectify(&t, CornerOrder::ColumnFirst).unwrap();
                let b = rectify(&t, CornerOrder::RowFirst).unwrap();
                assert!(a.is_ssyt());
                assert_eq!(a, b, "{t}");
                assert_eq!(a.x_weight(), t.x_weight());
            }
        }
    }
}

fn pinned_pair() -> (Tableau, Tableau) {
    let p = Tableau::from_rows(&[&[1, 1, 1, 1, 1, 5], &[2, 2, 2, 3, 4], &[3, 3, 4, 4], &[4, 5, 5], &[5, 6, 6], &[6]]).unwrap();
    let shape = SkewShape::new(part(&[6, 5, 4, 3, 3, 1]), part(&[6, 4, 2, 1, 1])).unwrap();
    let e = Tableau::new(shape, vec![vec![], vec![1], vec![1, 2], vec![1, 2], vec![2, 4], vec![4]]).unwrap();
    (p, e)
}

#[test]
fn uncrowd_marked_example() {
    let (p, e) = pinned_pair();
    let u = UncrowdResult::new(p, e).unwrap();
    assert_eq!(u.markings.rows()[4], vec![3, 1]);
    let t = crowd(&u).unwrap();
    assert_eq!(t.shape(), &part(&[6, 4, 2, 1, 1]));
    assert_eq!(t.extra_entries(), vec![3, 3, 2, 0, 0]);
    assert_eq!(uncrowd(&t), u);
}

#[test]
fn uncrowd_round_trip_and_weights() {
    let singleton = SetTableau::new(vec![vec![vec![1], vec![2]], vec![vec![3]]]).unwrap();
    let u = uncrowd(&singleton);
    assert_eq!(u.recording.shape().size(), 0);
    assert_eq!(u.insertion, Tableau::from_rows(&[&[1, 2], &[3]]).unwrap());
    for lam in part(&[2, 2, 1]).subpartitions() {
        for t in set_valued(&lam, 3) {
            let u = uncrowd(&t);
            assert!(u.recording.is_increasing_elegant());
            assert_eq!(crowd(&u).unwrap(), t);
            assert_eq!(u.insertion.x_weight(), Monomial::from_pairs(t.rows().iter().flatten().flatten().map(|&v| (Var::x(v), 1))));
            let e = t.extra_entries();
            let te = Monomial::from_pairs(e.iter().enumerate().map(|(i, &k)| (Var::t(i as u32 + 1), k)));
            assert_eq!(u.recording.shifted_t_weight(), te);
        }
    }
}

#[test]
fn uncrowd_weight_sum() {
    // Σ SVT weights = Σ over (P, E) of (-1)^{|E|} x^P ∏ t_{i - E_ij}.
    let lam = part(&[2, 1]);
    let n = 2;
    let left: Polynomial = set_valued(&lam, n).iter().map(|t| t.weight()).fold(Polynomial::zero(), |a, b| a + b);
    let mut right = Polynomial::zero();
    let mut images = BTreeMap::new();
    for mu in part(&[2, 2, 2]).subpartitions().into_iter().filter(|m| lam.contained_in(m)) {
        let shape = SkewShape::new(mu.clone(), lam.clone()).unwrap();
        for e in increasing_elegant(&shape) {
            for p in ssyt(&SkewShape::straight(mu.clone()), n) {
                let Ok(u) = UncrowdResult::new(p.clone(), e.clone()) else { continue };
                let Ok(t) = crowd(&u) else { continue };
                if t.rows().iter().flatten().flatten().any(|&v| v > n) {
                    continue;
                }
                *images.entry(format!("{:?}", t.rows())).or_insert(0) += 1;
                let sign = if e.shape().size() % 2 == 0 { 1 } else { -1 };
                let mono = p.x_weight().mul(&e.shifted_t_weight());
                right += Polynomial::term(mono, crate::algebra::rat(sign, 1));
            }
        }
    }
    assert_eq!(images.len(), set_valued(&lam, n).len());
    assert!(images.values().all(|&k| k == 1));
    assert_eq!(left, right);
}

prop_compose! {
    fn small_matrix()(rows in 1usize..4, cols in 1usize..4)(w in proptest::collection::vec(0u64..3, rows * cols), cols in Just(cols)) -> LppMatrix {
        LppMatrix::from_bottom_rows(w.chunks(cols).map(|c| c.to_vec()).collect()).unwrap()
    }
}

proptest! {
    #[test]
    fn rsk_round_trips(m in small_matrix()) {
        let (p, q) = rsk(&m);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(rsk_inverse(&p, &q, m.rows(), m.cols()).unwrap(), m.clone());
        prop_assert_eq!(p.shape().outer.first() as u64, last_passage_table(&m, None).unwrap()[m.rows()][m.cols()]);
    }

    #[test]
    fn phi_inverse_round_trips(m in small_matrix()) {
        let t = phi_inverse(&m).unwrap();
        prop_assert_eq!(phi(&t, m.rows(), m.cols()).unwrap(), m.clone());
        let (p, q) = rsk(&m);
        let lam = t.shape().outer.clone();
        prop_assert_eq!(deflate(&t).unwrap(), (p, psi(&q, &lam, m.rows()).unwrap()));
    }

    #[test]
    fn gt_edge_via_psi(m in small_matrix()) {
        let (_, q) = rsk(&m);
        let gt = ssyt_to_gt(&q, m.rows()).unwrap();
        prop_assert_eq!(Partition::new(gt.left_edge()).unwrap(), last_passage(&m, None).unwrap());
    }
}
