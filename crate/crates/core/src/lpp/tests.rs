use super::*;
use crate::algebra::{rat, Polynomial, Rational, Var};
use crate::bijections::phi;
use crate::shapes::{part, partitions_in_box, Partition, SkewShape};
use crate::tableaux::{rpp, Tableau};

fn params(t: &[(i64, i64)], x: &[(i64, i64)]) -> GeomParams {
    GeomParams::new(t.iter().map(|&(a, b)| rat(a, b)).collect(), x.iter().map(|&(a, b)| rat(a, b)).collect()).unwrap()
}

fn param_sets() -> Vec<GeomParams> {
    vec![params(&[(1, 2), (1, 3)], &[(1, 3), (1, 4)]), params(&[(1, 5), (1, 7)], &[(1, 2), (1, 6)]), params(&[(2, 3), (3, 5)], &[(1, 2), (2, 7)])]
}

fn example_rpp() -> Tableau {
    Tableau::from_rows(&[&[1, 1, 4], &[1, 3, 4], &[3, 3]]).unwrap()
}

#[test]
fn single_entries() {
    for k in 0..4 {
        let m = LppMatrix::from_bottom_rows(vec![vec![k]]).unwrap();
        assert_eq!(last_passage(&m, None).unwrap(), Partition::new(vec![k as usize]).unwrap());
    }
    assert!(last_passage(&LppMatrix::zeros(3, 2), None).unwrap().is_empty());
    let p = params(&[(1, 2)], &[(1, 3)]);
    assert_eq!(exact_prob(&part(&[1]), &p).unwrap(), rat(5, 36));
    assert_eq!(exact_prob_bruteforce(&part(&[1]), &p).unwrap(), rat(5, 36));
    assert_eq!(exact_prob(&Partition::empty(), &p).unwrap(), p.normalizer());
}

#[test]
fn example_matrix_path() {
    let m = phi(&example_rpp(), 3, 4).unwrap();
    assert_eq!(m.display_rows(), vec![vec![1, 0, 0, 0], vec![1, 0, 0, 1], vec![0, 0, 2, 0]]);
    let g = last_passage_table(&m, None).unwrap();
    assert_eq!(g[2][4], 3);
    assert_eq!(last_passage(&m, None).unwrap(), part(&[3, 3, 2]));
    // The maximal path for G(2,4) uses b_{3,3} (printed), not b_{2,1}.
    assert_eq!(g[1][3], 2);
}

#[test]
fn json_keeps_orientation() {
    let m = LppMatrix::from_display(&[&[1, 0], &[0, 2]]).unwrap();
    let j = m.to_json();
    assert_eq!(j["origin"], "bottom-left");
    assert_eq!(j["rows"][0], serde_json::json!([0, 2]));
    assert_eq!(LppMatrix::from_json(&j).unwrap(), m);
}

#[test]
fn exact_matches_bruteforce() {
    for p in param_sets() {
        for lam in partitions_in_box(2, 2) {
            assert_eq!(exact_prob(&lam, &p).unwrap(), exact_prob_bruteforce(&lam, &p).unwrap(), "λ={lam} {:?}", p.to_json());
        }
    }
    let p = params(&[(1, 2), (1, 3), (1, 4)], &[(1, 3), (2, 5)]);
    for lam in partitions_in_box(3, 2) {
        assert_eq!(exact_prob(&lam, &p).unwrap(), exact_prob_bruteforce(&lam, &p).unwrap(), "λ={lam}");
    }
}

#[test]
fn t_equal_one_specialization() {
    // λ = 21, ℓ = 3, n = 2: the five RPP weights at t = 1.
    let p = prob_polynomial(&part(&[2, 1]), 3, 2).unwrap();
    let ones = (1..=3).map(|i| (Var::t(i), Polynomial::one())).collect();
    let (x1, x2) = (Polynomial::x(1), Polynomial::x(2));
    let body = x1.pow(2) + x1.pow(2) * &x2 + &x1 * &x2 + &x1 * x2.pow(2) + x2.pow(2);
    let norm = (Polynomial::one() - &x1).pow(3) * (Polynomial::one() - &x2).pow(3);
    assert_eq!(p.substitute(&ones).unwrap(), norm * body);
}

#[test]
fn initial_condition_matches_bruteforce() {
    let p = params(&[(1, 2), (1, 3)], &[(1, 3), (1, 4)]);
    for mu in partitions_in_box(2, 1) {
        for lam in partitions_in_box(2, 3) {
            let a = exact_prob_from(&lam, &mu, &p).unwrap();
            assert_eq!(a, exact_prob_bruteforce_from(&lam, &mu, &p).unwrap(), "λ={lam} μ={mu}");
            assert_eq!(a, chain_prob(&lam, &mu, &p), "λ={lam} μ={mu}");
        }
    }
}

#[test]
fn transition_single_column() {
    let t = [rat(1, 2), rat(1, 3)];
    let x = rat(1, 5);
    // λ = μ with no slack: only the zero column.
    let lam = part(&[2, 2]);
    assert_eq!(transition_step(&lam, &lam, &t, &x), (rat(1, 1) - rat(1, 10)) * (rat(1, 1) - rat(1, 15)));
    // λ = 21 from μ = 1 by enumerating one geometric column.
    let p1 = GeomParams::new(t.to_vec(), vec![x.clone()]).unwrap();
    let mut direct = Rational::from_integer(0.into());
    for col in LppMatrix::all_bounded(2, 1, 2) {
        if last_passage(&col, Some(&part(&[1]))).unwrap() == part(&[2, 1]) {
            direct += matrix_prob(&col, &p1);
        }
    }
    assert_eq!(transition_step(&part(&[2, 1]), &part(&[1]), &t, &x), direct);
    // Two steps from ∅ to (1) versus the joint law.
    let p = params(&[(1, 2), (1, 3)], &[(1, 3), (1, 4)]);
    let mut chained = Rational::from_integer(0.into());
    for mu in [Partition::empty(), part(&[1])] {
        chained += transition_prob(&part(&[1]), &mu, &p) * exact_prob(&mu, &p.truncated(1)).unwrap();
    }
    assert_eq!(chained, exact_prob(&part(&[1]), &p).unwrap());
}

#[test]
fn transition_matches_skew_formula() {
    let p = params(&[(1, 2), (1, 3)], &[(1, 3), (1, 4)]);
    for mu in partitions_in_box(2, 2) {
        for lam in partitions_in_box(2, 3) {
            let want = exact_prob_from(&lam, &mu, &p.truncated(1)).unwrap();
            let single = GeomParams::new(p.t().to_vec(), vec![p.x()[0].clone()]).unwrap();
            assert_eq!(transition_prob(&lam, &mu, &single), want, "λ={lam} μ={mu}");
        }
    }
}

#[test]
fn cdf_three_ways() {
    for p in param_sets() {
        for m in 0..=2 {
            let c = cdf_comparison(m, &p).unwrap();
            assert!(c.agree(), "{}", c.to_json());
            assert!(verify_schur_measure_cdf(2, 2, m, &p).unwrap());
        }
    }
    let p = params(&[(1, 2)], &[(1, 3), (1, 4), (1, 5)]);
    assert!(cdf_comparison(2, &p).unwrap().agree());
}

#[test]
fn schur_measure_empty_and_mass() {
    let p = params(&[(1, 2), (1, 3)], &[(1, 3), (1, 4)]);
    assert_eq!(schur_measure(&Partition::empty(), &p).unwrap(), p.normalizer());
    // The CDF increases towards 1.
    let mut prev = Rational::from_integer(0.into());
    for m in 0..=4 {
        let c = cdf_comparison(m, &p).unwrap();
        assert!(c.exact_sum > prev && c.exact_sum < Rational::from_integer(1.into()));
        prev = c.exact_sum;
    }
}

#[test]
fn sampling_is_deterministic() {
    let p = params(&[(1, 2), (1, 3)], &[(1, 3), (1, 4)]);
    assert_eq!(sample(&p, 7), sample(&p, 7));
    let a = monte_carlo_threads(&part(&[1]), &p, 40_000, 3, 1).unwrap();
    let b = monte_carlo_threads(&part(&[1]), &p, 40_000, 3, 4).unwrap();
    assert_eq!(a, b);
}

#[test]
fn monte_carlo_within_four_sigma() {
    let p = params(&[(1, 2), (1, 3)], &[(1, 3), (1, 4)]);
    let lam = part(&[2, 1]);
    let mc = monte_carlo(&lam, &p, 100_000, 42).unwrap();
    let exact = exact_prob(&lam, &p).unwrap();
    assert!(mc.sigma_distance(&exact) < 4.0, "{:?} vs {exact}", mc);
}

#[test]
fn tasep_worked_example() {
    let r = tasep_check(&example_rpp(), 4).unwrap();
    assert!(r.holds(), "{}", r.to_json());
    assert_eq!(r.last_particle_times(), vec![6, 8, 9]);
    let pos = &r.run.positions;
    // Displayed evolution of p_1..p_4 through t = 5, then p_2..p_4 at t = 6.
    let shown: [[i64; 4]; 6] = [[0, -1, -2, -3], [1, -1, -2, -3], [1, 0, -2, -3], [2, 0, -2, -3], [2, 1, -2, -3], [3, 1, -1, -3]];
    for (tau, row) in shown.iter().enumerate() {
        assert_eq!(&pos[tau][..], &row[..], "t = {tau}");
    }
    assert_eq!(&pos[6][1..], &[2, 0, -2]);
    // p_4 afterwards: -2, -1, 0 at t = 7, 8, 9.
    assert_eq!([pos[7][3], pos[8][3], pos[9][3]], [-2, -1, 0]);
}

#[test]
fn tasep_small_cases() {
    let one = Tableau::from_rows(&[&[1]]).unwrap();
    let r = tasep_check(&one, 1).unwrap();
    assert!(r.holds());
    assert_eq!(r.last_particle_times(), vec![2]);
    let empty = tasep_check(&Tableau::empty(), 2).unwrap();
    assert!(empty.holds() && empty.schedule.is_empty());
}

#[test]
fn tasep_exhaustive_small_shapes() {
    for lam in part(&[2, 2]).subpartitions() {
        for n in 1..=3u32 {
            for t in rpp(&SkewShape::straight(lam.clone()), n) {
                let r = tasep_check(&t, n as usize).unwrap();
                assert!(r.holds(), "T = {t}, n = {n}: {}", r.to_json());
            }
        }
    }
}
