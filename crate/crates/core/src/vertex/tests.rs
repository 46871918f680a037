use super::operators::*;
use super::*;
use crate::algebra::{Monomial, Polynomial, Var};
use crate::shapes::{part, partitions_in_box, Partition};
use crate::symfunc::{beta_grothendieck, dual_grothendieck, e_coeff, grothendieck, DualRoute, GrothRoute, SymSpec};

fn g(lam: &Partition, n: usize) -> Polynomial {
    dual_grothendieck(lam, &SymSpec::new(n, 4), DualRoute::JtH).unwrap()
}

fn big_g(lam: &Partition, n: usize) -> Polynomial {
    grothendieck(lam, &SymSpec::new(n, 4), GrothRoute::Svt).unwrap()
}

fn gb(lam: &Partition, n: usize) -> Polynomial {
    if lam.len() > n {
        return Polynomial::zero();
    }
    beta_grothendieck(lam, n).unwrap()
}

fn t_weight(lam: &Partition, l: usize, m: usize) -> Polynomial {
    let p = lam.padded(l);
    Polynomial::monomial(Monomial::from_pairs((0..l).map(|i| (Var::t(i as u32 + 1), (m - p[i]) as i32))))
}

#[test]
fn lattice_path_models_match_symmetric_functions() {
    for n in 1..=3 {
        for lam in partitions_in_box(3, 3) {
            let z = dual_g_model(&lam, n).unwrap().partition_function().unwrap();
            assert_eq!(z, g(&lam, n), "dual model λ={lam} n={n}");
            if lam.len() <= n && !lam.is_empty() {
                let z = g_model(&lam, n).unwrap().partition_function().unwrap();
                assert_eq!(z, big_g(&lam, n), "G model λ={lam} n={n}");
            }
        }
    }
}

#[test]
fn fermionic_model_gives_beta_grothendieck() {
    for n in 1..=3 {
        for lam in partitions_in_box(n, 2) {
            let z = beta_model(&lam, n, n + 2).unwrap().partition_function().unwrap();
            assert_eq!(z, gb(&lam, n), "λ={lam} n={n}");
        }
    }
}

#[test]
fn empty_grid_is_one() {
    let m = JaggedModel { lmatrices: vec![nilp()], rows: Vec::new(), bottom: Vec::new() };
    assert!(m.partition_function().unwrap().is_one());
    assert!(dual_g_model(&Partition::empty(), 2).unwrap().partition_function().unwrap().is_one());
}

#[test]
fn path_count_is_conserved() {
    // Bottom with two paths, top demanding one: no admissible state.
    let mut m = dual_g_model(&part(&[1, 1]), 2).unwrap();
    let last = m.rows.len() - 1;
    m.rows[last].top.iter_mut().for_each(|b| *b = 0);
    assert!(m.partition_function().unwrap().is_zero());
}

#[test]
fn dual_model_is_symmetric_in_x() {
    for lam in [part(&[2, 1]), part(&[2, 2]), part(&[3, 1])] {
        let z = dual_g_model(&lam, 3).unwrap().partition_function().unwrap();
        assert_eq!(z.swap(Var::x(1), Var::x(2)), z);
        assert_eq!(z.swap(Var::x(2), Var::x(3)), z);
    }
}

#[test]
fn alt_fermionic_without_beta() {
    for (n, m, l) in [(2, 2, 2), (3, 2, 2), (3, 1, 3), (2, 3, 1)] {
        let mut want = Polynomial::zero();
        for lam in partitions_in_box(l, m) {
            let w = t_weight(&lam, l, m) * g(&lam, n);
            let zl = alt_fermionic(n, m, l, &Polynomial::zero(), Some(&lam)).unwrap().partition_function().unwrap();
            assert_eq!(zl, w, "restricted λ={lam} n={n} m={m} ℓ={l}");
            want += w;
        }
        let z = alt_fermionic(n, m, l, &Polynomial::zero(), None).unwrap().partition_function().unwrap();
        assert_eq!(z, want, "n={n} m={m} ℓ={l}");
    }
}

#[test]
fn alt_fermionic_empty_shape() {
    let (n, m, l) = (2, 3, 2);
    let z = alt_fermionic(n, m, l, &Polynomial::zero(), Some(&Partition::empty())).unwrap().partition_function().unwrap();
    assert_eq!(z, Polynomial::t(1).pow(3) * Polynomial::t(2).pow(3));
}

#[test]
fn alt_fermionic_with_beta_square_case() {
    // With as many x-rows as paths the β-deformed count is
    // Σ_λ t^{m-λ} Σ_μ e_λ^μ(t) G_μ(x; β).
    let beta = Polynomial::var(Var::beta());
    for (n, m) in [(1, 2), (2, 2), (2, 1), (3, 1)] {
        let mut want = Polynomial::zero();
        for lam in partitions_in_box(n, m) {
            for mu in lam.subpartitions() {
                want += t_weight(&lam, n, m) * e_coeff(&lam, &mu) * gb(&mu, n);
            }
        }
        let z = alt_fermionic(n, m, n, &beta, None).unwrap().partition_function().unwrap();
        assert_eq!(z, want, "n={n} m={m}");
    }
}

#[test]
fn alt_fermionic_small_example() {
    // n = ℓ = 2, m = 2 in closed form.
    let beta = Polynomial::var(Var::beta());
    let (t1, t2) = (Polynomial::t(1), Polynomial::t(2));
    let mut want = Polynomial::zero();
    for lam in partitions_in_box(2, 2) {
        let mut c = Polynomial::zero();
        for mu in lam.subpartitions() {
            c += e_coeff(&lam, &mu) * gb(&mu, 2);
        }
        want += t1.pow(2 - lam.part(1) as u32) * t2.pow(2 - lam.part(2) as u32) * c;
    }
    let z = alt_fermionic(2, 2, 2, &beta, None).unwrap().partition_function().unwrap();
    assert_eq!(z, want);
}

#[test]
fn perturbed_table_breaks_integrability() {
    let bad = nilp().with_weight([0, 1, 0, 1], Polynomial::z(1) + Polynomial::one());
    let report = check_ybe(&bad, &nilp_r());
    assert!(!report.holds);
    assert!(report.counterexample().is_some());
}

#[test]
fn operator_basics() {
    let z = Polynomial::z(1);
    for m in 1..=4 {
        let a = row_operator(OpKind::A, &z, m).unwrap();
        let d = row_operator(OpKind::D, &z, m).unwrap();
        assert!(apply_to_basis(&a, 0).get(&0).unwrap().is_one());
        assert_eq!(apply_to_basis(&d, 0).get(&0).unwrap(), &z.pow(m as u32));
    }
    let b = row_operator(OpKind::B, &z, 3).unwrap();
    assert_eq!(compose(std::slice::from_ref(&b)).unwrap(), b);
    assert_eq!(b.compose(&RowOperator::identity(3)).unwrap(), b);
}

#[test]
fn operator_pairing_reproduces_dual_model() {
    for n in 1..=3 {
        for lam in partitions_in_box(3, 2) {
            let want = dual_g_model(&lam, n).unwrap().partition_function().unwrap();
            assert_eq!(dual_g_pairing(&lam, n).unwrap(), want, "λ={lam} n={n}");
        }
    }
}

#[test]
fn left_entry_pairing() {
    // Paths entering from the left pick up ∏ x_i^{ℓ+1-i}.
    for n in 1..=3 {
        for lam in partitions_in_box(n.min(2), 2) {
            if lam.is_empty() {
                continue;
            }
            let l = lam.len();
            let pre = Polynomial::monomial(Monomial::from_pairs((1..=l).map(|i| (Var::x(i as u32), (l + 1 - i) as i32))));
            assert_eq!(dual_g_pairing_left(&lam, n).unwrap(), pre * g(&lam, n), "λ={lam} n={n}");
        }
    }
}

#[test]
fn operator_relations_hold() {
    for m in 1..=4 {
        for fam in [RelationFamily::AB, RelationFamily::BD] {
            let r = verify_operator_relations(fam, &nilp(), m).unwrap();
            assert!(r.holds(), "{:?}", r.to_json());
        }
    }
    let r = verify_operator_relations(RelationFamily::ATildeSymmetry, &nilp(), 3).unwrap();
    assert!(r.holds(), "{:?}", r.to_json());
}

#[test]
fn perturbed_operators_break_relations() {
    let bad = nilp().with_weight([0, 1, 0, 1], Polynomial::z(1) + Polynomial::one());
    let r = verify_operator_relations(RelationFamily::AB, &bad, 3).unwrap();
    assert!(!r.holds());
}

