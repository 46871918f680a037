use super::poly::Polynomial;
use super::var::Var;

/// The atoms `x1, ..., xn`.
pub fn x_atoms(n: usize) -> Vec<Polynomial> {
    (1..=n as u32).map(Polynomial::x).collect()
}

/// The atoms `t_lo, ..., t_hi` (empty when `hi < lo`).
pub fn t_atoms(lo: usize, hi: usize) -> Vec<Polynomial> {
    (lo..=hi).filter(|&i| i >= 1).map(|i| Polynomial::var(Var::t(i as u32))).collect()
}

/// `h_0, ..., h_kmax` of the given atoms.
pub fn h_table(kmax: usize, atoms: &[Polynomial]) -> Vec<Polynomial> {
    let mut h = vec![Polynomial::zero(); kmax + 1];
    h[0] = Polynomial::one();
    for a in atoms {
        // h_k(A + a) = h_k(A) + a h_{k-1}(A + a)
        for k in 1..=kmax {
            let add = a * &h[k - 1];
            h[k] += &add;
        }
    }
    h
}

/// Complete homogeneous symmetric polynomial `h_k` of the atoms; zero for `k < 0`.
pub fn hk(k: i64, atoms: &[Polynomial]) -> Polynomial {
    if k < 0 {
        return Polynomial::zero();
    }
    h_table(k as usize, atoms).pop().unwrap()
}

/// Elementary symmetric polynomial `e_k` of the atoms; zero outside `0..=len`.
pub fn ek(k: i64, atoms: &[Polynomial]) -> Polynomial {
    if k < 0 || k as usize > atoms.len() {
        return Polynomial::zero();
    }
    let k = k as usize;
    let mut e = vec![Polynomial::zero(); k + 1];
    e[0] = Polynomial::one();
    for a in atoms {
        for j in (1..=k).rev() {
            let add = a * &e[j - 1];
            e[j] += &add;
        }
    }
    e.pop().unwrap()
}

/// Coefficient of `u^i` in `prod(1 - t u) / prod(1 - x u)`, i.e. `S_i(x - t)`.
pub fn gen_series_coeff(i: i64, xs: &[Polynomial], ts: &[Polynomial]) -> Polynomial {
    if i < 0 {
        return Polynomial::zero();
    }
    let h = h_table(i as usize, xs);
    let neg: Vec<Polynomial> = ts.iter().map(|t| -t).collect();
    let mut acc = Polynomial::zero();
    for m in 0..=(i.min(ts.len() as i64)) {
        acc += &(ek(m, &neg) * &h[(i - m) as usize]);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial as p;

    #[test]
    fn small_values() {
        assert_eq!(hk(2, &x_atoms(2)), p("x1^2 + x1*x2 + x2^2").unwrap());
        assert_eq!(ek(2, &t_atoms(1, 3)), p("t1*t2 + t1*t3 + t2*t3").unwrap());
        assert!(hk(-1, &x_atoms(3)).is_zero());
        assert!(ek(4, &x_atoms(3)).is_zero());
        assert!(hk(0, &[]).is_one());
    }

    #[test]
    fn series_coefficients() {
        let xs = x_atoms(1);
        let ts = t_atoms(1, 1);
        assert!(gen_series_coeff(0, &xs, &ts).is_one());
        assert_eq!(gen_series_coeff(1, &x_atoms(3), &t_atoms(1, 2)), hk(1, &x_atoms(3)) - ek(1, &t_atoms(1, 2)));
        assert_eq!(gen_series_coeff(2, &xs, &ts), p("x1^2 - t1*x1").unwrap());
    }
}
