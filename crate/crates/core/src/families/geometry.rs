use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::bipoly::BiPoly;
use crate::engines::tutte_from_coboundary;
use crate::error::{Error, Result};

/// Largest number of points accepted for `PG(r-1, q)` and `AG(r, q)`.
pub const GEOMETRY_SIZE_LIMIT: u64 = 1024;

/// Gaussian coefficient `[m k]_q`.
pub fn gaussian(m: u32, k: u32, q: u64) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    let q = BigInt::from(q);
    let qm = Pow::pow(&q, m);
    let qk = Pow::pow(&q, k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        let qi = Pow::pow(&q, i);
        num *= &qm - &qi;
        den *= &qk - &qi;
    }
    num / den
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        return true;
    }
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    rest == 1
}

fn check_q(q: u64) -> Result<()> {
    if is_prime_power(q) {
        Ok(())
    } else {
        Err(Error::NotPrimePower(q))
    }
}

fn u32_exponent(v: &BigInt) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::SizeBudgetExceeded(format!("exponent {v} is too large")))
}

fn check_points(points: &BigInt) -> Result<()> {
    if *points > BigInt::from(GEOMETRY_SIZE_LIMIT) {
        return Err(Error::SizeBudgetExceeded(format!(
            "geometry with {points} points exceeds the limit of {GEOMETRY_SIZE_LIMIT}"
        )));
    }
    Ok(())
}

/// `prod_{i < k} (lambda - q^i)` with `lambda` in the first slot.
fn falling(q: u64, k: u32) -> BiPoly {
    (0..k)
        .map(|i| &BiPoly::x() - &BiPoly::constant(Pow::pow(BigInt::from(q), i)))
        .product()
}

/// Coboundary polynomial of `PG(r-1, q)`.
fn projective_coboundary(r: u32, q: u64) -> Result<BiPoly> {
    let mut out = BiPoly::zero();
    for k in 0..=r {
        let size = u32_exponent(&gaussian(k, 1, q))?;
        out += &falling(q, r - k).scale(gaussian(r, k, q)).shift(0, size);
    }
    Ok(out)
}

/// Tutte polynomial of the projective geometry `PG(dim, q)`, of rank `dim + 1`.
pub fn projective(dim: u32, q: u64) -> Result<BiPoly> {
    check_q(q)?;
    if dim == 0 {
        return Err(Error::InvalidSize("projective dimension must be at least 1".into()));
    }
    let r = dim + 1;
    check_points(&gaussian(r, 1, q))?;
    tutte_from_coboundary(&projective_coboundary(r, q)?, r)
}

/// Coboundary polynomial of `AG(dim, q)`. Every flat of rank `k + 1` is a
/// copy of `AG(k, q)` whose contraction simplifies to `PG(dim - k - 1, q)`;
/// the characteristic polynomial follows from `sum_F chi_{M/F} = lambda^r`.
fn affine_coboundary(dim: u32, q: u64) -> Result<BiPoly> {
    let mut flats = BiPoly::zero();
    let mut at_one = BiPoly::zero();
    for k in 0..=dim {
        let count = Pow::pow(BigInt::from(q), dim - k) * gaussian(dim, k, q);
        let term = falling(q, dim - k).scale(count);
        let size = u32_exponent(&Pow::pow(BigInt::from(q), k))?;
        flats += &term.shift(0, size);
        at_one += &term;
    }
    let chi = &BiPoly::monomial(1, dim + 1, 0) - &at_one;
    Ok(&chi + &flats)
}

/// Tutte polynomial of the affine geometry `AG(dim, q)`, of rank `dim + 1`.
pub fn affine(dim: u32, q: u64) -> Result<BiPoly> {
    check_q(q)?;
    if dim == 0 {
        return Err(Error::InvalidSize("affine dimension must be at least 1".into()));
    }
    check_points(&Pow::pow(BigInt::from(q), dim))?;
    tutte_from_coboundary(&affine_coboundary(dim, q)?, dim + 1)
}

/// Tutte polynomial of a `q`-cone over a rank-`r` simple `GF(q)`-representable
/// matroid with Tutte polynomial `t_m`:
///
/// `y (y^q-1)^r / (y-1)^{r+1} T_M((x-1)(y-1)/(y^q-1) + 1, y^q)
///  + q^r (xy-x-y) / (y-1) T_M((x-1)/q + 1, y)`.
///
/// A polynomial that is not of this kind surfaces as a non-exact division.
pub fn q_cone(t_m: &BiPoly, r: u32, q: u64) -> Result<BiPoly> {
    check_q(q)?;
    let q32 = u32::try_from(q).map_err(|_| Error::SizeBudgetExceeded(format!("q = {q} is too large")))?;
    let one = BiPoly::one();
    let x = BiPoly::x();
    let ym1 = &BiPoly::y() - &one;
    let xm1 = &x - &one;
    let yq = BiPoly::monomial(1, 0, q32);
    let yqm1 = &yq - &one;
    let s1 = t_m.subst_rational(&(&(&xm1 * &ym1) + &yqm1), &yqm1, &yq, &one, &yqm1.pow(r))?;
    let qc = BiPoly::constant(q);
    let s2 = t_m.subst_rational(&(&xm1 + &qc), &qc, &BiPoly::y(), &one, &qc.pow(r))?;
    let det = BiPoly::from_terms([(1, 1, 1), (1, 0, -1), (0, 1, -1)]);
    let numer = &(&BiPoly::y() * &s1) + &(&(&det * &ym1.pow(r)) * &s2);
    numer.exact_div(&ym1.pow(r + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::{char_poly_from_coboundary, coboundary_from_tutte, tutte_subset};
    use crate::families::{sparse_paving, uniform};
    use crate::matroid::{GfMatrix, Matroid};
    use num_rational::BigRational;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn gaussian_values() {
        assert_eq!(gaussian(3, 1, 2), BigInt::from(7));
        assert_eq!(gaussian(5, 0, 3), BigInt::from(1));
        assert_eq!(gaussian(0, 2, 3), BigInt::from(0));
        assert_eq!(gaussian(4, 2, 3), BigInt::from(130));
        assert_eq!(gaussian(4, 2, 2), BigInt::from(35));
    }

    #[test]
    fn prime_powers() {
        let yes = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 121];
        let no = [0, 1, 6, 10, 12, 15, 18, 100];
        assert!(yes.iter().all(|&q| is_prime_power(q)));
        assert!(no.iter().all(|&q| !is_prime_power(q)));
        assert!(matches!(projective(2, 6), Err(Error::NotPrimePower(6))));
        assert!(matches!(affine(2, 10), Err(Error::NotPrimePower(10))));
        assert!(matches!(q_cone(&BiPoly::x(), 1, 1), Err(Error::NotPrimePower(1))));
    }

    #[test]
    fn projective_planes() {
        let fano = p("x^3 + 4*x^2 + 3*x + 7*x*y + 3*y + 6*y^2 + 3*y^3 + y^4");
        assert_eq!(projective(2, 2).unwrap(), fano);
        let pg23 = p(
            "x^3 + 10*x^2 + 13*x*y^2 + 26*x*y + 16*x + 16*y + 32*y^2 + 36*y^3 + 28*y^4 + 21*y^5 \
                      + 15*y^6 + 10*y^7 + 6*y^8 + 3*y^9 + y^10",
        );
        assert_eq!(projective(2, 3).unwrap(), pg23);
        assert_eq!(projective(1, 3).unwrap(), uniform(2, 4).unwrap());
    }

    #[test]
    fn projective_coboundary_display() {
        let lam = BiPoly::x();
        let f = |c: i64| &lam - &BiPoly::constant(c);
        let expected = &(&(&(&f(1) * &f(3)) * &f(9)) + &(&f(1) * &f(3)).scale(13).shift(0, 1))
            + &(&f(1).scale(13).shift(0, 4) + &BiPoly::monomial(1, 0, 13));
        assert_eq!(projective_coboundary(3, 3).unwrap(), expected);
    }

    #[test]
    fn affine_planes() {
        let ag23 = p("x^3 + 6*x^2 + 12*x*y + 9*x + 9*y + 15*y^2 + 10*y^3 + 6*y^4 + 3*y^5 + y^6");
        assert_eq!(affine(2, 3).unwrap(), ag23);
        assert_eq!(affine(2, 3).unwrap(), sparse_paving(3, 9, 12).unwrap());
        assert_eq!(affine(1, 3).unwrap(), uniform(2, 3).unwrap());
        // AG(3, 2) is sparse paving with 14 circuit-hyperplanes.
        assert_eq!(affine(3, 2).unwrap(), sparse_paving(4, 8, 14).unwrap());
    }

    #[test]
    fn affine_characteristic_polynomial() {
        let c = affine_coboundary(2, 3).unwrap();
        let chi = char_poly_from_coboundary(&c);
        let expected = crate::bipoly::UniPoly::from_int_coeffs([-16, 24, -9, 1]);
        assert_eq!(chi, expected);
    }

    fn pg_matrix(q: u32) -> Matroid {
        // Columns: one representative of every projective point of GF(q)^3.
        let mut cols = Vec::new();
        for a in 0..q as i64 {
            for b in 0..q as i64 {
                for c in 0..q as i64 {
                    let v = [a, b, c];
                    if let Some(first) = v.iter().find(|&&e| e != 0) {
                        if *first == 1 {
                            cols.push(v);
                        }
                    }
                }
            }
        }
        let rows: Vec<Vec<i64>> = (0..3).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        Matroid::linear(GfMatrix::from_signed_rows(q, &rows).unwrap()).unwrap()
    }

    #[test]
    fn geometries_match_subset_expansion() {
        assert_eq!(projective(2, 2).unwrap(), tutte_subset(&pg_matrix(2)).unwrap());
        assert_eq!(projective(2, 3).unwrap(), tutte_subset(&pg_matrix(3)).unwrap());
        // AG(2, 3): points with last coordinate 1.
        let mut rows = vec![Vec::new(); 3];
        for a in 0..3 {
            for b in 0..3 {
                rows[0].push(a);
                rows[1].push(b);
                rows[2].push(1);
            }
        }
        let ag = Matroid::linear(GfMatrix::from_signed_rows(3, &rows).unwrap()).unwrap();
        assert_eq!(affine(2, 3).unwrap(), tutte_subset(&ag).unwrap());
    }

    #[test]
    fn cone_of_three_point_line() {
        let line = p("x^2 + x + y");
        assert_eq!(q_cone(&line, 2, 2).unwrap(), projective(2, 2).unwrap());
        for (r, q) in [(2u32, 2u64), (2, 3)] {
            let base = projective(r - 1, q).unwrap();
            assert_eq!(
                q_cone(&base, r, q).unwrap(),
                projective(r, q).unwrap(),
                "r = {r}, q = {q}"
            );
        }
        assert!(matches!(q_cone(&p("x^3 + y"), 2, 2), Err(Error::NonExactDivision(_))));
    }

    #[test]
    fn cone_characteristic_polynomial() {
        let line = p("x^2 + x + y");
        let cone = q_cone(&line, 2, 2).unwrap();
        let chi_n = char_poly_from_coboundary(&coboundary_from_tutte(&cone, 3).unwrap());
        let chi_m = char_poly_from_coboundary(&coboundary_from_tutte(&line, 2).unwrap());
        let q = BigRational::from_integer(BigInt::from(2));
        for l in 2..=5 {
            let lam = BigRational::from_integer(BigInt::from(l));
            let rhs = (&lam - BigRational::one()) * q.clone() * q.clone() * chi_m.eval(&(&lam / &q));
            assert_eq!(chi_n.eval(&lam), rhs, "lambda = {l}");
        }
    }
}
