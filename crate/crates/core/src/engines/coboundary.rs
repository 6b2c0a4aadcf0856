use num_bigint::BigInt;
use num_rational::BigRational;

use super::subset::corank_nullity_counts;
use crate::bipoly::{BiPoly, UniPoly};
use crate::error::Result;
use crate::matroid::{flats, rank_table, Matroid};

/// `chi_M(lambda) = sum_A (-1)^{|A|} lambda^{r(E) - r(A)}`.
pub fn char_poly(m: &Matroid) -> Result<UniPoly> {
    let counts = corank_nullity_counts(m)?;
    let r = m.full_rank();
    let mut coeffs = vec![BigInt::from(0); r + 1];
    for (z, row) in counts.iter().enumerate() {
        for (k, &c) in row.iter().enumerate() {
            // |A| = r(A) + n(A) = (r - z) + k
            let sign = if (r - z + k).is_multiple_of(2) { 1 } else { -1 };
            coeffs[z] += BigInt::from(c) * sign;
        }
    }
    Ok(UniPoly::from_int_coeffs(coeffs))
}

/// Crapo's coboundary polynomial `sum_X t^{|X|} chi_{M/X}(lambda)` over the
/// flats `X`, with `lambda` in the first slot and `t` in the second.
pub fn coboundary(m: &Matroid) -> Result<BiPoly> {
    let table = rank_table(m)?;
    let r = m.full_rank();
    let full = m.ground_set().bits();
    let mut out = BiPoly::zero();
    for x in flats(m)? {
        let comp = full & !x.bits();
        let t_exp = x.len() as u32;
        let mut acc = vec![0i64; r + 1];
        let mut sub = comp;
        loop {
            let rank = table[(sub | x.bits()) as usize] as usize;
            let sign = if sub.count_ones().is_multiple_of(2) { 1 } else { -1 };
            acc[r - rank] += sign;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & comp;
        }
        for (k, c) in acc.into_iter().enumerate() {
            if c != 0 {
                out += &BiPoly::monomial(c, k as u32, t_exp);
            }
        }
    }
    Ok(out)
}

/// `chi_bar(lambda, t) = (t-1)^r T((lambda + t - 1)/(t - 1), t)`.
pub fn coboundary_from_tutte(t: &BiPoly, rank: u32) -> Result<BiPoly> {
    let one = BiPoly::one();
    let tm1 = &BiPoly::y() - &one;
    let xnum = &(&BiPoly::x() + &BiPoly::y()) - &one;
    t.subst_rational(&xnum, &tm1, &BiPoly::y(), &one, &tm1.pow(rank))
}

/// `T(x, y) = chi_bar((x-1)(y-1), y) / (y-1)^r`.
pub fn tutte_from_coboundary(c: &BiPoly, rank: u32) -> Result<BiPoly> {
    let one = BiPoly::one();
    let ym1 = &BiPoly::y() - &one;
    let lam = &(&BiPoly::x() - &one) * &ym1;
    c.compose(&lam, &BiPoly::y()).exact_div(&ym1.pow(rank))
}

/// Tutte polynomial through the flat expansion of the coboundary polynomial.
pub fn tutte_coboundary(m: &Matroid) -> Result<BiPoly> {
    tutte_from_coboundary(&coboundary(m)?, m.full_rank() as u32)
}

/// `chi_M(lambda)` read off the coboundary polynomial at `t = 0`.
pub fn char_poly_from_coboundary(c: &BiPoly) -> UniPoly {
    let mut out = UniPoly::zero();
    for ((i, j), v) in c.terms() {
        if j == 0 {
            out = &out + &UniPoly::monomial(BigRational::from_integer(v.clone()), i);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::tutte_subset;
    use crate::matroid::{GfMatrix, Graph};

    fn pg22() -> Matroid {
        Matroid::linear(
            GfMatrix::identity_augmented(2, &[vec![1, 1, 0, 1], vec![1, 0, 1, 1], vec![0, 1, 1, 1]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn char_poly_of_fano() {
        // (l - 1)(l - 2)(l - 4)
        assert_eq!(char_poly(&pg22()).unwrap(), UniPoly::from_int_coeffs([-8, 14, -7, 1]));
    }

    #[test]
    fn char_poly_of_loop_vanishes() {
        assert!(char_poly(&Matroid::uniform(0, 1).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn triangle_chromatic() {
        let chi = char_poly(&Matroid::graphic(Graph::cycle(3)).unwrap()).unwrap();
        let chromatic = &chi * &UniPoly::var();
        for k in 3..6i64 {
            let proper = k * (k - 1) * (k - 2);
            assert_eq!(
                chromatic.eval(&BigRational::from_integer(k.into())),
                BigRational::from_integer(proper.into())
            );
        }
    }

    #[test]
    fn coboundary_of_coloop() {
        let c = coboundary(&Matroid::uniform(1, 1).unwrap()).unwrap();
        assert_eq!(c, "x - 1 + y".parse().unwrap());
    }

    #[test]
    fn conversions_round_trip_on_fano() {
        let m = pg22();
        let t = tutte_subset(&m).unwrap();
        let c = coboundary(&m).unwrap();
        assert_eq!(coboundary_from_tutte(&t, 3).unwrap(), c);
        assert_eq!(tutte_from_coboundary(&c, 3).unwrap(), t);
        assert_eq!(char_poly_from_coboundary(&c), char_poly(&m).unwrap());
    }
}
