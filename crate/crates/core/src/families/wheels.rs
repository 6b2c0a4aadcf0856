use crate::bipoly::BiPoly;
use crate::error::{Error, Result};

/// `e1^n + e2^n` for the roots `e1, e2` of `t^2 - (1+x+y) t + xy`, through
/// `p_k = (1+x+y) p_{k-1} - xy p_{k-2}`, `p_0 = 2`.
pub fn wheel_power_sum(n: usize) -> BiPoly {
    let s = BiPoly::from_terms([(0, 0, 1), (1, 0, 1), (0, 1, 1)]);
    let prod = BiPoly::monomial(1, 1, 1);
    let mut prev = BiPoly::constant(2);
    let mut cur = s.clone();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&s * &cur) - &(&prod * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Tutte polynomial of the wheel `W_n`, `n >= 3`.
pub fn wheel(n: usize) -> Result<BiPoly> {
    if n < 3 {
        return Err(Error::InvalidSize(format!("a wheel needs at least 3 spokes, got {n}")));
    }
    let tail = BiPoly::from_terms([(1, 1, 1), (1, 0, -1), (0, 1, -1), (0, 0, -1)]);
    Ok(&wheel_power_sum(n) + &tail)
}

/// Tutte polynomial of the whirl `W^n`, `n >= 2`.
pub fn whirl(n: usize) -> Result<BiPoly> {
    if n < 2 {
        return Err(Error::InvalidSize(format!("a whirl needs rank at least 2, got {n}")));
    }
    Ok(&wheel_power_sum(n) - &BiPoly::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::{tutte_dc, tutte_subset};
    use crate::families::{relax_poly, uniform};
    use crate::matroid::{ElementSet, Graph, Matroid};
    use num_bigint::BigInt;

    #[test]
    fn examples() {
        assert_eq!(
            wheel(3).unwrap(),
            "x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3".parse().unwrap()
        );
        assert_eq!(
            wheel(4).unwrap(),
            "x^4 + 4*x^3 + 6*x^2 + 3*x + 4*x^2*y + 4*x*y^2 + 9*x*y + 3*y + 6*y^2 + 4*y^3 + y^4"
                .parse()
                .unwrap()
        );
        assert_eq!(whirl(2).unwrap(), uniform(2, 4).unwrap());
        assert!(matches!(wheel(2), Err(Error::InvalidSize(_))));
        assert!(matches!(whirl(1), Err(Error::InvalidSize(_))));
    }

    #[test]
    fn wheels_match_deletion_contraction() {
        for n in 3..=7 {
            let m = Matroid::graphic(Graph::wheel(n)).unwrap();
            let t = tutte_dc(&m).unwrap();
            assert_eq!(wheel(n).unwrap(), t, "n = {n}");
            let one = BigInt::from(1);
            assert_eq!(wheel(n).unwrap().eval_int(&one, &one), t.eval_int(&one, &one));
        }
    }

    #[test]
    fn whirl_is_relaxed_wheel() {
        for n in 3..=10 {
            assert_eq!(whirl(n).unwrap(), relax_poly(&wheel(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn whirl_matches_structure() {
        for n in 3..=5 {
            let m = Matroid::graphic(Graph::wheel(n)).unwrap();
            let rim: ElementSet = (0..n).collect();
            let w = m.relax(rim).unwrap();
            assert_eq!(whirl(n).unwrap(), tutte_subset(&w).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn self_duality() {
        for n in 3..=8 {
            let t = wheel(n).unwrap();
            assert_eq!(t.swap_xy(), t);
        }
    }
}
