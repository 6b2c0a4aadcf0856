use crate::bipoly::BiPoly;
use crate::error::{Error, Result};

fn xm1() -> BiPoly {
    &BiPoly::x() - &BiPoly::one()
}

fn ym1() -> BiPoly {
    &BiPoly::y() - &BiPoly::one()
}

/// `xy - x - y`.
fn det() -> BiPoly {
    BiPoly::from_terms([(1, 1, 1), (1, 0, -1), (0, 1, -1)])
}

/// Direct sum: the product of the parts.
pub fn one_sum(polys: &[BiPoly]) -> BiPoly {
    polys.iter().cloned().product()
}

/// 2-sum from the pointed minors `M1/p, M1\p, M2/p, M2\p`:
/// `[(x-1)ac - ad - bc + (y-1)bd] / (xy - x - y)`.
pub fn two_sum_poly(
    m1_contract: &BiPoly,
    m1_delete: &BiPoly,
    m2_contract: &BiPoly,
    m2_delete: &BiPoly,
) -> Result<BiPoly> {
    let (a, b, c, d) = (m1_contract, m1_delete, m2_contract, m2_delete);
    let numer = &(&(&(&xm1() * a) * c) - &(a * d)) - &(b * c);
    let numer = &numer + &(&(&ym1() * b) * d);
    numer.exact_div(&det())
}

/// Delta-sum along a triangle `{p, s, q}` from the five minors of each side,
/// ordered `\p\s\q, \p/s\q, /p\s\q, /p/s/q, \p\s/q`.
pub fn delta_sum_poly(q: &[BiPoly; 5], p: &[BiPoly; 5]) -> Result<BiPoly> {
    let d = det();
    let one = BiPoly::one();
    let two = BiPoly::constant(2);
    let omy = -&ym1();
    let omx = -&xm1();
    // The coupling matrix scaled by `xy - x - y`.
    let c: [[BiPoly; 5]; 5] = [
        [omy.pow(2), omy.clone(), omy.clone(), two.clone(), omy.clone()],
        [omy.clone(), d.clone(), one.clone(), omx.clone(), one.clone()],
        [omy.clone(), one.clone(), d.clone(), omx.clone(), one.clone()],
        [two, omx.clone(), omx.clone(), omx.pow(2), omx.clone()],
        [omy, one.clone(), one.clone(), omx, d.clone()],
    ];
    let mut numer = BiPoly::zero();
    for (i, row) in c.iter().enumerate() {
        let inner: BiPoly = row.iter().zip(p).map(|(cij, pj)| cij * pj).sum();
        numer += &(&q[i] * &inner);
    }
    let denom = &d * &(&d - &one);
    numer.exact_div(&denom)
}

fn check_k(k: usize) -> Result<u32> {
    if k == 0 {
        return Err(Error::InvalidParameters("the multiplicity k must be at least 1".into()));
    }
    Ok(k as u32)
}

/// `k`-thickening of a rank-`r` matroid:
/// `(1+...+y^{k-1})^r T((y^{k-1}+...+y+x)/(1+...+y^{k-1}), y^k)`.
pub fn thicken_poly(t: &BiPoly, r: usize, k: usize) -> Result<BiPoly> {
    let k = check_k(k)?;
    let g = BiPoly::geometric_y(k);
    let xnum = &(&g - &BiPoly::one()) + &BiPoly::x();
    t.subst_rational(&xnum, &g, &BiPoly::monomial(1, 0, k), &BiPoly::one(), &g.pow(r as u32))
}

/// `k`-stretch of a matroid whose dual has rank `r_star`.
pub fn stretch_poly(t: &BiPoly, r_star: usize, k: usize) -> Result<BiPoly> {
    let k = check_k(k)?;
    let g = BiPoly::geometric_x(k);
    let ynum = &(&g - &BiPoly::one()) + &BiPoly::y();
    t.subst_rational(
        &BiPoly::monomial(1, k, 0),
        &BiPoly::one(),
        &ynum,
        &g,
        &g.pow(r_star as u32),
    )
}

/// Inputs of the tensor product `M (x) N_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorInputs {
    pub t_m: BiPoly,
    pub rank: usize,
    pub size: usize,
    pub t_n_delete: BiPoly,
    pub t_n_contract: BiPoly,
}

impl TensorInputs {
    /// The polynomials `(f, g)` solving `(x-1)f + g = T(N\d)` and
    /// `f + (y-1)g = T(N/d)`.
    pub fn solve(&self) -> Result<(BiPoly, BiPoly)> {
        let (a, b) = (&self.t_n_delete, &self.t_n_contract);
        let f = (&(&ym1() * a) - b).exact_div(&det())?;
        let g = (&(&xm1() * b) - a).exact_div(&det())?;
        Ok((f, g))
    }
}

/// `f^{|E|-r} g^r T_M(T(N\d)/g, T(N/d)/f)`.
pub fn tensor_poly(inp: &TensorInputs) -> Result<BiPoly> {
    if inp.rank > inp.size {
        return Err(Error::InvalidRank {
            rank: inp.rank,
            size: inp.size,
        });
    }
    let (f, g) = inp.solve()?;
    let clear = &g.pow(inp.rank as u32) * &f.pow((inp.size - inp.rank) as u32);
    inp.t_m
        .subst_rational(&inp.t_n_delete, &g, &inp.t_n_contract, &f, &clear)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::{tutte_dc, tutte_subset};
    use crate::families::{cycle, multilink, uniform};
    use crate::matroid::{GfMatrix, Graph, Matroid, PointedMatroid};

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn one_sums() {
        assert_eq!(one_sum(&[BiPoly::x(), BiPoly::y()]), BiPoly::monomial(1, 1, 1));
        assert_eq!(one_sum(&[p("x + y"), p("x + y")]), p("x + y").pow(2));
        assert_eq!(one_sum(&[p("x^2 + y")]), p("x^2 + y"));
        assert_eq!(one_sum(&[]), BiPoly::one());
    }

    #[test]
    fn two_sum_r6() {
        let c = p("y^2 + y + x");
        let d = p("x^2 + x + y");
        let r6 = two_sum_poly(&c, &d, &c, &d).unwrap();
        assert_eq!(r6, p("x^3 + 3*x^2 + 4*x + 2*x*y + 4*y + 3*y^2 + y^3"));
    }

    #[test]
    fn two_sum_is_symmetric_and_has_identity() {
        let (a, b) = (p("y^2 + y + x"), p("x^2 + x + y"));
        let (c, d) = (p("x + y + y^2"), p("x^2 + x*y + y"));
        assert_eq!(two_sum_poly(&a, &b, &c, &d), two_sum_poly(&c, &d, &a, &b));
        let k4_contract = p("x^2 + x + 2*x*y + y + 2*y^2 + y^3");
        let k4_delete = p("x^3 + 2*x^2 + x + 2*x*y + y + y^2");
        let k4 = p("x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3");
        assert_eq!(
            two_sum_poly(&k4_contract, &k4_delete, &BiPoly::y(), &BiPoly::x()).unwrap(),
            k4
        );
        assert!(two_sum_poly(&BiPoly::one(), &BiPoly::zero(), &BiPoly::one(), &BiPoly::zero()).is_err());
    }

    #[test]
    fn two_sum_matches_structure() {
        let left = Matroid::graphic(Graph::complete(4)).unwrap();
        let right = Matroid::uniform(2, 5).unwrap();
        for (lp, rp) in [(0, 0), (3, 2), (5, 4)] {
            let l = PointedMatroid::new(left.clone(), lp).unwrap();
            let r = PointedMatroid::new(right.clone(), rp).unwrap();
            let expected = tutte_subset(&Matroid::two_sum(&l, &r).unwrap()).unwrap();
            let got = two_sum_poly(
                &tutte_subset(&left.contract(lp).unwrap()).unwrap(),
                &tutte_subset(&left.delete(lp).unwrap()).unwrap(),
                &tutte_subset(&right.contract(rp).unwrap()).unwrap(),
                &tutte_subset(&right.delete(rp).unwrap()).unwrap(),
            )
            .unwrap();
            assert_eq!(got, expected);
        }
    }

    fn f7_vectors() -> ([BiPoly; 5], [BiPoly; 5]) {
        let u34 = p("x^3 + x^2 + x + y");
        let xy2 = p("x + y").pow(2);
        let u14 = p("y^3 + y^2 + y + x");
        let f7 = [u34.clone(), xy2.clone(), xy2.clone(), u14.clone(), xy2.clone()];
        let f7m = [u34, p("x^2 + x + x*y + y + y^2"), xy2.clone(), u14, xy2];
        (f7, f7m)
    }

    #[test]
    fn delta_sum_f8() {
        let (q, pv) = f7_vectors();
        let f8 = delta_sum_poly(&q, &pv).unwrap();
        assert_eq!(
            f8,
            p("x^4 + 4*x^3 + 10*x^2 + 8*x + 12*x*y + 8*y + 10*y^2 + 4*y^3 + y^4")
        );
    }

    fn minors(m: &Matroid, t: [usize; 3]) -> [BiPoly; 5] {
        use crate::matroid::ElementSet;
        let [pp, s, q] = t;
        let set = |v: &[usize]| v.iter().copied().collect::<ElementSet>();
        let mk = |del: &[usize], con: &[usize]| tutte_subset(&m.minor(set(del), set(con)).unwrap()).unwrap();
        [
            mk(&[pp, s, q], &[]),
            mk(&[pp, q], &[s]),
            mk(&[s, q], &[pp]),
            mk(&[], &[pp, s, q]),
            mk(&[pp, s], &[q]),
        ]
    }

    #[test]
    fn delta_sum_matches_structure() {
        let fano = GfMatrix::from_signed_rows(
            2,
            &[
                vec![1, 0, 0, 1, 1, 0, 1],
                vec![0, 1, 0, 1, 0, 1, 1],
                vec![0, 0, 1, 0, 1, 1, 1],
            ],
        )
        .unwrap();
        let f7 = Matroid::linear(fano).unwrap();
        // Columns 0, 1, 3 form a triangle.
        let t = [0, 3, 1];
        assert!(f7.is_circuit([0, 1, 3].into_iter().collect()));
        let sum = Matroid::delta_sum(&f7, &f7, t, t).unwrap();
        let expected = tutte_subset(&sum).unwrap();
        assert_eq!(delta_sum_poly(&minors(&f7, t), &minors(&f7, t)).unwrap(), expected);
        let k4 = Matroid::graphic(Graph::complete(4)).unwrap();
        let tri = [0, 1, 3];
        assert!(k4.is_circuit(tri.into_iter().collect()));
        let sum = Matroid::delta_sum(&k4, &k4, tri, tri).unwrap();
        assert_eq!(
            delta_sum_poly(&minors(&k4, tri), &minors(&k4, tri)).unwrap(),
            tutte_dc(&sum).unwrap()
        );
    }

    #[test]
    fn thickening_and_stretch() {
        assert_eq!(thicken_poly(&BiPoly::x(), 1, 2).unwrap(), p("x + y"));
        let k23 = tutte_dc(&Matroid::graphic(Graph::complete_bipartite(2, 3)).unwrap()).unwrap();
        assert_eq!(stretch_poly(&multilink(3).unwrap(), 2, 2).unwrap(), k23);
        let c4 = cycle(4).unwrap();
        assert_eq!(thicken_poly(&c4, 3, 1).unwrap(), c4);
        assert!(matches!(thicken_poly(&c4, 3, 0), Err(Error::InvalidParameters(_))));
        let k4 = Matroid::graphic(Graph::complete(4)).unwrap();
        let t = tutte_dc(&k4).unwrap();
        for k in 2..=3 {
            let thick = tutte_dc(&k4.thicken(k).unwrap()).unwrap();
            assert_eq!(thicken_poly(&t, 3, k).unwrap(), thick);
            let stretched = tutte_dc(&k4.stretch(k).unwrap()).unwrap();
            assert_eq!(stretch_poly(&t, 3, k).unwrap(), stretched);
        }
    }

    #[test]
    fn tensor_identity_and_specializations() {
        let t = p("x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3");
        let id = TensorInputs {
            t_m: t.clone(),
            rank: 3,
            size: 6,
            t_n_delete: BiPoly::x(),
            t_n_contract: BiPoly::y(),
        };
        assert_eq!(id.solve().unwrap(), (BiPoly::one(), BiPoly::one()));
        assert_eq!(tensor_poly(&id).unwrap(), t);
        for k in 1..=3usize {
            // U_{1,k+1} pointed: deletion U_{1,k}, contraction U_{0,k}.
            let thick = TensorInputs {
                t_n_delete: uniform(1, k).unwrap(),
                t_n_contract: uniform(0, k).unwrap(),
                ..id.clone()
            };
            assert_eq!(tensor_poly(&thick).unwrap(), thicken_poly(&t, 3, k).unwrap());
            // U_{k,k+1} pointed: deletion U_{k,k}, contraction U_{k-1,k}.
            let stretch = TensorInputs {
                t_n_delete: uniform(k, k).unwrap(),
                t_n_contract: uniform(k - 1, k).unwrap(),
                ..id.clone()
            };
            assert_eq!(tensor_poly(&stretch).unwrap(), stretch_poly(&t, 3, k).unwrap());
        }
    }

    #[test]
    fn tensor_matches_structure() {
        let m = Matroid::uniform(2, 4).unwrap();
        let n = Matroid::graphic(Graph::complete(4)).unwrap();
        let d = 2;
        let built = m.tensor(&PointedMatroid::new(n.clone(), d).unwrap()).unwrap();
        let inp = TensorInputs {
            t_m: tutte_subset(&m).unwrap(),
            rank: 2,
            size: 4,
            t_n_delete: tutte_subset(&n.delete(d).unwrap()).unwrap(),
            t_n_contract: tutte_subset(&n.contract(d).unwrap()).unwrap(),
        };
        assert_eq!(tensor_poly(&inp).unwrap(), tutte_dc(&built).unwrap());
    }
}
