//! The digraph-family formulas, each a short composition of series
//! operations.
//!
//! Conventions at `n = 0`: every family GGF has constant term 1 except the
//! strongly connected EGF and the initially connected GGF, which are
//! log-derived and start at 0.

use crate::binomial::choose2;
use crate::coeff::{CoeffMode, CoeffPoly};
use crate::error::{Error, Result};
use crate::series::{Series, SeriesKind};

/// EGF of all graphs: `g_n = (1+w)^C(n,2)`.
pub fn base_graph_egf(order: usize, mode: &CoeffMode) -> Series {
    let coeffs = (0..=order)
        .map(|n| mode.one_plus_w_pow(choose2(n as u32)))
        .collect();
    Series::from_coeffs(SeriesKind::Egf, mode.clone(), coeffs)
}

/// GGF of edgeless graphs: numerator 1 at every order.
pub fn base_set_ggf(order: usize, mode: &CoeffMode) -> Series {
    Series::from_coeffs(SeriesKind::Ggf, mode.clone(), vec![CoeffPoly::one(); order + 1])
}

/// GGF of all digraphs: numerator `(1+w)^{n(n-1)}`.
pub fn base_digraph_ggf(order: usize, mode: &CoeffMode) -> Series {
    let coeffs = (0..=order)
        .map(|n| mode.one_plus_w_pow(2 * choose2(n as u32)))
        .collect();
    Series::from_coeffs(SeriesKind::Ggf, mode.clone(), coeffs)
}

/// GGF of DAGs: `1 / Set(-z, w)`.
pub fn dag_ggf(order: usize, mode: &CoeffMode) -> Series {
    base_set_ggf(order, mode)
        .scale_z(&CoeffPoly::from_int(-1))
        .recip()
        .expect("Set(-z) has constant term 1")
}

/// GGF of DAGs with `u` marking the sources: `Set((u-1)z, w) / Set(-z, w)`.
pub fn dag_sources_ggf(order: usize, mode: &CoeffMode) -> Series {
    base_set_ggf(order, mode)
        .scale_z(&mode.u_linear(1, -1))
        .mul(&dag_ggf(order, mode))
        .expect("same kind and mode by construction")
}

/// EGF of strongly connected digraphs: `-log(G (.) 1/G)`.
pub fn scc_egf(order: usize, mode: &CoeffMode) -> Series {
    let g = base_graph_egf(order, mode);
    let inner = g
        .hadamard(&g.recip().expect("G has constant term 1"))
        .expect("both operands are EGFs");
    inner
        .log()
        .expect("Hadamard square has constant term 1")
        .negate()
}

fn check_scc_family(a: &Series, require_u_free: bool) -> Result<()> {
    if a.kind() != SeriesKind::Egf {
        return Err(Error::KindMismatch);
    }
    if !a.coeff(0).is_zero() {
        return Err(Error::EmptyObjectInFamily);
    }
    if require_u_free && !a.mode().is_numeric() && a.has_u() {
        return Err(Error::MarkerCollision);
    }
    Ok(())
}

/// GGF of digraphs whose SCCs all belong to the family with EGF `a`:
/// `1 / (Set (.) e^{-A})`.
pub fn restricted_scc_ggf(a: &Series, order: usize) -> Result<Series> {
    check_scc_family(a, false)?;
    let order = order.min(a.order());
    let exp = a.truncated(order).negate().exp()?;
    exp.retag_family_to_ggf()?.recip()
}

/// Same family with `u` marking the source-like components:
/// `(Set (.) e^{(u-1)A}) * D_A`.
pub fn restricted_scc_sources_ggf(a: &Series, order: usize) -> Result<Series> {
    check_scc_family(a, true)?;
    let order = order.min(a.order());
    let marked = a
        .truncated(order)
        .scale_coeffs(&a.mode().u_linear(1, -1))
        .exp()?
        .retag_family_to_ggf()?;
    marked.mul(&restricted_scc_ggf(a, order)?)
}

/// GGF of all digraphs with `u` marking the SCCs that belong to the
/// subfamily with EGF `b`: `1 / (Set (.) e^{(1-u)B - SCC})`.
pub fn marked_subfamily_ggf(b: &Series, order: usize) -> Result<Series> {
    check_scc_family(b, true)?;
    let order = order.min(b.order());
    let scc = scc_egf(order, b.mode());
    let inner = b
        .truncated(order)
        .scale_coeffs(&b.mode().u_linear(-1, 1))
        .add(&scc.negate())?;
    inner.exp()?.retag_family_to_ggf()?.recip()
}

/// GGF of initially connected digraphs, equal as a formal series to the
/// EGF of connected graphs.
pub fn initially_connected_ggf(order: usize, mode: &CoeffMode) -> Series {
    base_graph_egf(order, mode)
        .log()
        .expect("G has constant term 1")
        .reinterpret_value_egf_as_ggf()
}

/// The EGF `z` of the single-vertex SCC family.
pub fn single_vertex_egf(order: usize, mode: &CoeffMode) -> Series {
    let mut coeffs = vec![CoeffPoly::zero(); order + 1];
    if order >= 1 {
        coeffs[1] = CoeffPoly::one();
    }
    Series::from_coeffs(SeriesKind::Egf, mode.clone(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn total(s: &Series, n: usize) -> BigInt {
        s.coeff(n).eval(&BigInt::one(), &BigInt::one())
    }

    #[test]
    fn base_series_examples() {
        let mode = CoeffMode::Polynomial;
        let g = base_graph_egf(4, &mode);
        assert!(g.coeff(0).is_one() && g.coeff(1).is_one());
        assert_eq!(g.coeff(2), &CoeffPoly::one().add(&CoeffPoly::var_w()));
        assert_eq!(total(&g, 3), BigInt::from(8));

        let set = base_set_ggf(5, &mode);
        assert!(set.coeff(5).is_one());
        assert!(set
            .retag_family_to_egf()
            .unwrap()
            .coeffs()
            .iter()
            .all(|c| c.is_one()));

        let d = base_digraph_ggf(3, &mode);
        assert_eq!(d.coeff(2), &crate::coeff::one_plus_w_pow(2));
        assert_eq!(total(&d, 3), BigInt::from(64));
        // as a formal series D equals G: numerator / (1+w)^C(n,2) = (1+w)^C(n,2)
        for n in 0..=3u32 {
            let expected = crate::coeff::one_plus_w_pow(choose2(n))
                .mul(&crate::coeff::one_plus_w_pow(choose2(n)));
            assert_eq!(d.coeff(n as usize), &expected);
        }
    }

    #[test]
    fn dag_series() {
        let mode = CoeffMode::Polynomial;
        let dag = dag_ggf(5, &mode);
        assert_eq!(
            dag.coeff(2),
            &CoeffPoly::from_int(1).add(&CoeffPoly::var_w().mul_int(2))
        );
        let expected = [1u64, 1, 3, 25, 543, 29281];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(total(&dag, n), BigInt::from(e), "n={n}");
        }
    }

    #[test]
    fn dag_sources_series() {
        let mode = CoeffMode::Polynomial;
        let ds = dag_sources_ggf(4, &mode);
        // u^2 + 2*w*u at n=2
        let expected = CoeffPoly::term(BigInt::one(), 0, 2)
            .add(&CoeffPoly::term(BigInt::from(2), 1, 1));
        assert_eq!(ds.coeff(2), &expected);
        assert_eq!(ds.eval_u(&BigInt::one()), dag_ggf(4, &mode));
        let at0 = ds.eval_u(&BigInt::from(0));
        assert!(at0.is_one());
    }

    #[test]
    fn scc_series() {
        let mode = CoeffMode::Polynomial;
        let scc = scc_egf(5, &mode);
        assert!(scc.coeff(1).is_one());
        assert_eq!(scc.coeff(2), &CoeffPoly::term(BigInt::one(), 2, 0));
        let c3 = CoeffPoly::term(BigInt::from(2), 3, 0)
            .add(&CoeffPoly::term(BigInt::from(9), 4, 0))
            .add(&CoeffPoly::term(BigInt::from(6), 5, 0))
            .add(&CoeffPoly::term(BigInt::one(), 6, 0));
        assert_eq!(scc.coeff(3), &c3);
        assert_eq!(total(&scc, 3), BigInt::from(18));
        assert_eq!(total(&scc, 4), BigInt::from(1606));
        assert_eq!(total(&scc, 5), BigInt::from(565080));
    }

    #[test]
    fn restricted_scc_generalizes_dag() {
        let mode = CoeffMode::Polynomial;
        let z = single_vertex_egf(8, &mode);
        assert_eq!(restricted_scc_ggf(&z, 8).unwrap(), dag_ggf(8, &mode));
        let scc = scc_egf(8, &mode);
        assert_eq!(
            restricted_scc_ggf(&scc, 8).unwrap(),
            base_digraph_ggf(8, &mode)
        );
        let empty = Series::zero(SeriesKind::Egf, mode.clone(), 4);
        assert!(restricted_scc_ggf(&empty, 4).unwrap().is_one());
        let bad = Series::one(SeriesKind::Egf, mode, 4);
        assert_eq!(restricted_scc_ggf(&bad, 4), Err(Error::EmptyObjectInFamily));
    }

    #[test]
    fn restricted_scc_sources() {
        let mode = CoeffMode::Polynomial;
        let scc = scc_egf(4, &mode);
        let marked = restricted_scc_sources_ggf(&scc, 4).unwrap();
        // u^2 + 2*w*u + w^2*u at n=2
        let expected = CoeffPoly::term(BigInt::one(), 0, 2)
            .add(&CoeffPoly::term(BigInt::from(2), 1, 1))
            .add(&CoeffPoly::term(BigInt::one(), 2, 1));
        assert_eq!(marked.coeff(2), &expected);
        assert_eq!(
            marked.eval_u(&BigInt::one()),
            restricted_scc_ggf(&scc, 4).unwrap()
        );
        let z = single_vertex_egf(8, &mode);
        assert_eq!(
            restricted_scc_sources_ggf(&z, 8).unwrap(),
            dag_sources_ggf(8, &mode)
        );
        let with_u = scc.scale_coeffs(&CoeffPoly::var_u());
        assert_eq!(
            restricted_scc_sources_ggf(&with_u, 4),
            Err(Error::MarkerCollision)
        );
    }

    #[test]
    fn marked_subfamily() {
        let mode = CoeffMode::Polynomial;
        let z = single_vertex_egf(4, &mode);
        let marked = marked_subfamily_ggf(&z, 4).unwrap();
        assert_eq!(
            marked.eval_u(&BigInt::one()),
            base_digraph_ggf(4, &mode)
        );
        let no_trivial = marked.eval_u(&BigInt::from(0));
        assert_eq!(total(&no_trivial, 2), BigInt::from(1));
        assert_eq!(total(&no_trivial, 3), BigInt::from(18));
    }

    #[test]
    fn initially_connected() {
        let mode = CoeffMode::Polynomial;
        let ic = initially_connected_ggf(4, &mode);
        let expected = CoeffPoly::var_w().add(&CoeffPoly::term(BigInt::one(), 2, 0));
        assert_eq!(ic.coeff(2), &expected);
        assert!(ic.coeff(0).is_zero());
        let totals = [0u64, 1, 2, 32, 2432];
        for (n, &e) in totals.iter().enumerate() {
            assert_eq!(total(&ic, n), BigInt::from(e), "n={n}");
        }
    }

    #[test]
    fn theorem_pivot_identity() {
        // (Set (.) e^{-SCC}) * D = 1, the u = -1 step of the main proof
        let mode = CoeffMode::Polynomial;
        let scc = scc_egf(8, &mode);
        let lhs = scc
            .negate()
            .exp()
            .unwrap()
            .retag_family_to_ggf()
            .unwrap()
            .mul(&base_digraph_ggf(8, &mode))
            .unwrap();
        assert!(lhs.is_one());
    }

    #[test]
    fn deg_w_bound_on_catalog_outputs() {
        let mode = CoeffMode::Polynomial;
        let families = [
            dag_ggf(8, &mode),
            dag_sources_ggf(8, &mode),
            base_digraph_ggf(8, &mode),
            initially_connected_ggf(8, &mode),
            restricted_scc_sources_ggf(&scc_egf(8, &mode), 8).unwrap(),
        ];
        for f in &families {
            for n in 0..=8u32 {
                assert!(f.coeff(n as usize).deg_w() <= n * n.saturating_sub(1));
            }
        }
        let scc = scc_egf(8, &mode);
        for n in 0..=8u32 {
            assert!(scc.coeff(n as usize).deg_w() <= n * n.saturating_sub(1));
        }
    }

    #[test]
    fn numeric_mode_matches_polynomial_at_1_1() {
        let poly = CoeffMode::Polynomial;
        let num = CoeffMode::numeric(1, 1);
        let pairs: Vec<(Series, Series)> = vec![
            (dag_ggf(6, &poly), dag_ggf(6, &num)),
            (scc_egf(6, &poly), scc_egf(6, &num)),
            (dag_sources_ggf(6, &poly), dag_sources_ggf(6, &num)),
            (initially_connected_ggf(6, &poly), initially_connected_ggf(6, &num)),
        ];
        for (p, q) in pairs {
            for n in 0..=6 {
                assert_eq!(
                    p.coeff(n).eval(&BigInt::one(), &BigInt::one()),
                    q.coeff(n).constant_value().unwrap(),
                    "n={n}"
                );
            }
        }
    }
}
