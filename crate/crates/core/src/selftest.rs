//! Built-in verification suites: algebraic identities, mode agreement and
//! oracle equivalence for every catalog family.

use num_bigint::BigInt;
use num_traits::One;

use crate::catalog;
use crate::coeff::CoeffMode;
use crate::error::Result;
use crate::oracle::{self, Selector};
use crate::series::Series;
use crate::table::{extract_table, FamilyTable};

/// Outcome of one suite; `detail` is `Some` on failure and names the first
/// failing point.
#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub detail: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.detail.is_none()
    }
}

/// Compare two tables over the union of their keys; returns the first
/// mismatching `(family, n, m)` triple.
pub fn compare_tables(family: &str, got: &FamilyTable, want: &FamilyTable) -> Option<String> {
    let mut keys: Vec<(u32, Option<u32>, Option<u32>)> = got
        .rows
        .iter()
        .chain(want.rows.iter())
        .map(|r| (r.n, r.m, r.p))
        .collect();
    keys.sort();
    keys.dedup();
    for (n, m, p) in keys {
        let a = got.count_at(n, m, p);
        let b = want.count_at(n, m, p);
        if a != b {
            return Some(format!(
                "family={family} n={n} m={} p={}: got {a}, oracle {b}",
                m.map_or("-".to_string(), |v| v.to_string()),
                p.map_or("-".to_string(), |v| v.to_string()),
            ));
        }
    }
    None
}

fn catalog_vs_oracle(n_max: u32) -> Result<Vec<SuiteOutcome>> {
    let mode = CoeffMode::Polynomial;
    let order = n_max as usize;
    let z = catalog::single_vertex_egf(order, &mode);
    let scc = catalog::scc_egf(order, &mode);
    let cases: Vec<(&'static str, Series, bool, Selector)> = vec![
        ("oracle-dag", catalog::dag_ggf(order, &mode), false, Selector::Dag),
        (
            "oracle-dag-sources",
            catalog::dag_sources_ggf(order, &mode),
            true,
            Selector::DagBySources,
        ),
        ("oracle-scc", scc.clone(), false, Selector::Scc),
        (
            "oracle-initially-connected",
            catalog::initially_connected_ggf(order, &mode),
            false,
            Selector::InitiallyConnected,
        ),
        (
            "oracle-source-like-marked",
            catalog::restricted_scc_sources_ggf(&scc, order)?,
            true,
            Selector::SourceLikeMarked,
        ),
        (
            "oracle-no-single-vertex-scc",
            catalog::marked_subfamily_ggf(&z, order)?.eval_u(&BigInt::from(0)),
            false,
            Selector::NoSingleVertexScc,
        ),
    ];
    let mut out = Vec::new();
    for (name, series, track_p, selector) in cases {
        let got = extract_table(&series, name, track_p)?;
        let want = oracle::oracle_table(n_max, selector)?;
        out.push(SuiteOutcome {
            name,
            detail: compare_tables(name, &got, &want),
        });
    }
    Ok(out)
}

fn series_roundtrips() -> SuiteOutcome {
    let order = 8;
    for mode in [CoeffMode::Polynomial, CoeffMode::numeric(1, 1)] {
        let g = catalog::base_graph_egf(order, &mode);
        let log_g = g.log().expect("c_0 = 1");
        if log_g.exp().expect("c_0 = 0") != g {
            return SuiteOutcome {
                name: "series-roundtrips",
                detail: Some(format!("family=graphs exp(log(G)) != G ({mode:?})")),
            };
        }
        let r = g.recip().expect("c_0 = 1");
        if !g.mul(&r).expect("compatible").is_one() {
            return SuiteOutcome {
                name: "series-roundtrips",
                detail: Some(format!("family=graphs G * recip(G) != 1 ({mode:?})")),
            };
        }
        let dag = catalog::dag_ggf(order, &mode);
        let set_neg = catalog::base_set_ggf(order, &mode)
            .scale_z(&crate::coeff::CoeffPoly::from_int(-1));
        if !dag.mul(&set_neg).expect("compatible").is_one() {
            return SuiteOutcome {
                name: "series-roundtrips",
                detail: Some(format!("family=dag DAG * Set(-z) != 1 ({mode:?})")),
            };
        }
    }
    SuiteOutcome { name: "series-roundtrips", detail: None }
}

fn catalog_identities() -> SuiteOutcome {
    let name = "catalog-identities";
    let order = 8;
    for mode in [CoeffMode::Polynomial, CoeffMode::numeric(1, 1)] {
        let z = catalog::single_vertex_egf(order, &mode);
        let scc = catalog::scc_egf(order, &mode);
        let dag = catalog::dag_ggf(order, &mode);
        let checks: Vec<(&str, bool)> = vec![
            (
                "family=dag restricted(A=z) != dag",
                catalog::restricted_scc_ggf(&z, order).map(|s| s == dag).unwrap_or(false),
            ),
            (
                "family=digraphs restricted(A=scc) != digraphs",
                catalog::restricted_scc_ggf(&scc, order)
                    .map(|s| s == catalog::base_digraph_ggf(order, &mode))
                    .unwrap_or(false),
            ),
            (
                "family=dag-sources u=1 marking identity",
                mode.is_numeric()
                    || catalog::dag_sources_ggf(order, &mode).eval_u(&BigInt::one()) == dag,
            ),
            (
                "family=dag-sources u=0 empty-DAG identity",
                mode.is_numeric()
                    || catalog::dag_sources_ggf(order, &mode)
                        .eval_u(&BigInt::from(0))
                        .is_one(),
            ),
            (
                "family=digraphs pivot (Set (.) e^-SCC) * D != 1",
                scc.negate()
                    .exp()
                    .and_then(|e| e.retag_family_to_ggf())
                    .and_then(|s| s.mul(&catalog::base_digraph_ggf(order, &mode)))
                    .map(|s| s.is_one())
                    .unwrap_or(false),
            ),
        ];
        for (what, ok) in checks {
            if !ok {
                return SuiteOutcome {
                    name,
                    detail: Some(format!("{what} ({mode:?})")),
                };
            }
        }
    }
    SuiteOutcome { name, detail: None }
}

fn pointed_bijection(n_max: u32) -> Result<SuiteOutcome> {
    let name = "pointed-bijection";
    let mode = CoeffMode::Polynomial;
    let ic = catalog::initially_connected_ggf(n_max as usize, &mode);
    let pointed = extract_table(&ic.point(), "ic-pointed", false)?;
    let want = oracle::oracle_table(n_max, Selector::UniqueSourceLikePointed)?;
    Ok(SuiteOutcome {
        name,
        detail: compare_tables("ic-pointed", &pointed, &want),
    })
}

fn mode_agreement() -> Result<SuiteOutcome> {
    let name = "mode-agreement";
    let order = 8;
    let poly = CoeffMode::Polynomial;
    let num = CoeffMode::numeric(1, 1);
    let families: Vec<(&str, Series, Series)> = vec![
        ("dag", catalog::dag_ggf(order, &poly), catalog::dag_ggf(order, &num)),
        ("scc", catalog::scc_egf(order, &poly), catalog::scc_egf(order, &num)),
        (
            "dag-sources",
            catalog::dag_sources_ggf(order, &poly),
            catalog::dag_sources_ggf(order, &num),
        ),
        (
            "initially-connected",
            catalog::initially_connected_ggf(order, &poly),
            catalog::initially_connected_ggf(order, &num),
        ),
        (
            "digraphs",
            catalog::base_digraph_ggf(order, &poly),
            catalog::base_digraph_ggf(order, &num),
        ),
    ];
    let one = BigInt::one();
    for (family, p, q) in families {
        for n in 0..=order {
            let evaluated = p.coeff(n).eval(&one, &one);
            let numeric = q.coeff(n).constant_value().expect("numeric constant");
            if evaluated != numeric {
                return Ok(SuiteOutcome {
                    name,
                    detail: Some(format!("family={family} n={n}: {evaluated} vs {numeric}")),
                });
            }
        }
    }
    Ok(SuiteOutcome { name, detail: None })
}

fn n5_aggregates() -> Result<SuiteOutcome> {
    let name = "n5-aggregates";
    let totals = oracle::aggregate_totals(5)?;
    let expected = oracle::AggregateTotals {
        digraphs: 1 << 20,
        dags: 29281,
        strongly_connected: 565080,
        initially_connected: 745472,
    };
    if totals != expected {
        return Ok(SuiteOutcome {
            name,
            detail: Some(format!("family=aggregates n=5: got {totals:?}, want {expected:?}")),
        });
    }
    // and the catalog reproduces them
    let num = CoeffMode::numeric(1, 1);
    let cases = [
        ("dag", catalog::dag_ggf(5, &num), expected.dags),
        ("scc", catalog::scc_egf(5, &num), expected.strongly_connected),
        (
            "initially-connected",
            catalog::initially_connected_ggf(5, &num),
            expected.initially_connected,
        ),
        ("digraphs", catalog::base_digraph_ggf(5, &num), expected.digraphs),
    ];
    for (family, series, want) in cases {
        let got = series.coeff(5).constant_value().expect("numeric constant");
        if got != BigInt::from(want) {
            return Ok(SuiteOutcome {
                name,
                detail: Some(format!("family={family} n=5: got {got}, want {want}")),
            });
        }
    }
    Ok(SuiteOutcome { name, detail: None })
}

/// Run every suite; oracle equivalence goes up to `min(max_n, 4)` and the
/// exhaustive n=5 aggregate pass is included only when `max_n = 5`.
pub fn run_all(max_n: u32) -> Result<Vec<SuiteOutcome>> {
    let mut outcomes = vec![series_roundtrips(), catalog_identities()];
    let oracle_n = max_n.min(4);
    outcomes.extend(catalog_vs_oracle(oracle_n)?);
    outcomes.push(pointed_bijection(oracle_n)?);
    outcomes.push(mode_agreement()?);
    if max_n >= 5 {
        outcomes.push(n5_aggregates()?);
    }
    Ok(outcomes)
}
