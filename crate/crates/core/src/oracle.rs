//! Closed-form Roman domination and Roman bondage values for complete
//! multipartite graphs, graphs with universal vertices, and (n-3)-regular
//! graphs.

use serde::Serialize;
use thiserror::Error;

use crate::family::{CoCycleSpec, PartiteSpec};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("formula does not apply: {0}")]
    Inapplicable(String),
}

/// A formula value with the case of the case split that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaValue {
    pub value: usize,
    pub case_tag: &'static str,
    pub source: &'static str,
}

fn formula(value: usize, case_tag: &'static str, source: &'static str) -> FormulaValue {
    FormulaValue {
        value,
        case_tag,
        source,
    }
}

/// Roman domination number of a complete multipartite graph: 2, 3 or 4
/// depending on whether the smallest part has 1, 2 or more vertices.
pub fn gamma_roman_tpartite(spec: &PartiteSpec) -> FormulaValue {
    const SRC: &str = "lemma2.1";
    match spec.min_part() {
        1 => formula(2, "m_1=1", SRC),
        2 => formula(3, "m_1=2", SRC),
        _ => formula(4, "m_1>=3", SRC),
    }
}

/// Roman bondage number of a graph of order `n >= 3` with `universal >= 1`
/// vertices of degree `n-1`: `ceil(universal / 2)`.
pub fn b_roman_universal(universal: usize, n: usize) -> Result<FormulaValue, OracleError> {
    if universal == 0 || n < 3 {
        return Err(OracleError::Inapplicable(format!(
            "needs n >= 3 and at least one universal vertex (n = {n}, universal = {universal})"
        )));
    }
    Ok(formula(universal.div_ceil(2), "t>=1", "lemma2.2"))
}

/// Roman bondage number of a complete multipartite graph.
///
/// With `i` parts tied for the smallest size `m_i`:
///
/// | case | value |
/// |---|---|
/// | `m_i = 1`, `n >= 3` | `ceil(i/2)` |
/// | `m_i = 2`, `i = 1` | 2 |
/// | `m_i = 2`, `i >= 2` | `i` |
/// | parts `(3,3)` | 4 |
/// | `m_i = 3`, `i = t >= 3` | `n - 1` |
/// | `m_i >= 3`, `m_t >= 4` | `n - m_t` |
///
/// `(3,3)` is matched first; the general split does not cover `m_i = 3`
/// with `i = t = 2`.
pub fn b_roman_tpartite(spec: &PartiteSpec) -> Result<FormulaValue, OracleError> {
    const SRC: &str = "thm3.1";
    let (n, t) = (spec.n(), spec.t());
    let (m_i, i, m_t) = (spec.min_part(), spec.min_multiplicity(), spec.max_part());
    if spec.parts() == [3, 3] {
        return Ok(formula(4, "K_{3,3}", SRC));
    }
    match m_i {
        1 if n >= 3 => Ok(formula(i.div_ceil(2), "m_i=1", SRC)),
        1 => Err(OracleError::Inapplicable(format!(
            "K_{{{spec}}} has order {n} < 3 and no bondage set"
        ))),
        2 if i == 1 => Ok(formula(2, "m_i=2, i=1", SRC)),
        2 => Ok(formula(i, "m_i=2, i>=2", SRC)),
        3 if i == t => Ok(formula(n - 1, "m_i=3, i=t>=3", SRC)),
        _ if m_t >= 4 => Ok(formula(n - m_t, "m_i>=3, m_t>=4", SRC)),
        _ => unreachable!("m_i >= 3 with m_t = 3 forces i = t"),
    }
}

/// Roman domination number of an (n-3)-regular graph of order `n >= 4`.
pub fn gamma_roman_n_minus_3_regular(n: usize) -> Result<FormulaValue, OracleError> {
    if n < 4 {
        return Err(OracleError::Inapplicable(format!("order {n} < 4")));
    }
    Ok(formula(4, "n>=4", "lemma2.4"))
}

/// Roman bondage number of an (n-3)-regular graph of order `n >= 5`:
/// `n - 1` for `K_{3,3,...,3}` with at least three parts, `n - 2` otherwise.
pub fn b_roman_n_minus_3_regular(spec: &CoCycleSpec) -> Result<FormulaValue, OracleError> {
    let n = spec.n();
    if n < 5 {
        return Err(OracleError::Inapplicable(format!("order {n} < 5")));
    }
    if spec.is_all_threes() && spec.lengths().len() >= 3 {
        Ok(formula(n - 1, "K_{3,...,3}", "thm3.1"))
    } else {
        Ok(formula(n - 2, "n-2", "thm4.1"))
    }
}

/// For a nonempty graph of order `n >= 3`: `gamma_R(G) = 3` exactly when
/// the maximum degree is `n - 2`.
pub fn gamma_roman_is_3(g: &Graph) -> Result<bool, OracleError> {
    if g.n() < 3 || g.m() == 0 {
        return Err(OracleError::Inapplicable(format!(
            "needs a nonempty graph of order >= 3 (n = {}, m = {})",
            g.n(),
            g.m()
        )));
    }
    Ok(g.max_degree() == g.n() - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::named_graph;

    fn spec(p: &[usize]) -> PartiteSpec {
        PartiteSpec::new(p.to_vec()).unwrap()
    }

    fn co(l: &[usize]) -> CoCycleSpec {
        CoCycleSpec::new(l.to_vec()).unwrap()
    }

    #[test]
    fn tpartite_roman_number() {
        assert_eq!(gamma_roman_tpartite(&spec(&[1, 5])).value, 2);
        assert_eq!(gamma_roman_tpartite(&spec(&[2, 2])).value, 3);
        assert_eq!(gamma_roman_tpartite(&spec(&[3, 3, 3])).value, 4);
    }

    #[test]
    fn universal_vertex_bondage() {
        assert_eq!(b_roman_universal(1, 3).unwrap().value, 1);
        assert_eq!(b_roman_universal(3, 3).unwrap().value, 2);
        assert_eq!(b_roman_universal(2, 5).unwrap().value, 1);
        assert!(b_roman_universal(0, 5).is_err());
        assert!(b_roman_universal(2, 2).is_err());
    }

    #[test]
    fn tpartite_bondage_cases() {
        let v = |p: &[usize]| b_roman_tpartite(&spec(p)).unwrap();
        assert_eq!(
            (v(&[3, 3, 3]).value, v(&[3, 3, 3]).case_tag),
            (8, "m_i=3, i=t>=3")
        );
        assert_eq!(
            (v(&[2, 2, 4]).value, v(&[2, 2, 4]).case_tag),
            (2, "m_i=2, i>=2")
        );
        assert_eq!(v(&[3, 4]).value, 3);
        assert_eq!(v(&[3, 3]).value, 4);
        assert_eq!(v(&[1, 1, 2]).value, 1);
        assert!(b_roman_tpartite(&spec(&[1, 1])).is_err());
    }

    #[test]
    fn boundary_specs_fire_one_case_each() {
        let tags: Vec<&str> = [
            vec![2, 2],
            vec![2, 3],
            vec![3, 3],
            vec![3, 4],
            vec![3, 3, 3],
            vec![3, 3, 4],
            vec![1, 2],
            vec![4, 4],
        ]
        .iter()
        .map(|p| b_roman_tpartite(&spec(p)).unwrap().case_tag)
        .collect();
        assert_eq!(
            tags,
            vec![
                "m_i=2, i>=2",
                "m_i=2, i=1",
                "K_{3,3}",
                "m_i>=3, m_t>=4",
                "m_i=3, i=t>=3",
                "m_i>=3, m_t>=4",
                "m_i=1",
                "m_i>=3, m_t>=4",
            ]
        );
        assert_eq!(b_roman_tpartite(&spec(&[3, 3, 4])).unwrap().value, 6);
    }

    #[test]
    fn regular_family_values() {
        for n in [5, 6, 9] {
            assert_eq!(gamma_roman_n_minus_3_regular(n).unwrap().value, 4);
        }
        assert!(gamma_roman_n_minus_3_regular(3).is_err());
        let b = |l: &[usize]| b_roman_n_minus_3_regular(&co(l)).unwrap().value;
        assert_eq!(b(&[5]), 3);
        assert_eq!(b(&[6]), 4);
        assert_eq!(b(&[3, 3]), 4);
        assert_eq!(b(&[3, 3, 3]), 8);
        assert_eq!(b(&[3, 6]), 7);
        assert!(b_roman_n_minus_3_regular(&co(&[4])).is_err());
    }

    #[test]
    fn max_degree_characterization() {
        assert_eq!(gamma_roman_is_3(&named_graph("p3").unwrap()), Ok(false));
        assert_eq!(gamma_roman_is_3(&named_graph("c4").unwrap()), Ok(true));
        assert_eq!(gamma_roman_is_3(&named_graph("c5").unwrap()), Ok(false));
        assert!(gamma_roman_is_3(&Graph::edgeless(4).unwrap()).is_err());
        assert!(gamma_roman_is_3(&named_graph("p2").unwrap()).is_err());
    }
}
