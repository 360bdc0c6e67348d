//! Explicit Roman bondage sets for complete multipartite graphs and
//! (n-3)-regular graphs. Their sizes match the closed forms in
//! [`crate::oracle`], so each one certifies the upper bound on its own.

use serde::Serialize;
use thiserror::Error;

use crate::family::{gen_co_cycles, gen_tpartite, CoCycleSpec, PartiteSpec};
use crate::graph::{Edge, EdgeSet, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("no bondage construction for {0}")]
    UnsupportedFamily(String),
}

/// A parameterized graph family member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Family {
    Partite(PartiteSpec),
    CoCycles(CoCycleSpec),
}

impl Family {
    pub fn graph(&self) -> Graph {
        match self {
            Family::Partite(s) => gen_tpartite(s).graph,
            Family::CoCycles(s) => gen_co_cycles(s),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Family::Partite(s) => s.fmt(f),
            Family::CoCycles(s) => s.fmt(f),
        }
    }
}

/// The constructed bondage set for the canonically labeled family graph.
pub fn construct_bondage_witness(family: &Family) -> Result<EdgeSet, WitnessError> {
    match family {
        Family::Partite(spec) => {
            let pg = gen_tpartite(spec);
            tpartite_witness(&pg.graph, &pg.parts)
        }
        Family::CoCycles(spec) => co_cycle_witness(&gen_co_cycles(spec), &spec.cycles()),
    }
}

/// Bondage set of a complete multipartite graph given its parts, sorted by
/// ascending size.
pub fn tpartite_witness(g: &Graph, parts: &[Vec<usize>]) -> Result<EdgeSet, WitnessError> {
    let unsupported = || {
        let sizes: Vec<String> = parts.iter().map(|p| p.len().to_string()).collect();
        WitnessError::UnsupportedFamily(format!("K_{{{}}}", sizes.join(",")))
    };
    if parts.len() < 2 {
        return Err(unsupported());
    }
    let smallest = parts[0].len();
    let largest = parts[parts.len() - 1].len();
    let ties = parts.iter().take_while(|p| p.len() == smallest).count();
    let n = g.n();

    let b: Vec<Edge> = match smallest {
        // Every universal vertex loses one edge; pair them up.
        1 if n >= 3 => {
            let universal: Vec<usize> = parts[..ties].iter().map(|p| p[0]).collect();
            let mut b: Vec<Edge> = universal
                .chunks(2)
                .filter(|c| c.len() == 2)
                .map(|c| Edge::new(c[0], c[1]))
                .collect();
            if ties % 2 == 1 {
                let last = universal[ties - 1];
                let mate = parts.get(ties).map_or(universal[0], |p| p[0]);
                b.push(Edge::new(last, mate));
            }
            b
        }
        // The unique smallest part {a, b}: one edge at each.
        2 if ties == 1 => {
            let w = parts[1][0];
            vec![Edge::new(parts[0][0], w), Edge::new(parts[0][1], w)]
        }
        // Perfect matching on the union of the 2-parts.
        2 => (0..ties)
            .map(|j| Edge::new(parts[j][0], parts[(j + 1) % ties][1]))
            .collect(),
        // K_{3,3}: keep one edge uw and strip every other edge at u and w.
        3 if parts.len() == 2 && largest == 3 => {
            let (u, w) = (parts[0][0], parts[1][0]);
            star(g, u)
                .chain(star(g, w))
                .filter(|&e| e != Edge::new(u, w))
                .collect()
        }
        // K_{3,...,3}: isolate x, then one edge at each of the two other
        // vertices of its part.
        3 if largest == 3 => {
            let x = parts[0][0];
            let w = parts[1][0];
            star(g, x)
                .chain([Edge::new(parts[0][1], w), Edge::new(parts[0][2], w)])
                .collect()
        }
        // Some part has at least 4 vertices: isolate a vertex of the largest.
        s if s >= 3 => star(g, parts[parts.len() - 1][0]).collect(),
        _ => return Err(unsupported()),
    };
    Ok(EdgeSet::new(b))
}

/// Bondage set of an (n-3)-regular graph given the cycles of its
/// complement.
pub fn co_cycle_witness(g: &Graph, cycles: &[Vec<usize>]) -> Result<EdgeSet, WitnessError> {
    let n = g.n();
    if n < 5 {
        return Err(WitnessError::UnsupportedFamily(format!(
            "(n-3)-regular graph of order {n} < 5"
        )));
    }
    // x0 on a complement cycle of length >= 4: its two non-neighbors are
    // adjacent in G, and removing E(x0) plus that edge raises gamma_R.
    if let Some(cycle) = cycles.iter().find(|c| c.len() >= 4) {
        let (x0, y0, z0) = (cycle[0], cycle[1], cycle[cycle.len() - 1]);
        let b = star(g, x0).chain([Edge::new(y0, z0)]).collect();
        return Ok(EdgeSet::new(b));
    }
    // Only triangles: the graph is complete multipartite with parts of 3.
    let mut parts: Vec<Vec<usize>> = cycles.to_vec();
    parts.sort_by_key(|p| p[0]);
    tpartite_witness(g, &parts)
}

fn star(g: &Graph, x: usize) -> impl Iterator<Item = Edge> + '_ {
    crate::graph::BitIter(g.rows()[x]).map(move |y| Edge::new(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bondage::{raises, RomanDomination};

    fn partite(p: &[usize]) -> Family {
        Family::Partite(PartiteSpec::new(p.to_vec()).unwrap())
    }

    fn co(l: &[usize]) -> Family {
        Family::CoCycles(CoCycleSpec::new(l.to_vec()).unwrap())
    }

    #[test]
    fn largest_part_star() {
        let b = construct_bondage_witness(&partite(&[3, 4])).unwrap();
        // u = vertex 3, first of the 4-part; its neighbors are 0, 1, 2
        assert_eq!(
            b.as_slice(),
            &[Edge::new(0, 3), Edge::new(1, 3), Edge::new(2, 3)]
        );
    }

    #[test]
    fn co_cycle_star_plus_edge() {
        let fam = co(&[7]);
        let b = construct_bondage_witness(&fam).unwrap();
        assert_eq!(b.len(), 5);
        assert!(b.contains(&Edge::new(1, 6)));
        assert_eq!(b.incident_count(0), 4);
    }

    #[test]
    fn two_two_matching() {
        let b = construct_bondage_witness(&partite(&[2, 2])).unwrap();
        assert_eq!(b.as_slice(), &[Edge::new(0, 3), Edge::new(1, 2)]);
    }

    #[test]
    fn every_construction_raises() {
        let families = [
            partite(&[1, 2]),
            partite(&[1, 1, 1]),
            partite(&[1, 1, 2]),
            partite(&[1, 1, 1, 2]),
            partite(&[1, 3]),
            partite(&[2, 3]),
            partite(&[2, 2, 2]),
            partite(&[2, 2, 4]),
            partite(&[3, 3]),
            partite(&[3, 3, 3]),
            partite(&[3, 4]),
            partite(&[4, 4]),
            co(&[5]),
            co(&[6]),
            co(&[3, 3]),
            co(&[3, 4]),
            co(&[3, 3, 3]),
        ];
        for fam in families {
            let g = fam.graph();
            let b = construct_bondage_witness(&fam).unwrap();
            assert!(raises(&g, &RomanDomination, &b), "{fam}");
        }
    }

    #[test]
    fn unsupported_inputs() {
        assert!(construct_bondage_witness(&partite(&[1, 1])).is_err());
        assert!(construct_bondage_witness(&co(&[4])).is_err());
    }
}
