//! Brute-force reference implementations, written against the plain edge
//! list so they share nothing with the solver beyond `Graph` accessors.

#![allow(dead_code)]

use roman_bondage::{Edge, Graph};

fn neighbors(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for e in g.edges() {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    adj
}

/// Every 0 has a neighbor labeled 2.
pub fn is_rdf(adj: &[Vec<usize>], f: &[u8]) -> bool {
    (0..f.len()).all(|v| f[v] != 0 || adj[v].iter().any(|&w| f[w] == 2))
}

/// Minimum weight over all `3^n` labelings.
pub fn gamma_roman_brute(g: &Graph) -> usize {
    let n = g.n();
    let adj = neighbors(g);
    let mut f = vec![0u8; n];
    let mut best = usize::MAX;
    loop {
        if is_rdf(&adj, &f) {
            best = best.min(f.iter().map(|&x| x as usize).sum());
        }
        // base-3 increment
        let mut i = 0;
        while i < n && f[i] == 2 {
            f[i] = 0;
            i += 1;
        }
        if i == n {
            return best;
        }
        f[i] += 1;
    }
}

/// Smallest dominating set over all `2^n` subsets.
pub fn gamma_brute(g: &Graph) -> usize {
    let n = g.n();
    let adj = neighbors(g);
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || adj[v].iter().any(|&w| s >> w & 1 == 1)))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Smallest edge set whose removal raises `inv`, trying every subset of
/// the edge list by size. `None` when no subset raises it.
pub fn bondage_brute(g: &Graph, inv: fn(&Graph) -> usize) -> Option<usize> {
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 20, "brute force limited to 20 edges");
    let base = inv(g);
    (1u32..1 << m)
        .filter(|s| {
            let kept: Vec<Edge> = (0..m)
                .filter(|&k| s >> k & 1 == 0)
                .map(|k| edges[k])
                .collect();
            inv(&Graph::from_edges(g.n(), kept).unwrap()) > base
        })
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Number of integer partitions of `n` into parts of size at least `min`.
pub fn partitions_at_least(n: usize, min: usize) -> usize {
    // p[k] over parts in min..=n, classic coin-change table
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    for part in min..=n {
        for k in part..=n {
            p[k] += p[k - part];
        }
    }
    p[n]
}

pub fn labeled(n: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_edges(n, edges).unwrap()
}
