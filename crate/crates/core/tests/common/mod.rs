//! Reference implementations used as test oracles. They work from edge lists
//! and plain sets and deliberately share no code with the library's bitset
//! routines.

#![allow(dead_code)]

use std::collections::BTreeSet;

use domchrom::graph::Graph;
use domchrom::Coloring;

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Connected labeled graphs on n vertices by the standard recurrence
/// c_n = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c_k 2^C(n-k,2).
pub fn connected_count_recurrence(n: usize) -> u64 {
    let mut c = vec![0u64; n + 1];
    for m in 1..=n as u64 {
        let mut total = 1u64 << binom(m, 2);
        for k in 1..m {
            total -= binom(m - 1, k - 1) * c[k as usize] * (1u64 << binom(m - k, 2));
        }
        c[m as usize] = total;
    }
    c[n]
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Connectivity by union-find over an explicit edge list.
pub fn connected_by_union_find(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut components = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components == 1
}

/// Every labeled graph on n vertices as an edge list, filtered by union-find.
pub fn brute_force_connected(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect::<Vec<_>>()
        })
        .filter(|edges| connected_by_union_find(n, edges))
        .collect()
}

pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

pub fn closed_neighborhoods(g: &Graph) -> Vec<BTreeSet<usize>> {
    let mut nbhd: Vec<BTreeSet<usize>> = (0..g.order()).map(|v| BTreeSet::from([v])).collect();
    for (u, v) in g.edges() {
        nbhd[u].insert(v);
        nbhd[v].insert(u);
    }
    nbhd
}

/// The definition read literally: proper, every vertex's closed
/// neighborhood contains some whole class, and every class lies inside some
/// vertex's closed neighborhood.
pub fn naive_is_domination_coloring(g: &Graph, colors: &[usize]) -> bool {
    let n = g.order();
    if g.edges().any(|(u, v)| colors[u] == colors[v]) {
        return false;
    }
    let k = colors.iter().max().map_or(0, |m| m + 1);
    let classes: Vec<BTreeSet<usize>> = (0..k)
        .map(|i| (0..n).filter(|&v| colors[v] == i).collect())
        .filter(|c: &BTreeSet<usize>| !c.is_empty())
        .collect();
    let nbhd = closed_neighborhoods(g);
    let vertices_ok = (0..n).all(|v| classes.iter().any(|c| c.is_subset(&nbhd[v])));
    let classes_ok = classes
        .iter()
        .all(|c| (0..n).any(|v| c.is_subset(&nbhd[v])));
    vertices_ok && classes_ok
}

/// Chromatic number by trying every assignment with k colors.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    let edges = edge_list(g);
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}

/// Smallest k admitting a domination coloring, by trying every assignment
/// of colors `0..k` to the vertices.
pub fn naive_chi_dd(g: &Graph) -> usize {
    let n = g.order();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if naive_is_domination_coloring(g, &colors) {
                return k;
            }
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    n
}

pub fn corpus(lo: usize, hi: usize) -> Vec<Graph> {
    domchrom::generate::connected_graphs_up_to(lo, hi).expect("orders within the generator guard")
}

pub fn coloring(text: &str) -> Coloring {
    text.parse().expect("valid coloring literal")
}
