mod common;

use std::collections::BTreeSet;

use common::{connected_by_union_find, corpus, edge_list};
use domchrom::ops::{remove_edge, remove_vertex};
use domchrom::structure::{bridges, cut_vertices, enumerate_cycles};

#[test]
fn cut_vertices_are_exactly_the_disconnecting_removals() {
    for g in corpus(2, 6) {
        let cuts = cut_vertices(&g).unwrap();
        for v in 0..g.order() {
            let rest = remove_vertex(&g, v).unwrap().graph;
            let connected = connected_by_union_find(rest.order(), &edge_list(&rest));
            assert_eq!(cuts.contains(&v), !connected, "{g:?} v={v}");
        }
    }
}

#[test]
fn bridges_are_exactly_the_disconnecting_edges() {
    for g in corpus(2, 6) {
        let found = bridges(&g).unwrap();
        for (u, v) in g.edges() {
            let rest = remove_edge(&g, u, v).unwrap();
            let connected = connected_by_union_find(rest.order(), &edge_list(&rest));
            assert_eq!(found.contains(&(u, v)), !connected, "{g:?} e={u}-{v}");
        }
    }
}

/// Cycles as (vertex set, edge set) pairs found by trying every ordering of
/// every vertex subset.
fn brute_force_cycles(g: &domchrom::graph::Graph, max_len: usize) -> BTreeSet<Vec<(usize, usize)>> {
    fn permute(rest: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == rest.len() {
            out.push(rest.clone());
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            permute(rest, k + 1, out);
            rest.swap(k, i);
        }
    }
    let n = g.order();
    let mut found = BTreeSet::new();
    for mask in 0u32..1 << n {
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if verts.len() < 3 || verts.len() > max_len {
            continue;
        }
        let mut orders = Vec::new();
        permute(&mut verts.clone(), 0, &mut orders);
        for order in orders {
            let l = order.len();
            if (0..l).all(|i| g.has_edge(order[i], order[(i + 1) % l])) {
                let mut edges: Vec<(usize, usize)> = (0..l)
                    .map(|i| {
                        let (a, b) = (order[i], order[(i + 1) % l]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                edges.sort_unstable();
                found.insert(edges);
            }
        }
    }
    found
}

#[test]
fn cycle_enumeration_matches_permutation_search() {
    for g in corpus(3, 5) {
        let cycles = enumerate_cycles(&g, 5);
        let mut as_edges = BTreeSet::new();
        for c in &cycles {
            c.validate(&g).unwrap();
            let vs = c.vertices();
            assert_eq!(vs[0], *vs.iter().min().unwrap());
            assert!(vs[1] < vs[vs.len() - 1]);
            let l = vs.len();
            let mut edges: Vec<(usize, usize)> = (0..l)
                .map(|i| (vs[i].min(vs[(i + 1) % l]), vs[i].max(vs[(i + 1) % l])))
                .collect();
            edges.sort_unstable();
            assert!(as_edges.insert(edges), "duplicate cycle {vs:?} in {g:?}");
        }
        assert_eq!(as_edges, brute_force_cycles(&g, 5), "{g:?}");
    }
}
