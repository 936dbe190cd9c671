mod common;

use common::{binom, corpus};
use domchrom::graph::{members, Graph};
use domchrom::ops::{
    contract_edge, contract_vertices, cycle_extend, remove_edge, remove_vertex, subdivide,
};
use domchrom::structure::{bridges, cut_vertices, enumerate_cycles};

fn assert_simple(g: &Graph) {
    let mut degree_sum = 0;
    for v in 0..g.order() {
        assert!(!g.has_edge(v, v));
        for w in members(g.neighbors(v)) {
            assert!(g.has_edge(w, v));
        }
        degree_sum += g.degree(v);
    }
    assert_eq!(degree_sum, 2 * g.size());
    assert!(g.size() as u64 <= binom(g.order() as u64, 2));
}

#[test]
fn contractions_stay_simple_and_connected() {
    for g in corpus(2, 6) {
        for (u, v) in g.edges() {
            let t = contract_edge(&g, u, v).unwrap();
            assert_simple(&t.graph);
            assert!(t.graph.is_connected());
            assert_eq!(t.graph.order(), g.order() - 1);
            let common_neighbors = (g.neighbors(u) & g.neighbors(v)).count_ones() as usize;
            assert_eq!(t.graph.size(), g.size() - 1 - common_neighbors);
        }
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                if g.has_edge(u, v) {
                    assert!(contract_vertices(&g, u, v).is_err());
                    continue;
                }
                let t = contract_vertices(&g, u, v).unwrap();
                assert_simple(&t.graph);
                assert!(t.graph.is_connected());
                let common_neighbors = (g.neighbors(u) & g.neighbors(v)).count_ones() as usize;
                assert_eq!(t.graph.size(), g.size() - common_neighbors);
                assert_eq!(t.vertex_map[u], t.vertex_map[v]);
                assert_eq!(t.vertex_map[u], Some(u));
            }
        }
    }
}

#[test]
fn removals_disconnect_exactly_at_cuts() {
    for g in corpus(2, 6) {
        let cuts = cut_vertices(&g).unwrap();
        for v in 0..g.order() {
            let t = remove_vertex(&g, v).unwrap();
            assert_simple(&t.graph);
            assert_eq!(t.graph.size(), g.size() - g.degree(v));
            assert_eq!(t.graph.is_connected(), !cuts.contains(&v));
            let kept: Vec<usize> = t.vertex_map.iter().flatten().copied().collect();
            assert_eq!(kept, (0..g.order() - 1).collect::<Vec<_>>());
        }
        let bridge_list = bridges(&g).unwrap();
        for (u, v) in g.edges() {
            let h = remove_edge(&g, u, v).unwrap();
            assert_eq!(h.size(), g.size() - 1);
            assert_eq!(h.is_connected(), !bridge_list.contains(&(u, v)));
        }
    }
}

#[test]
fn subdivision_counts() {
    for g in corpus(1, 5) {
        let (n, m) = (g.order(), g.size());
        assert_eq!(subdivide(&g, 1).unwrap().0, g);
        for k in 2..=4 {
            let (s, map) = subdivide(&g, k).unwrap();
            assert_eq!(s.order(), n + m * (k - 1));
            assert_eq!(s.size(), m * k);
            assert!(s.is_connected());
            assert_simple(&s);
            for v in n..s.order() {
                assert_eq!(s.degree(v), 2);
            }
            for v in 0..n {
                assert_eq!(s.degree(v), g.degree(v));
            }
            assert_eq!(map.superedges.len(), m);
            for e in &map.superedges {
                assert_eq!(e.path.len(), k + 1);
                for w in e.path.windows(2) {
                    assert!(s.has_edge(w[0], w[1]));
                }
            }
        }
    }
}

#[test]
fn cycle_extension_counts() {
    for g in corpus(3, 6) {
        for c in enumerate_cycles(&g, 6) {
            let w = cycle_extend(&g, &c).unwrap();
            let hub = g.order();
            assert_eq!(w.order(), g.order() + 1);
            assert_eq!(w.size(), g.size() + c.len());
            assert_eq!(w.degree(hub), c.len());
            assert_eq!(w.neighbors(hub), c.vertex_set());
            assert!(w.is_connected());
            assert_simple(&w);
        }
    }
}
