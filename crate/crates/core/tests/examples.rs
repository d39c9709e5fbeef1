mod common;

use common::rational;
use tperfect::coloring::*;
use tperfect::graph::families::*;
use tperfect::graph::*;
use tperfect::graph6::*;
use tperfect::polytope::*;
use tperfect::recognition::*;

fn g6(s: &str) -> Graph {
    decode_graph6(s).unwrap()
}

fn thirds(n: usize) -> RationalVector {
    RationalVector::new(vec![rational(1, 3); n])
}

fn w5_point() -> RationalVector {
    "2/5,2/5,2/5,2/5,2/5,1/5".parse().unwrap()
}

#[test]
fn complements() {
    assert_eq!(complete(3).complement(), Graph::empty(3));
    assert_eq!(path(4).complement().complement(), path(4));
    assert!(is_isomorphic(&cycle(5).complement(), &cycle(5)));
}

#[test]
fn line_graphs_and_roots() {
    assert!(is_isomorphic(&line_graph(&complete_bipartite(1, 3)).0, &complete(3)));
    let (l, _) = line_graph(&prism());
    assert_eq!(l.order(), 9);
    assert!(common::isomorphic(&l.complement(), &g6("HErb`yi")));
    assert!(is_isomorphic(&root_graph(&l).unwrap().root, &prism()));
    assert!(is_isomorphic(&root_graph(&cycle(5)).unwrap().root, &cycle(5)));
}

#[test]
fn matching_numbers() {
    for (h, nu) in [(cycle(5), 2), (wheel(5), 3), (prism(), 3)] {
        assert_eq!(max_matching(&h).len(), nu);
        assert_eq!(common::matching_number(&h), nu);
    }
}

#[test]
fn cliques_and_stable_sets() {
    assert_eq!(omega(&Graph::empty(4)), 1);
    assert_eq!(omega(&co_line(&wheel(5))), 3);
    assert_eq!(enumerate_cliques(&complete(4)).len(), 15);
    assert_eq!(enumerate_stable_sets(&cycle(5)).unwrap().len(), 11);
    assert_eq!(enumerate_stable_sets(&complete(3)).unwrap().len(), 4);
    assert_eq!(enumerate_stable_sets(&Graph::empty(3)).unwrap().len(), 8);
}

#[test]
fn odd_cycles() {
    assert_eq!(shortest_odd_cycle(&cycle(5)).unwrap().len(), 5);
    assert!(shortest_odd_cycle(&complete_bipartite(3, 3)).is_none());
    assert_eq!(shortest_odd_cycle(&wheel(5)).unwrap().len(), 3);
}

#[test]
fn cycle_enumeration() {
    let k4 = enumerate_simple_cycles(&complete(4), None, DEFAULT_CYCLE_CAP).unwrap();
    assert_eq!(k4.len(), 7);
    assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 4);
    assert_eq!(enumerate_simple_cycles(&cycle(5), None, DEFAULT_CYCLE_CAP).unwrap().len(), 1);
    assert!(enumerate_simple_cycles(&path(6), None, DEFAULT_CYCLE_CAP).unwrap().is_empty());
}

#[test]
fn induced_subgraphs() {
    assert!(contains_induced(&g6("HErb`yi"), &path(6)).is_none());
    assert!(contains_induced(&wheel(5), &complete(4)).is_none());
    let emb = contains_induced(&cycle(5), &path(4)).unwrap();
    assert_eq!(cycle(5).induced(&emb), path(4));
}

fn c5_chord() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap()
}

#[test]
fn factor_criticality_and_ears() {
    assert!(is_factor_critical(&cycle(5)));
    assert!(!is_factor_critical(&cycle(4)));
    assert!(is_factor_critical(&c5_chord()));

    let d = odd_ear_decomposition(&cycle(5)).unwrap();
    assert_eq!(d.ears.len(), 1);
    let d = odd_ear_decomposition(&c5_chord()).unwrap();
    assert!(d.is_valid_for(&c5_chord()));
    assert_eq!(d.ears.len(), 2);
    assert!(odd_ear_decomposition(&cycle(4)).is_none());
}

#[test]
fn contractions() {
    assert_eq!(complete_bipartite(1, 3).contract_stable_neighborhood(0).unwrap().order(), 1);
    assert!(is_isomorphic(&mycielski_grotzsch().contract_stable_neighborhood(0).unwrap(), &wheel(5)));
    for v in 0..5 {
        assert!(is_isomorphic(&cycle(5).contract_stable_neighborhood(v).unwrap(), &complete(3)));
    }
}

#[test]
fn chromatic_numbers_and_criticality() {
    assert_eq!(chromatic_number_exact(&co_line(&wheel(5))).unwrap().0, 4);
    assert_eq!(chromatic_number_exact(&co_line(&prism())).unwrap().0, 4);
    assert_eq!(chromatic_number_exact(&complete_bipartite(2, 3)).unwrap().0, 2);
    assert!(is_4_critical(&complete(4)).unwrap().is_critical);
    assert!(is_4_critical(&co_line(&wheel(5))).unwrap().is_critical);
    assert!(!is_4_critical(&cycle(5)).unwrap().is_critical);
}

#[test]
fn graph6_examples() {
    let w5 = g6("EUZw");
    assert_eq!(w5.to_string(), "0: [2, 3, 5], 1: [3, 4, 5], 2: [4, 5], 3: [5], 4: [5]");
    assert!(is_isomorphic(&w5, &wheel(5)));
    assert!(is_isomorphic(&g6("HErb`yi"), &co_line(&prism())));
    assert!(is_isomorphic(&g6("I?Becw}Yo"), &co_line(&wheel(5))));
    assert_eq!(g6("@"), Graph::empty(1));
    assert_eq!(encode_graph6(&w5), "EUZw");
    assert_eq!(encode_graph6(&Graph::empty(1)), "@");
    let adj = parse_adjacency_list("0: [2, 3, 5], 1: [3, 4, 5], 2: [4, 5], 3: [5], 4: [5]", None).unwrap();
    assert_eq!(adj, w5);
    assert_eq!(parse_adjacency_list("0: [], 1: [], 2: []", None).unwrap(), Graph::empty(0));
    assert_eq!(parse_adjacency_list("0: [], 1: [], 2: []", Some(3)).unwrap(), Graph::empty(3));
}

#[test]
fn ranks() {
    let unit = |n: usize| -> Vec<Vec<Rational>> {
        (0..n).map(|i| (0..n).map(|j| rational((i == j) as i64, 1)).collect()).collect()
    };
    assert_eq!(rational_rank(&unit(5)), 5);
    let rows: Vec<Vec<Rational>> =
        [[1, 1, 0], [0, 1, 1], [1, 2, 1]].iter().map(|r| r.iter().map(|&x| rational(x, 1)).collect()).collect();
    assert_eq!(rational_rank(&rows), 2);
    let w5 = g6("EUZw");
    let tight = tight_constraints(&w5, &w5_point()).unwrap();
    assert_eq!(rational_rank(&tight.iter().map(Constraint::row).collect::<Vec<_>>()), 6);
}

#[test]
fn constraint_generation() {
    let kinds = |g: &Graph| {
        let cs = generate_constraints(g).unwrap();
        let count = |f: fn(&ConstraintKind) -> bool| cs.iter().filter(|c| f(&c.kind)).count();
        (
            count(|k| matches!(k, ConstraintKind::NonNegativity(_))),
            count(|k| matches!(k, ConstraintKind::Clique(_))),
            count(|k| matches!(k, ConstraintKind::OddCircuit(_))),
        )
    };
    assert_eq!(kinds(&cycle(5)), (5, 10, 1));
    assert_eq!(kinds(&complete(3)), (3, 7, 1));
    assert_eq!(kinds(&Graph::empty(4)), (4, 4, 0));
    let c5 = generate_constraints(&cycle(5)).unwrap();
    let odd = c5.iter().find(|c| matches!(c.kind, ConstraintKind::OddCircuit(_))).unwrap();
    assert_eq!(odd.rhs, rational(2, 1));
}

#[test]
fn membership_examples() {
    assert!(hstab_membership(&g6("EUZw"), &w5_point()).unwrap().is_member());
    let halves = RationalVector::new(vec![rational(1, 2); 5]);
    let m = hstab_membership(&cycle(5), &halves).unwrap();
    assert!(!m.is_member());
    assert!(matches!(m.violated.unwrap().kind, ConstraintKind::OddCircuit(_)));
    let stable = RationalVector::indicator(5, &[0, 2]);
    assert!(hstab_membership(&cycle(5), &stable).unwrap().is_member());
}

#[test]
fn tight_constraint_examples() {
    let tight = tight_constraints(&cycle(5), &RationalVector::indicator(5, &[0, 2])).unwrap();
    for v in [1, 3, 4] {
        assert!(tight.iter().any(|c| c.kind == ConstraintKind::NonNegativity(v)));
    }
    for v in [0, 2] {
        assert!(tight.iter().any(|c| c.kind == ConstraintKind::Clique(vec![v])));
    }
    assert!(tight_constraints(&cycle(5), &thirds(5)).unwrap().is_empty());

    let co_c7 = g6("FrjZo");
    let tight = tight_constraints(&co_c7, &thirds(7)).unwrap();
    assert!(tight.iter().any(|c| matches!(&c.kind, ConstraintKind::Clique(k) if k.len() == 3)));
    // The 7-circuit sums to 7/3 < 3; only triangles are tight.
    assert!(tight.iter().any(|c| matches!(&c.kind, ConstraintKind::OddCircuit(s) if s.len() == 3)));
    assert!(!tight.iter().any(|c| matches!(&c.kind, ConstraintKind::OddCircuit(s) if s.len() == 7)));
    assert_eq!(rational_rank(&tight.iter().map(Constraint::row).collect::<Vec<_>>()), 7);
}

#[test]
fn vertex_examples() {
    let r = verify_hstab_vertex(&g6("EUZw"), &w5_point()).unwrap();
    assert!(r.member && r.non_integral && r.is_vertex);
    let r = verify_hstab_vertex(&g6("L?pFFb{Ft{]aNo"), &thirds(13)).unwrap();
    assert!(r.is_vertex);
    let r = verify_hstab_vertex(&cycle(5), &thirds(5)).unwrap();
    assert!(r.member && r.non_integral && !r.is_vertex);
    assert_eq!(r.rank, 0);
}

#[test]
fn fractional_chromatic_numbers() {
    assert_eq!(fractional_chromatic_hperfect(&cycle(5)), rational(5, 2));
    assert_eq!(fractional_chromatic_hperfect(&complete_bipartite(2, 3)), rational(2, 1));
    assert_eq!(fractional_chromatic_hperfect(&co_line(&prism())), rational(3, 1));
}

#[test]
fn recognition_examples() {
    assert_eq!(check_root_conditions(&wheel(5)).unwrap(), None);
    assert_eq!(check_root_conditions(&prism()).unwrap(), None);
    assert!(matches!(check_root_conditions(&cycle(7)).unwrap(), Some(Witness::LongOddCircuit(c)) if c.len() == 7));
    let h = cycle(5).disjoint_union(&complete(2));
    assert!(matches!(check_root_conditions(&h).unwrap(), Some(Witness::EdgeMissesFiveCircuit { .. })));

    assert_eq!(h_perfect_col(&co_line(&wheel(5))).h_perfect, Some(true));
    let r = h_perfect_col(&co_line(&cycle(7)));
    assert_eq!(r.h_perfect, Some(false));
    assert!(matches!(r.witness, Some(Witness::LongOddCircuit(ref c)) if c.len() == 7));
    let k6 = h_perfect_col(&co_line(&complete(6))).h_perfect.unwrap();
    assert_eq!(k6, common::root_conditions_hold(&complete(6)));

    for h in [prism(), wheel(5)] {
        assert_eq!(t_perfect_col(&co_line(&h)).t_perfect, Some(true));
    }
    let r = t_perfect_col(&co_line(&copies(&complete(3), 4)));
    assert_eq!((r.h_perfect, r.t_perfect), (Some(true), Some(false)));
}

#[test]
fn gamma_examples() {
    assert_eq!(gamma_exact(&wheel(5)).unwrap().0, 4);
    assert_eq!(gamma_exact(&complete(5)).unwrap().0, 3);
    assert_eq!(gamma_exact(&cycle(5)).unwrap().0, 3);
}

#[test]
fn cover_coloring_examples() {
    let (k, cover) = gamma_exact(&wheel(5)).unwrap();
    let (l, edge_of) = line_graph(&wheel(5));
    let g = l.complement();
    let c = cover_to_coloring(&wheel(5), &cover, &g, &edge_of).unwrap();
    assert!(c.is_proper(&g) && c.count() == k);

    let stars = StarTriangleCover { elements: (0..3).map(|v| CoverElement::full_star(&cycle(5), v)).collect() };
    assert!(!stars.is_cover_of(&cycle(5)));
    let stars = StarTriangleCover { elements: [0, 2, 4].iter().map(|&v| CoverElement::full_star(&cycle(5), v)).collect() };
    let (l, edge_of) = line_graph(&cycle(5));
    let c = cover_to_coloring(&cycle(5), &stars, &l.complement(), &edge_of).unwrap();
    assert!(c.is_proper(&l.complement()) && c.count() <= 3);

    let tri = StarTriangleCover { elements: vec![CoverElement::triangle(0, 1, 2)] };
    let (l, edge_of) = line_graph(&complete(3));
    assert_eq!(cover_to_coloring(&complete(3), &tri, &l.complement(), &edge_of).unwrap().count(), 1);
}

#[test]
fn cm_examples() {
    let c = cm_cover(&cycle(5)).unwrap();
    assert_eq!((c.stars.len(), c.fc_pieces.len(), c.value), (0, 1, 2));
    for h in [wheel(5), prism()] {
        let c = cm_cover(&h).unwrap();
        assert!(c.is_valid_for(&h));
        assert_eq!(c.value, 3);
    }
    let c = cm_cover(&prism()).unwrap();
    assert_eq!(c.stars.len(), 1);
    assert_eq!(c.fc_pieces.len(), 1);
    assert_eq!(c.fc_pieces[0].len(), 5);
}

#[test]
fn spanning_five_circuits() {
    assert_eq!(spanning_c5(&cycle(5)).unwrap().len(), 5);
    assert!(spanning_c5(&c5_chord()).unwrap().is_circuit_of(&c5_chord()));
    assert!(spanning_c5(&complete(5)).unwrap().is_circuit_of(&complete(5)));
}

#[test]
fn structured_three_colorings() {
    let g = co_line(&cycle(5));
    let c = three_color_structured(&g).unwrap();
    assert!(c.is_proper(&g) && c.count() == 3);

    let mut edges = prism().edges();
    edges.retain(|&e| e != (0, 3));
    let h = Graph::from_edges(6, &edges).unwrap();
    assert!(is_isomorphic(&prism().complement(), &cycle(6)));
    let g = co_line(&h);
    let c = three_color_structured(&g).unwrap();
    assert!(c.is_proper(&g) && c.count() <= 3);
    assert_eq!(c.count(), chromatic_number_exact(&g).unwrap().0);

    assert!(matches!(three_color_structured(&co_line(&wheel(5))), Err(ColoringError::ContainsForbidden { .. })));
}

#[test]
fn four_colorings() {
    for h in [prism(), wheel(5), cycle(5)] {
        let g = co_line(&h);
        let c = four_color_col(&g).unwrap();
        assert!(c.is_proper(&g) && c.count() <= 4);
    }
}

#[test]
fn hitting_stable_sets() {
    let g = co_line(&copies(&complete(3), 4));
    let s = stable_set_hitting_max_cliques(&g).unwrap();
    // Disjoint root edges are adjacent here; a stable set is a star or a
    // triangle of the root, and one triangle meets every maximum matching.
    assert_eq!(s.len(), 3);
    assert!(g.is_stable(&s));
    assert!(maximum_cliques(&g).iter().all(|k| k.iter().any(|v| s.contains(v))));

    let g = co_line(&wheel(5));
    let s = stable_set_hitting_max_cliques(&g).unwrap();
    assert!(g.is_stable(&s));
    assert!(maximum_cliques(&g).iter().filter(|k| k.len() == 3).all(|k| k.iter().any(|v| s.contains(v))));

    assert_eq!(stable_set_hitting_max_cliques(&complete(3)).unwrap().len(), 1);
}

#[test]
fn ceil_chif_examples() {
    let g = co_line(&copies(&complete(3), 4));
    assert_eq!(ceil_chif_coloring(&g).unwrap().count(), 4);
    let g = co_line(&cycle(5));
    assert_eq!(ceil_chif_coloring(&g).unwrap().count(), 3);
    let g = co_line(&complete_bipartite(1, 3).disjoint_union(&complete(2)));
    let c = ceil_chif_coloring(&g).unwrap();
    assert!(g.is_bipartite());
    assert_eq!(c.count(), 2);
}
