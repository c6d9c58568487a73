mod common;

use common::{arb_graph, exhaustive10, exhaustive9, glued_corpus, random_corpus};
use penta_oracle::{self as oracle, samples::random_coloring};
use pentagraph::coloring::{
    chromatic_number_bruteforce, combine_p3, four_color_layers, kempe_component, kempe_swap, normalize_on_star,
    three_color_unchecked,
};
use pentagraph::decomposition::{find_p3_cutset, find_strong_star_bruteforce, minimize_star, ParityStarCutset};
use pentagraph::{
    decompose_with, fixtures, four_color, three_color, three_color_with, verify_coloring, Coloring, ColoringError,
    DecompositionOutcome, Graph, Limits, Priority,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_corpora() -> impl Iterator<Item = &'static Graph> {
    exhaustive10().iter().chain(random_corpus()).chain(glued_corpus())
}

#[test]
fn four_colouring_by_layers() {
    for g in all_corpora() {
        let c = four_color(g).unwrap();
        assert!(verify_coloring(g, &c).unwrap());
        for layering in four_color_layers(g) {
            for &layer in &layering.layers {
                assert!(oracle::is_bipartite(&g.induced(layer).graph));
            }
        }
    }
}

#[test]
fn three_colouring_both_orders() {
    let lim = Limits::default();
    for priority in [Priority::Cheap, Priority::CutsetsFirst] {
        for g in all_corpora() {
            let c = three_color_with(g, &lim, priority).unwrap_or_else(|e| panic!("{e} on {:?}", g.edges()));
            assert_eq!(c.k, 3);
            assert!(verify_coloring(g, &c).unwrap());
        }
    }
}

#[test]
fn chromatic_numbers_agree() {
    let lim = Limits::default();
    for g in exhaustive10().iter().chain(random_corpus().iter().filter(|g| g.n() <= 14)) {
        let chi = oracle::chromatic_number(g);
        assert!(chi <= 3);
        assert_eq!(chromatic_number_bruteforce(g, 4), Some(chi));
        assert!(three_color(g, &lim).unwrap().used() >= chi);
    }
}

#[test]
fn fixture_colourings() {
    let lim = Limits::default();
    let p = fixtures::petersen();
    let c = three_color(&p, &lim).unwrap();
    assert!(verify_coloring(&p, &c).unwrap());
    assert_eq!((c.used(), oracle::chromatic_number(&p)), (3, 3));
    let c5 = three_color(&fixtures::c5(), &lim).unwrap();
    let mut sizes: Vec<usize> = (1..=3).map(|k| c5.class(k).len()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 2, 2]);
    let c = four_color(&fixtures::c5()).unwrap();
    assert!(c.used() <= 3);
    match three_color(&fixtures::c7(), &lim) {
        Err(ColoringError::NotPentagraph(w)) => assert_eq!(w.cycle().len(), 7),
        other => panic!("{other:?}"),
    }
    assert_eq!(chromatic_number_bruteforce(&Graph::path(2).unwrap(), 4), Some(2));
    assert_eq!(chromatic_number_bruteforce(&p, 4), Some(3));
}

#[test]
fn verification_examples() {
    let p = fixtures::petersen();
    let c = three_color(&p, &Limits::default()).unwrap();
    let mut bad = c.clone();
    let (u, v) = p.edges()[0];
    bad.colors[u] = bad.colors[v];
    assert!(!verify_coloring(&p, &bad).unwrap());
    let mut partial = c.clone();
    partial.colors[3] = 0;
    assert!(verify_coloring(&p, &partial).is_err());
    assert!(verify_coloring(&p, &Coloring::new(3, vec![1; 9])).is_err());
}

/// The `{a, b}` component of `v`, straight from the definition.
fn kempe_oracle(g: &Graph, c: &[u8], (a, b): (u8, u8), v: usize) -> u64 {
    let keep: Vec<usize> = (0..g.n()).filter(|&u| c[u] == a || c[u] == b).collect();
    let edges = g.edges().into_iter().filter(|&(x, y)| keep.contains(&x) && keep.contains(&y));
    let h = Graph::new(g.n(), edges).unwrap();
    oracle::components(&h).into_iter().find(|m| m >> v & 1 == 1).unwrap()
}

#[test]
fn kempe_exchanges_on_random_colourings() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pool: Vec<&Graph> = all_corpora().filter(|g| g.n() >= 5).collect();
    let mut done = 0;
    while done < 1000 {
        let g = pool[rng.gen_range(0..pool.len())];
        let Some(colors) = random_coloring(g, 3, &mut rng) else { continue };
        let c = Coloring::new(3, colors);
        let v = rng.gen_range(0..g.n());
        let other = *[1u8, 2, 3].iter().filter(|&&k| k != c.colors[v]).collect::<Vec<_>>().choose(&mut rng).unwrap();
        let pair = (c.colors[v], *other);
        let comp = kempe_component(g, &c, pair, v).unwrap();
        assert_eq!(common::mask(comp.vertices), kempe_oracle(g, &c.colors, pair, v));
        let swapped = kempe_swap(g, &c, pair, v).unwrap();
        assert!(swapped.is_proper(g));
        assert_eq!(kempe_component(g, &swapped, pair, v).unwrap().vertices, comp.vertices);
        assert_eq!(kempe_swap(g, &swapped, pair, v).unwrap(), c);
        done += 1;
    }
    let c5 = fixtures::c5();
    let c = Coloring::new(3, vec![1, 2, 1, 2, 3]);
    assert!(matches!(kempe_swap(&c5, &c, (1, 2), 4), Err(ColoringError::Contract(_))));
}

/// Strong star certificates from both decomposition orders and the
/// exhaustive search, each re-minimized as a parity star-cutset.
fn star_certificates() -> Vec<(&'static Graph, ParityStarCutset)> {
    let lim = Limits::default();
    let mut out = Vec::new();
    for g in exhaustive9().iter().chain(random_corpus()) {
        let star = match decompose_with(g, &lim, Priority::CutsetsFirst).unwrap() {
            DecompositionOutcome::Star(s) => Some(s),
            _ if g.n() <= 9 => find_strong_star_bruteforce(g, &lim).unwrap(),
            _ => None,
        };
        if let Some(s) = star {
            out.push((g, minimize_star(g, s, false, &lim).unwrap()));
        }
    }
    out
}

#[test]
fn normalization_on_star_sides() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let certs = star_certificates();
    assert!(certs.len() >= 50, "{}", certs.len());
    let mut runs = 0;
    for (g, star) in &certs {
        let x = star.cutset();
        for &a in &star.components {
            let sub = g.induced(a.union(x));
            let v = sub.local_vertex(star.center).unwrap();
            let leaves = sub.local_set(star.leaves);
            for _ in 0..5 {
                let Some(colors) = random_coloring(&sub.graph, 3, &mut rng) else { continue };
                let norm = normalize_on_star(&sub.graph, &Coloring::new(3, colors), v, leaves)
                    .unwrap_or_else(|e| panic!("{e:?} on {:?} with {star:?}", g.edges()));
                assert!(norm.passes <= leaves.len());
                assert!(norm.coloring.is_proper(&sub.graph));
                assert_eq!(norm.coloring.colors[v], 1);
                assert!(leaves.iter().all(|l| norm.coloring.colors[l] == 2));
                runs += 1;
            }
        }
    }
    assert!(runs > 100);
}

fn permutations3() -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for a in 1..=3u8 {
        for b in 1..=3u8 {
            for c in 1..=3u8 {
                if a != b && b != c && a != c {
                    out.push(vec![0, a, b, c]);
                }
            }
        }
    }
    out
}

#[test]
fn p3_recombination_is_palette_invariant() {
    let lim = Limits::default();
    let perms = permutations3();
    let mut cuts = 0;
    for g in exhaustive10().iter().chain(random_corpus()) {
        let Some(cut) = find_p3_cutset(g) else { continue };
        let sides: Vec<Coloring> = cut
            .sides
            .iter()
            .map(|&a| {
                three_color_unchecked(&g.induced(a.union(cut.vertex_set())).graph, &lim, Priority::Cheap).unwrap()
            })
            .collect();
        for i in 0..perms.len() {
            let permuted: Vec<Coloring> =
                sides.iter().enumerate().map(|(j, c)| c.permuted(&perms[(i + j) % perms.len()])).collect();
            let merged = combine_p3(g, &cut, &permuted).unwrap();
            assert!(merged.is_proper(g));
        }
        cuts += 1;
    }
    assert!(cuts > 50);
}

#[test]
fn p3_recombination_over_all_side_colourings() {
    // two pentagons sharing the path 0-1-2
    let book = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6), (6, 0)]).unwrap();
    let cut = find_p3_cutset(&book).unwrap();
    let side = |a: usize| book.induced(cut.sides[a].union(cut.vertex_set())).graph;
    let (g0, g1) = (side(0), side(1));
    let mut merged = 0;
    for c0 in oracle::proper_colorings(&g0, 3) {
        for c1 in oracle::proper_colorings(&g1, 3) {
            let c = combine_p3(&book, &cut, &[Coloring::new(3, c0.clone()), Coloring::new(3, c1)]).unwrap();
            assert!(c.is_proper(&book));
            merged += 1;
        }
    }
    assert_eq!(merged, 30 * 30);
}

#[test]
fn three_colour_output_is_palette_invariant() {
    let lim = Limits::default();
    for g in exhaustive9().iter().filter(|g| g.n() >= 8) {
        let c = three_color(g, &lim).unwrap();
        for p in permutations3() {
            assert!(c.permuted(&p).is_proper(g));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn kempe_swap_is_a_proper_involution(pick in any::<prop::sample::Index>(), seed in any::<u64>(), v in any::<prop::sample::Index>(), hi in any::<bool>()) {
        let g = pick.get(exhaustive10());
        prop_assume!(g.n() > 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let colors = random_coloring(g, 3, &mut rng);
        prop_assume!(colors.is_some());
        let c = Coloring::new(3, colors.unwrap());
        let v = v.index(g.n());
        let others: Vec<u8> = (1..=3).filter(|&k| k != c.colors[v]).collect();
        let pair = (c.colors[v], others[hi as usize]);
        let s = kempe_swap(g, &c, pair, v).unwrap();
        prop_assert!(s.is_proper(g));
        prop_assert_eq!(kempe_swap(g, &s, pair, v).unwrap(), c);
    }

    #[test]
    fn chromatic_number_matches_oracle(g in arb_graph(8, 0.35)) {
        prop_assert_eq!(chromatic_number_bruteforce(&g, 8), Some(oracle::chromatic_number(&g)));
    }

    #[test]
    fn colourings_of_random_pentagraphs(n in 5usize..40, p in 0.2f64..1.0, seed in any::<u64>()) {
        let lim = Limits::default();
        let g = pentagraph::corpus::random_pentagraph(n, p, seed, &lim);
        prop_assert!(four_color(&g).unwrap().is_proper(&g));
        for priority in [Priority::Cheap, Priority::CutsetsFirst] {
            prop_assert!(three_color_with(&g, &lim, priority).unwrap().is_proper(&g));
        }
    }
}
