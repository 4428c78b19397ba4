use proptest::prelude::*;

use tourney::format::{parse, serialize};
use tourney::generators::{moon_embed, random_regular, random_tournament, SamplerConfig};
use tourney::spectrum::{
    all_pairs_spectra, brute_force_spectrum, cycle_spectrum_through_arc, is_path, path_spectrum, witness_path,
};
use tourney::{LengthSet, Tournament};

/// Tournament whose `i < j` pairs are oriented by consecutive bits of `code`.
fn from_code(p: usize, code: u64) -> Tournament {
    let mut bit = 0;
    Tournament::from_fn(p, |_, _| {
        let b = code >> bit & 1 == 1;
        bit += 1;
        b
    })
    .unwrap()
}

fn arb_tournament(max: usize) -> impl Strategy<Value = Tournament> {
    (2..=max, any::<u64>()).prop_map(|(p, seed)| random_tournament(p, seed).unwrap())
}

fn arb_perm(p: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..p).collect::<Vec<_>>()).prop_shuffle()
}

#[test]
fn every_order_five_tournament_matches_brute_force() {
    for code in 0..1u64 << 10 {
        let t = from_code(5, code);
        let table = all_pairs_spectra(&t);
        for x in 0..5 {
            for y in 0..5 {
                if x != y {
                    assert_eq!(table.get(x, y), brute_force_spectrum(&t, x, y).unwrap().lengths, "code {code} ({x}, {y})");
                }
            }
        }
    }
}

#[test]
fn every_order_four_strong_tournament_has_hamiltonian_cycles() {
    // A strong tournament of order 4 has a Hamiltonian cycle through some arc.
    for code in 0..1u64 << 6 {
        let t = from_code(4, code);
        let table = all_pairs_spectra(&t);
        let strong = (0..4).all(|x| (0..4).all(|y| x == y || !table.get(x, y).is_empty()));
        let ham = t.arcs().any(|(u, v)| cycle_spectrum_through_arc(&t, u, v).unwrap().contains(4));
        assert_eq!(strong, ham, "code {code}");
    }
}

#[test]
fn strong_tournaments_are_vertex_pancyclic() {
    // Every vertex of a strong tournament lies on cycles of all lengths 3..=p.
    for seed in 0..300 {
        let p = 3 + (seed as usize % 8);
        let t = random_tournament(p, seed).unwrap();
        let table = all_pairs_spectra(&t);
        let strong = (0..p).all(|x| (0..p).all(|y| x == y || !table.get(x, y).is_empty()));
        if !strong {
            continue;
        }
        for v in 0..p {
            let through = t
                .out_set(v)
                .iter()
                .map(|w| cycle_spectrum_through_arc(&t, v, w).unwrap())
                .fold(LengthSet::EMPTY, |a, b| LengthSet(a.0 | b.0));
            assert!(through.contains_all(LengthSet::range(3, p)), "seed {seed} vertex {v}: {through}");
        }
    }
}

#[test]
fn moon_embedding_is_regular_and_contains_the_input() {
    for seed in 0..200 {
        let p = 2 + (seed as usize % 11);
        let h = random_tournament(p, seed).unwrap();
        let e = moon_embed(&h).unwrap();
        assert!(e.tournament.is_regular());
        assert_eq!(e.tournament.order(), p + h.irregularity());
        for (u, v) in h.arcs() {
            assert!(e.tournament.arc(e.embedding[u], e.embedding[v]));
        }
    }
}

#[test]
fn regular_tournaments_of_order_eleven_are_strongly_panconnected() {
    for seed in 0..20 {
        let t = random_regular(5, &SamplerConfig::new(seed, 11)).unwrap();
        let table = all_pairs_spectra(&t);
        for x in 0..11 {
            for y in 0..11 {
                if x != y {
                    assert!(table.get(x, y).contains_all(LengthSet::range(3, 10)));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dp_matches_brute_force(t in arb_tournament(9), a in any::<usize>(), b in any::<usize>()) {
        let p = t.order();
        let (x, y) = (a % p, b % p);
        prop_assume!(x != y);
        prop_assert_eq!(path_spectrum(&t, x, y).unwrap(), brute_force_spectrum(&t, x, y).unwrap());
    }

    #[test]
    fn converse_swaps_endpoints(t in arb_tournament(12)) {
        let c = t.converse();
        let (a, b) = (all_pairs_spectra(&t), all_pairs_spectra(&c));
        for x in 0..t.order() {
            for y in 0..t.order() {
                prop_assert_eq!(a.get(x, y), b.get(y, x));
            }
        }
    }

    #[test]
    fn spectra_commute_with_relabelling((t, perm) in arb_tournament(11).prop_flat_map(|t| { let p = t.order(); (Just(t), arb_perm(p)) })) {
        let r = t.relabel(&perm).unwrap();
        let (a, b) = (all_pairs_spectra(&t), all_pairs_spectra(&r));
        for x in 0..t.order() {
            for y in 0..t.order() {
                prop_assert_eq!(a.get(x, y), b.get(perm[x], perm[y]));
            }
        }
    }

    #[test]
    fn spectra_are_sane(t in arb_tournament(12)) {
        let p = t.order();
        let table = all_pairs_spectra(&t);
        for x in 0..p {
            for y in 0..p {
                let spec = table.get(x, y);
                if x == y {
                    prop_assert!(spec.is_empty());
                    continue;
                }
                prop_assert!(spec.max().unwrap_or(0) < p);
                prop_assert_eq!(spec.contains(1), t.arc(x, y));
                for k in spec.iter() {
                    let w = witness_path(&t, x, y, k).unwrap().unwrap();
                    prop_assert_eq!(w.len(), k + 1);
                    prop_assert!(is_path(&t, &w));
                    prop_assert_eq!((w[0], w[k]), (x, y));
                }
            }
        }
    }

    #[test]
    fn converse_swaps_semidegrees(t in arb_tournament(20)) {
        let (d, c) = (t.degree_summary(), t.converse().degree_summary());
        prop_assert_eq!(&d.out_degrees, &c.in_degrees);
        prop_assert_eq!(&d.in_degrees, &c.out_degrees);
        prop_assert_eq!(d.irregularity, c.irregularity);
    }

    #[test]
    fn text_format_round_trips(t in arb_tournament(26)) {
        let text = serialize(&t);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back.tournament, &t);
        prop_assert_eq!(serialize(&back.tournament), text);
    }
}
