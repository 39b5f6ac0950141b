use proptest::prelude::*;

use tourney::flows::{flow_sum, selection_flow, total_flows, Flow};
use tourney::generate::{random_tournament, Seed};
use tourney::io::TournamentDoc;
use tourney::psel::{kappa, SubsetSelection};
use tourney::scores::{landau_check, realize, score_sequence, ScoreSequence};
use tourney::Tournament;

fn tournament(max_n: usize) -> impl Strategy<Value = Tournament> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_tournament(n, Seed(seed)).unwrap())
}

proptest! {
    #[test]
    fn converse_is_an_involution(t in tournament(20)) {
        prop_assert_eq!(t.converse().converse(), t.clone());
        prop_assert!(t.equivalent(&t.converse()).unwrap());
    }

    #[test]
    fn restriction_keeps_orientation(t in tournament(15), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..8)) {
        let mut subset: Vec<usize> = picks.iter().map(|i| i.index(t.n())).collect();
        subset.dedup();
        let mut seen = std::collections::HashSet::new();
        subset.retain(|v| seen.insert(*v));
        let r = t.restrict(&subset).unwrap();
        for (i, &u) in subset.iter().enumerate() {
            for (j, &v) in subset.iter().enumerate() {
                prop_assert_eq!(r.beats(i, j), t.beats(u, v));
            }
        }
    }

    #[test]
    fn documents_round_trip(t in tournament(14)) {
        let doc = TournamentDoc::new(t.clone());
        prop_assert_eq!(&TournamentDoc::parse(&doc.to_text()).unwrap().tournament, &t);
        prop_assert_eq!(&TournamentDoc::parse(&doc.to_json()).unwrap().tournament, &t);
        prop_assert_eq!(TournamentDoc::parse(&doc.to_text()).unwrap().to_text(), doc.to_text());
    }

    #[test]
    fn realize_round_trips_sampled_sequences(t in tournament(25)) {
        let seq = score_sequence(&t);
        prop_assert!(landau_check(&seq));
        prop_assert_eq!(score_sequence(&realize(&seq).unwrap()), seq);
    }

    #[test]
    fn landau_rejects_perturbed_sums(t in tournament(12), bump in 0usize..12) {
        let mut v = score_sequence(&t).as_slice().to_vec();
        let i = bump % v.len();
        if v[i] + 1 < v.len() {
            v[i] += 1;
            prop_assert!(!landau_check(&ScoreSequence::new(v).unwrap()));
        }
    }

    #[test]
    fn integer_flows_sum_to_zero(n in 1usize..12, seed in any::<u64>()) {
        let mut x = seed;
        let upper = (0..n * (n - 1) / 2)
            .map(|_| { x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); (x >> 40) as i64 - (1 << 23) })
            .collect();
        let f = Flow::from_upper(n, upper).unwrap();
        prop_assert_eq!(flow_sum(&f), 0);
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(f.value(a, b), -f.value(b, a));
            }
        }
    }

    #[test]
    fn converse_negates_selection_flow(t in tournament(12)) {
        let phi: Vec<i64> = total_flows(selection_flow(&t).flow());
        let phi_c: Vec<i64> = total_flows(selection_flow(&t.converse()).flow());
        prop_assert_eq!(phi_c, phi.iter().map(|p| -p).collect::<Vec<_>>());
    }

    #[test]
    fn kappa_is_conserved(m in 3usize..9, p_off in 0usize..6, seed in any::<u64>()) {
        let p = 2 + p_off % (m - 2);
        let mut x = seed;
        let sel = SubsetSelection::from_fn(m, p, |s| {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1);
            s[(x >> 33) as usize % s.len()]
        }).unwrap();
        let k = kappa(&sel);
        let total = tourney::psel::binomial(m as u64, p as u64) as usize;
        let per_vertex = tourney::psel::binomial(m as u64 - 1, p as u64 - 1) as usize;
        prop_assert_eq!(k.total(), total);
        prop_assert!(k.counts.iter().all(|&c| c <= per_vertex));
        for (s, chosen) in sel.entries() {
            prop_assert!(s.contains(&chosen));
        }
        prop_assert_eq!(SubsetSelection::from_text(&sel.to_text()).unwrap(), sel);
    }
}
