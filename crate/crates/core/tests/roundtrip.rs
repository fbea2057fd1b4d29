use chainstrip::{insertion_tableau, Error, PartialTableau, Partition, Permutation, StandardTableau, StripSequence};
use proptest::prelude::*;

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn strips(max_n: usize) -> impl Strategy<Value = StripSequence> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::btree_set(1..n.max(2), 0..n).prop_map(move |b| {
            StripSequence::from_breaks(n, b.into_iter().filter(|&x| x < n)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn permutations_round_trip(pi in permutation(12)) {
        prop_assert_eq!(pi.to_string().parse::<Permutation>().unwrap(), pi);
    }

    #[test]
    fn tableaux_round_trip(pi in permutation(12)) {
        let t = insertion_tableau(&pi);
        prop_assert_eq!(t.to_string().parse::<StandardTableau>().unwrap(), t.clone());
        let p = t.to_partial().shifted(3);
        prop_assert_eq!(p.to_string().parse::<PartialTableau>().unwrap(), p);
    }

    #[test]
    fn partitions_round_trip(pi in permutation(14)) {
        let shape = insertion_tableau(&pi).shape();
        if !shape.is_empty() {
            prop_assert_eq!(shape.to_string().parse::<Partition>().unwrap(), shape);
        }
    }

    #[test]
    fn strip_sequences_round_trip(s in strips(12)) {
        prop_assert_eq!(s.to_string().parse::<StripSequence>().unwrap(), s);
    }

    #[test]
    fn corrupted_tableaux_are_rejected(pi in permutation(9), swap in any::<prop::sample::Index>()) {
        let t = insertion_tableau(&pi);
        prop_assume!(t.n() >= 2);
        // swapping 1 with another entry always breaks the increasing conditions
        let other = swap.index(t.n() - 1) + 2;
        let text: String = t
            .rows()
            .iter()
            .map(|r| r.iter().map(|&v| if v == 1 { other } else if v == other { 1 } else { v }.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("/");
        let parsed = text.parse::<StandardTableau>();
        prop_assert!(matches!(parsed, Err(Error::Parse { .. })), "{} parsed", text);
    }
}

#[test]
fn parse_errors_carry_positions() {
    let cases = [("1,2/3,x", 6), ("1,3/2,2", 6), ("2,1", 0)];
    for (s, _) in cases {
        match s.parse::<StandardTableau>() {
            Err(Error::Parse { pos, .. }) => assert!(pos < s.len(), "{s}: {pos}"),
            other => panic!("{s}: {other:?}"),
        }
    }
    match "1,2/3,x".parse::<StandardTableau>() {
        Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
        other => panic!("{other:?}"),
    }
    assert!("1-2|4".parse::<StripSequence>().is_err());
    assert!("3,3,1".parse::<Partition>().is_ok());
    assert!("1,3".parse::<Partition>().is_err());
}
