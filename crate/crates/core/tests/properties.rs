use hopfbrace_core::tensor::total_dim;
use hopfbrace_core::{FieldSpec, LegPermutation, LinMap, Scalar};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(3).unwrap()),
        Just(FieldSpec::prime(7).unwrap()),
        Just(FieldSpec::prime(2_147_483_647).unwrap()),
    ]
}

fn scalar_in(field: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-40i64..40, 1i64..12).prop_map(move |(n, d)| match field {
        FieldSpec::Rationals => field.fraction(&n.into(), &d.into()).unwrap(),
        FieldSpec::Prime(_) => field.from_i64(n * d),
    })
}

fn map_in(field: FieldSpec, dom: Vec<usize>, cod: Vec<usize>) -> impl Strategy<Value = LinMap> {
    let (nd, nc) = (total_dim(&dom), total_dim(&cod));
    proptest::collection::vec((0..nc, 0..nd, -3i64..4), 0..8).prop_map(move |entries| {
        let mut m = LinMap::zero(field, &dom, &cod);
        for (o, i, c) in entries {
            let out = hopfbrace_core::tensor::multi_index(&cod, o);
            let inp = hopfbrace_core::tensor::multi_index(&dom, i);
            m.add(&out, &inp, field.from_i64(c)).unwrap();
        }
        m
    })
}

fn triple() -> impl Strategy<Value = (FieldSpec, Scalar, Scalar, Scalar)> {
    field_strategy().prop_flat_map(|f| (Just(f), scalar_in(f), scalar_in(f), scalar_in(f)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms((field, a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &field.zero(), a.clone());
        prop_assert_eq!(&a * &field.one(), a.clone());
        prop_assert!((&a + &-&a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
        prop_assert!((&a * &b).is_canonical());
        prop_assert_eq!(field.parse(&a.encode()).unwrap(), a);
    }
}

fn chain() -> impl Strategy<Value = (LinMap, LinMap, LinMap, usize)> {
    (field_strategy(), 1usize..4, 1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(f, a, b, c, d)| {
        (map_in(f, vec![c], vec![d]), map_in(f, vec![b], vec![c]), map_in(f, vec![a], vec![b]), Just(a))
    })
}

fn pairs() -> impl Strategy<Value = (LinMap, LinMap, LinMap, LinMap)> {
    (field_strategy(), proptest::collection::vec(1usize..3, 6)).prop_flat_map(|(f, d)| {
        (
            map_in(f, vec![d[1]], vec![d[2]]),
            map_in(f, vec![d[4]], vec![d[5]]),
            map_in(f, vec![d[0]], vec![d[1]]),
            map_in(f, vec![d[3]], vec![d[4]]),
        )
    })
}

fn two_perms() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, Vec<usize>)> {
    (2usize..5).prop_flat_map(|n| {
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (perm.clone(), perm, proptest::collection::vec(1usize..3, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn composition_is_associative_and_unital((f, g, h, a) in chain()) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let id = LinMap::identity(f.field(), &[a]);
        prop_assert_eq!(h.compose(&id).unwrap(), h.clone());
        let id = LinMap::identity(f.field(), h.codomain_dims());
        prop_assert_eq!(id.compose(&h).unwrap(), h);
    }

    #[test]
    fn interchange_law((f, g, h, k) in pairs()) {
        let left = f.tensor(&g).unwrap().compose(&h.tensor(&k).unwrap()).unwrap();
        let right = f.compose(&h).unwrap().tensor(&g.compose(&k).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn permutation_maps_compose((p, q, dims) in two_perms()) {
        let field = FieldSpec::Rationals;
        let p = LegPermutation::new(p).unwrap();
        let q = LegPermutation::new(q).unwrap();
        let first = LinMap::permutation(field, &dims, &q).unwrap();
        let mid: Vec<usize> = q.images().iter().map(|&i| dims[i]).collect();
        let second = LinMap::permutation(field, &mid, &p).unwrap();
        let both = LinMap::permutation(field, &dims, &p.after(&q).unwrap()).unwrap();
        prop_assert_eq!(second.compose(&first).unwrap(), both);
        let back = LinMap::permutation(field, &mid, &q.inverse()).unwrap();
        prop_assert_eq!(back.compose(&first).unwrap(), LinMap::identity(field, &dims));
    }
}
