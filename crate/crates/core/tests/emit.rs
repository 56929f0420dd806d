use std::sync::OnceLock;

use num::BigInt;
use partition_forge::asm::{enumerate_asm, enumerate_tilings, Asm, Laurent, Monomial, Tiling};
use partition_forge::cylindric::CylProfile;
use partition_forge::emit::{emit, parse_json, Format};
use partition_forge::rational::{parse_rational, Rational};
use partition_forge::Partition;
use proptest::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
enum Object {
    Partition(Partition),
    Rational(RationalText),
    Asm(Asm),
    Laurent(Laurent),
    Tiling(Tiling),
    Profile(CylProfile),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
struct RationalText(#[serde(with = "partition_forge::rational::as_string")] Rational);

fn matrices() -> &'static Vec<Asm> {
    static ALL: OnceLock<Vec<Asm>> = OnceLock::new();
    ALL.get_or_init(|| enumerate_asm(4).unwrap())
}

fn tilings() -> &'static Vec<Tiling> {
    static ALL: OnceLock<Vec<Tiling>> = OnceLock::new();
    ALL.get_or_init(|| enumerate_tilings(3).unwrap())
}

fn profiles() -> &'static Vec<CylProfile> {
    static ALL: OnceLock<Vec<CylProfile>> = OnceLock::new();
    ALL.get_or_init(|| (1..=6).flat_map(CylProfile::all_of_period).collect())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..500).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn laurent() -> impl Strategy<Value = Laurent> {
    let monomial = prop::collection::btree_map(prop::sample::select(vec!["q", "t", "X[1,2]", "lambda"]), -3i64..4, 0..3)
        .prop_map(|m| m.into_iter().filter(|&(_, e)| e != 0).map(|(v, e)| (v.to_string(), e)).collect::<Monomial>());
    prop::collection::vec((monomial, rational()), 0..5).prop_map(|terms| {
        let mut out = Laurent::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    })
}

fn object() -> impl Strategy<Value = Object> {
    prop_oneof![
        prop::collection::vec(0u32..9, 0..7).prop_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            parts.retain(|&p| p > 0);
            Object::Partition(Partition::new(parts).unwrap())
        }),
        rational().prop_map(|r| Object::Rational(RationalText(r))),
        (0..matrices().len()).prop_map(|i| Object::Asm(matrices()[i].clone())),
        laurent().prop_map(Object::Laurent),
        (0..tilings().len()).prop_map(|i| Object::Tiling(tilings()[i].clone())),
        (0..profiles().len()).prop_map(|i| Object::Profile(profiles()[i].clone())),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn json_round_trips(objects in prop::collection::vec(object(), 1..8)) {
        let text = emit(&objects, Format::Json).unwrap();
        let back: Vec<Object> = parse_json(&text).unwrap();
        prop_assert_eq!(&back, &objects);
        prop_assert_eq!(emit(&back, Format::Json).unwrap(), text);
    }

    #[test]
    fn csv_has_one_row_per_object(objects in prop::collection::vec(object(), 1..8)) {
        let text = emit(&objects, Format::Csv).unwrap();
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        prop_assert_eq!(reader.records().count(), objects.len());
    }
}

#[test]
fn canonical_forms() {
    let p = Partition::new(vec![5, 3, 3, 2]).unwrap();
    assert_eq!(emit(&[p], Format::Json).unwrap(), "[\n  [\n    5,\n    3,\n    3,\n    2\n  ]\n]\n");
    assert_eq!(serde_json::to_string(&Object::Rational(RationalText(parse_rational("4/6").unwrap()))).unwrap(), r#"{"kind":"rational","value":"2/3"}"#);
    let profile: CylProfile = "10110".parse().unwrap();
    assert_eq!(serde_json::to_string(&profile).unwrap(), "\"10110\"");
    assert!(parse_json::<CylProfile>("\"2X\"").is_err());
    assert!(parse_json::<Asm>("[[1,1],[0,1]]").is_err());
}
