//! Wire formats survive a trip through JSON text unchanged.

use num_traits::Zero;
use proptest::prelude::*;
use realspec::io::{self, CurvetteW, RootW, SeriesW};
use realspec::roots::BinomialRoot;
use realspec::{GenSeries, GroupVec, Rat, SemiCurvette, SignChar};
use serde::{de::DeserializeOwned, Serialize};

fn via_json<T: Serialize + DeserializeOwned>(x: &T) -> T {
    serde_json::from_str(&serde_json::to_string(x).unwrap()).unwrap()
}

fn rat_s() -> impl Strategy<Value = Rat> {
    (-50i64..=50, 1i64..=9).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn nonzero_rat_s() -> impl Strategy<Value = Rat> {
    rat_s().prop_filter("nonzero", |r| !r.is_zero())
}

/// Series with positive leading exponent, optionally truncated above it.
fn series_s() -> impl Strategy<Value = GenSeries> {
    (prop::collection::vec((nonzero_rat_s(), 1i64..=4, -5i64..=5), 1..4), prop::option::of(5i64..=7)).prop_filter_map(
        "nonzero",
        |(ts, cut)| {
            let terms = ts.into_iter().map(|(c, a, b)| (c, GroupVec::ints(&[a, b])));
            let s = GenSeries::from_terms(2, terms, cut.map(|a| GroupVec::ints(&[a, 0]))).ok()?;
            (!s.is_zero()).then_some(s)
        },
    )
}

proptest! {
    #[test]
    fn series(s in series_s()) {
        let w: SeriesW = via_json(&io::series_to(&s));
        prop_assert_eq!(io::series_from(2, &w).unwrap(), s);
    }

    #[test]
    fn curvettes(entries in prop::collection::vec(series_s(), 1..4), signs in prop::collection::vec(prop::bool::ANY, 2)) {
        let exact: Vec<GenSeries> = entries.iter().map(|e| e.forget_truncation()).collect();
        let sc = SignChar::new(signs.iter().map(|&b| if b { 1 } else { -1 }).collect(), 1).unwrap();
        let c = SemiCurvette::new(exact, sc).unwrap();
        let w: CurvetteW = via_json(&io::curvette_to(&c));
        prop_assert_eq!(io::curvette_from(&w).unwrap(), c);
    }

    #[test]
    fn roots(plus in prop::collection::vec(0u32..=4, 3), minus in prop::collection::vec(0u32..=4, 3), l in nonzero_rat_s()) {
        // Disjoint supports.
        let minus: Vec<u32> = minus.iter().zip(&plus).map(|(m, p)| if *p > 0 { 0 } else { *m }).collect();
        prop_assume!(plus != minus);
        let q = BinomialRoot::new(plus, minus, l).unwrap();
        let w: RootW = via_json(&io::root_to(&q));
        prop_assert_eq!(io::root_from(&w).unwrap(), q);
    }
}

