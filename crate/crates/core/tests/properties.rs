use mahon_core::characters::{char_value, wreath_compose, CharSpec};
use mahon_core::element::{decompose, recompose, reduce_tilde, ColoredPerm, LetterOrder};
use mahon_core::stats::{fmaf, fmaf_fixed_point_form, StatName};
use proptest::prelude::*;

fn colored(max_n: usize, max_r: u32) -> impl Strategy<Value = ColoredPerm> {
    (1..=max_n, 1..=max_r).prop_flat_map(|(n, r)| colored_in(n, r))
}

fn colored_in(n: usize, r: u32) -> impl Strategy<Value = ColoredPerm> {
    (
        Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(0..r, n),
    )
        .prop_map(move |(sigma, z)| ColoredPerm::new(r, sigma, z).unwrap())
}

fn pair(max_n: usize, max_r: u32) -> impl Strategy<Value = (ColoredPerm, ColoredPerm)> {
    (1..=max_n, 1..=max_r).prop_flat_map(|(n, r)| (colored_in(n, r), colored_in(n, r)))
}

proptest! {
    #[test]
    fn decomposition_round_trips(pi in colored(7, 5)) {
        for order in [LetterOrder::ValueBlockG, LetterOrder::ColorBlockG] {
            let (tau, rho) = decompose(&pi, order).unwrap();
            prop_assert_eq!(&recompose(&tau, &rho).unwrap(), &pi);
            prop_assert_eq!(rho.r(), 1);
            prop_assert_eq!(StatName::Inv(order).eval(&tau).unwrap(), 0);
        }
    }

    #[test]
    fn root_statistics_split_over_decomposition(pi in colored(7, 5)) {
        let (tau, rho) = decompose(&pi, LetterOrder::ColorBlockG).unwrap();
        let zhat = StatName::Zhat.eval(&tau).unwrap();
        prop_assert_eq!(StatName::Zhat.eval(&pi).unwrap(), zhat);
        let inv = StatName::Inv(LetterOrder::NaturalS).eval(&rho).unwrap();
        let maj = StatName::Maj(LetterOrder::NaturalS).eval(&rho).unwrap();
        prop_assert_eq!(StatName::Rinv.eval(&pi).unwrap(), inv + zhat);
        prop_assert_eq!(StatName::Rmaj.eval(&pi).unwrap(), maj + zhat);
        let r = pi.r() as u64;
        prop_assert_eq!(StatName::FmajG.eval(&pi).unwrap(), r * maj + StatName::Z.eval(&tau).unwrap());
    }

    #[test]
    fn characters_are_multiplicative((x, y) in pair(5, 6), a in 0u32..2, b_seed in 0u32..64) {
        let r = x.r();
        let spec = CharSpec::chi(r, a, b_seed % r).unwrap();
        let xy = wreath_compose(&x, &y).unwrap();
        let lhs = char_value(&spec, &xy).unwrap();
        let rhs = char_value(&spec, &x).unwrap().checked_mul(&char_value(&spec, &y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fmaf_forms_agree(pi in colored(8, 5)) {
        prop_assert_eq!(fmaf(&pi), fmaf_fixed_point_form(&pi));
        let (fix, tilde) = reduce_tilde(&pi);
        prop_assert_eq!(fix.len() + tilde.n(), pi.n());
        prop_assert_eq!(StatName::Fix.eval(&pi).unwrap() as usize, fix.len());
    }

    #[test]
    fn length_specializes_at_two_colors(pi in colored_in(6, 2)) {
        prop_assert_eq!(StatName::LenG.eval(&pi).unwrap(), StatName::LenB.eval(&pi).unwrap());
        prop_assert_eq!(StatName::Lmaj.eval(&pi).unwrap(), StatName::Nmaj.eval(&pi).unwrap());
        prop_assert_eq!(StatName::FmajG.eval(&pi).unwrap(), StatName::FmajB.eval(&pi).unwrap());
    }

    #[test]
    fn element_text_and_json_round_trip(pi in colored(8, 6)) {
        prop_assert_eq!(ColoredPerm::parse(&pi.to_string(), pi.r()).unwrap(), pi.clone());
        let json = serde_json::to_string(&pi).unwrap();
        prop_assert_eq!(serde_json::from_str::<ColoredPerm>(&json).unwrap(), pi);
    }
}
