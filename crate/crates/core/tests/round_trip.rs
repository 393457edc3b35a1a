use proptest::prelude::*;
use sesx_core::bms::{bms_to_ses, greedy_left_bms};
use sesx_core::chi::compress_text;
use sesx_core::oracle::naive_attractor_check;
use sesx_core::ses::{attractor_from_ses, reconstruct, solve, Partition, Verdict};
use sesx_core::text::{fibonacci_word, random_text, thue_morse};
use sesx_core::{compress, decompress, Text};

fn check(raw: &[u8]) {
    let w = Text::attach_sentinel(raw).unwrap();
    let c = compress(raw).unwrap();
    assert_eq!(decompress(&c.ses, c.raw_len).unwrap(), raw);
    if !raw.is_empty() {
        assert!(c.ses.size() < c.chi + c.sigma);
    }
    for e in &c.ses.eq {
        assert_eq!(w.substring(e.i, e.len), w.substring(e.j, e.len));
    }
    let sol = solve(&c.ses, 256).unwrap();
    assert_eq!(sol.classes, Partition::by_character(w.as_bytes()));
    assert!(c.ses.weighted_size() <= 8 * c.ses.size());
}

#[test]
fn structured_words() {
    for k in 1..=14 {
        check(&thue_morse(k).unwrap());
    }
    for k in 1..=20 {
        check(&fibonacci_word(k).unwrap());
    }
}

#[test]
fn random_words() {
    for (seed, sigma) in [2usize, 4, 16, 64].iter().enumerate() {
        check(&random_text(seed as u64, 100_000, *sigma).unwrap());
    }
}

#[test]
fn empty_input_is_one_pin() {
    let c = compress(b"").unwrap();
    assert_eq!((c.chi, c.sigma, c.ses.size()), (0, 1, 1));
    assert_eq!(decompress(&c.ses, 0).unwrap(), b"");
}

#[test]
fn attractor_from_emitted_system() {
    for raw in [
        thue_morse(6).unwrap(),
        fibonacci_word(9).unwrap(),
        b"mississippi".to_vec(),
    ] {
        let w = Text::attach_sentinel(&raw).unwrap();
        let sys = compress_text(&w).ses;
        let g = attractor_from_ses(&sys).unwrap();
        assert!(g.len() <= 4 * sys.eq.len() + sys.ch.len());
        assert!(naive_attractor_check(&w, &g).unwrap());
    }
}

proptest! {
    #[test]
    fn round_trip_small_alphabets(raw in proptest::collection::vec(prop_oneof![Just(b'a'), Just(b'b'), Just(b'c')], 0..400)) {
        check(&raw);
    }

    #[test]
    fn round_trip_bytes(raw in proptest::collection::vec(1u8..=255, 0..400)) {
        check(&raw);
    }

    #[test]
    fn greedy_scheme_converts_to_same_size(raw in proptest::collection::vec(b'a'..b'd', 0..300)) {
        let w = Text::attach_sentinel(&raw).unwrap();
        let b = greedy_left_bms(&w);
        let sys = bms_to_ses(&b, &w).unwrap();
        prop_assert_eq!(sys.size(), b.phrases.len());
        prop_assert_eq!(reconstruct(&sys).unwrap(), w.as_bytes());
    }

    #[test]
    fn unique_means_every_class_pinned(raw in proptest::collection::vec(b'a'..b'c', 1..100), drop in 0usize..8) {
        let w = Text::attach_sentinel(&raw).unwrap();
        let mut sys = compress_text(&w).ses;
        let drop = drop % sys.ch.len();
        sys.ch.remove(drop);
        let sol = solve(&sys, 256).unwrap();
        prop_assert!(
            matches!(sol.verdict, Verdict::Ambiguous { .. }),
            "removing a character pin must leave its class free"
        );
    }
}
