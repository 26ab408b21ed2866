//! Property tests for the braid-closure oracle: braid relations, conjugation,
//! the skein relation and Markov stabilization.

use proptest::prelude::*;

use skein_homfly::arith::{LaurentQT, RationalQT};
use skein_homfly::hecke::{element_of_braid, homfly_of_closure, markov_trace, BraidWord, Letter};

fn letter(strands: usize) -> impl Strategy<Value = Letter> {
    (1..strands, any::<bool>()).prop_map(|(index, positive)| Letter { index, positive })
}

fn braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        prop::collection::vec(letter(n), 0..=max_len).prop_map(move |ls| BraidWord::new(n, ls).unwrap())
    })
}

fn with_letters(w: &BraidWord, letters: Vec<Letter>) -> BraidWord {
    BraidWord::new(w.strands(), letters).unwrap()
}

fn splice(w: &BraidWord, at: usize, insert: &[Letter]) -> BraidWord {
    let mut ls = w.letters().to_vec();
    let at = at.min(ls.len());
    ls.splice(at..at, insert.iter().copied());
    with_letters(w, ls)
}

fn pos(index: usize) -> Letter {
    Letter { index, positive: true }
}

fn neg(index: usize) -> Letter {
    Letter { index, positive: false }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn braid_relation_rewrites(w in braid(5, 9), at in 0usize..10, i in 1usize..4) {
        prop_assume!(i + 1 < w.strands());
        let a = splice(&w, at, &[pos(i), pos(i + 1), pos(i)]);
        let b = splice(&w, at, &[pos(i + 1), pos(i), pos(i + 1)]);
        prop_assert_eq!(element_of_braid(&a), element_of_braid(&b));
    }

    #[test]
    fn far_commutation_and_cancellation(w in braid(5, 10), at in 0usize..11, i in 1usize..5, j in 1usize..5) {
        prop_assume!(i < w.strands() && j < w.strands());
        let cancelled = splice(&w, at, &[pos(i), neg(i)]);
        prop_assert_eq!(element_of_braid(&cancelled), element_of_braid(&w));
        if i.abs_diff(j) >= 2 {
            let a = splice(&w, at, &[pos(i), neg(j)]);
            let b = splice(&w, at, &[neg(j), pos(i)]);
            prop_assert_eq!(element_of_braid(&a), element_of_braid(&b));
        }
    }

    #[test]
    fn trace_is_conjugation_invariant(w in braid(4, 10), g in letter(4)) {
        prop_assume!(g.index < w.strands());
        let mut ls = vec![g];
        ls.extend_from_slice(w.letters());
        ls.push(Letter { index: g.index, positive: !g.positive });
        let conj = with_letters(&w, ls);
        prop_assert_eq!(homfly_of_closure(&conj), homfly_of_closure(&w));
        // cyclic rotation is a conjugation too
        if !w.letters().is_empty() {
            let mut rot = w.letters().to_vec();
            rot.rotate_left(1);
            prop_assert_eq!(markov_trace(&element_of_braid(&with_letters(&w, rot))), markov_trace(&element_of_braid(&w)));
        }
    }

    #[test]
    fn skein_relation(w in braid(4, 8), at in 0usize..9, i in 1usize..4) {
        prop_assume!(i < w.strands());
        let plus = homfly_of_closure(&splice(&w, at, &[pos(i)]));
        let minus = homfly_of_closure(&splice(&w, at, &[neg(i)]));
        let zero = homfly_of_closure(&splice(&w, at, &[]));
        let t = RationalQT::from_laurent(LaurentQT::qt(0, 1));
        let t_inv = RationalQT::from_laurent(LaurentQT::qt(0, -1));
        let z = RationalQT::from_laurent(LaurentQT::q_bracket(1));
        prop_assert_eq!(&(&t * &plus) - &(&t_inv * &minus), &z * &zero);
    }

    #[test]
    fn markov_stabilization(w in braid(4, 8), positive in any::<bool>()) {
        let p = homfly_of_closure(&w);
        prop_assert_eq!(homfly_of_closure(&w.stabilized(positive)), p);
    }
}

#[test]
fn long_words_on_five_strands() {
    // length-12 words exercise the memoized trace recursion deep into S_5
    let w = BraidWord::parse(5, "1 2 3 4 1 2 3 4 -2 3 -1 4").unwrap();
    let mut rotated = w.letters().to_vec();
    rotated.rotate_left(5);
    let r = BraidWord::new(5, rotated).unwrap();
    assert_eq!(homfly_of_closure(&w), homfly_of_closure(&r));
}
