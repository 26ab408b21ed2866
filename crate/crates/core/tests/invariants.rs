//! Cross-module checks: unknot values against the braid oracle, split unions,
//! the T(2,2k) family, and proptest invariants of the torus invariants.

use proptest::prelude::*;

use skein_homfly::arith::{limit_at_one, LaurentQT, RationalQT, Substitution, UniLaurent, Var};
use skein_homfly::hecke::{homfly_of_closure, BraidWord};
use skein_homfly::partition::{partitions_of, Partition, PartitionVector};
use skein_homfly::schur::{delta, unknot_value};
use skein_homfly::special::{special_h, SpecialKind};
use skein_homfly::torus::{colored_homfly, colored_homfly_disjoint_union, Link, TorusLinkSpec};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn single(parts: &[u32]) -> PartitionVector {
    PartitionVector::single(p(parts))
}

#[test]
fn uncolored_torus_knots_match_braid_closures() {
    for (m, n) in [(2u32, 3i64), (2, 5), (3, 4), (3, 5), (2, -3), (4, 3)] {
        let w = colored_homfly(&Link::torus(m, n, 1, single(&[1])).unwrap()).unwrap().value;
        let from_braid = homfly_of_closure(&BraidWord::torus(m as usize, n).unwrap());
        assert_eq!(&w / &delta(), from_braid, "T({m},{n})");
    }
}

#[test]
fn two_component_torus_links_match_braid_closures() {
    for k in 1..=3i64 {
        let colors: PartitionVector = "(1);(1)".parse().unwrap();
        let w = colored_homfly(&Link::torus(1, k, 2, colors).unwrap()).unwrap().value;
        let braid = BraidWord::torus(2, 2 * k).unwrap();
        // W keeps the framing from crossings between components: t^{w - self writhe} = t^{-2 lk}
        let framing = RationalQT::from_laurent(LaurentQT::qt(0, 2 * braid.linking_number()));
        assert_eq!(&(&w * &framing) / &delta(), homfly_of_closure(&braid), "T(2,{})", 2 * k);
    }
}

#[test]
fn hopf_family_h_is_constant() {
    // H of T(2,2k) with ((1),(1)) is 1: components are unknots
    for k in 1..=3 {
        let link = Link::torus(1, k, 2, "(1);(1)".parse().unwrap()).unwrap();
        let h = special_h(&link).unwrap();
        assert_eq!(h.kind, SpecialKind::H);
        assert_eq!(h.as_polynomial().unwrap(), &UniLaurent::one(Var::T));
    }
}

#[test]
fn split_union_h_is_product() {
    let trefoil = Link::torus(2, 3, 1, single(&[2])).unwrap();
    let cinquefoil = Link::torus(2, 5, 1, single(&[1, 1])).unwrap();
    let union = colored_homfly_disjoint_union(&[trefoil.clone(), cinquefoil.clone()]).unwrap();
    let normalized = &union / &(&unknot_value(&p(&[2])) * &unknot_value(&p(&[1, 1])));
    let h_union = limit_at_one(&normalized, Var::Q).unwrap();
    let expected = special_h(&trefoil).unwrap().as_polynomial().unwrap()
        * special_h(&cinquefoil).unwrap().as_polynomial().unwrap();
    assert_eq!(h_union.as_polynomial().unwrap(), &expected);
}

#[test]
fn unknot_value_equals_trivial_torus_knots() {
    for d in 1..=4 {
        for a in partitions_of(d) {
            let s = unknot_value(&a);
            assert_eq!(colored_homfly(&Link::unknot(a.clone())).unwrap().value, s);
            assert_eq!(colored_homfly(&Link::torus(3, 1, 1, PartitionVector::single(a.clone())).unwrap()).unwrap().value, s);
        }
    }
}

fn small_partition() -> impl Strategy<Value = Partition> {
    (1u32..=4).prop_flat_map(|d| {
        let all = partitions_of(d);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn knot_params() -> impl Strategy<Value = (u32, i64)> {
    prop::sample::select(vec![(2u32, 3i64), (2, 5), (3, 4), (2, -3), (3, 2), (1, 4)])
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn mirror_is_negated_twist((m, n) in knot_params(), a in small_partition()) {
        let w = colored_homfly(&Link::torus(m, n, 1, PartitionVector::single(a.clone())).unwrap()).unwrap().value;
        let mirror = colored_homfly(&Link::torus(m, -n, 1, PartitionVector::single(a)).unwrap()).unwrap().value;
        prop_assert_eq!(w.substitute(Substitution::MIRROR).unwrap(), mirror);
    }

    #[test]
    fn transposing_twice_is_identity((m, n) in knot_params(), a in small_partition()) {
        let spec = TorusLinkSpec::knot(m, n, a.clone()).unwrap();
        let back = spec.with_colors(spec.colors().conjugate().conjugate()).unwrap();
        prop_assert_eq!(&back, &spec);
        let w = colored_homfly(&Link::Torus(spec)).unwrap().value;
        let twice = w.substitute(Substitution::Q_INVERSE).unwrap().substitute(Substitution::Q_INVERSE).unwrap();
        prop_assert_eq!(twice, w);
    }

    #[test]
    fn numerators_have_integral_q_exponents((m, n) in knot_params(), a in small_partition()) {
        let w = colored_homfly(&Link::torus(m, n, 1, PartitionVector::single(a)).unwrap()).unwrap().value;
        prop_assert!(w.numer().has_integral_q_exponents());
        prop_assert!(w.denom().has_integral_q_exponents());
    }

    #[test]
    fn swapping_link_colors_is_symmetric(a in small_partition(), b in small_partition(), k in 1i64..3) {
        prop_assume!(a.size() + b.size() <= 5);
        let ab = PartitionVector::new(vec![a.clone(), b.clone()]).unwrap();
        let ba = PartitionVector::new(vec![b, a]).unwrap();
        let x = colored_homfly(&Link::torus(1, k, 2, ab).unwrap()).unwrap().value;
        let y = colored_homfly(&Link::torus(1, k, 2, ba).unwrap()).unwrap().value;
        prop_assert_eq!(x, y);
    }
}

#[test]
fn fundamental_unknot_times_z() {
    // s*_(1) = δ, and δ·z = t − t^{-1}
    let z = RationalQT::from_laurent(LaurentQT::q_bracket(1));
    assert_eq!((&unknot_value(&p(&[1])) * &z).as_laurent().unwrap(), LaurentQT::t_bracket(1));
}
