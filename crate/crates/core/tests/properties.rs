use std::sync::OnceLock;

use proptest::prelude::*;

use garside::fixtures;
use garside::mbrace::oplus;
use garside::partialbrace::{FractionGroup, GroupElement, OplusOutcome};
use garside::reversing::{lcm_left, right_reverse};
use garside::{parse_word, CongruenceIndex, ComplementTable, Direction, Letter, SignedWord, Word};

const STEPS: usize = 10_000;

struct Fixture {
    idx: CongruenceIndex,
    ct: ComplementTable,
}

fn irretractable() -> &'static Fixture {
    static CELL: OnceLock<Fixture> = OnceLock::new();
    CELL.get_or_init(|| {
        let p = fixtures::irretractable();
        Fixture {
            idx: CongruenceIndex::build(&p, 8).unwrap(),
            ct: ComplementTable::build(&p, Direction::Right).unwrap(),
        }
    })
}

fn positive(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0usize..4, 0..=max).prop_map(Word::new)
}

fn signed(max: usize) -> impl Strategy<Value = SignedWord> {
    prop::collection::vec((0usize..4, any::<bool>()), 0..=max).prop_map(|v| {
        SignedWord::new(
            v.into_iter()
                .map(|(a, p)| if p { Letter::pos(a) } else { Letter::neg(a) })
                .collect(),
        )
    })
}

fn fraction(max: usize) -> impl Strategy<Value = GroupElement> {
    (positive(max), positive(max)).prop_map(|(n, d)| {
        let e = irretractable();
        FractionGroup::new(&e.idx, &e.ct, STEPS).reduce(&n, &d).unwrap()
    })
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(w in signed(8)) {
        let atoms = fixtures::irretractable().atoms().clone();
        prop_assert_eq!(parse_word(&w.render(&atoms), &atoms).unwrap(), w);
    }

    #[test]
    fn free_reduction_is_idempotent(w in signed(10)) {
        let r = w.free_reduce();
        prop_assert!(r.is_freely_reduced());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(w.concat(&w.inverse()).free_reduce().is_empty());
    }

    #[test]
    fn oracle_classes_are_a_congruence(u in positive(3), a in positive(2), b in positive(2)) {
        let e = irretractable();
        let v = e.idx.canonical(&u).unwrap();
        prop_assert!(e.idx.equal(&a.concat(&u).concat(&b), &a.concat(&v).concat(&b)).unwrap());
    }

    #[test]
    fn reversing_preserves_the_class(u in positive(3), v in positive(3)) {
        let e = irretractable();
        let r = right_reverse(&e.ct, &u.inverse().concat(&v.to_signed()), STEPS).unwrap();
        prop_assert!(e.idx.equal(&u.concat(&r.u), &v.concat(&r.v)).unwrap());
    }

    #[test]
    fn reversing_lcm_is_the_oracle_lcm(a in positive(3), b in positive(3)) {
        let e = irretractable();
        let l = lcm_left(&e.ct, &a, &b, STEPS).unwrap();
        let m = e.idx.lcm(&a, &b).unwrap().expect("lcm within bound");
        prop_assert!(e.idx.equal(&l.m, &m).unwrap());
    }

    #[test]
    fn fractions_form_a_group(g in fraction(2), h in fraction(2), k in fraction(1)) {
        let e = irretractable();
        let fg = FractionGroup::new(&e.idx, &e.ct, STEPS);
        let gh_k = fg.mul(&fg.mul(&g, &h).unwrap(), &k).unwrap();
        let g_hk = fg.mul(&g, &fg.mul(&h, &k).unwrap()).unwrap();
        prop_assert!(fg.group_equal(&gh_k, &g_hk).unwrap());
        prop_assert!(fg.is_identity(&fg.mul(&g, &g.inv()).unwrap()).unwrap());
    }

    #[test]
    fn partial_oplus_commutes(g in fraction(2), h in fraction(2)) {
        let e = irretractable();
        let fg = FractionGroup::new(&e.idx, &e.ct, STEPS);
        let gh = fg.oplus(&g, &h).unwrap();
        let hg = fg.oplus(&h, &g).unwrap();
        prop_assert_eq!(gh.is_defined(), hg.is_defined());
        if let (Some(x), Some(y)) = (gh.value(), hg.value()) {
            prop_assert!(fg.group_equal(x, y).unwrap());
        }
    }

    #[test]
    fn partial_oplus_extends_the_lcm(a in positive(2), b in positive(2)) {
        let e = irretractable();
        let fg = FractionGroup::new(&e.idx, &e.ct, STEPS);
        let out = fg.oplus(&GroupElement::positive(a.clone()), &GroupElement::positive(b.clone())).unwrap();
        let v = out.value().expect("positive elements have an lcm");
        prop_assert!(v.is_positive());
        prop_assert!(e.idx.equal(&v.num, &oplus(&e.ct, &a, &b, STEPS).unwrap()).unwrap());
    }
}

#[test]
fn no_ambiguity_for_parts_of_length_two() {
    let e = irretractable();
    let fg = FractionGroup::new(&e.idx, &e.ct, STEPS);
    let elements = fg.sample(2).unwrap();
    for g in &elements {
        for h in &elements {
            let out = fg.oplus(g, h).unwrap();
            assert!(!matches!(out, OplusOutcome::Ambiguous(_)), "{g:?} ⊕ {h:?}");
        }
    }
}

#[test]
fn mixed_definedness_matches_witness_search() {
    let e = irretractable();
    let fg = FractionGroup::new(&e.idx, &e.ct, STEPS);
    for x in Word::all_up_to(4, 2) {
        for y in Word::all_up_to(4, 2) {
            let gx = fg.reduce(&x, &Word::empty()).unwrap();
            let gy = fg.reduce(&Word::empty(), &y).unwrap();
            if fg.is_identity(&gx).unwrap() || fg.is_identity(&gy).unwrap() {
                continue;
            }
            let defined = fg.oplus(&gx, &gy).unwrap().is_defined();
            let found = !fg.witness_search(&y, &x).unwrap().is_empty();
            assert_eq!(defined, found, "{x:?} ⊕ {y:?}^-1");
        }
    }
}
