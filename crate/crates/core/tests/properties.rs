//! Property tests for the algebraic invariants.

mod common;

use common::*;
use dynkin_stab::charges::act_weyl;
use dynkin_stab::cover::{lift_path, ChargePath};
use dynkin_stab::gauss::{format_rational, parse_rational, rat};
use dynkin_stab::io::{parse_charge, state_from_json, state_to_json};
use dynkin_stab::{
    evaluate, is_regular, reflect, word_to_matrix, BraidWord, CentralCharge, ClassVector, Diagram,
    Direction, Gauss, Letter, Sign,
};
use proptest::prelude::*;

const NAMES: [&str; 9] = ["A1", "A2", "A3", "D4", "E6", "A1~", "A2~", "A3~", "D4~"];

fn diagram() -> impl Strategy<Value = Diagram> {
    (0..NAMES.len()).prop_map(|i| d(NAMES[i]))
}

fn word_for(dd: &Diagram, raw: &[(usize, bool)]) -> BraidWord {
    let labels: Vec<usize> = dd.labels().collect();
    BraidWord(
        raw.iter()
            .map(|&(k, neg)| {
                let v = labels[k % labels.len()];
                if neg {
                    Letter::neg(v)
                } else {
                    Letter::pos(v)
                }
            })
            .collect(),
    )
}

fn raw_word() -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..16, any::<bool>()), 0..8)
}

fn class_vector(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, n)
}

fn gauss() -> impl Strategy<Value = Gauss> {
    (-30i64..=30, 1i64..=9, -30i64..=30, 1i64..=9)
        .prop_map(|(a, b, c, e)| Gauss::new(rat(a, b), rat(c, e)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_isometric_involutions(dd in diagram(), raw in raw_word(), x in class_vector(9), y in class_vector(9)) {
        let n = dd.size();
        // A real root: a Weyl image of a simple root.
        let m = word_to_matrix(&dd, &word_for(&dd, &raw)).unwrap();
        let s = m.column(raw.len() % n);
        prop_assert_eq!(chi(&dd, &s, &s), 2);
        let x = ClassVector(x[..n].to_vec());
        let y = ClassVector(y[..n].to_vec());
        let rx = reflect(&dd, &s, &x).unwrap();
        prop_assert_eq!(reflect(&dd, &s, &rx).unwrap(), x.clone());
        let ry = reflect(&dd, &s, &y).unwrap();
        prop_assert_eq!(chi(&dd, &rx, &ry), chi(&dd, &x, &y));
        prop_assert_eq!(reflect(&dd, &s, &s).unwrap(), s.neg());
    }

    #[test]
    fn words_map_homomorphically(dd in diagram(), a in raw_word(), b in raw_word()) {
        let wa = word_for(&dd, &a);
        let wb = word_for(&dd, &b);
        let ma = word_to_matrix(&dd, &wa).unwrap();
        let mb = word_to_matrix(&dd, &wb).unwrap();
        prop_assert_eq!(word_to_matrix(&dd, &wa.concat(&wb)).unwrap(), ma.mul(&mb));
        prop_assert!(ma.mul(&word_to_matrix(&dd, &wa.inverse()).unwrap()).is_identity());
        prop_assert!(ma.preserves_form(&dd));
        prop_assert!(ma.determinant().abs() == 1);
        // Mᵀ E M = E computed directly.
        let e = dd.euler_matrix();
        let mm = ma.matrix();
        let n = dd.size();
        for i in 0..n {
            for j in 0..n {
                let v: i64 = (0..n).map(|k| (0..n).map(|l| mm[k][i] * e[k][l] * mm[l][j]).sum::<i64>()).sum();
                prop_assert_eq!(v, e[i][j]);
            }
        }
    }

    #[test]
    fn weyl_action_preserves_regularity(dd in diagram(), raw in raw_word(), z in prop::collection::vec(gauss(), 9)) {
        let z = CentralCharge::new(z[..dd.size()].to_vec());
        let w = word_to_matrix(&dd, &word_for(&dd, &raw)).unwrap();
        let wz = act_weyl(&w, &z).unwrap();
        prop_assert_eq!(is_regular(&dd, &z).unwrap().regular, is_regular(&dd, &wz).unwrap().regular);
        // (w·Z)(w v) = Z(v).
        let v: Vec<i64> = (0..dd.size()).map(|i| i as i64 - 1).collect();
        prop_assert_eq!(evaluate(&wz, &w.apply(&v)).unwrap(), evaluate(&z, &v).unwrap());
    }

    #[test]
    fn scalars_commute_with_the_weyl_action(dd in diagram(), raw in raw_word(), z in prop::collection::vec(gauss(), 9), mu in gauss()) {
        prop_assume!(!mu.is_zero());
        let z = CentralCharge::new(z[..dd.size()].to_vec());
        let w = word_to_matrix(&dd, &word_for(&dd, &raw)).unwrap();
        prop_assert_eq!(act_weyl(&w, &z.scaled(&mu)).unwrap(), act_weyl(&w, &z).unwrap().scaled(&mu));
    }

    #[test]
    fn automorphisms_preserve_charges_and_regularity(dd in diagram(), k in 0usize..64, z in prop::collection::vec(gauss(), 9)) {
        let group = dd.automorphism_group(false);
        let g = &group[k % group.len()];
        let z = CentralCharge::new(z[..dd.size()].to_vec());
        let gz = CentralCharge::new(g.permute(&z));
        prop_assert_eq!(is_regular(&dd, &z).unwrap().regular, is_regular(&dd, &gz).unwrap().regular);
        let v: Vec<i64> = (0..dd.size() as i64).collect();
        prop_assert_eq!(evaluate(&gz, &g.permute(&v)).unwrap(), evaluate(&z, &v).unwrap());
    }

    #[test]
    fn rationals_round_trip(p in -10_000i64..10_000, q in 1i64..500) {
        let x = rat(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn charges_words_and_states_round_trip(dd in diagram(), raw in raw_word(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let z = random_charge(&mut r, dd.size());
        let text = serde_json::to_string(&z).unwrap();
        prop_assert_eq!(parse_charge(&text, Some(&dd)).unwrap(), z);
        let w = word_for(&dd, &raw);
        prop_assert_eq!(serde_json::from_str::<BraidWord>(&serde_json::to_string(&w).unwrap()).unwrap(), w);
        let s = random_start(&mut r, &dd);
        let path = random_path(&mut r, &dd, s.charge(), 2);
        if let Ok((end, _)) = lift_path(&s, &path) {
            let back = state_from_json(&state_to_json(&end)).unwrap();
            prop_assert_eq!(back.log(), end.log());
            prop_assert_eq!(back, end);
        }
    }

    #[test]
    fn lifting_is_compatible_with_concatenation(dd in diagram(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let s = random_start(&mut r, &dd);
        let p1 = random_path(&mut r, &dd, s.charge(), 2);
        let p2 = random_path(&mut r, &dd, p1.end(), 2);
        let whole = p1.concat(&p2).unwrap();
        if let (Ok((mid, _)), Ok((end, _))) = (lift_path(&s, &p1), lift_path(&s, &whole)) {
            let (end2, _) = lift_path(&mid, &p2).unwrap();
            prop_assert_eq!(end2.log(), end.log());
            prop_assert_eq!(end2, end);
        }
    }

    #[test]
    fn crossings_are_undone_by_their_reverse(dd in diagram(), raw in raw_word(), slot in 0usize..9, up in any::<bool>()) {
        let n = dd.size();
        let mut s = dynkin_stab::cover::CoverState::standard(&dd, CentralCharge::standard(n));
        for (k, neg) in raw {
            let dir = if neg { Direction::Descending } else { Direction::Ascending };
            s = s.cross(k % n, dir).unwrap();
        }
        let dir = if up { Direction::Ascending } else { Direction::Descending };
        let back = s.cross(slot % n, dir).unwrap().cross(slot % n, dir.reverse()).unwrap();
        prop_assert_eq!(back.classes(), s.classes());
        prop_assert_eq!(back.ledgers(), s.ledgers());
    }
}

#[test]
fn letters_parse_with_signed_zero() {
    let dd = d("A2~");
    let w = BraidWord::parse_str(&dd, "0,-0,2").unwrap();
    assert_eq!(
        w.letters()[1],
        Letter {
            vertex: 0,
            sign: Sign::Neg
        }
    );
    assert_eq!(serde_json::to_string(&w).unwrap(), r#"[0,"-0",2]"#);
    assert!(BraidWord::parse_str(&dd, "3").is_err());
}

#[test]
fn a_constant_path_never_crosses() {
    let mut r = rng(1);
    for name in NAMES {
        let dd = d(name);
        let s = random_start(&mut r, &dd);
        let (end, events) = lift_path(&s, &ChargePath::constant(s.charge())).unwrap();
        assert!(events.is_empty());
        assert_eq!(end, s);
    }
}
