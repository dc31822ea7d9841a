use panhandle::cable::{reverse_cable_homfly, FramingVector};
use panhandle::conventions::table_sign;
use panhandle::laurent::poly;
use panhandle::rosso_jones::fundamental_homfly_torus;
use panhandle::skein::{homfly, homfly_with, reverse_cable_braid, BraidWord, PlanarDiagram, SkeinOptions};
use panhandle::{TorusParams, ZVTable};
use proptest::prelude::*;

fn unknot_braid() -> BraidWord {
    BraidWord::new(1, vec![]).unwrap()
}

fn cable_oracle(b: &BraidWord, t: &[i64]) -> ZVTable {
    // twists are counted from the blackboard framing of each component
    let lk = b.closure().linking_matrix();
    let tw: Vec<i64> = t.iter().enumerate().map(|(i, x)| x + lk.get(i).map_or(0, |r| r[i])).collect();
    let d = reverse_cable_braid(b, &tw).unwrap();
    let lm = d.linking_matrix();
    for (i, &x) in t.iter().enumerate() {
        assert_eq!(lm[2 * i][2 * i + 1], x, "cable linking equals the framing");
    }
    homfly(&d).unwrap().scale(table_sign(d.component_count()))
}

#[test]
fn trefoil_closure() {
    let p = homfly(&BraidWord::torus(2, 3).unwrap().closure()).unwrap();
    assert_eq!(p.poly, poly(&[(0, 2, 2), (0, 4, -1), (2, 2, 1)]));
}

#[test]
fn unknot_cables_agree() {
    let tp = TorusParams::new(1, 1).unwrap();
    for t in [-1, 0, 1, 2] {
        let rj = reverse_cable_homfly(tp, &FramingVector(vec![t])).unwrap();
        assert_eq!(cable_oracle(&unknot_braid(), &[t]), *rj, "C_2(U,{t})");
    }
}

#[test]
fn trefoil_cables_agree() {
    let tp = TorusParams::new(2, 3).unwrap();
    let b = BraidWord::torus(2, 3).unwrap();
    for t in [-3, -2, -1, 0] {
        let rj = reverse_cable_homfly(tp, &FramingVector(vec![t])).unwrap();
        assert_eq!(cable_oracle(&b, &[t]), *rj, "C_2(T(2,3),{t})");
    }
}

#[test]
fn cinquefoil_cable_agrees() {
    let tp = TorusParams::new(2, 5).unwrap();
    let b = BraidWord::torus(2, 5).unwrap();
    let rj = reverse_cable_homfly(tp, &FramingVector(vec![-5])).unwrap();
    assert_eq!(cable_oracle(&b, &[-5]), *rj);
    assert_eq!(reverse_cable_braid(&b, &[0]).unwrap().crossing_count(), 20);
}

#[test]
fn link_cables_agree() {
    for (m, n, t) in [(2, 2, vec![-1, 0]), (2, 4, vec![-3, -4]), (3, 3, vec![0, -1, -2])] {
        let tp = TorusParams::new(m, n).unwrap();
        let b = BraidWord::torus(m as usize, n as usize).unwrap();
        let rj = reverse_cable_homfly(tp, &FramingVector(t.clone())).unwrap();
        let opts = SkeinOptions { max_crossings: 40, ..Default::default() };
        let lk = b.closure().linking_matrix();
        let tw: Vec<i64> = t.iter().enumerate().map(|(i, x)| x + lk[i][i]).collect();
        let d = reverse_cable_braid(&b, &tw).unwrap();
        let o = homfly_with(&d, opts).unwrap().scale(table_sign(d.component_count()));
        assert_eq!(o, *rj, "C_2(T({m},{n}),{t:?})");
    }
}

#[test]
fn fundamental_agrees() {
    for (m, n) in [(2, 3), (2, 5), (3, 4)] {
        let rj = fundamental_homfly_torus(TorusParams::new(m, n).unwrap()).unwrap();
        let o = homfly(&BraidWord::torus(m as usize, n as usize).unwrap().closure()).unwrap();
        assert_eq!(o, rj, "T({m},{n})");
    }
}

#[test]
fn split_union_multiplies() {
    let a = BraidWord::torus(2, 3).unwrap().closure();
    let b = BraidWord::new(3, vec![1, -2, 1, -2]).unwrap().closure();
    let delta = ZVTable::from_zv(poly(&[(-1, -1, 1), (-1, 1, -1)]));
    let joint = homfly(&a.disjoint_union(&b)).unwrap();
    assert_eq!(joint, homfly(&a).unwrap().mul(&homfly(&b).unwrap()).mul(&delta));
    let with_loop = homfly(&a.disjoint_union(&PlanarDiagram::unknot())).unwrap();
    assert_eq!(with_loop, homfly(&a).unwrap().mul(&delta));
}

#[test]
fn budget_from_options() {
    let d = reverse_cable_braid(&BraidWord::torus(3, 4).unwrap(), &[0]).unwrap();
    assert!(homfly_with(&d, SkeinOptions { max_crossings: 24, ..Default::default() }).is_err());
}

/// Braid moves that preserve the closure's link type.
#[derive(Clone, Debug)]
enum Move {
    Cancel(usize, i32),
    Braid(usize, i32),
    Commute(usize, i32),
    Conjugate(usize),
    Stabilize(bool),
}

fn apply(b: &BraidWord, mv: &Move) -> BraidWord {
    let mut l = b.letters.clone();
    let s = b.strands as i32;
    let at = |p: usize| if l.is_empty() { 0 } else { p % (l.len() + 1) };
    match *mv {
        Move::Cancel(p, g) => {
            let g = g % (s - 1).max(1) + 1;
            if s > 1 {
                let p = at(p);
                l.splice(p..p, [g, -g]);
            }
        }
        Move::Braid(p, g) => {
            // s_g s_{g+1} s_g (s_{g+1} s_g s_{g+1})^-1 is trivial
            if s > 2 {
                let g = g % (s - 2) + 1;
                let p = at(p);
                l.splice(p..p, [g, g + 1, g, -(g + 1), -g, -(g + 1)]);
            }
        }
        Move::Commute(p, g) => {
            // s_g s_{g+2} s_g^-1 s_{g+2}^-1 is trivial
            if s > 3 {
                let g = g % (s - 3) + 1;
                let p = at(p);
                l.splice(p..p, [g, g + 2, -g, -(g + 2)]);
            }
        }
        Move::Conjugate(k) => {
            if !l.is_empty() {
                let k = k % l.len();
                l.rotate_left(k);
            }
        }
        Move::Stabilize(pos) => {
            l.push(if pos { s } else { -s });
            return BraidWord::new(b.strands + 1, l).unwrap();
        }
    }
    BraidWord::new(b.strands, l).unwrap()
}

fn arb_move() -> impl Strategy<Value = Move> {
    prop_oneof![
        (0usize..20, 0i32..4).prop_map(|(p, g)| Move::Cancel(p, g)),
        (0usize..20, 0i32..4).prop_map(|(p, g)| Move::Braid(p, g)),
        (0usize..20, 0i32..4).prop_map(|(p, g)| Move::Commute(p, g)),
        (0usize..20).prop_map(Move::Conjugate),
        any::<bool>().prop_map(Move::Stabilize),
    ]
}

fn arb_braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(|s| {
        let g = s as i32 - 1;
        prop::collection::vec((1..=g, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i }), 0..7)
            .prop_map(move |letters| BraidWord::new(s, letters).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn braid_moves_preserve_homfly(b in arb_braid(), moves in prop::collection::vec(arb_move(), 1..3)) {
        let mut c = b.clone();
        for mv in &moves {
            c = apply(&c, mv);
        }
        prop_assume!(c.letters.len() <= 14);
        prop_assert_eq!(homfly(&b.closure()).unwrap(), homfly(&c.closure()).unwrap());
    }

    #[test]
    fn traversal_order_is_irrelevant(b in arb_braid(), key in 1u64..u64::MAX) {
        let d = b.closure();
        let plain = homfly_with(&d, SkeinOptions { memo: false, ..Default::default() }).unwrap();
        let keyed = homfly_with(&d, SkeinOptions { memo: false, order_key: key, parallel: false, ..Default::default() }).unwrap();
        prop_assert_eq!(plain, keyed);
    }

    #[test]
    fn mirror_image(b in arb_braid()) {
        let d = b.closure();
        prop_assert_eq!(homfly(&d.mirror()).unwrap(), homfly(&d).unwrap().mirror());
    }

    #[test]
    fn cable_linking_is_framing(b in arb_braid(), t in -3i64..3) {
        prop_assume!(b.closure().free_loops == 0);
        let comps = b.closure_cycles().len();
        let tw = vec![t; comps];
        let d = reverse_cable_braid(&b, &tw).unwrap();
        let base = b.closure().linking_matrix();
        let lm = d.linking_matrix();
        prop_assert_eq!(d.component_count(), 2 * comps);
        for i in 0..comps {
            prop_assert_eq!(lm[2 * i][2 * i + 1], t - base[i][i]);
        }
    }
}
