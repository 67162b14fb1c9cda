use std::collections::HashSet;

use proptest::prelude::*;

use super::catalog::*;
use super::*;

/// Evaluates every word of length ≤ r and deduplicates; independent of the
/// layered enumerator.
fn brute_force_ball(g: &Group, r: usize) -> HashSet<Elem> {
    let n = g.alphabet().len() as Letter;
    let mut out = HashSet::new();
    let mut words = vec![Word::empty()];
    for _ in 0..=r {
        let mut next = Vec::new();
        for w in &words {
            out.insert(g.eval(w));
            for l in 0..n {
                let mut v = w.0.clone();
                v.push(l);
                next.push(Word(v));
            }
        }
        words = next;
    }
    out
}

fn elem(g: &Group, s: &str) -> Elem {
    g.parse_elem(s).unwrap()
}

#[test]
fn element_of_examples() {
    let f = Group::free(&["p", "q"]).unwrap();
    assert!(f.is_identity(&elem(&f, "p p^-1")));
    let z2 = Group::abelian(&["u", "v"], 2, &[]).unwrap();
    assert_eq!(elem(&z2, "u v u"), Elem::Abelian(vec![2, 1]));
    let z3 = Group::cyclic("t", 3).unwrap();
    assert_eq!(elem(&z3, "t t t t"), elem(&z3, "t"));
    assert!(matches!(
        f.element_of(&Word(vec![7])),
        Err(GroupError::Word(WordError::AlphabetMismatch { .. }))
    ));
}

#[test]
fn free_product_multiplication_merges() {
    let g = modular_group();
    let s = elem(&g, "s");
    assert!(g.is_identity(&g.mul(&s, &s)));
    let st = elem(&g, "s t");
    let t = elem(&g, "t");
    assert_eq!(g.mul(&st, &t), elem(&g, "s t t"));
    assert_eq!(g.format(&g.mul(&st, &t)), "s t^-1");
    // t·t² = 1 vanishes, then nothing left to merge with s
    assert_eq!(g.mul(&st, &elem(&g, "t t")), s);
    // (s t)(t² s) collapses completely
    assert!(g.is_identity(&g.mul(&st, &elem(&g, "t^-1 s"))));
}

#[test]
fn inverse_examples() {
    let g = modular_group();
    assert!(g.is_identity(&g.inv(&g.identity())));
    assert_eq!(g.inv(&elem(&g, "s t")), elem(&g, "t^-1 s"));
    let a = Group::abelian(&["u", "c"], 1, &[3]).unwrap();
    assert!(g.is_identity(&g.identity()));
    assert_eq!(a.inv(&Elem::Abelian(vec![2, 1])), Elem::Abelian(vec![-2, 2]));
}

#[test]
fn conjugate_examples() {
    let g = modular_group();
    assert_eq!(g.conj(&elem(&g, "s t"), &elem(&g, "s")), elem(&g, "t s"));
    let a = elem(&g, "t s t");
    assert_eq!(g.conj(&a, &g.identity()), a);
    let ab = Group::abelian(&["u", "v"], 2, &[]).unwrap();
    assert_eq!(ab.conj(&elem(&ab, "u u v"), &elem(&ab, "v^-1 u")), elem(&ab, "u u v"));
    assert_eq!(
        g.conjugate(&Elem::Finite(0), &g.identity()),
        Err(GroupError::HandleMismatch(GroupKind::FreeProduct))
    );
}

#[test]
fn x_length_examples() {
    let z3 = Group::cyclic("t", 3).unwrap();
    assert_eq!(z3.x_length(&z3.identity()), 0);
    assert_eq!(z3.x_length(&elem(&z3, "t t")), 1);
    let g = modular_group();
    let x = elem(&g, "s t t s");
    assert_eq!(g.format(&x), "s t^-1 s");
    // BFS distance over {s, t, t^-1}
    let dist = g.ball(4).unwrap().iter().position(|e| *e == x).unwrap();
    let ball2 = g.ball(2).unwrap().len();
    assert!(dist >= ball2);
    assert_eq!(g.x_length(&x), 3);
    let a = Group::abelian(&["u", "c"], 1, &[5]).unwrap();
    assert_eq!(a.x_length(&Elem::Abelian(vec![-3, 4])), 4);
}

#[test]
fn ball_radius_zero_and_free_sphere_sizes() {
    let f = Group::free(&["p", "q"]).unwrap();
    assert_eq!(f.ball(0).unwrap(), vec![f.identity()]);
    let b1: Vec<String> = f.ball(1).unwrap().iter().map(|e| f.format(e)).collect();
    assert_eq!(b1, ["", "p", "p^-1", "q", "q^-1"]);
    for r in 0..=6 {
        assert_eq!(f.ball(r).unwrap().len(), 2 * 3usize.pow(r as u32) - 1);
    }
}

#[test]
fn modular_group_ball_matches_brute_force() {
    let g = modular_group();
    for r in 0..=6 {
        let ball = g.ball(r).unwrap();
        let brute = brute_force_ball(&g, r);
        assert_eq!(ball.len(), brute.len(), "radius {r}");
        assert_eq!(ball.iter().cloned().collect::<HashSet<_>>(), brute);
    }
    // 1; s, t, t²; st, st², ts, t²s
    assert_eq!(g.ball(2).unwrap().len(), 8);
    assert_eq!(g.ball(3).unwrap().len(), 14);
}

#[test]
fn ball_order_is_length_then_shortlex() {
    for g in [modular_group(), z_star_z2(), s3(), free_as_product(&["p", "q"]).unwrap()] {
        let ball = g.ball(4).unwrap();
        let words: Vec<Word> = ball.iter().map(|e| g.word_of(e)).collect();
        for (e, w) in ball.iter().zip(&words) {
            assert_eq!(w.len(), g.x_length(e));
            assert_eq!(&g.eval(w), e);
        }
        for p in words.windows(2) {
            assert_eq!(p[0].shortlex_cmp(&p[1]), std::cmp::Ordering::Less);
        }
        let brute = brute_force_ball(&g, 4);
        assert_eq!(ball.len(), brute.len());
    }
}

#[test]
fn ball_cap_reports_resource_limit() {
    let f = Group::free(&["p", "q"]).unwrap();
    let res: Result<Vec<_>, _> = ball_enumerate(&f, 5, &BallOptions::with_cap(100)).collect();
    assert_eq!(res, Err(GroupError::ResourceLimit { cap: 100 }));
}

#[test]
fn finite_ball_saturates() {
    let g = s3();
    let mut layers = Layers::new(&g, 100, BallOptions::default());
    let sizes: Vec<usize> = layers.by_ref().map(|l| l.unwrap().len()).collect();
    assert_eq!(sizes, vec![1, 2, 2, 1]);
    assert!(layers.exhausted());
    assert_eq!(g.diameter(), Some(3));
}

#[test]
fn parallel_ball_equals_serial() {
    let g = z_star_z2();
    let serial = g.ball(4).unwrap();
    let opts = BallOptions {
        max_elements: DEFAULT_MAX_ELEMENTS,
        parallelism: Parallelism::with_workers(4),
    };
    let parallel: Vec<Elem> = ball_enumerate(&g, 4, &opts).collect::<Result<_, _>>().unwrap();
    assert_eq!(serial, parallel);
}

#[test]
fn table_validation() {
    let names = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
    let not_latin = Group::finite(names(2), vec![vec![0, 1], vec![0, 1]], &[("s".into(), 1)], &[]);
    assert!(matches!(not_latin, Err(GroupError::InvalidTable(_))));
    // Z/4 generated by 2 only reaches half the group
    let z4: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
    let sub = Group::finite(names(4), z4.clone(), &[("d".into(), 2)], &[]);
    assert!(matches!(sub, Err(GroupError::InvalidTable(_))));
    let bad_inv = Group::finite(names(4), z4, &[("g".into(), 1)], &["g".into()]);
    assert!(matches!(bad_inv, Err(GroupError::InvalidTable(_))));
    // Latin square without associativity (a loop that is not a group)
    let loop5 = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    let l = Group::finite(names(5), loop5, &[("a".into(), 1), ("b".into(), 2)], &[]);
    assert!(matches!(l, Err(GroupError::InvalidTable(_))));
}

#[test]
fn json_specs() {
    let g = Group::from_json(r#"{"kind":"free","generators":["p","q"]}"#).unwrap();
    assert_eq!(g.kind(), GroupKind::Free);
    let a = Group::from_json(r#"{"kind":"abelian","generators":["u","v"],"rank":2,"torsion":[]}"#)
        .unwrap();
    assert_eq!(a.alphabet().len(), 4);
    let f = Group::from_json(
        r#"{"kind":"finite","generators":["s"],"elements":["e","s"],"table":[[0,1],[1,0]],"generator_map":{"s":1}}"#,
    )
    .unwrap();
    assert_eq!(f.alphabet().len(), 1, "s is self-inverse by the table");
    let p = Group::from_json(
        r#"{"kind":"free_product","factors":[
            {"kind":"finite","generators":["s"],"elements":["e","s"],"table":[[0,1],[1,0]],"generator_map":{"s":1}},
            {"kind":"abelian","generators":["c"],"rank":0,"torsion":[2],"involutions":["c"]}]}"#,
    )
    .unwrap();
    assert_eq!(p.alphabet().format(&p.alphabet().parse("s c^-1").unwrap()), "s c");
    let clash = Group::from_json(
        r#"{"kind":"free_product","factors":[{"kind":"free","generators":["p"]},{"kind":"free","generators":["p"]}]}"#,
    );
    assert!(matches!(clash, Err(GroupError::InvalidSpec(_))));
    assert!(matches!(Group::from_json("{"), Err(GroupError::InvalidSpec(_))));
}

fn word_in(g: &Group, max_len: usize) -> impl Strategy<Value = Word> {
    let n = g.alphabet().len() as Letter;
    prop::collection::vec(0..n, 0..=max_len).prop_map(Word)
}

fn backends() -> Vec<Group> {
    vec![
        Group::free(&["p", "q"]).unwrap(),
        Group::abelian(&["u", "c"], 1, &[4]).unwrap(),
        s3(),
        modular_group(),
        z_star_z2(),
        free_as_product(&["p", "q"]).unwrap(),
    ]
}

fn backend_and_words() -> impl Strategy<Value = (usize, Word, Word, Word)> {
    (0usize..6).prop_flat_map(|i| {
        let g = backends()[i].clone();
        (Just(i), word_in(&g, 12), word_in(&g, 12), word_in(&g, 12))
    })
}

proptest! {
    #[test]
    fn group_axioms_hold((i, u, v, w) in backend_and_words()) {
        let g = &backends()[i];
        let (a, b, c) = (g.eval(&u), g.eval(&v), g.eval(&w));
        prop_assert!(g.contains(&a));
        prop_assert_eq!(g.eval(&u.concat(&v)), g.mul(&a, &b));
        prop_assert_eq!(g.mul(&g.mul(&a, &b), &c), g.mul(&a, &g.mul(&b, &c)));
        prop_assert!(g.is_identity(&g.mul(&a, &g.inv(&a))));
        prop_assert_eq!(g.mul(&g.identity(), &a), a.clone());
        prop_assert!(g.x_length(&g.mul(&a, &b)) <= g.x_length(&a) + g.x_length(&b));
        prop_assert_eq!(g.eval(&g.word_of(&a)), a.clone());
        prop_assert_eq!(g.parse_elem(&g.format(&a)).unwrap(), a);
    }

    #[test]
    fn balls_are_nested(r in 0usize..4) {
        let g = modular_group();
        let small = g.ball(r).unwrap();
        let big: HashSet<Elem> = g.ball(r + 1).unwrap().into_iter().collect();
        prop_assert!(small.iter().all(|e| big.contains(e) && g.x_length(e) <= r));
        let uniq: HashSet<&Elem> = small.iter().collect();
        prop_assert_eq!(uniq.len(), small.len());
    }
}
