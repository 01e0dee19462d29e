//! Property tests: field axioms, the float embedding, quaternion algebra,
//! the permutation matrix model, and wreath arithmetic.

use bgw_core::field::{rat, FieldElem};
use bgw_core::perm::{Perm, SignedPerm};
use bgw_core::quat::Quaternion;
use proptest::prelude::*;

fn small_field_elem() -> impl Strategy<Value = FieldElem> {
    // up to three terms with small rational coefficients
    proptest::collection::vec((0u8..16, -6i64..7, 1i64..5), 0..3).prop_map(|terms| {
        let mut e = FieldElem::zero();
        for (mask, num, den) in terms {
            e = e + FieldElem::term(rat(num, den), mask);
        }
        e
    })
}

fn quat() -> impl Strategy<Value = Quaternion> {
    (
        small_field_elem(),
        small_field_elem(),
        small_field_elem(),
        small_field_elem(),
    )
        .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut v: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            v.swap(i, j);
        }
        Perm::from_images(v).unwrap()
    })
}

proptest! {
    #[test]
    fn field_axioms(a in small_field_elem(), b in small_field_elem(), c in small_field_elem()) {
        // associativity and commutativity
        prop_assert_eq!(a.clone() + (b.clone() + c.clone()), (a.clone() + b.clone()) + c.clone());
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
        // distributivity
        prop_assert_eq!(a.mul(&(b.clone() + c.clone())), a.mul(&b) + a.mul(&c));
        // inverses
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!(a.mul(&inv).is_one());
        }
        // subtraction
        prop_assert!((a.clone() - a.clone()).is_zero());
    }

    #[test]
    fn field_agrees_with_floats(a in small_field_elem(), b in small_field_elem()) {
        let sum = (a.clone() + b.clone()).to_f64();
        let prod = a.mul(&b).to_f64();
        prop_assert!((sum - (a.to_f64() + b.to_f64())).abs() < 1e-9);
        prop_assert!((prod - a.to_f64() * b.to_f64()).abs() < 1e-9);
    }

    #[test]
    fn quaternion_algebra(p in quat(), q in quat(), r in quat()) {
        // associativity
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        // norm is multiplicative
        prop_assert_eq!(p.mul(&q).norm(), p.norm().mul(&q.norm()));
    }

    #[test]
    fn perm_matrix_model_random(s in perm(8), t in perm(8)) {
        let st = s.compose(&t).unwrap();
        let (ms, mt) = (s.matrix(), t.matrix());
        let mut prod = vec![vec![0u8; 8]; 8];
        for r in 0..8 {
            for c in 0..8 {
                prod[r][c] = (0..8).map(|x| ms[r][x] * mt[x][c]).sum();
            }
        }
        prop_assert_eq!(prod, st.matrix());
    }

    #[test]
    fn cycle_string_roundtrip(s in perm(9)) {
        for base in [0usize, 1] {
            let text = s.to_cycle_string(base);
            let back = Perm::parse_cycles(&text, 9, base).unwrap();
            prop_assert_eq!(&back, &s);
            // canonical strings are stable under a second pass
            prop_assert_eq!(back.to_cycle_string(base), text);
        }
    }

    #[test]
    fn signed_perm_algebra(s in perm(5), t in perm(5), u in perm(5), bits in 0u32..(1 << 15)) {
        let signs = |off: u32| -> Vec<i8> {
            (0..5).map(|i| if bits >> (off + i) & 1 == 1 { -1 } else { 1 }).collect()
        };
        let a = SignedPerm::new(s, signs(0)).unwrap();
        let b = SignedPerm::new(t, signs(5)).unwrap();
        let c = SignedPerm::new(u, signs(10)).unwrap();
        prop_assert_eq!(
            a.compose(&b).unwrap().compose(&c).unwrap(),
            a.compose(&b.compose(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.compose(&b).unwrap().det(), a.det() * b.det());
        prop_assert_eq!(a.compose(&a.inv()).unwrap(), SignedPerm::identity(5));
    }
}

#[test]
fn perm_matrix_model_exhaustive_degree_4() {
    let mut all = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == 4 {
            all.push(Perm::from_images(prefix).unwrap());
            continue;
        }
        for x in 0..4 {
            if !prefix.contains(&x) {
                let mut next = prefix.clone();
                next.push(x);
                stack.push(next);
            }
        }
    }
    assert_eq!(all.len(), 24);
    for s in &all {
        for t in &all {
            let st = s.compose(t).unwrap();
            let (ms, mt) = (s.matrix(), t.matrix());
            let mut prod = vec![vec![0u8; 4]; 4];
            for r in 0..4 {
                for c in 0..4 {
                    prod[r][c] = (0..4).map(|x| ms[r][x] * mt[x][c]).sum();
                }
            }
            assert_eq!(prod, st.matrix());
        }
    }
}
