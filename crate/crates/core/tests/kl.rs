use std::sync::Arc;

use g2cells::weyl::{bruhat_leq, elements_up_to_length};
use g2cells::{Generator, GroupElement, HeckeCombination, KlEngine, LaurentPoly, Side};
use num_bigint::BigInt;
use num_traits::{One, Signed};

const N: usize = 12;

fn engine() -> Arc<KlEngine> {
    Arc::new(KlEngine::with_max_length(N + 2))
}

#[test]
fn polynomial_shape_and_symmetries() {
    let kl = engine();
    let elems = elements_up_to_length(N);
    for w in &elems {
        for u in &elems {
            let p = kl.kl_poly(u, w).unwrap();
            if !bruhat_leq(u, w) {
                assert!(p.is_zero(), "{u} {w}");
                continue;
            }
            assert!(p.coeff(0).is_one(), "P({u},{w}) = {p}");
            let gap = (w.length() - u.length()) as i64;
            for (k, c) in p.terms() {
                assert!(k >= 0 && k % 2 == 0);
                assert!(c.is_positive());
                assert!(u == w || k < gap, "degree of P({u},{w}) = {p}");
            }
            let inv = kl.kl_poly(&u.inverse(), &w.inverse()).unwrap();
            assert_eq!(inv, p);
        }
    }
}

#[test]
fn left_descent_invariance() {
    let kl = engine();
    let elems = elements_up_to_length(N);
    for w in &elems {
        for g in w.left_descents() {
            for u in elems.iter().filter(|u| u.length() < w.length()) {
                let su = u.left_mul(g);
                if su.length() <= N {
                    assert_eq!(kl.kl_poly(u, w).unwrap(), kl.kl_poly(&su, w).unwrap());
                }
            }
        }
    }
}

#[test]
fn left_and_right_recursions_agree() {
    let kl = engine();
    let elems = elements_up_to_length(N);
    for w in elems.iter().rev().take(40) {
        for u in &elems {
            assert_eq!(kl.kl_poly(u, w).unwrap(), kl.kl_poly_right(u, w).unwrap());
        }
    }
}

#[test]
fn mu_is_symmetric_in_order() {
    let kl = engine();
    let elems = elements_up_to_length(9);
    for w in &elems {
        for y in &elems {
            assert_eq!(kl.mu_symmetric(y, w).unwrap(), kl.mu_symmetric(w, y).unwrap());
        }
    }
}

fn two() -> LaurentPoly {
    LaurentPoly::two()
}

#[test]
fn generator_products_follow_descents() {
    let kl = engine();
    for w in elements_up_to_length(10) {
        for g in Generator::ALL {
            let s = GroupElement::generator(g);
            let prod = kl.c_product(&s, &w).unwrap();
            if w.is_left_descent(g) {
                let mut expect = HeckeCombination::zero();
                expect.add_term(w.clone(), &two());
                assert_eq!(prod, expect);
            } else {
                assert_eq!(prod.coefficient(&w.left_mul(g)), LaurentPoly::one());
                for (z, h) in prod.terms() {
                    if z != &w.left_mul(g) {
                        assert!(z.is_left_descent(g) && z.length() < w.length());
                        assert_eq!(h.coeff(0), BigInt::from(kl.mu(z, &w).unwrap()));
                    }
                }
            }
            let side = kl.cs_mul(g, &HeckeCombination::basis(w.clone()), Side::Left).unwrap();
            assert_eq!(side, prod);
        }
    }
}

#[test]
fn products_are_associative_and_bar_invariant() {
    let kl = KlEngine::with_max_length(28);
    let words = ["", "0", "12", "2101", "121212", "0121", "21021"];
    let elems: Vec<GroupElement> = words.iter().map(|w| GroupElement::parse(w).unwrap()).collect();
    for x in &elems {
        for y in &elems {
            let xy = kl.c_product(x, y).unwrap();
            for (_, h) in xy.terms() {
                assert_eq!(h.bar(), *h);
                assert!(!h.is_zero());
            }
            for z in &elems {
                let left = kl.combination_times(&xy, z).unwrap();
                let yz = kl.c_product(y, z).unwrap();
                let mut right = HeckeCombination::zero();
                for (e, h) in yz.terms() {
                    right.add_scaled(&kl.c_product(x, e).unwrap(), h);
                }
                assert_eq!(left, right, "({x} {y}) {z}");
            }
        }
    }
}
