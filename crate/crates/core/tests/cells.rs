use std::collections::HashSet;
use std::sync::Arc;

use g2cells::cell::{
    c0_element, c0_from_parts, d_element, decompose_c0, same_left_cell_c0, translation_element,
    w0, DominantWeight, LowestCell, W0Index,
};
use g2cells::weyl::elements_up_to_length;
use g2cells::{GroupElement, KlConfig, KlEngine};

#[test]
fn v_parametrization_round_trip() {
    let mut seen = HashSet::new();
    for i in 1..=12 {
        for j in 1..=12 {
            for a in 0..=2 {
                for b in 0..=2 {
                    let w = c0_element(i, j, a, b).unwrap();
                    let d = decompose_c0(&w).unwrap().expect("element lies in c0");
                    assert_eq!(d.element(), w);
                    assert_eq!(d.lambda.translation_length(), 6 * a as usize + 10 * b as usize);
                    let first = decompose_c0(&c0_element(i, 1, 0, 0).unwrap()).unwrap().unwrap();
                    let last = decompose_c0(&c0_element(1, j, 0, 0).unwrap()).unwrap().unwrap();
                    assert_eq!(d.u, first.u);
                    assert_eq!(d.v, last.v);
                    assert!(seen.insert(w));
                }
            }
        }
    }
    assert_eq!(seen.len(), 12 * 12 * 9);
}

fn c0_length(u: W0Index, lambda: DominantWeight, v: W0Index) -> usize {
    d_element(u).unwrap().length() + lambda.translation_length() + 6 + d_element(v).unwrap().length()
}

#[test]
fn c0_membership_matches_length_formula() {
    let n = 17;
    let mut expected = 0;
    for u in W0Index::all() {
        for v in W0Index::all() {
            for a in 0..3 {
                for b in 0..2 {
                    let lambda = DominantWeight::new(a, b);
                    let l = c0_length(u, lambda, v);
                    assert_eq!(c0_from_parts(u, lambda, v).length(), l);
                    if l <= n {
                        expected += 1;
                    }
                }
            }
        }
    }
    let found = elements_up_to_length(n)
        .iter()
        .filter(|w| decompose_c0(w).unwrap().is_some())
        .count();
    assert_eq!(found, expected);
}

#[test]
fn left_cells_are_indexed_by_v() {
    let y = c0_element(3, 5, 0, 1).unwrap();
    let w = c0_element(7, 5, 2, 0).unwrap();
    let z = c0_element(3, 6, 0, 1).unwrap();
    assert!(same_left_cell_c0(&y, &w).unwrap());
    assert!(!same_left_cell_c0(&y, &z).unwrap());
    assert!(same_left_cell_c0(&y, &y.multiply(&w0()).multiply(&w0())).unwrap());
}

#[test]
fn translations_commute_with_w0_part() {
    for a in 0..3 {
        for b in 0..3 {
            let t = translation_element(DominantWeight::new(a, b));
            let e = W0Index::from_name("e").unwrap();
            assert_eq!(c0_from_parts(e, DominantWeight::new(a, b), e), t.multiply(&w0()));
        }
    }
}

#[test]
fn mu_does_not_depend_on_v() {
    let kl = Arc::new(KlEngine::with_max_length(20));
    let cell = LowestCell::new(Arc::new(KlEngine::new(KlConfig::default())));
    let short: Vec<W0Index> = W0Index::all()
        .filter(|&u| d_element(u).unwrap().length() <= 4)
        .collect();
    let zero = DominantWeight::new(0, 0);
    let xa = DominantWeight::new(1, 0);
    let vs = [W0Index::from_name("e").unwrap(), W0Index::from_name("ststs").unwrap()];
    for &u in &short {
        for &up in &short {
            for (x, xp) in [(zero, zero), (zero, xa), (xa, zero)] {
                let formula = cell.mu_from_parts(u, x, up, xp).unwrap();
                for &v in &vs {
                    let y = c0_from_parts(u, x, v);
                    let w = c0_from_parts(up, xp, v);
                    if y.length().max(w.length()) > 18 {
                        continue;
                    }
                    let direct = kl.mu_symmetric(&y, &w).unwrap();
                    assert_eq!(direct, formula, "{y} {w}");
                    assert_eq!(cell.mu_lowest(&y, &w).unwrap(), formula);
                }
            }
        }
    }
}

#[test]
fn elements_outside_c0() {
    for w in elements_up_to_length(5) {
        assert!(decompose_c0(&w).unwrap().is_none());
    }
    let w0w = GroupElement::parse("121212").unwrap();
    assert!(decompose_c0(&w0w).unwrap().is_some());
    assert!(cell_rejects(&GroupElement::parse("1").unwrap()));
}

fn cell_rejects(w: &GroupElement) -> bool {
    let cell = LowestCell::new(Arc::new(KlEngine::with_max_length(8)));
    cell.mu_lowest(w, w).is_err()
}
