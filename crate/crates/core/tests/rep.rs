use g2cells::rep::{
    char_product_oracle, dual, freudenthal_mults, tensor_decomposition, tensor_mult, weyl_dim, Weight,
    DEFAULT_ORACLE_DIM_CAP,
};

fn dominant(bound: i64) -> Vec<Weight> {
    (0..=bound)
        .flat_map(|a| (0..=bound).map(move |b| Weight::new(a, b)))
        .collect()
}

#[test]
fn klimyk_matches_character_products() {
    for l1 in dominant(2) {
        for l2 in dominant(2) {
            let fast = tensor_decomposition(l1, l2).unwrap();
            let slow = char_product_oracle(l1, l2, DEFAULT_ORACLE_DIM_CAP).unwrap();
            assert_eq!(fast, slow, "{l1} x {l2}");
            let dim: u64 = fast.iter().map(|(w, m)| m * weyl_dim(*w).unwrap()).sum();
            assert_eq!(dim, weyl_dim(l1).unwrap() * weyl_dim(l2).unwrap());
        }
    }
}

#[test]
fn weight_multiplicities_sum_to_dimension() {
    for l in dominant(3) {
        let mults = freudenthal_mults(l).unwrap();
        assert_eq!(mults.values().sum::<u64>(), weyl_dim(l).unwrap());
        assert_eq!(mults.get(&l), Some(&1));
    }
}

#[test]
fn representations_are_self_dual() {
    for l in dominant(3) {
        assert_eq!(dual(l), l);
    }
}

#[test]
fn multiplicities_are_symmetric() {
    let ws = dominant(2);
    for &a in &ws {
        for &b in &ws {
            for &c in &ws {
                let m = tensor_mult(a, b, c).unwrap();
                assert_eq!(m, tensor_mult(b, a, c).unwrap());
                assert_eq!(m, tensor_mult(a, c, b).unwrap());
            }
        }
    }
    assert_eq!(tensor_mult(Weight::X_ALPHA, Weight::X_ALPHA, Weight::X_BETA).unwrap(), 1);
    assert_eq!(tensor_mult(Weight::X_BETA, Weight::X_BETA, Weight::X_BETA).unwrap(), 1);
    assert_eq!(tensor_mult(Weight::RHO, Weight::RHO, Weight::X_BETA).unwrap(), 2);
}
