use qgordon::oracle::{hilbert_table, ideal_span_dimension, partitions_exact, GeneratorSet};
use qgordon::qcombinat::{
    andrews_gordon_multisum, gordon_product, lossless_q_window, GordonCondition,
};
use qgordon::selberg::solve;
use qgordon::XSpecialization;

#[test]
fn oracle_agrees_with_characters() {
    for (k, w_max, m_max) in [(1, 14, 6), (2, 10, 4)] {
        let fam = solve(k, m_max, w_max).unwrap();
        for e in 1..=k + 1 {
            let table = hilbert_table(k, e, m_max, w_max).unwrap().to_series();
            assert_eq!(
                table,
                andrews_gordon_multisum(k, e - 1, m_max, w_max).unwrap(),
                "k={k} e={e}"
            );
            assert_eq!(&table, fam.member(e - 1), "k={k} e={e}");
        }
    }
}

#[test]
fn level_one_oracle_reproduces_sum_formula() {
    let table = hilbert_table(1, 2, 4, 10).unwrap().to_series();
    assert_eq!(table, andrews_gordon_multisum(1, 1, 4, 10).unwrap());
    let table = hilbert_table(1, 1, 4, 10).unwrap().to_series();
    assert_eq!(table, andrews_gordon_multisum(1, 0, 4, 10).unwrap());
}

#[test]
fn oracle_rank_bounds() {
    for k in 1..=2 {
        for e in 1..=k + 1 {
            let gens = GeneratorSet::new(k, e, 9).unwrap();
            for m in 0..=4 {
                for w in 0..=9 {
                    assert!(ideal_span_dimension(&gens, m, w) <= partitions_exact(w, m).len());
                }
            }
        }
    }
}

#[test]
fn level_one_specializations_give_rogers_ramanujan_products() {
    let (r, n) = (8, 40);
    let f1 = solve(1, r, n).unwrap().member(1).clone();

    let at_one = f1.specialize_x(XSpecialization::One).series;
    let window = lossless_q_window(1, 1, r, n, XSpecialization::One);
    assert_eq!(window, 40);
    let first = gordon_product(GordonCondition::new(2, 2).unwrap(), n);
    assert_eq!(at_one, first);
    let expected: Vec<i64> = vec![1, 1, 1, 1, 2, 2, 3, 3, 4, 5];
    let got: Vec<i64> = (0..10)
        .map(|b| i64::try_from(at_one.coeff(0, b)).unwrap())
        .collect();
    assert_eq!(got, expected);

    let at_q = f1.specialize_x(XSpecialization::Q).series;
    let window = lossless_q_window(1, 1, r, n, XSpecialization::Q);
    let second = gordon_product(GordonCondition::new(2, 1).unwrap(), n);
    assert_eq!(
        at_q.restrict(0, window).unwrap(),
        second.restrict(0, window).unwrap()
    );
    assert_eq!(window, 40);
    // the narrower N - R window in particular
    assert_eq!(
        at_q.restrict(0, n - r).unwrap(),
        second.restrict(0, n - r).unwrap()
    );
}
