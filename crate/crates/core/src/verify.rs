//! Route-vs-route comparisons used by the command-line tool and the
//! acceptance suite.

use crate::error::Result;
use crate::oracle::hilbert_table;
use crate::qcombinat::{
    andrews_gordon_multisum, count_congruence_partitions, count_gordon_partitions, gordon_product,
    lossless_q_window, GordonCondition,
};
use crate::report::VerificationReport;
use crate::selberg::{recursion_rhs, solve, RecursionFamily};
use crate::series::{BiSeries, XSpecialization};

/// Three comparisons for Gordon's identities up to `q^q_order`:
/// partition counts on both sides, congruence counts against the product,
/// and the product against the multisum at `x = 1`. The last one uses the
/// multisum truncated at `x_order` and only compares the lossless window.
pub fn verify_gordon(
    cond: GordonCondition,
    q_order: usize,
    x_order: usize,
) -> Result<Vec<VerificationReport>> {
    let gordon = BiSeries::from_q_coeffs(
        0,
        q_order,
        (0..=q_order).map(|n| count_gordon_partitions(cond, n)),
    );
    let congruence = BiSeries::from_q_coeffs(
        0,
        q_order,
        (0..=q_order).map(|n| count_congruence_partitions(cond, n)),
    );
    let product = gordon_product(cond, q_order);
    let (k, i) = (cond.level(), cond.index());
    let multisum = andrews_gordon_multisum(k, i, x_order, q_order)?;
    let at_one = multisum.specialize_x(XSpecialization::One).series;
    let window = lossless_q_window(k, i, x_order, q_order, XSpecialization::One);
    Ok(vec![
        VerificationReport::compare(
            "gordon_partitions",
            &gordon,
            "congruence_partitions",
            &congruence,
            (0, q_order),
        ),
        VerificationReport::compare(
            "congruence_partitions",
            &congruence,
            "gordon_product",
            &product,
            (0, q_order),
        ),
        VerificationReport::compare(
            "gordon_product",
            &product,
            "multisum(x=1)",
            &at_one,
            (0, window),
        ),
    ])
}

/// Solver, multisum and ideal-quotient oracle compared pairwise for every
/// `e` in `1..=k+1` (the member `F_(e-1)`).
pub fn crosscheck(k: usize, m_max: usize, w_max: usize) -> Result<Vec<VerificationReport>> {
    let fam = solve(k, m_max, w_max)?;
    let mut reports = Vec::with_capacity(3 * (k + 1));
    for e in 1..=k + 1 {
        let i = e - 1;
        let solver = fam.member(i);
        let multisum = andrews_gordon_multisum(k, i, m_max, w_max)?;
        let oracle = hilbert_table(k, e, m_max, w_max)?.to_series();
        let (ls, lm, lo) = (
            format!("solver F_{i}"),
            format!("multisum i={i}"),
            format!("oracle e={e}"),
        );
        let window = (m_max, w_max);
        reports.push(VerificationReport::compare(
            &ls, solver, &lm, &multisum, window,
        ));
        reports.push(VerificationReport::compare(
            &ls, solver, &lo, &oracle, window,
        ));
        reports.push(VerificationReport::compare(
            &lm, &multisum, &lo, &oracle, window,
        ));
    }
    Ok(reports)
}

/// One report per equation of the system: both sides of each recursion,
/// then `F_0` against `F_k(xq, q)`.
pub fn recursion_reports(fam: &RecursionFamily) -> Vec<VerificationReport> {
    let k = fam.k();
    let window = fam.orders();
    let mut reports: Vec<VerificationReport> = (1..=k)
        .map(|i| {
            VerificationReport::compare(
                format!("F_{i}"),
                fam.member(i),
                format!("F_{} + (xq)^{i} F_{}(xq,q)", i - 1, k - i),
                &recursion_rhs(fam, i),
                window,
            )
        })
        .collect();
    reports.push(VerificationReport::compare(
        "F_0",
        fam.member(0),
        format!("F_{k}(xq,q)"),
        &fam.member(k).qshift(1),
        window,
    ));
    reports
}
