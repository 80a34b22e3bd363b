//! Cell-by-cell comparison of two computations of the same series.

use serde::Serialize;

use crate::series::{BiSeries, Coefficient};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

/// The lexicographically first cell where the two routes disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub m: usize,
    pub w: usize,
    #[serde(serialize_with = "as_decimal")]
    pub value_a: Coefficient,
    #[serde(serialize_with = "as_decimal")]
    pub value_b: Coefficient,
}

fn as_decimal<S: serde::Serializer>(c: &Coefficient, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub route_a: String,
    pub route_b: String,
    /// `(max charge, max weight)` actually compared.
    pub window: (usize, usize),
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
}

impl VerificationReport {
    /// Compares `a` and `b` on `0..=m_max` x `0..=w_max`. Cells outside either
    /// series count as zero.
    pub fn compare(
        route_a: impl Into<String>,
        a: &BiSeries,
        route_b: impl Into<String>,
        b: &BiSeries,
        window: (usize, usize),
    ) -> Self {
        let (m_max, w_max) = window;
        let first_discrepancy = (0..=m_max)
            .flat_map(|m| (0..=w_max).map(move |w| (m, w)))
            .find_map(|(m, w)| {
                let (va, vb) = (a.coeff(m, w), b.coeff(m, w));
                (va != vb).then_some(Discrepancy {
                    m,
                    w,
                    value_a: va,
                    value_b: vb,
                })
            });
        VerificationReport {
            route_a: route_a.into(),
            route_b: route_b.into(),
            window,
            status: if first_discrepancy.is_some() {
                Status::Mismatch
            } else {
                Status::Match
            },
            first_discrepancy,
        }
    }

    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }
}
