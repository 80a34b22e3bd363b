//! The Rogers–Selberg system of q-difference equations.
//!
//! For level `k`, `F_i` stands for the normalized character
//! `χ'_{W(iΛ0 + (k-i)Λ1)}` and the system reads
//!
//! ```text
//!   F_i(x, q) - (xq)^i F_(k-i)(xq, q) = F_(i-1)(x, q)      1 <= i <= k
//!   F_0(x, q) = F_k(xq, q)
//! ```
//!
//! with every `F_i` in `1 + xq Z[[x, q]]`. [`solve`] builds the unique
//! solution degree by degree in `x`.

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{BiSeries, Coefficient};

/// Exact rational used for conformal weights and charge offsets.
pub type Rational = Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionFamily {
    k: usize,
    x_order: usize,
    q_order: usize,
    #[serde(rename = "F")]
    members: Vec<BiSeries>,
}

#[derive(Deserialize)]
struct FamilyRepr {
    k: usize,
    x_order: usize,
    q_order: usize,
    #[serde(rename = "F")]
    members: Vec<BiSeries>,
}

impl<'de> Deserialize<'de> for RecursionFamily {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let repr = FamilyRepr::deserialize(deserializer)?;
        RecursionFamily::from_members(repr.k, repr.x_order, repr.q_order, repr.members)
            .map_err(serde::de::Error::custom)
    }
}

impl RecursionFamily {
    /// Wraps externally produced members. Only the shape is validated
    /// (level, count and orders); the recursion invariants are left to
    /// [`check_recursions`] and [`RecursionFamily::initial_condition_holds`].
    pub fn from_members(
        k: usize,
        x_order: usize,
        q_order: usize,
        members: Vec<BiSeries>,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroLevel);
        }
        if members.len() != k + 1 {
            return Err(Error::MalformedFamily(format!(
                "level {k} needs {} members, found {}",
                k + 1,
                members.len()
            )));
        }
        if let Some(bad) = members
            .iter()
            .position(|f| f.orders() != (x_order, q_order))
        {
            return Err(Error::MalformedFamily(format!(
                "member {bad} has orders {:?}, expected {:?}",
                members[bad].orders(),
                (x_order, q_order)
            )));
        }
        Ok(RecursionFamily {
            k,
            x_order,
            q_order,
            members,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.x_order, self.q_order)
    }

    pub fn members(&self) -> &[BiSeries] {
        &self.members
    }

    /// `F_i`, the character of `W(iΛ0 + (k-i)Λ1)`.
    pub fn member(&self, i: usize) -> &BiSeries {
        &self.members[i]
    }

    pub fn into_members(self) -> Vec<BiSeries> {
        self.members
    }

    /// Each member has constant term 1 and nothing else on the `a = 0` row
    /// or the `b = 0` column.
    pub fn initial_condition_holds(&self) -> bool {
        self.members.iter().all(|f| {
            f.at(0, 0).is_one()
                && (1..=self.q_order).all(|b| f.at(0, b).is_zero())
                && (1..=self.x_order).all(|a| f.at(a, 0).is_zero())
        })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.members.iter().all(BiSeries::is_nonnegative)
    }

    /// `F_0 <= F_1 <= ... <= F_k` coefficientwise.
    pub fn is_monotone(&self) -> bool {
        self.members.windows(2).all(|w| {
            w[0].le_coefficientwise(&w[1])
                .expect("members share orders")
        })
    }

    /// The same family restricted to a smaller window.
    pub fn restrict(&self, x_order: usize, q_order: usize) -> Result<Self> {
        let members = self
            .members
            .iter()
            .map(|f| f.restrict(x_order, q_order))
            .collect::<std::result::Result<_, _>>()?;
        Ok(RecursionFamily {
            k: self.k,
            x_order,
            q_order,
            members,
        })
    }

    /// Rows `(i, a, b, coeff)` of nonzero terms, `i` outermost.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("i\ta\tb\tcoeff\n");
        for (i, f) in self.members.iter().enumerate() {
            for (a, b, c) in f.terms() {
                out.push_str(&format!("{i}\t{a}\t{b}\t{c}\n"));
            }
        }
        out
    }
}

/// Solves the level-`k` system on the window `(x_order, q_order)`.
///
/// Writing `F_i = sum_m a_(i,m)(q) x^m`, the coefficient of `x^m` in the
/// equations gives `a_(i,m) = a_(i-1,m) + q^m a_(k-i,m-i)` and
/// `a_(0,m) = q^m a_(k,m)`. Summing the first over `i` and substituting the
/// second,
///
/// ```text
///   (1 - q^m) a_(k,m) = q^m * sum_(j=1..min(k,m)) a_(k-j, m-j)
/// ```
///
/// whose right side only involves lower x-degrees.
pub fn solve(k: usize, x_order: usize, q_order: usize) -> Result<RecursionFamily> {
    if k == 0 {
        return Err(Error::ZeroLevel);
    }
    let n = q_order;
    // rows[i][m] is a_(i,m) as a q-series of length n + 1
    let mut rows: Vec<Vec<Vec<Coefficient>>> = vec![Vec::with_capacity(x_order + 1); k + 1];
    let mut constant = vec![Coefficient::zero(); n + 1];
    constant[0] = Coefficient::one();
    for row in rows.iter_mut() {
        row.push(constant.clone());
    }

    for m in 1..=x_order {
        let mut top = vec![Coefficient::zero(); n + 1];
        for j in 1..=k.min(m) {
            add_shifted(&mut top, &rows[k - j][m - j], m);
        }
        divide_one_minus_q_power(&mut top, m);
        let mut bottom = vec![Coefficient::zero(); n + 1];
        add_shifted(&mut bottom, &top, m);
        rows[0].push(bottom);
        for i in 1..=k {
            let mut next = rows[i - 1][m].clone();
            if i <= m {
                add_shifted(&mut next, &rows[k - i][m - i], m);
            }
            rows[i].push(next);
        }
        debug_assert_eq!(rows[k][m], top);
    }

    let members = rows
        .into_iter()
        .map(|member| {
            let mut f = BiSeries::zero(x_order, n);
            for (m, row) in member.into_iter().enumerate() {
                f.row_mut(m).clone_from_slice(&row);
            }
            f
        })
        .collect();
    Ok(RecursionFamily {
        k,
        x_order,
        q_order,
        members,
    })
}

// dst += q^shift * src, truncated.
fn add_shifted(dst: &mut [Coefficient], src: &[Coefficient], shift: usize) {
    if shift >= dst.len() {
        return;
    }
    let len = dst.len() - shift;
    for (d, s) in dst[shift..].iter_mut().zip(&src[..len]) {
        if !s.is_zero() {
            *d += s;
        }
    }
}

fn divide_one_minus_q_power(row: &mut [Coefficient], m: usize) {
    for b in m..row.len() {
        let (lo, hi) = row.split_at_mut(b);
        hi[0] += &lo[b - m];
    }
}

/// Residuals of the whole system, all zero for a genuine solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    /// `F_i - (xq)^i F_(k-i)(xq, q) - F_(i-1)` for `i = 1..=k`.
    pub recursions: Vec<BiSeries>,
    /// `F_0 - F_k(xq, q)`.
    pub boundary: BiSeries,
}

impl ResidualReport {
    pub fn all_zero(&self) -> bool {
        self.boundary.is_zero() && self.recursions.iter().all(BiSeries::is_zero)
    }

    /// All `k + 1` residuals, recursions first.
    pub fn residuals(&self) -> impl Iterator<Item = &BiSeries> {
        self.recursions
            .iter()
            .chain(std::iter::once(&self.boundary))
    }
}

/// Right side of the `i`-th recursion: `F_(i-1) + (xq)^i F_(k-i)(xq, q)`.
pub fn recursion_rhs(fam: &RecursionFamily, i: usize) -> BiSeries {
    let k = fam.k;
    fam.member(i - 1) + &fam.member(k - i).qshift(1).mul_monomial(i, i)
}

pub fn check_recursions(fam: &RecursionFamily) -> ResidualReport {
    let recursions = (1..=fam.k)
        .map(|i| fam.member(i) - &recursion_rhs(fam, i))
        .collect();
    let boundary = fam.member(0) - &fam.member(fam.k).qshift(1);
    ResidualReport {
        recursions,
        boundary,
    }
}

/// `F(x, q) - F(xq, q) - xq F(xq^2, q)`.
pub fn check_rr_recursion(f: &BiSeries) -> BiSeries {
    f - &f.qshift(1) - f.qshift(2).mul_monomial(1, 1)
}

/// The three level-2 equations written out member by member:
///
/// ```text
///   F_1(x) - xq F_1(xq)      = F_0(x)
///   F_2(x) - (xq)^2 F_0(xq)  = F_1(x)
///   F_2(xq)                  = F_0(x)
/// ```
pub fn check_k2_example(fam: &RecursionFamily) -> Result<[BiSeries; 3]> {
    if fam.k != 2 {
        return Err(Error::WrongLevel {
            expected: 2,
            found: fam.k,
        });
    }
    let [f0, f1, f2] = [fam.member(0), fam.member(1), fam.member(2)];
    Ok([
        f1 - &f1.qshift(1).mul_monomial(1, 1) - f0,
        f2 - &f0.qshift(1).mul_monomial(2, 2) - f1,
        f2.qshift(1) - f0,
    ])
}

/// Conformal weight and charge offset of `Λ = k0 Λ0 + k1 Λ1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightData {
    pub k0: usize,
    pub k1: usize,
    /// `h = <Λ, Λ + α> / (2(k + 2)) = k1 (k1 + 2) / (4 (k + 2))`.
    pub conformal_weight: Rational,
    /// `<α/2, Λ> = k1 / 2`.
    pub charge_offset: Rational,
}

pub fn weight_data(k0: usize, k1: usize) -> Result<WeightData> {
    let k = k0 + k1;
    if k == 0 {
        return Err(Error::ZeroLevel);
    }
    let (k, k1i) = (k as i64, k1 as i64);
    Ok(WeightData {
        k0,
        k1,
        conformal_weight: Rational::new(k1i * (k1i + 2), 4 * (k + 2)),
        charge_offset: Rational::new(k1i, 2),
    })
}

/// A full character `x^charge_offset q^conformal_weight * series`; the
/// fractional exponents never enter the series itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub charge_offset: Rational,
    pub conformal_weight: Rational,
    pub series: BiSeries,
}

/// Recovers `χ` from `F_i = χ'` for `Λ = iΛ0 + (k-i)Λ1`.
pub fn unnormalize(fam: &RecursionFamily, i: usize) -> Result<Character> {
    if i > fam.k {
        return Err(Error::IndexOutOfRange { k: fam.k, i });
    }
    let data = weight_data(i, fam.k - i)?;
    Ok(Character {
        charge_offset: data.charge_offset,
        conformal_weight: data.conformal_weight,
        series: fam.member(i).clone(),
    })
}
