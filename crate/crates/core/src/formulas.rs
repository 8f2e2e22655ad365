//! Closed-form Zagreb values of the extremal constructions, evaluated exactly.
//!
//! Every closed form exists twice: the expanded polynomial and the degree-sum
//! form it was expanded from. Each public evaluator computes both and asserts
//! that they agree. Arithmetic is on arbitrary-precision rationals; the
//! quarter-integer coefficients cancel on the legal parity domains.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::hypergraph::Hypergraph;

/// An exact rational in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactValue(BigRational);

impl ExactValue {
    pub fn int(v: i64) -> Self {
        ExactValue(BigRational::from_integer(v.into()))
    }

    pub fn frac(numer: i64, denom: i64) -> Self {
        ExactValue(BigRational::new(numer.into(), denom.into()))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_integer(&self) -> Result<BigInt> {
        if self.is_integer() {
            Ok(self.0.to_integer())
        } else {
            Err(Error::NotInteger(self.to_string()))
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.is_integer().then(|| self.0.to_integer().to_i64()).flatten()
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<i64> for ExactValue {
    fn from(v: i64) -> Self {
        ExactValue::int(v)
    }
}

impl From<u64> for ExactValue {
    fn from(v: u64) -> Self {
        ExactValue(BigRational::from_integer(v.into()))
    }
}

impl PartialEq<i64> for ExactValue {
    fn eq(&self, other: &i64) -> bool {
        *self == ExactValue::int(*other)
    }
}

impl PartialEq<u64> for ExactValue {
    fn eq(&self, other: &u64) -> bool {
        *self == ExactValue::from(*other)
    }
}

macro_rules! exact_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for ExactValue {
            type Output = ExactValue;
            fn $method(self, rhs: ExactValue) -> ExactValue {
                ExactValue(self.0.$method(rhs.0))
            }
        }
        impl $tr<&ExactValue> for ExactValue {
            type Output = ExactValue;
            fn $method(self, rhs: &ExactValue) -> ExactValue {
                ExactValue(self.0.$method(&rhs.0))
            }
        }
        impl $tr<&ExactValue> for &ExactValue {
            type Output = ExactValue;
            fn $method(self, rhs: &ExactValue) -> ExactValue {
                ExactValue((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<i64> for ExactValue {
            type Output = ExactValue;
            fn $method(self, rhs: i64) -> ExactValue {
                self.$method(ExactValue::int(rhs))
            }
        }
        impl $tr<i64> for &ExactValue {
            type Output = ExactValue;
            fn $method(self, rhs: i64) -> ExactValue {
                self.clone().$method(ExactValue::int(rhs))
            }
        }
        impl $tr<&ExactValue> for i64 {
            type Output = ExactValue;
            fn $method(self, rhs: &ExactValue) -> ExactValue {
                ExactValue::int(self).$method(rhs)
            }
        }
        impl $tr<ExactValue> for i64 {
            type Output = ExactValue;
            fn $method(self, rhs: ExactValue) -> ExactValue {
                ExactValue::int(self).$method(rhs)
            }
        }
    };
}

exact_binop!(Add, add);
exact_binop!(Sub, sub);
exact_binop!(Mul, mul);

impl Neg for ExactValue {
    type Output = ExactValue;
    fn neg(self) -> ExactValue {
        ExactValue(-self.0)
    }
}

fn q(numer: i64, denom: i64) -> ExactValue {
    ExactValue::frac(numer, denom)
}

fn sq(v: ExactValue) -> ExactValue {
    &v * &v
}

/// Whether to enforce the parameter ranges under which a closed form is
/// derived. `Unchecked` evaluates the polynomial anywhere.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Domain {
    #[default]
    Checked,
    Unchecked,
}

fn require(domain: Domain, ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if domain == Domain::Checked && !ok {
        return Err(Error::ParameterOutOfRange(what()));
    }
    Ok(())
}

fn agree(name: &str, expanded: ExactValue, degree_sum: ExactValue) -> ExactValue {
    assert_eq!(expanded, degree_sum, "{name}: expanded and degree-sum forms disagree");
    expanded
}

fn integral(domain: Domain, v: ExactValue) -> Result<ExactValue> {
    if domain == Domain::Checked && !v.is_integer() {
        return Err(Error::NotInteger(v.to_string()));
    }
    Ok(v)
}

/// `3km - 2n`, the Zagreb index of any maximum-degree-2 uniform hypergraph.
pub fn min_zagreb(n: i64, m: i64, k: i64) -> ExactValue {
    ExactValue::int(3 * k * m - 2 * n)
}

/// Zagreb index of `B_1(g, 0, g)` with `m - 2g` pendants at the degree-4 vertex.
pub fn b_max(k: i64, m: i64, g: i64, domain: Domain) -> Result<ExactValue> {
    require(domain, k >= 3 && 3 <= g && 2 * g <= m, || {
        format!("b_max needs k >= 3 and 3 <= g <= m/2 (k={k}, m={m}, g={g})")
    })?;
    let (k, m, g) = (ExactValue::int(k), ExactValue::int(m), ExactValue::int(g));
    let expanded = -10 * &g + &m * &k + 7 * &m + 8 + &m * &m + 4 * &g * &g - 4 * &m * &g;
    let degree_sum = 2 * &g * &(&k - 2)
        + (&m - &(2 * &g)) * &(&k - 1)
        + 8 * &(&g - 1)
        + sq(&m - &(2 * &g) + 4);
    Ok(agree("b_max", expanded, degree_sum))
}

/// Zagreb index of `C_1(g/2, g/2, g/2)` with `m - 3g/2` pendants, g even.
pub fn c1_even(k: i64, m: i64, g: i64, domain: Domain) -> Result<ExactValue> {
    require(domain, k >= 3 && g >= 4 && g % 2 == 0 && 2 * m >= 3 * g, || {
        format!("c1_even needs k >= 3, even g >= 4, m >= 3g/2 (k={k}, m={m}, g={g})")
    })?;
    let (k, m, g) = (ExactValue::int(k), ExactValue::int(m), ExactValue::int(g));
    let expanded = q(-9, 2) * &g + &m * &k + 5 * &m + 6 + &m * &m + q(9, 4) * &g * &g
        - 3 * &m * &g;
    let three_halves_g = q(3, 2) * &g;
    let degree_sum = &three_halves_g * &(&k - 2)
        + (&m - &three_halves_g) * &(&k - 1)
        + 12 * &(q(1, 2) * &g - 1)
        + 9
        + sq(3 + &m - &three_halves_g);
    integral(domain, agree("c1_even", expanded, degree_sum))
}

/// Zagreb index of `C_2(⌊g/2⌋, ⌈g/2⌉, ⌊g/2⌋)` with `m - g - ⌊g/2⌋` pendants,
/// g odd.
pub fn c2_odd(k: i64, m: i64, g: i64, domain: Domain) -> Result<ExactValue> {
    require(domain, k >= 3 && g >= 3 && g % 2 == 1 && 2 * m >= 3 * g - 1, || {
        format!("c2_odd needs k >= 3, odd g >= 3, m >= (3g-1)/2 (k={k}, m={m}, g={g})")
    })?;
    let (k, m, g) = (ExactValue::int(k), ExactValue::int(m), ExactValue::int(g));
    let expanded = -6 * &g + q(23, 4) + &m * &k + 6 * &m + &m * &m + q(9, 4) * &g * &g
        - 3 * &m * &g;
    let half_down = q(1, 2) * &(&g - 1);
    let joints = &g + &half_down - 1;
    let degree_sum = &joints * &(&k - 2)
        + (&k - 3)
        + (&m - &g - &half_down) * &(&k - 1)
        + 4 * &joints
        + sq(3 + &m - &g - &half_down);
    integral(domain, agree("c2_odd", expanded, degree_sum))
}

/// Zagreb index of `C_1(⌊g/2⌋, ⌈g/2⌉, ⌈g/2⌉)` with `m - g - ⌈g/2⌉` pendants,
/// g odd.
pub fn c1_odd(k: i64, m: i64, g: i64, domain: Domain) -> Result<ExactValue> {
    require(domain, k >= 3 && g >= 3 && g % 2 == 1 && 2 * m >= 3 * g + 1, || {
        format!("c1_odd needs k >= 3, odd g >= 3, m >= g + (g+1)/2 (k={k}, m={m}, g={g})")
    })?;
    let (k, m, g) = (ExactValue::int(k), ExactValue::int(m), ExactValue::int(g));
    let expanded = -3 * &g + q(19, 4) + &m * &k + 4 * &m + &m * &m + q(9, 4) * &g * &g
        - 3 * &m * &g;
    let half_up = q(1, 2) * &(&g + 1);
    let degree_sum = (&g + &half_up) * &(&k - 2)
        + (&m - &g - &half_up) * &(&k - 1)
        + 4 * &(&g + &half_up - 3)
        + 9
        + sq(3 + &m - &g - &half_up);
    integral(domain, agree("c1_odd", expanded, degree_sum))
}

/// Zagreb index of the `C_3(p, q, l)` base (q >= 2) with `m - p - q - l`
/// pendants at one degree-2 vertex.
pub fn c3_pendant(k: i64, m: i64, p: i64, q: i64, l: i64, domain: Domain) -> Result<ExactValue> {
    let legal = k >= 3
        && p >= 1
        && q >= 2
        && l >= 1
        && FamilySpec::c(3, p as usize, q as usize, l as usize).is_legal(k as usize)
        && m >= p + q + l;
    require(domain, legal, || {
        format!("c3_pendant needs legal C3 parameters with q >= 2 and m >= p+q+l (k={k}, m={m}, p={p}, q={q}, l={l})")
    })?;
    let [k, m, p, q, l] = [k, m, p, q, l].map(ExactValue::int);
    let expanded = 2 - &p - &q - &l + &m * &k + 3 * &m + &m * &m + &p * &p + &q * &q + &l * &l
        - 2 * &m * &p
        - 2 * &m * &q
        - 2 * &m * &l
        + 2 * &p * &q
        + 2 * &p * &l
        + 2 * &q * &l;
    // s base edges: s(k-2) - 2 cored vertices, s + 1 degree-2 vertices, one of
    // which carries the pendants
    let s = &p + &q + &l;
    let pendants = &m - &s;
    let degree_sum = &s * &(&k - 2) - 2
        + &pendants * &(&k - 1)
        + 4 * &s
        + sq(&pendants + 2);
    Ok(agree("c3_pendant", expanded, degree_sum))
}

/// Change in Zagreb index when `t` edges move from a vertex of degree `du`
/// to one of degree `dv`: `2t(t + dv - du)`.
pub fn move_delta(t: i64, du: i64, dv: i64) -> ExactValue {
    let expanded = 2 * t * (t + dv - du);
    let squares = (dv + t).pow(2) + (du - t).pow(2) - dv.pow(2) - du.pow(2);
    assert_eq!(expanded, squares, "move_delta forms disagree");
    ExactValue::int(expanded)
}

/// Gain from shifting one edge between the paths of a `C_1` with pendants:
/// `(m-2g+p+4)^2 + 1 - (m-2g+p+3)^2 - 4 = 2(m-2g+p) + 4`.
pub fn c1_shift_delta(m: i64, g: i64, p: i64) -> ExactValue {
    let base = m - 2 * g + p;
    let squares = (base + 4).pow(2) + 1 - (base + 3).pow(2) - 4;
    let closed = 2 * base + 4;
    assert_eq!(squares, closed, "c1_shift_delta forms disagree");
    ExactValue::int(closed)
}

/// The two differences between the girth-`g` C maximum and the girth-`g` B
/// maximum. Only the branch matching the parity of `g` is evaluated under
/// [`Domain::Checked`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CMinusBDifferences {
    /// `c1_even - b_max = 11g/2 - 2m - 2 - 7g^2/4 + mg`
    pub even: Option<ExactValue>,
    /// `c2_odd - b_max = 4g - m - 9/4 - 7g^2/4 + mg`
    pub odd: Option<ExactValue>,
}

pub fn c_minus_b_differences(k: i64, m: i64, g: i64, domain: Domain) -> Result<CMinusBDifferences> {
    require(domain, k >= 3 && 3 <= g && 2 * g <= m, || {
        format!("differences need k >= 3 and 3 <= g <= m/2 (k={k}, m={m}, g={g})")
    })?;
    let want_even = domain == Domain::Unchecked || (g % 2 == 0 && g >= 4);
    let want_odd = domain == Domain::Unchecked || g % 2 == 1;
    let b = b_max(k, m, g, Domain::Unchecked)?;
    let (mq, gq) = (ExactValue::int(m), ExactValue::int(g));
    let even = if want_even {
        let expanded = q(11, 2) * &gq - 2 * &mq - 2 - q(7, 4) * &gq * &gq + &mq * &gq;
        let subtracted = c1_even(k, m, g, Domain::Unchecked)? - &b;
        Some(agree("even difference", expanded, subtracted))
    } else {
        None
    };
    let odd = if want_odd {
        let expanded = 4 * &gq - &mq - q(9, 4) - q(7, 4) * &gq * &gq + &mq * &gq;
        let subtracted = c2_odd(k, m, g, Domain::Unchecked)? - &b;
        Some(agree("odd difference", expanded, subtracted))
    } else {
        None
    };
    Ok(CMinusBDifferences { even, odd })
}

/// Checks `M(H) = Σ_t (t-1)(t-2) n_t + 3km - 2n`.
pub fn degree_identity_check(h: &Hypergraph) -> Result<bool> {
    let k = h.uniformity().ok_or(Error::NotUniform)? as i64;
    let stats = h.degree_stats();
    let correction: i64 = stats
        .histogram
        .iter()
        .map(|(&t, &count)| {
            let t = t as i64;
            (t - 1) * (t - 2) * count as i64
        })
        .sum();
    let n = h.vertex_count() as i64;
    let m = h.edge_count() as i64;
    Ok(correction + 3 * k * m - 2 * n == h.zagreb_index() as i64)
}

/// Outcome of scanning a closed form over an integer range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Scan {
    pub points: usize,
    /// First `g` at which the property fails.
    pub violation: Option<i64>,
}

impl Scan {
    pub fn holds(&self) -> bool {
        self.violation.is_none() && self.points > 0
    }
}

fn scan_decreasing(gs: impl Iterator<Item = i64>, f: impl Fn(i64) -> Result<ExactValue>) -> Result<Scan> {
    let mut prev: Option<ExactValue> = None;
    let mut points = 0;
    for g in gs {
        let v = f(g)?;
        points += 1;
        if prev.as_ref().is_some_and(|p| v >= *p) {
            return Ok(Scan { points, violation: Some(g) });
        }
        prev = Some(v);
    }
    Ok(Scan { points, violation: None })
}

fn scan_sign(
    gs: impl Iterator<Item = i64>,
    f: impl Fn(i64) -> Result<ExactValue>,
    ok: impl Fn(&ExactValue) -> bool,
) -> Result<Scan> {
    let mut points = 0;
    for g in gs {
        points += 1;
        if !ok(&f(g)?) {
            return Ok(Scan { points, violation: Some(g) });
        }
    }
    Ok(Scan { points, violation: None })
}

/// `b_max` strictly decreasing over integer `g` in `[3, ⌊m/2⌋]`.
pub fn b_max_decreasing(k: i64, m: i64) -> Result<Scan> {
    scan_decreasing(3..=m / 2, |g| b_max(k, m, g, Domain::Checked))
}

/// `c1_even` strictly decreasing over even `g` in `[4, ⌊2m/3⌋]`.
pub fn c1_even_decreasing(k: i64, m: i64) -> Result<Scan> {
    scan_decreasing((4..=2 * m / 3).step_by(2), |g| c1_even(k, m, g, Domain::Checked))
}

/// `c2_odd` strictly decreasing over odd `g` in `[3, ⌊(2m+1)/3⌋]`.
pub fn c2_odd_decreasing(k: i64, m: i64) -> Result<Scan> {
    scan_decreasing((3..=(2 * m + 1) / 3).step_by(2), |g| c2_odd(k, m, g, Domain::Checked))
}

/// Even-branch difference positive for even `g` in `[4, m/2]`, odd-branch
/// positive for odd `g` in `[3, m/2]`.
pub fn c_minus_b_positive(k: i64, m: i64) -> Result<(Scan, Scan)> {
    let even = scan_sign(
        (4..=m / 2).step_by(2),
        |g| Ok(c_minus_b_differences(k, m, g, Domain::Checked)?.even.expect("even g")),
        ExactValue::is_positive,
    )?;
    let odd = scan_sign(
        (3..=m / 2).step_by(2),
        |g| Ok(c_minus_b_differences(k, m, g, Domain::Checked)?.odd.expect("odd g")),
        ExactValue::is_positive,
    )?;
    Ok((even, odd))
}

/// `c1_odd - c2_odd` equals `3g - 1 - 2m` and is negative for odd `g` in
/// `[3, m/2]`.
pub fn c1_odd_below_c2_odd(k: i64, m: i64) -> Result<Scan> {
    scan_sign(
        (3..=m / 2).step_by(2),
        |g| {
            let d = c1_odd(k, m, g, Domain::Checked)? - c2_odd(k, m, g, Domain::Checked)?;
            // report a mismatch with the closed difference as a violation too
            Ok(if d == 3 * g - 1 - 2 * m { d } else { ExactValue::int(0) })
        },
        ExactValue::is_negative,
    )
}
