//! Exact numbers of the form `q0 + Σ q_m √m` with rational coefficients and
//! distinct squarefree radicands.
//!
//! Equality is coefficient-wise (the square roots of distinct squarefree
//! integers are linearly independent over the rationals), so comparison can
//! short-circuit on equal coefficients and otherwise refine interval
//! approximations until the sign of the difference is certain; the nonzero
//! algebraic gap guarantees termination.

use num::bigint::{BigInt, Sign};
use num::{BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactReal {
    q0: BigRational,
    terms: BTreeMap<u64, BigRational>,
}

fn squarefree_split(m: u64) -> (u64, u64) {
    // m = square * free
    let mut square = 1u64;
    let mut free = 1u64;
    let mut rest = m;
    let mut p = 2u64;
    while p * p <= rest {
        let mut count = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            count += 1;
        }
        square *= p.pow(count / 2);
        if count % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    free *= rest;
    (square, free)
}

impl ExactReal {
    pub fn zero() -> Self {
        ExactReal {
            q0: BigRational::zero(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_rational(q: BigRational) -> Self {
        ExactReal {
            q0: q,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(k))
    }

    /// `coeff · √m`; the radicand is reduced to its squarefree part.
    pub fn sqrt_term(m: u64, coeff: BigRational) -> Self {
        assert!(m >= 1, "radicand must be positive");
        let (square, free) = squarefree_split(m);
        let scaled = coeff * BigRational::from_integer(BigInt::from(square));
        let mut out = ExactReal::zero();
        if free == 1 {
            out.q0 = scaled;
        } else if !scaled.is_zero() {
            out.terms.insert(free, scaled);
        }
        out
    }

    pub fn sqrt_of(m: u64) -> Self {
        Self::sqrt_term(m, BigRational::one())
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.q0
    }

    pub fn surd_terms(&self) -> &BTreeMap<u64, BigRational> {
        &self.terms
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.q0.is_zero() && self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.q0)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return ExactReal::zero();
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(*m, c * r);
        }
        ExactReal {
            q0: &self.q0 * r,
            terms,
        }
    }

    /// Sign of the value: -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.terms.is_empty() {
            return match self.q0.cmp(&BigRational::zero()) {
                Ordering::Less => -1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            };
        }
        // nonzero by linear independence; refine until the interval for the
        // value excludes zero
        let mut bits = 32u32;
        loop {
            let (lo, hi) = self.bounds(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
            debug_assert!(bits < 1 << 20, "sign refinement runaway");
        }
    }

    /// Rational interval `[lo, hi]` containing the value, from `bits`-bit
    /// approximations of each radical.
    fn bounds(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = self.q0.clone();
        let mut hi = self.q0.clone();
        let scale = BigInt::one() << bits;
        let denom = BigRational::new(BigInt::one(), scale.clone());
        for (m, c) in &self.terms {
            // s <= sqrt(m) * 2^bits < s + 1
            let shifted = BigInt::from(*m) << (2 * bits);
            let s = shifted.sqrt();
            let root_lo = BigRational::from_integer(s.clone()) * &denom;
            let root_hi = BigRational::from_integer(s + BigInt::one()) * &denom;
            if c.is_positive() {
                lo += c * &root_lo;
                hi += c * &root_hi;
            } else {
                lo += c * &root_hi;
                hi += c * &root_lo;
            }
        }
        (lo, hi)
    }

    /// Greatest integer `t` with `t <= self`.
    pub fn floor_int(&self) -> BigInt {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer();
        }
        let mut bits = 32u32;
        loop {
            let (lo, hi) = self.bounds(bits);
            let fl = lo.floor().to_integer();
            let fh = hi.floor().to_integer();
            if fl == fh {
                return fl;
            }
            if &fh - &fl == BigInt::one() {
                // one integer boundary inside the interval; the value is
                // irrational so a single exact comparison settles the side
                return match self.cmp(&ExactReal::from_bigint(fh.clone())) {
                    Ordering::Less => fl,
                    _ => fh,
                };
            }
            bits *= 2;
        }
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn frac(&self) -> ExactReal {
        self.clone() - ExactReal::from_bigint(self.floor_int())
    }

    /// `b·floor(self/b)` for rational `b != 0`.
    pub fn floor_b(&self, b: &BigRational) -> ExactReal {
        assert!(!b.is_zero());
        let scaled = self.scale(&b.recip());
        ExactReal::from_rational(BigRational::from_integer(scaled.floor_int()) * b)
    }

    /// `self - b·floor(self/b)`, in `b·[0,1)` oriented by the sign of `b`.
    pub fn frac_b(&self, b: &BigRational) -> ExactReal {
        self.clone() - self.floor_b(b)
    }

    /// Smallest integer `>= self` when `closed`, else smallest integer
    /// strictly greater.
    pub fn ceil_excl(&self, closed: bool) -> BigInt {
        let f = self.floor_int();
        let on_boundary = self.is_rational() && self.q0.is_integer();
        if on_boundary {
            if closed {
                f
            } else {
                f + 1
            }
        } else {
            f + 1
        }
    }

    /// Largest integer `<= self` when `closed`, else largest integer
    /// strictly smaller.
    pub fn floor_excl(&self, closed: bool) -> BigInt {
        let f = self.floor_int();
        let on_boundary = self.is_rational() && self.q0.is_integer();
        if on_boundary && !closed {
            f - 1
        } else {
            f
        }
    }

    /// `f64` approximation for display purposes only.
    pub fn approx(&self) -> f64 {
        let ratio_to_f64 = |q: &BigRational| {
            let n = q.numer();
            let d = q.denom();
            bigint_to_f64(n) / bigint_to_f64(d)
        };
        let mut v = ratio_to_f64(&self.q0);
        for (m, c) in &self.terms {
            v += ratio_to_f64(c) * (*m as f64).sqrt();
        }
        v
    }
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    let (sign, digits) = x.to_radix_be(10);
    let s: String = digits.iter().map(|d| (b'0' + d) as char).collect();
    let v: f64 = s.parse().unwrap_or(f64::NAN);
    match sign {
        Sign::Minus => -v,
        _ => v,
    }
}

impl Add for ExactReal {
    type Output = ExactReal;
    fn add(self, rhs: ExactReal) -> ExactReal {
        let mut terms = self.terms;
        for (m, c) in rhs.terms {
            let entry = terms.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&m);
            }
        }
        ExactReal {
            q0: self.q0 + rhs.q0,
            terms,
        }
    }
}

impl Sub for ExactReal {
    type Output = ExactReal;
    fn sub(self, rhs: ExactReal) -> ExactReal {
        self + (-rhs)
    }
}

impl Neg for ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        ExactReal {
            q0: -self.q0,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<'a> Add<&'a ExactReal> for &ExactReal {
    type Output = ExactReal;
    fn add(self, rhs: &'a ExactReal) -> ExactReal {
        self.clone() + rhs.clone()
    }
}

impl<'a> Sub<&'a ExactReal> for &ExactReal {
    type Output = ExactReal;
    fn sub(self, rhs: &'a ExactReal) -> ExactReal {
        self.clone() - rhs.clone()
    }
}

impl PartialOrd for ExactReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactReal {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).signum() {
            -1 => Ordering::Less,
            1 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.q0.is_zero() || self.terms.is_empty() {
            write!(f, "{}", self.q0)?;
            first = false;
        }
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*sqrt({m})")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))
}
