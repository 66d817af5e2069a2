//! Finite unions of exact-endpoint cells (points and intervals) on the real
//! line, with the boundary-flag bookkeeping needed for exact set algebra.

use super::exact::ExactReal;
use num::bigint::BigInt;
use num::{BigRational, Signed};
use std::cmp::Ordering;
use std::fmt;

/// A single point or an interval with open/closed end flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Point(ExactReal),
    Interval {
        lo: ExactReal,
        hi: ExactReal,
        lo_closed: bool,
        hi_closed: bool,
    },
}

impl Cell {
    pub fn point(v: ExactReal) -> Cell {
        Cell::Point(v)
    }

    pub fn interval(lo: ExactReal, hi: ExactReal, lo_closed: bool, hi_closed: bool) -> Cell {
        Cell::Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }
}

/// Internal normalized form: `lo <= hi`, and `lo == hi` only as a doubly
/// closed point.
#[derive(Clone, PartialEq, Eq)]
pub struct Span {
    pub lo: ExactReal,
    pub hi: ExactReal,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl fmt::Debug for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

impl Span {
    /// Builds a span, returning `None` when the data describes the empty set.
    pub fn make(lo: ExactReal, lo_closed: bool, hi: ExactReal, hi_closed: bool) -> Option<Span> {
        match lo.cmp(&hi) {
            Ordering::Less => Some(Span {
                lo,
                hi,
                lo_closed,
                hi_closed,
            }),
            Ordering::Equal if lo_closed && hi_closed => Some(Span {
                lo,
                hi,
                lo_closed: true,
                hi_closed: true,
            }),
            _ => None,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &ExactReal) -> bool {
        let above = match x.cmp(&self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Less => false,
        };
        let below = match x.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Greater => false,
        };
        above && below
    }

    pub fn translate(&self, by: &ExactReal) -> Span {
        Span {
            lo: &self.lo + by,
            hi: &self.hi + by,
            lo_closed: self.lo_closed,
            hi_closed: self.hi_closed,
        }
    }

    /// Scales by a nonzero rational, flipping the ends when negative.
    pub fn scale(&self, r: &BigRational) -> Span {
        let lo = self.lo.scale(r);
        let hi = self.hi.scale(r);
        if r.is_negative() {
            Span {
                lo: hi,
                hi: lo,
                lo_closed: self.hi_closed,
                hi_closed: self.lo_closed,
            }
        } else {
            Span {
                lo,
                hi,
                lo_closed: self.lo_closed,
                hi_closed: self.hi_closed,
            }
        }
    }

    pub fn negate(&self) -> Span {
        Span {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
            lo_closed: self.hi_closed,
            hi_closed: self.lo_closed,
        }
    }

    /// The difference set `{x - y : x in self, y in other}` as a span.
    pub fn minkowski_diff(&self, other: &Span) -> Span {
        Span {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
            lo_closed: self.lo_closed && other.hi_closed,
            hi_closed: self.hi_closed && other.lo_closed,
        }
    }

    /// Integers inside the span, as an inclusive range (may be empty).
    pub fn integer_range(&self) -> (BigInt, BigInt) {
        (
            self.lo.ceil_excl(self.lo_closed),
            self.hi.floor_excl(self.hi_closed),
        )
    }

    pub fn contains_nonzero_integer(&self) -> bool {
        let (k0, k1) = self.integer_range();
        if k0 > k1 {
            return false;
        }
        let zero = BigInt::from(0);
        k0 != zero || k1 != zero
    }

    pub fn intersect(&self, other: &Span) -> Option<Span> {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            Ordering::Greater => (self.lo.clone(), self.lo_closed),
            Ordering::Less => (other.lo.clone(), other.lo_closed),
            Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            Ordering::Less => (self.hi.clone(), self.hi_closed),
            Ordering::Greater => (other.hi.clone(), other.hi_closed),
            Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Span::make(lo, lo_closed, hi, hi_closed)
    }

    /// `self \ other` as zero, one or two spans.
    pub fn subtract(&self, other: &Span) -> Vec<Span> {
        if self.intersect(other).is_none() {
            return vec![self.clone()];
        }
        let mut out = Vec::new();
        // left remainder: points of self strictly before other's lower end
        if let Some(s) = Span::make(
            self.lo.clone(),
            self.lo_closed,
            other.lo.clone(),
            !other.lo_closed,
        ) {
            if let Some(s) = s.intersect(self) {
                out.push(s);
            }
        }
        // right remainder
        if let Some(s) = Span::make(
            other.hi.clone(),
            !other.hi_closed,
            self.hi.clone(),
            self.hi_closed,
        ) {
            if let Some(s) = s.intersect(self) {
                out.push(s);
            }
        }
        out
    }

    /// Splits into unit pieces `(k, piece - k)` with each piece inside
    /// `[0, 1)`; splitting happens at integer boundaries, so a point at an
    /// integer lands in its own layer.
    pub fn split_unit(&self) -> Vec<(BigInt, Span)> {
        let mut out = Vec::new();
        let k0 = self.lo.floor_int();
        let k1 = self.hi.floor_int();
        let mut k = k0;
        while k <= k1 {
            let tile = Span {
                lo: ExactReal::from_bigint(k.clone()),
                hi: ExactReal::from_bigint(&k + BigInt::from(1)),
                lo_closed: true,
                hi_closed: false,
            };
            if let Some(piece) = self.intersect(&tile) {
                out.push((
                    k.clone(),
                    piece.translate(&-ExactReal::from_bigint(k.clone())),
                ));
            }
            k += 1;
        }
        out
    }

    fn lower_key(&self) -> (ExactReal, bool) {
        (self.lo.clone(), !self.lo_closed)
    }
}

impl From<&Cell> for Span {
    fn from(c: &Cell) -> Span {
        match c {
            Cell::Point(v) => Span {
                lo: v.clone(),
                hi: v.clone(),
                lo_closed: true,
                hi_closed: true,
            },
            Cell::Interval {
                lo,
                hi,
                lo_closed,
                hi_closed,
            } => Span {
                lo: lo.clone(),
                hi: hi.clone(),
                lo_closed: *lo_closed,
                hi_closed: *hi_closed,
            },
        }
    }
}

impl From<&Span> for Cell {
    fn from(s: &Span) -> Cell {
        if s.is_point() {
            Cell::Point(s.lo.clone())
        } else {
            Cell::Interval {
                lo: s.lo.clone(),
                hi: s.hi.clone(),
                lo_closed: s.lo_closed,
                hi_closed: s.hi_closed,
            }
        }
    }
}

/// A normalized finite union of spans: sorted, pairwise disjoint, touching
/// pieces merged.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CellSet {
    spans: Vec<Span>,
}

impl fmt::Debug for CellSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CellSet{:?}", self.spans)
    }
}

impl CellSet {
    pub fn empty() -> CellSet {
        CellSet { spans: Vec::new() }
    }

    pub fn from_cells(cells: &[Cell]) -> CellSet {
        CellSet::from_spans(cells.iter().map(Span::from).collect())
    }

    pub fn from_spans(mut spans: Vec<Span>) -> CellSet {
        spans.sort_by(|a, b| {
            a.lower_key()
                .cmp(&b.lower_key())
                .then_with(|| a.hi.cmp(&b.hi))
        });
        let mut merged: Vec<Span> = Vec::new();
        for s in spans {
            match merged.last_mut() {
                Some(last) if touches(last, &s) => {
                    // extend the upper end if s reaches further
                    let extend = match last.hi.cmp(&s.hi) {
                        Ordering::Less => true,
                        Ordering::Equal => !last.hi_closed && s.hi_closed,
                        Ordering::Greater => false,
                    };
                    if extend {
                        last.hi = s.hi.clone();
                        last.hi_closed = s.hi_closed;
                    } else if last.hi == s.hi && s.hi_closed {
                        last.hi_closed = true;
                    }
                }
                _ => merged.push(s),
            }
        }
        CellSet { spans: merged }
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.spans.iter().map(Cell::from).collect()
    }

    pub fn spans(&self) -> &[Span] {
        &self.spans
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    pub fn contains(&self, x: &ExactReal) -> bool {
        self.spans.iter().any(|s| s.contains(x))
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        let mut spans = self.spans.clone();
        spans.extend(other.spans.iter().cloned());
        CellSet::from_spans(spans)
    }

    pub fn intersect(&self, other: &CellSet) -> CellSet {
        let mut out = Vec::new();
        for a in &self.spans {
            for b in &other.spans {
                if let Some(c) = a.intersect(b) {
                    out.push(c);
                }
            }
        }
        CellSet::from_spans(out)
    }

    pub fn subtract(&self, other: &CellSet) -> CellSet {
        let mut rem: Vec<Span> = self.spans.clone();
        for b in &other.spans {
            rem = rem.iter().flat_map(|a| a.subtract(b)).collect();
            if rem.is_empty() {
                break;
            }
        }
        CellSet::from_spans(rem)
    }

    pub fn covers_span(&self, s: &Span) -> bool {
        let mut rem = vec![s.clone()];
        for b in &self.spans {
            rem = rem.iter().flat_map(|a| a.subtract(b)).collect();
            if rem.is_empty() {
                return true;
            }
        }
        rem.is_empty()
    }

    pub fn translate(&self, by: &ExactReal) -> CellSet {
        CellSet::from_spans(self.spans.iter().map(|s| s.translate(by)).collect())
    }

    pub fn scale(&self, r: &BigRational) -> CellSet {
        CellSet::from_spans(self.spans.iter().map(|s| s.scale(r)).collect())
    }

    pub fn negate(&self) -> CellSet {
        CellSet::from_spans(self.spans.iter().map(|s| s.negate()).collect())
    }

    /// Fractional image: unit pieces of every span, merged into `[0, 1)`.
    pub fn frac_image(&self) -> CellSet {
        let mut pieces = Vec::new();
        for s in &self.spans {
            for (_, p) in s.split_unit() {
                pieces.push(p);
            }
        }
        CellSet::from_spans(pieces)
    }

    pub fn min_lower(&self) -> Option<&ExactReal> {
        self.spans.first().map(|s| &s.lo)
    }

    pub fn max_upper(&self) -> Option<&ExactReal> {
        self.spans.iter().map(|s| &s.hi).max()
    }

    /// Total point count if the set is finite (all spans are points).
    pub fn point_values(&self) -> Option<Vec<&ExactReal>> {
        self.spans
            .iter()
            .map(|s| s.is_point().then_some(&s.lo))
            .collect()
    }
}

fn touches(a: &Span, b: &Span) -> bool {
    // b.lo >= a.lo by sort order; they merge when b starts before a ends or
    // exactly at a closed/closed boundary
    match b.lo.cmp(&a.hi) {
        Ordering::Less => true,
        Ordering::Equal => a.hi_closed || b.lo_closed,
        Ordering::Greater => false,
    }
}
