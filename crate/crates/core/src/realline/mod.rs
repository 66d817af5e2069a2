//! Exact-arithmetic model of unit-periodic subsets of the real line:
//! sets of the canonical form `A = (ℤ∔D) ∪̇ (ℤ₊⁰∔E)` with `D ⊆ [0,1)` and
//! `E` anti integer-transference, both finite unions of exact-endpoint
//! cells.
//!
//! Kernels, starts, concentration numbers and the summand specialize to
//! closed forms on this presentation; the verification suites replay the
//! set-builder definitions against them point by point on sampling grids.
//!
//! Sets pointing the other way (lower periodic) are carried by a mirror
//! flag: a mirrored value represents the negated set, and only membership
//! and rescaling operate through the flag.

pub mod cells;
pub mod exact;

pub use cells::{Cell, CellSet, Span};
pub use exact::{parse_rational, ExactReal};

use num::bigint::BigInt;
use num::{BigRational, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealError {
    #[error("modulus must be a nonzero rational")]
    ZeroModulus,
    #[error("unsupported for this presentation: {0}")]
    Unsupported(String),
    #[error("construction clash: H1 meets H2 - H2")]
    Clash,
    #[error("the empty set has no classification")]
    EmptySet,
    #[error("point is not in the set")]
    NotInSet,
    #[error("set is not upper periodic for the requested modulus: {0}")]
    NotRescalable(String),
    #[error("mirrored set: operator applies to the upper periodic orientation")]
    Mirrored,
    #[error("invalid canonical set: {0}")]
    Invalid(String),
}

pub type RealResult<T> = std::result::Result<T, RealError>;

/// `A = (ℤ∔D) ∪̇ (ℤ₊⁰∔E)`, optionally mirrored (negated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitPeriodicRealSet {
    d: CellSet,
    e: CellSet,
    mirrored: bool,
}

/// Supremum-style values with the conventional zero for the
/// periodic case, finite with an attainment flag otherwise. The unbounded
/// variant is unreachable for finite cells but kept for the contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupValue {
    ZeroConvention,
    Finite { value: ExactReal, attained: bool },
    PlusInfinity,
}

/// Shapes a concentration-number set can take.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RayInterval {
    AllReals,
    ClosedRay(ExactReal),
    OpenRay(ExactReal),
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum RealClass {
    FirstClass,
    SecondClass,
    ThirdClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum PartTag {
    Kernel,
    Free,
}

/// Result of projecting a member onto its generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub part: PartTag,
    pub generator: ExactReal,
    pub shift: BigInt,
}

impl UnitPeriodicRealSet {
    pub fn new(d: Vec<Cell>, e: Vec<Cell>) -> RealResult<Self> {
        Self::from_cellsets(CellSet::from_cells(&d), CellSet::from_cells(&e), false)
    }

    pub fn from_cellsets(d: CellSet, e: CellSet, mirrored: bool) -> RealResult<Self> {
        let zero = ExactReal::zero();
        let one = ExactReal::from_int(1);
        for s in d.spans() {
            if s.lo < zero || s.hi > one || (s.hi == one && s.hi_closed) {
                return Err(RealError::Invalid(format!(
                    "D cell {s:?} is not inside [0,1)"
                )));
            }
        }
        for a in e.spans() {
            for b in e.spans() {
                if a.minkowski_diff(b).contains_nonzero_integer() {
                    return Err(RealError::Invalid(format!(
                        "E cells {a:?} and {b:?} differ by a nonzero integer"
                    )));
                }
            }
        }
        if !e.frac_image().intersect(&d).is_empty() {
            return Err(RealError::Invalid(
                "fractional image of E meets D".into(),
            ));
        }
        Ok(UnitPeriodicRealSet { d, e, mirrored })
    }

    pub fn d(&self) -> &CellSet {
        &self.d
    }

    pub fn e(&self) -> &CellSet {
        &self.e
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    pub fn is_empty_set(&self) -> bool {
        self.d.is_empty() && self.e.is_empty()
    }

    /// The integers `ℤ`.
    pub fn integers() -> Self {
        UnitPeriodicRealSet::new(vec![Cell::point(ExactReal::zero())], vec![]).expect("canonical")
    }

    /// The non-negative integers.
    pub fn nonneg_integers() -> Self {
        UnitPeriodicRealSet::new(vec![], vec![Cell::point(ExactReal::zero())]).expect("canonical")
    }

    fn require_plain(&self) -> RealResult<()> {
        if self.mirrored {
            Err(RealError::Mirrored)
        } else {
            Ok(())
        }
    }

    pub fn membership(&self, x: &ExactReal) -> bool {
        if self.mirrored {
            return self.member_plain(&-x.clone());
        }
        self.member_plain(x)
    }

    fn member_plain(&self, x: &ExactReal) -> bool {
        if self.d.contains(&x.frac()) {
            return true;
        }
        self.e_part_contains(x)
    }

    /// `x ∈ ℤ₊⁰ ∔ E`: some non-negative integer shift lands in an E cell.
    fn e_part_contains(&self, x: &ExactReal) -> bool {
        for s in self.e.spans() {
            // k with x - k in s: s.lo <= x - k <= s.hi (with flags)
            let lo = x - &s.hi;
            let hi = x - &s.lo;
            let k0 = lo.ceil_excl(s.hi_closed);
            let k1 = hi.floor_excl(s.lo_closed);
            if k1 >= BigInt::zero() && k0.max(BigInt::zero()) <= k1 {
                return true;
            }
        }
        false
    }

    /// Periodic kernel `Pk(A) = ℤ∔D`.
    pub fn pk(&self) -> RealResult<Self> {
        self.require_plain()?;
        Self::from_cellsets(self.d.clone(), CellSet::empty(), false)
    }

    /// Periodic-free part `Pf(A) = ℤ₊⁰∔E`.
    pub fn pf(&self) -> RealResult<Self> {
        self.require_plain()?;
        Self::from_cellsets(CellSet::empty(), self.e.clone(), false)
    }

    /// Start `St(A) = E`, as a plain cell set.
    pub fn st(&self) -> RealResult<CellSet> {
        self.require_plain()?;
        Ok(self.e.clone())
    }

    /// Main concentration number `δ_A = sup(A \ (A+1))`, zero by
    /// convention for periodic sets; `A \ (A+1) = E` in canonical form.
    pub fn delta(&self) -> RealResult<SupValue> {
        self.require_plain()?;
        let Some(sup) = self.e.max_upper().cloned() else {
            return Ok(SupValue::ZeroConvention);
        };
        let attained = self
            .e
            .spans()
            .iter()
            .any(|s| s.hi == sup && s.hi_closed);
        Ok(SupValue::Finite {
            value: sup,
            attained,
        })
    }

    /// `Coc(A)` by the case split on `δ_A`.
    pub fn coc(&self) -> RealResult<RayInterval> {
        Ok(match self.delta()? {
            SupValue::ZeroConvention => RayInterval::AllReals,
            SupValue::PlusInfinity => RayInterval::Empty,
            SupValue::Finite { value, attained } => {
                let boundary = value - ExactReal::from_int(1);
                if attained {
                    RayInterval::OpenRay(boundary)
                } else {
                    RayInterval::ClosedRay(boundary)
                }
            }
        })
    }

    /// `Σ_A = {x : x + n ∈ A for all n >= 1}`: the lattice part stays and
    /// each start cell steps down one unit.
    pub fn summand_zplus(&self) -> RealResult<Self> {
        self.require_plain()?;
        let minus_one = ExactReal::from_int(-1);
        Self::from_cellsets(self.d.clone(), self.e.translate(&minus_one), false)
    }

    /// `σ_A = sup(Σ_A \ A)` with the zero convention; `Σ_A \ A = E - 1`.
    pub fn sigma(&self) -> RealResult<SupValue> {
        self.summand_zplus()?.delta()
    }

    fn point_cells(set: &CellSet, what: &str) -> RealResult<Vec<ExactReal>> {
        set.point_values()
            .map(|v| v.into_iter().cloned().collect())
            .ok_or_else(|| RealError::Unsupported(format!("{what} must be point cells")))
    }

    /// The additive-couple criterion: `{d+d'} ∈ D`, `{d+e} ∈ D`, and for
    /// starts either `{e+e'} ∈ D` or some `ε ∈ E` with `e+e'-ε ∈ ℤ`.
    /// Point cells only; the nonempty requirement excludes the empty set.
    pub fn is_semigroup(&self) -> RealResult<bool> {
        self.require_plain()?;
        let d = Self::point_cells(&self.d, "D")?;
        let e = Self::point_cells(&self.e, "E")?;
        if d.is_empty() && e.is_empty() {
            return Ok(false);
        }
        let in_d = |x: &ExactReal| self.d.contains(&x.frac());
        for a in &d {
            for b in &d {
                if !in_d(&(a + b)) {
                    return Ok(false);
                }
            }
            for b in &e {
                if !in_d(&(a + b)) {
                    return Ok(false);
                }
            }
        }
        let integral = |x: &ExactReal| x.as_rational().is_some_and(|q| q.is_integer());
        for a in &e {
            for b in &e {
                let sum = a + b;
                let ok = in_d(&sum) || e.iter().any(|eps| integral(&(&sum - eps)));
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Windowed membership-closure oracle: checks every pairwise sum of
    /// sampled members. Kernel generators are shifted through `[-4, 4]`,
    /// start generators through `[0, 4]`.
    pub fn semigroup_closure_oracle(&self) -> RealResult<bool> {
        self.require_plain()?;
        let d = Self::point_cells(&self.d, "D")?;
        let e = Self::point_cells(&self.e, "E")?;
        if d.is_empty() && e.is_empty() {
            return Ok(false);
        }
        let mut sample: Vec<ExactReal> = Vec::new();
        for v in &d {
            for k in -4i64..=4 {
                sample.push(v + &ExactReal::from_int(k));
            }
        }
        for v in &e {
            for k in 0i64..=4 {
                sample.push(v + &ExactReal::from_int(k));
            }
        }
        for a in &sample {
            for b in &sample {
                if !self.member_plain(&(a + b)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `E = ∅` and `D` subtractive.
    pub fn is_subgroup(&self) -> RealResult<bool> {
        self.require_plain()?;
        let d = Self::point_cells(&self.d, "D")?;
        let _ = Self::point_cells(&self.e, "E")?;
        if !self.e.is_empty() || d.is_empty() {
            return Ok(false);
        }
        for a in &d {
            for b in &d {
                if !self.d.contains(&(a - b).frac()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn classify(&self) -> RealResult<RealClass> {
        self.require_plain()?;
        match (self.e.is_empty(), self.d.is_empty()) {
            (true, true) => Err(RealError::EmptySet),
            (true, false) => Ok(RealClass::FirstClass),
            (false, true) => Ok(RealClass::SecondClass),
            (false, false) => Ok(RealClass::ThirdClass),
        }
    }

    /// `A ∩ [lo, hi]` materialized as explicit cells.
    pub fn window(&self, lo: &ExactReal, hi: &ExactReal) -> CellSet {
        debug_assert!(!self.mirrored);
        let mut tiles: Vec<Span> = Vec::new();
        let clip = Span::make(lo.clone(), true, hi.clone(), true);
        let Some(clip) = clip else {
            return CellSet::empty();
        };
        let k_lo = lo.floor_int() - BigInt::from(1);
        let k_hi = hi.floor_int() + BigInt::from(1);
        let mut k = k_lo;
        while k <= k_hi {
            let shift = ExactReal::from_bigint(k.clone());
            for s in self.d.spans() {
                if let Some(piece) = s.translate(&shift).intersect(&clip) {
                    tiles.push(piece);
                }
            }
            k += 1;
        }
        for s in self.e.spans() {
            // layers s + k intersecting [lo, hi] with k >= 0
            let k_max = (hi - &s.lo).floor_int() + 1;
            let mut k = BigInt::zero();
            while k <= k_max {
                let piece = s.translate(&ExactReal::from_bigint(k.clone()));
                if let Some(piece) = piece.intersect(&clip) {
                    tiles.push(piece);
                }
                k += 1;
            }
        }
        CellSet::from_spans(tiles)
    }

    /// True iff the whole span lies inside the set.
    pub fn covers_span(&self, s: &Span) -> bool {
        let window = self.window(
            &(&s.lo - &ExactReal::from_int(1)),
            &(&s.hi + &ExactReal::from_int(1)),
        );
        window.covers_span(s)
    }

    /// `(1/b)·A` in canonical unit form. Defined when `|b| + A ⊆ A`
    /// (equivalently the image is upper 1-periodic); a negative modulus
    /// flips the mirror flag.
    pub fn rescale(&self, b: &BigRational) -> RealResult<Self> {
        if b.is_zero() {
            return Err(RealError::ZeroModulus);
        }
        // scaling acts on the underlying canonical cells; the mirror flag
        // composes with the sign of the modulus
        let plain = UnitPeriodicRealSet {
            d: self.d.clone(),
            e: self.e.clone(),
            mirrored: false,
        };
        let mag = b.abs();
        let base = plain.rescale_positive(&mag)?;
        let flip = b.is_negative();
        Ok(UnitPeriodicRealSet {
            mirrored: self.mirrored ^ flip,
            ..base
        })
    }

    fn rescale_positive(&self, m: &BigRational) -> RealResult<Self> {
        use num::One;
        if m.is_one() {
            return Ok(UnitPeriodicRealSet {
                d: self.d.clone(),
                e: self.e.clone(),
                mirrored: false,
            });
        }
        let m_exact = ExactReal::from_rational(m.clone());
        // upper m-periodicity: frac(D + m) inside D, E + m inside A
        let shifted_d = self.d.translate(&m_exact).frac_image();
        if !shifted_d.subtract(&self.d).is_empty() {
            return Err(RealError::NotRescalable(format!(
                "D is not invariant under the rotation by {m}"
            )));
        }
        for s in self.e.spans() {
            if !self.covers_span(&s.translate(&m_exact)) {
                return Err(RealError::NotRescalable(format!(
                    "E cell {s:?} shifted by {m} escapes the set"
                )));
            }
        }
        let s_factor = m.recip();
        // kernel: (1/m)(ℤ∔D) has period 1/m * p = q, representatives 0..p-1
        let p = m.numer().clone();
        let mut kernel_pieces: Vec<Span> = Vec::new();
        let mut k = BigInt::zero();
        while k < p {
            let shift = ExactReal::from_bigint(k.clone());
            for s in self.d.spans() {
                kernel_pieces.push(s.translate(&shift).scale(&s_factor));
            }
            k += 1;
        }
        let d_new = CellSet::from_spans(kernel_pieces).frac_image();
        // free: E' = (1/m)·(A \ (m + A)) on a finite window
        let e_new = if self.e.is_empty() {
            CellSet::empty()
        } else {
            let lo = self.e.min_lower().expect("nonempty").clone();
            let hi = self.e.max_upper().expect("nonempty").clone();
            let w_lo = &lo - &ExactReal::from_int(1);
            let w_hi = &(&hi + &(&hi - &lo)) + &(&m_exact + &ExactReal::from_int(2));
            let a_window = self.window(&w_lo, &w_hi);
            // m + A on a slightly larger window
            let shifted = UnitPeriodicRealSet {
                d: self.d.clone(), // D + m = D exactly (finite rotation orbit)
                e: self.e.translate(&m_exact),
                mirrored: false,
            };
            let b_window = shifted.window(
                &(&w_lo - &ExactReal::from_int(1)),
                &(&w_hi + &ExactReal::from_int(1)),
            );
            a_window.subtract(&b_window).scale(&s_factor)
        };
        Self::from_cellsets(d_new, e_new, false)
    }

    /// Kernel points project to `(frac x, floor x)`; free points to the
    /// start generator `x + min((A-x) ∩ ℤ)` with shift `-min((A-x) ∩ ℤ)`.
    /// A max-based form of the free shift would be ill-defined (the shift
    /// set is unbounded above), so the min-based value is the one used.
    pub fn project(&self, x: &ExactReal) -> RealResult<Projection> {
        self.require_plain()?;
        if !self.member_plain(x) {
            return Err(RealError::NotInSet);
        }
        let fx = x.frac();
        if self.d.contains(&fx) {
            return Ok(Projection {
                part: PartTag::Kernel,
                generator: fx,
                shift: x.floor_int(),
            });
        }
        // min over E cells of the integer offset placing x inside the cell
        let mut best: Option<BigInt> = None;
        for s in self.e.spans() {
            let lo = &s.lo - x;
            let hi = &s.hi - x;
            let t0 = lo.ceil_excl(s.lo_closed);
            let t1 = hi.floor_excl(s.hi_closed);
            if t0 <= t1 {
                best = Some(match best {
                    Some(b) => b.min(t0),
                    None => t0,
                });
            }
        }
        let m = best.expect("free member reaches a start cell");
        debug_assert!(m <= BigInt::zero());
        Ok(Projection {
            part: PartTag::Free,
            generator: x + &ExactReal::from_bigint(m.clone()),
            shift: -m,
        })
    }
}

/// Def.-style additive-couple test on explicit point cells.
pub fn is_additive_couple(d: Vec<Cell>, e: Vec<Cell>) -> RealResult<bool> {
    let set = UnitPeriodicRealSet::new(d, e)?;
    set.is_semigroup()
}

/// `H = (H1 + H2) ∪ H2` for a first-class semigroup `H1` and second-class
/// semigroup `H2`; a third-class semigroup when `H1 ∩ (H2 - H2) = ∅`, and a
/// `Clash` otherwise. Point cells only.
pub fn construct_mixed(
    h1: &UnitPeriodicRealSet,
    h2: &UnitPeriodicRealSet,
) -> RealResult<UnitPeriodicRealSet> {
    if h1.classify()? != RealClass::FirstClass || !h1.is_semigroup()? {
        return Err(RealError::Invalid(
            "H1 must be a first class semigroup (D additive, E empty)".into(),
        ));
    }
    if h2.classify()? != RealClass::SecondClass {
        return Err(RealError::Invalid(
            "H2 must be second class (D empty)".into(),
        ));
    }
    let d1 = UnitPeriodicRealSet::point_cells(h1.d(), "D")?;
    let e2 = UnitPeriodicRealSet::point_cells(h2.e(), "E")?;
    // H1 ∩ (H2 - H2) = ∅ fails exactly when some frac(e - e') lies in D1
    for a in &e2 {
        for b in &e2 {
            if h1.d().contains(&(a - b).frac()) {
                return Err(RealError::Clash);
            }
        }
    }
    if !h2.is_semigroup()? {
        return Err(RealError::Invalid(
            "H2 must be a second class semigroup".into(),
        ));
    }
    let mut d_new = Vec::new();
    for a in &d1 {
        for b in &e2 {
            d_new.push(Cell::point((a + b).frac()));
        }
    }
    UnitPeriodicRealSet::from_cellsets(
        CellSet::from_cells(&d_new),
        h2.e().clone(),
        false,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn num(s: &str) -> ExactReal {
        ExactReal::from_rational(rat(s))
    }

    fn pts(vals: &[&str]) -> Vec<Cell> {
        vals.iter().map(|v| Cell::point(num(v))).collect()
    }

    /// `[5, 6)` style half-open interval cell.
    fn half_open(lo: &str, hi: &str) -> Cell {
        Cell::interval(num(lo), num(hi), true, false)
    }

    #[test]
    fn constructor_validation() {
        // D must live in [0,1)
        assert!(UnitPeriodicRealSet::new(pts(&["3/2"]), vec![]).is_err());
        // E cells a nonzero integer apart are rejected
        assert!(UnitPeriodicRealSet::new(vec![], pts(&["1/2", "5/2"])).is_err());
        // frac(E) must avoid D
        assert!(UnitPeriodicRealSet::new(pts(&["0"]), pts(&["0"])).is_err());
        // a closed unit interval self-transfers
        assert!(UnitPeriodicRealSet::new(
            vec![],
            vec![Cell::interval(num("5"), num("6"), true, true)]
        )
        .is_err());
        // the half-open one is fine
        assert!(UnitPeriodicRealSet::new(vec![], vec![half_open("5", "6")]).is_ok());
    }

    #[test]
    fn membership_basics() {
        let z = UnitPeriodicRealSet::integers();
        assert!(z.membership(&num("-7")));
        assert!(!z.membership(&num("1/2")));
        let znn = UnitPeriodicRealSet::nonneg_integers();
        assert!(!znn.membership(&num("-1")));
        assert!(znn.membership(&num("3")));
        let ray = UnitPeriodicRealSet::new(vec![], vec![half_open("5", "6")]).unwrap();
        assert!(ray.membership(&num("5")));
        assert!(ray.membership(&num("117/2")));
        assert!(!ray.membership(&num("9/2")));
        assert!(ray.membership(&(num("5") + ExactReal::sqrt_of(2))));
    }

    #[test]
    fn kernel_start_split() {
        let half = pts(&["0", "1/2"]);
        let a = UnitPeriodicRealSet::new(half.clone(), vec![]).unwrap();
        assert_eq!(a.pk().unwrap(), a);
        assert!(a.st().unwrap().is_empty());

        let a = UnitPeriodicRealSet::new(vec![], half).unwrap();
        assert!(a.pk().unwrap().is_empty_set());
        assert_eq!(a.st().unwrap(), *a.e());

        let mixed = UnitPeriodicRealSet::new(
            pts(&["0"]),
            vec![Cell::point(ExactReal::sqrt_of(2))],
        )
        .unwrap();
        assert_eq!(mixed.pk().unwrap(), UnitPeriodicRealSet::integers());
        assert_eq!(
            mixed.st().unwrap().cells(),
            vec![Cell::point(ExactReal::sqrt_of(2))]
        );
    }

    #[test]
    fn delta_and_coc() {
        // (5, ∞): E = (5, 6]
        let open_ray = UnitPeriodicRealSet::new(
            vec![],
            vec![Cell::interval(num("5"), num("6"), false, true)],
        )
        .unwrap();
        assert_eq!(
            open_ray.delta().unwrap(),
            SupValue::Finite {
                value: num("6"),
                attained: true
            }
        );
        assert_eq!(open_ray.coc().unwrap(), RayInterval::OpenRay(num("5")));

        // [5, ∞): E = [5, 6)
        let closed_ray = UnitPeriodicRealSet::new(vec![], vec![half_open("5", "6")]).unwrap();
        assert_eq!(
            closed_ray.delta().unwrap(),
            SupValue::Finite {
                value: num("6"),
                attained: false
            }
        );
        assert_eq!(closed_ray.coc().unwrap(), RayInterval::ClosedRay(num("5")));

        let z = UnitPeriodicRealSet::integers();
        assert_eq!(z.delta().unwrap(), SupValue::ZeroConvention);
        assert_eq!(z.coc().unwrap(), RayInterval::AllReals);
    }

    #[test]
    fn summand_and_sigma() {
        let znn = UnitPeriodicRealSet::nonneg_integers();
        let s = znn.summand_zplus().unwrap();
        assert!(s.membership(&num("-1")));
        assert!(!s.membership(&num("-2")));
        assert_eq!(
            znn.sigma().unwrap(),
            SupValue::Finite {
                value: num("-1"),
                attained: true
            }
        );
        assert_eq!(
            UnitPeriodicRealSet::integers().sigma().unwrap(),
            SupValue::ZeroConvention
        );
        let ray = UnitPeriodicRealSet::new(vec![], vec![half_open("5", "6")]).unwrap();
        let s = ray.summand_zplus().unwrap();
        assert!(s.membership(&num("4")));
        assert!(!s.membership(&num("7/2")));
        assert_eq!(
            ray.sigma().unwrap(),
            SupValue::Finite {
                value: num("5"),
                attained: false
            }
        );
    }

    #[test]
    fn semigroup_checks() {
        // (1/2)ℤ
        let half_z = UnitPeriodicRealSet::new(pts(&["0", "1/2"]), vec![]).unwrap();
        assert!(half_z.is_semigroup().unwrap());
        assert!(half_z.is_subgroup().unwrap());
        // (1/2)ℤ≥0
        let half_znn = UnitPeriodicRealSet::new(vec![], pts(&["0", "1/2"])).unwrap();
        assert!(half_znn.is_semigroup().unwrap());
        assert!(!half_znn.is_subgroup().unwrap());
        // ℤ ∪ (ℤ₊⁰ + √2) is not closed
        let mixed = UnitPeriodicRealSet::new(
            pts(&["0"]),
            vec![Cell::point(ExactReal::sqrt_of(2))],
        )
        .unwrap();
        assert!(!mixed.is_semigroup().unwrap());
        assert!(!mixed.semigroup_closure_oracle().unwrap());
        // interval cells are rejected
        let ray = UnitPeriodicRealSet::new(vec![], vec![half_open("5", "6")]).unwrap();
        assert!(matches!(ray.is_semigroup(), Err(RealError::Unsupported(_))));
        // empty set is not a semigroup
        let empty = UnitPeriodicRealSet::new(vec![], vec![]).unwrap();
        assert!(!empty.is_semigroup().unwrap());
    }

    #[test]
    fn known_sign_gap_is_a_recorded_discrepancy() {
        // E = {-5, -9/2}: the literal integer-shift reading accepts the sum
        // -10 = -5 + (-5) via the shift -5, but -10 is not a member; the
        // closure oracle records the gap.
        let a = UnitPeriodicRealSet::new(vec![], pts(&["-5", "-9/2"])).unwrap();
        assert!(a.is_semigroup().unwrap());
        assert!(!a.semigroup_closure_oracle().unwrap());
        assert!(!a.membership(&num("-10")));
    }

    #[test]
    fn additive_couples() {
        assert!(is_additive_couple(pts(&["0", "1/2"]), vec![]).unwrap());
        assert!(is_additive_couple(vec![], pts(&["0", "1/2"])).unwrap());
        assert!(!is_additive_couple(
            pts(&["0"]),
            vec![Cell::point(ExactReal::sqrt_of(2))]
        )
        .unwrap());
        // empty couple is not admitted
        assert!(!is_additive_couple(vec![], vec![]).unwrap());
    }

    #[test]
    fn subgroups() {
        let thirds = UnitPeriodicRealSet::new(pts(&["0", "1/3", "2/3"]), vec![]).unwrap();
        assert!(thirds.is_subgroup().unwrap());
        assert!(thirds.is_semigroup().unwrap());
        let shifted = UnitPeriodicRealSet::new(pts(&["1/3"]), vec![]).unwrap();
        assert!(!shifted.is_subgroup().unwrap());
    }

    #[test]
    fn classification() {
        assert_eq!(
            UnitPeriodicRealSet::new(pts(&["0", "1/2"]), vec![])
                .unwrap()
                .classify()
                .unwrap(),
            RealClass::FirstClass
        );
        assert_eq!(
            UnitPeriodicRealSet::new(vec![], pts(&["0", "1/2"]))
                .unwrap()
                .classify()
                .unwrap(),
            RealClass::SecondClass
        );
        let third = UnitPeriodicRealSet::new(
            pts(&["0"]),
            vec![Cell::point(ExactReal::sqrt_of(2))],
        )
        .unwrap();
        assert_eq!(third.classify().unwrap(), RealClass::ThirdClass);
        assert_eq!(
            UnitPeriodicRealSet::new(vec![], vec![]).unwrap().classify(),
            Err(RealError::EmptySet)
        );
    }

    #[test]
    fn mixed_construction_clashes() {
        let h1 = UnitPeriodicRealSet::integers();
        let h2 = UnitPeriodicRealSet::nonneg_integers();
        assert_eq!(construct_mixed(&h1, &h2), Err(RealError::Clash));
        // H1 with a non-additive D is rejected up front
        let bad = UnitPeriodicRealSet::new(
            vec![Cell::point(ExactReal::sqrt_of(2).frac())],
            vec![],
        )
        .unwrap();
        assert!(matches!(
            construct_mixed(&bad, &h2),
            Err(RealError::Invalid(_))
        ));
        // H2 - H2 spills into ℤ ⊆ H1 even for an irrational start
        let h2 = UnitPeriodicRealSet::new(vec![], vec![Cell::point(ExactReal::sqrt_of(2))])
            .unwrap();
        assert_eq!(construct_mixed(&h1, &h2), Err(RealError::Clash));
    }

    #[test]
    fn rescaling() {
        // (1/2)·ℤ... rescale(ℤ, 2) = (1/2)ℤ
        let z = UnitPeriodicRealSet::integers();
        let half_z = z.rescale(&rat("2")).unwrap();
        assert_eq!(
            half_z,
            UnitPeriodicRealSet::new(pts(&["0", "1/2"]), vec![]).unwrap()
        );
        // identity modulus
        assert_eq!(z.rescale(&rat("1")).unwrap(), z);
        // negative modulus mirrors
        let znn = UnitPeriodicRealSet::nonneg_integers();
        let mirrored = znn.rescale(&rat("-1")).unwrap();
        assert!(mirrored.is_mirrored());
        assert!(mirrored.membership(&num("-3")));
        assert!(!mirrored.membership(&num("2")));
        // round trip back
        let back = mirrored.rescale(&rat("-1")).unwrap();
        assert_eq!(back, znn);
        // fractional modulus on (1/2)ℤ: 3/2 + (1/2)ℤ ⊆ (1/2)ℤ
        let a = UnitPeriodicRealSet::new(pts(&["0", "1/2"]), vec![]).unwrap();
        let scaled = a.rescale(&rat("3/2")).unwrap();
        assert_eq!(
            scaled,
            UnitPeriodicRealSet::new(pts(&["0", "1/3", "2/3"]), vec![]).unwrap()
        );
        // ℤ is not upper (1/2)-periodic
        assert!(matches!(
            z.rescale(&rat("1/2")),
            Err(RealError::NotRescalable(_))
        ));
    }

    #[test]
    fn rescale_free_part() {
        // [5,∞) scaled by 2: (1/2)[5,∞) = [5/2,∞) = ℤ₊⁰ ∔ [5/2,7/2)
        let ray = UnitPeriodicRealSet::new(vec![], vec![half_open("5", "6")]).unwrap();
        let s = ray.rescale(&rat("2")).unwrap();
        assert!(s.membership(&num("5/2")));
        assert!(!s.membership(&num("2")));
        assert!(s.membership(&num("100")));
        assert_eq!(s.classify().unwrap(), RealClass::SecondClass);
        // round trip
        let back = s.rescale(&rat("1/2")).unwrap();
        assert_eq!(back, ray);
    }

    #[test]
    fn projections() {
        // (1/2)ℤ≥0
        let a = UnitPeriodicRealSet::new(vec![], pts(&["0", "1/2"])).unwrap();
        let p = a.project(&num("5/2")).unwrap();
        assert_eq!(p.part, PartTag::Free);
        assert_eq!(p.generator, num("1/2"));
        assert_eq!(p.shift, BigInt::from(2));

        let z = UnitPeriodicRealSet::integers();
        let p = z.project(&num("-3")).unwrap();
        assert_eq!(p.part, PartTag::Kernel);
        assert_eq!(p.generator, num("0"));
        assert_eq!(p.shift, BigInt::from(-3));

        let ray = UnitPeriodicRealSet::new(vec![], vec![half_open("5", "6")]).unwrap();
        let p = ray.project(&num("13/2")).unwrap();
        assert_eq!(p.part, PartTag::Free);
        assert_eq!(p.generator, num("11/2"));
        assert_eq!(p.shift, BigInt::from(1));

        assert_eq!(ray.project(&num("0")), Err(RealError::NotInSet));
        // projection shifts with the point
        let p1 = ray.project(&num("13/2")).unwrap();
        let p2 = ray.project(&num("15/2")).unwrap();
        assert_eq!(p1.generator, p2.generator);
        assert_eq!(&p1.shift + BigInt::from(1), p2.shift);
    }
}
