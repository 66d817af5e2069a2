//! Batteries for the real-line module: set-builder formulas replayed
//! against the closed forms, concentration numbers, the semigroup
//! criterion's dual check, and rescaling conjugation.

use super::{Battery, Scope, VerifyEntry};
use crate::realline::{
    parse_rational, Cell, ExactReal, RayInterval, RealClass, SupValue, UnitPeriodicRealSet,
};
use num::bigint::BigInt;
use num::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng_for(scope: &Scope, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(scope.seed ^ salt)
}

fn rat(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

fn num(s: &str) -> ExactReal {
    ExactReal::from_rational(rat(s))
}

fn random_rational(rng: &mut ChaCha8Rng, span: i64) -> BigRational {
    let denom = rng.gen_range(1..=6i64);
    let numer = rng.gen_range(-span * denom..=span * denom);
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

fn random_exact(rng: &mut ChaCha8Rng, span: i64, allow_surd: bool) -> ExactReal {
    let mut v = ExactReal::from_rational(random_rational(rng, span));
    if allow_surd && rng.gen_bool(0.4) {
        let m = if rng.gen_bool(0.5) { 2 } else { 3 };
        let c = BigRational::new(BigInt::from(rng.gen_range(-2..=2i64)), BigInt::from(4));
        v = v + ExactReal::sqrt_term(m, c);
    }
    v
}

/// A random canonical set; intervals appear when `intervals` is set.
/// Candidate cells that would break canonicity are simply dropped.
fn random_canonical(
    rng: &mut ChaCha8Rng,
    intervals: bool,
) -> UnitPeriodicRealSet {
    loop {
        let mut d_cells: Vec<Cell> = Vec::new();
        for _ in 0..rng.gen_range(0..=2) {
            let v = random_exact(rng, 2, true).frac();
            if intervals && rng.gen_bool(0.4) {
                let len = BigRational::new(
                    BigInt::from(rng.gen_range(1..=3i64)),
                    BigInt::from(rng.gen_range(8..=12i64)),
                );
                let hi = &v + &ExactReal::from_rational(len);
                if hi < ExactReal::from_int(1) {
                    d_cells.push(Cell::interval(v, hi, true, false));
                    continue;
                }
            }
            d_cells.push(Cell::point(v));
        }
        let mut e_cells: Vec<Cell> = Vec::new();
        for _ in 0..rng.gen_range(0..=3) {
            let v = random_exact(rng, 3, true);
            if intervals && rng.gen_bool(0.4) {
                let len = BigRational::new(
                    BigInt::from(rng.gen_range(1..=3i64)),
                    BigInt::from(rng.gen_range(8..=12i64)),
                );
                let hi = &v + &ExactReal::from_rational(len);
                e_cells.push(Cell::interval(v, hi, rng.gen_bool(0.7), rng.gen_bool(0.3)));
            } else {
                e_cells.push(Cell::point(v));
            }
        }
        // drop E cells that clash with earlier ones or with D
        let d_set = crate::realline::CellSet::from_cells(&d_cells);
        let mut kept: Vec<Cell> = Vec::new();
        'outer: for c in e_cells {
            let span = crate::realline::Span::from(&c);
            let kept_set = crate::realline::CellSet::from_cells(&kept);
            for other in kept_set.spans() {
                if span.minkowski_diff(other).contains_nonzero_integer()
                    || other.minkowski_diff(&span).contains_nonzero_integer()
                {
                    continue 'outer;
                }
            }
            if span.minkowski_diff(&span).contains_nonzero_integer() {
                continue;
            }
            let frac_bits = crate::realline::CellSet::from_spans(
                span.split_unit().into_iter().map(|(_, p)| p).collect(),
            );
            if !frac_bits.intersect(&d_set).is_empty() {
                continue;
            }
            kept.push(c);
        }
        if let Ok(set) = UnitPeriodicRealSet::new(d_cells, kept) {
            if !set.is_empty_set() {
                return set;
            }
        }
    }
}

/// Sampling grid: cell endpoints and midpoints shifted through `[-10, 10]`.
fn grid(a: &UnitPeriodicRealSet) -> Vec<ExactReal> {
    let mut anchors: Vec<ExactReal> = vec![ExactReal::zero()];
    for s in a.d().spans().iter().chain(a.e().spans()) {
        anchors.push(s.lo.clone());
        anchors.push(s.hi.clone());
        anchors.push((&s.lo + &s.hi).scale(&rat("1/2")));
    }
    let mut out = Vec::new();
    for c in anchors {
        for k in -10i64..=10 {
            out.push(&c + &ExactReal::from_int(k));
        }
    }
    out
}

/// Window wide enough that membership of every shift below it is decided by
/// the kernel alone.
fn window_for(a: &UnitPeriodicRealSet, x: &ExactReal) -> i64 {
    match a.e().min_lower() {
        None => 2,
        Some(lo) => {
            let dist = (x - lo).floor_int() + BigInt::from(2);
            let d: i64 = dist.try_into().unwrap_or(2);
            d.max(10)
        }
    }
}

fn pk_oracle(a: &UnitPeriodicRealSet, x: &ExactReal) -> bool {
    let w = window_for(a, x);
    (-w..=w).all(|k| a.membership(&(x + &ExactReal::from_int(k))))
}

fn st_oracle(a: &UnitPeriodicRealSet, x: &ExactReal) -> bool {
    if !a.membership(x) {
        return false;
    }
    let w = window_for(a, x);
    (1..=w).all(|k| !a.membership(&(x - &ExactReal::from_int(k))))
}

pub(super) fn formula_validation(scope: &Scope) -> Vec<VerifyEntry> {
    let mut rng = rng_for(scope, 0x42);
    let mut bat = Battery::new("Lemma-4.2", "randomized canonical sets");
    let mut sets: Vec<UnitPeriodicRealSet> = vec![
        UnitPeriodicRealSet::integers(),
        UnitPeriodicRealSet::nonneg_integers(),
        UnitPeriodicRealSet::new(vec![], vec![Cell::interval(num("5"), num("6"), true, false)])
            .unwrap(),
    ];
    for _ in 0..110 {
        sets.push(random_canonical(&mut rng, true));
    }
    for a in &sets {
        let pk = a.pk().unwrap();
        let pf = a.pf().unwrap();
        let st = a.st().unwrap();
        for x in grid(a) {
            let member = a.membership(&x);
            let pk_closed = pk.membership(&x);
            let pk_builder = pk_oracle(a, &x);
            bat.case(pk_closed == pk_builder, || {
                format!("Pk at {x}: closed {pk_closed}, set-builder {pk_builder}")
            });
            let pf_closed = pf.membership(&x);
            let pf_builder = member && !pk_builder;
            bat.case(pf_closed == pf_builder, || {
                format!("Pf at {x}: closed {pf_closed}, set-builder {pf_builder}")
            });
            let st_closed = st.contains(&x);
            let st_builder = st_oracle(a, &x);
            bat.case(st_closed == st_builder, || {
                format!("St at {x}: closed {st_closed}, set-builder {st_builder}")
            });
        }
    }
    vec![bat.entry()]
}

fn members_sample(a: &UnitPeriodicRealSet) -> Vec<ExactReal> {
    grid(a).into_iter().filter(|x| a.membership(x)).collect()
}

fn concentrates(a: &UnitPeriodicRealSet, delta: &ExactReal, samples: &[ExactReal]) -> bool {
    samples.iter().all(|x| {
        let k = (x - delta).floor_int();
        a.membership(&(x - &ExactReal::from_bigint(k)))
    })
}

pub(super) fn concentration(scope: &Scope) -> Vec<VerifyEntry> {
    let mut rng = rng_for(scope, 0x44);
    let mut bat = Battery::new("Thm-4.4", "randomized + rays");
    let mut sets: Vec<UnitPeriodicRealSet> = vec![
        UnitPeriodicRealSet::integers(),
        UnitPeriodicRealSet::new(vec![], vec![Cell::interval(num("5"), num("6"), false, true)])
            .unwrap(),
        UnitPeriodicRealSet::new(vec![], vec![Cell::interval(num("5"), num("6"), true, false)])
            .unwrap(),
    ];
    for _ in 0..40 {
        sets.push(random_canonical(&mut rng, true));
    }
    for a in &sets {
        let coc = a.coc().unwrap();
        bat.case(coc != RayInterval::Empty, || "empty Coc on finite cells".into());
        let samples = members_sample(a);
        match coc {
            RayInterval::AllReals => {
                for delta in [num("0"), num("-3"), num("7/2")] {
                    bat.case(concentrates(a, &delta, &samples), || {
                        format!("periodic set fails at delta = {delta}")
                    });
                }
            }
            RayInterval::ClosedRay(b) => {
                bat.case(concentrates(a, &b, &samples), || {
                    format!("least concentration number {b} rejected")
                });
                // just below the boundary a witness must fail: the top cell
                // is open at the sup, so a point of E close to it escapes
                let delta = &b - &num("1/4");
                let sup = a.e().max_upper().unwrap().clone();
                let top = a
                    .e()
                    .spans()
                    .iter()
                    .find(|s| s.hi == sup && !s.hi_closed)
                    .expect("unattained sup comes from an open-ended cell");
                let cut = &sup - &num("1/8");
                let lo_cut = if top.lo >= cut {
                    top.lo.clone()
                } else {
                    cut
                };
                let witness = (&lo_cut + &sup).scale(&rat("1/2"));
                bat.case(!concentrates(a, &delta, std::slice::from_ref(&witness)), || {
                    format!("delta {delta} below the boundary accepted (witness {witness})")
                });
            }
            RayInterval::OpenRay(b) => {
                // the boundary itself must fail, with the attained sup as witness
                let sup = a.e().max_upper().unwrap().clone();
                bat.case(!concentrates(a, &b, std::slice::from_ref(&sup)), || {
                    format!("boundary {b} accepted despite attained sup {sup}")
                });
                bat.case(
                    concentrates(a, &(&b + &num("1/2")), &samples),
                    || format!("delta {} rejected", &b + &num("1/2")),
                );
            }
            RayInterval::Empty => {}
        }
    }
    vec![bat.entry()]
}

pub(super) fn example_4_8(_: &Scope) -> Vec<VerifyEntry> {
    let mut bat = Battery::new("Example-4.8", "rays at M = 5");
    let open_ray =
        UnitPeriodicRealSet::new(vec![], vec![Cell::interval(num("5"), num("6"), false, true)])
            .unwrap();
    bat.case(
        open_ray.delta().unwrap()
            == SupValue::Finite {
                value: num("6"),
                attained: true,
            },
        || format!("{:?}", open_ray.delta()),
    );
    bat.case(
        open_ray.coc().unwrap() == RayInterval::OpenRay(num("5")),
        || format!("{:?}", open_ray.coc()),
    );
    let closed_ray =
        UnitPeriodicRealSet::new(vec![], vec![Cell::interval(num("5"), num("6"), true, false)])
            .unwrap();
    bat.case(
        closed_ray.delta().unwrap()
            == SupValue::Finite {
                value: num("6"),
                attained: false,
            },
        || format!("{:?}", closed_ray.delta()),
    );
    bat.case(
        closed_ray.coc().unwrap() == RayInterval::ClosedRay(num("5")),
        || format!("{:?}", closed_ray.coc()),
    );
    // membership sanity on the rays themselves
    bat.case(closed_ray.membership(&num("5")), || "5 not in [5,inf)".into());
    bat.case(!open_ray.membership(&num("5")), || "5 in (5,inf)".into());
    bat.case(open_ray.membership(&num("11/2")), || "11/2 missing".into());
    vec![bat.entry()]
}

/// Point cells with all coordinates in `[0, 1)`, where the integer-shift
/// reading of the start condition cannot go negative, so the criterion and
/// the closure oracle provably agree.
fn random_point_set(rng: &mut ChaCha8Rng) -> UnitPeriodicRealSet {
    loop {
        let mut d: Vec<Cell> = Vec::new();
        let mut e: Vec<Cell> = Vec::new();
        let mut fracs: Vec<ExactReal> = Vec::new();
        for _ in 0..rng.gen_range(0..=2) {
            let v = random_exact(rng, 2, true).frac();
            if !fracs.contains(&v) {
                fracs.push(v.clone());
                d.push(Cell::point(v));
            }
        }
        for _ in 0..rng.gen_range(1..=3) {
            let v = random_exact(rng, 2, true).frac();
            if !fracs.contains(&v) {
                fracs.push(v.clone());
                e.push(Cell::point(v));
            }
        }
        if let Ok(set) = UnitPeriodicRealSet::new(d, e) {
            if !set.is_empty_set() {
                return set;
            }
        }
    }
}

pub(super) fn semigroup_dual_check(scope: &Scope) -> Vec<VerifyEntry> {
    let mut rng = rng_for(scope, 0x410);
    let mut bat = Battery::new("Thm-4.10", "point-cell sets");
    // the known fixtures
    let half_z = UnitPeriodicRealSet::new(
        vec![Cell::point(num("0")), Cell::point(num("1/2"))],
        vec![],
    )
    .unwrap();
    bat.case(
        half_z.is_semigroup().unwrap() && half_z.is_subgroup().unwrap(),
        || "(1/2)Z misclassified".into(),
    );
    let half_znn = UnitPeriodicRealSet::new(
        vec![],
        vec![Cell::point(num("0")), Cell::point(num("1/2"))],
    )
    .unwrap();
    bat.case(
        half_znn.is_semigroup().unwrap() && !half_znn.is_subgroup().unwrap(),
        || "(1/2)Z>=0 misclassified".into(),
    );
    let mixed =
        UnitPeriodicRealSet::new(vec![Cell::point(num("0"))], vec![Cell::point(ExactReal::sqrt_of(2))])
            .unwrap();
    bat.case(!mixed.is_semigroup().unwrap(), || {
        "Z ∪ (Z>=0 + sqrt 2) accepted".into()
    });
    // randomized agreement
    for _ in 0..55 {
        let a = random_point_set(&mut rng);
        let criterion = a.is_semigroup().unwrap();
        let oracle = a.semigroup_closure_oracle().unwrap();
        bat.case(criterion == oracle, || {
            format!("criterion {criterion} vs oracle {oracle} on {a:?}")
        });
    }
    // the recorded sign-gap discrepancy on starts below zero: the literal
    // integer-shift reading accepts E = {-5, -9/2} though -10 escapes
    let gap = UnitPeriodicRealSet::new(
        vec![],
        vec![Cell::point(num("-5")), Cell::point(num("-9/2"))],
    )
    .unwrap();
    bat.case(
        gap.is_semigroup().unwrap() && !gap.semigroup_closure_oracle().unwrap(),
        || "expected sign-gap discrepancy vanished".into(),
    );
    vec![bat.entry()]
}

pub(super) fn third_class_impossibility(_: &Scope) -> Vec<VerifyEntry> {
    let mut bat = Battery::new("Thm-4.20b", "bounded point grids");
    let d_grid = ["0", "1/2", "1/3", "2/3", "1/4", "3/4"];
    let e_grid: Vec<ExactReal> = vec![
        num("0"),
        num("1/2"),
        num("1/4"),
        num("3/4"),
        ExactReal::sqrt_of(2).frac(),
        (ExactReal::sqrt_of(2) + num("1/2")).frac(),
    ];
    for d_mask in 1u32..(1 << d_grid.len()) {
        for e_mask in 1u32..(1 << e_grid.len()) {
            let d: Vec<Cell> = d_grid
                .iter()
                .enumerate()
                .filter(|(i, _)| d_mask >> i & 1 == 1)
                .map(|(_, v)| Cell::point(num(v)))
                .collect();
            let e: Vec<Cell> = e_grid
                .iter()
                .enumerate()
                .filter(|(i, _)| e_mask >> i & 1 == 1)
                .map(|(_, v)| Cell::point(v.clone()))
                .collect();
            let Ok(set) = UnitPeriodicRealSet::new(d, e) else {
                continue; // non-canonical combination (frac clash)
            };
            let third = set.classify() == Ok(RealClass::ThirdClass);
            let semigroup = set.is_semigroup().unwrap();
            bat.case(!(third && semigroup), || {
                format!("third class semigroup found: {set:?}")
            });
        }
    }
    vec![bat.entry()]
}

pub(super) fn projection_periodicity(scope: &Scope) -> Vec<VerifyEntry> {
    let mut rng = rng_for(scope, 0x333);
    let mut bat = Battery::new("Sec-3.3-projections", "randomized sets");
    for _ in 0..40 {
        let a = random_canonical(&mut rng, true);
        for x in members_sample(&a).into_iter().take(20) {
            let p1 = a.project(&x).unwrap();
            let x_next = &x + &ExactReal::from_int(1);
            if !a.membership(&x_next) {
                continue; // only kernel and interior free points persist
            }
            let p2 = a.project(&x_next).unwrap();
            bat.case(
                p1.generator == p2.generator
                    && p1.part == p2.part
                    && &p1.shift + BigInt::from(1) == p2.shift,
                || format!("P({x}) = {p1:?} but P({x_next}) = {p2:?}"),
            );
        }
    }
    vec![bat.entry()]
}

pub(super) fn rescale_conjugation(scope: &Scope) -> Vec<VerifyEntry> {
    let mut rng = rng_for(scope, 0x5ca1e);
    let mut bat = Battery::new("Example-2.15-rescale", "randomized sets");
    for _ in 0..25 {
        let a = random_canonical(&mut rng, true);
        for b in [rat("2"), rat("3"), rat("-1"), rat("-2")] {
            let scaled = match a.rescale(&b) {
                Ok(s) => s,
                Err(e) => {
                    bat.case(false, || format!("integer modulus {b} refused: {e}"));
                    continue;
                }
            };
            // membership conjugation on grid points of the source, carried
            // through the scaling, plus a few random probes
            let mut probes: Vec<ExactReal> = grid(&a)
                .into_iter()
                .take(30)
                .map(|y| y.scale(&b.recip()))
                .collect();
            for _ in 0..10 {
                probes.push(random_exact(&mut rng, 4, true));
            }
            for x in probes {
                let lhs = scaled.membership(&x);
                let rhs = a.membership(&x.scale(&b));
                bat.case(lhs == rhs, || {
                    format!("b={b}: membership disagrees at {x}")
                });
            }
            // round trip
            let back = scaled.rescale(&b.recip());
            bat.case(back.as_ref() == Ok(&a), || {
                format!("round trip through {b} lost the set: {back:?}")
            });
        }
    }
    vec![bat.entry()]
}
