//! The core operators on subsets: periodicity predicates, kernels, starts,
//! summand sets, the periodic/periodic-free decomposition, and the
//! well-started test.
//!
//! Conventions for `B = ∅`: `∅A = ∅`, so every `A` is upper ∅-periodic and
//! only `∅` is ∅-periodic.

use crate::error::{Error, Result};
use crate::magma::FiniteMagma;
use crate::subset::Subset;

pub fn is_left_upper_periodic(x: &FiniteMagma, a: &Subset, b: &Subset) -> bool {
    x.product(b, a).is_subset_of(a)
}

pub fn is_left_lower_periodic(x: &FiniteMagma, a: &Subset, b: &Subset) -> bool {
    a.is_subset_of(&x.product(b, a))
}

pub fn is_left_periodic(x: &FiniteMagma, a: &Subset, b: &Subset) -> bool {
    x.product(b, a) == *a
}

/// The largest `Y ⊆ A` with `BY = Y`: the greatest fixed point of
/// `T(Y) = {y in Y : By ⊆ Y and y in BY}`, iterated down from `A`.
/// Terminates in at most `n` rounds since each round removes an element.
pub fn periodic_kernel(x: &FiniteMagma, a: &Subset, b: &Subset) -> Subset {
    let mut cur = a.clone();
    loop {
        let generated = x.product(b, &cur);
        let mut next = Subset::empty(a.parent_size());
        for y in cur.iter() {
            if generated.contains(y) && x.set_times_elem(b, y).is_subset_of(&cur) {
                next.insert(y);
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Iteration count of the kernel fixpoint, reported by the CLI.
pub fn periodic_kernel_with_iterations(
    x: &FiniteMagma,
    a: &Subset,
    b: &Subset,
) -> (Subset, usize) {
    let mut cur = a.clone();
    let mut rounds = 0;
    loop {
        let generated = x.product(b, &cur);
        let mut next = Subset::empty(a.parent_size());
        for y in cur.iter() {
            if generated.contains(y) && x.set_times_elem(b, y).is_subset_of(&cur) {
                next.insert(y);
            }
        }
        rounds += 1;
        if next == cur {
            return (cur, rounds);
        }
        cur = next;
    }
}

/// The largest `Y ⊆ A` with `BY ⊆ Y`: greatest fixed point of
/// `Y -> {y in Y : By ⊆ Y}`.
pub fn upper_periodic_kernel(x: &FiniteMagma, a: &Subset, b: &Subset) -> Subset {
    let mut cur = a.clone();
    loop {
        let mut next = Subset::empty(a.parent_size());
        for y in cur.iter() {
            if x.set_times_elem(b, y).is_subset_of(&cur) {
                next.insert(y);
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// The left B-summand `Σ_{A|B} = {x in X : Bx ⊆ A}`, over all of `X`.
pub fn summand(x: &FiniteMagma, a: &Subset, b: &Subset) -> Subset {
    let mut out = Subset::empty(a.parent_size());
    for e in 0..x.size() {
        if x.set_times_elem(b, e).is_subset_of(a) {
            out.insert(e);
        }
    }
    out
}

/// The closed form `(B A^c)^c`, valid when `B` is a left subgroup; under
/// that hypothesis it coincides with the kernel, the upper kernel and the
/// summand (the equality chain is itself a verification suite).
pub fn summand_closed_form(x: &FiniteMagma, a: &Subset, b: &Subset) -> Result<Subset> {
    if !x.is_left_subgroup(b)? {
        return Err(Error::NotLeftSubgroup);
    }
    Ok(x.product(b, &a.complement()).complement())
}

/// The left B-start `St_B(A) = A \ BA`.
pub fn start(x: &FiniteMagma, a: &Subset, b: &Subset) -> Subset {
    a.minus(&x.product(b, a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum PeriodicTag {
    Periodic,
    PeriodicFree,
    Mixed,
}

/// A subset split into its periodic kernel and periodic-free rest.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicClass {
    pub tag: PeriodicTag,
    pub kernel: Subset,
    pub free_part: Subset,
}

/// Splits `A = kernel ∪̇ free` and classifies. The kernel of the free part
/// is empty by construction; that identity is re-checked here.
pub fn classify(x: &FiniteMagma, a: &Subset, b: &Subset) -> PeriodicClass {
    let kernel = periodic_kernel(x, a, b);
    let free_part = a.minus(&kernel);
    debug_assert!(periodic_kernel(x, &free_part, b).is_empty());
    let tag = if kernel == *a {
        // note: empty A counts as periodic (∅ is B-periodic for every B)
        PeriodicTag::Periodic
    } else if kernel.is_empty() {
        PeriodicTag::PeriodicFree
    } else {
        PeriodicTag::Mixed
    };
    PeriodicClass { tag, kernel, free_part }
}

/// The well-started condition evaluated against the three kernel-like sets.
/// The definition uses the periodic kernel; the upper-kernel and summand
/// variants are reported alongside because their equivalence is open in
/// general (they all agree when `BB` is a left subgroup).
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct WellStartedReport {
    pub via_kernel: bool,
    pub via_upper_kernel: bool,
    pub via_summand: bool,
    /// The `BA ∩ BB·A^c ⊆ B(A\BA)` form, reported when `BB` is a left
    /// subgroup (then equal to `via_kernel` through the closed form).
    pub eq_2_4: Option<bool>,
}

/// `A` is well left `(BB, B)`-started iff `BA \ Pk_BB(A) ⊆ B·St_B(A)`.
/// Requires `BA ⊆ A`.
pub fn well_started_report(
    x: &FiniteMagma,
    a: &Subset,
    bb: &Subset,
    b: &Subset,
) -> Result<WellStartedReport> {
    let ba = x.product(b, a);
    if !ba.is_subset_of(a) {
        return Err(Error::NotUpperPeriodic);
    }
    let b_start = x.product(b, &start(x, a, b));
    let via = |c: &Subset| ba.minus(c).is_subset_of(&b_start);
    let via_kernel = via(&periodic_kernel(x, a, bb));
    let via_upper_kernel = via(&upper_periodic_kernel(x, a, bb));
    let via_summand = via(&summand(x, a, bb));
    let eq_2_4 = if x.is_left_subgroup(bb)? {
        let lhs = ba.intersect(&x.product(bb, &a.complement()));
        Some(lhs.is_subset_of(&b_start))
    } else {
        None
    };
    Ok(WellStartedReport {
        via_kernel,
        via_upper_kernel,
        via_summand,
        eq_2_4,
    })
}

pub fn is_well_started(x: &FiniteMagma, a: &Subset, bb: &Subset, b: &Subset) -> Result<bool> {
    Ok(well_started_report(x, a, bb, b)?.via_kernel)
}

/// The three-part split `A = C ∪̇ (B·F ∪̇ E)` where `C` is the BB-kernel,
/// `F` the BB-free part and `E` the B-start.
///
/// Preconditions (each reported by name on failure): `B·BB ⊆ BB`,
/// `B^{-1} ⊆ BB ∪ B`, `B^{-1} ∩ BB ≠ ∅` — the canonical inverse relative to
/// `l` is used — and `BA ⊆ A`.
pub fn decompose_three_parts(
    x: &FiniteMagma,
    a: &Subset,
    bb: &Subset,
    b: &Subset,
    l: usize,
) -> Result<(Subset, Subset, Subset)> {
    let b_inv = x.canonical_inverse(b, l)?;
    if !x.product(b, bb).is_subset_of(bb) {
        return Err(Error::PreconditionFailed("B*BB is not inside BB".into()));
    }
    if !b_inv.is_subset_of(&bb.union(b)) {
        return Err(Error::PreconditionFailed(
            "B^{-1} is not inside BB ∪ B".into(),
        ));
    }
    if b_inv.is_disjoint(bb) {
        return Err(Error::PreconditionFailed("B^{-1} ∩ BB is empty".into()));
    }
    if !is_left_upper_periodic(x, a, b) {
        return Err(Error::NotUpperPeriodic);
    }
    let c = periodic_kernel(x, a, bb);
    let f = a.minus(&c);
    let bf = x.product(b, &f);
    let e = start(x, a, b);
    Ok((c, bf, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::builders::*;

    fn set(n: usize, idx: &[usize]) -> Subset {
        Subset::from_indices(n, idx)
    }

    #[test]
    fn periodicity_predicates() {
        let z6 = cyclic(6);
        assert!(is_left_upper_periodic(&z6, &Subset::full(6), &set(6, &[1])));
        assert!(!is_left_upper_periodic(&z6, &set(6, &[1, 2]), &set(6, &[1])));
        let empty = Subset::empty(6);
        assert!(is_left_upper_periodic(&z6, &empty, &set(6, &[1])));
        assert!(is_left_lower_periodic(&z6, &empty, &set(6, &[1])));
        assert!(is_left_periodic(&z6, &empty, &set(6, &[1])));
    }

    #[test]
    fn kernels() {
        let m = m2();
        let u = set(4, &[0, 1]);
        assert!(periodic_kernel(&m, &set(4, &[2]), &u).is_empty());
        assert_eq!(periodic_kernel(&m, &set(4, &[2, 3]), &u), set(4, &[2, 3]));
        let z6 = cyclic(6);
        assert!(periodic_kernel(&z6, &Subset::full(6), &Subset::empty(6)).is_empty());
    }

    #[test]
    fn upper_kernels() {
        let z6 = cyclic(6);
        assert_eq!(
            upper_periodic_kernel(&z6, &set(6, &[0, 2, 4]), &set(6, &[2])),
            set(6, &[0, 2, 4])
        );
        assert!(upper_periodic_kernel(&z6, &set(6, &[0, 1, 2]), &set(6, &[1])).is_empty());
        let a = set(6, &[1, 3, 5]);
        assert_eq!(upper_periodic_kernel(&z6, &a, &Subset::empty(6)), a);
    }

    #[test]
    fn summands() {
        let m = m2();
        let u = set(4, &[0, 1]);
        assert_eq!(summand(&m, &set(4, &[2, 3]), &u), set(4, &[2, 3]));
        assert!(summand(&m, &set(4, &[2]), &u).is_empty());
        assert_eq!(summand(&m, &Subset::full(4), &u), Subset::full(4));
    }

    #[test]
    fn closed_form_matches() {
        let m = m2();
        let u = set(4, &[0, 1]);
        for a_bits in 0u64..16 {
            let a = Subset::from_word(4, a_bits);
            let cf = summand_closed_form(&m, &a, &u).unwrap();
            assert_eq!(cf, summand(&m, &a, &u));
            assert_eq!(cf, upper_periodic_kernel(&m, &a, &u));
            assert_eq!(cf, periodic_kernel(&m, &a, &u));
        }
        let z6 = cyclic(6);
        assert_eq!(
            summand_closed_form(&z6, &Subset::full(6), &set(6, &[0, 3])).unwrap(),
            Subset::full(6)
        );
        assert_eq!(
            summand_closed_form(&z6, &Subset::full(6), &set(6, &[1])),
            Err(Error::NotLeftSubgroup)
        );
    }

    #[test]
    fn starts() {
        let m = m2();
        assert!(start(&m, &set(4, &[2, 3]), &set(4, &[0, 1])).is_empty());
        // s.c1 = c2, so {s}*{c1} = {c2} and the start is {c1}
        assert_eq!(start(&m, &set(4, &[2]), &set(4, &[1])), set(4, &[2]));
        assert!(start(&m, &Subset::empty(4), &set(4, &[1])).is_empty());
    }

    #[test]
    fn classification() {
        let z6 = cyclic(6);
        assert_eq!(
            classify(&z6, &Subset::full(6), &set(6, &[1])).tag,
            PeriodicTag::Periodic
        );
        let m = m2();
        let u = set(4, &[0, 1]);
        assert_eq!(
            classify(&m, &set(4, &[0, 2]), &u).tag,
            PeriodicTag::PeriodicFree
        );
        let mixed = classify(&m, &set(4, &[0, 2, 3]), &u);
        assert_eq!(mixed.tag, PeriodicTag::Mixed);
        assert_eq!(mixed.kernel, set(4, &[2, 3]));
        assert_eq!(mixed.free_part, set(4, &[0]));
    }

    #[test]
    fn well_started() {
        let m = m2();
        let u = set(4, &[0, 1]);
        assert!(is_well_started(&m, &set(4, &[2, 3]), &u, &u).unwrap());
        let z6 = cyclic(6);
        assert!(is_well_started(&z6, &Subset::full(6), &Subset::full(6), &set(6, &[1])).unwrap());
        // A = {e,c1} is not upper {s}-periodic: s.e = s not in A
        assert_eq!(
            is_well_started(&m, &set(4, &[0, 2]), &u, &set(4, &[1])),
            Err(Error::NotUpperPeriodic)
        );
        // A = M2 is upper {s}-periodic with BA \ C = empty
        assert!(is_well_started(&m, &Subset::full(4), &u, &set(4, &[1])).unwrap());
    }

    #[test]
    fn three_part_decomposition() {
        let m = m2();
        let u = set(4, &[0, 1]);
        let (c, bf, e) = decompose_three_parts(&m, &set(4, &[2, 3]), &u, &u, 0).unwrap();
        assert_eq!(c, set(4, &[2, 3]));
        assert!(bf.is_empty());
        assert!(e.is_empty());
        let z6 = cyclic(6);
        let b = set(6, &[0, 3]);
        let (c, bf, e) =
            decompose_three_parts(&z6, &Subset::full(6), &Subset::full(6), &b, 0).unwrap();
        assert_eq!(c, Subset::full(6));
        assert!(bf.is_empty());
        assert!(e.is_empty());
        let (c, bf, e) = decompose_three_parts(&m, &Subset::full(4), &u, &u, 0).unwrap();
        assert_eq!(c, Subset::full(4));
        assert!(bf.is_empty());
        assert!(e.is_empty());
    }

    #[test]
    fn three_part_reports_failures() {
        let z6 = cyclic(6);
        // B = {1}: B^{-1} = {5} which misses BB = {0,3} and {1}
        let err = decompose_three_parts(&z6, &Subset::full(6), &set(6, &[0, 3]), &set(6, &[1]), 0)
            .unwrap_err();
        assert!(matches!(err, Error::PreconditionFailed(_)));
    }

    #[test]
    fn decomposition_identity_holds_exhaustively() {
        // whenever the preconditions pass, A = C ∪̇ BF ∪̇ E with the stated
        // side identities, exercised over all of M2
        let m = m2();
        let u = set(4, &[0, 1]);
        for a_bits in 0u64..16 {
            for b_bits in 1u64..16 {
                let a = Subset::from_word(4, a_bits);
                let b = Subset::from_word(4, b_bits);
                if let Ok((c, bf, e)) = decompose_three_parts(&m, &a, &u, &b, 0) {
                    assert!(c.is_disjoint(&bf));
                    assert!(c.is_disjoint(&e));
                    assert!(bf.is_disjoint(&e));
                    assert_eq!(c.union(&bf).union(&e), a);
                    let f = a.minus(&c);
                    assert_eq!(bf, x_ba_cap_f(&m, &a, &b, &f));
                    assert_eq!(bf, f.minus(&e));
                    assert!(is_anti_left_transference_local(&m, &e, &b));
                }
            }
        }
    }

    fn x_ba_cap_f(m: &FiniteMagma, a: &Subset, b: &Subset, f: &Subset) -> Subset {
        m.product(b, a).intersect(f)
    }

    fn is_anti_left_transference_local(m: &FiniteMagma, a: &Subset, b: &Subset) -> bool {
        a.is_disjoint(&m.product(b, a))
    }
}
