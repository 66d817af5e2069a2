//! Positive-negative partitions of groups and the unique-direct-
//! representation machinery for upper periodic subsets.
//!
//! The report operators never throw on a failed representation property;
//! they compute every flag by direct checking so the theorems' hypotheses
//! become diagnoses.

use crate::error::{Error, Result};
use crate::magma::{FactorContext, FiniteMagma};
use crate::periodic;
use crate::subset::Subset;

/// `G = G_plus ∪̇ G_minus ∪̇ G_two` with `G_minus = (G_plus)^{-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PositivePartition {
    pub g_plus: Subset,
    pub g_minus: Subset,
    pub g_two: Subset,
}

fn require_group(g: &FiniteMagma) -> Result<usize> {
    if !g.is_group() {
        return Err(Error::NotGroup);
    }
    Ok(g.identity().expect("group identity"))
}

/// `G_2 = {x : x*x = 1}`.
pub fn g_two(g: &FiniteMagma) -> Result<Subset> {
    let e = require_group(g)?;
    let mut out = Subset::empty(g.size());
    for x in 0..g.size() {
        if g.op(x, x) == e {
            out.insert(x);
        }
    }
    Ok(out)
}

/// All `2^k` positive-negative partitions, one per choice over the `k`
/// inverse pairs `{x, x^{-1}}` outside `G_2`. Refuses more than 20 pairs.
pub fn enumerate_positive_partitions(g: &FiniteMagma) -> Result<Vec<PositivePartition>> {
    let _ = require_group(g)?;
    let two = g_two(g)?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut seen = Subset::empty(g.size());
    for x in 0..g.size() {
        if two.contains(x) || seen.contains(x) {
            continue;
        }
        let inv = g.group_inverse(x).expect("group inverse");
        seen.insert(x);
        seen.insert(inv);
        pairs.push((x, inv));
    }
    if pairs.len() > 20 {
        return Err(Error::TooManyPairs(pairs.len()));
    }
    let mut out = Vec::with_capacity(1 << pairs.len());
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut plus = Subset::empty(g.size());
        let mut minus = Subset::empty(g.size());
        for (k, &(x, inv)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                plus.insert(inv);
                minus.insert(x);
            } else {
                plus.insert(x);
                minus.insert(inv);
            }
        }
        out.push(PositivePartition {
            g_plus: plus,
            g_minus: minus,
            g_two: two.clone(),
        });
    }
    Ok(out)
}

/// Positive-subset criterion: `(G\B)^{-1} \ G_2 = B` and `B ∩ G_2 = ∅`.
pub fn is_positive_subset(g: &FiniteMagma, b: &Subset) -> Result<bool> {
    let _ = require_group(g)?;
    let two = g_two(g)?;
    if !b.is_disjoint(&two) {
        return Ok(false);
    }
    let mut lhs = Subset::empty(g.size());
    for x in b.complement().iter() {
        lhs.insert(g.group_inverse(x).expect("group inverse"));
    }
    Ok(lhs.minus(&two) == *b)
}

/// A positive subset that is also a sub-semigroup (nonempty and closed).
pub fn is_positive_subsemigroup(g: &FiniteMagma, b: &Subset) -> Result<bool> {
    Ok(is_positive_subset(g, b)? && !b.is_empty() && g.product(b, b).is_subset_of(b))
}

/// Unique direct representation of a left `B_script`-periodic subset:
/// `A = B_script * D` with `D = transversal ∩ A`.
pub fn periodic_representation(
    x: &FiniteMagma,
    ctx: &FactorContext,
    a: &Subset,
) -> Result<Subset> {
    if !periodic::is_left_periodic(x, a, ctx.subgroup()) {
        return Err(Error::NotPeriodic);
    }
    let d = ctx.transversal().intersect(a);
    debug_assert_eq!(x.product(ctx.subgroup(), &d), *a);
    debug_assert_eq!(ctx.subgroup().len() * d.len(), a.len());
    Ok(d)
}

/// Diagnosis of the representation `A = BB*D ∪̇ B^1*E`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RepresentationReport {
    pub d: Subset,
    pub e: Subset,
    pub first_half_direct: bool,
    pub second_half_direct: bool,
    pub halves_disjoint: bool,
    pub reconstructs: bool,
    pub e_unique: bool,
    pub d_unique_given_transversal: bool,
    pub b_is_subsemigroup: bool,
    pub well_started: bool,
}

/// Computes `C = Pk_BB(A)`, `E = A \ BA`, a candidate `D`, and fills every
/// flag by direct checking.
///
/// With a transversal the candidate is `D = C ∩ transversal`, which is
/// unique given the fixed transversal. Without one, `D` is a greedy
/// set of coset representatives of `C` and its uniqueness flag is false by
/// construction.
pub fn representation_report(
    x: &FiniteMagma,
    a: &Subset,
    bb: &Subset,
    b: &Subset,
    l: usize,
    transversal: Option<&Subset>,
) -> Result<RepresentationReport> {
    let ba = x.product(b, a);
    if !ba.is_subset_of(a) {
        return Err(Error::NotUpperPeriodic);
    }
    if !x.left_identities().contains(l) {
        return Err(Error::NotLeftIdentity(l));
    }
    let c = periodic::periodic_kernel(x, a, bb);
    let e = a.minus(&ba);
    let (d, d_unique) = match transversal {
        Some(t) => (c.intersect(t), true),
        None => {
            // greedy representative per BB-orbit inside C, scan order
            let mut d = Subset::empty(x.size());
            let mut covered = Subset::empty(x.size());
            for y in c.iter() {
                if !covered.contains(y) {
                    d.insert(y);
                    covered.union_in_place(&x.set_times_elem(bb, y));
                }
            }
            (d, false)
        }
    };
    let first = x.product(bb, &d);
    let mut b1 = b.clone();
    b1.insert(l);
    let second = x.product(&b1, &e);
    let first_half_direct = first.len() == bb.len() * d.len();
    let second_half_direct = second.len() == b1.len() * e.len();
    let halves_disjoint = first.is_disjoint(&second);
    let reconstructs = first.union(&second) == *a;
    // uniqueness of E needs E anti-left B-transference
    let e_unique = e.is_disjoint(&x.product(b, &e));
    let b_is_subsemigroup = !b.is_empty() && x.product(b, b).is_subset_of(b);
    let well_started = periodic::is_well_started(x, a, bb, b)?;
    Ok(RepresentationReport {
        d,
        e,
        first_half_direct,
        second_half_direct,
        halves_disjoint,
        reconstructs,
        e_unique,
        d_unique_given_transversal: d_unique,
        b_is_subsemigroup,
        well_started,
    })
}

/// Builds `BB*D ∪ <B>^1*E`, closing the first half under `<B>^1` as well so
/// the result is upper B-periodic for arbitrary `BB` (when `B*BB ⊆ BB`, as
/// in all the general forms, the closure is a no-op and the result is
/// exactly `BB*D ∪ <B>^1*E`).
pub fn generate_upper_periodic(
    x: &FiniteMagma,
    bb: &Subset,
    b: &Subset,
    d: &Subset,
    e: &Subset,
) -> Result<Subset> {
    if !x.is_associative() {
        return Err(Error::NotAssociative);
    }
    let seed = x.product(bb, d).union(e);
    if b.is_empty() {
        return Ok(seed);
    }
    let gen_b = x.closure(b);
    Ok(x.product_adjoined(&gen_b, &seed))
}

/// Witnesses for the normal-factor-monoid theorem.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct MonoidReport {
    pub identity: usize,
    pub two_sided: bool,
    pub reversed_direct: bool,
    pub intersection: Subset,
}

/// A left-cancellative semigroup with a left normal factor subgroup is a
/// monoid: verifies the identity is `1_B`, that `S = D*B` is also direct,
/// and that `B ∩ D` is a singleton.
pub fn check_normal_factor_monoid(s: &FiniteMagma, ctx: &FactorContext) -> Result<MonoidReport> {
    if !s.is_associative() {
        return Err(Error::NotAssociative);
    }
    if !s.is_left_cancellative_over(&Subset::full(s.size()))? {
        return Err(Error::PreconditionFailed(
            "carrier is not left cancellative".into(),
        ));
    }
    let b = ctx.subgroup();
    for x in 0..s.size() {
        if !s.elem_times_set(x, b).is_subset_of(&s.set_times_elem(b, x)) {
            return Err(Error::PreconditionFailed(format!(
                "subgroup is not left normal: {x}*B exceeds B*{x}"
            )));
        }
    }
    let e = ctx.left_identity();
    let two_sided = (0..s.size()).all(|x| s.op(x, e) == x && s.op(e, x) == x);
    let d = ctx.transversal();
    let db = s.product(d, b);
    let reversed_direct = db.len() == d.len() * b.len() && db == Subset::full(s.size());
    let intersection = b.intersect(d);
    if !two_sided || !reversed_direct || intersection.len() != 1 {
        return Err(Error::PreconditionFailed(
            "normal factor conclusions failed on a cancellative carrier".into(),
        ));
    }
    Ok(MonoidReport {
        identity: e,
        two_sided,
        reversed_direct,
        intersection,
    })
}

/// One tuple from the well-started closure scan: both open questions are
/// answered per-instance, no general claim is made.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ClosureCandidate {
    pub bb: Subset,
    pub b: Subset,
    pub d: Subset,
    pub e: Subset,
    pub a: Subset,
    pub well_started: bool,
    pub kernel_is_bbd: bool,
}

/// Experiment: scan tuples with `B` and `BB` closed, `B·BB = BB`,
/// `E ≠ ∅`, `E ∩ BE = E ∩ BB·D = ∅`, and `A = BB·D ∪ B^1·E`, asking
/// whether `A` is well `(BB, B)`-started and whether `Pk_BB(A) = BB·D`.
/// Returns the tuples where either answer is "no" (counterexample
/// candidates for the closure question), capped at `limit`.
pub fn scan_wellstarted_closure(
    m: &FiniteMagma,
    limit: usize,
) -> Result<(usize, Vec<ClosureCandidate>)> {
    if !m.is_associative() {
        return Err(Error::NotAssociative);
    }
    let n = m.size();
    if n > 8 {
        return Err(Error::ScopeExceeded { n, cap: 8 });
    }
    let closed: Vec<Subset> = Subset::all(n)
        .filter(|s| !s.is_empty() && m.product(s, s).is_subset_of(s))
        .collect();
    let mut scanned = 0usize;
    let mut out = Vec::new();
    for bb in &closed {
        for b in &closed {
            if m.product(b, bb) != *bb {
                continue;
            }
            for d in Subset::all(n) {
                let first = m.product(bb, &d);
                for e in Subset::all(n) {
                    if e.is_empty()
                        || !e.is_disjoint(&m.product(b, &e))
                        || !e.is_disjoint(&first)
                    {
                        continue;
                    }
                    scanned += 1;
                    let a = first.union(&m.product_adjoined(b, &e));
                    let well_started = periodic::is_well_started(m, &a, bb, b)?;
                    let kernel_is_bbd = periodic::periodic_kernel(m, &a, bb) == first;
                    if !well_started || !kernel_is_bbd {
                        if out.len() < limit {
                            out.push(ClosureCandidate {
                                bb: bb.clone(),
                                b: b.clone(),
                                d: d.clone(),
                                e: e.clone(),
                                a,
                                well_started,
                                kernel_is_bbd,
                            });
                        } else {
                            return Ok((scanned, out));
                        }
                    }
                }
            }
        }
    }
    Ok((scanned, out))
}

/// The bi-projection onto `D ∪̇ E` for a verified full direct representation
/// `A = BB*D ∪̇ B^1*E`: returns the unique generator whose `BB`- or
/// `B^1`-shift produces `point`.
pub fn bi_projection(
    x: &FiniteMagma,
    ctx: &FactorContext,
    a: &Subset,
    b: &Subset,
    d: &Subset,
    e: &Subset,
    point: usize,
) -> Result<usize> {
    let bb = ctx.subgroup();
    let mut b1 = b.clone();
    b1.insert(ctx.left_identity());
    let first = x.product(bb, d);
    let second = x.product(&b1, e);
    let direct = first.len() == bb.len() * d.len()
        && second.len() == b1.len() * e.len()
        && first.is_disjoint(&second)
        && first.union(&second) == *a;
    if !direct {
        return Err(Error::NotDirectRepresentation);
    }
    if !a.contains(point) {
        return Err(Error::NotInSet(point));
    }
    if first.contains(point) {
        for gen in d.iter() {
            if x.set_times_elem(bb, gen).contains(point) {
                return Ok(gen);
            }
        }
    } else {
        for gen in e.iter() {
            if x.set_times_elem(&b1, gen).contains(point) {
                return Ok(gen);
            }
        }
    }
    unreachable!("a verified direct representation covers every member")
}
