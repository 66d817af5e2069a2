//! Solvers for the power-semigroup equations and inequalities
//! `BY ⊆ A`, `B^1 Y ⊆ A`, `BY ⊆ Y ⊆ A`, `BY = A` and the split equation
//! `(BB·D ∪ BY) ∪̇ Y = A`.

use crate::error::{Error, Result};
use crate::magma::FiniteMagma;
use crate::periodic::{summand, upper_periodic_kernel};
use crate::subset::Subset;
use crate::topology;
use num::BigUint;

/// Solutions to a downward- or preorder-closed constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSet {
    /// The largest solution; every solution is contained in it.
    pub top: Subset,
    /// Explicit list when the instance is small enough, in canonical order.
    pub all: Option<Vec<Subset>>,
    /// Exact solution count.
    pub count: BigUint,
}

const ENUM_LIMIT: usize = 20;

fn two_pow(k: usize) -> BigUint {
    BigUint::from(1u32) << k
}

/// `BY ⊆ A`: the general solution is the power set of the summand.
pub fn solve_upper(x: &FiniteMagma, b: &Subset, a: &Subset) -> SolutionSet {
    let top = summand(x, a, b);
    let all = (top.len() <= ENUM_LIMIT).then(|| {
        let mut v: Vec<Subset> = top.subsets().collect();
        v.sort();
        v
    });
    SolutionSet {
        count: two_pow(top.len()),
        top,
        all,
    }
}

/// `B^1 Y ⊆ A`, i.e. the solutions of `BY ⊆ A` that stay inside `A`.
pub fn solve_upper_inside(x: &FiniteMagma, b: &Subset, a: &Subset) -> SolutionSet {
    let top = summand(x, a, b).intersect(a);
    let all = (top.len() <= ENUM_LIMIT).then(|| {
        let mut v: Vec<Subset> = top.subsets().collect();
        v.sort();
        v
    });
    SolutionSet {
        count: two_pow(top.len()),
        top,
        all,
    }
}

/// `BY ⊆ Y ⊆ A`: the solutions are the upper B-periodic subsets of the
/// upper periodic kernel of `A`. The family is an Alexandrov topology
/// restricted to the kernel, so the exact count comes from the reach
/// preorder; explicit enumeration only for small kernels.
pub fn solve_sandwich(x: &FiniteMagma, b: &Subset, a: &Subset) -> Result<SolutionSet> {
    if !x.is_associative() {
        return Err(Error::NotAssociative);
    }
    let top = upper_periodic_kernel(x, a, b);
    let count = topology::count_opens_within(x, b, &top)?;
    let all = if top.len() <= ENUM_LIMIT {
        let mut v: Vec<Subset> = top
            .subsets()
            .filter(|y| x.product(b, y).is_subset_of(y))
            .collect();
        v.sort();
        Some(v)
    } else {
        None
    };
    Ok(SolutionSet { top, all, count })
}

/// Membership test for the sandwich family.
pub fn is_sandwich_solution(x: &FiniteMagma, b: &Subset, a: &Subset, y: &Subset) -> bool {
    x.product(b, y).is_subset_of(y) && y.is_subset_of(a)
}

/// All `Y` with `BY = A`. Every solution lives inside the summand, so the
/// search space is its power set; refused above 22 generators.
pub fn solve_equation(x: &FiniteMagma, b: &Subset, a: &Subset) -> Result<Vec<Subset>> {
    let sigma = summand(x, a, b);
    if sigma.len() > 22 {
        return Err(Error::SearchSpaceTooLarge(format!(
            "summand has {} elements",
            sigma.len()
        )));
    }
    let idx = sigma.indices();
    let tiles: Vec<Subset> = idx.iter().map(|&y| x.set_times_elem(b, y)).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    cover_all(
        x,
        a,
        &idx,
        &tiles,
        0,
        &Subset::empty(x.size()),
        &mut chosen,
        &mut out,
    );
    out.sort();
    Ok(out)
}

/// Depth-first enumeration over subsets of the summand in index order,
/// pruning branches whose remaining tiles cannot finish covering `A`.
#[allow(clippy::too_many_arguments)]
fn cover_all(
    x: &FiniteMagma,
    a: &Subset,
    idx: &[usize],
    tiles: &[Subset],
    pos: usize,
    covered: &Subset,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Subset>,
) {
    let mut reach = covered.clone();
    for t in &tiles[pos..] {
        reach.union_in_place(t);
    }
    if !a.is_subset_of(&reach) {
        return;
    }
    if pos == idx.len() {
        if covered == a {
            out.push(Subset::from_indices(x.size(), chosen));
        }
        return;
    }
    // skip idx[pos]
    cover_all(x, a, idx, tiles, pos + 1, covered, chosen, out);
    // take idx[pos]
    chosen.push(idx[pos]);
    let with = covered.union(&tiles[pos]);
    cover_all(x, a, idx, tiles, pos + 1, &with, chosen, out);
    chosen.pop();
}

/// Solutions of the split equation `(BB·D ∪ BY) ∪̇ Y = A` together with the
/// uniqueness verdict the theory predicts for `B ⊆̇ BB <=_l S`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitSolutions {
    pub solutions: Vec<Subset>,
    pub unique: bool,
}

/// Brute force over `Y ⊆ A \ BB·D` (disjointness forces that), `|X| <= 20`.
pub fn solve_split(
    x: &FiniteMagma,
    bb: &Subset,
    b: &Subset,
    d: &Subset,
    a: &Subset,
) -> Result<SplitSolutions> {
    if !x.is_associative() {
        return Err(Error::NotAssociative);
    }
    if x.size() > 20 {
        return Err(Error::SearchSpaceTooLarge(format!(
            "split equation capped at |X| = 20, got {}",
            x.size()
        )));
    }
    let bbd = x.product(bb, d);
    let candidates = a.minus(&bbd);
    let mut solutions = Vec::new();
    for y in candidates.subsets() {
        let left = bbd.union(&x.product(b, &y));
        if left.is_disjoint(&y) && left.union(&y) == *a {
            solutions.push(y);
        }
    }
    solutions.sort();
    let unique = solutions.len() == 1;
    Ok(SplitSolutions { solutions, unique })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::builders::*;

    fn set(n: usize, idx: &[usize]) -> Subset {
        Subset::from_indices(n, idx)
    }

    #[test]
    fn upper_solutions() {
        let z6 = cyclic(6);
        let s = solve_upper(&z6, &set(6, &[0, 2, 4]), &set(6, &[0, 2, 4]));
        assert_eq!(s.top, set(6, &[0, 2, 4]));
        assert_eq!(s.count, BigUint::from(8u32));
        assert_eq!(s.all.as_ref().unwrap().len(), 8);

        let m = m2();
        let s = solve_upper(&m, &set(4, &[0, 1]), &set(4, &[2]));
        assert!(s.top.is_empty());
        assert_eq!(s.count, BigUint::from(1u32));

        let s = solve_upper(&z6, &set(6, &[1]), &Subset::full(6));
        assert_eq!(s.top, Subset::full(6));
    }

    #[test]
    fn upper_inside_solutions() {
        let z6 = cyclic(6);
        assert_eq!(
            solve_upper_inside(&z6, &set(6, &[2]), &set(6, &[0, 2, 4])).top,
            set(6, &[0, 2, 4])
        );
        let m = m2();
        assert_eq!(
            solve_upper_inside(&m, &set(4, &[0, 1]), &set(4, &[2, 3])).top,
            set(4, &[2, 3])
        );
        assert!(solve_upper_inside(&z6, &set(6, &[1]), &Subset::empty(6))
            .top
            .is_empty());
    }

    #[test]
    fn sandwich_solutions() {
        let z6 = cyclic(6);
        let s = solve_sandwich(&z6, &set(6, &[2]), &set(6, &[0, 2, 4])).unwrap();
        assert_eq!(s.top, set(6, &[0, 2, 4]));
        let all = s.all.unwrap();
        assert!(all.contains(&Subset::empty(6)));
        assert!(all.contains(&set(6, &[0, 2, 4])));
        assert_eq!(BigUint::from(all.len()), s.count);

        let s = solve_sandwich(&z6, &set(6, &[1]), &set(6, &[0, 1, 2])).unwrap();
        assert!(s.top.is_empty());

        let s = solve_sandwich(&z6, &Subset::empty(6), &Subset::full(6)).unwrap();
        assert_eq!(s.top, Subset::full(6));
        assert_eq!(s.count, BigUint::from(64u32));
    }

    #[test]
    fn equation_solutions() {
        let z6 = cyclic(6);
        let evens = set(6, &[0, 2, 4]);
        let sols = solve_equation(&z6, &evens, &evens).unwrap();
        let mut expect: Vec<Subset> = evens.subsets().filter(|y| !y.is_empty()).collect();
        expect.sort();
        assert_eq!(sols, expect);
        assert_eq!(sols.len(), 7);

        let m = m2();
        assert!(solve_equation(&m, &set(4, &[0, 1]), &set(4, &[2]))
            .unwrap()
            .is_empty());
        assert_eq!(
            solve_equation(&z6, &set(6, &[1]), &Subset::empty(6)).unwrap(),
            vec![Subset::empty(6)]
        );
    }

    #[test]
    fn equation_matches_brute_force() {
        let m = m2();
        for b_bits in 0u64..16 {
            for a_bits in 0u64..16 {
                let b = Subset::from_word(4, b_bits);
                let a = Subset::from_word(4, a_bits);
                let fast = solve_equation(&m, &b, &a).unwrap();
                let mut slow: Vec<Subset> =
                    Subset::all(4).filter(|y| m.product(&b, y) == a).collect();
                slow.sort();
                assert_eq!(fast, slow, "B={b:?} A={a:?}");
            }
        }
    }

    #[test]
    fn split_solutions() {
        let m = m2();
        let u = set(4, &[0, 1]);
        // A = U, D = {e}: U{e} = U = A forces Y = empty
        let s = solve_split(&m, &u, &u, &set(4, &[0]), &u).unwrap();
        assert_eq!(s.solutions, vec![Subset::empty(4)]);
        assert!(s.unique);

        let z6 = cyclic(6);
        let b03 = set(6, &[0, 3]);
        let s = solve_split(&z6, &b03, &b03, &set(6, &[0]), &b03).unwrap();
        assert_eq!(s.solutions, vec![Subset::empty(6)]);

        // unsatisfiable: A = BB*D ∪ {x} where Bx escapes A
        let s = solve_split(&z6, &b03, &b03, &set(6, &[0]), &set(6, &[0, 3, 1])).unwrap();
        assert!(s.solutions.is_empty());
    }
}
