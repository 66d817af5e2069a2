//! Set-level arithmetic in the power magma: products, identity adjoining,
//! directness, transference, symmetry, and the factorization-conjecture
//! search.

use crate::error::{Error, Result};
use crate::magma::FiniteMagma;
use crate::subset::Subset;

/// `AB` as subsets; the empty set absorbs.
pub fn product(x: &FiniteMagma, a: &Subset, b: &Subset) -> Result<Subset> {
    check2(x, a, b)?;
    Ok(x.product(a, b))
}

fn check2(x: &FiniteMagma, a: &Subset, b: &Subset) -> Result<()> {
    for s in [a, b] {
        if s.parent_size() != x.size() {
            return Err(Error::SizeMismatch {
                subset: s.parent_size(),
                magma: x.size(),
            });
        }
    }
    Ok(())
}

/// Result of adjoining an identity to a subset: either within the original
/// magma, or inside the freshly extended `X^1`.
#[derive(Debug, Clone, PartialEq)]
pub enum Adjoined {
    InPlace(Subset),
    Extended { magma: FiniteMagma, subset: Subset },
}

/// `B^1 = B ∪ {l}`. With no left identity available the table is extended by
/// a fresh two-sided identity and the subset is returned inside `X^1`.
pub fn adjoin_identity(x: &FiniteMagma, b: &Subset, l: Option<usize>) -> Result<Adjoined> {
    check2(x, b, b)?;
    match l {
        Some(l) => {
            if !x.left_identities().contains(l) {
                return Err(Error::NotLeftIdentity(l));
            }
            let mut s = b.clone();
            s.insert(l);
            Ok(Adjoined::InPlace(s))
        }
        None => {
            if let Some(l) = x.left_identities().first() {
                let mut s = b.clone();
                s.insert(l);
                return Ok(Adjoined::InPlace(s));
            }
            let ext = extend_with_identity(x);
            let mut s = Subset::empty(ext.size());
            for i in b.iter() {
                s.insert(i);
            }
            s.insert(x.size());
            Ok(Adjoined::Extended { magma: ext, subset: s })
        }
    }
}

/// `X^1`: the table extended by a fresh two-sided identity at index `n`.
pub fn extend_with_identity(x: &FiniteMagma) -> FiniteMagma {
    let n = x.size();
    let m = n + 1;
    let mut table = vec![0u32; m * m];
    for a in 0..m {
        for b in 0..m {
            table[a * m + b] = if a == n {
                b as u32
            } else if b == n {
                a as u32
            } else {
                x.op(a, b) as u32
            };
        }
    }
    let labels = x.labels().map(|l| {
        let mut v = l.to_vec();
        v.push("1_adj".into());
        v
    });
    FiniteMagma::new(m, table, labels).expect("valid table")
}

/// `AB = A * B` is direct iff `|AB| = |A||B|` (finite criterion).
pub fn is_direct(x: &FiniteMagma, a: &Subset, b: &Subset) -> Result<bool> {
    check2(x, a, b)?;
    Ok(x.product(a, b).len() == a.len() * b.len())
}

/// Explicit-witness directness check, used by tests to cross-validate the
/// cardinality shortcut: every element of `AB` has exactly one factorization.
pub fn is_direct_by_witness(x: &FiniteMagma, a: &Subset, b: &Subset) -> Result<bool> {
    check2(x, a, b)?;
    let mut count = vec![0usize; x.size()];
    for ai in a.iter() {
        for bi in b.iter() {
            count[x.op(ai, bi)] += 1;
        }
    }
    Ok(count.iter().all(|&c| c <= 1))
}

/// `A` is anti-left `B`-transference iff `A ∩ BA = ∅`.
pub fn is_anti_left_transference(x: &FiniteMagma, a: &Subset, b: &Subset) -> Result<bool> {
    check2(x, a, b)?;
    Ok(a.is_disjoint(&x.product(b, a)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SymmetryKind {
    Symmetric,
    AntiSymmetric,
    Neither,
}

/// Compares `B` against its canonical inverse relative to `l`.
pub fn symmetry_kind(x: &FiniteMagma, b: &Subset, l: usize) -> Result<SymmetryKind> {
    let inv = x.canonical_inverse(b, l)?;
    Ok(if *b == inv {
        SymmetryKind::Symmetric
    } else if b.is_disjoint(&inv) {
        SymmetryKind::AntiSymmetric
    } else {
        SymmetryKind::Neither
    })
}

/// Searches for `A, B` with `|A| = a`, `|B| = b` and `G = AB`.
///
/// Counting makes any such product automatically direct. The search
/// normalizes by putting the identity in both factors; this loses no
/// generality, since `G = AB` gives `G = (a0^{-1}A)(B b0^{-1})` for any
/// `a0 in A`, `b0 in B`. Failure for `ab = |G|` would contradict the
/// subset-product conjecture (verified in the literature for orders up to
/// 10000) and is surfaced as a loud error.
pub fn search_factorization(g: &FiniteMagma, a: usize, b: usize) -> Result<(Subset, Subset)> {
    if !g.is_group() {
        return Err(Error::NotGroup);
    }
    let n = g.size();
    if a * b != n {
        return Err(Error::BadFactorization { a, b, order: n });
    }
    if n > 64 {
        return Err(Error::SearchSpaceTooLarge(format!(
            "factorization search capped at order 64, got {n}"
        )));
    }
    let e = g.identity().expect("group identity");
    // candidate A sets contain e; enumerate by backtracking over the
    // remaining a-1 elements in ascending order, then exact-cover for B.
    let mut chosen = vec![e];
    search_a(g, a, b, e, &mut chosen, 0).ok_or(Error::FactorizationNotFound)
}

fn search_a(
    g: &FiniteMagma,
    a: usize,
    b: usize,
    e: usize,
    chosen: &mut Vec<usize>,
    next: usize,
) -> Option<(Subset, Subset)> {
    let n = g.size();
    if chosen.len() == a {
        let set_a = Subset::from_indices(n, chosen);
        if let Some(set_b) = cover_b(g, &set_a, b, e) {
            return Some((set_a, set_b));
        }
        return None;
    }
    for x in next..n {
        if x == e {
            continue;
        }
        chosen.push(x);
        if let Some(hit) = search_a(g, a, b, e, chosen, x + 1) {
            return Some(hit);
        }
        chosen.pop();
    }
    None
}

/// Exact cover of `G` by `b` tiles of the form `A y`, one of which must be
/// `A e = A`. Tiles must be pairwise disjoint and of full size `|A|` for
/// counting to close, so partial tiles are pruned immediately.
fn cover_b(g: &FiniteMagma, a: &Subset, b: usize, e: usize) -> Option<Subset> {
    let n = g.size();
    let a_len = a.len();
    let tiles: Vec<Subset> = (0..n).map(|y| g.set_times_elem(a, y)).collect();
    // normalization: e must be in B
    if tiles[e].len() != a_len {
        return None;
    }
    let mut used = tiles[e].clone();
    let mut picked = vec![e];
    if cover_rec(g, &tiles, a_len, b, &mut used, &mut picked) {
        Some(Subset::from_indices(n, &picked))
    } else {
        None
    }
}

fn cover_rec(
    g: &FiniteMagma,
    tiles: &[Subset],
    a_len: usize,
    b: usize,
    used: &mut Subset,
    picked: &mut Vec<usize>,
) -> bool {
    let n = g.size();
    if picked.len() == b {
        return used.len() == n;
    }
    // choose the lowest uncovered element; some tile must cover it exactly
    let target = match used.complement().first() {
        Some(t) => t,
        None => return false, // covered early: counting says too many tiles
    };
    for y in 0..n {
        if picked.contains(&y) {
            continue;
        }
        let tile = &tiles[y];
        if tile.len() == a_len && tile.contains(target) && tile.is_disjoint(used) {
            used.union_in_place(tile);
            picked.push(y);
            if cover_rec(g, tiles, a_len, b, used, picked) {
                return true;
            }
            picked.pop();
            *used = used.minus(tile);
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::builders::*;
    use proptest::prelude::*;

    fn set(n: usize, idx: &[usize]) -> Subset {
        Subset::from_indices(n, idx)
    }

    #[test]
    fn products() {
        let z6 = cyclic(6);
        assert_eq!(
            product(&z6, &set(6, &[0, 3]), &set(6, &[0, 1, 2])).unwrap(),
            Subset::full(6)
        );
        let l2 = l2();
        assert_eq!(
            product(&l2, &set(2, &[0]), &set(2, &[0, 1])).unwrap(),
            set(2, &[0])
        );
        assert_eq!(
            product(&z6, &Subset::empty(6), &set(6, &[1])).unwrap(),
            Subset::empty(6)
        );
        assert_eq!(
            product(&z6, &Subset::empty(4), &set(6, &[1])),
            Err(Error::SizeMismatch { subset: 4, magma: 6 })
        );
    }

    #[test]
    fn adjoining() {
        let z6 = cyclic(6);
        assert_eq!(
            adjoin_identity(&z6, &set(6, &[1]), Some(0)).unwrap(),
            Adjoined::InPlace(set(6, &[0, 1]))
        );
        let m = m2();
        assert_eq!(
            adjoin_identity(&m, &set(4, &[2]), Some(0)).unwrap(),
            Adjoined::InPlace(set(4, &[0, 2]))
        );
        match adjoin_identity(&l2(), &set(2, &[0]), None).unwrap() {
            Adjoined::Extended { magma, subset } => {
                assert_eq!(magma.size(), 3);
                assert_eq!(subset, set(3, &[0, 2]));
                assert_eq!(magma.identity(), Some(2));
                assert!(magma.is_associative());
            }
            other => panic!("expected extension, got {other:?}"),
        }
        assert_eq!(
            adjoin_identity(&z6, &set(6, &[1]), Some(3)),
            Err(Error::NotLeftIdentity(3))
        );
    }

    #[test]
    fn directness() {
        let z6 = cyclic(6);
        assert!(is_direct(&z6, &set(6, &[0, 3]), &set(6, &[0, 1, 2])).unwrap());
        assert!(!is_direct(&z6, &set(6, &[0, 2, 4]), &set(6, &[0, 2])).unwrap());
        assert!(is_direct(&z6, &set(6, &[0]), &Subset::full(6)).unwrap());
    }

    #[test]
    fn anti_transference() {
        let z6 = cyclic(6);
        assert!(is_anti_left_transference(&z6, &set(6, &[1]), &set(6, &[1])).unwrap());
        assert!(!is_anti_left_transference(&z6, &set(6, &[0, 3]), &set(6, &[3])).unwrap());
        assert!(is_anti_left_transference(&z6, &Subset::empty(6), &Subset::full(6)).unwrap());
    }

    #[test]
    fn symmetry() {
        let z6 = cyclic(6);
        assert_eq!(
            symmetry_kind(&z6, &set(6, &[1, 5]), 0).unwrap(),
            SymmetryKind::Symmetric
        );
        assert_eq!(
            symmetry_kind(&z6, &set(6, &[1, 2]), 0).unwrap(),
            SymmetryKind::AntiSymmetric
        );
        assert_eq!(
            symmetry_kind(&z6, &set(6, &[1, 5, 2]), 0).unwrap(),
            SymmetryKind::Neither
        );
        assert_eq!(
            symmetry_kind(&m2(), &set(4, &[2]), 0),
            Err(Error::NotLeftInvertible(2))
        );
    }

    #[test]
    fn factorization_small() {
        let z6 = cyclic(6);
        let (a, b) = search_factorization(&z6, 2, 3).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(b.len(), 3);
        assert_eq!(z6.product(&a, &b), Subset::full(6));
        let (a, b) = search_factorization(&z6, 1, 6).unwrap();
        assert_eq!((a, b), (set(6, &[0]), Subset::full(6)));
        let (a, b) = search_factorization(&z6, 6, 1).unwrap();
        assert_eq!((a, b), (Subset::full(6), set(6, &[0])));
        assert_eq!(
            search_factorization(&z6, 2, 2),
            Err(Error::BadFactorization { a: 2, b: 2, order: 6 })
        );
        assert_eq!(search_factorization(&l2(), 1, 2), Err(Error::NotGroup));
    }

    #[test]
    fn factorization_nonabelian() {
        let d4 = dihedral(4);
        for (a, b) in [(2, 4), (4, 2), (8, 1)] {
            let (sa, sb) = search_factorization(&d4, a, b).unwrap();
            assert_eq!(d4.product(&sa, &sb), Subset::full(8));
            assert_eq!(sa.len() * sb.len(), 8);
        }
    }

    proptest! {
        // product is associative on associative carriers
        #[test]
        fn power_semigroup_associativity(a in 0u64..64, b in 0u64..64, c in 0u64..64) {
            let z6 = cyclic(6);
            let (a, b, c) = (
                Subset::from_word(6, a),
                Subset::from_word(6, b),
                Subset::from_word(6, c),
            );
            let left = z6.product(&z6.product(&a, &b), &c);
            let right = z6.product(&a, &z6.product(&b, &c));
            prop_assert_eq!(left, right);
        }

        // directness passes to subsets of the left factor
        #[test]
        fn direct_sub_uniqueness(a in 0u64..64, b in 0u64..64, mask in 0u64..64) {
            let z6 = cyclic(6);
            let a = Subset::from_word(6, a);
            let b = Subset::from_word(6, b);
            if is_direct(&z6, &a, &b).unwrap() {
                let sub = Subset::from_word(6, mask).intersect(&a);
                prop_assert!(is_direct(&z6, &sub, &b).unwrap());
            }
        }

        // cardinality shortcut agrees with the witness count
        #[test]
        fn direct_routes_agree(a in 0u64..256, b in 0u64..256) {
            let d4 = dihedral(4);
            let a = Subset::from_word(8, a);
            let b = Subset::from_word(8, b);
            prop_assert_eq!(
                is_direct(&d4, &a, &b).unwrap(),
                is_direct_by_witness(&d4, &a, &b).unwrap()
            );
        }
    }
}
