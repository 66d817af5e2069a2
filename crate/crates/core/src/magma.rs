//! Finite magmas given by Cayley tables, structural queries, and fixed
//! left-factor factorizations.
//!
//! A [`FiniteMagma`] is `n` elements with an `n x n` multiplication table.
//! Structural flags (associativity, left identities, the two-sided identity)
//! are computed lazily once and cached; everything else is a pure function of
//! the table. A [`FactorContext`] pins down a left factor subgroup together
//! with its deterministic right transversal, the ambient data every unique
//! direct representation lives over.

use crate::error::{Error, Result};
use crate::subset::Subset;
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// A binary operation on `n` indexed elements.
#[derive(Debug)]
pub struct FiniteMagma {
    n: usize,
    table: Vec<u32>,
    labels: Option<Vec<String>>,
    assoc: OnceLock<bool>,
    left_ids: OnceLock<Subset>,
    identity: OnceLock<Option<usize>>,
}

impl Clone for FiniteMagma {
    fn clone(&self) -> Self {
        FiniteMagma {
            n: self.n,
            table: self.table.clone(),
            labels: self.labels.clone(),
            assoc: OnceLock::new(),
            left_ids: OnceLock::new(),
            identity: OnceLock::new(),
        }
    }
}

impl PartialEq for FiniteMagma {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl FiniteMagma {
    /// Builds a magma from a row-major table; every entry must be `< n`.
    pub fn new(n: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTable("size must be at least 1".into()));
        }
        if table.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        if let Some(bad) = table.iter().find(|&&e| e as usize >= n) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        if let Some(ref l) = labels {
            if l.len() != n {
                return Err(Error::InvalidTable("label count != n".into()));
            }
        }
        Ok(FiniteMagma {
            n,
            table,
            labels,
            assoc: OnceLock::new(),
            left_ids: OnceLock::new(),
            identity: OnceLock::new(),
        })
    }

    pub fn from_rows(rows: Vec<Vec<u32>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::InvalidTable("table is not square".into()));
            }
        }
        FiniteMagma::new(n, rows.into_iter().flatten().collect(), labels)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.table.chunks(self.n).map(|c| c.to_vec()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    fn check(&self, s: &Subset) -> Result<()> {
        if s.parent_size() != self.n {
            return Err(Error::SizeMismatch {
                subset: s.parent_size(),
                magma: self.n,
            });
        }
        Ok(())
    }

    /// True iff the table is associative (full O(n^3) check, cached).
    pub fn is_associative(&self) -> bool {
        *self.assoc.get_or_init(|| {
            for x in 0..self.n {
                for y in 0..self.n {
                    let xy = self.op(x, y);
                    for z in 0..self.n {
                        if self.op(xy, z) != self.op(x, self.op(y, z)) {
                            return false;
                        }
                    }
                }
            }
            true
        })
    }

    /// The set of left identities `{l : ly = y for all y}`; may be empty.
    pub fn left_identities(&self) -> Subset {
        self.left_ids
            .get_or_init(|| {
                let mut s = Subset::empty(self.n);
                'outer: for l in 0..self.n {
                    for y in 0..self.n {
                        if self.op(l, y) != y {
                            continue 'outer;
                        }
                    }
                    s.insert(l);
                }
                s
            })
            .clone()
    }

    /// The two-sided identity, if one exists.
    pub fn identity(&self) -> Option<usize> {
        *self.identity.get_or_init(|| {
            self.left_identities()
                .iter()
                .find(|&l| (0..self.n).all(|y| self.op(y, l) == y))
        })
    }

    /// True iff `b x1 = b x2` forces `x1 = x2` for every `b` in `B`.
    pub fn is_left_cancellative_over(&self, b: &Subset) -> Result<bool> {
        self.check(b)?;
        for bi in b.iter() {
            let mut seen = Subset::empty(self.n);
            for x in 0..self.n {
                let y = self.op(bi, x);
                if seen.contains(y) {
                    return Ok(false);
                }
                seen.insert(y);
            }
        }
        Ok(true)
    }

    /// True iff `x1 b = x2 b` forces `x1 = x2` for every `b` in `B`.
    pub fn is_right_cancellative_over(&self, b: &Subset) -> Result<bool> {
        self.check(b)?;
        for bi in b.iter() {
            let mut seen = Subset::empty(self.n);
            for x in 0..self.n {
                let y = self.op(x, bi);
                if seen.contains(y) {
                    return Ok(false);
                }
                seen.insert(y);
            }
        }
        Ok(true)
    }

    /// Product set `AB = {ab : a in A, b in B}`.
    pub fn product(&self, a: &Subset, b: &Subset) -> Subset {
        debug_assert_eq!(a.parent_size(), self.n);
        debug_assert_eq!(b.parent_size(), self.n);
        let mut out = Subset::empty(self.n);
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.op(x, y));
            }
        }
        out
    }

    /// `Bx` for a single element.
    pub fn set_times_elem(&self, b: &Subset, x: usize) -> Subset {
        let mut out = Subset::empty(self.n);
        for bi in b.iter() {
            out.insert(self.op(bi, x));
        }
        out
    }

    /// `xB` for a single element.
    pub fn elem_times_set(&self, x: usize, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.n);
        for bi in b.iter() {
            out.insert(self.op(x, bi));
        }
        out
    }

    /// `B^1 A = BA ∪ A`: the product with the identity adjoined, which never
    /// needs an actual identity element.
    pub fn product_adjoined(&self, b: &Subset, a: &Subset) -> Subset {
        self.product(b, a).union(a)
    }

    /// The sub-semigroup `<B>` generated by `B`: the closure of `B` under the
    /// operation.
    pub fn generate_subsemigroup(&self, b: &Subset) -> Result<Subset> {
        self.check(b)?;
        if b.is_empty() {
            return Err(Error::EmptyGenerator);
        }
        if !self.is_associative() {
            return Err(Error::NotAssociative);
        }
        Ok(self.closure(b))
    }

    pub(crate) fn closure(&self, b: &Subset) -> Subset {
        let mut cur = b.clone();
        loop {
            let next = cur.union(&self.product(&cur, &cur));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// The least subgroup `<<B>>` of the magma containing `B`, when one
    /// exists. "Subgroup" here requires the group identity to act as a left
    /// identity of the whole carrier, so constants of a function monoid have
    /// no enclosing subgroup even though `{c}` is closed at its idempotent.
    ///
    /// No search is needed: any such subgroup `H ⊇ B` contains `<B>`, and a
    /// finite sub-semigroup of the group `H` is itself a subgroup of `H`
    /// sharing its identity, so `<B>` is the least candidate.
    pub fn generate_subgroup(&self, b: &Subset) -> Result<Subset> {
        let t = self.generate_subsemigroup(b)?;
        if self.is_left_subgroup(&t)? {
            Ok(t)
        } else {
            Err(Error::NoSubgroup)
        }
    }

    /// True iff `h` is nonempty, closed, and a group under the restricted
    /// operation.
    pub fn is_group_on(&self, h: &Subset) -> bool {
        if h.is_empty() {
            return false;
        }
        let hh = self.product(h, h);
        if !hh.is_subset_of(h) {
            return false;
        }
        let Some(e) = self.identity_within(h) else {
            return false;
        };
        // every element needs a two-sided inverse inside h
        for x in h.iter() {
            let ok = h
                .iter()
                .any(|y| self.op(x, y) == e && self.op(y, x) == e);
            if !ok {
                return false;
            }
        }
        true
    }

    /// The element of `h` acting as a two-sided identity on `h`, if any.
    pub fn identity_within(&self, h: &Subset) -> Option<usize> {
        h.iter()
            .find(|&e| h.iter().all(|x| self.op(e, x) == x && self.op(x, e) == x))
    }

    /// True iff the whole magma is a group.
    pub fn is_group(&self) -> bool {
        self.is_associative() && self.is_group_on(&Subset::full(self.n))
    }

    /// Inverse of an element in a group magma.
    pub fn group_inverse(&self, x: usize) -> Option<usize> {
        let e = self.identity()?;
        (0..self.n).find(|&y| self.op(x, y) == e && self.op(y, x) == e)
    }

    /// `H <=_l X`: `H` is a group under the restriction and its identity is a
    /// left identity of the whole magma.
    pub fn is_left_subgroup(&self, h: &Subset) -> Result<bool> {
        self.check(h)?;
        if !self.is_group_on(h) {
            return Ok(false);
        }
        let e = self.identity_within(h).expect("group has an identity");
        Ok(self.left_identities().contains(e))
    }

    /// `H <=_lf X`: a left subgroup such that `xs = s` has the only solution
    /// `x = 1_H` inside `H`, for every `s`.
    pub fn is_left_factor_subgroup(&self, h: &Subset) -> Result<bool> {
        if !self.is_left_subgroup(h)? {
            return Err(Error::NotLeftSubgroup);
        }
        let e = self.identity_within(h).expect("group has an identity");
        for s in 0..self.n {
            for x in h.iter() {
                if x != e && self.op(x, s) == s {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All minimal sets `Y` with `(forall b in B)(exists y in Y): yb = l`,
    /// sorted in the canonical lexicographic order. The first entry is the
    /// canonical inverse `B^{-1}`.
    pub fn inverses_of(&self, b: &Subset, l: usize) -> Result<Vec<Subset>> {
        self.check(b)?;
        if !self.left_identities().contains(l) {
            return Err(Error::NotLeftIdentity(l));
        }
        if b.is_empty() {
            return Ok(vec![Subset::empty(self.n)]);
        }
        // one "row" per b: the set of left inverses of b relative to l
        let mut rows: Vec<Subset> = Vec::new();
        for bi in b.iter() {
            let mut row = Subset::empty(self.n);
            for y in 0..self.n {
                if self.op(y, bi) == l {
                    row.insert(y);
                }
            }
            if row.is_empty() {
                return Err(Error::NotLeftInvertible(bi));
            }
            rows.push(row);
        }
        // minimal hitting sets of the row family
        let mut found: BTreeSet<Subset> = BTreeSet::new();
        let mut chosen = Subset::empty(self.n);
        hit(&rows, &mut chosen, &mut found);
        // prune non-minimal sets (branching can produce supersets)
        let list: Vec<Subset> = found.iter().cloned().collect();
        let minimal: Vec<Subset> = list
            .iter()
            .filter(|y| {
                !list
                    .iter()
                    .any(|z| z != *y && z.is_subset_of(y))
            })
            .cloned()
            .collect();
        Ok(minimal)
    }

    /// The canonical inverse: lexicographically least minimal inverse set.
    pub fn canonical_inverse(&self, b: &Subset, l: usize) -> Result<Subset> {
        Ok(self.inverses_of(b, l)?.remove(0))
    }

    /// Greedy deterministic right transversal for a left factor subgroup.
    pub fn right_transversal(&self, h: &Subset) -> Result<FactorContext> {
        if !self.is_left_factor_subgroup(h)? {
            return Err(Error::NotLeftFactor);
        }
        let l = self.identity_within(h).expect("group has an identity");
        let mut d = Subset::empty(self.n);
        let mut covered = Subset::empty(self.n);
        for x in 0..self.n {
            if !covered.contains(x) {
                d.insert(x);
                covered.union_in_place(&self.set_times_elem(h, x));
            }
        }
        if h.len() * d.len() != self.n || covered.len() != self.n {
            return Err(Error::NotLeftFactor);
        }
        Ok(FactorContext {
            n: self.n,
            b_script: h.clone(),
            l,
            d_script: d,
        })
    }
}

fn hit(rows: &[Subset], chosen: &mut Subset, out: &mut BTreeSet<Subset>) {
    // pick the first row not yet hit
    let next = rows.iter().find(|r| r.is_disjoint(chosen));
    match next {
        None => {
            out.insert(chosen.clone());
        }
        Some(row) => {
            for y in row.iter() {
                chosen.insert(y);
                hit(rows, chosen, out);
                chosen.remove(y);
            }
        }
    }
}

/// A fixed factorization `S = B_script * D_script` with `1_B = l` a left
/// identity of the carrier.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorContext {
    n: usize,
    b_script: Subset,
    l: usize,
    d_script: Subset,
}

impl FactorContext {
    pub fn carrier_size(&self) -> usize {
        self.n
    }

    /// The fixed left factor subgroup.
    pub fn subgroup(&self) -> &Subset {
        &self.b_script
    }

    /// The identity of the subgroup (a left identity of the carrier).
    pub fn left_identity(&self) -> usize {
        self.l
    }

    /// The fixed right transversal.
    pub fn transversal(&self) -> &Subset {
        &self.d_script
    }
}

/// Table builders for the worked structures.
pub mod builders {
    use super::*;

    /// The cyclic group `(Z_n, +)`.
    pub fn cyclic(n: usize) -> FiniteMagma {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(((x + y) % n) as u32);
            }
        }
        FiniteMagma::new(n, table, None).expect("valid table")
    }

    /// Left-zero semigroup: `x*y = x`.
    pub fn left_zero(n: usize) -> FiniteMagma {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for _ in 0..n {
                table.push(x as u32);
            }
        }
        FiniteMagma::new(n, table, None).expect("valid table")
    }

    /// Right-zero semigroup: `x*y = y`.
    pub fn right_zero(n: usize) -> FiniteMagma {
        let mut table = Vec::with_capacity(n * n);
        for _ in 0..n {
            for y in 0..n {
                table.push(y as u32);
            }
        }
        FiniteMagma::new(n, table, None).expect("valid table")
    }

    /// The monoid of all functions on `k` points under composition
    /// `(f.g)(x) = f(g(x))`, `k <= 4`. Bijections come first (identity at
    /// index 0), then the rest, each block in lexicographic image order.
    pub fn function_monoid(k: usize) -> FiniteMagma {
        assert!((1..=4).contains(&k), "function monoid supported for k <= 4");
        let total = k.pow(k as u32);
        let mut maps: Vec<Vec<usize>> = Vec::with_capacity(total);
        for code in 0..total {
            let mut f = Vec::with_capacity(k);
            let mut c = code;
            for _ in 0..k {
                f.push(c % k);
                c /= k;
            }
            f.reverse(); // images of 0..k in order, lexicographic by code
            maps.push(f);
        }
        let is_bij = |f: &Vec<usize>| {
            let mut seen = vec![false; k];
            f.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        };
        let mut ordered: Vec<Vec<usize>> = maps.iter().filter(|f| is_bij(f)).cloned().collect();
        ordered.extend(maps.iter().filter(|f| !is_bij(f)).cloned());
        // identity = smallest bijection in lex image order, already first
        let index_of = |f: &Vec<usize>| ordered.iter().position(|g| g == f).unwrap();
        let n = ordered.len();
        let mut table = Vec::with_capacity(n * n);
        for f in &ordered {
            for g in &ordered {
                let comp: Vec<usize> = (0..k).map(|x| f[g[x]]).collect();
                table.push(index_of(&comp) as u32);
            }
        }
        let labels = ordered
            .iter()
            .map(|f| f.iter().map(|v| (v + 1).to_string()).collect::<String>())
            .collect();
        FiniteMagma::new(n, table, Some(labels)).expect("valid table")
    }

    /// Dihedral group of order `2n`: rotations `0..n`, reflections `n..2n`.
    pub fn dihedral(n: usize) -> FiniteMagma {
        assert!(n >= 1);
        let size = 2 * n;
        let encode = |refl: bool, i: usize| if refl { n + i } else { i };
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            let (ar, ai) = (a >= n, a % n);
            for b in 0..size {
                let (br, bi) = (b >= n, b % n);
                // rot_i . rot_j = rot_{i+j}; refl_i . rot_j = refl_{i-j};
                // rot_i . refl_j = refl_{i+j}; refl_i . refl_j = rot_{i-j}
                let out = match (ar, br) {
                    (false, false) => encode(false, (ai + bi) % n),
                    (false, true) => encode(true, (ai + bi) % n),
                    (true, false) => encode(true, (ai + n - bi) % n),
                    (true, true) => encode(false, (ai + n - bi) % n),
                };
                table.push(out as u32);
            }
        }
        FiniteMagma::new(size, table, None).expect("valid table")
    }

    /// Direct product with pairs indexed as `x * |Y| + y`.
    pub fn direct_product(x: &FiniteMagma, y: &FiniteMagma) -> FiniteMagma {
        let (nx, ny) = (x.size(), y.size());
        let n = nx * ny;
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            let (ax, ay) = (a / ny, a % ny);
            for b in 0..n {
                let (bx, by) = (b / ny, b % ny);
                table.push((x.op(ax, bx) * ny + y.op(ay, by)) as u32);
            }
        }
        FiniteMagma::new(n, table, None).expect("valid table")
    }

    /// The `L2` fixture: left-zero semigroup on two elements.
    pub fn l2() -> FiniteMagma {
        left_zero(2)
    }

    /// The `M2` fixture: function monoid on two points, elements
    /// `{e, s, c1, c2}` in that order.
    pub fn m2() -> FiniteMagma {
        function_monoid(2)
    }

    /// The `F3` fixture: function monoid on three points (27 elements).
    pub fn f3() -> FiniteMagma {
        function_monoid(3)
    }

    /// Loads a Cayley table file; see [`crate::io`] for the format.
    pub fn from_file(path: &std::path::Path) -> crate::error::Result<FiniteMagma> {
        crate::io::load_magma(path)
    }

    /// The invertible elements of a monoid.
    pub fn units(m: &FiniteMagma) -> Subset {
        let mut u = Subset::empty(m.size());
        if let Some(e) = m.identity() {
            for x in 0..m.size() {
                if (0..m.size()).any(|y| m.op(x, y) == e && m.op(y, x) == e) {
                    u.insert(x);
                }
            }
        }
        u
    }

    /// All groups the builders produce with order at most `max_order`:
    /// cyclic, dihedral, and direct products of two cyclics.
    pub fn builder_groups(max_order: usize) -> Vec<(String, FiniteMagma)> {
        let mut out = Vec::new();
        for n in 1..=max_order {
            out.push((format!("Z_{n}"), cyclic(n)));
        }
        for n in 3..=max_order / 2 {
            out.push((format!("D_{n}"), dihedral(n)));
        }
        for a in 2..=max_order / 2 {
            for b in a..=max_order / a {
                if a * b <= max_order {
                    out.push((format!("Z_{a}xZ_{b}"), direct_product(&cyclic(a), &cyclic(b))));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::builders::*;
    use super::*;

    fn set(n: usize, idx: &[usize]) -> Subset {
        Subset::from_indices(n, idx)
    }

    #[test]
    fn associativity_flags() {
        assert!(cyclic(6).is_associative());
        assert!(l2().is_associative());
        // 0*0=1, 0*1=0, 1*0=0, 1*1=0: (0*0)*0 = 1*0 = 0 but 0*(0*0) = 0*1 = 0;
        // (0*0)*1 = 1*1 = 0 vs 0*(0*1) = 0*0 = 1 breaks it
        let m = FiniteMagma::from_rows(vec![vec![1, 0], vec![0, 0]], None).unwrap();
        assert!(!m.is_associative());
    }

    #[test]
    fn left_identity_sets() {
        assert_eq!(cyclic(6).left_identities(), set(6, &[0]));
        assert!(l2().left_identities().is_empty());
        assert_eq!(m2().left_identities(), set(4, &[0]));
    }

    #[test]
    fn cancellativity() {
        assert!(cyclic(6)
            .is_left_cancellative_over(&set(6, &[1]))
            .unwrap());
        assert!(!l2().is_left_cancellative_over(&set(2, &[0])).unwrap());
        // c1 = index 2 in M2
        assert!(!m2().is_left_cancellative_over(&set(4, &[2])).unwrap());
    }

    #[test]
    fn generated_subsemigroups() {
        let z6 = cyclic(6);
        assert_eq!(
            z6.generate_subsemigroup(&set(6, &[2])).unwrap(),
            set(6, &[0, 2, 4])
        );
        assert_eq!(
            z6.generate_subsemigroup(&set(6, &[1])).unwrap(),
            Subset::full(6)
        );
        // s = swap = index 1: s.s = e
        assert_eq!(
            m2().generate_subsemigroup(&set(4, &[1])).unwrap(),
            set(4, &[0, 1])
        );
        assert_eq!(
            z6.generate_subsemigroup(&Subset::empty(6)),
            Err(Error::EmptyGenerator)
        );
    }

    #[test]
    fn generated_subgroups() {
        let z6 = cyclic(6);
        assert_eq!(z6.generate_subgroup(&set(6, &[2])).unwrap(), set(6, &[0, 2, 4]));
        assert_eq!(m2().generate_subgroup(&set(4, &[1])).unwrap(), set(4, &[0, 1]));
        assert_eq!(m2().generate_subgroup(&set(4, &[2])), Err(Error::NoSubgroup));
    }

    #[test]
    fn inverse_sets() {
        let z6 = cyclic(6);
        assert_eq!(
            z6.inverses_of(&set(6, &[1, 2]), 0).unwrap(),
            vec![set(6, &[4, 5])]
        );
        let z5 = cyclic(5);
        assert_eq!(z5.inverses_of(&set(5, &[0]), 0).unwrap(), vec![set(5, &[0])]);
        assert_eq!(
            m2().inverses_of(&set(4, &[2]), 0),
            Err(Error::NotLeftInvertible(2))
        );
        assert_eq!(
            z6.inverses_of(&set(6, &[1]), 3),
            Err(Error::NotLeftIdentity(3))
        );
    }

    #[test]
    fn inverses_are_minimal_and_left_zero_has_many() {
        // in L2 adjoined with an identity, inverses relative to it can branch
        let m = m2();
        // B = U = {e,s}: unique inverse set {e,s}
        let inv = m.inverses_of(&set(4, &[0, 1]), 0).unwrap();
        assert_eq!(inv, vec![set(4, &[0, 1])]);
        for y in &inv {
            for i in y.iter() {
                let mut smaller = y.clone();
                smaller.remove(i);
                let covers = set(4, &[0, 1])
                    .iter()
                    .all(|b| smaller.iter().any(|yy| m.op(yy, b) == 0));
                assert!(!covers, "returned inverse is not minimal");
            }
        }
    }

    #[test]
    fn left_subgroups_and_factors() {
        let m = m2();
        let u = set(4, &[0, 1]);
        assert!(m.is_left_subgroup(&u).unwrap());
        assert!(!m.is_left_subgroup(&set(4, &[2, 3])).unwrap());
        let z6 = cyclic(6);
        assert!(z6.is_left_subgroup(&set(6, &[0, 3])).unwrap());
        assert!(m.is_left_factor_subgroup(&u).unwrap());
        assert!(z6.is_left_factor_subgroup(&set(6, &[0, 2, 4])).unwrap());
        assert_eq!(
            m.is_left_factor_subgroup(&set(4, &[2, 3])),
            Err(Error::NotLeftSubgroup)
        );
    }

    #[test]
    fn f3_units_are_not_a_factor() {
        let f3 = f3();
        assert_eq!(f3.size(), 27);
        let u = units(&f3);
        assert_eq!(u.len(), 6);
        assert!(f3.is_left_subgroup(&u).unwrap());
        assert!(!f3.is_left_factor_subgroup(&u).unwrap());
    }

    #[test]
    fn transversals_are_greedy_and_direct() {
        let m = m2();
        let ctx = m.right_transversal(&set(4, &[0, 1])).unwrap();
        assert_eq!(ctx.transversal(), &set(4, &[0, 2])); // {e, c1}
        assert_eq!(ctx.left_identity(), 0);
        let z6 = cyclic(6);
        let ctx = z6.right_transversal(&set(6, &[0, 2, 4])).unwrap();
        assert_eq!(ctx.transversal(), &set(6, &[0, 1]));
        let ctx = z6.right_transversal(&Subset::full(6)).unwrap();
        assert_eq!(ctx.transversal(), &set(6, &[0]));
        // every x factors uniquely as beta * d
        for x in 0..6 {
            let count = ctx
                .subgroup()
                .iter()
                .flat_map(|b| ctx.transversal().iter().map(move |d| (b, d)))
                .filter(|&(b, d)| z6.op(b, d) == x)
                .count();
            assert_eq!(count, 1);
        }
    }

    #[test]
    fn dihedral_is_a_group_and_s3_shape() {
        let d3 = dihedral(3);
        assert!(d3.is_associative());
        assert!(d3.is_group());
        assert_eq!(d3.identity(), Some(0));
        // reflections square to the identity
        for r in 3..6 {
            assert_eq!(d3.op(r, r), 0);
        }
        // non-abelian
        assert_ne!(d3.op(1, 3), d3.op(3, 1));
    }

    #[test]
    fn product_builder() {
        let k4 = direct_product(&cyclic(2), &cyclic(2));
        assert!(k4.is_group());
        assert_eq!(k4.size(), 4);
        for x in 0..4 {
            assert_eq!(k4.op(x, x), 0);
        }
    }

    #[test]
    fn wide_carrier_function_monoid() {
        // 256 elements: subsets spill past one word
        let f4 = function_monoid(4);
        assert_eq!(f4.size(), 256);
        assert!(f4.is_associative());
        assert_eq!(f4.identity(), Some(0));
        let u = units(&f4);
        assert_eq!(u.len(), 24);
        assert!(f4.is_left_subgroup(&u).unwrap());
        // 24 does not divide 256, so U cannot be a left factor
        assert!(!f4.is_left_factor_subgroup(&u).unwrap());
        // the four constant maps absorb composition on the right and form a
        // left ideal
        let consts: Vec<usize> = (0..256)
            .filter(|&i| (0..256).all(|g| f4.op(i, g) == i))
            .collect();
        let consts = Subset::from_indices(256, &consts);
        assert_eq!(consts.len(), 4);
        let ideal = f4.product(&Subset::full(256), &consts);
        assert_eq!(ideal, consts);
    }
}
