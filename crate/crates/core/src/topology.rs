//! Alexandrov topologies of upper-periodic and periodic subsets,
//! materialized through their specialization preorder.
//!
//! Opens are never listed beyond the counting threshold; the reach matrix
//! (minimal neighborhoods) is the canonical representation.

use crate::error::{Error, Result};
use crate::magma::FiniteMagma;
use crate::subset::Subset;
use num::BigUint;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum TopologyKind {
    UpperPeriodic,
    Periodic,
}

/// A finite Alexandrov topology: `reach[y]` is the minimal neighborhood of
/// `y`, and a set is open iff it contains the neighborhood of each of its
/// points.
#[derive(Debug, Clone)]
pub struct AlexandrovTopology {
    carrier: FiniteMagma,
    b: Subset,
    kind: TopologyKind,
    reach: Vec<Subset>,
}

/// Builds the topology of left upper B-periodic (or left B-periodic) sets.
///
/// Upper kind: minimal neighborhoods are `N(y) = <B>^1 y`; requires an
/// associative carrier. Periodic kind: requires left B-cancellativity and a
/// nonempty `B` (each `b` then acts as a permutation and the opens are
/// exactly the unions of orbits of the generated permutation group).
pub fn build_topology(
    x: &FiniteMagma,
    b: &Subset,
    kind: TopologyKind,
) -> Result<AlexandrovTopology> {
    if !x.is_associative() {
        return Err(Error::NotAssociative);
    }
    let n = x.size();
    let reach = match kind {
        TopologyKind::UpperPeriodic => {
            let gen = if b.is_empty() {
                Subset::empty(n)
            } else {
                x.closure(b)
            };
            (0..n)
                .map(|y| {
                    let mut nb = x.set_times_elem(&gen, y);
                    nb.insert(y);
                    nb
                })
                .collect()
        }
        TopologyKind::Periodic => {
            if b.is_empty() {
                return Err(Error::NotATopology {
                    kind: "periodic",
                    reason: "the only ∅-periodic set is ∅, so the carrier is not open".into(),
                });
            }
            if !x.is_left_cancellative_over(b)? {
                return Err(Error::NotATopology {
                    kind: "periodic",
                    reason: "carrier is not left B-cancellative".into(),
                });
            }
            // each b acts as a permutation; N(y) = orbit of y under the
            // generated permutation group (forward and backward closure)
            (0..n)
                .map(|y| {
                    let mut orbit = Subset::singleton(n, y);
                    loop {
                        let mut next = orbit.clone();
                        for bi in b.iter() {
                            for z in orbit.iter() {
                                next.insert(x.op(bi, z));
                            }
                            for z in 0..n {
                                if orbit.contains(x.op(bi, z)) {
                                    next.insert(z);
                                }
                            }
                        }
                        if next == orbit {
                            return orbit;
                        }
                        orbit = next;
                    }
                })
                .collect()
        }
    };
    Ok(AlexandrovTopology {
        carrier: x.clone(),
        b: b.clone(),
        kind,
        reach,
    })
}

/// The two readings of the transfer hypothesis in the periodic-topology
/// theorem, evaluated exhaustively over all periodic sets (which under
/// cancellativity are the orbit unions, so no `2^n` scan is needed).
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PeriodicConditions {
    pub left_cancellative: bool,
    /// `BA = A` implies `bA = A` for every `b in B`.
    pub transfer_ba_eq_a: bool,
    /// `BA = A` implies `bA = B` for every `b in B` (the literal text).
    pub transfer_ba_eq_b: bool,
}

pub fn periodic_conditions(x: &FiniteMagma, b: &Subset) -> Result<PeriodicConditions> {
    let left_cancellative = x.is_left_cancellative_over(b)?;
    let periodic_sets: Vec<Subset> = if left_cancellative && !b.is_empty() {
        let topo = build_topology(x, b, TopologyKind::Periodic)?;
        // orbit unions; enumerating classes keeps this polynomial
        let mut classes: Vec<Subset> = Vec::new();
        for y in 0..x.size() {
            if !classes.iter().any(|c| c.contains(y)) {
                classes.push(topo.reach[y].clone());
            }
        }
        let mut sets = Vec::new();
        if classes.len() <= 20 {
            for mask in 0u64..(1 << classes.len()) {
                let mut s = Subset::empty(x.size());
                for (k, c) in classes.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        s.union_in_place(c);
                    }
                }
                sets.push(s);
            }
        }
        sets
    } else if x.size() <= 16 {
        Subset::all(x.size())
            .filter(|a| x.product(b, a) == *a)
            .collect()
    } else {
        return Err(Error::ScopeExceeded {
            n: x.size(),
            cap: 16,
        });
    };
    let mut ba_eq_a = true;
    let mut ba_eq_b = true;
    for a in &periodic_sets {
        for bi in b.iter() {
            let shifted = {
                let mut s = Subset::empty(x.size());
                for z in a.iter() {
                    s.insert(x.op(bi, z));
                }
                s
            };
            if shifted != *a {
                ba_eq_a = false;
            }
            if shifted != *b {
                ba_eq_b = false;
            }
        }
    }
    Ok(PeriodicConditions {
        left_cancellative,
        transfer_ba_eq_a: ba_eq_a,
        transfer_ba_eq_b: ba_eq_b,
    })
}

impl AlexandrovTopology {
    pub fn kind(&self) -> TopologyKind {
        self.kind
    }

    pub fn b(&self) -> &Subset {
        &self.b
    }

    pub fn carrier(&self) -> &FiniteMagma {
        &self.carrier
    }

    /// Minimal neighborhood of `y`.
    pub fn neighborhood(&self, y: usize) -> &Subset {
        &self.reach[y]
    }

    /// Openness by the direct periodicity test; the preorder
    /// characterization is computed alongside and must agree.
    pub fn is_open(&self, a: &Subset) -> bool {
        let direct = match self.kind {
            TopologyKind::UpperPeriodic => self.carrier.product(&self.b, a).is_subset_of(a),
            TopologyKind::Periodic => self.carrier.product(&self.b, a) == *a,
        };
        let by_preorder = a.iter().all(|y| self.reach[y].is_subset_of(a));
        debug_assert_eq!(direct, by_preorder, "preorder disagrees with the predicate");
        direct
    }

    /// Exact number of open sets via the condensation poset.
    pub fn count_opens(&self) -> Result<BigUint> {
        count_downsets(&self.reach, &Subset::full(self.carrier.size()))
    }

    /// GraphViz DOT rendering of the specialization preorder (condensation
    /// classes as nodes, covering edges only).
    pub fn to_dot(&self) -> String {
        let nodes: Vec<usize> = (0..self.carrier.size()).collect();
        let (classes, dag) = condense(&self.reach, &nodes);
        let mut out = String::from("digraph preorder {\n  rankdir=BT;\n");
        for (i, c) in classes.iter().enumerate() {
            let members: Vec<String> = c.iter().map(|e| self.carrier.label(e)).collect();
            out.push_str(&format!("  c{i} [label=\"{{{}}}\"];\n", members.join(",")));
        }
        // covering edges: i -> j when class i is below class j with nothing
        // strictly between
        let below = |i: usize, j: usize| i != j && dag[j] >> i & 1 == 1;
        for j in 0..classes.len() {
            for i in 0..classes.len() {
                if below(i, j) {
                    let covered = (0..classes.len())
                        .any(|k| k != i && k != j && below(i, k) && below(k, j));
                    if !covered {
                        out.push_str(&format!("  c{i} -> c{j};\n"));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Condenses the reach preorder restricted to `nodes` into classes of
/// mutually reachable elements. Returns the classes and, per class, the
/// bitmask of classes reachable below it (including itself).
fn condense(reach: &[Subset], nodes: &[usize]) -> (Vec<Subset>, Vec<u32>) {
    let n = reach.first().map_or(0, |r| r.parent_size());
    let mut class_of: HashMap<usize, usize> = HashMap::new();
    let mut classes: Vec<Subset> = Vec::new();
    for &y in nodes {
        if class_of.contains_key(&y) {
            continue;
        }
        let mut class = Subset::empty(n);
        for &x in nodes {
            if reach[y].contains(x) && reach[x].contains(y) {
                class.insert(x);
            }
        }
        let id = classes.len();
        for m in class.iter() {
            class_of.insert(m, id);
        }
        classes.push(class);
    }
    let mut dag = vec![0u32; classes.len()];
    for (j, cj) in classes.iter().enumerate() {
        let rep = cj.first().expect("nonempty class");
        for &x in nodes {
            if reach[rep].contains(x) {
                dag[j] |= 1 << class_of[&x];
            }
        }
    }
    (classes, dag)
}

/// Number of down-closed class sets of the condensation poset, which is the
/// number of opens. Classic recurrence: fix a class `v`; down-sets avoiding
/// `v` are the down-sets of `P \ up(v)`, down-sets containing `v` biject
/// with the down-sets of `P \ down(v)`.
fn count_downsets(reach: &[Subset], within: &Subset) -> Result<BigUint> {
    let nodes = within.indices();
    let (classes, dag) = condense(reach, &nodes);
    let k = classes.len();
    if k > 24 {
        return Err(Error::TooLarge {
            classes: k,
            max: 24,
        });
    }
    // up[i] = classes that reach down to i (i.e. classes j with i <= j)
    let mut up = vec![0u32; k];
    for (j, mask) in dag.iter().enumerate() {
        for (i, slot) in up.iter_mut().enumerate() {
            if mask >> i & 1 == 1 {
                *slot |= 1 << j;
            }
        }
    }
    let full: u32 = if k == 32 { !0 } else { (1u32 << k) - 1 };
    let mut memo: HashMap<u32, BigUint> = HashMap::new();
    fn rec(mask: u32, up: &[u32], down: &[u32], memo: &mut HashMap<u32, BigUint>) -> BigUint {
        if mask == 0 {
            return BigUint::from(1u32);
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let v = mask.trailing_zeros() as usize;
        let without = rec(mask & !up[v], up, down, memo);
        let with = rec(mask & !down[v], up, down, memo);
        let total = without + with;
        memo.insert(mask, total.clone());
        total
    }
    let down: Vec<u32> = dag.clone();
    Ok(rec(full, &up, &down, &mut memo))
}

/// Opens of the upper-periodic topology that lie inside `top` (which must
/// itself be upper periodic, e.g. an upper kernel): counted on the
/// restricted preorder.
pub fn count_opens_within(x: &FiniteMagma, b: &Subset, top: &Subset) -> Result<BigUint> {
    let t = build_topology(x, b, TopologyKind::UpperPeriodic)?;
    count_downsets(&t.reach, top)
}

/// Report for the upper periodic topology on a semigroup: the literal
/// theorem hypotheses (`B` closed, left normal) and the continuity of
/// multiplication.
///
/// Continuity is decided against minimal neighborhoods `N(x) = <B>^1 x`,
/// the right criterion in an Alexandrov space; the basis form `B^1 x` from
/// the theorem's proof is reported alongside, and the two agree whenever
/// `B` is a sub-semigroup.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SemigroupTopologyReport {
    pub b_subsemigroup: bool,
    pub left_normal: bool,
    pub continuous: bool,
    pub basis_continuous: bool,
}

fn minimal_neighborhoods(x: &FiniteMagma, b: &Subset) -> Vec<Subset> {
    let gen = if b.is_empty() {
        Subset::empty(x.size())
    } else {
        x.closure(b)
    };
    (0..x.size())
        .map(|v| {
            let mut s = x.set_times_elem(&gen, v);
            s.insert(v);
            s
        })
        .collect()
}

fn product_continuous(x: &FiniteMagma, nb: &[Subset]) -> bool {
    for v in 0..x.size() {
        for w in 0..x.size() {
            if !x.product(&nb[v], &nb[w]).is_subset_of(&nb[x.op(v, w)]) {
                return false;
            }
        }
    }
    true
}

pub fn is_topological_semigroup(x: &FiniteMagma, b: &Subset) -> Result<SemigroupTopologyReport> {
    if !x.is_associative() {
        return Err(Error::NotAssociative);
    }
    let n = x.size();
    let b_subsemigroup = !b.is_empty() && x.product(b, b).is_subset_of(b);
    let left_normal = (0..n).all(|v| {
        x.elem_times_set(v, b)
            .is_subset_of(&x.set_times_elem(b, v))
    });
    let nb = minimal_neighborhoods(x, b);
    let continuous = product_continuous(x, &nb);
    let basis_nb: Vec<Subset> = (0..n)
        .map(|v| {
            let mut s = x.set_times_elem(b, v);
            s.insert(v);
            s
        })
        .collect();
    let basis_continuous = product_continuous(x, &basis_nb);
    debug_assert!(
        !b_subsemigroup || continuous == basis_continuous,
        "basis and minimal-neighborhood continuity must agree for closed B"
    );
    Ok(SemigroupTopologyReport {
        b_subsemigroup,
        left_normal,
        continuous,
        basis_continuous,
    })
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct GroupTopologyReport {
    /// `B` is a normal subgroup in the literal sense.
    pub normal: bool,
    pub multiplication_continuous: bool,
    pub inversion_continuous: bool,
    pub basis: Vec<Subset>,
    /// Both continuity checks pass: `(G, ., τ)` is a topological group.
    pub topological_group: bool,
}

/// Topological-group test: reports normality of `B`, the two continuity
/// checks against minimal neighborhoods, and the coset basis.
pub fn is_topological_group(g: &FiniteMagma, b: &Subset) -> Result<GroupTopologyReport> {
    if !g.is_group() {
        return Err(Error::NotGroup);
    }
    let n = g.size();
    let subgroup = g.is_group_on(b);
    let normal = subgroup
        && (0..n).all(|v| {
            let vi = g.group_inverse(v).expect("group inverse");
            b.iter().all(|bi| b.contains(g.op(g.op(v, bi), vi)))
        });
    let nb = minimal_neighborhoods(g, b);
    let multiplication_continuous = product_continuous(g, &nb);
    let inversion_continuous = (0..n).all(|v| {
        let mut inv_nb = Subset::empty(n);
        for z in nb[v].iter() {
            inv_nb.insert(g.group_inverse(z).expect("group inverse"));
        }
        let vi = g.group_inverse(v).expect("group inverse");
        inv_nb.is_subset_of(&nb[vi])
    });
    let mut basis: Vec<Subset> = Vec::new();
    for item in &nb {
        if !basis.contains(item) {
            basis.push(item.clone());
        }
    }
    basis.sort();
    let topological_group = multiplication_continuous && inversion_continuous;
    Ok(GroupTopologyReport {
        normal,
        multiplication_continuous,
        inversion_continuous,
        basis,
        topological_group,
    })
}

/// `τ` with `B = X`: opens are the left ideals and the empty set.
pub fn ideal_topology(x: &FiniteMagma) -> Result<AlexandrovTopology> {
    build_topology(x, &Subset::full(x.size()), TopologyKind::UpperPeriodic)
}

/// Direct left-ideal predicate used to cross-check [`ideal_topology`].
pub fn is_left_ideal_or_empty(x: &FiniteMagma, a: &Subset) -> bool {
    x.product(&Subset::full(x.size()), a).is_subset_of(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::builders::*;

    fn set(n: usize, idx: &[usize]) -> Subset {
        Subset::from_indices(n, idx)
    }

    #[test]
    fn neighborhoods_and_counts() {
        let z6 = cyclic(6);
        let t = build_topology(&z6, &set(6, &[2]), TopologyKind::UpperPeriodic).unwrap();
        assert_eq!(t.neighborhood(1), &set(6, &[1, 3, 5]));
        assert_eq!(t.neighborhood(0), &set(6, &[0, 2, 4]));
        assert_eq!(t.count_opens().unwrap(), BigUint::from(4u32));

        let t = build_topology(&z6, &set(6, &[1]), TopologyKind::UpperPeriodic).unwrap();
        for y in 0..6 {
            assert_eq!(t.neighborhood(y), &Subset::full(6));
        }
        assert_eq!(t.count_opens().unwrap(), BigUint::from(2u32));

        let t = build_topology(&z6, &Subset::empty(6), TopologyKind::UpperPeriodic).unwrap();
        for y in 0..6 {
            assert_eq!(t.neighborhood(y), &Subset::singleton(6, y));
        }
        assert_eq!(t.count_opens().unwrap(), BigUint::from(64u32));
    }

    #[test]
    fn openness() {
        let z6 = cyclic(6);
        let t = build_topology(&z6, &set(6, &[2]), TopologyKind::UpperPeriodic).unwrap();
        assert!(t.is_open(&set(6, &[0, 2, 4])));
        assert!(!t.is_open(&set(6, &[0, 1])));
        assert!(t.is_open(&Subset::empty(6)));
        assert!(t.is_open(&Subset::full(6)));
    }

    #[test]
    fn periodic_kind() {
        let z6 = cyclic(6);
        let t = build_topology(&z6, &set(6, &[2]), TopologyKind::Periodic).unwrap();
        // orbits of +2 with inverses: the two cosets of <2>
        assert_eq!(t.neighborhood(0), &set(6, &[0, 2, 4]));
        assert_eq!(t.neighborhood(1), &set(6, &[1, 3, 5]));
        assert!(t.is_open(&set(6, &[0, 2, 4])));
        // in a finite group upper periodicity and periodicity coincide
        let up = build_topology(&z6, &set(6, &[2]), TopologyKind::UpperPeriodic).unwrap();
        for a in Subset::all(6) {
            assert_eq!(t.is_open(&a), up.is_open(&a));
        }
        assert!(matches!(
            build_topology(&l2(), &set(2, &[0]), TopologyKind::Periodic),
            Err(Error::NotATopology { .. })
        ));
    }

    #[test]
    fn conditions_report() {
        let z6 = cyclic(6);
        let c = periodic_conditions(&z6, &set(6, &[2])).unwrap();
        assert!(c.left_cancellative);
        assert!(c.transfer_ba_eq_a);
        assert!(!c.transfer_ba_eq_b);
    }

    #[test]
    fn semigroup_and_group_reports() {
        let z6 = cyclic(6);
        let r = is_topological_semigroup(&z6, &set(6, &[0, 2, 4])).unwrap();
        assert!(r.b_subsemigroup && r.left_normal && r.continuous && r.basis_continuous);
        let g = is_topological_group(&z6, &set(6, &[0, 2, 4])).unwrap();
        assert!(g.normal && g.topological_group);
        assert_eq!(g.basis.len(), 2);

        // B = {2} generates the same topology; the basis form B^1 x is not a
        // neighborhood system but the topology is still a topological group
        let r = is_topological_semigroup(&z6, &set(6, &[2])).unwrap();
        assert!(!r.b_subsemigroup && r.left_normal && r.continuous);
        let g = is_topological_group(&z6, &set(6, &[2])).unwrap();
        assert!(g.topological_group && !g.normal);
        assert_eq!(g.basis.len(), 2);

        let s3 = dihedral(3);
        // {e, reflection} = {0, 3}
        let r = is_topological_semigroup(&s3, &set(6, &[0, 3])).unwrap();
        assert!(!r.continuous && !r.basis_continuous && !r.left_normal);
        let g = is_topological_group(&s3, &set(6, &[0, 3])).unwrap();
        assert!(!g.normal && !g.topological_group);

        // B = {identity}: discrete-like, everything continuous
        let r = is_topological_semigroup(&z6, &set(6, &[0])).unwrap();
        assert!(r.b_subsemigroup && r.left_normal && r.continuous);
        let g = is_topological_group(&z6, &set(6, &[0])).unwrap();
        assert!(g.normal && g.topological_group);
        assert_eq!(g.basis.len(), 6);
    }

    #[test]
    fn ideal_topologies() {
        let l2 = l2();
        let t = ideal_topology(&l2).unwrap();
        let opens: Vec<Subset> = Subset::all(2).filter(|a| t.is_open(a)).collect();
        assert_eq!(opens, vec![Subset::empty(2), Subset::full(2)]);

        let z6 = cyclic(6);
        let t = ideal_topology(&z6).unwrap();
        assert_eq!(t.count_opens().unwrap(), BigUint::from(2u32));

        let m = m2();
        let t = ideal_topology(&m);
        let t = t.unwrap();
        assert!(t.is_open(&set(4, &[2, 3])));
        for a in Subset::all(4) {
            assert_eq!(t.is_open(&a), is_left_ideal_or_empty(&m, &a));
        }
    }

    #[test]
    fn dot_export() {
        let z6 = cyclic(6);
        let t = build_topology(&z6, &set(6, &[2]), TopologyKind::UpperPeriodic).unwrap();
        let dot = t.to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("c0"));
    }
}
