//! Congruences of antilattices as compatible cartesian partition pairs,
//! principal-congruence closure, full lattice enumeration, quotients, and
//! the simple / irreducible / elementary / odd predicates.
//!
//! Naming note: the identity congruence is the all-singletons partition and
//! the universal congruence the one-block partition. Some sources write
//! these with the symbols nabla and delta swapped relative to common usage,
//! so symbolic names are avoided throughout.

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};

use crate::antilattice::{Antilattice, Op};
use crate::partition::{Partition, UnionFind};
use crate::rectband::{CartesianPartition, GeneratingMatrix};

/// Order bound above which lattice enumeration refuses to run by default.
pub const DEFAULT_MAX_ORDER: usize = 256;

/// An equivalence relation compatible with both operations, carrying the
/// row/column partitions of each matrix that witness it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub partition: Partition,
    pub m_witness: CartesianPartition,
    pub j_witness: CartesianPartition,
}

impl Congruence {
    pub fn num_classes(&self) -> usize {
        self.partition.num_blocks()
    }

    pub fn is_identity(&self) -> bool {
        self.partition.is_identity()
    }

    pub fn is_universal(&self) -> bool {
        self.partition.is_universal()
    }
}

/// A concrete compatibility failure: `a ~ b` but multiplying by `c` on the
/// given side separates the classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub op: Op,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// True when `c` multiplies from the left (`c*a` vs `c*b`).
    pub from_left: bool,
    pub product_a: usize,
    pub product_b: usize,
}

impl Violation {
    pub fn render(&self, base: usize) -> String {
        let sym = match self.op {
            Op::Meet => "meet",
            Op::Join => "join",
        };
        let (a, b, c) = (self.a + base, self.b + base, self.c + base);
        let (lhs_a, lhs_b) = if self.from_left {
            (format!("{sym}({c},{a})"), format!("{sym}({c},{b})"))
        } else {
            (format!("{sym}({a},{c})"), format!("{sym}({b},{c})"))
        };
        format!(
            "{a} ~ {b} but {lhs_a} = {} and {lhs_b} = {} are not related",
            self.product_a + base,
            self.product_b + base,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CongruenceError {
    NotACongruence(Violation),
    MixedCarrier { left: usize, right: usize },
    OrderGuardExceeded { order: usize, max_order: usize },
}

impl fmt::Display for CongruenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CongruenceError::NotACongruence(v) => {
                write!(f, "not a congruence: {}", v.render(0))
            }
            CongruenceError::MixedCarrier { left, right } => {
                write!(f, "congruences over different carriers ({left} vs {right})")
            }
            CongruenceError::OrderGuardExceeded { order, max_order } => {
                write!(f, "order {order} exceeds the enumeration guard {max_order}")
            }
        }
    }
}

impl std::error::Error for CongruenceError {}

fn find_violation(n: &Antilattice, part: &Partition) -> Option<Violation> {
    let nn = n.order();
    let check = |op: Op, a: usize, b: usize, c: usize| -> Option<Violation> {
        let f = |x, y| match op {
            Op::Meet => n.meet_of(x, y),
            Op::Join => n.join_of(x, y),
        };
        let (pa, pb) = (f(a, c), f(b, c));
        if !part.same(pa, pb) {
            return Some(Violation {
                op,
                a,
                b,
                c,
                from_left: false,
                product_a: pa,
                product_b: pb,
            });
        }
        let (pa, pb) = (f(c, a), f(c, b));
        if !part.same(pa, pb) {
            return Some(Violation {
                op,
                a,
                b,
                c,
                from_left: true,
                product_a: pa,
                product_b: pb,
            });
        }
        None
    };
    for block in part.blocks() {
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                for c in 0..nn {
                    for op in [Op::Meet, Op::Join] {
                        if let Some(v) = check(op, a, b, c) {
                            return Some(v);
                        }
                    }
                }
            }
        }
    }
    None
}

/// A partition is a congruence exactly when it is cartesian in both
/// matrices; the witnesses are returned. On failure the error carries a
/// table-level violation.
pub fn is_congruence(n: &Antilattice, part: &Partition) -> Result<Congruence, CongruenceError> {
    assert_eq!(part.len(), n.order(), "partition carrier mismatch");
    let m_witness = n.meet_matrix().cartesian_witness(part);
    let j_witness = m_witness
        .as_ref()
        .ok()
        .map(|_| n.join_matrix().cartesian_witness(part));
    match (m_witness, j_witness) {
        (Ok(m_witness), Some(Ok(j_witness))) => Ok(Congruence {
            partition: part.clone(),
            m_witness,
            j_witness,
        }),
        _ => {
            let violation =
                find_violation(n, part).expect("non-cartesian partition must violate a table");
            Err(CongruenceError::NotACongruence(violation))
        }
    }
}

/// Smallest congruence relating `a` and `b`.
///
/// Fixpoint coarsening: seed the row/column partitions of both matrices by
/// merging the positions of `a` and `b`, then, while the two induced element
/// partitions disagree, merge the rows/columns of a disagreeing pair in the
/// lagging matrix. Partitions only coarsen, so this terminates.
pub fn principal_congruence(n: &Antilattice, a: usize, b: usize) -> Congruence {
    let m = n.meet_matrix();
    let j = n.join_matrix();
    let (p, q) = (m.rows(), m.cols());
    let (r, s) = (j.rows(), j.cols());
    let nn = n.order();

    let mut rm = UnionFind::new(p);
    let mut cm = UnionFind::new(q);
    let mut rj = UnionFind::new(r);
    let mut cj = UnionFind::new(s);
    rm.union(m.row_of(a), m.row_of(b));
    cm.union(m.col_of(a), m.col_of(b));
    rj.union(j.row_of(a), j.row_of(b));
    cj.union(j.col_of(a), j.col_of(b));

    let mut pm = vec![0usize; nn];
    let mut pj = vec![0usize; nn];
    let mut rep_m = vec![usize::MAX; p * q];
    let mut rep_j = vec![usize::MAX; r * s];
    loop {
        for e in 0..nn {
            pm[e] = rm.find(m.row_of(e)) * q + cm.find(m.col_of(e));
            pj[e] = rj.find(j.row_of(e)) * s + cj.find(j.col_of(e));
        }
        let mut changed = false;
        rep_m.iter_mut().for_each(|x| *x = usize::MAX);
        for e in 0..nn {
            let id = pm[e];
            if rep_m[id] == usize::MAX {
                rep_m[id] = e;
            } else {
                let e0 = rep_m[id];
                if pj[e] != pj[e0] {
                    changed |= rj.union(j.row_of(e), j.row_of(e0));
                    changed |= cj.union(j.col_of(e), j.col_of(e0));
                }
            }
        }
        rep_j.iter_mut().for_each(|x| *x = usize::MAX);
        for e in 0..nn {
            let id = pj[e];
            if rep_j[id] == usize::MAX {
                rep_j[id] = e;
            } else {
                let e0 = rep_j[id];
                if pm[e] != pm[e0] {
                    changed |= rm.union(m.row_of(e), m.row_of(e0));
                    changed |= cm.union(m.col_of(e), m.col_of(e0));
                }
            }
        }
        if !changed {
            break;
        }
    }

    let partition = Partition::from_class_ids(&pm);
    let rows_m: Vec<usize> = (0..p).map(|x| rm.find(x)).collect();
    let cols_m: Vec<usize> = (0..q).map(|x| cm.find(x)).collect();
    let rows_j: Vec<usize> = (0..r).map(|x| rj.find(x)).collect();
    let cols_j: Vec<usize> = (0..s).map(|x| cj.find(x)).collect();
    Congruence {
        m_witness: CartesianPartition {
            rows: Partition::from_class_ids(&rows_m),
            cols: Partition::from_class_ids(&cols_m),
            elements: partition.clone(),
        },
        j_witness: CartesianPartition {
            rows: Partition::from_class_ids(&rows_j),
            cols: Partition::from_class_ids(&cols_j),
            elements: partition.clone(),
        },
        partition,
    }
}

fn check_same_carrier(c1: &Congruence, c2: &Congruence) -> Result<(), CongruenceError> {
    if c1.partition.len() != c2.partition.len() {
        return Err(CongruenceError::MixedCarrier {
            left: c1.partition.len(),
            right: c2.partition.len(),
        });
    }
    Ok(())
}

/// Join: transitive closure of the union. The result is re-validated; the
/// assertion documents that joins of congruences are congruences.
pub fn join(
    n: &Antilattice,
    c1: &Congruence,
    c2: &Congruence,
) -> Result<Congruence, CongruenceError> {
    check_same_carrier(c1, c2)?;
    let joined = c1.partition.join(&c2.partition);
    let c = is_congruence(n, &joined).expect("join of two congruences is a congruence");
    Ok(c)
}

/// Meet: common refinement. Re-validated like `join`.
pub fn meet(
    n: &Antilattice,
    c1: &Congruence,
    c2: &Congruence,
) -> Result<Congruence, CongruenceError> {
    check_same_carrier(c1, c2)?;
    let refined = c1.partition.meet(&c2.partition);
    let c = is_congruence(n, &refined).expect("meet of two congruences is a congruence");
    Ok(c)
}

/// The full congruence lattice, with containment order, Hasse covers, atoms
/// and coatoms. Elements are sorted by (class count, block list).
pub struct CongruenceLattice {
    items: Vec<Congruence>,
    leq: Vec<bool>,
    covers: Vec<(usize, usize)>,
    identity: usize,
    universal: usize,
    atoms: Vec<usize>,
    coatoms: Vec<usize>,
}

impl CongruenceLattice {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn congruences(&self) -> &[Congruence] {
        &self.items
    }

    pub fn get(&self, i: usize) -> &Congruence {
        &self.items[i]
    }

    /// `i <= j` in the lattice order: the partition of `i` refines that of `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.items.len() + j]
    }

    /// Hasse cover pairs `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn universal_index(&self) -> usize {
        self.universal
    }

    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn coatoms(&self) -> &[usize] {
        &self.coatoms
    }

    pub fn find(&self, part: &Partition) -> Option<usize> {
        self.items.iter().position(|c| &c.partition == part)
    }
}

/// Enumerate every congruence: all principal congruences, closed under
/// pairwise join, plus the identity. Every congruence of a finite algebra
/// is a join of principal ones, so this is complete.
pub fn all_congruences(n: &Antilattice) -> Result<CongruenceLattice, CongruenceError> {
    all_congruences_guarded(n, DEFAULT_MAX_ORDER)
}

pub fn all_congruences_guarded(
    n: &Antilattice,
    max_order: usize,
) -> Result<CongruenceLattice, CongruenceError> {
    let nn = n.order();
    if nn > max_order {
        return Err(CongruenceError::OrderGuardExceeded {
            order: nn,
            max_order,
        });
    }

    let identity = is_congruence(n, &Partition::singletons(nn))
        .expect("the identity partition is always a congruence");
    let mut seen: HashSet<Partition> = HashSet::new();
    seen.insert(identity.partition.clone());
    let mut items = vec![identity];
    for a in 0..nn {
        for b in a + 1..nn {
            let c = principal_congruence(n, a, b);
            if seen.insert(c.partition.clone()) {
                items.push(c);
            }
        }
    }
    let mut i = 0;
    while i < items.len() {
        for k in 0..i {
            let joined = items[i].partition.join(&items[k].partition);
            if !seen.contains(&joined) {
                let c = is_congruence(n, &joined)
                    .expect("join of two congruences is a congruence");
                seen.insert(joined);
                items.push(c);
            }
        }
        i += 1;
    }

    items.sort_by(|a, b| {
        (a.num_classes(), a.partition.blocks()).cmp(&(b.num_classes(), b.partition.blocks()))
    });
    let len = items.len();
    let mut leq = vec![false; len * len];
    for i in 0..len {
        for j in 0..len {
            leq[i * len + j] = items[i].partition.refines(&items[j].partition);
        }
    }
    let mut covers = Vec::new();
    for i in 0..len {
        'upper: for j in 0..len {
            if i == j || !leq[i * len + j] {
                continue;
            }
            for k in 0..len {
                if k != i && k != j && leq[i * len + k] && leq[k * len + j] {
                    continue 'upper;
                }
            }
            covers.push((i, j));
        }
    }
    let identity = items
        .iter()
        .position(|c| c.is_identity())
        .expect("identity congruence present");
    let universal = items
        .iter()
        .position(|c| c.is_universal())
        .expect("universal congruence present");
    let atoms: Vec<usize> = covers
        .iter()
        .filter(|&&(lo, _)| lo == identity)
        .map(|&(_, up)| up)
        .collect();
    let coatoms: Vec<usize> = covers
        .iter()
        .filter(|&&(_, up)| up == universal)
        .map(|&(lo, _)| lo)
        .collect();
    Ok(CongruenceLattice {
        items,
        leq,
        covers,
        identity,
        universal,
        atoms,
        coatoms,
    })
}

fn quotient_matrix(
    g: &GeneratingMatrix,
    w: &CartesianPartition,
    part: &Partition,
) -> GeneratingMatrix {
    let rp = w.rows.num_blocks();
    let cq = w.cols.num_blocks();
    let mut cells = vec![0usize; rp * cq];
    for (bi, rb) in w.rows.blocks().iter().enumerate() {
        for (bj, cb) in w.cols.blocks().iter().enumerate() {
            cells[bi * cq + bj] = part.class_of(g.cell(rb[0], cb[0]));
        }
    }
    GeneratingMatrix::new(rp, cq, cells)
        .expect("cartesian blocks biject onto row-block x column-block pairs")
}

/// Quotient antilattice on the classes of `c`; class `k` is the one whose
/// minimum element is the k-th smallest block minimum.
pub fn quotient(n: &Antilattice, c: &Congruence) -> Antilattice {
    debug_assert_eq!(c.partition.len(), n.order());
    let qm = quotient_matrix(n.meet_matrix(), &c.m_witness, &c.partition);
    let qj = quotient_matrix(n.join_matrix(), &c.j_witness, &c.partition);
    Antilattice::new(qm, qj).expect("both quotients cover the class set")
}

/// Simplicity via principal congruences only: every pair must generate the
/// universal congruence. Avoids full lattice enumeration.
pub fn is_simple(n: &Antilattice) -> bool {
    is_simple_with(n, false)
}

pub fn is_simple_with(n: &Antilattice, parallel: bool) -> bool {
    let nn = n.order();
    if nn <= 1 {
        return true;
    }
    if parallel && nn > 100 {
        let stop = AtomicBool::new(false);
        let workers = std::thread::available_parallelism().map_or(4, |w| w.get()).min(nn);
        let simple = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for w in 0..workers {
                let stop = &stop;
                handles.push(scope.spawn(move || {
                    for a in (w..nn).step_by(workers) {
                        if stop.load(Ordering::Relaxed) {
                            return true;
                        }
                        for b in a + 1..nn {
                            if !principal_congruence(n, a, b).is_universal() {
                                stop.store(true, Ordering::Relaxed);
                                return false;
                            }
                        }
                    }
                    true
                }));
            }
            handles.into_iter().all(|h| h.join().expect("worker panicked"))
        });
        return simple;
    }
    for a in 0..nn {
        for b in a + 1..nn {
            if !principal_congruence(n, a, b).is_universal() {
                return false;
            }
        }
    }
    true
}

/// Reducibility witness: two congruences whose meet is the identity and
/// whose classes pairwise intersect (so their relational composition is
/// universal and the factor map is an isomorphism onto the product).
pub fn is_irreducible(n: &Antilattice) -> Result<bool, CongruenceError> {
    is_irreducible_guarded(n, DEFAULT_MAX_ORDER)
}

pub fn is_irreducible_guarded(
    n: &Antilattice,
    max_order: usize,
) -> Result<bool, CongruenceError> {
    let lat = all_congruences_guarded(n, max_order)?;
    let len = lat.len();
    for i in 0..len {
        if lat.get(i).is_universal() {
            continue;
        }
        for k in i + 1..len {
            if lat.get(k).is_universal() {
                continue;
            }
            let (pi, pk) = (&lat.get(i).partition, &lat.get(k).partition);
            if pi.meet(pk).is_identity() && all_class_pairs_meet(pi, pk) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn all_class_pairs_meet(p1: &Partition, p2: &Partition) -> bool {
    let (k1, k2) = (p1.num_blocks(), p2.num_blocks());
    let mut hit = vec![false; k1 * k2];
    let mut count = 0usize;
    for e in 0..p1.len() {
        let id = p1.class_of(e) * k2 + p2.class_of(e);
        if !hit[id] {
            hit[id] = true;
            count += 1;
        }
    }
    count == k1 * k2
}

/// Closure of `seed` under both operations; returns the sorted member list.
pub fn generated_subalgebra(n: &Antilattice, seed: &[usize]) -> Vec<usize> {
    let nn = n.order();
    assert!(!seed.is_empty(), "seed must be nonempty");
    let mut in_set = vec![false; nn];
    let mut members = Vec::new();
    for &e in seed {
        if !in_set[e] {
            in_set[e] = true;
            members.push(e);
        }
    }
    let mut i = 0;
    while i < members.len() && members.len() < nn {
        let x = members[i];
        for k in 0..=i {
            let y = members[k];
            for v in [
                n.meet_of(x, y),
                n.meet_of(y, x),
                n.join_of(x, y),
                n.join_of(y, x),
            ] {
                if !in_set[v] {
                    in_set[v] = true;
                    members.push(v);
                }
            }
        }
        i += 1;
    }
    if members.len() == nn {
        return (0..nn).collect();
    }
    members.sort_unstable();
    members
}

/// No proper nontrivial subalgebra: every pair generates the whole carrier.
pub fn is_elementary(n: &Antilattice) -> bool {
    let nn = n.order();
    for a in 0..nn {
        for b in a + 1..nn {
            if generated_subalgebra(n, &[a, b]).len() != nn {
                return false;
            }
        }
    }
    true
}

/// No two-element subalgebra, proper or improper: no pair of elements is
/// collinear (same row or same column) in both matrices.
pub fn is_odd(n: &Antilattice) -> bool {
    let m = n.meet_matrix();
    let j = n.join_matrix();
    let nn = n.order();
    for a in 0..nn {
        for b in a + 1..nn {
            let in_m = m.row_of(a) == m.row_of(b) || m.col_of(a) == m.col_of(b);
            if !in_m {
                continue;
            }
            let in_j = j.row_of(a) == j.row_of(b) || j.col_of(a) == j.col_of(b);
            if in_j {
                return false;
            }
        }
    }
    true
}

/// Class count and class sizes of a congruence.
pub fn class_profile(c: &Congruence) -> (usize, Vec<usize>) {
    (c.num_classes(), c.partition.block_sizes())
}
