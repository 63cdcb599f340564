//! Cayley-table magmas and the band-theoretic predicates built on them:
//! associativity, idempotence, Green's relations, the natural orders,
//! and the semilattice quotient by the D-relation.

use std::fmt;

use crate::partition::{Partition, UnionFind};

/// An `n x n` operation table over the carrier `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    table: Vec<usize>,
}

impl CayleyTable {
    pub fn new(n: usize, table: Vec<usize>) -> Result<CayleyTable, TableError> {
        if n == 0 {
            return Err(TableError::EmptyCarrier);
        }
        if table.len() != n * n {
            return Err(TableError::WrongLength {
                expected: n * n,
                got: table.len(),
            });
        }
        if let Some(&v) = table.iter().find(|&&v| v >= n) {
            return Err(TableError::EntryOutOfRange { entry: v, n });
        }
        Ok(CayleyTable { n, table })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<CayleyTable, TableError> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(TableError::WrongLength {
                    expected: n,
                    got: row.len(),
                });
            }
            table.extend_from_slice(row);
        }
        CayleyTable::new(n, table)
    }

    /// Build from a closure, e.g. `CayleyTable::from_fn(5, |x, _| x)`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> CayleyTable {
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(f(x, y));
            }
        }
        CayleyTable::new(n, table).expect("generator produced out-of-range entry")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn entries(&self) -> &[usize] {
        &self.table
    }

    pub fn left_zero(n: usize) -> CayleyTable {
        CayleyTable::from_fn(n, |x, _| x)
    }

    pub fn right_zero(n: usize) -> CayleyTable {
        CayleyTable::from_fn(n, |_, y| y)
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CayleyTable({}):", self.n)?;
        for x in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|y| self.get(x, y).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    EmptyCarrier,
    WrongLength { expected: usize, got: usize },
    EntryOutOfRange { entry: usize, n: usize },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::EmptyCarrier => write!(f, "carrier must be nonempty"),
            TableError::WrongLength { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            TableError::EntryOutOfRange { entry, n } => {
                write!(f, "entry {entry} out of range 0..{n}")
            }
        }
    }
}

impl std::error::Error for TableError {}

/// First triple violating associativity, if any. Naive scan with early exit.
pub fn associativity_witness(t: &CayleyTable) -> Option<(usize, usize, usize)> {
    let n = t.order();
    for x in 0..n {
        for y in 0..n {
            let xy = t.get(x, y);
            for z in 0..n {
                if t.get(xy, z) != t.get(x, t.get(y, z)) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

pub fn is_associative(t: &CayleyTable) -> bool {
    associativity_witness(t).is_none()
}

pub fn is_idempotent(t: &CayleyTable) -> bool {
    (0..t.order()).all(|x| t.get(x, x) == x)
}

pub fn is_commutative(t: &CayleyTable) -> bool {
    let n = t.order();
    (0..n).all(|x| (x + 1..n).all(|y| t.get(x, y) == t.get(y, x)))
}

/// Naive quadratic test of `xyx = x`; the oracle for the linear-time path.
pub fn satisfies_xyx_eq_x(t: &CayleyTable) -> bool {
    let n = t.order();
    (0..n).all(|x| (0..n).all(|y| t.get(t.get(x, y), x) == x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MagmaFlags {
    pub associative: bool,
    pub idempotent: bool,
    pub commutative: bool,
    pub band: bool,
    pub semilattice: bool,
    pub rectangular: bool,
}

pub fn classify_magma(t: &CayleyTable) -> MagmaFlags {
    let associative = is_associative(t);
    let idempotent = is_idempotent(t);
    let commutative = is_commutative(t);
    let band = associative && idempotent;
    MagmaFlags {
        associative,
        idempotent,
        commutative,
        band,
        semilattice: band && commutative,
        rectangular: band && satisfies_xyx_eq_x(t),
    }
}

/// An `n x n` boolean relation on the carrier.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Relation {
        let mut bits = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                bits.push(f(x, y));
            }
        }
        Relation { n, bits }
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.n + y]
    }

    pub fn subset_of(&self, other: &Relation) -> bool {
        self.bits
            .iter()
            .zip(other.bits.iter())
            .all(|(a, b)| !a || *b)
    }
}

/// Green's L/R/D class partitions plus the natural preorder and partial order.
pub struct GreenData {
    pub l_classes: Partition,
    pub r_classes: Partition,
    pub d_classes: Partition,
    pub preorder: Relation,
    pub partial_order: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotABand {
    pub associative: bool,
    pub idempotent: bool,
}

impl fmt::Display for NotABand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not a band (associative: {}, idempotent: {})",
            self.associative, self.idempotent
        )
    }
}

impl std::error::Error for NotABand {}

fn require_band(t: &CayleyTable) -> Result<(), NotABand> {
    let associative = is_associative(t);
    let idempotent = is_idempotent(t);
    if associative && idempotent {
        Ok(())
    } else {
        Err(NotABand {
            associative,
            idempotent,
        })
    }
}

/// Green's relations and natural orders of a band.
///
/// `x L y` iff `xy = x` and `yx = y`; `x R y` iff `xy = y` and `yx = x`.
/// The preorder is `x <= y` iff `x = xyx`; the partial order additionally
/// demands `x = xy = yx`.
pub fn green_data(t: &CayleyTable) -> Result<GreenData, NotABand> {
    require_band(t)?;
    let n = t.order();
    let mut l = UnionFind::new(n);
    let mut r = UnionFind::new(n);
    for x in 0..n {
        for y in x + 1..n {
            let xy = t.get(x, y);
            let yx = t.get(y, x);
            if xy == x && yx == y {
                l.union(x, y);
            }
            if xy == y && yx == x {
                r.union(x, y);
            }
        }
    }
    let l_classes = l.into_partition();
    let r_classes = r.into_partition();
    let d_classes = l_classes.join(&r_classes);
    let preorder = Relation::from_fn(n, |x, y| t.get(t.get(x, y), x) == x);
    let partial_order = Relation::from_fn(n, |x, y| t.get(x, y) == x && t.get(y, x) == x);
    Ok(GreenData {
        l_classes,
        r_classes,
        d_classes,
        preorder,
        partial_order,
    })
}

/// Quotient of a band by Green's D-relation; always a semilattice.
pub fn d_quotient(t: &CayleyTable) -> Result<CayleyTable, NotABand> {
    let green = green_data(t)?;
    let d = &green.d_classes;
    let k = d.num_blocks();
    let reps: Vec<usize> = d.blocks().iter().map(|b| b[0]).collect();
    let table = CayleyTable::from_fn(k, |i, j| d.class_of(t.get(reps[i], reps[j])));
    let _ = table.order();
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 4-element idempotent magma that is not a semigroup but still
    /// fills a 2x2 matrix in the linear rectangularity scan (0-based here).
    pub(crate) fn spurious_fill_table() -> CayleyTable {
        CayleyTable::from_rows(&[
            vec![0, 1, 0, 0],
            vec![0, 1, 2, 0],
            vec![2, 3, 2, 0],
            vec![0, 0, 0, 3],
        ])
        .unwrap()
    }

    fn meet_table_1x4() -> CayleyTable {
        // all rows equal 0 1 2 3: the right-zero band of order 4
        CayleyTable::from_fn(4, |_, y| y)
    }

    fn join_table_2x2() -> CayleyTable {
        CayleyTable::from_rows(&[
            vec![0, 2, 2, 0],
            vec![3, 1, 1, 3],
            vec![0, 2, 2, 0],
            vec![3, 1, 1, 3],
        ])
        .unwrap()
    }

    fn two_element_semilattice() -> CayleyTable {
        CayleyTable::from_fn(2, |x, y| x.min(y))
    }

    #[test]
    fn table_validation() {
        assert!(CayleyTable::new(0, vec![]).is_err());
        assert!(CayleyTable::new(2, vec![0, 1, 1]).is_err());
        assert!(CayleyTable::new(2, vec![0, 1, 1, 2]).is_err());
        assert!(CayleyTable::new(1, vec![0]).is_ok());
    }

    #[test]
    fn associativity_counterexample() {
        let t = spurious_fill_table();
        assert_eq!(associativity_witness(&t), Some((0, 1, 2)));
        assert!(!is_associative(&t));
        assert!(is_idempotent(&t));
    }

    #[test]
    fn left_zero_is_associative() {
        for n in [1, 2, 5, 9] {
            assert!(is_associative(&CayleyTable::left_zero(n)));
        }
    }

    #[test]
    fn early_exit_agrees_with_full_scan() {
        // the witness scan is its own oracle: compare against an
        // exhaustive collect over seeded pseudo-random order-5 tables
        let mut seed = 0x9e3779b97f4a7c15u64;
        for _ in 0..50 {
            let mut entries = Vec::with_capacity(25);
            for _ in 0..25 {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                entries.push(((seed >> 33) % 5) as usize);
            }
            let t = CayleyTable::new(5, entries).unwrap();
            let mut all = Vec::new();
            for x in 0..5 {
                for y in 0..5 {
                    for z in 0..5 {
                        if t.get(t.get(x, y), z) != t.get(x, t.get(y, z)) {
                            all.push((x, y, z));
                        }
                    }
                }
            }
            assert_eq!(associativity_witness(&t), all.first().copied());
            assert_eq!(is_associative(&t), all.is_empty());
        }
    }

    #[test]
    fn idempotence_checks() {
        assert!(is_idempotent(&spurious_fill_table()));
        assert!(is_idempotent(&meet_table_1x4()));
        let t = CayleyTable::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(!is_idempotent(&t));
    }

    #[test]
    fn classification_flags() {
        let j = classify_magma(&join_table_2x2());
        assert!(j.band && j.rectangular && !j.semilattice);

        let s = classify_magma(&two_element_semilattice());
        assert!(s.semilattice && !s.rectangular);

        let c = classify_magma(&spurious_fill_table());
        assert!(c.idempotent && !c.associative && !c.band && !c.rectangular);

        let one = classify_magma(&CayleyTable::left_zero(1));
        assert!(one.band && one.semilattice && one.rectangular);
    }

    #[test]
    fn green_classes_of_fixtures() {
        let g = green_data(&join_table_2x2()).unwrap();
        assert_eq!(g.r_classes.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(g.l_classes.blocks(), &[vec![0, 3], vec![1, 2]]);
        assert!(g.d_classes.is_universal());

        let g = green_data(&CayleyTable::left_zero(4)).unwrap();
        assert!(g.l_classes.is_universal());
        assert!(g.r_classes.is_identity());

        let g = green_data(&two_element_semilattice()).unwrap();
        assert!(g.l_classes.is_identity());
        assert!(g.r_classes.is_identity());
        assert!(g.d_classes.is_identity());

        assert!(green_data(&spurious_fill_table()).is_err());
    }

    #[test]
    fn natural_orders_nest() {
        for t in [
            join_table_2x2(),
            meet_table_1x4(),
            two_element_semilattice(),
            CayleyTable::left_zero(5),
        ] {
            let g = green_data(&t).unwrap();
            assert!(g.partial_order.subset_of(&g.preorder));
            // D is the equivalence induced by the preorder
            let n = t.order();
            for x in 0..n {
                for y in 0..n {
                    let both = g.preorder.contains(x, y) && g.preorder.contains(y, x);
                    assert_eq!(both, g.d_classes.same(x, y));
                }
            }
        }
    }

    /// Order-4 band: a 2-element left-zero class sitting above a 2-element
    /// right-zero class that absorbs mixed products.
    pub(crate) fn stacked_band() -> CayleyTable {
        CayleyTable::from_fn(4, |x, y| {
            let upper = |e: usize| e < 2;
            match (upper(x), upper(y)) {
                (true, true) => x,
                (false, false) => y,
                (true, false) => y,
                (false, true) => x,
            }
        })
    }

    #[test]
    fn d_quotient_examples() {
        // rectangular band: one class
        let q = d_quotient(&join_table_2x2()).unwrap();
        assert_eq!(q.order(), 1);

        // semilattice: isomorphic copy of itself
        let s = two_element_semilattice();
        let q = d_quotient(&s).unwrap();
        assert_eq!(q, s);

        // stacked band quotients to the 2-element semilattice
        let t = stacked_band();
        assert!(is_associative(&t), "constructed table must be a band");
        assert!(is_idempotent(&t));
        let q = d_quotient(&t).unwrap();
        assert_eq!(q.order(), 2);
        let flags = classify_magma(&q);
        assert!(flags.semilattice);
        // brute-force the quotient table: class 0 = {0,1}, class 1 = {2,3}
        for x in 0..4 {
            for y in 0..4 {
                let cx = (x >= 2) as usize;
                let cy = (y >= 2) as usize;
                let cxy = (t.get(x, y) >= 2) as usize;
                assert_eq!(q.get(cx, cy), cxy);
            }
        }
    }

    fn table_is_associative(n: usize, t: &[usize]) -> bool {
        for x in 0..n {
            for y in 0..n {
                let xy = t[x * n + y];
                for z in 0..n {
                    if t[xy * n + z] != t[x * n + t[y * n + z]] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Visit every band table of order `n`: the diagonal is fixed by
    /// idempotence and all off-diagonal assignments are enumerated as a
    /// base-n counter, keeping only the associative ones.
    pub(crate) fn for_each_band(n: usize, mut f: impl FnMut(&CayleyTable)) {
        let cells = n * n - n;
        let total = (n as u64).pow(cells as u32);
        let mut table = vec![0usize; n * n];
        for x in 0..n {
            table[x * n + x] = x;
        }
        let mut slots = Vec::with_capacity(cells);
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    slots.push(x * n + y);
                }
            }
        }
        let mut digits = vec![0usize; cells];
        for _ in 0..total {
            if table_is_associative(n, &table) {
                let t = CayleyTable::new(n, table.clone()).unwrap();
                f(&t);
            }
            for (d, &s) in digits.iter_mut().zip(slots.iter()) {
                *d += 1;
                if *d < n {
                    table[s] = *d;
                    break;
                }
                *d = 0;
                table[s] = 0;
            }
        }
    }

    #[test]
    fn exhaustive_small_bands() {
        // Sweep all band tables of order <= 4, checking on every one:
        //   rectangular <=> xyx = x <=> anticommutativity quasi-identity,
        //   and that the D-quotient is a semilattice.
        for n in 1..=4usize {
            let mut bands = 0usize;
            for_each_band(n, |t| {
                bands += 1;
                check_band_equivalences(t, classify_magma(t).rectangular);
            });
            assert!(bands > 0, "no bands of order {n} found");
        }
    }

    fn check_band_equivalences(t: &CayleyTable, rectangular: bool) {
        let n = t.order();
        let xyx = satisfies_xyx_eq_x(t);
        let anticommutative = (0..n)
            .all(|x| (0..n).all(|y| t.get(x, y) != t.get(y, x) || x == y));
        assert_eq!(rectangular, xyx);
        assert_eq!(xyx, anticommutative);
        let q = d_quotient(t).unwrap();
        assert!(classify_magma(&q).semilattice);
    }
}
