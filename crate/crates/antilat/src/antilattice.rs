//! Antilattices: double bands whose two reducts are rectangular bands,
//! represented by a compatible pair of generating matrices (meet, join).

use std::fmt;

use itertools::Itertools;

use crate::congruence;
use crate::magma::{associativity_witness, is_idempotent, CayleyTable};
use crate::partition::Partition;
use crate::rectband::{extract_generating_matrix, GeneratingMatrix, NotRectangular};

/// A pair of generating matrices over the same carrier `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Antilattice {
    meet: GeneratingMatrix,
    join: GeneratingMatrix,
}

impl Antilattice {
    pub fn new(meet: GeneratingMatrix, join: GeneratingMatrix) -> Result<Antilattice, Incompatible> {
        if meet.len() != join.len() {
            return Err(Incompatible {
                meet_len: meet.len(),
                join_len: join.len(),
            });
        }
        Ok(Antilattice { meet, join })
    }

    pub fn order(&self) -> usize {
        self.meet.len()
    }

    pub fn meet_matrix(&self) -> &GeneratingMatrix {
        &self.meet
    }

    pub fn join_matrix(&self) -> &GeneratingMatrix {
        &self.join
    }

    #[inline]
    pub fn meet_of(&self, x: usize, y: usize) -> usize {
        self.meet.product(x, y)
    }

    #[inline]
    pub fn join_of(&self, x: usize, y: usize) -> usize {
        self.join.product(x, y)
    }

    pub fn trivial() -> Antilattice {
        Antilattice::new(GeneratingMatrix::normal(1, 1), GeneratingMatrix::normal(1, 1)).unwrap()
    }
}

impl fmt::Debug for Antilattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Antilattice(M = {:?}, J = {:?})", self.meet, self.join)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Incompatible {
    pub meet_len: usize,
    pub join_len: usize,
}

impl fmt::Display for Incompatible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matrices cover different carriers ({} vs {})",
            self.meet_len, self.join_len
        )
    }
}

impl std::error::Error for Incompatible {}

/// Which of the two operations a validation error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Meet,
    Join,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Meet => write!(f, "meet"),
            Op::Join => write!(f, "join"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductError {
    SizeMismatch { meet: usize, join: usize },
    NotABand { op: Op, associative: bool, idempotent: bool },
    NotRectangular { op: Op, cause: NotRectangular },
}

impl fmt::Display for ReductError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductError::SizeMismatch { meet, join } => {
                write!(f, "tables have different orders ({meet} vs {join})")
            }
            ReductError::NotABand {
                op,
                associative,
                idempotent,
            } => write!(
                f,
                "{op} reduct is not a band (associative: {associative}, idempotent: {idempotent})"
            ),
            ReductError::NotRectangular { op, cause } => {
                write!(f, "{op} reduct is not rectangular: {cause}")
            }
        }
    }
}

impl std::error::Error for ReductError {}

fn validated_matrix(t: &CayleyTable, op: Op) -> Result<GeneratingMatrix, ReductError> {
    let associative = associativity_witness(t).is_none();
    let idempotent = is_idempotent(t);
    if !associative || !idempotent {
        return Err(ReductError::NotABand {
            op,
            associative,
            idempotent,
        });
    }
    extract_generating_matrix(t).map_err(|cause| ReductError::NotRectangular { op, cause })
}

/// Validate both tables as rectangular bands and extract the matrix pair.
pub fn antilattice_from_tables(
    meet: &CayleyTable,
    join: &CayleyTable,
) -> Result<Antilattice, ReductError> {
    if meet.order() != join.order() {
        return Err(ReductError::SizeMismatch {
            meet: meet.order(),
            join: join.order(),
        });
    }
    let m = validated_matrix(meet, Op::Meet)?;
    let j = validated_matrix(join, Op::Join)?;
    Ok(Antilattice::new(m, j).expect("orders already checked"))
}

/// Expand back to the two Cayley tables.
pub fn tables_from_antilattice(n: &Antilattice) -> (CayleyTable, CayleyTable) {
    (n.meet_matrix().to_table(), n.join_matrix().to_table())
}

/// The two absorption laws `x ^ (y v x v y) ^ x = x` and dually, over a pair
/// of band tables.
pub fn is_quasilattice(meet: &CayleyTable, join: &CayleyTable) -> Result<bool, ReductError> {
    if meet.order() != join.order() {
        return Err(ReductError::SizeMismatch {
            meet: meet.order(),
            join: join.order(),
        });
    }
    for (t, op) in [(meet, Op::Meet), (join, Op::Join)] {
        let associative = associativity_witness(t).is_none();
        let idempotent = is_idempotent(t);
        if !associative || !idempotent {
            return Err(ReductError::NotABand {
                op,
                associative,
                idempotent,
            });
        }
    }
    let n = meet.order();
    for x in 0..n {
        for y in 0..n {
            let w = join.get(join.get(y, x), y);
            if meet.get(meet.get(x, w), x) != x {
                return Ok(false);
            }
            let w = meet.get(meet.get(y, x), y);
            if join.get(join.get(x, w), x) != x {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Shape invariant `(p, q, r, s)` of the matrix pair plus the derived
/// square/flat classification. `semisquare`/`semiflat` mean exactly one
/// reduct has the property; the per-reduct flags keep the weaker "at least
/// one" reading recoverable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AntilatticeType {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub meet_square: bool,
    pub join_square: bool,
    pub meet_flat: bool,
    pub join_flat: bool,
    pub square: bool,
    pub semisquare: bool,
    pub flat: bool,
    pub semiflat: bool,
}

impl AntilatticeType {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.p, self.q, self.r, self.s)
    }
}

pub fn type_of(n: &Antilattice) -> AntilatticeType {
    let (p, q) = (n.meet_matrix().rows(), n.meet_matrix().cols());
    let (r, s) = (n.join_matrix().rows(), n.join_matrix().cols());
    let meet_square = p == q;
    let join_square = r == s;
    let meet_flat = p == 1 || q == 1;
    let join_flat = r == 1 || s == 1;
    AntilatticeType {
        p,
        q,
        r,
        s,
        meet_square,
        join_square,
        meet_flat,
        join_flat,
        square: meet_square && join_square,
        semisquare: meet_square != join_square,
        flat: meet_flat && join_flat,
        semiflat: meet_flat != join_flat,
    }
}

/// Relabel so that the meet matrix is in normal form; the join matrix is
/// carried along by the same bijection. The result is isomorphic to the
/// input.
pub fn normalize(n: &Antilattice) -> Antilattice {
    let (m, relabel) = n.meet_matrix().normal_form();
    let j = n.join_matrix().relabeled(&relabel);
    Antilattice::new(m, j).expect("relabeling preserves the carrier")
}

/// Direct product; element `(a, b)` is encoded as `a * |other| + b`.
pub fn product(n: &Antilattice, other: &Antilattice) -> Antilattice {
    Antilattice::new(
        n.meet_matrix().kronecker(other.meet_matrix()),
        n.join_matrix().kronecker(other.join_matrix()),
    )
    .expect("kronecker preserves compatibility")
}

/// Whether each of the four Green relations (rows/columns of each matrix)
/// is a congruence of the whole antilattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityReport {
    /// Columns of the meet matrix (the L-relation of the meet reduct).
    pub l_meet: bool,
    /// Rows of the meet matrix (the R-relation of the meet reduct).
    pub r_meet: bool,
    /// Columns of the join matrix.
    pub l_join: bool,
    /// Rows of the join matrix.
    pub r_join: bool,
    pub regular: bool,
}

fn rows_partition(g: &GeneratingMatrix) -> Partition {
    let ids: Vec<usize> = (0..g.len()).map(|e| g.row_of(e)).collect();
    Partition::from_class_ids(&ids)
}

fn cols_partition(g: &GeneratingMatrix) -> Partition {
    let ids: Vec<usize> = (0..g.len()).map(|e| g.col_of(e)).collect();
    Partition::from_class_ids(&ids)
}

pub fn regularity(n: &Antilattice) -> RegularityReport {
    let l_meet = congruence::is_congruence(n, &cols_partition(n.meet_matrix())).is_ok();
    let r_meet = congruence::is_congruence(n, &rows_partition(n.meet_matrix())).is_ok();
    let l_join = congruence::is_congruence(n, &cols_partition(n.join_matrix())).is_ok();
    let r_join = congruence::is_congruence(n, &rows_partition(n.join_matrix())).is_ok();
    RegularityReport {
        l_meet,
        r_meet,
        l_join,
        r_join,
        regular: l_meet && r_meet && l_join && r_join,
    }
}

fn divisor_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).filter(|d| n % d == 0).map(|d| (d, n / d)).collect()
}

/// Visit every antilattice of order `n` up to isomorphism, possibly with
/// repetition: the meet matrix is fixed in normal form over each shape and
/// the join matrix ranges over all shapes and arrangements.
pub fn for_each_antilattice(n: usize, mut f: impl FnMut(&Antilattice)) {
    for (p, q) in divisor_pairs(n) {
        let meet = GeneratingMatrix::normal(p, q);
        for (r, s) in divisor_pairs(n) {
            for cells in (0..n).permutations(n) {
                let join = GeneratingMatrix::new(r, s, cells).expect("permutation entries");
                let a = Antilattice::new(meet.clone(), join).expect("same carrier");
                f(&a);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::{classify_magma, satisfies_xyx_eq_x};

    pub(crate) fn example_1422() -> Antilattice {
        Antilattice::new(
            GeneratingMatrix::normal(1, 4),
            GeneratingMatrix::from_rows(&[vec![0, 2], vec![3, 1]]).unwrap(),
        )
        .unwrap()
    }

    fn meet_table_1x4() -> CayleyTable {
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

    #[test]
    fn from_tables_extracts_both_matrices() {
        let a = antilattice_from_tables(&meet_table_1x4(), &join_table_2x2()).unwrap();
        assert_eq!(a.meet_matrix().row_slice(0), &[0, 1, 2, 3]);
        assert_eq!(a.join_matrix().row_slice(0), &[0, 2]);
        assert_eq!(a.join_matrix().row_slice(1), &[3, 1]);
        assert_eq!(a, example_1422());
    }

    #[test]
    fn from_tables_rejects_bad_reducts() {
        let one = CayleyTable::left_zero(1);
        let triv = antilattice_from_tables(&one, &one).unwrap();
        assert_eq!(triv.order(), 1);

        let semilattice = CayleyTable::from_fn(2, |x, y| x.min(y));
        let lz = CayleyTable::left_zero(2);
        match antilattice_from_tables(&semilattice, &lz) {
            Err(ReductError::NotRectangular { op: Op::Meet, .. }) => {}
            other => panic!("expected meet rejection, got {other:?}"),
        }
    }

    #[test]
    fn tables_round_trip() {
        let a = example_1422();
        let (m, j) = tables_from_antilattice(&a);
        assert_eq!(m, meet_table_1x4());
        assert_eq!(j, join_table_2x2());
        let b = antilattice_from_tables(&m, &j).unwrap();
        assert_eq!(a, b);

        let t = Antilattice::trivial();
        let (m, j) = tables_from_antilattice(&t);
        assert_eq!(m.order(), 1);
        assert_eq!(j.order(), 1);

        // generated tables are rectangular by the naive oracle
        for t in [&m, &j] {
            assert!(satisfies_xyx_eq_x(t));
        }
    }

    #[test]
    fn quasilattice_law() {
        let (m, j) = tables_from_antilattice(&example_1422());
        assert_eq!(is_quasilattice(&m, &j), Ok(true));

        // a two-element chain lattice satisfies absorption
        let meet = CayleyTable::from_fn(2, |x, y| x.min(y));
        let join = CayleyTable::from_fn(2, |x, y| x.max(y));
        assert_eq!(is_quasilattice(&meet, &join), Ok(true));

        // left-zero meet with a semilattice join violates the second law;
        // the exhaustive pair loop here is the oracle
        let meet = CayleyTable::left_zero(2);
        let join = CayleyTable::from_fn(2, |x, y| x.min(y));
        let mut oracle = true;
        for x in 0..2 {
            for y in 0..2 {
                let w = join.get(join.get(y, x), y);
                oracle &= meet.get(meet.get(x, w), x) == x;
                let w = meet.get(meet.get(y, x), y);
                oracle &= join.get(join.get(x, w), x) == x;
            }
        }
        assert!(!oracle);
        assert_eq!(is_quasilattice(&meet, &join), Ok(false));

        // non-band input is rejected
        let bad = CayleyTable::from_rows(&[
            vec![0, 1, 0, 0],
            vec![0, 1, 2, 0],
            vec![2, 3, 2, 0],
            vec![0, 0, 0, 3],
        ])
        .unwrap();
        assert!(is_quasilattice(&bad, &bad).is_err());
    }

    #[test]
    fn type_classification() {
        let t = type_of(&example_1422());
        assert_eq!(t.as_tuple(), (1, 4, 2, 2));
        assert!(t.semiflat && t.semisquare);
        assert!(!t.square && !t.flat);

        // both reducts left-zero of order 5: flat, prime order
        let a = Antilattice::new(GeneratingMatrix::normal(5, 1), GeneratingMatrix::normal(5, 1))
            .unwrap();
        let t = type_of(&a);
        assert_eq!(t.as_tuple(), (5, 1, 5, 1));
        assert!(t.flat && !t.semiflat && !t.square);

        let t = type_of(&Antilattice::trivial());
        assert!(t.square && t.flat && !t.semisquare && !t.semiflat);
    }

    #[test]
    fn normalization() {
        // scrambled meet matrix is brought to normal form, join relabeled
        let a = Antilattice::new(
            GeneratingMatrix::from_rows(&[vec![3, 1], vec![0, 2]]).unwrap(),
            GeneratingMatrix::from_rows(&[vec![2, 0], vec![1, 3]]).unwrap(),
        )
        .unwrap();
        let b = normalize(&a);
        assert!(b.meet_matrix().is_normal());
        // relabel: 3->0, 1->1, 0->2, 2->3
        assert_eq!(b.join_matrix().row_slice(0), &[3, 2]);
        assert_eq!(b.join_matrix().row_slice(1), &[1, 0]);
        // idempotent
        assert_eq!(normalize(&b), b);
        // the two present the same algebra: normalized products commute with
        // the relabeling
        let relabel = vec![2usize, 1, 3, 0];
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(relabel[a.meet_of(x, y)], b.meet_of(relabel[x], relabel[y]));
                assert_eq!(relabel[a.join_of(x, y)], b.join_of(relabel[x], relabel[y]));
            }
        }
    }

    #[test]
    fn products() {
        let e = example_1422();
        // trivial x N = N
        let p = product(&Antilattice::trivial(), &e);
        assert_eq!(p, e);

        // left-left order 2 times right-right order 2
        let ll = Antilattice::new(GeneratingMatrix::normal(2, 1), GeneratingMatrix::normal(2, 1))
            .unwrap();
        let rr = Antilattice::new(GeneratingMatrix::normal(1, 2), GeneratingMatrix::normal(1, 2))
            .unwrap();
        let p = product(&ll, &rr);
        assert_eq!(type_of(&p).as_tuple(), (2, 2, 2, 2));
        let (m, j) = tables_from_antilattice(&p);
        assert!(classify_magma(&m).rectangular);
        assert!(classify_magma(&j).rectangular);

        // type is componentwise multiplicative
        let t = type_of(&product(&e, &ll));
        assert_eq!(t.as_tuple(), (1 * 2, 4 * 1, 2 * 2, 2 * 1));
    }

    #[test]
    fn regularity_of_flat_products() {
        // flat antilattice: both reducts left-zero
        let ll = |k: usize| {
            Antilattice::new(GeneratingMatrix::normal(k, 1), GeneratingMatrix::normal(k, 1))
                .unwrap()
        };
        for k in [1, 2, 5] {
            assert!(regularity(&ll(k)).regular);
        }

        // product of one flat antilattice of each kind
        let lr = Antilattice::new(GeneratingMatrix::normal(2, 1), GeneratingMatrix::normal(1, 2))
            .unwrap();
        let rl = Antilattice::new(GeneratingMatrix::normal(1, 2), GeneratingMatrix::normal(2, 1))
            .unwrap();
        let rr = Antilattice::new(GeneratingMatrix::normal(1, 2), GeneratingMatrix::normal(1, 2))
            .unwrap();
        let p = product(&product(&ll(2), &lr), &product(&rl, &rr));
        assert_eq!(p.order(), 16);
        assert!(regularity(&p).regular);
    }

    #[test]
    fn enumeration_covers_expected_counts() {
        let mut count = 0usize;
        for_each_antilattice(4, |_| count += 1);
        // 3 meet shapes x 3 join shapes x 4! arrangements
        assert_eq!(count, 3 * 3 * 24);
    }
}
