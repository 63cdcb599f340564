//! Generating matrices of rectangular bands: the linear-time extraction
//! scan, normal form, Kronecker products and cartesian partitions.
//!
//! A `p x q` generating matrix `G` with distinct entries encodes the
//! rectangular band with product `G[i][j] * G[k][l] = G[i][l]`; rows are the
//! R-classes and columns the L-classes.

use std::fmt;

use crate::magma::{associativity_witness, is_idempotent, CayleyTable};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq)]
pub struct GeneratingMatrix {
    p: usize,
    q: usize,
    cells: Vec<usize>,
    pos: Vec<(usize, usize)>,
}

impl GeneratingMatrix {
    /// `cells` is row-major and must contain each of `0..p*q` exactly once.
    pub fn new(p: usize, q: usize, cells: Vec<usize>) -> Result<GeneratingMatrix, MatrixError> {
        let n = p * q;
        if p == 0 || q == 0 {
            return Err(MatrixError::EmptyShape);
        }
        if cells.len() != n {
            return Err(MatrixError::WrongLength {
                expected: n,
                got: cells.len(),
            });
        }
        let mut pos = vec![(usize::MAX, usize::MAX); n];
        for i in 0..p {
            for j in 0..q {
                let e = cells[i * q + j];
                if e >= n {
                    return Err(MatrixError::EntryOutOfRange { entry: e, n });
                }
                if pos[e].0 != usize::MAX {
                    return Err(MatrixError::DuplicateEntry(e));
                }
                pos[e] = (i, j);
            }
        }
        Ok(GeneratingMatrix { p, q, cells, pos })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<GeneratingMatrix, MatrixError> {
        let p = rows.len();
        let q = rows.first().map_or(0, |r| r.len());
        let mut cells = Vec::with_capacity(p * q);
        for r in rows {
            if r.len() != q {
                return Err(MatrixError::RaggedRows);
            }
            cells.extend_from_slice(r);
        }
        GeneratingMatrix::new(p, q, cells)
    }

    /// The `p x q` matrix in normal form: row `i` holds `i*q .. (i+1)*q`.
    pub fn normal(p: usize, q: usize) -> GeneratingMatrix {
        GeneratingMatrix::new(p, q, (0..p * q).collect()).unwrap()
    }

    pub fn rows(&self) -> usize {
        self.p
    }

    pub fn cols(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.p * self.q
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.q + j]
    }

    #[inline]
    pub fn row_of(&self, e: usize) -> usize {
        self.pos[e].0
    }

    #[inline]
    pub fn col_of(&self, e: usize) -> usize {
        self.pos[e].1
    }

    pub fn position_of(&self, e: usize) -> (usize, usize) {
        self.pos[e]
    }

    /// The band product encoded by the matrix: `x * y` sits in x's row and
    /// y's column.
    #[inline]
    pub fn product(&self, x: usize, y: usize) -> usize {
        self.cell(self.pos[x].0, self.pos[y].1)
    }

    pub fn row_slice(&self, i: usize) -> &[usize] {
        &self.cells[i * self.q..(i + 1) * self.q]
    }

    /// Expand to the full Cayley table.
    pub fn to_table(&self) -> CayleyTable {
        CayleyTable::from_fn(self.len(), |x, y| self.product(x, y))
    }

    pub fn is_normal(&self) -> bool {
        self.cells.iter().enumerate().all(|(i, &e)| e == i)
    }

    /// Relabel onto normal form. Returns the normal matrix together with the
    /// applied bijection (`relabel[old] = new`).
    pub fn normal_form(&self) -> (GeneratingMatrix, Vec<usize>) {
        let n = self.len();
        let mut relabel = vec![0usize; n];
        for e in 0..n {
            let (i, j) = self.pos[e];
            relabel[e] = i * self.q + j;
        }
        (GeneratingMatrix::normal(self.p, self.q), relabel)
    }

    /// Apply a carrier bijection to the entries, keeping positions.
    pub fn relabeled(&self, relabel: &[usize]) -> GeneratingMatrix {
        let cells = self.cells.iter().map(|&e| relabel[e]).collect();
        GeneratingMatrix::new(self.p, self.q, cells).expect("relabeling must be a bijection")
    }

    /// Kronecker product; the pair `(g, h)` is encoded as `g * |H| + h`, so
    /// the result generates the direct product of the two bands.
    pub fn kronecker(&self, other: &GeneratingMatrix) -> GeneratingMatrix {
        let (p, q) = (self.p * other.p, self.q * other.q);
        let m = other.len();
        let mut cells = vec![0usize; p * q];
        for i in 0..self.p {
            for j in 0..self.q {
                let g = self.cell(i, j);
                for k in 0..other.p {
                    for l in 0..other.q {
                        let row = i * other.p + k;
                        let col = j * other.q + l;
                        cells[row * q + col] = g * m + other.cell(k, l);
                    }
                }
            }
        }
        GeneratingMatrix::new(p, q, cells).expect("kronecker product is a bijection")
    }

    /// Decide whether `part` is a cartesian partition of this matrix, i.e.
    /// induced by a partition of the rows and one of the columns.
    pub fn cartesian_witness(&self, part: &Partition) -> Result<CartesianPartition, NotCartesian> {
        assert_eq!(part.len(), self.len(), "partition carrier mismatch");
        // If part is cartesian, two rows are related exactly when their
        // column-0 entries are, and dually for columns.
        let row_ids: Vec<usize> = (0..self.p).map(|r| part.class_of(self.cell(r, 0))).collect();
        let col_ids: Vec<usize> = (0..self.q).map(|c| part.class_of(self.cell(0, c))).collect();
        let rows = Partition::from_class_ids(&row_ids);
        let cols = Partition::from_class_ids(&col_ids);
        let induced = induced_elements(self, &rows, &cols);
        if &induced == part {
            Ok(CartesianPartition {
                rows,
                cols,
                elements: induced,
            })
        } else {
            // find a disagreeing pair for the error report
            for e in 0..self.len() {
                for f in e + 1..self.len() {
                    if part.same(e, f) != induced.same(e, f) {
                        return Err(NotCartesian { pair: (e, f) });
                    }
                }
            }
            unreachable!("partitions differ but no disagreeing pair found")
        }
    }
}

/// Element partition induced by a row partition and a column partition.
pub fn induced_elements(
    g: &GeneratingMatrix,
    rows: &Partition,
    cols: &Partition,
) -> Partition {
    let k = cols.num_blocks().max(1);
    let mut ids = vec![0usize; g.len()];
    for e in 0..g.len() {
        let (i, j) = g.position_of(e);
        ids[e] = rows.class_of(i) * k + cols.class_of(j);
    }
    Partition::from_class_ids(&ids)
}

impl fmt::Debug for GeneratingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratingMatrix({}x{})[", self.p, self.q)?;
        for i in 0..self.p {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row_slice(i).iter().map(|e| e.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    EmptyShape,
    RaggedRows,
    WrongLength { expected: usize, got: usize },
    EntryOutOfRange { entry: usize, n: usize },
    DuplicateEntry(usize),
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::EmptyShape => write!(f, "matrix must have positive shape"),
            MatrixError::RaggedRows => write!(f, "rows have differing lengths"),
            MatrixError::WrongLength { expected, got } => {
                write!(f, "expected {expected} cells, got {got}")
            }
            MatrixError::EntryOutOfRange { entry, n } => {
                write!(f, "entry {entry} out of range 0..{n}")
            }
            MatrixError::DuplicateEntry(e) => write!(f, "entry {e} occurs twice"),
        }
    }
}

impl std::error::Error for MatrixError {}

/// A partition of a generating matrix induced by row and column partitions,
/// together with the element partition it induces. For rectangular bands
/// these are exactly the congruences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartesianPartition {
    pub rows: Partition,
    pub cols: Partition,
    pub elements: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotCartesian {
    /// A pair on which the given partition and the best row/column candidate
    /// disagree.
    pub pair: (usize, usize),
}

impl fmt::Display for NotCartesian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "partition is not cartesian (no row/column partitions induce it; see pair {:?})",
            self.pair
        )
    }
}

impl std::error::Error for NotCartesian {}

/// Failure modes of the linear-time extraction scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotRectangular {
    /// First row length times first column length differs from the order.
    WrongCellCount { p: usize, q: usize, n: usize },
    /// Some element was produced twice while filling the body.
    DuplicateFill { element: usize },
    /// The matrix filled, but a check product `y * x` missed the anchor.
    /// Only reachable on non-associative input; the spurious fill is kept so
    /// callers can report it.
    AnchorCheckFailed {
        row_elem: usize,
        col_elem: usize,
        product: usize,
        fill: GeneratingMatrix,
    },
}

impl fmt::Display for NotRectangular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotRectangular::WrongCellCount { p, q, n } => {
                write!(f, "matrix does not fill: {p} rows x {q} cols != order {n}")
            }
            NotRectangular::DuplicateFill { element } => {
                write!(f, "element {element} filled twice")
            }
            NotRectangular::AnchorCheckFailed {
                row_elem,
                col_elem,
                product,
                ..
            } => write!(
                f,
                "check product {row_elem} * {col_elem} = {product} missed the anchor"
            ),
        }
    }
}

impl std::error::Error for NotRectangular {}

/// Linear-time rectangularity scan, counting Cayley-table lookups.
///
/// Anchor is element 0. The first row collects the distinct values of
/// `0 * y` in carrier order, the first column those of `x * 0`; the body is
/// filled with `x * y` and every check product `y * x` must return the
/// anchor. Roughly `4n` lookups in total.
///
/// The scan assumes the input is a band. On a non-associative table it can
/// fill a complete matrix that generates a different band; callers that need
/// certainty must gate on associativity (see [`extract_checked`]).
pub fn extract_with_stats(t: &CayleyTable) -> (Result<GeneratingMatrix, NotRectangular>, usize) {
    let n = t.order();
    let mut lookups = 0usize;
    let a = 0usize;

    let mut seen = vec![false; n];
    let mut first_row = Vec::new();
    for y in 0..n {
        let v = t.get(a, y);
        lookups += 1;
        if !seen[v] {
            seen[v] = true;
            first_row.push(v);
        }
    }
    let mut seen = vec![false; n];
    let mut first_col = Vec::new();
    for x in 0..n {
        let v = t.get(x, a);
        lookups += 1;
        if !seen[v] {
            seen[v] = true;
            first_col.push(v);
        }
    }
    let (p, q) = (first_col.len(), first_row.len());
    if p * q != n {
        return (Err(NotRectangular::WrongCellCount { p, q, n }), lookups);
    }

    let mut used = vec![false; n];
    let mut cells = vec![0usize; n];
    for (i, &x) in first_col.iter().enumerate() {
        for (j, &y) in first_row.iter().enumerate() {
            let u = t.get(x, y);
            lookups += 1;
            if used[u] {
                return (Err(NotRectangular::DuplicateFill { element: u }), lookups);
            }
            used[u] = true;
            cells[i * q + j] = u;
        }
    }
    let matrix = GeneratingMatrix::new(p, q, cells).expect("fill checked for duplicates");

    for &x in &first_col {
        for &y in &first_row {
            let v = t.get(y, x);
            lookups += 1;
            if v != a {
                return (
                    Err(NotRectangular::AnchorCheckFailed {
                        row_elem: y,
                        col_elem: x,
                        product: v,
                        fill: matrix,
                    }),
                    lookups,
                );
            }
        }
    }
    (Ok(matrix), lookups)
}

pub fn extract_generating_matrix(t: &CayleyTable) -> Result<GeneratingMatrix, NotRectangular> {
    extract_with_stats(t).0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BandCheckError {
    NotAssociative { witness: (usize, usize, usize) },
    NotIdempotent,
    NotRectangular(NotRectangular),
}

impl fmt::Display for BandCheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BandCheckError::NotAssociative { witness: (x, y, z) } => {
                write!(f, "not associative at ({x}, {y}, {z})")
            }
            BandCheckError::NotIdempotent => write!(f, "not idempotent"),
            BandCheckError::NotRectangular(e) => write!(f, "not rectangular: {e}"),
        }
    }
}

impl std::error::Error for BandCheckError {}

/// Safe entry point: associativity and idempotence first, then the scan.
pub fn extract_checked(t: &CayleyTable) -> Result<GeneratingMatrix, BandCheckError> {
    if let Some(witness) = associativity_witness(t) {
        return Err(BandCheckError::NotAssociative { witness });
    }
    if !is_idempotent(t) {
        return Err(BandCheckError::NotIdempotent);
    }
    extract_generating_matrix(t).map_err(BandCheckError::NotRectangular)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::{classify_magma, satisfies_xyx_eq_x};

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

    fn spurious_fill_table() -> CayleyTable {
        CayleyTable::from_rows(&[
            vec![0, 1, 0, 0],
            vec![0, 1, 2, 0],
            vec![2, 3, 2, 0],
            vec![0, 0, 0, 3],
        ])
        .unwrap()
    }

    #[test]
    fn matrix_validation() {
        assert!(GeneratingMatrix::new(2, 2, vec![0, 1, 2, 3]).is_ok());
        assert_eq!(
            GeneratingMatrix::new(2, 2, vec![0, 1, 2, 2]),
            Err(MatrixError::DuplicateEntry(2))
        );
        assert_eq!(
            GeneratingMatrix::new(2, 2, vec![0, 1, 2, 4]),
            Err(MatrixError::EntryOutOfRange { entry: 4, n: 4 })
        );
        assert!(GeneratingMatrix::new(0, 3, vec![]).is_err());
    }

    #[test]
    fn extract_right_zero() {
        let g = extract_generating_matrix(&meet_table_1x4()).unwrap();
        assert_eq!((g.rows(), g.cols()), (1, 4));
        assert_eq!(g.row_slice(0), &[0, 1, 2, 3]);
    }

    #[test]
    fn extract_square_join() {
        let g = extract_generating_matrix(&join_table_2x2()).unwrap();
        assert_eq!((g.rows(), g.cols()), (2, 2));
        assert_eq!(g.row_slice(0), &[0, 2]);
        assert_eq!(g.row_slice(1), &[3, 1]);
    }

    #[test]
    fn spurious_fill_is_reported_with_the_matrix() {
        // Not associative: the scan fills a complete 2x2 matrix, and the
        // anchor check is what finally rejects it.
        let t = spurious_fill_table();
        match extract_generating_matrix(&t) {
            Err(NotRectangular::AnchorCheckFailed { fill, .. }) => {
                assert_eq!(fill.row_slice(0), &[0, 1]);
                assert_eq!(fill.row_slice(1), &[2, 3]);
            }
            other => panic!("expected anchor check failure, got {other:?}"),
        }
        assert!(matches!(
            extract_checked(&t),
            Err(BandCheckError::NotAssociative {
                witness: (0, 1, 2)
            })
        ));
    }

    #[test]
    fn semilattice_underfills() {
        let t = CayleyTable::from_fn(2, |x, y| x.min(y));
        assert_eq!(
            extract_generating_matrix(&t),
            Err(NotRectangular::WrongCellCount { p: 1, q: 1, n: 2 })
        );
    }

    #[test]
    fn band_from_matrix_shapes() {
        // single row: right-zero band
        let g = GeneratingMatrix::normal(1, 5);
        assert_eq!(g.to_table(), CayleyTable::right_zero(5));
        // single column: left-zero band
        let g = GeneratingMatrix::normal(5, 1);
        assert_eq!(g.to_table(), CayleyTable::left_zero(5));
        // 2x2: verified rectangular by the naive oracle
        let g = GeneratingMatrix::normal(2, 2);
        let t = g.to_table();
        assert!(satisfies_xyx_eq_x(&t));
        assert!(classify_magma(&t).rectangular);
    }

    #[test]
    fn normal_form_cases() {
        let g = GeneratingMatrix::from_rows(&[vec![3, 1], vec![0, 2]]).unwrap();
        let (nf, relabel) = g.normal_form();
        assert_eq!(nf, GeneratingMatrix::normal(2, 2));
        assert_eq!(relabel, vec![2, 1, 3, 0]); // 3->0, 1->1, 0->2, 2->3

        let g = GeneratingMatrix::normal(3, 2);
        let (nf, relabel) = g.normal_form();
        assert_eq!(nf, g);
        assert_eq!(relabel, (0..6).collect::<Vec<_>>());

        // idempotent on any input
        let g = GeneratingMatrix::from_rows(&[vec![4, 2, 0], vec![5, 1, 3]]).unwrap();
        let (nf, _) = g.normal_form();
        let (nf2, relabel2) = nf.normal_form();
        assert_eq!(nf, nf2);
        assert_eq!(relabel2, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn kronecker_matches_direct_product() {
        // 1x2 (right-zero) x 2x1 (left-zero), pair (g, h) encoded g*|H| + h
        let g = GeneratingMatrix::normal(1, 2);
        let h = GeneratingMatrix::normal(2, 1);
        let k = g.kronecker(&h);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        // oracle: direct product table under the same encoding
        let (tg, th) = (g.to_table(), h.to_table());
        let direct = CayleyTable::from_fn(4, |x, y| {
            let (xg, xh) = (x / 2, x % 2);
            let (yg, yh) = (y / 2, y % 2);
            tg.get(xg, yg) * 2 + th.get(xh, yh)
        });
        assert_eq!(k.to_table(), direct);
        assert_eq!(k.row_slice(0), &[0, 2]);
        assert_eq!(k.row_slice(1), &[1, 3]);

        // G x (1x1) is G itself
        let g = GeneratingMatrix::from_rows(&[vec![1, 2], vec![0, 3]]).unwrap();
        assert_eq!(g.kronecker(&GeneratingMatrix::normal(1, 1)), g);

        // type bookkeeping: (2,3) x (3,2) -> (6,6)
        let k = GeneratingMatrix::normal(2, 3).kronecker(&GeneratingMatrix::normal(3, 2));
        assert_eq!((k.rows(), k.cols()), (6, 6));
    }

    #[test]
    fn cartesian_partition_examples() {
        // 3x5 normal matrix, rows {{0,1},{2}}, cols {{0,1,2},{3,4}}
        let g = GeneratingMatrix::normal(3, 5);
        let part = Partition::from_blocks(
            15,
            &[
                vec![0, 1, 2, 5, 6, 7],
                vec![3, 4, 8, 9],
                vec![10, 11, 12],
                vec![13, 14],
            ],
        )
        .unwrap();
        let w = g.cartesian_witness(&part).unwrap();
        assert_eq!(w.rows.blocks(), &[vec![0, 1], vec![2]]);
        assert_eq!(w.cols.blocks(), &[vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(w.elements, part);

        // all singletons
        let part = Partition::singletons(15);
        let w = g.cartesian_witness(&part).unwrap();
        assert!(w.rows.is_identity());
        assert!(w.cols.is_identity());

        // {{0,3},{1,2}} on the 2x2 normal matrix is not cartesian; the
        // brute force over all 2x2 row/column partition pairs agrees
        let g = GeneratingMatrix::normal(2, 2);
        let part = Partition::from_blocks(4, &[vec![0, 3], vec![1, 2]]).unwrap();
        assert!(g.cartesian_witness(&part).is_err());
        let all_two = [
            Partition::singletons(2),
            Partition::universal(2),
        ];
        for rows in &all_two {
            for cols in &all_two {
                assert_ne!(induced_elements(&g, rows, cols), part);
            }
        }
    }

    #[test]
    fn lookup_counts_scale_linearly() {
        let mut per_element = Vec::new();
        for n in [4usize, 16, 64, 256] {
            let t = CayleyTable::left_zero(n);
            let (res, lookups) = extract_with_stats(&t);
            assert!(res.is_ok());
            per_element.push(lookups as f64 / n as f64);
        }
        let max = per_element.iter().cloned().fold(f64::MIN, f64::max);
        let min = per_element.iter().cloned().fold(f64::MAX, f64::min);
        assert!(max <= 1.2 * min, "lookup growth not linear: {per_element:?}");
    }

    #[test]
    fn extraction_round_trips_with_table() {
        for (p, q) in [(1, 1), (2, 3), (4, 2), (6, 6), (3, 12)] {
            // a scrambled matrix: reverse the cells of the normal one
            let n = p * q;
            let cells: Vec<usize> = (0..n).rev().collect();
            let g = GeneratingMatrix::new(p, q, cells).unwrap();
            let t = g.to_table();
            let e = extract_generating_matrix(&t).unwrap();
            assert_eq!(e.to_table(), t);
            assert_eq!((e.rows(), e.cols()), (p, q));
        }
    }
}
