//! Partitions of a finite carrier `0..n`, in the canonical form used
//! throughout the crate: blocks ordered by their minimum element, elements
//! within a block ascending.

use std::fmt;

/// A partition of `{0, .., n-1}`.
///
/// Canonical: `blocks` are sorted by minimum element and each block is
/// sorted ascending, so structural equality is partition equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    class_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Canonicalize an arbitrary `element -> class id` assignment.
    pub fn from_class_ids(ids: &[usize]) -> Partition {
        let n = ids.len();
        let mut remap: Vec<Option<usize>> = Vec::new();
        let mut class_of = vec![0usize; n];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let max = ids.iter().copied().max().map_or(0, |m| m + 1);
        remap.resize(max, None);
        for e in 0..n {
            let id = ids[e];
            let b = match remap[id] {
                Some(b) => b,
                None => {
                    let b = blocks.len();
                    remap[id] = Some(b);
                    blocks.push(Vec::new());
                    b
                }
            };
            class_of[e] = b;
            blocks[b].push(e);
        }
        Partition { class_of, blocks }
    }

    /// Build from explicit blocks; they must be disjoint and cover `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Partition, PartitionError> {
        let mut ids = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &e in block {
                if e >= n {
                    return Err(PartitionError::OutOfRange(e));
                }
                if ids[e] != usize::MAX {
                    return Err(PartitionError::Duplicate(e));
                }
                ids[e] = b;
            }
        }
        if let Some(e) = ids.iter().position(|&id| id == usize::MAX) {
            return Err(PartitionError::Missing(e));
        }
        Ok(Partition::from_class_ids(&ids))
    }

    pub fn singletons(n: usize) -> Partition {
        let ids: Vec<usize> = (0..n).collect();
        Partition::from_class_ids(&ids)
    }

    pub fn universal(n: usize) -> Partition {
        Partition::from_class_ids(&vec![0; n.max(1)][..n])
    }

    /// Smallest partition relating every listed pair.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Partition {
        let mut uf = UnionFind::new(n);
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        uf.into_partition()
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn class_of(&self, e: usize) -> usize {
        self.class_of[e]
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.len()
    }

    pub fn is_universal(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// True when every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&e| other.class_of[e] == other.class_of[b[0]]))
    }

    /// Join as equivalence relations: transitive closure of the union.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.len());
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.into_partition()
    }

    /// Meet as equivalence relations: common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        let k = other.num_blocks().max(1);
        let ids: Vec<usize> = (0..self.len())
            .map(|e| self.class_of[e] * k + other.class_of[e])
            .collect();
        Partition::from_class_ids(&ids)
    }

    /// Render in bracket-pipe notation, e.g. `1,13|2,14|...` with the given base.
    pub fn render(&self, base: usize) -> String {
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| (e + base).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Parse bracket-pipe notation over a carrier of size `n` with the given base.
    pub fn parse(s: &str, n: usize, base: usize) -> Result<Partition, PartitionError> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for part in s.split('|') {
            let mut block = Vec::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(PartitionError::Syntax(s.to_string()));
                }
                let v: usize = tok
                    .parse()
                    .map_err(|_| PartitionError::Syntax(tok.to_string()))?;
                if v < base {
                    return Err(PartitionError::OutOfRange(v));
                }
                block.push(v - base);
            }
            blocks.push(block);
        }
        Partition::from_blocks(n, &blocks)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.render(0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    EmptyBlock,
    OutOfRange(usize),
    Duplicate(usize),
    Missing(usize),
    Syntax(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::EmptyBlock => write!(f, "empty block"),
            PartitionError::OutOfRange(e) => write!(f, "element {e} out of range"),
            PartitionError::Duplicate(e) => write!(f, "element {e} listed twice"),
            PartitionError::Missing(e) => write!(f, "element {e} missing from partition"),
            PartitionError::Syntax(s) => write!(f, "malformed partition literal near '{s}'"),
        }
    }
}

impl std::error::Error for PartitionError {}

/// Union-find with path halving; converts into a canonical [`Partition`].
#[derive(Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the two classes were actually merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.rank[ra] < self.rank[rb] {
            self.parent[ra] = rb;
        } else {
            if self.rank[ra] == self.rank[rb] {
                self.rank[ra] += 1;
            }
            self.parent[rb] = ra;
        }
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn num_classes(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&x| self.find(x) == x).count()
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let ids: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Partition::from_class_ids(&ids)
    }
}
