use std::fmt;

/// Dense square boolean matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    cells: Vec<bool>,
}

impl BoolMatrix {
    pub fn new(n: usize) -> Self {
        BoolMatrix { n, cells: vec![false; n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                cells.push(f(i, j));
            }
        }
        BoolMatrix { n, cells }
    }

    /// Bit `i * n + j` of `code` becomes cell `(i, j)`. Requires `n * n <= 64`.
    pub fn from_code(n: usize, code: u64) -> Self {
        debug_assert!(n * n <= 64);
        BoolMatrix::from_fn(n, |i, j| code >> (i * n + j) & 1 == 1)
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(BoolMatrix { n, cells: rows.concat() })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.cells[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        BoolMatrix::from_fn(self.n, |i, j| self.get(j, i))
    }

    /// First cell (row-major) set in `self` but not in `other`.
    pub fn first_excess_over(&self, other: &BoolMatrix) -> Option<(usize, usize)> {
        debug_assert_eq!(self.n, other.n);
        self.pairs().find(|&(i, j)| !other.get(i, j))
    }

    /// All `(i, j)` with the cell set, row-major.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(k, _)| (k / self.n, k % self.n))
    }

    pub fn count(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    pub fn rows(&self) -> Vec<Vec<bool>> {
        self.cells.chunks(self.n.max(1)).take(self.n).map(<[bool]>::to_vec).collect()
    }

    /// Row-major `0`/`1` string; lexicographic order on these is the
    /// canonical tie-break for enumeration inventories.
    pub fn bit_string(&self) -> String {
        self.cells.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolMatrix[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "/")?;
            }
            for j in 0..self.n {
                write!(f, "{}", if self.get(i, j) { 1 } else { 0 })?;
            }
        }
        write!(f, "]")
    }
}
