//! Dense matrices over a small prime field.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    p: u32,
    data: Vec<u32>,
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn inverse(a: u32, p: u32) -> u32 {
    // Fermat; p is prime
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, p: u32) -> Self {
        Matrix { rows, cols, p, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<u32>], p: u32) -> Self {
        let mut m = Self::zeros(rows, columns.len(), p);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, &x) in col.iter().enumerate() {
                m.set(r, c, x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: u32) {
        self.data[r * self.cols + c] = x % self.p;
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let p = self.p as u64;
        let mut out = Matrix::zeros(self.rows, other.cols, self.p);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = ((out.data[idx] as u64 + a * other.get(k, j) as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| (0..self.cols).fold(0u64, |acc, c| (acc + self.get(r, c) as u64 * v[c] as u64) % p) as u32)
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows, self.p);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p as u64;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(found) = (row..self.rows).find(|&r| self.get(r, col) != 0) else { continue };
            for c in 0..self.cols {
                self.data.swap(found * self.cols + c, row * self.cols + c);
            }
            let inv = inverse(self.get(row, col), self.p) as u64;
            for c in 0..self.cols {
                let x = self.get(row, c) as u64 * inv % p;
                self.data[row * self.cols + c] = x as u32;
            }
            for r in 0..self.rows {
                let factor = self.get(r, col) as u64;
                if r == row || factor == 0 {
                    continue;
                }
                for c in 0..self.cols {
                    let sub = factor * self.get(row, c) as u64 % p;
                    let x = (self.get(r, c) as u64 + p - sub) % p;
                    self.data[r * self.cols + c] = x as u32;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{ x : self * x = 0 }`.
    pub fn nullspace(&self) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    let x = m.get(r, f);
                    v[pc] = (self.p - x) % self.p;
                }
                v
            })
            .collect()
    }
}

/// Rank of a family of vectors of equal length.
pub fn rank_of(vectors: &[Vec<u32>], len: usize, p: u32) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_columns(len, vectors, p).rank()
}

/// Coordinates of `target` in the span of `basis` (assumed independent), if
/// it lies there.
pub fn coordinates(basis: &[Vec<u32>], target: &[u32], p: u32) -> Option<Vec<u32>> {
    let len = target.len();
    let mut cols = basis.to_vec();
    cols.push(target.to_vec());
    let mut m = Matrix::from_columns(len, &cols, p);
    let pivots = m.rref();
    let k = basis.len();
    if pivots.contains(&k) {
        return None;
    }
    let mut coef = vec![0u32; k];
    for (r, &pc) in pivots.iter().enumerate() {
        coef[pc] = m.get(r, k);
    }
    Some(coef)
}
