use crate::error::Error;
use crate::Result;

/// The prime field F_p for a small prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u8,
}

impl Fp {
    pub fn new(p: u8) -> Result<Fp> {
        if matches!(p, 2 | 3 | 5 | 7) {
            Ok(Fp { p })
        } else {
            Err(Error::FieldUnsupported(p))
        }
    }

    pub fn p(self) -> u8 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        (a as u16 * b as u16 % self.p as u16) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        (self.p - a) % self.p
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        (1..self.p).find(|&b| self.mul(a, b) == 1).unwrap()
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(self) -> u8 {
        match self.p {
            2 => 1,
            3 => 2,
            5 => 2,
            7 => 3,
            _ => unreachable!(),
        }
    }
}

/// A dense matrix over F_p, row-major. The zero-by-n and n-by-zero cases are
/// all legal and behave as expected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

impl FpMat {
    pub fn zero(rows: usize, cols: usize) -> FpMat {
        FpMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> FpMat {
        let mut m = FpMat::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> FpMat {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        FpMat { rows: r, cols: c, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

impl Fp {
    pub fn matmul(self, a: &FpMat, b: &FpMat) -> FpMat {
        assert_eq!(a.cols, b.rows, "shape mismatch");
        let mut out = FpMat::zero(a.rows, b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let aik = a.get(i, k);
                if aik == 0 {
                    continue;
                }
                for j in 0..b.cols {
                    let v = self.add(out.get(i, j), self.mul(aik, b.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mat_add(self, a: &FpMat, b: &FpMat) -> FpMat {
        assert!(a.rows == b.rows && a.cols == b.cols);
        let data = a
            .data
            .iter()
            .zip(&b.data)
            .map(|(&x, &y)| self.add(x, y))
            .collect();
        FpMat {
            rows: a.rows,
            cols: a.cols,
            data,
        }
    }

    pub fn mat_scale(self, a: &FpMat, c: u8) -> FpMat {
        FpMat {
            rows: a.rows,
            cols: a.cols,
            data: a.data.iter().map(|&x| self.mul(x, c)).collect(),
        }
    }

    pub fn mat_sub(self, a: &FpMat, b: &FpMat) -> FpMat {
        self.mat_add(a, &self.mat_scale(b, self.neg(1)))
    }

    /// Row echelon reduction in place; returns the pivot columns.
    fn row_reduce(self, m: &mut FpMat) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if pivot_row != row {
                for j in 0..m.cols {
                    let tmp = m.get(row, j);
                    m.set(row, j, m.get(pivot_row, j));
                    m.set(pivot_row, j, tmp);
                }
            }
            let inv = self.inv(m.get(row, col));
            for j in 0..m.cols {
                m.set(row, j, self.mul(m.get(row, j), inv));
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let factor = m.get(r, col);
                    for j in 0..m.cols {
                        let v = self.sub(m.get(r, j), self.mul(factor, m.get(row, j)));
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(self, m: &FpMat) -> usize {
        let mut copy = m.clone();
        self.row_reduce(&mut copy).len()
    }

    /// Basis of the right nullspace `{x : m·x = 0}`.
    pub fn nullspace(self, m: &FpMat) -> Vec<Vec<u8>> {
        let mut copy = m.clone();
        let pivots = self.row_reduce(&mut copy);
        let mut basis = Vec::new();
        let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
        for &f in &free {
            let mut x = vec![0u8; m.cols];
            x[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = self.neg(copy.get(r, f));
            }
            basis.push(x);
        }
        basis
    }

    /// Inverse of a square matrix, if it exists.
    pub fn invert(self, m: &FpMat) -> Option<FpMat> {
        assert_eq!(m.rows, m.cols);
        let n = m.rows;
        let mut aug = FpMat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, m.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = self.row_reduce(&mut aug);
        if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut out = FpMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j));
            }
        }
        Some(out)
    }

    /// Solves `a·x = b` column by column; `None` if inconsistent. When the
    /// solution is underdetermined the free variables are set to zero.
    pub fn solve(self, a: &FpMat, b: &FpMat) -> Option<FpMat> {
        assert_eq!(a.rows, b.rows);
        let mut aug = FpMat::zero(a.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                aug.set(i, j, a.get(i, j));
            }
            for j in 0..b.cols {
                aug.set(i, a.cols + j, b.get(i, j));
            }
        }
        let pivots = self.row_reduce(&mut aug);
        if pivots.iter().any(|&c| c >= a.cols) {
            return None;
        }
        let mut x = FpMat::zero(a.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, aug.get(r, a.cols + j));
            }
        }
        Some(x)
    }

    /// A basis of the column space, as a full-column-rank matrix.
    pub fn column_space_basis(self, m: &FpMat) -> FpMat {
        let mut copy = m.clone();
        let pivots = self.row_reduce(&mut copy);
        let mut out = FpMat::zero(m.rows, pivots.len());
        for (k, &c) in pivots.iter().enumerate() {
            for i in 0..m.rows {
                out.set(i, k, m.get(i, c));
            }
        }
        out
    }
}
