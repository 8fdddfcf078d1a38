use std::fmt;
use std::ops::Mul;

use super::LaurentPoly1;

/// Square matrix over `Z[t, t^-1]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly1>,
}

impl PolyMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = LaurentPoly1::one();
        }
        m
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![LaurentPoly1::zero(); dim * dim],
        }
    }

    /// Panics if the rows are ragged or not square.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly1>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly1 {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly1) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn scale(&self, factor: &LaurentPoly1) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            let v = m.get(i, i) - &LaurentPoly1::one();
            m.set(i, i, v);
        }
        m
    }

    /// Fraction-free (Bareiss) elimination; every division is exact in the
    /// integral domain `Z[t, t^-1]`.
    pub fn determinant(&self) -> LaurentPoly1 {
        let n = self.dim;
        if n == 0 {
            return LaurentPoly1::one();
        }
        let mut a: Vec<Vec<LaurentPoly1>> = (0..n).map(|r| self.entries[r * n..(r + 1) * n].to_vec()).collect();
        let mut sign_flip = false;
        let mut prev = LaurentPoly1::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return LaurentPoly1::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss step divides exactly in an integral domain");
                }
                a[i][k] = LaurentPoly1::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }

    pub fn trace(&self) -> LaurentPoly1 {
        (0..self.dim).fold(LaurentPoly1::zero(), |acc, i| &acc + self.get(i, i))
    }
}

impl<'a> Mul<&'a PolyMatrix> for &'a PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &'a PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = PolyMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly1::zero();
                for k in 0..n {
                    let (x, y) = (self.get(i, k), rhs.get(k, j));
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> LaurentPoly1 {
        LaurentPoly1::from(v)
    }

    /// Cofactor expansion, used only as an independent check.
    fn laplace(m: &PolyMatrix) -> LaurentPoly1 {
        let n = m.dim();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = LaurentPoly1::zero();
        for col in 0..n {
            let minor = PolyMatrix::from_rows(
                (1..n)
                    .map(|r| (0..n).filter(|&cc| cc != col).map(|cc| m.get(r, cc).clone()).collect())
                    .collect(),
            );
            let term = m.get(0, col) * &laplace(&minor);
            acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn integer_determinant() {
        let m = PolyMatrix::from_rows(vec![
            vec![c(0), c(2), c(1)],
            vec![c(3), c(0), c(4)],
            vec![c(5), c(6), c(0)],
        ]);
        assert_eq!(m.determinant(), c(58));
        assert_eq!(laplace(&m), c(58));
    }

    #[test]
    fn polynomial_determinant_matches_cofactors() {
        let t = LaurentPoly1::t();
        let ti = LaurentPoly1::monomial(1, -1);
        let m = PolyMatrix::from_rows(vec![
            vec![-t.clone(), c(1), c(0), c(2)],
            vec![t.clone(), c(0), -t.clone(), c(1)],
            vec![c(0), ti.clone(), c(1), &t * &t],
            vec![c(1), c(0), ti.clone(), -c(3)],
        ]);
        assert_eq!(m.determinant(), laplace(&m));
    }

    #[test]
    fn identity_product() {
        let t = LaurentPoly1::t();
        let m = PolyMatrix::from_rows(vec![vec![-t.clone(), c(1)], vec![c(0), c(1)]]);
        assert_eq!(&m * &PolyMatrix::identity(2), m);
        assert_eq!(m.determinant(), -t);
    }
}
