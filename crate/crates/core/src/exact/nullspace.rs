//! Exact right-kernel computation.
//!
//! - [`RatKernel`]: incremental eliminator over Q. Rows are cleared to
//!   primitive integer vectors and combined by cross-multiplication, so no
//!   fractions appear during elimination and no floating point anywhere.
//! - [`FpKernel`]: the same machinery over a prime field.
//! - [`rat_nullspace`]: one-shot kernel basis of a rational matrix.
//!
//! Incremental row feeding matters to the guessers: they stop pushing rows
//! as soon as the matrix reaches full column rank (empty kernel).

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fp::pow_mod_u64;
use super::ring::{Int, Rat};

/// Echelon accumulator over Q. Stored rows are primitive integer vectors
/// with strictly increasing leading positions.
#[derive(Debug, Clone)]
pub struct RatKernel {
    cols: usize,
    rows: Vec<Vec<Int>>,
    pivots: Vec<usize>,
}

fn make_primitive(row: &mut [Int]) {
    let mut g = Int::zero();
    for x in row.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        // still normalize the sign below
    } else {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    if let Some(lead) = row.iter().position(|x| !x.is_zero()) {
        if row[lead].is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
    }
}

impl RatKernel {
    pub fn new(cols: usize) -> Self {
        RatKernel {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn push_row(&mut self, row: &[Rat]) {
        assert_eq!(row.len(), self.cols, "row width mismatch");
        let mut lcm = Int::one();
        for x in row {
            lcm = lcm.lcm(x.denom());
        }
        let int_row: Vec<Int> = row
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        self.push_int_row(int_row);
    }

    pub fn push_int_row(&mut self, mut row: Vec<Int>) {
        assert_eq!(row.len(), self.cols, "row width mismatch");
        for (i, prow) in self.rows.iter().enumerate() {
            let pc = self.pivots[i];
            if row[pc].is_zero() {
                continue;
            }
            // row <- row * prow[pc] - prow * row[pc]; stored rows have zeros
            // left of their own pivot, so earlier eliminations survive.
            let a = prow[pc].clone();
            let b = std::mem::replace(&mut row[pc], Int::zero());
            for c in (pc + 1)..self.cols {
                row[c] = &row[c] * &a - &prow[c] * &b;
            }
            for c in 0..pc {
                row[c] = &row[c] * &a;
            }
        }
        let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
            return; // dependent row
        };
        make_primitive(&mut row);
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.rows.insert(pos, row);
        self.pivots.insert(pos, lead);
    }

    /// Basis of the right kernel, one vector per free column in column
    /// order, with the free coordinate set to 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for i in (0..self.rows.len()).rev() {
                let pc = self.pivots[i];
                let row = &self.rows[i];
                let mut s = Rat::zero();
                for c in (pc + 1)..self.cols {
                    if !row[c].is_zero() && !v[c].is_zero() {
                        s += Rat::from_integer(row[c].clone()) * &v[c];
                    }
                }
                v[pc] = -s / Rat::from_integer(row[pc].clone());
            }
            basis.push(v);
        }
        basis
    }
}

/// Kernel basis of a rational matrix. Rows may be streamed through
/// [`RatKernel`] instead when early termination matters.
pub fn rat_nullspace(mat: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let Some(first) = mat.first() else {
        return Vec::new();
    };
    let mut k = RatKernel::new(first.len());
    for row in mat {
        k.push_row(row);
    }
    k.kernel_basis()
}

/// Echelon accumulator over F_p with pivot entries normalized to 1.
#[derive(Debug, Clone)]
pub struct FpKernel {
    p: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl FpKernel {
    pub fn new(p: u64, cols: usize) -> Self {
        FpKernel {
            p,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn push_row(&mut self, mut row: Vec<u64>) {
        assert_eq!(row.len(), self.cols, "row width mismatch");
        let p = self.p;
        for x in row.iter_mut() {
            *x %= p;
        }
        for (i, prow) in self.rows.iter().enumerate() {
            let pc = self.pivots[i];
            let x = row[pc];
            if x == 0 {
                continue;
            }
            for c in pc..self.cols {
                let sub = (x as u128 * prow[c] as u128) % p as u128;
                row[c] = ((row[c] as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        let Some(lead) = row.iter().position(|&x| x != 0) else {
            return;
        };
        let inv = pow_mod_u64(row[lead], p - 2, p);
        for x in row.iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        let pos = self.pivots.partition_point(|&q| q < lead);
        self.rows.insert(pos, row);
        self.pivots.insert(pos, lead);
    }

    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[f] = 1;
            for i in (0..self.rows.len()).rev() {
                let pc = self.pivots[i];
                let row = &self.rows[i];
                let mut s = 0u128;
                for c in (pc + 1)..self.cols {
                    s = (s + row[c] as u128 * v[c] as u128) % p as u128;
                }
                v[pc] = ((p as u128 - s) % p as u128) as u64;
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::rat;
    use rand_core::{RngCore, SeedableRng};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
            .collect()
    }

    fn residual_is_zero(mat: &[Vec<Rat>], v: &[Rat]) -> bool {
        mat.iter().all(|row| {
            row.iter()
                .zip(v)
                .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
                .is_zero()
        })
    }

    #[test]
    fn rank_one_matrix_has_line_kernel() {
        let mat = m(&[&[1, 1], &[2, 2]]);
        let basis = rat_nullspace(&mat);
        assert_eq!(basis.len(), 1);
        // (1, -1) up to scaling
        let v = &basis[0];
        assert!(residual_is_zero(&mat, v));
        assert_eq!(v[0].clone() + v[1].clone(), Rat::zero());
        assert!(!v[0].is_zero());
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let mat = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(rat_nullspace(&mat).is_empty());
        assert!(rat_nullspace(&[]).is_empty());
    }

    #[test]
    fn random_rank_two_wide_matrix() {
        // 2 x 4 with independent rows: kernel has dimension 2 and every
        // basis vector multiplies back to zero.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6e75_7131);
        for _ in 0..20 {
            let mut mat = Vec::new();
            for _ in 0..2 {
                let row: Vec<Rat> = (0..4)
                    .map(|_| rat((rng.next_u64() % 19) as i64 - 9, 1))
                    .collect();
                mat.push(row);
            }
            let mut k = RatKernel::new(4);
            for row in &mat {
                k.push_row(row);
            }
            if k.rank() < 2 {
                continue; // degenerate draw
            }
            let basis = k.kernel_basis();
            assert_eq!(basis.len(), 2);
            for v in &basis {
                assert!(residual_is_zero(&mat, v));
            }
        }
    }

    #[test]
    fn fp_kernel_matches_hand_computation() {
        // Over F_5: x + 2y = 0 has kernel spanned by (3, 1): 3 + 2 = 5 = 0.
        let mut k = FpKernel::new(5, 2);
        k.push_row(vec![1, 2]);
        let basis = k.kernel_basis();
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert_eq!((v[0] + 2 * v[1]) % 5, 0);
        assert!(v.iter().any(|&x| x != 0));
    }
}
