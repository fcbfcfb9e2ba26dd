//! Exact linear algebra over the rationals and the integers.
//!
//! Everything here is dimension-checked and exact: determinants use Bareiss
//! fraction-free elimination on an integer-scaled copy to control the size of
//! intermediate values, linear systems are solved by rational Gaussian
//! elimination, and the integer-lattice routines (Hermite form, unimodular
//! completion, basis reduction) only ever apply unimodular row operations.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{denominator_lcm, from_int, Int, Rat};

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        QMatrix {
            nrows,
            ncols,
            data: vec![Rat::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
        }
        Ok(QMatrix {
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.nrows).map(move |i| self.row(i))
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.ncols {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns, vector has {}",
                self.ncols,
                v.len()
            )));
        }
        Ok(self.rows().map(|r| dot(r, v)).collect())
    }

    /// Determinant by Bareiss fraction-free elimination. Rows are first
    /// scaled to integers (tracking the scale product), so every division in
    /// the elimination is exact.
    pub fn determinant(&self) -> Result<Rat> {
        if self.nrows != self.ncols {
            return Err(Error::NonSquareMatrix {
                rows: self.nrows,
                cols: self.ncols,
            });
        }
        let n = self.nrows;
        if n == 0 {
            return Ok(Rat::one());
        }
        let mut scale = Int::one();
        let mut m: Vec<Vec<Int>> = Vec::with_capacity(n);
        for i in 0..n {
            let l = denominator_lcm(self.row(i));
            scale *= &l;
            m.push(
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect(),
            );
        }
        let mut sign = 1i8;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Rat::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = t / &prev; // exact by the Bareiss identity
                }
                m[i][k] = Int::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone() * Int::from(sign);
        Ok(Rat::new(det, scale))
    }

    /// Solves `self * x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[Rat]) -> Result<Vec<Rat>> {
        if self.nrows != self.ncols {
            return Err(Error::NonSquareMatrix {
                rows: self.nrows,
                cols: self.ncols,
            });
        }
        if b.len() != self.nrows {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} rows, rhs has {}",
                self.nrows,
                b.len()
            )));
        }
        let n = self.nrows;
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        for k in 0..n {
            let pivot = (k..n)
                .find(|&i| !a[i][k].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(k, pivot);
            let p = a[k][k].clone();
            for j in k..=n {
                a[k][j] = &a[k][j] / &p;
            }
            for i in 0..n {
                if i != k && !a[i][k].is_zero() {
                    let f = a[i][k].clone();
                    for j in k..=n {
                        let t = &a[k][j] * &f;
                        a[i][j] = &a[i][j] - t;
                    }
                }
            }
        }
        Ok(a.into_iter().map(|r| r[n].clone()).collect())
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self) -> Result<QMatrix> {
        if self.nrows != self.ncols {
            return Err(Error::NonSquareMatrix {
                rows: self.nrows,
                cols: self.ncols,
            });
        }
        let n = self.nrows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::one();
            cols.push(self.solve(&e)?);
        }
        let mut inv = QMatrix::zero(n, n);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                inv[(i, j)] = col[i].clone();
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.ncols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.ncols + j]
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Inner product of a rational point with an integer functional.
pub fn dot_int(a: &[Rat], e: &[Int]) -> Rat {
    debug_assert_eq!(a.len(), e.len());
    a.iter().zip(e).map(|(x, n)| x * from_int(n.clone())).sum()
}

pub fn dot_ii(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rat], s: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * s).collect()
}

pub fn int_to_rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| from_int(x.clone())).collect()
}

/// Rank of a set of rational vectors.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in r + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &piv;
                for j in c..ncols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of the right nullspace `{x : M x = 0}`.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for j in c..ncols {
            m[r][j] = &m[r][j] / &piv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Builds the matrix with diagonal `1 + T_i` and ones elsewhere.
pub fn assemble_diag_plus_ones(t: &[Rat]) -> QMatrix {
    let d = t.len();
    let mut m = QMatrix::zero(d, d);
    for i in 0..d {
        for j in 0..d {
            m[(i, j)] = if i == j {
                Rat::one() + &t[i]
            } else {
                Rat::one()
            };
        }
    }
    m
}

/// Determinant of the matrix with diagonal `1 + T_i` and ones elsewhere, in
/// closed form: `(1 + sum 1/T_i) * prod T_i`. When some `T_i` is zero the
/// closed form is undefined and the determinant of the assembled matrix is
/// computed instead.
pub fn det_diag_plus_ones(t: &[Rat]) -> Result<Rat> {
    if t.is_empty() {
        return Ok(Rat::one());
    }
    if t.iter().any(|x| x.is_zero()) {
        return assemble_diag_plus_ones(t).determinant();
    }
    let sum_inv: Rat = t.iter().map(|x| x.recip()).sum();
    let prod: Rat = t.iter().product();
    Ok((Rat::one() + sum_inv) * prod)
}

/// Divides an integer vector by the gcd of its entries, returning the
/// primitive vector (same direction) and the positive content.
pub fn primitive_part(v: &[Int]) -> Result<(Vec<Int>, Int)> {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok((v.iter().map(|x| x / &g).collect(), g))
}

pub fn is_primitive(v: &[Int]) -> bool {
    matches!(primitive_part(v), Ok((_, g)) if g.is_one())
}

/// Row-style Hermite normal form under left multiplication by `GL_n(Z)`:
/// echelon shape, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`. This is the canonical representative used to compare
/// configurations up to unimodular equivalence.
pub fn hermite_normal_form(mat: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut m: Vec<Vec<Int>> = mat.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // clear the column below row r with euclidean row operations
        loop {
            let mut best: Option<usize> = None;
            for i in r..nrows {
                if !m[i][c].is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => m[i][c].abs() < m[b][c].abs(),
                    };
                    if better {
                        best = Some(i);
                    }
                }
            }
            let Some(b) = best else { break };
            m.swap(r, b);
            let mut any = false;
            for i in r + 1..nrows {
                if !m[i][c].is_zero() {
                    let q = div_round_to_zero(&m[i][c], &m[r][c]);
                    for j in 0..ncols {
                        let t = &m[r][j] * &q;
                        m[i][j] = &m[i][j] - t;
                    }
                    any = any || !m[i][c].is_zero();
                }
            }
            if !any {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for j in 0..ncols {
                m[r][j] = -m[r][j].clone();
            }
        }
        for i in 0..r {
            let q = m[i][c].div_floor(&m[r][c]);
            if !q.is_zero() {
                for j in 0..ncols {
                    let t = &m[r][j] * &q;
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        r += 1;
    }
    m
}

fn div_round_to_zero(a: &Int, b: &Int) -> Int {
    a / b
}

/// Unimodular `U` with `U k = g e_1`, where `g = gcd(k) > 0`. Built from
/// pairwise extended-gcd row operations, so `det U = ±1` by construction.
pub fn unimodular_completion(k: &[Int]) -> Result<Vec<Vec<Int>>> {
    let n = k.len();
    if n == 0 || k.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let mut u: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let mut row = vec![Int::zero(); n];
            row[i] = Int::one();
            row
        })
        .collect();
    let mut w: Vec<Int> = k.to_vec();
    for i in 1..n {
        if w[i].is_zero() {
            continue;
        }
        let (a, b) = (w[0].clone(), w[i].clone());
        let eg = a.extended_gcd(&b);
        let (g, s, t) = (eg.gcd, eg.x, eg.y);
        // [[s, t], [-b/g, a/g]] is unimodular and sends (a, b) to (g, 0)
        let (p, q) = (-(&b / &g), &a / &g);
        for j in 0..n {
            let r0 = &u[0][j] * &s + &u[i][j] * &t;
            let ri = &u[0][j] * &p + &u[i][j] * &q;
            u[0][j] = r0;
            u[i][j] = ri;
        }
        w[0] = g;
        w[i] = Int::zero();
    }
    if w[0].is_negative() {
        for j in 0..n {
            u[0][j] = -u[0][j].clone();
        }
        w[0] = -w[0].clone();
    }
    Ok(u)
}

/// Lattice basis reduction (LLL with delta = 3/4) on the rows. Used to keep
/// quotient-lattice bases short; every step is a unimodular row operation.
pub fn lll_reduce(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = rows.len();
    if n <= 1 {
        return rows.to_vec();
    }
    let mut b: Vec<Vec<Int>> = rows.to_vec();
    let delta = Rat::new(Int::from(3), Int::from(4));

    // rational Gram-Schmidt over the current basis
    let gram = |b: &Vec<Vec<Int>>| -> (Vec<Vec<Rat>>, Vec<Rat>, Vec<Vec<Rat>>) {
        let mut star: Vec<Vec<Rat>> = Vec::with_capacity(n);
        let mut norms: Vec<Rat> = Vec::with_capacity(n);
        let mut mu = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            let mut v = int_to_rat_vec(&b[i]);
            for j in 0..i {
                let m = if norms[j].is_zero() {
                    Rat::zero()
                } else {
                    dot(&int_to_rat_vec(&b[i]), &star[j]) / &norms[j]
                };
                mu[i][j] = m.clone();
                let proj = scale(&star[j], &m);
                v = sub(&v, &proj);
            }
            norms.push(dot(&v, &v));
            star.push(v);
        }
        (star, norms, mu)
    };

    let round = |r: &Rat| -> Int {
        let half = Rat::new(Int::one(), Int::from(2));
        crate::num::floor_rat(&(r + half))
    };

    let mut k = 1usize;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        if guard > 10_000 {
            break; // refuse to loop forever; the basis is still valid
        }
        let (_, _norms, mu) = gram(&b);
        for j in (0..k).rev() {
            let q = round(&mu[k][j]);
            if !q.is_zero() {
                for t in 0..b[k].len() {
                    let d = &b[j][t] * &q;
                    b[k][t] = &b[k][t] - d;
                }
            }
        }
        let (_, norms2, mu2) = gram(&b);
        let lovasz = (&delta - &mu2[k][k - 1] * &mu2[k][k - 1]) * &norms2[k - 1];
        if norms2[k] >= lovasz {
            k += 1;
        } else {
            b.swap(k, k - 1);
            k = k.max(2) - 1;
        }
    }
    b
}

/// Exact feasibility of a linear inequality system, returning a satisfying
/// point when one exists.
///
/// Each constraint `(c, o)` means `<x, c> + o >= 0`.  Solved by a phase-one
/// simplex over exact rationals with Bland's rule: variables are split into
/// nonnegative parts, every row gets an artificial variable, and the
/// artificial sum is driven to zero exactly when the system is consistent.
/// A pivot budget aborts with `GuardExceeded` rather than grinding on an
/// adversarial instance.
pub fn feasible_point(dim: usize, constraints: &[(Vec<Rat>, Rat)]) -> Result<Option<Vec<Rat>>> {
    use std::collections::BTreeSet;

    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    let mut seen: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
    for (c, o) in constraints {
        if c.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "constraint has {} coefficients, expected {}",
                c.len(),
                dim
            )));
        }
        if c.iter().all(|x| x.is_zero()) {
            if o.is_negative() {
                return Ok(None);
            }
            continue;
        }
        if seen.insert((c.clone(), o.clone())) {
            rows.push((c.clone(), o.clone()));
        }
    }
    if dim == 0 || rows.is_empty() {
        return Ok(Some(vec![Rat::zero(); dim]));
    }

    // tableau columns: x+ | x- | slack | artificial | rhs, one row per
    // constraint written as <x, c> - s = -o with rhs made nonnegative
    let m = rows.len();
    let art0 = 2 * dim + m;
    let cols = art0 + m + 1;
    let rhs_col = cols - 1;
    let mut t: Vec<Vec<Rat>> = vec![vec![Rat::zero(); cols]; m];
    for (i, (c, o)) in rows.iter().enumerate() {
        let rhs = -o.clone();
        let sgn = if rhs.is_negative() {
            -Rat::one()
        } else {
            Rat::one()
        };
        for j in 0..dim {
            let v = &c[j] * &sgn;
            t[i][dim + j] = -v.clone();
            t[i][j] = v;
        }
        t[i][2 * dim + i] = -sgn.clone();
        t[i][art0 + i] = Rat::one();
        t[i][rhs_col] = rhs * &sgn;
    }
    let mut basis: Vec<usize> = (0..m).map(|i| art0 + i).collect();

    // reduced-cost row for minimizing the artificial sum; the artificial
    // block is the identity, so costs start as minus the column sums
    let mut red: Vec<Rat> = vec![Rat::zero(); cols];
    for (j, slot) in red.iter_mut().enumerate() {
        for row in &t {
            *slot -= &row[j];
        }
        if j >= art0 && j < rhs_col {
            *slot += Rat::one();
        }
    }

    let mut pivots = 0u64;
    loop {
        // entering column: Bland's rule, never readmitting an artificial
        let Some(e) = (0..art0).find(|&j| red[j].is_negative()) else {
            break;
        };
        // leaving row: tightest ratio, ties by smallest basic index
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if t[i][e].is_positive() {
                let ratio = &t[i][rhs_col] / &t[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => {
                        ratio < *best || (ratio == *best && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((l, _)) = leave else {
            return Err(Error::Internal(
                "phase-one objective is bounded but no pivot row was found".into(),
            ));
        };
        let p = t[l][e].clone();
        for x in t[l].iter_mut() {
            *x /= &p;
        }
        for i in 0..m {
            if i != l && !t[i][e].is_zero() {
                let f = t[i][e].clone();
                for j in 0..cols {
                    let d = &t[l][j] * &f;
                    t[i][j] -= d;
                }
            }
        }
        if !red[e].is_zero() {
            let f = red[e].clone();
            for (j, slot) in red.iter_mut().enumerate() {
                let d = &t[l][j] * &f;
                *slot -= d;
            }
        }
        basis[l] = e;
        pivots += 1;
        if pivots > 100_000 {
            return Err(Error::GuardExceeded(
                "feasibility search exceeded the simplex pivot budget".into(),
            ));
        }
    }

    // optimum of the artificial sum is -red[rhs]; positive means infeasible
    if red[rhs_col].is_negative() {
        return Ok(None);
    }

    let mut value: Vec<Rat> = vec![Rat::zero(); cols];
    for (i, &b) in basis.iter().enumerate() {
        value[b] = t[i][rhs_col].clone();
    }
    let x: Vec<Rat> = (0..dim).map(|j| &value[j] - &value[dim + j]).collect();
    for (c, o) in constraints {
        let mut s = o.clone();
        for (cj, xj) in c.iter().zip(&x) {
            s += cj * xj;
        }
        if s.is_negative() {
            return Err(Error::Internal(
                "feasibility witness failed the defining inequalities".into(),
            ));
        }
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat, rat_int};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent determinant oracle: cofactor expansion along the first row.
    fn det_cofactor(m: &QMatrix) -> Rat {
        let n = m.nrows();
        if n == 0 {
            return Rat::one();
        }
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = Rat::zero();
        for j in 0..n {
            if m[(0, j)].is_zero() {
                continue;
            }
            let mut minor = QMatrix::zero(n - 1, n - 1);
            for i in 1..n {
                let mut cj = 0;
                for c in 0..n {
                    if c == j {
                        continue;
                    }
                    minor[(i - 1, cj)] = m[(i, c)].clone();
                    cj += 1;
                }
            }
            let term = &m[(0, j)] * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn determinant_matches_cofactor_oracle_on_pinned_cases() {
        let id = QMatrix::identity(3);
        assert_eq!(id.determinant().unwrap(), rat_int(1));

        let m = QMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(4)],
        ])
        .unwrap();
        assert_eq!(det_cofactor(&m), rat_int(-2));
        assert_eq!(m.determinant().unwrap(), rat_int(-2));

        // rank-deficient
        let s = QMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ])
        .unwrap();
        assert_eq!(s.determinant().unwrap(), rat_int(0));

        // the search matrix of the approximation step for x = (1/2, 7/20),
        // c = (1, 1): rows c_j with diagonal c_j - 1/x_j
        let a = QMatrix::from_rows(vec![
            vec![rat(1, 1) - rat(2, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1) - rat(20, 7)],
        ])
        .unwrap();
        assert_eq!(det_cofactor(&a), rat(6, 7));
        assert_eq!(a.determinant().unwrap(), rat(6, 7));
    }

    #[test]
    fn determinant_agrees_with_cofactor_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for case in 0..500 {
            let n = 1 + case % 6;
            let mut m = QMatrix::zero(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
                }
            }
            assert_eq!(m.determinant().unwrap(), det_cofactor(&m));
        }
    }

    #[test]
    fn diag_plus_ones_formula() {
        // closed form (1 + sum 1/T_i) prod T_i
        assert_eq!(
            det_diag_plus_ones(&[rat_int(1), rat_int(2), rat_int(3)]).unwrap(),
            rat_int(17)
        );
        assert_eq!(
            det_diag_plus_ones(&[rat_int(1), rat_int(1)]).unwrap(),
            rat_int(3)
        );
        // zero entry: falls back to the assembled matrix
        let t = [rat_int(0), rat_int(5)];
        assert_eq!(
            det_diag_plus_ones(&t).unwrap(),
            assemble_diag_plus_ones(&t).determinant().unwrap()
        );
        assert_eq!(det_diag_plus_ones(&t).unwrap(), rat_int(5));
    }

    #[test]
    fn diag_plus_ones_matches_assembled_determinant_randomly() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for case in 0..500 {
            let d = 1 + case % 6;
            let t: Vec<Rat> = (0..d)
                .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
                .collect();
            assert_eq!(
                det_diag_plus_ones(&t).unwrap(),
                assemble_diag_plus_ones(&t).determinant().unwrap(),
                "T = {t:?}"
            );
        }
    }

    #[test]
    fn primitive_part_examples() {
        let (v, g) = primitive_part(&[int(-14), int(-6)]).unwrap();
        assert_eq!(v, vec![int(-7), int(-3)]);
        assert_eq!(g, int(2));

        let (v, g) = primitive_part(&[int(0), int(5), int(0)]).unwrap();
        assert_eq!(v, vec![int(0), int(1), int(0)]);
        assert_eq!(g, int(5));

        assert_eq!(primitive_part(&[int(0), int(0)]), Err(Error::ZeroVector));

        // idempotence
        let (w, g2) = primitive_part(&v).unwrap();
        assert_eq!(w, v);
        assert_eq!(g2, int(1));
        assert!(is_primitive(&v));
        assert!(!is_primitive(&[int(2), int(4)]));
    }

    #[test]
    fn solve_identity_and_barycentric_system() {
        let b = vec![rat(1, 2), rat(-3, 4), rat_int(5)];
        assert_eq!(QMatrix::identity(3).solve(&b).unwrap(), b);

        // barycentric coordinates of the origin in conv((1,0),(0,1),(-3,-2)):
        // columns are the vertices plus the affine row of ones
        let m = QMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(0), rat_int(-3)],
            vec![rat_int(0), rat_int(1), rat_int(-2)],
            vec![rat_int(1), rat_int(1), rat_int(1)],
        ])
        .unwrap();
        let sol = m.solve(&[rat_int(0), rat_int(0), rat_int(1)]).unwrap();
        assert_eq!(sol, vec![rat(1, 2), rat(1, 3), rat(1, 6)]);
        // substitution check: the solution really is a barycentric expression
        assert_eq!(m.mul_vec(&sol).unwrap(), vec![rat_int(0), rat_int(0), rat_int(1)]);

        let sing = QMatrix::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ])
        .unwrap();
        assert_eq!(sing.solve(&[rat_int(1), rat_int(1)]), Err(Error::SingularMatrix));
    }

    #[test]
    fn solve_reproduces_rhs_on_random_nonsingular_systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 200 {
            let n = 1 + done % 5;
            let mut m = QMatrix::zero(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = rat(rng.gen_range(-9..=9), rng.gen_range(1..=3));
                }
            }
            if m.determinant().unwrap().is_zero() {
                continue;
            }
            let b: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-9..=9), 1)).collect();
            let x = m.solve(&b).unwrap();
            assert_eq!(m.mul_vec(&x).unwrap(), b);
            let inv = m.inverse().unwrap();
            assert_eq!(inv.mul_vec(&b).unwrap(), x);
            done += 1;
        }
    }

    #[test]
    fn hermite_form_is_canonical_under_row_operations() {
        let m = vec![
            vec![int(2), int(4), int(4)],
            vec![int(-6), int(6), int(12)],
            vec![int(10), int(4), int(16)],
        ];
        let h1 = hermite_normal_form(&m);
        // permute and add rows: the Hermite form must not change
        let m2 = vec![
            vec![int(10), int(4), int(16)],
            vec![int(2), int(4), int(4)],
            vec![int(-4), int(10), int(16)], // row0 + row1 of m
        ];
        let h2 = hermite_normal_form(&m2);
        assert_eq!(h1, h2);
        // pivots positive
        assert!(h1[0][0] > int(0));
    }

    #[test]
    fn unimodular_completion_sends_vector_to_first_axis() {
        for k in [
            vec![int(1), int(3), int(2)],
            vec![int(6), int(10), int(15)],
            vec![int(-4), int(6)],
            vec![int(5)],
        ] {
            let u = unimodular_completion(&k).unwrap();
            let n = k.len();
            let image: Vec<Int> = (0..n).map(|i| dot_ii(&u[i], &k)).collect();
            let mut g = Int::zero();
            for x in &k {
                g = g.gcd(x);
            }
            assert_eq!(image[0], g);
            for x in &image[1..] {
                assert!(x.is_zero());
            }
            // det U = +-1 via the rational determinant
            let qm = QMatrix::from_rows(u.iter().map(|r| int_to_rat_vec(r)).collect()).unwrap();
            let d = qm.determinant().unwrap();
            assert!(d == rat_int(1) || d == rat_int(-1));
        }
        assert_eq!(unimodular_completion(&[int(0), int(0)]), Err(Error::ZeroVector));
    }

    #[test]
    fn lll_keeps_the_lattice_and_shrinks_entries() {
        let rows = vec![vec![int(1), int(0), int(47)], vec![int(0), int(1), int(95)]];
        let red = lll_reduce(&rows);
        // same lattice: Hermite forms agree
        assert_eq!(hermite_normal_form(&rows), hermite_normal_form(&red));
        let max = red
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .unwrap();
        assert!(max < int(47));
    }

    #[test]
    fn nullspace_and_rank() {
        let rows = vec![vec![rat_int(1), rat_int(2), rat_int(3)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(&rows[0], v).is_zero());
        }
        assert_eq!(rank(&rows), 1);
        assert_eq!(
            rank(&[
                vec![rat_int(1), rat_int(2)],
                vec![rat_int(2), rat_int(4)],
                vec![rat_int(0), rat_int(1)]
            ]),
            2
        );
    }

    #[test]
    fn feasible_point_finds_witness() {
        // x >= 1, y >= 1, x + y <= 3
        let cons = vec![
            (vec![rat_int(1), rat_int(0)], rat_int(-1)),
            (vec![rat_int(0), rat_int(1)], rat_int(-1)),
            (vec![rat_int(-1), rat_int(-1)], rat_int(3)),
        ];
        let p = feasible_point(2, &cons).unwrap().unwrap();
        for (c, o) in &cons {
            assert!(!(dot(c, &p) + o).is_negative());
        }

        // x >= 2 and x <= 1: empty
        let cons = vec![
            (vec![rat_int(1)], rat_int(-2)),
            (vec![rat_int(-1)], rat_int(1)),
        ];
        assert_eq!(feasible_point(1, &cons).unwrap(), None);

        // equality slice: x = 1/2 within [0,1]^2
        let cons = vec![
            (vec![rat_int(1), rat_int(0)], crate::num::rat(-1, 2)),
            (vec![rat_int(-1), rat_int(0)], crate::num::rat(1, 2)),
            (vec![rat_int(0), rat_int(1)], rat_int(0)),
            (vec![rat_int(0), rat_int(-1)], rat_int(1)),
        ];
        let p = feasible_point(2, &cons).unwrap().unwrap();
        assert_eq!(p[0], crate::num::rat(1, 2));
    }

    #[test]
    fn feasible_point_handles_banded_system() {
        // a 13-variable wall/box/cell system that once stalled the search
        let n = 13;
        let half = crate::num::rat(1, 2);
        let mut cons: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for i in 0..n {
            let mut lo = vec![rat_int(0); n];
            lo[i] = rat_int(1);
            cons.push((lo, -half.clone()));
            let mut hi = vec![rat_int(0); n];
            hi[i] = rat_int(-1);
            cons.push((hi, rat_int(1)));
        }
        let walls: Vec<(usize, [i64; 3])> = vec![
            (0, [1, -3, 4]),
            (1, [1, -2, 1]),
            (2, [1, -3, 1]),
            (3, [1, -2, 1]),
            (4, [1, -1, 1]),
            (5, [1, -4, 1]),
            (6, [1, -1, 1]),
            (7, [1, -4, 1]),
            (8, [1, -1, 1]),
            (9, [1, -2, 1]),
            (10, [1, -3, 1]),
        ];
        for (i, w) in walls {
            let mut c = vec![rat_int(0); n];
            c[i] = rat_int(w[0]);
            c[i + 1] = rat_int(w[1]);
            c[i + 2] = rat_int(w[2]);
            cons.push((c, rat_int(0)));
        }
        let mut c = vec![rat_int(0); n];
        c[0] = rat_int(1);
        c[11] = rat_int(3);
        c[12] = rat_int(-2);
        cons.push((c, rat_int(0)));
        let mut c = vec![rat_int(0); n];
        c[0] = rat_int(-5);
        c[1] = rat_int(3);
        c[12] = rat_int(4);
        cons.push((c, rat_int(0)));
        let mut c = vec![rat_int(0); n];
        c[0] = crate::num::rat(1, 4);
        c[1] = crate::num::rat(1, 4);
        cons.push((c, -half.clone()));
        let mut c = vec![rat_int(0); n];
        c[0] = crate::num::rat(1, 3);
        c[12] = crate::num::rat(1, 3);
        cons.push((c, -half.clone()));

        let p = feasible_point(n, &cons).unwrap();
        if let Some(p) = &p {
            for (c, o) in &cons {
                assert!(!(dot(c, p) + o).is_negative());
            }
        }
    }
}
