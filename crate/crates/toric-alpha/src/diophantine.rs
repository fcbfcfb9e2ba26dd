//! Simultaneous rational approximation from below: given weights
//! `1 <= c_i <= q` and targets `x_i > 0`, find a nonnegative integer vector
//! `z != 0` with `c_j z_j / (1 + sum c_i z_i) < x_j` for every `j`.
//!
//! A solution exists whenever `sum x_i >= sum_{i<=d} q/(1+u_{i,q})` (the
//! doubled Sylvester tail sum) and `x` is not exactly the extremal vector
//! `(q/(1+u_{i,q}))_i`; the solver realizes that existence proof: targets
//! with coordinate sum at least 1 admit a direct scaled floor vector, and
//! below 1 the first prefix where the product/sum inequality fails feeds a
//! lattice search over the Minkowski body of the associated matrix.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::num::{ceil_rat, denominator_lcm, floor_rat, from_int, Int, Rat};
use crate::sylvester;

/// The extremal target vector `(q/(1+u_{i,q}))_{i=1..d}`: the unique
/// descending vector with the threshold coordinate sum admitting no solution.
pub fn extremal_vector(d: usize, q: &Int) -> Result<Vec<Rat>> {
    if d == 0 {
        return Err(Error::OutOfRange("dimension must be >= 1".into()));
    }
    let mut table = sylvester::SylvesterTable::new(crate::num::to_u32(q)?)?;
    let mut out = Vec::with_capacity(d);
    for i in 1..=d {
        let u = table.value(i as u32)?.clone();
        out.push(Rat::new(q.clone(), u + Int::one()));
    }
    Ok(out)
}

/// A validated problem instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    q: Int,
    c: Vec<Rat>,
    x: Vec<Rat>,
}

impl Instance {
    /// Requires `q >= 1`, `1 <= c_i <= q`, and `x` descending and positive.
    pub fn new(q: Int, c: Vec<Rat>, x: Vec<Rat>) -> Result<Instance> {
        if q < Int::one() {
            return Err(Error::OutOfRange("q must be a positive integer".into()));
        }
        if c.len() != x.len() || x.is_empty() {
            return Err(Error::DimensionMismatch(
                "weights and targets must have equal positive length".into(),
            ));
        }
        let q_rat = from_int(q.clone());
        for (i, ci) in c.iter().enumerate() {
            if ci < &Rat::one() || ci > &q_rat {
                return Err(Error::OutOfRange(format!(
                    "weight c_{} = {} is outside [1, q]",
                    i + 1,
                    ci
                )));
            }
        }
        check_descending_positive(&x)?;
        Ok(Instance { q, c, x })
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn q(&self) -> &Int {
        &self.q
    }

    pub fn c(&self) -> &[Rat] {
        &self.c
    }

    pub fn x(&self) -> &[Rat] {
        &self.x
    }

    /// `sum x_i >= sum q/(1+u_{i,q})`: the existence hypothesis.
    pub fn hypothesis_holds(&self) -> Result<bool> {
        let ext = extremal_vector(self.dim(), &self.q)?;
        let sum: Rat = self.x.iter().sum();
        let ext_sum: Rat = ext.iter().sum();
        Ok(sum >= ext_sum)
    }

    /// Is `x` exactly the extremal vector?
    pub fn is_extremal(&self) -> Result<bool> {
        Ok(self.x == extremal_vector(self.dim(), &self.q)?)
    }
}

/// One verified inequality `lhs < rhs` of a solution certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateLine {
    pub lhs: Rat,
    pub rhs: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// Nonnegative, not all zero.
    pub z: Vec<Int>,
    /// Per-coordinate inequalities `c_j z_j/(1+sum c_i z_i) < x_j`, already
    /// checked exactly.
    pub certificate: Vec<CertificateLine>,
    /// False when the instance missed the existence hypothesis and the
    /// solution came from the fallback brute-force search.
    pub hypothesis_met: bool,
}

fn check_descending_positive(x: &[Rat]) -> Result<()> {
    for w in x.windows(2) {
        if w[0] < w[1] {
            return Err(Error::Malformed(
                "targets must be sorted in descending order".into(),
            ));
        }
    }
    if x.iter().any(|v| !v.is_positive()) {
        return Err(Error::Malformed("targets must be strictly positive".into()));
    }
    Ok(())
}

/// Smallest `l` with `prod_{i<=l} x_i > q^l (1 - sum_{i<=l} x_i)`, or `None`
/// when every prefix satisfies the inequality. `x` must be descending and
/// positive. The returned index is 1-based.
pub fn violation_index(x: &[Rat], q: &Int) -> Result<Option<usize>> {
    if q < &Int::one() {
        return Err(Error::OutOfRange("q must be a positive integer".into()));
    }
    check_descending_positive(x)?;
    let mut product = Rat::one();
    let mut sum = Rat::zero();
    let mut q_power = Rat::one();
    let q_rat = from_int(q.clone());
    for (i, xi) in x.iter().enumerate() {
        product *= xi;
        sum += xi;
        q_power *= &q_rat;
        if product > &q_power * &(Rat::one() - &sum) {
            return Ok(Some(i + 1));
        }
    }
    Ok(None)
}

/// The search matrix: row `j` equals the weight vector `c` except that the
/// diagonal entry is `c_j - 1/x_j`. Its determinant is
/// `(-1)^d (1 - sum c_i x_i) / prod x_i`, of absolute value < 1 exactly under
/// the search precondition.
pub fn search_matrix(x: &[Rat], c: &[Rat]) -> QMatrix {
    let d = x.len();
    let mut m = QMatrix::zero(d, d);
    for j in 0..d {
        for k in 0..d {
            m[(j, k)] = c[k].clone();
        }
        m[(j, j)] = &c[j] - x[j].recip();
    }
    m
}

fn closed_form_det(x: &[Rat], c: &[Rat]) -> Rat {
    let d = x.len();
    let mut prod = Rat::one();
    let mut weighted_sum = Rat::zero();
    for (xi, ci) in x.iter().zip(c) {
        prod *= xi;
        weighted_sum += ci * xi;
    }
    let sign = if d % 2 == 0 { Rat::one() } else { -Rat::one() };
    sign * (Rat::one() - weighted_sum) / prod
}

/// Finds a nonzero nonnegative integer vector `z` with
/// `z_j/(1 + sum c_i z_i) < x_j` for all `j`, given weights `c_i >= 1` and
/// the strict sandwich `1 - prod x_i < sum c_i x_i < 1`.
///
/// The body `{ v : ||A v||_inf < 1 }` of the search matrix `A` has volume
/// `2^d / |det A| > 2^d`, so it contains a nonzero lattice point; all integer
/// points of the bounding box `|z_k| <= floor(sum_j |(A^{-1})_{kj}|)` are
/// scanned and, among the sign choices landing in `N^d`, the solution with
/// least coordinate sum (then lexicographically least) is returned.
pub fn minkowski_solve(x: &[Rat], c: &[Rat]) -> Result<Vec<Int>> {
    if x.is_empty() || x.len() != c.len() {
        return Err(Error::DimensionMismatch(
            "targets and weights must have equal positive length".into(),
        ));
    }
    if x.iter().any(|v| !v.is_positive()) {
        return Err(Error::Malformed("targets must be strictly positive".into()));
    }
    if c.iter().any(|v| v < &Rat::one()) {
        return Err(Error::Malformed("weights must be >= 1".into()));
    }
    let d = x.len();
    let mut prod = Rat::one();
    let mut weighted_sum = Rat::zero();
    for (xi, ci) in x.iter().zip(c) {
        prod *= xi;
        weighted_sum += ci * xi;
    }
    if weighted_sum >= Rat::one() || Rat::one() - &prod >= weighted_sum {
        return Err(Error::HypothesisViolated(format!(
            "need 1 - prod x = {} < sum c x = {} < 1",
            Rat::one() - &prod,
            weighted_sum
        )));
    }
    let a = search_matrix(x, c);
    let det = a.determinant()?;
    // volume condition, cross-checked against the closed form
    debug_assert_eq!(det, closed_form_det(x, c));
    if det.abs() >= Rat::one() {
        return Err(Error::Internal(
            "search matrix fails the volume condition despite the sandwich precondition".into(),
        ));
    }
    let inv = a.inverse()?;
    let mut bounds = Vec::with_capacity(d);
    for k in 0..d {
        let mut s = Rat::zero();
        for j in 0..d {
            s += inv[(k, j)].abs();
        }
        bounds.push(floor_rat(&s));
    }
    let mut best: Option<Vec<Int>> = None;
    let mut current = vec![Int::zero(); d];
    scan_signed_box(&bounds, 0, &mut current, &mut |z| {
        if z.iter().all(|v| v.is_zero()) {
            return;
        }
        let zr: Vec<Rat> = z.iter().map(|v| from_int(v.clone())).collect();
        let image = a.mul_vec(&zr).expect("square matrix");
        if !image.iter().all(|v| v.abs() < Rat::one()) {
            return;
        }
        for candidate in [z.to_vec(), z.iter().map(|v| -v).collect::<Vec<Int>>()] {
            if candidate.iter().any(|v| v.is_negative()) {
                continue;
            }
            if !certificate_holds_unweighted(x, c, &candidate) {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => {
                    let key_new = (candidate.iter().sum::<Int>(), candidate.clone());
                    let key_old = (b.iter().sum::<Int>(), b.clone());
                    key_new < key_old
                }
            };
            if better {
                best = Some(candidate);
            }
        }
    });
    best.ok_or_else(|| {
        Error::Internal("search region exhausted without a lattice point: volume bound violated".into())
    })
}

fn scan_signed_box(bounds: &[Int], axis: usize, current: &mut Vec<Int>, f: &mut impl FnMut(&[Int])) {
    if axis == bounds.len() {
        f(current);
        return;
    }
    let mut v = -bounds[axis].clone();
    while v <= bounds[axis] {
        current[axis] = v.clone();
        scan_signed_box(bounds, axis + 1, current, f);
        v += Int::one();
    }
}

/// `z_j/(1+sum c_i z_i) < x_j` for all j (no weight on the numerator).
fn certificate_holds_unweighted(x: &[Rat], c: &[Rat], z: &[Int]) -> bool {
    let mut denom = Rat::one();
    for (ci, zi) in c.iter().zip(z) {
        denom += ci * from_int(zi.clone());
    }
    z.iter()
        .zip(x)
        .all(|(zj, xj)| from_int(zj.clone()) < xj * &denom)
}

/// Exact check of the full certificate: `z` nonnegative and not all zero,
/// and `c_j z_j/(1+sum c_i z_i) < x_j` for every `j`.
pub fn verify_solution(x: &[Rat], c: &[Rat], z: &[Int]) -> bool {
    if x.len() != c.len() || x.len() != z.len() || z.is_empty() {
        return false;
    }
    if z.iter().any(|v| v.is_negative()) || z.iter().all(|v| v.is_zero()) {
        return false;
    }
    let mut denom = Rat::one();
    for (ci, zi) in c.iter().zip(z) {
        denom += ci * from_int(zi.clone());
    }
    z.iter()
        .zip(c.iter().zip(x))
        .all(|(zj, (cj, xj))| cj * from_int(zj.clone()) < xj * &denom)
}

fn build_certificate(x: &[Rat], c: &[Rat], z: &[Int]) -> Vec<CertificateLine> {
    let mut denom = Rat::one();
    for (ci, zi) in c.iter().zip(z) {
        denom += ci * from_int(zi.clone());
    }
    z.iter()
        .zip(c.iter().zip(x))
        .map(|(zj, (cj, xj))| CertificateLine {
            lhs: cj * from_int(zj.clone()) / &denom,
            rhs: xj.clone(),
        })
        .collect()
}

/// Fallback search bound for instances below the existence hypothesis; also
/// the bound used by the brute-force oracle in the test suite.
const FALLBACK_SUM_BOUND: u64 = 30;

/// Brute force over all `z` with `sum z_i <= bound` in canonical order
/// (ascending coordinate sum, then lexicographic).
pub fn brute_force_search(x: &[Rat], c: &[Rat], bound: u64) -> Option<Vec<Int>> {
    let d = x.len();
    for total in 1..=bound {
        let mut z = vec![Int::zero(); d];
        if let Some(sol) = brute_rec(x, c, total, 0, &mut z) {
            return Some(sol);
        }
    }
    None
}

fn brute_rec(x: &[Rat], c: &[Rat], remaining: u64, axis: usize, z: &mut Vec<Int>) -> Option<Vec<Int>> {
    if axis == z.len() {
        if remaining == 0 && verify_solution(x, c, z) {
            return Some(z.clone());
        }
        return None;
    }
    for v in 0..=remaining {
        z[axis] = Int::from(v);
        let found = brute_rec(x, c, remaining - v, axis + 1, z);
        if found.is_some() {
            return found;
        }
    }
    z[axis] = Int::zero();
    None
}

/// `(floor(n x_j / c_j))_j` if that vector is nonzero and valid.
fn scaled_floor_vector(ratios: &[Rat], x: &[Rat], c: &[Rat], n: &Int) -> Option<Vec<Int>> {
    let n_rat = from_int(n.clone());
    let z: Vec<Int> = ratios.iter().map(|r| floor_rat(&(r * &n_rat))).collect();
    if z.iter().all(|v| v.is_zero()) || !verify_solution(x, c, &z) {
        return None;
    }
    Some(z)
}

/// Direct solution for targets with `sum x_i >= 1`: the first valid scaled
/// floor vector `(floor(N x_j / c_j))_j`, scanning `N` upward.
///
/// Termination: every `N >= max((sum c_i - 1)/(sum x_i - 1), min_j c_j/x_j)`
/// is valid when `sum x_i > 1`, because `c_j z_j <= N x_j` while
/// `1 + sum c_i z_i > 1 + N sum x_i - sum c_i >= N`; and the least common
/// denominator `L` of the ratios `x_j/c_j` is valid for any `sum x_i >= 1`,
/// because the floors are exact there, so `c_j z_j = N x_j < x_j (1 + N sum
/// x_i)`.  The scan stays dense up to a million to keep solutions small, then
/// jumps to the terminating bound.
fn direct_scaled_solution(x: &[Rat], c: &[Rat]) -> Result<Vec<Int>> {
    let ratios: Vec<Rat> = x.iter().zip(c).map(|(xi, ci)| xi / ci).collect();
    let sum: Rat = x.iter().sum();
    let cap: Int = {
        let exact_bound = denominator_lcm(&ratios);
        if sum > Rat::one() {
            let sum_c: Rat = c.iter().sum();
            let scale = ceil_rat(&((sum_c - Rat::one()) / (&sum - Rat::one())));
            let largest = ratios.iter().max().expect("nonempty targets");
            let nonzero = ceil_rat(&(Rat::one() / largest));
            exact_bound.min(scale.max(nonzero))
        } else {
            exact_bound
        }
    };
    let scan_cap = cap.clone().min(Int::from(1_000_000));
    let mut n = Int::one();
    while n <= scan_cap {
        if let Some(z) = scaled_floor_vector(&ratios, x, c, &n) {
            return Ok(z);
        }
        n += Int::one();
    }
    if cap > scan_cap {
        if let Some(z) = scaled_floor_vector(&ratios, x, c, &cap) {
            return Ok(z);
        }
    }
    Err(Error::Internal(
        "no scaled floor vector below the terminating bound".into(),
    ))
}

/// Full solver. Errors with `ExtremalInstance` when `x` is exactly the
/// extremal vector (no solution exists there, for any admissible weights);
/// instances below the hypothesis threshold fall back to a bounded brute
/// force and report `hypothesis_met: false` on success.
pub fn solve(inst: &Instance) -> Result<Solution> {
    if inst.is_extremal()? {
        return Err(Error::ExtremalInstance);
    }
    if !inst.hypothesis_holds()? {
        return match brute_force_search(inst.x(), inst.c(), FALLBACK_SUM_BOUND) {
            Some(z) => Ok(Solution {
                certificate: build_certificate(inst.x(), inst.c(), &z),
                z,
                hypothesis_met: false,
            }),
            None => Err(Error::HypothesisUnmet),
        };
    }
    let d = inst.dim();
    let sum: Rat = inst.x().iter().sum();
    // sums at or above 1 admit a direct scaled floor vector; forcing them
    // back under 1 can park the violating prefix a hair's breadth from the
    // admissible sum window's edge (width q/u_{d+1,q}), and the lattice
    // search region grows like the reciprocal of that slack
    if sum >= Rat::one() {
        let z = direct_scaled_solution(inst.x(), inst.c())?;
        return Ok(Solution {
            certificate: build_certificate(inst.x(), inst.c(), &z),
            z,
            hypothesis_met: true,
        });
    }
    // first prefix violating the product/sum inequality; guaranteed to
    // exist because the coordinate sum meets the threshold and x is not
    // extremal
    let l = violation_index(inst.x(), inst.q())?
        .ok_or_else(|| Error::Internal("no violating prefix despite hypothesis".into()))?;
    // search on the weighted prefix
    let scaled: Vec<Rat> = inst.x()[..l]
        .iter()
        .zip(&inst.c()[..l])
        .map(|(xi, ci)| xi / ci)
        .collect();
    let z_prefix = minkowski_solve(&scaled, &inst.c()[..l])?;
    // zero-pad and re-verify against the original targets
    let mut z = z_prefix;
    z.resize(d, Int::zero());
    if !verify_solution(inst.x(), inst.c(), &z) {
        return Err(Error::Internal(
            "search result fails the certificate on the original targets".into(),
        ));
    }
    Ok(Solution {
        certificate: build_certificate(inst.x(), inst.c(), &z),
        z,
        hypothesis_met: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};

    fn rats(v: &[(i64, i64)]) -> Vec<Rat> {
        v.iter().map(|&(p, q)| rat(p, q)).collect()
    }

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn extremal_vector_values() {
        assert_eq!(extremal_vector(2, &int(1)).unwrap(), rats(&[(1, 2), (1, 3)]));
        assert_eq!(extremal_vector(2, &int(2)).unwrap(), rats(&[(2, 3), (2, 7)]));
        assert_eq!(
            extremal_vector(3, &int(1)).unwrap(),
            rats(&[(1, 2), (1, 3), (1, 7)])
        );
        // tail-sum identity: sum = 1 - q/u_{d+1,q}
        for q in 1..=4u32 {
            for d in 1..=5u32 {
                let sum: Rat = extremal_vector(d as usize, &int(q as i64)).unwrap().iter().sum();
                let tail = sylvester::gamma_bound(d, q).unwrap();
                assert_eq!(sum + tail, Rat::one());
            }
        }
    }

    #[test]
    fn violation_index_examples() {
        assert_eq!(violation_index(&rats(&[(1, 2), (1, 3)]), &int(1)).unwrap(), None);
        assert_eq!(
            violation_index(&rats(&[(1, 2), (7, 20)]), &int(1)).unwrap(),
            Some(2)
        );
        assert_eq!(violation_index(&rats(&[(9, 10)]), &int(1)).unwrap(), Some(1));
        // q = 2 extremal vector: all prefixes tight, no violation
        assert_eq!(
            violation_index(&rats(&[(2, 3), (2, 7)]), &int(2)).unwrap(),
            None
        );
        assert!(matches!(
            violation_index(&rats(&[(1, 3), (1, 2)]), &int(1)),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            violation_index(&rats(&[(1, 2), (-1, 3)]), &int(1)),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn search_matrix_and_determinant() {
        let x = rats(&[(1, 2), (7, 20)]);
        let c = rats(&[(1, 1), (1, 1)]);
        let a = search_matrix(&x, &c);
        assert_eq!(a[(0, 0)], rat(-1, 1));
        assert_eq!(a[(0, 1)], rat(1, 1));
        assert_eq!(a[(1, 0)], rat(1, 1));
        assert_eq!(a[(1, 1)], rat(-13, 7));
        let det = a.determinant().unwrap();
        assert_eq!(det, rat(6, 7));
        assert_eq!(det, closed_form_det(&x, &c));
    }

    #[test]
    fn minkowski_solve_examples() {
        assert_eq!(
            minkowski_solve(&rats(&[(1, 2), (7, 20)]), &rats(&[(1, 1), (1, 1)])).unwrap(),
            ints(&[1, 1])
        );
        assert_eq!(
            minkowski_solve(&rats(&[(3, 4)]), &rats(&[(1, 1)])).unwrap(),
            ints(&[1])
        );
        // sandwich fails with exact equality
        assert!(matches!(
            minkowski_solve(&rats(&[(1, 2), (1, 3)]), &rats(&[(1, 1), (1, 1)])),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn verify_solution_examples() {
        let c = rats(&[(1, 1), (1, 1)]);
        assert!(verify_solution(&rats(&[(1, 2), (7, 20)]), &c, &ints(&[1, 1])));
        assert!(!verify_solution(&rats(&[(1, 2), (7, 20)]), &c, &ints(&[0, 0])));
        // 1/3 < 1/3 fails
        assert!(!verify_solution(&rats(&[(1, 2), (1, 3)]), &c, &ints(&[1, 1])));
        assert!(!verify_solution(&rats(&[(1, 2)]), &c, &ints(&[1, 1])));
    }

    #[test]
    fn solve_pipeline_examples() {
        let inst = Instance::new(int(1), rats(&[(1, 1), (1, 1)]), rats(&[(1, 2), (7, 20)])).unwrap();
        let sol = solve(&inst).unwrap();
        assert_eq!(sol.z, ints(&[1, 1]));
        assert!(sol.hypothesis_met);
        assert!(sol.certificate.iter().all(|line| line.lhs < line.rhs));

        // extremal vectors are rejected outright for any admissible weights...
        let ext1 = Instance::new(int(1), rats(&[(1, 1), (1, 1)]), rats(&[(1, 2), (1, 3)])).unwrap();
        assert_eq!(solve(&ext1).err(), Some(Error::ExtremalInstance));
        let ext2 = Instance::new(int(2), rats(&[(2, 1), (2, 1)]), rats(&[(2, 3), (2, 7)])).unwrap();
        assert_eq!(solve(&ext2).err(), Some(Error::ExtremalInstance));
        // ...and brute force confirms there really is no solution
        assert_eq!(
            brute_force_search(&rats(&[(1, 2), (1, 3)]), &rats(&[(1, 1), (1, 1)]), 20),
            None
        );
    }

    #[test]
    fn solve_accepts_sums_at_and_above_one() {
        // sum > 1: first valid scaled floor vector
        let inst = Instance::new(int(1), rats(&[(1, 1), (1, 1)]), rats(&[(3, 4), (3, 4)])).unwrap();
        let sol = solve(&inst).unwrap();
        assert!(sol.hypothesis_met);
        assert!(verify_solution(inst.x(), inst.c(), &sol.z));

        // sum = 1 exactly: N = 2 gives floors (1, 0), and 1 < (2/3) * 2
        let inst = Instance::new(int(2), rats(&[(1, 1), (1, 1)]), rats(&[(2, 3), (1, 3)])).unwrap();
        let sol = solve(&inst).unwrap();
        assert_eq!(sol.z, ints(&[1, 0]));
        assert!(verify_solution(inst.x(), inst.c(), &sol.z));
    }

    #[test]
    fn solve_handles_large_sums_in_higher_dimensions_quickly() {
        // the working targets must not be parked next to the razor-thin
        // hypothesis window (width q/u_{d+1,q}, about 5e-9 here)
        let inst = Instance::new(
            int(3),
            rats(&[(3, 1), (2, 1), (3, 2), (1, 1)]),
            rats(&[(3, 5), (3, 5), (1, 2), (2, 5)]),
        )
        .unwrap();
        let sol = solve(&inst).unwrap();
        assert!(sol.hypothesis_met);
        assert!(verify_solution(inst.x(), inst.c(), &sol.z));

        let inst = Instance::new(
            int(2),
            rats(&[(2, 1), (1, 1), (3, 2)]),
            rats(&[(4, 5), (3, 4), (3, 5)]),
        )
        .unwrap();
        let sol = solve(&inst).unwrap();
        assert!(verify_solution(inst.x(), inst.c(), &sol.z));
    }

    #[test]
    fn solve_boundary_sum_non_extremal() {
        // sum equals the threshold 5/6 but x differs from (1/2, 1/3)
        let x = rats(&[(1, 2), (1, 3)]);
        let total: Rat = x.iter().sum();
        let y = rats(&[(9, 20), (23, 60)]);
        assert_eq!(y.iter().sum::<Rat>(), total);
        let inst = Instance::new(int(1), rats(&[(1, 1), (1, 1)]), y).unwrap();
        let sol = solve(&inst).unwrap();
        assert!(sol.hypothesis_met);
        assert!(verify_solution(inst.x(), inst.c(), &sol.z));
    }

    #[test]
    fn below_hypothesis_falls_back() {
        // tiny targets: no solution at all, so the fallback reports failure
        let inst = Instance::new(int(1), rats(&[(1, 1)]), rats(&[(1, 50)])).unwrap();
        assert_eq!(solve(&inst).err(), Some(Error::HypothesisUnmet));
        // below threshold but solvable: hypothesis_met is false
        let inst = Instance::new(int(1), rats(&[(1, 1), (1, 1)]), rats(&[(3, 5), (1, 5)])).unwrap();
        assert!(!inst.hypothesis_holds().unwrap());
        let sol = solve(&inst).unwrap();
        assert!(!sol.hypothesis_met);
        assert!(verify_solution(inst.x(), inst.c(), &sol.z));
    }

    #[test]
    fn instance_validation() {
        assert!(matches!(
            Instance::new(int(0), rats(&[(1, 1)]), rats(&[(1, 2)])),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            Instance::new(int(1), rats(&[(3, 2)]), rats(&[(1, 2)])),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            Instance::new(int(2), rats(&[(3, 2)]), rats(&[(1, 2)])),
            Ok(_)
        ));
        assert!(matches!(
            Instance::new(int(1), rats(&[(1, 1), (1, 1)]), rats(&[(1, 3), (1, 2)])),
            Err(Error::Malformed(_))
        ));
    }
}
