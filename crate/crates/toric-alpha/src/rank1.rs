//! Rank-one toric pairs presented by a single barycentric relation.
//!
//! A tuple of positive rationals `x = (x_0, ..., x_d)` summing to 1, plus
//! coefficients `a_i` in `[0, 1]` (not all zero), pins down a complete
//! simplicial fan whose `d + 1` primitive generators obey the one relation
//! `sum_i x_i e_i = 0`, together with the boundary `B = sum_i (1 - a_i) E_i`.
//! Every invariant of the pair is fractional-part arithmetic in the weights:
//! the minimal log discrepancy is a finite scan over the multiples `kx`, the
//! alpha invariant of `-K-B` is the least `gamma_i`, and the Cartier index
//! clears the denominators of `a` and of the dual weights `w_i`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, dot, dot_int};
use crate::num::{denominator_lcm, floor_rat, format_rat, fract, from_int, int, Int, Rat};
use crate::sylvester;
use crate::toric::ToricLogPair;

/// A rank-one toric log Fano pair stored by its barycentric datum.
///
/// The generators themselves are not stored; they are recovered on demand by
/// [`RankOneFano::to_toric_pair`]. Derived fields:
///
/// * `q` — least positive integer with `q x` integral,
/// * `w_i = s / x_i` where `s = sum_j a_j x_j` (so `w_i x_i = s` for all `i`),
/// * `gamma_i = a_i x_i / s`, the per-generator gamma of `-K-B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneFano {
    d: usize,
    x: Vec<Rat>,
    a: Vec<Rat>,
    q: Int,
    w: Vec<Rat>,
    gamma: Vec<Rat>,
}

impl RankOneFano {
    /// Validates `(x, a)` and populates the derived fields.
    ///
    /// Rejected inputs: coordinate count below 2, nonpositive or non-unit-sum
    /// `x`, coefficients outside `[0, 1]` or all zero, and data whose
    /// generators would fail primitivity — omitting slot `i` from the integer
    /// relation `q x` must leave coprime entries (`n_i = 1`), otherwise the
    /// datum describes a nontrivial finite cover and is refused rather than
    /// quotient-resolved.
    pub fn from_barycentric(x: Vec<Rat>, a: Vec<Rat>) -> Result<Self> {
        if x.len() != a.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for {} barycentric coordinates",
                a.len(),
                x.len()
            )));
        }
        if x.len() < 2 {
            return Err(Error::Malformed(
                "need at least two barycentric coordinates (dimension at least 1)".into(),
            ));
        }
        for (i, v) in x.iter().enumerate() {
            if !v.is_positive() {
                return Err(Error::Malformed(format!(
                    "barycentric coordinate {i} = {} is not positive",
                    format_rat(v)
                )));
            }
        }
        let total = x.iter().fold(Rat::zero(), |acc, v| acc + v);
        if !total.is_one() {
            return Err(Error::Malformed(format!(
                "barycentric coordinates sum to {}, not 1",
                format_rat(&total)
            )));
        }
        for (i, v) in a.iter().enumerate() {
            if v.is_negative() || v > &Rat::one() {
                return Err(Error::CoefficientOutOfRange {
                    index: i,
                    value: format_rat(v),
                });
            }
        }
        if a.iter().all(Zero::is_zero) {
            return Err(Error::Malformed(
                "coefficients are all zero; at least one must be positive".into(),
            ));
        }
        let q = denominator_lcm(&x);
        let qx: Vec<Int> = x.iter().map(|v| (v * from_int(q.clone())).to_integer()).collect();
        // gcd of the full relation is 1 by minimality of q, so each n_i is
        // just the gcd of the entries with slot i omitted
        for i in 0..qx.len() {
            let mut g = Int::zero();
            for (j, v) in qx.iter().enumerate() {
                if j != i {
                    g = g.gcd(v);
                }
            }
            if !g.is_one() {
                return Err(Error::Malformed(format!(
                    "generator {i} is not primitive: omitting it leaves the common factor n_{i} = {g} in the relation, so the datum admits a degree-{g} cover"
                )));
            }
        }
        let s = dot(&a, &x);
        let w: Vec<Rat> = x.iter().map(|v| &s / v).collect();
        let gamma: Vec<Rat> = a.iter().zip(&x).map(|(ai, xi)| ai * xi / &s).collect();
        // relation identities; each is a rearrangement of w_i x_i = s
        let inv_w_sum = w.iter().fold(Rat::zero(), |acc, v| acc + v.recip());
        assert!((&s * &inv_w_sum).is_one(), "weight reciprocals must sum to 1/s");
        for i in 0..x.len() {
            assert_eq!(x[i], w[i].recip() / &inv_w_sum);
            assert_eq!(gamma[i], &a[i] / &w[i]);
        }
        Ok(RankOneFano {
            d: x.len() - 1,
            x,
            a,
            q,
            w,
            gamma,
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// The relation weights `x_i` (positive, summing to 1).
    pub fn x(&self) -> &[Rat] {
        &self.x
    }

    /// The coefficients `a_i = 1 - b_i` of the boundary.
    pub fn a(&self) -> &[Rat] {
        &self.a
    }

    /// Least positive integer with `q x` integral.
    pub fn q(&self) -> &Int {
        &self.q
    }

    /// Dual weights `w_i = (sum_j a_j x_j) / x_i`.
    pub fn w(&self) -> &[Rat] {
        &self.w
    }

    /// Per-generator gamma values of `-K-B`; their minimum is the alpha
    /// invariant.
    pub fn gamma(&self) -> &[Rat] {
        &self.gamma
    }

    /// Realizes the pair as an explicit fan: the lattice is
    /// `Z^{d+1} / Z(q x)` and the rays are the images of the standard basis
    /// vectors, with every `d`-element subset spanning a maximal cone.
    ///
    /// The quotient is taken through a unimodular matrix sending `q x` to the
    /// first axis, so dropping the first coordinate of each image is an exact
    /// chart of the quotient lattice.
    pub fn to_toric_pair(&self) -> Result<ToricLogPair> {
        let n = self.d + 1;
        let qx: Vec<Int> = self
            .x
            .iter()
            .map(|v| (v * from_int(self.q.clone())).to_integer())
            .collect();
        let u = linalg::unimodular_completion(&qx)?;
        let rays: Vec<Vec<Int>> = (0..n)
            .map(|i| (1..n).map(|r| u[r][i].clone()).collect())
            .collect();
        for (i, e) in rays.iter().enumerate() {
            if !linalg::is_primitive(e) {
                return Err(Error::Internal(format!(
                    "constructed generator {i} is not primitive despite n_{i} = 1"
                )));
            }
        }
        let cones: Vec<Vec<usize>> = (0..n)
            .map(|omit| (0..n).filter(|&i| i != omit).collect())
            .collect();
        ToricLogPair::new(self.d, rays, self.a.clone(), Some(cones))
    }

    /// `(alpha, r)`: the alpha invariant `min_i gamma_i` of `-K-B`, and the
    /// least positive integer `r` making every `r a_i` and `r w_i` integral
    /// (the level at which `-r(K+B)` is Cartier with base-point-free
    /// anticanonical system).
    pub fn alpha_and_cartier(&self) -> (Rat, Int) {
        let alpha = self.gamma.iter().min().expect("nonempty").clone();
        let r = denominator_lcm(&self.a).lcm(&denominator_lcm(&self.w));
        (alpha, r)
    }

    /// Minimal log discrepancy by scanning fractional parts of the multiples
    /// `k x` for `k = 2, ..., q`:
    ///
    /// `mld = min( min_i a_i,  min { sum_i a_i {k x_i} - min_j w_j {k x_j} } )`
    ///
    /// where the inner minimum ranges over the `k` whose fractional-part
    /// vector sums to 1 and differs from `x`. Multiples outside `2..=q`
    /// repeat these values, and `k` with `q | k - 1` reproduce `x` itself,
    /// so the window sees every candidate exactly once. Pairs with some
    /// `a_i = 0` are not Kawamata log terminal; their mld is reported as 0.
    pub fn mld_scan(&self) -> Rat {
        if self.a.iter().any(Zero::is_zero) {
            return Rat::zero();
        }
        let mut best = self.a.iter().min().expect("nonempty").clone();
        let mut k = int(2);
        while k <= self.q {
            let kr = from_int(k.clone());
            let frac: Vec<Rat> = self.x.iter().map(|v| fract(&(v * &kr))).collect();
            let total = frac.iter().fold(Rat::zero(), |acc, v| acc + v);
            if total.is_one() && frac != self.x {
                let hit = frac
                    .iter()
                    .zip(&self.w)
                    .map(|(p, wi)| p * wi)
                    .min()
                    .expect("nonempty");
                let val = dot(&self.a, &frac) - hit;
                if val < best {
                    best = val;
                }
            }
            k += Int::one();
        }
        best
    }

    /// Decides `mld >= epsilon` geometrically. The region `S_eps(x)` is the
    /// simplex with vertices `Q_i = (1 - eps/a_i) x + (eps/a_i) P_i`, where
    /// `P_i` are the vertices of the standard simplex; the mld is at least
    /// `epsilon` exactly when no fractional-part vector `{k x}` other than
    /// `x` lies in the interior of `S_eps(x)`.
    ///
    /// Requires `0 < epsilon <= min a_i`. The result is cross-checked against
    /// [`RankOneFano::mld_scan`] before being returned.
    pub fn mld_at_least(&self, epsilon: &Rat) -> Result<bool> {
        let amin = self.a.iter().min().expect("nonempty");
        if !epsilon.is_positive() || epsilon > amin {
            return Err(Error::OutOfRange(format!(
                "epsilon = {} must lie in (0, {}], the range bounded by the least coefficient",
                format_rat(epsilon),
                format_rat(amin)
            )));
        }
        let n = self.d + 1;
        let s = dot(&self.a, &self.x);
        // the vertices average back to x with weights gamma_i
        let mut recon = vec![Rat::zero(); n];
        for i in 0..n {
            let t = epsilon / &self.a[i];
            for j in 0..n {
                let mut c = (Rat::one() - &t) * &self.x[j];
                if i == j {
                    c += &t;
                }
                recon[j] += &self.gamma[i] * c;
            }
        }
        if recon != self.x {
            return Err(Error::Internal(
                "the vertex barycenter identity x = sum_i gamma_i Q_i failed".into(),
            ));
        }
        // p interior to S_eps(x) within the hyperplane sum p = 1 iff
        // p_i * s > x_i * (a . p - eps) for every i
        let mut clear = true;
        let mut k = int(2);
        while k <= self.q {
            let kr = from_int(k.clone());
            let frac: Vec<Rat> = self.x.iter().map(|v| fract(&(v * &kr))).collect();
            let total = frac.iter().fold(Rat::zero(), |acc, v| acc + v);
            if total.is_one() && frac != self.x {
                let excess = dot(&self.a, &frac) - epsilon;
                if (0..n).all(|i| &frac[i] * &s > &self.x[i] * &excess) {
                    clear = false;
                    break;
                }
            }
            k += Int::one();
        }
        if clear != (self.mld_scan() >= *epsilon) {
            return Err(Error::Internal(
                "geometric interior test disagrees with the fractional-part scan".into(),
            ));
        }
        Ok(clear)
    }

    /// Searches for an integer vector certifying `mld < epsilon`: some
    /// `z = floor(k x)`, `k = 2, ..., q`, with
    /// `max_j w_j z_j - sum_i a_i z_i` strictly between 0 and `epsilon`.
    /// That combination is the log discrepancy of the lattice class of `-z`,
    /// so a hit is a genuine witness; the first one found is returned.
    /// `None` is returned exactly when `mld_scan() >= epsilon`.
    ///
    /// Requires `epsilon <= min a_i` (the witness shape only sees valuations
    /// away from the given generators).
    pub fn witness_below(&self, epsilon: &Rat) -> Result<Option<Vec<Int>>> {
        let amin = self.a.iter().min().expect("nonempty");
        if epsilon > amin {
            return Err(Error::OutOfRange(format!(
                "epsilon = {} must not exceed the least coefficient {}",
                format_rat(epsilon),
                format_rat(amin)
            )));
        }
        let mut k = int(2);
        while k <= self.q {
            let kr = from_int(k.clone());
            let z: Vec<Int> = self.x.iter().map(|v| floor_rat(&(v * &kr))).collect();
            let peak = z
                .iter()
                .zip(&self.w)
                .map(|(zi, wi)| from_int(zi.clone()) * wi)
                .max()
                .expect("nonempty");
            let val = peak - dot_int(&self.a, &z);
            if val.is_positive() && &val < epsilon {
                return Ok(Some(z));
            }
            k += Int::one();
        }
        Ok(None)
    }
}

/// The sharp family: coefficients `a = (1/q, 1, ..., 1)` and relation
/// weights proportional to `(1, c_1, ..., c_d)` with
/// `c_i = u_{d+1,q} / (q (1 + u_{i,q}))` built from the doubled Sylvester
/// sequence. The pair attains `mld = 1/q` with alpha invariant
/// `q / u_{d+1,q}`, the least possible at this dimension and denominator;
/// both facts, the `q`-level Cartier property, and the anticanonical degree
/// `q^d (-K-B)^d = u_{d+1,q} / q` are re-verified on every call.
pub fn extremal_example(d: u32, q: u32) -> Result<RankOneFano> {
    if d == 0 || q == 0 {
        return Err(Error::OutOfRange(
            "the extremal family needs d >= 1 and q >= 1".into(),
        ));
    }
    let u_top = sylvester::u(d + 1, q)?;
    let qr = from_int(int(q as i64));
    let mut weights = vec![Rat::one()];
    for i in 1..=d {
        let ui = sylvester::u(i, q)?;
        weights.push(from_int(u_top.clone()) / (&qr * (Rat::one() + from_int(ui))));
    }
    let total = weights.iter().fold(Rat::zero(), |acc, v| acc + v);
    let x: Vec<Rat> = weights.iter().map(|v| v / &total).collect();
    let mut a = vec![qr.recip()];
    a.extend(std::iter::repeat(Rat::one()).take(d as usize));
    let f = RankOneFano::from_barycentric(x, a)?;
    if f.mld_scan() != qr.recip() {
        return Err(Error::Internal(
            "the extremal pair's minimal log discrepancy is not 1/q".into(),
        ));
    }
    let (alpha, _) = f.alpha_and_cartier();
    if alpha != sylvester::gamma_bound(d, q)? {
        return Err(Error::Internal(
            "the extremal pair's alpha invariant missed the sharp bound".into(),
        ));
    }
    for v in f.a.iter().chain(f.w.iter()) {
        if !(v * &qr).is_integer() {
            return Err(Error::Internal(
                "q times the extremal coefficients and dual weights must be integral".into(),
            ));
        }
    }
    let pair = f.to_toric_pair()?;
    let body = pair.moment_polytope(&pair.anticanonical())?;
    let mut degree = body.normalized_volume();
    for i in 2..=(d as u64) {
        degree *= from_int(Int::from(i));
    }
    for _ in 0..d {
        degree *= &qr;
    }
    if degree != from_int(u_top) / &qr {
        return Err(Error::Internal(
            "the anticanonical degree of the extremal pair missed the sharp value".into(),
        ));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};
    use crate::toric::census_canonical_form;

    fn ones(n: usize) -> Vec<Rat> {
        vec![Rat::one(); n]
    }

    #[test]
    fn barycentric_data_derives_dual_weights() {
        let f = RankOneFano::from_barycentric(
            vec![rat(1, 6), rat(1, 2), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        assert_eq!(f.dim(), 2);
        assert_eq!(f.q(), &int(6));
        assert_eq!(f.w(), &[rat_int(6), rat_int(2), rat_int(3)]);
        // with empty boundary, gamma_i = x_i = 1/w_i
        assert_eq!(f.gamma(), f.x());

        let p2 = RankOneFano::from_barycentric(
            vec![rat(1, 3), rat(1, 3), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        assert_eq!(p2.w(), &[rat_int(3), rat_int(3), rat_int(3)]);

        let line = RankOneFano::from_barycentric(
            vec![rat(1, 2), rat(1, 2)],
            vec![rat(1, 2), Rat::one()],
        )
        .unwrap();
        assert_eq!(line.w(), &[rat(3, 2), rat(3, 2)]);
        assert_eq!(line.gamma(), &[rat(1, 3), rat(2, 3)]);
    }

    #[test]
    fn barycentric_validation_rejects_degenerate_data() {
        let e = RankOneFano::from_barycentric(vec![rat(1, 2), rat(1, 3)], ones(2));
        assert!(matches!(e, Err(Error::Malformed(ref m)) if m.contains("sum")));

        let e = RankOneFano::from_barycentric(vec![rat(3, 2), rat(-1, 2)], ones(2));
        assert!(matches!(e, Err(Error::Malformed(ref m)) if m.contains("positive")));

        let e = RankOneFano::from_barycentric(
            vec![rat(1, 2), rat(1, 2)],
            vec![rat(3, 2), Rat::one()],
        );
        assert!(matches!(e, Err(Error::CoefficientOutOfRange { index: 0, .. })));

        let e = RankOneFano::from_barycentric(
            vec![rat(1, 2), rat(1, 2)],
            vec![Rat::zero(), Rat::zero()],
        );
        assert!(matches!(e, Err(Error::Malformed(ref m)) if m.contains("all zero")));

        // q x = (2, 3, 3): omitting the first slot leaves gcd 3
        let e = RankOneFano::from_barycentric(
            vec![rat(1, 4), rat(3, 8), rat(3, 8)],
            ones(3),
        );
        assert!(matches!(e, Err(Error::Malformed(ref m)) if m.contains("n_0 = 3")));

        let e = RankOneFano::from_barycentric(vec![Rat::one()], vec![Rat::one()]);
        assert!(matches!(e, Err(Error::Malformed(_))));
    }

    #[test]
    fn lattice_realization_matches_known_fans() {
        let p2 = RankOneFano::from_barycentric(
            vec![rat(1, 3), rat(1, 3), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        let pair = p2.to_toric_pair().unwrap();
        let expect = census_canonical_form(&[
            vec![int(1), int(0)],
            vec![int(0), int(1)],
            vec![int(-1), int(-1)],
        ])
        .unwrap();
        assert_eq!(census_canonical_form(pair.rays()).unwrap(), expect);
        assert_eq!(pair.anticanonical_nef(), Some(true));
        assert_eq!(pair.mld().unwrap(), p2.mld_scan());

        let f = RankOneFano::from_barycentric(
            vec![rat(1, 6), rat(1, 2), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        let pair = f.to_toric_pair().unwrap();
        let expect = census_canonical_form(&[
            vec![int(-3), int(-2)],
            vec![int(1), int(0)],
            vec![int(0), int(1)],
        ])
        .unwrap();
        assert_eq!(census_canonical_form(pair.rays()).unwrap(), expect);
        assert_eq!(pair.mld().unwrap(), f.mld_scan());

        let line = RankOneFano::from_barycentric(
            vec![rat(1, 2), rat(1, 2)],
            ones(2),
        )
        .unwrap();
        let pair = line.to_toric_pair().unwrap();
        let mut rays = pair.rays().to_vec();
        rays.sort();
        assert_eq!(rays, vec![vec![int(-1)], vec![int(1)]]);
    }

    #[test]
    fn alpha_and_cartier_pin_examples() {
        let f = RankOneFano::from_barycentric(
            vec![rat(1, 6), rat(1, 2), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        assert_eq!(f.alpha_and_cartier(), (rat(1, 6), int(1)));

        let p2 = RankOneFano::from_barycentric(
            vec![rat(1, 3), rat(1, 3), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        assert_eq!(p2.alpha_and_cartier(), (rat(1, 3), int(1)));

        let line = RankOneFano::from_barycentric(
            vec![rat(1, 2), rat(1, 2)],
            vec![rat(1, 2), Rat::one()],
        )
        .unwrap();
        assert_eq!(line.alpha_and_cartier(), (rat(1, 3), int(2)));
    }

    #[test]
    fn fractional_part_scan_computes_mld() {
        let f = RankOneFano::from_barycentric(
            vec![rat(1, 6), rat(1, 2), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        assert_eq!(f.mld_scan(), rat_int(1));

        let p2 = RankOneFano::from_barycentric(
            vec![rat(1, 3), rat(1, 3), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        assert_eq!(p2.mld_scan(), rat_int(1));

        // k = 2 attains the minimum: {2x} = (1/4, 1/2, 1/4) scores 1 - 2/5
        let g = RankOneFano::from_barycentric(
            vec![rat(1, 8), rat(1, 4), rat(5, 8)],
            ones(3),
        )
        .unwrap();
        assert_eq!(g.mld_scan(), rat(3, 5));

        // a vanishing coefficient means the pair is not klt
        let h = RankOneFano::from_barycentric(
            vec![rat(1, 2), rat(1, 2)],
            vec![Rat::zero(), Rat::one()],
        )
        .unwrap();
        assert_eq!(h.mld_scan(), Rat::zero());
    }

    #[test]
    fn interior_test_agrees_with_scan() {
        let p2 = RankOneFano::from_barycentric(
            vec![rat(1, 3), rat(1, 3), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        assert!(p2.mld_at_least(&rat_int(1)).unwrap());

        let f = RankOneFano::from_barycentric(
            vec![rat(1, 6), rat(1, 2), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        assert!(f.mld_at_least(&rat_int(1)).unwrap());

        let sharp = extremal_example(2, 1).unwrap();
        assert!(sharp.mld_at_least(&rat_int(1)).unwrap());
        assert!(matches!(
            sharp.mld_at_least(&rat(9, 8)),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            sharp.mld_at_least(&Rat::zero()),
            Err(Error::OutOfRange(_))
        ));

        let g = RankOneFano::from_barycentric(
            vec![rat(1, 8), rat(1, 4), rat(5, 8)],
            ones(3),
        )
        .unwrap();
        assert!(!g.mld_at_least(&rat_int(1)).unwrap());
        assert!(g.mld_at_least(&rat(3, 5)).unwrap());
    }

    #[test]
    fn integer_witnesses_certify_low_mld() {
        let p2 = RankOneFano::from_barycentric(
            vec![rat(1, 3), rat(1, 3), rat(1, 3)],
            ones(3),
        )
        .unwrap();
        assert_eq!(p2.witness_below(&rat_int(1)).unwrap(), None);
        assert_eq!(p2.witness_below(&rat(1, 3)).unwrap(), None);

        let g = RankOneFano::from_barycentric(
            vec![rat(1, 8), rat(1, 4), rat(5, 8)],
            ones(3),
        )
        .unwrap();
        // z = floor(2x) scores max(0, 0, 8/5) - 1 = 3/5, inside (0, 1)
        assert_eq!(
            g.witness_below(&rat_int(1)).unwrap(),
            Some(vec![int(0), int(0), int(1)])
        );
        // at epsilon = mld = 3/5 the interval (0, 3/5) is missed
        assert_eq!(g.witness_below(&rat(3, 5)).unwrap(), None);

        assert!(matches!(
            g.witness_below(&rat(9, 8)),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn extremal_family_attains_the_sharp_bounds() {
        let line = extremal_example(1, 1).unwrap();
        assert_eq!(line.x(), &[rat(1, 2), rat(1, 2)]);
        assert_eq!(line.a(), &[rat_int(1), rat_int(1)]);
        assert_eq!(line.alpha_and_cartier(), (rat(1, 2), int(1)));
        assert_eq!(line.mld_scan(), rat_int(1));

        let surf = extremal_example(2, 1).unwrap();
        assert_eq!(surf.x(), &[rat(1, 6), rat(1, 2), rat(1, 3)]);
        assert_eq!(surf.alpha_and_cartier(), (rat(1, 6), int(1)));
        assert_eq!(surf.mld_scan(), rat_int(1));

        let twisted = extremal_example(2, 2).unwrap();
        assert_eq!(twisted.x(), &[rat(1, 11), rat(7, 11), rat(3, 11)]);
        assert_eq!(twisted.a(), &[rat(1, 2), rat_int(1), rat_int(1)]);
        assert_eq!(twisted.w(), &[rat(21, 2), rat(3, 2), rat(7, 2)]);
        assert_eq!(twisted.alpha_and_cartier(), (rat(1, 21), int(2)));
        assert_eq!(twisted.mld_scan(), rat(1, 2));

        // the d = 1 member with denominator 2 is the weighted example above
        let half = extremal_example(1, 2).unwrap();
        assert_eq!(half.x(), &[rat(1, 2), rat(1, 2)]);
        assert_eq!(half.a(), &[rat(1, 2), rat_int(1)]);
        assert_eq!(half.alpha_and_cartier(), (rat(1, 3), int(2)));
        assert_eq!(half.mld_scan(), rat(1, 2));

        assert!(matches!(extremal_example(0, 1), Err(Error::OutOfRange(_))));
        assert!(matches!(extremal_example(1, 0), Err(Error::OutOfRange(_))));
    }
}
