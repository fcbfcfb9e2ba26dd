//! Complete toric log pairs presented by fan rays and boundary coefficients.
//!
//! A pair is a complete fan in `N = Z^d` together with a boundary `B = sum
//! b_i E_i` on the invariant prime divisors, stored through the coefficients
//! `a_i = 1 - b_i`.  An invariant divisor `L = sum l_i E_i` becomes the
//! rational polytope `{ m : <m, e_i> + l_i >= 0 }`, and everything downstream
//! -- widths, alpha invariants, log canonical thresholds, minimal log
//! discrepancies, the degree and threshold bound checks, and the census of
//! small log Fano ray configurations -- is computed exactly from those
//! polytopes.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{dot_ii, dot_int, feasible_point, hermite_normal_form, rank};
use crate::num::{format_rat, from_int, int, rat_int, to_u32, ExtRat, Int, Rat};
use crate::polytope::{HalfSpace, LatticeMode, Polytope};
use crate::sylvester;

/// Complete toric pair `(X, B)`: primitive fan rays `e_i` and coefficients
/// `a_i = 1 - b_i` in `[0, 1]`.  Maximal cones are optional; when given they
/// are used for the Q-Cartier and nefness checks, everything else works from
/// the rays alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricLogPair {
    dim: usize,
    rays: Vec<Vec<Int>>,
    a: Vec<Rat>,
    max_cones: Option<Vec<Vec<usize>>>,
    anticanonical_nef: Option<bool>,
}

/// Invariant divisor `sum l_i E_i` presented by a finite set of monomial
/// members `A` inside its polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLinearSystem {
    pub l: Vec<Rat>,
    pub points: Vec<Vec<Int>>,
}

/// Per-ray and global gamma of a finite linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSystemGamma {
    pub per_ray: Vec<ExtRat>,
    pub gamma: ExtRat,
}

/// Log discrepancy of the divisorial valuation attached to a lattice vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogDiscrepancy {
    pub value: Rat,
    /// The primitive vector actually evaluated.
    pub ray: Vec<Int>,
    /// Set when the input had to be divided by a factor > 1.
    pub rescaled: Option<Int>,
}

/// Both sides of the width identity for a base-point-free divisor:
/// `gamma` from the moment polytope widths at each ray, `ray_minimum` from
/// the geometric widths of the polytope along the rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaWidthReport {
    pub gamma: ExtRat,
    pub ray_minimum: ExtRat,
    pub pass: bool,
}

/// The inequality `gamma^d * (L^d) <= d^d` for a nef divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBoundReport {
    pub gamma: ExtRat,
    pub degree: Rat,
    pub lhs: Rat,
    pub rhs: Rat,
    pub pass: bool,
    pub warnings: Vec<String>,
}

/// Threshold and degree bounds for the anticanonical divisor under the
/// hypothesis `mld >= 1/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnticanonicalBoundsReport {
    pub mld: Rat,
    pub threshold: Rat,
    /// False when the mld hypothesis fails; the checks are then skipped.
    pub applicable: bool,
    pub gamma: Option<Rat>,
    pub gamma_bound: Rat,
    pub gamma_ok: Option<bool>,
    pub degree: Option<Rat>,
    pub degree_bound: Rat,
    pub degree_ok: Option<bool>,
}

/// Alpha invariant of a product pair against the minimum over the factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductAlphaReport {
    pub product: ExtRat,
    pub factor_minimum: ExtRat,
    pub pass: bool,
}

impl ToricLogPair {
    pub fn new(
        dim: usize,
        rays: Vec<Vec<Int>>,
        a: Vec<Rat>,
        max_cones: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Malformed("the dimension must be at least 1".into()));
        }
        if rays.is_empty() {
            return Err(Error::Malformed("a complete fan needs rays".into()));
        }
        for (i, e) in rays.iter().enumerate() {
            if e.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "ray {i} has {} coordinates, expected {dim}",
                    e.len()
                )));
            }
            if e.iter().all(|x| x.is_zero()) {
                return Err(Error::ZeroVector);
            }
            let (prim, factor) = crate::linalg::primitive_part(e)?;
            if !factor.is_one() {
                return Err(Error::NonPrimitiveRay {
                    index: i,
                    factor: factor.to_string(),
                    suggestion: prim.iter().map(|x| x.to_string()).collect(),
                });
            }
            for (j, f) in rays.iter().enumerate().take(i) {
                if e == f {
                    return Err(Error::Malformed(format!(
                        "rays must be distinct; ray {i} repeats ray {j}"
                    )));
                }
            }
        }
        if a.len() != rays.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for {} rays",
                a.len(),
                rays.len()
            )));
        }
        for (i, x) in a.iter().enumerate() {
            if x.is_negative() || x > &Rat::one() {
                return Err(Error::CoefficientOutOfRange {
                    index: i,
                    value: format_rat(x),
                });
            }
        }
        // completeness: the origin must be interior to the hull of the rays
        let hull = Polytope::from_vertices(
            dim,
            rays.iter()
                .map(|e| e.iter().map(|x| from_int(x.clone())).collect())
                .collect(),
        )?;
        if !hull.contains_strict(&vec![Rat::zero(); dim]) {
            return Err(Error::NotComplete);
        }
        let max_cones = match max_cones {
            None => None,
            Some(cones) => {
                let mut cleaned = Vec::with_capacity(cones.len());
                for (k, cone) in cones.iter().enumerate() {
                    let mut c = cone.clone();
                    c.sort_unstable();
                    c.dedup();
                    if c.is_empty() {
                        return Err(Error::Malformed(format!("maximal cone {k} is empty")));
                    }
                    if let Some(&bad) = c.iter().find(|&&i| i >= rays.len()) {
                        return Err(Error::Malformed(format!(
                            "maximal cone {k} refers to ray {bad}, but there are only {} rays",
                            rays.len()
                        )));
                    }
                    let rows: Vec<Vec<Rat>> = c
                        .iter()
                        .map(|&i| rays[i].iter().map(|x| from_int(x.clone())).collect())
                        .collect();
                    if rank(&rows) != dim {
                        return Err(Error::Malformed(format!(
                            "maximal cone {k} does not span the ambient space"
                        )));
                    }
                    cleaned.push(c);
                }
                Some(cleaned)
            }
        };
        let mut pair = ToricLogPair {
            dim,
            rays,
            a,
            max_cones,
            anticanonical_nef: None,
        };
        if pair.max_cones.is_some() {
            // -K-B must be Q-Cartier on the given cones; record its nefness
            let anticanonical = pair.a.clone();
            pair.cartier_data(&anticanonical)?;
            pair.anticanonical_nef = pair.is_nef(&anticanonical)?;
        }
        Ok(pair)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    /// The coefficients `a_i = 1 - b_i`.
    pub fn a(&self) -> &[Rat] {
        &self.a
    }

    /// The boundary coefficients `b_i`.
    pub fn boundary(&self) -> Vec<Rat> {
        self.a.iter().map(|x| Rat::one() - x).collect()
    }

    pub fn max_cones(&self) -> Option<&[Vec<usize>]> {
        self.max_cones.as_deref()
    }

    /// Whether `-K-B` is nef; `None` when no maximal cones were given.
    pub fn anticanonical_nef(&self) -> Option<bool> {
        self.anticanonical_nef
    }

    /// Coefficient vector of `-K-B` (the divisor `sum a_i E_i`).
    pub fn anticanonical(&self) -> Vec<Rat> {
        self.a.clone()
    }

    fn check_divisor(&self, l: &[Rat]) -> Result<()> {
        if l.len() != self.rays.len() {
            return Err(Error::DimensionMismatch(format!(
                "divisor has {} coefficients for {} rays",
                l.len(),
                self.rays.len()
            )));
        }
        Ok(())
    }

    /// The polytope `{ m : <m, e_i> + l_i >= 0 }` of an invariant divisor.
    pub fn moment_polytope(&self, l: &[Rat]) -> Result<Polytope> {
        self.check_divisor(l)?;
        let halfspaces = self
            .rays
            .iter()
            .zip(l)
            .map(|(e, li)| HalfSpace::new(e.clone(), li.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polytope::from_half_spaces(self.dim, halfspaces)?.polytope)
    }

    /// `max_{m in P_L} <m, e_i> + l_i`: the multiplicity spread of the full
    /// linear system along the divisor of ray `i`.
    pub fn width_at(&self, l: &[Rat], i: usize) -> Result<Rat> {
        let poly = self.moment_polytope(l)?;
        Ok(self.slack_range(&poly, l, i)?.1)
    }

    /// `min_{m in P_L} <m, e_i> + l_i`: the fixed multiplicity of the full
    /// linear system along the divisor of ray `i`.
    pub fn fixed_mult_at(&self, l: &[Rat], i: usize) -> Result<Rat> {
        let poly = self.moment_polytope(l)?;
        Ok(self.slack_range(&poly, l, i)?.0)
    }

    fn slack_range(&self, poly: &Polytope, l: &[Rat], i: usize) -> Result<(Rat, Rat)> {
        if i >= self.rays.len() {
            return Err(Error::OutOfRange(format!(
                "ray index {i} out of range for {} rays",
                self.rays.len()
            )));
        }
        let vals: Vec<Rat> = poly
            .vertices()
            .iter()
            .map(|v| dot_int(v, &self.rays[i]) + &l[i])
            .collect();
        let min = vals.iter().min().cloned().ok_or(Error::EmptyRegion)?;
        let max = vals.iter().max().cloned().ok_or(Error::EmptyRegion)?;
        Ok((min, max))
    }

    /// Per-ray gamma of a finite subsystem `A` of `|L|` and its minimum:
    /// `(1-b_i) / max_{m in A}(<m, e_i> + l_i)`, infinite where the system
    /// has no member through the divisor.
    pub fn gamma_finite_system(&self, sys: &FiniteLinearSystem) -> Result<FiniteSystemGamma> {
        self.check_divisor(&sys.l)?;
        if sys.points.is_empty() {
            return Err(Error::Malformed("the finite system has no members".into()));
        }
        for m in &sys.points {
            if m.len() != self.dim {
                return Err(Error::DimensionMismatch(format!(
                    "member {m:?} does not have length {}",
                    self.dim
                )));
            }
            for (i, e) in self.rays.iter().enumerate() {
                if (from_int(dot_ii(m, e)) + &sys.l[i]).is_negative() {
                    return Err(Error::Malformed(format!(
                        "member {m:?} has negative multiplicity along ray {i}; it lies outside the divisor polytope"
                    )));
                }
            }
        }
        let mut per_ray = Vec::with_capacity(self.rays.len());
        let mut gamma = ExtRat::Infinity;
        for (i, e) in self.rays.iter().enumerate() {
            let width = sys
                .points
                .iter()
                .map(|m| from_int(dot_ii(m, e)) + &sys.l[i])
                .max()
                .expect("nonempty system");
            let g = if width.is_zero() {
                ExtRat::Infinity
            } else {
                ExtRat::Finite(&self.a[i] / width)
            };
            gamma = gamma.min(g.clone());
            per_ray.push(g);
        }
        Ok(FiniteSystemGamma { per_ray, gamma })
    }

    /// `alpha(X, B; L) = min_i (1-b_i) / widthAt(L, i)`, skipping rays of
    /// width zero; infinite exactly when every width vanishes.
    pub fn alpha_invariant(&self, l: &[Rat]) -> Result<ExtRat> {
        let poly = self.moment_polytope(l)?;
        let mut best = ExtRat::Infinity;
        for i in 0..self.rays.len() {
            let (_, width) = self.slack_range(&poly, l, i)?;
            if width.is_zero() {
                continue;
            }
            best = best.min(ExtRat::Finite(&self.a[i] / width));
        }
        Ok(best)
    }

    /// `lct(X, B; D) = min over d_i > 0 of (1-b_i)/d_i` for an effective
    /// invariant divisor `D = sum d_i E_i`; infinite when `D = 0`.
    pub fn lct_invariant(&self, d: &[Rat]) -> Result<ExtRat> {
        self.check_divisor(d)?;
        let mut best = ExtRat::Infinity;
        for (i, di) in d.iter().enumerate() {
            if di.is_negative() {
                return Err(Error::OutOfRange(format!(
                    "lct needs an effective divisor; coefficient {i} is {}",
                    format_rat(di)
                )));
            }
            if di.is_positive() {
                best = best.min(ExtRat::Finite(&self.a[i] / di));
            }
        }
        Ok(best)
    }

    /// `min over vertices of P_L of <v, e>`: the value of the support
    /// function of the divisor polytope, homogeneous of degree one in `e`.
    pub fn support_minimum(&self, l: &[Rat], e: &[Int]) -> Result<Rat> {
        if e.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector {e:?} does not have length {}",
                self.dim
            )));
        }
        let poly = self.moment_polytope(l)?;
        poly.vertices()
            .iter()
            .map(|v| dot_int(v, e))
            .min()
            .ok_or(Error::EmptyRegion)
    }

    /// Log discrepancy `a(E_e) = -min over the anticanonical polytope of
    /// <., e>` of the valuation attached to `e`.  A non-primitive input is
    /// replaced by its primitive part, reported through `rescaled`.
    pub fn log_discrepancy(&self, e: &[Int]) -> Result<LogDiscrepancy> {
        if e.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector {e:?} does not have length {}",
                self.dim
            )));
        }
        if e.iter().all(|x| x.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let (prim, factor) = crate::linalg::primitive_part(e)?;
        let value = -self.support_minimum(&self.anticanonical(), &prim)?;
        Ok(LogDiscrepancy {
            value,
            ray: prim,
            rescaled: if factor.is_one() { None } else { Some(factor) },
        })
    }

    /// The minimal log discrepancy: zero as soon as some `a_i` vanishes,
    /// otherwise the minimum of `a(E_e)` over the nonzero lattice points of
    /// `t P` with `t = min a_i` and `P` the hull of the `e_i / a_i`.
    pub fn mld(&self) -> Result<Rat> {
        let tmin = self.a.iter().min().expect("rays are nonempty").clone();
        if tmin.is_zero() {
            return Ok(Rat::zero());
        }
        let scaled: Vec<Vec<Rat>> = self
            .rays
            .iter()
            .zip(&self.a)
            .map(|(e, ai)| {
                let s = &tmin / ai;
                e.iter().map(|x| from_int(x.clone()) * &s).collect()
            })
            .collect();
        let body = Polytope::from_vertices(self.dim, scaled)?;
        let poly = self.moment_polytope(&self.anticanonical())?;
        let vertices = poly.vertices();
        let mut best: Option<Rat> = None;
        for z in body.lattice_points(LatticeMode::Closed) {
            if z.iter().all(|x| x.is_zero()) {
                continue;
            }
            let support = vertices
                .iter()
                .map(|v| dot_int(v, &z))
                .min()
                .ok_or(Error::EmptyRegion)?;
            let value = -support;
            best = Some(match best {
                None => value,
                Some(b) => b.min(value),
            });
        }
        best.ok_or_else(|| {
            Error::Internal("the minimizing ray is always a candidate, yet none was seen".into())
        })
    }

    /// `gamma` of the origin inside the anticanonical polytope; zero as soon
    /// as some `a_i` vanishes.  Cross-checked against the alpha invariant of
    /// `-K-B` and against the dual body.
    pub fn gamma_anticanonical(&self) -> Result<Rat> {
        if self.a.iter().any(|x| x.is_zero()) {
            return Ok(Rat::zero());
        }
        let anticanonical = self.anticanonical();
        let poly = self.moment_polytope(&anticanonical)?;
        let g = poly.gamma_origin()?;
        let alpha = self.alpha_invariant(&anticanonical)?;
        if alpha != ExtRat::Finite(g.clone()) {
            return Err(Error::Internal(format!(
                "gamma {} disagrees with the alpha invariant {alpha} of the anticanonical divisor",
                format_rat(&g)
            )));
        }
        let dual: Vec<Vec<Rat>> = self
            .rays
            .iter()
            .zip(&self.a)
            .map(|(e, ai)| e.iter().map(|x| from_int(x.clone()) / ai).collect())
            .collect();
        let dual_gamma = Polytope::from_vertices(self.dim, dual)?.gamma_origin()?;
        if dual_gamma != g {
            return Err(Error::Internal(format!(
                "gamma {} disagrees with the dual-body gamma {}",
                format_rat(&g),
                format_rat(&dual_gamma)
            )));
        }
        Ok(g)
    }

    /// Per-cone support vectors `psi` of a Q-Cartier divisor: `<psi, e_i> =
    /// l_i` on the rays of each maximal cone.
    pub fn cartier_data(&self, l: &[Rat]) -> Result<Vec<Vec<Rat>>> {
        self.check_divisor(l)?;
        let cones = self.max_cones.as_ref().ok_or_else(|| {
            Error::Unsupported("no maximal cones were given for this pair".into())
        })?;
        let mut out = Vec::with_capacity(cones.len());
        for (k, cone) in cones.iter().enumerate() {
            let rows: Vec<Vec<Rat>> = cone
                .iter()
                .map(|&i| self.rays[i].iter().map(|x| from_int(x.clone())).collect())
                .collect();
            let rhs: Vec<Rat> = cone.iter().map(|&i| l[i].clone()).collect();
            match solve_consistent(&rows, &rhs, self.dim) {
                Some(psi) => out.push(psi),
                None => {
                    return Err(Error::NotQCartier(format!(
                        "no support vector on maximal cone {k} (rays {cone:?})"
                    )))
                }
            }
        }
        Ok(out)
    }

    /// Nefness of an invariant divisor, decided through the maximal cones:
    /// every `-psi` must lie in the divisor polytope.  `None` without cones.
    pub fn is_nef(&self, l: &[Rat]) -> Result<Option<bool>> {
        if self.max_cones.is_none() {
            return Ok(None);
        }
        let psis = self.cartier_data(l)?;
        let poly = match self.moment_polytope(l) {
            Ok(p) => p,
            Err(Error::EmptyRegion) => return Ok(Some(false)),
            Err(e) => return Err(e),
        };
        for psi in &psis {
            let neg: Vec<Rat> = psi.iter().map(|x| -x).collect();
            if !poly.contains(&neg) {
                return Ok(Some(false));
            }
        }
        Ok(Some(true))
    }

    /// For a divisor with no fixed multiplicity along any ray, the gamma of
    /// the full linear system equals the minimum over rays of
    /// `(1-b_i) / width(P_L; e_i)`.  Computes both sides exactly.
    pub fn gamma_width_check(&self, l: &[Rat]) -> Result<GammaWidthReport> {
        let poly = self.moment_polytope(l)?;
        for i in 0..self.rays.len() {
            let (fixed, _) = self.slack_range(&poly, l, i)?;
            if !fixed.is_zero() {
                return Err(Error::HypothesisViolated(format!(
                    "ray {i} carries fixed multiplicity {}; the full system is not base-point free there",
                    format_rat(&fixed)
                )));
            }
        }
        let gamma = self.alpha_invariant(l)?;
        let mut ray_minimum = ExtRat::Infinity;
        for (i, e) in self.rays.iter().enumerate() {
            let w = poly.width(e)?;
            if w.is_zero() {
                continue;
            }
            ray_minimum = ray_minimum.min(ExtRat::Finite(&self.a[i] / w));
        }
        let pass = gamma == ray_minimum;
        Ok(GammaWidthReport {
            gamma,
            ray_minimum,
            pass,
        })
    }

    /// `gamma^d * (L^d) <= d^d` for a nef divisor `L`.  Nefness is checked
    /// through the maximal cones when available and otherwise left to the
    /// caller (with a warning).  A zero-volume divisor passes vacuously.
    pub fn degree_bound_check(&self, l: &[Rat]) -> Result<DegreeBoundReport> {
        let mut warnings = Vec::new();
        match self.is_nef(l)? {
            Some(false) => {
                return Err(Error::HypothesisViolated(
                    "the divisor is not nef on the given maximal cones".into(),
                ))
            }
            Some(true) => {}
            None => warnings.push(
                "no maximal cones were given; nefness is assumed, not checked".to_string(),
            ),
        }
        let poly = self.moment_polytope(l)?;
        let volume = poly.normalized_volume();
        let d = self.dim;
        let degree = from_int(factorial(d)) * &volume;
        let rhs = rat_pow(&rat_int(d as i64), d);
        if volume.is_zero() {
            warnings.push(
                "the divisor polytope has zero volume; the degree inequality is vacuous"
                    .to_string(),
            );
            return Ok(DegreeBoundReport {
                gamma: self.alpha_invariant(l)?,
                degree,
                lhs: Rat::zero(),
                rhs,
                pass: true,
                warnings,
            });
        }
        let gamma = self.alpha_invariant(l)?;
        let g = gamma.as_finite().ok_or_else(|| {
            Error::Internal("a divisor of positive volume has finite gamma".into())
        })?;
        let lhs = rat_pow(g, d) * &degree;
        let pass = lhs <= rhs;
        Ok(DegreeBoundReport {
            gamma,
            degree,
            lhs,
            rhs,
            pass,
            warnings,
        })
    }

    /// Under the hypothesis `mld(X, B) >= 1/q`, the anticanonical gamma is
    /// at least `q / u_{d+1, q}` and the anticanonical degree is at most
    /// `((d/q) u_{d+1, q})^d`.  When the hypothesis fails the checks are
    /// skipped and reported as inapplicable.
    pub fn anticanonical_bound_checks(&self, q: u32) -> Result<AnticanonicalBoundsReport> {
        if q == 0 {
            return Err(Error::OutOfRange("q must be at least 1".into()));
        }
        let d = self.dim;
        let du32 = to_u32(&int(d as i64))?;
        let u_top = sylvester::u(du32 + 1, q)?;
        let gamma_bound = sylvester::gamma_bound(du32, q)?;
        let degree_bound = rat_pow(
            &(Rat::new(int(d as i64), int(q as i64)) * from_int(u_top)),
            d,
        );
        let mld = self.mld()?;
        let threshold = Rat::new(Int::one(), Int::from(q));
        if mld < threshold {
            return Ok(AnticanonicalBoundsReport {
                mld,
                threshold,
                applicable: false,
                gamma: None,
                gamma_bound,
                gamma_ok: None,
                degree: None,
                degree_bound,
                degree_ok: None,
            });
        }
        let gamma = self.gamma_anticanonical()?;
        let volume = self
            .moment_polytope(&self.anticanonical())?
            .normalized_volume();
        let degree = from_int(factorial(d)) * volume;
        let gamma_ok = gamma >= gamma_bound;
        let degree_ok = degree <= degree_bound;
        Ok(AnticanonicalBoundsReport {
            mld,
            threshold,
            applicable: true,
            gamma: Some(gamma),
            gamma_bound,
            gamma_ok: Some(gamma_ok),
            degree: Some(degree),
            degree_bound,
            degree_ok: Some(degree_ok),
        })
    }
}

/// Solve `rows * x = rhs` allowing redundant rows; `None` when inconsistent.
/// Free coordinates are set to zero.
fn solve_consistent(rows: &[Vec<Rat>], rhs: &[Rat], ncols: usize) -> Option<Vec<Rat>> {
    let mut aug: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let nrows = aug.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].recip();
        for j in c..=ncols {
            aug[r][j] = &aug[r][j] * &inv;
        }
        for i in 0..nrows {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in c..=ncols {
                    let d = &aug[r][j] * &f;
                    aug[i][j] = &aug[i][j] - d;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    // inconsistent when a zero row has nonzero right-hand side
    for row in aug.iter().skip(r) {
        if row[..ncols].iter().all(|x| x.is_zero()) && !row[ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); ncols];
    for (k, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[k][ncols].clone();
    }
    Some(x)
}

fn factorial(n: usize) -> Int {
    let mut f = Int::one();
    for i in 2..=n {
        f *= Int::from(i as u64);
    }
    f
}

fn rat_pow(x: &Rat, n: usize) -> Rat {
    let mut out = Rat::one();
    for _ in 0..n {
        out *= x;
    }
    out
}

/// Product of two pairs: rays embedded in the two factors, coefficients
/// concatenated, maximal cones crossed when both factors carry them.
pub fn product_pair(p1: &ToricLogPair, p2: &ToricLogPair) -> Result<ToricLogPair> {
    let d1 = p1.dim;
    let d2 = p2.dim;
    let mut rays = Vec::with_capacity(p1.rays.len() + p2.rays.len());
    for e in &p1.rays {
        let mut v = e.clone();
        v.extend(std::iter::repeat_with(Int::zero).take(d2));
        rays.push(v);
    }
    for f in &p2.rays {
        let mut v: Vec<Int> = std::iter::repeat_with(Int::zero).take(d1).collect();
        v.extend(f.iter().cloned());
        rays.push(v);
    }
    let mut a = p1.a.clone();
    a.extend(p2.a.iter().cloned());
    let cones = match (&p1.max_cones, &p2.max_cones) {
        (Some(c1), Some(c2)) => {
            let mut cones = Vec::with_capacity(c1.len() * c2.len());
            for s in c1 {
                for t in c2 {
                    let mut c = s.clone();
                    c.extend(t.iter().map(|&i| i + p1.rays.len()));
                    cones.push(c);
                }
            }
            Some(cones)
        }
        _ => None,
    };
    ToricLogPair::new(d1 + d2, rays, a, cones)
}

/// Concatenates divisors and checks `alpha(product; L1 x L2) = min of the
/// factor alphas`.
pub fn product_alpha_check(
    p1: &ToricLogPair,
    l1: &[Rat],
    p2: &ToricLogPair,
    l2: &[Rat],
) -> Result<ProductAlphaReport> {
    p1.check_divisor(l1)?;
    p2.check_divisor(l2)?;
    let prod = product_pair(p1, p2)?;
    let mut l = l1.to_vec();
    l.extend(l2.iter().cloned());
    let product = prod.alpha_invariant(&l)?;
    let factor_minimum = p1.alpha_invariant(l1)?.min(p2.alpha_invariant(l2)?);
    let pass = product == factor_minimum;
    Ok(ProductAlphaReport {
        product,
        factor_minimum,
        pass,
    })
}

// ---------------------------------------------------------------------------
// census of log Fano ray configurations in dimensions 1 and 2

/// One equivalence class in the census: canonical rays (in cyclic order), a
/// witness coefficient vector, and its minimal log discrepancy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusMember {
    pub rays: Vec<Vec<Int>>,
    pub a: Vec<Rat>,
    pub mld: Rat,
    /// True when the witness is the boundary-free choice `a = 1`.
    pub boundary_free: bool,
}

/// Result of the bounded search for complete ray configurations admitting a
/// log Fano structure with `mld >= epsilon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoCensus {
    pub dim: usize,
    pub epsilon: Rat,
    /// `ceil(1/epsilon)`, the threshold parameter.
    pub q: u32,
    /// `gammaBound(dim, q)`, the gamma lower bound driving the volume cap.
    pub gamma: Rat,
    /// Cap on the volume of the difference body `P - P`.
    pub difference_volume_bound: Rat,
    /// Box radius derived from the volume cap.
    pub derived_radius: Int,
    /// Radius actually searched.
    pub radius: i64,
    /// Number of complete configurations that reached the exact test.
    pub configurations_tested: u64,
    pub members: Vec<CensusMember>,
}

/// Canonical form of a two-dimensional complete ray configuration under
/// unimodular equivalence and rotation/reflection of the cyclic order:
/// the lexicographically smallest row-Hermite form over all orderings.
pub fn census_canonical_form(rays: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
    let n = rays.len();
    if n < 3 {
        return Err(Error::Malformed(
            "a complete two-dimensional configuration needs at least 3 rays".into(),
        ));
    }
    for e in rays {
        if e.len() != 2 {
            return Err(Error::DimensionMismatch(format!(
                "ray {e:?} is not two-dimensional"
            )));
        }
    }
    Ok(canonical_class(rays).0)
}

/// Canonical representative and the ordering that realizes it.
fn canonical_class(rays: &[Vec<Int>]) -> (Vec<Vec<Int>>, Vec<usize>) {
    let n = rays.len();
    let mut best: Option<(Vec<Vec<Int>>, Vec<usize>)> = None;
    for rev in [false, true] {
        for rot in 0..n {
            let order: Vec<usize> = (0..n)
                .map(|k| {
                    if rev {
                        (rot + n - k) % n
                    } else {
                        (rot + k) % n
                    }
                })
                .collect();
            let rows = vec![
                order.iter().map(|&i| rays[i][0].clone()).collect::<Vec<_>>(),
                order.iter().map(|&i| rays[i][1].clone()).collect::<Vec<_>>(),
            ];
            let h = hermite_normal_form(&rows);
            let cols: Vec<Vec<Int>> = (0..n).map(|j| vec![h[0][j].clone(), h[1][j].clone()]).collect();
            let better = match &best {
                None => true,
                Some((b, _)) => cols < *b,
            };
            if better {
                best = Some((cols, order));
            }
        }
    }
    best.expect("at least one ordering")
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

/// Convex hull (counterclockwise, no collinear vertices) by monotone chain.
fn hull_i64(pts: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut p = pts.to_vec();
    p.sort_unstable();
    p.dedup();
    let n = p.len();
    if n <= 2 {
        return p;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &q in &p {
        while lower.len() >= 2
            && cross(
                (
                    lower[lower.len() - 1].0 - lower[lower.len() - 2].0,
                    lower[lower.len() - 1].1 - lower[lower.len() - 2].1,
                ),
                (q.0 - lower[lower.len() - 2].0, q.1 - lower[lower.len() - 2].1),
            ) <= 0
        {
            lower.pop();
        }
        lower.push(q);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &q in p.iter().rev() {
        while upper.len() >= 2
            && cross(
                (
                    upper[upper.len() - 1].0 - upper[upper.len() - 2].0,
                    upper[upper.len() - 1].1 - upper[upper.len() - 2].1,
                ),
                (q.0 - upper[upper.len() - 2].0, q.1 - upper[upper.len() - 2].1),
            ) <= 0
        {
            upper.pop();
        }
        upper.push(q);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn area2(hull: &[(i64, i64)]) -> i64 {
    if hull.len() < 3 {
        return 0;
    }
    let mut s = 0i64;
    for i in 0..hull.len() {
        let a = hull[i];
        let b = hull[(i + 1) % hull.len()];
        s += cross(a, b);
    }
    s
}

fn boundary_lattice_count(hull: &[(i64, i64)]) -> i64 {
    if hull.len() < 2 {
        return hull.len() as i64;
    }
    let mut b = 0i64;
    for i in 0..hull.len() {
        let p = hull[i];
        let q = hull[(i + 1) % hull.len()];
        b += (q.0 - p.0).gcd(&(q.1 - p.1));
    }
    b
}

fn strictly_inside(hull: &[(i64, i64)], p: (i64, i64)) -> bool {
    if hull.len() < 3 {
        return false;
    }
    for i in 0..hull.len() {
        let a = hull[i];
        let b = hull[(i + 1) % hull.len()];
        if cross((b.0 - a.0, b.1 - a.1), (p.0 - a.0, p.1 - a.1)) <= 0 {
            return false;
        }
    }
    true
}

/// Rank of a point in the counterclockwise sweep starting just after (1,0).
fn angle_rank(p: (i64, i64)) -> u8 {
    if p.1 > 0 {
        0
    } else if p.1 == 0 && p.0 < 0 {
        1
    } else {
        2
    }
}

fn angle_order(a: (i64, i64), b: (i64, i64)) -> std::cmp::Ordering {
    angle_rank(a)
        .cmp(&angle_rank(b))
        .then_with(|| 0.cmp(&cross(a, b)))
}

struct CensusSearch {
    epsilon: Rat,
    /// epsilon as p/q in lowest terms
    eps_num: i64,
    eps_den: i64,
    unit_boundary: bool,
    det_cap: i64,
    area2_cap: i64,
    radius: i64,
    candidates: Vec<(i64, i64)>,
}

type MemberMap = BTreeMap<Vec<Vec<Int>>, CensusMember>;

impl CensusSearch {
    /// Necessary conditions for `g` to extend the angular chain.
    fn appendable(&self, chain: &[(i64, i64)], g: (i64, i64)) -> bool {
        let last = *chain.last().expect("chain starts nonempty");
        let d = cross(last, g);
        if d <= 0 {
            return false;
        }
        for &p in chain {
            let dp = cross(p, g);
            if dp.abs() > self.det_cap {
                return false;
            }
        }
        // every lattice point of the open fundamental cell of the new cone
        // must keep a log discrepancy >= epsilon for some a <= 1, i.e. its
        // coordinate sum (t+s)/d must be at least epsilon
        for t in 1..d {
            for s in 0..d {
                let zx = t * last.0 + s * g.0;
                let zy = t * last.1 + s * g.1;
                if zx % d == 0 && zy % d == 0 && (t + s) * self.eps_den < self.eps_num * d {
                    return false;
                }
            }
        }
        if chain.len() >= 2 {
            // the support vector of every cone must stay below the largest
            // allowed coefficient on every other ray, even with the most
            // favorable a
            for w in 0..chain.len() - 1 {
                if !self.cone_ray_ok(chain[w], chain[w + 1], g) {
                    return false;
                }
            }
            for &r in chain {
                if !self.cone_ray_ok(last, g, r) {
                    return false;
                }
            }
        }
        // no nonzero lattice point strictly inside epsilon times the hull
        let mut pts: Vec<(i64, i64)> = chain.to_vec();
        pts.push(g);
        let hull = hull_i64(&pts);
        if self.unit_boundary {
            let a2 = area2(&hull);
            if a2 > 0 {
                let interior = (a2 - boundary_lattice_count(&hull)) / 2 + 1;
                let zero_inside = i64::from(strictly_inside(&hull, (0, 0)));
                if interior - zero_inside > 0 {
                    return false;
                }
            }
        } else {
            let scaled: Vec<(i64, i64)> = hull
                .iter()
                .map(|&(x, y)| (x * self.eps_num, y * self.eps_num))
                .collect();
            let r = self.radius * self.eps_num / self.eps_den + 1;
            for zx in -r..=r {
                for zy in -r..=r {
                    if (zx, zy) != (0, 0)
                        && strictly_inside(&scaled, (zx * self.eps_den, zy * self.eps_den))
                    {
                        return false;
                    }
                }
            }
        }
        // difference-body volume cap
        let mut diffs = Vec::with_capacity(pts.len() * pts.len());
        for &p in &pts {
            for &q in &pts {
                diffs.push((p.0 - q.0, p.1 - q.1));
            }
        }
        if area2(&hull_i64(&diffs)) > self.area2_cap {
            return false;
        }
        true
    }

    /// Necessary for nef with any coefficients in `[epsilon, 1]`: the support
    /// vector of cone `(e, f)` evaluated at `r` under the most favorable
    /// coefficient choice must not exceed the largest allowed `a_r`.
    fn cone_ray_ok(&self, e: (i64, i64), f: (i64, i64), r: (i64, i64)) -> bool {
        let d = cross(e, f);
        let relax = |x: i64| {
            if x > 0 {
                x * self.eps_num
            } else {
                x * self.eps_den
            }
        };
        relax(cross(r, f)) + relax(cross(e, r)) <= d * self.eps_den
    }

    /// The closing cone back to (1,0) goes through the same necessary checks
    /// the forward cones saw during chain growth.
    fn wrap_ok(&self, chain: &[(i64, i64)]) -> bool {
        let f = *chain.last().expect("nonempty");
        let g = (1, 0);
        let d = cross(f, g);
        if d <= 0 {
            return false;
        }
        for t in 1..d {
            for s in 0..d {
                let zx = t * f.0 + s * g.0;
                let zy = t * f.1 + s * g.1;
                if zx % d == 0 && zy % d == 0 && (t + s) * self.eps_den < self.eps_num * d {
                    return false;
                }
            }
        }
        chain.iter().all(|&r| self.cone_ray_ok(f, g, r))
    }

    fn extend(
        &self,
        chain: &mut Vec<(i64, i64)>,
        from: usize,
        members: &mut MemberMap,
        tested: &mut u64,
    ) -> Result<()> {
        for idx in from..self.candidates.len() {
            let g = self.candidates[idx];
            if cross(*chain.last().expect("nonempty"), g) <= 0 {
                // the angular gap only grows from here on
                break;
            }
            if !self.appendable(chain, g) {
                continue;
            }
            chain.push(g);
            if g.1 < 0 {
                // the wrap-around gap back to (1,0) is below pi: complete
                self.test_leaf(chain, members, tested)?;
            }
            self.extend(chain, idx + 1, members, tested)?;
            chain.pop();
        }
        Ok(())
    }

    fn test_leaf(
        &self,
        chain: &[(i64, i64)],
        members: &mut MemberMap,
        tested: &mut u64,
    ) -> Result<()> {
        if !self.wrap_ok(chain) {
            return Ok(());
        }
        *tested += 1;
        let n = chain.len();
        // most leaves repeat an already-recorded class under a different
        // presentation; dedup before any exact work
        let rays: Vec<Vec<Int>> = chain.iter().map(|&(x, y)| vec![int(x), int(y)]).collect();
        let (canonical, order) = canonical_class(&rays);
        if members.contains_key(&canonical) {
            return Ok(());
        }
        // free boundary first: growth kept epsilon times the ray hull free
        // of nonzero lattice points, so only wall convexity is left
        let nef_unit = (0..n).all(|i| {
            let u = chain[i];
            let v = chain[(i + 1) % n];
            let w = chain[(i + 2) % n];
            cross(u, w) <= cross(u, v) + cross(v, w)
        });
        let a = if nef_unit {
            vec![Rat::one(); n]
        } else if self.unit_boundary {
            return Ok(());
        } else {
            // general boundary: decided at the largest admissible a
            match self.boundary_witness(chain)? {
                Some(a) => a,
                None => return Ok(()),
            }
        };
        // rebuild the full pair and fail loudly if the exact invariants
        // disagree with the search-time reasoning
        let cones: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
        let pair = ToricLogPair::new(2, rays, a.clone(), Some(cones))?;
        let mld = pair.mld()?;
        if pair.anticanonical_nef() != Some(true) || mld < self.epsilon {
            return Err(Error::Internal(
                "census member candidate failed verification".into(),
            ));
        }
        let a_canonical: Vec<Rat> = order.iter().map(|&i| a[i].clone()).collect();
        let boundary_free = a.iter().all(|x| x.is_one());
        members.insert(
            canonical.clone(),
            CensusMember {
                rays: canonical,
                a: a_canonical,
                mld,
                boundary_free,
            },
        );
        Ok(())
    }

    /// Decide boundary feasibility through the componentwise-largest
    /// coefficient vector: wall caps have nonnegative neighbor coefficients,
    /// so iterating them downward from `a == 1` converges onto the unique
    /// maximum of the wall-and-box region, and every remaining constraint is
    /// increasing in `a`, so checking it there settles the whole region.
    /// Falls back to the exact linear program when the iteration does not
    /// stabilize exactly.
    fn boundary_witness(&self, chain: &[(i64, i64)]) -> Result<Option<Vec<Rat>>> {
        let n = chain.len();
        let mut hi = vec![Rat::one(); n];
        let mut stable = false;
        for _ in 0..(4 * n + 16) {
            let mut changed = false;
            for i in 0..n {
                let j = (i + 1) % n;
                let k = (i + 2) % n;
                let u = chain[i];
                let v = chain[j];
                let w = chain[k];
                let d3 = cross(u, w);
                if d3 <= 0 {
                    // the wall inequality is vacuous past a half turn
                    continue;
                }
                let cap = (&hi[i] * from_int(int(cross(v, w)))
                    + &hi[k] * from_int(int(cross(u, v))))
                    / from_int(int(d3));
                if cap < hi[j] {
                    if cap < self.epsilon {
                        // the supremum already dips below the floor
                        return Ok(None);
                    }
                    hi[j] = cap;
                    changed = true;
                }
            }
            if !changed {
                stable = true;
                break;
            }
        }
        if !stable {
            return self.feasible_boundary(chain);
        }
        if hi.iter().any(|x| *x < self.epsilon) {
            return Ok(None);
        }
        for i in 0..n {
            let j = (i + 1) % n;
            let u = chain[i];
            let v = chain[j];
            let d = cross(u, v);
            for t in 1..d {
                for s in 0..d {
                    let zx = t * u.0 + s * v.0;
                    let zy = t * u.1 + s * v.1;
                    if zx % d == 0 && zy % d == 0 && t + s < d {
                        let val = (&hi[i] * from_int(int(t)) + &hi[j] * from_int(int(s)))
                            / from_int(int(d));
                        if val < self.epsilon {
                            return Ok(None);
                        }
                    }
                }
            }
        }
        Ok(Some(hi))
    }

    /// Coefficients `a` with `epsilon <= a_i <= 1`, `-K-B` nef, and every
    /// fundamental-cell valuation of every cone at least epsilon -- or None.
    fn feasible_boundary(&self, chain: &[(i64, i64)]) -> Result<Option<Vec<Rat>>> {
        let n = chain.len();
        let mut cons: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for i in 0..n {
            let mut lo = vec![Rat::zero(); n];
            lo[i] = Rat::one();
            cons.push((lo, -self.epsilon.clone()));
            let mut hi = vec![Rat::zero(); n];
            hi[i] = -Rat::one();
            cons.push((hi, Rat::one()));
        }
        for i in 0..n {
            let j = (i + 1) % n;
            let k = (i + 2) % n;
            let u = chain[i];
            let v = chain[j];
            let w = chain[k];
            let d = cross(u, v);
            // nef reduces to convexity across each wall: the cone (i, j)
            // linearization must stay <= a_k on the next ray, which keeps
            // every row banded over three consecutive coefficients
            let mut c = vec![Rat::zero(); n];
            c[k] += Rat::from_integer(int(d));
            c[i] += Rat::from_integer(int(-cross(w, v)));
            c[j] += Rat::from_integer(int(-cross(u, w)));
            cons.push((c, Rat::zero()));
            // fundamental-cell valuations: alpha a_i + beta a_j >= epsilon;
            // when alpha + beta >= 1 the box lower bound already gives this
            for t in 1..d {
                for s in 0..d {
                    let zx = t * u.0 + s * v.0;
                    let zy = t * u.1 + s * v.1;
                    if zx % d == 0 && zy % d == 0 && t + s < d {
                        let mut c = vec![Rat::zero(); n];
                        c[i] = Rat::new(int(t), int(d));
                        c[j] = Rat::new(int(s), int(d));
                        cons.push((c, -self.epsilon.clone()));
                    }
                }
            }
        }
        feasible_point(n, &cons)
    }

}

/// Bounded search for complete ray configurations in dimension 1 or 2 that
/// admit coefficients `a_i in [epsilon, 1]` with `mld >= epsilon` and `-K-B`
/// nef, up to unimodular equivalence.  The box radius is derived from the
/// difference-body volume cap `vol(P - P) <= 1/(gamma epsilon)^d`; a guard
/// rejects radii too large to enumerate, and `radius_override` can shrink
/// the box for a deliberately truncated run.
pub fn fano_census(dim: usize, epsilon: &Rat, radius_override: Option<i64>) -> Result<FanoCensus> {
    if !(dim == 1 || dim == 2) {
        return Err(Error::Unsupported(
            "the census is implemented for dimensions 1 and 2".into(),
        ));
    }
    if !epsilon.is_positive() || epsilon > &Rat::one() {
        return Err(Error::OutOfRange(format!(
            "epsilon = {} must lie in (0, 1]",
            format_rat(epsilon)
        )));
    }
    let q = to_u32(&crate::num::ceil_rat(&epsilon.recip()))?;
    let gamma = sylvester::gamma_bound(to_u32(&int(dim as i64))?, q)?;
    let volume_bound = rat_pow(&((&gamma * epsilon).recip()), dim);
    if dim == 1 {
        // the only complete one-dimensional configuration is {1, -1}; the
        // boundary-free choice always reaches mld = 1 >= epsilon
        let member = CensusMember {
            rays: vec![vec![int(1)], vec![int(-1)]],
            a: vec![Rat::one(), Rat::one()],
            mld: Rat::one(),
            boundary_free: true,
        };
        return Ok(FanoCensus {
            dim,
            epsilon: epsilon.clone(),
            q,
            gamma,
            difference_volume_bound: volume_bound,
            derived_radius: Int::one(),
            radius: 1,
            configurations_tested: 1,
            members: vec![member],
        });
    }
    let derived_radius = crate::num::floor_rat(&(&volume_bound / rat_int(2)));
    let unit_boundary = epsilon.is_one();
    let guard_limit: i64 = if unit_boundary { 24 } else { 8 };
    let radius = match radius_override {
        Some(r) => {
            if r < 1 {
                return Err(Error::OutOfRange(format!("radius override {r} must be >= 1")));
            }
            match derived_radius.to_i64() {
                Some(d) => r.min(d),
                None => r,
            }
        }
        None => derived_radius.to_i64().unwrap_or(i64::MAX),
    };
    if radius > guard_limit {
        return Err(Error::GuardExceeded(format!(
            "census box radius {radius} exceeds the supported limit {guard_limit} for epsilon = {}; \
             pass an explicit smaller radius for a truncated search",
            format_rat(epsilon)
        )));
    }
    let det_cap = crate::num::floor_rat(&(&volume_bound / rat_int(2)))
        .to_i64()
        .unwrap_or(i64::MAX);
    let area2_cap = crate::num::floor_rat(&(rat_int(2) * &volume_bound))
        .to_i64()
        .unwrap_or(i64::MAX);

    let mut candidates: Vec<(i64, i64)> = Vec::new();
    for x in -radius..=radius {
        for y in -radius..=radius {
            if (x, y) == (0, 0) || (x, y) == (1, 0) {
                continue;
            }
            if x.gcd(&y) == 1 {
                candidates.push((x, y));
            }
        }
    }
    candidates.sort_unstable_by(|&a, &b| angle_order(a, b));

    let eps_num = epsilon.numer().to_i64().ok_or_else(|| {
        Error::OutOfRange("epsilon numerator does not fit in 64 bits".into())
    })?;
    let eps_den = epsilon.denom().to_i64().ok_or_else(|| {
        Error::OutOfRange("epsilon denominator does not fit in 64 bits".into())
    })?;
    let search = CensusSearch {
        epsilon: epsilon.clone(),
        eps_num,
        eps_den,
        unit_boundary,
        det_cap,
        area2_cap,
        radius,
        candidates,
    };

    // the second ray of the canonical representative lies in the sector
    // 45 < angle <= 90 degrees; split the search over its choices
    let roots: Vec<usize> = (0..search.candidates.len())
        .filter(|&i| {
            let (x, y) = search.candidates[i];
            y > 0 && x >= 0 && x < y
        })
        .collect();
    let results: Result<Vec<(MemberMap, u64)>> = roots
        .par_iter()
        .map(|&root| {
            let mut members = MemberMap::new();
            let mut tested = 0u64;
            let mut chain = vec![(1i64, 0i64)];
            let g = search.candidates[root];
            if search.appendable(&chain, g) {
                chain.push(g);
                search.extend(&mut chain, root + 1, &mut members, &mut tested)?;
                chain.pop();
            }
            Ok((members, tested))
        })
        .collect();
    let mut members = MemberMap::new();
    let mut tested = 0u64;
    for (m, t) in results? {
        tested += t;
        for (k, v) in m {
            members.entry(k).or_insert(v);
        }
    }
    Ok(FanoCensus {
        dim,
        epsilon: epsilon.clone(),
        q,
        gamma,
        difference_volume_bound: volume_bound,
        derived_radius,
        radius,
        configurations_tested: tested,
        members: members.into_values().collect(),
    })
}
