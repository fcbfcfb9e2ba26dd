//! Sharp lower bounds on `gamma(0 in S)` for lattice simplices whose
//! `1/q`-dilate has no interior lattice point besides the origin, with exact
//! equality classification, the companion bounds for lattice polytopes
//! (volume and point-count caps), and a brute-force planar census harness.
//!
//! The threshold is `q / u_{d+1,q}` with `u` the doubled Sylvester sequence;
//! equality holds exactly when the barycentric coordinates of the origin are
//! `(q/u_{d+1,q}, q/(1+u_{d,q}), ..., q/(1+u_{1,q}))`, in which case the
//! simplex is a unimodular image of one canonical model and a witness matrix
//! is produced.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{hermite_normal_form, QMatrix};
use crate::num::{from_int, rat_int, Int, Rat};
use crate::polytope::{barycentric_coordinates, LatticeMode, Polytope};
use crate::sylvester::{self, SylvesterTable};

/// A nondegenerate simplex with integer vertices: `d+1` affinely independent
/// points in `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSimplex {
    vertices: Vec<Vec<Int>>,
}

impl LatticeSimplex {
    pub fn new(vertices: Vec<Vec<Int>>) -> Result<LatticeSimplex> {
        if vertices.is_empty() {
            return Err(Error::Malformed("a simplex needs vertices".into()));
        }
        let d = vertices[0].len();
        if d == 0 || vertices.len() != d + 1 {
            return Err(Error::DimensionMismatch(format!(
                "expected {} vertices of length {d}",
                d + 1
            )));
        }
        if vertices.iter().any(|v| v.len() != d) {
            return Err(Error::DimensionMismatch(
                "all vertices must share one length".into(),
            ));
        }
        let rows: Vec<Vec<Rat>> = vertices[1..]
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&vertices[0])
                    .map(|(a, b)| from_int(a - b))
                    .collect()
            })
            .collect();
        let det = QMatrix::from_rows(rows)?.determinant()?;
        if det.is_zero() {
            return Err(Error::DegenerateSimplex);
        }
        Ok(LatticeSimplex { vertices })
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    pub fn vertices(&self) -> &[Vec<Int>] {
        &self.vertices
    }

    pub fn vertices_rat(&self) -> Vec<Vec<Rat>> {
        self.vertices
            .iter()
            .map(|v| v.iter().map(|x| from_int(x.clone())).collect())
            .collect()
    }

    /// Image under an integer matrix (rows), for building equivalent copies.
    pub fn apply(&self, u: &[Vec<Int>]) -> Result<LatticeSimplex> {
        let d = self.dim();
        if u.len() != d || u.iter().any(|r| r.len() != d) {
            return Err(Error::DimensionMismatch(format!("matrix must be {d}x{d}")));
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                u.iter()
                    .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
                    .collect()
            })
            .collect();
        LatticeSimplex::new(vertices)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpnessReport {
    pub gamma: Rat,
    /// `q / u_{d+1,q}`.
    pub bound: Rat,
    pub equality: bool,
    /// When `equality`, an integer matrix of determinant +-1 sending the
    /// simplex to the canonical model (rows).
    pub witness: Option<Vec<Vec<Int>>>,
}

/// Checks `gamma(0 in S) >= q/u_{d+1,q}` for a lattice simplex whose scaled
/// body `S/q` has no interior lattice point besides the origin, classifies
/// the equality case by the barycentric coordinates of the origin, and
/// produces the unimodular witness when equality holds.
pub fn verify_sharp_simplex(s: &LatticeSimplex, q: u32) -> Result<SharpnessReport> {
    if q == 0 {
        return Err(Error::OutOfRange("q must be a positive integer".into()));
    }
    let d = s.dim();
    let verts = s.vertices_rat();
    let origin = vec![Rat::zero(); d];
    let lambda = barycentric_coordinates(&verts, &origin)?;
    if lambda.iter().any(|c| !c.is_positive()) {
        return Err(Error::HypothesisViolated(
            "the origin is not interior to the simplex".into(),
        ));
    }
    // lattice condition on the 1/q-dilate
    let q_rat = rat_int(q as i64);
    let scaled: Vec<Vec<Rat>> = verts
        .iter()
        .map(|v| v.iter().map(|x| x / &q_rat).collect())
        .collect();
    let dilate = Polytope::from_vertices(d, scaled)?;
    for p in dilate.lattice_points(LatticeMode::Interior) {
        if p.iter().any(|x| !x.is_zero()) {
            return Err(Error::HypothesisViolated(format!(
                "lattice point {p:?} is interior to the 1/{q}-dilate"
            )));
        }
    }
    let gamma = lambda.iter().min().unwrap().clone();
    let bound = sylvester::gamma_bound(d as u32, q)?;
    if gamma < bound {
        return Err(Error::Internal(format!(
            "gamma {gamma} fell below the sharp bound {bound}"
        )));
    }
    let mut table = SylvesterTable::new(q)?;
    // slot values in descending order: q/(1+u_1), ..., q/(1+u_d), q/u_{d+1}
    let mut slots_desc: Vec<Rat> = Vec::with_capacity(d + 1);
    for i in 1..=d {
        let u = table.value(i as u32)?.clone();
        slots_desc.push(Rat::new(Int::from(q), u + Int::one()));
    }
    slots_desc.push(bound.clone());
    let mut sorted = lambda.clone();
    sorted.sort();
    let mut expected_asc = slots_desc.clone();
    expected_asc.reverse();
    let equality = sorted == expected_asc;
    let witness = if equality {
        Some(equality_witness(s, &lambda, &slots_desc, &mut table)?)
    } else {
        None
    };
    Ok(SharpnessReport {
        gamma,
        bound,
        equality,
        witness,
    })
}

/// Integer matrix `U` with `U v = e_i` for the vertex carrying barycentric
/// coordinate `q/(1+u_{i,q})` and `U v_min = -sum u_{d+1,q}/(1+u_{i,q}) e_i`.
/// Tied coordinates are resolved by trying every value-consistent assignment.
fn equality_witness(
    s: &LatticeSimplex,
    lambda: &[Rat],
    slots_desc: &[Rat],
    table: &mut SylvesterTable,
) -> Result<Vec<Vec<Int>>> {
    let d = s.dim();
    let u_top = table.value(d as u32 + 1)?.clone();
    let mut target = Vec::with_capacity(d);
    for i in 1..=d {
        let denom = table.value(i as u32)?.clone() + Int::one();
        debug_assert!((&u_top % &denom).is_zero());
        target.push(-(&u_top / denom));
    }
    let verts = s.vertices();
    for perm in (0..=d).permutations(d + 1) {
        if (0..=d).any(|j| lambda[perm[j]] != slots_desc[j]) {
            continue;
        }
        // columns: the d non-minimal vertices in slot order
        let mut rows = vec![vec![Rat::zero(); d]; d];
        for (slot, &vi) in perm[..d].iter().enumerate() {
            for r in 0..d {
                rows[r][slot] = from_int(verts[vi][r].clone());
            }
        }
        let v = QMatrix::from_rows(rows)?;
        let Ok(inv) = v.inverse() else { continue };
        let mut u_rows: Vec<Vec<Int>> = Vec::with_capacity(d);
        let mut integral = true;
        'rows: for r in 0..d {
            let mut row = Vec::with_capacity(d);
            for c in 0..d {
                let entry = &inv[(r, c)];
                if !entry.is_integer() {
                    integral = false;
                    break 'rows;
                }
                row.push(entry.to_integer());
            }
            u_rows.push(row);
        }
        if !integral {
            continue;
        }
        let v_min = &verts[perm[d]];
        let image: Vec<Int> = u_rows
            .iter()
            .map(|row| row.iter().zip(v_min.iter()).map(|(a, b)| a * b).sum())
            .collect();
        if image == target {
            return Ok(u_rows);
        }
    }
    Err(Error::Internal(
        "equality coordinates found but no unimodular witness assignment".into(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeBoundsReport {
    /// Number of interior lattice points.
    pub interior_count: usize,
    /// Least `gamma(P in B)` over interior lattice points `P`.
    pub min_gamma: Rat,
    pub gamma_bound: Rat,
    pub gamma_ok: bool,
    pub volume: Rat,
    pub volume_bound: Rat,
    pub volume_ok: bool,
    /// Number of lattice points of the closed body.
    pub total_points: usize,
    pub point_bound: Rat,
    pub points_ok: bool,
}

/// For a full-dimensional lattice polytope with `q >= 1` interior lattice
/// points: every interior lattice point `P` has
/// `gamma(P in B) >= q/u_{d+1,q}`, the volume is at most
/// `q (u_{d+1,q}/q)^d`, and the closed body has at most
/// `d + d! q (u_{d+1,q}/q)^d` lattice points.
pub fn verify_polytope_bounds(body: &Polytope) -> Result<PolytopeBoundsReport> {
    if !body.is_full_dimensional() {
        return Err(Error::HypothesisViolated(
            "the body must be full-dimensional".into(),
        ));
    }
    for v in body.vertices() {
        if v.iter().any(|x| !x.is_integer()) {
            return Err(Error::Malformed(
                "the body must have integer vertices".into(),
            ));
        }
    }
    let interior = body.lattice_points(LatticeMode::Interior);
    if interior.is_empty() {
        return Err(Error::HypothesisViolated(
            "the body has no interior lattice points".into(),
        ));
    }
    let d = body.dim();
    let q = interior.len();
    let gamma_bound = sylvester::gamma_bound(d as u32, q as u32)?;
    let mut min_gamma: Option<Rat> = None;
    for p in &interior {
        let pr: Vec<Rat> = p.iter().map(|x| from_int(x.clone())).collect();
        let g = body.gamma_point(&pr)?;
        min_gamma = Some(match min_gamma {
            None => g,
            Some(m) => m.min(g),
        });
    }
    let min_gamma = min_gamma.unwrap();
    let volume = body.normalized_volume();
    // q * (u_{d+1,q}/q)^d
    let ratio = rat_int(q as i64) / &gamma_bound / rat_int(q as i64); // u_{d+1,q}/q
    let mut vol_bound = rat_int(q as i64);
    for _ in 0..d {
        vol_bound *= &ratio;
    }
    let mut factorial = Int::one();
    for i in 2..=d {
        factorial *= Int::from(i as u64);
    }
    let point_bound = rat_int(d as i64) + from_int(factorial) * &vol_bound;
    let total_points = body.lattice_points(LatticeMode::Closed).len();
    Ok(PolytopeBoundsReport {
        interior_count: q,
        gamma_ok: min_gamma >= gamma_bound,
        min_gamma,
        gamma_bound,
        volume_ok: volume <= vol_bound,
        volume,
        volume_bound: vol_bound,
        points_ok: from_int(Int::from(total_points as u64)) <= point_bound,
        total_points,
        point_bound,
    })
}

/// Variant for simplices with vertices in `(1/q) Z^d` and
/// `Z^d ∩ int S = {0}`: verifies `gamma(0 in S) >= q/u_{d+1,q}` by running
/// the sharp-simplex check on the dilate `qS` (gamma is scaling-invariant).
pub fn verify_scaled_simplex(vertices: &[Vec<Rat>], q: u32) -> Result<SharpnessReport> {
    if q == 0 {
        return Err(Error::OutOfRange("q must be a positive integer".into()));
    }
    let q_rat = rat_int(q as i64);
    let mut scaled: Vec<Vec<Int>> = Vec::with_capacity(vertices.len());
    for v in vertices {
        let mut row = Vec::with_capacity(v.len());
        for x in v {
            let y = x * &q_rat;
            if !y.is_integer() {
                return Err(Error::Malformed(format!(
                    "vertex coordinate {x} is not in (1/{q})Z"
                )));
            }
            row.push(y.to_integer());
        }
        scaled.push(row);
    }
    verify_sharp_simplex(&LatticeSimplex::new(scaled)?, q)
}

/// Canonical representative of a simplex under unimodular maps fixing the
/// origin and vertex reordering: the lexicographically least Hermite normal
/// form of the `d x (d+1)` vertex matrix over all column orders.
pub fn canonical_form(s: &LatticeSimplex) -> Vec<Vec<Int>> {
    let d = s.dim();
    let verts = s.vertices();
    let mut best: Option<Vec<Vec<Int>>> = None;
    for perm in (0..=d).permutations(d + 1) {
        let rows: Vec<Vec<Int>> = (0..d)
            .map(|r| perm.iter().map(|&c| verts[c][r].clone()).collect())
            .collect();
        let h = hermite_normal_form(&rows);
        if best.as_ref().map(|b| &h < b).unwrap_or(true) {
            best = Some(h);
        }
    }
    best.unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub radius: i64,
    pub q: u32,
    /// Triangles (up to vertex order) with the origin strictly inside.
    pub candidates: usize,
    /// Of those, triangles whose 1/q-dilate has no nonzero interior lattice
    /// point; each was run through the sharpness check.
    pub admissible: usize,
    pub min_gamma: Option<Rat>,
    pub bound: Rat,
    /// Canonical forms of the equality cases (one entry per unimodular
    /// equivalence class).
    pub equality_classes: Vec<Vec<Vec<Int>>>,
    /// True if any admissible triangle fell below the bound (never expected).
    pub violated: bool,
}

fn orientation(a: (i64, i64), b: (i64, i64), p: (i64, i64)) -> i64 {
    (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0)
}

fn strictly_inside(tri: &[(i64, i64); 3], p: (i64, i64)) -> bool {
    let s0 = orientation(tri[0], tri[1], p);
    let s1 = orientation(tri[1], tri[2], p);
    let s2 = orientation(tri[2], tri[0], p);
    (s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0)
}

/// Does the 1/q-dilate contain a nonzero interior lattice point? Checked in
/// machine integers: `z` interior to `S/q` iff `qz` interior to `S`.
fn dilate_has_extra_point(tri: &[(i64, i64); 3], q: i64, radius: i64) -> bool {
    let zr = radius / q;
    for z0 in -zr..=zr {
        for z1 in -zr..=zr {
            if z0 == 0 && z1 == 0 {
                continue;
            }
            if strictly_inside(tri, (q * z0, q * z1)) {
                return true;
            }
        }
    }
    false
}

#[derive(Default)]
struct CensusPartial {
    candidates: usize,
    admissible: usize,
    min_gamma: Option<Rat>,
    classes: BTreeSet<Vec<Vec<Int>>>,
    violated: bool,
}

/// Exhaustive planar census: all lattice triangles with vertices in
/// `[-R, R]^2` containing the origin strictly and passing the dilate
/// condition, verified and classified up to unimodular equivalence.
/// Parallel over the first vertex; the merge is deterministic.
pub fn enumerate_and_verify(radius: i64, q: u32) -> Result<CensusReport> {
    if !(1..=8).contains(&radius) {
        return Err(Error::GuardExceeded(format!(
            "census radius {radius} outside the supported range 1..=8"
        )));
    }
    if q == 0 {
        return Err(Error::OutOfRange("q must be a positive integer".into()));
    }
    let mut pts: Vec<(i64, i64)> = Vec::new();
    for x in -radius..=radius {
        for y in -radius..=radius {
            pts.push((x, y));
        }
    }
    let n = pts.len();
    let bound = sylvester::gamma_bound(2, q)?;
    let partials: Vec<CensusPartial> = (0..n)
        .into_par_iter()
        .map(|i| -> Result<CensusPartial> {
            let mut part = CensusPartial::default();
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let tri = [pts[i], pts[j], pts[k]];
                    if !strictly_inside(&tri, (0, 0)) {
                        continue;
                    }
                    part.candidates += 1;
                    if dilate_has_extra_point(&tri, q as i64, radius) {
                        continue;
                    }
                    part.admissible += 1;
                    let simplex = LatticeSimplex::new(
                        tri.iter()
                            .map(|&(a, b)| vec![Int::from(a), Int::from(b)])
                            .collect(),
                    )?;
                    let rep = verify_sharp_simplex(&simplex, q)?;
                    if rep.gamma < bound {
                        part.violated = true;
                    }
                    part.min_gamma = Some(match part.min_gamma.take() {
                        None => rep.gamma.clone(),
                        Some(m) => m.min(rep.gamma.clone()),
                    });
                    if rep.equality {
                        part.classes.insert(canonical_form(&simplex));
                    }
                }
            }
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = CensusReport {
        radius,
        q,
        candidates: 0,
        admissible: 0,
        min_gamma: None,
        bound,
        equality_classes: Vec::new(),
        violated: false,
    };
    let mut classes: BTreeSet<Vec<Vec<Int>>> = BTreeSet::new();
    for part in partials {
        report.candidates += part.candidates;
        report.admissible += part.admissible;
        report.violated |= part.violated;
        report.min_gamma = match (report.min_gamma.take(), part.min_gamma) {
            (None, m) | (m, None) => m,
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        classes.extend(part.classes);
    }
    report.equality_classes = classes.into_iter().collect();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};

    fn simplex(vs: &[[i64; 2]]) -> LatticeSimplex {
        LatticeSimplex::new(
            vs.iter()
                .map(|v| v.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn canonical_triangle() -> LatticeSimplex {
        simplex(&[[1, 0], [0, 1], [-3, -2]])
    }

    #[test]
    fn sharp_check_on_the_canonical_triangle() {
        let rep = verify_sharp_simplex(&canonical_triangle(), 1).unwrap();
        assert_eq!(rep.gamma, rat(1, 6));
        assert_eq!(rep.bound, rat(1, 6));
        assert!(rep.equality);
        assert_eq!(
            rep.witness,
            Some(vec![vec![int(1), int(0)], vec![int(0), int(1)]])
        );
    }

    #[test]
    fn sharp_check_in_dimension_one() {
        let s = LatticeSimplex::new(vec![vec![int(-1)], vec![int(1)]]).unwrap();
        let rep = verify_sharp_simplex(&s, 1).unwrap();
        assert_eq!(rep.gamma, rat(1, 2));
        assert!(rep.equality);
        let w = rep.witness.unwrap();
        assert_eq!(w.len(), 1);
        assert!(w[0][0] == int(1) || w[0][0] == int(-1));
    }

    #[test]
    fn strict_inequality_case() {
        let rep = verify_sharp_simplex(&simplex(&[[1, 0], [0, 1], [-1, -1]]), 1).unwrap();
        assert_eq!(rep.gamma, rat(1, 3));
        assert!(!rep.equality);
        assert!(rep.witness.is_none());
    }

    #[test]
    fn q2_canonical_model() {
        // vertices e_1, e_2, -(42/3, 42/7) = (-14, -6)
        let rep = verify_sharp_simplex(&simplex(&[[1, 0], [0, 1], [-14, -6]]), 2).unwrap();
        assert_eq!(rep.gamma, rat(1, 21));
        assert_eq!(rep.bound, rat(1, 21));
        assert!(rep.equality);
        assert_eq!(
            rep.witness,
            Some(vec![vec![int(1), int(0)], vec![int(0), int(1)]])
        );
    }

    #[test]
    fn precondition_failures_are_reported() {
        // doubled canonical triangle: extra interior points
        let err = verify_sharp_simplex(&simplex(&[[2, 0], [0, 2], [-6, -4]]), 1)
            .err()
            .unwrap();
        assert!(matches!(err, Error::HypothesisViolated(_)));
        // origin on the boundary
        let err = verify_sharp_simplex(&simplex(&[[0, 0], [1, 0], [0, 1]]), 1)
            .err()
            .unwrap();
        assert!(matches!(err, Error::HypothesisViolated(_)));
    }

    #[test]
    fn equality_survives_unimodular_maps() {
        let shear = vec![vec![int(1), int(1)], vec![int(0), int(1)]];
        let image = canonical_triangle().apply(&shear).unwrap();
        let rep = verify_sharp_simplex(&image, 1).unwrap();
        assert_eq!(rep.gamma, rat(1, 6));
        assert!(rep.equality);
        assert!(rep.witness.is_some());
        assert_eq!(canonical_form(&image), canonical_form(&canonical_triangle()));
    }

    #[test]
    fn polytope_bounds_on_the_symmetric_square() {
        let square = Polytope::from_vertices(
            2,
            vec![
                vec![rat(1, 1), rat(1, 1)],
                vec![rat(1, 1), rat(-1, 1)],
                vec![rat(-1, 1), rat(1, 1)],
                vec![rat(-1, 1), rat(-1, 1)],
            ],
        )
        .unwrap();
        let rep = verify_polytope_bounds(&square).unwrap();
        assert_eq!(rep.interior_count, 1);
        assert_eq!(rep.min_gamma, rat(1, 2));
        assert_eq!(rep.gamma_bound, rat(1, 6));
        assert_eq!(rep.volume, rat(4, 1));
        assert_eq!(rep.volume_bound, rat(36, 1));
        assert_eq!(rep.total_points, 9);
        assert_eq!(rep.point_bound, rat(74, 1));
        assert!(rep.gamma_ok && rep.volume_ok && rep.points_ok);
    }

    #[test]
    fn polytope_bounds_tight_and_translated_cases() {
        let tri = Polytope::from_vertices(
            2,
            vec![
                vec![rat(1, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1)],
                vec![rat(-3, 1), rat(-2, 1)],
            ],
        )
        .unwrap();
        let rep = verify_polytope_bounds(&tri).unwrap();
        assert_eq!(rep.interior_count, 1);
        assert_eq!(rep.min_gamma, rat(1, 6));
        assert_eq!(rep.min_gamma, rep.gamma_bound);

        // translate of the symmetric square: interior point (1,1)
        let big = Polytope::from_vertices(
            2,
            vec![
                vec![rat(0, 1), rat(0, 1)],
                vec![rat(2, 1), rat(0, 1)],
                vec![rat(0, 1), rat(2, 1)],
                vec![rat(2, 1), rat(2, 1)],
            ],
        )
        .unwrap();
        let rep = verify_polytope_bounds(&big).unwrap();
        assert_eq!(rep.interior_count, 1);
        assert_eq!(rep.min_gamma, rat(1, 2));

        // no interior points
        let thin = Polytope::from_vertices(
            2,
            vec![
                vec![rat(0, 1), rat(0, 1)],
                vec![rat(1, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1)],
            ],
        )
        .unwrap();
        assert!(matches!(
            verify_polytope_bounds(&thin),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn scaled_simplex_variant() {
        // d=1, q=3: conv(-1/3, 2/3)
        let rep = verify_scaled_simplex(&[vec![rat(-1, 3)], vec![rat(2, 3)]], 3).unwrap();
        assert_eq!(rep.gamma, rat(1, 3));
        assert_eq!(rep.bound, rat(3, 12));
        assert!(!rep.equality);

        // q=1 reduces to the lattice check
        let rep = verify_scaled_simplex(
            &[
                vec![rat(1, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1)],
                vec![rat(-3, 1), rat(-2, 1)],
            ],
            1,
        )
        .unwrap();
        assert_eq!(rep.gamma, rat(1, 6));
        assert!(rep.equality);

        // q=2: half of the canonical triangle
        let rep = verify_scaled_simplex(
            &[
                vec![rat(1, 2), rat(0, 1)],
                vec![rat(0, 1), rat(1, 2)],
                vec![rat(-3, 2), rat(-1, 1)],
            ],
            2,
        )
        .unwrap();
        assert_eq!(rep.gamma, rat(1, 6));
        assert_eq!(rep.bound, rat(1, 21));
        assert!(!rep.equality);

        assert!(matches!(
            verify_scaled_simplex(&[vec![rat(1, 3)], vec![rat(-1, 3)]], 2),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn census_smallest_box() {
        let rep = enumerate_and_verify(2, 1).unwrap();
        assert!(!rep.violated);
        assert_eq!(rep.min_gamma, Some(rat(1, 6)));
        assert_eq!(rep.bound, rat(1, 6));
        // every equality case is one class: the canonical triangle's
        assert_eq!(rep.equality_classes.len(), 1);
        assert_eq!(
            rep.equality_classes[0],
            canonical_form(&canonical_triangle())
        );
        assert!(rep.admissible > 0 && rep.candidates >= rep.admissible);
    }

    #[test]
    fn census_q2_box_without_the_model() {
        // no unimodular image of the q=2 canonical model fits in [-3,3]^2,
        // so the census finds no equality case and stays above the bound
        let rep = enumerate_and_verify(3, 2).unwrap();
        assert!(!rep.violated);
        assert!(rep.equality_classes.is_empty());
        let min = rep.min_gamma.unwrap();
        assert!(min > rep.bound);
    }

    #[test]
    fn census_guard() {
        assert!(matches!(
            enumerate_and_verify(9, 1),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn degenerate_simplices_are_rejected() {
        assert!(matches!(
            LatticeSimplex::new(vec![
                vec![int(0), int(0)],
                vec![int(1), int(1)],
                vec![int(2), int(2)],
            ]),
            Err(Error::DegenerateSimplex)
        ));
    }
}
