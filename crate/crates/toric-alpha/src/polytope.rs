//! Rational convex polytopes with exact vertex/half-space conversion, duality,
//! widths, lattice point enumeration, volume, and the gamma invariant
//! `gamma(P in B) = sup { t >= 0 : P + t(B - B) is contained in B }`.
//!
//! A polytope is stored in both representations at once. Half-spaces are
//! `{ m : <m, normal> + offset >= 0 }` with primitive integer normals; the
//! facet list of a full-dimensional polytope is irredundant and canonically
//! sorted, and vertices are sorted lexicographically, so equal polytopes have
//! equal representations. Lower-dimensional bodies carry the equations of
//! their affine hull next to their relative facets ("affine-hull mode").

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    self, dot, dot_int, nullspace, primitive_part, rank, scale, sub, QMatrix,
};
use crate::num::{ceil_rat, floor_rat, from_int, Int, Rat};

/// Closed half-space `{ m : <m, normal> + offset >= 0 }` with a primitive
/// integer normal. Construction divides out the content of the normal and
/// rescales the offset accordingly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfSpace {
    pub normal: Vec<Int>,
    pub offset: Rat,
}

impl HalfSpace {
    pub fn new(normal: Vec<Int>, offset: Rat) -> Result<Self> {
        let (prim, g) = primitive_part(&normal).map_err(|_| {
            Error::Malformed("half-space normal must be a nonzero integer vector".into())
        })?;
        Ok(HalfSpace {
            normal: prim,
            offset: offset / from_int(g),
        })
    }

    /// `<p, normal> + offset`; nonnegative exactly on the half-space.
    pub fn slack(&self, p: &[Rat]) -> Rat {
        dot_int(p, &self.normal) + &self.offset
    }

    fn slack_int(&self, p: &[Int]) -> Rat {
        from_int(linalg::dot_ii(p, &self.normal)) + &self.offset
    }
}

/// Which lattice points to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeMode {
    /// Points of the closed polytope.
    Closed,
    /// Points of the topological interior (empty for lower-dimensional bodies).
    Interior,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    affine_dim: usize,
    vertices: Vec<Vec<Rat>>,
    /// Irredundant facet inequalities. For a lower-dimensional body these cut
    /// out the relative facets inside the affine hull.
    facets: Vec<HalfSpace>,
    /// Equations of the affine hull (empty iff full-dimensional), stored as
    /// half-spaces interpreted with equality.
    equations: Vec<HalfSpace>,
}

/// Result of vertex enumeration from a half-space description: the polytope
/// plus the indices of the input half-spaces that are redundant. (Redundancy
/// is only classified for full-dimensional results.)
#[derive(Debug, Clone)]
pub struct VertexEnumeration {
    pub polytope: Polytope,
    pub redundant: Vec<usize>,
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn equations(&self) -> &[HalfSpace] {
        &self.equations
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.affine_dim + 1
    }

    /// Intersects the given closed half-spaces. Errors: `Unbounded` when the
    /// region has a recession direction, `EmptyRegion` when it has no point.
    pub fn from_half_spaces(dim: usize, halfspaces: Vec<HalfSpace>) -> Result<VertexEnumeration> {
        if dim == 0 {
            return Err(Error::OutOfRange("ambient dimension must be >= 1".into()));
        }
        for h in &halfspaces {
            if h.normal.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "normal {:?} does not have length {dim}",
                    h.normal
                )));
            }
        }
        let candidates = candidate_vertices(dim, &halfspaces);
        let spans = positively_spans(
            dim,
            &halfspaces.iter().map(|h| h.normal.clone()).collect::<Vec<_>>(),
        );
        if candidates.is_empty() {
            if spans {
                // bounded and vertex-free: the region is empty
                return Err(Error::EmptyRegion);
            }
            if feasible(dim, &halfspaces) {
                return Err(Error::Unbounded);
            }
            return Err(Error::EmptyRegion);
        }
        if !spans {
            return Err(Error::Unbounded);
        }
        let mut polytope = Self::from_points(dim, candidates)?;
        let mut redundant = Vec::new();
        if polytope.is_full_dimensional() {
            let mut seen: Vec<HalfSpace> = Vec::new();
            for (i, h) in halfspaces.iter().enumerate() {
                if polytope.facets.contains(h) && !seen.contains(h) {
                    seen.push(h.clone());
                } else {
                    redundant.push(i);
                }
            }
        } else {
            // keep the caller's inequalities as the relative description
            polytope.facets = dedup_sorted(halfspaces);
        }
        Ok(VertexEnumeration {
            polytope,
            redundant,
        })
    }

    /// Convex hull of a finite point set (any dimension, input points need
    /// not be extreme).
    pub fn from_vertices(dim: usize, points: Vec<Vec<Rat>>) -> Result<Polytope> {
        Self::from_points(dim, points)
    }

    fn from_points(dim: usize, mut points: Vec<Vec<Rat>>) -> Result<Polytope> {
        if points.is_empty() {
            return Err(Error::EmptyRegion);
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "point {p:?} does not have length {dim}"
                )));
            }
        }
        points.sort();
        points.dedup();
        let adim = affine_rank(&points);
        if adim == dim {
            let facets = facets_from_points(dim, &points);
            let vertices = candidate_vertices(dim, &facets);
            debug_assert!(!vertices.is_empty());
            return Ok(Polytope {
                dim,
                affine_dim: adim,
                vertices,
                facets: dedup_sorted(facets),
                equations: Vec::new(),
            });
        }
        // affine-hull mode: chart the hull, build the full-dimensional inner
        // polytope, and pull its description back
        let chart = AffineChart::new(&points);
        let coords: Vec<Vec<Rat>> = points
            .iter()
            .map(|p| chart.coords(p).expect("chart built from these points"))
            .collect();
        let equations = chart.hull_equations();
        if adim == 0 {
            return Ok(Polytope {
                dim,
                affine_dim: 0,
                vertices: points,
                facets: Vec::new(),
                equations,
            });
        }
        let inner = Polytope::from_points(adim, coords)?;
        let vertices: Vec<Vec<Rat>> = {
            let mut vs: Vec<Vec<Rat>> = inner
                .vertices
                .iter()
                .map(|c| chart.point(c))
                .collect();
            vs.sort();
            vs
        };
        let facets = inner
            .facets
            .iter()
            .map(|f| chart.pull_back(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polytope {
            dim,
            affine_dim: adim,
            vertices,
            facets: dedup_sorted(facets),
            equations,
        })
    }

    pub fn contains(&self, p: &[Rat]) -> bool {
        p.len() == self.dim
            && self.equations.iter().all(|e| e.slack(p).is_zero())
            && self.facets.iter().all(|f| !f.slack(p).is_negative())
            && (self.affine_dim > 0 || self.vertices[0] == p)
    }

    /// Membership in the topological interior; always false for a
    /// lower-dimensional body.
    pub fn contains_strict(&self, p: &[Rat]) -> bool {
        self.is_full_dimensional()
            && p.len() == self.dim
            && self.facets.iter().all(|f| f.slack(p).is_positive())
    }

    /// Membership in the relative interior.
    pub fn contains_relative_interior(&self, p: &[Rat]) -> bool {
        if p.len() != self.dim || !self.equations.iter().all(|e| e.slack(p).is_zero()) {
            return false;
        }
        if self.affine_dim == 0 {
            return self.vertices[0] == p;
        }
        self.facets.iter().all(|f| f.slack(p).is_positive())
    }

    /// The dual body `{ y : <y, v> + 1 >= 0 for all v }`. Requires the origin
    /// in the interior; then the dual is again a polytope with the origin
    /// interior and dualizing twice gives back the original.
    pub fn dual(&self) -> Result<Polytope> {
        let origin = vec![Rat::zero(); self.dim];
        if !self.contains_strict(&origin) {
            return Err(Error::OriginNotInterior);
        }
        let mut halfspaces = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let l = crate::num::denominator_lcm(v);
            let normal: Vec<Int> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            halfspaces.push(HalfSpace::new(normal, from_int(l))?);
        }
        Ok(Self::from_half_spaces(self.dim, halfspaces)?.polytope)
    }

    /// Width `max <v, e> - min <v, e>` along an integer functional.
    pub fn width(&self, e: &[Int]) -> Result<Rat> {
        if e.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "functional {e:?} does not have length {}",
                self.dim
            )));
        }
        let vals: Vec<Rat> = self.vertices.iter().map(|v| dot_int(v, e)).collect();
        let max = vals.iter().max().unwrap().clone();
        let min = vals.iter().min().unwrap().clone();
        Ok(max - min)
    }

    /// `gamma(p in self) = sup { t >= 0 : p + t(self - self) subset self }`,
    /// computed as the minimum over irredundant facets of
    /// `slack(p) / width(normal)`. Zero exactly when p is on the (relative)
    /// boundary. Lower-dimensional bodies are handled in their affine hull;
    /// gamma is invariant under affine charts.
    pub fn gamma_point(&self, p: &[Rat]) -> Result<Rat> {
        if !self.contains(p) {
            return Err(Error::PointOutside);
        }
        if self.affine_dim == 0 {
            return Err(Error::Unsupported(
                "gamma is undefined for a single-point body".into(),
            ));
        }
        if self.is_full_dimensional() {
            let mut best: Option<Rat> = None;
            for f in &self.facets {
                let w = self.width(&f.normal)?;
                debug_assert!(w.is_positive());
                let ratio = f.slack(p) / w;
                best = Some(match best {
                    None => ratio,
                    Some(b) => b.min(ratio),
                });
            }
            return best.ok_or_else(|| Error::Internal("full-dimensional polytope with no facets".into()));
        }
        let chart = AffineChart::new(&self.vertices);
        let inner = Polytope::from_points(
            self.affine_dim,
            self.vertices
                .iter()
                .map(|v| chart.coords(v).expect("vertices span the chart"))
                .collect(),
        )?;
        let pc = chart.coords(p).map_err(|_| Error::PointOutside)?;
        inner.gamma_point(&pc)
    }

    pub fn gamma_origin(&self) -> Result<Rat> {
        self.gamma_point(&vec![Rat::zero(); self.dim])
    }

    /// Coefficient of asymmetry `1/gamma - 1`; infinite (an error) on the
    /// boundary.
    pub fn asymmetry(&self, p: &[Rat]) -> Result<Rat> {
        let g = self.gamma_point(p)?;
        if g.is_zero() {
            return Err(Error::BoundaryPoint);
        }
        Ok(g.recip() - Rat::one())
    }

    /// Lattice points of the closed body or its interior, in lexicographic
    /// order, enumerated over the integer bounding box of the vertices.
    pub fn lattice_points(&self, mode: LatticeMode) -> Vec<Vec<Int>> {
        if mode == LatticeMode::Interior && !self.is_full_dimensional() {
            return Vec::new();
        }
        let (lo, hi) = self.bounding_box();
        let mut out = Vec::new();
        let mut current = vec![Int::zero(); self.dim];
        self.scan_box(0, &lo, &hi, &mut current, mode, &mut out);
        out
    }

    fn scan_box(
        &self,
        axis: usize,
        lo: &[Int],
        hi: &[Int],
        current: &mut Vec<Int>,
        mode: LatticeMode,
        out: &mut Vec<Vec<Int>>,
    ) {
        if axis == self.dim {
            let ok = match mode {
                LatticeMode::Closed => {
                    self.equations.iter().all(|e| e.slack_int(current).is_zero())
                        && self.facets.iter().all(|f| !f.slack_int(current).is_negative())
                        && (self.affine_dim > 0
                            || self.vertices[0]
                                == current.iter().map(|x| from_int(x.clone())).collect::<Vec<_>>())
                }
                LatticeMode::Interior => {
                    self.facets.iter().all(|f| f.slack_int(current).is_positive())
                }
            };
            if ok {
                out.push(current.clone());
            }
            return;
        }
        let mut x = lo[axis].clone();
        while x <= hi[axis] {
            current[axis] = x.clone();
            self.scan_box(axis + 1, lo, hi, current, mode, out);
            x += Int::one();
        }
    }

    fn bounding_box(&self) -> (Vec<Int>, Vec<Int>) {
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let col: Vec<&Rat> = self.vertices.iter().map(|v| &v[j]).collect();
            lo.push(floor_rat(col.iter().min().unwrap()));
            hi.push(ceil_rat(col.iter().max().unwrap()));
        }
        (lo, hi)
    }

    /// Euclidean volume with respect to the covolume-1 lattice, by exact
    /// triangulation. Zero for lower-dimensional bodies.
    pub fn normalized_volume(&self) -> Rat {
        if !self.is_full_dimensional() {
            return Rat::zero();
        }
        let simplices = triangulate(&self.vertices);
        let d = self.dim;
        let mut vol = Rat::zero();
        let mut factorial = Int::one();
        for i in 2..=d {
            factorial *= Int::from(i as u64);
        }
        for s in simplices {
            let base = &self.vertices[s[0]];
            let rows: Vec<Vec<Rat>> = s[1..]
                .iter()
                .map(|&i| sub(&self.vertices[i], base))
                .collect();
            let det = QMatrix::from_rows(rows)
                .expect("simplex edge matrix is square")
                .determinant()
                .expect("square matrix");
            vol += det.abs();
        }
        vol / from_int(factorial)
    }

    /// Checks the lattice-point lower bound
    /// `|Z^d ∩ int B| >= gamma(0 in B)^d * vol(B)` for a body with the origin
    /// interior (Minkowski's first theorem is the symmetric special case,
    /// where gamma = 1/2 and the bound is vol / 2^d).
    pub fn van_der_corput_check(&self) -> Result<VdcReport> {
        let origin = vec![Rat::zero(); self.dim];
        if !self.contains_strict(&origin) {
            return Err(Error::OriginNotInterior);
        }
        let gamma = self.gamma_point(&origin)?;
        let volume = self.normalized_volume();
        let mut bound = Rat::one();
        for _ in 0..self.dim {
            bound *= &gamma;
        }
        bound *= &volume;
        let count = self.lattice_points(LatticeMode::Interior).len();
        let count_rat = from_int(Int::from(count as u64));
        Ok(VdcReport {
            interior_count: count,
            gamma,
            volume,
            lower_bound: bound.clone(),
            holds: count_rat >= bound,
            tight: count_rat == bound,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VdcReport {
    pub interior_count: usize,
    pub gamma: Rat,
    pub volume: Rat,
    pub lower_bound: Rat,
    pub holds: bool,
    pub tight: bool,
}

/// Affine chart of the hull of a point set: `p = base + basis * coords`.
struct AffineChart {
    base: Vec<Rat>,
    /// Columns spanning the direction space, as vectors in the ambient space.
    basis: Vec<Vec<Rat>>,
    /// Row indices making the selected square subsystem invertible.
    rows: Vec<usize>,
    inv: QMatrix,
}

impl AffineChart {
    fn new(points: &[Vec<Rat>]) -> AffineChart {
        let base = points
            .iter()
            .min()
            .expect("chart of a nonempty point set")
            .clone();
        let dim = base.len();
        let mut basis: Vec<Vec<Rat>> = Vec::new();
        for p in points {
            let d = sub(p, &base);
            let mut trial: Vec<Vec<Rat>> = basis.clone();
            trial.push(d.clone());
            if rank(&trial) > basis.len() {
                basis.push(d);
            }
        }
        let k = basis.len();
        // pick k rows of the basis matrix that are linearly independent
        let mut rows: Vec<usize> = Vec::new();
        let mut chosen: Vec<Vec<Rat>> = Vec::new();
        for r in 0..dim {
            if rows.len() == k {
                break;
            }
            let row: Vec<Rat> = basis.iter().map(|b| b[r].clone()).collect();
            let mut trial = chosen.clone();
            trial.push(row.clone());
            if rank(&trial) > chosen.len() {
                chosen.push(row);
                rows.push(r);
            }
        }
        let inv = if k == 0 {
            QMatrix::identity(0)
        } else {
            QMatrix::from_rows(chosen)
                .expect("square selection")
                .inverse()
                .expect("selected rows are independent")
        };
        AffineChart {
            base,
            basis,
            rows,
            inv,
        }
    }

    /// Coordinates of a point of the affine hull; errors if `p` is outside
    /// the hull.
    fn coords(&self, p: &[Rat]) -> Result<Vec<Rat>> {
        let d = sub(p, &self.base);
        let rhs: Vec<Rat> = self.rows.iter().map(|&r| d[r].clone()).collect();
        let lambda = self.inv.mul_vec(&rhs)?;
        // verify the full system, not just the selected rows
        let mut recon = vec![Rat::zero(); self.base.len()];
        for (j, b) in self.basis.iter().enumerate() {
            let s = scale(b, &lambda[j]);
            recon = linalg::add(&recon, &s);
        }
        if recon != d {
            return Err(Error::OutsideAffineHull);
        }
        Ok(lambda)
    }

    fn point(&self, coords: &[Rat]) -> Vec<Rat> {
        let mut p = self.base.clone();
        for (j, b) in self.basis.iter().enumerate() {
            let s = scale(b, &coords[j]);
            p = linalg::add(&p, &s);
        }
        p
    }

    /// Equations cutting out the affine hull, with primitive integer normals
    /// and sign-canonical orientation.
    fn hull_equations(&self) -> Vec<HalfSpace> {
        let dim = self.base.len();
        let rows: Vec<Vec<Rat>> = self.basis.clone();
        let mut eqs = Vec::new();
        for n in nullspace(&rows, dim) {
            let l = crate::num::denominator_lcm(&n);
            let mut normal: Vec<Int> = n.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            let (mut prim, _) = primitive_part(&normal).expect("nullspace vector is nonzero");
            if prim.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()) == Some(true) {
                prim = prim.iter().map(|x| -x).collect();
            }
            normal = prim;
            let offset = -dot_int(&self.base, &normal);
            eqs.push(HalfSpace { normal, offset });
        }
        eqs.sort();
        eqs
    }

    /// Pulls an inner-facet inequality back to the ambient space. The result
    /// is valid on the affine hull (together with the hull equations).
    fn pull_back(&self, f: &HalfSpace) -> Result<HalfSpace> {
        // inner functional <coords, n'> + o'; coords = inv * (p - base)|rows
        let n_inner: Vec<Rat> = f.normal.iter().map(|x| from_int(x.clone())).collect();
        // g restricted to the selected rows: g_I = inv^T n'
        let k = self.rows.len();
        let mut g = vec![Rat::zero(); self.base.len()];
        for (col, &r) in self.rows.iter().enumerate() {
            let mut acc = Rat::zero();
            for i in 0..k {
                acc += &self.inv[(i, col)] * &n_inner[i];
            }
            g[r] = acc;
        }
        let offset = &f.offset - dot(&g, &self.base);
        let l = crate::num::denominator_lcm(&g);
        let normal: Vec<Int> = g.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        HalfSpace::new(normal, offset * from_int(l))
    }
}

fn dedup_sorted(mut hs: Vec<HalfSpace>) -> Vec<HalfSpace> {
    hs.sort();
    hs.dedup();
    hs
}

/// Affine rank of a point set (dimension of its affine hull).
pub fn affine_rank(points: &[Vec<Rat>]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let base = &points[0];
    let diffs: Vec<Vec<Rat>> = points[1..].iter().map(|p| sub(p, base)).collect();
    rank(&diffs)
}

/// All intersection points of `dim`-subsets of the half-space boundaries that
/// satisfy every constraint; these are exactly the extreme points of the
/// region. Sorted and deduplicated.
fn candidate_vertices(dim: usize, halfspaces: &[HalfSpace]) -> Vec<Vec<Rat>> {
    let n = halfspaces.len();
    let mut out: Vec<Vec<Rat>> = Vec::new();
    if n < dim {
        return out;
    }
    for subset in (0..n).combinations(dim) {
        let rows: Vec<Vec<Rat>> = subset
            .iter()
            .map(|&i| {
                halfspaces[i]
                    .normal
                    .iter()
                    .map(|x| from_int(x.clone()))
                    .collect()
            })
            .collect();
        let rhs: Vec<Rat> = subset.iter().map(|&i| -halfspaces[i].offset.clone()).collect();
        let m = QMatrix::from_rows(rows).expect("fixed-width rows");
        let Ok(p) = m.solve(&rhs) else { continue };
        if halfspaces.iter().all(|h| !h.slack(&p).is_negative()) {
            out.push(p);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Do the normals positively span the ambient space? Equivalently, is the
/// recession cone `{ u : <u, n_i> >= 0 }` trivial, i.e. is every nonempty
/// region with these normals bounded? Decided exactly by checking the
/// candidate extreme rays (normals of `(dim-1)`-subsets).
fn positively_spans(dim: usize, normals: &[Vec<Int>]) -> bool {
    let as_rat: Vec<Vec<Rat>> = normals
        .iter()
        .map(|n| n.iter().map(|x| from_int(x.clone())).collect())
        .collect();
    if rank(&as_rat) < dim {
        return false;
    }
    let n = normals.len();
    for subset in (0..n).combinations(dim - 1) {
        let rows: Vec<Vec<Rat>> = subset.iter().map(|&i| as_rat[i].clone()).collect();
        if rank(&rows) + 1 != dim {
            continue;
        }
        let ns = nullspace(&rows, dim);
        debug_assert_eq!(ns.len(), 1);
        for dir in [ns[0].clone(), ns[0].iter().map(|x| -x).collect()] {
            if as_rat.iter().all(|m| !dot(m, &dir).is_positive()) {
                // nonzero u with <u, n_i> <= 0 for every normal
                return false;
            }
        }
    }
    true
}

/// Exact feasibility of a half-space system by Fourier-Motzkin elimination.
fn feasible(dim: usize, halfspaces: &[HalfSpace]) -> bool {
    // constraints as (coefficients, offset) meaning <m, c> + o >= 0
    let mut cons: Vec<(Vec<Rat>, Rat)> = halfspaces
        .iter()
        .map(|h| {
            (
                h.normal.iter().map(|x| from_int(x.clone())).collect(),
                h.offset.clone(),
            )
        })
        .collect();
    for var in (0..dim).rev() {
        let mut pos: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut neg: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut rest: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for (c, o) in cons {
            if c[var].is_positive() {
                pos.push((c, o));
            } else if c[var].is_negative() {
                neg.push((c, o));
            } else {
                rest.push((c, o));
            }
        }
        for (cp, op) in &pos {
            for (cn, on) in &neg {
                // eliminate: scale so the var coefficients cancel
                let a = cp[var].clone();
                let b = -cn[var].clone();
                let mut c = vec![Rat::zero(); var];
                for j in 0..var {
                    c[j] = &cp[j] * &b + &cn[j] * &a;
                }
                let o = op * &b + on * &a;
                rest.push((c, o));
            }
        }
        for (c, _) in rest.iter_mut() {
            c.truncate(var);
        }
        cons = rest;
    }
    cons.iter().all(|(_, o)| !o.is_negative())
}

/// Facets of the hull of a point set that spans the ambient space:
/// hyperplanes through `dim` affinely independent points with every point on
/// one side, oriented inward.
fn facets_from_points(dim: usize, points: &[Vec<Rat>]) -> Vec<HalfSpace> {
    let n = points.len();
    let mut out: Vec<HalfSpace> = Vec::new();
    for subset in (0..n).combinations(dim) {
        let base = &points[subset[0]];
        let diffs: Vec<Vec<Rat>> = subset[1..]
            .iter()
            .map(|&i| sub(&points[i], base))
            .collect();
        if rank(&diffs) + 1 != dim {
            continue;
        }
        let ns = nullspace(&diffs, dim);
        if ns.len() != 1 {
            continue;
        }
        let l = crate::num::denominator_lcm(&ns[0]);
        let scaled: Vec<Int> = ns[0].iter().map(|x| x.numer() * (&l / x.denom())).collect();
        let Ok((prim, _)) = primitive_part(&scaled) else { continue };
        let offset = -dot_int(base, &prim);
        let hs = HalfSpace {
            normal: prim.clone(),
            offset: offset.clone(),
        };
        let slacks: Vec<Rat> = points.iter().map(|p| hs.slack(p)).collect();
        if slacks.iter().all(|s| !s.is_negative()) {
            out.push(hs);
        } else if slacks.iter().all(|s| !s.is_positive()) {
            out.push(HalfSpace {
                normal: prim.iter().map(|x| -x).collect(),
                offset: -offset,
            });
        }
    }
    dedup_sorted(out)
}

/// Exact triangulation of the hull of a point set: returns simplices as index
/// lists into `points` (each of length `affine rank + 1`), covering the hull
/// with disjoint interiors. Cone construction over the facets opposite the
/// lexicographically smallest vertex, recursing on facets.
pub fn triangulate(points: &[Vec<Rat>]) -> Vec<Vec<usize>> {
    let idx: Vec<usize> = (0..points.len()).collect();
    triangulate_subset(points, &idx)
}

fn triangulate_subset(points: &[Vec<Rat>], idx: &[usize]) -> Vec<Vec<usize>> {
    let pts: Vec<Vec<Rat>> = idx.iter().map(|&i| points[i].clone()).collect();
    let r = affine_rank(&pts);
    // work in chart coordinates when the set is lower-dimensional
    let (coords, local): (Vec<Vec<Rat>>, Vec<usize>) = if r < pts[0].len() {
        let chart = AffineChart::new(&pts);
        (
            pts.iter()
                .map(|p| chart.coords(p).expect("points span the chart"))
                .collect(),
            idx.to_vec(),
        )
    } else {
        (pts, idx.to_vec())
    };
    if coords.len() == r + 1 {
        let mut s = local.clone();
        s.sort();
        return vec![s];
    }
    if r == 0 {
        return vec![vec![local[0]]];
    }
    let facets = facets_from_points(r, &coords);
    // apex: position of the lexicographically smallest coordinate point
    let apex_pos = (0..coords.len())
        .min_by(|&a, &b| coords[a].cmp(&coords[b]))
        .unwrap();
    let mut simplices = Vec::new();
    for f in &facets {
        if f.slack(&coords[apex_pos]).is_zero() {
            continue;
        }
        let tight: Vec<usize> = (0..coords.len())
            .filter(|&i| f.slack(&coords[i]).is_zero())
            .collect();
        let sub_idx: Vec<usize> = tight.iter().map(|&i| local[i]).collect();
        let sub_points: Vec<usize> = tight.clone();
        // recurse on the facet's points in the current coordinates
        let facet_coords: Vec<Vec<Rat>> = sub_points.iter().map(|&i| coords[i].clone()).collect();
        let inner = triangulate_subset(&facet_coords, &(0..facet_coords.len()).collect::<Vec<_>>());
        for s in inner {
            let mut simplex: Vec<usize> = s.iter().map(|&j| sub_idx[j]).collect();
            simplex.push(local[apex_pos]);
            simplex.sort();
            simplices.push(simplex);
        }
    }
    simplices
}

/// Barycentric coordinates of `p` with respect to affinely independent
/// `vertices` (not necessarily spanning). Coordinates may be negative when
/// `p` is outside the hull; errors when the vertices are affinely dependent
/// or `p` is not in their affine hull.
pub fn barycentric_coordinates(vertices: &[Vec<Rat>], p: &[Rat]) -> Result<Vec<Rat>> {
    if vertices.is_empty() {
        return Err(Error::DegenerateSimplex);
    }
    let dim = vertices[0].len();
    if p.len() != dim || vertices.iter().any(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch(
            "vertices and point must share one ambient dimension".into(),
        ));
    }
    let n = vertices.len();
    if affine_rank(vertices) + 1 != n {
        return Err(Error::DegenerateSimplex);
    }
    // rows: d coordinate equations plus the affine "sum = 1" row
    let mut rows: Vec<Vec<Rat>> = (0..dim)
        .map(|r| vertices.iter().map(|v| v[r].clone()).collect())
        .collect();
    rows.push(vec![Rat::one(); n]);
    let mut rhs: Vec<Rat> = p.to_vec();
    rhs.push(Rat::one());
    // select n independent rows, solve, then verify all rows
    let mut chosen_rows: Vec<Vec<Rat>> = Vec::new();
    let mut chosen_rhs: Vec<Rat> = Vec::new();
    for (row, r) in rows.iter().zip(&rhs) {
        if chosen_rows.len() == n {
            break;
        }
        let mut trial = chosen_rows.clone();
        trial.push(row.clone());
        if rank(&trial) > chosen_rows.len() {
            chosen_rows.push(row.clone());
            chosen_rhs.push(r.clone());
        }
    }
    if chosen_rows.len() < n {
        return Err(Error::DegenerateSimplex);
    }
    let lambda = QMatrix::from_rows(chosen_rows)?.solve(&chosen_rhs)?;
    for (row, r) in rows.iter().zip(&rhs) {
        if &dot(row, &lambda) != r {
            return Err(Error::OutsideAffineHull);
        }
    }
    Ok(lambda)
}

/// Gamma of a point in a simplex: the least barycentric coordinate. Agrees
/// with [`Polytope::gamma_point`] and works for simplices of any dimension
/// inside any ambient space. Errors when `p` is outside the simplex.
pub fn barycentric_gamma(vertices: &[Vec<Rat>], p: &[Rat]) -> Result<Rat> {
    let coords = barycentric_coordinates(vertices, p)?;
    if coords.iter().any(|c| c.is_negative()) {
        return Err(Error::PointOutside);
    }
    Ok(coords.into_iter().min().unwrap())
}
