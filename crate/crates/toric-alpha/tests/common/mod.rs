//! Shared fixed-seed generators for the randomized suites.  Every test file
//! seeds its own ChaCha stream, so suites are independent of each other and
//! reproducible run to run.

#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_alpha::diophantine::{extremal_vector, Instance};
use toric_alpha::num::{int, rat, rat_int, Int, Rat};
use toric_alpha::polytope::Polytope;
use toric_alpha::rank1::RankOneFano;
use toric_alpha::toric::ToricLogPair;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Positive rational with numerator in `1..=max_num`, denominator in
/// `1..=max_den`.
pub fn small_rat(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    rat(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

/// Log-discrepancy coefficient in `(0, 1]`, hitting 1 half of the time so
/// boundary-free rays stay common.
pub fn coeff(rng: &mut ChaCha8Rng) -> Rat {
    if rng.gen_bool(0.5) {
        return Rat::one();
    }
    let den = rng.gen_range(2..=6);
    rat(rng.gen_range(1..=den), den)
}

/// Random full-dimensional rational polytope with the origin interior:
/// a rational cross-polytope plus a few extra hull points.
pub fn random_polytope_with_origin(rng: &mut ChaCha8Rng, d: usize) -> Polytope {
    let mut points = Vec::new();
    for i in 0..d {
        for sign in [1, -1] {
            let mut p = vec![Rat::zero(); d];
            p[i] = rat(sign * rng.gen_range(1..=3), rng.gen_range(1..=2));
            points.push(p);
        }
    }
    for _ in 0..rng.gen_range(0..=d + 2) {
        points.push(
            (0..d)
                .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=2)))
                .collect(),
        );
    }
    Polytope::from_vertices(d, points).expect("hull of a spanning point set")
}

/// Random lattice polygon with at least one interior lattice point.
pub fn random_lattice_polygon(rng: &mut ChaCha8Rng) -> Polytope {
    loop {
        let points: Vec<Vec<Rat>> = (0..rng.gen_range(3..=7))
            .map(|_| {
                (0..2)
                    .map(|_| rat_int(rng.gen_range(-5..=5)))
                    .collect()
            })
            .collect();
        let Ok(body) = Polytope::from_vertices(2, points) else {
            continue;
        };
        if body.is_full_dimensional()
            && !body
                .lattice_points(toric_alpha::polytope::LatticeMode::Interior)
                .is_empty()
        {
            return body;
        }
    }
}

/// Random matrix in GL_d(Z): a few elementary row operations on the
/// identity.
pub fn random_unimodular(rng: &mut ChaCha8Rng, d: usize) -> Vec<Vec<Int>> {
    let mut u: Vec<Vec<Int>> = (0..d)
        .map(|i| (0..d).map(|j| int(i64::from(i == j))).collect())
        .collect();
    for _ in 0..2 * d {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..d);
                let j = rng.gen_range(0..d);
                if i != j {
                    let scale = int(rng.gen_range(-2..=2));
                    for k in 0..d {
                        let add = &u[i][k] * &scale;
                        u[j][k] += add;
                    }
                }
            }
            1 => {
                let i = rng.gen_range(0..d);
                let j = rng.gen_range(0..d);
                u.swap(i, j);
            }
            _ => {
                let i = rng.gen_range(0..d);
                for k in 0..d {
                    u[i][k] = -u[i][k].clone();
                }
            }
        }
    }
    u
}

fn apply_matrix(u: &[Vec<Int>], v: &[Int]) -> Vec<Int> {
    u.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Random complete toric pair: the transformed coordinate cross plus a few
/// extra primitive rays, coefficients in `(0, 1]`.
pub fn random_complete_pair(rng: &mut ChaCha8Rng, d: usize) -> ToricLogPair {
    loop {
        let u = random_unimodular(rng, d);
        let mut rays: Vec<Vec<Int>> = Vec::new();
        for i in 0..d {
            for sign in [1i64, -1] {
                let mut e = vec![Int::zero(); d];
                e[i] = int(sign);
                rays.push(apply_matrix(&u, &e));
            }
        }
        for _ in 0..rng.gen_range(0..=2) {
            let extra: Vec<Int> = (0..d).map(|_| int(rng.gen_range(-3..=3))).collect();
            if extra.iter().all(|x| x.is_zero()) {
                continue;
            }
            let g = extra
                .iter()
                .fold(Int::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
            let prim: Vec<Int> = extra.iter().map(|x| x / &g).collect();
            if !rays.contains(&prim) {
                rays.push(prim);
            }
        }
        let a: Vec<Rat> = (0..rays.len()).map(|_| coeff(rng)).collect();
        if let Ok(pair) = ToricLogPair::new(d, rays, a, None) {
            return pair;
        }
    }
}

/// Random invariant divisor with nonnegative coefficients, so the origin
/// witnesses a nonempty polytope.
pub fn random_divisor(rng: &mut ChaCha8Rng, pair: &ToricLogPair) -> Vec<Rat> {
    (0..pair.rays().len())
        .map(|_| rat(rng.gen_range(0..=6), rng.gen_range(1..=2)))
        .collect()
}

/// Random valid rank-one datum: integer weights with coprime complements
/// normalized to barycentric coordinates, coefficients in `(0, 1]`.
pub fn random_rank1(rng: &mut ChaCha8Rng, max_dim: usize, max_weight_sum: i64) -> RankOneFano {
    loop {
        let d = rng.gen_range(1..=max_dim);
        let per = (max_weight_sum / (d as i64 + 1)).max(1);
        let m: Vec<i64> = (0..=d).map(|_| rng.gen_range(1..=per)).collect();
        let s: i64 = m.iter().sum();
        let x: Vec<Rat> = m.iter().map(|&mi| rat(mi, s)).collect();
        let a: Vec<Rat> = (0..=d).map(|_| coeff(rng)).collect();
        if let Ok(f) = RankOneFano::from_barycentric(x, a) {
            return f;
        }
    }
}

/// Random instance of the approximation-from-below problem satisfying the
/// existence hypothesis (and occasionally sitting exactly on its threshold).
pub fn random_lhn_instance(rng: &mut ChaCha8Rng) -> Instance {
    loop {
        let d = rng.gen_range(1..=4);
        let q = rng.gen_range(1..=3i64);
        let c: Vec<Rat> = (0..d)
            .map(|_| {
                if q == 1 {
                    Rat::one()
                } else {
                    // a rational in [1, q] with a small denominator
                    Rat::one() + rat(rng.gen_range(0..=2 * (q - 1)), 2)
                }
            })
            .collect();
        let mut r: Vec<Rat> = (0..d)
            .map(|_| rat(rng.gen_range(1..=8), rng.gen_range(1..=4)))
            .collect();
        r.sort();
        r.reverse();
        let sum: Rat = r.iter().sum();
        let ext_sum: Rat = extremal_vector(d, &int(q))
            .expect("extremal vector")
            .iter()
            .sum();
        // keep a healthy distance from the hypothesis threshold: targets
        // parked right at the boundary can need solutions beyond any fixed
        // brute-force budget
        let margin = [rat(1, 7), rat(1, 3), rat(1, 1), rat(2, 1)]
            [rng.gen_range(0..4)]
        .clone();
        let factor = ext_sum * (Rat::one() + margin) / sum;
        let x: Vec<Rat> = r.iter().map(|ri| ri * &factor).collect();
        let inst = Instance::new(int(q), c, x).expect("constructed within bounds");
        if !inst.is_extremal().expect("small q") {
            return inst;
        }
    }
}
