//! The two-parameter Sylvester-type sequence `u_{p,q}` and the sharp bounds
//! expressed through it.
//!
//! Definition: `u_{1,q} = q` and `u_{p+1,q} = u_{p,q} (1 + u_{p,q})`. For
//! q = 1 the shifted terms `1 + u_{p,1}` are the classical Sylvester numbers
//! 2, 3, 7, 43, 1807, ... The terms grow doubly exponentially, so everything
//! is arbitrary precision.
//!
//! Identities maintained (and checked by [`identity_checks`]):
//! * `sum_{i<=p} 1/(1+u_{i,q}) = 1/q - 1/u_{p+1,q}`
//! * `prod_{i<=p} (1+u_{i,q}) = u_{p+1,q} / q`
//! * `prod_{i<=p} 1/(1+u_{i,q}) = 1 - q * sum_{i<=p} 1/(1+u_{i,q})`
//!
//! Structural facts: `q` divides every `u_{p,q}`, and the shifted terms
//! `1 + u_{p,q}` are pairwise coprime for fixed `q`.

use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::num::{from_int, int, Int, Rat};

fn check_params(p: u32, q: u32) -> Result<()> {
    if p < 1 || q < 1 {
        return Err(Error::OutOfRange(format!(
            "sequence parameters must satisfy p >= 1 and q >= 1 (got p = {p}, q = {q})"
        )));
    }
    Ok(())
}

/// `u_{p,q}`: the p-th term of the sequence with seed q.
pub fn u(p: u32, q: u32) -> Result<Int> {
    check_params(p, q)?;
    let mut v = int(q as i64);
    for _ in 1..p {
        v = &v * (Int::one() + &v);
    }
    Ok(v)
}

/// Per-seed table of sequence values; index 0 holds `u_{1,q} = q`.
/// Values are computed once and reused; the struct is externally pure.
#[derive(Debug, Clone)]
pub struct SylvesterTable {
    q: u32,
    memo: Vec<Int>,
}

impl SylvesterTable {
    pub fn new(q: u32) -> Result<Self> {
        check_params(1, q)?;
        Ok(SylvesterTable {
            q,
            memo: vec![int(q as i64)],
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn value(&mut self, p: u32) -> Result<&Int> {
        check_params(p, self.q)?;
        while self.memo.len() < p as usize {
            let last = self.memo.last().unwrap();
            let next = last * (Int::one() + last);
            self.memo.push(next);
        }
        Ok(&self.memo[p as usize - 1])
    }
}

/// Outcome of checking the three closed-form identities up to index p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub p: u32,
    pub q: u32,
    pub sum_identity: bool,
    pub product_identity: bool,
    pub product_sum_identity: bool,
    /// `q | u_{i,q}` for every i <= p + 1.
    pub divisibility: bool,
    /// The shifted terms `1 + u_{i,q}`, i <= p, are pairwise coprime.
    pub coprimality: bool,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.sum_identity
            && self.product_identity
            && self.product_sum_identity
            && self.divisibility
            && self.coprimality
    }
}

/// Checks every identity exactly for the given parameters.
pub fn identity_checks(p: u32, q: u32) -> Result<IdentityReport> {
    check_params(p, q)?;
    let mut table = SylvesterTable::new(q)?;
    let terms: Vec<Int> = (1..=p + 1)
        .map(|i| table.value(i).cloned())
        .collect::<Result<_>>()?;
    let qi = int(q as i64);
    let qr = from_int(qi.clone());

    let shifted: Vec<Int> = terms[..p as usize]
        .iter()
        .map(|t| Int::one() + t)
        .collect();
    let sum_inv: Rat = shifted
        .iter()
        .map(|s| Rat::new(Int::one(), s.clone()))
        .sum();
    let next = from_int(terms[p as usize].clone());

    let sum_identity = sum_inv == qr.recip() - next.clone().recip();
    let prod: Int = shifted.iter().product();
    let product_identity = from_int(prod.clone()) == &next / &qr;
    let product_sum_identity =
        from_int(prod).recip() == Rat::one() - &qr * &sum_inv;
    let divisibility = terms.iter().all(|t| t.is_multiple_of(&qi));
    let mut coprimality = true;
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            if !shifted[i].gcd(&shifted[j]).is_one() {
                coprimality = false;
            }
        }
    }

    Ok(IdentityReport {
        p,
        q,
        sum_identity,
        product_identity,
        product_sum_identity,
        divisibility,
        coprimality,
    })
}

/// The sharp lower bound `q / u_{d+1,q}` for the gamma invariant of a
/// d-dimensional body whose only interior lattice points, after scaling by
/// 1/q, reduce to the origin. Strictly decreasing in d for fixed q.
pub fn gamma_bound(d: u32, q: u32) -> Result<Rat> {
    check_params(1, q)?;
    if d < 1 {
        return Err(Error::OutOfRange("dimension must be >= 1".into()));
    }
    Ok(Rat::new(int(q as i64), u(d + 1, q)?))
}

/// Effective upper bound `d! * u_{d,q}^(d-1) * q` for the index of a
/// d-dimensional toric log Fano pair with minimal log discrepancy >= 1/q.
pub fn cartier_index_bound(d: u32, q: u32) -> Result<Int> {
    check_params(1, q)?;
    if d < 1 {
        return Err(Error::OutOfRange("dimension must be >= 1".into()));
    }
    let mut f = Int::one();
    for i in 2..=d {
        f *= int(i as i64);
    }
    Ok(f * u(d, q)?.pow(d - 1) * int(q as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn classical_sequence_seed_one() {
        // shifted terms 1 + u_{p,1}: 2, 3, 7, 43
        let shifted: Vec<Int> = (1..=4)
            .map(|p| Int::one() + u(p, 1).unwrap())
            .collect();
        assert_eq!(shifted, vec![int(2), int(3), int(7), int(43)]);
        assert_eq!(u(4, 1).unwrap(), int(42));
    }

    #[test]
    fn seeded_values() {
        assert_eq!(u(1, 3).unwrap(), int(3));
        assert_eq!(u(2, 3).unwrap(), int(12));
        // 2 -> 2*3 = 6 -> 6*7 = 42
        assert_eq!(u(3, 2).unwrap(), int(42));
        assert_eq!(u(4, 2).unwrap(), int(1806));
        assert!(u(0, 1).is_err());
        assert!(u(1, 0).is_err());
    }

    #[test]
    fn table_matches_direct_computation() {
        let mut t = SylvesterTable::new(3).unwrap();
        for p in (1..=6).rev() {
            assert_eq!(t.value(p).unwrap(), &u(p, 3).unwrap());
        }
    }

    #[test]
    fn identities_hold_for_small_parameters() {
        for q in 1..=4 {
            for p in 1..=6 {
                let rep = identity_checks(p, q).unwrap();
                assert!(rep.all_pass(), "identity failed at p = {p}, q = {q}: {rep:?}");
            }
        }
    }

    #[test]
    fn identity_example_product() {
        // p = 3, q = 2: (1+2)(1+6)(1+42) = 903 = u_{4,2}/2
        let shifted_prod: Int = [2i64, 6, 42]
            .iter()
            .map(|&v| int(1 + v))
            .product();
        assert_eq!(shifted_prod, int(903));
        assert_eq!(u(4, 2).unwrap() / int(2), int(903));
        assert!(identity_checks(3, 2).unwrap().all_pass());
    }

    #[test]
    fn gamma_bound_values_and_monotonicity() {
        assert_eq!(gamma_bound(2, 1).unwrap(), rat(1, 6));
        assert_eq!(gamma_bound(2, 2).unwrap(), rat(2, 42));
        assert_eq!(gamma_bound(2, 2).unwrap(), rat(1, 21));
        assert_eq!(gamma_bound(3, 1).unwrap(), rat(1, 42));
        for q in 1..=3 {
            for d in 1..=5 {
                assert!(
                    gamma_bound(d + 1, q).unwrap() < gamma_bound(d, q).unwrap(),
                    "bound must strictly decrease in dimension (d = {d}, q = {q})"
                );
            }
        }
    }

    #[test]
    fn cartier_index_bound_values() {
        // d = 2, q = 3: 2! * u_{2,3}^1 * 3 = 2 * 12 * 3 = 72
        assert_eq!(cartier_index_bound(2, 3).unwrap(), int(72));
        assert_eq!(cartier_index_bound(1, 1).unwrap(), int(1));
        assert_eq!(cartier_index_bound(2, 1).unwrap(), int(4));
    }
}
