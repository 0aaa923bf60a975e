//! Elements of the cyclotomic field `Q(ζ_n)` for a fixed `n`.
//!
//! A value is stored as coefficients of `1, ζ, …, ζ^(n−1)` modulo `x^n − 1`. That
//! representation is not unique; [`Cyclo::canonical`] reduces modulo `Φ_n`.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::qmat::{q, Q};

#[derive(Clone, Debug)]
pub struct Cyclo {
    n: usize,
    coeffs: Vec<Q>,
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    // x^n − 1 divided by Φ_d for every proper divisor d.
    let mut num: Vec<BigInt> = alloc::vec![BigInt::zero(); n + 1];
    num[0] = BigInt::from(-1);
    num[n] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = alloc::vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        for (i, x) in den.iter().enumerate() {
            rem[k + i] -= &c * x;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

impl Cyclo {
    pub fn zero(n: usize) -> Cyclo {
        Cyclo { n, coeffs: alloc::vec![Q::zero(); n] }
    }

    pub fn rational(n: usize, x: Q) -> Cyclo {
        let mut c = Cyclo::zero(n);
        c.coeffs[0] = x;
        c
    }

    pub fn integer(n: usize, x: i64) -> Cyclo {
        Cyclo::rational(n, q(x))
    }

    /// `ζ_n^k`.
    pub fn root(n: usize, k: usize) -> Cyclo {
        let mut c = Cyclo::zero(n);
        c.coeffs[k % n] = Q::one();
        c
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The same value inside `Q(ζ_m)`, for `m` a multiple of the current order.
    pub fn lift(&self, m: usize) -> Cyclo {
        assert_eq!(m % self.n, 0, "cyclotomic lift to a non-multiple order");
        let step = m / self.n;
        let mut c = Cyclo::zero(m);
        for (k, x) in self.coeffs.iter().enumerate() {
            c.coeffs[k * step] = x.clone();
        }
        c
    }

    pub fn add(&self, o: &Cyclo) -> Cyclo {
        assert_eq!(self.n, o.n, "cyclotomic values of different orders");
        Cyclo { n: self.n, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Cyclo) -> Cyclo {
        self.add(&o.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> Cyclo {
        Cyclo { n: self.n, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Coefficients of the remainder modulo `Φ_n`, of length `φ(n)`.
    pub fn canonical(&self) -> Vec<Q> {
        let phi = cyclotomic_polynomial(self.n);
        let deg = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        for k in (deg..rem.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            for (i, x) in phi.iter().enumerate() {
                rem[k - deg + i] -= &c * Q::from_integer(x.clone());
            }
        }
        rem.truncate(deg);
        rem
    }

    pub fn to_rational(&self) -> Option<Q> {
        let c = self.canonical();
        c[1..].iter().all(Zero::is_zero).then(|| c[0].clone())
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Cyclo) -> bool {
        self.n == o.n && self.canonical() == o.canonical()
    }
}

impl Eq for Cyclo {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn sums_of_roots() {
        for n in [3usize, 5, 7, 12] {
            let all = (0..n).fold(Cyclo::zero(n), |acc, k| acc.add(&Cyclo::root(n, k)));
            assert_eq!(all.to_rational(), Some(q(0)));
        }
        // ζ_5 + ζ_5^4 is irrational, but summing over k coprime to 5 gives −1.
        let c = Cyclo::root(5, 1).add(&Cyclo::root(5, 4));
        assert_eq!(c.to_rational(), None);
        let primitive = (1..5).fold(Cyclo::zero(5), |acc, k| acc.add(&Cyclo::root(5, k)));
        assert_eq!(primitive, Cyclo::integer(5, -1));
        assert_eq!(Cyclo::root(6, 1).add(&Cyclo::root(6, 5)), Cyclo::integer(6, 1));
    }
}
