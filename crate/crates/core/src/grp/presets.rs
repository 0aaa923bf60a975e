//! Built-in permutation groups.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{is_prime, Group};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Named families, parsed from `preset:<family>:<args>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    Cyclic(usize),
    /// Dihedral group of the given order (so `Dihedral(8)` is D8).
    Dihedral(usize),
    Quaternion8,
    Symmetric(usize),
    Alternating(usize),
    /// Direct product of cyclic groups of the listed orders.
    Abelian(Vec<usize>),
    /// `C_p ⋊ C_{q^r}` whose action on `C_p` has kernel of order `q^l`.
    Semidirect { p: usize, q: usize, r: u32, l: u32 },
}

impl Preset {
    pub fn build(&self) -> Result<Group> {
        Group::from_generators(self.generators()?)
    }

    pub fn generators(&self) -> Result<Vec<Perm>> {
        match *self {
            Preset::Cyclic(n) => {
                positive(n, "cyclic order")?;
                Ok(vec![cycle_perm(n, 0, n)])
            }
            Preset::Dihedral(order) => dihedral(order),
            Preset::Quaternion8 => Ok(quaternion8()),
            Preset::Symmetric(n) => {
                positive(n, "symmetric degree")?;
                if n == 1 {
                    return Ok(vec![Perm::identity(1)]);
                }
                let mut gens = vec![cycle_perm(n, 0, n)];
                if n > 2 {
                    gens.push(Perm::from_cycles(n, &[vec![0, 1]])?);
                }
                Ok(gens)
            }
            Preset::Alternating(n) => {
                positive(n, "alternating degree")?;
                if n < 3 {
                    return Ok(vec![Perm::identity(n.max(1))]);
                }
                Ok((2..n).map(|k| Perm::from_cycles(n, &[vec![0, 1, k]]).unwrap()).collect())
            }
            Preset::Abelian(ref orders) => {
                let degree: usize = orders.iter().sum();
                if orders.is_empty() {
                    return Ok(vec![Perm::identity(1)]);
                }
                let mut start = 0;
                let mut gens = Vec::new();
                for &n in orders {
                    positive(n, "abelian factor")?;
                    gens.push(cycle_perm(degree, start, n));
                    start += n;
                }
                Ok(gens)
            }
            Preset::Semidirect { p, q, r, l } => semidirect(p, q, r, l),
        }
    }
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

/// The cycle `(start start+1 … start+len-1)` on `degree` points.
fn cycle_perm(degree: usize, start: usize, len: usize) -> Perm {
    if len < 2 {
        return Perm::identity(degree.max(1));
    }
    Perm::from_cycles(degree, &[(start..start + len).collect()]).unwrap()
}

fn dihedral(order: usize) -> Result<Vec<Perm>> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("dihedral order {order} must be even and at least 2")));
    }
    let n = order / 2;
    match n {
        1 => Ok(vec![Perm::from_cycles(2, &[vec![0, 1]])?]),
        2 => Ok(vec![Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]])?, Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]])?]),
        _ => {
            let rotation = cycle_perm(n, 0, n);
            // Reflection fixing vertex 0: i ↦ -i mod n.
            let reflection = Perm::from_images((0..n).map(|i| ((n - i) % n) as u8).collect())?;
            Ok(vec![rotation, reflection])
        }
    }
}

/// Left-regular representation of Q8 with elements ±1, ±i, ±j, ±k.
fn quaternion8() -> Vec<Perm> {
    // Index (sign, unit): sign in {0,1}, unit in {1,i,j,k} = {0,1,2,3}; point = 4*sign + unit.
    let mul_unit = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (0, x),
            (x, y) if x == y => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let left = |unit: usize| -> Perm {
        let images = (0..8)
            .map(|pt| {
                let (s, u) = (pt / 4, pt % 4);
                let (s2, u2) = mul_unit(unit, u);
                (4 * ((s + s2) % 2) + u2) as u8
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    vec![left(1), left(2)]
}

fn semidirect(p: usize, q: usize, r: u32, l: u32) -> Result<Vec<Perm>> {
    if !is_prime(p) || !is_prime(q) || p == q {
        return Err(Error::InvalidParameter(format!("semidirect needs distinct primes, got p={p}, q={q}")));
    }
    if r == 0 || l > r {
        return Err(Error::InvalidParameter(format!("semidirect needs r ≥ 1 and l ≤ r, got r={r}, l={l}")));
    }
    let action = q.pow(r - l);
    if !(p - 1).is_multiple_of(action) {
        return Err(Error::InvalidParameter(format!("q^(r-l) = {action} does not divide p-1 = {}", p - 1)));
    }
    let unit = unit_of_order(p, action);
    // Translation and multiplication by `unit` on Z/p; when the action is not
    // faithful an extra q^r-cycle on fresh points gives the complement its full order.
    let extra = if l > 0 { q.pow(r) } else { 0 };
    let degree = p + extra;
    let translation = Perm::from_images((0..degree).map(|x| if x < p { ((x + 1) % p) as u8 } else { x as u8 }).collect())?;
    let mut images: Vec<u8> = (0..p).map(|x| ((x * unit) % p) as u8).collect();
    if extra > 0 {
        images.extend((0..extra).map(|i| (p + (i + 1) % extra) as u8));
    }
    Ok(vec![translation, Perm::from_images(images)?])
}

/// An element of multiplicative order `order` in `(Z/p)^×`.
fn unit_of_order(p: usize, order: usize) -> usize {
    (1..p).find(|&u| mult_order(u, p) == order).expect("order divides p-1")
}

fn mult_order(u: usize, p: usize) -> usize {
    let mut x = u % p;
    let mut n = 1;
    while x != 1 {
        x = x * u % p;
        n += 1;
    }
    n
}
