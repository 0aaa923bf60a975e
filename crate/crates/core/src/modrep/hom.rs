use alloc::string::String;
use alloc::vec::Vec;
use rand_core::RngCore;

use super::Rep;
use crate::error::{Error, Result};
use crate::fp::FpMat;

/// A basis of `Hom_G(M, N)`, each map a `dim N × dim M` matrix.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<FpMat>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ cᵢ Fᵢ`.
    pub fn combine(&self, p: u32, coeffs: &[u32]) -> FpMat {
        self.basis
            .iter()
            .zip(coeffs)
            .fold(FpMat::zeros(p, self.target_dim, self.source_dim), |acc, (f, &c)| acc.add(&f.scale(c)))
    }

    fn random<R: RngCore>(&self, p: u32, rng: &mut R) -> FpMat {
        let coeffs: Vec<u32> = (0..self.dim()).map(|_| rng.next_u32() % p).collect();
        self.combine(p, &coeffs)
    }
}

/// Solves `F ρ_M(g) = ρ_N(g) F` for all generators, with `F` flattened row-major.
pub fn hom_space(m: &Rep, n: &Rep) -> Result<HomSpace> {
    m.check_compatible(n)?;
    let (dm, dn, p) = (m.dim, n.dim, m.p);
    let unknowns = dm * dn;
    let basis_vectors = if m.gens.is_empty() {
        (0..unknowns).map(|i| super::unit(unknowns, i)).collect()
    } else {
        let im = FpMat::identity(p, dm);
        let in_ = FpMat::identity(p, dn);
        let parts: Vec<FpMat> =
            m.gens.iter().zip(&n.gens).map(|(a, b)| in_.kron(&a.transpose()).sub(&b.kron(&im))).collect();
        FpMat::vstack(p, unknowns, &parts).nullspace()
    };
    let basis = basis_vectors
        .iter()
        .map(|v| {
            let mut f = FpMat::zeros(p, dn, dm);
            for i in 0..dn {
                for j in 0..dm {
                    f.set(i, j, v[i * dm + j]);
                }
            }
            f
        })
        .collect();
    Ok(HomSpace { source_dim: dm, target_dim: dn, basis })
}

/// Number of summands isomorphic to the one-dimensional `χ`: the rank of the
/// composition pairing `Hom(χ, M) × Hom(M, χ) → End(χ) = F_p`.
pub fn summand_multiplicity_1dim(m: &Rep, chi: &Rep) -> Result<usize> {
    if chi.dim != 1 {
        return Err(Error::InvalidParameter(String::from("summand test needs a one-dimensional module")));
    }
    let into = hom_space(chi, m)?;
    let out = hom_space(m, chi)?;
    if into.dim() == 0 || out.dim() == 0 {
        return Ok(0);
    }
    let mut pairing = FpMat::zeros(m.p, out.dim(), into.dim());
    for (i, b) in out.basis.iter().enumerate() {
        for (j, a) in into.basis.iter().enumerate() {
            pairing.set(i, j, b.mul(a).get(0, 0));
        }
    }
    Ok(pairing.rank())
}

fn check_map(pi: &FpMat, source: &Rep, target: &Rep) -> Result<()> {
    source.check_compatible(target)?;
    if pi.rows() != target.dim || pi.cols() != source.dim {
        return Err(Error::NotEquivariant(String::from("map has the wrong shape")));
    }
    for (a, b) in source.gens.iter().zip(&target.gens) {
        if pi.mul(a) != b.mul(pi) {
            return Err(Error::NotEquivariant(String::from("map does not commute with the action")));
        }
    }
    Ok(())
}

/// Whether some equivariant `s : M → E` has `π ∘ s = id_M`.
pub fn is_split_surjection(pi: &FpMat, e: &Rep, m: &Rep) -> Result<bool> {
    check_map(pi, e, m)?;
    if pi.rank() != m.dim {
        return Err(Error::NotEquivariant(String::from("map is not surjective")));
    }
    let sections = hom_space(m, e)?;
    Ok(solve_identity(&sections, |s| pi.mul(s), m.dim, m.p).is_some())
}

/// Finds coefficients with `Σ cᵢ f(Bᵢ) = I` over a Hom basis `B`.
fn solve_identity(space: &HomSpace, f: impl Fn(&FpMat) -> FpMat, n: usize, p: u32) -> Option<Vec<u32>> {
    let cols: Vec<Vec<u32>> = space
        .basis
        .iter()
        .map(|b| {
            let img = f(b);
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| img.get(i, j)).collect()
        })
        .collect();
    let target: Vec<u32> = (0..n * n).map(|k| u32::from(k / n == k % n)).collect();
    if cols.is_empty() {
        return (n == 0).then(Vec::new);
    }
    FpMat::from_columns(p, n * n, &cols).solve(&target)
}

/// Whether `M` is a summand of `kX ⊗ M`, via the evaluation `x ⊗ m ↦ m`.
pub fn is_x_projective(m: &Rep, x: &crate::burnside::ConcreteGSet) -> Result<bool> {
    let kx = Rep::perm_module(x, m.p)?;
    m.check_compatible(&kx)?;
    let e = kx.tensor(m)?;
    let mut pi = FpMat::zeros(m.p, m.dim, e.dim);
    for pt in 0..x.len() {
        for j in 0..m.dim {
            pi.set(j, pt * m.dim + j, 1);
        }
    }
    is_split_surjection(&pi, &e, m)
}

/// Searches random intertwiners for an invertible one.
pub fn find_isomorphism<R: RngCore>(m: &Rep, n: &Rep, rng: &mut R, attempts: usize) -> Result<Option<FpMat>> {
    m.check_compatible(n)?;
    if m.dim != n.dim {
        return Ok(None);
    }
    let space = hom_space(m, n)?;
    for _ in 0..attempts {
        let f = space.random(m.p, rng);
        if f.rank() == m.dim {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Searches for a split injection `U → M`: a random intertwiner `i` and a solved
/// retraction `r` with `r ∘ i = id_U`. A `false` answer is probabilistic.
pub fn is_summand<R: RngCore>(u: &Rep, m: &Rep, rng: &mut R, attempts: usize) -> Result<bool> {
    u.check_compatible(m)?;
    if u.dim == 0 {
        return Ok(true);
    }
    let injections = hom_space(u, m)?;
    let retractions = hom_space(m, u)?;
    if injections.dim() == 0 || retractions.dim() == 0 {
        return Ok(false);
    }
    for _ in 0..attempts {
        let i = injections.random(m.p, rng);
        if i.rank() < u.dim {
            continue;
        }
        if solve_identity(&retractions, |r| r.mul(&i), u.dim, m.p).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}
