//! Integral cohomology of a simplicial complex in one degree, presented
//! through two Smith normal forms.
//!
//! Fix a complex X and a degree q, write E = δ^q and D = δ^{q−1}. A
//! unimodular V_E from the Smith form of E turns the cocycle condition
//! Ez = 0 into "the first rank(E) coordinates of V_E⁻¹z vanish"; the
//! remaining k coordinates are exact coordinates on the integer cocycle
//! lattice. Pushing D into those coordinates gives M = (V_E⁻¹D)[rank(E)..,·],
//! and the Smith form U_M·M·V_M = diag(d₁,…) presents
//!
//!   H^q(X;ℤ) ≅ ℤ/d₁ ⊕ … ⊕ ℤ/d_r ⊕ ℤ^{k−r}
//!
//! with explicit coordinates (apply U_M), explicit generators (apply the
//! inverses), and an exact divisibility test for solving δb = Δ over ℤ.

use crate::diffcoh::complex::SimplicialComplex;
use crate::linalg::{smith_normal_form, IntMat, SmithForm};
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Coordinates of an integral cohomology class: torsion values aligned
/// with the solver's torsion moduli (each in [0, dᵢ)), then free
/// coordinates in ℤ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub torsion: Vec<BigInt>,
    pub free: Vec<BigInt>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().all(Zero::is_zero) && self.free.iter().all(Zero::is_zero)
    }
}

impl Serialize for CohomologyClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let strings = |v: &[BigInt]| -> Vec<String> { v.iter().map(BigInt::to_string).collect() };
        let mut s = serializer.serialize_struct("CohomologyClass", 2)?;
        s.serialize_field("torsion", &strings(&self.torsion))?;
        s.serialize_field("free", &strings(&self.free))?;
        s.end()
    }
}

/// Cohomology of one complex in one degree with explicit coordinates.
pub struct DegreeSolver {
    n_q: usize,
    rank_e: usize,
    v_e_inv: IntMat,
    /// Columns rank_e.. of V_E: a lattice basis of the integer cocycles.
    kernel_basis: IntMat,
    /// Smith form of M = (V_E⁻¹ D)[rank_e.., ·].
    m: SmithForm,
    m_cols: usize,
}

impl DegreeSolver {
    pub fn new(x: &SimplicialComplex, q: usize) -> DegreeSolver {
        let e = x.coboundary_matrix(q);
        let d = if q == 0 {
            IntMat::zero(x.count(0), 0)
        } else {
            x.coboundary_matrix(q - 1)
        };
        let n_q = x.count(q);
        let e_form = smith_normal_form(&e);
        let rank_e = e_form.rank;
        let k = n_q - rank_e;
        let kernel_basis = IntMat::from_fn(n_q, k, |i, j| e_form.v[(i, rank_e + j)].clone());
        let m_full = e_form.v_inv.mul(&d);
        let m_mat = m_full.rows_from(rank_e);
        debug_assert!(
            (0..rank_e).all(|i| (0..d.cols()).all(|j| m_full[(i, j)].is_zero())),
            "image of δ^(q-1) must consist of cocycles"
        );
        DegreeSolver {
            n_q,
            rank_e,
            v_e_inv: e_form.v_inv,
            kernel_basis,
            m: smith_normal_form(&m_mat),
            m_cols: d.cols(),
        }
    }

    pub fn cochain_len(&self) -> usize {
        self.n_q
    }

    /// Rank of the free part of H^q(X;ℤ) (= dim H^q(X;ℝ)).
    pub fn betti(&self) -> usize {
        self.n_q - self.rank_e - self.m.rank
    }

    /// The invariant factors > 1, in divisibility order.
    pub fn torsion_moduli(&self) -> Vec<BigInt> {
        self.m
            .factors
            .iter()
            .filter(|f| !f.is_one())
            .cloned()
            .collect()
    }

    /// Coordinates of an integer cocycle on the cocycle lattice; None if
    /// z is not a cocycle.
    pub fn kernel_coords(&self, z: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(z.len(), self.n_q, "cochain length mismatch");
        let y = self.v_e_inv.mul_vec(z);
        if y[..self.rank_e].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(y[self.rank_e..].to_vec())
    }

    /// Rational variant of [`Self::kernel_coords`].
    pub fn kernel_coords_rat(&self, z: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(z.len(), self.n_q, "cochain length mismatch");
        let y = self.v_e_inv.mul_rat_vec(z);
        if y[..self.rank_e].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(y[self.rank_e..].to_vec())
    }

    /// The class of an integer cocycle; None if z is not a cocycle.
    pub fn class_of(&self, z: &[BigInt]) -> Option<CohomologyClass> {
        let y = self.kernel_coords(z)?;
        let w = self.m.u.mul_vec(&y);
        let torsion = self
            .m
            .factors
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.is_one())
            .map(|(i, f)| {
                let mut r = &w[i] % f;
                if r.is_negative() {
                    r += f;
                }
                r
            })
            .collect();
        Some(CohomologyClass {
            torsion,
            free: w[self.m.rank..].to_vec(),
        })
    }

    /// Free coordinates of a rational cocycle; the class is an integral
    /// one exactly when these are all integers. None if z is not a
    /// cocycle.
    pub fn rational_free_coords(&self, z: &[BigRational]) -> Option<Vec<BigRational>> {
        let y = self.kernel_coords_rat(z)?;
        let w = self.m.u.mul_rat_vec(&y);
        Some(w[self.m.rank..].to_vec())
    }

    fn generator_from_basis_vector(&self, pos: usize) -> Vec<BigInt> {
        let k = self.n_q - self.rank_e;
        let mut e = vec![BigInt::zero(); k];
        e[pos] = BigInt::one();
        let y = self.m.u_inv.mul_vec(&e);
        self.kernel_basis.mul_vec(&y)
    }

    /// Integer cocycle whose class is the j-th free unit vector.
    pub fn free_generator(&self, j: usize) -> Vec<BigInt> {
        assert!(j < self.betti(), "free generator index out of range");
        self.generator_from_basis_vector(self.m.rank + j)
    }

    /// Integer cocycle generating the i-th torsion summand, with its
    /// modulus.
    pub fn torsion_generator(&self, i: usize) -> (BigInt, Vec<BigInt>) {
        let positions: Vec<usize> = self
            .m
            .factors
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.is_one())
            .map(|(p, _)| p)
            .collect();
        let pos = positions[i];
        (self.m.factors[pos].clone(), self.generator_from_basis_vector(pos))
    }

    /// Solves δb = Δ over ℤ for b a (q−1)-cochain; None when no integer
    /// solution exists (including when Δ is not a cocycle).
    pub fn solve_coboundary(&self, delta: &[BigInt]) -> Option<Vec<BigInt>> {
        let y = self.kernel_coords(delta)?;
        let c = self.m.u.mul_vec(&y);
        let mut t = vec![BigInt::zero(); self.m_cols];
        for (i, ci) in c.iter().enumerate() {
            if i < self.m.rank {
                let f = &self.m.factors[i];
                if !(ci % f).is_zero() {
                    return None;
                }
                t[i] = ci / f;
            } else if !ci.is_zero() {
                return None;
            }
        }
        Some(self.m.v.mul_vec(&t))
    }

    /// Solves δb = Δ over ℚ; None when Δ is not a rational coboundary.
    pub fn solve_coboundary_rat(&self, delta: &[BigRational]) -> Option<Vec<BigRational>> {
        let y = self.kernel_coords_rat(delta)?;
        let c = self.m.u.mul_rat_vec(&y);
        let mut t = vec![BigRational::zero(); self.m_cols];
        for (i, ci) in c.iter().enumerate() {
            if i < self.m.rank {
                t[i] = ci / BigRational::from(self.m.factors[i].clone());
            } else if !ci.is_zero() {
                return None;
            }
        }
        Some(self.m.v.to_rat().mul_vec(&t))
    }
}
