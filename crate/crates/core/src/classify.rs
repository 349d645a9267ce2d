//! Classification of Cl(p,q) as a matrix algebra over ℝ, ℂ, or ℍ (or a
//! direct sum of two such), keyed on (p−q) mod 8.
//!
//! The residue table is classical; this module backs it with two
//! independent certificates so nothing rests on the table alone:
//! explicit generator matrices for every signature with p+q ≤ 2 (checked
//! for the defining relations and for faithfulness), and the dimension of
//! the center computed from the commutation linear system [x,eᵢ] = 0 for
//! all p+q ≤ 6, which must match the classified base (ℝ and ℍ have
//! 1-dimensional center, ℂ and the doubled algebras 2-dimensional).
//!
//! Morita bookkeeping is carried through the same residue: equal residues
//! mean Morita-equivalent algebras, and residue 0 is the Morita-trivial
//! class containing Cl(1,1) ≅ End ℝ^{1|1}.

use crate::clifford::{mul_blades, Blade, MultiVector, Signature};
use crate::linalg::RatMat;
use crate::rational::format_ratio;
use num::{BigRational, One};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("n = {n} exceeds the supported bound {max} for this computation")]
    DimensionTooLarge { n: u16, max: u16 },
}

/// The base algebra over which Cl(p,q) is a matrix algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseAlgebra {
    R,
    C,
    H,
    RPlusR,
    HPlusH,
}

impl BaseAlgebra {
    pub fn label(&self) -> &'static str {
        match self {
            BaseAlgebra::R => "ℝ",
            BaseAlgebra::C => "ℂ",
            BaseAlgebra::H => "ℍ",
            BaseAlgebra::RPlusR => "ℝ ⊕ ℝ",
            BaseAlgebra::HPlusH => "ℍ ⊕ ℍ",
        }
    }

    /// Real dimension of the base (both summands counted for doubles).
    pub fn real_dim(&self) -> u64 {
        match self {
            BaseAlgebra::R => 1,
            BaseAlgebra::C => 2,
            BaseAlgebra::H => 4,
            BaseAlgebra::RPlusR => 2,
            BaseAlgebra::HPlusH => 8,
        }
    }

    pub fn is_double(&self) -> bool {
        matches!(self, BaseAlgebra::RPlusR | BaseAlgebra::HPlusH)
    }

    /// Real dimension of the center of M_s(base): ℝ for ℝ and ℍ, ℂ for ℂ,
    /// ℝ⊕ℝ for the doubles.
    pub fn center_dim(&self) -> u64 {
        match self {
            BaseAlgebra::R | BaseAlgebra::H => 1,
            BaseAlgebra::C | BaseAlgebra::RPlusR | BaseAlgebra::HPlusH => 2,
        }
    }
}

impl fmt::Display for BaseAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Classified shape of Cl(p,q): matrices of size `matrix_size` over `base`,
/// with the Morita residue (p−q) mod 8 carried along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraClass {
    pub base: BaseAlgebra,
    pub matrix_size: u64,
    pub morita_residue: u8,
}

impl AlgebraClass {
    /// Residue 0 is the class of the ground field ℝ (and of Cl(1,1)).
    pub fn morita_trivial(&self) -> bool {
        self.morita_residue == 0
    }

    /// Real dimension of M_s(base); always equals 2^{p+q}.
    pub fn total_dim(&self) -> u128 {
        u128::from(self.matrix_size) * u128::from(self.matrix_size)
            * u128::from(self.base.real_dim())
    }
}

impl Serialize for AlgebraClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AlgebraClass", 5)?;
        s.serialize_field("base", self.base.label())?;
        s.serialize_field("matrix_size", &self.matrix_size)?;
        s.serialize_field("morita_residue", &self.morita_residue)?;
        s.serialize_field("morita_trivial", &self.morita_trivial())?;
        s.serialize_field("real_dimension", &(self.total_dim() as u64))?;
        s.end()
    }
}

pub fn morita_residue(sig: Signature) -> u8 {
    (i32::from(sig.p()) - i32::from(sig.q())).rem_euclid(8) as u8
}

/// Table of bases keyed on (p−q) mod 8.
const BASE_TABLE: [BaseAlgebra; 8] = [
    BaseAlgebra::R,
    BaseAlgebra::RPlusR,
    BaseAlgebra::R,
    BaseAlgebra::C,
    BaseAlgebra::H,
    BaseAlgebra::HPlusH,
    BaseAlgebra::H,
    BaseAlgebra::C,
];

/// Ungraded matrix-algebra type of Cl(p,q): base from the residue table,
/// matrix size fixed by 2^{p+q} = size² · dim_ℝ(base).
pub fn classify(sig: Signature) -> AlgebraClass {
    let residue = morita_residue(sig);
    let base = BASE_TABLE[residue as usize];
    let n = u32::from(sig.dim());
    let log_base = base.real_dim().trailing_zeros();
    debug_assert!(n >= log_base && (n - log_base) % 2 == 0);
    let matrix_size = 1u64 << ((n - log_base) / 2);
    AlgebraClass {
        base,
        matrix_size,
        morita_residue: residue,
    }
}

/// Explicit matrices for the generators of Cl(p,q), n ≤ 2, certifying the
/// classification: they satisfy the defining relations and represent the
/// algebra faithfully.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismWitness {
    pub sig: Signature,
    /// One real matrix per generator, all of size rep_dim × rep_dim.
    pub generator_images: Vec<RatMat>,
    pub rep_dim: usize,
}

impl IsomorphismWitness {
    /// Image of an arbitrary basis blade: the product of the generator
    /// images in index order.
    pub fn blade_image(&self, blade: Blade) -> RatMat {
        let mut acc = RatMat::identity(self.rep_dim);
        for i in blade.indices() {
            acc = acc.mul(&self.generator_images[(i - 1) as usize]);
        }
        acc
    }

    /// Generator relations: square to ±I per the signature, anticommute.
    pub fn satisfies_relations(&self) -> bool {
        let n = self.sig.dim() as usize;
        let id = RatMat::identity(self.rep_dim);
        for i in 0..n {
            let gi = &self.generator_images[i];
            let want = if self.sig.generator_square(i as u16 + 1) > 0 {
                id.clone()
            } else {
                id.scale(&-BigRational::one())
            };
            if gi.mul(gi) != want {
                return false;
            }
            for gj in &self.generator_images[i + 1..] {
                if !gi.mul(gj).add(&gj.mul(gi)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Faithfulness: the 2ⁿ blade images are linearly independent over ℚ.
    pub fn is_faithful(&self) -> bool {
        let n = self.sig.dim();
        let blades = 1u64 << n;
        let d = self.rep_dim;
        let flat = RatMat::from_fn(blades as usize, d * d, |b, k| {
            self.blade_image(Blade(b as u64))[(k / d, k % d)].clone()
        });
        flat.rank() == blades as usize
    }
}

impl Serialize for IsomorphismWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let gens: Vec<Vec<Vec<String>>> = self
            .generator_images
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|i| (0..m.cols()).map(|j| format_ratio(&m[(i, j)])).collect())
                    .collect()
            })
            .collect();
        let mut s = serializer.serialize_struct("IsomorphismWitness", 3)?;
        s.serialize_field("sig", &[self.sig.p(), self.sig.q()])?;
        s.serialize_field("rep_dim", &self.rep_dim)?;
        s.serialize_field("generators", &gens)?;
        s.end()
    }
}

fn mat_i64(rows: &[&[i64]]) -> RatMat {
    RatMat::from_i64_rows(rows)
}

/// Explicit isomorphism witnesses for all signatures with n ≤ 2:
/// (0,0) ℝ itself; (1,0) the idempotent splitting of ℝ⊕ℝ as diagonal
/// matrices; (0,1) ℂ acting on ℝ²; (2,0) and (1,1) all of M₂(ℝ);
/// (0,2) ℍ in its left-regular representation on ℝ⁴.
pub fn verify_small_isomorphism(sig: Signature) -> Result<IsomorphismWitness, ClassifyError> {
    if sig.dim() > 2 {
        return Err(ClassifyError::DimensionTooLarge { n: sig.dim(), max: 2 });
    }
    let (rep_dim, generator_images) = match (sig.p(), sig.q()) {
        (0, 0) => (1, vec![]),
        (1, 0) => (2, vec![mat_i64(&[&[1, 0], &[0, -1]])]),
        (0, 1) => (2, vec![mat_i64(&[&[0, -1], &[1, 0]])]),
        (2, 0) => (
            2,
            vec![mat_i64(&[&[1, 0], &[0, -1]]), mat_i64(&[&[0, 1], &[1, 0]])],
        ),
        (1, 1) => (
            2,
            vec![mat_i64(&[&[0, 1], &[1, 0]]), mat_i64(&[&[0, 1], &[-1, 0]])],
        ),
        (0, 2) => (
            4,
            vec![
                mat_i64(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]),
                mat_i64(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]),
            ],
        ),
        _ => unreachable!("n ≤ 2 covered"),
    };
    Ok(IsomorphismWitness {
        sig,
        generator_images,
        rep_dim,
    })
}

/// Real dimension of the center of Cl(p,q), computed from scratch: the
/// nullity of the stacked linear system [x, eᵢ] = 0 over the 2ⁿ blade
/// coordinates of x. Guarded to n ≤ 6 (the system is n·2ⁿ × 2ⁿ).
pub fn center_dimension(sig: Signature) -> Result<u64, ClassifyError> {
    let n = sig.dim();
    if n > 6 {
        return Err(ClassifyError::DimensionTooLarge { n, max: 6 });
    }
    let blades = 1usize << n;
    // stacked matrix of the maps x ↦ x·eᵢ − eᵢ·x: row (i, y) holds the
    // coefficient of output blade y, column x the input blade; each input
    // blade hits the single output blade x ⊕ eᵢ
    let mut m = RatMat::zero(n as usize * blades, blades);
    for i in 0..n {
        let ei = Blade(1 << i);
        for x in 0..blades {
            let xb = Blade(x as u64);
            let (target, s1) = mul_blades(sig, xb, ei);
            let (t2, s2) = mul_blades(sig, ei, xb);
            debug_assert_eq!(target, t2);
            let diff = i64::from(s1) - i64::from(s2);
            if diff != 0 {
                m.set(
                    usize::from(i) * blades + target.0 as usize,
                    x,
                    BigRational::from_integer(diff.into()),
                );
            }
        }
    }
    Ok((blades - m.rank()) as u64)
}

/// Marks whether x commutes with every generator (direct product check);
/// test oracle for [`center_dimension`].
pub fn commutes_with_all_generators(x: &MultiVector) -> bool {
    let sig = x.sig();
    for i in 1..=sig.dim() {
        let ei = MultiVector::generator(sig, i).expect("generator in range");
        if x.product(&ei).unwrap() != ei.product(x).unwrap() {
            return false;
        }
    }
    true
}
