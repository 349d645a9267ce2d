//! Pin and Spin groups inside Cl(p,q), as words of exact unit vectors.
//!
//! Pin(p,q) is the subgroup of Clifford units generated by vectors with
//! ⟨ξ,ξ⟩ = ±1; Spin(p,q) is its even-word part. An element is carried as
//! both the generating word and its reduced Clifford product; two elements
//! are equal when the reduced products agree (words are witnesses, not
//! identity).
//!
//! The double cover Pin(p,q) → O(p,q) sends a word to the composite of the
//! reflections σ_ξ of its letters; here it is computed algebraically as the
//! twisted adjoint η ↦ α(g)ηg⁻¹ of the reduced element, which agrees with
//! the reflection composite and kills exactly ±1.
//!
//! The central embeddings ξ ↦ ξ·e_{n+1} realize Pin⁺ₙ inside Spin(n,1) and
//! Pin⁻ₙ inside Spin(n+1); they power the index-degree bookkeeping
//! (Spin: −n, Pin⁺: −(n−1), Pin⁻: −(n+1)). Low-dimensional isomorphism
//! tables for n ≤ 3 ship as documentation data, and the n = 1 groups are
//! small enough to enumerate outright.

use crate::clifford::{CliffordError, MultiVector, Signature, Vector};
use crate::linalg::RatMat;
use crate::rational::{format_ratio, parse_ratio};
use num::{BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PinError {
    #[error("word vector at position {index} has ⟨ξ,ξ⟩ = {norm}, need ±1")]
    NonUnitVector { index: usize, norm: String },
    #[error("element lives in Cl({got_p},{got_q}), expected Cl({want_p},{want_q})")]
    WrongSignature {
        got_p: u16,
        got_q: u16,
        want_p: u16,
        want_q: u16,
    },
    #[error("Pin⁺ elements live in Cl(n,0); got Cl({p},{q})")]
    NotPinPlus { p: u16, q: u16 },
    #[error("Pin⁻ elements live in Cl(0,n); got Cl({p},{q})")]
    NotPinMinus { p: u16, q: u16 },
    #[error("the group over Cl({p},{q}) is infinite; only n = 1 is enumerable")]
    InfiniteGroup { p: u16, q: u16 },
    #[error("negation needs at least one generator")]
    NoGenerators,
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

/// Group element of Pin(p,q): a word of unit vectors together with its
/// reduced Clifford product. Equality and hashing use only the reduced
/// multivector.
#[derive(Debug, Clone)]
pub struct PinElement {
    sig: Signature,
    word: Vec<Vector>,
    reduced: MultiVector,
}

impl PartialEq for PinElement {
    fn eq(&self, other: &PinElement) -> bool {
        self.reduced == other.reduced
    }
}

impl Eq for PinElement {}

impl std::hash::Hash for PinElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.reduced.hash(state);
    }
}

/// Builds the Pin element with the given word. Every letter must satisfy
/// ⟨ξ,ξ⟩ = ±1 exactly and share the signature.
pub fn pin_from_vectors(sig: Signature, vs: Vec<Vector>) -> Result<PinElement, PinError> {
    let mut reduced = MultiVector::one(sig);
    for (index, v) in vs.iter().enumerate() {
        if v.sig() != sig {
            return Err(PinError::WrongSignature {
                got_p: v.sig().p(),
                got_q: v.sig().q(),
                want_p: sig.p(),
                want_q: sig.q(),
            });
        }
        if !v.is_unit() {
            return Err(PinError::NonUnitVector {
                index,
                norm: format_ratio(&v.norm()),
            });
        }
        reduced = reduced.product(&v.multivector())?;
    }
    Ok(PinElement {
        sig,
        word: vs,
        reduced,
    })
}

impl PinElement {
    pub fn identity(sig: Signature) -> PinElement {
        PinElement {
            sig,
            word: Vec::new(),
            reduced: MultiVector::one(sig),
        }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn word(&self) -> &[Vector] {
        &self.word
    }

    pub fn reduced(&self) -> &MultiVector {
        &self.reduced
    }

    /// Group multiplication: concatenates words, multiplies reduced parts.
    pub fn group_product(&self, rhs: &PinElement) -> Result<PinElement, PinError> {
        if self.sig != rhs.sig {
            return Err(PinError::WrongSignature {
                got_p: rhs.sig.p(),
                got_q: rhs.sig.q(),
                want_p: self.sig.p(),
                want_q: self.sig.q(),
            });
        }
        let mut word = self.word.clone();
        word.extend(rhs.word.iter().cloned());
        Ok(PinElement {
            sig: self.sig,
            word,
            reduced: self.reduced.product(&rhs.reduced)?,
        })
    }

    /// The element −g, still presented by a word: appends a two-letter word
    /// reducing to −1 ([−e₁,e₁] when e₁² = +1, [e₁,e₁] when e₁² = −1).
    pub fn negated(&self) -> Result<PinElement, PinError> {
        if self.sig.dim() == 0 {
            return Err(PinError::NoGenerators);
        }
        let e1 = Vector::basis(self.sig, 1)?;
        let first = if self.sig.generator_square(1) > 0 {
            e1.scale(&-BigRational::one())
        } else {
            e1.clone()
        };
        let tail = pin_from_vectors(self.sig, vec![first, e1])?;
        self.group_product(&tail)
    }

    /// True iff the word length is even (equivalently, the reduced element
    /// is even-graded); those elements form the Spin subgroup.
    pub fn is_spin(&self) -> bool {
        self.word.len() % 2 == 0
    }

    /// Spinor norm sign: the scalar g·ḡ (Clifford conjugate), always ±1 on
    /// words of unit vectors.
    pub fn spinor_norm_sign(&self) -> i8 {
        let n = (&self.reduced * &self.reduced.conjugate()).scalar_part();
        if n == BigRational::one() {
            1
        } else if n == -BigRational::one() {
            -1
        } else {
            unreachable!("unit-vector words have spinor norm ±1")
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("pin element serializes")
    }

    pub fn from_json_str(s: &str) -> Result<PinElement, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[derive(Serialize, Deserialize)]
struct PinDto {
    sig: [u16; 2],
    word: Vec<Vec<String>>,
}

impl Serialize for PinElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let dto = PinDto {
            sig: [self.sig.p(), self.sig.q()],
            word: self
                .word
                .iter()
                .map(|v| v.coords().iter().map(format_ratio).collect())
                .collect(),
        };
        dto.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PinElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<PinElement, D::Error> {
        let dto = PinDto::deserialize(deserializer)?;
        if dto.sig[0] + dto.sig[1] > 62 {
            return Err(D::Error::custom("signature too large"));
        }
        let sig = Signature::new(dto.sig[0], dto.sig[1]);
        let mut word = Vec::with_capacity(dto.word.len());
        for coords in &dto.word {
            let parsed: Result<Vec<_>, _> = coords.iter().map(|c| parse_ratio(c)).collect();
            let v = Vector::new(sig, parsed.map_err(D::Error::custom)?).map_err(D::Error::custom)?;
            word.push(v);
        }
        pin_from_vectors(sig, word).map_err(D::Error::custom)
    }
}

/// Exact rational matrix preserving the diagonal form of signature (p,q):
/// MᵀGM = G, hence det M = ±1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalMatrix {
    sig: Signature,
    mat: RatMat,
}

/// Diagonal Gram matrix of the signature form.
pub fn gram_matrix(sig: Signature) -> RatMat {
    let n = sig.dim() as usize;
    RatMat::from_fn(n, n, |i, j| {
        if i == j {
            BigRational::from_integer(i64::from(sig.generator_square(i as u16 + 1)).into())
        } else {
            BigRational::zero()
        }
    })
}

impl OrthogonalMatrix {
    /// Validates MᵀGM = G before wrapping.
    pub fn new(sig: Signature, mat: RatMat) -> Result<OrthogonalMatrix, PinError> {
        let n = sig.dim() as usize;
        if mat.rows() != n || mat.cols() != n {
            return Err(PinError::Clifford(CliffordError::CoordinateCount {
                got: mat.rows() * mat.cols(),
                want: n * n,
            }));
        }
        let m = OrthogonalMatrix { sig, mat };
        if !m.respects_form() {
            return Err(PinError::Clifford(CliffordError::NotAVector));
        }
        Ok(m)
    }

    fn wrap(sig: Signature, mat: RatMat) -> OrthogonalMatrix {
        let m = OrthogonalMatrix { sig, mat };
        debug_assert!(m.respects_form());
        m
    }

    pub fn identity(sig: Signature) -> OrthogonalMatrix {
        OrthogonalMatrix::wrap(sig, RatMat::identity(sig.dim() as usize))
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn matrix(&self) -> &RatMat {
        &self.mat
    }

    pub fn respects_form(&self) -> bool {
        let g = gram_matrix(self.sig);
        self.mat.transpose().mul(&g).mul(&self.mat) == g
    }

    pub fn det(&self) -> BigRational {
        self.mat.det()
    }

    pub fn compose(&self, rhs: &OrthogonalMatrix) -> Result<OrthogonalMatrix, PinError> {
        if self.sig != rhs.sig {
            return Err(PinError::WrongSignature {
                got_p: rhs.sig.p(),
                got_q: rhs.sig.q(),
                want_p: self.sig.p(),
                want_q: self.sig.q(),
            });
        }
        Ok(OrthogonalMatrix::wrap(self.sig, self.mat.mul(&rhs.mat)))
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, PinError> {
        if v.sig() != self.sig {
            return Err(PinError::WrongSignature {
                got_p: v.sig().p(),
                got_q: v.sig().q(),
                want_p: self.sig.p(),
                want_q: self.sig.q(),
            });
        }
        Ok(Vector::new(self.sig, self.mat.mul_vec(v.coords()))?)
    }
}

#[derive(Serialize, Deserialize)]
struct OrthogonalDto {
    sig: [u16; 2],
    matrix: Vec<Vec<String>>,
}

impl Serialize for OrthogonalMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = self.sig.dim() as usize;
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| format_ratio(&self.mat[(i, j)])).collect())
            .collect();
        OrthogonalDto {
            sig: [self.sig.p(), self.sig.q()],
            matrix,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OrthogonalMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<OrthogonalMatrix, D::Error> {
        let dto = OrthogonalDto::deserialize(deserializer)?;
        if dto.sig[0] + dto.sig[1] > 62 {
            return Err(D::Error::custom("signature too large"));
        }
        let sig = Signature::new(dto.sig[0], dto.sig[1]);
        let n = sig.dim() as usize;
        if dto.matrix.len() != n || dto.matrix.iter().any(|r| r.len() != n) {
            return Err(D::Error::custom("matrix shape does not match signature"));
        }
        let mut rows = Vec::with_capacity(n);
        for r in &dto.matrix {
            let parsed: Result<Vec<_>, _> = r.iter().map(|c| parse_ratio(c)).collect();
            rows.push(parsed.map_err(D::Error::custom)?);
        }
        OrthogonalMatrix::new(sig, RatMat::from_rows(rows)).map_err(D::Error::custom)
    }
}

/// The double cover Pin(p,q) → O(p,q): the twisted adjoint
/// eⱼ ↦ α(g)·eⱼ·g⁻¹ of the reduced element, where α is the grade
/// involution and g⁻¹ = ḡ/(g·ḡ). Equals the composite of the word's
/// reflections; a homomorphism whose kernel on reduced elements is {±1}.
pub fn cover_map(g: &PinElement) -> OrthogonalMatrix {
    let sig = g.sig;
    let n = sig.dim() as usize;
    let conj = g.reduced.conjugate();
    let norm = (&g.reduced * &conj).scalar_part();
    assert!(
        norm.clone().abs().is_one(),
        "unit-vector words have spinor norm ±1"
    );
    let inverse = conj.scale(&norm.recip());
    let alpha = g.reduced.grade_involution();
    let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for j in 1..=n {
        let ej = MultiVector::generator(sig, j as u16).expect("generator in range");
        let image = &(&alpha * &ej) * &inverse;
        let v = Vector::from_multivector(&image).expect("twisted adjoint sends vectors to vectors");
        cols.push(v.coords().to_vec());
    }
    OrthogonalMatrix::wrap(sig, RatMat::from_fn(n, n, |i, j| cols[j][i].clone()))
}

/// (det of the cover image, spinor norm sign): a pair separating the four
/// components of Pin(p,q) on the tested subgroups when p,q ≥ 1.
pub fn component_invariant(g: &PinElement) -> (i8, i8) {
    let det = if g.word.len() % 2 == 0 { 1 } else { -1 };
    (det, g.spinor_norm_sign())
}

/// Pin⁺ₙ ↪ Spin(n,1): each word letter ξ maps to the length-2 word
/// [ξ̃, e_{n+1}] reducing to ξ̃·e_{n+1}, where ξ̃ has ξ's coordinates on the
/// first n generators. Image letters square to +1·(existing sign): the image
/// of a unit ξ squares to +1, matching ξ² = +1 in Cl(n,0), and even words
/// keep their reduced element verbatim on the first n generators.
pub fn embed_pin_plus(g: &PinElement) -> Result<PinElement, PinError> {
    if g.sig.q() != 0 {
        return Err(PinError::NotPinPlus {
            p: g.sig.p(),
            q: g.sig.q(),
        });
    }
    let n = g.sig.dim();
    let target = Signature::new(n, 1);
    embed_word(g, target)
}

/// Pin⁻ₙ ↪ Spin(n+1): each word letter ξ maps to [ξ̂, e_{n+1}] in
/// Cl(n+1,0), where ξ̂ carries ξ's coordinates on the first n (now
/// +1-square) generators. The image of a unit ξ squares to −1, matching
/// ξ² = −1 in Cl(0,n); on even words the map is the canonical isomorphism
/// onto the even subalgebra, which twists blades by the Clifford conjugate:
/// reduced ↦ (rename of conjugate(reduced)), e.g. e₁e₂ ↦ −ê₁ê₂.
pub fn embed_pin_minus(g: &PinElement) -> Result<PinElement, PinError> {
    if g.sig.p() != 0 {
        return Err(PinError::NotPinMinus {
            p: g.sig.p(),
            q: g.sig.q(),
        });
    }
    let n = g.sig.dim();
    let target = Signature::new(n + 1, 0);
    embed_word(g, target)
}

fn embed_word(g: &PinElement, target: Signature) -> Result<PinElement, PinError> {
    let n = g.sig.dim();
    let last = Vector::basis(target, n + 1)?;
    let mut word = Vec::with_capacity(2 * g.word.len());
    for v in &g.word {
        let mut coords = v.coords().to_vec();
        coords.push(BigRational::zero());
        word.push(Vector::new(target, coords)?);
        word.push(last.clone());
    }
    pin_from_vectors(target, word)
}

/// Degree in which the index of the structure's Dirac family lives:
/// Spin on an n-manifold indexes in KO⁻ⁿ, Pin⁺ shifts up to −(n−1), Pin⁻
/// shifts down to −(n+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TangentialStructure {
    Spin,
    PinPlus,
    PinMinus,
}

impl fmt::Display for TangentialStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangentialStructure::Spin => write!(f, "Spin"),
            TangentialStructure::PinPlus => write!(f, "Pin+"),
            TangentialStructure::PinMinus => write!(f, "Pin-"),
        }
    }
}

pub fn index_degree(structure: TangentialStructure, n: u32) -> i64 {
    let n = i64::from(n);
    match structure {
        TangentialStructure::Spin => -n,
        TangentialStructure::PinPlus => -(n - 1),
        TangentialStructure::PinMinus => -(n + 1),
    }
}

/// Multiplication table of a finite Pin or Spin group, with a recognized
/// isomorphism type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteGroupTable {
    pub labels: Vec<String>,
    /// table[i][j] = index of element i · element j.
    pub table: Vec<Vec<usize>>,
    pub isomorphism: String,
}

impl FiniteGroupTable {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Order of the i-th element under the table's multiplication.
    pub fn element_order(&self, i: usize) -> usize {
        let identity = 0;
        let mut acc = i;
        let mut k = 1;
        while acc != identity {
            acc = self.table[acc][i];
            k += 1;
            assert!(k <= self.order(), "element order exceeds group order");
        }
        k
    }
}

/// Enumerates Pin(p,q) (or its Spin part) when it is finite, i.e. n = 1:
/// Pin⁺₁ = {±1, ±e₁} ≅ μ₂×μ₂, Pin⁻₁ = {±1, ±e₁} ≅ μ₄, Spin₁ = {±1} ≅ μ₂.
pub fn enumerate_finite_pin(
    sig: Signature,
    spin_only: bool,
) -> Result<FiniteGroupTable, PinError> {
    if sig.dim() != 1 {
        return Err(PinError::InfiniteGroup {
            p: sig.p(),
            q: sig.q(),
        });
    }
    let one = PinElement::identity(sig);
    let minus_one = one.negated()?;
    let e1 = pin_from_vectors(sig, vec![Vector::basis(sig, 1)?])?;
    let minus_e1 = e1.negated()?;
    let (elements, labels): (Vec<PinElement>, Vec<String>) = if spin_only {
        (
            vec![one, minus_one],
            vec!["1".into(), "-1".into()],
        )
    } else {
        (
            vec![one, minus_one, e1, minus_e1],
            vec!["1".into(), "-1".into(), "e1".into(), "-e1".into()],
        )
    };
    let index: HashMap<&MultiVector, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, g)| (g.reduced(), i))
        .collect();
    let mut table = Vec::with_capacity(elements.len());
    for a in &elements {
        let mut row = Vec::with_capacity(elements.len());
        for b in &elements {
            let prod = a.group_product(b)?;
            row.push(*index.get(prod.reduced()).expect("group is closed"));
        }
        table.push(row);
    }
    let mut out = FiniteGroupTable {
        labels,
        table,
        isomorphism: String::new(),
    };
    out.isomorphism = match out.order() {
        2 => "μ₂".to_string(),
        4 => {
            if (0..4).any(|i| out.element_order(i) == 4) {
                "μ₄".to_string()
            } else {
                "μ₂ × μ₂".to_string()
            }
        }
        _ => unreachable!("n = 1 groups have order 2 or 4"),
    };
    Ok(out)
}

/// One row of the low-dimensional special-isomorphism table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowDimIsomorphism {
    pub n: u32,
    pub spin: &'static str,
    pub pin_plus: &'static str,
    pub pin_minus: &'static str,
}

/// Special isomorphisms of Spin and Pin groups for n ≤ 3 (documentation
/// data; only the n = 1 row is enumerable, see [`enumerate_finite_pin`]).
pub fn low_dim_isomorphisms() -> &'static [LowDimIsomorphism] {
    &[
        LowDimIsomorphism {
            n: 1,
            spin: "μ₂",
            pin_plus: "μ₂ × μ₂",
            pin_minus: "μ₄",
        },
        LowDimIsomorphism {
            n: 2,
            spin: "𝕋",
            pin_plus: "μ₂ ⋉ 𝕋",
            pin_minus: "(μ₄ ⋉ 𝕋)/μ₂",
        },
        LowDimIsomorphism {
            n: 3,
            spin: "SU₂",
            pin_plus: "(μ₄ × SU₂)/μ₂",
            pin_minus: "μ₂ × SU₂",
        },
    ]
}

/// One row of the tenfold-way tables: the structure group family H(s), the
/// kernel K of H_n(s) → O_n, the Cartan label of the associated symmetric
/// space, and the coefficient algebra D(s) with H_n(s) ↪ Cl(n,0) ⊗ D(s).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TenfoldRow {
    pub s: i8,
    pub group: &'static str,
    pub kernel: &'static str,
    pub cartan: &'static str,
    pub algebra: &'static str,
}

/// The two complex-case rows (documentation data).
pub fn tenfold_way_complex() -> &'static [TenfoldRow] {
    &[
        TenfoldRow {
            s: 0,
            group: "Spinᶜ",
            kernel: "𝕋",
            cartan: "A",
            algebra: "ℂ",
        },
        TenfoldRow {
            s: 1,
            group: "Pinᶜ",
            kernel: "𝕋",
            cartan: "AIII",
            algebra: "Clᶜ₋₁",
        },
    ]
}

/// The eight real-case rows in table order (documentation data).
pub fn tenfold_way_real() -> &'static [TenfoldRow] {
    &[
        TenfoldRow {
            s: 0,
            group: "Spin",
            kernel: "μ₂",
            cartan: "D",
            algebra: "ℝ",
        },
        TenfoldRow {
            s: -1,
            group: "Pin⁺",
            kernel: "μ₂",
            cartan: "DIII",
            algebra: "Cl₋₁",
        },
        TenfoldRow {
            s: -2,
            group: "Pin⁺ ⋉_{±1} 𝕋",
            kernel: "𝕋",
            cartan: "AII",
            algebra: "Cl₋₂",
        },
        TenfoldRow {
            s: -3,
            group: "Pin⁻ ×_{±1} Sp₁",
            kernel: "Sp₁",
            cartan: "CII",
            algebra: "Cl₋₃",
        },
        TenfoldRow {
            s: 4,
            group: "Spin ×_{±1} Sp₁",
            kernel: "Sp₁",
            cartan: "C",
            algebra: "ℍ",
        },
        TenfoldRow {
            s: 3,
            group: "Pin⁺ ×_{±1} Sp₁",
            kernel: "Sp₁",
            cartan: "CI",
            algebra: "Cl₊₃",
        },
        TenfoldRow {
            s: 2,
            group: "Pin⁻ ⋉_{±1} 𝕋",
            kernel: "𝕋",
            cartan: "AI",
            algebra: "Cl₊₂",
        },
        TenfoldRow {
            s: 1,
            group: "Pin⁻",
            kernel: "μ₂",
            cartan: "BDI",
            algebra: "Cl₊₁",
        },
    ]
}
