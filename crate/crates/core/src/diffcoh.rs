//! Differential cocycles on a finite simplicial complex, with exact
//! rational arithmetic throughout.
//!
//! A differential cocycle of degree q on X is a triple t = (c, h, ω) with
//! c an integer q-cocycle, ω a rational q-cocycle, and h a rational
//! (q−1)-cochain satisfying δh = ω − c. Two cocycles are identified when
//! they differ by (δb, −b − δk, 0) for an integer (q−1)-cochain b and a
//! rational (q−2)-cochain k. The resulting group refines H^q(X;ℤ): the
//! characteristic class map t ↦ [c] is onto, its flat part (ω = 0) is
//! H^{q−1}(X;ℝ/ℤ), and the curvature map t ↦ ω lands on exactly the
//! closed forms with integral periods.
//!
//! The model is exact: "real" coefficients are represented by ℚ, which
//! keeps every period computation decidable and bit-stable.

pub mod complex;
pub mod solver;

pub use complex::{circle, point, projective_plane, torus, ComplexError, SimplicialComplex};
pub use solver::{CohomologyClass, DegreeSolver};

use crate::rational::{format_ratio, parse_ratio};
use num::{BigInt, BigRational, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiffcohError {
    #[error("differential cocycles require degree q ≥ 1, got {0}")]
    InvalidDegree(usize),
    #[error("{field} has length {got}, the complex wants {want}")]
    LengthMismatch {
        field: &'static str,
        got: usize,
        want: usize,
    },
    #[error("degrees {0} and {1} do not match")]
    DegreeMismatch(usize, usize),
    #[error("the triple does not satisfy the cocycle conditions")]
    NotACocycle,
    #[error("δu is not integral at simplex index {0}; u does not define an ℝ/ℤ cocycle")]
    NotFlat(usize),
    #[error("malformed cocycle JSON: {0}")]
    Json(String),
}

/// Degree-q differential cocycle (c, h, ω) on a fixed complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialCocycle {
    q: usize,
    c: Vec<BigInt>,
    h: Vec<BigRational>,
    omega: Vec<BigRational>,
}

impl DifferentialCocycle {
    /// Validates the shape (degree ≥ 1, cochain lengths) but not the
    /// cocycle conditions; see [`check_cocycle`] for those.
    pub fn new(
        x: &SimplicialComplex,
        q: usize,
        c: Vec<BigInt>,
        h: Vec<BigRational>,
        omega: Vec<BigRational>,
    ) -> Result<DifferentialCocycle, DiffcohError> {
        if q == 0 {
            return Err(DiffcohError::InvalidDegree(q));
        }
        let want_q = x.count(q);
        let want_h = x.count(q - 1);
        if c.len() != want_q {
            return Err(DiffcohError::LengthMismatch {
                field: "c",
                got: c.len(),
                want: want_q,
            });
        }
        if h.len() != want_h {
            return Err(DiffcohError::LengthMismatch {
                field: "h",
                got: h.len(),
                want: want_h,
            });
        }
        if omega.len() != want_q {
            return Err(DiffcohError::LengthMismatch {
                field: "omega",
                got: omega.len(),
                want: want_q,
            });
        }
        Ok(DifferentialCocycle { q, c, h, omega })
    }

    pub fn zero(x: &SimplicialComplex, q: usize) -> Result<DifferentialCocycle, DiffcohError> {
        DifferentialCocycle::new(
            x,
            q,
            vec![BigInt::zero(); x.count(q)],
            vec![BigRational::zero(); x.count(q - 1)],
            vec![BigRational::zero(); x.count(q)],
        )
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn c(&self) -> &[BigInt] {
        &self.c
    }

    pub fn h(&self) -> &[BigRational] {
        &self.h
    }

    /// The curvature ω.
    pub fn curvature(&self) -> &[BigRational] {
        &self.omega
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("cocycle serialization cannot fail")
    }

    pub fn from_json_str(
        x: &SimplicialComplex,
        s: &str,
    ) -> Result<DifferentialCocycle, DiffcohError> {
        let dto: CocycleDto =
            serde_json::from_str(s).map_err(|e| DiffcohError::Json(e.to_string()))?;
        let parse_all = |v: &[String]| -> Result<Vec<BigRational>, DiffcohError> {
            v.iter()
                .map(|s| parse_ratio(s).map_err(|e| DiffcohError::Json(e.to_string())))
                .collect()
        };
        DifferentialCocycle::new(
            x,
            dto.q,
            dto.c.into_iter().map(BigInt::from).collect(),
            parse_all(&dto.h)?,
            parse_all(&dto.omega)?,
        )
    }
}

#[derive(Deserialize)]
struct CocycleDto {
    q: usize,
    c: Vec<i64>,
    h: Vec<String>,
    omega: Vec<String>,
}

impl Serialize for DifferentialCocycle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DifferentialCocycle", 4)?;
        s.serialize_field("q", &self.q)?;
        let c: Vec<i64> = self
            .c
            .iter()
            .map(|v| i64::try_from(v).expect("integer cochain entry fits in i64"))
            .collect();
        s.serialize_field("c", &c)?;
        let h: Vec<String> = self.h.iter().map(format_ratio).collect();
        s.serialize_field("h", &h)?;
        let omega: Vec<String> = self.omega.iter().map(format_ratio).collect();
        s.serialize_field("omega", &omega)?;
        s.end()
    }
}

fn shape_checked<'a>(
    x: &SimplicialComplex,
    t: &'a DifferentialCocycle,
) -> Result<&'a DifferentialCocycle, DiffcohError> {
    // Re-validate against this complex: the cocycle may have been built
    // against a different one.
    DifferentialCocycle::new(x, t.q, t.c.clone(), t.h.clone(), t.omega.clone())?;
    Ok(t)
}

/// Whether the triple satisfies δc = 0, δh = ω − c, and δω = 0.
pub fn check_cocycle(
    x: &SimplicialComplex,
    t: &DifferentialCocycle,
) -> Result<bool, DiffcohError> {
    shape_checked(x, t)?;
    let e = x.coboundary_matrix(t.q);
    if e.mul_vec(&t.c).iter().any(|v| !v.is_zero()) {
        return Ok(false);
    }
    if e.mul_rat_vec(&t.omega).iter().any(|v| !v.is_zero()) {
        return Ok(false);
    }
    let dh = x.coboundary_matrix(t.q - 1).mul_rat_vec(&t.h);
    let ok = dh
        .iter()
        .zip(t.omega.iter().zip(t.c.iter()))
        .all(|(l, (w, c))| *l == w - BigRational::from(c.clone()));
    Ok(ok)
}

/// Componentwise sum; differential cocycles of one degree form a group.
pub fn add_cocycles(
    x: &SimplicialComplex,
    a: &DifferentialCocycle,
    b: &DifferentialCocycle,
) -> Result<DifferentialCocycle, DiffcohError> {
    shape_checked(x, a)?;
    shape_checked(x, b)?;
    if a.q != b.q {
        return Err(DiffcohError::DegreeMismatch(a.q, b.q));
    }
    Ok(DifferentialCocycle {
        q: a.q,
        c: a.c.iter().zip(&b.c).map(|(u, v)| u + v).collect(),
        h: a.h.iter().zip(&b.h).map(|(u, v)| u + v).collect(),
        omega: a.omega.iter().zip(&b.omega).map(|(u, v)| u + v).collect(),
    })
}

pub fn negate_cocycle(
    x: &SimplicialComplex,
    t: &DifferentialCocycle,
) -> Result<DifferentialCocycle, DiffcohError> {
    shape_checked(x, t)?;
    Ok(DifferentialCocycle {
        q: t.q,
        c: t.c.iter().map(|v| -v).collect(),
        h: t.h.iter().map(|v| -v).collect(),
        omega: t.omega.iter().map(|v| -v).collect(),
    })
}

/// The characteristic class [c] ∈ H^q(X;ℤ).
pub fn char_class(
    x: &SimplicialComplex,
    t: &DifferentialCocycle,
) -> Result<CohomologyClass, DiffcohError> {
    if !check_cocycle(x, t)? {
        return Err(DiffcohError::NotACocycle);
    }
    DegreeSolver::new(x, t.q)
        .class_of(&t.c)
        .ok_or(DiffcohError::NotACocycle)
}

/// Embeds a class of H^{q−1}(X;ℝ/ℤ), given by a rational cochain u whose
/// coboundary is integral, as the flat cocycle (−δu, u, 0) of degree q.
pub fn flat_inclusion(
    x: &SimplicialComplex,
    q: usize,
    u: &[BigRational],
) -> Result<DifferentialCocycle, DiffcohError> {
    if q == 0 {
        return Err(DiffcohError::InvalidDegree(q));
    }
    let want = x.count(q - 1);
    if u.len() != want {
        return Err(DiffcohError::LengthMismatch {
            field: "u",
            got: u.len(),
            want,
        });
    }
    let du = x.coboundary_matrix(q - 1).mul_rat_vec(u);
    let mut c = Vec::with_capacity(du.len());
    for (i, v) in du.iter().enumerate() {
        if !v.is_integer() {
            return Err(DiffcohError::NotFlat(i));
        }
        c.push(-v.to_integer());
    }
    DifferentialCocycle::new(
        x,
        q,
        c,
        u.to_vec(),
        vec![BigRational::zero(); x.count(q)],
    )
}

/// Whether t₁ − t₂ is of the form (δb, −b − δk, 0) with b integral and k
/// rational. Requires equal curvatures; then a gauge b with δb = c₁ − c₂
/// must exist over ℤ, and after absorbing it the holonomy difference must
/// be an integral class.
pub fn equivalent(
    x: &SimplicialComplex,
    t1: &DifferentialCocycle,
    t2: &DifferentialCocycle,
) -> Result<bool, DiffcohError> {
    if t1.q != t2.q {
        return Err(DiffcohError::DegreeMismatch(t1.q, t2.q));
    }
    if !check_cocycle(x, t1)? || !check_cocycle(x, t2)? {
        return Err(DiffcohError::NotACocycle);
    }
    if t1.omega != t2.omega {
        return Ok(false);
    }
    let diff_c: Vec<BigInt> = t1.c.iter().zip(&t2.c).map(|(a, b)| a - b).collect();
    let Some(b) = DegreeSolver::new(x, t1.q).solve_coboundary(&diff_c) else {
        return Ok(false);
    };
    // w = h₁ − h₂ + b is closed: δw = (ω − c₁) − (ω − c₂) + (c₁ − c₂) = 0.
    let w: Vec<BigRational> = t1
        .h
        .iter()
        .zip(&t2.h)
        .zip(&b)
        .map(|((u, v), bi)| u - v + BigRational::from(bi.clone()))
        .collect();
    let coords = DegreeSolver::new(x, t1.q - 1)
        .rational_free_coords(&w)
        .expect("holonomy difference of equal-curvature cocycles is closed");
    Ok(coords.iter().all(BigRational::is_integer))
}

/// Whether a closed rational q-cochain has integral periods, i.e. arises
/// as the curvature of some differential cocycle.
pub fn is_realizable_curvature(
    x: &SimplicialComplex,
    q: usize,
    omega: &[BigRational],
) -> Result<bool, DiffcohError> {
    let want = x.count(q);
    if omega.len() != want {
        return Err(DiffcohError::LengthMismatch {
            field: "omega",
            got: omega.len(),
            want,
        });
    }
    match DegreeSolver::new(x, q).rational_free_coords(omega) {
        None => Ok(false),
        Some(coords) => Ok(coords.iter().all(BigRational::is_integer)),
    }
}

/// Coefficient choices for ordinary cohomology of the complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    Integer,
    Real,
    RealModZ,
}

/// A finitely presented cohomology group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyGroup {
    /// ℤ^free_rank ⊕ ⊕ᵢ ℤ/dᵢ
    Integral {
        free_rank: usize,
        torsion: Vec<BigInt>,
    },
    /// ℝ^dimension
    Real { dimension: usize },
    /// (ℝ/ℤ)^torus_rank ⊕ ⊕ᵢ ℤ/dᵢ
    RealModZ {
        torus_rank: usize,
        component_group: Vec<BigInt>,
    },
}

impl CohomologyGroup {
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        match self {
            CohomologyGroup::Integral { free_rank, torsion } => {
                parts.extend(std::iter::repeat("Z".to_string()).take(*free_rank));
                parts.extend(torsion.iter().map(|d| format!("Z/{d}")));
            }
            CohomologyGroup::Real { dimension } => match dimension {
                0 => {}
                1 => parts.push("R".to_string()),
                d => parts.push(format!("R^{d}")),
            },
            CohomologyGroup::RealModZ {
                torus_rank,
                component_group,
            } => {
                match torus_rank {
                    0 => {}
                    1 => parts.push("R/Z".to_string()),
                    r => parts.push(format!("(R/Z)^{r}")),
                }
                parts.extend(component_group.iter().map(|d| format!("Z/{d}")));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

impl std::fmt::Display for CohomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for CohomologyGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let big_strings =
            |v: &[BigInt]| -> Vec<String> { v.iter().map(BigInt::to_string).collect() };
        match self {
            CohomologyGroup::Integral { free_rank, torsion } => {
                let mut s = serializer.serialize_struct("CohomologyGroup", 3)?;
                s.serialize_field("label", &self.label())?;
                s.serialize_field("free_rank", free_rank)?;
                s.serialize_field("torsion", &big_strings(torsion))?;
                s.end()
            }
            CohomologyGroup::Real { dimension } => {
                let mut s = serializer.serialize_struct("CohomologyGroup", 2)?;
                s.serialize_field("label", &self.label())?;
                s.serialize_field("dimension", dimension)?;
                s.end()
            }
            CohomologyGroup::RealModZ {
                torus_rank,
                component_group,
            } => {
                let mut s = serializer.serialize_struct("CohomologyGroup", 3)?;
                s.serialize_field("label", &self.label())?;
                s.serialize_field("torus_rank", torus_rank)?;
                s.serialize_field("component_group", &big_strings(component_group))?;
                s.end()
            }
        }
    }
}

/// H^q(X; A) for A ∈ {ℤ, ℝ, ℝ/ℤ}. The ℝ/ℤ case uses the Bockstein
/// sequence of 0 → ℤ → ℝ → ℝ/ℤ → 0: a torus of rank b_q extended by
/// Tors H^{q+1}(X;ℤ).
pub fn cohomology(x: &SimplicialComplex, q: usize, coefficients: Coefficients) -> CohomologyGroup {
    match coefficients {
        Coefficients::Integer => {
            let s = DegreeSolver::new(x, q);
            CohomologyGroup::Integral {
                free_rank: s.betti(),
                torsion: s.torsion_moduli(),
            }
        }
        Coefficients::Real => CohomologyGroup::Real {
            dimension: DegreeSolver::new(x, q).betti(),
        },
        Coefficients::RealModZ => CohomologyGroup::RealModZ {
            torus_rank: DegreeSolver::new(x, q).betti(),
            component_group: DegreeSolver::new(x, q + 1).torsion_moduli(),
        },
    }
}

/// Component group of the flat classes in degree q, i.e. of
/// H^{q−1}(X;ℝ/ℤ): canonically Tors H^q(X;ℤ).
pub fn flat_component_group(x: &SimplicialComplex, q: usize) -> Vec<BigInt> {
    DegreeSolver::new(x, q).torsion_moduli()
}
