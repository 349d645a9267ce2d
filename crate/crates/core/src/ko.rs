//! KO coefficient groups of a point and the small exact rings they feed.
//!
//! Two period-8 tables: the topological groups KO⁻ᵐ(pt), which read
//! ℤ, ℤ/2, ℤ/2, 0, ℤ, 0, 0, 0 for m ≡ 0…7, and their differential
//! refinements, which replace the zeros in degrees 3 and 7 (mod 8) by ℝ/ℤ
//! — the flat classes sitting one degree below an integral ℤ. The complex
//! analogue alternates ℤ with ℝ/ℤ.
//!
//! Values of the η-style evaluators land in ℚ/ℤ, carried here as exactly
//! reduced fractions in [0,1). The reduced KO ring of ℝP²⁰ is ℤ/2¹¹ on the
//! generator x = 1 − [H] with x² = 2x; both the ring and the evaluator that
//! reads a/2¹¹ off a class a·x are exact.

use num::{BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::rational::{format_ratio, parse_ratio};

/// Isomorphism type of a coefficient group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KoGroup {
    Z,
    Z2,
    Zero,
    RmodZ,
    QmodZ,
    /// ℤ/2^k.
    Cyclic2 { k: u32 },
}

impl KoGroup {
    pub fn label(&self) -> String {
        match self {
            KoGroup::Z => "Z".to_string(),
            KoGroup::Z2 => "Z/2".to_string(),
            KoGroup::Zero => "0".to_string(),
            KoGroup::RmodZ => "R/Z".to_string(),
            KoGroup::QmodZ => "Q/Z".to_string(),
            KoGroup::Cyclic2 { k } => format!("Z/{}", 1u64 << k),
        }
    }
}

impl fmt::Display for KoGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl Serialize for KoGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.label())
    }
}

/// KO⁻ᵐ(pt), topological: ℤ in degrees 0, 4; ℤ/2 in 1, 2; zero otherwise
/// (period 8).
pub fn ko_point(m: i64) -> KoGroup {
    match m.rem_euclid(8) {
        0 | 4 => KoGroup::Z,
        1 | 2 => KoGroup::Z2,
        _ => KoGroup::Zero,
    }
}

/// Differential KO⁻ᵐ(pt): the topological groups, except that degrees
/// 3 and 7 (mod 8) hold ℝ/ℤ — the flat part under the ℤ one degree up.
pub fn ko_point_differential(m: i64) -> KoGroup {
    match m.rem_euclid(8) {
        0 | 4 => KoGroup::Z,
        1 | 2 => KoGroup::Z2,
        3 | 7 => KoGroup::RmodZ,
        _ => KoGroup::Zero,
    }
}

/// Differential complex K⁻ᵐ(pt): ℤ in even degrees, flat ℝ/ℤ in odd
/// degrees (period 2).
pub fn complex_k_point(m: i64) -> KoGroup {
    if m.rem_euclid(2) == 0 {
        KoGroup::Z
    } else {
        KoGroup::RmodZ
    }
}

/// Element of ℚ/ℤ: a fully reduced fraction in [0,1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QModZ(BigRational);

impl QModZ {
    pub fn new(r: BigRational) -> QModZ {
        QModZ(&r - r.floor())
    }

    pub fn zero() -> QModZ {
        QModZ(BigRational::zero())
    }

    pub fn from_i64(num: i64, den: i64) -> QModZ {
        QModZ::new(BigRational::new(num.into(), den.into()))
    }

    /// The canonical representative in [0,1).
    pub fn fraction(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, rhs: &QModZ) -> QModZ {
        QModZ::new(&self.0 + &rhs.0)
    }

    pub fn neg(&self) -> QModZ {
        QModZ::new(-self.0.clone())
    }
}

impl fmt::Display for QModZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_ratio(&self.0))
    }
}

impl Serialize for QModZ {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_ratio(&self.0))
    }
}

impl<'de> Deserialize<'de> for QModZ {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<QModZ, D::Error> {
        let s = String::deserialize(deserializer)?;
        let r = parse_ratio(&s).map_err(D::Error::custom)?;
        if r.is_negative() || r >= BigRational::one() {
            return Err(D::Error::custom("ℚ/ℤ representative must lie in [0,1)"));
        }
        Ok(QModZ(r))
    }
}

/// Class a·x in the reduced KO ring of ℝP^N, where x = 1 − [H] generates a
/// cyclic group of order 2^k and x² = 2x. Only k = 11 (N = 20) is used by
/// the evaluators, but the modulus is carried explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RpClass {
    /// Coefficient of x, reduced mod 2^k.
    pub a: u64,
    /// The class group is ℤ/2^k.
    pub k: u32,
}

pub const RP20_ORDER_EXP: u32 = 11;

impl RpClass {
    pub fn new(a: u64, k: u32) -> RpClass {
        assert!(k <= 63, "modulus exponent too large");
        RpClass { a: a % (1 << k), k }
    }

    /// Class in the ring the ℝP²⁰ evaluators use (k = 11).
    pub fn rp20(a: u64) -> RpClass {
        RpClass::new(a, RP20_ORDER_EXP)
    }

    pub fn modulus(&self) -> u64 {
        1 << self.k
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0
    }
}

/// Addition in the class group ℤ/2^k · x.
pub fn rp_add(a: RpClass, b: RpClass) -> RpClass {
    assert_eq!(a.k, b.k, "mixed moduli");
    RpClass::new(a.a.wrapping_add(b.a) % a.modulus(), a.k)
}

/// Multiplication induced by x² = 2x: (a·x)(b·x) = (2ab mod 2^k)·x.
pub fn rp_mul(a: RpClass, b: RpClass) -> RpClass {
    assert_eq!(a.k, b.k, "mixed moduli");
    let m = u128::from(a.modulus());
    let prod = (2 * u128::from(a.a) * u128::from(b.a)) % m;
    RpClass::new(prod as u64, a.k)
}

/// Reads the η-value off a pushforward class: a·x ↦ a/2^k mod 1.
pub fn zhang_eta(pushforward: RpClass) -> QModZ {
    QModZ::new(BigRational::new(
        pushforward.a.into(),
        pushforward.modulus().into(),
    ))
}
