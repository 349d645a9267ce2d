//! Closed-form ℚ/ℤ evaluators for η-style invariants of Pin manifolds,
//! plus the small bordism data tables they calibrate against.
//!
//! Three evaluation routes are exposed. On a manifold that happens to be
//! Spin, the value is half an integer index: ind/2 mod 1. The fixed-point
//! route sums ε_f·τ_f over the fixed points of an involution on a bounding
//! manifold and divides by 2^{(n+4)/2} — the literal dimension-12 formula
//! has denominator 2⁸, and other dimensions n ≡ 4 mod 8 sit behind an
//! explicit opt-in. The third route reads the value off a pushforward to
//! the reduced KO ring of ℝP²⁰; [`consistency_check_pushforward`] encodes
//! a ℚ/ℤ value as such a class so that the two directions invert each
//! other exactly.

use crate::ko::{QModZ, RpClass, RP20_ORDER_EXP};
use crate::rational::{format_ratio, parse_ratio};
use num::{BigInt, BigRational, One, ToPrimitive};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EtaError {
    #[error("dimension {n} needs the generalized mode; the literal formula is for n = 12")]
    UnsupportedDimension { n: u32 },
    #[error("generalized fixed-point formula needs n ≡ 4 mod 8, got {n}")]
    DimensionNotFourModEight { n: u32 },
    #[error("epsilon must be +1 or -1, got {value}")]
    BadEpsilon { value: i64 },
    #[error("value {value} is not a k/2¹¹ class (denominator must divide 2048)")]
    DenominatorOutsideRange { value: String },
    #[error("no bordism table entry for ({structure}, {dimension})")]
    MissingEntry {
        structure: BordismStructure,
        dimension: u32,
    },
}

/// One fixed point of the extended involution: its frame sign ε = ±1 and
/// the trace τ of the lift on the fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointDatum {
    epsilon: i8,
    tau: BigRational,
}

impl FixedPointDatum {
    pub fn new(epsilon: i8, tau: BigRational) -> Result<FixedPointDatum, EtaError> {
        if epsilon != 1 && epsilon != -1 {
            return Err(EtaError::BadEpsilon {
                value: i64::from(epsilon),
            });
        }
        Ok(FixedPointDatum { epsilon, tau })
    }

    pub fn epsilon(&self) -> i8 {
        self.epsilon
    }

    pub fn tau(&self) -> &BigRational {
        &self.tau
    }

    /// Same datum with the frame sign flipped.
    pub fn flipped(&self) -> FixedPointDatum {
        FixedPointDatum {
            epsilon: -self.epsilon,
            tau: self.tau.clone(),
        }
    }
}

impl Serialize for FixedPointDatum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FixedPointDatum", 2)?;
        s.serialize_field("epsilon", &self.epsilon)?;
        s.serialize_field("tau", &format_ratio(&self.tau))?;
        s.end()
    }
}

#[derive(Deserialize)]
struct FixedPointDto {
    epsilon: i64,
    tau: String,
}

impl<'de> Deserialize<'de> for FixedPointDatum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<FixedPointDatum, D::Error> {
        let dto = FixedPointDto::deserialize(deserializer)?;
        let tau = parse_ratio(&dto.tau).map_err(D::Error::custom)?;
        let epsilon = i8::try_from(dto.epsilon)
            .map_err(|_| D::Error::custom(EtaError::BadEpsilon { value: dto.epsilon }))?;
        FixedPointDatum::new(epsilon, tau).map_err(D::Error::custom)
    }
}

/// Fixed-point evaluation Σ_f ε_f τ_f / 2^{(n+4)/2} mod 1. Without
/// `generalized`, only the literal n = 12 case (denominator 2⁸) is
/// accepted; with it, any n ≡ 4 mod 8.
pub fn stolz_eta(
    data: &[FixedPointDatum],
    n: u32,
    generalized: bool,
) -> Result<QModZ, EtaError> {
    if !generalized && n != 12 {
        return Err(EtaError::UnsupportedDimension { n });
    }
    if n % 8 != 4 {
        return Err(EtaError::DimensionNotFourModEight { n });
    }
    let denom: BigInt = BigInt::one() << ((n + 4) / 2);
    let mut sum = BigRational::from_integer(0.into());
    for d in data {
        if d.epsilon > 0 {
            sum += &d.tau;
        } else {
            sum -= &d.tau;
        }
    }
    Ok(QModZ::new(sum / BigRational::from_integer(denom)))
}

/// The Spin reduction: the invariant is half the integer index, mod 1, so
/// it lands in {0, 1/2} ⊂ ℚ/ℤ.
pub fn spin_case_eta(index: i64) -> QModZ {
    QModZ::from_i64(index, 2)
}

/// Encodes a value ξ/2 = s/t (t | 2¹¹) as the pushforward class
/// a·x ∈ ℤ/2¹¹ with a = s·2¹¹/t, the exact inverse of [`zhang_eta`].
pub fn consistency_check_pushforward(xi_half: &QModZ) -> Result<RpClass, EtaError> {
    let frac = xi_half.fraction();
    let modulus: u64 = 1 << RP20_ORDER_EXP;
    let den = match frac.denom().to_u64() {
        Some(d) if d <= modulus && modulus % d == 0 => d,
        _ => {
            return Err(EtaError::DenominatorOutsideRange {
                value: format_ratio(frac),
            })
        }
    };
    let num = frac
        .numer()
        .to_u64()
        .expect("canonical representative lies in [0,1)");
    Ok(RpClass::rp20(num * (modulus / den)))
}

/// Tangential structure labels used by the bordism tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BordismStructure {
    PinPlus,
    PinMinus,
    Spin,
    /// Pin⁺ together with a twisted integral lift of w₄.
    Mc,
}

impl fmt::Display for BordismStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BordismStructure::PinPlus => write!(f, "Pin+"),
            BordismStructure::PinMinus => write!(f, "Pin-"),
            BordismStructure::Spin => write!(f, "Spin"),
            BordismStructure::Mc => write!(f, "mc"),
        }
    }
}

impl FromStr for BordismStructure {
    type Err = String;

    fn from_str(s: &str) -> Result<BordismStructure, String> {
        match s.to_ascii_lowercase().as_str() {
            "pin+" | "pinplus" | "pin_plus" => Ok(BordismStructure::PinPlus),
            "pin-" | "pinminus" | "pin_minus" => Ok(BordismStructure::PinMinus),
            "spin" => Ok(BordismStructure::Spin),
            "mc" => Ok(BordismStructure::Mc),
            other => Err(format!("unknown structure {other:?}")),
        }
    }
}

/// One row of the shipped bordism data: the group (as a label) and named
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BordismEntry {
    pub structure: BordismStructure,
    pub dimension: u32,
    pub group: &'static str,
    pub generators: &'static [&'static str],
}

impl Serialize for BordismEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BordismEntry", 4)?;
        s.serialize_field("structure", &self.structure.to_string())?;
        s.serialize_field("dimension", &self.dimension)?;
        s.serialize_field("group", self.group)?;
        s.serialize_field("generators", self.generators)?;
        s.end()
    }
}

const BORDISM_TABLE: &[BordismEntry] = &[
    BordismEntry {
        structure: BordismStructure::PinPlus,
        dimension: 2,
        group: "Z/2",
        generators: &["Klein bottle, nonbounding Pin⁺ structure"],
    },
    BordismEntry {
        structure: BordismStructure::PinPlus,
        dimension: 4,
        group: "Z/16",
        generators: &["ℝP⁴"],
    },
    BordismEntry {
        structure: BordismStructure::Mc,
        dimension: 12,
        group: "generated at the prime 2 by six listed manifolds",
        generators: &[
            "K × ℍP² (K the K3 surface)",
            "ℝP⁴ × B (B an 8-dimensional Bott manifold)",
            "(ℝP⁴ # ℝP⁴) × B",
            "W′₀ (fiber bundle ℍP² # ℍP² → W′₀ → ℝP⁴)",
            "W″₀ (fiber bundle ℝP⁸ → W″₀ → ℍP¹)",
            "W₁ (fiber bundle ℍP² → W₁ → ℂP¹ × ℂP¹)",
        ],
    },
];

pub fn bordism_lookup(
    structure: BordismStructure,
    dimension: u32,
) -> Result<&'static BordismEntry, EtaError> {
    BORDISM_TABLE
        .iter()
        .find(|e| e.structure == structure && e.dimension == dimension)
        .ok_or(EtaError::MissingEntry {
            structure,
            dimension,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ko::{zhang_eta, KoGroup};
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn datum(e: i8, n: i64, d: i64) -> FixedPointDatum {
        FixedPointDatum::new(e, r(n, d)).unwrap()
    }

    #[test]
    fn stolz_examples() {
        let v = stolz_eta(&[datum(1, 2, 1)], 12, false).unwrap();
        assert_eq!(v, QModZ::from_i64(1, 128));
        assert_eq!(stolz_eta(&[], 12, false).unwrap(), QModZ::zero());
        // flagged n = 4: single unit trace hits the generator of (1/16)ℤ/ℤ
        assert_eq!(
            stolz_eta(&[datum(1, 1, 1)], 4, true).unwrap(),
            QModZ::from_i64(1, 16)
        );
        assert_eq!(
            stolz_eta(&[], 4, false),
            Err(EtaError::UnsupportedDimension { n: 4 })
        );
        assert_eq!(
            stolz_eta(&[], 10, true),
            Err(EtaError::DimensionNotFourModEight { n: 10 })
        );
        assert_eq!(
            stolz_eta(&[datum(1, 1, 1)], 20, true).unwrap(),
            QModZ::from_i64(1, 4096)
        );
    }

    #[test]
    fn epsilon_is_validated() {
        assert_eq!(
            FixedPointDatum::new(2, r(1, 1)),
            Err(EtaError::BadEpsilon { value: 2 })
        );
        assert!(FixedPointDatum::new(-1, r(5, 3)).is_ok());
    }

    proptest! {
        #[test]
        fn stolz_is_additive_and_odd(
            taus1 in proptest::collection::vec((-20i64..=20, proptest::bool::ANY), 0..5),
            taus2 in proptest::collection::vec((-20i64..=20, proptest::bool::ANY), 0..5),
        ) {
            let mk = |ts: &[(i64, bool)]| -> Vec<FixedPointDatum> {
                ts.iter()
                    .map(|&(t, neg)| datum(if neg { -1 } else { 1 }, t, 1))
                    .collect()
            };
            let d1 = mk(&taus1);
            let d2 = mk(&taus2);
            let joint: Vec<FixedPointDatum> = d1.iter().chain(d2.iter()).cloned().collect();
            let v1 = stolz_eta(&d1, 12, false).unwrap();
            let v2 = stolz_eta(&d2, 12, false).unwrap();
            prop_assert_eq!(stolz_eta(&joint, 12, false).unwrap(), v1.add(&v2));
            let flipped: Vec<FixedPointDatum> = d1.iter().map(FixedPointDatum::flipped).collect();
            prop_assert_eq!(stolz_eta(&flipped, 12, false).unwrap(), v1.neg());
        }

        #[test]
        fn stolz_denominators_divide_two_to_the_eighth(
            taus in proptest::collection::vec((-50i64..=50, proptest::bool::ANY), 0..6),
        ) {
            let data: Vec<FixedPointDatum> = taus
                .iter()
                .map(|&(t, neg)| datum(if neg { -1 } else { 1 }, t, 1))
                .collect();
            let v = stolz_eta(&data, 12, false).unwrap();
            let den = v.fraction().denom().to_u64().unwrap();
            prop_assert_eq!(256 % den, 0, "denominator {} must divide 2^8", den);
        }
    }

    #[test]
    fn spin_case_lands_in_two_torsion() {
        assert_eq!(spin_case_eta(3), QModZ::from_i64(1, 2));
        assert_eq!(spin_case_eta(4), QModZ::zero());
        assert_eq!(spin_case_eta(0), QModZ::zero());
        assert_eq!(spin_case_eta(-5), QModZ::from_i64(1, 2));
        for idx in -8..=8 {
            let v = spin_case_eta(idx);
            assert!(v.add(&v).is_zero(), "index {idx} not 2-torsion");
        }
    }

    #[test]
    fn pushforward_encoding_inverts_zhang() {
        assert_eq!(
            consistency_check_pushforward(&QModZ::from_i64(1, 16)).unwrap(),
            RpClass::rp20(128)
        );
        assert_eq!(
            zhang_eta(RpClass::rp20(128)),
            QModZ::from_i64(1, 16)
        );
        assert_eq!(
            consistency_check_pushforward(&QModZ::zero()).unwrap(),
            RpClass::rp20(0)
        );
        assert_eq!(
            consistency_check_pushforward(&QModZ::from_i64(1, 2048)).unwrap(),
            RpClass::rp20(1)
        );
        for k in 0..2048u64 {
            let class = RpClass::rp20(k);
            assert_eq!(consistency_check_pushforward(&zhang_eta(class)).unwrap(), class);
        }
        assert_eq!(
            consistency_check_pushforward(&QModZ::from_i64(1, 3)),
            Err(EtaError::DenominatorOutsideRange {
                value: "1/3".to_string()
            })
        );
        assert!(consistency_check_pushforward(&QModZ::from_i64(1, 4096)).is_err());
    }

    #[test]
    fn bordism_table_entries() {
        let klein = bordism_lookup(BordismStructure::PinPlus, 2).unwrap();
        assert_eq!(klein.group, "Z/2");
        assert_eq!(klein.group, KoGroup::Z2.label());
        assert_eq!(klein.generators.len(), 1);
        assert!(klein.generators[0].contains("Klein bottle"));

        let rp4 = bordism_lookup(BordismStructure::PinPlus, 4).unwrap();
        assert_eq!(rp4.group, "Z/16");
        assert_eq!(rp4.group, KoGroup::Cyclic2 { k: 4 }.label());
        assert_eq!(rp4.generators, &["ℝP⁴"]);

        let mc = bordism_lookup(BordismStructure::Mc, 12).unwrap();
        assert_eq!(mc.generators.len(), 6);
        assert!(mc.generators[0].starts_with("K × ℍP²"));
        assert!(mc.generators[3].contains("ℍP² # ℍP²"));
        assert!(mc.generators[4].contains("ℝP⁸"));
        assert!(mc.generators[5].contains("ℂP¹ × ℂP¹"));

        assert_eq!(
            bordism_lookup(BordismStructure::Spin, 3),
            Err(EtaError::MissingEntry {
                structure: BordismStructure::Spin,
                dimension: 3
            })
        );
    }

    #[test]
    fn structure_labels_parse() {
        assert_eq!("pin+".parse::<BordismStructure>(), Ok(BordismStructure::PinPlus));
        assert_eq!("Pin-".parse::<BordismStructure>(), Ok(BordismStructure::PinMinus));
        assert_eq!("mc".parse::<BordismStructure>(), Ok(BordismStructure::Mc));
        assert!("pinc".parse::<BordismStructure>().is_err());
    }

    #[test]
    fn fixed_point_serde_round_trip() {
        let d = datum(-1, 7, 3);
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"epsilon":-1,"tau":"7/3"}"#);
        assert_eq!(serde_json::from_str::<FixedPointDatum>(&s).unwrap(), d);
        let parsed: Vec<FixedPointDatum> =
            serde_json::from_str(r#"[{"epsilon":1,"tau":"2/1"}]"#).unwrap();
        assert_eq!(parsed, vec![datum(1, 2, 1)]);
        assert!(serde_json::from_str::<FixedPointDatum>(r#"{"epsilon":3,"tau":"1/1"}"#).is_err());
    }
}
