//! `cliffko`: batch front end over the library, speaking JSON.
//!
//! Every subcommand maps onto one library operation family: `clifford`
//! (products and unary evaluations), `pin` (embeddings, the double cover,
//! finite enumeration), `classify`, `ko-point`, `rp20`, `eta`, `bordism`,
//! and `diffcoh`. Output is a single JSON value on stdout, byte-stable
//! across runs (canonical key order, reduced fractions, no floats);
//! `--pretty` switches to indented JSON.
//!
//! Exit codes: 0 on success, 2 on usage or validation errors (including
//! malformed input files), 1 on internal errors.

use clap::{Parser, Subcommand, ValueEnum};
use cliffko::diffcoh::{
    add_cocycles, char_class, check_cocycle, cohomology, equivalent, flat_inclusion, Coefficients,
    DifferentialCocycle, SimplicialComplex,
};
use cliffko::{
    classify, cover_map, embed_pin_minus, embed_pin_plus, enumerate_finite_pin, eta, ko,
    MultiVector, PinElement, Signature,
};
use num::BigRational;
use serde::Serialize;
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "cliffko",
    version,
    about = "Exact Clifford/Pin computations, KO coefficient groups, η/ξ evaluators, and simplicial differential cocycles"
)]
struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic on serialized multivectors.
    Clifford {
        #[command(subcommand)]
        op: CliffordOp,
    },
    /// Pin/Spin words: embeddings, the double cover, finite enumeration.
    Pin {
        #[command(subcommand)]
        op: PinOp,
    },
    /// Matrix-algebra classification of Cl(p,q), with witnesses for n ≤ 2.
    Classify { p: u16, q: u16 },
    /// KO^{-m}(pt), topological or differential.
    #[command(allow_negative_numbers = true)]
    KoPoint {
        m: i64,
        /// Report the differential refinement instead.
        #[arg(long)]
        differential: bool,
    },
    /// The reduced KO ring of ℝP²⁰ (cyclic of order 2¹¹).
    Rp20 {
        #[command(subcommand)]
        op: Rp20Op,
    },
    /// η/ξ-invariant evaluators with values in ℚ/ℤ.
    Eta {
        #[command(subcommand)]
        op: EtaOp,
    },
    /// Stored bordism groups with named generators.
    Bordism {
        /// Tangential structure: pin+, pin-, spin, or mc.
        structure: String,
        dimension: u32,
    },
    /// Differential cocycles on a finite simplicial complex.
    Diffcoh {
        #[command(subcommand)]
        op: DiffcohOp,
    },
}

#[derive(Subcommand)]
enum CliffordOp {
    /// Clifford product of two multivectors (same signature).
    Product {
        /// Path to the left factor (multivector JSON).
        #[arg(long)]
        a: PathBuf,
        /// Path to the right factor (multivector JSON).
        #[arg(long)]
        b: PathBuf,
    },
    /// Apply a unary operation to a multivector.
    Eval {
        /// Path to the input multivector JSON.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        op: UnaryOp,
        /// Grade to project onto; only with --op grade.
        #[arg(long)]
        k: Option<u32>,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum UnaryOp {
    Reverse,
    GradeInvolution,
    Conjugate,
    Even,
    Odd,
    Grade,
}

#[derive(Subcommand)]
enum PinOp {
    /// Embed a Pin(n,0) or Pin(0,n) word into the Spin group one
    /// dimension up.
    Embed {
        #[arg(value_enum)]
        target: EmbedTarget,
        /// Path to the Pin element JSON.
        #[arg(long)]
        pin: PathBuf,
    },
    /// Image under the double cover onto the orthogonal group.
    Cover {
        /// Path to the Pin element JSON.
        #[arg(long)]
        pin: PathBuf,
    },
    /// Multiplication table of the finite group Pin(p,q), p+q = 1.
    Enumerate {
        /// Signature as two numbers: P Q.
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        sig: Vec<u16>,
        /// Restrict to the Spin subgroup.
        #[arg(long)]
        spin_only: bool,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum EmbedTarget {
    /// Pin⁺_n = Pin(n,0) → Spin(n,1).
    Plus,
    /// Pin⁻_n = Pin(0,n) → Spin(n+1).
    Minus,
}

#[derive(Subcommand)]
enum Rp20Op {
    /// Multiply two classes a·x and b·x of the reduced KO ring.
    Mul { a: u64, b: u64 },
    /// η-invariant of the class a·x via the pushforward formula.
    Eta { a: u64 },
}

#[derive(Subcommand)]
enum EtaOp {
    /// Fixed-point formula Σ ε τ / 2^{(n+4)/2} mod 1.
    Stolz {
        /// Manifold dimension; 12 unless --generalized.
        #[arg(long)]
        n: u32,
        /// Path to a JSON array [{"epsilon":±1,"tau":"num/den"},…].
        #[arg(long)]
        fixed_points: PathBuf,
        /// Accept any n ≡ 4 (mod 8), not just n = 12.
        #[arg(long)]
        generalized: bool,
    },
    /// Spin reduction: half the integer index mod 1.
    Spin {
        #[arg(long, allow_negative_numbers = true)]
        index: i64,
    },
}

#[derive(Subcommand)]
enum DiffcohOp {
    /// Verify the cocycle conditions δc = 0, δh = ω − c, δω = 0.
    Check {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        degree: usize,
        /// Path to the cocycle JSON.
        #[arg(long)]
        cocycle: PathBuf,
    },
    /// Characteristic class [c] in H^q(X;ℤ), in SNF coordinates.
    Class {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        cocycle: PathBuf,
    },
    /// Flat inclusion of an ℝ/ℤ class given by a rational cochain u.
    Flat {
        #[arg(long)]
        complex: PathBuf,
        /// Degree of the resulting cocycle (u has degree one less).
        #[arg(long)]
        degree: usize,
        /// Path to a JSON array of rational strings for u.
        #[arg(long)]
        u: PathBuf,
    },
    /// Decide equivalence of two cocycles of the same degree.
    Equiv {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        first: PathBuf,
        #[arg(long)]
        second: PathBuf,
    },
    /// Sum of two cocycles of the same degree.
    Add {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        first: PathBuf,
        #[arg(long)]
        second: PathBuf,
    },
    /// H^q of the complex with ℤ, ℝ, or ℝ/ℤ coefficients.
    Cohomology {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum)]
        coefficients: CoeffArg,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum CoeffArg {
    /// Integer coefficients.
    Z,
    /// Real coefficients.
    R,
    /// ℝ/ℤ coefficients.
    Rz,
}

enum CliError {
    Validation(String),
    Internal(String),
}

impl CliError {
    fn validation(msg: impl Into<String>) -> CliError {
        CliError::Validation(msg.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit<T: Serialize>(pretty: bool, value: &T) -> Result<String, CliError> {
    let out = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    out.map_err(|e| CliError::Internal(e.to_string()))
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

fn read_multivector(path: &Path) -> Result<MultiVector, CliError> {
    let s = read_file(path)?;
    MultiVector::from_json_str(&s)
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

fn read_pin(path: &Path) -> Result<PinElement, CliError> {
    let s = read_file(path)?;
    PinElement::from_json_str(&s)
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    let s = read_file(path)?;
    serde_json::from_str(&s).map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

fn read_cocycle(
    x: &SimplicialComplex,
    degree: usize,
    path: &Path,
) -> Result<DifferentialCocycle, CliError> {
    let s = read_file(path)?;
    let t = DifferentialCocycle::from_json_str(x, &s)
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
    if t.q() != degree {
        return Err(CliError::validation(format!(
            "{}: cocycle has degree {}, expected {degree}",
            path.display(),
            t.q()
        )));
    }
    Ok(t)
}

fn signature(p: u16, q: u16) -> Result<Signature, CliError> {
    if usize::from(p) + usize::from(q) > 62 {
        return Err(CliError::validation(format!(
            "signature ({p},{q}) exceeds the 62-generator limit"
        )));
    }
    Ok(Signature::new(p, q))
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let pretty = cli.pretty;
    match &cli.command {
        Command::Clifford { op } => match op {
            CliffordOp::Product { a, b } => {
                let a = read_multivector(a)?;
                let b = read_multivector(b)?;
                let prod = a
                    .product(&b)
                    .map_err(|e| CliError::validation(e.to_string()))?;
                emit(pretty, &prod)
            }
            CliffordOp::Eval { input, op, k } => {
                let m = read_multivector(input)?;
                if *op == UnaryOp::Grade && k.is_none() {
                    return Err(CliError::validation("--op grade requires --k"));
                }
                if *op != UnaryOp::Grade && k.is_some() {
                    return Err(CliError::validation("--k is only valid with --op grade"));
                }
                let result = match op {
                    UnaryOp::Reverse => m.reverse(),
                    UnaryOp::GradeInvolution => m.grade_involution(),
                    UnaryOp::Conjugate => m.conjugate(),
                    UnaryOp::Even => m.even_part(),
                    UnaryOp::Odd => m.odd_part(),
                    UnaryOp::Grade => m.grade_project(k.unwrap()),
                };
                emit(pretty, &result)
            }
        },
        Command::Pin { op } => match op {
            PinOp::Embed { target, pin } => {
                let g = read_pin(pin)?;
                let image = match target {
                    EmbedTarget::Plus => embed_pin_plus(&g),
                    EmbedTarget::Minus => embed_pin_minus(&g),
                }
                .map_err(|e| CliError::validation(e.to_string()))?;
                emit(pretty, &image)
            }
            PinOp::Cover { pin } => {
                let g = read_pin(pin)?;
                emit(pretty, &cover_map(&g))
            }
            PinOp::Enumerate { sig, spin_only } => {
                let table = enumerate_finite_pin(signature(sig[0], sig[1])?, *spin_only)
                    .map_err(|e| CliError::validation(e.to_string()))?;
                emit(pretty, &table)
            }
        },
        Command::Classify { p, q } => {
            let sig = signature(*p, *q)?;
            let class = classify::classify(sig);
            if sig.dim() <= 2 {
                let witness = classify::verify_small_isomorphism(sig)
                    .map_err(|e| CliError::Internal(e.to_string()))?;
                emit(pretty, &json!({ "class": class, "witness": witness }))
            } else {
                emit(pretty, &json!({ "class": class }))
            }
        }
        Command::KoPoint { m, differential } => {
            let group = if *differential {
                ko::ko_point_differential(*m)
            } else {
                ko::ko_point(*m)
            };
            emit(pretty, &json!({ "group": group }))
        }
        Command::Rp20 { op } => match op {
            Rp20Op::Mul { a, b } => {
                let prod = ko::rp_mul(ko::RpClass::rp20(*a), ko::RpClass::rp20(*b));
                emit(pretty, &prod)
            }
            Rp20Op::Eta { a } => {
                let xi = ko::zhang_eta(ko::RpClass::rp20(*a));
                emit(pretty, &json!({ "xi_half": xi }))
            }
        },
        Command::Eta { op } => match op {
            EtaOp::Stolz {
                n,
                fixed_points,
                generalized,
            } => {
                let s = read_file(fixed_points)?;
                let data: Vec<eta::FixedPointDatum> = serde_json::from_str(&s)
                    .map_err(|e| CliError::validation(format!("{}: {e}", fixed_points.display())))?;
                let xi = eta::stolz_eta(&data, *n, *generalized)
                    .map_err(|e| CliError::validation(e.to_string()))?;
                emit(pretty, &json!({ "xi_half": xi }))
            }
            EtaOp::Spin { index } => {
                emit(pretty, &json!({ "xi_half": eta::spin_case_eta(*index) }))
            }
        },
        Command::Bordism {
            structure,
            dimension,
        } => {
            let structure = eta::BordismStructure::from_str(structure)
                .map_err(|e| CliError::validation(e.to_string()))?;
            let entry = eta::bordism_lookup(structure, *dimension)
                .map_err(|e| CliError::validation(e.to_string()))?;
            emit(pretty, entry)
        }
        Command::Diffcoh { op } => match op {
            DiffcohOp::Check {
                complex,
                degree,
                cocycle,
            } => {
                let x = read_complex(complex)?;
                let t = read_cocycle(&x, *degree, cocycle)?;
                let ok = check_cocycle(&x, &t).map_err(|e| CliError::validation(e.to_string()))?;
                emit(pretty, &json!({ "is_cocycle": ok }))
            }
            DiffcohOp::Class {
                complex,
                degree,
                cocycle,
            } => {
                let x = read_complex(complex)?;
                let t = read_cocycle(&x, *degree, cocycle)?;
                let class = char_class(&x, &t).map_err(|e| CliError::validation(e.to_string()))?;
                emit(pretty, &class)
            }
            DiffcohOp::Flat { complex, degree, u } => {
                let x = read_complex(complex)?;
                let s = read_file(u)?;
                let strings: Vec<String> = serde_json::from_str(&s)
                    .map_err(|e| CliError::validation(format!("{}: {e}", u.display())))?;
                let values: Vec<BigRational> = strings
                    .iter()
                    .map(|s| cliffko::rational::parse_ratio(s))
                    .collect::<Result<_, _>>()
                    .map_err(|e| CliError::validation(format!("{}: {e}", u.display())))?;
                let t = flat_inclusion(&x, *degree, &values)
                    .map_err(|e| CliError::validation(e.to_string()))?;
                emit(pretty, &t)
            }
            DiffcohOp::Equiv {
                complex,
                degree,
                first,
                second,
            } => {
                let x = read_complex(complex)?;
                let t1 = read_cocycle(&x, *degree, first)?;
                let t2 = read_cocycle(&x, *degree, second)?;
                let eq =
                    equivalent(&x, &t1, &t2).map_err(|e| CliError::validation(e.to_string()))?;
                emit(pretty, &json!({ "equivalent": eq }))
            }
            DiffcohOp::Add {
                complex,
                degree,
                first,
                second,
            } => {
                let x = read_complex(complex)?;
                let t1 = read_cocycle(&x, *degree, first)?;
                let t2 = read_cocycle(&x, *degree, second)?;
                let sum =
                    add_cocycles(&x, &t1, &t2).map_err(|e| CliError::validation(e.to_string()))?;
                emit(pretty, &sum)
            }
            DiffcohOp::Cohomology {
                complex,
                degree,
                coefficients,
            } => {
                let x = read_complex(complex)?;
                let co = match coefficients {
                    CoeffArg::Z => Coefficients::Integer,
                    CoeffArg::R => Coefficients::Real,
                    CoeffArg::Rz => Coefficients::RealModZ,
                };
                emit(pretty, &cohomology(&x, *degree, co))
            }
        },
    }
}
