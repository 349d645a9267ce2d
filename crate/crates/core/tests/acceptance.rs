//! Acceptance gate: ten numbered criteria, one test and one printed
//! PASS line each (visible with `--nocapture`; a failed assertion fails
//! the criterion).
//!
//! Every comparison in this file is exact — rational arithmetic end to
//! end, no epsilons. The only "tolerances" are the pinned budgets below:
//! iteration counts, exhaustive-search bounds, and two wall-clock
//! ceilings.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use cliffko::classify::{center_dimension, classify, morita_residue, verify_small_isomorphism};
use cliffko::diffcoh::{
    add_cocycles, char_class, check_cocycle, circle, cohomology, equivalent, flat_component_group,
    flat_inclusion, point, projective_plane, torus, Coefficients, CohomologyGroup, DegreeSolver,
    DifferentialCocycle, SimplicialComplex,
};
use cliffko::eta::{
    bordism_lookup, consistency_check_pushforward, spin_case_eta, stolz_eta, BordismStructure,
    EtaError, FixedPointDatum,
};
use cliffko::ko::{ko_point, ko_point_differential, zhang_eta, KoGroup, QModZ, RpClass};
use cliffko::linalg::RatMat;
use cliffko::{
    cover_map, embed_pin_minus, embed_pin_plus, enumerate_finite_pin, index_degree,
    pin_from_vectors, reflection_matrix, scale_invariance_check, Blade, FiniteGroupTable,
    MultiVector, PinElement, Signature, TangentialStructure, Vector,
};
use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criterion 1: randomized exact law checks on the Clifford kernel.
const RANDOM_LAW_CHECKS: usize = 10_000;
const LAW_CHECK_BUDGET_SECS: u64 = 60;
/// Criterion 2: random rational unit vectors for the reflection law.
const REFLECTION_SAMPLES: usize = 1_000;
/// Criterion 3: exhaustive embedding verification bounds.
const EMBED_MAX_WORD_LEN: usize = 4;
const EMBED_MAX_N: u16 = 5;
/// Criterion 8: full ℤ/2¹¹ round-trip budget.
const ZHANG_BUDGET_SECS: u64 = 1;
/// Criterion 9: random differential cocycles across the four fixtures.
const RANDOM_COCYCLES: usize = 500;
/// Shared RNG seed: the gate is deterministic.
const SEED: u64 = 0x005_EED0;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn random_rat(rng: &mut ChaCha8Rng) -> BigRational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn random_sig(rng: &mut ChaCha8Rng, max_n: u16) -> Signature {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0..=n);
    Signature::new(p, n - p)
}

fn random_mv(rng: &mut ChaCha8Rng, sig: Signature) -> MultiVector {
    let blades = 1u64 << sig.dim();
    let k = rng.gen_range(0..=4usize);
    MultiVector::from_terms(
        sig,
        (0..k).map(|_| (Blade(rng.gen_range(0..blades)), random_rat(rng))),
    )
    .expect("blades fit the signature")
}

#[test]
fn criterion_01_clifford_kernel_laws() {
    let started = Instant::now();
    let mut rng = rng();
    for i in 0..RANDOM_LAW_CHECKS {
        let sig = random_sig(&mut rng, 6);
        match i % 4 {
            0 => {
                // associativity
                let (a, b, c) = (
                    random_mv(&mut rng, sig),
                    random_mv(&mut rng, sig),
                    random_mv(&mut rng, sig),
                );
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c), "associativity in {sig}");
            }
            1 => {
                // bilinearity and scalar compatibility
                let (a, b, c) = (
                    random_mv(&mut rng, sig),
                    random_mv(&mut rng, sig),
                    random_mv(&mut rng, sig),
                );
                let t = random_rat(&mut rng);
                assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
                assert_eq!(&c * &(&a + &b), &(&c * &a) + &(&c * &b));
                assert_eq!(a.scale(&t).product(&b).unwrap(), (&a * &b).scale(&t));
            }
            2 => {
                // generator relations: eᵢ² = ±1 per the signature and
                // eᵢeⱼ = −eⱼeᵢ for i ≠ j
                let n = sig.dim();
                let i = rng.gen_range(1..=n);
                let j = rng.gen_range(1..=n);
                let ei = MultiVector::generator(sig, i).unwrap();
                let ej = MultiVector::generator(sig, j).unwrap();
                let square = &ei * &ei;
                let expected = MultiVector::scalar(
                    sig,
                    BigRational::from_integer(sig.generator_square(i).into()),
                );
                assert_eq!(square, expected, "eᵢ² in {sig}");
                if i != j {
                    assert!((&(&ei * &ej) + &(&ej * &ei)).is_zero(), "anticommutation");
                }
            }
            _ => {
                // grading: projections partition, and the product respects
                // the ℤ/2 grading
                let a = random_mv(&mut rng, sig);
                let b = random_mv(&mut rng, sig);
                let mut sum = MultiVector::zero(sig);
                for k in 0..=u32::from(sig.dim()) {
                    sum = &sum + &a.grade_project(k);
                }
                assert_eq!(sum, a, "grade projections partition");
                let even = &(&a.even_part() * &b.even_part()) + &(&a.odd_part() * &b.odd_part());
                let odd = &(&a.even_part() * &b.odd_part()) + &(&a.odd_part() * &b.even_part());
                assert!(even.odd_part().is_zero(), "even component is even");
                assert!(odd.even_part().is_zero(), "odd component is odd");
                assert_eq!(&even + &odd, &a * &b, "graded decomposition of ab");
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < LAW_CHECK_BUDGET_SECS,
        "law checks took {elapsed:?}, budget {LAW_CHECK_BUDGET_SECS}s"
    );
    println!(
        "criterion 01 PASS: {RANDOM_LAW_CHECKS} randomized exact kernel law checks over p+q ≤ 6 in {elapsed:?}"
    );
}

/// A random exact unit (or unit-up-to-sign) vector: a signed basis
/// vector, a Pythagorean pair in two same-sign slots, or a hyperbolic
/// pair in a (+,−) slot pair.
fn random_unit_vector(rng: &mut ChaCha8Rng, sig: Signature) -> Vector {
    let n = sig.dim();
    let m: i64 = rng.gen_range(2..=5);
    let k: i64 = rng.gen_range(1..m);
    let (a, b, c) = (m * m - k * k, 2 * m * k, m * m + k * k);
    let mut coords = vec![BigRational::zero(); n as usize];
    let style = rng.gen_range(0..3);
    if style == 1 && sig.p() >= 2 {
        // plus-pair: (a/c)² + (b/c)² = 1
        let i = rng.gen_range(0..sig.p() - 1) as usize;
        coords[i] = rat(a, c);
        coords[i + 1] = rat(b, c);
    } else if style == 1 && sig.q() >= 2 {
        // minus-pair: norm −1
        let i = (sig.p() + rng.gen_range(0..sig.q() - 1)) as usize;
        coords[i] = rat(a, c);
        coords[i + 1] = rat(b, c);
    } else if style == 2 && sig.p() >= 1 && sig.q() >= 1 {
        // hyperbolic pair: (c/a)² − (b/a)² = 1
        let i = rng.gen_range(0..sig.p()) as usize;
        let j = (sig.p() + rng.gen_range(0..sig.q())) as usize;
        coords[i] = rat(c, a);
        coords[j] = rat(b, a);
    } else {
        let i = rng.gen_range(0..n) as usize;
        coords[i] = if rng.gen() { BigRational::one() } else { -BigRational::one() };
    }
    Vector::new(sig, coords).expect("coordinate count matches")
}

#[test]
fn criterion_02_reflection_law() {
    let mut rng = rng();
    // signatures up to (4,2)
    let mut sigs = Vec::new();
    for p in 0..=4u16 {
        for q in 0..=2u16 {
            if p + q >= 1 {
                sigs.push(Signature::new(p, q));
            }
        }
    }
    for _ in 0..REFLECTION_SAMPLES {
        let sig = sigs[rng.gen_range(0..sigs.len())];
        let xi = random_unit_vector(&mut rng, sig);
        assert!(xi.is_unit(), "⟨ξ,ξ⟩ = ±1 by construction");
        let n = sig.dim() as usize;
        let m = reflection_matrix(&xi).expect("unit vectors are non-null");

        // oracle: I − 2 ξ (Gξ)ᵀ / ⟨ξ,ξ⟩ with G the diagonal form
        let norm = xi.norm();
        let oracle = RatMat::from_fn(n, n, |r, c| {
            let g_c = BigRational::from_integer(sig.generator_square(c as u16 + 1).into());
            let outer = &xi.coords()[r] * &g_c * &xi.coords()[c];
            let diag = if r == c { BigRational::one() } else { BigRational::zero() };
            diag - rat(2, 1) * outer / &norm
        });
        assert_eq!(m, oracle, "reflection matrix in {sig}");
        assert_eq!(m.det(), -BigRational::one(), "reflections have det −1");

        // scale invariance σ_{tξ} = σ_ξ, checked on a random target and
        // as full matrix equality
        let t = rat(rng.gen_range(1..=9), rng.gen_range(1..=9))
            * if rng.gen() { BigRational::one() } else { -BigRational::one() };
        let eta = random_unit_vector(&mut rng, sig);
        assert_eq!(scale_invariance_check(&xi, &t, &eta), Ok(true));
        assert_eq!(reflection_matrix(&xi.scale(&t)).unwrap(), m);
    }
    println!(
        "criterion 02 PASS: reflection matrix = I − 2ξ(Gξ)ᵀ/⟨ξ,ξ⟩, det −1, σ_tξ = σ_ξ on {REFLECTION_SAMPLES} exact unit vectors up to (4,2)"
    );
}

fn signed_letters(sig: Signature) -> Vec<Vector> {
    let mut letters = Vec::new();
    for i in 1..=sig.dim() {
        let e = Vector::basis(sig, i).unwrap();
        letters.push(e.scale(&-BigRational::one()));
        letters.push(e);
    }
    letters
}

fn words_up_to(letters: &[Vector], max_len: usize) -> Vec<Vec<Vector>> {
    let mut words: Vec<Vec<Vector>> = vec![vec![]];
    let mut layer: Vec<Vec<Vector>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in letters {
                let mut w2 = w.clone();
                w2.push(l.clone());
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words
}

fn rename_into(m: &MultiVector, target: Signature) -> MultiVector {
    MultiVector::from_terms(target, m.terms().map(|(b, c)| (b, c.clone())))
        .expect("blades fit the larger signature")
}

#[test]
fn criterion_03_pin_embeddings_exhaustive() {
    let mut checked_words = 0usize;
    let mut product_checks = 0usize;
    for minus in [false, true] {
        for n in 1..=EMBED_MAX_N {
            let sig = if minus {
                Signature::new(0, n)
            } else {
                Signature::new(n, 0)
            };
            let embed = |g: &PinElement| {
                if minus {
                    embed_pin_minus(g)
                } else {
                    embed_pin_plus(g)
                }
            };
            let letters = signed_letters(sig);
            let words = words_up_to(&letters, EMBED_MAX_WORD_LEN);

            let mut forward: HashMap<MultiVector, MultiVector> = HashMap::new();
            let mut backward: HashMap<MultiVector, MultiVector> = HashMap::new();
            let mut elements: Vec<PinElement> = Vec::new();
            let mut images: Vec<PinElement> = Vec::new();

            for w in &words {
                let g = pin_from_vectors(sig, w.clone()).expect("signed basis letters are unit");
                let img = embed(&g).expect("embedding accepts its own family");

                // lands in even grade
                assert!(img.is_spin(), "image word has even length");
                assert!(img.reduced().odd_part().is_zero(), "image is even-graded");

                // square-compatibility of embedded letters
                if w.len() == 1 {
                    let r = img.reduced();
                    let sq = r.product(r).unwrap();
                    let expect = if minus { rat(-1, 1) } else { rat(1, 1) };
                    assert_eq!(
                        sq,
                        MultiVector::scalar(r.sig(), expect),
                        "(ξ̃·e)² = {} in the {} target",
                        if minus { "−1" } else { "+1" },
                        if minus { "Pin⁻" } else { "Pin⁺" },
                    );
                }

                // even words are fixed under the canonical identification
                // of the even subalgebras: the literal blade rename for
                // the (n,0) → (n,1) case, and the rename of the Clifford
                // conjugate for (0,n) → (n+1,0) (grade 4k ↦ +, 4k+2 ↦ −).
                if w.len() % 2 == 0 {
                    let target = img.reduced().sig();
                    let expected = if minus {
                        rename_into(&g.reduced().conjugate(), target)
                    } else {
                        rename_into(g.reduced(), target)
                    };
                    assert_eq!(img.reduced(), &expected, "even words fixed, n = {n}");
                }

                // well-definedness (forward) and injectivity (backward)
                // on reduced group elements
                if let Some(prev) = forward.insert(g.reduced().clone(), img.reduced().clone()) {
                    assert_eq!(&prev, img.reduced(), "map well-defined on Pin elements");
                }
                if let Some(prev) = backward.insert(img.reduced().clone(), g.reduced().clone()) {
                    assert_eq!(&prev, g.reduced(), "map injective on Pin elements");
                }
                elements.push(g);
                images.push(img);
                checked_words += 1;
            }

            // group-law compatibility: embed(v·w) = embed(v)·embed(w);
            // exhaustive for n ≤ 2, seeded sampling above that
            let mut check_pair = |a: usize, b: usize| {
                let prod = elements[a].group_product(&elements[b]).unwrap();
                let img_prod = embed(&prod).unwrap();
                let prod_img = images[a].group_product(&images[b]).unwrap();
                assert_eq!(img_prod, prod_img, "homomorphism law");
                product_checks += 1;
            };
            if n <= 2 {
                for a in 0..elements.len() {
                    for b in 0..elements.len() {
                        check_pair(a, b);
                    }
                }
            } else {
                let mut rng = rng();
                for _ in 0..2_000 {
                    let a = rng.gen_range(0..elements.len());
                    let b = rng.gen_range(0..elements.len());
                    check_pair(a, b);
                }
            }
        }
    }
    println!(
        "criterion 03 PASS: embeddings verified on {checked_words} words (len ≤ {EMBED_MAX_WORD_LEN}, n ≤ {EMBED_MAX_N}, both families): injective, even-graded, square-compatible, even words fixed; {product_checks} product checks"
    );
}

/// True when `t` and `u` present isomorphic groups, decided by brute
/// force over identity-fixing bijections.
fn tables_isomorphic(t: &FiniteGroupTable, u: &FiniteGroupTable) -> bool {
    let n = t.order();
    if n != u.order() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    fn heap(perm: &mut Vec<usize>, k: usize, t: &FiniteGroupTable, u: &FiniteGroupTable, found: &mut bool) {
        if *found {
            return;
        }
        if k == 1 {
            let ok = (0..perm.len()).all(|a| {
                (0..perm.len()).all(|b| perm[t.table[a][b]] == u.table[perm[a]][perm[b]])
            });
            if ok {
                *found = true;
            }
            return;
        }
        for i in 0..k {
            heap(perm, k - 1, t, u, found);
            if k % 2 == 0 {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    let mut found = false;
    heap(&mut perm, n, t, u, &mut found);
    found
}

fn abstract_table(labels: &[&str], table: &[&[usize]], iso: &str) -> FiniteGroupTable {
    FiniteGroupTable {
        labels: labels.iter().map(|s| s.to_string()).collect(),
        table: table.iter().map(|r| r.to_vec()).collect(),
        isomorphism: iso.to_string(),
    }
}

#[test]
fn criterion_04_one_dimensional_groups() {
    let klein = abstract_table(
        &["e", "a", "b", "ab"],
        &[&[0, 1, 2, 3], &[1, 0, 3, 2], &[2, 3, 0, 1], &[3, 2, 1, 0]],
        "μ₂ × μ₂",
    );
    let cyclic4 = abstract_table(
        &["1", "i", "-1", "-i"],
        &[&[0, 1, 2, 3], &[1, 2, 3, 0], &[2, 3, 0, 1], &[3, 0, 1, 2]],
        "μ₄",
    );
    let cyclic2 = abstract_table(&["1", "-1"], &[&[0, 1], &[1, 0]], "μ₂");

    let pin_plus = enumerate_finite_pin(Signature::new(1, 0), false).unwrap();
    assert!(tables_isomorphic(&pin_plus, &klein), "Pin(1,0) ≅ μ₂ × μ₂");
    assert!(!tables_isomorphic(&pin_plus, &cyclic4), "Pin(1,0) ≇ μ₄");
    assert_eq!(pin_plus.isomorphism, "μ₂ × μ₂");

    let pin_minus = enumerate_finite_pin(Signature::new(0, 1), false).unwrap();
    assert!(tables_isomorphic(&pin_minus, &cyclic4), "Pin(0,1) ≅ μ₄");
    assert!(!tables_isomorphic(&pin_minus, &klein), "Pin(0,1) ≇ μ₂ × μ₂");
    assert_eq!(pin_minus.isomorphism, "μ₄");

    for sig in [Signature::new(1, 0), Signature::new(0, 1)] {
        let spin = enumerate_finite_pin(sig, true).unwrap();
        assert!(tables_isomorphic(&spin, &cyclic2), "Spin₁ ≅ μ₂");
        assert_eq!(spin.isomorphism, "μ₂");
    }
    println!(
        "criterion 04 PASS: Pin(1,0) ≅ μ₂ × μ₂, Pin(0,1) ≅ μ₄, Spin₁ ≅ μ₂, isomorphisms certified by table bijections"
    );
}

#[test]
fn criterion_05_classification_49_signatures() {
    // the 7 × 7 grid p, q ≤ 6; the center-nullity oracle runs on the
    // signatures within its n ≤ 6 cost guard
    let mut count = 0;
    let mut center_checked = 0;
    for p in 0..=6u16 {
        for q in 0..=6u16 {
            let sig = Signature::new(p, q);
            let class = classify(sig);
            // dimension bookkeeping: |Cl(p,q)| = size² · dim base
            assert_eq!(
                class.total_dim(),
                1u128 << sig.dim(),
                "dimension bookkeeping for {sig}"
            );
            // structural doubling Cl(p+1,q+1) ≅ M₂(Cl(p,q))
            let doubled = classify(Signature::new(p + 1, q + 1));
            assert_eq!(doubled.base, class.base, "doubling fixes the base at {sig}");
            assert_eq!(doubled.matrix_size, 2 * class.matrix_size);
            // center dimension agrees with the independent nullity oracle
            if sig.dim() <= 6 {
                assert_eq!(
                    center_dimension(sig).unwrap(),
                    class.base.center_dim(),
                    "center of {sig}"
                );
                center_checked += 1;
            }
            // explicit representation witnesses for n ≤ 2, acting by real
            // matrices of size (matrix size) · dim_ℝ(base)
            if sig.dim() <= 2 {
                let w = verify_small_isomorphism(sig).unwrap();
                assert!(w.satisfies_relations(), "witness relations for {sig}");
                assert!(w.is_faithful(), "witness faithfulness for {sig}");
                assert_eq!(
                    w.rep_dim as u128,
                    u128::from(class.matrix_size) * u128::from(class.base.real_dim()),
                    "witness dimension for {sig}"
                );
            }
            count += 1;
        }
    }
    assert_eq!(count, 49, "49 signatures");
    assert_eq!(center_checked, 28, "center oracle on all p+q ≤ 6");

    assert!(
        classify(Signature::new(1, 1)).morita_trivial(),
        "Cl(1,1) is Morita-trivial"
    );
    for n in 1..=6u16 {
        assert_eq!(
            morita_residue(Signature::new(n, 1)),
            morita_residue(Signature::new(n - 1, 0)),
            "one step of Morita reduction at n = {n}"
        );
    }
    println!(
        "criterion 05 PASS: classification on all {count} grid signatures (center oracle on the {center_checked} with p+q ≤ 6), witnesses for n ≤ 2, Cl(1,1) Morita-trivial, residue reduction law"
    );
}

#[test]
fn criterion_06_ko_tables_verbatim() {
    use KoGroup::{RmodZ, Z, Z2, Zero as Z0};
    // frozen literal tables, indexed by m mod 8
    let topological = [Z, Z2, Z2, Z0, Z, Z0, Z0, Z0];
    let differential = [Z, Z2, Z2, RmodZ, Z, Z0, Z0, RmodZ];
    for m in -32i64..=32 {
        let idx = m.rem_euclid(8) as usize;
        assert_eq!(ko_point(m), topological[idx], "KO⁻{m}(pt)");
        assert_eq!(
            ko_point_differential(m),
            differential[idx],
            "differential KO⁻{m}(pt)"
        );
    }
    for m in -32i64..=24 {
        assert_eq!(ko_point(m), ko_point(m + 8), "Bott periodicity");
        assert_eq!(ko_point_differential(m), ko_point_differential(m + 8));
    }
    println!(
        "criterion 06 PASS: topological and differential KO tables verbatim for m = −32…32 with period-8 consistency"
    );
}

#[test]
fn criterion_07_index_degrees() {
    for n in 0..=16u32 {
        let n_i = i64::from(n);
        assert_eq!(index_degree(TangentialStructure::Spin, n), -n_i);
        assert_eq!(index_degree(TangentialStructure::PinPlus, n), -(n_i - 1));
        assert_eq!(index_degree(TangentialStructure::PinMinus, n), -(n_i + 1));
    }
    // the 4-dimensional Pin⁺ index lands in KO⁻³(pt) = 0 while the
    // bordism group is ℤ/16: the index carries no information there
    assert_eq!(index_degree(TangentialStructure::PinPlus, 4), -3);
    assert_eq!(ko_point(3), KoGroup::Zero);
    assert_eq!(
        bordism_lookup(BordismStructure::PinPlus, 4).unwrap().group,
        "Z/16"
    );
    println!(
        "criterion 07 PASS: index degrees −n / −(n−1) / −(n+1) for n = 0…16; (Pin⁺,4) → −3 with KO⁻³(pt) = 0 against bordism ℤ/16"
    );
}

#[test]
fn criterion_08_eta_evaluators() {
    // Stolz denominators divide 2⁸ on integer fixed-point traces.
    let mut rng = rng();
    let two56 = BigInt::from(256);
    for _ in 0..200 {
        let k = rng.gen_range(0..=8usize);
        let data: Vec<FixedPointDatum> = (0..k)
            .map(|_| {
                FixedPointDatum::new(
                    if rng.gen() { 1 } else { -1 },
                    BigRational::from_integer(rng.gen_range(-20..=20i64).into()),
                )
                .unwrap()
            })
            .collect();
        let xi = stolz_eta(&data, 12, false).unwrap();
        assert!(
            (&two56 % xi.fraction().denom()).is_zero(),
            "denominator {} divides 2⁸",
            xi.fraction().denom()
        );
    }

    // flagged n = 4, single fixed point: exactly the generator 1/16
    let one_point = [FixedPointDatum::new(1, BigRational::one()).unwrap()];
    assert_eq!(stolz_eta(&one_point, 4, true).unwrap(), QModZ::from_i64(1, 16));
    assert!(matches!(
        stolz_eta(&one_point, 4, false),
        Err(EtaError::UnsupportedDimension { n: 4 })
    ));

    // Zhang round-trip over the whole group, timed
    let started = Instant::now();
    for a in 0..2048u64 {
        let class = RpClass::rp20(a);
        let xi = zhang_eta(class);
        assert_eq!(consistency_check_pushforward(&xi).unwrap(), class);
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() < ZHANG_BUDGET_SECS,
        "round-trip took {elapsed:?}, budget {ZHANG_BUDGET_SECS}s"
    );
    println!(
        "criterion 08 PASS: Stolz denominators divide 2⁸, flagged n=4 single point = 1/16, ℤ/2¹¹ round-trip in {elapsed:?}"
    );
}

fn as_rats(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|c| BigRational::from(c.clone())).collect()
}

/// Random integer cocycle: a lattice combination of the SNF generators
/// plus a coboundary.
fn random_int_cocycle(
    rng: &mut ChaCha8Rng,
    x: &SimplicialComplex,
    s: &DegreeSolver,
    q: usize,
) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); x.count(q)];
    let mut add = |v: &[BigInt], m: i64| {
        for (ci, vi) in c.iter_mut().zip(v) {
            *ci += vi * m;
        }
    };
    for j in 0..s.betti() {
        add(&s.free_generator(j), rng.gen_range(-3..=3));
    }
    for i in 0..s.torsion_moduli().len() {
        let (_, g) = s.torsion_generator(i);
        add(&g, rng.gen_range(-3..=3));
    }
    let b: Vec<BigInt> = (0..x.count(q - 1))
        .map(|_| BigInt::from(rng.gen_range(-5..=5i64)))
        .collect();
    let db = x.coboundary_matrix(q - 1).mul_vec(&b);
    add(&db, 1);
    c
}

#[test]
fn criterion_09_differential_cohomology() {
    let fixtures: Vec<(SimplicialComplex, &str)> = vec![
        (point(), "pt"),
        (circle(), "S¹"),
        (torus(), "T²"),
        (projective_plane(), "ℝP²"),
    ];

    // (a) SNF output against independently hand-computed tables
    let hand: [&[(usize, &[i64])]; 4] = [
        &[(1, &[]), (0, &[]), (0, &[])],
        &[(1, &[]), (1, &[]), (0, &[])],
        &[(1, &[]), (2, &[]), (1, &[])],
        &[(1, &[]), (0, &[]), (0, &[2])],
    ];
    for ((x, name), table) in fixtures.iter().zip(&hand) {
        for (q, (betti, torsion)) in table.iter().enumerate() {
            let s = DegreeSolver::new(x, q);
            assert_eq!(s.betti(), *betti, "b_{q}({name})");
            let moduli: Vec<i64> = s
                .torsion_moduli()
                .iter()
                .map(|m| i64::try_from(m).unwrap())
                .collect();
            assert_eq!(&moduli, torsion, "torsion of H^{q}({name};ℤ)");
        }
    }

    // shared solvers per (fixture, degree)
    let solvers: Vec<Vec<DegreeSolver>> = fixtures
        .iter()
        .map(|(x, _)| (0..=2).map(|q| DegreeSolver::new(x, q)).collect())
        .collect();

    // (b) the square: curvature class = real image of the characteristic
    // class, on random cocycles
    let mut rng = rng();
    let mut gauge_accepts = 0usize;
    let mut curvature_rejects = 0usize;
    for i in 0..RANDOM_COCYCLES {
        let f = i % fixtures.len();
        let (x, _name) = &fixtures[f];
        let q = 1 + (i / fixtures.len()) % 2;
        let s = &solvers[f][q];

        let c = random_int_cocycle(&mut rng, x, s, q);
        let h: Vec<BigRational> = (0..x.count(q - 1))
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=6)))
            .collect();
        let dh = x.coboundary_matrix(q - 1).mul_rat_vec(&h);
        let omega: Vec<BigRational> = dh
            .iter()
            .zip(&c)
            .map(|(d, ci)| d + BigRational::from(ci.clone()))
            .collect();
        let t = DifferentialCocycle::new(x, q, c.clone(), h, omega.clone()).unwrap();
        assert_eq!(check_cocycle(x, &t), Ok(true), "random triple is a cocycle");

        let curv_coords = s.rational_free_coords(&omega).expect("curvature is closed");
        let class_coords = s.rational_free_coords(&as_rats(&c)).expect("c is closed");
        assert_eq!(curv_coords, class_coords, "the square commutes");
        let class = char_class(x, &t).unwrap();
        for (w, z) in curv_coords.iter().zip(&class.free) {
            assert_eq!(w, &BigRational::from(z.clone()), "free coordinates agree");
        }

        // equivalence accepts a definitional gauge shift
        if i % 5 == 0 {
            let b: Vec<BigInt> = (0..x.count(q - 1))
                .map(|_| BigInt::from(rng.gen_range(-4..=4i64)))
                .collect();
            let db = x.coboundary_matrix(q - 1).mul_vec(&b);
            let shift = DifferentialCocycle::new(
                x,
                q,
                db,
                b.iter().map(|v| BigRational::from(-v.clone())).collect(),
                vec![BigRational::zero(); x.count(q)],
            )
            .unwrap();
            let t2 = add_cocycles(x, &t, &shift).unwrap();
            assert_eq!(equivalent(x, &t, &t2), Ok(true), "gauge shift accepted");
            gauge_accepts += 1;

            // and equivalence respects addition
            let t3 = add_cocycles(x, &t2, &shift).unwrap();
            assert_eq!(equivalent(x, &t2, &t3), Ok(true));
        }

        // equivalence rejects curvature-distinct pairs
        if s.betti() > 0 {
            let g = s.free_generator(0);
            let tg = DifferentialCocycle::new(
                x,
                q,
                g.clone(),
                vec![BigRational::zero(); x.count(q - 1)],
                as_rats(&g),
            )
            .unwrap();
            let t4 = add_cocycles(x, &t, &tg).unwrap();
            assert_eq!(equivalent(x, &t, &t4), Ok(false), "distinct curvature rejected");
            curvature_rejects += 1;
        }
    }

    // (c) flat component groups equal integral torsion, two routes
    for (f, (x, name)) in fixtures.iter().enumerate() {
        for q in 1..=2usize {
            let flat = flat_component_group(x, q);
            assert_eq!(flat, solvers[f][q].torsion_moduli(), "flat π₀ via SNF ({name})");
            let CohomologyGroup::RealModZ { component_group, .. } =
                cohomology(x, q - 1, Coefficients::RealModZ)
            else {
                panic!("RealModZ variant expected")
            };
            assert_eq!(flat, component_group, "flat π₀ via ℝ/ℤ coefficients ({name})");
        }
    }
    let rp2 = &fixtures[3].0;
    assert_eq!(flat_component_group(rp2, 2), vec![BigInt::from(2)], "ℤ/2 on ℝP²");
    // the two components are realized and separated by flat cocycles
    let s2 = &solvers[3][2];
    let (_, g) = s2.torsion_generator(0);
    let twice: Vec<BigInt> = g.iter().map(|v| v * 2).collect();
    let b = s2.solve_coboundary(&twice).unwrap();
    let u: Vec<BigRational> = b
        .iter()
        .map(|v| BigRational::new(v.clone(), 2.into()))
        .collect();
    let nontrivial = flat_inclusion(rp2, 2, &u).unwrap();
    let trivial = flat_inclusion(rp2, 2, &as_rats(&b)).unwrap();
    let zero = DifferentialCocycle::zero(rp2, 2).unwrap();
    assert_eq!(equivalent(rp2, &nontrivial, &zero), Ok(false));
    assert_eq!(equivalent(rp2, &trivial, &zero), Ok(true));
    assert_eq!(char_class(rp2, &nontrivial).unwrap().torsion, vec![BigInt::one()]);

    // (d) characteristic-class surjectivity, witnessed per SNF generator
    let mut witnesses = 0usize;
    for (f, (x, _)) in fixtures.iter().enumerate() {
        for q in 1..=2usize {
            let s = &solvers[f][q];
            for j in 0..s.betti() {
                let g = s.free_generator(j);
                let t = DifferentialCocycle::new(
                    x,
                    q,
                    g.clone(),
                    vec![BigRational::zero(); x.count(q - 1)],
                    as_rats(&g),
                )
                .unwrap();
                assert_eq!(check_cocycle(x, &t), Ok(true));
                let class = char_class(x, &t).unwrap();
                assert!(class.torsion.iter().all(Zero::is_zero));
                for (idx, v) in class.free.iter().enumerate() {
                    assert_eq!(*v == BigInt::one(), idx == j, "free unit coordinate");
                    assert!(v.is_zero() || v.is_one());
                }
                witnesses += 1;
            }
            for i in 0..s.torsion_moduli().len() {
                let (_, g) = s.torsion_generator(i);
                let k = s.solve_coboundary_rat(&as_rats(&g)).expect("torsion bounds over ℚ");
                let t = DifferentialCocycle::new(
                    x,
                    q,
                    g.clone(),
                    k.iter().map(|v| -v).collect(),
                    vec![BigRational::zero(); x.count(q)],
                )
                .unwrap();
                assert_eq!(check_cocycle(x, &t), Ok(true));
                let class = char_class(x, &t).unwrap();
                assert!(class.free.iter().all(Zero::is_zero));
                for (idx, v) in class.torsion.iter().enumerate() {
                    assert_eq!(*v == BigInt::one(), idx == i, "torsion unit coordinate");
                }
                witnesses += 1;
            }
        }
    }

    println!(
        "criterion 09 PASS: hand-computed H* tables matched; square commuted on {RANDOM_COCYCLES} random cocycles; {gauge_accepts} gauge shifts accepted, {curvature_rejects} curvature-distinct pairs rejected; flat π₀ = Tors H^q incl. ℤ/2 on ℝP²; {witnesses} surjectivity witnesses"
    );
}

fn rust_sources(dir: &Path, out: &mut Vec<PathBuf>) {
    for entry in std::fs::read_dir(dir).expect("source dir readable") {
        let path = entry.expect("dir entry").path();
        if path.is_dir() {
            rust_sources(&path, out);
        } else if path.extension().is_some_and(|e| e == "rs") {
            out.push(path);
        }
    }
}

#[test]
fn criterion_10_analytic_scope_as_contracts() {
    // No analytic reproduction is attempted; the contracts below are the
    // whole acceptance surface for that part of the theory.

    // (a) exactness: no floating-point types anywhere in the sources
    let core_src = Path::new(env!("CARGO_MANIFEST_DIR")).join("src");
    let cli_src = Path::new(env!("CARGO_MANIFEST_DIR"))
        .parent()
        .unwrap()
        .join("cli")
        .join("src");
    let mut files = Vec::new();
    rust_sources(&core_src, &mut files);
    rust_sources(&cli_src, &mut files);
    assert!(files.len() >= 10, "source scan found the crates");
    for f in &files {
        let text = std::fs::read_to_string(f).expect("source readable");
        assert!(
            !text.contains("f64") && !text.contains("f32"),
            "floating point type in {}",
            f.display()
        );
    }

    // (b) typing contracts: every η/ξ value is an exact residue in [0,1)
    let mut rng = rng();
    for _ in 0..300 {
        let r = rat(rng.gen_range(-50..=50), rng.gen_range(1..=24));
        let v = QModZ::new(r);
        assert!(!v.fraction().is_negative() && v.fraction() < &BigRational::one());
    }
    for k in -8i64..=8 {
        let v = spin_case_eta(k);
        assert!(v == QModZ::from_i64(0, 1) || v == QModZ::from_i64(1, 2));
    }

    // (c) degree bookkeeping composes with the coefficient tables
    for n in 0..=16u32 {
        for s in [
            TangentialStructure::Spin,
            TangentialStructure::PinPlus,
            TangentialStructure::PinMinus,
        ] {
            let m = -index_degree(s, n);
            assert!(!ko_point(m).label().is_empty());
            assert!(!ko_point_differential(m).label().is_empty());
        }
    }
    // the 2-dimensional Pin⁺ index lands in KO⁻¹(pt) = ℤ/2, matching the
    // stored bordism group; in dimension 4 it lands in 0 against ℤ/16
    assert_eq!(
        ko_point(-index_degree(TangentialStructure::PinPlus, 2)).label(),
        bordism_lookup(BordismStructure::PinPlus, 2).unwrap().group
    );
    assert_eq!(ko_point(-index_degree(TangentialStructure::PinPlus, 4)), KoGroup::Zero);

    // (d) the evaluator consistency round-trip in both directions
    for k in (0..2048u64).step_by(97) {
        let xi = QModZ::from_i64(k as i64, 2048);
        let class = consistency_check_pushforward(&xi).unwrap();
        assert_eq!(class, RpClass::rp20(k));
        assert_eq!(zhang_eta(class), xi);
    }
    for _ in 0..100 {
        let k = rng.gen_range(0..=8usize);
        let data: Vec<FixedPointDatum> = (0..k)
            .map(|_| {
                FixedPointDatum::new(
                    if rng.gen() { 1 } else { -1 },
                    BigRational::from_integer(rng.gen_range(-20..=20i64).into()),
                )
                .unwrap()
            })
            .collect();
        let xi = stolz_eta(&data, 12, false).unwrap();
        assert_eq!(zhang_eta(consistency_check_pushforward(&xi).unwrap()), xi);
    }

    // the cover map stays exact end to end on a sample word
    let sig = Signature::new(4, 2);
    let word = vec![
        Vector::basis(sig, 1).unwrap(),
        Vector::new(sig, vec![rat(3, 5), rat(4, 5), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)]).unwrap(),
    ];
    let g = pin_from_vectors(sig, word).unwrap();
    let m = cover_map(&g);
    assert_eq!(m.det(), BigRational::one());

    println!(
        "criterion 10 PASS: analytic theorems not reproduced; gates are the no-float source scan ({} files), ℚ/ℤ typing contracts, degree/coefficient bookkeeping, and the two-sided evaluator round-trip",
        files.len()
    );
}
