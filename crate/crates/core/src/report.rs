//! Verification suites and report emission: every suite runs a list of
//! exact checks and produces [`CheckRecord`]s that can be rendered as JSON
//! (stable schema) or Markdown.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num::{One, Zero};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cohomology::{assemble_h2_quotient, AbelianGroupShape, InvolutionModule};
use crate::exterior;
use crate::hodge::{self, Surface};
use crate::isometry;
use crate::lattice::Lattice;
use crate::matrix::{self, rat, Int};
use crate::perm;
use crate::schur::{self, Partition, SquareKind};
use crate::weyl::{self, MatrixGroup};

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("unknown suite '{0}'; expected one of lattices|exterior|cohomology|weyl|hodge|lr|galois|all")]
    UnknownSuite(String),
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("runtime failure: {0}")]
    Runtime(String),
}

fn runtime<E: fmt::Display>(e: E) -> ReportError {
    ReportError::Runtime(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One verification check: pass iff `expected` equals `actual` exactly.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub description: String,
    pub paper_ref: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

fn check(
    id: &str,
    description: &str,
    paper_ref: &str,
    expected: impl fmt::Display,
    actual: impl fmt::Display,
) -> CheckRecord {
    let expected = expected.to_string();
    let actual = actual.to_string();
    let status = if expected == actual { Status::Pass } else { Status::Fail };
    CheckRecord {
        id: id.to_string(),
        description: description.to_string(),
        paper_ref: paper_ref.to_string(),
        expected,
        actual,
        status,
    }
}

fn note(id: &str, description: &str, paper_ref: &str) -> CheckRecord {
    CheckRecord {
        id: id.to_string(),
        description: description.to_string(),
        paper_ref: paper_ref.to_string(),
        expected: String::new(),
        actual: String::new(),
        status: Status::Skip,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lattices,
    Exterior,
    Cohomology,
    Weyl,
    Hodge,
    Lr,
    Galois,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Lattices,
        Suite::Exterior,
        Suite::Cohomology,
        Suite::Weyl,
        Suite::Hodge,
        Suite::Lr,
        Suite::Galois,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Lattices => "lattices",
            Suite::Exterior => "exterior",
            Suite::Cohomology => "cohomology",
            Suite::Weyl => "weyl",
            Suite::Hodge => "hodge",
            Suite::Lr => "lr",
            Suite::Galois => "galois",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, ReportError> {
        match s {
            "lattices" => Ok(Suite::Lattices),
            "exterior" => Ok(Suite::Exterior),
            "cohomology" => Ok(Suite::Cohomology),
            "weyl" => Ok(Suite::Weyl),
            "hodge" => Ok(Suite::Hodge),
            "lr" => Ok(Suite::Lr),
            "galois" => Ok(Suite::Galois),
            "all" => Ok(Suite::All),
            other => Err(ReportError::UnknownSuite(other.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    /// directory for caching enumerated group elements
    pub cache: Option<PathBuf>,
    /// cap for group enumerations
    pub max_order: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { cache: None, max_order: 1_000_000 }
    }
}

/// Runs one suite (or all of them, in fixed order).
pub fn run(suite: Suite, opts: &RunOptions) -> Result<Vec<CheckRecord>, ReportError> {
    match suite {
        Suite::Lattices => lattices_suite(),
        Suite::Exterior => exterior_suite(),
        Suite::Cohomology => cohomology_suite(),
        Suite::Weyl => weyl_suite(opts),
        Suite::Hodge => hodge_suite(),
        Suite::Lr => lr_suite(),
        Suite::Galois => galois_suite(),
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::ALL {
                out.extend(run(s, opts)?);
            }
            Ok(out)
        }
    }
}

fn sig_str(s: (usize, usize)) -> String {
    format!("({},{})", s.0, s.1)
}

fn lattices_suite() -> Result<Vec<CheckRecord>, ReportError> {
    let lambda = Lattice::named("Lambda4").map_err(runtime)?;
    let u = Lattice::named("U").map_err(runtime)?;
    let e6 = Lattice::named("E6").map_err(runtime)?;
    let e8 = Lattice::named("E8").map_err(runtime)?;
    let k = Lattice::named("K").map_err(runtime)?;
    let l = Lattice::named("L").map_err(runtime)?;
    let divisors: Vec<String> = e6
        .discriminant_group()
        .elementary_divisors
        .iter()
        .map(|d| d.to_string())
        .collect();
    let mut records = vec![
        check("disc_Lambda", "discriminant of the intersection lattice Λ", "§5", -3, lambda.discriminant()),
        check("disc_U", "discriminant of the hyperbolic plane U", "§5", -1, u.discriminant()),
        check("disc_E8", "discriminant of E8", "§5", 1, e8.discriminant()),
        check("disc_E6", "discriminant of E6", "§5", 3, e6.discriminant()),
        check("sig_K", "signature of K = U¹² ⊕ Λ", "§5", "(13,15)", sig_str(k.signature())),
        check("sig_L", "signature of L = U¹³ ⊕ E8(−1)", "§5", "(13,21)", sig_str(l.signature())),
        check(
            "discgroup_E6",
            "discriminant group of E6",
            "§5-§6",
            "[3]",
            format!("[{}]", divisors.join(",")),
        ),
        check("K_even", "K is an even lattice", "§5", true, k.is_even()),
        check("L_even", "L is an even lattice", "§5", true, l.is_even()),
        check("L_unimodular", "L is unimodular", "§5", true, l.is_unimodular()),
        check("rank_K", "rank of K", "§5", 28, k.rank()),
        check("rank_L", "rank of L", "§5", 34, l.rank()),
    ];
    records.extend(glue_records()?);
    Ok(records)
}

fn exterior_suite() -> Result<Vec<CheckRecord>, ReportError> {
    let gram = exterior::gram_lx();
    let lat = Lattice::new(gram).map_err(runtime)?;
    let (blocks_ok, _) = exterior::verify_k2_decomposition();
    let expected_disc = Int::from(2).pow(28) * Int::from(-3);
    let theta = exterior::theta_class(4);
    let deg = exterior::deg_top(&theta.wedge_pow(4).map_err(runtime)?, 4).map_err(runtime)?;
    let prym = exterior::prym_class_report();
    Ok(vec![
        check("deg_theta4", "top degree of [Θ]⁴ equals 4!", "§2", 24, deg),
        check(
            "gram_blocks",
            "28×28 exterior Gram decomposes as Λ(2) ⊕ U(2)¹²",
            "§5",
            true,
            blocks_ok,
        ),
        check("gram_sig", "signature of the exterior Gram", "§5", "(13,15)", sig_str(lat.signature())),
        check("gram_disc", "discriminant of the exterior Gram", "§5", expected_disc, lat.discriminant()),
        check("prym_alpha_sq", "deg(α²) for α = [Θ]/3", "§6", rat(8, 3), prym.deg_alpha_sq),
        check("prym_lambda_ky", "deg(λ·K_Y)", "§6", 16, prym.deg_lambda_ky),
        check("prym_lambda_sq", "deg(λ²) from adjunction with genus 9", "§6", 0, prym.deg_lambda_sq),
        check("prym_beta_sq", "deg(β²)", "§6", rat(-8, 3), prym.deg_beta_sq),
        check("prym_half_norm_e", "half the self-intersection of e = 2β", "§6", rat(-4, 3), prym.half_norm_e),
    ])
}

fn cohomology_suite() -> Result<Vec<CheckRecord>, ReportError> {
    let minus8 = InvolutionModule::minus_one(8);
    let plus1 = InvolutionModule::plus_one(1);
    let swap = InvolutionModule::swap();
    let h11 = minus8.h_p(1);
    let h20 = plus1.h_p(2);
    let assembled = assemble_h2_quotient(34, &[h11.clone(), h20.clone()]).map_err(runtime)?;
    Ok(vec![
        check(
            "h_odd_minus",
            "H^odd(ℤ/2, ℤ⁸ with σ = −1)",
            "§4",
            AbelianGroupShape::elementary_two(8),
            h11,
        ),
        check(
            "h_even_minus",
            "H^even>0(ℤ/2, ℤ⁸ with σ = −1)",
            "§4",
            AbelianGroupShape::trivial(),
            minus8.h_p(2),
        ),
        check(
            "h_even_plus",
            "H^even>0(ℤ/2, ℤ with σ = +1)",
            "§4",
            AbelianGroupShape::elementary_two(1),
            h20,
        ),
        check(
            "h_swap_acyclic",
            "H^p(ℤ/2, ℤ² with swap) vanishes for p > 0",
            "§4",
            AbelianGroupShape::trivial(),
            swap.h_p(1),
        ),
        check(
            "h2_quotient",
            "assembled H²(Y⁺, ℤ)",
            "§4",
            "Z^34 + (Z/2)^9",
            assembled,
        ),
    ])
}

fn hash_key(gram: &Lattice, gens: &[Vec<i64>]) -> String {
    let mut h = Sha256::new();
    for row in gram.gram() {
        for e in row {
            h.update(e.to_string().as_bytes());
            h.update(b",");
        }
        h.update(b";");
    }
    for g in gens {
        for &e in g {
            h.update(e.to_le_bytes());
        }
        h.update(b"|");
    }
    hex::encode(h.finalize())
}

fn generate_cached(
    l: &Lattice,
    gens: &[Vec<i64>],
    cap: usize,
    cache: Option<&Path>,
) -> Result<MatrixGroup, ReportError> {
    let path = cache.map(|dir| dir.join(format!("group-{}.json", hash_key(l, gens))));
    if let Some(p) = &path {
        if p.exists() {
            let data = std::fs::read_to_string(p)?;
            if let Ok(elements) = serde_json::from_str::<Vec<Vec<i64>>>(&data) {
                if let Some(g) = MatrixGroup::from_parts(l.rank(), gens.to_vec(), elements) {
                    return Ok(g);
                }
            }
        }
    }
    let g = weyl::generate(l, gens, cap).map_err(runtime)?;
    if let Some(p) = &path {
        if let Some(dir) = p.parent() {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(p, serde_json::to_string(g.elements()).map_err(runtime)?)?;
    }
    Ok(g)
}

fn weyl_suite(opts: &RunOptions) -> Result<Vec<CheckRecord>, ReportError> {
    let e6 = Lattice::named("E6").map_err(runtime)?;
    let gens = weyl::simple_reflections(&e6).map_err(runtime)?;
    let cache = opts.cache.as_deref();
    let w = generate_cached(&e6, &gens, opts.max_order, cache)?;
    let mut aut_gens = gens.clone();
    aut_gens.push(weyl::flat_neg_identity(6));
    let aut = generate_cached(&e6, &aut_gens, opts.max_order, cache)?;
    let plus = weyl::sign_kernel(&w);

    let w_action = weyl::discriminant_action(&w, &e6).map_err(runtime)?;
    let neg = weyl::generate(&e6, &[weyl::flat_neg_identity(6)], 4).map_err(runtime)?;
    let neg_action = weyl::discriminant_action(&neg, &e6).map_err(runtime)?;

    let roots = weyl::roots(&e6).map_err(runtime)?;
    let root_orbits = weyl::line_orbits(&w, &roots).map_err(runtime)?;
    let duals = weyl::dual_vectors_with_norm(&e6, &rat(4, 3)).map_err(runtime)?;
    let dual_orbits = weyl::line_orbits(&w, &duals).map_err(runtime)?;

    let mut records = vec![
        check("weyl_order", "order of W(E6), closure of 6 simple reflections", "§6-§7", 51840, w.order()),
        check("weyl_plus_order", "order of the determinant-1 kernel W(E6)⁺", "Thm 1.3", 25920, plus.order()),
        check("aut_order", "order of Aut(E6) = W(E6) × {±1}", "§6", 103680, aut.order()),
        check("disc_action_weyl", "W(E6) acts trivially on E6*/E6 ≅ ℤ/3", "§6", true, w_action.is_trivial()),
        check("disc_action_neg", "−id acts nontrivially on E6*/E6", "§6", false, neg_action.is_trivial()),
        check("root_count", "number of roots of E6", "§6", 72, roots.len()),
        check(
            "root_lines",
            "root line orbit (lines, stabilizer order)",
            "§7",
            "[(36, 1440)]",
            format!("{root_orbits:?}"),
        ),
        check("dual_min_count", "minimal vectors of E6* of norm 4/3", "§6", 54, duals.len()),
        check(
            "dual_lines",
            "dual minimal line orbit (lines, stabilizer order)",
            "§7",
            "[(27, 1920)]",
            format!("{dual_orbits:?}"),
        ),
        check(
            "char_irreducible",
            "Σ trace(g)² = |W(E6)| certifies irreducibility on E6 ⊗ ℂ",
            "§7",
            true,
            weyl::character_irreducibility(&w),
        ),
        check("a6_filter_1296", "360 divides 2⁴·3⁴ = 1296", "§7", false, weyl::a6_order_filter(1296)),
        check("a6_filter_25920", "360 divides 25920", "§7", true, weyl::a6_order_filter(25920)),
    ];
    records.push(note(
        "maximal_order_note",
        "the listed maximal subgroup order 2⁷·3⁹ = 2519424 exceeds |W(E6)| = 51840 and is recorded as a suspected typo; no corrected value is assumed",
        "§7",
    ));
    Ok(records)
}

fn hodge_suite() -> Result<Vec<CheckRecord>, ReportError> {
    let y = hodge::hodge_diamond(Surface::Y);
    let yp = hodge::hodge_diamond(Surface::Yplus);
    let t = hodge::signature_table();
    Ok(vec![
        check("chern_c1", "coefficient of θ in c₁(Y)", "§2", -2, hodge::chern_coefficient(1)),
        check("chi_Y_g4", "topological Euler characteristic χ(Y), g = 4", "§3", 72, hodge::euler_characteristic(4)),
        check("chi_Y_g2", "χ(Y) for g = 2 (two points)", "§3", 2, hodge::euler_characteristic(2)),
        check("chi_Y_g3", "χ(Y) for g = 3 (genus-7 curve)", "§3", -12, hodge::euler_characteristic(3)),
        check("chi_O_Y", "holomorphic Euler characteristic χ(O_Y)", "§3", 14, hodge::holomorphic_euler(Surface::Y)),
        check("chi_O_Yplus", "χ(O_{Y⁺})", "§3", 7, hodge::holomorphic_euler(Surface::Yplus)),
        check("diamond_Y", "Hodge numbers (h20, h11, h10) of Y", "§3", "(17, 52, 4)", format!("({}, {}, {})", y.h20, y.h11, y.h10)),
        check("diamond_Yplus", "Hodge numbers (h20, h11, h10) of Y⁺", "§3", "(6, 22, 0)", format!("({}, {}, {})", yp.h20, yp.h11, yp.h10)),
        check("b2_Y", "second Betti number of Y", "§3", 86, y.b2()),
        check("b2_Yplus", "second Betti number of Y⁺", "§3", 34, yp.b2()),
        check("sig_H2Y", "signature of H²(Y)", "§3", "(35, 51)", format!("({}, {})", t.h2_y.0, t.h2_y.1)),
        check("sig_H2Yplus", "signature of H²(Y⁺)", "§3", "(13, 21)", format!("({}, {})", t.h2_yplus.0, t.h2_yplus.1)),
        check("sig_H2X", "signature of the pullback of H²(X)", "§3", "(13, 15)", format!("({}, {})", t.h2_x.0, t.h2_x.1)),
        check("sig_Vminus", "signature of V₋", "§3", "(22, 30)", format!("({}, {})", t.v_minus.0, t.v_minus.1)),
        check("sig_Vplus", "signature of V₊", "§3", "(0, 6)", format!("({}, {})", t.v_plus.0, t.v_plus.1)),
        check("diff_degree_2", "degree of the difference morphism, n = 2", "§1", 6, hodge::difference_degree(2)),
        check("diff_degree_3", "degree of the difference morphism, n = 3", "§1", 20, hodge::difference_degree(3)),
    ])
}

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}

fn schur_names(v: &schur::SchurVector) -> String {
    let names: Vec<String> = v
        .coeffs
        .iter()
        .map(|(p, c)| {
            if c.is_one() {
                format!("s{p}")
            } else {
                format!("{c}*s{p}")
            }
        })
        .collect();
    names.join(" + ")
}

fn lr_suite() -> Result<Vec<CheckRecord>, ReportError> {
    let p3 = part(&[1, 1, 1]);
    let prod33 = schur::lr_product(&p3, &p3, 6);
    let prod42 = schur::lr_product(&part(&[1, 1]), &part(&[1, 1, 1, 1]), 6);
    let f = schur::SchurVector::single(p3.clone(), 6).map_err(runtime)?;
    let wedge = schur::wedge_or_sym_square(&f, SquareKind::Wedge).map_err(runtime)?;
    let labels33 = schur::convolution_labels(3, 3, 4).map_err(runtime)?;
    let labels42 = schur::convolution_labels(4, 2, 4).map_err(runtime)?;

    // the paper's labels, conjugated, must exactly exhaust the LR products
    let conj33: Vec<String> = labels33.labels.iter().map(|l| l.conjugate().to_string()).collect();
    let got33: Vec<String> = prod33.coeffs.keys().rev().map(|p| p.to_string()).collect();
    let conj42: Vec<String> = labels42.labels.iter().map(|l| l.conjugate().to_string()).collect();
    let got42: Vec<String> = prod42.coeffs.keys().rev().map(|p| p.to_string()).collect();

    let mut oracle_ok = true;
    let mut oracle_cases = 0usize;
    let mut all_parts = vec![Partition::empty()];
    for n in 1..=6u32 {
        all_parts.extend(schur::partitions_of(n, 6));
    }
    // unordered pairs against the oracle; ordered pairs by LR symmetry
    for (i, p) in all_parts.iter().enumerate() {
        for q in &all_parts[i..] {
            let lr = schur::lr_product(p, q, 6);
            if lr.coeffs != schur::lr_product(q, p, 6).coeffs {
                oracle_ok = false;
            }
            let prod = schur::poly_mul(
                &schur::schur_expand(p, 6).map_err(runtime)?,
                &schur::schur_expand(q, 6).map_err(runtime)?,
            );
            let decomposed = schur::schur_decompose(prod, 6).map_err(runtime)?;
            if lr.coeffs != decomposed.coeffs {
                oracle_ok = false;
            }
            oracle_cases += 1;
        }
    }

    Ok(vec![
        check(
            "lr_33",
            "s(1³)·s(1³) matches the conjugated labels (3+i, 3−i)",
            "§8",
            conj33.join(" "),
            got33.join(" "),
        ),
        check(
            "lr_42",
            "s(1²)·s(1⁴) matches the conjugated labels (4+i, 2−i)",
            "§8-§9",
            conj42.join(" "),
            got42.join(" "),
        ),
        check(
            "wedge_square",
            "Λ² of s(1³) in 6 variables",
            "§9",
            "s(1,1,1,1,1,1) + s(2,2,1,1)",
            schur_names(&wedge),
        ),
        check(
            "wedge_dims",
            "dimensions 189 + 1 = C(20,2)",
            "§9",
            190,
            wedge.dimension(6).map_err(runtime)?,
        ),
        check(
            "dim_2211",
            "hook-content dimension of (2,2,1,1) for N = 6",
            "§9",
            189,
            schur::dim_irrep(&part(&[2, 2, 1, 1]), 6).map_err(runtime)?,
        ),
        check(
            "labels_33",
            "convolution labels for m = n = 3, g = 4",
            "§8",
            "(3,3) (4,2) (5,1) (6)",
            labels33.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "),
        ),
        check(
            "labels_42",
            "convolution labels for m = 4, n = 2, g = 4",
            "§9",
            "(4,2) (5,1) (6)",
            labels42.labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "),
        ),
        check(
            "lr_oracle",
            &format!(
                "LR products agree with the monomial oracle on {oracle_cases} pairs (sizes ≤ 6, 6 variables)"
            ),
            "§8",
            true,
            oracle_ok,
        ),
    ])
}

fn galois_suite() -> Result<Vec<CheckRecord>, ReportError> {
    let g2 = perm::subset_action(2).map_err(runtime)?;
    let rank2 = perm::rank_orbitals(&g2).map_err(runtime)?;
    let scan = perm::overgroup_scan(&g2).map_err(runtime)?;
    let g3 = perm::subset_action(3).map_err(runtime)?;
    Ok(vec![
        check("action_degree", "degree of the 𝔖₄ action on 2-subsets", "§10", 6, g2.degree()),
        check("action_order", "order of the image (injectivity)", "§10", 24, g2.order()),
        check("action_rank", "orbital rank of the action", "§10", 3, rank2),
        check(
            "degree_consistency",
            "action degree equals the difference-morphism degree C(4,2)",
            "§1, §10",
            hodge::difference_degree(2),
            g2.degree(),
        ),
        check(
            "scan_certificate",
            &format!(
                "every 2-transitive overgroup in 𝔖₆ contains 𝔄₆ ({} subgroups scanned)",
                scan.overgroups.len()
            ),
            "§10, Thm 1.4",
            true,
            scan.all_two_transitive_contain_alternating,
        ),
        check("action_not_2transitive", "the base action itself is not 2-transitive", "§10", false, rank2 == 2),
        check("action3_degree", "degree of the 𝔖₆ action on 3-subsets", "§10", 20, g3.degree()),
        check("action3_order", "order of the degree-20 image", "§10", 720, g3.order()),
        check("action3_rank", "orbital rank of the degree-20 action", "§10", 4, perm::rank_orbitals(&g3).map_err(runtime)?),
    ])
}

#[derive(Serialize)]
struct Report<'a> {
    version: u32,
    suite: &'a str,
    records: &'a [CheckRecord],
}

/// JSON report with a stable schema and key order.
pub fn emit_json(suite: &str, records: &[CheckRecord]) -> String {
    let report = Report { version: 1, suite, records };
    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
    s.push('\n');
    s
}

fn markdown_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Markdown report: one table of records, plus the Hodge diamond and
/// signature tables for the hodge suite.
pub fn emit_markdown(suite: Suite, records: &[CheckRecord]) -> String {
    let mut out = String::new();
    out.push_str(&format!("# Verification report: {suite}\n\n"));
    if matches!(suite, Suite::Hodge | Suite::All) {
        let y = hodge::hodge_diamond(Surface::Y);
        let yp = hodge::hodge_diamond(Surface::Yplus);
        out.push_str("## Hodge diamonds\n\n");
        out.push_str("| surface | h20 | h11 | h10 |\n|---|---|---|---|\n");
        out.push_str(&format!("| Y | {} | {} | {} |\n", y.h20, y.h11, y.h10));
        out.push_str(&format!("| Y+ | {} | {} | {} |\n\n", yp.h20, yp.h11, yp.h10));
        let t = hodge::signature_table();
        out.push_str("## Signatures\n\n| space | s+ | s- |\n|---|---|---|\n");
        for (name, (p, m)) in t.rows() {
            out.push_str(&format!("| {name} | {p} | {m} |\n"));
        }
        out.push('\n');
    }
    out.push_str("## Checks\n\n");
    out.push_str("| id | description | expected | actual | status |\n|---|---|---|---|---|\n");
    for r in records {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            markdown_escape(&r.id),
            markdown_escape(&r.description),
            markdown_escape(&r.expected),
            markdown_escape(&r.actual),
            status
        ));
    }
    out
}

/// Glue-pipeline records: K ⊕ E6(−1) glued along a ℤ/3-diagonal class to an
/// even unimodular lattice of signature (13,21), whose integral
/// orthocomplement of K is isometric to E6(−1) again.
pub fn glue_records() -> Result<Vec<CheckRecord>, ReportError> {
    let k = Lattice::named("K").map_err(runtime)?;
    let e6m = Lattice::named("E6_neg").map_err(runtime)?;
    let ambient = k.direct_sum(&e6m);
    let (over, glue) = isometry::glue_by_diagonal_class(&k, &e6m).map_err(runtime)?;
    let glued = &over.lattice;
    let norm = ambient.pair_rat(&glue, &glue);
    let norm_even = norm.is_integer() && (norm.to_integer() % Int::from(2)).is_zero();

    // K in the coordinates of the glued lattice
    let mut k_rows: Vec<Vec<Int>> = Vec::with_capacity(k.rank());
    for i in 0..k.rank() {
        let mut e = vec![matrix::Rat::zero(); ambient.rank()];
        e[i] = matrix::Rat::one();
        let coords = over
            .coords_of(&e)
            .ok_or_else(|| ReportError::Runtime("K does not embed in the glued lattice".into()))?;
        k_rows.push(coords);
    }
    let comp = isometry::orthocomplement(glued, &k_rows).map_err(runtime)?;
    let witness = isometry::is_isometric(&comp.lattice, &e6m).map_err(runtime)?;
    Ok(vec![
        check("glue_norm_even", "glue class has even integral self-pairing", "§5-§6", true, norm_even),
        check("glued_even", "glued overlattice is even", "§5", true, glued.is_even()),
        check("glued_unimodular", "glued overlattice is unimodular", "§5", true, glued.is_unimodular()),
        check("glued_sig", "signature of the glued overlattice", "§5", "(13,21)", sig_str(glued.signature())),
        check("Kperp_rank", "rank of the orthocomplement of K", "§5", 6, comp.lattice.rank()),
        check("Kperp_disc", "discriminant of the orthocomplement of K", "§5", 3, comp.lattice.discriminant()),
        check("Kperp_even", "orthocomplement of K is even", "§5", true, comp.lattice.is_even()),
        check(
            "Kperp_neg_definite",
            "orthocomplement of K is negative definite",
            "§5",
            true,
            comp.lattice.is_negative_definite(),
        ),
        check(
            "Kperp_isometric_E6neg",
            "orthocomplement of K is isometric to E6(−1)",
            "§5",
            true,
            witness.is_some(),
        ),
    ])
}
