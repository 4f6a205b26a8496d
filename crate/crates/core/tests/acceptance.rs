//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `cargo test --test acceptance -- --nocapture`
//! to see them all).

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use theta_e6::cohomology::{assemble_h2_quotient, AbelianGroupShape, InvolutionModule};
use theta_e6::exterior;
use theta_e6::hodge::{self, Surface};
use theta_e6::isometry;
use theta_e6::lattice::Lattice;
use theta_e6::matrix::{int, rat, Int, Rat};
use theta_e6::perm::{self, PermGroup, Permutation};
use theta_e6::schur::{self, Partition, SquareKind};
use theta_e6::weyl;

struct Criterion {
    number: u32,
    name: &'static str,
    failed: bool,
}

impl Criterion {
    fn new(number: u32, name: &'static str) -> Self {
        Criterion { number, name, failed: false }
    }

    fn expect(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failed = true;
            eprintln!("criterion {}: check failed: {what}", self.number);
        }
    }

    fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, actual: T) {
        if expected != actual {
            self.failed = true;
            eprintln!(
                "criterion {}: {what}: expected {expected:?}, got {actual:?}",
                self.number
            );
        }
    }

    fn finish(self) {
        let status = if self.failed { "FAIL" } else { "pass" };
        println!("criterion {:>2} ({}): {status}", self.number, self.name);
        assert!(!self.failed, "criterion {} ({}) failed", self.number, self.name);
    }
}

#[test]
fn criterion_01_lattice_invariants() {
    let mut c = Criterion::new(1, "lattice invariants");
    let lambda = Lattice::named("Lambda4").unwrap();
    let u = Lattice::named("U").unwrap();
    let e6 = Lattice::named("E6").unwrap();
    let e8 = Lattice::named("E8").unwrap();
    let k = Lattice::named("K").unwrap();
    let l = Lattice::named("L").unwrap();
    c.expect_eq("disc(Lambda)", int(-3), lambda.discriminant());
    c.expect_eq("disc(U)", int(-1), u.discriminant());
    c.expect_eq("disc(E8)", int(1), e8.discriminant());
    c.expect_eq("signature(K)", (13, 15), k.signature());
    c.expect_eq("signature(L)", (13, 21), l.signature());
    c.expect_eq(
        "disc-group(E6)",
        vec![int(3)],
        e6.discriminant_group().elementary_divisors,
    );
    c.expect("K even", k.is_even());
    c.expect("L even", l.is_even());
    c.finish();
}

#[test]
fn criterion_02_gram_reconstruction() {
    let mut c = Criterion::new(2, "exterior Gram reconstruction");
    let (blocks_ok, _) = exterior::verify_k2_decomposition();
    c.expect("gram_LX = Lambda(2) + U(2)^12 with zero cross-terms", blocks_ok);
    let lat = Lattice::new(exterior::gram_lx()).unwrap();
    c.expect_eq("signature", (13, 15), lat.signature());
    c.expect_eq(
        "discriminant",
        Int::from(2).pow(28) * Int::from(-3),
        lat.discriminant(),
    );
    c.finish();
}

#[test]
fn criterion_03_glue_pipeline() {
    let mut c = Criterion::new(3, "glue pipeline");
    let k = Lattice::named("K").unwrap();
    let e6m = Lattice::named("E6_neg").unwrap();
    let (over, _glue) = isometry::glue_by_diagonal_class(&k, &e6m).unwrap();
    let glued = &over.lattice;
    c.expect("glued lattice even", glued.is_even());
    c.expect("glued lattice unimodular", glued.is_unimodular());
    c.expect_eq("glued signature", (13, 21), glued.signature());

    let mut k_rows: Vec<Vec<Int>> = Vec::new();
    for i in 0..k.rank() {
        let mut e = vec![Rat::zero(); glued.rank()];
        e[i] = Rat::one();
        k_rows.push(over.coords_of(&e).expect("K embeds in the glued lattice"));
    }
    let comp = isometry::orthocomplement(glued, &k_rows).unwrap();
    c.expect_eq("orthocomplement rank", 6, comp.lattice.rank());
    c.expect_eq("orthocomplement discriminant", int(3), comp.lattice.discriminant());
    c.expect("orthocomplement even", comp.lattice.is_even());
    c.expect("orthocomplement negative definite", comp.lattice.is_negative_definite());
    match isometry::is_isometric(&comp.lattice, &e6m).unwrap() {
        Some(t) => c.expect(
            "isometry witness valid",
            isometry::isometry_witness_valid(&comp.lattice, &e6m, &t),
        ),
        None => c.expect("isometric to E6(-1)", false),
    }
    c.finish();
}

#[test]
fn criterion_04_weyl_group_facts() {
    let mut c = Criterion::new(4, "Weyl-group facts");
    let e6 = Lattice::named("E6").unwrap();
    let gens = weyl::simple_reflections(&e6).unwrap();
    let w = weyl::generate(&e6, &gens, 60_000).unwrap();
    c.expect_eq("|W(E6)|", 51_840, w.order());
    c.expect_eq("|sign kernel|", 25_920, weyl::sign_kernel(&w).order());
    let mut aut_gens = gens.clone();
    aut_gens.push(weyl::flat_neg_identity(6));
    let aut = weyl::generate(&e6, &aut_gens, 120_000).unwrap();
    c.expect_eq("|Aut(E6)|", 103_680, aut.order());

    let act = weyl::discriminant_action(&w, &e6).unwrap();
    c.expect("W(E6) trivial on E6*/E6", act.is_trivial());
    let neg = weyl::generate(&e6, &[weyl::flat_neg_identity(6)], 4).unwrap();
    c.expect(
        "-id nontrivial on E6*/E6",
        !weyl::discriminant_action(&neg, &e6).unwrap().is_trivial(),
    );

    let roots = weyl::roots(&e6).unwrap();
    c.expect_eq("root count", 72, roots.len());
    c.expect_eq(
        "root line orbit",
        vec![(36, 1440)],
        weyl::line_orbits(&w, &roots).unwrap(),
    );
    let duals = weyl::dual_vectors_with_norm(&e6, &rat(4, 3)).unwrap();
    c.expect_eq("dual minimal vectors", 54, duals.len());
    c.expect_eq(
        "dual line orbit",
        vec![(27, 1920)],
        weyl::line_orbits(&w, &duals).unwrap(),
    );
    c.expect("character sum = |G|", weyl::character_irreducibility(&w));
    c.finish();
}

#[test]
fn criterion_05_lagrange_filter() {
    let mut c = Criterion::new(5, "Lagrange filter");
    c.expect("360 does not divide 1296", !weyl::a6_order_filter(1296));
    c.expect("360 divides 25920", weyl::a6_order_filter(25_920));
    c.expect("360 divides 51840", weyl::a6_order_filter(51_840));
    c.finish();
}

#[test]
fn criterion_06_hodge_pipeline() {
    let mut c = Criterion::new(6, "Hodge pipeline");
    c.expect_eq("chi(Y)", 72, hodge::euler_characteristic(4));
    c.expect_eq("chi(O_Y)", 14, hodge::holomorphic_euler(Surface::Y));
    c.expect_eq("chi(O_Y+)", 7, hodge::holomorphic_euler(Surface::Yplus));
    let y = hodge::hodge_diamond(Surface::Y);
    let yp = hodge::hodge_diamond(Surface::Yplus);
    c.expect_eq("chi(Y+)", 36, yp.euler());
    c.expect_eq("diamond(Y)", (17, 52, 4), (y.h20, y.h11, y.h10));
    c.expect_eq("diamond(Y+)", (6, 22, 0), (yp.h20, yp.h11, yp.h10));
    c.expect_eq("b2(Y)", 86, y.b2());
    c.expect_eq("b2(Y+)", 34, yp.b2());
    let t = hodge::signature_table();
    c.expect_eq("sig H2(Y)", (35, 51), t.h2_y);
    c.expect_eq("sig H2(Y+)", (13, 21), t.h2_yplus);
    c.expect_eq("sig H2(X)", (13, 15), t.h2_x);
    c.expect_eq("sig V-", (22, 30), t.v_minus);
    c.expect_eq("sig V+", (0, 6), t.v_plus);
    let prym = exterior::prym_class_report();
    c.expect_eq("deg(alpha^2)", rat(8, 3), prym.deg_alpha_sq);
    c.expect_eq("deg(lambda.K_Y)", rat(16, 1), prym.deg_lambda_ky);
    c.expect_eq("deg(lambda^2)", rat(0, 1), prym.deg_lambda_sq);
    c.expect_eq("deg(beta^2)", rat(-8, 3), prym.deg_beta_sq);
    c.expect_eq("e^2/2", rat(-4, 3), prym.half_norm_e);
    c.finish();
}

#[test]
fn criterion_07_z2_cohomology() {
    let mut c = Criterion::new(7, "Z/2 cohomology");
    let minus8 = InvolutionModule::minus_one(8);
    c.expect_eq(
        "H^odd for sigma = -1 on Z^8",
        AbelianGroupShape::elementary_two(8),
        minus8.h_p(1),
    );
    c.expect_eq(
        "H^even>0 for sigma = -1 on Z^8",
        AbelianGroupShape::trivial(),
        minus8.h_p(2),
    );
    let plus1 = InvolutionModule::plus_one(1);
    c.expect_eq(
        "H^even>0 for sigma = +1 on Z",
        AbelianGroupShape::elementary_two(1),
        plus1.h_p(2),
    );
    let assembled = assemble_h2_quotient(34, &[minus8.h_p(1), plus1.h_p(2)]).unwrap();
    c.expect_eq("assembled H2(Y+)", "Z^34 + (Z/2)^9".to_string(), assembled.to_string());
    c.expect_eq("assembled free rank", 34, assembled.free_rank);
    c.expect_eq("assembled torsion order", Int::from(512), assembled.torsion_order());
    c.finish();
}

#[test]
fn criterion_08_lr_suite() {
    let mut c = Criterion::new(8, "Littlewood-Richardson suite");
    let part = |p: &[u32]| Partition::new(p.to_vec()).unwrap();

    // fundamental products versus the conjugated labels (m+i, n-i)
    for (m, n, p, q) in [
        (3u32, 3u32, part(&[1, 1, 1]), part(&[1, 1, 1])),
        (4, 2, part(&[1, 1, 1, 1]), part(&[1, 1])),
    ] {
        let labels = schur::convolution_labels(m, n, 4).unwrap();
        let expected: Vec<Partition> = {
            let mut v: Vec<Partition> = labels.labels.iter().map(|l| l.conjugate()).collect();
            v.sort();
            v
        };
        let prod = schur::lr_product(&p, &q, 6);
        c.expect(
            &format!("product {p} * {q} is multiplicity-free"),
            prod.coeffs.values().all(|v| v.is_one()),
        );
        let got: Vec<Partition> = prod.coeffs.keys().cloned().collect();
        c.expect_eq(&format!("constituents of {p} * {q}"), expected, got);
    }

    let f = schur::SchurVector::single(part(&[1, 1, 1]), 6).unwrap();
    let wedge = schur::wedge_or_sym_square(&f, SquareKind::Wedge).unwrap();
    let expected: Vec<Partition> = vec![part(&[1, 1, 1, 1, 1, 1]), part(&[2, 2, 1, 1])];
    c.expect_eq(
        "wedge square constituents",
        expected,
        wedge.coeffs.keys().cloned().collect::<Vec<_>>(),
    );
    c.expect_eq("dim s(2,2,1,1)", Int::from(189), schur::dim_irrep(&part(&[2, 2, 1, 1]), 6).unwrap());
    c.expect_eq("dim s(1^6)", Int::from(1), schur::dim_irrep(&part(&[1, 1, 1, 1, 1, 1]), 6).unwrap());
    c.expect_eq("wedge dimension", Int::from(190), wedge.dimension(6).unwrap());

    // brute-force monomial oracle over all partition pairs of size <= 6
    let mut all_parts = vec![Partition::empty()];
    for n in 1..=6u32 {
        all_parts.extend(schur::partitions_of(n, 6));
    }
    for (i, p) in all_parts.iter().enumerate() {
        for q in &all_parts[i..] {
            let lr = schur::lr_product(p, q, 6);
            c.expect(
                &format!("symmetry for {p}, {q}"),
                lr.coeffs == schur::lr_product(q, p, 6).coeffs,
            );
            let prod = schur::poly_mul(
                &schur::schur_expand(p, 6).unwrap(),
                &schur::schur_expand(q, 6).unwrap(),
            );
            let oracle = schur::schur_decompose(prod, 6).unwrap();
            c.expect(&format!("oracle for {p} * {q}"), lr.coeffs == oracle.coeffs);
        }
    }
    c.finish();
}

#[test]
fn criterion_09_galois_suite() {
    let mut c = Criterion::new(9, "Galois suite");
    let g = perm::subset_action(2).unwrap();
    c.expect_eq("degree", 6, g.degree());
    c.expect_eq("order", 24, g.order());
    c.expect_eq("orbital rank", 3, perm::rank_orbitals(&g).unwrap());
    let scan = perm::overgroup_scan(&g).unwrap();
    c.expect(
        "every 2-transitive overgroup contains A6",
        scan.all_two_transitive_contain_alternating,
    );
    c.expect(
        "scan reaches S6",
        scan.overgroups.iter().any(|r| r.order == 720),
    );
    c.expect_eq(
        "difference degree consistency",
        hodge::difference_degree(2),
        g.degree() as i64,
    );
    c.finish();
}

fn random_gram(rng: &mut ChaCha8Rng, n: usize) -> Option<Lattice> {
    let gram: Vec<Vec<Int>> = {
        let mut m = vec![vec![Int::zero(); n]; n];
        for i in 0..n {
            for j in 0..=i {
                let v = int(rng.gen_range(-3i64..=3));
                m[i][j] = v.clone();
                m[j][i] = v;
            }
        }
        m
    };
    Lattice::new(gram).ok().filter(|l| !l.discriminant().is_zero())
}

fn random_pos_def(rng: &mut ChaCha8Rng, n: usize) -> Lattice {
    loop {
        let b: Vec<Vec<Int>> = (0..n)
            .map(|_| (0..n).map(|_| int(rng.gen_range(-2i64..=2))).collect())
            .collect();
        let bt = theta_e6::matrix::transpose(&b);
        let gram = theta_e6::matrix::mat_mul(&b, &bt);
        if let Ok(l) = Lattice::new(gram) {
            if l.is_positive_definite() {
                return l;
            }
        }
    }
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Int>> {
    // a few elementary row operations with unit coefficients, so the entries
    // (and hence the rebased Gram norms) stay small
    let mut m = theta_e6::matrix::identity(n);
    for _ in 0..3 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let c = int(if rng.gen_bool(0.5) { 1 } else { -1 });
        for k in 0..n {
            let add = &c * &m[j][k];
            m[i][k] += add;
        }
    }
    m
}

#[test]
fn criterion_10_property_suites() {
    let mut c = Criterion::new(10, "property suites");
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e6);

    // lattice invariant algebra: direct-sum and rescale laws
    let mut cases = 0;
    while cases < 1000 {
        let (Some(a), Some(b)) = (random_gram(&mut rng, 3), random_gram(&mut rng, 2)) else {
            continue;
        };
        let sum = a.direct_sum(&b);
        let ok = sum.discriminant() == a.discriminant() * b.discriminant()
            && sum.rank() == a.rank() + b.rank()
            && {
                let (p1, m1) = a.signature();
                let (p2, m2) = b.signature();
                sum.signature() == (p1 + p2, m1 + m2)
            }
            && sum.is_even() == (a.is_even() && b.is_even());
        let n = int(rng.gen_range(1i64..=3));
        let r = a.rescale(&n).unwrap();
        let ok = ok && r.discriminant() == n.pow(a.rank() as u32) * a.discriminant();
        if !ok {
            c.expect("lattice invariant algebra", false);
            break;
        }
        cases += 1;
    }

    // isometry witness validity on randomly re-based definite lattices
    let mut iso_cases = 0;
    while iso_cases < 1000 {
        let g = random_pos_def(&mut rng, 3);
        let u = random_unimodular(&mut rng, 3);
        let ut = theta_e6::matrix::transpose(&u);
        let re_based = Lattice::new(theta_e6::matrix::mat_mul(
            &theta_e6::matrix::mat_mul(&u, g.gram()),
            &ut,
        ))
        .unwrap();
        // keep the short-vector enumeration bound small
        let max_diag = (0..3)
            .map(|i| re_based.gram()[i][i].clone())
            .max()
            .unwrap();
        if max_diag > int(16) {
            continue;
        }
        iso_cases += 1;
        match isometry::is_isometric(&re_based, &g).unwrap() {
            Some(t) => {
                if !isometry::isometry_witness_valid(&re_based, &g, &t) {
                    c.expect("isometry witness validity", false);
                    break;
                }
            }
            None => {
                c.expect("isometric lattices recognized", false);
                break;
            }
        }
    }

    // wedge graded-commutativity
    for _ in 0..1000 {
        let g = 3;
        let da = rng.gen_range(1u32..=3);
        let db = rng.gen_range(1u32..=3);
        let rand_homog = |rng: &mut ChaCha8Rng, d: u32| {
            let mut terms = Vec::new();
            for mask in 0u32..(1 << (2 * g)) {
                if mask.count_ones() == d && rng.gen_bool(0.3) {
                    terms.push((mask, rat(rng.gen_range(-3i64..=3), 1)));
                }
            }
            exterior::Multivector::from_terms(g as usize, &terms)
        };
        let a = rand_homog(&mut rng, da);
        let b = rand_homog(&mut rng, db);
        let ab = a.wedge(&b).unwrap();
        let sign = if (da * db) % 2 == 0 { 1 } else { -1 };
        let ba = b.wedge(&a).unwrap().scale(&rat(sign, 1));
        if ab != ba {
            c.expect("wedge graded-commutativity", false);
            break;
        }
    }

    // LR symmetry and the dimension homomorphism
    let parts_pool: Vec<Partition> = {
        let mut v = vec![Partition::empty()];
        for n in 1..=5u32 {
            v.extend(schur::partitions_of(n, 6));
        }
        v
    };
    for _ in 0..1000 {
        let p = &parts_pool[rng.gen_range(0..parts_pool.len())];
        let q = &parts_pool[rng.gen_range(0..parts_pool.len())];
        let lr = schur::lr_product(p, q, 6);
        if lr.coeffs != schur::lr_product(q, p, 6).coeffs {
            c.expect("LR symmetry", false);
            break;
        }
        let lhs = lr.dimension(6).unwrap();
        let rhs = schur::dim_irrep(p, 6).unwrap() * schur::dim_irrep(q, 6).unwrap();
        if lhs != rhs {
            c.expect("dimension homomorphism", false);
            break;
        }
    }

    // orbit-stabilizer products in random permutation groups
    for _ in 0..1000 {
        let n = rng.gen_range(3usize..=5);
        let gens: Vec<Permutation> = (0..2)
            .map(|_| {
                let mut images: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    images.swap(i, rng.gen_range(0..=i));
                }
                Permutation::new(images).unwrap()
            })
            .collect();
        let g = PermGroup::generate(n, &gens).unwrap();
        for point in 0..n {
            // orbit of the point
            let mut orbit = vec![false; n];
            orbit[point] = true;
            let mut stack = vec![point];
            while let Some(i) = stack.pop() {
                for gen in g.generators() {
                    let j = gen.apply(i);
                    if !orbit[j] {
                        orbit[j] = true;
                        stack.push(j);
                    }
                }
            }
            let orbit_size = orbit.iter().filter(|&&b| b).count();
            let stab_size = g.elements().filter(|p| p.apply(point) == point).count();
            if orbit_size * stab_size != g.order() {
                c.expect("orbit-stabilizer product", false);
                break;
            }
        }
    }

    c.finish();
}
