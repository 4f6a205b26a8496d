//! Exterior-algebra model of the cohomology ring of a ppav of dimension g.
//!
//! The cohomology ring is the exterior algebra on 2g generators
//! x₁..x_g, y₁..y_g with exact rational coefficients. Cup product is the
//! wedge product; the degree map reads off the coefficient of the top form
//! ω = x₁∧y₁∧···∧x_g∧y_g.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::lattice::Lattice;
use crate::matrix::{int, rat, IMat, Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExteriorError {
    #[error("multivectors live on different generator sets")]
    GeneratorMismatch,
    #[error("multivector is not homogeneous of top degree")]
    NotTopDegree,
}

/// Element of the exterior algebra on 2g generators.
///
/// Generator i (0-based) is x_{i+1} for i < g and y_{i+1-g} for i ≥ g.
/// Terms are keyed by generator subsets as bitmasks; the basis element for a
/// subset is the wedge of its generators in increasing index order. No zero
/// coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    g: usize,
    terms: BTreeMap<u32, Rat>,
}

impl Multivector {
    pub fn zero(g: usize) -> Self {
        assert!(g >= 1 && 2 * g <= 31);
        Multivector { g, terms: BTreeMap::new() }
    }

    pub fn from_terms(g: usize, terms: &[(u32, Rat)]) -> Self {
        let mut m = Multivector::zero(g);
        for (mask, c) in terms {
            m.add_term(*mask, c.clone());
        }
        m
    }

    /// The generator x_i (1-based).
    pub fn x(g: usize, i: usize) -> Self {
        assert!(1 <= i && i <= g);
        Multivector::from_terms(g, &[(1 << (i - 1), Rat::one())])
    }

    /// The generator y_i (1-based).
    pub fn y(g: usize, i: usize) -> Self {
        assert!(1 <= i && i <= g);
        Multivector::from_terms(g, &[(1 << (g + i - 1), Rat::one())])
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn terms(&self) -> &BTreeMap<u32, Rat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mask: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector, ExteriorError> {
        if self.g != other.g {
            return Err(ExteriorError::GeneratorMismatch);
        }
        let mut out = self.clone();
        for (mask, c) in &other.terms {
            out.add_term(*mask, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> Multivector {
        let mut out = Multivector::zero(self.g);
        for (mask, v) in &self.terms {
            out.add_term(*mask, v * c);
        }
        out
    }

    /// Wedge product with the Koszul sign convention.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector, ExteriorError> {
        if self.g != other.g {
            return Err(ExteriorError::GeneratorMismatch);
        }
        let mut out = Multivector::zero(self.g);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                let sign = koszul_sign(*ma, *mb);
                let c = ca * cb;
                out.add_term(ma | mb, if sign { -c } else { c });
            }
        }
        Ok(out)
    }

    pub fn wedge_pow(&self, k: usize) -> Result<Multivector, ExteriorError> {
        let mut out = Multivector::from_terms(self.g, &[(0, Rat::one())]);
        for _ in 0..k {
            out = out.wedge(self)?;
        }
        Ok(out)
    }

    /// True iff every term has the same degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.count_ones() == d)
    }
}

/// Sign of moving the generators of `b` into position past those of `a`:
/// true means negative. Counts pairs (i ∈ a, j ∈ b) with i > j.
fn koszul_sign(a: u32, b: u32) -> bool {
    let mut inversions = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        // generators of a with index > j
        inversions += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    inversions % 2 == 1
}

/// The theta class [Θ] = Σᵢ xᵢ∧yᵢ.
pub fn theta_class(g: usize) -> Multivector {
    let mut m = Multivector::zero(g);
    for i in 1..=g {
        m.add_term((1 << (i - 1)) | (1 << (g + i - 1)), Rat::one());
    }
    m
}

/// Coefficient of ω = x₁∧y₁∧···∧x_g∧y_g in a top-degree multivector.
pub fn deg_top(m: &Multivector, g: usize) -> Result<Rat, ExteriorError> {
    if m.g != g {
        return Err(ExteriorError::GeneratorMismatch);
    }
    let top: u32 = (1u32 << (2 * g)) - 1;
    if !m.is_homogeneous(2 * g as u32) {
        return Err(ExteriorError::NotTopDegree);
    }
    // ω = x₁∧y₁∧···∧x₄∧y₄ versus the increasing-order basis element for the
    // full subset: reorder x₁y₁x₂y₂… to x₁x₂…y₁y₂…, an even permutation for
    // every g since moving y_i past x_{i+1}..x_g costs g−i transpositions,
    // total g(g−1)/2 … computed exactly below.
    match m.terms.get(&top) {
        None => Ok(Rat::zero()),
        Some(c) => {
            // sign relating the sorted basis element to ω
            let mut sign = false;
            let mut acc: u32 = 0;
            for i in 1..=g {
                let xm = 1u32 << (i - 1);
                let ym = 1u32 << (g + i - 1);
                if koszul_sign(acc, xm) {
                    sign = !sign;
                }
                acc |= xm;
                if koszul_sign(acc, ym) {
                    sign = !sign;
                }
                acc |= ym;
            }
            Ok(if sign { -c.clone() } else { c.clone() })
        }
    }
}

/// Labels for the 28-dimensional basis of H²(X,ℤ) used by [`gram_lx`]:
/// u_{ik} = xᵢ∧y_k row-major (16), then v_{ik} = xᵢ∧x_k and w_{ik} = yᵢ∧y_k
/// for i < k in lexicographic order (6 + 6).
pub fn lx_basis_labels() -> Vec<String> {
    let mut labels = Vec::with_capacity(28);
    for i in 1..=4 {
        for k in 1..=4 {
            labels.push(format!("u{i}{k}"));
        }
    }
    for i in 1..=4 {
        for k in i + 1..=4 {
            labels.push(format!("v{i}{k}"));
        }
    }
    for i in 1..=4 {
        for k in i + 1..=4 {
            labels.push(format!("w{i}{k}"));
        }
    }
    labels
}

fn lx_basis(g: usize) -> Vec<Multivector> {
    assert_eq!(g, 4);
    let mut basis = Vec::with_capacity(28);
    for i in 1..=4 {
        for k in 1..=4 {
            basis.push(Multivector::x(g, i).wedge(&Multivector::y(g, k)).unwrap());
        }
    }
    for i in 1..=4 {
        for k in i + 1..=4 {
            basis.push(Multivector::x(g, i).wedge(&Multivector::x(g, k)).unwrap());
        }
    }
    for i in 1..=4 {
        for k in i + 1..=4 {
            basis.push(Multivector::y(g, i).wedge(&Multivector::y(g, k)).unwrap());
        }
    }
    basis
}

/// The 28×28 Gram matrix of b(α,β) = deg(α∧β∧[Θ]²) on the basis of
/// [`lx_basis_labels`], computed purely inside the exterior algebra.
pub fn gram_lx() -> IMat {
    let g = 4;
    let basis = lx_basis(g);
    let theta2 = theta_class(g).wedge_pow(2).unwrap();
    let mut gram = vec![vec![Int::zero(); 28]; 28];
    for i in 0..28 {
        for j in i..28 {
            let prod = basis[i].wedge(&basis[j]).unwrap().wedge(&theta2).unwrap();
            let d = deg_top(&prod, g).unwrap();
            debug_assert!(d.is_integer());
            gram[i][j] = d.to_integer();
            gram[j][i] = gram[i][j].clone();
        }
    }
    gram
}

/// Witness for the block decomposition of [`gram_lx`]: a signed reordering of
/// the 28 basis vectors (index, sign).
pub type SignedPermutation = Vec<(usize, i8)>;

/// Checks that the exterior-algebra Gram block-decomposes as Λ(2) ⊕ U(2)¹²
/// under the grouping ⟨u₁₁..u₄₄⟩ ⊕ ⊕_{i<k} (⟨u_ik, −u_ki⟩ ⊕ ⟨v_ik, −w_ik⟩),
/// by exact Gram-matrix equality.
pub fn verify_k2_decomposition() -> (bool, SignedPermutation) {
    let gram = gram_lx();
    let u_index = |i: usize, k: usize| 4 * (i - 1) + (k - 1);
    let pair_index = |i: usize, k: usize| {
        // lexicographic position of (i,k) with i<k among the 6 pairs
        let mut pos = 0;
        for a in 1..=4 {
            for b in a + 1..=4 {
                if (a, b) == (i, k) {
                    return pos;
                }
                pos += 1;
            }
        }
        unreachable!()
    };

    let mut perm: SignedPermutation = Vec::with_capacity(28);
    for i in 1..=4 {
        perm.push((u_index(i, i), 1));
    }
    for i in 1..=4 {
        for k in i + 1..=4 {
            perm.push((u_index(i, k), 1));
            perm.push((u_index(k, i), -1));
            perm.push((16 + pair_index(i, k), 1));
            perm.push((22 + pair_index(i, k), -1));
        }
    }

    let mut reordered = vec![vec![Int::zero(); 28]; 28];
    for (a, &(ia, sa)) in perm.iter().enumerate() {
        for (b, &(ib, sb)) in perm.iter().enumerate() {
            reordered[a][b] = &gram[ia][ib] * int((sa * sb) as i64);
        }
    }

    let lambda2 = Lattice::named("Lambda4").unwrap().rescale(&int(2)).unwrap();
    let u2 = Lattice::named("U").unwrap().rescale(&int(2)).unwrap();
    let mut expected = lambda2;
    for _ in 0..12 {
        expected = expected.direct_sum(&u2);
    }
    (&reordered == expected.gram(), perm)
}

/// The rational intersection numbers around the fundamental class of a
/// Prym-embedded curve: λ = α + β with α = [Θ]/3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub deg_alpha_sq: Rat,
    pub deg_lambda_ky: Rat,
    pub deg_lambda_sq: Rat,
    pub deg_beta_sq: Rat,
    pub half_norm_e: Rat,
}

/// Genus of a Prym-embedded curve on the surface, ğ = 2g+1 for g = 4.
const PRYM_CURVE_GENUS: i64 = 9;

/// Intersection arithmetic for the Prym curve class at g = 4.
///
/// α = [Θ]/3 is pinned by α ∪ [Θ]² = [Θ]³/3; deg(λ²) comes from adjunction
/// with curve genus 9 and K_Y = 2θ; β is the component orthogonal to the
/// ambient classes, so the degrees subtract.
pub fn prym_class_report() -> ClassReport {
    let g = 4;
    let theta = theta_class(g);
    let theta2 = theta.wedge_pow(2).unwrap();
    let alpha = theta.scale(&rat(1, 3));

    let deg_alpha_sq = deg_top(
        &alpha.wedge(&alpha).unwrap().wedge(&theta2).unwrap(),
        g,
    )
    .unwrap();
    // K_Y = 2θ and β pairs to zero against θ
    let deg_lambda_ky = deg_top(
        &alpha.wedge(&theta).unwrap().wedge(&theta2).unwrap(),
        g,
    )
    .unwrap()
        * rat(2, 1);
    let deg_lambda_sq =
        rat(2 * PRYM_CURVE_GENUS - 2, 1) - &deg_lambda_ky;
    let deg_beta_sq = &deg_lambda_sq - &deg_alpha_sq;
    let half_norm_e = &deg_beta_sq / rat(2, 1);
    ClassReport { deg_alpha_sq, deg_lambda_ky, deg_lambda_sq, deg_beta_sq, half_norm_e }
}
