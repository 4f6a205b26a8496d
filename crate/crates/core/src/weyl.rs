//! Finite integer matrix groups acting on a lattice: reflection generation,
//! breadth-first closure, sign kernel, discriminant-group action, line
//! orbits and the rational-character irreducibility test.
//!
//! Element matrices are stored flattened with `i64` entries; all paper
//! instances have tiny entries, and closure asserts Gram preservation for
//! every element, which bounds them.

use std::collections::{HashMap, VecDeque};

use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::isometry::{self, IsometryError};
use crate::lattice::Lattice;
use crate::matrix::{self, IMat, Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("vector is not a root (norm ±2)")]
    NotRoot,
    #[error("generator does not preserve the Gram matrix")]
    NotIsometry,
    #[error("group closure exceeded the cap of {0}")]
    CapExceeded(usize),
    #[error("discriminant group is not cyclic; action not supported")]
    NonCyclicDiscriminant,
    #[error("vector set is not stable under the group")]
    UnstableVectorSet,
    #[error("vector set is not closed under negation")]
    NotNegationClosed,
    #[error(transparent)]
    Isometry(#[from] IsometryError),
}

/// A finite group of integer matrices preserving a lattice Gram matrix,
/// enumerated completely.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    degree: usize,
    generators: Vec<Vec<i64>>,
    elements: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

impl MatrixGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn elements(&self) -> &[Vec<i64>] {
        &self.elements
    }

    pub fn contains(&self, m: &[i64]) -> bool {
        self.index.contains_key(m)
    }

    /// Rebuilds a group from a previously enumerated element list (for
    /// caching). Returns `None` if the list is malformed: wrong matrix
    /// sizes, missing identity or generators, or not closed under the
    /// generators.
    pub fn from_parts(
        degree: usize,
        generators: Vec<Vec<i64>>,
        elements: Vec<Vec<i64>>,
    ) -> Option<Self> {
        if elements.iter().any(|m| m.len() != degree * degree)
            || generators.iter().any(|m| m.len() != degree * degree)
        {
            return None;
        }
        let index: HashMap<Vec<i64>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        if index.len() != elements.len() || !index.contains_key(&flat_identity(degree)) {
            return None;
        }
        for g in &generators {
            if !index.contains_key(g) {
                return None;
            }
            for e in &elements {
                if !index.contains_key(&flat_mul(degree, g, e)) {
                    return None;
                }
            }
        }
        Some(MatrixGroup { degree, generators, elements, index })
    }
}

pub fn flat_identity(n: usize) -> Vec<i64> {
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

pub fn flat_neg_identity(n: usize) -> Vec<i64> {
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = -1;
    }
    m
}

fn flat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = out[i * n + j]
                    .checked_add(aik.checked_mul(b[k * n + j]).expect("entry overflow"))
                    .expect("entry overflow");
            }
        }
    }
    out
}

fn flat_to_imat(n: usize, a: &[i64]) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| Int::from(a[i * n + j])).collect())
        .collect()
}

fn preserves_gram(n: usize, a: &[i64], gram: &IMat) -> bool {
    let m = flat_to_imat(n, a);
    let mt = matrix::transpose(&m);
    matrix::mat_mul(&matrix::mat_mul(&mt, gram), &m) == *gram
}

/// All vectors of norm ±2 of an even definite lattice.
pub fn roots(l: &Lattice) -> Result<Vec<Vec<Int>>, WeylError> {
    let sv = isometry::short_vectors(l, &matrix::rat(2, 1))?;
    Ok(sv
        .vectors
        .into_iter()
        .filter(|(_, n)| n.abs() == Int::from(2))
        .map(|(v, _)| v)
        .collect())
}

/// Matrix of the reflection v ↦ v − 2 b(v,r)/b(r,r) · r in the lattice basis.
pub fn reflection(l: &Lattice, root: &[Int]) -> Result<Vec<i64>, WeylError> {
    let n = l.rank();
    let rr = l.norm(root);
    if rr.abs() != Int::from(2) {
        return Err(WeylError::NotRoot);
    }
    let mut m = vec![0i64; n * n];
    for j in 0..n {
        let mut e = vec![Int::zero(); n];
        e[j] = Int::one();
        let br = l.pair(&e, root);
        let factor = Int::from(2) * br / &rr; // exact, b(r,r) = ±2
        for i in 0..n {
            let mut entry = if i == j { Int::one() } else { Int::zero() };
            entry -= &factor * &root[i];
            m[i * n + j] = entry.to_i64().expect("reflection entry fits in i64");
        }
    }
    Ok(m)
}

/// Breadth-first closure of the generators under multiplication.
///
/// Every generator (hence every element) must preserve the Gram matrix.
/// Element order is deterministic: BFS discovery order from the identity.
pub fn generate(l: &Lattice, gens: &[Vec<i64>], cap: usize) -> Result<MatrixGroup, WeylError> {
    let n = l.rank();
    for g in gens {
        if g.len() != n * n || !preserves_gram(n, g, l.gram()) {
            return Err(WeylError::NotIsometry);
        }
    }
    let id = flat_identity(n);
    let mut elements = vec![id.clone()];
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    index.insert(id.clone(), 0);
    let mut queue = VecDeque::new();
    queue.push_back(id);
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let p = flat_mul(n, g, &e);
            if !index.contains_key(&p) {
                if elements.len() >= cap {
                    return Err(WeylError::CapExceeded(cap));
                }
                index.insert(p.clone(), elements.len());
                elements.push(p.clone());
                queue.push_back(p);
            }
        }
    }
    Ok(MatrixGroup { degree: n, generators: gens.to_vec(), elements, index })
}

/// The six simple reflections of a root lattice in its root basis: the
/// reflections in the basis vectors themselves.
pub fn simple_reflections(l: &Lattice) -> Result<Vec<Vec<i64>>, WeylError> {
    let n = l.rank();
    (0..n)
        .map(|i| {
            let mut e = vec![Int::zero(); n];
            e[i] = Int::one();
            reflection(l, &e)
        })
        .collect()
}

/// Subgroup of determinant-+1 elements (the kernel of the sign map).
pub fn sign_kernel(g: &MatrixGroup) -> MatrixGroup {
    let n = g.degree;
    let kept: Vec<Vec<i64>> = g
        .elements
        .iter()
        .filter(|m| matrix::det(&flat_to_imat(n, m)).is_one())
        .cloned()
        .collect();
    let index = kept
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    MatrixGroup { degree: n, generators: g.generators.clone(), elements: kept, index }
}

/// Induced action of a matrix group on the (cyclic) discriminant group L*/L.
#[derive(Debug, Clone)]
pub struct DiscriminantAction {
    /// order of the discriminant group (1 for unimodular lattices)
    pub modulus: u64,
    /// multiplier of each group element on the generator class, aligned with
    /// the group's element order
    pub multipliers: Vec<u64>,
}

impl DiscriminantAction {
    pub fn is_trivial(&self) -> bool {
        self.multipliers.iter().all(|&t| t == 1 % self.modulus.max(1) || self.modulus == 1)
    }
}

/// Computes the induced action on L*/L via a generator of the cyclic
/// discriminant group.
pub fn discriminant_action(g: &MatrixGroup, l: &Lattice) -> Result<DiscriminantAction, WeylError> {
    let divisors = l.discriminant_group().elementary_divisors;
    if divisors.is_empty() {
        return Ok(DiscriminantAction { modulus: 1, multipliers: vec![1; g.order()] });
    }
    if divisors.len() > 1 {
        return Err(WeylError::NonCyclicDiscriminant);
    }
    let d = divisors[0].to_u64().ok_or(WeylError::NonCyclicDiscriminant)?;
    let gen = isometry::dual_class_of_order(l, d).ok_or(WeylError::NonCyclicDiscriminant)?;
    // scale the generator to integer coordinates: c_d = d·gen
    let n = l.rank();
    let cd: Vec<Int> = gen
        .iter()
        .map(|c| (c * Rat::from_integer(Int::from(d))).to_integer())
        .collect();
    let dm = Int::from(d);
    let mut multipliers = Vec::with_capacity(g.order());
    for m in &g.elements {
        let mut image = vec![Int::zero(); n];
        for i in 0..n {
            for j in 0..n {
                image[i] += Int::from(m[i * n + j]) * &cd[j];
            }
        }
        let mut found = None;
        for t in 0..d {
            let ok = (0..n).all(|i| {
                let diff = &image[i] - Int::from(t) * &cd[i];
                diff.mod_floor(&dm).is_zero()
            });
            if ok {
                found = Some(t);
                break;
            }
        }
        match found {
            Some(t) => multipliers.push(t),
            None => return Err(WeylError::NonCyclicDiscriminant),
        }
    }
    Ok(DiscriminantAction { modulus: d, multipliers })
}

/// Orbits of a matrix group on a negation-closed, G-stable set of vectors,
/// counted as ± pairs (lines).
///
/// Returns (lines in orbit, stabilizer order) per orbit; the stabilizer order
/// is |G| / orbit size by orbit–stabilizer.
pub fn line_orbits(
    g: &MatrixGroup,
    vectors: &[Vec<Int>],
) -> Result<Vec<(usize, usize)>, WeylError> {
    let n = g.degree;
    let vec_index: HashMap<&[Int], usize> =
        vectors.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    for v in vectors {
        let neg: Vec<Int> = v.iter().map(|c| -c.clone()).collect();
        if !vec_index.contains_key(neg.as_slice()) {
            return Err(WeylError::NotNegationClosed);
        }
    }
    // line representative: the lexicographically larger of v, −v
    let line_rep = |v: &[Int]| -> Vec<Int> {
        let neg: Vec<Int> = v.iter().map(|c| -c.clone()).collect();
        if v >= neg.as_slice() {
            v.to_vec()
        } else {
            neg
        }
    };
    let mut seen: HashMap<Vec<Int>, usize> = HashMap::new(); // rep -> orbit id
    let mut orbit_sizes: Vec<usize> = Vec::new();
    for v in vectors {
        let rep = line_rep(v);
        if seen.contains_key(&rep) {
            continue;
        }
        // BFS over the line orbit
        let orbit_id = orbit_sizes.len();
        let mut frontier = vec![rep.clone()];
        seen.insert(rep, orbit_id);
        let mut count = 1usize;
        while let Some(w) = frontier.pop() {
            for m in &g.generators {
                let mut image = vec![Int::zero(); n];
                for i in 0..n {
                    for j in 0..n {
                        image[i] += Int::from(m[i * n + j]) * &w[j];
                    }
                }
                if !vec_index.contains_key(image.as_slice()) {
                    return Err(WeylError::UnstableVectorSet);
                }
                let rep = line_rep(&image);
                if !seen.contains_key(&rep) {
                    seen.insert(rep.clone(), orbit_id);
                    count += 1;
                    frontier.push(rep);
                }
            }
        }
        orbit_sizes.push(count);
    }
    Ok(orbit_sizes
        .into_iter()
        .map(|size| {
            debug_assert_eq!(g.order() % size, 0);
            (size, g.order() / size)
        })
        .collect())
}

/// Vectors of the dual lattice L* with the given exact norm, returned in
/// lattice coordinates scaled by the exponent of the discriminant group
/// (so they are integral). Group matrices act on them directly.
pub fn dual_vectors_with_norm(l: &Lattice, norm: &Rat) -> Result<Vec<Vec<Int>>, WeylError> {
    let inv = l.dual_gram();
    let n = l.rank();
    let mut s = Int::one();
    for row in &inv {
        for c in row {
            s = s.lcm(c.denom());
        }
    }
    let gram_s: IMat = inv
        .iter()
        .map(|r| r.iter().map(|c| (c * Rat::from_integer(s.clone())).to_integer()).collect())
        .collect();
    let dl = Lattice::new(gram_s.clone()).map_err(IsometryError::from)?;
    let target = norm * Rat::from_integer(s.clone());
    if !target.is_integer() {
        return Ok(Vec::new());
    }
    let target = target.to_integer();
    let sv = isometry::short_vectors(&dl, &Rat::from_integer(target.abs()))?;
    let mut out = Vec::new();
    for (m, nv) in sv.vectors {
        if nv != target {
            continue;
        }
        // lattice coordinates scaled by s: x' = (s·G⁻¹)·m
        let x: Vec<Int> = (0..n)
            .map(|i| (0..n).map(|j| &gram_s[i][j] * &m[j]).sum())
            .collect();
        out.push(x);
    }
    out.sort();
    Ok(out)
}

/// Rational-character irreducibility: Σ_g trace(g)² = |G|.
pub fn character_irreducibility(g: &MatrixGroup) -> bool {
    let n = g.degree;
    let sum: i128 = g
        .elements
        .iter()
        .map(|m| {
            let tr: i64 = (0..n).map(|i| m[i * n + i]).sum();
            (tr as i128) * (tr as i128)
        })
        .sum();
    sum == g.order() as i128
}

/// Lagrange necessary condition for 𝔄₆ ≤ H: 360 | order.
pub fn a6_order_filter(order: u64) -> bool {
    order % 360 == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{int, rat};

    fn e6() -> Lattice {
        Lattice::named("E6").unwrap()
    }

    #[test]
    fn root_counts() {
        assert_eq!(roots(&e6()).unwrap().len(), 72);
        assert_eq!(roots(&Lattice::named("E8").unwrap()).unwrap().len(), 240);
        assert_eq!(roots(&Lattice::from_rows(&[&[2]]).unwrap()).unwrap().len(), 2);
    }

    #[test]
    fn reflections_are_involutions() {
        let l = e6();
        for r in simple_reflections(&l).unwrap() {
            assert_eq!(flat_mul(6, &r, &r), flat_identity(6));
        }
        let a1 = Lattice::from_rows(&[&[2]]).unwrap();
        assert_eq!(reflection(&a1, &[int(1)]).unwrap(), vec![-1]);
        assert_eq!(
            reflection(&a1, &[int(2)]),
            Err(WeylError::NotRoot)
        );
    }

    #[test]
    fn weyl_e6_order() {
        let l = e6();
        let gens = simple_reflections(&l).unwrap();
        let w = generate(&l, &gens, 60000).unwrap();
        assert_eq!(w.order(), 51840);
        let plus = sign_kernel(&w);
        assert_eq!(plus.order(), 25920);
    }

    #[test]
    fn aut_e6_order() {
        let l = e6();
        let mut gens = simple_reflections(&l).unwrap();
        gens.push(flat_neg_identity(6));
        let aut = generate(&l, &gens, 120000).unwrap();
        assert_eq!(aut.order(), 103680);
    }

    #[test]
    fn trivial_group() {
        let l = e6();
        let g = generate(&l, &[], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(sign_kernel(&g).order(), 1);
    }

    #[test]
    fn cap_errors() {
        let l = e6();
        let gens = simple_reflections(&l).unwrap();
        assert!(matches!(
            generate(&l, &gens, 100),
            Err(WeylError::CapExceeded(100))
        ));
        let bad = vec![vec![2i64, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2]];
        assert!(matches!(generate(&l, &bad, 10), Err(WeylError::NotIsometry)));
    }

    #[test]
    fn discriminant_actions() {
        let l = e6();
        let gens = simple_reflections(&l).unwrap();
        let w = generate(&l, &gens, 60000).unwrap();
        let act = discriminant_action(&w, &l).unwrap();
        assert_eq!(act.modulus, 3);
        assert!(act.is_trivial());

        let neg = generate(&l, &[flat_neg_identity(6)], 4).unwrap();
        let act = discriminant_action(&neg, &l).unwrap();
        assert!(!act.is_trivial());
        assert!(act.multipliers.contains(&2));

        let u = Lattice::named("U").unwrap();
        let gu = generate(&u, &[flat_neg_identity(2)], 4).unwrap();
        assert!(discriminant_action(&gu, &u).unwrap().is_trivial());
    }

    #[test]
    fn dual_minimal_vectors() {
        let v = dual_vectors_with_norm(&e6(), &rat(4, 3)).unwrap();
        assert_eq!(v.len(), 54);
    }

    #[test]
    fn orbit_structure() {
        let l = e6();
        let gens = simple_reflections(&l).unwrap();
        let w = generate(&l, &gens, 60000).unwrap();

        let rts = roots(&l).unwrap();
        let orbits = line_orbits(&w, &rts).unwrap();
        assert_eq!(orbits, vec![(36, 1440)]);

        let duals = dual_vectors_with_norm(&l, &rat(4, 3)).unwrap();
        let orbits = line_orbits(&w, &duals).unwrap();
        assert_eq!(orbits, vec![(27, 1920)]);

        // trivial group on one ± pair
        let g1 = generate(&l, &[], 2).unwrap();
        let mut v = vec![int(0); 6];
        v[0] = int(1);
        let neg: Vec<Int> = v.iter().map(|c| -c.clone()).collect();
        assert_eq!(line_orbits(&g1, &[v, neg]).unwrap(), vec![(1, 1)]);
    }

    #[test]
    fn irreducibility() {
        let l = e6();
        let gens = simple_reflections(&l).unwrap();
        let w = generate(&l, &gens, 60000).unwrap();
        assert!(character_irreducibility(&w));

        let g1 = generate(&l, &[], 2).unwrap();
        assert!(!character_irreducibility(&g1));

        let one_refl = generate(&l, &gens[..1].to_vec(), 4).unwrap();
        assert_eq!(one_refl.order(), 2);
        assert!(!character_irreducibility(&one_refl));
    }

    #[test]
    fn lagrange_filter() {
        assert!(!a6_order_filter(1296));
        assert!(a6_order_filter(25920));
        assert!(a6_order_filter(51840));
        assert!(!a6_order_filter(1));
    }
}
