//! Short-vector enumeration, definite-lattice isometry testing, integral
//! orthocomplements and glue-vector overlattice construction.

use num::{BigInt, Integer, One, Signed, Zero};

use crate::lattice::{Lattice, LatticeError};
use crate::matrix::{self, IMat, Int, QMat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IsometryError {
    #[error("lattice is not definite")]
    NotDefinite,
    #[error("rank mismatch")]
    RankMismatch,
    #[error("sub-basis is linearly dependent")]
    DependentBasis,
    #[error("glue vector pairs fractionally with the base lattice")]
    NonIntegralPairing,
    #[error("no admissible glue class found")]
    NoGlueClass,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// All vectors of a definite lattice with |norm| up to a bound.
#[derive(Debug, Clone)]
pub struct ShortVectorSet {
    pub norm_bound: Rat,
    /// coordinate vector together with its exact norm
    pub vectors: Vec<(Vec<Int>, Int)>,
}

impl ShortVectorSet {
    pub fn count(&self) -> usize {
        self.vectors.len()
    }

    /// Vectors of one exact |norm|.
    pub fn with_abs_norm(&self, norm: &Int) -> Vec<Vec<Int>> {
        self.vectors
            .iter()
            .filter(|(_, n)| &n.abs() == norm)
            .map(|(v, _)| v.clone())
            .collect()
    }
}

/// Complete enumeration of all nonzero v with |b(v,v)| ≤ bound, by exact
/// Fincke–Pohst tree search on the rational LDLᵀ decomposition.
///
/// Negative-definite lattices are negated internally; norms are reported
/// with their original sign.
pub fn short_vectors(l: &Lattice, bound: &Rat) -> Result<ShortVectorSet, IsometryError> {
    let (pos, neg) = l.signature();
    let n = l.rank();
    let negated = if pos == n {
        false
    } else if neg == n {
        true
    } else {
        return Err(IsometryError::NotDefinite);
    };
    let gram: QMat = l
        .gram()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let v = Rat::from_integer(x.clone());
                    if negated {
                        -v
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect();
    // G = RᵀDR with R unit upper triangular
    let mut d = vec![Rat::zero(); n];
    let mut r: QMat = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        let mut di = gram[i][i].clone();
        for k in 0..i {
            di -= &d[k] * &r[k][i] * &r[k][i];
        }
        d[i] = di;
        r[i][i] = Rat::one();
        for j in i + 1..n {
            let mut v = gram[i][j].clone();
            for k in 0..i {
                v -= &d[k] * &r[k][i] * &r[k][j];
            }
            r[i][j] = v / &d[i];
        }
    }

    let mut out = Vec::new();
    let mut x = vec![Int::zero(); n];
    enumerate(&d, &r, bound, n, &mut x, &Rat::zero(), &mut out);
    out.retain(|v| v.iter().any(|c| !c.is_zero()));
    let mut vectors: Vec<(Vec<Int>, Int)> = out
        .into_iter()
        .map(|v| {
            let norm = l.norm(&v);
            (v, norm)
        })
        .collect();
    vectors.sort();
    Ok(ShortVectorSet { norm_bound: bound.clone(), vectors })
}

fn enumerate(
    d: &[Rat],
    r: &QMat,
    bound: &Rat,
    level: usize,
    x: &mut Vec<Int>,
    used: &Rat,
    out: &mut Vec<Vec<Int>>,
) {
    if level == 0 {
        out.push(x.clone());
        return;
    }
    let i = level - 1;
    let mut center = Rat::zero();
    for j in level..x.len() {
        center += &r[i][j] * Rat::from_integer(x[j].clone());
    }
    let rem = bound - used;
    if rem.is_negative() {
        return;
    }
    // d_i (x_i + center)² ≤ rem
    let m = &rem / &d[i];
    let limit = rat_sqrt_floor(&m);
    let lo: Int = rat_floor(&(-&center - Rat::from_integer(limit.clone()))) - Int::one();
    let hi: Int = rat_ceil(&(-&center + Rat::from_integer(limit))) + Int::one();
    let mut t = lo;
    while t <= hi {
        let off = Rat::from_integer(t.clone()) + &center;
        let contrib = &d[i] * &off * &off;
        if &contrib + used <= *bound {
            x[i] = t.clone();
            let new_used = used + &contrib;
            enumerate(d, r, bound, i, x, &new_used, out);
            x[i] = Int::zero();
        }
        t += 1;
    }
}

fn rat_floor(r: &Rat) -> Int {
    r.floor().to_integer()
}

fn rat_ceil(r: &Rat) -> Int {
    r.ceil().to_integer()
}

/// floor(sqrt(p/q)) for a nonnegative rational.
fn rat_sqrt_floor(r: &Rat) -> Int {
    if r.is_negative() {
        return Int::zero();
    }
    let (p, q) = (r.numer().clone(), r.denom().clone());
    // floor(sqrt(p/q)) = floor(isqrt(p·q)/q)
    (&p * &q).sqrt().div_floor(&q)
}

/// Definite-lattice isometry test with witness.
///
/// Fast invariant rejection first (rank, discriminant, parity, norm
/// histogram), then backtracking assignment of basis vectors of `a` to short
/// vectors of `b` with partial Gram consistency. Returns `T` with
/// `Tᵀ·Gram(b)·T = Gram(a)`. Intended for rank ≤ 8.
pub fn is_isometric(a: &Lattice, b: &Lattice) -> Result<Option<IMat>, IsometryError> {
    let n = a.rank();
    if n != b.rank() {
        return Err(IsometryError::RankMismatch);
    }
    let (pa, na) = a.signature();
    let (pb, nb) = b.signature();
    if !(pa == n || na == n) || !(pb == n || nb == n) {
        return Err(IsometryError::NotDefinite);
    }
    if (pa, na) != (pb, nb)
        || a.discriminant() != b.discriminant()
        || a.is_even() != b.is_even()
    {
        return Ok(None);
    }
    let max_norm: Int = (0..n).map(|i| a.gram()[i][i].abs()).max().unwrap();
    let bound = Rat::from_integer(max_norm);
    let sa = short_vectors(a, &bound)?;
    let sb = short_vectors(b, &bound)?;
    if norm_histogram(&sa) != norm_histogram(&sb) {
        return Ok(None);
    }
    // candidates sorted by |norm| then lexicographically, so the witness is
    // deterministic
    let mut candidates = sb.vectors.clone();
    candidates.sort_by(|(v1, n1), (v2, n2)| n1.abs().cmp(&n2.abs()).then(v1.cmp(v2)));

    let mut chosen: Vec<Vec<Int>> = Vec::with_capacity(n);
    if assign(a, b, &candidates, &mut chosen) {
        // T has the chosen image vectors as columns
        let t: IMat = (0..n)
            .map(|row| (0..n).map(|col| chosen[col][row].clone()).collect())
            .collect();
        debug_assert!(isometry_witness_valid(a, b, &t));
        Ok(Some(t))
    } else {
        Ok(None)
    }
}

fn assign(a: &Lattice, b: &Lattice, candidates: &[(Vec<Int>, Int)], chosen: &mut Vec<Vec<Int>>) -> bool {
    let i = chosen.len();
    if i == a.rank() {
        return true;
    }
    let target_norm = a.gram()[i][i].clone();
    'cand: for (v, norm) in candidates {
        if *norm != target_norm {
            continue;
        }
        for (j, w) in chosen.iter().enumerate() {
            if b.pair(v, w) != a.gram()[i][j] {
                continue 'cand;
            }
        }
        chosen.push(v.clone());
        if assign(a, b, candidates, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Checks Tᵀ·Gram(b)·T = Gram(a) exactly.
pub fn isometry_witness_valid(a: &Lattice, b: &Lattice, t: &IMat) -> bool {
    let tt = matrix::transpose(t);
    let prod = matrix::mat_mul(&matrix::mat_mul(&tt, b.gram()), t);
    &prod == a.gram()
}

fn norm_histogram(s: &ShortVectorSet) -> Vec<(Int, usize)> {
    let mut hist: std::collections::BTreeMap<Int, usize> = Default::default();
    for (_, n) in &s.vectors {
        *hist.entry(n.clone()).or_default() += 1;
    }
    hist.into_iter().collect()
}

/// A sublattice of an ambient lattice: basis rows in ambient coordinates
/// together with the induced Gram.
#[derive(Debug, Clone)]
pub struct Sublattice {
    pub basis: IMat,
    pub lattice: Lattice,
}

/// Integral basis of {v : b(v,s) = 0 for all s in the sub-basis}, with the
/// induced Gram. The returned basis is saturated.
pub fn orthocomplement(ambient: &Lattice, sub_basis: &[Vec<Int>]) -> Result<Sublattice, IsometryError> {
    if matrix::rank(sub_basis) != sub_basis.len() {
        return Err(IsometryError::DependentBasis);
    }
    let sg = matrix::mat_mul(sub_basis, ambient.gram());
    let basis = matrix::kernel_basis(&sg);
    let lattice = ambient.restrict(&basis)?;
    Ok(Sublattice { basis, lattice })
}

/// True iff the sublattice spanned by the rows is primitive (the quotient is
/// torsion-free): all Smith elementary divisors of the coordinate matrix are 1.
pub fn is_primitive_sublattice(ambient: &Lattice, sub_basis: &[Vec<Int>]) -> Result<bool, IsometryError> {
    if sub_basis.iter().any(|r| r.len() != ambient.rank()) {
        return Err(IsometryError::RankMismatch);
    }
    if matrix::rank(sub_basis) != sub_basis.len() {
        return Err(IsometryError::DependentBasis);
    }
    Ok(matrix::snf_divisors(sub_basis).iter().all(|d| d.is_one()))
}

/// An overlattice of a base lattice M, with its basis written in rational
/// M-coordinates.
#[derive(Debug, Clone)]
pub struct Overlattice {
    pub lattice: Lattice,
    /// basis rows, rational coordinates with respect to the base lattice
    pub basis: QMat,
}

impl Overlattice {
    /// Coordinates of a rational base-coordinate vector in the overlattice
    /// basis; `None` if it is not an element of the overlattice.
    pub fn coords_of(&self, v: &[Rat]) -> Option<Vec<Int>> {
        let bt = matrix::transpose(&self.basis);
        let x = matrix::solve_rat(&bt, v)?;
        if x.iter().all(|c| c.is_integer()) {
            Some(x.into_iter().map(|c| c.to_integer()).collect())
        } else {
            None
        }
    }
}

/// Lattice on the group generated by M and the given glue vectors from M*.
pub fn glue_overlattice(m: &Lattice, glue: &[Vec<Rat>]) -> Result<Overlattice, IsometryError> {
    let n = m.rank();
    // every glue vector must pair integrally with M and with the other glue vectors
    for g in glue {
        if g.len() != n {
            return Err(IsometryError::RankMismatch);
        }
        for i in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[i] = Rat::one();
            if !m.pair_rat(g, &e).is_integer() {
                return Err(IsometryError::NonIntegralPairing);
            }
        }
    }
    for gi in glue {
        for gj in glue {
            if !m.pair_rat(gi, gj).is_integer() {
                return Err(IsometryError::NonIntegralPairing);
            }
        }
    }
    // common denominator, integer row lattice, HNF
    let mut den = Int::one();
    for g in glue {
        for c in g {
            den = den.lcm(c.denom());
        }
    }
    let mut rows: IMat = Vec::with_capacity(n + glue.len());
    for i in 0..n {
        let mut row = vec![Int::zero(); n];
        row[i] = den.clone();
        rows.push(row);
    }
    for g in glue {
        rows.push(g.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect());
    }
    let hnf = matrix::row_hnf(&rows);
    debug_assert_eq!(hnf.len(), n);
    let basis: QMat = hnf
        .iter()
        .map(|r| r.iter().map(|x| Rat::new(x.clone(), den.clone())).collect())
        .collect();
    let mut gram: IMat = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = m.pair_rat(&basis[i], &basis[j]);
            debug_assert!(v.is_integer());
            gram[i][j] = v.to_integer();
        }
    }
    Ok(Overlattice { lattice: Lattice::new(gram)?, basis })
}

/// Generator of a cyclic order-`order` subgroup of L*/L, as a dual vector in
/// rational L-coordinates; `None` if no dual basis vector has that order.
pub fn dual_class_of_order(l: &Lattice, order: u64) -> Option<Vec<Rat>> {
    let inv = l.dual_gram();
    let n = l.rank();
    for j in 0..n {
        let col: Vec<Rat> = (0..n).map(|i| inv[i][j].clone()).collect();
        let cls_order = col
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        if cls_order == BigInt::from(order) {
            return Some(col);
        }
    }
    None
}

/// Glues A ⊕ B along a diagonal class of the two ℤ/3 discriminant groups,
/// picking the lexicographically first multiplier pair (s, t) with s, t in
/// {1, 2} whose glue vector has even integral norm.
///
/// Returns the overlattice together with the chosen glue vector.
pub fn glue_by_diagonal_class(a: &Lattice, b: &Lattice) -> Result<(Overlattice, Vec<Rat>), IsometryError> {
    let ka = dual_class_of_order(a, 3).ok_or(IsometryError::NoGlueClass)?;
    let kb = dual_class_of_order(b, 3).ok_or(IsometryError::NoGlueClass)?;
    let m = a.direct_sum(b);
    for s in 1..3i64 {
        for t in 1..3i64 {
            let mut g: Vec<Rat> = ka.iter().map(|c| c * matrix::rat(s, 1)).collect();
            g.extend(kb.iter().map(|c| c * matrix::rat(t, 1)));
            let norm = m.pair_rat(&g, &g);
            if norm.is_integer() && norm.to_integer().is_even() {
                let over = glue_overlattice(&m, &[g.clone()])?;
                return Ok((over, g));
            }
        }
    }
    Err(IsometryError::NoGlueClass)
}
