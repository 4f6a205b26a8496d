//! Partition combinatorics and symmetric functions: Schur-polynomial
//! expansions via semistandard tableaux, Littlewood–Richardson products,
//! hook-content dimensions, Λ²/S² of a character, and the convolution
//! labels (m+i, n−i) for products of fundamental representations.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num::{One, Zero};

use crate::matrix::Int;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchurError {
    #[error("parts must be weakly decreasing and positive")]
    InvalidPartition,
    #[error("partition has more rows than variables")]
    TooManyRows,
    #[error("coefficient not divisible by 2 in square decomposition")]
    OddCoefficientParity,
    #[error("label part exceeds the cap 2g-2")]
    CapViolation,
    #[error("polynomial is not a nonnegative sum of Schur leading terms")]
    NotSymmetric,
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SchurError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(SchurError::InvalidPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Sparse polynomial in `nvars` variables: exponent vector → coefficient.
pub type Poly = BTreeMap<Vec<u32>, Int>;

/// An integer combination of Schur polynomials in a fixed number of
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurVector {
    pub nvars: usize,
    pub coeffs: BTreeMap<Partition, Int>,
}

impl SchurVector {
    pub fn single(p: Partition, nvars: usize) -> Result<Self, SchurError> {
        if p.rows() > nvars {
            return Err(SchurError::TooManyRows);
        }
        let mut coeffs = BTreeMap::new();
        coeffs.insert(p, Int::one());
        Ok(SchurVector { nvars, coeffs })
    }

    pub fn constituents(&self) -> usize {
        self.coeffs.len()
    }

    /// Σ coeff·dim of the corresponding gl_N representation.
    pub fn dimension(&self, n: u32) -> Result<Int, SchurError> {
        let mut acc = Int::zero();
        for (p, c) in &self.coeffs {
            acc += c * dim_irrep(p, n)?;
        }
        Ok(acc)
    }

    pub fn expand(&self) -> Result<Poly, SchurError> {
        let mut out = Poly::new();
        for (p, c) in &self.coeffs {
            for (mono, k) in expand_cached(p, self.nvars)?.iter() {
                let e = out.entry(mono.clone()).or_insert_with(Int::zero);
                *e += c * k;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }
}

type ExpandCache = Mutex<HashMap<(Vec<u32>, usize), Arc<Poly>>>;

fn expand_cache() -> &'static ExpandCache {
    static CACHE: OnceLock<ExpandCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn expand_cached(p: &Partition, nvars: usize) -> Result<Arc<Poly>, SchurError> {
    if p.rows() > nvars {
        return Err(SchurError::TooManyRows);
    }
    let key = (p.parts().to_vec(), nvars);
    if let Some(poly) = expand_cache().lock().unwrap().get(&key) {
        return Ok(poly.clone());
    }
    let shape = p.parts();
    let mut out = Poly::new();
    let mut tab: Vec<Vec<u32>> = shape.iter().map(|&r| vec![0; r as usize]).collect();
    fill_ssyt(shape, nvars, 0, 0, &mut tab, &mut out);
    let arc = Arc::new(out);
    expand_cache().lock().unwrap().insert(key, arc.clone());
    Ok(arc)
}

/// Monomial expansion of a Schur polynomial by enumerating semistandard
/// tableaux with entries 1..nvars.
pub fn schur_expand(p: &Partition, nvars: usize) -> Result<Poly, SchurError> {
    Ok((*expand_cached(p, nvars)?).clone())
}

fn fill_ssyt(shape: &[u32], nvars: usize, r: usize, c: usize, tab: &mut Vec<Vec<u32>>, out: &mut Poly) {
    if r == shape.len() {
        let mut mono = vec![0u32; nvars];
        for row in tab.iter() {
            for &v in row {
                mono[v as usize - 1] += 1;
            }
        }
        *out.entry(mono).or_insert_with(Int::zero) += Int::one();
        return;
    }
    if c == shape[r] as usize {
        fill_ssyt(shape, nvars, r + 1, 0, tab, out);
        return;
    }
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(tab[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(tab[r - 1][c] + 1);
    }
    for v in lo..=nvars as u32 {
        tab[r][c] = v;
        fill_ssyt(shape, nvars, r, c + 1, tab, out);
    }
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mono: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let e = out.entry(mono).or_insert_with(Int::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Greedy Schur decomposition by repeatedly stripping the lexicographically
/// largest monomial; terminates because Schur leading monomials are the
/// partitions themselves.
pub fn schur_decompose(mut poly: Poly, nvars: usize) -> Result<SchurVector, SchurError> {
    let mut coeffs = BTreeMap::new();
    while let Some((mono, c)) = poly.last_key_value().map(|(m, c)| (m.clone(), c.clone())) {
        if mono.windows(2).any(|w| w[0] < w[1]) {
            return Err(SchurError::NotSymmetric);
        }
        let lam = Partition::new(mono.iter().copied().filter(|&x| x > 0).collect())?;
        for (m, k) in expand_cached(&lam, nvars)?.iter() {
            let e = poly.entry(m.clone()).or_insert_with(Int::zero);
            *e -= &c * k;
        }
        poly.retain(|_, c| !c.is_zero());
        coeffs.insert(lam, c);
    }
    Ok(SchurVector { nvars, coeffs })
}

/// All partitions of `n` with at most `rows` rows and parts at most `max`.
fn partitions_into(n: u32, rows: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: prefix.clone() });
        return;
    }
    if rows == 0 {
        return;
    }
    for p in (1..=max.min(n)).rev() {
        prefix.push(p);
        partitions_into(n - p, rows - 1, p, prefix, out);
        prefix.pop();
    }
}

pub fn partitions_of(n: u32, rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_into(n, rows, n, &mut Vec::new(), &mut out);
    out
}

/// Number of Littlewood–Richardson fillings of ν/p with content q: skew
/// semistandard with reverse reading word a lattice word.
fn lr_coefficient(nu: &Partition, p: &Partition, q: &Partition) -> Int {
    let rows = nu.rows();
    if (0..rows).any(|i| p.part(i) > nu.part(i)) {
        return Int::zero();
    }
    // cells in reverse reading order: each row right to left
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (p.part(r) as usize..nu.part(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let q_parts = q.parts();
    let mut tab: Vec<Vec<u32>> = (0..rows).map(|r| vec![0; nu.part(r) as usize]).collect();
    let mut counts = vec![0u32; q_parts.len()];
    let mut total = Int::zero();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        p: &Partition,
        q: &[u32],
        tab: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        total: &mut Int,
    ) {
        if idx == cells.len() {
            *total += Int::one();
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=q.len() as u32 {
            let vi = v as usize - 1;
            if counts[vi] >= q[vi] {
                continue;
            }
            // lattice word: prefix counts stay weakly decreasing in v
            if v > 1 && counts[vi] >= counts[vi - 1] {
                continue;
            }
            // weakly increasing along rows (right neighbour already filled)
            if c + 1 < tab[r].len() && tab[r][c + 1] != 0 && v > tab[r][c + 1] {
                continue;
            }
            // strictly increasing down columns
            if r > 0 && c >= p.part(r - 1) as usize && c < tab[r - 1].len() && v <= tab[r - 1][c] {
                continue;
            }
            tab[r][c] = v;
            counts[vi] += 1;
            rec(idx + 1, cells, p, q, tab, counts, total);
            counts[vi] -= 1;
            tab[r][c] = 0;
        }
    }
    rec(0, &cells, p, q_parts, &mut tab, &mut counts, &mut total);
    total
}

/// Littlewood–Richardson product s_p · s_q = Σ c^ν_{pq} s_ν, truncated to
/// partitions with at most `row_cap` rows.
pub fn lr_product(p: &Partition, q: &Partition, row_cap: usize) -> SchurVector {
    let n = p.size() + q.size();
    let mut coeffs = BTreeMap::new();
    for nu in partitions_of(n, row_cap.min(p.rows() + q.rows())) {
        if nu.part(0) > p.part(0) + q.part(0) {
            continue;
        }
        let c = lr_coefficient(&nu, p, q);
        if !c.is_zero() {
            coeffs.insert(nu, c);
        }
    }
    SchurVector { nvars: row_cap, coeffs }
}

/// Dimension of the gl_N irreducible with highest weight p, by the
/// hook-content formula ∏(N + content)/∏ hook.
pub fn dim_irrep(p: &Partition, n: u32) -> Result<Int, SchurError> {
    if p.rows() > n as usize {
        return Err(SchurError::TooManyRows);
    }
    let conj = p.conjugate();
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 0..p.rows() {
        for j in 0..p.part(i) as usize {
            num *= Int::from(n as i64 + j as i64 - i as i64);
            let hook = (p.part(i) as i64 - j as i64) + (conj.part(j) as i64 - i as i64) - 1;
            den *= Int::from(hook);
        }
    }
    Ok(num / den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareKind {
    Wedge,
    Sym,
}

/// Λ² or S² of a character: (f(x)² ∓ f(x²))/2, re-expanded in the Schur
/// basis.
pub fn wedge_or_sym_square(f: &SchurVector, kind: SquareKind) -> Result<SchurVector, SchurError> {
    let fx = f.expand()?;
    let mut numer = poly_mul(&fx, &fx);
    for (mono, c) in &fx {
        let doubled: Vec<u32> = mono.iter().map(|e| 2 * e).collect();
        let e = numer.entry(doubled).or_insert_with(Int::zero);
        match kind {
            SquareKind::Wedge => *e -= c,
            SquareKind::Sym => *e += c,
        }
    }
    numer.retain(|_, c| !c.is_zero());
    let two = Int::from(2);
    let mut halved = Poly::new();
    for (mono, c) in numer {
        let (q, r) = num::Integer::div_rem(&c, &two);
        if !r.is_zero() {
            return Err(SchurError::OddCoefficientParity);
        }
        halved.insert(mono, q);
    }
    schur_decompose(halved, f.nvars)
}

/// Labels (m+i, n−i) for i = 0..n in the decomposition of the convolution
/// of the m-th and n-th fundamental sheaves, with parts capped at 2g−2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvolutionLabels {
    pub labels: Vec<Partition>,
    /// whether a negligible summand τ accompanies the labels
    pub negligible: bool,
}

pub fn convolution_labels(m: u32, n: u32, g: u32) -> Result<ConvolutionLabels, SchurError> {
    let cap = 2 * g - 2;
    if n > m || m > cap {
        return Err(SchurError::InvalidPartition);
    }
    if m + n > cap {
        return Err(SchurError::CapViolation);
    }
    let labels = (0..=n)
        .map(|i| {
            let parts: Vec<u32> = [m + i, n - i].into_iter().filter(|&x| x > 0).collect();
            Partition::new(parts)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ConvolutionLabels { labels, negligible: n >= 1 })
}
