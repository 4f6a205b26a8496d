//! Integral lattices: construction, invariants, duals and discriminant groups.
//!
//! A lattice is a free abelian group of finite rank together with a
//! non-degenerate symmetric bilinear form, stored as its Gram matrix in a
//! fixed basis. Equality is Gram-matrix equality, not isometry.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Signed, Zero};

use crate::matrix::{self, int, IMat, Int, QMat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("Gram matrix is not symmetric")]
    NonSymmetric,
    #[error("Gram matrix is degenerate (determinant zero)")]
    Degenerate,
    #[error("Gram matrix is not square")]
    NotSquare,
    #[error("unknown lattice name: {0}")]
    UnknownName(String),
    #[error("rescale factor must be nonzero")]
    ZeroScale,
    #[error("parse error: {0}")]
    Parse(String),
}

/// An integral lattice, given by the Gram matrix of its bilinear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IMat,
}

/// The finite group L*/L, described by its elementary divisors > 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantGroup {
    pub elementary_divisors: Vec<Int>,
}

impl DiscriminantGroup {
    pub fn is_trivial(&self) -> bool {
        self.elementary_divisors.is_empty()
    }

    pub fn order(&self) -> Int {
        self.elementary_divisors.iter().fold(Int::one(), |a, d| a * d)
    }
}

impl Lattice {
    /// Validates and wraps a Gram matrix.
    pub fn new(gram: IMat) -> Result<Self, LatticeError> {
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(LatticeError::NotSquare);
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::NonSymmetric);
                }
            }
        }
        let l = Lattice { gram };
        if l.discriminant().is_zero() {
            return Err(LatticeError::Degenerate);
        }
        Ok(l)
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self, LatticeError> {
        Lattice::new(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    /// The standard named lattices used by the verification suites.
    pub fn named(name: &str) -> Result<Self, LatticeError> {
        match name {
            "U" => Lattice::from_rows(&[&[0, 1], &[1, 0]]),
            "Lambda4" => Lattice::from_rows(&[
                &[0, 1, 1, 1],
                &[1, 0, 1, 1],
                &[1, 1, 0, 1],
                &[1, 1, 1, 0],
            ]),
            "E6" => Ok(root_lattice(6, &[(0, 2), (1, 3), (2, 3), (3, 4), (4, 5)])),
            "E8" => Ok(root_lattice(
                8,
                &[(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)],
            )),
            "E6_neg" => Lattice::named("E6")?.rescale(&int(-1)),
            "E8_neg" => Lattice::named("E8")?.rescale(&int(-1)),
            // K = U¹² ⊕ Λ
            "K" => {
                let u = Lattice::named("U")?;
                let mut k = Lattice::named("Lambda4")?;
                for _ in 0..12 {
                    k = u.direct_sum(&k);
                }
                Ok(k)
            }
            // L = U¹³ ⊕ E8(−1)
            "L" => {
                let u = Lattice::named("U")?;
                let mut l = Lattice::named("E8_neg")?;
                for _ in 0..13 {
                    l = u.direct_sum(&l);
                }
                Ok(l)
            }
            other => Err(LatticeError::UnknownName(other.to_string())),
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &IMat {
        &self.gram
    }

    /// Determinant of the Gram matrix.
    pub fn discriminant(&self) -> Int {
        matrix::det(&self.gram)
    }

    pub fn is_unimodular(&self) -> bool {
        self.discriminant().abs().is_one()
    }

    /// b(v, v) for all v lies in 2ℤ iff all diagonal entries are even.
    pub fn is_even(&self) -> bool {
        self.gram
            .iter()
            .enumerate()
            .all(|(i, r)| num::Integer::is_even(&r[i]))
    }

    /// Counts of positive and negative eigenvalues, by exact symmetric
    /// congruence diagonalization over ℚ.
    pub fn signature(&self) -> (usize, usize) {
        signature_of(&matrix::to_rat(&self.gram))
    }

    pub fn is_positive_definite(&self) -> bool {
        self.signature() == (self.rank(), 0)
    }

    pub fn is_negative_definite(&self) -> bool {
        self.signature() == (0, self.rank())
    }

    /// Lattice with bilinear form n·b.
    pub fn rescale(&self, n: &Int) -> Result<Self, LatticeError> {
        if n.is_zero() {
            return Err(LatticeError::ZeroScale);
        }
        Ok(Lattice {
            gram: self.gram.iter().map(|r| r.iter().map(|x| x * n).collect()).collect(),
        })
    }

    /// Orthogonal direct sum (block-diagonal Gram).
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let n = self.rank();
        let m = other.rank();
        let mut gram = vec![vec![Int::zero(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = self.gram[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                gram[n + i][n + j] = other.gram[i][j].clone();
            }
        }
        Lattice { gram }
    }

    /// Gram matrix of the dual basis pairing, i.e. the exact inverse.
    pub fn dual_gram(&self) -> QMat {
        matrix::inverse_rat(&matrix::to_rat(&self.gram)).expect("lattice is non-degenerate")
    }

    /// Elementary divisors > 1 of the Smith normal form of the Gram matrix.
    pub fn discriminant_group(&self) -> DiscriminantGroup {
        let divisors = matrix::snf_divisors(&self.gram)
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        DiscriminantGroup { elementary_divisors: divisors }
    }

    /// Bilinear form value on two coordinate vectors.
    pub fn pair(&self, v: &[Int], w: &[Int]) -> Int {
        let n = self.rank();
        let mut acc = Int::zero();
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += &v[i] * &self.gram[i][j] * &w[j];
            }
        }
        acc
    }

    pub fn norm(&self, v: &[Int]) -> Int {
        self.pair(v, v)
    }

    pub fn pair_rat(&self, v: &[Rat], w: &[Rat]) -> Rat {
        let n = self.rank();
        let mut acc = Rat::zero();
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += &v[i] * Rat::from_integer(self.gram[i][j].clone()) * &w[j];
            }
        }
        acc
    }

    /// Induced lattice on the span of the given (independent) coordinate rows.
    pub fn restrict(&self, basis: &[Vec<Int>]) -> Result<Lattice, LatticeError> {
        let k = basis.len();
        let mut gram = vec![vec![Int::zero(); k]; k];
        for i in 0..k {
            for j in 0..k {
                gram[i][j] = self.pair(&basis[i], &basis[j]);
            }
        }
        Lattice::new(gram)
    }
}

fn root_lattice(rank: usize, edges: &[(usize, usize)]) -> Lattice {
    let mut gram = vec![vec![Int::zero(); rank]; rank];
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] = int(2);
    }
    for &(i, j) in edges {
        gram[i][j] = int(-1);
        gram[j][i] = int(-1);
    }
    Lattice { gram }
}

/// Signature of a symmetric rational matrix by congruence diagonalization.
///
/// Zero diagonal pivots are handled by the usual row+column addition trick,
/// which works in characteristic zero.
pub fn signature_of(m: &[Vec<Rat>]) -> (usize, usize) {
    let n = m.len();
    let mut a: QMat = m.to_vec();
    let (mut pos, mut neg) = (0usize, 0usize);
    for k in 0..n {
        if a[k][k].is_zero() {
            // look for a later nonzero diagonal entry
            if let Some(i) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                a.swap(k, i);
                for r in a.iter_mut() {
                    r.swap(k, i);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // hyperbolic pivot: add row/col j into k so 2·a[k][j] lands on the diagonal
                for col in 0..n {
                    let t = a[j][col].clone();
                    a[k][col] += t;
                }
                for row in a.iter_mut() {
                    let t = row[j].clone();
                    row[k] += t;
                }
            }
        }
        if a[k][k].is_zero() {
            continue; // degenerate direction
        }
        if a[k][k].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in 0..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
            for row in a.iter_mut() {
                let t = &f * &row[k];
                row[i] -= t;
            }
        }
    }
    (pos, neg)
}

impl fmt::Display for Lattice {
    /// Plain-text format: first line the rank, then the Gram rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.rank())?;
        for row in &self.gram {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Lattice {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let rank: usize = lines
            .next()
            .ok_or_else(|| LatticeError::Parse("empty input".into()))?
            .trim()
            .parse()
            .map_err(|e| LatticeError::Parse(format!("bad rank line: {e}")))?;
        let mut gram = Vec::with_capacity(rank);
        for _ in 0..rank {
            let line = lines
                .next()
                .ok_or_else(|| LatticeError::Parse("missing Gram row".into()))?;
            let row: Result<Vec<Int>, _> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<BigInt>()
                        .map_err(|e| LatticeError::Parse(format!("bad entry {tok:?}: {e}")))
                })
                .collect();
            let row = row?;
            if row.len() != rank {
                return Err(LatticeError::Parse(format!(
                    "expected {rank} entries, got {}",
                    row.len()
                )));
            }
            gram.push(row);
        }
        Lattice::new(gram)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_lattice_validation() {
        assert!(Lattice::from_rows(&[&[0, 1], &[1, 0]]).is_ok());
        assert!(Lattice::from_rows(&[&[1]]).is_ok());
        assert_eq!(
            Lattice::from_rows(&[&[0, 0], &[0, 1]]),
            Err(LatticeError::Degenerate)
        );
        assert_eq!(
            Lattice::from_rows(&[&[0, 1], &[2, 0]]),
            Err(LatticeError::NonSymmetric)
        );
    }

    #[test]
    fn named_ranks() {
        assert_eq!(Lattice::named("Lambda4").unwrap().rank(), 4);
        assert_eq!(Lattice::named("K").unwrap().rank(), 28);
        assert_eq!(Lattice::named("L").unwrap().rank(), 34);
        assert!(matches!(
            Lattice::named("F4"),
            Err(LatticeError::UnknownName(_))
        ));
    }

    #[test]
    fn discriminants() {
        assert_eq!(Lattice::named("Lambda4").unwrap().discriminant(), int(-3));
        assert_eq!(Lattice::named("U").unwrap().discriminant(), int(-1));
        assert_eq!(Lattice::named("E6").unwrap().discriminant(), int(3));
        assert_eq!(Lattice::named("E6_neg").unwrap().discriminant(), int(3));
        assert_eq!(Lattice::named("E8").unwrap().discriminant(), int(1));
        assert!(Lattice::named("E8").unwrap().is_unimodular());
        assert!(!Lattice::named("Lambda4").unwrap().is_unimodular());
    }

    #[test]
    fn signatures() {
        assert_eq!(Lattice::named("K").unwrap().signature(), (13, 15));
        assert_eq!(Lattice::named("L").unwrap().signature(), (13, 21));
        assert_eq!(Lattice::named("E6_neg").unwrap().signature(), (0, 6));
        assert_eq!(Lattice::named("U").unwrap().signature(), (1, 1));
    }

    #[test]
    fn evenness() {
        assert!(Lattice::named("Lambda4").unwrap().is_even());
        assert!(Lattice::named("U").unwrap().is_even());
        assert!(!Lattice::from_rows(&[&[1]]).unwrap().is_even());
    }

    #[test]
    fn rescale_laws() {
        let u = Lattice::named("U").unwrap();
        let u2 = u.rescale(&int(2)).unwrap();
        assert_eq!(u2.gram()[0][1], int(2));
        let l4 = Lattice::named("Lambda4").unwrap();
        assert_eq!(l4.rescale(&int(2)).unwrap().discriminant(), int(-48));
        let l = Lattice::named("L").unwrap();
        assert_eq!(l.rescale(&int(1)).unwrap(), l);
        assert_eq!(u.rescale(&int(0)), Err(LatticeError::ZeroScale));
    }

    #[test]
    fn direct_sums() {
        let u = Lattice::named("U").unwrap();
        let uu = u.direct_sum(&u);
        assert_eq!(uu.rank(), 4);
        assert_eq!(uu.signature(), (2, 2));

        let mut k = Lattice::named("Lambda4").unwrap();
        for _ in 0..12 {
            k = u.direct_sum(&k);
        }
        assert_eq!(k, Lattice::named("K").unwrap());

        let mut l = Lattice::named("E8_neg").unwrap();
        for _ in 0..13 {
            l = u.direct_sum(&l);
        }
        assert_eq!(l, Lattice::named("L").unwrap());
    }

    #[test]
    fn duals() {
        let u = Lattice::named("U").unwrap();
        assert_eq!(u.dual_gram(), matrix::to_rat(u.gram()));
        let two = Lattice::from_rows(&[&[2]]).unwrap();
        assert_eq!(two.dual_gram()[0][0], crate::matrix::rat(1, 2));
        let e6 = Lattice::named("E6").unwrap();
        let dual = e6.dual_gram();
        // det of the dual Gram is 1/3
        let scaled: IMat = dual
            .iter()
            .map(|r| r.iter().map(|x| (x * crate::matrix::rat(3, 1)).to_integer()).collect())
            .collect();
        assert_eq!(matrix::det(&scaled), int(3i64.pow(5)));
    }

    #[test]
    fn discriminant_groups() {
        assert_eq!(
            Lattice::named("E6").unwrap().discriminant_group().elementary_divisors,
            vec![int(3)]
        );
        assert!(Lattice::named("L").unwrap().discriminant_group().is_trivial());
        assert_eq!(
            Lattice::named("K").unwrap().discriminant_group().elementary_divisors,
            vec![int(3)]
        );
    }

    #[test]
    fn text_roundtrip() {
        let k = Lattice::named("K").unwrap();
        let s = k.to_string();
        let back: Lattice = s.parse().unwrap();
        assert_eq!(back, k);
        assert!("2\n0 1\n2 0\n".parse::<Lattice>().is_err());
    }
}
