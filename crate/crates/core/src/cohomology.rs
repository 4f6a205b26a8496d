//! Group cohomology of an involution acting on a finitely generated free
//! abelian group, computed with Hermite/Smith normal forms.
//!
//! For a ℤ/2-module M with involution σ the cohomology is 2-periodic:
//! H⁰ = ker(σ−1), H^odd = ker(σ+1)/im(σ−1), H^even = ker(σ−1)/im(σ+1).

use num::{One, Zero};

use crate::matrix::{self, IMat, Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("matrix is not an involution (σ² ≠ 1)")]
    NotInvolution,
    #[error("graded piece is not pure 2-torsion")]
    NotTwoTorsion,
}

/// A free abelian group with an involution, given by an integer matrix σ
/// with σ² = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionModule {
    rank: usize,
    sigma: IMat,
}

/// Shape of a finitely generated abelian group: free rank plus elementary
/// divisors > 1 (each dividing the next).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroupShape {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl AbelianGroupShape {
    pub fn free(rank: usize) -> Self {
        AbelianGroupShape { free_rank: rank, torsion: Vec::new() }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// (ℤ/2)^k
    pub fn elementary_two(k: usize) -> Self {
        AbelianGroupShape { free_rank: 0, torsion: vec![Int::from(2); k] }
    }

    pub fn torsion_order(&self) -> Int {
        self.torsion.iter().fold(Int::one(), |a, d| a * d)
    }
}

impl std::fmt::Display for AbelianGroupShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == *d {
                j += 1;
            }
            if j - i == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("(Z/{d})^{}", j - i));
            }
            i = j;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl InvolutionModule {
    pub fn new(sigma: IMat) -> Result<Self, CohomologyError> {
        let rank = sigma.len();
        if sigma.iter().any(|r| r.len() != rank) {
            return Err(CohomologyError::NotInvolution);
        }
        let sq = matrix::mat_mul(&sigma, &sigma);
        if sq != matrix::identity(rank) {
            return Err(CohomologyError::NotInvolution);
        }
        Ok(InvolutionModule { rank, sigma })
    }

    /// σ = −1 on ℤ^rank.
    pub fn minus_one(rank: usize) -> Self {
        let mut sigma = matrix::identity(rank);
        for (i, r) in sigma.iter_mut().enumerate() {
            r[i] = -r[i].clone();
        }
        InvolutionModule { rank, sigma }
    }

    /// σ = +1 on ℤ^rank.
    pub fn plus_one(rank: usize) -> Self {
        InvolutionModule { rank, sigma: matrix::identity(rank) }
    }

    /// The swap involution on ℤ² (a free ℤ[ℤ/2]-module of rank 1).
    pub fn swap() -> Self {
        InvolutionModule::new(vec![
            vec![Int::zero(), Int::one()],
            vec![Int::one(), Int::zero()],
        ])
        .unwrap()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn sigma(&self) -> &IMat {
        &self.sigma
    }

    pub fn direct_sum(&self, other: &InvolutionModule) -> InvolutionModule {
        let n = self.rank;
        let m = other.rank;
        let mut sigma = vec![vec![Int::zero(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                sigma[i][j] = self.sigma[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                sigma[n + i][n + j] = other.sigma[i][j].clone();
            }
        }
        InvolutionModule { rank: n + m, sigma }
    }

    fn sigma_shift(&self, shift: i64) -> IMat {
        let mut m = self.sigma.clone();
        for (i, r) in m.iter_mut().enumerate() {
            r[i] += Int::from(shift);
        }
        m
    }

    /// H^p(⟨σ⟩, M) as an abelian group shape.
    pub fn h_p(&self, p: usize) -> AbelianGroupShape {
        if p == 0 {
            // ker(σ−1) is free
            let k = matrix::kernel_basis(&self.sigma_shift(-1));
            return AbelianGroupShape::free(k.len());
        }
        let (ker_of, im_of) = if p % 2 == 1 {
            (self.sigma_shift(1), self.sigma_shift(-1))
        } else {
            (self.sigma_shift(-1), self.sigma_shift(1))
        };
        quotient_shape(&matrix::kernel_basis(&ker_of), &im_of)
    }
}

/// Shape of span(ker_basis) / column-span(im_matrix), where the image is
/// contained in the kernel because σ² = 1.
fn quotient_shape(ker_basis: &[Vec<Int>], im_matrix: &IMat) -> AbelianGroupShape {
    let k = ker_basis.len();
    if k == 0 {
        return AbelianGroupShape::trivial();
    }
    let n = ker_basis[0].len();
    // express each image generator (column of im_matrix) in the kernel basis
    let bt: Vec<Vec<Rat>> = matrix::to_rat(&matrix::transpose(ker_basis));
    let mut coeffs: IMat = Vec::new();
    for j in 0..n {
        let col: Vec<Rat> = (0..n)
            .map(|i| Rat::from_integer(im_matrix[i][j].clone()))
            .collect();
        let x = matrix::solve_rat(&bt, &col)
            .expect("image generators must lie in the kernel");
        debug_assert!(x.iter().all(|c| c.is_integer()), "kernel basis is saturated");
        coeffs.push(x.into_iter().map(|c| c.to_integer()).collect());
    }
    let divisors = matrix::snf_divisors(&coeffs);
    let nonzero: Vec<Int> = divisors.into_iter().filter(|d| !d.is_zero()).collect();
    let torsion: Vec<Int> = nonzero.iter().filter(|d| !d.is_one()).cloned().collect();
    AbelianGroupShape { free_rank: k - nonzero.len(), torsion }
}

/// One row of the E₂-tableau: H^p(⟨σ⟩, M) for p = 0..=p_max.
pub fn tableau_row(module: &InvolutionModule, p_max: usize) -> Vec<AbelianGroupShape> {
    (0..=p_max).map(|p| module.h_p(p)).collect()
}

/// E₂-tableau rows for the given (q, module) pairs.
pub fn e2_tableau(
    modules: &[(usize, InvolutionModule)],
    p_max: usize,
) -> Vec<(usize, Vec<AbelianGroupShape>)> {
    modules
        .iter()
        .map(|(q, m)| (*q, tableau_row(m, p_max)))
        .collect()
}

/// Assembles the H² of the quotient surface from its graded pieces.
///
/// The free part has the given rank; the kernel of the edge surjection is an
/// iterated extension of the remaining graded pieces and is killed by 2
/// (the Gysin composite is multiplication by the covering degree), so it is
/// elementary abelian: a 2-group of exponent 2 and order 2^k is (ℤ/2)^k.
pub fn assemble_h2_quotient(
    free_rank_invariants: usize,
    graded_pieces: &[AbelianGroupShape],
) -> Result<AbelianGroupShape, CohomologyError> {
    let mut order = Int::one();
    for piece in graded_pieces {
        if piece.free_rank != 0 || piece.torsion.iter().any(|d| *d != Int::from(2)) {
            return Err(CohomologyError::NotTwoTorsion);
        }
        order *= piece.torsion_order();
    }
    let mut k = 0usize;
    let two = Int::from(2);
    let mut o = order.clone();
    while o > Int::one() {
        debug_assert!((&o % &two).is_zero());
        o /= &two;
        k += 1;
    }
    Ok(AbelianGroupShape {
        free_rank: free_rank_invariants,
        torsion: vec![Int::from(2); k],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::int;

    #[test]
    fn rejects_non_involution() {
        let m = vec![vec![int(2)]];
        assert_eq!(InvolutionModule::new(m), Err(CohomologyError::NotInvolution));
    }

    #[test]
    fn minus_one_on_z8() {
        let m = InvolutionModule::minus_one(8);
        assert_eq!(m.h_p(0), AbelianGroupShape::trivial());
        assert_eq!(m.h_p(1), AbelianGroupShape::elementary_two(8));
        assert_eq!(m.h_p(2), AbelianGroupShape::trivial());
        assert_eq!(m.h_p(3), AbelianGroupShape::elementary_two(8));
    }

    #[test]
    fn plus_one_on_z() {
        let m = InvolutionModule::plus_one(1);
        assert_eq!(m.h_p(0), AbelianGroupShape::free(1));
        assert_eq!(m.h_p(1), AbelianGroupShape::trivial());
        assert_eq!(m.h_p(2), AbelianGroupShape::elementary_two(1));
    }

    #[test]
    fn swap_module_is_acyclic() {
        let m = InvolutionModule::swap();
        assert_eq!(m.h_p(0), AbelianGroupShape::free(1));
        assert_eq!(m.h_p(1), AbelianGroupShape::trivial());
        assert_eq!(m.h_p(2), AbelianGroupShape::trivial());
    }

    #[test]
    fn tableau_rows_match() {
        let rows = e2_tableau(
            &[(0, InvolutionModule::plus_one(1)), (1, InvolutionModule::minus_one(8))],
            3,
        );
        let (q0, row0) = &rows[0];
        assert_eq!(*q0, 0);
        assert_eq!(
            row0,
            &vec![
                AbelianGroupShape::free(1),
                AbelianGroupShape::trivial(),
                AbelianGroupShape::elementary_two(1),
                AbelianGroupShape::trivial(),
            ]
        );
        let (q1, row1) = &rows[1];
        assert_eq!(*q1, 1);
        assert_eq!(
            row1,
            &vec![
                AbelianGroupShape::trivial(),
                AbelianGroupShape::elementary_two(8),
                AbelianGroupShape::trivial(),
                AbelianGroupShape::elementary_two(8),
            ]
        );
        assert!(e2_tableau(&[], 3).is_empty());
    }

    #[test]
    fn assembly() {
        let got = assemble_h2_quotient(
            34,
            &[AbelianGroupShape::elementary_two(1), AbelianGroupShape::elementary_two(8)],
        )
        .unwrap();
        assert_eq!(got.free_rank, 34);
        assert_eq!(got.torsion, vec![Int::from(2); 9]);

        let free_only = assemble_h2_quotient(5, &[]).unwrap();
        assert_eq!(free_only, AbelianGroupShape::free(5));

        assert_eq!(
            assemble_h2_quotient(0, &[AbelianGroupShape::free(1)]),
            Err(CohomologyError::NotTwoTorsion)
        );
    }

    #[test]
    fn rank_additivity() {
        // rank ker(σ−1) + rank ker(σ+1) = rank M
        let m = InvolutionModule::swap().direct_sum(&InvolutionModule::minus_one(3));
        let plus = matrix::kernel_basis(&{
            let mut s = m.sigma().clone();
            for (i, r) in s.iter_mut().enumerate() {
                r[i] -= int(1);
            }
            s
        })
        .len();
        let minus = matrix::kernel_basis(&{
            let mut s = m.sigma().clone();
            for (i, r) in s.iter_mut().enumerate() {
                r[i] += int(1);
            }
            s
        })
        .len();
        assert_eq!(plus + minus, m.rank());
    }

    #[test]
    fn direct_sum_additivity() {
        let a = InvolutionModule::minus_one(2);
        let b = InvolutionModule::plus_one(3);
        let s = a.direct_sum(&b);
        for p in 0..4 {
            let ha = a.h_p(p);
            let hb = b.h_p(p);
            let hs = s.h_p(p);
            assert_eq!(hs.free_rank, ha.free_rank + hb.free_rank);
            let mut t = ha.torsion.clone();
            t.extend(hb.torsion.clone());
            t.sort();
            let mut ts = hs.torsion.clone();
            ts.sort();
            assert_eq!(ts, t);
        }
    }
}
