//! Numerical pipeline for the invariants of the surface Y = Θ ∩ Θ_x in a
//! principally polarized abelian g-fold and of its quotient Y⁺ by the
//! involution, for g = 4: Chern coefficients, Euler characteristics, Hodge
//! diamonds and the signature table of the intersection form.

/// Coefficient of θ^i in c_i(Y): (−1)^i (i+1).
pub fn chern_coefficient(i: u32) -> i64 {
    let sign = if i % 2 == 0 { 1 } else { -1 };
    sign * (i as i64 + 1)
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// Topological Euler characteristic of Y inside an abelian g-fold:
/// (−1)^g (g−1) · g!.
pub fn euler_characteristic(g: u32) -> i64 {
    assert!(g >= 2);
    let sign = if g % 2 == 0 { 1 } else { -1 };
    sign * (g as i64 - 1) * factorial(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Surface {
    Y,
    Yplus,
}

/// Holomorphic Euler characteristic χ(O) for g = 4, by Noether's formula
/// χ(O) = (c₁² + c₂)/12 with deg θ² = g! = 24, halved for the quotient.
pub fn holomorphic_euler(surface: Surface) -> i64 {
    // c₁² contributes 4·θ², c₂ contributes 3·θ²
    let c1_sq = chern_coefficient(1).pow(2);
    let c2 = chern_coefficient(2);
    let chi_y = (c1_sq + c2) * factorial(4) / 12;
    match surface {
        Surface::Y => chi_y,
        Surface::Yplus => chi_y / 2,
    }
}

/// Hodge numbers of a surface up to the middle row; the rest follow by
/// symmetry and Serre duality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HodgeDiamond {
    pub h00: i64,
    pub h10: i64,
    pub h01: i64,
    pub h20: i64,
    pub h11: i64,
    pub h02: i64,
}

impl HodgeDiamond {
    pub fn b1(&self) -> i64 {
        self.h10 + self.h01
    }

    pub fn b2(&self) -> i64 {
        self.h20 + self.h11 + self.h02
    }

    /// Alternating Betti sum 2b₀ − 2b₁ + b₂ of a surface.
    pub fn euler(&self) -> i64 {
        2 * self.h00 - 2 * self.b1() + self.b2()
    }

    pub fn holomorphic_euler(&self) -> i64 {
        self.h00 - self.h01 + self.h02
    }
}

/// Hodge diamond of Y or Y⁺ for g = 4, derived from χ, χ(O) and h¹.
pub fn hodge_diamond(surface: Surface) -> HodgeDiamond {
    // first Betti numbers: Y carries the full H¹ of the ambient fourfold,
    // the quotient kills it
    let h10 = match surface {
        Surface::Y => 4,
        Surface::Yplus => 0,
    };
    let chi_o = holomorphic_euler(surface);
    let h02 = chi_o - 1 + h10;
    let e = match surface {
        Surface::Y => euler_characteristic(4),
        Surface::Yplus => euler_characteristic(4) / 2,
    };
    let b2 = e - 2 + 4 * h10;
    let h11 = b2 - 2 * h02;
    HodgeDiamond { h00: 1, h10, h01: h10, h20: h02, h11, h02 }
}

/// Signatures (s₊, s₋) of the intersection form on H²(Y), H²(Y⁺), on the
/// pullback of H²(X), and on the invariant/anti-invariant parts V± of the
/// primitive complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureTable {
    pub h2_y: (i64, i64),
    pub h2_yplus: (i64, i64),
    pub h2_x: (i64, i64),
    pub v_minus: (i64, i64),
    pub v_plus: (i64, i64),
}

impl SignatureTable {
    pub fn rows(&self) -> [(&'static str, (i64, i64)); 5] {
        [
            ("H2(Y)", self.h2_y),
            ("H2(Y+)", self.h2_yplus),
            ("H2(X)", self.h2_x),
            ("V-", self.v_minus),
            ("V+", self.v_plus),
        ]
    }
}

/// Signature table for g = 4: per surface s₊ = 2h²⁰ + 1 and s₋ = h¹¹ − 1 by
/// the Hodge index theorem; the V± rows are the differences against the
/// H²(X) row (13, 15) and the H²(Y⁺) row.
pub fn signature_table() -> SignatureTable {
    let y = hodge_diamond(Surface::Y);
    let yp = hodge_diamond(Surface::Yplus);
    let h2_y = (2 * y.h20 + 1, y.h11 - 1);
    let h2_yplus = (2 * yp.h20 + 1, yp.h11 - 1);
    let h2_x = (13, 15);
    let v_minus = (h2_y.0 - h2_yplus.0, h2_y.1 - h2_yplus.1);
    let v_plus = (h2_yplus.0 - h2_x.0, h2_yplus.1 - h2_x.1);
    SignatureTable { h2_y, h2_yplus, h2_x, v_minus, v_plus }
}

fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let mut acc: i64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as i64 / (i as i64 + 1);
    }
    acc
}

/// Degree of the difference morphism Y^{[n]} → X: C(2n, n).
pub fn difference_degree(n: u64) -> i64 {
    binomial(2 * n, n)
}
