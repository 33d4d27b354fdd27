//! Closed-form primitives for SL(2,ℝ) and the hyperbolic plane.
//!
//! Conventions fixed here and used by every other module:
//!
//! * Lie algebra basis: `P1 = diag(1/2, -1/2)`, `P2 = [[0,1/2],[1/2,0]]`
//!   span the symmetric part 𝔭, `Θ = [[0,1/2],[-1/2,0]]` spans the
//!   rotation algebra 𝔨. An [`AlgebraVector`] holds coordinates
//!   `(x1, x2, x3)` against `(P1, P2, Θ)`.
//! * Inner product: `{P1, P2, 2Θ}` is orthonormal. Restricted to 𝔭 this
//!   scales the Killing-form pairing so that the induced metric on
//!   G/K is the curvature −1 hyperbolic metric: `exp(t·P1)` projects to
//!   a unit-speed geodesic.
//! * Iwasawa factorization: `g = n(g) · exp_a(A(g)) · u(g)` with `n`
//!   unit upper triangular, `exp_a(A) = diag(e^{A/2}, e^{-A/2})` and
//!   `u ∈ SO(2)`, so `A(exp(t·P1)) = t`. With this ordering `A(k·g)`
//!   genuinely depends on `k`, which is what the spherical-function and
//!   principal-series integrals over K require; the compact factor on
//!   the other side would make `A(k·g)` constant in `k`.
//! * Half-plane model: `g` acts on `z = x + iy` by Möbius maps, the base
//!   point is `o = i`, and `SO(2)` is exactly the stabilizer of `o`.

use crate::error::{Error, Result};

/// Determinant drift tolerated before renormalization kicks in.
pub const DET_TOL: f64 = 1e-12;

/// An element of SL(2,ℝ): a real 2×2 matrix with determinant one.
///
/// Constructors renormalize so that long products do not drift away
/// from the group.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    m: [[f64; 2]; 2],
}

impl GroupElement {
    /// The neutral element.
    pub fn identity() -> Self {
        GroupElement { m: [[1.0, 0.0], [0.0, 1.0]] }
    }

    /// Builds an element from matrix entries, rescaling to determinant one.
    ///
    /// Returns an error when the determinant is not positive (such a
    /// matrix is not in the identity component scaled by any factor).
    pub fn from_matrix(m: [[f64; 2]; 2]) -> Result<Self> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if !(det > 0.0) || !det.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "matrix determinant must be positive and finite, got {det}"
            )));
        }
        let s = det.sqrt();
        Ok(GroupElement {
            m: [[m[0][0] / s, m[0][1] / s], [m[1][0] / s, m[1][1] / s]],
        })
    }

    /// The rotation `k_θ = [[cos θ, sin θ], [-sin θ, cos θ]] ∈ SO(2)`.
    ///
    /// `θ ↦ k_θ` is a homomorphism from the circle onto the maximal
    /// compact subgroup.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        GroupElement { m: [[c, s], [-s, c]] }
    }

    /// Raw matrix entries `[[a, b], [c, d]]`.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> f64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Group product, renormalized so the determinant stays pinned at one.
    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        let a = &self.m;
        let b = &other.m;
        let mut m = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (det - 1.0).abs() > DET_TOL {
            let s = det.sqrt();
            for row in &mut m {
                row[0] /= s;
                row[1] /= s;
            }
        }
        GroupElement { m }
    }

    /// Inverse via the adjugate shortcut for determinant-one matrices:
    /// `[[a,b],[c,d]]^{-1} = [[d,-b],[-c,a]]`.
    pub fn inverse(&self) -> GroupElement {
        let [[a, b], [c, d]] = self.m;
        GroupElement { m: [[d, -b], [-c, a]] }
    }

    pub fn transpose(&self) -> GroupElement {
        let [[a, b], [c, d]] = self.m;
        GroupElement { m: [[a, c], [b, d]] }
    }

    /// Frobenius distance between the two underlying matrices.
    pub fn frobenius_dist(&self, other: &GroupElement) -> f64 {
        let mut s = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let d = self.m[i][j] - other.m[i][j];
                s += d * d;
            }
        }
        s.sqrt()
    }

    /// Geodesic distance from the base point to the projection of `self`,
    /// i.e. the norm of the 𝔭-part in the Cartan factorization.
    ///
    /// For `g` with polar part `exp(X)` this equals `‖X‖`.
    pub fn radius(&self) -> f64 {
        // tr(g gᵀ) = 2 cosh ‖X‖ for g = exp(X)·k.
        let [[a, b], [c, d]] = self.m;
        let tr = a * a + b * b + c * c + d * d;
        let half = (tr / 2.0).max(1.0);
        (half + (half * half - 1.0).sqrt()).ln()
    }
}

/// Coordinates `(x1, x2, x3)` of `x1·P1 + x2·P2 + x3·Θ` in 𝔰𝔩(2,ℝ).
///
/// `x3 = 0` picks out the 𝔭-part that carries the geometry of the
/// quotient plane; sampler-facing code keeps `x3 = 0` throughout.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AlgebraVector {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl AlgebraVector {
    pub const ZERO: AlgebraVector = AlgebraVector { x1: 0.0, x2: 0.0, x3: 0.0 };

    /// A vector in 𝔭 (no rotation component).
    pub fn in_p(x1: f64, x2: f64) -> Self {
        AlgebraVector { x1, x2, x3: 0.0 }
    }

    pub fn scale(&self, c: f64) -> Self {
        AlgebraVector { x1: c * self.x1, x2: c * self.x2, x3: c * self.x3 }
    }

    pub fn add(&self, other: &Self) -> Self {
        AlgebraVector {
            x1: self.x1 + other.x1,
            x2: self.x2 + other.x2,
            x3: self.x3 + other.x3,
        }
    }

    /// The represented traceless matrix.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [
            [self.x1 / 2.0, (self.x2 + self.x3) / 2.0],
            [(self.x2 - self.x3) / 2.0, -self.x1 / 2.0],
        ]
    }

    /// Norm under [`killing_theta_inner`].
    pub fn norm(&self) -> f64 {
        killing_theta_inner(self, self).sqrt()
    }
}

/// The positive-definite pairing `-B(X, θY)` (θ = negative transpose,
/// B the Killing form), scaled so `{P1, P2, 2Θ}` is orthonormal.
///
/// In coordinates this is `x1·y1 + x2·y2 + x3·y3/4`. Restricted to 𝔭
/// it is the Killing pairing divided by two, which makes the induced
/// metric on the quotient the curvature −1 hyperbolic metric; on 𝔨 the
/// scale is a convention (no single scalar multiple of the raw pairing
/// can normalize both blocks, since it assigns `2Θ` four times the
/// squared norm of `P1`).
pub fn killing_theta_inner(x: &AlgebraVector, y: &AlgebraVector) -> f64 {
    x.x1 * y.x1 + x.x2 * y.x2 + x.x3 * y.x3 / 4.0
}

/// Matrix exponential of the represented traceless 2×2 matrix in closed
/// form: with `q = -det(M) = (x1² + x2² - x3²)/4`,
///
/// ```text
/// exp(M) = cosh(√q)·I + sinhc(√q)·M          (q ≥ 0)
///        = cos(√-q)·I + sinc(√-q)·M          (q < 0)
/// ```
///
/// where `sinhc(s) = sinh(s)/s` continued through `s = 0`.
pub fn exp_alg(x: &AlgebraVector) -> GroupElement {
    let m = x.matrix();
    let q = (x.x1 * x.x1 + x.x2 * x.x2 - x.x3 * x.x3) / 4.0;
    let (ch, shc) = cosh_sinhc(q);
    GroupElement {
        m: [
            [ch + shc * m[0][0], shc * m[0][1]],
            [shc * m[1][0], ch + shc * m[1][1]],
        ],
    }
}

/// `(cosh √q, sinh(√q)/√q)` with analytic continuation to q < 0 and a
/// series branch near zero to avoid 0/0.
fn cosh_sinhc(q: f64) -> (f64, f64) {
    if q.abs() < 1e-8 {
        // cosh √q = 1 + q/2 + q²/24, sinhc = 1 + q/6 + q²/120
        (1.0 + q / 2.0 + q * q / 24.0, 1.0 + q / 6.0 + q * q / 120.0)
    } else if q > 0.0 {
        let s = q.sqrt();
        (s.cosh(), s.sinh() / s)
    } else {
        let s = (-q).sqrt();
        (s.cos(), s.sin() / s)
    }
}

/// Logarithm of a symmetric positive-definite determinant-one matrix:
/// the unique `X ∈ 𝔭` with `exp_alg(X) = p`.
///
/// For `X ∈ 𝔭` the closed form reads `p = cosh(‖X‖/2)·I +
/// sinhc(‖X‖/2)·X`, so `‖X‖ = 2·arcosh(tr p / 2)` and `X` is the
/// traceless part rescaled. Rejects input that is not symmetric
/// positive definite with unit determinant, which signals a polar
/// decomposition bug upstream.
pub fn log_psd(p: &GroupElement) -> Result<AlgebraVector> {
    let [[a, b], [c, d]] = p.m;
    if (b - c).abs() > 1e-9 {
        return Err(Error::NotSymmetricPosDef(format!(
            "asymmetry |b - c| = {:e}",
            (b - c).abs()
        )));
    }
    let tr = a + d;
    if tr < 2.0 - 1e-9 {
        // symmetric with det 1 and tr < 2 has an eigenvalue ≤ 0 or is a rotation
        return Err(Error::NotSymmetricPosDef(format!("trace {tr} < 2")));
    }
    let half = (tr / 2.0).max(1.0);
    let norm = 2.0 * (half + (half * half - 1.0).sqrt()).ln();
    let s = norm / 2.0;
    let (_, shc) = cosh_sinhc(s * s);
    // X = (p - cosh(s)·I) / sinhc(s); traceless by construction of cosh(s) = tr/2
    let off = (b + c) / 2.0;
    Ok(AlgebraVector {
        x1: (a - d) / shc,
        x2: 2.0 * off / shc,
        x3: 0.0,
    })
}

/// The three coordinates of the `g = n · exp_a(A) · u` factorization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IwasawaCoords {
    /// Rotation angle of the compact factor `u(g)`, in `(-π, π]`.
    pub theta_u: f64,
    /// Abelian coordinate, normalized so `A(exp(t·P1)) = t`.
    pub a: f64,
    /// Upper-triangular coordinate of the unipotent factor.
    pub n_x: f64,
}

impl IwasawaCoords {
    /// Rebuilds the group element `n · exp_a(A) · u` from coordinates.
    pub fn reconstruct(&self) -> GroupElement {
        let n = GroupElement { m: [[1.0, self.n_x], [0.0, 1.0]] };
        let ea = (self.a / 2.0).exp();
        let a = GroupElement { m: [[ea, 0.0], [0.0, 1.0 / ea]] };
        n.multiply(&a).multiply(&GroupElement::rotation(self.theta_u))
    }
}

/// Iwasawa factorization `g = n(g) · exp_a(A(g)) · u(g)`.
///
/// The second row of `g` equals `e^{-A/2}·(second row of u)`, which is
/// one Gram–Schmidt step on the rows; the factorization is global and
/// unconditionally stable since `(c, d) ≠ 0` for determinant-one input.
pub fn iwasawa_decompose(g: &GroupElement) -> IwasawaCoords {
    let [[a, b], [c, d]] = g.m;
    let row2 = c * c + d * d;
    let coord_a = -row2.ln();
    let inv_len = row2.sqrt().recip();
    // u has second row (-sin θ, cos θ)
    let theta_u = f64::atan2(-c * inv_len, d * inv_len);
    // n_x is the (0,1) entry of g · u^{-1} · exp_a(-A)
    let (s, co) = theta_u.sin_cos();
    let ea = (coord_a / 2.0).exp();
    // g·u^{-1} = g·[[c, -s],[s, c]]ᵀ ... u^{-1} = [[cos, -sin],[sin, cos]]
    let gu_01 = a * -s + b * co;
    let n_x = gu_01 * ea;
    IwasawaCoords { theta_u, a: coord_a, n_x }
}

/// Cartan (polar) factorization `g = exp(X)·k` with `X ∈ 𝔭` and
/// `k ∈ SO(2)`.
///
/// The polar part is `√(g·gᵀ)`, available in closed form for symmetric
/// determinant-one matrices via the Cayley–Hamilton identity
/// `√S = (S + I)/√(tr S + 2)`. The rotation is re-extracted from its
/// angle so that `k` is orthogonal to machine precision.
pub fn cartan_decompose(g: &GroupElement) -> (AlgebraVector, GroupElement) {
    let [[a, b], [c, d]] = g.m;
    // S = g gᵀ
    let s00 = a * a + b * b;
    let s01 = a * c + b * d;
    let s11 = c * c + d * d;
    let tr = s00 + s11;
    let scale = (tr + 2.0).sqrt();
    let p = GroupElement {
        m: [[(s00 + 1.0) / scale, s01 / scale], [s01 / scale, (s11 + 1.0) / scale]],
    };
    let x = log_psd(&p).expect("g·gᵀ square root is symmetric positive definite");
    let k_raw = p.inverse().multiply(g);
    let [[k00, k01], _] = k_raw.m;
    let theta = f64::atan2(k01, k00);
    (x, GroupElement::rotation(theta))
}

/// A point `x + iy` of the upper half-plane model, `y > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    /// The base point `o = i`, the image of the identity coset.
    pub fn base() -> Self {
        PlanePoint { x: 0.0, y: 1.0 }
    }
}

/// Möbius action of `g` on the base point: `g·i = (a·i + b)/(c·i + d)`.
///
/// Expanding with `det g = 1` gives `x = (ac + bd)/(c² + d²)` and
/// `y = 1/(c² + d²)`, so `y > 0` always. Right translation by any
/// rotation fixes the output, which identifies the image with the
/// coset of `g`.
pub fn project_to_plane(g: &GroupElement) -> PlanePoint {
    let [[a, b], [c, d]] = g.m;
    let den = c * c + d * d;
    PlanePoint { x: (a * c + b * d) / den, y: 1.0 / den }
}

/// Geodesic distance in the curvature −1 upper half-plane:
/// `arcosh(1 + |z - w|² / (2·Im z·Im w))`.
pub fn hyperbolic_distance(z: &PlanePoint, w: &PlanePoint) -> f64 {
    let dx = z.x - w.x;
    let dy = z.y - w.y;
    let arg = 1.0 + (dx * dx + dy * dy) / (2.0 * z.y * w.y);
    let arg = arg.max(1.0);
    (arg + (arg * arg - 1.0).sqrt()).ln()
}
