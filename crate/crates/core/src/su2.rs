//! SU(2) as unit quaternions `q = q0 + q1 i + q2 j + q3 k`.

use std::ops::Mul;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2 {
    pub q: [f64; 4],
}

impl Su2 {
    pub const IDENTITY: Su2 = Su2 {
        q: [1.0, 0.0, 0.0, 0.0],
    };

    pub fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Self { q: [q0, q1, q2, q3] }
    }

    pub fn norm(&self) -> f64 {
        self.q.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn normalize(&self) -> Self {
        let n = self.norm();
        Self {
            q: self.q.map(|x| x / n),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            q: [self.q[0], -self.q[1], -self.q[2], -self.q[3]],
        }
    }

    /// `exp(v)` for a pure imaginary quaternion `v`.
    pub fn exp(v: [f64; 3]) -> Self {
        let theta = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if theta < 1e-300 {
            return Self::IDENTITY;
        }
        // sin(θ)/θ, accurate for small θ
        let s = if theta < 1e-4 {
            1.0 - theta * theta / 6.0
        } else {
            theta.sin() / theta
        };
        Self::new(theta.cos(), v[0] * s, v[1] * s, v[2] * s)
    }

    /// Rotation angle `φ ∈ [0, π]` with `q = cos φ + u sin φ`; this is the
    /// distance from the identity on the unit 3-sphere.
    pub fn angle(&self) -> f64 {
        let im = (self.q[1] * self.q[1] + self.q[2] * self.q[2] + self.q[3] * self.q[3]).sqrt();
        im.atan2(self.q[0])
    }

    /// Bi-invariant geodesic distance on the unit 3-sphere.
    pub fn distance(&self, other: &Su2) -> f64 {
        (self.conj() * *other).angle()
    }
}

impl Mul for Su2 {
    type Output = Su2;

    fn mul(self, b: Su2) -> Su2 {
        let [a0, a1, a2, a3] = self.q;
        let [b0, b1, b2, b3] = b.q;
        Su2::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}
