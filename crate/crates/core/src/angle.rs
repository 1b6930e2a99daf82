//! Exact rational angles.
//!
//! Character values are roots of unity e^{2πi·num/den}. Keeping the angle as an
//! integer fraction of a turn makes character identities (multiplicativity,
//! conductor tests, inverse characters) exact integer arithmetic; floating point
//! enters only when a value is finally evaluated as a complex number.

use num_complex::Complex64;
use std::f64::consts::TAU;

/// An angle that is an exact rational multiple of a full turn, reduced to
/// `num/den` with `0 ≤ num < den` and `gcd(num, den) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TurnAngle {
    num: u64,
    den: u64,
}

impl TurnAngle {
    /// `num/den` turns, reduced to canonical form. `den` must be nonzero.
    pub fn new(num: u64, den: u64) -> TurnAngle {
        assert!(den != 0, "angle denominator must be nonzero");
        let num = num % den;
        let g = gcd(num, den);
        if num == 0 {
            TurnAngle { num: 0, den: 1 }
        } else {
            TurnAngle { num: num / g, den: den / g }
        }
    }

    pub fn zero() -> TurnAngle {
        TurnAngle { num: 0, den: 1 }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Sum of two angles, exact (mod one turn).
    pub fn add(self, other: TurnAngle) -> TurnAngle {
        let den = lcm(self.den, other.den);
        let num = (self.num * (den / self.den) + other.num * (den / other.den)) % den;
        TurnAngle::new(num, den)
    }

    /// Negation (mod one turn), exact.
    pub fn neg(self) -> TurnAngle {
        TurnAngle::new(self.den - self.num, self.den)
    }

    /// Integer multiple (mod one turn), exact.
    pub fn scale(self, k: u64) -> TurnAngle {
        // self.num < den ≤ 2^20-ish and k is reduced mod den first, so the
        // product stays far from u64 overflow at the supported bounds.
        TurnAngle::new((k % self.den) * self.num % self.den, self.den)
    }

    pub fn radians(self) -> f64 {
        TAU * self.num as f64 / self.den as f64
    }

    pub fn turns(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(1.0, self.radians())
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// The table [e^{2πik/den}] for k < den.
pub fn unit_roots(den: u64) -> Vec<Complex64> {
    (0..den)
        .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / den as f64))
        .collect()
}

/// Wrap-aware distance between two angles in radians, in [0, π].
pub fn angle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Reduce an angle in radians to [0, 2π).
pub fn wrap_angle(a: f64) -> f64 {
    let w = a.rem_euclid(TAU);
    if w == TAU {
        0.0
    } else {
        w
    }
}
