use crate::arith::euler_phi;
use crate::tables::poly::TPolynomial;
use serde::{Deserialize, Serialize};

/// A divisor of the shape const·p^a·q^b·r^c over the prime variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicDivisor {
    #[serde(rename = "const", default = "one")]
    pub constant: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub p: u8,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub q: u8,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub r: u8,
}

fn one() -> u64 {
    1
}
fn is_zero(e: &u8) -> bool {
    *e == 0
}

impl SymbolicDivisor {
    pub fn constant(c: u64) -> Self {
        SymbolicDivisor { constant: c, p: 0, q: 0, r: 0 }
    }

    pub fn exps(&self) -> [u8; 3] {
        [self.p, self.q, self.r]
    }

    /// Substitute concrete primes for some variables (None = keep symbolic).
    pub fn pin(&self, pins: [Option<u64>; 3]) -> SymbolicDivisor {
        let mut out = *self;
        let exps = [self.p, self.q, self.r];
        for (i, pin) in pins.iter().enumerate() {
            if let Some(v) = pin {
                out.constant *= v.pow(exps[i] as u32);
                match i {
                    0 => out.p = 0,
                    1 => out.q = 0,
                    _ => out.r = 0,
                }
            }
        }
        out
    }

    /// Does `self` divide `other` for every admissible prime assignment?
    pub fn divides(&self, other: &SymbolicDivisor) -> bool {
        other.constant % self.constant == 0
            && self.p <= other.p
            && self.q <= other.q
            && self.r <= other.r
    }

    /// The divisor itself as a polynomial.
    pub fn to_poly(&self) -> TPolynomial {
        TPolynomial::monomial(self.constant as i64, self.exps())
    }

    /// φ of the divisor as a polynomial: φ(const)·Π (v^e − v^(e-1)),
    /// multiplicative because the variables are primes coprime to const.
    pub fn phi_symbolic(&self) -> TPolynomial {
        let mut out = TPolynomial::constant(euler_phi(self.constant) as i64);
        for (i, &e) in self.exps().iter().enumerate() {
            if e > 0 {
                let mut hi = [0u8; 3];
                hi[i] = e;
                let mut lo = [0u8; 3];
                lo[i] = e - 1;
                let factor = TPolynomial::monomial(1, hi) - TPolynomial::monomial(1, lo);
                out = out * factor;
            }
        }
        out
    }

    pub fn eval(&self, assign: [u64; 3]) -> u64 {
        let mut out = self.constant;
        for (i, &e) in self.exps().iter().enumerate() {
            out *= assign[i].pow(e as u32);
        }
        out
    }

    /// Text form like "7p", "p^2q", "21".
    pub fn symbol(&self) -> String {
        let mut s = String::new();
        if self.constant != 1 || self.exps() == [0, 0, 0] {
            s.push_str(&self.constant.to_string());
        }
        for (v, e) in [("p", self.p), ("q", self.q), ("r", self.r)] {
            match e {
                0 => {}
                1 => s.push_str(v),
                _ => s.push_str(&format!("{v}^{e}")),
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(constant: u64, p: u8, q: u8, r: u8) -> SymbolicDivisor {
        SymbolicDivisor { constant, p, q, r }
    }

    #[test]
    fn phi_of_7p() {
        let phi = d(7, 1, 0, 0).phi_symbolic();
        assert_eq!(phi.to_string(), "6p - 6");
    }

    #[test]
    fn phi_of_p_squared() {
        assert_eq!(d(1, 2, 0, 0).phi_symbolic().to_string(), "p^2 - p");
    }

    #[test]
    fn phi_of_21() {
        assert_eq!(d(21, 0, 0, 0).phi_symbolic().to_string(), "12");
    }

    #[test]
    fn pinning() {
        let dv = d(1, 2, 1, 0).pin([Some(2), None, None]);
        assert_eq!(dv, d(4, 0, 1, 0));
        assert_eq!(dv.eval([0, 5, 0]), 20);
    }

    #[test]
    fn divides() {
        assert!(d(7, 1, 0, 0).divides(&d(21, 1, 0, 0)));
        assert!(!d(2, 0, 0, 0).divides(&d(21, 1, 0, 0)));
        assert!(!d(1, 2, 0, 0).divides(&d(21, 1, 0, 0)));
    }
}
