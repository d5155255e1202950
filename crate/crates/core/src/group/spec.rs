use crate::arith::{gcd, is_prime, mod_pow};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Default cap on the order of any built group (Cayley table ~4M entries).
pub const DEFAULT_ORDER_CAP: u64 = 2048;

/// Declarative construction of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// Z_base ⋊ Z_top, top generator conjugating the base generator to its
    /// `multiplier`-th power.
    SemidirectCyclic { base: u64, top: u64, multiplier: u64 },
    /// (Z2 x Z2) ⋊ Z9, the Z9 generator acting through its order-3 quotient.
    SemidirectKlein9,
    /// Dihedral group of order 2n.
    Dihedral(u64),
    /// Dicyclic group of order 4n (Dic_2 = Q8).
    Dicyclic(u64),
    /// Generalized quaternion group of order 2^a, a >= 3.
    GeneralizedQuaternion(u32),
    /// Semidihedral group of order 2^a, a >= 3 (a = 3 degenerates to Z4 x Z2).
    Semidihedral(u32),
    /// Modular group of order p^a, a >= 3.
    ModularPGroup { p: u64, a: u32 },
    /// Direct product of k copies of Z_p.
    ElementaryAbelian { p: u64, k: u32 },
    Named(NamedGroup),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGroup {
    A4,
    Sl23,
    Z3A4,
    F5,
}

impl GroupSpec {
    /// Arithmetic order of the group this spec builds.
    pub fn spec_order(&self) -> u64 {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::DirectProduct(a, b) => a.spec_order() * b.spec_order(),
            GroupSpec::SemidirectCyclic { base, top, .. } => base * top,
            GroupSpec::SemidirectKlein9 => 36,
            GroupSpec::Dihedral(n) => 2 * n,
            GroupSpec::Dicyclic(n) => 4 * n,
            GroupSpec::GeneralizedQuaternion(a) => 1u64 << a,
            GroupSpec::Semidihedral(a) => 1u64 << a,
            GroupSpec::ModularPGroup { p, a } => p.pow(*a),
            GroupSpec::ElementaryAbelian { p, k } => p.pow(*k),
            GroupSpec::Named(NamedGroup::A4) => 12,
            GroupSpec::Named(NamedGroup::Sl23) => 24,
            GroupSpec::Named(NamedGroup::Z3A4) => 36,
            GroupSpec::Named(NamedGroup::F5) => 20,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) | GroupSpec::Dicyclic(n) => {
                if *n == 0 {
                    return Err(Error::MalformedSpec("parameter must be positive".into()));
                }
            }
            GroupSpec::DirectProduct(a, b) => {
                a.validate()?;
                b.validate()?;
            }
            GroupSpec::SemidirectCyclic { base, top, multiplier } => {
                if *base == 0 || *top == 0 {
                    return Err(Error::MalformedSpec("parameters must be positive".into()));
                }
                let r = multiplier % base.max(&1);
                if *base > 1 && (gcd(r, *base) != 1 || mod_pow(r, *top, *base) != 1) {
                    return Err(Error::InvalidAction {
                        base: *base,
                        top: *top,
                        multiplier: *multiplier,
                    });
                }
            }
            GroupSpec::SemidirectKlein9 => {}
            GroupSpec::GeneralizedQuaternion(a) | GroupSpec::Semidihedral(a) => {
                if *a < 3 {
                    return Err(Error::MalformedSpec(format!(
                        "2-power family needs exponent >= 3, got {a}"
                    )));
                }
            }
            GroupSpec::ModularPGroup { p, a } => {
                if !is_prime(*p) {
                    return Err(Error::MalformedSpec(format!("{p} is not prime")));
                }
                if *a < 3 {
                    return Err(Error::MalformedSpec(format!(
                        "modular group needs exponent >= 3, got {a}"
                    )));
                }
            }
            GroupSpec::ElementaryAbelian { p, k } => {
                if !is_prime(*p) {
                    return Err(Error::MalformedSpec(format!("{p} is not prime")));
                }
                if *k == 0 {
                    return Err(Error::MalformedSpec("rank must be positive".into()));
                }
            }
            GroupSpec::Named(_) => {}
        }
        Ok(())
    }

    /// Construct the explicit multiplication table, respecting `cap`.
    pub fn build(&self, cap: u64) -> Result<FiniteGroup> {
        self.validate()?;
        let order = self.spec_order();
        if order > cap {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        super::build::build(self)
    }

    /// Text form in the spec DSL.
    pub fn to_dsl(&self) -> String {
        match self {
            GroupSpec::Cyclic(n) => format!("C {n}"),
            GroupSpec::DirectProduct(a, b) => {
                let lhs = a.to_dsl();
                let rhs = match **b {
                    GroupSpec::DirectProduct(..) => format!("({})", b.to_dsl()),
                    _ => b.to_dsl(),
                };
                format!("{lhs} x {rhs}")
            }
            GroupSpec::SemidirectCyclic { base, top, multiplier } => {
                format!("SD({base},{top},{multiplier})")
            }
            GroupSpec::SemidirectKlein9 | GroupSpec::Named(NamedGroup::Z3A4) => "Z3A4".into(),
            GroupSpec::Dihedral(n) => format!("D {n}"),
            GroupSpec::Dicyclic(n) => format!("Dic {n}"),
            GroupSpec::GeneralizedQuaternion(a) => format!("Q {}", 1u64 << a),
            GroupSpec::Semidihedral(a) => format!("SD {}", 1u64 << a),
            GroupSpec::ModularPGroup { p, a } => format!("M({p},{a})"),
            GroupSpec::ElementaryAbelian { p, k } => format!("EA({p},{k})"),
            GroupSpec::Named(NamedGroup::A4) => "A4".into(),
            GroupSpec::Named(NamedGroup::Sl23) => "SL23".into(),
            GroupSpec::Named(NamedGroup::F5) => "F5".into(),
        }
    }
}
