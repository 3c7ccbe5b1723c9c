//! The rank-one free module of Thom-shifted classes.
//!
//! A [`ThomClass`] is a ring class `x` viewed through the Thom isomorphism as
//! `u*x`, where the Thom class `u` carries degree `-d`. The shift is a tag on
//! the value, never a ring generator: two Thom classes cannot be multiplied,
//! because the shifted side is a module over the ring, not a ring itself.

use crate::coeff::Coefficient;
use crate::error::Error;
use crate::ring::{GradedClass, RingSpec};

/// `u*x` with the body held in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThomClass {
    body: GradedClass,
}

impl ThomClass {
    /// Wraps a ring class as `u*x`.
    pub fn wrap(x: &GradedClass) -> ThomClass {
        ThomClass {
            body: x.normalized(),
        }
    }

    /// Inverse of [`ThomClass::wrap`]: recovers the (normalized) body.
    pub fn unwrap(&self) -> GradedClass {
        self.body.clone()
    }

    pub fn body(&self) -> &GradedClass {
        &self.body
    }

    pub fn ring(&self) -> RingSpec {
        self.body.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Total degree `deg x - d`; may be negative. `None` for the zero class
    /// and for mixed-degree bodies.
    pub fn total_degree(&self) -> Option<i64> {
        Some(self.body.homogeneous_degree()? - i64::from(self.ring().d()))
    }

    pub fn add(&self, other: &ThomClass) -> Result<ThomClass, Error> {
        Ok(ThomClass {
            body: self.body.add(&other.body)?.normalized(),
        })
    }

    pub fn scale(&self, c: &Coefficient) -> Result<ThomClass, Error> {
        Ok(ThomClass {
            body: self.body.scale(c)?.normalized(),
        })
    }

    pub fn scale_i64(&self, n: i64) -> ThomClass {
        ThomClass {
            body: self.body.scale_i64(n).normalized(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffRing;
    use crate::ring::{Flavor, Generator, Monomial, TorsionMode};

    fn ring(d: u32) -> RingSpec {
        RingSpec::new(d, Flavor::Oriented, CoeffRing::Integers, TorsionMode::Standard).unwrap()
    }

    fn class(d: u32, pairs: &[(Generator, u32)]) -> GradedClass {
        GradedClass::from_monomial(ring(d), Monomial::from_exponents(pairs.iter().copied()))
            .unwrap()
    }

    #[test]
    fn wrap_normalizes_and_shifts() {
        // d = 2: u*e^2 = u*p1, total degree 4 - 2 = 2
        let t = ThomClass::wrap(&class(2, &[(Generator::E, 2)]));
        assert_eq!(t.unwrap(), class(2, &[(Generator::P(1), 1)]));
        assert_eq!(t.total_degree(), Some(2));

        // the Thom class itself sits in degree -d
        let unit = ThomClass::wrap(&GradedClass::one(ring(5)));
        assert_eq!(unit.total_degree(), Some(-5));

        // d = 4: u*(p1 e) has total degree 4 + 4 - 4 = 4
        let t = ThomClass::wrap(&class(4, &[(Generator::P(1), 1), (Generator::E, 1)]));
        assert_eq!(t.total_degree(), Some(4));
    }

    #[test]
    fn unwrap_inverts_wrap() {
        // u*p1 -> p1
        let p1 = class(2, &[(Generator::P(1), 1)]);
        assert_eq!(ThomClass::wrap(&p1).unwrap(), p1);

        // u*e^3 at d = 4 -> p2*e
        let t = ThomClass::wrap(&class(4, &[(Generator::E, 3)]));
        assert_eq!(t.unwrap(), class(4, &[(Generator::P(2), 1), (Generator::E, 1)]));

        // u*0 -> 0
        let z = ThomClass::wrap(&GradedClass::zero(ring(3)));
        assert!(z.is_zero());
        assert_eq!(z.total_degree(), None);
    }

    #[test]
    fn module_structure() {
        let x = class(4, &[(Generator::E, 3)]);
        let scaled = ThomClass::wrap(&x.scale_i64(5));
        assert_eq!(scaled, ThomClass::wrap(&x).scale_i64(5));
    }
}
