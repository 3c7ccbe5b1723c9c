//! Pullback and Gysin pushforward along the universal sphere bundle.
//!
//! The unit sphere bundle of the tautological `(d+1)`-plane bundle is a model
//! for the rank-`d` classifying space, so its projection connects the ring at
//! fiber dimension `d` (the total space side) with the ring at `d+1` (the
//! base side). Pullback is a ring homomorphism determined on generators;
//! the pushforward lowers degree by `d` and is determined by the projection
//! formula together with the image of the Euler class, which is the Euler
//! characteristic of the `d`-sphere.

use std::collections::BTreeMap;

use crate::coeff::Coefficient;
use crate::error::Error;
use crate::ring::{Generator, GradedClass, Monomial};

/// Euler characteristic of the d-sphere, `1 + (-1)^d`.
fn sphere_euler_characteristic(d: u32) -> i64 {
    1 + if d.is_multiple_of(2) { 1 } else { -1 }
}

/// Restricts a class over the ring at `d+1` to the ring at `d`.
///
/// On generators: `p_k` maps to `p_k` while it exists on the fiber side and
/// to 0 above the rank bound `⌊d/2⌋`; the degree-`(d+1)` Euler class maps
/// to 0 (the restricted bundle acquires a tautological nowhere-zero
/// section); `w_k` maps to `w_k` for `k <= d` and to 0 for `k = d+1`. The
/// map extends multiplicatively and linearly.
pub fn pullback(y: &GradedClass) -> Result<GradedClass, Error> {
    let base = y.ring();
    let fiber = base.fiber_ring().ok_or(Error::NoFiberRing)?;
    let mut terms: BTreeMap<Monomial, Coefficient> = BTreeMap::new();
    'term: for (m, c) in y.terms() {
        for (g, _) in m.exponents() {
            // any killed generator kills the whole monomial
            if !fiber.is_valid_generator(g) || g == Generator::E {
                continue 'term;
            }
        }
        terms.insert(m.clone(), c.clone());
    }
    Ok(GradedClass::from_raw(fiber, terms).normalized())
}

/// Gysin pushforward from the ring at `d` to the ring at `d+1`.
///
/// After normalizing, each monomial is `p^K e^s` (resp. `w^K`) with
/// `s <= 1`; the `s = 0` part integrates to 0 and the `s = 1` part to
/// `chi(S^d) * p^K`. In particular the map is identically zero in odd fiber
/// dimension and for every unoriented class.
pub fn pushforward(x: &GradedClass) -> GradedClass {
    let fiber = x.ring();
    let base = fiber.base_ring();
    let chi = sphere_euler_characteristic(fiber.d());
    let mut terms: BTreeMap<Monomial, Coefficient> = BTreeMap::new();
    for (m, c) in x.normalized().terms() {
        if m.exponent(Generator::E) != 1 {
            continue;
        }
        let stripped = m.with_exponent(Generator::E, 0);
        let scaled = c.times_i64(chi);
        if !scaled.is_zero() {
            terms.insert(stripped, scaled);
        }
    }
    GradedClass::from_raw(base, terms).normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffRing;
    use crate::ring::{Flavor, RingSpec, TorsionMode};

    fn so(d: u32) -> RingSpec {
        RingSpec::new(d, Flavor::Oriented, CoeffRing::Integers, TorsionMode::Standard).unwrap()
    }

    fn o(d: u32) -> RingSpec {
        RingSpec::new(d, Flavor::Unoriented, CoeffRing::FieldOfTwo, TorsionMode::Standard).unwrap()
    }

    fn mono(ring: RingSpec, pairs: &[(Generator, u32)]) -> GradedClass {
        GradedClass::from_monomial(ring, Monomial::from_exponents(pairs.iter().copied())).unwrap()
    }

    #[test]
    fn pullback_on_generators() {
        // p1 at d+1 = 3 restricts to p1 at d = 2
        let p1 = mono(so(3), &[(Generator::P(1), 1)]);
        assert_eq!(pullback(&p1).unwrap(), mono(so(2), &[(Generator::P(1), 1)]));

        // the Euler class of the base dies on the sphere bundle (d = 3)
        let e4 = mono(so(4), &[(Generator::E, 1)]);
        assert!(pullback(&e4).unwrap().is_zero());

        // p2 exists at d+1 = 4 but exceeds the rank bound at d = 3
        let p2 = mono(so(4), &[(Generator::P(2), 1)]);
        assert!(pullback(&p2).unwrap().is_zero());

        // w4 dies at d = 3, w3 survives
        let w4 = mono(o(4), &[(Generator::W(4), 1)]);
        assert!(pullback(&w4).unwrap().is_zero());
        let w3 = mono(o(4), &[(Generator::W(3), 1)]);
        assert_eq!(pullback(&w3).unwrap(), mono(o(3), &[(Generator::W(3), 1)]));
    }

    #[test]
    fn pullback_needs_a_fiber_ring() {
        let one = GradedClass::one(so(0));
        assert_eq!(pullback(&one), Err(Error::NoFiberRing));
    }

    #[test]
    fn pushforward_of_the_euler_class() {
        // d = 2: e integrates to 2
        let e = mono(so(2), &[(Generator::E, 1)]);
        assert_eq!(pushforward(&e), GradedClass::one(so(3)).scale_i64(2));

        // d = 3: e integrates to 0
        let e = mono(so(3), &[(Generator::E, 1)]);
        assert!(pushforward(&e).is_zero());

        // d = 2: p1*e integrates to 2*p1
        let p1e = mono(so(2), &[(Generator::P(1), 1), (Generator::E, 1)]);
        assert_eq!(
            pushforward(&p1e),
            mono(so(3), &[(Generator::P(1), 1)]).scale_i64(2)
        );
    }

    #[test]
    fn pushforward_kills_euler_free_classes() {
        for d in 0..=6 {
            assert!(pushforward(&GradedClass::one(so(d))).is_zero());
        }
        // every unoriented monomial integrates to 0
        let w = mono(o(3), &[(Generator::W(1), 2), (Generator::W(3), 1)]);
        assert!(pushforward(&w).is_zero());
    }

    #[test]
    fn pushforward_normalizes_first() {
        // d = 2: e^3 = p1*e integrates to 2*p1
        let e3 = mono(so(2), &[(Generator::E, 3)]);
        assert_eq!(
            pushforward(&e3),
            mono(so(3), &[(Generator::P(1), 1)]).scale_i64(2)
        );
    }

    #[test]
    fn projection_formula_spot_checks() {
        // pushforward(pullback(a) * b) = a * pushforward(b)
        for d in 2..=5u32 {
            let base = so(d + 1);
            let fiber = so(d);
            let a = mono(base, &[(Generator::P(1), 1)]);
            let b = mono(fiber, &[(Generator::P(1), 1), (Generator::E, 1)]);
            let lhs = pushforward(&pullback(&a).unwrap().mul(&b).unwrap());
            let rhs = a.mul(&pushforward(&b)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
