//! Universal tangential classes, their boundary values, and the vanishing
//! decision.
//!
//! A monomial `X` in the generators at fiber dimension `d` determines a
//! stable characteristic class of bundles of closed `d`-manifolds, presented
//! here by its integrand `X` (the class evaluates on a bundle as the fiber
//! integral of `X` of the vertical tangent bundle). For `d = 2` these are
//! the kappa classes, `kappa_i` having integrand `e^{i+1}`.
//!
//! When a bundle of `d`-manifolds bounds fiberwise, its classifying map
//! factors through the base side of the sphere-bundle fibration, so the
//! class pulled back from the boundary is reached through [`delta_star`],
//! which is the Gysin pushforward on integrands. [`vanishes_on_boundary`]
//! turns that computation into a verdict: either the restriction is
//! guaranteed to vanish (with the reason), or the factorization argument is
//! inconclusive and the nonzero boundary value is reported as a witness.
//!
//! Zero-testing of boundary values happens on their representatives in the
//! ring at `d+1`; no further identification is applied on the stable side.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::coeff::{CoeffRing, Coefficient};
use crate::error::Error;
use crate::gysin;
use crate::ring::{Flavor, Generator, GradedClass, Monomial, RingSpec, TorsionMode};

/// A universal tangential class, presented by its homogeneous integrand in
/// normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalClass {
    x: GradedClass,
}

impl UniversalClass {
    /// Fails unless the (normalized) integrand is homogeneous.
    pub fn new(x: &GradedClass) -> Result<UniversalClass, Error> {
        let x = x.normalized();
        if !x.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(UniversalClass { x })
    }

    pub fn integrand(&self) -> &GradedClass {
        &self.x
    }

    pub fn ring(&self) -> RingSpec {
        self.x.ring()
    }

    /// Degree of the class itself: `deg X - d`. `None` for the zero class.
    pub fn degree(&self) -> Option<i64> {
        Some(self.x.homogeneous_degree()? - i64::from(self.ring().d()))
    }
}

/// The i-th kappa class: integrand `e^{i+1}` at fiber dimension 2, with
/// integer coefficients. Its degree is `2i`.
pub fn kappa(i: u32) -> Result<UniversalClass, Error> {
    let exponent = i.checked_add(1).ok_or(Error::IndexOutOfRange(i))?;
    if i < 1 {
        return Err(Error::IndexOutOfRange(i));
    }
    let ring = RingSpec::new(
        2,
        Flavor::Oriented,
        CoeffRing::Integers,
        TorsionMode::Standard,
    )?;
    let x = GradedClass::from_monomial(ring, Monomial::from_exponents([(Generator::E, exponent)]))?;
    UniversalClass::new(&x)
}

/// A stable class on the base side of the fibration, identified by its
/// representative in the ring at `d+1`. Equality and zero-testing are
/// performed on the representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveClass {
    y: GradedClass,
}

impl PrimitiveClass {
    pub fn new(y: &GradedClass) -> PrimitiveClass {
        PrimitiveClass { y: y.normalized() }
    }

    pub fn representative(&self) -> &GradedClass {
        &self.y
    }

    pub fn base_ring(&self) -> RingSpec {
        self.y.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.y.is_zero()
    }

    pub fn degree(&self) -> Option<i64> {
        self.y.homogeneous_degree()
    }

    pub fn scale_i64(&self, n: i64) -> PrimitiveClass {
        PrimitiveClass::new(&self.y.scale_i64(n))
    }
}

/// The i-th generator of the stable cohomology of the base side at `d+1 = 3`:
/// representative `p1^i`, degree `4i`.
pub fn rho(i: u32) -> Result<PrimitiveClass, Error> {
    if i < 1 {
        return Err(Error::IndexOutOfRange(i));
    }
    let ring = RingSpec::new(
        3,
        Flavor::Oriented,
        CoeffRing::Integers,
        TorsionMode::Standard,
    )?;
    let y = GradedClass::from_monomial(ring, Monomial::from_exponents([(Generator::P(1), i)]))?;
    Ok(PrimitiveClass::new(&y))
}

/// Boundary value of a universal class: the Gysin pushforward of its
/// integrand, viewed on the base side at `d+1`.
pub fn delta_star(c: &UniversalClass) -> PrimitiveClass {
    PrimitiveClass::new(&gysin::pushforward(c.integrand()))
}

/// Why a restriction to the boundary is guaranteed to vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VanishingReason {
    /// The bounding manifold has even dimension.
    EvenDimW,
    /// The integrand is a sum of monomials in Pontrjagin classes only.
    PontrjaginMonomial,
    /// Mod-2 coefficients: every boundary value is zero.
    ModTwo,
}

impl fmt::Display for VanishingReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VanishingReason::EvenDimW => write!(f, "even-dim-W"),
            VanishingReason::PontrjaginMonomial => write!(f, "pontrjagin-monomial"),
            VanishingReason::ModTwo => write!(f, "mod-two"),
        }
    }
}

/// Outcome of the boundary-vanishing decision.
///
/// `NotGuaranteed` does not claim that the restriction is nonzero on any
/// particular bundle; it records that the factorization argument yields no
/// vanishing, and carries the nonzero boundary value as the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    GuaranteedZero(VanishingReason),
    NotGuaranteed { witness: PrimitiveClass },
}

impl Verdict {
    pub fn is_guaranteed_zero(&self) -> bool {
        matches!(self, Verdict::GuaranteedZero(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::GuaranteedZero(reason) => write!(f, "guaranteed-zero: {reason}"),
            Verdict::NotGuaranteed { witness } => write!(f, "not-guaranteed: witness {witness}"),
        }
    }
}

/// Decides whether the universal class of `x` is guaranteed to vanish when
/// pulled back along the restriction to the boundary of a `dim_w`-manifold.
///
/// `x` must be homogeneous and live at fiber dimension `d = dim_w - 1`. The
/// verdict agrees with the boundary value: it is `GuaranteedZero` exactly
/// when `delta_star` of the class is zero.
pub fn vanishes_on_boundary(dim_w: u32, x: &GradedClass) -> Result<Verdict, Error> {
    if dim_w < 1 {
        return Err(Error::InvalidBoundingDimension { dim_w });
    }
    let d = dim_w - 1;
    if x.ring().d() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: x.ring().d(),
        });
    }
    let class = UniversalClass::new(x)?;

    // Mod-2 coefficients (in particular every unoriented ring): the boundary
    // map multiplies by chi(S^d), which is even, so it is identically zero.
    if x.ring().coeff() == CoeffRing::FieldOfTwo {
        return Ok(Verdict::GuaranteedZero(VanishingReason::ModTwo));
    }

    if dim_w.is_multiple_of(2) {
        return Ok(Verdict::GuaranteedZero(VanishingReason::EvenDimW));
    }

    // dim W odd, so d is even and the Euler relation turns even Euler powers
    // into Pontrjagin classes; only a leftover odd power obstructs.
    let euler_free = class
        .integrand()
        .terms()
        .all(|(m, _)| m.exponent(Generator::E) == 0);
    if euler_free {
        return Ok(Verdict::GuaranteedZero(VanishingReason::PontrjaginMonomial));
    }

    let witness = delta_star(&class);
    debug_assert!(!witness.is_zero(), "an e-term must push forward nontrivially");
    Ok(Verdict::NotGuaranteed { witness })
}

/// Positive content common to all coefficients, with the rescaled class.
/// `None` when the ring is F2 or no factor larger than 1 exists.
fn factor_content(y: &GradedClass) -> Option<(Coefficient, GradedClass)> {
    let ring = y.ring();
    match ring.coeff() {
        CoeffRing::FieldOfTwo => None,
        CoeffRing::Integers => {
            let mut g = BigInt::ZERO;
            for (_, c) in y.terms() {
                if let Coefficient::Int(n) = c {
                    g = g.gcd(n);
                }
            }
            if g <= BigInt::one() {
                return None;
            }
            let inner = GradedClass::from_terms(
                ring,
                y.terms().map(|(m, c)| {
                    let Coefficient::Int(n) = c else { unreachable!() };
                    (m.clone(), Coefficient::Int(n / &g))
                }),
            )
            .expect("rescaled terms stay valid");
            Some((Coefficient::Int(g), inner))
        }
        CoeffRing::Rationals => {
            let mut numer = BigInt::ZERO;
            let mut denom = BigInt::one();
            for (_, c) in y.terms() {
                if let Coefficient::Rat(q) = c {
                    numer = numer.gcd(q.numer());
                    denom = denom.lcm(q.denom());
                }
            }
            let g = BigRational::new(numer, denom);
            if g <= BigRational::one() || !g.is_positive() {
                return None;
            }
            let inner = GradedClass::from_terms(
                ring,
                y.terms().map(|(m, c)| {
                    let Coefficient::Rat(q) = c else { unreachable!() };
                    (m.clone(), Coefficient::Rat(q / &g))
                }),
            )
            .expect("rescaled terms stay valid");
            Some((Coefficient::Rat(g), inner))
        }
    }
}

/// Renders as the image of a ring class on the stable side, factoring out
/// the coefficient content: `2*sigma(p1)`, `sigma(p1^2 + p2)`, `0`.
impl fmt::Display for PrimitiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "0");
        }
        match factor_content(&self.y) {
            Some((content, inner)) => write!(f, "{content}*sigma({inner})"),
            None => write!(f, "sigma({})", self.y),
        }
    }
}
