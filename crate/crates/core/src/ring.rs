//! Graded-commutative monomial rings of characteristic classes.
//!
//! A [`RingSpec`] fixes the fiber dimension `d`, the flavor, the coefficient
//! ring, and the torsion handling. Oriented rings are generated by the
//! Pontrjagin classes `p_1 .. p_{⌊d/2⌋}` (degree `4k`) together with the
//! Euler class `e` (degree `d`), modulo the parity-dependent relation
//! `e^2 = p_{d/2}` (d even) or `e^2 = 0` (d odd). Unoriented rings are plain
//! polynomial rings on the Stiefel-Whitney classes `w_1 .. w_d` (degree `k`).
//!
//! Every generator in use has even degree except `e` in odd fiber dimension,
//! where `e^2 = 0` anyway, so unsigned commutative multiplication is sound on
//! the modeled subring and no Koszul signs ever appear.
//!
//! Normal forms cap the `e`-exponent at 1 by rewriting `e^2`. In odd fiber
//! dimension [`TorsionMode::Standard`] additionally imposes `2e = 0`:
//! integer coefficients of `e`-terms reduce modulo 2, and rational `e`-terms
//! vanish outright (2 is invertible). [`TorsionMode::StrictPaper`] keeps
//! only the `e^2 = 0` relation.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Zero;

use crate::coeff::{CoeffRing, Coefficient};
use crate::error::Error;

/// Oriented rings use Pontrjagin and Euler classes; unoriented rings use
/// Stiefel-Whitney classes with mod-2 coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Oriented,
    Unoriented,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Oriented => write!(f, "SO"),
            Flavor::Unoriented => write!(f, "O"),
        }
    }
}

/// Whether integral normal forms impose `2e = 0` in odd fiber dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TorsionMode {
    /// Only `e^2 = 0` is imposed for odd `d`.
    StrictPaper,
    /// Additionally `2e = 0` for odd `d` with integer coefficients.
    Standard,
}

impl fmt::Display for TorsionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionMode::StrictPaper => write!(f, "paper"),
            TorsionMode::Standard => write!(f, "standard"),
        }
    }
}

/// Identifier of a polynomial generator.
///
/// The derived order `p_1 < p_2 < .. < e` (resp. `w_1 < .. < w_d`) is the
/// canonical serialization order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// Pontrjagin class `p_k`, degree `4k`.
    P(u32),
    /// Euler class, degree `d`.
    E,
    /// Stiefel-Whitney class `w_k`, degree `k`.
    W(u32),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::P(k) => write!(f, "p{k}"),
            Generator::E => write!(f, "e"),
            Generator::W(k) => write!(f, "w{k}"),
        }
    }
}

/// Descriptor of one graded ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    d: u32,
    flavor: Flavor,
    coeff: CoeffRing,
    torsion: TorsionMode,
}

impl RingSpec {
    /// Builds a ring descriptor, rejecting unoriented rings over anything but
    /// the field of two elements.
    pub fn new(
        d: u32,
        flavor: Flavor,
        coeff: CoeffRing,
        torsion: TorsionMode,
    ) -> Result<RingSpec, Error> {
        if flavor == Flavor::Unoriented && coeff != CoeffRing::FieldOfTwo {
            return Err(Error::InvalidRing(format!(
                "unoriented rings require F2 coefficients, got {coeff}"
            )));
        }
        Ok(RingSpec {
            d,
            flavor,
            coeff,
            torsion,
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn coeff(&self) -> CoeffRing {
        self.coeff
    }

    pub fn torsion_mode(&self) -> TorsionMode {
        self.torsion
    }

    /// Number of Pontrjagin generators, `⌊d/2⌋`.
    pub fn pontrjagin_rank(&self) -> u32 {
        self.d / 2
    }

    /// The generator table in canonical order.
    ///
    /// `e` is listed only where it is nonzero (see
    /// [`RingSpec::euler_exponent_cap`]); in particular for `d <= 1` the
    /// oriented ring has no generators at all and consists of constants.
    pub fn generators(&self) -> Vec<Generator> {
        match self.flavor {
            Flavor::Oriented => {
                let mut gens: Vec<Generator> =
                    (1..=self.pontrjagin_rank()).map(Generator::P).collect();
                if self.euler_exponent_cap() > 0 {
                    gens.push(Generator::E);
                }
                gens
            }
            Flavor::Unoriented => (1..=self.d).map(Generator::W).collect(),
        }
    }

    /// Whether the generator may appear in monomials over this ring.
    ///
    /// `e` is accepted in every oriented ring; for `d <= 1` it normalizes
    /// to 0 rather than being rejected.
    pub fn is_valid_generator(&self, g: Generator) -> bool {
        match (self.flavor, g) {
            (Flavor::Oriented, Generator::P(k)) => k >= 1 && k <= self.pontrjagin_rank(),
            (Flavor::Oriented, Generator::E) => true,
            (Flavor::Unoriented, Generator::W(k)) => k >= 1 && k <= self.d,
            _ => false,
        }
    }

    pub fn generator_degree(&self, g: Generator) -> i64 {
        match g {
            Generator::P(k) => 4 * i64::from(k),
            Generator::E => i64::from(self.d),
            Generator::W(k) => i64::from(k),
        }
    }

    /// The same ring one fiber dimension up.
    pub fn base_ring(&self) -> RingSpec {
        RingSpec {
            d: self.d.checked_add(1).expect("fiber dimension overflow"),
            ..*self
        }
    }

    /// The same ring one fiber dimension down, when it exists.
    pub fn fiber_ring(&self) -> Option<RingSpec> {
        Some(RingSpec {
            d: self.d.checked_sub(1)?,
            ..*self
        })
    }

    /// Largest Euler exponent occurring in a normal-form monomial.
    ///
    /// 1 in general; 0 when the Euler class itself is identified with 0:
    /// for `d <= 1`, and for odd `d` in [`TorsionMode::Standard`] with
    /// rational coefficients, where `2e = 0` forces `e = 0`.
    pub fn euler_exponent_cap(&self) -> u32 {
        match self.flavor {
            Flavor::Unoriented => 0,
            Flavor::Oriented => {
                let rationally_torsion = self.d % 2 == 1
                    && self.torsion == TorsionMode::Standard
                    && self.coeff == CoeffRing::Rationals;
                if self.d <= 1 || rationally_torsion {
                    0
                } else {
                    1
                }
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}; {})", self.flavor, self.d, self.coeff)
    }
}

/// A monomial in the ring generators, stored as its sparse exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    // Invariant: no zero exponents are stored.
    exps: BTreeMap<Generator, u32>,
}

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Monomial {
        Monomial {
            exps: BTreeMap::new(),
        }
    }

    pub fn generator(g: Generator) -> Monomial {
        Monomial::from_exponents([(g, 1)])
    }

    /// Builds a monomial from exponent pairs; duplicates add, zeros drop.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (Generator, u32)>) -> Monomial {
        let mut exps = BTreeMap::new();
        for (g, e) in pairs {
            if e > 0 {
                *exps.entry(g).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn exponent(&self, g: Generator) -> u32 {
        self.exps.get(&g).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (Generator, u32)> + '_ {
        self.exps.iter().map(|(g, e)| (*g, *e))
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Copy with the exponent of `g` set to `e` (0 removes the generator).
    pub fn with_exponent(&self, g: Generator, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        if e == 0 {
            exps.remove(&g);
        } else {
            exps.insert(g, e);
        }
        Monomial { exps }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (g, e) in &other.exps {
            *exps.entry(*g).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn degree(&self, ring: &RingSpec) -> i64 {
        self.exps
            .iter()
            .map(|(g, e)| i64::from(*e) * ring.generator_degree(*g))
            .sum()
    }

    /// Whether the monomial is in normal form for the ring (oriented flavor:
    /// `e`-exponent at most [`RingSpec::euler_exponent_cap`]).
    pub fn is_normal(&self, ring: &RingSpec) -> bool {
        match ring.flavor() {
            Flavor::Unoriented => true,
            Flavor::Oriented => self.exponent(Generator::E) <= ring.euler_exponent_cap(),
        }
    }
}

/// Canonical monomial order: at the earliest generator where two exponent
/// vectors differ, the larger exponent comes first. Within one degree this
/// lists e.g. the degree-8 basis at `d = 4` as `p1^2, p1*e, p2`.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some((ga, ea)), Some((gb, eb))) => match ga.cmp(gb) {
                    Ordering::Less => return Ordering::Less,
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        unequal => return unequal.reverse(),
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A finite formal sum of monomials with nonzero coefficients over one ring.
///
/// The stored monomials need not be in normal form; [`GradedClass::normalized`]
/// produces the canonical representative. Ring-producing operations such as
/// [`GradedClass::mul`] always return normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    ring: RingSpec,
    // Invariants: no zero coefficients, all generators valid for `ring`,
    // all coefficients in `ring.coeff()`.
    terms: BTreeMap<Monomial, Coefficient>,
}

fn add_term(map: &mut BTreeMap<Monomial, Coefficient>, m: Monomial, c: Coefficient) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o
                .get()
                .add(&c)
                .expect("coefficients share a ring by class invariant");
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl GradedClass {
    pub fn zero(ring: RingSpec) -> GradedClass {
        GradedClass {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: RingSpec) -> GradedClass {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::one(), ring.coeff().one());
        GradedClass { ring, terms }
    }

    /// The class of a single monomial with coefficient 1.
    pub fn from_monomial(ring: RingSpec, m: Monomial) -> Result<GradedClass, Error> {
        GradedClass::from_terms(ring, [(m, ring.coeff().one())])
    }

    /// Builds a class from raw terms, validating generators and coefficient
    /// rings; duplicate monomials add and zero coefficients drop. The result
    /// is not normalized.
    pub fn from_terms(
        ring: RingSpec,
        terms: impl IntoIterator<Item = (Monomial, Coefficient)>,
    ) -> Result<GradedClass, Error> {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            for (g, _) in m.exponents() {
                if !ring.is_valid_generator(g) {
                    return Err(Error::UnknownGenerator { generator: g, ring });
                }
            }
            if c.ring() != ring.coeff() {
                return Err(Error::CoeffRingMismatch {
                    left: ring.coeff(),
                    right: c.ring(),
                });
            }
            add_term(&mut map, m, c);
        }
        Ok(GradedClass { ring, terms: map })
    }

    /// Internal constructor for terms already known to satisfy the invariants.
    pub(crate) fn from_raw(ring: RingSpec, terms: BTreeMap<Monomial, Coefficient>) -> GradedClass {
        debug_assert!(terms.values().all(|c| !c.is_zero() && c.ring() == ring.coeff()));
        debug_assert!(terms
            .keys()
            .all(|m| m.exponents().all(|(g, _)| ring.is_valid_generator(g))));
        GradedClass { ring, terms }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.coeff().zero())
    }

    pub fn add(&self, other: &GradedClass) -> Result<GradedClass, Error> {
        self.check_ring(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(GradedClass {
            ring: self.ring,
            terms,
        })
    }

    pub fn neg(&self) -> GradedClass {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.neg()))
            .collect();
        GradedClass {
            ring: self.ring,
            terms,
        }
    }

    pub fn sub(&self, other: &GradedClass) -> Result<GradedClass, Error> {
        self.add(&other.neg())
    }

    /// Multiplies every coefficient by the scalar `c`.
    pub fn scale(&self, c: &Coefficient) -> Result<GradedClass, Error> {
        if c.ring() != self.ring.coeff() {
            return Err(Error::CoeffRingMismatch {
                left: self.ring.coeff(),
                right: c.ring(),
            });
        }
        let mut terms = BTreeMap::new();
        for (m, old) in &self.terms {
            let prod = old.mul(c).expect("rings checked above");
            if !prod.is_zero() {
                terms.insert(m.clone(), prod);
            }
        }
        Ok(GradedClass {
            ring: self.ring,
            terms,
        })
    }

    pub fn scale_i64(&self, n: i64) -> GradedClass {
        self.scale(&self.ring.coeff().from_i64(n))
            .expect("scalar was built in the class ring")
    }

    /// The distributed, normalized product.
    pub fn mul(&self, other: &GradedClass) -> Result<GradedClass, Error> {
        self.check_ring(other)?;
        let mut raw = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca.mul(cb).expect("coefficients share the class ring");
                add_term(&mut raw, ma.mul(mb), c);
            }
        }
        Ok(GradedClass {
            ring: self.ring,
            terms: raw,
        }
        .normalized())
    }

    /// Rewrites every monomial into normal form and canonicalizes torsion
    /// coefficients.
    ///
    /// Oriented flavor: `e^s` becomes `p_{d/2}^{s/2} e^{s mod 2}` for even
    /// `d` and 0 for odd `d` once `s >= 2`; for `d <= 1` any positive
    /// `e`-exponent kills the term. With odd `d` and
    /// [`TorsionMode::Standard`], the relation `2e = 0` additionally reduces
    /// integer coefficients of `e`-terms to their least nonnegative residue
    /// mod 2, and kills `e`-terms outright over the rationals (where `2` is
    /// invertible). Unoriented flavor: identity.
    pub fn normalized(&self) -> GradedClass {
        let mut out: BTreeMap<Monomial, Coefficient> = BTreeMap::new();
        for (m, c) in &self.terms {
            match self.rewrite_monomial(m) {
                Some(mm) => add_term(&mut out, mm, c.clone()),
                None => continue,
            }
        }

        if self.ring.flavor() == Flavor::Oriented
            && self.ring.d() % 2 == 1
            && self.ring.torsion_mode() == TorsionMode::Standard
            && self.ring.coeff() == CoeffRing::Integers
        {
            let euler_terms: Vec<Monomial> = out
                .keys()
                .filter(|m| m.exponent(Generator::E) > 0)
                .cloned()
                .collect();
            for m in euler_terms {
                if let Some(Coefficient::Int(n)) = out.get(&m) {
                    let residue = n.mod_floor(&BigInt::from(2));
                    if residue.is_zero() {
                        out.remove(&m);
                    } else {
                        out.insert(m, Coefficient::Int(residue));
                    }
                }
            }
        }

        GradedClass {
            ring: self.ring,
            terms: out,
        }
    }

    /// Normal form of one monomial; `None` when the relations kill it.
    fn rewrite_monomial(&self, m: &Monomial) -> Option<Monomial> {
        if self.ring.flavor() == Flavor::Unoriented {
            return Some(m.clone());
        }
        let s = m.exponent(Generator::E);
        if s == 0 {
            return Some(m.clone());
        }
        let d = self.ring.d();
        if d % 2 == 1 || d <= 1 {
            if s >= 2 || self.ring.euler_exponent_cap() == 0 {
                // e^2 = 0, or e itself is identified with 0
                return None;
            }
            return Some(m.clone());
        }
        // e^2 = p_{d/2}, d even
        let mut mm = m.with_exponent(Generator::E, s % 2);
        if s >= 2 {
            let half = Generator::P(d / 2);
            mm = mm.with_exponent(half, mm.exponent(half) + s / 2);
        }
        Some(mm)
    }

    /// The common degree of all monomials, or `None` for the zero class and
    /// for mixed-degree sums.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|m| m.degree(&self.ring));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The zero class is homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_ring(&self, other: &GradedClass) -> Result<(), Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        Ok(())
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = c.abs();
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

/// All normal-form monomials of total degree `n`, in canonical order.
pub fn basis_of_degree(ring: &RingSpec, n: u32) -> Vec<Monomial> {
    // only generators of degree <= n can appear, which keeps the table
    // small even for very large fiber dimensions
    let gens: Vec<Generator> = match ring.flavor() {
        Flavor::Oriented => {
            let mut gens: Vec<Generator> = (1..=ring.pontrjagin_rank().min(n / 4))
                .map(Generator::P)
                .collect();
            if ring.euler_exponent_cap() > 0 && ring.d() <= n {
                gens.push(Generator::E);
            }
            gens
        }
        Flavor::Unoriented => (1..=ring.d().min(n)).map(Generator::W).collect(),
    };
    let mut out = Vec::new();
    let mut acc: Vec<(Generator, u32)> = Vec::new();
    enumerate_rec(ring, &gens, 0, n, &mut acc, &mut out);
    out
}

fn enumerate_rec(
    ring: &RingSpec,
    gens: &[Generator],
    idx: usize,
    remaining: u32,
    acc: &mut Vec<(Generator, u32)>,
    out: &mut Vec<Monomial>,
) {
    if idx == gens.len() {
        if remaining == 0 {
            out.push(Monomial::from_exponents(acc.iter().copied()));
        }
        return;
    }
    let g = gens[idx];
    let deg = ring.generator_degree(g) as u32;
    let mut max = remaining / deg;
    if g == Generator::E {
        max = max.min(ring.euler_exponent_cap());
    }
    // descending exponents emit the canonical order directly
    for e in (0..=max).rev() {
        acc.push((g, e));
        enumerate_rec(ring, gens, idx + 1, remaining - e * deg, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(d: u32) -> RingSpec {
        RingSpec::new(d, Flavor::Oriented, CoeffRing::Integers, TorsionMode::Standard).unwrap()
    }

    fn euler_power(d: u32, s: u32) -> GradedClass {
        GradedClass::from_monomial(ring(d), Monomial::from_exponents([(Generator::E, s)])).unwrap()
    }

    #[test]
    fn generator_tables() {
        let r2 = RingSpec::new(2, Flavor::Oriented, CoeffRing::Integers, TorsionMode::StrictPaper)
            .unwrap();
        assert_eq!(r2.generators(), vec![Generator::P(1), Generator::E]);
        assert_eq!(r2.generator_degree(Generator::P(1)), 4);
        assert_eq!(r2.generator_degree(Generator::E), 2);

        let r5 = ring(5);
        assert_eq!(
            r5.generators(),
            vec![Generator::P(1), Generator::P(2), Generator::E]
        );
        assert_eq!(r5.generator_degree(Generator::E), 5);

        let r3 = RingSpec::new(3, Flavor::Unoriented, CoeffRing::FieldOfTwo, TorsionMode::Standard)
            .unwrap();
        assert_eq!(
            r3.generators(),
            vec![Generator::W(1), Generator::W(2), Generator::W(3)]
        );

        // constants only below rank 2
        assert!(ring(0).generators().is_empty());
        assert!(ring(1).generators().is_empty());
    }

    #[test]
    fn unoriented_needs_mod_two_coefficients() {
        let err = RingSpec::new(3, Flavor::Unoriented, CoeffRing::Integers, TorsionMode::Standard);
        assert!(matches!(err, Err(Error::InvalidRing(_))));
    }

    #[test]
    fn euler_square_rewrites() {
        // d = 4: e^3 -> p2*e
        let expected = GradedClass::from_monomial(
            ring(4),
            Monomial::from_exponents([(Generator::P(2), 1), (Generator::E, 1)]),
        )
        .unwrap();
        assert_eq!(euler_power(4, 3).normalized(), expected);

        // d = 3: e^2 -> 0
        assert!(euler_power(3, 2).normalized().is_zero());

        // d = 2: e^4 -> p1^2
        let expected = GradedClass::from_monomial(
            ring(2),
            Monomial::from_exponents([(Generator::P(1), 2)]),
        )
        .unwrap();
        assert_eq!(euler_power(2, 4).normalized(), expected);

        // d = 5: p1*p2 is already normal
        let x = GradedClass::from_monomial(
            ring(5),
            Monomial::from_exponents([(Generator::P(1), 1), (Generator::P(2), 1)]),
        )
        .unwrap();
        assert_eq!(x.normalized(), x);
    }

    #[test]
    fn euler_vanishes_in_low_rank() {
        assert!(euler_power(0, 1).normalized().is_zero());
        assert!(euler_power(1, 1).normalized().is_zero());
    }

    #[test]
    fn multiplication_applies_relations() {
        // d = 2: e*e = p1
        let e = euler_power(2, 1);
        let p1 = GradedClass::from_monomial(
            ring(2),
            Monomial::from_exponents([(Generator::P(1), 1)]),
        )
        .unwrap();
        assert_eq!(e.mul(&e).unwrap(), p1);

        // 1*x = x
        let x = euler_power(4, 1);
        assert_eq!(GradedClass::one(ring(4)).mul(&x).unwrap(), x);
    }

    #[test]
    fn torsion_standard_kills_even_euler_coefficients() {
        // d = 3, standard, Z: 2*(p1*e) = 0, forced by 2e = 0.
        let p1e = GradedClass::from_monomial(
            ring(3),
            Monomial::from_exponents([(Generator::P(1), 1), (Generator::E, 1)]),
        )
        .unwrap();
        assert!(p1e.scale_i64(2).normalized().is_zero());
        // independent route: reduce the coefficient mod 2 by hand
        assert_eq!(2 % 2, 0);

        // strict-paper keeps the coefficient
        let strict =
            RingSpec::new(3, Flavor::Oriented, CoeffRing::Integers, TorsionMode::StrictPaper)
                .unwrap();
        let p1e = GradedClass::from_monomial(
            strict,
            Monomial::from_exponents([(Generator::P(1), 1), (Generator::E, 1)]),
        )
        .unwrap();
        let doubled = p1e.scale_i64(2).normalized();
        assert!(!doubled.is_zero());
        assert_eq!(doubled.coefficient(&Monomial::from_exponents([
            (Generator::P(1), 1),
            (Generator::E, 1),
        ])), CoeffRing::Integers.from_i64(2));
    }

    #[test]
    fn rational_torsion_classes_die_in_standard_mode() {
        // 2e = 0 with 2 invertible forces e = 0
        let q3 = RingSpec::new(3, Flavor::Oriented, CoeffRing::Rationals, TorsionMode::Standard)
            .unwrap();
        let e = GradedClass::from_monomial(q3, Monomial::generator(Generator::E)).unwrap();
        assert!(e.normalized().is_zero());
        assert_eq!(q3.euler_exponent_cap(), 0);

        // strict-paper keeps the exterior generator
        let strict =
            RingSpec::new(3, Flavor::Oriented, CoeffRing::Rationals, TorsionMode::StrictPaper)
                .unwrap();
        let e = GradedClass::from_monomial(strict, Monomial::generator(Generator::E)).unwrap();
        assert!(!e.normalized().is_zero());
    }

    #[test]
    fn basis_enumeration() {
        // d = 2, n = 4: just p1
        assert_eq!(
            basis_of_degree(&ring(2), 4),
            vec![Monomial::from_exponents([(Generator::P(1), 1)])]
        );

        // n = 0: the empty monomial
        assert_eq!(basis_of_degree(&ring(4), 0), vec![Monomial::one()]);

        // d = 4, n = 8: p1^2, p1*e, p2 in canonical order
        assert_eq!(
            basis_of_degree(&ring(4), 8),
            vec![
                Monomial::from_exponents([(Generator::P(1), 2)]),
                Monomial::from_exponents([(Generator::P(1), 1), (Generator::E, 1)]),
                Monomial::from_exponents([(Generator::P(2), 1)]),
            ]
        );
    }

    #[test]
    fn basis_is_sorted_and_normal() {
        for d in 0..=6 {
            let r = ring(d);
            for n in 0..=20 {
                let basis = basis_of_degree(&r, n);
                assert!(basis.windows(2).all(|w| w[0] < w[1]));
                for m in &basis {
                    assert!(m.is_normal(&r));
                    assert_eq!(m.degree(&r), i64::from(n));
                }
            }
        }
    }

    #[test]
    fn unknown_generators_are_rejected() {
        let err = GradedClass::from_monomial(ring(4), Monomial::generator(Generator::P(3)));
        assert!(matches!(err, Err(Error::UnknownGenerator { .. })));
        let err = GradedClass::from_monomial(ring(4), Monomial::generator(Generator::W(1)));
        assert!(matches!(err, Err(Error::UnknownGenerator { .. })));
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let x = GradedClass::one(ring(2));
        let y = GradedClass::one(ring(3));
        assert!(matches!(x.mul(&y), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn display_round_trip_shapes() {
        let r = ring(4);
        let x = GradedClass::from_terms(
            r,
            [
                (
                    Monomial::from_exponents([(Generator::P(1), 2), (Generator::E, 1)]),
                    CoeffRing::Integers.from_i64(1),
                ),
                (Monomial::one(), CoeffRing::Integers.from_i64(-3)),
            ],
        )
        .unwrap();
        assert_eq!(x.to_string(), "p1^2*e - 3");
        assert_eq!(GradedClass::zero(r).to_string(), "0");
    }
}
