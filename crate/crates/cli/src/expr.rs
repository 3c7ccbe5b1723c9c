//! Parser for the input expression grammar.
//!
//! ```text
//! expr      := ['-'] term (('+' | '-') term)*
//! term      := factor ('*' factor)*
//! factor    := integer | generator ('^' posint)?
//! generator := 'p' posint | 'e' | 'w' posint
//! ```
//!
//! Whitespace is insignificant. Integer literals are arbitrary precision.
//! Generators are validated against the target ring as they are read, so
//! errors carry the byte position of the offending token.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use kappa_core::{Flavor, Generator, GradedClass, Monomial, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position + 1, self.message)
    }
}

/// Parses `text` over `ring` and returns the normalized class.
pub fn parse_expr(ring: &RingSpec, text: &str) -> Result<GradedClass, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring: *ring,
    };
    let terms = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error_here("unexpected trailing input"));
    }
    let class = GradedClass::from_terms(*ring, terms)
        .expect("generators were validated during parsing");
    Ok(class.normalized())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: RingSpec,
}

impl<'a> Parser<'a> {
    fn error_at(&self, position: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            position,
            message: message.into(),
        }
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Vec<(Monomial, kappa_core::Coefficient)>, ParseError> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        let (m, c) = self.term()?;
        terms.push((m, if negate { c.neg() } else { c }));
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let (m, c) = self.term()?;
                    terms.push((m, c.neg()));
                }
                _ => break,
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Monomial, kappa_core::Coefficient), ParseError> {
        let mut coefficient = BigInt::one();
        let mut exponents: Vec<(Generator, u32)> = Vec::new();
        self.factor(&mut coefficient, &mut exponents)?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.factor(&mut coefficient, &mut exponents)?;
            } else {
                break;
            }
        }
        Ok((
            Monomial::from_exponents(exponents),
            self.ring.coeff().from_bigint(coefficient),
        ))
    }

    fn factor(
        &mut self,
        coefficient: &mut BigInt,
        exponents: &mut Vec<(Generator, u32)>,
    ) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                *coefficient *= self.integer();
                Ok(())
            }
            Some(b'p') | Some(b'e') | Some(b'w') => {
                let g = self.generator()?;
                self.skip_ws();
                let exp = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    self.positive_int("exponent")?
                } else {
                    1
                };
                exponents.push((g, exp));
                Ok(())
            }
            Some(c) => Err(self.error_here(format!(
                "expected an integer or a generator, found '{}'",
                c as char
            ))),
            None => Err(self.error_here("expected an integer or a generator")),
        }
    }

    fn generator(&mut self) -> Result<Generator, ParseError> {
        let start = self.pos;
        let letter = self.peek().expect("caller checked the first byte");
        self.pos += 1;
        let flavor = self.ring.flavor();
        match letter {
            b'e' => {
                if flavor != Flavor::Oriented {
                    return Err(self.error_at(start, "generator 'e' needs an oriented ring (flavor SO)"));
                }
                // valid in every oriented ring; normalizes to 0 when d <= 1
                Ok(Generator::E)
            }
            b'p' => {
                let k = self.positive_int("generator index")?;
                let g = Generator::P(k);
                if flavor != Flavor::Oriented {
                    return Err(
                        self.error_at(start, format!("generator 'p{k}' needs an oriented ring (flavor SO)"))
                    );
                }
                if !self.ring.is_valid_generator(g) {
                    return Err(self.error_at(
                        start,
                        format!("unknown generator 'p{k}' in {} (rank bound {})", self.ring, self.ring.pontrjagin_rank()),
                    ));
                }
                Ok(g)
            }
            b'w' => {
                let k = self.positive_int("generator index")?;
                let g = Generator::W(k);
                if flavor != Flavor::Unoriented {
                    return Err(
                        self.error_at(start, format!("generator 'w{k}' needs an unoriented ring (flavor O)"))
                    );
                }
                if !self.ring.is_valid_generator(g) {
                    return Err(self.error_at(
                        start,
                        format!("unknown generator 'w{k}' in {}", self.ring),
                    ));
                }
                Ok(g)
            }
            _ => unreachable!("caller checked the first byte"),
        }
    }

    fn integer(&mut self) -> BigInt {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .expect("digit run parses as an integer")
    }

    fn positive_int(&mut self, what: &str) -> Result<u32, ParseError> {
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Err(self.error_here(format!("expected a {what}")));
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("digits are ascii");
        let value: u32 = digits
            .parse()
            .map_err(|_| self.error_at(start, format!("{what} is too large")))?;
        if value == 0 {
            return Err(self.error_at(start, format!("{what} must be at least 1")));
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kappa_core::{CoeffRing, TorsionMode};

    fn so(d: u32) -> RingSpec {
        RingSpec::new(d, Flavor::Oriented, CoeffRing::Integers, TorsionMode::Standard).unwrap()
    }

    #[test]
    fn parses_monomials() {
        let x = parse_expr(&so(4), "p1^2*e").unwrap();
        assert_eq!(x.to_string(), "p1^2*e");
        // repeated factors multiply
        assert_eq!(
            parse_expr(&so(4), "p1*p1^2").unwrap(),
            parse_expr(&so(4), "p1^3").unwrap()
        );
    }

    #[test]
    fn parses_sums_and_normalizes() {
        // 3*p2 + e^3 at d = 4 normalizes to p2*e + 3*p2
        let x = parse_expr(&so(4), "3*p2 + e^3").unwrap();
        assert_eq!(x.to_string(), "p2*e + 3*p2");
    }

    #[test]
    fn whitespace_is_insignificant() {
        let a = parse_expr(&so(4), " 2 * p1 ^ 2 - e ").unwrap();
        let b = parse_expr(&so(4), "2*p1^2-e").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn leading_minus_parses() {
        let x = parse_expr(&so(4), "-p1 + p1").unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn unknown_generator_is_reported_with_position() {
        let err = parse_expr(&so(4), "p3").unwrap_err();
        assert_eq!(err.position, 0);
        assert!(err.message.contains("p3"),
            "message should name the generator: {}", err.message);

        let err = parse_expr(&so(4), "p1 * w2").unwrap_err();
        assert_eq!(err.position, 5);
        assert!(err.message.contains("unoriented"));
    }

    #[test]
    fn syntax_errors_are_reported() {
        assert!(parse_expr(&so(4), "").is_err());
        assert!(parse_expr(&so(4), "p1 +").is_err());
        assert!(parse_expr(&so(4), "p1^0").is_err());
        assert!(parse_expr(&so(4), "e3").is_err());
        assert!(parse_expr(&so(4), "p1 p2").is_err());
    }

    #[test]
    fn euler_in_low_rank_parses_to_zero() {
        assert!(parse_expr(&so(1), "e").unwrap().is_zero());
    }

    #[test]
    fn mod_two_coefficients_reduce() {
        let o3 = RingSpec::new(3, Flavor::Unoriented, CoeffRing::FieldOfTwo, TorsionMode::Standard)
            .unwrap();
        let x = parse_expr(&o3, "3*w1 + w1").unwrap();
        assert!(x.is_zero());
        let y = parse_expr(&o3, "2*w2 + w3").unwrap();
        assert_eq!(y.to_string(), "w3");
    }
}
