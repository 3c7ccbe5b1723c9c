//! Degree-bounded enumeration of universal classes with their boundary data.
//!
//! Tables are indexed by the degree of the class itself (`deg X - d`), which
//! is how the classes are graded downstream; the offset is applied
//! internally. Rows with class degree `<= 0` are legal inputs and are kept,
//! flagged as degenerate by [`TableRow::is_degenerate`].

use crate::error::Error;
use crate::ring::{basis_of_degree, GradedClass, Monomial, RingSpec};
use crate::universal::{delta_star, kappa, vanishes_on_boundary, PrimitiveClass, UniversalClass, Verdict};

/// One enumerated integrand with its boundary value and verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub monomial: Monomial,
    pub class_degree: i64,
    pub delta_value: PrimitiveClass,
    pub verdict: Verdict,
}

impl TableRow {
    pub fn is_degenerate(&self) -> bool {
        self.class_degree <= 0
    }
}

fn row_for(ring: &RingSpec, monomial: Monomial, class_degree: i64) -> TableRow {
    let x = GradedClass::from_monomial(*ring, monomial.clone())
        .expect("enumerated monomials are valid for their ring");
    let class = UniversalClass::new(&x).expect("a monomial is homogeneous");
    let delta_value = delta_star(&class);
    let verdict =
        vanishes_on_boundary(ring.d() + 1, &x).expect("dimensions agree by construction");
    TableRow {
        monomial,
        class_degree,
        delta_value,
        verdict,
    }
}

/// One row per normal-form monomial `X` with `deg X - d <= max_class_degree`,
/// in canonical order. Negative bounds below `-d` yield an empty table.
pub fn enumerate_table(ring: &RingSpec, max_class_degree: i64) -> Vec<TableRow> {
    let d = i64::from(ring.d());
    let mut rows = Vec::new();
    for class_degree in -d..=max_class_degree {
        let n = (class_degree + d) as u32;
        for monomial in basis_of_degree(ring, n) {
            rows.push(row_for(ring, monomial, class_degree));
        }
    }
    rows
}

/// Rows for `kappa_1 .. kappa_max_i`, with verdicts for a 3-dimensional
/// bounding manifold.
pub fn kappa_table(max_i: u32) -> Result<Vec<TableRow>, Error> {
    if max_i < 1 {
        return Err(Error::IndexOutOfRange(max_i));
    }
    let mut rows = Vec::with_capacity(max_i as usize);
    for i in 1..=max_i {
        let class = kappa(i)?;
        let x = class.integrand();
        let monomial = x
            .terms()
            .next()
            .expect("a normalized Euler power is a single monomial")
            .0
            .clone();
        let delta_value = delta_star(&class);
        let verdict = vanishes_on_boundary(3, x)?;
        rows.push(TableRow {
            monomial,
            class_degree: class.degree().expect("kappa integrands are nonzero"),
            delta_value,
            verdict,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffRing;
    use crate::ring::{Flavor, TorsionMode};
    use crate::universal::VanishingReason;

    fn so(d: u32) -> RingSpec {
        RingSpec::new(d, Flavor::Oriented, CoeffRing::Integers, TorsionMode::Standard).unwrap()
    }

    #[test]
    fn surface_table_matches_the_kappa_dictionary() {
        let rows = enumerate_table(&so(2), 4);
        let monomials: Vec<String> = rows.iter().map(|r| r.monomial.to_string()).collect();
        assert_eq!(monomials, vec!["1", "e", "p1", "p1*e"]);

        // X = p1 is the kappa_1 integrand: degree 2, boundary value 0
        let p1 = &rows[2];
        assert_eq!(p1.class_degree, 2);
        assert!(p1.delta_value.is_zero());
        assert!(p1.verdict.is_guaranteed_zero());

        // X = p1*e is the kappa_2 integrand: degree 4, boundary value 2*sigma(p1)
        let p1e = &rows[3];
        assert_eq!(p1e.class_degree, 4);
        assert_eq!(p1e.delta_value.to_string(), "2*sigma(p1)");
        assert!(!p1e.verdict.is_guaranteed_zero());
    }

    #[test]
    fn bound_below_minus_d_is_empty() {
        assert!(enumerate_table(&so(3), -4).is_empty());
        assert_eq!(enumerate_table(&so(3), -3).len(), 1);
    }

    #[test]
    fn four_dimensional_table() {
        let rows = enumerate_table(&so(4), 4);
        let find = |name: &str| {
            rows.iter()
                .find(|r| r.monomial.to_string() == name)
                .unwrap_or_else(|| panic!("row {name} missing"))
        };
        assert!(find("p1").delta_value.is_zero());
        let e = find("e");
        assert_eq!(e.delta_value.to_string(), "2*sigma(1)");
        assert_eq!(e.delta_value.degree(), Some(0));
        assert_eq!(find("p1*e").delta_value.to_string(), "2*sigma(p1)");
    }

    #[test]
    fn rows_are_internally_consistent() {
        for d in 0..=5 {
            for row in enumerate_table(&so(d), 12) {
                assert_eq!(row.verdict.is_guaranteed_zero(), row.delta_value.is_zero());
            }
        }
    }

    #[test]
    fn kappa_table_parity() {
        let rows = kappa_table(100).unwrap();
        assert_eq!(rows.len(), 100);
        for (idx, row) in rows.iter().enumerate() {
            let i = idx as u32 + 1;
            assert_eq!(row.class_degree, i64::from(2 * i));
            assert_eq!(row.verdict.is_guaranteed_zero(), i % 2 == 1);
            assert_eq!(row.delta_value.is_zero(), i % 2 == 1);
        }

        // the first three rows in detail
        assert_eq!(rows[0].monomial.to_string(), "p1");
        assert!(rows[0].verdict.is_guaranteed_zero());
        assert_eq!(rows[1].delta_value.to_string(), "2*sigma(p1)");
        assert!(matches!(
            rows[2].verdict,
            Verdict::GuaranteedZero(VanishingReason::PontrjaginMonomial)
        ));

        assert_eq!(kappa_table(0), Err(Error::IndexOutOfRange(0)));
    }

    #[test]
    fn tables_are_deterministic() {
        let ring = so(4);
        assert_eq!(enumerate_table(&ring, 10), enumerate_table(&ring, 10));
        assert_eq!(kappa_table(30).unwrap(), kappa_table(30).unwrap());
    }

    #[test]
    fn degenerate_rows_are_flagged() {
        let rows = enumerate_table(&so(2), 1);
        for row in rows {
            assert_eq!(row.is_degenerate(), row.class_degree <= 0);
        }
        let unit_row = &enumerate_table(&so(2), -2)[0];
        assert_eq!(unit_row.monomial, Monomial::one());
        assert!(unit_row.is_degenerate());
        assert!(unit_row.delta_value.is_zero());
    }
}
