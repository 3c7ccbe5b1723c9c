//! JSON rendering.
//!
//! Classes serialize as
//! `{"coeff":"Z","flavor":"SO","d":4,"terms":[{"coef":"2","exps":{"p1":1}}]}`
//! with coefficients as decimal strings (arbitrary precision survives), and
//! exponent maps listing the nonzero exponents in generator order. Stable
//! classes are wrapped as `{"sigma_star": <class>}`; verdicts carry either a
//! reason or a witness. Output is compact and byte-deterministic.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use kappa_core::{GradedClass, Monomial, PrimitiveClass, TableRow, Verdict};

struct ExpMap(Vec<(String, u32)>);

impl Serialize for ExpMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (generator, exponent) in &self.0 {
            map.serialize_entry(generator, exponent)?;
        }
        map.end()
    }
}

fn exp_map(m: &Monomial) -> ExpMap {
    ExpMap(m.exponents().map(|(g, e)| (g.to_string(), e)).collect())
}

#[derive(Serialize)]
struct TermDto {
    coef: String,
    exps: ExpMap,
}

#[derive(Serialize)]
struct ClassDto {
    coeff: String,
    flavor: String,
    d: u32,
    terms: Vec<TermDto>,
}

fn class_dto(x: &GradedClass) -> ClassDto {
    ClassDto {
        coeff: x.ring().coeff().to_string(),
        flavor: x.ring().flavor().to_string(),
        d: x.ring().d(),
        terms: x
            .terms()
            .map(|(m, c)| TermDto {
                coef: c.to_string(),
                exps: exp_map(m),
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct SigmaDto {
    sigma_star: ClassDto,
}

fn sigma_dto(p: &PrimitiveClass) -> SigmaDto {
    SigmaDto {
        sigma_star: class_dto(p.representative()),
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum VerdictDto {
    GuaranteedZero {
        outcome: &'static str,
        reason: String,
    },
    NotGuaranteed {
        outcome: &'static str,
        witness: SigmaDto,
    },
}

fn verdict_dto(v: &Verdict) -> VerdictDto {
    match v {
        Verdict::GuaranteedZero(reason) => VerdictDto::GuaranteedZero {
            outcome: "guaranteed-zero",
            reason: reason.to_string(),
        },
        Verdict::NotGuaranteed { witness } => VerdictDto::NotGuaranteed {
            outcome: "not-guaranteed",
            witness: sigma_dto(witness),
        },
    }
}

#[derive(Serialize)]
struct TableRowDto {
    x: ExpMap,
    class_degree: i64,
    degenerate: bool,
    delta: SigmaDto,
    verdict: VerdictDto,
}

fn table_row_dto(row: &TableRow) -> TableRowDto {
    TableRowDto {
        x: exp_map(&row.monomial),
        class_degree: row.class_degree,
        degenerate: row.is_degenerate(),
        delta: sigma_dto(&row.delta_value),
        verdict: verdict_dto(&row.verdict),
    }
}

#[derive(Serialize)]
struct KappaRowDto {
    i: u32,
    class_degree: i64,
    x: ExpMap,
    delta: SigmaDto,
    verdict: VerdictDto,
}

fn to_line<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("DTOs serialize without error");
    out.push('\n');
    out
}

pub fn class(x: &GradedClass) -> String {
    to_line(&class_dto(x))
}

pub fn primitive(p: &PrimitiveClass) -> String {
    to_line(&sigma_dto(p))
}

pub fn verdict(v: &Verdict) -> String {
    to_line(&verdict_dto(v))
}

pub fn table(rows: &[TableRow]) -> String {
    to_line(&rows.iter().map(table_row_dto).collect::<Vec<_>>())
}

pub fn kappa_table(rows: &[TableRow]) -> String {
    let dtos: Vec<KappaRowDto> = rows
        .iter()
        .enumerate()
        .map(|(idx, row)| KappaRowDto {
            i: idx as u32 + 1,
            class_degree: row.class_degree,
            x: exp_map(&row.monomial),
            delta: sigma_dto(&row.delta_value),
            verdict: verdict_dto(&row.verdict),
        })
        .collect();
    to_line(&dtos)
}
