//! Machine- and human-readable reports. Every rational is serialized as an
//! exact `"p/q"` (or integer) string; floats appear only in the numeric
//! analyticity section.

use serde::Serialize;

use crate::algebra::{JetSeries, Rational};
use crate::classify::{GeneratorBasis, LinearClass};
use crate::coordmap::{DenominatorChain, StepInterval};
use crate::normalform::TransformLog;
use crate::pipeline::{RunConfig, Scheme};
use crate::renormalize::{CaseTag, ReducedForm};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub schema: u32,
    pub class: ClassSection,
    pub case: String,
    pub mu: Option<i64>,
    pub nu: Option<i64>,
    pub scheme: String,
    pub order: i64,
    pub basis: String,
    pub normal_form: FormSection,
    pub reduced: FormSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform_log: Option<Vec<LogStep>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analyticity: Option<AnalyticitySection>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSection {
    pub tag: String,
    pub parameters: Vec<Parameter>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Parameter {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormSection {
    /// Coefficients in the class generator basis; empty when none applies.
    pub generator_coefficients: Vec<GeneratorCoefficient>,
    /// The same field in raw monomials.
    pub monomial_coefficients: Vec<MonomialCoefficient>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCoefficient {
    pub label: String,
    pub index: i64,
    pub grade: i64,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonomialCoefficient {
    pub monomial: String,
    pub grade: i64,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LogStep {
    pub step: usize,
    pub stage: String,
    pub grade: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    pub field: Vec<MonomialCoefficient>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyticitySection {
    pub alphas: Vec<String>,
    pub gammas: Vec<String>,
    pub steps: Vec<AnalyticityStep>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyticityStep {
    pub step: usize,
    /// `None` encodes an unbounded side.
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub reference_lower: Option<f64>,
    pub reference_upper: Option<f64>,
    pub has_reference: bool,
}

fn rational_str(r: &Rational) -> String {
    r.to_string()
}

fn form_section(jet: &JetSeries, basis: Option<&GeneratorBasis>) -> FormSection {
    let mut generator_coefficients = Vec::new();
    if let Some(b) = basis {
        let (xl, yl) = b.labels();
        if let Ok(coeffs) = b.decompose_jet(jet) {
            for (k, c) in coeffs {
                use num_traits::Zero;
                if !c.a.is_zero() {
                    generator_coefficients.push(GeneratorCoefficient {
                        label: format!("{xl}_{k}"),
                        index: k,
                        grade: b.grade_of_index(k),
                        value: rational_str(&c.a),
                    });
                }
                if !c.b.is_zero() {
                    generator_coefficients.push(GeneratorCoefficient {
                        label: format!("{yl}_{k}"),
                        index: k,
                        grade: b.grade_of_index(k),
                        value: rational_str(&c.b),
                    });
                }
            }
        }
    }
    let monomial_coefficients = jet
        .grades()
        .flat_map(|g| {
            let part = jet.part(g);
            part.terms()
                .map(|(m, c)| MonomialCoefficient {
                    monomial: m.to_string(),
                    grade: g,
                    value: rational_str(c),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    FormSection {
        generator_coefficients,
        monomial_coefficients,
    }
}

fn class_section(class: &LinearClass) -> ClassSection {
    let mut parameters = Vec::new();
    let mut p = |name: &str, value: String| {
        parameters.push(Parameter {
            name: name.to_string(),
            value,
        })
    };
    match class {
        LinearClass::Zero => {}
        LinearClass::S1 { re, im } => {
            p("re", rational_str(re));
            p("im", rational_str(im));
        }
        LinearClass::S2 { rot } => p("rotation", rational_str(rot)),
        LinearClass::S3 { mu, zero_axis } => {
            p("mu", rational_str(mu));
            p("zero_axis", format!("{zero_axis:?}").to_lowercase());
        }
        LinearClass::S4Same {
            lambda,
            mu,
            resonance,
        } => {
            p("lambda", rational_str(lambda));
            p("mu", rational_str(mu));
            match resonance {
                Some(r) => p(
                    "resonance",
                    format!("power {} into {:?}", r.power, r.target).to_lowercase(),
                ),
                None => p("resonance", "none".to_string()),
            }
        }
        LinearClass::S4Opposite { c, p: pp, q } => {
            p("c", rational_str(c));
            p("p", pp.to_string());
            p("q", q.to_string());
        }
        LinearClass::N1 { mu } => p("mu", rational_str(mu)),
        LinearClass::N2 => {}
    }
    ClassSection {
        tag: class.tag().to_string(),
        parameters,
    }
}

impl ReductionReport {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        class: &LinearClass,
        case: &CaseTag,
        scheme: Scheme,
        cfg: &RunConfig,
        nf: &JetSeries,
        reduced: &ReducedForm,
        log: Option<&TransformLog>,
        analyticity: Option<&(DenominatorChain, Vec<StepInterval>)>,
        basis: Option<&GeneratorBasis>,
        notes: Vec<String>,
    ) -> ReductionReport {
        let basis_desc = match basis {
            Some(b) => {
                let (xl, yl) = b.labels();
                format!("{xl}/{yl}")
            }
            None => "monomial".to_string(),
        };
        let transform_log = log.map(|l| {
            l.steps
                .iter()
                .map(|g| {
                    let coeffs = basis.and_then(|b| b.decompose(&g.field).ok());
                    LogStep {
                        step: g.step_index,
                        stage: g.stage.label(),
                        grade: g.grade,
                        alpha: coeffs.as_ref().map(|c| rational_str(&c.a)),
                        beta: coeffs.as_ref().map(|c| rational_str(&c.b)),
                        field: g
                            .field
                            .terms()
                            .map(|(m, c)| MonomialCoefficient {
                                monomial: m.to_string(),
                                grade: g.grade,
                                value: rational_str(c),
                            })
                            .collect(),
                    }
                })
                .collect()
        });
        let analyticity = analyticity.map(|(chain, steps)| AnalyticitySection {
            alphas: chain.alphas().iter().map(rational_str).collect(),
            gammas: chain.gammas().iter().map(rational_str).collect(),
            steps: steps
                .iter()
                .map(|s| AnalyticityStep {
                    step: s.step,
                    lower: s.lower,
                    upper: s.upper,
                    reference_lower: s.reference.map(|(lo, _)| lo),
                    reference_upper: s.reference.and_then(|(_, hi)| hi),
                    has_reference: s.reference.is_some(),
                })
                .collect(),
        });
        ReductionReport {
            schema: SCHEMA_VERSION,
            class: class_section(class),
            case: case.label(),
            mu: case.mu,
            nu: case.nu,
            scheme: scheme.label().to_string(),
            order: cfg.order,
            basis: basis_desc,
            normal_form: form_section(nf, basis),
            reduced: form_section(&reduced.jet, basis),
            transform_log,
            analyticity,
            notes,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering in generator notation.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        push(&mut out, format!("class: {}", self.class.tag));
        for p in &self.class.parameters {
            push(&mut out, format!("  {} = {}", p.name, p.value));
        }
        push(&mut out, format!("case: {}", self.case));
        if let (Some(mu), Some(nu)) = (self.mu, self.nu) {
            push(&mut out, format!("  mu = {mu}, nu = {nu}"));
        }
        push(
            &mut out,
            format!("scheme: {}  order: {}", self.scheme, self.order),
        );
        let render_form = |out: &mut String, title: &str, f: &FormSection| {
            if !f.generator_coefficients.is_empty() {
                let terms: Vec<String> = f
                    .generator_coefficients
                    .iter()
                    .map(|g| format!("({}) {}", g.value, g.label))
                    .collect();
                push(out, format!("{title}: {}", terms.join(" + ")));
            } else {
                push(out, format!("{title} (monomials):"));
                for m in &f.monomial_coefficients {
                    push(out, format!("  ({}) {}", m.value, m.monomial));
                }
            }
        };
        render_form(&mut out, "normal form", &self.normal_form);
        render_form(&mut out, "reduced form", &self.reduced);
        if let Some(log) = &self.transform_log {
            push(&mut out, "transformation log:".to_string());
            for s in log {
                let coeffs = match (&s.alpha, &s.beta) {
                    (Some(a), Some(b)) => format!("alpha = {a}, beta = {b}"),
                    _ => s
                        .field
                        .iter()
                        .map(|m| format!("({}) {}", m.value, m.monomial))
                        .collect::<Vec<_>>()
                        .join(" + "),
                };
                push(
                    &mut out,
                    format!(
                        "  step {} [{}] grade {}: {}",
                        s.step, s.stage, s.grade, coeffs
                    ),
                );
            }
        }
        if let Some(an) = &self.analyticity {
            push(&mut out, "analyticity of the composed x-chain:".to_string());
            push(&mut out, format!("  gammas: {}", an.gammas.join(", ")));
            for s in &an.steps {
                let fmt_bound = |v: Option<f64>| match v {
                    Some(v) => format!("{v}"),
                    None => "inf".to_string(),
                };
                let mut line = format!(
                    "  step {}: ({}, {})",
                    s.step,
                    fmt_bound(s.lower),
                    fmt_bound(s.upper)
                );
                if s.has_reference {
                    line.push_str(&format!(
                        "   reference: ({}, {})",
                        fmt_bound(s.reference_lower),
                        fmt_bound(s.reference_upper)
                    ));
                }
                push(&mut out, line);
            }
        }
        for n in &self.notes {
            push(&mut out, format!("note: {n}"));
        }
        out
    }
}
