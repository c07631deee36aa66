use std::fmt::Write as _;

use hecke_core::center::{central_character, central_s, is_central, symmetry_check};
use hecke_core::hecke::{
    check_relations, oracle_normal_form, parse_element, parse_named_elements, CrossConvention, GeneratorImages,
};
use hecke_core::isotest::{decide_isomorphism, IsoError, IsoVerdict, ShiftAttempt};
use hecke_core::onedim::{classify_onedim, Branch};
use hecke_core::scalars::parse_in;
use hecke_core::{Field, GeneratorWord, HeckeAlgebra, HeckeElement, HeckeError, Letter, Rational};
use serde_json::{json, Value};

use crate::args::{BranchArg, Command, ConventionArg, GlobalArgs, RelcheckArgs};

/// Exit status for a result that is computed correctly but negative
/// (a failed relation, a non-central element, non-isomorphic algebras).
pub const NEGATIVE: u8 = 1;
pub const INCONCLUSIVE: u8 = 2;
pub const USAGE: u8 = 64;
pub const SOFTWARE: u8 = 70;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute { operation: &'static str, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => USAGE,
            CliError::Compute { .. } => SOFTWARE,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Compute { operation, message } => format!("error in {operation}: {message}"),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn compute(operation: &'static str) -> impl Fn(String) -> CliError {
    move |message| CliError::Compute { operation, message }
}

pub struct Output {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

/// Parsed arguments shared by the subcommands that need an algebra.
struct Setup<F> {
    n: usize,
    like: F,
    q_text: String,
}

impl<F: Field> Setup<F> {
    fn scalar(&self, text: &str, flag: &str) -> Result<F, CliError> {
        parse_in(text, &self.like).map_err(|e| usage(format!("{flag} {text:?}: {e}")))
    }

    fn q(&self) -> Result<F, CliError> {
        self.scalar(&self.q_text, "--q")
    }

    fn algebra(&self) -> Result<HeckeAlgebra<F>, CliError> {
        HeckeAlgebra::new(self.n, self.q()?).map_err(usage)
    }

    fn header(&self) -> Value {
        json!({ "n": self.n, "field": self.like.kind().to_string(), "q": self.q_text })
    }
}

pub fn run<F: Field>(global: &GlobalArgs, command: &Command, like: F) -> Result<Output, CliError> {
    let q_text = match (&global.q, like.indeterminate_like()) {
        (Some(q), _) => q.clone(),
        (None, Some(q)) => q.to_string(),
        (None, None) if matches!(command, Command::Symcheck) => String::new(),
        (None, None) => return Err(usage(format!("--q is required over {}", like.kind()))),
    };
    if global.n == 0 {
        return Err(usage(HeckeError::RankZero));
    }
    let setup = Setup { n: global.n, like, q_text };
    match command {
        Command::Mul { left, right } => mul(&setup, left, right),
        Command::Nf { word } => nf(&setup, word),
        Command::Relcheck(args) => relcheck(&setup, args),
        Command::Center { verify } => center(&setup, *verify),
        Command::Symcheck => symcheck(setup.n),
        Command::Onedim { branch } => onedim(&setup, *branch),
        Command::Iso { p } => iso(&setup, p),
    }
}

fn element_json<F: Field>(h: &HeckeElement<F>) -> Value {
    let terms: Vec<Value> = h
        .terms()
        .map(|(w, lambda, c)| {
            json!({
                "coefficient": c.to_string(),
                "permutation": w.one_line(),
                "reduced_word": w.reduced_word(),
                "exponents": lambda.entries(),
            })
        })
        .collect();
    json!({ "text": h.to_string(), "terms": terms })
}

fn mul<F: Field>(setup: &Setup<F>, left: &str, right: &str) -> Result<Output, CliError> {
    let alg = setup.algebra()?;
    let a = parse_element(left, &alg).map_err(|e| usage(format!("left operand: {e}")))?;
    let b = parse_element(right, &alg).map_err(|e| usage(format!("right operand: {e}")))?;
    let product = a.try_mul(&b).map_err(|e| compute("mul")(e.to_string()))?;
    let mut json = setup.header();
    json["left"] = json!(a.to_string());
    json["right"] = json!(b.to_string());
    json["product"] = element_json(&product);
    Ok(Output::ok(format!("{product}\n"), json))
}

fn nf<F: Field>(setup: &Setup<F>, word: &str) -> Result<Output, CliError> {
    let alg = setup.algebra()?;
    let parsed: GeneratorWord = word.parse().map_err(|e| usage(format!("word {word:?}: {e}")))?;
    parsed.validate(setup.n).map_err(usage)?;
    let normal = oracle_normal_form(&parsed, &alg).map_err(|e| compute("nf")(e.to_string()))?;
    let mut json = setup.header();
    json["word"] = json!(parsed.to_string());
    json["normal_form"] = element_json(&normal);
    Ok(Output::ok(format!("{normal}\n"), json))
}

fn relcheck<F: Field>(setup: &Setup<F>, args: &RelcheckArgs) -> Result<Output, CliError> {
    let alg = setup.algebra()?;
    let target = match &args.p {
        Some(p) => setup.scalar(p, "--p")?,
        None => alg.q().clone(),
    };
    let images = match &args.images {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let named = parse_named_elements(&text, &alg).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            GeneratorImages::from_named(&alg, target, &named).map_err(usage)?
        }
        None => {
            let gens = |letters: Vec<Letter>| letters.into_iter().map(|l| alg.generator(l)).collect::<Result<Vec<_>, _>>();
            let t = gens((1..=setup.n).map(Letter::T).collect()).map_err(usage)?;
            let x = gens((1..=setup.n + 1).map(Letter::X).collect()).map_err(usage)?;
            GeneratorImages::new(&alg, target, t, x).map_err(usage)?
        }
    };
    let convention = match args.convention {
        ConventionArg::Shifted => CrossConvention::SubscriptShift,
        ConventionArg::Printed => CrossConvention::AsPrinted,
    };
    let report = check_relations(&images, convention).map_err(|e| compute("relcheck")(e.to_string()))?;

    let mut notes = Vec::new();
    if args.note_typo {
        notes.push(format!(
            "cross relation taken as {}; reading the subscript i+1 as i plus one gives a relation that fails in H_q \
             (try --convention printed)",
            CrossConvention::SubscriptShift
        ));
    }
    let mut text = String::new();
    for note in &notes {
        writeln!(text, "note: {note}").unwrap();
    }
    let mut rows = Vec::new();
    for outcome in &report.outcomes {
        match &outcome.residual {
            None => writeln!(text, "ok    {}", outcome.name).unwrap(),
            Some(r) => writeln!(text, "FAIL  {}: residual {r}", outcome.name).unwrap(),
        }
        rows.push(json!({
            "name": outcome.name,
            "kind": outcome.kind.to_string(),
            "holds": outcome.holds(),
            "residual": outcome.residual.as_ref().map(|r| r.to_string()),
        }));
    }
    let held = report.outcomes.iter().filter(|o| o.holds()).count();
    writeln!(text, "{held}/{} relations hold", report.outcomes.len()).unwrap();

    let mut json = setup.header();
    json["p"] = json!(images.target_parameter().to_string());
    json["convention"] = json!(convention.to_string());
    json["all_hold"] = json!(report.all_hold());
    json["relations"] = json!(rows);
    json["notes"] = json!(notes);
    Ok(Output { text, json, code: if report.all_hold() { 0 } else { NEGATIVE } })
}

fn center<F: Field>(setup: &Setup<F>, verify: bool) -> Result<Output, CliError> {
    let alg = setup.algebra()?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut all_central = true;
    for j in 1..=setup.n {
        let s = central_s(&alg, j).map_err(|e| compute("center")(e.to_string()))?;
        if !verify {
            writeln!(text, "S_{j} = {s}").unwrap();
            rows.push(json!({ "j": j, "element": s.to_string() }));
            continue;
        }
        let report = is_central(&s).map_err(|e| compute("center")(e.to_string()))?;
        for check in &report.checks {
            let zero = check.commutator.is_zero();
            all_central &= zero;
            if zero {
                writeln!(text, "S_{j} {:<6} commutes", check.generator.to_string()).unwrap();
            } else {
                writeln!(text, "S_{j} {:<6} FAILS: [S_{j}, {}] = {}", check.generator.to_string(), check.generator, check.commutator)
                    .unwrap();
            }
            rows.push(json!({ "j": j, "generator": check.generator.to_string(), "is_zero": zero }));
        }
    }
    Ok(Output { text, json: Value::Array(rows), code: if all_central { 0 } else { NEGATIVE } })
}

fn symcheck(n: usize) -> Result<Output, CliError> {
    let report =
        symmetry_check(n, &Rational::from_integer(1.into())).map_err(|e| compute("symcheck")(e.to_string()))?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for row in &report.rows {
        let status = if row.holds { "holds" } else { "FAILS" };
        writeln!(text, "S_{}(X) = S_{}(X^-1)  {status}", row.i, row.partner).unwrap();
        rows.push(json!({ "i": row.i, "partner": row.partner, "holds": row.holds }));
    }
    let json = json!({ "n": n, "all_hold": report.all_hold(), "rows": rows });
    Ok(Output { text, json, code: if report.all_hold() { 0 } else { NEGATIVE } })
}

fn list<F: Field>(values: &[F]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn strings<F: Field>(values: &[F]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn onedim<F: Field>(setup: &Setup<F>, branch: BranchArg) -> Result<Output, CliError> {
    let q = setup.q()?;
    let branch = match branch {
        BranchArg::Sign => Branch::Sign,
        BranchArg::Index => Branch::Index,
    };
    let classification = classify_onedim(setup.n, &q, branch).map_err(usage)?;
    let family = &classification.family;
    let anchor = format!("z^{} = {}", family.anchor_power, family.anchor_target);
    let mut text = String::new();
    writeln!(text, "branch {branch}: T_i acts by {}", family.epsilon).unwrap();
    let shape: Vec<String> = family
        .exponents
        .iter()
        .enumerate()
        .map(|(k, e)| match e {
            0 => format!("a_{} = z", k + 1),
            1 => format!("a_{} = q z", k + 1),
            e => format!("a_{} = q^{e} z", k + 1),
        })
        .collect();
    writeln!(text, "{}, with {anchor}", shape.join(", ")).unwrap();

    let modules_json = match &classification.modules {
        None => {
            writeln!(text, "no closed-form anchor in {}; the family above is parametric", q.kind()).unwrap();
            Value::Null
        }
        Some(modules) => {
            if modules.is_empty() {
                writeln!(text, "no solutions in {}", q.kind()).unwrap();
            }
            let mut rows = Vec::new();
            for m in modules {
                let character =
                    central_character(m).map_err(|e| compute("onedim")(e.to_string()))?;
                writeln!(text, "a = ({})  character = ({})", list(m.x_scalars()), list(&character.values)).unwrap();
                rows.push(json!({
                    "epsilon": m.epsilon().to_string(),
                    "a": strings(m.x_scalars()),
                    "character": strings(&character.values),
                }));
            }
            Value::Array(rows)
        }
    };
    let mut json = setup.header();
    json["branch"] = json!(branch.to_string());
    json["epsilon"] = json!(family.epsilon.to_string());
    json["exponents"] = json!(family.exponents);
    json["anchor"] = json!({
        "index": family.anchor_index,
        "power": family.anchor_power,
        "target": family.anchor_target.to_string(),
    });
    json["parametric"] = json!(classification.modules.is_none());
    json["modules"] = modules_json;
    Ok(Output::ok(text, json))
}

fn attempt_json<F: Field>(a: &ShiftAttempt<F>) -> Value {
    let mut v = json!({
        "exponent": a.exponent,
        "shift": a.shift.to_string(),
        "branch": a.branch.to_string(),
        "shifted": strings(&a.shifted),
    });
    if let Some(d) = &a.disagreement {
        v["element"] = json!(d.element.to_string());
        v["count_q"] = json!(d.count_q);
        v["count_shifted"] = json!(d.count_shifted);
    }
    v
}

fn iso<F: Field>(setup: &Setup<F>, p_text: &str) -> Result<Output, CliError> {
    let q = setup.q()?;
    let p = setup.scalar(p_text, "--p")?;
    let verdict = decide_isomorphism(&q, &p, setup.n).map_err(|e| match e {
        IsoError::ZeroParameter | IsoError::FieldMismatch { .. } | IsoError::RankTooSmall(_) => usage(e),
        other => compute("iso")(other.to_string()),
    })?;
    let mut json = setup.header();
    json["p"] = json!(p_text);
    json["verdict"] = json!(verdict.name());
    let mut text = String::new();
    let notes: Vec<String>;
    let code = match &verdict {
        IsoVerdict::Isomorphic { direction, witness } => {
            writeln!(text, "verdict: Isomorphic ({direction})").unwrap();
            writeln!(text, "witness: images of the generators of H_p, p = {}, inside H_q", witness.target_parameter())
                .unwrap();
            for (i, t) in witness.t_images().iter().enumerate() {
                writeln!(text, "  t{} = {t}", i + 1).unwrap();
            }
            for (j, x) in witness.x_images().iter().enumerate() {
                writeln!(text, "  x{} = {x}", j + 1).unwrap();
            }
            notes = vec!["the witness satisfies every defining relation of H_p".into()];
            json["direction"] = json!(direction.to_string());
            json["witness"] = json!({
                "p": witness.target_parameter().to_string(),
                "t": witness.t_images().iter().map(|h| h.to_string()).collect::<Vec<_>>(),
                "x": witness.x_images().iter().map(|h| h.to_string()).collect::<Vec<_>>(),
            });
            0
        }
        IsoVerdict::NotIsomorphic(cert) => {
            writeln!(text, "verdict: NotIsomorphic").unwrap();
            writeln!(text, "q progression: {{{}}}", list(&cert.q_progression)).unwrap();
            writeln!(text, "p progression: {{{}}}", list(&cert.p_progression)).unwrap();
            for a in &cert.tried_shifts {
                let d = a.disagreement.as_ref().expect("certificate attempts disagree");
                writeln!(
                    text,
                    "  u = {} (q^{}), {}: {{{}}}; {} occurs {} time(s) vs {}",
                    a.shift,
                    a.exponent,
                    a.branch,
                    list(&a.shifted),
                    d.element,
                    d.count_q,
                    d.count_shifted
                )
                .unwrap();
            }
            for step in &cert.annotations {
                writeln!(text, "  - {step}").unwrap();
            }
            notes = vec!["no shift aligns the central-character progressions".into()];
            json["certificate"] = json!({
                "q_progression": strings(&cert.q_progression),
                "p_progression": strings(&cert.p_progression),
                "tried_shifts": cert.tried_shifts.iter().map(attempt_json).collect::<Vec<_>>(),
                "annotations": cert.annotations,
            });
            NEGATIVE
        }
        IsoVerdict::Inconclusive(hits) => {
            writeln!(text, "verdict: Inconclusive").unwrap();
            for a in hits {
                writeln!(text, "  u = {} (q^{}), {}: {{{}}}", a.shift, a.exponent, a.branch, list(&a.shifted)).unwrap();
            }
            notes = vec![
                "the progressions align although p is neither q nor 1/q".into(),
                "matching central characters is necessary for an isomorphism, not sufficient".into(),
            ];
            json["coincidences"] = json!(hits.iter().map(attempt_json).collect::<Vec<_>>());
            INCONCLUSIVE
        }
    };
    for note in &notes {
        writeln!(text, "note: {note}").unwrap();
    }
    json["notes"] = json!(notes);
    Ok(Output { text, json, code })
}
