use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use cartan_ds::criterion::{compact_cartan_verdict, extended_stabilizer, ExtendedWeylGroup, VerdictDocument};
use cartan_ds::exponents::{l2_check, DualChamber, FormalDSDatum};
use cartan_ds::realform::{restricted_roots, verify_exact_sequence, CatalogDocument, RealForm};
use cartan_ds::rootdata::{RootSystem, Weight};
use cartan_ds::scalar::parse_vector;
use cartan_ds::translation::{
    check_lambda_mu_comp, strong_regularization, translate_line, verify_result, TranslationConfig,
};
use cartan_ds::{Rational, Scalar};

use crate::error::{CliError, Context as _};
use crate::report::Report;
use crate::source::{self, Source};

/// Global options shared by every command.
pub struct Context {
    pub catalog: Option<PathBuf>,
    pub cap: usize,
}

fn canon(v: &[Rational]) -> Vec<String> {
    v.iter().map(Scalar::to_canonical).collect()
}

fn parse_list(v: &[String]) -> Result<Vec<Rational>, CliError> {
    v.iter().map(|s| Rational::parse_canonical(s)).collect::<Result<_, _>>().context(String::new)
}

fn finish(command: &str, inputs: &impl Serialize, results: Value, certificates: Value, start: Instant) -> Report {
    Report {
        command: command.to_string(),
        inputs: serde_json::to_value(inputs).expect("inputs serialize"),
        results,
        certificates,
        timing_ms: start.elapsed().as_millis() as u64,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogInput {
    pub filter: Option<String>,
    pub catalog: Option<PathBuf>,
}

pub fn catalog(ctx: &Context, filter: Option<&str>, export: Option<&Path>) -> Result<Report, CliError> {
    let input = CatalogInput { filter: filter.map(str::to_string), catalog: ctx.catalog.clone() };
    let (report, forms) = run_catalog(&input)?;
    if let Some(dir) = export {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        for form in &forms {
            let doc = CatalogDocument::from_form(form).context(|| form.id.clone())?;
            let path = dir.join(format!("{}.json", file_stem(&form.id)));
            let text = serde_json::to_string_pretty(&doc).expect("documents serialize");
            fs::write(&path, text + "\n").map_err(|e| CliError::io(&path, e))?;
        }
        eprintln!("wrote {} documents to {}", forms.len(), dir.display());
    }
    Ok(report)
}

/// `su(2,1)` -> `su_2_1`.
fn file_stem(id: &str) -> String {
    let mapped: String = id.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    mapped.trim_matches('_').replace("__", "_")
}

#[derive(Serialize)]
struct CatalogRow {
    id: String,
    cartan_type: String,
    restricted_type: String,
    restricted_roots: usize,
    verdict: bool,
    oracle: Option<bool>,
    consistent: Option<bool>,
}

fn run_catalog(input: &CatalogInput) -> Result<(Report, Vec<RealForm<Rational>>), CliError> {
    let start = Instant::now();
    let pattern = input
        .filter
        .as_deref()
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| CliError::Usage(format!("bad filter: {e}")))?;
    let sources: Vec<Source> = source::catalog(input.catalog.as_deref())?
        .into_iter()
        .filter(|s| pattern.as_ref().is_none_or(|p| p.matches(&s.label)))
        .collect();
    let mut built: Vec<(CatalogRow, RealForm<Rational>)> = sources
        .par_iter()
        .map(|s| {
            let form = source::build(s)?;
            let rrs = restricted_roots(&form.root_system, &form.involution);
            let v = compact_cartan_verdict(&form.root_system, &form.involution, form.compact_rank);
            let row = CatalogRow {
                id: form.id.clone(),
                cartan_type: form.root_system.cartan_type().to_string(),
                restricted_type: rrs.restricted_type(),
                restricted_roots: rrs.roots().len(),
                verdict: v.compact_cartan,
                oracle: v.oracle_compact_rank_equal,
                consistent: v.consistent,
            };
            Ok((row, form))
        })
        .collect::<Result<_, CliError>>()?;
    built.sort_by(|a, b| a.0.id.cmp(&b.0.id));
    let consistent = built.iter().all(|(r, _)| r.consistent != Some(false));
    let (rows, forms): (Vec<CatalogRow>, Vec<RealForm<Rational>>) = built.into_iter().unzip();
    let report = finish("catalog", input, json!({ "rows": rows }), json!({ "consistent": consistent }), start);
    Ok((report, forms))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FormInput {
    pub form: String,
    pub catalog: Option<PathBuf>,
}

fn form_input(ctx: &Context, arg: &str) -> Result<(FormInput, Source), CliError> {
    let src = source::resolve(arg, ctx.catalog.as_deref())?;
    let form = if Path::new(arg).is_file() { arg.to_string() } else { src.label.clone() };
    Ok((FormInput { form, catalog: ctx.catalog.clone() }, src))
}

pub fn inspect(ctx: &Context, arg: &str) -> Result<Report, CliError> {
    let (input, _) = form_input(ctx, arg)?;
    run_inspect(&input)
}

fn run_inspect(input: &FormInput) -> Result<Report, CliError> {
    let start = Instant::now();
    let form = source::build(&source::resolve(&input.form, input.catalog.as_deref())?)?;
    let r = &form.root_system;
    let inv = &form.involution;
    let rrs = restricted_roots(r, inv);
    let chamber = DualChamber::new(&rrs);
    let roots: Vec<Value> = rrs
        .positive_roots()
        .iter()
        .map(|b| json!({ "coords": canon(&b.coords), "multiplicity": b.multiplicity }))
        .collect();
    let total: usize = rrs.roots().iter().map(|b| b.multiplicity).sum::<usize>() + rrs.sigma_m_roots().len();
    let results = json!({
        "id": form.id,
        "cartan_type": r.cartan_type().to_string(),
        "rank": r.rank(),
        "theta": inv.theta().to_rows().iter().map(|row| canon(row)).collect::<Vec<_>>(),
        "a_rank": inv.a_rank(),
        "restricted_type": rrs.restricted_type(),
        "reduced": rrs.is_reduced(),
        "positive_restricted_roots": roots,
        "sigma_m_roots": rrs.sigma_m_roots().len(),
        "rho_a": canon(rrs.rho_restricted()),
        "conjugated_by": inv.conjugated_by().map(|w| w.word.iter().map(|i| i + 1).collect::<Vec<_>>()),
        "realizability_verified": inv.realizability_verified(),
    });
    let certificates = json!({
        "chamber_descriptions_agree": chamber.check_descriptions(),
        "multiplicities_count_all_roots": total == r.all_roots().len(),
    });
    Ok(finish("inspect", input, results, certificates, start))
}

pub fn criterion(ctx: &Context, arg: &str) -> Result<Report, CliError> {
    let (input, _) = form_input(ctx, arg)?;
    run_criterion(&input)
}

fn run_criterion(input: &FormInput) -> Result<Report, CliError> {
    let start = Instant::now();
    let form = source::build(&source::resolve(&input.form, input.catalog.as_deref())?)?;
    let r = &form.root_system;
    let inv = &form.involution;
    let v = compact_cartan_verdict(r, inv, form.compact_rank);
    let ext = ExtendedWeylGroup::new(r, inv);
    let doc = VerdictDocument::new(&form.id, &v);
    let mut results = serde_json::to_value(&doc).expect("verdicts serialize");
    results["coset_structure"] = json!(format!("{:?}", ext.coset_structure));
    // how each equivalent formulation of the verdict is backed
    results["equivalences"] = json!({
        "minus_sigma_in_weyl": "computed",
        "compact_cartan": "computed",
        "compact_rank_equals_rank": if v.oracle_compact_rank_equal.is_some() { "oracle" } else { "unavailable" },
        "conjugating_element_exists": "implied",
    });
    let witness_ok = v.witness.as_ref().is_none_or(|w| &w.matrix == inv.theta());
    let certificates = json!({
        "witness_matches_theta": witness_ok,
        "extended_group_invariants": ext.check_invariants(r),
        "consistent": v.consistent.unwrap_or(true),
    });
    Ok(finish("criterion", input, results, certificates, start))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StrongRegInput {
    pub form: String,
    pub catalog: Option<PathBuf>,
    /// Simple-root coordinates.
    pub lambda: Vec<String>,
    /// `None` selects every restriction of `[Lambda]^+`.
    pub exponents: Option<Vec<Vec<String>>>,
    pub config: TranslationConfig,
}

impl StrongRegInput {
    pub fn from_cli(
        ctx: &Context,
        form: &str,
        lambda: &str,
        fundamental: bool,
        exponents: Option<&str>,
        config: TranslationConfig,
    ) -> Result<Self, CliError> {
        let (fi, src) = form_input(ctx, form)?;
        let coords: Vec<Rational> = parse_vector(lambda).context(|| "--lambda".into())?;
        let lambda = if fundamental {
            let f = source::build(&src)?;
            f.root_system.check_rank(&Weight(coords.clone())).context(|| "--lambda".into())?;
            f.root_system.from_fundamental(&coords).0
        } else {
            coords
        };
        let exponents = exponents
            .map(|s| {
                s.split(';')
                    .filter(|p| !p.trim().is_empty())
                    .map(|p| parse_vector::<Rational>(p).map(|v| canon(&v)))
                    .collect::<Result<Vec<_>, _>>()
            })
            .transpose()
            .context(|| "--exponents".into())?;
        Ok(StrongRegInput { form: fi.form, catalog: fi.catalog, lambda: canon(&lambda), exponents, config })
    }
}

pub fn strong_reg(_ctx: &Context, input: &StrongRegInput) -> Result<Report, CliError> {
    run_strong_reg(input)
}

fn run_strong_reg(input: &StrongRegInput) -> Result<Report, CliError> {
    let start = Instant::now();
    let form = source::build(&source::resolve(&input.form, input.catalog.as_deref())?)?;
    let r = &form.root_system;
    let inv = &form.involution;
    let cap = input.config.cap;
    let lambda = Weight(parse_list(&input.lambda)?);
    r.check_rank(&lambda).context(|| "lambda".into())?;
    let d = match &input.exponents {
        Some(ex) => {
            let ex = ex.iter().map(|e| parse_list(e)).collect::<Result<Vec<_>, _>>()?;
            if let Some(e) = ex.iter().find(|e| e.len() != inv.a_rank()) {
                return Err(CliError::Usage(format!(
                    "exponent has {} coordinates, the split rank is {}",
                    e.len(),
                    inv.a_rank()
                )));
            }
            FormalDSDatum::new(r, inv, lambda, ex, &form.id, cap).context(|| "datum".into())?
        }
        None => FormalDSDatum::antidominant(r, inv, lambda, &form.id, cap).context(|| "datum".into())?,
    };
    let rrs = restricted_roots(r, inv);
    let chamber = DualChamber::new(&rrs);
    if !d.exponents.is_empty() && !l2_check(&chamber, &d).pass {
        return Err(CliError::Usage("the exponents are not all in -int C".into()));
    }
    let res = strong_regularization(r, inv, &rrs, &d, &input.config).context(|| form.id.clone())?;
    let verified = verify_result(r, inv, &rrs, &res, cap).context(|| "verification".into())?;
    let results = serde_json::to_value(&res).expect("results serialize");
    let certificates = json!({
        "strongly_regular": extended_stabilizer(r, inv, &res.lambda_final).trivial,
        "cone_condition_exact": verified,
    });
    Ok(finish("strong-reg", input, results, certificates, start))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyInput {
    pub suite: String,
    pub catalog: Option<PathBuf>,
    pub cap: usize,
}

pub const SUITES: [&str; 3] = ["exact-sequence", "lemma", "pipeline"];

/// Largest Weyl group the exact-sequence suite enumerates.
const SEQUENCE_LIMIT: usize = 46_080;

pub fn verify(ctx: &Context, suite: &str) -> Result<Report, CliError> {
    run_verify(&VerifyInput { suite: suite.to_string(), catalog: ctx.catalog.clone(), cap: ctx.cap })
}

fn run_verify(input: &VerifyInput) -> Result<Report, CliError> {
    let start = Instant::now();
    let (results, certificates) = match input.suite.as_str() {
        "exact-sequence" => suite_exact_sequence(input)?,
        "lemma" => suite_lemma(input)?,
        "pipeline" => suite_pipeline(input)?,
        other => {
            return Err(CliError::Usage(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", "))))
        }
    };
    Ok(finish("verify", input, results, certificates, start))
}

fn suite_exact_sequence(input: &VerifyInput) -> Result<(Value, Value), CliError> {
    let sources = source::catalog(input.catalog.as_deref())?;
    let mut rows: Vec<(String, Value, bool)> = sources
        .par_iter()
        .map(|s| {
            let form = source::build(s)?;
            let r = &form.root_system;
            if r.enumerate_weyl(SEQUENCE_LIMIT).is_err() {
                return Ok(None);
            }
            let rep = verify_exact_sequence(r, &form.involution, input.cap).context(|| form.id.clone())?;
            let mut row = serde_json::to_value(&rep).expect("reports serialize");
            row["id"] = json!(form.id);
            Ok(Some((form.id.clone(), row, rep.pass)))
        })
        .filter_map(Result::transpose)
        .collect::<Result<_, CliError>>()?;
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    let pass = rows.iter().all(|r| r.2);
    let rows: Vec<Value> = rows.into_iter().map(|r| r.1).collect();
    Ok((json!({ "weyl_order_limit": SEQUENCE_LIMIT, "rows": rows }), json!({ "all_pass": pass })))
}

fn suite_lemma(input: &VerifyInput) -> Result<(Value, Value), CliError> {
    let mut rows = Vec::new();
    let mut clean = true;
    for t in ["A2", "B2", "G2"] {
        let r: RootSystem<Rational> = RootSystem::from_type_str(t).context(String::new)?;
        let mus = [("w1", r.fundamental_weight(0).clone()), ("w2", r.fundamental_weight(1).clone()), ("rho", r.rho().clone())];
        for (name, mu) in &mus {
            let (mut runs, mut checked, mut violations) = (0, 0, 0);
            for mu0 in r.weyl_orbit(mu, input.cap).context(|| t.into())? {
                for s in [Rational::new(1.into(), 2.into()), Rational::from_int(1), Rational::from_int(2)] {
                    let rep = check_lambda_mu_comp(&r, &mu0.scale(&s), &mu0, input.cap).context(|| t.into())?;
                    runs += 1;
                    checked += rep.checked;
                    violations += rep.violations.len();
                }
            }
            clean &= violations == 0;
            rows.push(json!({ "type": t, "mu": name, "runs": runs, "checked": checked, "violations": violations }));
        }
    }
    Ok((json!({ "t": ["1/2", "1", "2"], "rows": rows }), json!({ "no_violations": clean })))
}

fn suite_pipeline(input: &VerifyInput) -> Result<(Value, Value), CliError> {
    let cfg = TranslationConfig { cap: input.cap, ..TranslationConfig::default() };
    let mut rows = Vec::new();
    let (mut verified_all, mut linear_all) = (true, true);
    for id in ["sl(2,R)", "su(2,1)", "sp(2,R)"] {
        let form = source::build(&source::resolve(id, None)?)?;
        let r = &form.root_system;
        let inv = &form.involution;
        let rrs = restricted_roots(r, inv);
        let chamber = DualChamber::new(&rrs);
        let two = Rational::from_int(2);
        for lam in [r.rho().clone(), r.rho().scale(&two), r.rho().add(r.fundamental_weight(0))] {
            let d = FormalDSDatum::antidominant(r, inv, lam.clone(), id, input.cap).context(|| id.into())?;
            let res = strong_regularization(r, inv, &rrs, &d, &cfg).context(|| id.into())?;
            let verified = verify_result(r, inv, &rrs, &res, input.cap).context(|| id.into())?;
            let mut linear = true;
            for k in 0..=10 {
                let line = translate_line(r, inv, &d, k, &cfg).context(|| id.into())?;
                let s: Rational = cfg.scale(k);
                for (e, e2) in d.exponents.iter().zip(&line.exponents) {
                    linear &= chamber.cone_position(e2).margin == chamber.cone_position(e).margin.scale(&s);
                }
            }
            verified_all &= verified;
            linear_all &= linear;
            rows.push(json!({
                "form": id,
                "lambda": canon(&lam.0),
                "k": res.k,
                "mus": res.mus.iter().map(|m| canon(&m.0)).collect::<Vec<_>>(),
                "lambda_final": canon(&res.lambda_final.0),
                "verified": verified,
                "margin_linear_k_le_10": linear,
            }));
        }
    }
    Ok((json!({ "rows": rows }), json!({ "verified": verified_all, "margin_linearity": linear_all })))
}

/// Recomputes each report from its `inputs` and compares everything but
/// the timing.
pub fn replay(_ctx: &Context, file: &Path) -> Result<Vec<Report>, CliError> {
    let start = Instant::now();
    let text = if file == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::io(file, e))?;
        s
    } else {
        fs::read_to_string(file).map_err(|e| CliError::io(file, e))?
    };
    let mut rows = Vec::new();
    let mut identical = true;
    for (n, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let old: Report = serde_json::from_str(line).map_err(|e| CliError::Document {
            path: file.to_path_buf(),
            line: n + 1,
            column: e.column(),
            message: e.to_string(),
        })?;
        let new = recompute(&old)?;
        let same = old.same_outcome(&new);
        identical &= same;
        rows.push(json!({ "line": n + 1, "command": old.command, "identical": same }));
    }
    let input = json!({ "file": file });
    Ok(vec![finish("replay", &input, json!({ "reports": rows }), json!({ "identical": identical }), start)])
}

fn inputs<T: for<'de> Deserialize<'de>>(r: &Report) -> Result<T, CliError> {
    serde_json::from_value(r.inputs.clone())
        .map_err(|e| CliError::Usage(format!("{} report has malformed inputs: {e}", r.command)))
}

fn recompute(r: &Report) -> Result<Report, CliError> {
    match r.command.as_str() {
        "catalog" => Ok(run_catalog(&inputs(r)?)?.0),
        "inspect" => run_inspect(&inputs(r)?),
        "criterion" => run_criterion(&inputs(r)?),
        "strong-reg" => run_strong_reg(&inputs(r)?),
        "verify" => run_verify(&inputs(r)?),
        other => Err(CliError::Usage(format!("cannot replay a {other:?} report"))),
    }
}
