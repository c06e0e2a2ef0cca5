use serde_json::{json, Map, Value};

use cartan_core::constructions::{is_unital_subalgebra, power_chain};
use cartan_core::json::{field_to_json, subspace_from_json, subspace_to_json};
use cartan_core::oracle::{enumerate_cartans_bruteforce, radical_bruteforce};
use cartan_core::radical::{radical_complement_with, verify_radical};
use cartan_core::torus::CartanCertificate;
use cartan_core::units::{group_is_soluble, units_decomposition_check};
use cartan_core::{
    cartan_subalgebra, group_nilpotency, index_of_central_simple, is_reduced, is_soluble, is_torus,
    lie_nilpotency_report, maximal_torus, radical, unit_group, verify_cartan, Algebra, Error, Subspace,
};

use crate::input::Loaded;
use crate::report::{Check, CliError, RunReport};
use crate::{Cli, Command};

#[derive(Default)]
struct Outcome {
    results: Map<String, Value>,
    checks: Vec<Check>,
}

impl Outcome {
    fn set(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
        });
    }
}

pub fn execute(cli: &Cli, loaded: &Loaded) -> Result<RunReport, CliError> {
    let a = &loaded.algebra;
    let mut out = Outcome::default();
    out.set("field", field_to_json(a.field()));
    out.set("dim", json!(a.dim()));
    match &cli.command {
        Command::Radical(_) => run_radical(a, cli.oracle, &mut out)?,
        Command::Complement(_) => run_complement(a, &mut out)?,
        Command::Soluble(_) => out.set("soluble", json!(is_soluble(a)?)),
        Command::Reduced(_) => out.set("reduced", json!(is_reduced(a)?.as_str())),
        Command::MaximalTorus(_) => {
            let t = maximal_torus(a, cli.seed)?;
            out.set("torus", subspace_to_json(&t.torus));
            out.set("torus_dim", json!(t.torus.dim()));
            if let Some(c) = &t.self_centralizing_in {
                out.set("self_centralizing_in", subspace_to_json(c));
            }
            out.check("is_torus", is_torus(a, &t.torus));
        }
        Command::Cartan(_) => {
            let cert = cartan_subalgebra(a, cli.seed)?;
            cartan_results(a, &cert, cli.oracle, &mut out)?;
        }
        Command::Verify { subspace, .. } => {
            let text = std::fs::read_to_string(subspace).map_err(|source| CliError::Io {
                path: subspace.display().to_string(),
                source,
            })?;
            let c = subspace_from_json(a.field(), a.dim(), &text)?;
            let d = verify_cartan(a, &c);
            out.set("subspace_dim", json!(c.dim()));
            out.set("is_cartan", json!(d.is_cartan()));
            out.set("class", json!(d.nilpotency_class));
            out.set("multiplication_closed", json!(d.multiplication_closed));
            out.set("contains_one", json!(d.contains_one));
            out.check("bracket_closed", d.bracket_closed);
            out.check("lie_nilpotent", d.lie_nilpotent);
            out.check("normalizer_equals_self", d.self_normalizing);
            if d.is_cartan() {
                out.check("multiplication_closed", d.multiplication_closed);
                out.check("contains_one", d.contains_one);
            }
        }
        Command::Index(_) => {
            let index = index_of_central_simple(a)?;
            out.set("index", json!(index));
        }
        Command::Units(_) => run_units(a, &mut out)?,
        Command::Report(_) => {
            run_radical(a, cli.oracle, &mut out)?;
            run_complement(a, &mut out)?;
            out.set("soluble", json!(is_soluble(a)?));
            out.set("reduced", json!(is_reduced(a)?.as_str()));
            let cert = cartan_subalgebra(a, cli.seed)?;
            cartan_results(a, &cert, cli.oracle, &mut out)?;
            let r = lie_nilpotency_report(a, cli.seed)?;
            out.set(
                "lie_nilpotency",
                json!({
                    "lie_nilpotent": r.lie_nilpotent,
                    "lie_class": r.lie_class,
                    "central_complement": r.central_complement,
                    "soluble_unique_complement": r.soluble_unique_complement,
                    "conjugation_exhaustive": r.conjugation_exhaustive,
                    "separable_form_complement": r.separable_form_complement,
                    "separable_form_subspace": r.separable_form_subspace,
                    "skipped": r.skipped,
                }),
            );
            out.check("nilpotency_criteria_agree", r.consistent());
        }
    }
    Ok(RunReport {
        input_digest: loaded.digest.clone(),
        command: cli.command.name().to_string(),
        results: Value::Object(out.results),
        checks: out.checks,
        seed: cli.seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

/// Runs an oracle scan, turning "instance too large" into a skip note.
fn oracle_scan<T>(out: &mut Outcome, scan: impl FnOnce() -> cartan_core::Result<T>) -> Result<Option<T>, CliError> {
    match scan() {
        Ok(v) => Ok(Some(v)),
        Err(Error::TooLarge) => {
            out.set("oracle_skipped", json!("instance outside the brute-force bounds"));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn run_radical(a: &Algebra, oracle: bool, out: &mut Outcome) -> Result<(), CliError> {
    let rad = radical(a)?;
    out.set("radical", subspace_to_json(&rad));
    out.set("radical_dim", json!(rad.dim()));
    let checks = verify_radical(a, &rad)?;
    out.check("radical_is_ideal", checks.is_ideal);
    out.check("radical_is_nilpotent", checks.is_nilpotent);
    out.check("quotient_is_semisimple", checks.quotient_semisimple);
    if oracle {
        if let Some(brute) = oracle_scan(out, || radical_bruteforce(a))? {
            out.check("radical_matches_bruteforce", brute == rad);
        }
    }
    Ok(())
}

fn run_complement(a: &Algebra, out: &mut Outcome) -> Result<(), CliError> {
    let rad = radical(a)?;
    let c = radical_complement_with(a, &rad)?;
    out.set("complement", subspace_to_json(&c));
    out.set("complement_dim", json!(c.dim()));
    out.check(
        "complement_direct_sum",
        c.intersection(&rad).is_zero() && c.dim() + rad.dim() == a.dim(),
    );
    out.check("complement_unital_subalgebra", is_unital_subalgebra(a, &c));
    out.check("radical_nilpotent", power_chain(a, &rad).is_some());
    Ok(())
}

fn cartan_results(a: &Algebra, cert: &CartanCertificate, oracle: bool, out: &mut Outcome) -> Result<(), CliError> {
    out.set("torus", subspace_to_json(&cert.torus.torus));
    out.set("torus_dim", json!(cert.torus.torus.dim()));
    out.set("cartan", subspace_to_json(&cert.cartan));
    out.set("cartan_dim", json!(cert.cartan.dim()));
    out.set("class", json!(cert.nilpotency_class));
    out.set("radical_part_dim", json!(cert.radical_part.dim()));
    out.check("torus_is_torus", is_torus(a, &cert.torus.torus));
    for (name, passed) in cert.checks(a) {
        out.check(name, passed);
    }
    if oracle {
        if let Some(all) = oracle_scan(out, || enumerate_cartans_bruteforce(a))? {
            out.set("oracle_cartan_count", json!(all.len()));
            out.check("cartan_in_bruteforce_list", all.contains(&cert.cartan));
            out.check(
                "bruteforce_cartans_are_unital_subalgebras",
                all.iter().all(|c: &Subspace| is_unital_subalgebra(a, c)),
            );
        }
    }
    Ok(())
}

fn run_units(a: &Algebra, out: &mut Outcome) -> Result<(), CliError> {
    let units = unit_group(a)?;
    let nil = group_nilpotency(&units.group);
    out.set("order", json!(units.order()));
    out.set("nilpotent", json!(nil.is_nilpotent()));
    out.set("class", json!(nil.class()));
    out.set("soluble_group", json!(group_is_soluble(&units.group)));
    if nil.is_nilpotent() {
        let d = units_decomposition_check(a)?;
        out.set(
            "decomposition",
            json!({
                "one_plus_radical_order": d.one_plus_radical_order,
                "complement_units_order": d.torus_units_order,
                "order_matches": d.order_matches,
                "intersection_trivial": d.intersection_trivial,
                "complement_units_central": d.torus_units_central,
            }),
        );
        out.check("units_decomposition", d.holds());
    } else {
        out.set("decomposition", json!(null));
    }
    Ok(())
}
