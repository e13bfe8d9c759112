mod inputs;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fg4::complex::homology;
use fg4::equivalence::{parse_equivalence, search_equivalence, verify_equivalence, write_equivalence, SearchOptions};
use fg4::labelling::count_labellings;
use fg4::statesum::pachner::{check_move, PachnerMove};
use fg4::statesum::{z_total_with, Method, Options};
use fg4::structure::{verify_all, BUILTINS};
use fg4::{Error, Result};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "fg4", version, about = "Exact state-sum invariants of 4-manifolds from finite-group data")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Enumeration budget; defaults to FG4_BUDGET or the built-in limit.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every coherence identity exhaustively.
    VerifyStructure {
        #[arg(long)]
        structure: String,
    },
    /// Check given equivalence data, or search for a witness.
    EquivalenceCheck {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// Equivalence data file; without it a witness is searched for.
        #[arg(long)]
        data: Option<String>,
        /// Also search over automorphisms of G, H and the Galois group.
        #[arg(long)]
        widen: bool,
    },
    /// Check invariance under the 4-dimensional Pachner moves.
    PachnerCheck {
        #[arg(long)]
        structure: String,
        /// `3-3`, `2-4`, `1-5` or `all`.
        #[arg(long = "move", default_value = "all")]
        mv: String,
    },
    /// Compute the invariant of a complex.
    Compute {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        structure: String,
        /// auto, brute, gray, linear or quadratic.
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        reversed: bool,
        #[arg(long)]
        relabel: Option<u64>,
        /// Sum over edge labellings trivial on a spanning forest only.
        #[arg(long)]
        gauge_fix: bool,
    },
    /// Count admissible labellings.
    CountLabellings {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        structure: String,
    },
    /// Simplicial homology and face counts.
    Homology {
        #[arg(long)]
        complex: String,
        /// Coefficients Z/n; 0 for the integers.
        #[arg(long, default_value_t = 0)]
        coefficients: u64,
    },
    /// List builtin structures and complexes.
    ListBuiltins,
}

struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

fn verify_structure(spec: &str) -> Result<Outcome> {
    let s = inputs::structure(spec)?;
    let r = verify_all(&s);
    let mut text = format!("structure {spec}: |G| = {}, |H| = {}, m = {}\n", s.g().order(), s.h().order(), s.m());
    if let Some(n) = &r.normalization {
        let _ = writeln!(text, "not normalized: {n}");
    }
    let mut ids = Vec::new();
    for id in &r.identities {
        match &id.counterexample {
            None => {
                let _ = writeln!(text, "{} pass ({} checked)", id.identity, id.checked);
            }
            Some(c) => {
                let _ = writeln!(text, "{} FAIL: {c}", id.identity);
            }
        }
        ids.push(json!({
            "identity": id.identity.to_string(),
            "checked": id.checked,
            "passed": id.passed(),
            "counterexample": id.counterexample.as_ref().map(|c| c.to_string()),
        }));
    }
    let ok = r.all_passed();
    text.push_str(if ok { "all identities pass\n" } else { "verification failed\n" });
    let json = json!({"structure": spec, "normalization": r.normalization, "identities": ids, "passed": ok});
    Ok(Outcome { text, json, ok })
}

fn equivalence_check(source: &str, target: &str, data: Option<&str>, widen: bool, budget: u64) -> Result<Outcome> {
    let s = inputs::structure(source)?;
    let t = inputs::structure(target)?;
    let e = match data {
        Some(path) => parse_equivalence(&std::fs::read_to_string(path)?, s.g(), s.h(), s.m())?,
        None => match search_equivalence(&s, &t, SearchOptions { budget, widen })? {
            Some(e) => e,
            None => {
                let text = format!("no equivalence from {source} to {target}\n");
                let json = json!({"source": source, "target": target, "witness": Value::Null, "passed": false});
                return Ok(Outcome { text, json, ok: false });
            }
        },
    };
    let r = verify_equivalence(&s, &t, &e);
    let mut text = String::new();
    if let Some(msg) = &r.invalid {
        let _ = writeln!(text, "invalid equivalence data: {msg}");
    }
    let mut conds = Vec::new();
    for c in &r.conditions {
        match &c.failure {
            None => {
                let _ = writeln!(text, "condition {} pass ({} checked)", c.condition, c.checked);
            }
            Some(f) => {
                let _ = writeln!(text, "condition {} FAIL: {f}", c.condition);
            }
        }
        conds.push(json!({
            "condition": c.condition,
            "checked": c.checked,
            "failure": c.failure.as_ref().map(|f| f.to_string()),
        }));
    }
    let ok = r.all_passed();
    let witness = write_equivalence(&e);
    if ok && data.is_none() {
        let _ = write!(text, "witness:\n{witness}");
    }
    text.push_str(if ok { "equivalence holds\n" } else { "equivalence fails\n" });
    let json = json!({
        "source": source,
        "target": target,
        "invalid": r.invalid,
        "conditions": conds,
        "witness": witness,
        "passed": ok,
    });
    Ok(Outcome { text, json, ok })
}

fn pachner_check(spec: &str, mv: &str) -> Result<Outcome> {
    let s = inputs::structure(spec)?;
    let moves: Vec<PachnerMove> = if mv == "all" {
        PachnerMove::ALL.to_vec()
    } else {
        vec![PachnerMove::parse(mv).ok_or_else(|| Error::Shape(format!("unknown move `{mv}`")))?]
    };
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for mv in moves {
        let r = check_move(&s, mv);
        ok &= r.passed();
        match &r.counterexample {
            None => {
                let _ = writeln!(text, "{} pass ({} boundary labellings)", mv.as_str(), r.checked);
            }
            Some(c) => {
                let _ = writeln!(text, "{} FAIL: {c}", mv.as_str());
            }
        }
        reports.push(json!({
            "move": mv.as_str(),
            "checked": r.checked,
            "passed": r.passed(),
            "counterexample": r.counterexample.as_ref().map(|c| c.to_string()),
        }));
    }
    Ok(Outcome { text, json: json!({"structure": spec, "moves": reports, "passed": ok}), ok })
}

struct ComputeArgs<'a> {
    complex: &'a str,
    structure: &'a str,
    method: &'a str,
    reversed: bool,
    relabel: Option<u64>,
    gauge_fix: bool,
}

fn compute(a: ComputeArgs, budget: u64, threads: usize) -> Result<Outcome> {
    let mut t = inputs::complex(a.complex)?;
    if a.reversed {
        t = t.reverse_orientation();
    }
    if let Some(seed) = a.relabel {
        t = t.relabel_vertices(&inputs::permutation(t.v0(), seed))?;
    }
    let s = inputs::structure(a.structure)?;
    let method = Method::parse(a.method).ok_or_else(|| Error::MethodNotApplicable {
        method: a.method.to_string(),
        reason: "unknown method".into(),
    })?;
    let r = z_total_with(&t, &s, Options { method, budget, gauge_fix: a.gauge_fix, threads })?;
    let text = format!(
        "{}\nmethod {}\nraw {}\nnormalization {}\nlabellings {}\n",
        r.value, r.method, r.raw, r.normalization, r.labellings
    );
    let json = json!({
        "complex": a.complex,
        "structure": a.structure,
        "reversed": a.reversed,
        "relabel": a.relabel,
        "value": r.value.to_string(),
        "raw": r.raw.to_string(),
        "normalization": r.normalization.to_string(),
        "method": r.method.as_str(),
        "labellings": r.labellings.to_string(),
        "gauge_fix": a.gauge_fix,
    });
    Ok(Outcome { text, json, ok: true })
}

fn count(complex: &str, structure: &str) -> Result<Outcome> {
    let t = inputs::complex(complex)?;
    let s = inputs::structure(structure)?;
    let n = count_labellings(&t, &s)?;
    Ok(Outcome { text: format!("{n}\n"), json: json!({"labellings": n.to_string()}), ok: true })
}

fn homology_report(complex: &str, n: u64) -> Result<Outcome> {
    let t = inputs::complex(complex)?;
    let groups = homology(&t, n);
    let coeff = if n == 0 { "Z".to_string() } else { format!("Z/{n}") };
    let mut text = format!("f-vector {:?}\neuler characteristic {}\n", t.f_vector(), t.euler_characteristic());
    for (k, g) in groups.iter().enumerate() {
        let _ = writeln!(text, "H_{k}(; {coeff}) = {g}");
    }
    let json = json!({
        "f_vector": t.f_vector(),
        "euler_characteristic": t.euler_characteristic(),
        "coefficients": coeff,
        "homology": groups.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    });
    Ok(Outcome { text, json, ok: true })
}

fn list_builtins() -> Outcome {
    let mut text = String::from("structures:\n");
    for (name, what) in BUILTINS {
        let _ = writeln!(text, "  {name:<28} {what}");
    }
    text.push_str("  file:<path>                  a structure file\ncomplexes:\n");
    for (name, what) in inputs::COMPLEXES.iter().chain(inputs::MODIFIERS) {
        let _ = writeln!(text, "  {name:<28} {what}");
    }
    let entries = |l: &[(&str, &str)]| l.iter().map(|(n, w)| json!({"name": n, "description": w})).collect::<Vec<_>>();
    let json = json!({
        "structures": entries(BUILTINS),
        "complexes": entries(inputs::COMPLEXES),
        "modifiers": entries(inputs::MODIFIERS),
    });
    Outcome { text, json, ok: true }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let budget = cli.budget.unwrap_or_else(fg4::labelling::budget);
    let threads = cli.threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    match &cli.command {
        Command::VerifyStructure { structure } => verify_structure(structure),
        Command::EquivalenceCheck { source, target, data, widen } => {
            equivalence_check(source, target, data.as_deref(), *widen, budget)
        }
        Command::PachnerCheck { structure, mv } => pachner_check(structure, mv),
        Command::Compute { complex, structure, method, reversed, relabel, gauge_fix } => compute(
            ComputeArgs { complex, structure, method, reversed: *reversed, relabel: *relabel, gauge_fix: *gauge_fix },
            budget,
            threads,
        ),
        Command::CountLabellings { complex, structure } => count(complex, structure),
        Command::Homology { complex, coefficients } => homology_report(complex, *coefficients),
        Command::ListBuiltins => Ok(list_builtins()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("reports serialize"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            let code = if matches!(e, Error::BudgetExceeded { .. }) { 3 } else { 2 };
            if cli.json {
                println!("{}", json!({"error": e.to_string(), "exit_code": code}));
            }
            eprintln!("fg4: {e}");
            ExitCode::from(code)
        }
    }
}
