mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use knotpad::corpus::corpus;
use knotpad::diagram::io::{diagram_to_json, parse_diagram, parse_plat, pd_to_json, plat_to_json, Diagram};
use knotpad::reduce_alt::{
    flip_set, make_alternating, prime_decompose, recognize_special, reduce_alternating, remove_nugatory,
};
use knotpad::reduce_plat::{braid_to_plat, certify, reduce_plat, simplify_braid, standardize, to_braid};
use knotpad::theory::{InvariantValue, Theory};
use knotpad::{Error, PdDiagram};

#[derive(Parser, Debug)]
#[command(name = "knotpad", version, about = "Knot diagram rewriting with exact invariant checks")]
struct Cli {
    /// Write a run manifest (command line, inputs, outputs, status, timing).
    #[arg(long, global = true, value_name = "PATH")]
    manifest: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced, prime, alternating diagram with the twist power `r`.
    ReduceAlt(ReduceArgs),
    /// Highly twisted standard plat with bridge-distance certificate.
    ReducePlat(ReduceArgs),
    /// Value of the selected theory on a diagram.
    Invariant {
        input: PathBuf,
        #[arg(long)]
        theory: String,
        /// Expand plats to PD form before evaluating.
        #[arg(long)]
        pd: bool,
    },
    /// Order of the squared braiding and the padding unit.
    Exponent {
        #[arg(long)]
        theory: String,
    },
    /// Re-checks a plat file against the distance hypotheses.
    Certify { input: PathBuf },
    /// Draws a diagram.
    Render {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lists the bundled corpus or writes it out as PD files.
    Corpus {
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
    },
    /// Runs a single pipeline step.
    Step {
        #[arg(value_enum)]
        step: StepName,
        input: PathBuf,
        /// Padding unit for steps that insert twists.
        #[arg(long, default_value_t = 10)]
        t: u64,
    },
    /// Re-runs the command recorded in a manifest.
    Replay { manifest_file: PathBuf },
}

#[derive(clap::Args, Debug)]
struct ReduceArgs {
    input: PathBuf,
    #[arg(long)]
    theory: String,
    /// Output diagram file.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Report file; printed to stdout when absent.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Check the invariant relation exactly and fail on mismatch.
    #[arg(long)]
    verify: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StepName {
    FlipSet,
    MakeAlternating,
    RemoveNugatory,
    PrimeDecompose,
    Recognize,
    ToBraid,
    Standardize,
}

#[derive(Debug, Serialize, Deserialize)]
struct RunManifest {
    command: String,
    args: Vec<String>,
    inputs: Vec<String>,
    theory: Option<String>,
    flags: Vec<String>,
    outputs: Vec<String>,
    exit_status: u8,
    elapsed_ms: u128,
}

enum Failure {
    Core(Error),
    Io(String),
    Verify(String),
    Certificate,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(e) => match e {
                Error::Parse(_)
                | Error::EdgeMultiplicity { .. }
                | Error::NonPlanar { .. }
                | Error::Orientation(_)
                | Error::InvalidEdge(_) => 2,
                Error::NotAKnot(_) => 3,
                Error::CapExceeded { .. } => 4,
                _ => 1,
            },
            Failure::Io(_) => 1,
            Failure::Verify(_) | Failure::Certificate => 5,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(s) => s.clone(),
            Failure::Verify(s) => format!("verification failed: {s}"),
            Failure::Certificate => "certificate check failed".into(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Files written during a run, for the manifest.
#[derive(Default)]
struct Run {
    outputs: Vec<String>,
}

impl Run {
    fn write(&mut self, path: &Path, text: &str) -> Outcome {
        fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        self.outputs.push(path.display().to_string());
        Ok(())
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn outln(text: &str) {
    out(&format!("{text}\n"));
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_diagram(path: &Path) -> std::result::Result<Diagram, Failure> {
    Ok(parse_diagram(&read(path)?)?)
}

fn read_knot(path: &Path) -> std::result::Result<PdDiagram, Failure> {
    Ok(read_diagram(path)?.to_pd()?)
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn emit(run: &mut Run, report: &Value, path: Option<&Path>) -> Outcome {
    match path {
        Some(p) => run.write(p, &pretty(report)),
        None => {
            out(&pretty(report));
            Ok(())
        }
    }
}

fn check(what: &str, got: &InvariantValue, want: &InvariantValue) -> std::result::Result<Value, Failure> {
    if got != want {
        return Err(Failure::Verify(format!("{what}: expected {want}, got {got}")));
    }
    Ok(json!({ "ok": true, "expected": want, "output": got }))
}

fn cmd_reduce_alt(a: &ReduceArgs, run: &mut Run) -> Outcome {
    let theory = Theory::parse(&a.theory)?;
    let k = read_knot(&a.input)?;
    let rep = reduce_alternating(&k, &theory)?;
    let mut report = serde_json::to_value(&rep).expect("report serializes");
    report["theory"] = json!(theory);
    if a.verify {
        let input = theory.evaluate_pd(&k)?;
        let output = match &rep.plat {
            Some(p) => theory.evaluate_plat(p)?,
            None => theory.evaluate_pd(&rep.output)?,
        };
        let want = theory.apply_twist(&input, rep.r);
        report["verification"] = check("output against twisted input", &output, &want)?;
    }
    if let Some(o) = &a.output {
        run.write(o, &pd_to_json(&rep.output))?;
    }
    emit(run, &report, a.report.as_deref())
}

fn cmd_reduce_plat(a: &ReduceArgs, run: &mut Run) -> Outcome {
    let theory = Theory::parse(&a.theory)?;
    let k = read_knot(&a.input)?;
    let rep = reduce_plat(&k, &theory)?;
    let mut report = serde_json::to_value(&rep).expect("report serializes");
    report["theory"] = json!(theory);
    if a.verify {
        let input = theory.evaluate_pd(&k)?;
        let output = theory.evaluate_plat(&rep.output)?;
        report["verification"] = check("output against input", &output, &input)?;
    }
    if let Some(o) = &a.output {
        run.write(o, &plat_to_json(&rep.output))?;
    }
    emit(run, &report, a.report.as_deref())
}

fn cmd_invariant(input: &Path, theory: &str, pd: bool) -> Outcome {
    let theory = Theory::parse(theory)?;
    let value = match read_diagram(input)? {
        Diagram::Plat(p) if !pd => theory.evaluate_plat(&p)?,
        d => theory.evaluate_pd(&d.to_pd()?)?,
    };
    out(&pretty(&json!({ "theory": theory, "value": value, "text": value.to_string() })));
    Ok(())
}

fn cmd_exponent(theory: &str) -> Outcome {
    let theory = Theory::parse(theory)?;
    outln(&format!("{}", theory.exponent()?));
    Ok(())
}

fn cmd_certify(input: &Path) -> Outcome {
    let p = parse_plat(&read(input)?)?;
    let c = certify(&p);
    let distance = c.distance.map_or("refused".to_string(), |d| d.to_string());
    outln(&format!("m = {}", c.m));
    outln(&format!("n = {}", c.n));
    outln(&format!("d = {distance}"));
    outln(&format!("twist regions = {}", c.twist_number));
    outln(&format!("volume bounds = [{:.5}, {:.5}] (advisory)", c.volume_bounds.0, c.volume_bounds.1));
    let flags = serde_json::to_value(&c.certificates).expect("certificates serialize");
    for (name, v) in flags.as_object().expect("certificates are an object") {
        outln(&format!("{name} = {v}"));
    }
    outln(&format!("alternating = {}", c.alternating));
    if c.certificates.all() {
        Ok(())
    } else {
        Err(Failure::Certificate)
    }
}

fn cmd_render(input: &Path, format: Format, output: Option<&Path>, run: &mut Run) -> Outcome {
    let text = match (read_diagram(input)?, format) {
        (Diagram::Plat(p), Format::Ascii) => render::plat_ascii(&p),
        (Diagram::Plat(p), Format::Svg) => render::plat_svg(&p),
        (Diagram::Pd(k), Format::Ascii) => render::pd_ascii(&k),
        (Diagram::Pd(k), Format::Svg) => render::pd_svg(&k),
    };
    match output {
        Some(o) => run.write(o, &text),
        None => {
            out(&text);
            Ok(())
        }
    }
}

fn cmd_corpus(out_dir: Option<&Path>, run: &mut Run) -> Outcome {
    let entries = corpus();
    match out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
            for e in &entries {
                run.write(&dir.join(format!("{}.pd.json", e.name)), &pd_to_json(&e.diagram))?;
            }
        }
        None => {
            for e in &entries {
                let family = serde_json::to_value(e.family).expect("family serializes");
                outln(&format!(
                    "{:<18} {:<12} {:>3}",
                    e.name,
                    family.as_str().unwrap_or(""),
                    e.diagram.crossing_count()
                ));
            }
        }
    }
    Ok(())
}

fn cmd_step(step: StepName, input: &Path, t: u64) -> Outcome {
    let d = read_diagram(input)?;
    let value = match step {
        StepName::FlipSet => json!({ "flip_set": flip_set(&d.to_pd()?)? }),
        StepName::MakeAlternating => {
            let (out, flipped) = make_alternating(&d.to_pd()?, t)?;
            json!({ "flipped": flipped, "output": serde_json::from_str::<Value>(&pd_to_json(&out)).unwrap() })
        }
        StepName::RemoveNugatory => {
            let (out, dw, steps) = remove_nugatory(&d.to_pd()?)?;
            json!({
                "delta_writhe": dw,
                "steps": steps,
                "output": serde_json::from_str::<Value>(&pd_to_json(&out)).unwrap(),
            })
        }
        StepName::PrimeDecompose => {
            let parts = prime_decompose(&d.to_pd()?)?;
            let summands: Vec<Value> = parts
                .iter()
                .map(|s| {
                    json!({
                        "cut": [s.cut.0, s.cut.1],
                        "summand": serde_json::from_str::<Value>(&pd_to_json(&s.summand)).unwrap(),
                    })
                })
                .collect();
            json!({ "summands": summands })
        }
        StepName::Recognize => json!({ "special": recognize_special(&d.to_pd()?)? }),
        StepName::ToBraid => {
            let b = to_braid(&d.to_pd()?)?;
            let s = simplify_braid(&b)?;
            json!({ "braid": b, "simplified": s })
        }
        StepName::Standardize => {
            let p = match d {
                Diagram::Plat(p) => p,
                Diagram::Pd(k) => braid_to_plat(&to_braid(&k)?)?,
            };
            let (out, log) = standardize(&p)?;
            json!({
                "log": log,
                "output": serde_json::from_str::<Value>(&diagram_to_json(&Diagram::Plat(out))).unwrap(),
            })
        }
    };
    out(&pretty(&value));
    Ok(())
}

fn dispatch(command: &Command, run: &mut Run) -> Outcome {
    match command {
        Command::ReduceAlt(a) => cmd_reduce_alt(a, run),
        Command::ReducePlat(a) => cmd_reduce_plat(a, run),
        Command::Invariant { input, theory, pd } => cmd_invariant(input, theory, *pd),
        Command::Exponent { theory } => cmd_exponent(theory),
        Command::Certify { input } => cmd_certify(input),
        Command::Render { input, format, output } => cmd_render(input, *format, output.as_deref(), run),
        Command::Corpus { out_dir } => cmd_corpus(out_dir.as_deref(), run),
        Command::Step { step, input, t } => cmd_step(*step, input, *t),
        Command::Replay { manifest_file } => {
            let m: RunManifest = serde_json::from_str(&read(manifest_file)?)
                .map_err(|e| Failure::Core(Error::Parse(e.to_string())))?;
            let cli = Cli::try_parse_from(std::iter::once("knotpad".to_string()).chain(m.args))
                .map_err(|e| Failure::Core(Error::Parse(e.to_string())))?;
            dispatch(&cli.command, run)
        }
    }
}

fn describe(command: &Command) -> (String, Vec<String>, Option<String>, Vec<String>) {
    let p = |x: &PathBuf| x.display().to_string();
    match command {
        Command::ReduceAlt(a) | Command::ReducePlat(a) => {
            let name = if matches!(command, Command::ReduceAlt(_)) { "reduce-alt" } else { "reduce-plat" };
            let flags = if a.verify { vec!["--verify".to_string()] } else { Vec::new() };
            (name.into(), vec![p(&a.input)], Some(a.theory.clone()), flags)
        }
        Command::Invariant { input, theory, pd } => {
            let flags = if *pd { vec!["--pd".to_string()] } else { Vec::new() };
            ("invariant".into(), vec![p(input)], Some(theory.clone()), flags)
        }
        Command::Exponent { theory } => ("exponent".into(), Vec::new(), Some(theory.clone()), Vec::new()),
        Command::Certify { input } => ("certify".into(), vec![p(input)], None, Vec::new()),
        Command::Render { input, format, .. } => {
            ("render".into(), vec![p(input)], None, vec![format!("--format={format:?}").to_lowercase()])
        }
        Command::Corpus { .. } => ("corpus".into(), Vec::new(), None, Vec::new()),
        Command::Step { step, input, t } => (
            format!("step {step:?}").to_lowercase(),
            vec![p(input)],
            None,
            vec![format!("--t={t}")],
        ),
        Command::Replay { manifest_file } => ("replay".into(), vec![p(manifest_file)], None, Vec::new()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut run = Run::default();
    let result = dispatch(&cli.command, &mut run);
    let status = match &result {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    };
    if let Some(path) = &cli.manifest {
        let (command, inputs, theory, flags) = describe(&cli.command);
        let args: Vec<String> = std::env::args()
            .skip(1)
            .scan(false, |skip, a| {
                let keep = !*skip && a != "--manifest" && !a.starts_with("--manifest=");
                *skip = a == "--manifest";
                Some(keep.then_some(a))
            })
            .flatten()
            .collect();
        let m = RunManifest {
            command,
            args,
            inputs,
            theory,
            flags,
            outputs: run.outputs,
            exit_status: status,
            elapsed_ms: start.elapsed().as_millis(),
        };
        if let Err(e) = fs::write(path, pretty(&m)) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    ExitCode::from(status)
}
