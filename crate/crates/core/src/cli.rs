//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::chains::{chain_form, chain_form_json, improved_chain_form, improved_chain_form_with, ChainOptions};
use crate::error::Error;
use crate::pencil::{
    eval_determinant_check, eval_determinant_check_with, pencil_from_json, pencil_to_json, pencil_to_latex,
    pencil_to_text, symbolic_determinant, Execution, Form, PencilMatrix,
};
use crate::poly::{parse_coeff_polynomial, parse_polynomial, to_text, CoeffPolynomial, ParsedPolynomial, Polynomial};
use crate::represent::{lift_coefficients, ndr, rdr, tdr, udr_with, zero_pencil, CarrierRule, UdrMatrix, UdrOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

/// Largest dimension verified symbolically under `--verify auto`.
const AUTO_SYMBOLIC_MAX: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TargetForm {
    Ndr,
    Tdr,
    Rdr,
    Udr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChainChoice {
    Plain,
    Improved,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Auto,
    Symbolic,
    Eval,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CarrierChoice {
    Lowest,
    Shared,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    Stdin,
    Path(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub input: InputSource,
    pub form: TargetForm,
    /// `None` means the default, improved.
    pub chain: Option<ChainChoice>,
    pub verify: VerifyMode,
    pub trials: usize,
    pub seed: u64,
    pub output: OutputFormat,
    pub dump_chain: bool,
    pub vars: Option<Vec<String>>,
    pub carrier: CarrierChoice,
    /// Verify this matrix document instead of constructing one.
    pub check: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            input: InputSource::Stdin,
            form: TargetForm::Rdr,
            chain: None,
            verify: VerifyMode::Auto,
            trials: 20,
            seed: 0,
            output: OutputFormat::Text,
            dump_chain: false,
            vars: None,
            carrier: CarrierChoice::Lowest,
            check: None,
        }
    }
}

/// Build a determinantal representation of a polynomial and verify it.
#[derive(Parser, Debug)]
#[command(name = "detrep", version)]
pub struct Args {
    /// Polynomial source file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = TargetForm::Rdr)]
    form: TargetForm,
    /// Chain-form used for the construction [default: improved]
    #[arg(long, value_enum)]
    chain: Option<ChainChoice>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// auto: symbolic up to 9x9, evaluation above.
    #[arg(long, value_enum, default_value_t = VerifyMode::Auto)]
    verify: VerifyMode,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Seed for evaluation points [default: $DETREP_SEED or 0]
    #[arg(long)]
    seed: Option<u64>,
    /// Print the chain-form as JSON on stderr.
    #[arg(long)]
    dump_chain: bool,
    /// Comma-separated variable order (default: order of appearance).
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Variable that absorbs each lifted coefficient.
    #[arg(long, value_enum, default_value_t = CarrierChoice::Lowest)]
    carrier: CarrierChoice,
    /// Verify an emitted JSON matrix against the input instead of building one.
    #[arg(long)]
    check: Option<PathBuf>,
}

impl Args {
    pub fn into_config(self, env_seed: Option<&str>) -> Result<RunConfig, String> {
        let seed = match (self.seed, env_seed) {
            (Some(s), _) => s,
            (None, Some(s)) => s.trim().parse().map_err(|_| format!("DETREP_SEED is not an integer: `{s}`"))?,
            (None, None) => 0,
        };
        Ok(RunConfig {
            input: if self.input == "-" {
                InputSource::Stdin
            } else {
                InputSource::Path(self.input.into())
            },
            form: self.form,
            chain: self.chain,
            verify: self.verify,
            trials: self.trials,
            seed,
            output: self.output,
            dump_chain: self.dump_chain,
            vars: self.vars,
            carrier: self.carrier,
            check: self.check,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses arguments, reads the input and runs.
pub fn main_with<I, T>(args: I, env_seed: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let config = match args.into_config(env_seed) {
        Ok(c) => c,
        Err(msg) => return Outcome::fail(EXIT_INPUT, msg),
    };
    let text = match &config.input {
        InputSource::Stdin => std::io::read_to_string(std::io::stdin()),
        InputSource::Path(p) => std::fs::read_to_string(p),
    };
    match text {
        Ok(t) => run(&config, &t),
        Err(e) => Outcome::fail(EXIT_INPUT, format!("cannot read input: {e}")),
    }
}

/// Either shape of constructed matrix.
enum Artifact {
    Integer(PencilMatrix),
    Symbolic(UdrMatrix),
}

impl Artifact {
    fn n(&self) -> usize {
        match self {
            Artifact::Integer(m) => m.n(),
            Artifact::Symbolic(m) => m.n(),
        }
    }

    fn render(&self, format: OutputFormat, names: &[String]) -> String {
        match (self, format) {
            (Artifact::Integer(m), OutputFormat::Text) => pencil_to_text(m, names),
            (Artifact::Integer(m), OutputFormat::Json) => pencil_to_json(m, names) + "\n",
            (Artifact::Integer(m), OutputFormat::Latex) => pencil_to_latex(m, names),
            (Artifact::Symbolic(m), OutputFormat::Text) => m.to_text(),
            (Artifact::Symbolic(m), OutputFormat::Json) => m.to_json() + "\n",
            (Artifact::Symbolic(m), OutputFormat::Latex) => m.to_latex(),
        }
    }

    fn form(&self) -> Form {
        match self {
            Artifact::Integer(m) => m.form(),
            Artifact::Symbolic(_) => Form::Udr,
        }
    }

    /// `(passed, method)`, or `None` when skipped.
    fn verify(&self, target: &Polynomial, config: &RunConfig) -> Option<(bool, &'static str)> {
        let symbolic = match config.verify {
            VerifyMode::None => return None,
            VerifyMode::Symbolic => true,
            VerifyMode::Eval => false,
            VerifyMode::Auto => self.n() <= AUTO_SYMBOLIC_MAX,
        };
        let ok = match (self, symbolic) {
            (Artifact::Integer(m), true) => symbolic_determinant(m) == *target,
            (Artifact::Symbolic(m), true) => m.determinant() == *target,
            (Artifact::Integer(m), false) => eval_determinant_check(m, target, config.trials, config.seed),
            (Artifact::Symbolic(m), false) => {
                eval_determinant_check_with(m, target, config.trials, config.seed, Execution::default())
            }
        };
        Some((ok, if symbolic { "symbolic" } else { "eval" }))
    }
}

fn carrier_rule(c: CarrierChoice) -> CarrierRule {
    match c {
        CarrierChoice::Lowest => CarrierRule::LowestIndex,
        CarrierChoice::Shared => CarrierRule::SharedRest,
    }
}

fn build_integer(p: &ParsedPolynomial, config: &RunConfig, diag: &mut String) -> Result<PencilMatrix, Error> {
    let k = p.poly.nvars();
    if p.poly.is_zero() {
        let form = match config.form {
            TargetForm::Ndr => Form::Ndr,
            TargetForm::Tdr => Form::Tdr,
            TargetForm::Rdr => Form::Rdr,
            TargetForm::Udr => Form::Udr,
        };
        return Ok(zero_pencil(k, form));
    }
    let cf = match config.chain.unwrap_or(ChainChoice::Improved) {
        ChainChoice::Plain => chain_form(&p.poly)?,
        ChainChoice::Improved => improved_chain_form(&p.poly)?,
    };
    if config.dump_chain {
        let _ = writeln!(diag, "{}", chain_form_json(&cf, &p.vars));
    }
    let n = ndr(&cf)?;
    if config.form == TargetForm::Ndr {
        return Ok(n);
    }
    let t = tdr(&n)?;
    if config.form == TargetForm::Tdr {
        return Ok(t);
    }
    rdr(&t)
}

fn build_uniform(p: &CoeffPolynomial, config: &RunConfig, diag: &mut String) -> Result<Artifact, Error> {
    let opts = UdrOptions {
        carrier: carrier_rule(config.carrier),
    };
    if config.dump_chain {
        let (lifted, record) = lift_coefficients(p, opts.carrier)?;
        if !lifted.is_zero() {
            let copts = ChainOptions {
                divide_first: (p.nvars()..record.lifted_nvars()).collect(),
            };
            let cf = improved_chain_form_with(&lifted, &copts)?;
            let mut names = p.vars().to_vec();
            names.extend((p.nvars()..record.lifted_nvars()).map(|v| format!("y{}", v - p.nvars() + 1)));
            let _ = writeln!(diag, "{}", chain_form_json(&cf, &names));
        }
    }
    let m = udr_with(p, opts)?.matrix;
    Ok(match m.to_pencil() {
        Some(pencil) => Artifact::Integer(pencil),
        None => Artifact::Symbolic(m),
    })
}

/// Runs one configuration on already-read input text.
pub fn run(config: &RunConfig, input: &str) -> Outcome {
    if config.trials == 0 && config.verify != VerifyMode::None {
        return Outcome::fail(EXIT_INPUT, "--trials must be at least 1");
    }
    let order = config.vars.as_deref();
    let symbolic_input = input.contains('[');
    if symbolic_input && config.form != TargetForm::Udr {
        return Outcome::fail(EXIT_UNSUPPORTED, "named coefficients need --form udr");
    }
    if config.form == TargetForm::Udr && config.chain == Some(ChainChoice::Plain) {
        return Outcome::fail(EXIT_UNSUPPORTED, "--form udr always uses the improved chain-form");
    }

    let mut diag = String::new();
    let (target, names, built) = if config.form == TargetForm::Udr {
        let p = match parse_coeff_polynomial(input, order) {
            Ok(p) => p,
            Err(e) => return Outcome::fail(EXIT_INPUT, e),
        };
        let names = p.vars().to_vec();
        (p.to_polynomial(), names.clone(), (config.check.is_none()).then(|| build_uniform(&p, config, &mut diag)))
    } else {
        let p = match parse_polynomial(input, order) {
            Ok(p) => p,
            Err(e) => return Outcome::fail(EXIT_INPUT, e),
        };
        let built = (config.check.is_none()).then(|| build_integer(&p, config, &mut diag).map(Artifact::Integer));
        (p.poly.clone(), p.vars.clone(), built)
    };

    let artifact = match built {
        Some(Ok(a)) => a,
        Some(Err(e)) => return Outcome::fail(EXIT_UNSUPPORTED, e),
        None => match load_check(config, &names) {
            Ok(a) => a,
            Err(msg) => return Outcome::fail(EXIT_INPUT, msg),
        },
    };

    let mut stdout = artifact.render(config.output, &names);
    let verdict = artifact.verify(&target, config);
    let all_names: Vec<String> = match &artifact {
        Artifact::Symbolic(m) => m.vars().iter().cloned().chain(m.params().iter().map(|p| format!("[{p}]"))).collect(),
        Artifact::Integer(_) => names.clone(),
    };
    let _ = writeln!(diag, "polynomial: {}", to_text(&target, &all_names));
    let _ = writeln!(diag, "form: {}", artifact.form());
    let _ = writeln!(diag, "dimension: {}", artifact.n());
    let code = match verdict {
        None => {
            diag.push_str("verified: skipped\n");
            EXIT_OK
        }
        Some((true, how)) => {
            let _ = writeln!(diag, "verified: yes ({how})");
            EXIT_OK
        }
        Some((false, how)) => {
            let _ = writeln!(diag, "verified: no ({how})");
            EXIT_VERIFY
        }
    };
    if config.check.is_some() {
        stdout.clear();
    }
    Outcome {
        code,
        stdout,
        stderr: diag,
    }
}

fn load_check(config: &RunConfig, names: &[String]) -> Result<Artifact, String> {
    let path = config.check.as_ref().expect("check path set");
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc: serde_json::Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if doc.get("params").is_some() {
        let m = UdrMatrix::from_json(&text).map_err(|e| e.to_string())?;
        if m.vars() != names {
            return Err("matrix variables differ from the input's".into());
        }
        return Ok(Artifact::Symbolic(m));
    }
    let (m, vars) = pencil_from_json(&text).map_err(|e| e.to_string())?;
    if vars.len() < names.len() || vars[..names.len()] != *names {
        return Err("matrix variables differ from the input's".into());
    }
    Ok(Artifact::Integer(m))
}
