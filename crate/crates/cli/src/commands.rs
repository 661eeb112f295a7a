use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use summand::props::{Property, SspMethod};
use summand::{Caps, Side};

use crate::checks::{refails, verdict, verify_ring, ALL_PROPERTIES};
use crate::descriptor::load_source;
use crate::error::InputError;
use crate::fixtures::{self, FIXTURES};
use crate::report::{Report, RingSummary, VerdictView};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

/// Decide summand properties of finite rings.
///
/// A <SOURCE> is a fixture name, a path to a JSON descriptor, or an inline
/// descriptor starting with `{`. Exit status: 0 when everything requested
/// holds, 1 when a property or check fails, 2 on invalid input or when a
/// cap prevents an answer.
#[derive(Debug, Parser)]
#[command(name = "summand", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Largest ring or module carrier to build.
    #[arg(long, global = true, value_parser = positive)]
    pub cap_size: Option<usize>,
    /// Largest carrier whose ideals or submodules are enumerated.
    #[arg(long, global = true, value_parser = positive)]
    pub cap_ideals: Option<usize>,
    /// Most candidate generator images tried while enumerating homomorphisms.
    #[arg(long, global = true, value_parser = positive)]
    pub cap_hom: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide the requested properties.
    Check {
        source: String,
        /// Comma-separated; all properties when omitted.
        #[arg(long, value_enum, value_delimiter = ',')]
        props: Vec<Prop>,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
        /// Which SSP criterion to run.
        #[arg(long, value_enum, default_value_t = MethodArg::Definitional)]
        method: MethodArg,
    },
    /// Run every structural cross-check on the ring and on free modules over it.
    Verify { source: String },
    /// List the shipped fixtures or check one against its expected values.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum FixtureAction {
    List,
    Run { name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Prop {
    Ssp,
    Sip,
    C2,
    C3,
    Regular,
    Abelian,
    Semisimple,
}

impl From<Prop> for Property {
    fn from(p: Prop) -> Self {
        match p {
            Prop::Ssp => Property::Ssp,
            Prop::Sip => Property::Sip,
            Prop::C2 => Property::C2,
            Prop::C3 => Property::C3,
            Prop::Regular => Property::Regular,
            Prop::Abelian => Property::Abelian,
            Prop::Semisimple => Property::Semisimple,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
    Both,
}

impl SideArg {
    fn sides(self) -> &'static [Side] {
        match self {
            SideArg::Left => &[Side::Left],
            SideArg::Right => &[Side::Right],
            SideArg::Both => &Side::BOTH,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Definitional,
    Ef,
    Both,
}

impl MethodArg {
    fn methods(self) -> &'static [SspMethod] {
        match self {
            MethodArg::Definitional => &[SspMethod::Definitional],
            MethodArg::Ef => &[SspMethod::EfCriterion],
            MethodArg::Both => &[SspMethod::Definitional, SspMethod::EfCriterion],
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Cli {
    pub fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            size: self.cap_size.unwrap_or(d.size),
            ideals: self.cap_ideals.unwrap_or(d.ideals),
            hom: self.cap_hom.unwrap_or(d.hom),
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let caps = cli.caps();
    // `check` fails when a requested property fails; the other commands
    // fail only on a failed check, whatever the verdicts.
    let by_verdicts = matches!(cli.command, Command::Check { .. });
    let result = match &cli.command {
        Command::Check {
            source,
            props,
            side,
            method,
        } => check(source, props, *side, *method, &caps),
        Command::Verify { source } => verify(source, &caps),
        Command::Fixtures { action: FixtureAction::List } => return list(cli.format),
        Command::Fixtures {
            action: FixtureAction::Run { name },
        } => fixtures::find(name)
            .ok_or_else(|| InputError::UnknownFixture(name.clone()))
            .and_then(|f| fixtures::run_fixture(f, &caps)),
    };
    match result {
        Ok(report) => Outcome {
            code: match (by_verdicts, report.verdicts_hold(), report.checks_passed()) {
                (true, true, _) | (false, _, true) => EXIT_PASS,
                _ => EXIT_FAIL,
            },
            stdout: match cli.format {
                Format::Json => report.to_json(),
                Format::Md => report.to_markdown(),
            },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn check(source: &str, props: &[Prop], side: SideArg, method: MethodArg, caps: &Caps) -> Result<Report, InputError> {
    let loaded = load_source(source, caps)?;
    let ring = &loaded.ring;
    let mut report = Report::new(RingSummary::new(&loaded.source, ring), *caps);
    let requested: Vec<Property> = if props.is_empty() {
        ALL_PROPERTIES.to_vec()
    } else {
        let wanted: Vec<Property> = props.iter().map(|&p| p.into()).collect();
        ALL_PROPERTIES.into_iter().filter(|p| wanted.contains(p)).collect()
    };
    for property in requested {
        let sides: &[Side] = if property.is_sided() { side.sides() } else { &[Side::Right] };
        let methods: &[SspMethod] = if property == Property::Ssp {
            method.methods()
        } else {
            &[SspMethod::Definitional]
        };
        for &s in sides {
            for &m in methods {
                let start = Instant::now();
                let v = verdict(ring, property, s, m, caps)?;
                let again = refails(ring, &v, caps)?;
                let mut step = property.as_str().to_string();
                if property.is_sided() {
                    step = format!("{step}/{s}");
                }
                if property == Property::Ssp {
                    step.push_str(if m == SspMethod::Definitional { "/definitional" } else { "/ef" });
                }
                report.time(step, start.elapsed());
                report.verdicts.push(VerdictView::new(ring, &v, again));
            }
        }
    }
    Ok(report)
}

pub fn verify(source: &str, caps: &Caps) -> Result<Report, InputError> {
    let loaded = load_source(source, caps)?;
    let mut report = Report::new(RingSummary::new(&loaded.source, &loaded.ring), *caps);
    let start = Instant::now();
    let (rings, modules) = verify_ring(&loaded.ring, caps);
    report.time("suites", start.elapsed());
    report.theorems = rings.checks;
    report.theorems.extend(modules.checks);
    Ok(report)
}

fn list(format: Format) -> Outcome {
    let stdout = match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = FIXTURES
                .iter()
                .map(|f| serde_json::json!({ "name": f.name, "expected": f.summary }))
                .collect();
            serde_json::to_string_pretty(&rows).expect("fixture list serializes") + "\n"
        }
        Format::Md => FIXTURES.iter().map(|f| format!("{:<16} {}\n", f.name, f.summary)).collect(),
    };
    Outcome {
        code: EXIT_PASS,
        stdout,
        stderr: String::new(),
    }
}
