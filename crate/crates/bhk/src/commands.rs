use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use bhk_core::duality::annihilator;
use bhk_core::exact_math::primes_up_to;
use bhk_core::groups::enumerate_intermediate;
use bhk_core::picard::{
    kelly_set_direct, kelly_set_from_orbits, orbit_decomposition, picard_closed_form, picard_kelly,
    picard_orbit, prime_scan,
};
use bhk_core::{BhkPair, MirrorPair, PicardReport};

use crate::error::{CliError, ExitStatus};
use crate::input::{parse_input, InputSpec};
use crate::report::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Closed,
    Kelly,
    Orbit,
    #[default]
    All,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed_form",
            Method::Kelly => "kelly",
            Method::Orbit => "orbit",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Validate,
    Analyze,
    Mirror,
    Subgroups,
    Picard(Method),
    Scan { primes_up_to: u64 },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Analyze => "analyze",
            Command::Mirror => "mirror",
            Command::Subgroups => "subgroups",
            Command::Picard(_) => "picard",
            Command::Scan { .. } => "scan",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub document: ReportDocument,
    pub status: ExitStatus,
}

impl Outcome {
    fn failed(mut document: ReportDocument, e: &CliError) -> Self {
        document.error = Some(ErrorSection {
            kind: e.kind().into(),
            message: e.to_string(),
        });
        Outcome {
            document,
            status: e.exit_status(),
        }
    }
}

/// Runs one command on a parsed input. Sections computed before a failure
/// stay in the document next to the error.
pub fn run_command(cmd: Command, spec: &InputSpec, source: Option<String>) -> Outcome {
    let mut doc = ReportDocument::new(cmd.name(), source, Some(spec.clone()));
    match fill(cmd, spec, &mut doc) {
        Ok(status) => Outcome {
            document: doc,
            status,
        },
        Err(e) => Outcome::failed(doc, &e),
    }
}

fn fill(cmd: Command, spec: &InputSpec, doc: &mut ReportDocument) -> Result<ExitStatus, CliError> {
    if cmd == Command::Validate {
        let pair = spec.resolve()?;
        let adequacy = AdequacySection::from(pair.adequacy());
        let ok = adequacy.verdict;
        doc.adequacy = Some(adequacy);
        return Ok(if ok {
            ExitStatus::Success
        } else {
            ExitStatus::Failure
        });
    }

    let m = spec.delsarte()?;
    doc.delsarte = Some(DelsarteSection::new(&m));
    if cmd == Command::Analyze {
        doc.atoms = atoms_section(&m).ok();
    }
    let pair = spec.resolve()?;
    doc.groups = Some(GroupsSection::new(&pair));
    doc.adequacy = Some(pair.adequacy().into());
    if cmd == Command::Analyze {
        return Ok(ExitStatus::Success);
    }
    if cmd == Command::Subgroups {
        doc.subgroups = Some(subgroups(&pair)?);
        return Ok(ExitStatus::Success);
    }

    let mp = pair.mirror_pair()?;
    match cmd {
        Command::Mirror => doc.mirror = Some(MirrorSection::new(&mp)),
        Command::Picard(method) => doc.picard = Some(picard(&mp, method)?),
        Command::Scan { primes_up_to: n } => {
            let table = prime_scan(&mp, &primes_up_to(n))?;
            doc.scan = Some(ScanSection::new(n, &table));
        }
        _ => unreachable!("handled above"),
    }
    Ok(ExitStatus::Success)
}

fn subgroups(pair: &BhkPair) -> Result<Vec<SubgroupEntry>, CliError> {
    let m = pair.matrix();
    let char = pair.characteristic();
    let t = m.transpose(char)?;
    let mut out = Vec::new();
    for g in enumerate_intermediate(pair.j(), pair.sl())? {
        let dual = BhkPair::new(t.clone(), annihilator(m, &g)?, char)?;
        out.push(SubgroupEntry::new(pair, &g, &dual));
    }
    Ok(out)
}

fn picard(mp: &MirrorPair, method: Method) -> Result<PicardSection, CliError> {
    let char = mp.primal.characteristic();
    let mut methods = BTreeMap::new();
    let (rho, dual_set, group_set) = match method {
        Method::All => {
            let r = PicardReport::compute(mp)?;
            methods.insert("closed_form".into(), r.methods.closed_form.into());
            methods.insert("kelly".into(), r.methods.kelly.into());
            methods.insert("orbit".into(), r.methods.orbit.into());
            (
                (r.rho_primal, r.rho_mirror),
                Some(aged(&r.kelly_set_dual_group)),
                Some(aged(&r.kelly_set_group)),
            )
        }
        Method::Closed => (picard_closed_form(mp)?, None, None),
        Method::Kelly => (
            picard_kelly(mp)?,
            Some(aged(&kelly_set_direct(mp.mirror.group(), char)?)),
            Some(aged(&kelly_set_direct(mp.primal.group(), char)?)),
        ),
        Method::Orbit => {
            let dual = kelly_set_from_orbits(&orbit_decomposition(mp.mirror.group(), char)?);
            let group = kelly_set_from_orbits(&orbit_decomposition(mp.primal.group(), char)?);
            (picard_orbit(mp)?, Some(aged(&dual)), Some(aged(&group)))
        }
    };
    if method != Method::All {
        methods.insert(method.name().into(), rho.into());
    }
    Ok(PicardSection {
        characteristic: char.get(),
        rho_primal: rho.0,
        rho_mirror: rho.1,
        provenance: method.name().into(),
        methods,
        kelly_set_dual_group: dual_set,
        kelly_set_group: group_set,
    })
}

fn source_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Reads, parses and runs one input file. The report's `source` is the file
/// name without its directory, so batch output does not depend on where the
/// directory lives.
pub fn run_file(cmd: Command, path: &Path) -> Outcome {
    let source = Some(source_name(path));
    let parsed = fs::read_to_string(path)
        .map_err(|e| CliError::Io {
            path: path.to_path_buf(),
            source: e,
        })
        .and_then(|text| parse_input(&text));
    match parsed {
        Ok(spec) => run_command(cmd, &spec, source),
        Err(e) => Outcome::failed(ReportDocument::new(cmd.name(), source, None), &e),
    }
}

/// The `*.json` files of `dir`, sorted by file name.
pub fn batch_inputs(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let io = |e| CliError::Io {
        path: dir.to_path_buf(),
        source: e,
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let path = entry.map_err(io)?.path();
        if path.is_file() && path.extension().is_some_and(|x| x == "json") {
            files.push(path);
        }
    }
    files.sort_by_key(|p| p.file_name().map(|n| n.to_os_string()));
    Ok(files)
}

/// `picard --method all` on every input in `dir`, continuing past failures.
pub fn run_batch(dir: &Path) -> Result<Vec<Outcome>, CliError> {
    Ok(batch_inputs(dir)?
        .iter()
        .map(|p| run_file(Command::Picard(Method::All), p))
        .collect())
}

/// Worst status of a run.
pub fn overall_status(outcomes: &[Outcome]) -> ExitStatus {
    outcomes
        .iter()
        .map(|o| o.status)
        .max()
        .unwrap_or(ExitStatus::Success)
}
