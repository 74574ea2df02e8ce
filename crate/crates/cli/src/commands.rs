use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use lagbox::chaos::{bifurcation_scan, fixed_points, lyapunov_sweep, write_trace_csv, Generator, GeneratorConfig};
use lagbox::criteria::{compare_csv, compare_text, full_report_with, write_csv_dir, CompareRow};
use lagbox::imaging::{histogram, read_pgm, substitute_with, unsubstitute_with, write_pgm};
use lagbox::sbox::{format_fixture, generate, generate_family, load_mapping};
use lagbox::{Error, Exec};

use crate::{AnalyzeArgs, CompareArgs, CompareFormat, DynamicsArgs, DynamicsMode, GenArgs, ImageArgs, ReportFormat, TraceArgs};

pub const EXIT_IO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PARSE: u8 = 3;
pub const EXIT_EXHAUSTED: u8 = 4;
pub const EXIT_STRICT: u8 = 5;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Failure { code: EXIT_IO, message: message.into() }
    }

    pub fn context(mut self, ctx: &str) -> Self {
        self.message = format!("{ctx}: {}", self.message);
        self
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain { .. }
            | Error::InvalidParameter(_)
            | Error::InvalidConfig(_)
            | Error::IndexOutOfRange { .. }
            | Error::FamilyTooSmall { .. } => EXIT_USAGE,
            Error::Parse(_) | Error::Format(_) | Error::NotBijective { .. } => EXIT_PARSE,
            Error::Exhausted { .. } => EXIT_EXHAUSTED,
            Error::NotWarm { .. } | Error::Io(_) => EXIT_IO,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::io(e.to_string())
    }
}

fn in_file<T>(path: &Path, r: lagbox::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::from(e).context(&path.display().to_string()))
}

/// Writes `text` to `out`, or to stdout when no path is given.
fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::io(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn provenance(cfg: &GeneratorConfig, n: u32, count: usize, bits_consumed: u64, offsets: &[u64]) -> String {
    let offsets: Vec<String> = offsets.iter().map(u64::to_string).collect();
    format!(
        "# n = {n}\n# count = {count}\n# bits_consumed = {bits_consumed}\n# offsets = {}\n{}",
        offsets.join(","),
        cfg.to_kv_string()
    )
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".provenance");
    PathBuf::from(name)
}

pub fn gen(a: GenArgs) -> Result<(), Failure> {
    let cfg = a.config.resolve()?;
    if a.count == 1 {
        let g = generate(&cfg, a.n, a.max_bits)?;
        let text = format_fixture(&g.sbox);
        match &a.out {
            Some(path) => {
                emit(Some(path), &text)?;
                emit(Some(&sidecar_path(path)), &provenance(&cfg, a.n, 1, g.bits_consumed, &[0]))?;
            }
            None => emit(None, &text)?,
        }
        return Ok(());
    }

    let dir = a.out.ok_or_else(|| Failure::usage("--count > 1 needs --out <directory>"))?;
    if a.max_bits.is_some() {
        return Err(Failure::usage("--max-bits applies to single S-boxes only"));
    }
    let count = usize::try_from(a.count).map_err(|_| Failure::usage("--count too large"))?;
    let family = generate_family(&cfg, a.n, count)?;
    fs::create_dir_all(&dir).map_err(|e| Failure::io(format!("{}: {e}", dir.display())))?;
    let digits = (count - 1).to_string().len().max(4);
    for (i, s) in family.members.iter().enumerate() {
        emit(Some(&dir.join(format!("sbox_{i:0digits$}.sbox"))), &format_fixture(s))?;
    }
    let text = provenance(&cfg, a.n, count, family.bits_consumed, &family.offsets);
    emit(Some(&dir.join("provenance.txt")), &text)
}

pub fn analyze(a: AnalyzeArgs, exec: Exec) -> Result<(), Failure> {
    let sbox = in_file(&a.input, load_mapping(&a.input))?;
    let report = full_report_with(&sbox, exec);
    match a.format {
        ReportFormat::Text => emit(a.out.as_deref(), &report.to_text())?,
        ReportFormat::Json => emit(a.out.as_deref(), &(report.to_json() + "\n"))?,
        ReportFormat::CsvDir => {
            let dir = a.out.as_deref().ok_or_else(|| Failure::usage("--format csv-dir needs --out <directory>"))?;
            in_file(dir, write_csv_dir(&report, dir))?;
        }
    }
    if a.strict && !report.bijective {
        return Err(Failure {
            code: EXIT_STRICT,
            message: format!("{}: not a bijection", a.input.display()),
        });
    }
    Ok(())
}

fn display_name(path: &Path) -> String {
    path.file_stem().unwrap_or(path.as_os_str()).to_string_lossy().into_owned()
}

pub fn compare(a: CompareArgs, exec: Exec) -> Result<(), Failure> {
    let mut rows = Vec::new();
    let mut failed = 0;
    for path in &a.inputs {
        match load_mapping(path) {
            Ok(s) => rows.push(CompareRow::from_report(display_name(path), &full_report_with(&s, exec))),
            Err(e) => {
                eprintln!("lagbox: {}: {e}", path.display());
                failed += 1;
            }
        }
    }
    if !rows.is_empty() {
        let text = match a.format {
            CompareFormat::Text => compare_text(&rows),
            CompareFormat::Csv => compare_csv(&rows),
            CompareFormat::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        };
        emit(a.out.as_deref(), &text)?;
    }
    if failed > 0 {
        return Err(Failure {
            code: EXIT_PARSE,
            message: format!("{failed} of {} inputs could not be read", a.inputs.len()),
        });
    }
    Ok(())
}

pub fn trace(a: TraceArgs) -> Result<(), Failure> {
    let cfg = a.config.resolve()?;
    let mut g = Generator::new(&cfg)?;
    let rows = (0..a.samples).map(|_| g.next_sample());
    match &a.out {
        Some(p) => {
            let f = fs::File::create(p).map_err(|e| Failure::io(format!("{}: {e}", p.display())))?;
            write_trace_csv(BufWriter::new(f), rows)?;
        }
        None => write_trace_csv(BufWriter::new(io::stdout().lock()), rows)?,
    }
    Ok(())
}

fn parameter_grid(a: &DynamicsArgs) -> Result<Vec<f64>, Failure> {
    let (lo, hi, steps) = match a.alpha {
        Some(alpha) => (alpha, alpha, 1),
        None => (a.alpha_min, a.alpha_max, a.steps),
    };
    if !(-2.0..=4.0).contains(&lo) || !(-2.0..=4.0).contains(&hi) || lo > hi {
        return Err(Failure::usage(format!("alpha range [{lo}, {hi}] not within [-2, 4]")));
    }
    if steps == 0 {
        return Err(Failure::usage("--steps must be at least 1"));
    }
    Ok((0..steps)
        .map(|k| if steps == 1 { lo } else { lo + (hi - lo) * k as f64 / (steps - 1) as f64 })
        .collect())
}

pub fn dynamics(a: DynamicsArgs, exec: Exec) -> Result<(), Failure> {
    let mut text = String::new();
    match a.mode {
        DynamicsMode::Lyapunov => {
            let alphas = parameter_grid(&a)?;
            text.push_str("alpha,lambda\n");
            for (alpha, l) in lyapunov_sweep(&alphas, a.x0, a.iterations, a.transient, exec)? {
                text += &format!("{alpha},{l}\n");
            }
        }
        DynamicsMode::Bifurcation => {
            let alphas = parameter_grid(&a)?;
            let (lo, hi) = (alphas[0], alphas[alphas.len() - 1]);
            text.push_str("alpha,x\n");
            for slice in bifurcation_scan(lo, hi, alphas.len(), a.transient, a.keep, exec)? {
                for x in slice.samples {
                    text += &format!("{},{x}\n", slice.alpha);
                }
            }
        }
        DynamicsMode::FixedPoints => {
            let alpha = a.alpha.ok_or_else(|| Failure::usage("--mode fixed-points needs --alpha"))?;
            parameter_grid(&a)?;
            let points: Vec<String> =
                fixed_points(alpha).iter().map(|p| format!("{},{}", p.value, p.stability)).collect();
            text = points.join(";") + "\n";
        }
    }
    emit(a.out.as_deref(), &text)
}

pub fn image(a: ImageArgs, exec: Exec) -> Result<(), Failure> {
    let cfg = a.config.resolve()?;
    let img = in_file(&a.input, read_pgm(&a.input))?;
    if img.height() == 0 {
        return Err(Failure { code: EXIT_PARSE, message: format!("{}: empty image", a.input.display()) });
    }
    let family = generate_family(&cfg, 8, img.height())?;
    let out = if a.decrypt {
        unsubstitute_with(&img, &family.members, exec)?
    } else {
        substitute_with(&img, &family.members, exec)?
    };
    in_file(&a.out, write_pgm(&out, &a.out))?;
    if let Some(p) = &a.hist_in {
        emit(Some(p), &histogram(&img).to_csv())?;
    }
    if let Some(p) = &a.hist {
        emit(Some(p), &histogram(&out).to_csv())?;
    }
    Ok(())
}
