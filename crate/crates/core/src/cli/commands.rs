use std::fmt::Debug;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::cli::{
    Command, CorrelateArgs, DemoArgs, GenerateArgs, ParamArgs, SourceArgs, SweepArgs, VerifyArgs, EXIT_FAIL,
    EXIT_PASS, OUT_DIR_ENV,
};
use crate::construction::{build_code_set, CodeSet, Preset, PresetArgs, RawParams};
use crate::correlation::{fft_flock_profile, flock_profile, format_sig9, CorrelationProfile, ZoneAnnotation};
use crate::verification::sweep::{run_sweep, SweepConfig};
use crate::verification::{check_optimality, SetKind, Verifier};

type CmdResult = Result<i32, String>;

pub(crate) fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    match command {
        Command::Generate(a) => generate(a, stdout, stderr),
        Command::Verify(a) => verify(a, stdout, stderr),
        Command::Correlate(a) => correlate(a, stdout, stderr),
        Command::Sweep(a) => sweep(a, stdout, stderr),
        Command::Demo(a) => demo(a, stdout, stderr),
    }
}

/// `$SZCCS_OUT_DIR` if set and non-empty, else `./szccs-out`.
pub fn default_out_dir() -> PathBuf {
    std::env::var_os(OUT_DIR_ENV)
        .filter(|v| !v.is_empty())
        .map_or_else(|| PathBuf::from("szccs-out"), PathBuf::from)
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), String> {
    match out {
        Some(path) => write_file(path, text),
        None => stdout.write_all(text.as_bytes()).map_err(|e| format!("cannot write output: {e}")),
    }
}

fn parse_list<T: std::str::FromStr>(what: &str, s: &str) -> Result<Vec<T>, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("{what}: cannot parse {t:?} in {s:?}")))
        .collect()
}

/// File-side counterpart of [`ParamArgs`].
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamFile {
    preset: Option<Preset>,
    p: Option<u32>,
    q: Option<u32>,
    m: Option<usize>,
    delta: Option<usize>,
    k: Option<usize>,
    partition: Option<Vec<Vec<usize>>>,
    perms: Option<Vec<Vec<usize>>>,
    lambdas: Option<Vec<u32>>,
    allow_large: Option<bool>,
}

/// Prefers the file value and warns when it overrides a different flag value.
fn merge<T: PartialEq + Debug>(name: &str, flag: Option<T>, file: Option<T>, stderr: &mut dyn Write) -> Option<T> {
    match (flag, file) {
        (Some(a), Some(b)) => {
            if a != b {
                let _ = writeln!(stderr, "warning: config file sets {name} = {b:?}, overriding flag value {a:?}");
            }
            Some(b)
        }
        (a, b) => b.or(a),
    }
}

fn flag_params(args: &ParamArgs) -> Result<ParamFile, String> {
    let lists = |what: &str, v: &[String]| -> Result<Option<Vec<Vec<usize>>>, String> {
        if v.is_empty() {
            return Ok(None);
        }
        v.iter().map(|s| parse_list(what, s)).collect::<Result<Vec<_>, _>>().map(Some)
    };
    Ok(ParamFile {
        preset: args.preset,
        p: args.p,
        q: args.q,
        m: args.m,
        delta: args.delta,
        k: args.k,
        partition: lists("--partition", &args.partition)?,
        perms: lists("--perm", &args.perm)?,
        lambdas: args.lambda.as_deref().map(|s| parse_list("--lambda", s)).transpose()?,
        allow_large: args.allow_large.then_some(true),
    })
}

fn resolve_params(args: &ParamArgs, config: Option<&Path>, stderr: &mut dyn Write) -> Result<RawParams, String> {
    let flags = flag_params(args)?;
    let file: ParamFile = match config {
        Some(path) => serde_json::from_str(&read(path)?).map_err(|e| format!("config {}: {e}", path.display()))?,
        None => ParamFile::default(),
    };
    let s = ParamFile {
        preset: merge("preset", flags.preset, file.preset, stderr),
        p: merge("p", flags.p, file.p, stderr),
        q: merge("q", flags.q, file.q, stderr),
        m: merge("m", flags.m, file.m, stderr),
        delta: merge("delta", flags.delta, file.delta, stderr),
        k: merge("k", flags.k, file.k, stderr),
        partition: merge("partition", flags.partition, file.partition, stderr),
        perms: merge("perms", flags.perms, file.perms, stderr),
        lambdas: merge("lambdas", flags.lambdas, file.lambdas, stderr),
        allow_large: merge("allow_large", flags.allow_large, file.allow_large, stderr),
    };
    let allow_large = s.allow_large.unwrap_or(false);
    match s.preset {
        Some(preset) => {
            if s.partition.is_some() || s.perms.is_some() {
                return Err(format!("preset {preset} fixes the partition and permutations"));
            }
            let pa = PresetArgs { p: s.p, q: s.q, m: s.m, delta: s.delta, k: s.k };
            let mut raw = preset.raw(&pa).map_err(|e| e.to_string())?;
            if s.lambdas.is_some() {
                raw.lambdas = s.lambdas;
            }
            raw.allow_large |= allow_large;
            Ok(raw)
        }
        None => {
            if s.k.is_some() {
                return Err("k only applies to presets; give the partition instead".into());
            }
            Ok(RawParams {
                p: s.p.ok_or("p is required (or use a preset)")?,
                q: s.q,
                m: s.m.ok_or("m is required (or use a preset)")?,
                delta: s.delta.unwrap_or(0),
                partition: s.partition.ok_or("partition is required (or use a preset)")?,
                perms: s.perms,
                lambdas: s.lambdas,
                allow_large,
            })
        }
    }
}

fn build(raw: &RawParams) -> Result<CodeSet, String> {
    let params = raw.validate().map_err(|e| e.to_string())?;
    build_code_set(&params).map_err(|e| e.to_string())
}

fn load(source: &SourceArgs, stderr: &mut dyn Write) -> Result<CodeSet, String> {
    match &source.input {
        Some(path) => CodeSet::from_json(&read(path)?).map_err(|e| format!("{}: {e}", path.display())),
        None => build(&resolve_params(&source.params, None, stderr)?),
    }
}

/// `(K,M,N,Z) SZCCS, optimal`, or `(K,M,N) CCC, optimal` for `δ = 0`.
pub(crate) fn summary_line(set: &CodeSet) -> String {
    let c = set.claim();
    let (_, _, delta) = set.header();
    let (shape, kind, optimal) = if delta == Some(0) {
        let opt = check_optimality(c.set_size, c.flock_size, c.len, c.len, SetKind::Ccc);
        (format!("({},{},{})", c.set_size, c.flock_size, c.len), "CCC", opt)
    } else {
        let opt = check_optimality(c.set_size, c.flock_size, c.len, c.zcz, SetKind::Szccs);
        (format!("({},{},{},{})", c.set_size, c.flock_size, c.len, c.zcz), "SZCCS", opt)
    };
    format!("{shape} {kind}, {}", if optimal { "optimal" } else { "not optimal" })
}

fn generate(args: GenerateArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let raw = resolve_params(&args.params, args.config.as_deref(), stderr)?;
    let set = build(&raw)?;
    emit(args.out.as_deref(), &set.to_canonical_json(), stdout)?;
    let line = summary_line(&set);
    if args.out.is_some() {
        let _ = writeln!(stdout, "{line}");
    } else {
        let _ = writeln!(stderr, "{line}");
    }
    Ok(EXIT_PASS)
}

fn verify(args: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let set = load(&args.source, stderr)?;
    let (_, _, n) = set.shape();
    let z = args.z.unwrap_or(match args.kind {
        SetKind::Ccc => n,
        _ => set.claim().zcz,
    });
    let report = Verifier::new(&set).verify(args.kind, z).map_err(|e| e.to_string())?;
    emit(args.report.as_deref(), &report.to_json(), stdout)?;
    let verdict = if report.holds { "pass" } else { "fail" };
    let _ = writeln!(
        stderr,
        "{} at Z={z}: {verdict} ({} violations)",
        args.kind.name().to_uppercase(),
        report.violation_count
    );
    Ok(if report.holds { EXIT_PASS } else { EXIT_FAIL })
}

/// Flock correlation profile of codes `e` and `f` as CSV.
pub(crate) fn profile_csv(set: &CodeSet, e: usize, f: usize, float: bool, annotate: bool) -> Result<String, String> {
    let (k, m, n) = set.shape();
    for (name, idx) in [("e", e), ("f", f)] {
        if idx >= k {
            return Err(format!("code index {name} = {idx} out of range for K = {k}"));
        }
    }
    let (c, d) = (&set.codes()[e], &set.codes()[f]);
    let profile: CorrelationProfile =
        if float { fft_flock_profile(c, d) } else { flock_profile(c, d) }.map_err(|err| err.to_string())?;
    let zones = annotate.then_some(ZoneAnnotation { zcz: set.claim().zcz, tail: true });
    let mut out = String::new();
    if float {
        out.push_str(&format!("# mode,float,tolerance,{}\n", format_sig9(1e-6 * (m * n) as f64)));
    }
    out.push_str(&profile.to_csv(zones));
    Ok(out)
}

fn correlate(args: CorrelateArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let set = load(&args.source, stderr)?;
    let csv = profile_csv(&set, args.e, args.f.unwrap_or(args.e), args.float, args.annotate)?;
    emit(args.out.as_deref(), &csv, stdout)?;
    Ok(EXIT_PASS)
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepFile {
    primes: Option<Vec<u32>>,
    m_values: Option<Vec<usize>>,
    max_len: Option<u64>,
    deltas: Option<Vec<usize>>,
    max_parts: Option<usize>,
    perms: Option<Vec<crate::verification::sweep::PermChoice>>,
    lambdas: Option<Vec<crate::verification::sweep::LambdaChoice>>,
    q_factor: Option<u32>,
    seed: Option<u64>,
    allow_large: Option<bool>,
}

fn nonempty<T>(v: Vec<T>) -> Option<Vec<T>> {
    (!v.is_empty()).then_some(v)
}

fn sweep(args: SweepArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let file: SweepFile = match &args.config {
        Some(path) => serde_json::from_str(&read(path)?).map_err(|e| format!("config {}: {e}", path.display()))?,
        None => SweepFile::default(),
    };
    let d = SweepConfig::default();
    let config = SweepConfig {
        primes: merge("primes", nonempty(args.primes), file.primes, stderr).unwrap_or(d.primes),
        m_values: merge("m_values", nonempty(args.m_values), file.m_values, stderr).unwrap_or(d.m_values),
        max_len: merge("max_len", args.max_len, file.max_len, stderr).unwrap_or(d.max_len),
        deltas: merge("deltas", nonempty(args.deltas), file.deltas, stderr),
        max_parts: file.max_parts.unwrap_or(d.max_parts),
        perms: file.perms.unwrap_or(d.perms),
        lambdas: file.lambdas.unwrap_or(d.lambdas),
        q_factor: file.q_factor.unwrap_or(d.q_factor),
        seed: merge("seed", args.seed, file.seed, stderr).unwrap_or(d.seed),
        allow_large: merge("allow_large", args.allow_large.then_some(true), file.allow_large, stderr)
            .unwrap_or(false),
    };
    let report = run_sweep(&config, |_| {}).map_err(|e| e.to_string())?;
    let json = args.out.as_ref().is_some_and(|p| p.extension().is_some_and(|x| x == "json"));
    let text = if json { report.to_json() } else { report.to_csv() };
    emit(args.out.as_deref(), &text, stdout)?;
    let s = &report.summary;
    let _ = writeln!(
        stderr,
        "{} instances: {} pass, {} optimal; ccc {}/{}, binary zccs {}/{}, single chain {}/{}; {}",
        s.instances,
        s.passed,
        s.optimal,
        s.ccc_detected,
        s.ccc_instances,
        s.binary_zccs_ok,
        s.binary_instances,
        s.single_chain_ok,
        s.single_chain_instances,
        if s.all_ok { "all ok" } else { "FAILURES" }
    );
    Ok(if s.all_ok { EXIT_PASS } else { EXIT_FAIL })
}

/// File names written by `demo example1`.
pub const DEMO_FILES: [&str; 4] = ["set.json", "report.json", "fig1_aacf_a0.csv", "fig2_accf_a2_a8.csv"];

fn demo(args: DemoArgs, stdout: &mut dyn Write, _stderr: &mut dyn Write) -> CmdResult {
    if args.name != "example1" {
        return Err(format!("unknown demo {:?} (available: example1)", args.name));
    }
    let dir = args.out_dir.unwrap_or_else(default_out_dir);
    fs::create_dir_all(&dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let params = Preset::Example1.params(&PresetArgs::default()).map_err(|e| e.to_string())?;
    let set = build_code_set(&params).map_err(|e| e.to_string())?;
    let report = Verifier::new(&set).verify(SetKind::Szccs, set.claim().zcz).map_err(|e| e.to_string())?;
    let contents = [
        set.to_canonical_json(),
        report.to_json(),
        profile_csv(&set, 0, 0, false, true)?,
        profile_csv(&set, 2, 8, false, true)?,
    ];
    for (name, text) in DEMO_FILES.iter().zip(&contents) {
        write_file(&dir.join(name), text)?;
    }
    let _ = writeln!(stdout, "{}", summary_line(&set));
    let _ = writeln!(stdout, "wrote {} files to {}", DEMO_FILES.len(), dir.display());
    Ok(if report.holds { EXIT_PASS } else { EXIT_FAIL })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_parse() {
        assert_eq!(parse_list::<usize>("x", "1,2, 3").unwrap(), vec![1, 2, 3]);
        assert!(parse_list::<usize>("x", "1,a").is_err());
    }

    #[test]
    fn file_wins_with_warning() {
        let mut err = Vec::new();
        assert_eq!(merge("p", Some(3), Some(5), &mut err), Some(5));
        assert!(String::from_utf8(err).unwrap().contains("overriding flag value 3"));
        let mut err = Vec::new();
        assert_eq!(merge("p", Some(3), None, &mut err), Some(3));
        assert_eq!(merge("p", Some(3), Some(3), &mut err), Some(3));
        assert!(err.is_empty());
    }

    #[test]
    fn summaries() {
        let ex = build_code_set(&Preset::Example1.params(&PresetArgs::default()).unwrap()).unwrap();
        assert_eq!(summary_line(&ex), "(9,3,27,8) SZCCS, optimal");
        let args = PresetArgs { p: Some(3), m: Some(3), k: Some(2), ..Default::default() };
        let ccc = build_code_set(&Preset::Ccc.params(&args).unwrap()).unwrap();
        assert_eq!(summary_line(&ccc), "(9,9,27) CCC, optimal");
    }
}
