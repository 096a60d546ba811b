use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use satmut::arith::rational::int;
use satmut::arith::recon::ReconOptions;
use satmut::arith::{Params, RationalFunction, Scalar};
use satmut::qgroup::cache::EntryCheck;
use satmut::qgroup::rmatrix::intertwines;
use satmut::qgroup::{cached_tower, verify_module_axioms, Cache, Tower};
use satmut::symfunc::expect::Expectations;
use satmut::symfunc::scan::exceptional_mus;
use satmut::symfunc::{hook_scan, mixed_sl3_decomp, mixed_square_exceptions, multiplicity_scan, Partition, ScanEntry, SquarePart};
use satmut::tangle::certify::{certify_paper_difference, CertifyOptions, Strategy};
use satmut::Result;

use crate::{CacheAction, Cli, Command, Output, StrategyArg};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

pub struct Outcome {
    pub code: u8,
    pub body: String,
}

fn outcome(cli: &Cli, code: u8, structured: Value, text: String) -> Outcome {
    let body = match cli.output {
        Output::Structured => serde_json::to_string_pretty(&structured).expect("report serializes") + "\n",
        Output::Text => text,
    };
    Outcome { code, body }
}

fn verdict(ok: bool) -> u8 {
    if ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Scan { max_size } => scan(cli, *max_size),
        Command::Hooks { max_size } => hooks(cli, *max_size),
        Command::Build { strategy, seed } => build(cli, *strategy, *seed),
        Command::Certify { strategy, seed } => certify(cli, *strategy, *seed),
        Command::Mixed { r, t } => mixed(cli, *r, *t),
        Command::Cache { action } => cache(cli, *action),
    }
}

fn list(ps: &[Partition]) -> String {
    if ps.is_empty() {
        return "none".into();
    }
    ps.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")
}

fn entries_text(entries: &[ScanEntry]) -> String {
    entries.iter().map(|e| format!("  {e}\n")).collect()
}

/// Expected exceptional `mu` with `|mu| <= limit`, from the embedded table.
fn expected_exceptions(limit: u32) -> Result<(Vec<Partition>, Vec<Partition>)> {
    let table = Expectations::load()?;
    let widest = table.multiplicity_scan.iter().max_by_key(|c| c.max_size).expect("non-empty table");
    let pick = |v: &[Partition]| {
        let mut v: Vec<Partition> = v.iter().filter(|p| p.size() <= limit).cloned().collect();
        v.sort();
        v
    };
    Ok((pick(&widest.sym), pick(&widest.ext)))
}

fn scan(cli: &Cli, max_size: u32) -> Result<Outcome> {
    let table = Expectations::load()?;
    let checked_to = table.multiplicity_scan.iter().map(|c| c.max_size).max().unwrap_or(0).min(max_size);
    let entries = multiplicity_scan(max_size)?;
    let within: Vec<ScanEntry> = entries.iter().filter(|e| e.size <= checked_to).cloned().collect();
    let (sym, ext) = (exceptional_mus(&within, SquarePart::Sym), exceptional_mus(&within, SquarePart::Ext));
    let (want_sym, want_ext) = expected_exceptions(checked_to)?;
    let ok = sym == want_sym && ext == want_ext;
    let mut text = format!("multiplicity scan up to |mu| = {max_size}\n");
    text += &entries_text(&entries);
    let _ = writeln!(text, "sym exceptions: {}\next exceptions: {}", list(&exceptional_mus(&entries, SquarePart::Sym)), list(&exceptional_mus(&entries, SquarePart::Ext)));
    if ok {
        let _ = writeln!(text, "matches the expectation table through |mu| = {checked_to}");
    } else {
        let _ = writeln!(text, "MISMATCH through |mu| = {checked_to}");
        let _ = writeln!(text, "  sym: found {}, expected {}", list(&sym), list(&want_sym));
        let _ = writeln!(text, "  ext: found {}, expected {}", list(&ext), list(&want_ext));
    }
    let structured = json!({
        "command": "scan",
        "max_size": max_size,
        "verified": ok,
        "checked_through": checked_to,
        "entries": entries,
        "exceptional": {
            "sym": exceptional_mus(&entries, SquarePart::Sym),
            "ext": exceptional_mus(&entries, SquarePart::Ext),
        },
        "expected": { "sym": want_sym, "ext": want_ext },
    });
    Ok(outcome(cli, verdict(ok), structured, text))
}

fn hooks(cli: &Cli, max_size: u32) -> Result<Outcome> {
    let entries = hook_scan(max_size)?;
    let ok = entries.is_empty();
    let mut text = format!("hook scan up to |mu| = {max_size}\n");
    text += &entries_text(&entries);
    text += if ok { "no repeated summands\n" } else { "MISMATCH: repeated summands found\n" };
    let structured = json!({ "command": "hooks", "max_size": max_size, "verified": ok, "entries": entries });
    Ok(outcome(cli, verdict(ok), structured, text))
}

#[derive(Serialize)]
struct TowerSummary {
    mode: String,
    sample: Option<String>,
    dims: BTreeMap<String, usize>,
    m1m2_split: Vec<usize>,
    r_mm_nnz: usize,
    axioms_m: bool,
    inj_proj_m: bool,
    r_mm_intertwines: bool,
    cache_entries: Vec<String>,
}

fn summarize<F: Scalar>(tower: &Tower<F>, params: &Params<F>, cache: &Cache) -> Result<TowerSummary> {
    let m = tower.m();
    let mm = m.tensor(m)?;
    let dims = BTreeMap::from([
        ("E".to_string(), tower.base.e.dim()),
        ("F".to_string(), tower.base.f.dim()),
        ("M1".to_string(), tower.mid.m1.dim()),
        ("M2".to_string(), tower.mid.m2.dim()),
        ("M".to_string(), m.dim()),
    ]);
    let mut split: Vec<usize> = tower.top.m1m2_split.iter().map(|p| p.sub_dim()).collect();
    split.sort_unstable_by(|a, b| b.cmp(a));
    Ok(TowerSummary {
        mode: F::mode_tag(),
        sample: (F::mode_tag() != "symbolic").then(|| params.a().to_string()),
        dims,
        m1m2_split: split,
        r_mm_nnz: tower.r_mm().matrix.nnz(),
        axioms_m: verify_module_axioms(m, params).passed(),
        inj_proj_m: tower.top.m_ip.verify(&tower.top.m1m2),
        r_mm_intertwines: intertwines(&tower.r_mm().matrix, &mm, &mm),
        cache_entries: cache.list()?.into_iter().map(|e| e.name).collect(),
    })
}

fn build(cli: &Cli, strategy: StrategyArg, seed: u64) -> Result<Outcome> {
    let cache = Cache::open(&cli.cache_dir)?;
    let summary = match strategy {
        StrategyArg::Symbolic => {
            let params = Params::new(RationalFunction::var())?;
            summarize(&cached_tower(&cache, &params)?, &params, &cache)?
        }
        StrategyArg::Pointwise => {
            let params = Params::new(int(seed as i64 + 2))?;
            summarize(&cached_tower(&cache, &params)?, &params, &cache)?
        }
    };
    let ok = summary.axioms_m
        && summary.inj_proj_m
        && summary.r_mm_intertwines
        && summary.dims["M"] == 27
        && summary.m1m2_split == vec![27, 8, 1];
    let mut text = format!("tower ({}", summary.mode);
    if let Some(s) = &summary.sample {
        let _ = write!(text, ", a = {s}");
    }
    text += ")\n";
    for (k, v) in &summary.dims {
        let _ = writeln!(text, "  dim {k} = {v}");
    }
    let _ = writeln!(text, "  M1 ⊗ M2 splits {:?}", summary.m1m2_split);
    let _ = writeln!(text, "  R_MM nonzeros: {}", summary.r_mm_nnz);
    let _ = writeln!(text, "  module axioms on M: {}", summary.axioms_m);
    let _ = writeln!(text, "  proj ∘ inj = id for M: {}", summary.inj_proj_m);
    let _ = writeln!(text, "  R_MM intertwines: {}", summary.r_mm_intertwines);
    let _ = writeln!(text, "cached: {}", summary.cache_entries.join(", "));
    let mut structured = serde_json::to_value(&summary)?;
    structured["command"] = json!("build");
    structured["verified"] = json!(ok);
    Ok(outcome(cli, verdict(ok), structured, text))
}

fn certify(cli: &Cli, strategy: StrategyArg, seed: u64) -> Result<Outcome> {
    let strategy = match strategy {
        StrategyArg::Symbolic => Strategy::Symbolic,
        StrategyArg::Pointwise => Strategy::Pointwise,
    };
    let opts = CertifyOptions {
        strategy,
        recon: ReconOptions { seed, ..Default::default() },
        cache: Some(Cache::open(&cli.cache_dir)?),
        ..Default::default()
    };
    let report = certify_paper_difference(&opts)?;
    let code = verdict(report.passed());
    let body = match cli.output {
        Output::Structured => report.deterministic_json() + "\n",
        Output::Text => report.to_text(),
    };
    Ok(Outcome { code, body })
}

fn mixed(cli: &Cli, r: u32, t: u32) -> Result<Outcome> {
    let decomp = mixed_sl3_decomp(r, t);
    let exceptions = mixed_square_exceptions(r, t)?;
    let expected = ((r, t) == (2, 2)).then(|| vec![Partition::new(vec![4, 2]).unwrap()]);
    let ok = expected.as_ref().is_none_or(|e| *e == exceptions);
    let mut text = format!("V^{r} ⊗ (V*)^{t} over sl(3)\n");
    for (l, m) in &decomp {
        let _ = writeln!(text, "  {l} x{m}");
    }
    let _ = writeln!(text, "constituents with a repeated square summand: {}", list(&exceptions));
    if let Some(e) = &expected {
        let _ = writeln!(text, "{}", if ok { "matches expectation".to_string() } else { format!("MISMATCH: expected {}", list(e)) });
    }
    let structured = json!({
        "command": "mixed",
        "r": r,
        "t": t,
        "verified": ok,
        "decomposition": decomp.iter().map(|(l, m)| json!({ "partition": l, "multiplicity": m })).collect::<Vec<_>>(),
        "square_exceptions": exceptions,
    });
    Ok(outcome(cli, verdict(ok), structured, text))
}

fn cache(cli: &Cli, action: CacheAction) -> Result<Outcome> {
    let cache = Cache::open(&cli.cache_dir)?;
    match action {
        CacheAction::List => {
            let entries = cache.list()?;
            let text = if entries.is_empty() {
                "cache is empty\n".to_string()
            } else {
                entries
                    .iter()
                    .map(|e| format!("{}  {} bytes  {}  {}\n", e.name, e.bytes, e.convention, &e.sha256[..16]))
                    .collect()
            };
            let structured = json!({ "command": "cache list", "verified": true, "entries": entries });
            Ok(outcome(cli, EXIT_OK, structured, text))
        }
        CacheAction::Clear => {
            let n = cache.clear()?;
            let structured = json!({ "command": "cache clear", "verified": true, "removed": n });
            Ok(outcome(cli, EXIT_OK, structured, format!("removed {n} entries\n")))
        }
        CacheAction::Verify => {
            let checks: Vec<EntryCheck> = cache.verify()?;
            let ok = checks.iter().all(|c| c.ok);
            let text: String = checks
                .iter()
                .map(|c| match &c.detail {
                    None => format!("ok   {}\n", c.name),
                    Some(d) => format!("BAD  {}: {d}\n", c.name),
                })
                .collect();
            let structured = json!({ "command": "cache verify", "verified": ok, "entries": checks });
            Ok(outcome(cli, if ok { EXIT_OK } else { EXIT_ERROR }, structured, text))
        }
    }
}
