use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use rayon::prelude::*;
use serde_json::json;

use polyb::exactmath::{
    gandhi_polynomial, genocchi, parse_rational, seki_polynomial, Integer, Rational,
};
use polyb::identities::{
    conjecture_sweep, lookup, run_all, run_identity, CellStatus, IdentityReport, Param, Ranges,
};
use polyb::models::{
    callan_poly_enum, count_tableaux, enum_barred, enum_callan, enum_tableaux, tableau_poly,
    tableau_poly2, AltTableau,
};
use polyb::oeis::{self, CompareMode};
use polyb::polybern::{
    bhat_closed, callan_poly_closed, negative_index_callan, pb_poly_value, symmetrized,
    PolyBernoulliQuery,
};
use polyb::recurrences::{
    bhat_rec, bhat_snapshot, callan_poly_rec, preload_bhat, tableau_poly_rec,
};

use crate::render::{csv_rows, value_record, Output};
use crate::{
    cache, CacheAction, Cli, CliError, Command, ComputeArgs, ConjectureArgs, EnumerateArgs, Format,
    Method, Model, OeisArgs, TableArgs, Target, VerifyArgs,
};

pub const TABLEAU_CAP: usize = 16;
pub const CALLAN_CAP: usize = 10;
const DESK: (usize, usize, usize, usize) = (6, 6, 4, 6);

type Res<T = ()> = Result<T, CliError>;

struct Ctx<'a> {
    cli: &'a Cli,
    out: BufWriter<io::StdoutLock<'static>>,
}

impl Ctx<'_> {
    fn line(&mut self, text: impl AsRef<str>) -> Res {
        writeln!(self.out, "{}", text.as_ref())?;
        Ok(())
    }

    fn raw(&mut self, text: &str) -> Res {
        self.out.write_all(text.as_bytes())?;
        Ok(())
    }

    fn format(&self) -> Format {
        self.cli.format
    }

    fn cache_dir(&self) -> PathBuf {
        cache::resolve_dir(self.cli.cache_dir.as_deref())
    }
}

fn tableau_cap(cli: &Cli, n: usize, k: usize) -> Res {
    if cli.unsafe_cap || n * k <= TABLEAU_CAP {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "cap exceeded: tableau enumeration needs n*k <= {TABLEAU_CAP} (got {}); pass --unsafe-cap to override",
            n * k
        )))
    }
}

fn callan_cap(cli: &Cli, n: usize, k: usize) -> Res {
    if cli.unsafe_cap || n + k <= CALLAN_CAP {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "cap exceeded: Callan enumeration needs n+k <= {CALLAN_CAP} (got {}); pass --unsafe-cap to override",
            n + k
        )))
    }
}

pub fn run(cli: &Cli) -> Res {
    let mut ctx = Ctx {
        cli,
        out: BufWriter::new(io::stdout().lock()),
    };
    let result = match &cli.command {
        Command::Compute(args) => compute(&mut ctx, args),
        Command::Enumerate(args) => enumerate(&mut ctx, args),
        Command::Verify(args) => verify(&mut ctx, args),
        Command::Conjecture(args) => conjecture(&mut ctx, args),
        Command::Table(args) => table(&mut ctx, args),
        Command::Oeis(args) => oeis_check(&mut ctx, args),
        Command::Cache { action } => cache_cmd(&mut ctx, *action),
    };
    ctx.out.flush()?;
    result
}

fn need<T>(target: &str, name: &str, value: Option<T>) -> Res<T> {
    value.ok_or_else(|| CliError::Usage(format!("`{target}` needs --{name}")))
}

fn non_negative(name: &str, value: i64) -> Res<usize> {
    usize::try_from(value)
        .map_err(|_| CliError::Usage(format!("--{name} must be non-negative, got {value}")))
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Bhat => "bhat",
        Target::Cpoly => "cpoly",
        Target::Tpoly => "tpoly",
        Target::Tpoly2 => "tpoly2",
        Target::Symmetrized => "symmetrized",
        Target::Pb => "pb",
        Target::Gandhi => "gandhi",
        Target::Genocchi => "genocchi",
        Target::Seki => "seki",
        Target::Negindex => "negindex",
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Closed => "closed",
        Method::Recurrence => "recurrence",
        Method::Enumeration => "enumeration",
    }
}

/// Supported routes per target; the first is the default.
fn methods(t: Target) -> &'static [Method] {
    use Method::*;
    match t {
        Target::Bhat | Target::Cpoly | Target::Tpoly => &[Closed, Recurrence, Enumeration],
        Target::Tpoly2 => &[Enumeration],
        Target::Gandhi => &[Recurrence],
        Target::Symmetrized | Target::Pb | Target::Genocchi | Target::Seki | Target::Negindex => {
            &[Closed]
        }
    }
}

fn pick_method(t: Target, requested: Option<Method>) -> Res<Method> {
    let supported = methods(t);
    match requested {
        None => Ok(supported[0]),
        Some(m) if supported.contains(&m) => Ok(m),
        Some(m) => {
            let names: Vec<&str> = supported.iter().map(|&m| method_name(m)).collect();
            let hint = if t == Target::Tpoly2 && m == Method::Recurrence {
                "; the two-variable recurrence is conjectural, see `polyb conjecture`"
            } else {
                ""
            };
            Err(CliError::Usage(format!(
                "`{}` has no {} method (supported: {}){hint}",
                target_name(t),
                method_name(m),
                names.join(", ")
            )))
        }
    }
}

/// Evaluates a two-index target at `(n, k)` (plus `m` where used).
fn evaluate_cell(
    cli: &Cli,
    t: Target,
    n: usize,
    k: usize,
    m: usize,
    method: Method,
) -> Res<Output> {
    Ok(match (t, method) {
        (Target::Bhat, Method::Closed) => Output::Int(bhat_closed(n, k, m)),
        (Target::Bhat, Method::Recurrence) => Output::Int(bhat_rec(n, k, m)),
        (Target::Bhat, Method::Enumeration) => {
            callan_cap(cli, n, k)?;
            Output::Int(Integer::from(enum_barred(n, k, m).count()))
        }
        (Target::Cpoly, Method::Closed) | (Target::Tpoly, Method::Closed) => {
            Output::Poly(callan_poly_closed(n, k))
        }
        (Target::Cpoly, Method::Recurrence) => Output::Poly(callan_poly_rec(n, k)),
        (Target::Cpoly, Method::Enumeration) => {
            callan_cap(cli, n, k)?;
            Output::Poly(callan_poly_enum(n, k))
        }
        (Target::Tpoly, Method::Recurrence) => Output::Poly(tableau_poly_rec(n, k)),
        (Target::Tpoly, Method::Enumeration) => {
            tableau_cap(cli, n, k)?;
            Output::Poly(tableau_poly(n, k))
        }
        (Target::Tpoly2, _) => {
            tableau_cap(cli, n, k)?;
            Output::BiPoly(tableau_poly2(n, k))
        }
        (Target::Symmetrized, _) => Output::Int(symmetrized(n, k, m)?),
        _ => {
            return Err(CliError::Usage(format!(
                "`{}` is not an (n, k) target",
                target_name(t)
            )))
        }
    })
}

fn with_bhat_cache<T>(cli: &Cli, active: bool, f: impl FnOnce() -> Res<T>) -> Res<T> {
    if !active {
        return f();
    }
    let dir = cache::resolve_dir(cli.cache_dir.as_deref());
    preload_bhat(cache::load(&dir));
    let result = f()?;
    if let Err(e) = cache::save(&dir, &bhat_snapshot()) {
        eprintln!("warning: could not write cache in {}: {e}", dir.display());
    }
    Ok(result)
}

fn compute(ctx: &mut Ctx, a: &ComputeArgs) -> Res {
    let t = a.target;
    let name = target_name(t);
    let method = pick_method(t, a.method)?;
    let mut params: Vec<(&str, String)> = Vec::new();
    let value = match t {
        Target::Bhat | Target::Symmetrized => {
            let n = need(name, "n", a.n)?;
            let k = non_negative("k", need(name, "k", a.k)?)?;
            let m = need(name, "m", a.m)?;
            params.extend([
                ("n", n.to_string()),
                ("k", k.to_string()),
                ("m", m.to_string()),
            ]);
            let cached = t == Target::Bhat && method == Method::Recurrence;
            with_bhat_cache(ctx.cli, cached, || {
                evaluate_cell(ctx.cli, t, n, k, m, method)
            })?
        }
        Target::Cpoly | Target::Tpoly | Target::Tpoly2 => {
            let n = need(name, "n", a.n)?;
            let k = non_negative("k", need(name, "k", a.k)?)?;
            params.extend([("n", n.to_string()), ("k", k.to_string())]);
            evaluate_cell(ctx.cli, t, n, k, 0, method)?
        }
        Target::Pb => {
            let n = need(name, "n", a.n)?;
            let k = need(name, "k", a.k)?;
            let x = match &a.x {
                Some(text) => parse_rational(text).ok_or_else(|| {
                    CliError::Usage(format!("--x expects p or p/q, got `{text}`"))
                })?,
                None => Rational::from_integer(Integer::from(0)),
            };
            params.extend([
                ("n", n.to_string()),
                ("k", k.to_string()),
                ("x", x.to_string()),
            ]);
            Output::Rat(pb_poly_value(&PolyBernoulliQuery::new(n, k, x)))
        }
        Target::Gandhi => {
            let n = need(name, "n", a.n)?;
            params.push(("n", n.to_string()));
            Output::Poly(gandhi_polynomial(n))
        }
        Target::Genocchi => {
            let n = need(name, "n", a.n)?;
            params.push(("n", n.to_string()));
            Output::Int(genocchi(n)?)
        }
        Target::Seki => {
            let k = non_negative("k", need(name, "k", a.k)?)?;
            params.push(("k", k.to_string()));
            Output::Poly(seki_polynomial(k))
        }
        Target::Negindex => {
            let k = non_negative("k", need(name, "k", a.k)?)?;
            params.push(("k", k.to_string()));
            Output::Poly(negative_index_callan(k))
        }
    };
    match ctx.format() {
        Format::Text => ctx.line(value.text()),
        Format::Json => ctx.line(value_record(name, &params, &value).to_string()),
        Format::Csv => {
            let header: Vec<String> = ["target".to_string()]
                .into_iter()
                .chain(params.iter().map(|(p, _)| p.to_string()))
                .chain(["value".to_string()])
                .collect();
            let row: Vec<String> = [name.to_string()]
                .into_iter()
                .chain(params.iter().map(|(_, v)| v.clone()))
                .chain([value.text()])
                .collect();
            ctx.raw(&csv_rows([header, row]))
        }
    }
}

fn model_name(m: Model) -> &'static str {
    match m {
        Model::Callan => "callan",
        Model::Barred => "barred",
        Model::Tableaux => "tableaux",
    }
}

fn tableau_text(t: &AltTableau) -> String {
    t.rows().join("/")
}

fn enumerate(ctx: &mut Ctx, a: &EnumerateArgs) -> Res {
    let (n, k) = (a.n, a.k);
    let m = match a.model {
        Model::Barred => need("barred", "m", a.m)?,
        _ if a.m.is_some() => {
            return Err(CliError::Usage(format!(
                "--m applies to barred sequences only, not `{}`",
                model_name(a.model)
            )))
        }
        _ => 0,
    };
    match a.model {
        Model::Tableaux => tableau_cap(ctx.cli, n, k)?,
        _ => callan_cap(ctx.cli, n, k)?,
    }
    if !a.list {
        let count = match a.model {
            Model::Callan => Integer::from(enum_callan(n, k).count()),
            Model::Barred => Integer::from(enum_barred(n, k, m).count()),
            Model::Tableaux => count_tableaux(n, k),
        };
        let name = model_name(a.model);
        return match ctx.format() {
            Format::Text => ctx.line(count.to_string()),
            Format::Json => ctx.line(
                json!({"model": name, "params": {"n": n, "k": k, "m": m}, "count": count.to_string()})
                    .to_string(),
            ),
            Format::Csv => ctx.raw(&csv_rows([
                ["model", "n", "k", "m", "count"].map(String::from).to_vec(),
                vec![name.into(), n.to_string(), k.to_string(), m.to_string(), count.to_string()],
            ])),
        };
    }
    let format = ctx.format();
    if format == Format::Csv {
        ctx.raw(&csv_rows([vec!["index".to_string(), "item".to_string()]]))?;
    }
    let emit = |ctx: &mut Ctx, index: usize, text: String, record: serde_json::Value| -> Res {
        match format {
            Format::Text => ctx.line(text),
            Format::Json => ctx.line(record.to_string()),
            Format::Csv => ctx.raw(&csv_rows([vec![index.to_string(), text]])),
        }
    };
    match a.model {
        Model::Callan => {
            for (i, s) in enum_callan(n, k).enumerate() {
                let record = serde_json::to_value(&s).expect("sequence serializes");
                emit(ctx, i, s.to_string(), record)?;
            }
        }
        Model::Barred => {
            for (i, s) in enum_barred(n, k, m).enumerate() {
                let record = serde_json::to_value(&s).expect("sequence serializes");
                emit(ctx, i, s.to_string(), record)?;
            }
        }
        Model::Tableaux => {
            for (i, t) in enum_tableaux(n, k).enumerate() {
                let record = serde_json::to_value(&t).expect("tableau serializes");
                let text = if format == Format::Text {
                    let sep = if i == 0 { "" } else { "\n" };
                    format!("{sep}{t}")
                } else {
                    tableau_text(&t)
                };
                emit(ctx, i, text, record)?;
            }
        }
    }
    Ok(())
}

fn report_lines(r: &IdentityReport) -> Vec<String> {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let mut lines = vec![format!(
        "{status} {} cases={} excluded={}",
        r.name, r.cases_checked, r.excluded
    )];
    for f in &r.failures {
        let params: Vec<String> = f.params.iter().map(|(p, v)| format!("{p}={v}")).collect();
        lines.push(format!("  {}: {} != {}", params.join(", "), f.lhs, f.rhs));
    }
    lines
}

fn emit_reports(ctx: &mut Ctx, reports: &[IdentityReport], single: bool) -> Res {
    match ctx.format() {
        Format::Text => {
            for r in reports {
                for line in report_lines(r) {
                    ctx.line(line)?;
                }
            }
            if !single {
                let passed = reports.iter().filter(|r| r.passed()).count();
                ctx.line(format!("{passed}/{} passed", reports.len()))?;
            }
        }
        Format::Json => {
            let text = if single {
                serde_json::to_string(&reports[0])
            } else {
                serde_json::to_string(reports)
            }
            .expect("reports serialize");
            ctx.line(text)?;
        }
        Format::Csv => {
            let mut rows = vec![["name", "status", "cases_checked", "excluded", "failures"]
                .map(String::from)
                .to_vec()];
            for r in reports {
                let status = if r.passed() { "pass" } else { "fail" };
                rows.push(vec![
                    r.name.clone(),
                    status.into(),
                    r.cases_checked.to_string(),
                    r.excluded.to_string(),
                    r.failures.len().to_string(),
                ]);
            }
            ctx.raw(&csv_rows(rows))?;
        }
    }
    if reports.iter().all(IdentityReport::passed) {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn verify(ctx: &mut Ctx, a: &VerifyArgs) -> Res {
    let given = [
        (Param::N, a.max_n, DESK.0),
        (Param::K, a.max_k, DESK.1),
        (Param::M, a.max_m, DESK.2),
        (Param::J, a.max_j, DESK.3),
    ];
    if a.name.eq_ignore_ascii_case("all") {
        let mut ranges = Ranges::desk();
        for (p, v, d) in given {
            ranges.set(p, (0, v.unwrap_or(d)));
        }
        let reports = run_all(&ranges);
        return emit_reports(ctx, &reports, false);
    }
    let entry = lookup(&a.name)?;
    let mut ranges = Ranges::desk();
    for (p, v, d) in given {
        let hi = match v {
            Some(v) => v,
            None => entry
                .caps
                .iter()
                .find(|(q, _)| *q == p)
                .map_or(d, |&(_, cap)| d.min(cap)),
        };
        ranges.set(p, (0, hi));
    }
    let report = run_identity(entry.name, &ranges)?;
    emit_reports(ctx, &[report], true)
}

fn conjecture(ctx: &mut Ctx, a: &ConjectureArgs) -> Res {
    let cap = if ctx.cli.unsafe_cap {
        usize::MAX
    } else {
        TABLEAU_CAP
    };
    let report = conjecture_sweep(a.max_n, a.max_k, cap);
    let cells = report.cells.clone().unwrap_or_default();
    let count = |s: CellStatus| cells.iter().filter(|c| c.status == s).count();
    match ctx.format() {
        Format::Text => {
            let header: Vec<String> = (0..=a.max_k).map(|k| format!("{k:>3}")).collect();
            ctx.line(format!("n\\k{}", header.concat()))?;
            for n in 0..=a.max_n {
                let row: Vec<String> = cells
                    .iter()
                    .filter(|c| c.n == n)
                    .map(|c| {
                        let mark = match c.status {
                            CellStatus::Equal => "=",
                            CellStatus::Unequal => "X",
                            CellStatus::Skipped => "-",
                        };
                        let star = if c.asserted { "*" } else { " " };
                        format!("{mark:>2}{star}")
                    })
                    .collect();
                ctx.line(format!("{n:<3}{}", row.concat()))?;
            }
            ctx.line(format!(
                "equal: {}, unequal: {}, skipped: {}",
                count(CellStatus::Equal),
                count(CellStatus::Unequal),
                count(CellStatus::Skipped)
            ))?;
            let verdict = if report.passed() { "pass" } else { "FAIL" };
            ctx.line(format!("asserted cells (2,2) (3,2) (2,3): {verdict}"))?;
            for f in &report.failures {
                ctx.line(format!(
                    "  n={}, k={}: {} != {}",
                    f.params["n"], f.params["k"], f.lhs, f.rhs
                ))?;
            }
        }
        Format::Json => ctx.line(serde_json::to_string(&report).expect("report serializes"))?,
        Format::Csv => {
            let mut rows = vec![["n", "k", "status", "asserted"].map(String::from).to_vec()];
            for c in &cells {
                let status = match c.status {
                    CellStatus::Equal => "equal",
                    CellStatus::Unequal => "unequal",
                    CellStatus::Skipped => "skipped",
                };
                rows.push(vec![
                    c.n.to_string(),
                    c.k.to_string(),
                    status.into(),
                    c.asserted.to_string(),
                ]);
            }
            ctx.raw(&csv_rows(rows))?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn table(ctx: &mut Ctx, a: &TableArgs) -> Res {
    let t = a.target;
    if !matches!(
        t,
        Target::Bhat | Target::Cpoly | Target::Tpoly | Target::Tpoly2 | Target::Symmetrized
    ) {
        return Err(CliError::Usage(format!(
            "`{}` is not an (n, k) target; use bhat, symmetrized, cpoly, tpoly or tpoly2",
            target_name(t)
        )));
    }
    let method = pick_method(t, a.method)?;
    let cached = t == Target::Bhat && method == Method::Recurrence;
    let cli = ctx.cli;
    let rows: Vec<Vec<Output>> = with_bhat_cache(cli, cached, || {
        (0..=a.max_n)
            .into_par_iter()
            .map(|n| {
                (0..=a.max_k)
                    .map(|k| evaluate_cell(cli, t, n, k, a.m, method))
                    .collect::<Res<Vec<_>>>()
            })
            .collect()
    })?;
    let name = target_name(t);
    match ctx.format() {
        Format::Json => {
            let matrix: Vec<Vec<serde_json::Value>> = rows
                .iter()
                .map(|row| row.iter().map(Output::json).collect())
                .collect();
            let mut params = json!({"max_n": a.max_n, "max_k": a.max_k});
            if matches!(t, Target::Bhat | Target::Symmetrized) {
                params["m"] = json!(a.m);
            }
            ctx.line(json!({"target": name, "params": params, "rows": matrix}).to_string())
        }
        format => {
            let header: Vec<String> = ["n/k".to_string()]
                .into_iter()
                .chain((0..=a.max_k).map(|k| k.to_string()))
                .collect();
            let body: Vec<Vec<String>> = rows
                .iter()
                .enumerate()
                .map(|(n, row)| {
                    [n.to_string()]
                        .into_iter()
                        .chain(row.iter().map(Output::text))
                        .collect()
                })
                .collect();
            if format == Format::Csv {
                return ctx.raw(&csv_rows(std::iter::once(header).chain(body)));
            }
            let all: Vec<Vec<String>> = std::iter::once(header).chain(body).collect();
            let widths: Vec<usize> = (0..all[0].len())
                .map(|c| all.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            for row in &all {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:>w$}"))
                    .collect();
                ctx.line(cells.join("  "))?;
            }
            Ok(())
        }
    }
}

#[cfg(feature = "fetch")]
fn fetch_bfile(id: &str) -> Res<oeis::BFile> {
    let digits = id.trim_start_matches(['A', 'a']);
    let url = format!("https://oeis.org/A{digits}/b{digits}.txt");
    let text = reqwest::blocking::get(&url)
        .and_then(|r| r.error_for_status())
        .and_then(|r| r.text())
        .map_err(|e| CliError::Usage(format!("could not fetch {url}: {e}")))?;
    Ok(oeis::parse_bfile(&format!("A{digits}"), &text)?)
}

#[cfg(not(feature = "fetch"))]
fn fetch_bfile(_id: &str) -> Res<oeis::BFile> {
    Err(CliError::Usage(
        "--fetch needs a build with the `fetch` feature".into(),
    ))
}

fn oeis_check(ctx: &mut Ctx, a: &OeisArgs) -> Res {
    let ids: Vec<String> = match &a.seq {
        Some(id) => vec![oeis::manifest_entry(id)?.id.clone()],
        None => oeis::manifest().iter().map(|e| e.id.clone()).collect(),
    };
    let mut reports = Vec::new();
    for id in &ids {
        let entry = oeis::manifest_entry(id)?;
        let depth = a.depth.unwrap_or(match entry.mode {
            CompareMode::Exact => 10,
            CompareMode::AntidiagonalMultiset => 6,
        });
        let file = if a.fetch {
            fetch_bfile(id)?
        } else {
            oeis::vendored(id)?
        };
        reports.push(oeis::check_bfile(&file, depth)?);
    }
    let single = reports.len() == 1;
    emit_reports(ctx, &reports, single)
}

fn cache_cmd(ctx: &mut Ctx, action: CacheAction) -> Res {
    let dir = ctx.cache_dir();
    match action {
        CacheAction::Path => ctx.line(cache::file_in(&dir).display().to_string()),
        CacheAction::Show => {
            let entries = cache::load(&dir);
            match ctx.format() {
                Format::Json => {
                    let map: serde_json::Map<String, serde_json::Value> = entries
                        .iter()
                        .map(|((n, k, m), v)| (format!("bhat/{n}/{k}/{m}"), json!(v.to_string())))
                        .collect();
                    ctx.line(serde_json::Value::Object(map).to_string())
                }
                Format::Csv => {
                    let rows = std::iter::once(["n", "k", "m", "value"].map(String::from).to_vec())
                        .chain(entries.iter().map(|((n, k, m), v)| {
                            vec![n.to_string(), k.to_string(), m.to_string(), v.to_string()]
                        }));
                    ctx.raw(&csv_rows(rows))
                }
                Format::Text => {
                    for ((n, k, m), v) in &entries {
                        ctx.line(format!("bhat/{n}/{k}/{m} {v}"))?;
                    }
                    ctx.line(format!("{} entries", entries.len()))
                }
            }
        }
        CacheAction::Clear => {
            let removed = cache::clear(&dir)?;
            ctx.line(if removed {
                "cache cleared"
            } else {
                "cache already empty"
            })
        }
    }
}
