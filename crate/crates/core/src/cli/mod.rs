//! Command-line driver: `series`, `count` and `verify`.
//!
//! Every command produces a report that renders as JSON, CSV or plain text
//! and knows whether all of its checks passed. Output depends only on the
//! parsed arguments, so identical invocations print identical bytes.

pub mod cache;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charvar::{self, dim_fil, PrimeField, Prng, DEFAULT_PRIME};
use crate::diagrams::count_nonperipheral_in;
use crate::error::{Error, Result};
use crate::genfun::{is_palindromic, DenomFactors, IntPoly, RationalGF};
use crate::polygraph::{
    all_dissections, all_multicurve_series, containing_alternating_sum, count_even_multigraphs,
    diagonal_multigraph_series, dissection_euler_sum, dissection_polynomial, enumerate_even_simple,
    even_multigraph_series, filtration_hilbert_series, matrix_invariant_series,
    nonperipheral_series, planar_nonperipheral_series, ChordMultigraph,
};
use crate::surface::SurfaceSig;
pub use cache::{Cache, CacheOutcome, CachePayload, CACHE_DIR_ENV, CACHE_SCHEMA};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Plain,
}

#[derive(Debug, Parser)]
#[command(
    name = "multicurve",
    version,
    about = "Count multicurves on punctured surfaces and check the identities behind the counts"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Directory for cached diagram enumerations.
    #[arg(long, env = CACHE_DIR_ENV, global = true)]
    pub cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed form, coefficients and functional equation of a generating function.
    Series(SeriesArgs),
    /// Multicurve counts by length, computed along independent routes.
    Count(CountArgs),
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

/// Either `--g/--n` or `--m` (meaning the sphere with `m + 1` holes).
#[derive(Debug, Clone, Copy, Args)]
pub struct SurfaceArgs {
    #[arg(long, requires = "n", conflicts_with = "m")]
    pub g: Option<u32>,
    #[arg(long, requires = "g", conflicts_with = "m")]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<usize>,
}

impl SurfaceArgs {
    pub fn resolve(&self) -> Result<SurfaceId> {
        match (self.g, self.n, self.m) {
            (Some(g), Some(n), None) => {
                let sig = SurfaceSig::new(g, n)?;
                Ok(SurfaceId {
                    g: Some(g),
                    n: Some(n),
                    m: sig.rank(),
                })
            }
            (None, None, Some(m)) => Ok(SurfaceId {
                g: None,
                n: None,
                m,
            }),
            _ => Err(Error::Config("give either --g and --n, or --m".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// `Z_{g,n}` with `--g/--n`, `Z_m` with `--m`.
    #[value(name = "Z")]
    Z,
    #[value(name = "Zgn")]
    Zgn,
    #[value(name = "Z0")]
    Z0,
    #[value(name = "G")]
    G,
    #[value(name = "F")]
    F,
    #[value(name = "H")]
    H,
    #[value(name = "h")]
    LowerH,
    #[value(name = "c_all")]
    CAll,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub surface: SurfaceArgs,
    #[arg(long, value_enum, default_value = "Z")]
    pub which: SeriesKind,
    #[arg(long, default_value_t = 10)]
    pub max_deg: usize,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub surface: SurfaceArgs,
    #[arg(long, default_value_t = 6)]
    pub max_len: usize,
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// Functional equations of Z_m, G_m, H_m and h_m.
    Symmetry {
        #[arg(long, default_value_t = 8)]
        m_max: usize,
    },
    /// Palindromic dissection polynomials and alternating dissection sums.
    Euler {
        #[arg(long, default_value_t = 12)]
        m_max: usize,
        /// Random containing-sum checks.
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Duality of simple even graphs.
    Duality {
        #[arg(long, default_value_t = 8)]
        m_max: usize,
    },
    /// Rank of multicurve trace functions against H_m.
    Basis {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        /// Defaults to the expected dimension plus 20.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Randomized 2x2 matrix trace identities.
    Identities {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
    },
    /// Brute-force even multigraph counts against G_m and genus-zero diagrams.
    Collapse {
        #[arg(long, default_value_t = 5)]
        m_max: usize,
        #[arg(long, default_value_t = 10)]
        r_max: usize,
        /// Largest length for the diagram route.
        #[arg(long, default_value_t = 6)]
        diagram_r_max: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceId {
    pub g: Option<u32>,
    pub n: Option<u32>,
    pub m: usize,
}

impl SurfaceId {
    pub fn sig(&self) -> Result<SurfaceSig> {
        match (self.g, self.n) {
            (Some(g), Some(n)) => SurfaceSig::new(g, n),
            _ => SurfaceSig::planar(self.m),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Symmetry {
    pub sign: i32,
    pub exp: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub surface: SurfaceId,
    pub series: String,
    pub num: Vec<String>,
    pub den: Vec<(usize, u32)>,
    pub coeffs: Vec<String>,
    pub symmetry: Symmetry,
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

fn parse_ints(v: &[String]) -> Option<Vec<BigInt>> {
    v.iter().map(|s| s.parse().ok()).collect()
}

impl SeriesReport {
    pub fn closed_form(&self) -> Option<RationalGF> {
        Some(RationalGF::new(
            IntPoly::from_coeffs(parse_ints(&self.num)?),
            DenomFactors::from_pairs(&self.den),
        ))
    }

    /// Re-expands the reported closed form and compares with the coefficients.
    pub fn is_consistent(&self) -> bool {
        match (self.closed_form(), parse_ints(&self.coeffs)) {
            (Some(gf), Some(c)) => !c.is_empty() && gf.series_coeffs(c.len() - 1) == c,
            _ => false,
        }
    }
}

/// `(sign, k)` in `f(1/t) = sign * t^k * f(t)` for each series.
pub fn expected_symmetry(kind: SeriesKind, m: usize) -> (i32, i64) {
    let m = m as i64;
    let pm = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
    match kind {
        SeriesKind::Z | SeriesKind::Zgn | SeriesKind::Z0 => (1, 0),
        SeriesKind::G => (-1, m),
        SeriesKind::F => (pm(m - 3), 0),
        SeriesKind::H => (pm(3 * m - 2), 2 * m + 1),
        SeriesKind::LowerH => (-1, 4 * m),
        SeriesKind::CAll => (pm(3 * m - 1), 2 * m),
    }
}

pub fn series_gf(kind: SeriesKind, surface: &SurfaceId) -> Result<(String, RationalGF)> {
    let m = surface.m;
    let surface_given = surface.g.is_some();
    Ok(match kind {
        SeriesKind::Zgn | SeriesKind::Z if surface_given => {
            ("Zgn".into(), nonperipheral_series(surface.sig()?)?)
        }
        SeriesKind::Zgn => ("Zgn".into(), nonperipheral_series(SurfaceSig::planar(m)?)?),
        SeriesKind::Z | SeriesKind::Z0 => ("Z0".into(), planar_nonperipheral_series(m)?),
        SeriesKind::G => ("G".into(), even_multigraph_series(m)?),
        SeriesKind::F => ("F".into(), diagonal_multigraph_series(m)?),
        SeriesKind::H => ("H".into(), filtration_hilbert_series(m)?),
        SeriesKind::LowerH => ("h".into(), matrix_invariant_series(m)?),
        SeriesKind::CAll => ("c_all".into(), all_multicurve_series(m)?),
    })
}

pub fn cmd_series(args: &SeriesArgs) -> Result<SeriesReport> {
    let surface = args.surface.resolve()?;
    let (name, gf) = series_gf(args.which, &surface)?;
    let (sign, exp) = expected_symmetry(args.which, surface.m);
    Ok(SeriesReport {
        surface,
        series: name,
        num: strings(gf.num.coeffs()),
        den: gf.den.pairs().collect(),
        coeffs: strings(&gf.series_coeffs(args.max_deg)),
        symmetry: Symmetry {
            sign,
            exp,
            pass: gf.check_reciprocal_symmetry(sign, exp),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub r: usize,
    /// `c'(r)` from the enumeration.
    pub all: String,
    /// `c'(r)` from `(1 - t) H_m`.
    pub all_closed: String,
    /// `c(r)` from the enumerated `c'` series.
    pub c_series: String,
    /// `c(r)` by discarding diagrams with a boundary-parallel component.
    pub c_direct: String,
    /// `c(r)` from `Z_{g,n}`.
    pub c_closed: String,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub surface: SurfaceId,
    pub rows: Vec<CountRow>,
}

impl CountReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}

pub fn cmd_count(args: &CountArgs, cache: Option<&Cache>) -> Result<CountReport> {
    let surface = args.surface.resolve()?;
    let sig = surface.sig()?;
    let mut all = Vec::new();
    let mut direct = Vec::new();
    for r in 0..=args.max_len {
        let diagrams = cache::diagrams_via(cache, sig, r)?;
        all.push(diagrams.len() as u64);
        direct.push(count_nonperipheral_in(sig, &diagrams));
    }
    let c_series = crate::diagrams::nonperipheral_from_all(sig, &all);
    let all_closed = all_multicurve_series(sig.rank())?.series_coeffs(args.max_len);
    let c_closed = nonperipheral_series(sig)?.series_coeffs(args.max_len);
    let rows = (0..=args.max_len)
        .map(|r| {
            let a = BigInt::from(all[r]);
            let d = BigInt::from(direct[r]);
            CountRow {
                r,
                agree: a == all_closed[r] && c_series[r] == d && d == c_closed[r],
                all: a.to_string(),
                all_closed: all_closed[r].to_string(),
                c_series: c_series[r].to_string(),
                c_direct: d.to_string(),
                c_closed: c_closed[r].to_string(),
            }
        })
        .collect();
    Ok(CountReport { surface, rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub key: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckItem {
    fn new(key: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            key: key.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub items: Vec<CheckItem>,
    pub pass: bool,
}

impl VerifyReport {
    fn new(suite: &str, items: Vec<CheckItem>) -> Self {
        let pass = items.iter().all(|i| i.pass);
        Self {
            suite: suite.into(),
            items,
            pass,
        }
    }
}

fn symmetry_items(m_max: usize) -> Result<Vec<CheckItem>> {
    let per_m = (2..=m_max)
        .into_par_iter()
        .map(|m| {
            let surface = SurfaceId {
                g: None,
                n: None,
                m,
            };
            [
                SeriesKind::Z0,
                SeriesKind::G,
                SeriesKind::H,
                SeriesKind::LowerH,
            ]
            .into_iter()
            .map(|kind| {
                let (name, gf) = series_gf(kind, &surface)?;
                let (sign, exp) = expected_symmetry(kind, m);
                let pass = gf.check_reciprocal_symmetry(sign, exp);
                Ok(CheckItem::new(
                    format!("{name} m={m}"),
                    pass,
                    format!("sign {sign:+} exponent {exp}"),
                ))
            })
            .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_m.into_iter().flatten().collect())
}

fn pm_one(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn euler_items(m_max: usize, trials: usize, seed: u64) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();
    for m in 3..=m_max {
        let f = dissection_polynomial(m)?;
        let pass = f.degree() == Some(m - 3) && is_palindromic(&f, m - 3);
        items.push(CheckItem::new(
            format!("palindromic m={m}"),
            pass,
            format!("f = {f}"),
        ));
    }
    for m in 4..=m_max {
        let s = dissection_euler_sum(m)?;
        let want = 1 + pm_one(m as i64 - 4);
        items.push(CheckItem::new(
            format!("euler_sum m={m}"),
            s == want,
            format!("{s} (expected {want})"),
        ));
    }
    let top = m_max.min(9);
    if top >= 3 && trials > 0 {
        let pools: BTreeMap<usize, Vec<ChordMultigraph>> = (3..=top)
            .map(|m| Ok((m, all_dissections(m)?)))
            .collect::<Result<_>>()?;
        let mut rng = Prng::new(seed, u64::MAX);
        let mut failures = Vec::new();
        for t in 0..trials {
            let m = 3 + rng.index(top - 2);
            let pool = &pools[&m];
            let g0 = &pool[rng.index(pool.len())];
            let got = containing_alternating_sum(m, g0)?;
            if got != pm_one(m as i64 - 3 - g0.edge_count() as i64) {
                failures.push(format!("trial {t} m={m} {g0}"));
            }
        }
        items.push(CheckItem::new(
            "containing_sums",
            failures.is_empty(),
            format!(
                "{trials} random dissections with m <= {top}; {} failures {}",
                failures.len(),
                failures.join(" ")
            ),
        ));
    }
    Ok(items)
}

fn duality_items(m_max: usize) -> Result<Vec<CheckItem>> {
    let per_m = (2..=m_max)
        .into_par_iter()
        .map(|m| {
            let graphs = enumerate_even_simple(m)?;
            let set: std::collections::BTreeSet<&ChordMultigraph> = graphs.iter().collect();
            let (mut closed, mut involution, mut faces, mut degrees) = (0, 0, 0, 0);
            for g in &graphs {
                let d = g.dual();
                closed += usize::from(set.contains(&d));
                involution += usize::from(d.dual() == *g);
                faces += usize::from(d.faces().face_sizes == g.faces().face_sizes);
                let sum = g.faces().numerator_degree() + g.edge_count() + d.edge_count();
                degrees += usize::from(sum as i64 == 3 * m as i64 - 6);
            }
            let n = graphs.len();
            let item = |key: &str, ok: usize| {
                CheckItem::new(format!("{key} m={m}"), ok == n, format!("{ok}/{n}"))
            };
            Ok(vec![
                item("closed", closed),
                item("involution", involution),
                item("face_sizes", faces),
                item("degree_sum", degrees),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_m.into_iter().flatten().collect())
}

fn basis_items(
    m: usize,
    r: usize,
    prime: u64,
    samples: Option<usize>,
    seed: u64,
) -> Result<Vec<CheckItem>> {
    let sig = SurfaceSig::planar(m)?;
    let expected = filtration_hilbert_series(m)?.series_coeffs(r);
    (0..=r)
        .map(|k| {
            let want: usize = expected[k]
                .to_string()
                .parse()
                .map_err(|_| Error::Config("dimension too large".into()))?;
            let s = samples.unwrap_or(want + 20);
            let rank = dim_fil(sig, k, prime, s, seed)?;
            Ok(CheckItem::new(
                format!("rank m={m} r={k}"),
                rank == want,
                format!("rank {rank} = expected {want}"),
            ))
        })
        .collect()
}

fn identity_items(trials: usize, seed: u64, prime: u64) -> Result<Vec<CheckItem>> {
    let f = PrimeField::new(prime)?;
    Ok(charvar::verify_identities(&f, trials, seed)
        .into_iter()
        .map(|r| {
            CheckItem::new(
                r.name.clone(),
                r.passed(),
                format!("{} trials {} failures", r.trials, r.failures),
            )
        })
        .collect())
}

fn collapse_items(
    m_max: usize,
    r_max: usize,
    diagram_r_max: usize,
    cache: Option<&Cache>,
) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();
    for m in 2..=m_max {
        let g = even_multigraph_series(m)?.series_coeffs(r_max);
        let brute = (0..=r_max)
            .into_par_iter()
            .map(|r| count_even_multigraphs(m, r))
            .collect::<Result<Vec<_>>>()?;
        let pass = brute.iter().zip(&g).all(|(&b, c)| BigInt::from(b) == *c);
        items.push(CheckItem::new(
            format!("even_multigraphs m={m}"),
            pass,
            format!("r <= {r_max}: {brute:?}"),
        ));

        let top = diagram_r_max.min(r_max);
        let sig = SurfaceSig::planar(m)?;
        let all = (0..=top)
            .map(|r| Ok(cache::diagrams_via(cache, sig, r)?.len() as u64))
            .collect::<Result<Vec<_>>>()?;
        let collapsed = &IntPoly::from_coeffs(all.iter().map(|&c| BigInt::from(c)).collect())
            * &IntPoly::one_minus_t_pow(1).pow(m as u32);
        let pass = (0..=top).all(|r| collapsed.coeff(r) == BigInt::from(brute[r]));
        items.push(CheckItem::new(
            format!("genus0_diagrams m={m}"),
            pass,
            format!("r <= {top}"),
        ));
    }
    Ok(items)
}

pub fn cmd_verify(suite: &Suite, cache: Option<&Cache>) -> Result<VerifyReport> {
    Ok(match *suite {
        Suite::Symmetry { m_max } => VerifyReport::new("symmetry", symmetry_items(m_max)?),
        Suite::Euler {
            m_max,
            trials,
            seed,
        } => VerifyReport::new("euler", euler_items(m_max, trials, seed)?),
        Suite::Duality { m_max } => VerifyReport::new("duality", duality_items(m_max)?),
        Suite::Basis {
            m,
            r,
            prime,
            samples,
            seed,
        } => VerifyReport::new("basis", basis_items(m, r, prime, samples, seed)?),
        Suite::Identities {
            trials,
            seed,
            prime,
        } => VerifyReport::new("identities", identity_items(trials, seed, prime)?),
        Suite::Collapse {
            m_max,
            r_max,
            diagram_r_max,
        } => VerifyReport::new(
            "collapse",
            collapse_items(m_max, r_max, diagram_r_max, cache)?,
        ),
    })
}

fn surface_label(s: &SurfaceId) -> String {
    match (s.g, s.n) {
        (Some(g), Some(n)) => format!("S_{{{g},{n}}} (m = {})", s.m),
        _ => format!("m = {}", s.m),
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn render_series(rep: &SeriesReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string(rep)? + "\n",
        Format::Csv => {
            let mut out = String::from("series,degree,coeff\n");
            for (k, c) in rep.coeffs.iter().enumerate() {
                out += &format!("{},{k},{c}\n", rep.series);
            }
            out
        }
        Format::Plain => {
            let gf = rep.closed_form().expect("report built from a closed form");
            let s = rep.symmetry;
            format!(
                "{} {}\n{}(t) = {gf}\ncoefficients: {}\nsymmetry: f(1/t) = {}t^{} f(t) {}\n",
                surface_label(&rep.surface),
                rep.series,
                rep.series,
                rep.coeffs.join(" "),
                if s.sign < 0 { "-" } else { "+" },
                s.exp,
                status(s.pass),
            )
        }
    })
}

pub fn render_count(rep: &CountReport, format: Format) -> Result<String> {
    let header = [
        "r",
        "all",
        "all_closed",
        "c_series",
        "c_direct",
        "c_closed",
        "agree",
    ];
    let cells = |row: &CountRow| {
        vec![
            row.r.to_string(),
            row.all.clone(),
            row.all_closed.clone(),
            row.c_series.clone(),
            row.c_direct.clone(),
            row.c_closed.clone(),
            row.agree.to_string(),
        ]
    };
    Ok(match format {
        Format::Json => serde_json::to_string(rep)? + "\n",
        Format::Csv => {
            let mut out = header.join(",") + "\n";
            for row in &rep.rows {
                out += &(cells(row).join(",") + "\n");
            }
            out
        }
        Format::Plain => {
            let table: Vec<Vec<String>> =
                std::iter::once(header.iter().map(|s| s.to_string()).collect())
                    .chain(rep.rows.iter().map(cells))
                    .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|j| table.iter().map(|r| r[j].len()).max().unwrap_or(0))
                .collect();
            let mut out = format!("{}\n", surface_label(&rep.surface));
            for row in &table {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                out += line.join("  ").trim_end();
                out += "\n";
            }
            out += &format!("{}\n", status(rep.passed()));
            out
        }
    })
}

pub fn render_verify(rep: &VerifyReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string(rep)? + "\n",
        Format::Csv => {
            let mut out = String::from("suite,item,pass,detail\n");
            for i in &rep.items {
                out += &format!(
                    "{},{},{},\"{}\"\n",
                    rep.suite,
                    i.key,
                    i.pass,
                    i.detail.replace('"', "\"\"")
                );
            }
            out
        }
        Format::Plain => {
            let mut out = String::new();
            for i in &rep.items {
                out += &format!("{} {}: {}\n", status(i.pass), i.key, i.detail);
            }
            let failed = rep.items.iter().filter(|i| !i.pass).count();
            out += &format!(
                "{} {}: {} items, {failed} failed\n",
                status(rep.pass),
                rep.suite,
                rep.items.len()
            );
            out
        }
    })
}

/// Rendered output and whether every check passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cache = cli.cache_dir.as_ref().map(Cache::new);
    match &cli.command {
        Command::Series(args) => {
            let rep = cmd_series(args)?;
            Ok(Outcome {
                text: render_series(&rep, cli.format)?,
                passed: rep.symmetry.pass,
            })
        }
        Command::Count(args) => {
            let rep = cmd_count(args, cache.as_ref())?;
            Ok(Outcome {
                text: render_count(&rep, cli.format)?,
                passed: rep.passed(),
            })
        }
        Command::Verify { suite } => {
            let rep = cmd_verify(suite, cache.as_ref())?;
            Ok(Outcome {
                text: render_verify(&rep, cli.format)?,
                passed: rep.pass,
            })
        }
    }
}

/// Parses `args`, runs the command and prints its output. Returns the
/// process exit code: 0 if every check passed, 1 if one failed, 2 on error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
