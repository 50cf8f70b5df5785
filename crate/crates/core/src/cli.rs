//! The `cpt` command line: classification, tables, verification against the
//! reference data, Lorentz operator dumps, masses and chains.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
//! 3 resource cap exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::autosolve::{compute_septet, monomial_name, Monomial, CPT_NAMES, SEPTET_NAMES};
use crate::catalog::{enumerate_chain, field_to_algebra, mass_gy, mass_tensor, parse_rational, rep_params, ChainScheme, FieldSpec};
use crate::cptgroup::{generate_group, monomial_table, subgroup_type, table_reps, LABEL_NAMES};
use crate::error::{Error, Result};
use crate::exactnum::DEFAULT_DIM_CAP;
use crate::golden::{verify_against, GoldenSet, VerifyReport};
use crate::lorentzrep::{build_gn_rep, build_waerden, verify_lorentz_relations, AnyRep, LorentzReport, SurdMatrix};
use crate::spinbasis::{build_brauer_weyl_with, BuildOptions, PauliConvention};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

const TOOL: &str = concat!("cpt ", env!("CARGO_PKG_VERSION"));

#[derive(Parser, Debug)]
#[command(name = "cpt", version, about = "CPT groups of spinor fields over Brauer-Weyl Clifford bases")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Render monomials as ℰ₁₂ instead of E_12.
    #[arg(long, global = true)]
    pub unicode: bool,
    #[arg(long, global = true, value_enum, default_value_t = Pauli::BrauerWeyl)]
    pub pauli: Pauli,
    /// Largest matrix dimension any construction may reach.
    #[arg(long, global = true, env = "CPT_DIM_CAP", default_value_t = DEFAULT_DIM_CAP)]
    pub dim_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pauli {
    /// σ3 = diag(i, -i).
    BrauerWeyl,
    /// σ3 = diag(1, -1).
    Standard,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Septet, sign vector and group type of a field.
    Classify(FieldArgs),
    /// The signed CPT/Z2 multiplication table of a field.
    Table(FieldArgs),
    /// Regenerate the reference tables and diff them cell by cell.
    Verify {
        /// Directory holding replacement reference files.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Lorentz-group operators with their commutation report.
    Rep(RepArgs),
    /// Mass spectrum values.
    Mass(MassArgs),
    /// Equal-spin chain of tensor fields.
    Chain {
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value = "1")]
        kappa: String,
    },
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    /// `l=1/2`, `k=3,r=2` or `(3/2,1)+(1,3/2)`.
    #[arg(long, conflicts_with_all = ["k", "r"])]
    pub field: Option<String>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long, requires = "k")]
    pub r: Option<u32>,
}

#[derive(Args, Debug)]
pub struct RepArgs {
    #[arg(long, requires = "l1", conflicts_with_all = ["l", "ldot"])]
    pub l0: Option<String>,
    #[arg(long, requires = "l0", allow_hyphen_values = true)]
    pub l1: Option<String>,
    #[arg(long, requires = "ldot")]
    pub l: Option<String>,
    #[arg(long, requires = "l")]
    pub ldot: Option<String>,
}

#[derive(Args, Debug)]
pub struct MassArgs {
    /// Values of l for μ = 2κ/(2l+1); comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "k")]
    pub l: Vec<String>,
    /// Tensor field counts for μ = κ/((k+1)(r+1)).
    #[arg(long, requires = "r")]
    pub k: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long, default_value = "1")]
    pub kappa: String,
}

/// One septet member in machine output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberJson {
    pub name: String,
    pub sign: i8,
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub sign: i8,
    pub label: String,
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyJson {
    pub tool: String,
    pub field: String,
    pub generators: usize,
    pub matrix_dim: usize,
    pub septet: Vec<MemberJson>,
    pub sign_vector: Vec<i8>,
    pub group_type: String,
    pub ext_type: String,
    pub subgroup: Option<SubgroupJson>,
    pub table: Vec<Vec<CellJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupJson {
    pub kind: String,
    pub abelian: bool,
}

struct Ctx {
    format: Format,
    unicode: bool,
    opts: BuildOptions,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DimensionCap { .. } | Error::GeneratorRange { .. } | Error::SignatureCap { .. } => EXIT_CAP,
        Error::Parse(_) | Error::Unsupported(_) => EXIT_USAGE,
        _ => EXIT_MISMATCH,
    }
}

/// Parses `args` (program name first), writes the payload to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Runs a parsed command, returning the rendered payload and the exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let convention = match cli.pauli {
        Pauli::BrauerWeyl => PauliConvention::BrauerWeyl,
        Pauli::Standard => PauliConvention::Standard,
    };
    let cx = Ctx {
        format: cli.format,
        unicode: cli.unicode,
        opts: BuildOptions {
            convention,
            dim_cap: cli.dim_cap,
            ..BuildOptions::default()
        },
    };
    match &cli.command {
        Command::Classify(f) => Ok((
            cmd_classify(&cx, &resolve_field(f)?).map_err(|e| degenerate(convention, e))?,
            EXIT_OK,
        )),
        Command::Table(f) => Ok((cmd_table(&cx, &resolve_field(f)?).map_err(|e| degenerate(convention, e))?, EXIT_OK)),
        Command::Verify { golden } => {
            let set = match golden {
                Some(dir) => GoldenSet::load_dir(dir)?,
                None => GoldenSet::embedded(),
            };
            let report = verify_against(&set)?;
            let code = if report.passed() { EXIT_OK } else { EXIT_MISMATCH };
            Ok((render_verify(&cx, &report)?, code))
        }
        Command::Rep(r) => cmd_rep(&cx, r),
        Command::Mass(m) => Ok((cmd_mass(&cx, m)?, EXIT_OK)),
        Command::Chain { scheme, depth, kappa } => Ok((cmd_chain(&cx, scheme, *depth, kappa)?, EXIT_OK)),
    }
}

/// With a Hermitian `σ3` every generator has equal transpose and conjugation
/// signs, so `Π = ±E`, `S = ±1` and the closure collapses to order 8.
fn degenerate(convention: PauliConvention, e: Error) -> Error {
    match (convention, &e) {
        (PauliConvention::Standard, Error::GroupOrder(n)) => Error::Unsupported(format!(
            "with σ3 = diag(1,-1) the C and T representatives coincide up to sign, so the CPT closure has order {n}; \
             use --pauli brauer-weyl"
        )),
        _ => e,
    }
}

fn resolve_field(f: &FieldArgs) -> Result<FieldSpec> {
    match (&f.field, f.k, f.r) {
        (Some(s), _, _) => s.parse(),
        (None, Some(k), Some(r)) => Ok(FieldSpec::tensor(k, r)),
        (None, Some(k), None) => Ok(FieldSpec::chiral(k)),
        (None, None, _) => Err(usage("give --field <spec> or --k <n> [--r <n>]")),
    }
}

fn to_json<T: Serialize>(x: &T) -> Result<String> {
    serde_json::to_string_pretty(x)
        .map(|s| s + "\n")
        .map_err(|e| Error::Consistency(e.to_string()))
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_mono(x: Monomial, dim: usize, unicode: bool) -> String {
    let sign = match (x.sign < 0, unicode) {
        (false, _) => "",
        (true, false) => "-",
        (true, true) => "\u{2212}",
    };
    let body = if x.mask == 0 {
        if unicode {
            let sub: String = dim
                .to_string()
                .chars()
                .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap_or(0)).unwrap_or(c))
                .collect();
            format!("1{sub}")
        } else {
            format!("1_{dim}")
        }
    } else {
        monomial_name(x.mask, unicode)
    };
    format!("{sign}{body}")
}

struct Classified {
    json: ClassifyJson,
    cells: Option<[[Monomial; 8]; 8]>,
    dim: usize,
}

fn classify_field(cx: &Ctx, field: &FieldSpec) -> Result<Classified> {
    let alg = field_to_algebra(field);
    let base = |group: &str| ClassifyJson {
        tool: TOOL.into(),
        field: field.to_string(),
        generators: alg.num_generators,
        matrix_dim: alg.matrix_dim,
        septet: Vec::new(),
        sign_vector: Vec::new(),
        group_type: group.into(),
        ext_type: group.into(),
        subgroup: None,
        table: Vec::new(),
    };
    let Some(m) = field.generator_m() else {
        return Ok(Classified {
            json: base("trivial"),
            cells: None,
            dim: 1,
        });
    };
    let g = build_brauer_weyl_with(m, cx.opts)?;
    let septet = compute_septet(&g)?;
    let group = generate_group(&septet)?;
    let sub = subgroup_type(&septet);
    let reps = table_reps(&septet);
    let cells = monomial_table(&septet);
    let mut json = base(group.group_type.ascii());
    json.ext_type = group.ext_type.into();
    json.septet = septet
        .monomials()
        .iter()
        .zip(SEPTET_NAMES)
        .map(|(x, n)| MemberJson {
            name: n.into(),
            sign: x.sign,
            indices: x.indices(),
        })
        .collect();
    json.sign_vector = group.sign_vector.0.to_vec();
    json.subgroup = Some(SubgroupJson {
        kind: sub.kind.name().into(),
        abelian: sub.abelian,
    });
    json.table = cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    let label = reps.iter().position(|r| r.mask == c.mask).map(|i| LABEL_NAMES[i]).unwrap_or("?");
                    CellJson {
                        sign: c.sign,
                        label: label.into(),
                        indices: c.indices(),
                    }
                })
                .collect()
        })
        .collect();
    Ok(Classified {
        json,
        cells: Some(cells),
        dim: g.dim(),
    })
}

fn signs_text(v: &[i8]) -> String {
    v.iter().map(|&s| if s > 0 { "+" } else { "-" }).collect::<Vec<_>>().join(",")
}

fn cmd_classify(cx: &Ctx, field: &FieldSpec) -> Result<String> {
    let c = classify_field(cx, field)?;
    let j = &c.json;
    match cx.format {
        Format::Json => to_json(j),
        Format::Csv => {
            let mut s = String::from("member,symmetry,sign,indices,square,group_type,ext_type\n");
            for (i, mem) in j.septet.iter().enumerate() {
                let idx = mem.indices.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    mem.name,
                    CPT_NAMES[i],
                    mem.sign,
                    idx,
                    j.sign_vector[i],
                    csv_escape(&j.group_type),
                    csv_escape(&j.ext_type)
                )
                .expect("string write");
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "field        {}", j.field).expect("string write");
            if c.cells.is_none() {
                writeln!(s, "algebra      trivial (scalar field, no generators)").expect("string write");
                return Ok(s);
            }
            writeln!(
                s,
                "algebra      {} generators, {}x{} matrices",
                j.generators, j.matrix_dim, j.matrix_dim
            )
            .expect("string write");
            for (i, mem) in j.septet.iter().enumerate() {
                let mono = Monomial::new(mem.sign, &mem.indices);
                writeln!(s, "{:<4} ~ {:<4} {}", mem.name, CPT_NAMES[i], render_mono(mono, c.dim, cx.unicode)).expect("string write");
            }
            writeln!(s, "sign vector  ({})", signs_text(&j.sign_vector)).expect("string write");
            writeln!(s, "group type   {}", j.group_type).expect("string write");
            writeln!(s, "ext type     {}", j.ext_type).expect("string write");
            if let Some(sub) = &j.subgroup {
                writeln!(
                    s,
                    "subgroup     {} ({})",
                    sub.kind,
                    if sub.abelian { "abelian" } else { "non-abelian" }
                )
                .expect("string write");
            }
            Ok(s)
        }
    }
}

fn cmd_table(cx: &Ctx, field: &FieldSpec) -> Result<String> {
    let c = classify_field(cx, field)?;
    let Some(cells) = c.cells else {
        return Err(usage(format!("{field} is the scalar field: it has no CPT table")));
    };
    match cx.format {
        Format::Json => to_json(&c.json.table),
        Format::Csv => {
            let header: Vec<String> = cells[0].iter().map(|x| render_mono(*x, c.dim, false)).collect();
            let mut s = format!(",{}\n", header.join(","));
            for row in &cells {
                let parts: Vec<String> = row.iter().map(|x| render_mono(*x, c.dim, false)).collect();
                writeln!(s, "{},{}", render_mono(row[0], c.dim, false), parts.join(",")).expect("string write");
            }
            Ok(s)
        }
        Format::Text => {
            let grid: Vec<Vec<String>> = std::iter::once(cells[0].iter().map(|x| render_mono(*x, c.dim, cx.unicode)).collect())
                .chain(
                    cells
                        .iter()
                        .map(|row| row.iter().map(|x| render_mono(*x, c.dim, cx.unicode)).collect()),
                )
                .collect();
            let labels: Vec<String> = std::iter::once(String::new())
                .chain(cells.iter().map(|r| render_mono(r[0], c.dim, cx.unicode)))
                .collect();
            let width = grid.iter().flatten().chain(&labels).map(|x| x.chars().count()).max().unwrap_or(1);
            let mut s = String::new();
            for (i, row) in grid.iter().enumerate() {
                let mut line = format!("{:>w$} |", labels[i], w = width);
                for cell in row {
                    let pad = width - cell.chars().count();
                    write!(line, " {}{}", " ".repeat(pad), cell).expect("string write");
                }
                writeln!(s, "{}", line.trim_end()).expect("string write");
                if i == 0 {
                    writeln!(s, "{}", "-".repeat(line.chars().count())).expect("string write");
                }
            }
            Ok(s)
        }
    }
}

fn render_verify(cx: &Ctx, r: &VerifyReport) -> Result<String> {
    match cx.format {
        Format::Json => to_json(r),
        Format::Csv => {
            let mut s = String::from("site,expected,actual,erratum,explained\n");
            let unexplained: Vec<_> = r.unexplained().collect();
            for d in &r.diffs {
                let id = d.erratum.map(|e| e.id()).unwrap_or("");
                let explained = !unexplained.contains(&d);
                writeln!(
                    s,
                    "{},{},{},{},{}",
                    csv_escape(&d.site.to_string()),
                    d.expected,
                    d.actual,
                    id,
                    explained
                )
                .expect("string write");
            }
            Ok(s)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "first-principles results").expect("string write");
            for f in &r.fields {
                writeln!(s, "  {:<6} septet {}", f.field, f.septet.join(" ")).expect("string write");
                writeln!(s, "  {:<6} signs ({}) -> {}", "", f.sign_vector, f.group_type).expect("string write");
                if f.published_septet != f.septet || f.published_sign_vector != f.sign_vector || f.published_group_type != f.group_type {
                    writeln!(
                        s,
                        "  {:<6} published {} signs ({}) -> {}",
                        "",
                        f.published_septet.join(" "),
                        f.published_sign_vector,
                        f.published_group_type
                    )
                    .expect("string write");
                }
            }
            writeln!(s, "errata").expect("string write");
            for p in &r.errata {
                writeln!(s, "  [{}] {}: {}", if p.proven { "proven" } else { "UNPROVEN" }, p.id, p.summary).expect("string write");
                for (fact, ok) in &p.facts {
                    writeln!(s, "      {} {}", if *ok { "ok  " } else { "FAIL" }, fact).expect("string write");
                }
            }
            let unexplained: Vec<_> = r.unexplained().collect();
            writeln!(s, "differences").expect("string write");
            for d in &r.diffs {
                let tag = match (d.erratum, unexplained.contains(&d)) {
                    (Some(e), false) => format!("known erratum {}", e.id()),
                    _ => "MISMATCH".to_string(),
                };
                writeln!(s, "  {}: expected {}, computed {} [{}]", d.site, d.expected, d.actual, tag).expect("string write");
            }
            writeln!(
                s,
                "{} comparisons, {} differences, {} unexplained: {}",
                r.comparisons,
                r.diffs.len(),
                unexplained.len(),
                if unexplained.is_empty() { "PASS" } else { "FAIL" }
            )
            .expect("string write");
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct RepJson {
    tool: String,
    kind: &'static str,
    params: Vec<(String, String)>,
    dim: usize,
    basis_order: &'static str,
    basis: Vec<(String, String)>,
    operators: Vec<(String, Vec<Vec<String>>)>,
    relations: Vec<(String, bool)>,
}

fn dump(m: &SurdMatrix) -> Vec<Vec<String>> {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| m.get(r, c).to_string()).collect())
        .collect()
}

fn relations(rep: &LorentzReport) -> Vec<(String, bool)> {
    rep.lorentz.iter().chain(&rep.split).map(|r| (r.name.clone(), r.holds)).collect()
}

fn cmd_rep(cx: &Ctx, r: &RepArgs) -> Result<(String, i32)> {
    let q = |s: &Option<String>| -> Result<BigRational> { parse_rational(s.as_deref().unwrap_or_default()) };
    let payload = match (&r.l0, &r.l) {
        (Some(_), _) => {
            let (l0, l1) = (q(&r.l0)?, q(&r.l1)?);
            let rep = build_gn_rep(&l0, &l1)?;
            if rep.dim > cx.opts.dim_cap {
                return Err(Error::DimensionCap {
                    requested: rep.dim,
                    cap: cx.opts.dim_cap,
                });
            }
            let report = verify_lorentz_relations(AnyRep::GelfandNaimark(&rep))?;
            RepJson {
                tool: TOOL.into(),
                kind: "gelfand_naimark",
                params: vec![("l0".into(), l0.to_string()), ("l1".into(), l1.to_string())],
                dim: rep.dim,
                basis_order: "ascending k, then ascending nu",
                basis: rep.basis.iter().map(|(k, nu)| (k.to_string(), nu.to_string())).collect(),
                operators: [
                    ("H3", &rep.h3),
                    ("H+", &rep.hp),
                    ("H-", &rep.hm),
                    ("F3", &rep.f3),
                    ("F+", &rep.fp),
                    ("F-", &rep.fm),
                ]
                .into_iter()
                .map(|(n, m)| (n.to_string(), dump(m)))
                .collect(),
                relations: relations(&report),
            }
        }
        (None, Some(_)) => {
            let (l, ld) = (q(&r.l)?, q(&r.ldot)?);
            let w = build_waerden(&l, &ld)?;
            if w.dim > cx.opts.dim_cap {
                return Err(Error::DimensionCap {
                    requested: w.dim,
                    cap: cx.opts.dim_cap,
                });
            }
            let report = verify_lorentz_relations(AnyRep::Waerden(&w))?;
            let o = &w.ops;
            RepJson {
                tool: TOOL.into(),
                kind: "van_der_waerden",
                params: vec![("l".into(), l.to_string()), ("l_dot".into(), ld.to_string())],
                dim: w.dim,
                basis_order: "ascending m, then ascending m_dot",
                basis: w.basis.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
                operators: [
                    ("X+", &o.xp),
                    ("X-", &o.xm),
                    ("X3", &o.x3),
                    ("Y+", &o.yp),
                    ("Y-", &o.ym),
                    ("Y3", &o.y3),
                ]
                .into_iter()
                .map(|(n, m)| (n.to_string(), dump(m)))
                .collect(),
                relations: relations(&report),
            }
        }
        _ => return Err(usage("give --l0 <q> --l1 <q> or --l <q> --ldot <q>")),
    };
    let code = if payload.relations.iter().all(|r| r.1) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    let text = match cx.format {
        Format::Json => to_json(&payload)?,
        Format::Csv => {
            let mut s = String::from("operator,row,col,value\n");
            for (name, m) in &payload.operators {
                for (i, row) in m.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        if v != "0" {
                            writeln!(s, "{name},{i},{j},{}", csv_escape(v)).expect("string write");
                        }
                    }
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            let params: Vec<String> = payload.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(s, "{} rep {}, dim {}", payload.kind, params.join(" "), payload.dim).expect("string write");
            writeln!(
                s,
                "basis ({}): {}",
                payload.basis_order,
                payload
                    .basis
                    .iter()
                    .map(|(a, b)| format!("({a},{b})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            )
            .expect("string write");
            for (name, m) in &payload.operators {
                writeln!(s, "{name}:").expect("string write");
                for row in m {
                    writeln!(s, "  [{}]", row.join(", ")).expect("string write");
                }
            }
            for (name, ok) in &payload.relations {
                writeln!(s, "{} {name}", if *ok { "ok  " } else { "FAIL" }).expect("string write");
            }
            s
        }
    };
    Ok((text, code))
}

fn cmd_mass(cx: &Ctx, m: &MassArgs) -> Result<String> {
    let kappa = parse_rational(&m.kappa)?;
    let rows: Vec<Vec<String>> = match (m.k, m.r) {
        (Some(k), Some(r)) => {
            let (mu, spin) = mass_tensor(k, r, &kappa)?;
            vec![
                vec!["k".into(), "r".into(), "spin".into(), "mu".into()],
                vec![k.to_string(), r.to_string(), spin.to_string(), mu.to_string()],
            ]
        }
        _ if !m.l.is_empty() => {
            let mut rows = vec![vec!["l".into(), "mu".into()]];
            for l in &m.l {
                let lv = parse_rational(l)?;
                rows.push(vec![lv.to_string(), mass_gy(&lv, &kappa)?.to_string()]);
            }
            rows
        }
        _ => return Err(usage("give --l <q>[,<q>..] or --k <n> --r <n>")),
    };
    render_rows(cx, &rows)
}

fn cmd_chain(cx: &Ctx, scheme: &str, depth: u32, kappa: &str) -> Result<String> {
    let scheme: ChainScheme = scheme.parse()?;
    let kappa = parse_rational(kappa)?;
    let mut rows = vec![vec![
        "k".to_string(),
        "r".into(),
        "field".into(),
        "dim".into(),
        "spin".into(),
        "mu".into(),
        "l0".into(),
        "l1".into(),
    ]];
    for e in enumerate_chain(scheme, depth)? {
        let (mu, spin) = mass_tensor(e.field.k, e.field.r, &kappa)?;
        let rp = rep_params(&e.field);
        rows.push(vec![
            e.field.k.to_string(),
            e.field.r.to_string(),
            e.field.to_string(),
            e.dim.to_string(),
            spin.to_string(),
            mu.to_string(),
            rp.l0.to_string(),
            rp.l1.to_string(),
        ]);
    }
    render_rows(cx, &rows)
}

/// First row is the header.
fn render_rows(cx: &Ctx, rows: &[Vec<String>]) -> Result<String> {
    match cx.format {
        Format::Json => {
            let header = &rows[0];
            let objs: Vec<serde_json::Map<String, serde_json::Value>> = rows[1..]
                .iter()
                .map(|r| {
                    header
                        .iter()
                        .cloned()
                        .zip(r.iter().map(|v| serde_json::Value::String(v.clone())))
                        .collect()
                })
                .collect();
            to_json(&objs)
        }
        Format::Csv => Ok(rows
            .iter()
            .map(|r| r.iter().map(|x| csv_escape(x)).collect::<Vec<_>>().join(",") + "\n")
            .collect()),
        Format::Text => {
            let widths: Vec<usize> = (0..rows[0].len())
                .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
                .collect();
            Ok(rows
                .iter()
                .map(|r| {
                    r.iter()
                        .zip(&widths)
                        .map(|(x, w)| format!("{x:<w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                        .trim_end()
                        .to_string()
                        + "\n"
                })
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cpt").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn classify_spin_half() {
        let (code, out, _) = run_str(&["classify", "--field", "l=1/2"]);
        assert_eq!(code, 0);
        assert!(out.contains("E_1234") && out.contains("E_13"));
        assert!(out.contains("D4xZ2"));
    }

    #[test]
    fn table_cell_text() {
        let (code, out, _) = run_str(&["table", "--field", "l=1/2", "--unicode"]);
        assert_eq!(code, 0);
        let row = out.lines().find(|l| l.trim_start().starts_with("ℰ₃₄ |")).unwrap();
        let cells: Vec<&str> = row.split('|').nth(1).unwrap().split_whitespace().collect();
        assert_eq!(cells[1], "ℰ₁₂");
    }

    #[test]
    fn json_round_trip() {
        let (_, out, _) = run_str(&["classify", "--field", "l=1", "--format", "json"]);
        let parsed: ClassifyJson = serde_json::from_str(&out).unwrap();
        assert_eq!(parsed.sign_vector, vec![-1, 1, 1, 1, 1, -1, 1]);
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", out);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["classify", "--field", "l=banana"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["rep", "--l0", "0", "--l1", "1/2"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["classify", "--field", "l=3/2", "--dim-cap", "8"]).0, EXIT_CAP);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn scalar_field_is_trivial() {
        let (code, out, _) = run_str(&["classify", "--k", "0", "--r", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("trivial"));
    }

    #[test]
    fn mass_and_chain() {
        let (_, out, _) = run_str(&["mass", "--l", "0,1/2,1", "--format", "csv"]);
        assert_eq!(out, "l,mu\n0,2\n1/2,1\n1,2/3\n");
        let (_, out, _) = run_str(&["chain", "--scheme", "fermi", "--depth", "3", "--format", "csv"]);
        let mus: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit(',').nth(2).unwrap()).collect();
        assert_eq!(mus, ["1/2", "1/6", "1/12"]);
    }
}
