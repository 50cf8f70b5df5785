//! Reference tables and claims, transcribed cell by cell, and the comparison of
//! first-principles results against them.
//!
//! Every disagreement must be covered by an erratum whose proof is re-run here;
//! otherwise the comparison fails.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::autosolve::{compute_septet, law_holds, solve_monomial, AutomorphismSeptet, Monomial, SignedMonomial, SEPTET_NAMES};
use crate::cptgroup::{
    abstract_cpt_table, generate_group, generate_group_from_matrices, product_table, table_reps, GroupType, SignVector, CPT_LABELS,
    LABEL_NAMES,
};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussianRational};
use crate::spinbasis::{build_brauer_weyl, reality_signature, GeneratorSet};

pub const FILE_NAMES: [&str; 6] = ["tab1.txt", "tab4.txt", "tab5.txt", "tab6.txt", "claims.txt", "e6_c8.txt"];

const EMBEDDED: [&str; 6] = [
    include_str!("data/tab1.txt"),
    include_str!("data/tab4.txt"),
    include_str!("data/tab5.txt"),
    include_str!("data/tab6.txt"),
    include_str!("data/claims.txt"),
    include_str!("data/e6_c8.txt"),
];

/// A reference multiplication table over signed monomials of `C_{2m}`.
#[derive(Clone, Debug, PartialEq)]
pub struct GoldenTable {
    pub name: &'static str,
    pub m: usize,
    pub header: [Monomial; 8],
    pub cells: [[Monomial; 8]; 8],
}

#[derive(Clone, Debug, PartialEq)]
pub struct FieldClaim {
    pub field: String,
    pub septet: [Monomial; 7],
    pub signs: SignVector,
    pub group_type: GroupType,
    pub variants: Vec<(usize, Monomial)>,
    pub reality: Option<Vec<i8>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GoldenSet {
    pub tab1: [[u8; 8]; 8],
    pub tables: [GoldenTable; 3],
    pub claims: Vec<FieldClaim>,
    /// The printed `ℰ6` of the `C8` basis.
    pub e6_c8: ExactMatrix,
}

fn strip(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn perr(file: &str, line: usize, msg: impl fmt::Display) -> Error {
    Error::Parse(format!("{file}:{line}: {msg}"))
}

/// `I`, `-I`, `W`, `-E1234`, `E{2,11}`.
pub fn parse_monomial(tok: &str, m: usize) -> Option<Monomial> {
    let (sign, body) = match tok.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let mask = match body {
        "I" => 0,
        "W" => (1u32 << (2 * m)) - 1,
        _ => {
            let digits = body.strip_prefix('E')?;
            let idx: Vec<usize> = match digits.strip_prefix('{').and_then(|d| d.strip_suffix('}')) {
                Some(list) => list.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?,
                None => digits.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?,
            };
            if idx.is_empty() || idx.iter().any(|&j| j == 0 || j > 2 * m) || idx.windows(2).any(|w| w[0] >= w[1]) {
                return None;
            }
            Monomial::new(1, &idx).mask
        }
    };
    Some(Monomial { sign, mask })
}

/// Inverse of [`parse_monomial`].
pub fn format_monomial(x: Monomial, m: usize) -> String {
    let sign = if x.sign < 0 { "-" } else { "" };
    let body = if x.mask == 0 {
        "I".to_string()
    } else if x.mask == (1u32 << (2 * m)) - 1 && m > 3 {
        "W".to_string()
    } else if 2 * m <= 9 {
        format!("E{}", x.indices().iter().map(|j| j.to_string()).collect::<String>())
    } else {
        format!("E{{{}}}", x.indices().iter().map(|j| j.to_string()).collect::<Vec<_>>().join(","))
    };
    format!("{sign}{body}")
}

fn parse_rows<T>(file: &str, lines: &[(usize, &str)], parse: impl Fn(&str) -> Option<T>) -> Result<([T; 8], [[T; 8]; 8])>
where
    T: Copy + PartialEq + fmt::Debug,
{
    let (hl, header_line) = lines.first().ok_or_else(|| perr(file, 0, "missing header"))?;
    let toks: Vec<&str> = header_line
        .strip_prefix("header")
        .ok_or_else(|| perr(file, *hl, "expected `header`"))?
        .split_whitespace()
        .collect();
    let parse_all = |line: usize, toks: &[&str]| -> Result<[T; 8]> {
        if toks.len() != 8 {
            return Err(perr(file, line, format!("expected 8 entries, found {}", toks.len())));
        }
        let v: Vec<T> = toks
            .iter()
            .map(|t| parse(t).ok_or_else(|| perr(file, line, format!("bad entry `{t}`"))))
            .collect::<Result<_>>()?;
        Ok(v.try_into().expect("length checked"))
    };
    let header = parse_all(*hl, &toks)?;
    if lines.len() != 9 {
        return Err(perr(file, *hl, format!("expected 8 rows, found {}", lines.len() - 1)));
    }
    let mut cells = [header; 8];
    for (r, (ln, text)) in lines[1..].iter().enumerate() {
        let (label, rest) = text.split_once('|').ok_or_else(|| perr(file, *ln, "expected `label | cells`"))?;
        let label = parse(label.trim()).ok_or_else(|| perr(file, *ln, "bad row label"))?;
        if label != header[r] {
            return Err(perr(file, *ln, format!("row label {label:?} does not match header position {r}")));
        }
        cells[r] = parse_all(*ln, &rest.split_whitespace().collect::<Vec<_>>())?;
    }
    Ok((header, cells))
}

fn parse_tab1(src: &str) -> Result<[[u8; 8]; 8]> {
    let lines: Vec<_> = strip(src).collect();
    let (header, cells) = parse_rows("tab1.txt", &lines, |t| CPT_LABELS.iter().position(|l| *l == t).map(|i| i as u8))?;
    if header != std::array::from_fn(|i| i as u8) {
        return Err(perr("tab1.txt", lines[0].0, "header must list 1 P T PT C CP CT CPT"));
    }
    Ok(cells)
}

fn parse_table(name: &'static str, file: &str, src: &str) -> Result<GoldenTable> {
    let lines: Vec<_> = strip(src).collect();
    let (ml, mline) = lines.first().ok_or_else(|| perr(file, 0, "empty"))?;
    let m: usize = mline
        .strip_prefix("m ")
        .and_then(|x| x.trim().parse().ok())
        .filter(|m| (1..=4).contains(m))
        .ok_or_else(|| perr(file, *ml, "expected `m <1..4>`"))?;
    let (header, cells) = parse_rows(file, &lines[1..], |t| parse_monomial(t, m))?;
    Ok(GoldenTable { name, m, header, cells })
}

/// Line number, field name and `key -> (line, value)` of a claim block.
type PendingClaim<'a> = (usize, String, BTreeMap<&'a str, (usize, String)>);

fn parse_claims(src: &str) -> Result<Vec<FieldClaim>> {
    let file = "claims.txt";
    let mut out: Vec<FieldClaim> = Vec::new();
    let mut pending: Option<PendingClaim> = None;
    let finish = |p: PendingClaim, extra: &[(usize, String)], out: &mut Vec<FieldClaim>| -> Result<()> {
        let (line, field, kv) = p;
        let m = field_m(&field).ok_or_else(|| perr(file, line, format!("unknown field `{field}`")))?;
        let get = |k: &str| kv.get(k).ok_or_else(|| perr(file, line, format!("field `{field}` lacks `{k}`")));
        let (sl, septet_src) = get("septet")?;
        let septet: Vec<Monomial> = septet_src
            .split_whitespace()
            .map(|t| parse_monomial(t, m).ok_or_else(|| perr(file, *sl, format!("bad monomial `{t}`"))))
            .collect::<Result<_>>()?;
        let septet: [Monomial; 7] = septet.try_into().map_err(|_| perr(file, *sl, "septet needs 7 entries"))?;
        let (gl, signs) = get("signs")?;
        let signs = SignVector::parse(signs).ok_or_else(|| perr(file, *gl, "bad sign vector"))?;
        let (tl, ty) = get("type")?;
        let group_type = GroupType::parse(ty).ok_or_else(|| perr(file, *tl, "bad group type"))?;
        let reality = match kv.get("reality") {
            Some((rl, r)) => Some(
                r.split(',')
                    .map(|x| match x.trim() {
                        "+" => Ok(1),
                        "-" => Ok(-1),
                        _ => Err(perr(file, *rl, "bad reality sign")),
                    })
                    .collect::<Result<Vec<i8>>>()?,
            ),
            None => None,
        };
        let mut variants = Vec::new();
        for (vl, v) in extra {
            let (name, mono) = v
                .split_once(' ')
                .ok_or_else(|| perr(file, *vl, "expected `variant <member> <monomial>`"))?;
            let pos = SEPTET_NAMES
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| perr(file, *vl, "bad member name"))?;
            let mono = parse_monomial(mono.trim(), m).ok_or_else(|| perr(file, *vl, "bad monomial"))?;
            variants.push((pos, mono));
        }
        out.push(FieldClaim {
            field,
            septet,
            signs,
            group_type,
            variants,
            reality,
        });
        Ok(())
    };
    let mut variants: Vec<(usize, String)> = Vec::new();
    for (ln, line) in strip(src) {
        let (key, val) = line
            .split_once(' ')
            .map(|(k, v)| (k, v.trim()))
            .ok_or_else(|| perr(file, ln, "expected `key value`"))?;
        match key {
            "field" => {
                if let Some(p) = pending.take() {
                    finish(p, &variants, &mut out)?;
                    variants.clear();
                }
                pending = Some((ln, val.to_string(), BTreeMap::new()));
            }
            "septet" | "signs" | "type" | "reality" => {
                let p = pending.as_mut().ok_or_else(|| perr(file, ln, "entry before any `field`"))?;
                p.2.insert(key, (ln, val.to_string()));
            }
            "variant" => variants.push((ln, val.to_string())),
            _ => return Err(perr(file, ln, format!("unknown key `{key}`"))),
        }
    }
    if let Some(p) = pending.take() {
        finish(p, &variants, &mut out)?;
    }
    Ok(out)
}

fn parse_blocks(src: &str) -> Result<ExactMatrix> {
    let file = "e6_c8.txt";
    let rows: Vec<(usize, Vec<&str>)> = strip(src).map(|(l, s)| (l, s.split_whitespace().collect())).collect();
    if rows.len() != 8 || rows.iter().any(|(_, r)| r.len() != 8) {
        return Err(perr(file, 0, "expected 8 rows of 8 blocks"));
    }
    let mut out = ExactMatrix::zeros(16);
    for (br, (ln, row)) in rows.iter().enumerate() {
        for (bc, tok) in row.iter().enumerate() {
            let v = match *tok {
                "0" => continue,
                "1" => GaussianRational::from_ints(1, 0),
                "-1" => GaussianRational::from_ints(-1, 0),
                "i" => GaussianRational::from_ints(0, 1),
                "-i" => GaussianRational::from_ints(0, -1),
                _ => return Err(perr(file, *ln, format!("bad block `{tok}`"))),
            };
            out.set(2 * br, 2 * bc, v.clone());
            out.set(2 * br + 1, 2 * bc + 1, v);
        }
    }
    Ok(out)
}

/// Half the generator count for the three worked fields.
fn field_m(field: &str) -> Option<usize> {
    match field {
        "l=1/2" => Some(2),
        "l=1" => Some(3),
        "l=3/2" => Some(4),
        _ => None,
    }
}

impl GoldenSet {
    pub fn from_sources(src: [&str; 6]) -> Result<Self> {
        let tables = [
            parse_table("Tab4", "tab4.txt", src[1])?,
            parse_table("Tab5", "tab5.txt", src[2])?,
            parse_table("Tab6", "tab6.txt", src[3])?,
        ];
        Ok(GoldenSet {
            tab1: parse_tab1(src[0])?,
            tables,
            claims: parse_claims(src[4])?,
            e6_c8: parse_blocks(src[5])?,
        })
    }

    pub fn embedded() -> Self {
        GoldenSet::from_sources(EMBEDDED).expect("embedded reference data parses")
    }

    /// Reads [`FILE_NAMES`] from `dir`.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let texts: Vec<String> = FILE_NAMES
            .iter()
            .map(|f| std::fs::read_to_string(dir.join(f)).map_err(|e| Error::Parse(format!("{}: {e}", dir.join(f).display()))))
            .collect::<Result<_>>()?;
        GoldenSet::from_sources(std::array::from_fn(|i| texts[i].as_str()))
    }

    pub fn embedded_sources() -> [&'static str; 6] {
        EMBEDDED
    }

    fn claim(&self, field: &str) -> Result<&FieldClaim> {
        self.claims
            .iter()
            .find(|c| c.field == field)
            .ok_or_else(|| Error::Parse(format!("no claims for {field}")))
    }
}

/// Where a comparison was made.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Site {
    Tab1Cell { row: usize, col: usize },
    Cell { table: String, row: usize, col: usize },
    Septet { field: String, member: String },
    Variant { field: String, member: String },
    SignVector { field: String },
    GroupType { field: String },
    Reality { field: String },
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Tab1Cell { row, col } => write!(f, "Tab1 cell ({}, {})", CPT_LABELS[*row], CPT_LABELS[*col]),
            Site::Cell { table, row, col } => write!(f, "{table} cell ({}, {})", LABEL_NAMES[*row], LABEL_NAMES[*col]),
            Site::Septet { field, member } => write!(f, "{field} septet member {member}"),
            Site::Variant { field, member } => write!(f, "{field} quoted variant of {member}"),
            Site::SignVector { field } => write!(f, "{field} sign vector"),
            Site::GroupType { field } => write!(f, "{field} group type"),
            Site::Reality { field } => write!(f, "{field} generator reality list"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Erratum {
    /// Running text quotes `F = ℰ1ℰ4` for spin 1/2.
    RunningTextF14,
    /// Tab 4 cell `(E, W)`.
    Tab4CellEW,
    /// Spin 1: T↔PT and C↔CP labels swapped.
    Spin1Swap,
    /// Spin 3/2: printed `ℰ6` carries an extra `i`, and C↔CP are swapped.
    Spin32Basis,
    /// Tab 6 cells `(W, F)` and `(F, W)` printed equal.
    Tab6CellWF,
}

impl Erratum {
    pub const ALL: [Erratum; 5] = [
        Erratum::RunningTextF14,
        Erratum::Tab4CellEW,
        Erratum::Spin1Swap,
        Erratum::Spin32Basis,
        Erratum::Tab6CellWF,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Erratum::RunningTextF14 => "running-text-f14",
            Erratum::Tab4CellEW => "tab4-cell-e-w",
            Erratum::Spin1Swap => "spin1-label-swap",
            Erratum::Spin32Basis => "spin32-e6-and-swap",
            Erratum::Tab6CellWF => "tab6-cells-w-f",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Erratum::RunningTextF14 => "known typo: F quoted as E14 in running text; E14 is K, first principles give E13",
            Erratum::Tab4CellEW => "cell (E,W) printed -E12 although W commutes with the even E, so it must equal cell (W,E) = +E12",
            Erratum::Spin1Swap => "published E, C and Pi, K are interchanged: each published member obeys the other's conjugation law",
            Erratum::Spin32Basis => {
                "printed E6 is i times the Brauer-Weyl E6, and under that basis the published Pi obeys the K law (and vice versa); the table replays on the printed basis"
            }
            Erratum::Tab6CellWF => "cells (W,F) and (F,W) printed equal although W anticommutes with the odd F",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diff {
    pub site: Site,
    pub expected: String,
    pub actual: String,
    pub erratum: Option<Erratum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErratumProof {
    pub erratum: Erratum,
    pub id: &'static str,
    pub summary: &'static str,
    pub proven: bool,
    pub facts: Vec<(String, bool)>,
}

/// First-principles outcome for one worked field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldOutcome {
    pub field: String,
    pub septet: Vec<String>,
    pub sign_vector: String,
    pub group_type: String,
    pub published_septet: Vec<String>,
    pub published_sign_vector: String,
    pub published_group_type: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub comparisons: usize,
    pub diffs: Vec<Diff>,
    pub errata: Vec<ErratumProof>,
    pub fields: Vec<FieldOutcome>,
}

impl VerifyReport {
    pub fn unexplained(&self) -> impl Iterator<Item = &Diff> {
        self.diffs.iter().filter(move |d| match d.erratum {
            None => true,
            Some(e) => !self.errata.iter().any(|p| p.erratum == e && p.proven),
        })
    }

    pub fn passed(&self) -> bool {
        self.unexplained().next().is_none()
    }
}

/// Generator set of `C8` with `ℰ6` replaced by the printed matrix.
pub fn printed_c8_basis(golden: &GoldenSet) -> Result<GeneratorSet> {
    let bw = build_brauer_weyl(4)?;
    let mut gens = bw.gens.clone();
    gens[5] = golden.e6_c8.clone();
    GeneratorSet::from_matrices(gens)
}

fn matrices_of(monos: &[Monomial; 7], g: &GeneratorSet) -> Result<[ExactMatrix; 7]> {
    let v: Vec<ExactMatrix> = monos.iter().map(|m| m.matrix(g)).collect::<Result<_>>()?;
    Ok(v.try_into().expect("seven members"))
}

fn with_identity(s: &[Monomial; 7]) -> [Monomial; 8] {
    let mut out = [Monomial::IDENTITY; 8];
    out[1..].copy_from_slice(s);
    out
}

fn signed(m: Monomial, g: &GeneratorSet) -> Result<SignedMonomial> {
    SignedMonomial::new(m, g)
}

/// Replays a published septet on a generator set: its table, sign vector and group.
struct Replay {
    table: [[Monomial; 8]; 8],
    signs: SignVector,
    group_type: GroupType,
}

fn replay(septet: &[Monomial; 7], g: &GeneratorSet) -> Result<Replay> {
    let table = product_table(&with_identity(septet), &g.squares);
    let group = generate_group_from_matrices(&matrices_of(septet, g)?)?;
    Ok(Replay {
        table,
        signs: group.sign_vector,
        group_type: group.group_type,
    })
}

struct Context<'a> {
    golden: &'a GoldenSet,
    bw: [GeneratorSet; 3],
    septets: [AutomorphismSeptet; 3],
    printed: GeneratorSet,
}

fn prove(e: Erratum, cx: &Context<'_>) -> Result<Vec<(String, bool)>> {
    let g = cx.golden;
    let mut facts = Vec::new();
    match e {
        Erratum::RunningTextF14 => {
            let claim = g.claim("l=1/2")?;
            let s = &cx.septets[0];
            for (pos, v) in &claim.variants {
                let sm = signed(*v, &cx.bw[0])?;
                let name = SEPTET_NAMES[*pos];
                facts.push((
                    format!("quoted {name} = {} duplicates K", format_monomial(*v, 2)),
                    v.mask == s.k.mono.mask,
                ));
                facts.push((format!("quoted {name} fails the {name} law"), !law_holds(*pos, &sm, &cx.bw[0])?));
            }
            facts.push((
                "first principles give F = E13".into(),
                s.f.mono.mask == Monomial::new(1, &[1, 3]).mask,
            ));
        }
        Erratum::Tab4CellEW => {
            let t = &g.tables[0];
            let s = &cx.septets[0];
            let commute = s.w.matrix.mul(&s.e.matrix)? == s.e.matrix.mul(&s.w.matrix)?;
            facts.push(("W and E commute".into(), commute));
            facts.push(("printed (E,W) differs from printed (W,E)".into(), t.cells[2][1] != t.cells[1][2]));
            let ours = product_table(&table_reps(s), &s.squares);
            facts.push(("computed (E,W) equals printed (W,E)".into(), ours[2][1] == t.cells[1][2]));
        }
        Erratum::Spin1Swap => {
            let claim = g.claim("l=1")?;
            let bw = &cx.bw[1];
            for (pos, other) in [(1usize, 2usize), (2, 1), (3, 4), (4, 3)] {
                let sm = signed(claim.septet[pos], bw)?;
                let (n, o) = (SEPTET_NAMES[pos], SEPTET_NAMES[other]);
                facts.push((format!("published {n} fails the {n} law"), !law_holds(pos, &sm, bw)?));
                facts.push((format!("published {n} obeys the {o} law"), law_holds(other, &sm, bw)?));
            }
            let r = replay(&claim.septet, bw)?;
            facts.push(("published septet replays all 64 cells of Tab5".into(), r.table == g.tables[1].cells));
            facts.push(("replayed sign vector matches".into(), r.signs == claim.signs));
            facts.push(("replayed group type matches".into(), r.group_type == claim.group_type));
        }
        Erratum::Spin32Basis => {
            let claim = g.claim("l=3/2")?;
            let i = GaussianRational::i();
            facts.push(("printed E6 = i * Brauer-Weyl E6".into(), g.e6_c8 == cx.bw[2].gen(6).scale(&i)));
            let pr = &cx.printed;
            let eta = reality_signature(pr)?;
            facts.push((
                "printed reality list holds for the printed basis".into(),
                claim.reality.as_ref() == Some(&eta),
            ));
            let pi = solve_monomial(pr, &eta)?;
            facts.push((
                "on the printed basis the Pi law is solved by the published K".into(),
                pi.mono.mask == claim.septet[4].mask,
            ));
            let pub_pi = signed(claim.septet[3], pr)?;
            facts.push((
                "published Pi obeys the K law on the printed basis".into(),
                law_holds(4, &pub_pi, pr)?,
            ));
            let r = replay(&claim.septet, pr)?;
            let off: Vec<(usize, usize)> = (0..64)
                .map(|x| (x / 8, x % 8))
                .filter(|&(a, b)| r.table[a][b] != g.tables[2].cells[a][b])
                .collect();
            facts.push((
                format!(
                    "published septet replays Tab6 on the printed basis apart from {} cell(s) in the (W,F)/(F,W) pair",
                    off.len()
                ),
                off.len() <= 1 && off.iter().all(|&p| p == (1, 7) || p == (7, 1)),
            ));
            facts.push(("replayed sign vector matches".into(), r.signs == claim.signs));
            facts.push(("replayed group type matches".into(), r.group_type == claim.group_type));
        }
        Erratum::Tab6CellWF => {
            let claim = g.claim("l=3/2")?;
            let t = &g.tables[2];
            let w = claim.septet[0].matrix(&cx.printed)?;
            let f = claim.septet[6].matrix(&cx.printed)?;
            facts.push(("W anticommutes with F".into(), w.mul(&f)? == f.mul(&w)?.neg()));
            facts.push(("printed (W,F) equals printed (F,W)".into(), t.cells[1][7] == t.cells[7][1]));
        }
    }
    Ok(facts)
}

fn sv_string(s: &SignVector) -> String {
    s.to_string()
}

/// Regenerates every table, septet and classification and compares with `golden`.
pub fn verify_against(golden: &GoldenSet) -> Result<VerifyReport> {
    let bw = [build_brauer_weyl(2)?, build_brauer_weyl(3)?, build_brauer_weyl(4)?];
    let septets = [compute_septet(&bw[0])?, compute_septet(&bw[1])?, compute_septet(&bw[2])?];
    let printed = printed_c8_basis(golden)?;
    let cx = Context {
        golden,
        bw,
        septets,
        printed,
    };
    let mut diffs = Vec::new();
    let mut comparisons = 0;

    let abs = abstract_cpt_table().forget_signs();
    for r in 0..8 {
        for c in 0..8 {
            comparisons += 1;
            if abs[r][c] != golden.tab1[r][c] {
                diffs.push(Diff {
                    site: Site::Tab1Cell { row: r, col: c },
                    expected: CPT_LABELS[golden.tab1[r][c] as usize].into(),
                    actual: CPT_LABELS[abs[r][c] as usize].into(),
                    erratum: None,
                });
            }
        }
    }

    let fields = ["l=1/2", "l=1", "l=3/2"];
    let mut outcomes = Vec::new();
    for (fi, field) in fields.iter().enumerate() {
        let claim = golden.claim(field)?;
        let table = &golden.tables[fi];
        let s = &cx.septets[fi];
        let m = fi + 2;
        let fmt = |x: Monomial| format_monomial(x, m);
        let group = generate_group(s)?;
        let ours = s.monomials();
        let swap = match fi {
            0 => None,
            1 => Some(Erratum::Spin1Swap),
            _ => Some(Erratum::Spin32Basis),
        };
        let replayed = match fi {
            1 => Some(replay(&claim.septet, &cx.bw[1])?),
            2 => Some(replay(&claim.septet, &cx.printed)?),
            _ => None,
        };

        for k in 0..7 {
            comparisons += 1;
            if ours[k] != claim.septet[k] {
                diffs.push(Diff {
                    site: Site::Septet {
                        field: field.to_string(),
                        member: SEPTET_NAMES[k].into(),
                    },
                    expected: fmt(claim.septet[k]),
                    actual: fmt(ours[k]),
                    erratum: swap,
                });
            }
        }
        for (pos, v) in &claim.variants {
            comparisons += 1;
            if *v != ours[*pos] {
                diffs.push(Diff {
                    site: Site::Variant {
                        field: field.to_string(),
                        member: SEPTET_NAMES[*pos].into(),
                    },
                    expected: fmt(*v),
                    actual: fmt(ours[*pos]),
                    erratum: (fi == 0).then_some(Erratum::RunningTextF14),
                });
            }
        }
        let ours_tab = product_table(&table_reps(s), &s.squares);
        for r in 0..8 {
            for c in 0..8 {
                comparisons += 1;
                let (want, got) = (table.cells[r][c], ours_tab[r][c]);
                if want == got {
                    continue;
                }
                let replay_ok = replayed.as_ref().is_some_and(|rp| rp.table[r][c] == want);
                let erratum = if replay_ok {
                    swap
                } else if fi == 0 && (r, c) == (2, 1) {
                    Some(Erratum::Tab4CellEW)
                } else if fi == 2 && ((r, c) == (1, 7) || (r, c) == (7, 1)) {
                    Some(Erratum::Tab6CellWF)
                } else {
                    None
                };
                diffs.push(Diff {
                    site: Site::Cell {
                        table: table.name.into(),
                        row: r,
                        col: c,
                    },
                    expected: fmt(want),
                    actual: fmt(got),
                    erratum,
                });
            }
        }
        comparisons += 2;
        if group.sign_vector != claim.signs {
            diffs.push(Diff {
                site: Site::SignVector { field: field.to_string() },
                expected: sv_string(&claim.signs),
                actual: sv_string(&group.sign_vector),
                erratum: replayed.as_ref().filter(|rp| rp.signs == claim.signs).and(swap),
            });
        }
        if group.group_type != claim.group_type {
            diffs.push(Diff {
                site: Site::GroupType { field: field.to_string() },
                expected: claim.group_type.to_string(),
                actual: group.group_type.to_string(),
                erratum: replayed.as_ref().filter(|rp| rp.group_type == claim.group_type).and(swap),
            });
        }
        if let Some(real) = &claim.reality {
            comparisons += 1;
            let ours_eta = reality_signature(&cx.bw[fi])?;
            if *real != ours_eta {
                let show = |v: &[i8]| v.iter().map(|&x| if x > 0 { "+" } else { "-" }).collect::<Vec<_>>().join(",");
                diffs.push(Diff {
                    site: Site::Reality { field: field.to_string() },
                    expected: show(real),
                    actual: show(&ours_eta),
                    erratum: (fi == 2).then_some(Erratum::Spin32Basis),
                });
            }
        }
        outcomes.push(FieldOutcome {
            field: field.to_string(),
            septet: ours.iter().map(|x| fmt(*x)).collect(),
            sign_vector: sv_string(&group.sign_vector),
            group_type: group.group_type.to_string(),
            published_septet: claim.septet.iter().map(|x| fmt(*x)).collect(),
            published_sign_vector: sv_string(&claim.signs),
            published_group_type: claim.group_type.to_string(),
        });
    }

    let mut errata = Vec::new();
    for e in Erratum::ALL {
        let facts = prove(e, &cx)?;
        let proven = !facts.is_empty() && facts.iter().all(|f| f.1);
        errata.push(ErratumProof {
            erratum: e,
            id: e.id(),
            summary: e.summary(),
            proven,
            facts,
        });
    }
    Ok(VerifyReport {
        comparisons,
        diffs,
        errata,
        fields: outcomes,
    })
}

pub fn verify_embedded() -> Result<VerifyReport> {
    verify_against(&GoldenSet::embedded())
}
