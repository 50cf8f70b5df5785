//! The order-16 group `±{1, W, E, C, Π, K, S, F}`: closure, multiplication table
//! modulo `±1`, sign vector and classification.

mod finite;
mod presentations;

pub use finite::{closure_order, Fingerprint, FiniteGroup};
pub use presentations::{
    classify_finite, fingerprint_catalog, model_group, presentation, table3_candidates, table3_row, CatalogEntry, GroupType,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::autosolve::{AutomorphismSeptet, Monomial, SEPTET_NAMES};
use crate::error::{Error, Result};
use crate::exactnum::ExactMatrix;

/// Row/column header names in table order.
pub const LABEL_NAMES: [&str; 8] = ["1", "W", "E", "C", "Pi", "K", "S", "F"];
/// The same positions as discrete symmetries.
pub const CPT_LABELS: [&str; 8] = ["1", "P", "T", "PT", "C", "CP", "CT", "CPT"];

/// `sign · label`, label an index into `(1, W, E, C, Π, K, S, F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedLabel {
    pub sign: i8,
    pub label: u8,
}

impl SignedLabel {
    pub fn plus(label: u8) -> Self {
        SignedLabel { sign: 1, label }
    }
}

/// 8×8 table of products `row · column`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultTable8 {
    pub cells: [[SignedLabel; 8]; 8],
}

impl MultTable8 {
    pub fn cell(&self, r: usize, c: usize) -> SignedLabel {
        self.cells[r][c]
    }

    pub fn forget_signs(&self) -> [[u8; 8]; 8] {
        self.cells.map(|row| row.map(|x| x.label))
    }

    /// Identity row and column reproduce the header and every row permutes the labels.
    pub fn is_well_formed(&self) -> bool {
        let header = (0..8).all(|j| self.cells[0][j] == SignedLabel::plus(j as u8) && self.cells[j][0] == SignedLabel::plus(j as u8));
        let perms = self.cells.iter().all(|row| {
            let mut seen = [false; 8];
            row.iter().all(|x| !std::mem::replace(&mut seen[x.label as usize], true))
        });
        header && perms
    }

    /// Positions where `self` and `other` differ.
    pub fn diff(&self, other: &MultTable8) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..8 {
            for c in 0..8 {
                if self.cells[r][c] != other.cells[r][c] {
                    out.push((r, c));
                }
            }
        }
        out
    }
}

/// Squares `(a..g)` of `(W, E, C, Π, K, S, F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignVector(pub [i8; 7]);

impl SignVector {
    pub fn minus_count(&self) -> usize {
        self.0.iter().filter(|&&s| s < 0).count()
    }

    /// Parses `"+,+,-"`-style or `"++-"`-style patterns of length 7.
    pub fn parse(s: &str) -> Option<SignVector> {
        let signs: Vec<i8> = s
            .chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| match c {
                '+' => Some(1),
                '-' | '−' => Some(-1),
                _ => None,
            })
            .collect::<Option<_>>()?;
        signs.try_into().ok().map(SignVector)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.0.iter().map(|&x| if x > 0 { "+" } else { "-" }).collect();
        f.write_str(&s.join(","))
    }
}

/// The classified order-16 group.
#[derive(Clone, Debug)]
pub struct CptGroup {
    /// Element `i` is `(-1)^{i mod 2} · rep[i / 2]`.
    pub group: FiniteGroup,
    pub table: MultTable8,
    pub sign_vector: SignVector,
    pub group_type: GroupType,
    pub ext_type: &'static str,
    /// Monomial representatives when built from a septet.
    pub monomials: Option<[Monomial; 8]>,
}

impl CptGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Index of `-1`.
    pub const MINUS_ONE: usize = 1;

    pub fn minus_one_is_central(&self) -> bool {
        self.group.is_central(Self::MINUS_ONE) && self.group.element_order(Self::MINUS_ONE) == 2
    }

    pub fn element(&self, label: usize, sign: i8) -> usize {
        2 * label + usize::from(sign < 0)
    }

    pub fn subgroup_type(&self) -> SubgroupReport {
        let sq = |l: usize| {
            if self.group.mul(self.element(l, 1), self.element(l, 1)) == 0 {
                1
            } else {
                -1
            }
        };
        let (w, e) = (self.element(1, 1), self.element(2, 1));
        let commute = self.group.mul(w, e) == self.group.mul(e, w);
        subgroup_kind(sq(1), sq(2), sq(3), commute)
    }
}

/// Builds the group from representatives of the eight labels.
fn build<T: Clone + PartialEq>(
    reps: &[T; 8],
    mul: impl Fn(&T, &T) -> Result<T>,
    neg: impl Fn(&T) -> T,
) -> Result<(FiniteGroup, MultTable8, SignVector)> {
    let elems: Vec<T> = reps.iter().flat_map(|r| [r.clone(), neg(r)]).collect();
    let closure_failure = || -> Result<Error> {
        let order = closure_order(reps[0].clone(), &elems[1..], &mul, 1024)?;
        Ok(Error::GroupOrder(order))
    };
    for i in 0..16 {
        if elems[..i].contains(&elems[i]) {
            return Err(closure_failure()?);
        }
    }
    let mut table = vec![vec![0usize; 16]; 16];
    for a in 0..16 {
        for b in 0..16 {
            let p = mul(&elems[a], &elems[b])?;
            table[a][b] = match elems.iter().position(|x| *x == p) {
                Some(i) => i,
                None => return Err(closure_failure()?),
            };
        }
    }
    let group = FiniteGroup::from_table(table)?;
    if group.identity() != 0 {
        return Err(Error::Consistency("first representative is not the identity".into()));
    }
    let to_label = |i: usize| SignedLabel {
        sign: if i.is_multiple_of(2) { 1 } else { -1 },
        label: (i / 2) as u8,
    };
    let mut cells = [[SignedLabel::plus(0); 8]; 8];
    for (r, row) in cells.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = to_label(group.mul(2 * r, 2 * c));
        }
    }
    let mut signs = [0i8; 7];
    for l in 1..8 {
        signs[l - 1] = match group.mul(2 * l, 2 * l) {
            0 => 1,
            1 => -1,
            _ => return Err(Error::NotSignedIdentity(SEPTET_NAMES[l - 1].into())),
        };
    }
    Ok((group, MultTable8 { cells }, SignVector(signs)))
}

fn finish(group: FiniteGroup, table: MultTable8, sign_vector: SignVector, monomials: Option<[Monomial; 8]>) -> Result<CptGroup> {
    let mut g = CptGroup {
        group,
        table,
        sign_vector,
        group_type: GroupType::Z2Z2Z2Z2,
        ext_type: "",
        monomials,
    };
    if !g.minus_one_is_central() {
        return Err(Error::Consistency("-1 is not a central involution".into()));
    }
    g.group_type = classify(&g)?;
    g.ext_type = g.group_type.ext_type();
    Ok(g)
}

/// Closes `±{1} ∪ ±septet` combinatorially and checks every product against matrices.
pub fn generate_group(s: &AutomorphismSeptet) -> Result<CptGroup> {
    let mut reps = [Monomial::IDENTITY; 8];
    for (slot, m) in reps[1..].iter_mut().zip(s.monomials()) {
        *slot = m;
    }
    let squares = s.squares.clone();
    let (group, table, sv) = build(&reps, |a, b| Ok(a.mul(*b, &squares)), |a| -*a)?;
    let mut mats = vec![ExactMatrix::identity(s.dim)];
    mats.extend(s.members().iter().map(|m| m.matrix.clone()));
    for r in 0..8 {
        for c in 0..8 {
            let cell = table.cell(r, c);
            let expect = &mats[cell.label as usize];
            let got = mats[r].mul(&mats[c])?;
            let ok = if cell.sign > 0 { got == *expect } else { got == expect.neg() };
            if !ok {
                return Err(Error::Consistency(format!(
                    "matrix product {}·{} disagrees with the monomial table",
                    LABEL_NAMES[r], LABEL_NAMES[c]
                )));
            }
        }
    }
    finish(group, table, sv, Some(reps))
}

/// Same construction over explicit matrices `[W, E, C, Π, K, S, F]`.
pub fn generate_group_from_matrices(reps7: &[ExactMatrix; 7]) -> Result<CptGroup> {
    let dim = reps7[0].dim();
    let mut reps: [ExactMatrix; 8] = std::array::from_fn(|_| ExactMatrix::identity(dim));
    reps[1..].clone_from_slice(reps7);
    let (group, table, sv) = build(&reps, |a, b| a.mul(b), |a| a.neg())?;
    finish(group, table, sv, None)
}

/// Signs `(a..g)` of the septet squares.
pub fn sign_vector(s: &AutomorphismSeptet) -> Result<SignVector> {
    let mut out = [0i8; 7];
    for (i, m) in s.members().iter().enumerate() {
        out[i] = m
            .matrix
            .mul(&m.matrix)?
            .identity_sign()
            .ok_or_else(|| Error::NotSignedIdentity(SEPTET_NAMES[i].into()))?;
    }
    Ok(SignVector(out))
}

/// `row · column` products over `(1, W, E, C, Π, K, S, F)`.
pub fn mult_table_mod_z2(s: &AutomorphismSeptet) -> Result<MultTable8> {
    let mut reps = [Monomial::IDENTITY; 8];
    for (slot, m) in reps[1..].iter_mut().zip(s.monomials()) {
        *slot = m;
    }
    let mut cells = [[SignedLabel::plus(0); 8]; 8];
    for r in 0..8 {
        for c in 0..8 {
            let p = reps[r].mul(reps[c], &s.squares);
            let label = reps
                .iter()
                .position(|x| x.mask == p.mask)
                .ok_or_else(|| Error::Consistency(format!("{}·{} leaves the septet", LABEL_NAMES[r], LABEL_NAMES[c])))?;
            cells[r][c] = SignedLabel {
                sign: p.sign * reps[label].sign,
                label: label as u8,
            };
        }
    }
    Ok(MultTable8 { cells })
}

/// `reps[r] · reps[c]` as signed monomials.
pub fn product_table(reps: &[Monomial; 8], squares: &[i8]) -> [[Monomial; 8]; 8] {
    std::array::from_fn(|r| std::array::from_fn(|c| reps[r].mul(reps[c], squares)))
}

/// The septet prefixed by the identity, in table order.
pub fn table_reps(s: &AutomorphismSeptet) -> [Monomial; 8] {
    let mut reps = [Monomial::IDENTITY; 8];
    reps[1..].copy_from_slice(&s.monomials());
    reps
}

/// [`mult_table_mod_z2`] with cells written as monomials rather than labels.
pub fn monomial_table(s: &AutomorphismSeptet) -> [[Monomial; 8]; 8] {
    product_table(&table_reps(s), &s.squares)
}

/// Fingerprint lookup, cross-checked against the sign-count rule.
pub fn classify(group: &CptGroup) -> Result<GroupType> {
    if group.order() != 16 || !group.minus_one_is_central() {
        return Err(Error::Classification("expected order 16 with central -1".into()));
    }
    let t = classify_finite(&group.group)?;
    let minus = group.sign_vector.minus_count();
    match table3_row(minus, group.group.is_abelian()) {
        Some(row) if row == t => Ok(t),
        Some(row) => Err(Error::Classification(format!(
            "fingerprint says {t}, sign count {minus} says {row}"
        ))),
        None => Err(Error::Classification(format!("{minus} negative squares fits no row"))),
    }
}

/// The sign-free table of `Z2 × Z2 × Z2` over `(1, P, T, PT, C, CP, CT, CPT)`.
pub fn abstract_cpt_table() -> MultTable8 {
    let mut cells = [[SignedLabel::plus(0); 8]; 8];
    for (r, row) in cells.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = SignedLabel::plus((r ^ c) as u8);
        }
    }
    MultTable8 { cells }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubgroupKind {
    #[serde(rename = "Z2xZ2")]
    Z2Z2,
    Z4,
    Quaternionic,
    Dihedral,
}

impl SubgroupKind {
    pub fn name(self) -> &'static str {
        match self {
            SubgroupKind::Z2Z2 => "Z2xZ2",
            SubgroupKind::Z4 => "Z4",
            SubgroupKind::Quaternionic => "quaternionic",
            SubgroupKind::Dihedral => "dihedral",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupReport {
    pub kind: SubgroupKind,
    pub abelian: bool,
}

/// Type of `⟨±1, W, E, C⟩` from the squares of W, E, C and whether W, E commute.
pub fn subgroup_kind(w_sq: i8, e_sq: i8, c_sq: i8, commute: bool) -> SubgroupReport {
    let all_plus = w_sq > 0 && e_sq > 0 && c_sq > 0;
    let all_minus = w_sq < 0 && e_sq < 0 && c_sq < 0;
    let kind = match (commute, all_plus, all_minus) {
        (true, true, _) => SubgroupKind::Z2Z2,
        (true, false, _) => SubgroupKind::Z4,
        (false, _, true) => SubgroupKind::Quaternionic,
        (false, _, false) => SubgroupKind::Dihedral,
    };
    SubgroupReport { kind, abelian: commute }
}

pub fn subgroup_type(s: &AutomorphismSeptet) -> SubgroupReport {
    let sq = |m: Monomial| m.square_sign(&s.squares);
    let (w, e) = (s.w.mono, s.e.mono);
    let commute = w.mul(e, &s.squares) == e.mul(w, &s.squares);
    subgroup_kind(sq(w), sq(e), sq(s.c.mono), commute)
}

/// The same query on explicit matrices `W`, `E` with `C = EW`.
pub fn subgroup_type_of_matrices(w: &ExactMatrix, e: &ExactMatrix) -> Result<SubgroupReport> {
    let c = e.mul(w)?;
    let sq = |m: &ExactMatrix| -> Result<i8> {
        m.mul(m)?
            .identity_sign()
            .ok_or_else(|| Error::NotSignedIdentity("subgroup generator".into()))
    };
    Ok(subgroup_kind(sq(w)?, sq(e)?, sq(&c)?, w.mul(e)? == c))
}
