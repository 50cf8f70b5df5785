use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::finite::{Fingerprint, FiniteGroup};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussianRational};

/// The five order-16 groups with central `-1` and quotient `Z2³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupType {
    #[serde(rename = "Z2xZ2xZ2xZ2")]
    Z2Z2Z2Z2,
    #[serde(rename = "Z4xZ2xZ2")]
    Z4Z2Z2,
    #[serde(rename = "Q4xZ2")]
    Q4Z2,
    #[serde(rename = "D4xZ2")]
    D4Z2,
    /// Central product `Z4 ∘ D4` (the Pauli group).
    #[serde(rename = "*Z4xZ2xZ2")]
    StarZ4Z2Z2,
}

impl GroupType {
    pub const ALL: [GroupType; 5] = [
        GroupType::Z2Z2Z2Z2,
        GroupType::Z4Z2Z2,
        GroupType::Q4Z2,
        GroupType::D4Z2,
        GroupType::StarZ4Z2Z2,
    ];

    pub fn ascii(self) -> &'static str {
        match self {
            GroupType::Z2Z2Z2Z2 => "Z2xZ2xZ2xZ2",
            GroupType::Z4Z2Z2 => "Z4xZ2xZ2",
            GroupType::Q4Z2 => "Q4xZ2",
            GroupType::D4Z2 => "D4xZ2",
            GroupType::StarZ4Z2Z2 => "*Z4xZ2xZ2",
        }
    }

    pub fn unicode(self) -> &'static str {
        match self {
            GroupType::Z2Z2Z2Z2 => "Z₂×Z₂×Z₂×Z₂",
            GroupType::Z4Z2Z2 => "Z₄×Z₂×Z₂",
            GroupType::Q4Z2 => "Q₄×Z₂",
            GroupType::D4Z2 => "D₄×Z₂",
            GroupType::StarZ4Z2Z2 => "*Z₄×Z₂×Z₂",
        }
    }

    pub fn parse(s: &str) -> Option<GroupType> {
        GroupType::ALL.into_iter().find(|t| t.ascii() == s || t.unicode() == s)
    }

    /// The order-8 factor in the decomposition `X × Z2`.
    pub fn ext_type(self) -> &'static str {
        match self {
            GroupType::Z2Z2Z2Z2 => "Z2xZ2xZ2",
            GroupType::Z4Z2Z2 => "Z4xZ2",
            GroupType::Q4Z2 => "Q4",
            GroupType::D4Z2 => "D4",
            GroupType::StarZ4Z2Z2 => "*Z4xZ2",
        }
    }

    /// How many of the seven nontrivial representatives square to `-1`.
    pub fn minus_count(self) -> usize {
        match self {
            GroupType::Z2Z2Z2Z2 => 0,
            GroupType::D4Z2 => 2,
            GroupType::Z4Z2Z2 | GroupType::StarZ4Z2Z2 => 4,
            GroupType::Q4Z2 => 6,
        }
    }

    pub fn is_abelian(self) -> bool {
        matches!(self, GroupType::Z2Z2Z2Z2 | GroupType::Z4Z2Z2)
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ascii())
    }
}

/// Types admitted by the sign-count rule; the abelian flag splits the 4-minus pair.
pub fn table3_candidates(minus_count: usize) -> &'static [GroupType] {
    match minus_count {
        0 => &[GroupType::Z2Z2Z2Z2],
        2 => &[GroupType::D4Z2],
        4 => &[GroupType::Z4Z2Z2, GroupType::StarZ4Z2Z2],
        6 => &[GroupType::Q4Z2],
        _ => &[],
    }
}

/// Row of the sign-count rule selected by a pattern and the abelian flag.
pub fn table3_row(minus_count: usize, abelian: bool) -> Option<GroupType> {
    table3_candidates(minus_count).iter().copied().find(|t| t.is_abelian() == abelian)
}

fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

fn mat(rows: &[&[(i64, i64)]]) -> ExactMatrix {
    ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&(a, b)| g(a, b)).collect()).collect()).expect("square")
}

fn diag(entries: &[(i64, i64)]) -> ExactMatrix {
    let n = entries.len();
    ExactMatrix::from_fn(n, |r, c| if r == c { g(entries[r].0, entries[r].1) } else { g(0, 0) })
}

/// `blockdiag(a, s)` for a 2×2 block and a scalar.
fn with_sign(a: &ExactMatrix, s: i64) -> ExactMatrix {
    ExactMatrix::from_fn(3, |r, c| match (r, c) {
        (2, 2) => g(s, 0),
        (2, _) | (_, 2) => g(0, 0),
        _ => a.get(r, c).clone(),
    })
}

/// Generators of an explicit matrix model for each type.
pub fn presentation(t: GroupType) -> Vec<ExactMatrix> {
    let i2 = ExactMatrix::identity(2);
    let z2 = with_sign(&i2, -1);
    match t {
        GroupType::Z2Z2Z2Z2 => (0..4)
            .map(|k| diag(&(0..4).map(|j| if j == k { (-1, 0) } else { (1, 0) }).collect::<Vec<_>>()))
            .collect(),
        GroupType::Z4Z2Z2 => vec![
            diag(&[(0, 1), (1, 0), (1, 0)]),
            diag(&[(1, 0), (-1, 0), (1, 0)]),
            diag(&[(1, 0), (1, 0), (-1, 0)]),
        ],
        GroupType::Q4Z2 => {
            let qi = mat(&[&[(0, 1), (0, 0)], &[(0, 0), (0, -1)]]);
            let qj = mat(&[&[(0, 0), (1, 0)], &[(-1, 0), (0, 0)]]);
            vec![with_sign(&qi, 1), with_sign(&qj, 1), z2]
        }
        GroupType::D4Z2 => {
            let rot = mat(&[&[(0, 0), (-1, 0)], &[(1, 0), (0, 0)]]);
            let flip = mat(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]);
            vec![with_sign(&rot, 1), with_sign(&flip, 1), z2]
        }
        GroupType::StarZ4Z2Z2 => vec![
            mat(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]),
            mat(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
            mat(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]),
        ],
    }
}

/// Brute-force model of `t` from its presentation.
pub fn model_group(t: GroupType) -> Result<FiniteGroup> {
    let gens = presentation(t);
    let id = ExactMatrix::identity(gens[0].dim());
    let (grp, _) = FiniteGroup::generate(id, &gens, |a, b| a.mul(b), 64)?;
    if grp.order() != 16 {
        return Err(Error::Classification(format!("model of {t} has order {}", grp.order())));
    }
    Ok(grp)
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub group_type: GroupType,
    pub group: FiniteGroup,
    pub fingerprint: Fingerprint,
}

static CATALOG: OnceLock<std::result::Result<Vec<CatalogEntry>, Error>> = OnceLock::new();

/// Fingerprints of the five models, checked pairwise distinct on first use.
pub fn fingerprint_catalog() -> Result<&'static [CatalogEntry]> {
    let built = CATALOG.get_or_init(|| {
        let entries = GroupType::ALL
            .iter()
            .map(|&t| {
                let group = model_group(t)?;
                Ok(CatalogEntry {
                    group_type: t,
                    fingerprint: group.fingerprint(),
                    group,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        for (i, a) in entries.iter().enumerate() {
            for b in &entries[..i] {
                if a.fingerprint == b.fingerprint {
                    return Err(Error::Classification(format!(
                        "{} and {} share a fingerprint",
                        a.group_type, b.group_type
                    )));
                }
            }
        }
        Ok(entries)
    });
    built.as_deref().map_err(Clone::clone)
}

/// Catalog lookup by fingerprint.
pub fn classify_finite(group: &FiniteGroup) -> Result<GroupType> {
    let fp = group.fingerprint();
    fingerprint_catalog()?
        .iter()
        .find(|e| e.fingerprint == fp)
        .map(|e| e.group_type)
        .ok_or_else(|| Error::Classification(format!("fingerprint {fp:?} matches no catalog entry")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_fingerprints() {
        let cat = fingerprint_catalog().unwrap();
        let count = |e: &CatalogEntry, k: usize| e.fingerprint.orders.iter().filter(|&&o| o == k).count();
        let expect = [
            (GroupType::Z2Z2Z2Z2, true, 15, 0, 16),
            (GroupType::Z4Z2Z2, true, 7, 8, 16),
            (GroupType::Q4Z2, false, 3, 12, 4),
            (GroupType::D4Z2, false, 11, 4, 4),
            (GroupType::StarZ4Z2Z2, false, 7, 8, 4),
        ];
        for (e, (t, ab, o2, o4, z)) in cat.iter().zip(expect) {
            assert_eq!(e.group_type, t);
            assert_eq!(e.fingerprint.abelian, ab, "{t}");
            assert_eq!(count(e, 2), o2, "{t}");
            assert_eq!(count(e, 4), o4, "{t}");
            assert_eq!(e.fingerprint.center, z, "{t}");
        }
    }

    #[test]
    fn models_classify_to_themselves() {
        for t in GroupType::ALL {
            assert_eq!(classify_finite(&model_group(t).unwrap()).unwrap(), t);
        }
    }

    #[test]
    fn minus_counts_match_order_four_elements() {
        for e in fingerprint_catalog().unwrap() {
            let o4 = e.fingerprint.orders.iter().filter(|&&o| o == 4).count();
            assert_eq!(o4, 2 * e.group_type.minus_count());
        }
    }

    #[test]
    fn table3_rows() {
        assert_eq!(table3_row(2, false), Some(GroupType::D4Z2));
        assert_eq!(table3_row(6, false), Some(GroupType::Q4Z2));
        assert_eq!(table3_row(4, true), Some(GroupType::Z4Z2Z2));
        assert_eq!(table3_row(4, false), Some(GroupType::StarZ4Z2Z2));
        assert_eq!(table3_row(0, true), Some(GroupType::Z2Z2Z2Z2));
        assert_eq!(table3_row(3, false), None);
    }

    #[test]
    fn names_round_trip() {
        for t in GroupType::ALL {
            assert_eq!(GroupType::parse(t.ascii()), Some(t));
            assert_eq!(GroupType::parse(t.unicode()), Some(t));
            let js = serde_json::to_string(&t).unwrap();
            assert_eq!(serde_json::from_str::<GroupType>(&js).unwrap(), t);
        }
    }
}
