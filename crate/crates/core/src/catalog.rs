//! Field specifications and their algebra/representation parameters.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    /// `(l,0) ⊕ (0,l)`.
    ChiralPair,
    /// `(l′,l″) ⊕ (l″,l′)`.
    TensorPair,
}

/// A field by its count `k` of `C2` factors and `r` of conjugated ones.
/// Chiral pairs mirror `r = k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub kind: FieldKind,
    pub k: u32,
    pub r: u32,
}

impl FieldSpec {
    pub fn chiral(k: u32) -> Self {
        FieldSpec {
            kind: FieldKind::ChiralPair,
            k,
            r: k,
        }
    }

    pub fn tensor(k: u32, r: u32) -> Self {
        FieldSpec {
            kind: FieldKind::TensorPair,
            k,
            r,
        }
    }

    /// Number of `C2` factors per summand.
    pub fn factors(&self) -> u32 {
        match self.kind {
            FieldKind::ChiralPair => self.k,
            FieldKind::TensorPair => self.k + self.r,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.k == 0 && self.r == 0
    }

    /// Brauer–Weyl parameter `m` (half the generator count), `None` for the scalar field.
    pub fn generator_m(&self) -> Option<usize> {
        let a = field_to_algebra(self);
        (a.num_generators > 0).then_some(a.num_generators / 2)
    }
}

fn half(n: u32) -> String {
    if n.is_multiple_of(2) {
        (n / 2).to_string()
    } else {
        format!("{n}/2")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::ChiralPair => write!(f, "({},0)+(0,{})", half(self.k), half(self.k)),
            FieldKind::TensorPair => write!(f, "({},{})+({},{})", half(self.k), half(self.r), half(self.r), half(self.k)),
        }
    }
}

/// Parses a non-negative rational such as `3/2`, `1`, `0.5`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((w, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{w}{frac}").parse().map_err(|_| bad())?;
        return Ok(BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32)));
    }
    Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?))
}

/// `2x` as an integer when `x` is a non-negative half-integer.
pub fn twice_half_integer(x: &BigRational) -> Result<u32> {
    let t = x * BigRational::from_integer(2.into());
    if !t.is_integer() || t.is_negative() {
        return Err(Error::Parse(format!("{x} is not a non-negative half-integer")));
    }
    t.to_integer().to_u32().ok_or_else(|| Error::Parse(format!("{x} is too large")))
}

/// Grammar: `l=1/2`, `k=3`, `k=3,r=2`, `(3/2,1)+(1,3/2)`, `(1/2,0)+(0,1/2)`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(rest) = s.strip_prefix("l=") {
            return Ok(FieldSpec::chiral(twice_half_integer(&parse_rational(rest)?)?));
        }
        if s.starts_with("k=") {
            let mut k = None;
            let mut r = None;
            for part in s.split(',') {
                let (key, val) = part.split_once('=').ok_or_else(|| Error::Parse(format!("bad field spec {s:?}")))?;
                let v: u32 = val.parse().map_err(|_| Error::Parse(format!("bad count {val:?}")))?;
                match key {
                    "k" => k = Some(v),
                    "r" => r = Some(v),
                    _ => return Err(Error::Parse(format!("unknown key {key:?}"))),
                }
            }
            let k = k.ok_or_else(|| Error::Parse("missing k".into()))?;
            return Ok(match r {
                Some(r) => FieldSpec::tensor(k, r),
                None => FieldSpec::chiral(k),
            });
        }
        if let Some((a, b)) = s.split_once(")+(") {
            let pair = |t: &str| -> Result<(u32, u32)> {
                let t = t.trim_start_matches('(').trim_end_matches(')');
                let (x, y) = t.split_once(',').ok_or_else(|| Error::Parse(format!("bad pair {t:?}")))?;
                Ok((twice_half_integer(&parse_rational(x)?)?, twice_half_integer(&parse_rational(y)?)?))
            };
            let (p, q) = (pair(a)?, pair(b)?);
            if p != (q.1, q.0) {
                return Err(Error::Parse(format!("summands of {s:?} are not mirror images")));
            }
            return Ok(if p.1 == 0 {
                FieldSpec::chiral(p.0)
            } else {
                FieldSpec::tensor(p.0, p.1)
            });
        }
        Err(Error::Parse(format!("unrecognized field spec {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub num_generators: usize,
    pub matrix_dim: usize,
    pub description: String,
    pub degenerate: bool,
}

/// Chiral `k` → `2k+2` generators; tensor `(k,r)` → `2(k+r)+2`; scalar → none.
pub fn field_to_algebra(f: &FieldSpec) -> AlgebraSpec {
    if f.is_degenerate() {
        return AlgebraSpec {
            num_generators: 0,
            matrix_dim: 1,
            description: "C0 (scalar field)".into(),
            degenerate: true,
        };
    }
    let factors = f.factors() as usize;
    let n = 2 * factors + 2;
    let description = match f.kind {
        FieldKind::ChiralPair => format!("C{0} + C{0}* in C{n}", 2 * factors),
        FieldKind::TensorPair => format!("C2^{} (x) C2*^{} + conjugate in C{n}", f.k, f.r),
    };
    AlgebraSpec {
        num_generators: n,
        matrix_dim: 1usize << (n / 2),
        description,
        degenerate: false,
    }
}

/// `(l0, l1)` with `l = (l0+l1-1)/2`, `l̇ = (l0-l1+1)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpec {
    pub l0: BigRational,
    pub l1: BigRational,
    pub l: BigRational,
    pub l_dot: BigRational,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl RepSpec {
    pub fn from_l0_l1(l0: BigRational, l1: BigRational) -> Self {
        let one = q(1, 1);
        let two = q(2, 1);
        let l = (&l0 + &l1 - &one) / &two;
        let l_dot = (&l0 - &l1 + &one) / &two;
        RepSpec { l0, l1, l, l_dot }
    }
}

/// Chiral: `(k/2, k/2+1)`; tensor: `((k-r)/2, (k+r)/2+1)`.
pub fn rep_params(f: &FieldSpec) -> RepSpec {
    let (k, r) = (f.k as i64, f.r as i64);
    match f.kind {
        FieldKind::ChiralPair => RepSpec::from_l0_l1(q(k, 2), q(k, 2) + q(1, 1)),
        FieldKind::TensorPair => RepSpec::from_l0_l1(q(k - r, 2), q(k + r, 2) + q(1, 1)),
    }
}

/// Recovers the field from its parameters: `k = l0+l1-1`, `r = l1-l0-1`.
pub fn invert_rep_params(rep: &RepSpec, kind: FieldKind) -> Result<FieldSpec> {
    let one = q(1, 1);
    let to_u32 = |x: BigRational| -> Result<u32> {
        if !x.is_integer() || x.is_negative() {
            return Err(Error::Parse(format!("{x} is not a count")));
        }
        x.to_integer().to_u32().ok_or_else(|| Error::Parse("count too large".into()))
    };
    let k = to_u32(&rep.l0 + &rep.l1 - &one)?;
    let r = to_u32(&rep.l1 - &rep.l0 - &one)?;
    Ok(match kind {
        FieldKind::ChiralPair if r == 0 => FieldSpec::chiral(k),
        FieldKind::ChiralPair => return Err(Error::Parse("parameters do not describe a chiral pair".into())),
        FieldKind::TensorPair => FieldSpec::tensor(k, r),
    })
}

/// `μ = 2κ/(2l+1)`.
pub fn mass_gy(l: &BigRational, kappa: &BigRational) -> Result<BigRational> {
    if l.is_negative() {
        return Err(Error::Parse(format!("l = {l} must be non-negative")));
    }
    if !kappa.is_positive() {
        return Err(Error::Parse(format!("kappa = {kappa} must be positive")));
    }
    Ok(q(2, 1) * kappa / (q(2, 1) * l + q(1, 1)))
}

/// `μ = κ/((k+1)(r+1))` and spin `|k-r|/2`.
pub fn mass_tensor(k: u32, r: u32, kappa: &BigRational) -> Result<(BigRational, BigRational)> {
    if !kappa.is_positive() {
        return Err(Error::Parse(format!("kappa = {kappa} must be positive")));
    }
    let mu = kappa / q((k as i64 + 1) * (r as i64 + 1), 1);
    Ok((mu, q((k as i64 - r as i64).abs(), 2)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainScheme {
    BoseDiagonal,
    FermiDiagonal,
}

impl FromStr for ChainScheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bose" | "bose_diagonal" | "bose-diagonal" => Ok(ChainScheme::BoseDiagonal),
            "fermi" | "fermi_diagonal" | "fermi-diagonal" => Ok(ChainScheme::FermiDiagonal),
            _ => Err(Error::Parse(format!("unknown chain scheme {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntry {
    pub field: FieldSpec,
    /// Spinspace dimension `2^{k+r}`.
    pub dim: u64,
}

/// Bose: `(0,0), (1,1), ..`; Fermi: `(1,0), (2,1), ..`.
pub fn enumerate_chain(scheme: ChainScheme, depth: u32) -> Result<Vec<ChainEntry>> {
    if depth == 0 {
        return Err(Error::Parse("chain depth must be at least 1".into()));
    }
    let offset = match scheme {
        ChainScheme::BoseDiagonal => 0,
        ChainScheme::FermiDiagonal => 1,
    };
    (0..depth)
        .map(|i| {
            let (k, r) = (i + offset, i);
            let dim = 1u64
                .checked_shl(k + r)
                .filter(|_| k + r < 64)
                .ok_or_else(|| Error::Parse("chain too deep".into()))?;
            Ok(ChainEntry {
                field: FieldSpec::tensor(k, r),
                dim,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_sizes() {
        let a = field_to_algebra(&"l=1/2".parse().unwrap());
        assert_eq!((a.num_generators, a.matrix_dim), (4, 4));
        let a = field_to_algebra(&"l=3/2".parse().unwrap());
        assert_eq!((a.num_generators, a.matrix_dim), (8, 16));
        let a = field_to_algebra(&"(3/2,1)+(1,3/2)".parse().unwrap());
        assert_eq!((a.num_generators, a.matrix_dim), (12, 64));
        let s = field_to_algebra(&FieldSpec::tensor(0, 0));
        assert!(s.degenerate);
        assert_eq!((s.num_generators, s.matrix_dim), (0, 1));
    }

    #[test]
    fn parse_grammar() {
        assert_eq!("l=1/2".parse::<FieldSpec>().unwrap(), FieldSpec::chiral(1));
        assert_eq!("l=1".parse::<FieldSpec>().unwrap(), FieldSpec::chiral(2));
        assert_eq!("l = 3/2".parse::<FieldSpec>().unwrap(), FieldSpec::chiral(3));
        assert_eq!("k=3,r=2".parse::<FieldSpec>().unwrap(), FieldSpec::tensor(3, 2));
        assert_eq!("(3/2,1)+(1,3/2)".parse::<FieldSpec>().unwrap(), FieldSpec::tensor(3, 2));
        assert_eq!("(1/2,0)+(0,1/2)".parse::<FieldSpec>().unwrap(), FieldSpec::chiral(1));
        assert!("(3/2,1)+(3/2,1)".parse::<FieldSpec>().is_err());
        assert!("l=1/3".parse::<FieldSpec>().is_err());
        assert!("spin".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for f in [
            FieldSpec::chiral(1),
            FieldSpec::chiral(4),
            FieldSpec::tensor(3, 2),
            FieldSpec::tensor(2, 2),
        ] {
            assert_eq!(f.to_string().parse::<FieldSpec>().unwrap(), f);
        }
    }

    #[test]
    fn rep_examples() {
        let r = rep_params(&FieldSpec::chiral(1));
        assert_eq!((r.l0.clone(), r.l1.clone(), r.l.clone()), (q(1, 2), q(3, 2), q(1, 2)));
        let r = rep_params(&FieldSpec::chiral(2));
        assert_eq!((r.l0.clone(), r.l1.clone(), r.l.clone()), (q(1, 1), q(2, 1), q(1, 1)));
        let r = rep_params(&FieldSpec::tensor(3, 2));
        assert_eq!((r.l0.clone(), r.l1.clone()), (q(1, 2), q(7, 2)));
        assert_eq!(mass_tensor(3, 2, &q(1, 1)).unwrap().1, q(1, 2));
    }

    #[test]
    fn mass_examples() {
        assert_eq!(mass_gy(&q(1, 2), &q(1, 1)).unwrap(), q(1, 1));
        assert_eq!(mass_gy(&q(0, 1), &q(1, 1)).unwrap(), q(2, 1));
        assert_eq!(mass_gy(&q(1, 1), &q(3, 1)).unwrap(), q(2, 1));
        assert!(mass_gy(&q(-1, 2), &q(1, 1)).is_err());
        assert_eq!(mass_tensor(1, 0, &q(1, 1)).unwrap(), (q(1, 2), q(1, 2)));
        assert_eq!(mass_tensor(1, 1, &q(4, 1)).unwrap(), (q(1, 1), q(0, 1)));
        assert_eq!(mass_tensor(3, 2, &q(12, 1)).unwrap(), (q(1, 1), q(1, 2)));
    }

    #[test]
    fn chains() {
        let dims = |s, d| enumerate_chain(s, d).unwrap().iter().map(|e| e.dim).collect::<Vec<_>>();
        assert_eq!(dims(ChainScheme::BoseDiagonal, 3), vec![1, 4, 16]);
        assert_eq!(dims(ChainScheme::FermiDiagonal, 2), vec![2, 8]);
        assert_eq!(enumerate_chain(ChainScheme::FermiDiagonal, 1).unwrap().len(), 1);
        assert!(enumerate_chain(ChainScheme::BoseDiagonal, 0).is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/2").unwrap(), q(3, 2));
        assert_eq!(parse_rational("0.5").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-2").unwrap(), q(-2, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
