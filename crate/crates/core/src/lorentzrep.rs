//! Finite-dimensional Lorentz-group operators: Gel'fand–Naimark basis, Van der
//! Waerden basis, the map between them, and spintensor transformation.
//!
//! Entries live in [`Surd`], so every bracket is checked exactly.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussianRational, Matrix, Scalar, Surd};

pub type SurdMatrix = Matrix<Surd>;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn gauss(re: BigRational, im: BigRational) -> Surd {
    Surd::from_gaussian(GaussianRational::new(re, im))
}

fn i_times(x: BigRational) -> Surd {
    gauss(BigRational::zero(), x)
}

/// Half-integer range `from, from+1, .., to` (inclusive).
fn half_range(from: &BigRational, to: &BigRational) -> Vec<BigRational> {
    let mut out = Vec::new();
    let mut x = from.clone();
    while x <= *to {
        out.push(x.clone());
        x += q(1, 1);
    }
    out
}

/// Operators in the basis `ξ_{kν}`, `k = l0 .. |l1|-1`, `ν = -k .. k`, ordered by
/// ascending `k` then ascending `ν`.
#[derive(Clone, Debug, PartialEq)]
pub struct GNRep {
    pub l0: BigRational,
    pub l1: BigRational,
    pub dim: usize,
    pub basis: Vec<(BigRational, BigRational)>,
    pub h3: SurdMatrix,
    pub hp: SurdMatrix,
    pub hm: SurdMatrix,
    pub f3: SurdMatrix,
    pub fp: SurdMatrix,
    pub fm: SurdMatrix,
}

pub const GN_BASIS_ORDER: &str = "xi_{k,nu}: ascending k, then ascending nu";

/// Builds the six GN operators. Finite only: `|l1| - l0` must be a positive integer.
pub fn build_gn_rep(l0: &BigRational, l1: &BigRational) -> Result<GNRep> {
    let two_l0 = l0 * q(2, 1);
    if l0.is_negative() || !two_l0.is_integer() {
        return Err(Error::Unsupported(format!(
            "l0 = {l0} must be a non-negative integer or half-integer"
        )));
    }
    let p = l1.abs() - l0;
    if !p.is_integer() || !p.is_positive() {
        return Err(Error::Unsupported(format!(
            "(l0, l1) = ({l0}, {l1}) is infinite-dimensional: finite reps need l1^2 = (l0+p)^2 for a natural p"
        )));
    }
    let top = l1.abs() - q(1, 1);
    let basis: Vec<(BigRational, BigRational)> = half_range(l0, &top)
        .into_iter()
        .flat_map(|k| half_range(&-k.clone(), &k).into_iter().map(move |nu| (k.clone(), nu)))
        .collect();
    let dim = basis.len();
    let index = |k: &BigRational, nu: &BigRational| basis.iter().position(|(a, b)| a == k && b == nu);

    let l0l1 = l0 * l1;
    let (l0sq, l1sq) = (l0 * l0, l1 * l1);
    let a_k = |k: &BigRational| -> Surd {
        if k.is_zero() {
            return Surd::zero();
        }
        i_times(&l0l1 / (k * (k + q(1, 1))))
    };
    // C_k couples k-1 and k; it vanishes (and may be singular) for k <= l0.
    let c_k = |k: &BigRational| -> Surd {
        if k <= l0 {
            return Surd::zero();
        }
        let k2 = k * k;
        let arg = (&k2 - &l0sq) * (&k2 - &l1sq) / (q(4, 1) * &k2 - q(1, 1));
        i_times(q(1, 1) / k) * Surd::sqrt(&arg)
    };
    let rt = |x: BigRational| Surd::sqrt(&x);

    let mut ops: [SurdMatrix; 6] = std::array::from_fn(|_| SurdMatrix::zeros(dim));
    let [h3, hp, hm, f3, fp, fm] = &mut ops;
    let put = |m: &mut SurdMatrix, tk: BigRational, tnu: BigRational, src: usize, v: Surd| {
        if v.is_zero() {
            return;
        }
        if let Some(t) = index(&tk, &tnu) {
            let cur = m.get(t, src).clone();
            m.set(t, src, cur + v);
        }
    };
    let one = q(1, 1);
    for (s, (k, nu)) in basis.iter().enumerate() {
        let (kp, km) = (k + &one, k - &one);
        let (nup, num) = (nu + &one, nu - &one);
        put(h3, k.clone(), nu.clone(), s, Surd::rational(nu.clone()));
        put(hp, k.clone(), nup.clone(), s, rt((k + nu + &one) * (k - nu)));
        put(hm, k.clone(), num.clone(), s, rt((k + nu) * (k - nu + &one)));

        put(f3, km.clone(), nu.clone(), s, c_k(k) * rt(k * k - nu * nu));
        put(f3, k.clone(), nu.clone(), s, -(a_k(k) * Surd::rational(nu.clone())));
        put(f3, kp.clone(), nu.clone(), s, -(c_k(&kp) * rt(&kp * &kp - nu * nu)));

        put(fp, km.clone(), nup.clone(), s, c_k(k) * rt((k - nu) * (k - nu - &one)));
        put(fp, k.clone(), nup.clone(), s, -(a_k(k) * rt((k - nu) * (k + nu + &one))));
        put(fp, kp.clone(), nup.clone(), s, c_k(&kp) * rt((k + nu + &one) * (k + nu + q(2, 1))));

        put(fm, km.clone(), num.clone(), s, -(c_k(k) * rt((k + nu) * (k + nu - &one))));
        put(fm, k.clone(), num.clone(), s, -(a_k(k) * rt((k + nu) * (k - nu + &one))));
        put(
            fm,
            kp.clone(),
            num.clone(),
            s,
            -(c_k(&kp) * rt((k - nu + &one) * (k - nu + q(2, 1)))),
        );
    }
    let [h3, hp, hm, f3, fp, fm] = ops;
    Ok(GNRep {
        l0: l0.clone(),
        l1: l1.clone(),
        dim,
        basis,
        h3,
        hp,
        hm,
        f3,
        fp,
        fm,
    })
}

/// Rotation generators `A1..A3` and boosts `B1..B3`.
#[derive(Clone, Debug, PartialEq)]
pub struct LorentzGenerators {
    pub a: [SurdMatrix; 3],
    pub b: [SurdMatrix; 3],
}

/// Su(2)×su(2) generators `X1..X3`, `Y1..Y3`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitGenerators {
    pub x: [SurdMatrix; 3],
    pub y: [SurdMatrix; 3],
}

/// Ladder form `X±, X3, Y±, Y3`.
#[derive(Clone, Debug, PartialEq)]
pub struct LadderOperators {
    pub xp: SurdMatrix,
    pub xm: SurdMatrix,
    pub x3: SurdMatrix,
    pub yp: SurdMatrix,
    pub ym: SurdMatrix,
    pub y3: SurdMatrix,
}

fn c(re: (i64, i64), im: (i64, i64)) -> Surd {
    gauss(q(re.0, re.1), q(im.0, im.1))
}

fn lin(terms: &[(&SurdMatrix, Surd)]) -> Result<SurdMatrix> {
    let mut out = SurdMatrix::zeros(terms[0].0.dim());
    for (m, s) in terms {
        out = out.add(&m.scale(s))?;
    }
    Ok(out)
}

/// `(P, M, Z)` with `P = iU1 - U2`, `M = iU1 + U2`, `Z = iU3` inverted to `U1..U3`.
fn from_ladder(p: &SurdMatrix, m: &SurdMatrix, z: &SurdMatrix) -> Result<[SurdMatrix; 3]> {
    let neg_half_i = c((0, 1), (-1, 2));
    Ok([
        lin(&[(p, neg_half_i.clone()), (m, neg_half_i)])?,
        lin(&[(m, c((1, 2), (0, 1))), (p, c((-1, 2), (0, 1)))])?,
        z.scale(&c((0, 1), (-1, 1))),
    ])
}

impl GNRep {
    pub fn generators(&self) -> Result<LorentzGenerators> {
        Ok(LorentzGenerators {
            a: from_ladder(&self.hp, &self.hm, &self.h3)?,
            b: from_ladder(&self.fp, &self.fm, &self.f3)?,
        })
    }
}

/// `X_l = ½i(A_l + iB_l)`, `Y_l = ½i(A_l - iB_l)`.
pub fn split_generators(g: &LorentzGenerators) -> Result<SplitGenerators> {
    let half_i = c((0, 1), (1, 2));
    let half = c((1, 2), (0, 1));
    let x = std::array::from_fn(|l| lin(&[(&g.a[l], half_i.clone()), (&g.b[l], -half.clone())]));
    let y = std::array::from_fn(|l| lin(&[(&g.a[l], half_i.clone()), (&g.b[l], half.clone())]));
    let [x0, x1, x2] = x;
    let [y0, y1, y2] = y;
    Ok(SplitGenerators {
        x: [x0?, x1?, x2?],
        y: [y0?, y1?, y2?],
    })
}

/// `A = -i(X+Y)`, `B = Y - X`.
pub fn join_generators(s: &SplitGenerators) -> Result<LorentzGenerators> {
    let mi = c((0, 1), (-1, 1));
    let a = std::array::from_fn(|l| s.x[l].add(&s.y[l]).map(|m| m.scale(&mi)));
    let b = std::array::from_fn(|l| s.y[l].sub(&s.x[l]));
    let [a0, a1, a2] = a;
    let [b0, b1, b2] = b;
    Ok(LorentzGenerators {
        a: [a0?, a1?, a2?],
        b: [b0?, b1?, b2?],
    })
}

/// `X± = X1 ± iX2`.
pub fn to_ladder(s: &SplitGenerators) -> Result<LadderOperators> {
    let (one, i) = (c((1, 1), (0, 1)), c((0, 1), (1, 1)));
    Ok(LadderOperators {
        xp: lin(&[(&s.x[0], one.clone()), (&s.x[1], i.clone())])?,
        xm: lin(&[(&s.x[0], one.clone()), (&s.x[1], -i.clone())])?,
        x3: s.x[2].clone(),
        yp: lin(&[(&s.y[0], one.clone()), (&s.y[1], i.clone())])?,
        ym: lin(&[(&s.y[0], one), (&s.y[1], -i)])?,
        y3: s.y[2].clone(),
    })
}

/// `X1 = (X+ + X-)/2`, `X2 = (X+ - X-)/(2i)`.
pub fn from_ladder_pm(l: &LadderOperators) -> Result<SplitGenerators> {
    let half = c((1, 2), (0, 1));
    let neg_half_i = c((0, 1), (-1, 2));
    let pair = |p: &SurdMatrix, m: &SurdMatrix| -> Result<[SurdMatrix; 2]> {
        Ok([
            lin(&[(p, half.clone()), (m, half.clone())])?,
            lin(&[(p, neg_half_i.clone()), (m, -neg_half_i.clone())])?,
        ])
    };
    let [x1, x2] = pair(&l.xp, &l.xm)?;
    let [y1, y2] = pair(&l.yp, &l.ym)?;
    Ok(SplitGenerators {
        x: [x1, x2, l.x3.clone()],
        y: [y1, y2, l.y3.clone()],
    })
}

/// The conversion array as printed: `X± = ½(F± - iH±)`, `Y± = -½(F± + iH±)`, same for index 3.
pub fn conversion_array(rep: &GNRep) -> Result<LadderOperators> {
    let (half, half_i) = (c((1, 2), (0, 1)), c((0, 1), (1, 2)));
    let x = |f: &SurdMatrix, h: &SurdMatrix| lin(&[(f, half.clone()), (h, -half_i.clone())]);
    let y = |f: &SurdMatrix, h: &SurdMatrix| lin(&[(f, -half.clone()), (h, -half_i.clone())]);
    Ok(LadderOperators {
        xp: x(&rep.fp, &rep.hp)?,
        xm: x(&rep.fm, &rep.hm)?,
        x3: x(&rep.f3, &rep.h3)?,
        yp: y(&rep.fp, &rep.hp)?,
        ym: y(&rep.fm, &rep.hm)?,
        y3: y(&rep.f3, &rep.h3)?,
    })
}

/// Ladder operators from GN data: the printed array times `i`, which is what the
/// split definitions give. Fails if the result violates the su(2)×su(2) brackets.
pub fn waerden_from_gn(rep: &GNRep) -> Result<LadderOperators> {
    let raw = conversion_array(rep)?;
    let i = c((0, 1), (1, 1));
    let out = LadderOperators {
        xp: raw.xp.scale(&i),
        xm: raw.xm.scale(&i),
        x3: raw.x3.scale(&i),
        yp: raw.yp.scale(&i),
        ym: raw.ym.scale(&i),
        y3: raw.y3.scale(&i),
    };
    let report = split_algebra_checks(&from_ladder_pm(&out)?)?;
    if let Some(bad) = report.iter().find(|r| !r.holds) {
        return Err(Error::Consistency(format!("su(2)xsu(2) relation {} fails", bad.name)));
    }
    Ok(out)
}

/// Basis `|l,m; l̇,ṁ⟩`, ordered by ascending `m`, then ascending `ṁ`.
#[derive(Clone, Debug, PartialEq)]
pub struct WaerdenRep {
    pub l: BigRational,
    pub l_dot: BigRational,
    pub dim: usize,
    pub basis: Vec<(BigRational, BigRational)>,
    pub ops: LadderOperators,
}

pub fn build_waerden(l: &BigRational, l_dot: &BigRational) -> Result<WaerdenRep> {
    for x in [l, l_dot] {
        if x.is_negative() || !(x * q(2, 1)).is_integer() {
            return Err(Error::Unsupported(format!("{x} is not a non-negative half-integer")));
        }
    }
    let ms = half_range(&-l.clone(), l);
    let mds = half_range(&-l_dot.clone(), l_dot);
    let basis: Vec<(BigRational, BigRational)> = ms.iter().flat_map(|m| mds.iter().map(move |md| (m.clone(), md.clone()))).collect();
    let dim = basis.len();
    let idx = |m: &BigRational, md: &BigRational| basis.iter().position(|(a, b)| a == m && b == md);
    let one = q(1, 1);
    let mut ops: [SurdMatrix; 6] = std::array::from_fn(|_| SurdMatrix::zeros(dim));
    for (s, (m, md)) in basis.iter().enumerate() {
        let mut put = |op: usize, tm: BigRational, tmd: BigRational, v: Surd| {
            if let (Some(t), false) = (idx(&tm, &tmd), v.is_zero()) {
                ops[op].set(t, s, v);
            }
        };
        put(0, m + &one, md.clone(), Surd::sqrt(&((l - m) * (l + m + &one))));
        put(1, m - &one, md.clone(), Surd::sqrt(&((l + m) * (l - m + &one))));
        put(2, m.clone(), md.clone(), Surd::rational(m.clone()));
        put(3, m.clone(), md + &one, Surd::sqrt(&((l_dot - md) * (l_dot + md + &one))));
        put(4, m.clone(), md - &one, Surd::sqrt(&((l_dot + md) * (l_dot - md + &one))));
        put(5, m.clone(), md.clone(), Surd::rational(md.clone()));
    }
    let [xp, xm, x3, yp, ym, y3] = ops;
    Ok(WaerdenRep {
        l: l.clone(),
        l_dot: l_dot.clone(),
        dim,
        basis,
        ops: LadderOperators { xp, xm, x3, yp, ym, y3 },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

fn check(name: String, lhs: Result<SurdMatrix>, rhs: SurdMatrix) -> Result<RelationCheck> {
    Ok(RelationCheck { name, holds: lhs? == rhs })
}

/// The fifteen brackets among rotations and boosts.
pub fn lorentz_algebra_checks(g: &LorentzGenerators) -> Result<Vec<RelationCheck>> {
    let (a, b) = (&g.a, &g.b);
    let z = SurdMatrix::zeros(a[0].dim());
    let n = |m: &SurdMatrix| m.neg();
    let br = |x: &SurdMatrix, y: &SurdMatrix| x.commutator(y);
    let rels: Vec<(&str, Result<SurdMatrix>, SurdMatrix)> = vec![
        ("[A1,A2]=A3", br(&a[0], &a[1]), a[2].clone()),
        ("[A2,A3]=A1", br(&a[1], &a[2]), a[0].clone()),
        ("[A3,A1]=A2", br(&a[2], &a[0]), a[1].clone()),
        ("[B1,B2]=-A3", br(&b[0], &b[1]), n(&a[2])),
        ("[B2,B3]=-A1", br(&b[1], &b[2]), n(&a[0])),
        ("[B3,B1]=-A2", br(&b[2], &b[0]), n(&a[1])),
        ("[A1,B1]=0", br(&a[0], &b[0]), z.clone()),
        ("[A2,B2]=0", br(&a[1], &b[1]), z.clone()),
        ("[A3,B3]=0", br(&a[2], &b[2]), z),
        ("[A1,B2]=B3", br(&a[0], &b[1]), b[2].clone()),
        ("[A1,B3]=-B2", br(&a[0], &b[2]), n(&b[1])),
        ("[A2,B3]=B1", br(&a[1], &b[2]), b[0].clone()),
        ("[A2,B1]=-B3", br(&a[1], &b[0]), n(&b[2])),
        ("[A3,B1]=B2", br(&a[2], &b[0]), b[1].clone()),
        ("[A3,B2]=-B1", br(&a[2], &b[1]), n(&b[0])),
    ];
    rels.into_iter().map(|(name, l, r)| check(name.to_string(), l, r)).collect()
}

/// `[X_k, X_l] = iε X_m`, `[Y_k, Y_l] = iε Y_m`, `[X_k, Y_l] = 0`.
pub fn split_algebra_checks(s: &SplitGenerators) -> Result<Vec<RelationCheck>> {
    let i = c((0, 1), (1, 1));
    let mut out = Vec::new();
    for (name, ops) in [("X", &s.x), ("Y", &s.y)] {
        for (k, l, m) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            out.push(check(
                format!("[{name}{},{name}{}]=i{name}{}", k + 1, l + 1, m + 1),
                ops[k].commutator(&ops[l]),
                ops[m].scale(&i),
            )?);
        }
    }
    for k in 0..3 {
        for l in 0..3 {
            out.push(check(
                format!("[X{},Y{}]=0", k + 1, l + 1),
                s.x[k].commutator(&s.y[l]),
                SurdMatrix::zeros(s.x[0].dim()),
            )?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorentzReport {
    pub lorentz: Vec<RelationCheck>,
    pub split: Vec<RelationCheck>,
}

impl LorentzReport {
    pub fn all_pass(&self) -> bool {
        self.lorentz.iter().chain(&self.split).all(|r| r.holds)
    }
}

pub enum AnyRep<'a> {
    GelfandNaimark(&'a GNRep),
    Waerden(&'a WaerdenRep),
}

/// Checks both bracket families, converting between bases as needed.
pub fn verify_lorentz_relations(rep: AnyRep<'_>) -> Result<LorentzReport> {
    let (gens, split) = match rep {
        AnyRep::GelfandNaimark(r) => {
            let g = r.generators()?;
            let s = split_generators(&g)?;
            (g, s)
        }
        AnyRep::Waerden(w) => {
            let s = from_ladder_pm(&w.ops)?;
            (join_generators(&s)?, s)
        }
    };
    Ok(LorentzReport {
        lorentz: lorentz_algebra_checks(&gens)?,
        split: split_algebra_checks(&split)?,
    })
}

/// Components `s^{α1..αk α̇1..α̇r}`, flattened with `α1` most significant and
/// dotted indices after undotted ones; index values 1, 2 stored as 0, 1.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinTensor {
    pub k: u32,
    pub r: u32,
    pub components: Vec<GaussianRational>,
}

impl SpinTensor {
    pub fn new(k: u32, r: u32, components: Vec<GaussianRational>) -> Result<Self> {
        let n = 1usize << (k + r);
        if components.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: components.len(),
            });
        }
        Ok(SpinTensor { k, r, components })
    }
}

/// Applies `σ` to every undotted index and `σ̇` to every dotted one.
pub fn spintensor_transform(sigma: &ExactMatrix, sigma_dot: &ExactMatrix, t: &SpinTensor) -> Result<SpinTensor> {
    for m in [sigma, sigma_dot] {
        if m.dim() != 2 {
            return Err(Error::DimensionMismatch { left: 2, right: m.dim() });
        }
    }
    let rank = (t.k + t.r) as usize;
    let mut cur = t.components.clone();
    for slot in 0..rank {
        let m = if slot < t.k as usize { sigma } else { sigma_dot };
        let bit = rank - 1 - slot;
        let mut next = vec![GaussianRational::zero(); cur.len()];
        for (idx, out) in next.iter_mut().enumerate() {
            let row = (idx >> bit) & 1;
            for col in 0..2 {
                let src = (idx & !(1 << bit)) | (col << bit);
                *out = out.clone() + m.get(row, col) * &cur[src];
            }
        }
        cur = next;
    }
    SpinTensor::new(t.k, t.r, cur)
}
