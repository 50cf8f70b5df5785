//! Formal Clifford-algebra elements as sparse blade polynomials.
//!
//! Blade `e_{i1..ik}` is stored as the bitmask with bit `i-1` set for each index.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

/// Default ceiling on `p + q`.
pub const MAX_GENERATORS: usize = 16;

/// `cl(p,q)`, or its complexification `C_{p+q}` when `complexified`.
///
/// `e_i² = +1` for `i ≤ p`, `-1` for `i > p`. The complex algebra `C_n` in its
/// canonical orthobasis is `AlgebraSignature::complex(n)`, i.e. `p = n, q = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSignature {
    pub p: usize,
    pub q: usize,
    pub complexified: bool,
}

impl AlgebraSignature {
    pub fn new(p: usize, q: usize, complexified: bool) -> Result<Self> {
        Self::with_cap(p, q, complexified, MAX_GENERATORS)
    }

    pub fn with_cap(p: usize, q: usize, complexified: bool, cap: usize) -> Result<Self> {
        if p + q > cap.min(31) {
            return Err(Error::SignatureCap { n: p + q, cap });
        }
        Ok(AlgebraSignature { p, q, complexified })
    }

    pub fn real(p: usize, q: usize) -> Result<Self> {
        Self::new(p, q, false)
    }

    pub fn complex(n: usize) -> Result<Self> {
        Self::new(n, 0, true)
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Square of `e_i` (1-based).
    pub fn square(&self, i: usize) -> i8 {
        if i <= self.p {
            1
        } else {
            -1
        }
    }

    pub fn full_mask(&self) -> u32 {
        (1u32 << self.n()) - 1
    }
}

/// Sign of `e_A e_B = sign · e_{A xor B}`.
pub fn blade_product_sign(sig: &AlgebraSignature, a: u32, b: u32) -> i8 {
    let mut swaps = 0u32;
    let mut bits = b;
    while bits != 0 {
        let j = bits.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        bits &= bits - 1;
    }
    let mut sign: i8 = if swaps.is_multiple_of(2) { 1 } else { -1 };
    let mut common = a & b;
    while common != 0 {
        let j = common.trailing_zeros() as usize;
        sign *= sig.square(j + 1);
        common &= common - 1;
    }
    sign
}

fn grade_sign(k: u32, f: impl Fn(u32) -> u32) -> i8 {
    if f(k).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector {
    sig: AlgebraSignature,
    coeffs: BTreeMap<u32, GaussianRational>,
}

impl Multivector {
    pub fn zero(sig: AlgebraSignature) -> Self {
        Multivector {
            sig,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: AlgebraSignature, c: GaussianRational) -> Self {
        Self::blade(sig, 0, c)
    }

    pub fn blade(sig: AlgebraSignature, mask: u32, c: GaussianRational) -> Self {
        let mut m = Self::zero(sig);
        m.add_term(mask & sig.full_mask(), c);
        m
    }

    /// `e_{i1..ik}` from 1-based indices in strictly ascending order.
    pub fn basis_blade(sig: AlgebraSignature, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        let mut last = 0;
        for &i in indices {
            if i == 0 || i > sig.n() || i <= last {
                return Err(Error::Parse(format!("bad blade index list {indices:?}")));
            }
            mask |= 1 << (i - 1);
            last = i;
        }
        Ok(Self::blade(sig, mask, GaussianRational::from_ints(1, 0)))
    }

    pub fn from_terms(sig: AlgebraSignature, terms: impl IntoIterator<Item = (u32, GaussianRational)>) -> Self {
        let mut m = Self::zero(sig);
        for (mask, c) in terms {
            m.add_term(mask & sig.full_mask(), c);
        }
        m
    }

    fn add_term(&mut self, mask: u32, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(mask).or_insert_with(|| GaussianRational::from_ints(0, 0));
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    pub fn signature(&self) -> AlgebraSignature {
        self.sig
    }

    pub fn coeff(&self, mask: u32) -> GaussianRational {
        self.coeffs.get(&mask).cloned().unwrap_or_else(|| GaussianRational::from_ints(0, 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &GaussianRational)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(*k, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|_, c| -c.clone())
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        self.map_coeffs(|_, c| s * c)
    }

    fn map_coeffs(&self, f: impl Fn(u32, &GaussianRational) -> GaussianRational) -> Self {
        Self::from_terms(self.sig, self.coeffs.iter().map(|(k, v)| (*k, f(*k, v))))
    }

    fn scale_by_grade(&self, rule: impl Fn(u32) -> i8) -> Self {
        self.map_coeffs(|k, c| if rule(k.count_ones()) == 1 { c.clone() } else { -c.clone() })
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = Self::zero(self.sig);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let p = x * y;
                let p = if blade_product_sign(&self.sig, *a, *b) == 1 { p } else { -p };
                out.add_term(a ^ b, p);
            }
        }
        Ok(out)
    }

    /// `★`: grade `k` scaled by `(-1)^k`.
    pub fn grade_involution(&self) -> Self {
        self.scale_by_grade(|k| grade_sign(k, |k| k))
    }

    /// `˜`: grade `k` scaled by `(-1)^{k(k-1)/2}`.
    pub fn reversion(&self) -> Self {
        self.scale_by_grade(|k| grade_sign(k, |k| k * k.saturating_sub(1) / 2))
    }

    /// Reversion composed with grade involution: `(-1)^{k(k+1)/2}`.
    pub fn clifford_conjugation(&self) -> Self {
        self.scale_by_grade(|k| grade_sign(k, |k| k * (k + 1) / 2))
    }

    /// `A1 + iA2 ↦ A1 - iA2` with respect to the current basis.
    pub fn pseudo_conjugation(&self) -> Result<Self> {
        if !self.sig.complexified {
            return Err(Error::NotComplexified);
        }
        Ok(self.map_coeffs(|_, c| c.conj()))
    }

    pub fn grade_part(&self, k: u32) -> Self {
        Self::from_terms(
            self.sig,
            self.coeffs
                .iter()
                .filter(|(m, _)| m.count_ones() == k)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// Real scalar `s` with `self² = s`, if the square is a real scalar.
    pub fn square_scalar(&self) -> Result<Option<GaussianRational>> {
        let sq = self.geometric_product(self)?;
        Ok(match sq.coeffs.len() {
            0 => Some(GaussianRational::from_ints(0, 0)),
            1 => sq.coeffs.get(&0).cloned(),
            _ => None,
        })
    }

    /// Render with ASCII blade names (`e_13`); `e_{1,10}` style once `n ≥ 10`.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let wide = self.sig.n() >= 10;
        let mut parts = Vec::new();
        for (mask, c) in &self.coeffs {
            let idx: Vec<String> = (0..32).filter(|j| mask >> j & 1 == 1).map(|j| (j + 1).to_string()).collect();
            let name = if wide {
                format!("e_{{{}}}", idx.join(","))
            } else {
                format!("e_{}", idx.concat())
            };
            let cs = c.to_string();
            let simple = c.is_real() || c.is_imaginary();
            let term = match (*mask == 0, cs.as_str()) {
                (true, _) => cs.clone(),
                (false, "1") => name,
                (false, "-1") => format!("-{name}"),
                (false, _) if simple => format!("{cs}{name}"),
                (false, _) => format!("({cs}){name}"),
            };
            parts.push(term);
        }
        let mut out = parts[0].clone();
        for t in &parts[1..] {
            match t.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `ω = e_{12..n}`.
pub fn volume_element(sig: AlgebraSignature) -> Multivector {
    Multivector::blade(sig, sig.full_mask(), GaussianRational::from_ints(1, 0))
}

/// `ω⁻¹`, obtained from `ω² = s` (a sign) as `s·ω`.
pub fn volume_inverse(sig: AlgebraSignature) -> Multivector {
    let mask = sig.full_mask();
    let s = blade_product_sign(&sig, mask, mask);
    Multivector::blade(sig, mask, GaussianRational::from_ints(s as i64, 0))
}

/// Re-expresses an element of `C_n` (canonical basis, all squares +1) in the basis
/// `{e_1, .., e_p, i e_{p+1}, .., i e_n}`, whose real span is `cl(p, n-p)`.
pub fn to_real_basis(a: &Multivector, p: usize) -> Result<Multivector> {
    let sig = a.signature();
    if !sig.complexified || sig.q != 0 || p > sig.n() {
        return Err(Error::Unsupported("expected a canonical complex algebra C_n with p ≤ n".into()));
    }
    let target = AlgebraSignature::new(p, sig.n() - p, true)?;
    let q_mask = sig.full_mask() & !((1u32 << p) - 1);
    // f_S = i^{|S∩Q|} e_S, so the coefficient on f_S is c_S · i^{-|S∩Q|}.
    let terms = a.terms().map(|(m, c)| (m, c * &i_power(-((m & q_mask).count_ones() as i32))));
    Ok(Multivector::from_terms(target, terms))
}

/// Inverse of [`to_real_basis`].
pub fn from_real_basis(a: &Multivector) -> Result<Multivector> {
    let sig = a.signature();
    if !sig.complexified {
        return Err(Error::NotComplexified);
    }
    let target = AlgebraSignature::complex(sig.n())?;
    let q_mask = sig.full_mask() & !((1u32 << sig.p) - 1);
    let terms = a.terms().map(|(m, c)| (m, c * &i_power((m & q_mask).count_ones() as i32)));
    Ok(Multivector::from_terms(target, terms))
}

fn i_power(k: i32) -> GaussianRational {
    match k.rem_euclid(4) {
        0 => GaussianRational::from_ints(1, 0),
        1 => GaussianRational::from_ints(0, 1),
        2 => GaussianRational::from_ints(-1, 0),
        _ => GaussianRational::from_ints(0, -1),
    }
}

/// The eight maps `{Id, ★, ˜, ˜★, ‾, ‾★, ‾˜, ‾˜★}` in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtMap {
    Id,
    Star,
    Tilde,
    TildeStar,
    Bar,
    BarStar,
    BarTilde,
    BarTildeStar,
}

impl ExtMap {
    pub const ALL: [ExtMap; 8] = [
        ExtMap::Id,
        ExtMap::Star,
        ExtMap::Tilde,
        ExtMap::TildeStar,
        ExtMap::Bar,
        ExtMap::BarStar,
        ExtMap::BarTilde,
        ExtMap::BarTildeStar,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        ["Id", "*", "~", "~*", "bar", "bar*", "bar~", "bar~*"][self.index()]
    }

    /// Bits: 1 = ★, 2 = ˜, 4 = ‾.
    pub fn apply(self, a: &Multivector) -> Result<Multivector> {
        let bits = self.index();
        let mut out = a.clone();
        if bits & 1 != 0 {
            out = out.grade_involution();
        }
        if bits & 2 != 0 {
            out = out.reversion();
        }
        if bits & 4 != 0 {
            out = out.pseudo_conjugation()?;
        }
        Ok(out)
    }
}

/// Composition table of the eight maps, derived by acting on `probe` and
/// identifying the result. `table[r][c] = r ∘ c`.
///
/// `probe` must distinguish all eight maps: nonzero coefficients in grades 0..3
/// with non-real values.
pub fn ext_table(probe: &Multivector) -> Result<[[ExtMap; 8]; 8]> {
    let images: Vec<Multivector> = ExtMap::ALL.iter().map(|m| m.apply(probe)).collect::<Result<_>>()?;
    for i in 0..8 {
        for j in 0..i {
            if images[i] == images[j] {
                return Err(Error::Consistency("probe does not separate the eight maps".into()));
            }
        }
    }
    let mut table = [[ExtMap::Id; 8]; 8];
    for (r, row) in ExtMap::ALL.iter().enumerate() {
        for (c, col) in ExtMap::ALL.iter().enumerate() {
            let v = row.apply(&col.apply(probe)?)?;
            let hit = images
                .iter()
                .position(|x| *x == v)
                .ok_or_else(|| Error::Consistency("composition left the set".into()))?;
            table[r][c] = ExtMap::ALL[hit];
        }
    }
    Ok(table)
}

/// A probe element of `C_n` (n ≥ 3) with coefficient `(1 + k) + (k+2)i` on each grade-`k` blade `e_{1..k}`.
pub fn standard_probe(n: usize) -> Result<Multivector> {
    let sig = AlgebraSignature::complex(n.max(3))?;
    let terms = (0..4u32).map(|k| ((1u32 << k) - 1, GaussianRational::from_ints(1 + k as i64, k as i64 + 2)));
    Ok(Multivector::from_terms(sig, terms))
}

/// The four coefficients `a^j + ω a^{dual(j)}` of a real element of `cl(3,0)`
/// written as `Σ (a^j + ω a^{..}) e_j` (j = 0..3), with `ω ≡ i`.
///
/// Duals: `e_0 ↔ e_123`, `e_1 ↔ e_23`, `e_2 ↔ e_31 = -e_13`, `e_3 ↔ e_12`.
pub fn pauli_form(a: &Multivector) -> Result<[GaussianRational; 4]> {
    let sig = a.signature();
    if sig.p != 3 || sig.q != 0 {
        return Err(Error::Unsupported("pauli_form needs cl(3,0)".into()));
    }
    if a.terms().any(|(_, c)| !c.is_real()) {
        return Err(Error::Unsupported("pauli_form needs real coefficients".into()));
    }
    let re = |m: u32| a.coeff(m).re;
    let pairs: [(u32, u32, i64); 4] = [(0b000, 0b111, 1), (0b001, 0b110, 1), (0b010, 0b101, -1), (0b100, 0b011, 1)];
    Ok(pairs.map(|(v, d, s)| GaussianRational::new(re(v), re(d) * BigRational::from_integer(s.into()))))
}

/// Whether `ω` commutes with every generator.
pub fn volume_is_central(sig: AlgebraSignature) -> bool {
    let w = sig.full_mask();
    (0..sig.n()).all(|j| {
        let e = 1u32 << j;
        blade_product_sign(&sig, w, e) == blade_product_sign(&sig, e, w)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> AlgebraSignature {
        AlgebraSignature::real(p, q).unwrap()
    }

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn e(s: AlgebraSignature, idx: &[usize]) -> Multivector {
        Multivector::basis_blade(s, idx).unwrap()
    }

    #[test]
    fn products_in_cl20() {
        let s = sig(2, 0);
        assert_eq!(e(s, &[1]).geometric_product(&e(s, &[2])).unwrap(), e(s, &[1, 2]));
        assert_eq!(e(s, &[1]).geometric_product(&e(s, &[1])).unwrap(), Multivector::scalar(s, g(1, 0)));
        assert_eq!(
            e(s, &[1, 2]).geometric_product(&e(s, &[1, 2])).unwrap(),
            Multivector::scalar(s, g(-1, 0))
        );
        assert_eq!(e(s, &[2]).geometric_product(&e(s, &[1])).unwrap(), e(s, &[1, 2]).neg());
    }

    #[test]
    fn negative_square() {
        let s = sig(1, 1);
        assert_eq!(e(s, &[2]).geometric_product(&e(s, &[2])).unwrap(), Multivector::scalar(s, g(-1, 0)));
    }

    #[test]
    fn mismatch_is_error() {
        assert_eq!(
            e(sig(2, 0), &[1]).geometric_product(&e(sig(1, 1), &[1])),
            Err(Error::SignatureMismatch)
        );
    }

    #[test]
    fn cap_enforced() {
        assert!(AlgebraSignature::real(10, 7).is_err());
        assert!(AlgebraSignature::real(10, 6).is_ok());
    }

    #[test]
    fn grade_involution_examples() {
        let s = sig(2, 0);
        assert_eq!(e(s, &[1]).grade_involution(), e(s, &[1]).neg());
        assert_eq!(e(s, &[1, 2]).grade_involution(), e(s, &[1, 2]));
        let a = Multivector::from_terms(s, [(0, g(1, 0)), (1, g(1, 0)), (3, g(1, 0))]);
        let b = Multivector::from_terms(s, [(0, g(1, 0)), (1, g(-1, 0)), (3, g(1, 0))]);
        assert_eq!(a.grade_involution(), b);
    }

    #[test]
    fn reversion_examples() {
        let s = sig(3, 0);
        assert_eq!(e(s, &[1]).reversion(), e(s, &[1]));
        assert_eq!(e(s, &[1, 2]).reversion(), e(s, &[1, 2]).neg());
        assert_eq!(e(s, &[1, 2, 3]).reversion(), e(s, &[1, 2, 3]).neg());
    }

    #[test]
    fn conjugation_examples() {
        let s = sig(2, 0);
        assert_eq!(e(s, &[1]).clifford_conjugation(), e(s, &[1]).neg());
        assert_eq!(e(s, &[1, 2]).clifford_conjugation(), e(s, &[1, 2]).neg());
        let one = Multivector::scalar(s, g(1, 0));
        assert_eq!(one.clifford_conjugation(), one);
    }

    #[test]
    fn pseudo_conjugation_examples() {
        let s = AlgebraSignature::complex(2).unwrap();
        let a = Multivector::blade(s, 1, g(0, 1));
        assert_eq!(a.pseudo_conjugation().unwrap(), Multivector::blade(s, 1, g(0, -1)));
        let b = e(s, &[1, 2]);
        assert_eq!(b.pseudo_conjugation().unwrap(), b);
        let c = Multivector::from_terms(s, [(0, g(1, 1)), (3, g(2, -1))]);
        let d = Multivector::from_terms(s, [(0, g(1, -1)), (3, g(2, 1))]);
        assert_eq!(c.pseudo_conjugation().unwrap(), d);
        assert_eq!(e(sig(2, 0), &[1]).pseudo_conjugation(), Err(Error::NotComplexified));
    }

    #[test]
    fn volume_examples() {
        assert_eq!(volume_element(sig(2, 0)), e(sig(2, 0), &[1, 2]));
        let w3 = volume_element(sig(3, 0));
        assert_eq!(w3.square_scalar().unwrap(), Some(g(-1, 0)));
        let w11 = volume_element(sig(1, 1));
        assert_eq!(w11.square_scalar().unwrap(), Some(g(1, 0)));
        for (p, q) in [(1, 0), (2, 0), (3, 0), (1, 2), (2, 2), (4, 1)] {
            let s = sig(p, q);
            let prod = volume_element(s).geometric_product(&volume_inverse(s)).unwrap();
            assert_eq!(prod, Multivector::scalar(s, g(1, 0)), "cl({p},{q})");
        }
    }

    #[test]
    fn volume_conjugation_parity() {
        // ω is central for odd n and implements ★ for even n.
        for (p, q) in [(1, 0), (3, 0), (2, 1), (2, 0), (1, 1), (4, 0), (2, 2)] {
            let s = sig(p, q);
            assert_eq!(volume_is_central(s), s.n() % 2 == 1);
            let (w, wi) = (volume_element(s), volume_inverse(s));
            let a = Multivector::from_terms(s, (0..(1u32 << s.n())).map(|m| (m, g(m as i64 + 1, 0))));
            let conj = w.geometric_product(&a).unwrap().geometric_product(&wi).unwrap();
            if s.n().is_multiple_of(2) {
                assert_eq!(conj, a.grade_involution());
            } else {
                assert_eq!(conj, a);
            }
        }
    }

    #[test]
    fn ext_table_is_xor() {
        let t = ext_table(&standard_probe(3).unwrap()).unwrap();
        for r in 0..8 {
            for c in 0..8 {
                assert_eq!(t[r][c].index(), r ^ c);
            }
        }
    }

    #[test]
    fn real_basis_preserves_products() {
        let c3 = AlgebraSignature::complex(3).unwrap();
        let a = Multivector::from_terms(c3, [(0b001, g(1, 2)), (0b110, g(0, 1)), (0b111, g(3, 0))]);
        let b = Multivector::from_terms(c3, [(0b010, g(2, -1)), (0b100, g(1, 1))]);
        let ab = a.geometric_product(&b).unwrap();
        for p in 0..=3 {
            let (ra, rb) = (to_real_basis(&a, p).unwrap(), to_real_basis(&b, p).unwrap());
            assert_eq!(ra.signature(), AlgebraSignature::new(p, 3 - p, true).unwrap());
            assert_eq!(ra.geometric_product(&rb).unwrap(), to_real_basis(&ab, p).unwrap());
            assert_eq!(from_real_basis(&ra).unwrap(), a);
        }
    }

    #[test]
    fn real_basis_pseudo_conjugation_fixes_real_vectors() {
        // i·e_3 is a real vector of cl(2,1) inside C_3, so it is fixed by the induced ‾.
        let c3 = AlgebraSignature::complex(3).unwrap();
        let v = Multivector::blade(c3, 0b100, g(0, 1));
        let r = to_real_basis(&v, 2).unwrap();
        assert_eq!(r.pseudo_conjugation().unwrap(), r);
        // while canonical ‾ negates it.
        assert_eq!(v.pseudo_conjugation().unwrap(), v.neg());
    }

    #[test]
    fn pauli_form_images() {
        let s = sig(3, 0);
        let a = Multivector::from_terms(s, (0..8u32).map(|m| (m, g(m as i64 * 3 - 7, 0))));
        let z = pauli_form(&a).unwrap();
        let star = pauli_form(&a.grade_involution()).unwrap();
        let rev = pauli_form(&a.reversion()).unwrap();
        assert_eq!(star[0], z[0].conj());
        for j in 1..4 {
            assert_eq!(star[j], -z[j].conj());
        }
        for j in 0..4 {
            assert_eq!(rev[j], z[j].conj());
        }
    }

    #[test]
    fn render() {
        let s = AlgebraSignature::complex(3).unwrap();
        let a = Multivector::from_terms(s, [(0b101, g(1, -1)), (0b010, g(2, 0))]);
        assert_eq!(a.render(), "2e_2 + (1-i)e_13");
        assert_eq!(Multivector::zero(s).render(), "0");
        assert_eq!(Multivector::from_terms(s, [(0, g(1, 0)), (1, g(-1, 0))]).render(), "1 - e_1");
    }
}
