use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{GaussianRational, Scalar};

/// Element of Q(i)(√2, √3, ...): a finite sum `Σ c_f √f` over squarefree `f ≥ 1`
/// with Gaussian-rational coefficients. Radicand 1 carries the rational part.
///
/// Square roots of distinct squarefree integers are linearly independent over
/// Q(i), so the sparse map is canonical and `==` is exact equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Surd {
    terms: BTreeMap<BigInt, GaussianRational>,
}

/// Splits `n > 0` into `(s, f)` with `n = s² f`, `f` squarefree.
fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.clone();
    let mut s = BigInt::one();
    let mut f = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            s *= p.pow(e / 2);
            if e % 2 == 1 {
                f *= &p;
            }
        }
        p += 1;
    }
    (s, f * rest)
}

impl Surd {
    pub fn from_gaussian(g: GaussianRational) -> Self {
        Surd::term(BigInt::one(), g)
    }

    pub fn rational(r: BigRational) -> Self {
        Surd::from_gaussian(GaussianRational::real(r))
    }

    pub fn from_int(n: i64) -> Self {
        Surd::from_gaussian(GaussianRational::from_ints(n, 0))
    }

    fn term(radicand: BigInt, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(radicand, c);
        }
        Surd { terms }
    }

    /// Principal square root of a rational; negative input yields `i·√|q|`.
    pub fn sqrt(q: &BigRational) -> Self {
        if q.is_zero() {
            return Surd::default();
        }
        let imaginary = q.is_negative();
        let q = q.abs();
        // √(a/b) = √(ab)/b
        let n = q.numer() * q.denom();
        let (s, f) = square_free_split(&n);
        let coeff = BigRational::new(s, q.denom().clone());
        let c = if imaginary {
            GaussianRational::new(BigRational::zero(), coeff)
        } else {
            GaussianRational::real(coeff)
        };
        Surd::term(f, c)
    }

    /// The value as a Gaussian rational, when no irrational term is present.
    pub fn to_gaussian(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&BigInt::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &GaussianRational)> {
        self.terms.iter()
    }

    fn accumulate(&mut self, radicand: BigInt, c: GaussianRational) {
        let slot = self.terms.entry(radicand.clone()).or_insert_with(GaussianRational::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&radicand);
        }
    }
}

impl Scalar for Surd {
    fn zero() -> Self {
        Surd::default()
    }
    fn one() -> Self {
        Surd::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn conj(&self) -> Self {
        Surd {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.conj())).collect(),
        }
    }
    fn from_gaussian(g: GaussianRational) -> Self {
        Surd::from_gaussian(g)
    }
}

impl Add for Surd {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (k, v) in o.terms {
            self.accumulate(k, v);
        }
        self
    }
}

impl Sub for Surd {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for Surd {
    type Output = Self;
    fn neg(self) -> Self {
        Surd {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl Mul for Surd {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Surd::default();
        for (f, a) in &self.terms {
            for (g, b) in &o.terms {
                // √f·√g = d·√(fg/d²) with d = gcd(f, g)
                let d = f.gcd(g);
                let radicand = (f / &d) * (g / &d);
                let c = (a * b).scale(&BigRational::from_integer(d));
                out.accumulate(radicand, c);
            }
        }
        out
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| if k.is_one() { v.to_string() } else { format!("({v})*sqrt({k})") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
