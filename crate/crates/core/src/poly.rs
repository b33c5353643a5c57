//! Dense univariate polynomials over the integers and exact real-root
//! counting.
//!
//! Root counting never touches floating point: the polynomial is split into
//! square-free layers `p_j / gcd(p_j, p_j')` of the gcd tower
//! `p_{j+1} = gcd(p_j, p_j')`, each layer gets a Sturm chain built from
//! sign-preserving pseudo-remainders, and chains are evaluated at rational
//! endpoints by homogenized integer evaluation. A root of multiplicity `m`
//! lies in exactly the first `m` layers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Polynomial with big-integer coefficients, stored in ascending degree with
/// no trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `x - r`.
    pub fn linear(r: impl Into<BigInt>) -> Self {
        Self::new(vec![-r.into(), BigInt::one()])
    }

    /// `∏ (x - r)` over the given integer roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, &r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of the value at a rational point, computed exactly as
    /// `Σ c_i a^i b^(d-i)` for `x = a/b` with `b > 0`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        let a = x.numer();
        let b = x.denom();
        let mut acc = BigInt::zero();
        let mut apow = BigInt::one();
        let mut bpows = Vec::with_capacity(d + 1);
        let mut bp = BigInt::one();
        for _ in 0..=d {
            bpows.push(bp.clone());
            bp *= b;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &apow * &bpows[d - i];
            apow *= a;
        }
        acc.cmp(&BigInt::zero())
    }

    /// Sign as `x → +∞` (`towards_positive`) or `x → -∞`.
    pub fn sign_at_infinity(&self, towards_positive: bool) -> Ordering {
        match (self.leading(), self.degree()) {
            (Some(lc), Some(d)) => {
                let s = lc.cmp(&BigInt::zero());
                if towards_positive || d % 2 == 0 {
                    s
                } else {
                    s.reverse()
                }
            }
            _ => Ordering::Equal,
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntegerPolynomial { coeffs }
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Remainder of `m · self` on division by `divisor` for some positive
    /// integer `m`, so that its sign pattern matches the true remainder.
    pub fn signed_pseudo_rem(&self, divisor: &Self) -> Self {
        let db = divisor.degree().expect("division by the zero polynomial");
        let lb = divisor.leading().unwrap();
        let lb_abs = lb.abs();
        let lb_sign = BigInt::from(if lb.is_negative() { -1 } else { 1 });
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let t = divisor.shift(dr - db).scale(&(&lb_sign * lr));
            r = &r.scale(&lb_abs) - &t;
        }
        r
    }

    /// Exact quotient in `Z[x]`; `None` when `divisor` does not divide `self`
    /// with an integer quotient.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let db = divisor.degree()?;
        let lb = divisor.leading().unwrap();
        let Some(dr) = self.degree() else {
            return Some(Self::zero());
        };
        if dr < db {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dr - db + 1];
        for k in (0..=dr - db).rev() {
            let top = &rem[k + db];
            let (q, r) = top.div_rem(lb);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Greatest common divisor up to sign and content, via the primitive
    /// polynomial remainder sequence. Returned primitive with positive
    /// leading coefficient; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// `p(c - x)`, used for the complement reflection `μ ↦ n - μ`.
    pub fn reflect(&self, c: i64) -> Self {
        let base = Self::from_i64(&[c, -1]);
        let mut acc = Self::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &base) + &Self::constant(coeff.clone());
        }
        acc
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntegerPolynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerPolynomial({self})")
    }
}

/// Serialized as the ascending coefficient list. Coefficients that fit in
/// an `i64` are JSON numbers, larger ones decimal strings.
impl Serialize for IntegerPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match i64::try_from(c) {
                Ok(v) => seq.serialize_element(&v)?,
                Err(_) => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// A point of the extended real line where a Sturm chain is evaluated.
#[derive(Debug, Clone)]
pub(crate) enum Point<'a> {
    NegInf,
    PosInf,
    At(&'a BigRational),
}

fn sign_variations(chain: &[IntegerPolynomial], at: &Point<'_>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in chain {
        let s = match at {
            Point::NegInf => p.sign_at_infinity(false),
            Point::PosInf => p.sign_at_infinity(true),
            Point::At(x) => p.sign_at(x),
        };
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sturm chain of a square-free polynomial.
#[derive(Debug, Clone)]
struct SturmChain {
    chain: Vec<IntegerPolynomial>,
}

impl SturmChain {
    fn new(p: &IntegerPolynomial) -> Self {
        let mut chain = vec![p.primitive_part()];
        let d = p.derivative().primitive_part();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let r = chain[n - 2].signed_pseudo_rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                let next = -&r;
                // divide by the positive content only, preserving sign
                let c = next.content();
                chain.push(IntegerPolynomial::new(
                    next.coeffs.iter().map(|x| x / &c).collect(),
                ));
            }
        }
        SturmChain { chain }
    }

    fn poly(&self) -> &IntegerPolynomial {
        &self.chain[0]
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    fn count_half_open(&self, lo: &Point<'_>, hi: &Point<'_>) -> usize {
        sign_variations(&self.chain, lo).saturating_sub(sign_variations(&self.chain, hi))
    }
}

/// One end of a real interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Unbounded,
    Closed(BigRational),
    Open(BigRational),
}

/// Exact root counter for one polynomial with only real roots; reusable
/// across many interval queries.
#[derive(Debug, Clone)]
pub struct RootCounter {
    degree: usize,
    layers: Vec<SturmChain>,
}

impl RootCounter {
    pub fn new(p: &IntegerPolynomial) -> Self {
        let mut layers = Vec::new();
        let mut cur = p.primitive_part();
        while cur.degree().is_some_and(|d| d > 0) {
            let next = cur.gcd(&cur.derivative());
            let square_free = cur
                .exact_div(&next)
                .expect("gcd divides its argument over the integers");
            layers.push(SturmChain::new(&square_free));
            cur = next;
        }
        RootCounter {
            degree: p.degree().unwrap_or(0),
            layers,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of roots, with multiplicity, between `lo` and `hi`. The caller
    /// guarantees `lo <= hi`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let lo_pt = match lo {
            Bound::Unbounded => Point::NegInf,
            Bound::Closed(x) | Bound::Open(x) => Point::At(x),
        };
        let hi_pt = match hi {
            Bound::Unbounded => Point::PosInf,
            Bound::Closed(x) | Bound::Open(x) => Point::At(x),
        };
        let mut total = 0;
        for layer in &self.layers {
            let mut c = layer.count_half_open(&lo_pt, &hi_pt) as isize;
            if let Bound::Closed(x) = lo {
                if layer.poly().sign_at(x) == Ordering::Equal {
                    c += 1;
                }
            }
            if let Bound::Open(x) = hi {
                if layer.poly().sign_at(x) == Ordering::Equal {
                    c -= 1;
                }
            }
            total += c.max(0) as usize;
        }
        total
    }

    /// Multiplicity of `x` as a root.
    pub fn multiplicity(&self, x: &BigRational) -> usize {
        self.layers
            .iter()
            .take_while(|l| l.poly().sign_at(x) == Ordering::Equal)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn closed(a: i64, b: i64) -> (Bound, Bound) {
        (Bound::Closed(q(a)), Bound::Closed(q(b)))
    }

    #[test]
    fn display() {
        let p = IntegerPolynomial::from_i64(&[0, -16, 20, -8, 1]);
        assert_eq!(p.to_string(), "x^4 - 8x^3 + 20x^2 - 16x");
        assert_eq!(IntegerPolynomial::from_i64(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn from_roots_c4() {
        let p = IntegerPolynomial::from_roots(&[4, 2, 2, 0]);
        assert_eq!(p, IntegerPolynomial::from_i64(&[0, -16, 20, -8, 1]));
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = IntegerPolynomial::from_roots(&[1, 2, 2, 5]);
        let b = IntegerPolynomial::from_roots(&[2, 5, 7]);
        assert_eq!(a.gcd(&b), IntegerPolynomial::from_roots(&[2, 5]));
        assert_eq!(
            a.exact_div(&IntegerPolynomial::from_roots(&[2, 2])),
            Some(IntegerPolynomial::from_roots(&[1, 5]))
        );
        assert_eq!(a.exact_div(&IntegerPolynomial::from_roots(&[3])), None);
        // non-monic: (2x - 1)(x + 3) / (2x - 1)
        let f = IntegerPolynomial::from_i64(&[-3, 5, 2]);
        let g = IntegerPolynomial::from_i64(&[-1, 2]);
        assert_eq!(f.exact_div(&g), Some(IntegerPolynomial::from_i64(&[3, 1])));
    }

    #[test]
    fn sign_at_rationals() {
        // x^2 - 2 changes sign between 7/5 and 3/2
        let p = IntegerPolynomial::from_i64(&[-2, 0, 1]);
        let a = BigRational::new(7.into(), 5.into());
        let b = BigRational::new(3.into(), 2.into());
        assert_eq!(p.sign_at(&a), Ordering::Less);
        assert_eq!(p.sign_at(&b), Ordering::Greater);
        assert_eq!(p.sign_at(&-b), Ordering::Greater);
    }

    #[test]
    fn counts_with_multiplicity() {
        // x (x-5)(x-3)(x-2)^2
        let p = IntegerPolynomial::from_roots(&[0, 5, 3, 2, 2]);
        let rc = RootCounter::new(&p);
        let (lo, hi) = closed(4, 5);
        assert_eq!(rc.count(&lo, &hi), 1);
        let (lo, hi) = closed(0, 5);
        assert_eq!(rc.count(&lo, &hi), 5);
        assert_eq!(rc.count(&Bound::Open(q(2)), &Bound::Open(q(5))), 1);
        assert_eq!(rc.count(&Bound::Closed(q(2)), &Bound::Open(q(3))), 2);
        assert_eq!(rc.count(&Bound::Unbounded, &Bound::Unbounded), 5);
        assert_eq!(rc.multiplicity(&q(2)), 2);
        assert_eq!(rc.multiplicity(&q(4)), 0);
        let (lo, hi) = closed(2, 2);
        assert_eq!(rc.count(&lo, &hi), 2);
    }

    #[test]
    fn irrational_roots() {
        // (x^2 - 2)^2 (x^2 - 3): roots ±√2 (double), ±√3
        let a = IntegerPolynomial::from_i64(&[-2, 0, 1]);
        let b = IntegerPolynomial::from_i64(&[-3, 0, 1]);
        let p = &(&a * &a) * &b;
        let rc = RootCounter::new(&p);
        let (lo, hi) = closed(1, 2);
        assert_eq!(rc.count(&lo, &hi), 3);
        assert_eq!(rc.count(&Bound::Unbounded, &Bound::Open(q(0))), 3);
        assert_eq!(
            rc.count(&Bound::Closed(q(-2)), &Bound::Closed(q(-3) / q(2))),
            1
        );
    }

    #[test]
    fn reflect_maps_roots() {
        let p = IntegerPolynomial::from_roots(&[0, 1, 4]);
        // p(5 - x) = -(x-5)(x-4)(x-1)
        let r = p.reflect(5);
        assert_eq!(r, -&IntegerPolynomial::from_roots(&[5, 4, 1]));
    }

    proptest! {
        #[test]
        fn counts_match_known_integer_roots(
            roots in prop::collection::vec(-6i64..7, 1..8),
            lo in -7i64..8,
            width in 0i64..8,
            lo_closed: bool,
            hi_closed: bool,
        ) {
            let hi = lo + width;
            let p = IntegerPolynomial::from_roots(&roots);
            let rc = RootCounter::new(&p);
            let lb = if lo_closed { Bound::Closed(q(lo)) } else { Bound::Open(q(lo)) };
            let hb = if hi_closed { Bound::Closed(q(hi)) } else { Bound::Open(q(hi)) };
            let expect = roots.iter().filter(|&&r| {
                (if lo_closed { r >= lo } else { r > lo }) && (if hi_closed { r <= hi } else { r < hi })
            }).count();
            prop_assert_eq!(rc.count(&lb, &hb), expect);
        }

        #[test]
        fn product_then_divide(
            a in prop::collection::vec(-5i64..6, 1..5),
            b in prop::collection::vec(-5i64..6, 1..5),
        ) {
            let pa = IntegerPolynomial::from_roots(&a);
            let pb = IntegerPolynomial::from_roots(&b);
            let prod = &pa * &pb;
            prop_assert_eq!(prod.exact_div(&pb), Some(pa.clone()));
            let g = pa.gcd(&pb);
            prop_assert!(pa.exact_div(&g).is_some());
            prop_assert!(pb.exact_div(&g).is_some());
        }
    }
}
