//! Rational intervals for eigenvalue counting, and a small text grammar
//! for them.
//!
//! Grammar: `("[" | "(") END "," END ("]" | ")")`, where `END` is `inf`,
//! `-inf`, or a linear expression in integers, fractions `a/b`, and the
//! variables `n`, `g`, `k` (order, girth, and the index of the bound being
//! checked), e.g. `[n-g-k+4,n]` or `(1/2,inf)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Bound;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("malformed interval {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error("interval has lower end above upper end")]
    Reversed,
    #[error("infinite endpoints must be open")]
    ClosedInfinity,
    #[error("variable `{0}` has no value for this graph")]
    Unbound(char),
}

/// Interval with rational or infinite ends. `None` means infinite on that
/// side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalSpec {
    pub lo: Option<BigRational>,
    pub hi: Option<BigRational>,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl IntervalSpec {
    pub fn new(
        lo: Option<BigRational>,
        hi: Option<BigRational>,
        lo_closed: bool,
        hi_closed: bool,
    ) -> Result<Self, IntervalError> {
        let spec = IntervalSpec {
            lo,
            hi,
            lo_closed,
            hi_closed,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), IntervalError> {
        if (self.lo.is_none() && self.lo_closed) || (self.hi.is_none() && self.hi_closed) {
            return Err(IntervalError::ClosedInfinity);
        }
        if let (Some(a), Some(b)) = (&self.lo, &self.hi) {
            if a > b || (a == b && !(self.lo_closed && self.hi_closed)) {
                return Err(IntervalError::Reversed);
            }
        }
        Ok(())
    }

    /// `[a, b]` with integer ends.
    pub fn closed(a: i64, b: i64) -> Self {
        IntervalSpec {
            lo: Some(int(a)),
            hi: Some(int(b)),
            lo_closed: true,
            hi_closed: true,
        }
    }

    /// `[c, c]`, for multiplicities.
    pub fn point(c: BigRational) -> Self {
        IntervalSpec {
            lo: Some(c.clone()),
            hi: Some(c),
            lo_closed: true,
            hi_closed: true,
        }
    }

    /// `[c, ∞)`.
    pub fn at_least(c: BigRational) -> Self {
        IntervalSpec {
            lo: Some(c),
            hi: None,
            lo_closed: true,
            hi_closed: false,
        }
    }

    /// `(c, ∞)`.
    pub fn above(c: BigRational) -> Self {
        IntervalSpec {
            lo: Some(c),
            hi: None,
            lo_closed: false,
            hi_closed: false,
        }
    }

    /// `[a, b)` with integer ends.
    pub fn half_open(a: i64, b: i64) -> Self {
        IntervalSpec {
            lo: Some(int(a)),
            hi: Some(int(b)),
            lo_closed: true,
            hi_closed: false,
        }
    }

    pub(crate) fn bounds(&self) -> (Bound, Bound) {
        let lo = match (&self.lo, self.lo_closed) {
            (None, _) => Bound::Unbounded,
            (Some(x), true) => Bound::Closed(x.clone()),
            (Some(x), false) => Bound::Open(x.clone()),
        };
        let hi = match (&self.hi, self.hi_closed) {
            (None, _) => Bound::Unbounded,
            (Some(x), true) => Bound::Closed(x.clone()),
            (Some(x), false) => Bound::Open(x.clone()),
        };
        (lo, hi)
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        let lo_ok = match &self.lo {
            None => true,
            Some(a) => {
                let a = rational_to_f64(a);
                if self.lo_closed {
                    x >= a
                } else {
                    x > a
                }
            }
        };
        let hi_ok = match &self.hi {
            None => true,
            Some(b) => {
                let b = rational_to_f64(b);
                if self.hi_closed {
                    x <= b
                } else {
                    x < b
                }
            }
        };
        lo_ok && hi_ok
    }

    /// Parse a literal interval (no variables).
    pub fn parse(text: &str) -> Result<Self, IntervalError> {
        IntervalTemplate::parse(text)?.resolve(&Bindings::default())
    }
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    let n: f64 = x.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = x.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

fn fmt_rational(x: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if x.is_integer() {
        write!(f, "{}", x.numer())
    } else {
        write!(f, "{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for IntervalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.lo_closed { '[' } else { '(' })?;
        match &self.lo {
            None => write!(f, "-inf")?,
            Some(x) => fmt_rational(x, f)?,
        }
        write!(f, ",")?;
        match &self.hi {
            None => write!(f, "inf")?,
            Some(x) => fmt_rational(x, f)?,
        }
        write!(f, "{}", if self.hi_closed { ']' } else { ')' })
    }
}

/// Values for the variables an interval template may mention.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bindings {
    pub n: Option<i64>,
    pub g: Option<i64>,
    pub k: Option<i64>,
}

/// `Σ coeff · var + constant`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearExpr {
    terms: Vec<(BigRational, Option<char>)>,
}

impl LinearExpr {
    fn eval(&self, b: &Bindings) -> Result<BigRational, IntervalError> {
        let mut acc = BigRational::zero();
        for (c, var) in &self.terms {
            let v = match var {
                None => BigRational::one(),
                Some('n') => int(b.n.ok_or(IntervalError::Unbound('n'))?),
                Some('g') => int(b.g.ok_or(IntervalError::Unbound('g'))?),
                Some('k') => int(b.k.ok_or(IntervalError::Unbound('k'))?),
                Some(other) => return Err(IntervalError::Unbound(*other)),
            };
            acc += c * v;
        }
        Ok(acc)
    }

    fn parse(s: &str, full: &str) -> Result<Self, IntervalError> {
        let err = |reason: &str| IntervalError::Syntax {
            text: full.to_string(),
            reason: reason.to_string(),
        };
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(err("empty endpoint"));
        }
        let mut i = 0;
        let mut terms = Vec::new();
        while i < chars.len() {
            let mut sign = BigRational::one();
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if !terms.is_empty() {
                return Err(err("expected '+' or '-' between terms"));
            }
            let read_int = |i: &mut usize| -> Option<BigInt> {
                let start = *i;
                while *i < chars.len() && chars[*i].is_ascii_digit() {
                    *i += 1;
                }
                (start < *i).then(|| chars[start..*i].iter().collect::<String>().parse().unwrap())
            };
            let mut coeff = match read_int(&mut i) {
                Some(num) => {
                    if i < chars.len() && chars[i] == '/' {
                        i += 1;
                        let den = read_int(&mut i).ok_or_else(|| err("missing denominator"))?;
                        if den.is_zero() {
                            return Err(err("zero denominator"));
                        }
                        Some(BigRational::new(num, den))
                    } else {
                        Some(BigRational::from_integer(num))
                    }
                }
                None => None,
            };
            if i < chars.len() && chars[i] == '*' {
                if coeff.is_none() {
                    return Err(err("'*' without a coefficient"));
                }
                i += 1;
            }
            let var = if i < chars.len() && chars[i].is_ascii_alphabetic() {
                let v = chars[i];
                if !matches!(v, 'n' | 'g' | 'k') {
                    return Err(err("unknown variable (expected n, g or k)"));
                }
                i += 1;
                Some(v)
            } else {
                None
            };
            if coeff.is_none() && var.is_none() {
                return Err(err("expected a number or variable"));
            }
            let c = coeff.take().unwrap_or_else(BigRational::one);
            terms.push((sign * c, var));
        }
        Ok(LinearExpr { terms })
    }
}

impl fmt::Display for LinearExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, var)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mag = c.abs();
            match var {
                Some(v) if mag.is_one() => write!(f, "{v}")?,
                Some(v) => {
                    fmt_rational(&mag, f)?;
                    write!(f, "*{v}")?
                }
                None => fmt_rational(&mag, f)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndExpr {
    Infinite,
    Finite(LinearExpr),
}

/// An interval whose ends may reference `n`, `g`, `k`; resolved per graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalTemplate {
    pub lo: EndExpr,
    pub hi: EndExpr,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl IntervalTemplate {
    pub fn parse(text: &str) -> Result<Self, IntervalError> {
        let err = |reason: &str| IntervalError::Syntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let lo_closed = match t.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(err("must start with '[' or '('")),
        };
        let hi_closed = match t.chars().last() {
            Some(']') if t.len() > 1 => true,
            Some(')') if t.len() > 1 => false,
            _ => return Err(err("must end with ']' or ')'")),
        };
        let inner = &t[1..t.len() - 1];
        let mut parts = inner.split(',');
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err("expected exactly one ','"));
        };
        let end = |s: &str, lower: bool| -> Result<EndExpr, IntervalError> {
            let s = s.trim();
            let inf = if lower {
                matches!(s, "-inf" | "-oo")
            } else {
                matches!(s, "inf" | "+inf" | "oo" | "+oo")
            };
            if inf {
                Ok(EndExpr::Infinite)
            } else {
                LinearExpr::parse(s, text).map(EndExpr::Finite)
            }
        };
        let tpl = IntervalTemplate {
            lo: end(a, true)?,
            hi: end(b, false)?,
            lo_closed,
            hi_closed,
        };
        if (tpl.lo == EndExpr::Infinite && lo_closed) || (tpl.hi == EndExpr::Infinite && hi_closed)
        {
            return Err(IntervalError::ClosedInfinity);
        }
        Ok(tpl)
    }

    pub fn resolve(&self, b: &Bindings) -> Result<IntervalSpec, IntervalError> {
        let side = |e: &EndExpr| -> Result<Option<BigRational>, IntervalError> {
            match e {
                EndExpr::Infinite => Ok(None),
                EndExpr::Finite(x) => x.eval(b).map(Some),
            }
        };
        IntervalSpec::new(
            side(&self.lo)?,
            side(&self.hi)?,
            self.lo_closed,
            self.hi_closed,
        )
    }

    /// Whether any end mentions `var`.
    pub fn mentions(&self, var: char) -> bool {
        [&self.lo, &self.hi].iter().any(|e| match e {
            EndExpr::Finite(x) => x.terms.iter().any(|(_, v)| *v == Some(var)),
            EndExpr::Infinite => false,
        })
    }
}

impl fmt::Display for IntervalTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.lo_closed { '[' } else { '(' })?;
        match &self.lo {
            EndExpr::Infinite => write!(f, "-inf")?,
            EndExpr::Finite(x) => write!(f, "{x}")?,
        }
        write!(f, ",")?;
        match &self.hi {
            EndExpr::Infinite => write!(f, "inf")?,
            EndExpr::Finite(x) => write!(f, "{x}")?,
        }
        write!(f, "{}", if self.hi_closed { ']' } else { ')' })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn literal_intervals() {
        let i = IntervalSpec::parse("[4,5]").unwrap();
        assert_eq!(i, IntervalSpec::closed(4, 5));
        assert_eq!(i.to_string(), "[4,5]");
        let j = IntervalSpec::parse("( 1/2 , inf )").unwrap();
        assert_eq!(j, IntervalSpec::above(BigRational::new(1.into(), 2.into())));
        assert_eq!(j.to_string(), "(1/2,inf)");
    }

    #[test]
    fn relative_expressions() {
        let t = IntervalTemplate::parse("[n-g-k+4,n]").unwrap();
        assert!(t.mentions('g') && t.mentions('k'));
        let b = Bindings {
            n: Some(9),
            g: Some(7),
            k: Some(2),
        };
        assert_eq!(t.resolve(&b).unwrap(), IntervalSpec::closed(4, 9));
        assert_eq!(
            t.resolve(&Bindings {
                n: Some(9),
                ..Default::default()
            }),
            Err(IntervalError::Unbound('g'))
        );
        let t2 = IntervalTemplate::parse("[2n-3/2, 2*n]").unwrap();
        let r = t2
            .resolve(&Bindings {
                n: Some(3),
                ..Default::default()
            })
            .unwrap();
        assert_eq!(r.lo, Some(BigRational::new(9.into(), 2.into())));
        assert_eq!(r.hi, Some(int(6)));
    }

    #[test]
    fn malformed() {
        for bad in [
            "", "[4,5", "4,5]", "[4;5]", "[4,5,6]", "[x,5]", "[4,]", "[1/0,2]",
        ] {
            assert!(
                matches!(IntervalSpec::parse(bad), Err(IntervalError::Syntax { .. })),
                "{bad:?}"
            );
        }
        assert_eq!(IntervalSpec::parse("[5,4]"), Err(IntervalError::Reversed));
        assert_eq!(IntervalSpec::parse("(4,4]"), Err(IntervalError::Reversed));
        assert_eq!(
            IntervalSpec::parse("[-inf,4]"),
            Err(IntervalError::ClosedInfinity)
        );
        assert!(IntervalSpec::parse("[4,4]").is_ok());
    }

    #[test]
    fn float_membership() {
        let i = IntervalSpec::half_open(2, 3);
        assert!(i.contains_f64(2.0) && i.contains_f64(2.99) && !i.contains_f64(3.0));
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(
            a in -50i64..50, da in 1i64..7, w in 0i64..40, db in 1i64..7,
            lo_closed: bool, hi_closed: bool, lo_inf: bool, hi_inf: bool,
        ) {
            let lo = BigRational::new(a.into(), da.into());
            let hi = &lo + BigRational::new(w.into(), db.into());
            let spec = IntervalSpec {
                lo: (!lo_inf).then_some(lo.clone()),
                hi: (!hi_inf).then_some(hi.clone()),
                lo_closed: lo_closed && !lo_inf,
                hi_closed: hi_closed && !hi_inf,
            };
            prop_assume!(spec.validate().is_ok());
            prop_assert_eq!(IntervalSpec::parse(&spec.to_string()).unwrap(), spec);
        }

        #[test]
        fn template_round_trip(c1 in -9i64..9, c2 in 0i64..9, use_g: bool) {
            let text = format!("[n{}{}{},n+{}]", if use_g { "-g" } else { "" }, if c1 < 0 { "-" } else { "+" }, c1.abs(), c2);
            let t = IntervalTemplate::parse(&text).unwrap();
            prop_assert_eq!(IntervalTemplate::parse(&t.to_string()).unwrap(), t);
        }
    }
}
