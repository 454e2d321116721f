use std::fmt;

use crate::error::{Error, Result};
use crate::traits::{Enumerable, Heap, Truss};

/// Symbolic trusses with integer-coded elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BuiltinTruss {
    /// `T(ℤ/n)`, elements `0..n`.
    TZn(u32),
    /// `T(ℤ)`.
    TZ,
    /// `ℤ^c`: the heap of `ℤ` with constant multiplication `i_m i_n = i_c`.
    ConstZ(i64),
    /// `T(C₂)` for the brace on `C₂ = {a, b}` (coded 0, 1) with `x·y = x + y`.
    C2Brace,
    /// The one-point truss `⋆`.
    Star,
}

impl BuiltinTruss {
    /// Parses `TZ4`, `TZ`, `Zc3`, `Zc-1`, `C2`, `Star`.
    pub fn parse(spec: &str) -> Result<Self> {
        let s = spec.trim();
        let bad = || Error::Parse(format!("unknown built-in truss `{spec}`"));
        match s {
            "TZ" => Ok(BuiltinTruss::TZ),
            "C2" | "C2brace" | "C2-brace" => Ok(BuiltinTruss::C2Brace),
            "Star" | "star" | "*" => Ok(BuiltinTruss::Star),
            "Zc" => Ok(BuiltinTruss::ConstZ(0)),
            _ => {
                if let Some(n) = s.strip_prefix("TZ") {
                    let n: u32 = n.parse().map_err(|_| bad())?;
                    if n == 0 {
                        return Err(bad());
                    }
                    Ok(BuiltinTruss::TZn(n))
                } else if let Some(c) = s.strip_prefix("Zc") {
                    Ok(BuiltinTruss::ConstZ(c.parse().map_err(|_| bad())?))
                } else {
                    Err(bad())
                }
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, BuiltinTruss::TZ | BuiltinTruss::ConstZ(_))
    }

    pub fn elements(&self) -> Option<Vec<i64>> {
        match *self {
            BuiltinTruss::TZn(n) => Some((0..i64::from(n)).collect()),
            BuiltinTruss::C2Brace => Some(vec![0, 1]),
            BuiltinTruss::Star => Some(vec![0]),
            _ => None,
        }
    }
}

impl fmt::Display for BuiltinTruss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuiltinTruss::TZn(n) => write!(f, "TZ{n}"),
            BuiltinTruss::TZ => write!(f, "TZ"),
            BuiltinTruss::ConstZ(c) => write!(f, "Zc{c}"),
            BuiltinTruss::C2Brace => write!(f, "C2"),
            BuiltinTruss::Star => write!(f, "Star"),
        }
    }
}

impl Heap for BuiltinTruss {
    type Elem = i64;

    fn bracket(&self, a: &i64, b: &i64, c: &i64) -> i64 {
        match *self {
            BuiltinTruss::TZn(n) => (a - b + c).rem_euclid(i64::from(n)),
            BuiltinTruss::TZ | BuiltinTruss::ConstZ(_) => a - b + c,
            BuiltinTruss::C2Brace => a ^ b ^ c,
            BuiltinTruss::Star => 0,
        }
    }

    fn contains(&self, x: &i64) -> bool {
        match *self {
            BuiltinTruss::TZn(n) => (0..i64::from(n)).contains(x),
            BuiltinTruss::TZ | BuiltinTruss::ConstZ(_) => true,
            BuiltinTruss::C2Brace => *x == 0 || *x == 1,
            BuiltinTruss::Star => *x == 0,
        }
    }

    fn is_abelian(&self) -> bool {
        true
    }
}

impl Enumerable for BuiltinTruss {
    fn window(&self, radius: u32) -> Vec<i64> {
        let r = i64::from(radius);
        match *self {
            BuiltinTruss::TZ => (-r..=r).collect(),
            BuiltinTruss::ConstZ(c) => (c - r..=c + r).collect(),
            _ => self.elements().expect("finite variant"),
        }
    }

    fn is_finite(&self) -> bool {
        BuiltinTruss::is_finite(self)
    }
}

impl Truss for BuiltinTruss {
    fn mul(&self, a: &i64, b: &i64) -> i64 {
        match *self {
            BuiltinTruss::TZn(n) => (a * b).rem_euclid(i64::from(n)),
            BuiltinTruss::TZ => a * b,
            BuiltinTruss::ConstZ(c) => c,
            BuiltinTruss::C2Brace => a ^ b,
            BuiltinTruss::Star => 0,
        }
    }

    fn identity(&self) -> Option<i64> {
        match *self {
            BuiltinTruss::TZn(n) => Some(i64::from(n > 1)),
            BuiltinTruss::TZ => Some(1),
            BuiltinTruss::ConstZ(_) => None,
            BuiltinTruss::C2Brace | BuiltinTruss::Star => Some(0),
        }
    }

    fn absorber(&self) -> Option<i64> {
        match *self {
            BuiltinTruss::TZn(_) | BuiltinTruss::TZ | BuiltinTruss::Star => Some(0),
            BuiltinTruss::ConstZ(c) => Some(c),
            BuiltinTruss::C2Brace => None,
        }
    }

    fn render(&self, x: &i64) -> String {
        match self {
            BuiltinTruss::C2Brace => if *x == 0 { "a" } else { "b" }.to_string(),
            BuiltinTruss::Star => "*".to_string(),
            _ => format!("i{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for t in [
            BuiltinTruss::TZn(4),
            BuiltinTruss::TZ,
            BuiltinTruss::ConstZ(-3),
            BuiltinTruss::C2Brace,
            BuiltinTruss::Star,
        ] {
            assert_eq!(BuiltinTruss::parse(&t.to_string()).unwrap(), t);
        }
        assert!(BuiltinTruss::parse("TZ0").is_err());
        assert!(BuiltinTruss::parse("Q8").is_err());
    }

    #[test]
    fn declared_elements() {
        assert_eq!(BuiltinTruss::TZn(4).identity(), Some(1));
        assert_eq!(BuiltinTruss::ConstZ(0).absorber(), Some(0));
        assert_eq!(BuiltinTruss::ConstZ(0).identity(), None);
        assert_eq!(BuiltinTruss::C2Brace.mul(&1, &1), 0);
    }
}
