use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Variable families, declared in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    T,
    Y,
    Z,
    Gamma,
    Beta,
}

impl Family {
    fn prefix(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::T => "t",
            Family::Y => "y",
            Family::Z => "z",
            Family::Gamma => "gamma",
            Family::Beta => "beta",
        }
    }

    fn indexed(self) -> bool {
        !matches!(self, Family::Gamma | Family::Beta)
    }
}

/// A named indeterminate. Ordering is family first, then index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub const fn new(family: Family, index: u32) -> Var {
        Var { family, index }
    }
    pub const fn x(i: u32) -> Var {
        Var::new(Family::X, i)
    }
    pub const fn t(i: u32) -> Var {
        Var::new(Family::T, i)
    }
    pub const fn y(i: u32) -> Var {
        Var::new(Family::Y, i)
    }
    pub const fn z(i: u32) -> Var {
        Var::new(Family::Z, i)
    }
    pub const fn gamma() -> Var {
        Var::new(Family::Gamma, 1)
    }
    pub const fn beta() -> Var {
        Var::new(Family::Beta, 1)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.indexed() {
            write!(f, "{}{}", self.family.prefix(), self.index)
        } else {
            f.write_str(self.family.prefix())
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var, Error> {
        match s {
            "gamma" => return Ok(Var::gamma()),
            "beta" => return Ok(Var::beta()),
            _ => {}
        }
        let bad = || Error::Parse(format!("bad variable name {s:?}"));
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('x') => Family::X,
            Some('t') => Family::T,
            Some('y') => Family::Y,
            Some('z') => Family::Z,
            _ => return Err(bad()),
        };
        let index: u32 = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Var::new(family, index))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_family_then_index() {
        let mut v = [Var::beta(), Var::t(1), Var::x(2), Var::gamma(), Var::x(1), Var::z(3), Var::y(1)];
        v.sort();
        let names: Vec<String> = v.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["x1", "x2", "t1", "y1", "z3", "gamma", "beta"]);
    }

    #[test]
    fn parse_round_trip() {
        for name in ["x1", "t12", "y3", "z2", "gamma", "beta"] {
            assert_eq!(name.parse::<Var>().unwrap().to_string(), name);
        }
        assert!("x0".parse::<Var>().is_err());
        assert!("q1".parse::<Var>().is_err());
    }
}
