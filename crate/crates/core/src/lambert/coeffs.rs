use std::fmt;
use std::str::FromStr;

use crate::arith::ArithTable;
use crate::error::{Error, Result};

/// Named coefficient sequences aₙ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArithFn {
    One,
    Divisor,
    Mobius,
    Totient,
    Liouville,
    Mangoldt,
}

impl ArithFn {
    pub const ALL: [ArithFn; 6] = [
        ArithFn::One,
        ArithFn::Divisor,
        ArithFn::Mobius,
        ArithFn::Totient,
        ArithFn::Liouville,
        ArithFn::Mangoldt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ArithFn::One => "one",
            ArithFn::Divisor => "divisor",
            ArithFn::Mobius => "mobius",
            ArithFn::Totient => "phi",
            ArithFn::Liouville => "liouville",
            ArithFn::Mangoldt => "mangoldt",
        }
    }
}

impl fmt::Display for ArithFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ArithFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArithFn::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown coefficient sequence '{s}'")))
    }
}

/// Where aₙ comes from: the constant 1, or a sieve table.
#[derive(Clone, Copy, Debug)]
pub struct CoeffSource<'a> {
    func: ArithFn,
    table: Option<&'a ArithTable>,
}

impl<'a> CoeffSource<'a> {
    /// aₙ ≡ 1, needing no table.
    pub fn one() -> Self {
        Self {
            func: ArithFn::One,
            table: None,
        }
    }

    pub fn new(func: ArithFn, table: &'a ArithTable) -> Self {
        Self {
            func,
            table: Some(table),
        }
    }

    pub fn func(&self) -> ArithFn {
        self.func
    }

    pub fn is_one(&self) -> bool {
        self.func == ArithFn::One
    }

    /// Largest n for which aₙ is available.
    pub fn reach(&self) -> u64 {
        match (self.func, self.table) {
            (ArithFn::One, _) => u64::MAX,
            (_, Some(t)) => t.limit(),
            (_, None) => 0,
        }
    }

    pub fn get(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(Error::domain("coefficients are indexed from 1"));
        }
        if self.func == ArithFn::One {
            return Ok(1.0);
        }
        let t = self
            .table
            .ok_or_else(|| Error::usage(format!("{} needs a sieve table", self.func)))?;
        t.check_covers("coefficient index", n)?;
        Ok(match self.func {
            ArithFn::One => 1.0,
            ArithFn::Divisor => t.d(n) as f64,
            ArithFn::Mobius => t.mu(n) as f64,
            ArithFn::Totient => t.phi(n) as f64,
            ArithFn::Liouville => t.liouville(n) as f64,
            ArithFn::Mangoldt => t.von_mangoldt(n),
        })
    }

    /// a₁..a_N, as the power-series engine consumes them.
    pub fn first(&self, count: u64) -> Result<Vec<f64>> {
        if count > self.reach() {
            return Err(Error::OutOfRange {
                what: "coefficient count",
                requested: count,
                limit: self.reach(),
            });
        }
        (1..=count).map(|n| self.get(n)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in ArithFn::ALL {
            assert_eq!(f.name().parse::<ArithFn>().unwrap(), f);
        }
        assert!(matches!("zeta".parse::<ArithFn>(), Err(Error::Usage(_))));
    }

    #[test]
    fn table_bound_enforced() {
        let t = ArithTable::new(10).unwrap();
        let c = CoeffSource::new(ArithFn::Mobius, &t);
        assert_eq!(c.get(6).unwrap(), 1.0);
        assert!(matches!(c.get(11), Err(Error::OutOfRange { .. })));
        assert_eq!(CoeffSource::one().get(1 << 40).unwrap(), 1.0);
    }
}
