use core::fmt;
use core::ops::Add;

/// A natural number or ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinite => None,
        }
    }

    /// Subtracts one from a positive finite value; ∞ stays ∞.
    pub fn pred(self) -> ExtNat {
        match self {
            ExtNat::Finite(v) => ExtNat::Finite(v.saturating_sub(1)),
            ExtNat::Infinite => ExtNat::Infinite,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Finite(v)
    }
}

impl From<Option<u64>> for ExtNat {
    fn from(v: Option<u64>) -> Self {
        v.map_or(ExtNat::Infinite, ExtNat::Finite)
    }
}

impl Add<u64> for ExtNat {
    type Output = ExtNat;
    fn add(self, rhs: u64) -> ExtNat {
        match self {
            ExtNat::Finite(v) => ExtNat::Finite(v + rhs),
            ExtNat::Infinite => ExtNat::Infinite,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinite => f.write_str("inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_top() {
        assert!(ExtNat::Finite(u64::MAX) < ExtNat::Infinite);
        assert_eq!(ExtNat::Infinite + 1, ExtNat::Infinite);
        assert_eq!(ExtNat::Finite(3).pred(), ExtNat::Finite(2));
        assert_eq!(alloc::format!("{}", ExtNat::Infinite), "inf");
    }
}
