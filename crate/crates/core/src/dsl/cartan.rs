use std::fmt;
use std::str::FromStr;

/// Dynkin family letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(s: &str) -> Option<Self> {
        Some(match s {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            _ => return None,
        })
    }
}

/// A split simple type such as `A,2` or `G,2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: u32,
}

impl CartanType {
    pub const fn new(family: Family, rank: u32) -> Self {
        Self { family, rank }
    }

    /// Family constraints on the rank, or `None` when the type is well formed.
    /// `D,3` is accepted and kept literal; `E` is limited to rank 6 because
    /// larger exceptional Weyl groups are beyond the enumeration cap.
    pub fn constraint_violation(&self) -> Option<String> {
        let r = self.rank;
        let ok = match self.family {
            Family::A => r >= 1,
            Family::B | Family::C => r >= 2,
            Family::D => r >= 3,
            Family::E => r == 6,
            Family::F => r == 4,
            Family::G => r == 2,
        };
        if ok {
            None
        } else {
            let rule = match self.family {
                Family::A => "rank >= 1",
                Family::B | Family::C => "rank >= 2",
                Family::D => "rank >= 3",
                Family::E => "rank 6",
                Family::F => "rank 4",
                Family::G => "rank 2",
            };
            Some(format!(
                "Cartan type {self} is invalid: family {} needs {rule}",
                self.family.letter()
            ))
        }
    }

    /// Every type whose Weyl group fits under the enumeration cap.
    pub fn supported() -> Vec<CartanType> {
        let mut out = Vec::new();
        out.extend((1..=7).map(|n| CartanType::new(Family::A, n)));
        out.extend((2..=6).map(|n| CartanType::new(Family::B, n)));
        out.extend((2..=6).map(|n| CartanType::new(Family::C, n)));
        out.extend((3..=6).map(|n| CartanType::new(Family::D, n)));
        out.push(CartanType::new(Family::G, 2));
        out.push(CartanType::new(Family::F, 4));
        out.push(CartanType::new(Family::E, 6));
        out
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.family.letter(), self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed Cartan type {0:?}, expected e.g. \"A,2\"")]
pub struct CartanParseError(pub String);

impl FromStr for CartanType {
    type Err = CartanParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CartanParseError(s.to_string());
        let (fam, rank) = s.split_once(',').ok_or_else(bad)?;
        let family = Family::from_letter(fam.trim()).ok_or_else(bad)?;
        let rank = rank.trim().parse().map_err(|_| bad())?;
        Ok(CartanType::new(family, rank))
    }
}
