use std::fmt;
use std::str::FromStr;

use exactmath::Rational;
use num_traits::Zero;

use crate::error::RootError;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
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

    fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple Lie algebra type `X_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(RootError::InvalidType { family: family.letter(), rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => [78, 133, 248][n - 6],
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Closed-form dual Coxeter number.
    pub fn dual_coxeter_formula(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1,
            Family::B => 2 * n - 1,
            Family::C => n + 1,
            Family::D => 2 * n - 2,
            Family::E => [12, 18, 30][n - 6],
            Family::F => 9,
            Family::G => 4,
        }
    }

    pub fn root_count(&self) -> usize {
        self.dim() - self.rank
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = chars.next().and_then(Family::from_letter).ok_or_else(|| RootError::Parse(s.into()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| RootError::Parse(s.into()))?;
        SimpleType::new(fam, rank)
    }
}

impl PartialOrd for SimpleType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SimpleType {
    /// Larger algebras first, then by family letter and rank.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .dim()
            .cmp(&self.dim())
            .then(self.family.cmp(&other.family))
            .then(self.rank.cmp(&other.rank))
    }
}

/// A reductive Lie algebra: simple ideals with levels plus `U(1)^r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SemisimpleTypeWithLevels {
    ideals: Vec<(SimpleType, Rational)>,
    abelian_rank: usize,
}

impl SemisimpleTypeWithLevels {
    pub fn new(mut ideals: Vec<(SimpleType, Rational)>, abelian_rank: usize) -> Self {
        ideals.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        Self { ideals, abelian_rank }
    }

    pub fn abelian(rank: usize) -> Self {
        Self::new(Vec::new(), rank)
    }

    pub fn ideals(&self) -> &[(SimpleType, Rational)] {
        &self.ideals
    }

    pub fn abelian_rank(&self) -> usize {
        self.abelian_rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.ideals.iter().map(|(t, _)| t.rank()).sum()
    }

    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.abelian_rank
    }

    pub fn dim(&self) -> usize {
        self.ideals.iter().map(|(t, _)| t.dim()).sum::<usize>() + self.abelian_rank
    }

    /// Multiset union.
    pub fn join(&self, other: &Self) -> Self {
        let mut ideals = self.ideals.clone();
        ideals.extend(other.ideals.iter().cloned());
        Self::new(ideals, self.abelian_rank + other.abelian_rank)
    }

    /// Every level multiplied by `k`.
    pub fn scale_levels(&self, k: &Rational) -> Self {
        Self::new(self.ideals.iter().map(|(t, l)| (*t, l * k)).collect(), self.abelian_rank)
    }

    pub fn is_zero(&self) -> bool {
        self.ideals.is_empty() && self.abelian_rank == 0
    }
}

impl fmt::Display for SemisimpleTypeWithLevels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.ideals.iter().map(|(t, l)| format!("{t},{l}")).collect();
        match self.abelian_rank {
            0 => {}
            1 => parts.push("U(1)".into()),
            r => parts.push(format!("U(1)^{r}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Parses a type string keeping the ideals in the order written.
///
/// Grammar: whitespace-separated `X<rank>,<level>[^m]` and `U(1)[^r]` tokens.
pub fn parse_ideal_list(s: &str) -> Result<(Vec<(SimpleType, Rational)>, usize), RootError> {
    let err = || RootError::Parse(s.into());
    let mut ideals = Vec::new();
    let mut abelian = 0;
    for tok in s.split_whitespace() {
        let (body, mult) = match tok.rsplit_once('^') {
            Some((b, m)) => (b, m.parse::<usize>().map_err(|_| err())?),
            None => (tok, 1),
        };
        if body == "U(1)" {
            abelian += mult;
            continue;
        }
        let (ty, level) = body.split_once(',').ok_or_else(err)?;
        let ty: SimpleType = ty.parse()?;
        let level: Rational = level.parse().map_err(|_| err())?;
        if level <= Rational::zero() {
            return Err(err());
        }
        for _ in 0..mult {
            ideals.push((ty, level.clone()));
        }
    }
    if ideals.is_empty() && abelian == 0 {
        return Err(err());
    }
    Ok((ideals, abelian))
}

impl FromStr for SemisimpleTypeWithLevels {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, RootError> {
        if s.trim() == "0" {
            return Ok(Self::default());
        }
        let (ideals, abelian) = parse_ideal_list(s)?;
        Ok(Self::new(ideals, abelian))
    }
}
