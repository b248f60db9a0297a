use std::fmt;
use std::str::FromStr;

use crate::partition::ArgumentSequence;
use crate::Error;

/// The three base families every triangle is derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Ward1,
    Ward2,
    WardLah,
}

impl Family {
    pub fn argument_sequence(self) -> ArgumentSequence {
        match self {
            Family::Ward1 => ArgumentSequence::WardFirstKind,
            Family::Ward2 => ArgumentSequence::WardSecondKind,
            Family::WardLah => ArgumentSequence::ConstantOne,
        }
    }

    pub fn plain(self) -> TriangleKind {
        match self {
            Family::Ward1 => TriangleKind::Ward1,
            Family::Ward2 => TriangleKind::Ward2,
            Family::WardLah => TriangleKind::WardLah,
        }
    }
}

/// How a kind rescales its base family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scale {
    /// Factor `(n+k)^(n falling)` in front of the partition transform.
    Plain,
    /// `(2n)! / (n+k)^(n falling)` times the base entry.
    Varied,
    /// `binom(2n, n+k)` times the base entry.
    Binomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleKind {
    Ward1,
    Ward2,
    WardLah,
    VariedWard1,
    VariedWard2,
    VariedWardLah,
    BinomialWard1,
    BinomialWard2,
    BinomialWardLah,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strategy {
    Recurrence,
    Explicit,
    PartitionTransform,
    Scaling,
    AlternatingSum,
}

impl TriangleKind {
    pub const ALL: [TriangleKind; 9] = [
        TriangleKind::Ward1,
        TriangleKind::Ward2,
        TriangleKind::WardLah,
        TriangleKind::VariedWard1,
        TriangleKind::VariedWard2,
        TriangleKind::VariedWardLah,
        TriangleKind::BinomialWard1,
        TriangleKind::BinomialWard2,
        TriangleKind::BinomialWardLah,
    ];

    pub fn family(self) -> Family {
        use TriangleKind::*;
        match self {
            Ward1 | VariedWard1 | BinomialWard1 => Family::Ward1,
            Ward2 | VariedWard2 | BinomialWard2 => Family::Ward2,
            WardLah | VariedWardLah | BinomialWardLah => Family::WardLah,
        }
    }

    pub fn scale(self) -> Scale {
        use TriangleKind::*;
        match self {
            Ward1 | Ward2 | WardLah => Scale::Plain,
            VariedWard1 | VariedWard2 | VariedWardLah => Scale::Varied,
            BinomialWard1 | BinomialWard2 | BinomialWardLah => Scale::Binomial,
        }
    }

    pub fn supported_strategies(self) -> &'static [Strategy] {
        use Strategy::*;
        use TriangleKind::*;
        match self {
            Ward1 | Ward2 => &[Recurrence, PartitionTransform],
            WardLah => &[Recurrence, Explicit, PartitionTransform, AlternatingSum],
            VariedWard1 | VariedWard2 | BinomialWard1 | BinomialWard2 => {
                &[Recurrence, PartitionTransform, Scaling]
            }
            VariedWardLah | BinomialWardLah => &[Recurrence, Explicit, PartitionTransform, Scaling],
        }
    }

    pub fn supports(self, strategy: Strategy) -> bool {
        self.supported_strategies().contains(&strategy)
    }

    pub fn require(self, strategy: Strategy) -> Result<(), Error> {
        if self.supports(strategy) {
            Ok(())
        } else {
            Err(Error::UnsupportedStrategy {
                kind: self,
                strategy,
            })
        }
    }

    pub fn name(self) -> &'static str {
        use TriangleKind::*;
        match self {
            Ward1 => "Ward1",
            Ward2 => "Ward2",
            WardLah => "WardLah",
            VariedWard1 => "VariedWard1",
            VariedWard2 => "VariedWard2",
            VariedWardLah => "VariedWardLah",
            BinomialWard1 => "BinomialWard1",
            BinomialWard2 => "BinomialWard2",
            BinomialWardLah => "BinomialWardLah",
        }
    }
}

impl Strategy {
    pub const ALL: [Strategy; 5] = [
        Strategy::Recurrence,
        Strategy::Explicit,
        Strategy::PartitionTransform,
        Strategy::Scaling,
        Strategy::AlternatingSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Recurrence => "recurrence",
            Strategy::Explicit => "explicit",
            Strategy::PartitionTransform => "partition-transform",
            Strategy::Scaling => "scaling",
            Strategy::AlternatingSum => "alternating-sum",
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Lowercase with `-`, `_` and spaces removed.
fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !matches!(c, '-' | '_' | ' '))
        .flat_map(char::to_lowercase)
        .collect()
}

impl FromStr for TriangleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = normalize(s);
        TriangleKind::ALL
            .into_iter()
            .find(|k| normalize(k.name()) == wanted)
            .ok_or_else(|| Error::Parse(format!("unknown triangle kind {s:?}")))
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = normalize(s);
        let alias = match wanted.as_str() {
            "pt" | "partition" => Some(Strategy::PartitionTransform),
            "altsum" | "alternating" => Some(Strategy::AlternatingSum),
            _ => None,
        };
        alias
            .or_else(|| {
                Strategy::ALL
                    .into_iter()
                    .find(|st| normalize(st.name()) == wanted)
            })
            .ok_or_else(|| Error::Parse(format!("unknown strategy {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for kind in TriangleKind::ALL {
            assert_eq!(kind.name().parse::<TriangleKind>().unwrap(), kind);
        }
        for st in Strategy::ALL {
            assert_eq!(st.name().parse::<Strategy>().unwrap(), st);
        }
        assert_eq!(
            "binomial-ward-lah".parse::<TriangleKind>().unwrap(),
            TriangleKind::BinomialWardLah
        );
        assert_eq!(
            "PT".parse::<Strategy>().unwrap(),
            Strategy::PartitionTransform
        );
        assert!("ward3".parse::<TriangleKind>().is_err());
    }

    #[test]
    fn strategy_table() {
        use Strategy::*;
        use TriangleKind::*;
        assert!(!Ward1.supports(Explicit));
        assert!(!BinomialWard1.supports(Explicit));
        assert!(WardLah.supports(AlternatingSum));
        assert!(!VariedWardLah.supports(AlternatingSum));
        assert!(!WardLah.supports(Scaling));
        for kind in TriangleKind::ALL {
            assert!(kind.supports(Recurrence));
            assert!(kind.supports(PartitionTransform));
        }
    }
}
