//! Forbidden-pattern class specifications: parse selectors like `bull`,
//! `P11`, `C4`, `4K1`, or `odd-torch`, and decide class membership with a
//! violating witness on failure.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::detect::{contains_induced, find_hole, find_odd_antihole, find_odd_torch, Parity, Witness};
use crate::graph::Graph;
use crate::patterns::{make_family, make_named, Family, PatternName};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassSpecError {
    #[error("unresolvable selector: {0:?}")]
    Unresolvable(String),
    #[error("class specification must forbid at least one pattern")]
    Empty,
}

/// One forbidden pattern or parametric family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Pattern(PatternName),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Edgeless(usize),
    OddHole,
    EvenHole,
    OddAntihole,
    OddTorch,
}

impl Selector {
    /// Searches `g` for this selector; `Some` is a violation.
    pub fn find_in(&self, g: &Graph) -> Option<Witness> {
        match *self {
            Selector::Pattern(name) => contains_induced(g, &make_named(name)),
            Selector::Path(k) => contains_induced(g, &family_pattern(Family::Path, k)),
            Selector::Cycle(k) => contains_induced(g, &family_pattern(Family::Cycle, k)),
            Selector::Complete(k) => contains_induced(g, &family_pattern(Family::Complete, k)),
            Selector::Edgeless(k) => contains_induced(g, &family_pattern(Family::Edgeless, k)),
            Selector::OddHole => find_hole(g, Parity::Odd, 5),
            Selector::EvenHole => find_hole(g, Parity::Even, 4),
            Selector::OddAntihole => find_odd_antihole(g, 5),
            Selector::OddTorch => find_odd_torch(g),
        }
    }
}

fn family_pattern(kind: Family, k: usize) -> Graph {
    make_family(kind, k).expect("selector sizes are validated at parse time")
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Selector::Pattern(p) => write!(f, "{p}"),
            Selector::Path(k) => write!(f, "P{k}"),
            Selector::Cycle(k) => write!(f, "C{k}"),
            Selector::Complete(k) => write!(f, "K{k}"),
            Selector::Edgeless(k) => write!(f, "{k}K1"),
            Selector::OddHole => write!(f, "odd-hole"),
            Selector::EvenHole => write!(f, "even-hole"),
            Selector::OddAntihole => write!(f, "odd-antihole"),
            Selector::OddTorch => write!(f, "odd-torch"),
        }
    }
}

impl FromStr for Selector {
    type Err = ClassSpecError;

    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let s = raw.trim();
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "odd-hole" | "oddhole" => return Ok(Selector::OddHole),
            "even-hole" | "evenhole" => return Ok(Selector::EvenHole),
            "odd-antihole" => return Ok(Selector::OddAntihole),
            "odd-torch" | "oddtorch" | "torch" => return Ok(Selector::OddTorch),
            _ => {}
        }
        if let Ok(name) = s.parse::<PatternName>() {
            return Ok(Selector::Pattern(name));
        }
        let bad = || ClassSpecError::Unresolvable(raw.to_string());
        // mK1 (m disjoint vertices)
        if let Some(m) = lower.strip_suffix("k1") {
            if let Ok(k) = m.parse::<usize>() {
                if k >= 1 {
                    return Ok(Selector::Edgeless(k));
                }
            }
            return Err(bad());
        }
        if lower.len() < 2 {
            return Err(bad());
        }
        let (head, tail) = lower.split_at(1);
        let k: usize = tail.parse().map_err(|_| bad())?;
        match head {
            "p" if k >= 1 => Ok(Selector::Path(k)),
            "c" if k >= 3 => Ok(Selector::Cycle(k)),
            "k" if k >= 1 => Ok(Selector::Complete(k)),
            _ => Err(bad()),
        }
    }
}

/// A hereditary class given by its forbidden induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSpec {
    forbidden: Vec<Selector>,
}

impl ClassSpec {
    pub fn new(forbidden: Vec<Selector>) -> Result<ClassSpec, ClassSpecError> {
        if forbidden.is_empty() {
            return Err(ClassSpecError::Empty);
        }
        Ok(ClassSpec { forbidden })
    }

    /// Parses a comma-separated selector list, e.g. `"bull,P11,C4"`.
    pub fn parse(spec: &str) -> Result<ClassSpec, ClassSpecError> {
        let forbidden = spec
            .split(',')
            .filter(|part| !part.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()?;
        ClassSpec::new(forbidden)
    }

    pub fn selectors(&self) -> &[Selector] {
        &self.forbidden
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, sel) in self.forbidden.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{sel}")?;
        }
        write!(f, ")-free")
    }
}

/// A witness that `g` is outside the class: which selector embeds, and how.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassViolation {
    pub selector: Selector,
    pub witness: Witness,
}

/// Finds the first forbidden embedding in selector order, if any.
pub fn find_forbidden(g: &Graph, spec: &ClassSpec) -> Option<ClassViolation> {
    spec.forbidden.iter().find_map(|sel| {
        sel.find_in(g).map(|witness| ClassViolation {
            selector: *sel,
            witness,
        })
    })
}

/// `true` when no forbidden pattern of `spec` embeds in `g`.
pub fn is_class_member(g: &Graph, spec: &ClassSpec) -> bool {
    find_forbidden(g, spec).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::patterns::make_odd_torch;

    #[test]
    fn selector_parsing() {
        assert_eq!("bull".parse::<Selector>().unwrap(), Selector::Pattern(PatternName::Bull));
        assert_eq!("P11".parse::<Selector>().unwrap(), Selector::Path(11));
        assert_eq!("c4".parse::<Selector>().unwrap(), Selector::Cycle(4));
        assert_eq!("4K1".parse::<Selector>().unwrap(), Selector::Edgeless(4));
        assert_eq!("K5".parse::<Selector>().unwrap(), Selector::Complete(5));
        assert_eq!("odd-torch".parse::<Selector>().unwrap(), Selector::OddTorch);
        assert!("C2".parse::<Selector>().is_err());
        assert!("Q7".parse::<Selector>().is_err());
        assert!("".parse::<Selector>().is_err());
        assert!(ClassSpec::parse("").is_err());
    }

    #[test]
    fn c5_is_bull_torch_free() {
        let c5 = make_family(Family::Cycle, 5).unwrap();
        let spec = ClassSpec::parse("bull,odd-torch").unwrap();
        assert!(is_class_member(&c5, &spec));
    }

    #[test]
    fn torch_is_not_torch_free() {
        let t = make_odd_torch(5, VertexSet::singleton(0)).unwrap();
        let spec = ClassSpec::parse("odd-torch").unwrap();
        let violation = find_forbidden(&t, &spec).unwrap();
        assert_eq!(violation.selector, Selector::OddTorch);
        assert!(violation.witness.verify(&t));
    }

    #[test]
    fn product_is_bull_diamond_free() {
        let k2 = make_family(Family::Complete, 2).unwrap();
        let k3 = make_family(Family::Complete, 3).unwrap();
        let prism = k2.cartesian_product(&k3).unwrap();
        let spec = ClassSpec::parse("bull,diamond").unwrap();
        assert!(is_class_member(&prism, &spec));
    }

    #[test]
    fn even_hole_selector_sees_c4() {
        let c4 = make_family(Family::Cycle, 4).unwrap();
        let spec = ClassSpec::parse("even-hole").unwrap();
        assert!(!is_class_member(&c4, &spec));
    }
}
