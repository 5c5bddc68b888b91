use std::collections::BTreeMap;
use std::fmt;

/// The nine parameters related by the standard inequality chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArborParam {
    /// a: forests covering E(G).
    Arboricity,
    /// sa: star forests.
    StarArboricity,
    /// wia: weak induced forests.
    WeakInducedArboricity,
    /// wisa: weak induced star forests.
    WeakInducedStarArboricity,
    /// ia: induced forests.
    InducedArboricity,
    /// isa: induced star forests.
    InducedStarArboricity,
    /// chi'_s: induced matchings.
    StrongChromaticIndex,
    /// chi': proper edge coloring.
    EdgeChromaticNumber,
    /// chi_acyc: proper coloring with every class pair inducing a forest.
    AcyclicChromaticNumber,
}

impl ArborParam {
    pub const ALL: [ArborParam; 9] = [
        ArborParam::Arboricity,
        ArborParam::StarArboricity,
        ArborParam::WeakInducedArboricity,
        ArborParam::WeakInducedStarArboricity,
        ArborParam::InducedArboricity,
        ArborParam::InducedStarArboricity,
        ArborParam::StrongChromaticIndex,
        ArborParam::EdgeChromaticNumber,
        ArborParam::AcyclicChromaticNumber,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ArborParam::Arboricity => "a",
            ArborParam::StarArboricity => "sa",
            ArborParam::WeakInducedArboricity => "wia",
            ArborParam::WeakInducedStarArboricity => "wisa",
            ArborParam::InducedArboricity => "ia",
            ArborParam::InducedStarArboricity => "isa",
            ArborParam::StrongChromaticIndex => "chi-s",
            ArborParam::EdgeChromaticNumber => "chi-prime",
            ArborParam::AcyclicChromaticNumber => "chi-acyc",
        }
    }

    pub fn from_name(name: &str) -> Option<ArborParam> {
        ArborParam::ALL.iter().copied().find(|p| p.name() == name)
    }
}

impl fmt::Display for ArborParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub lhs: usize,
    pub rhs: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated: {} > {}", self.rule, self.lhs, self.rhs)
    }
}

/// Pairs (p, q) with p <= q for every graph, in chain order.
pub const LINEAR_RULES: [(&str, ArborParam, ArborParam); 10] = [
    ("a <= wia", ArborParam::Arboricity, ArborParam::WeakInducedArboricity),
    ("wia <= ia", ArborParam::WeakInducedArboricity, ArborParam::InducedArboricity),
    ("ia <= isa", ArborParam::InducedArboricity, ArborParam::InducedStarArboricity),
    ("isa <= chi-s", ArborParam::InducedStarArboricity, ArborParam::StrongChromaticIndex),
    ("wia <= wisa", ArborParam::WeakInducedArboricity, ArborParam::WeakInducedStarArboricity),
    ("wisa <= isa", ArborParam::WeakInducedStarArboricity, ArborParam::InducedStarArboricity),
    ("a <= sa", ArborParam::Arboricity, ArborParam::StarArboricity),
    ("sa <= wisa", ArborParam::StarArboricity, ArborParam::WeakInducedStarArboricity),
    ("wisa <= chi-prime", ArborParam::WeakInducedStarArboricity, ArborParam::EdgeChromaticNumber),
    ("chi-prime <= chi-s", ArborParam::EdgeChromaticNumber, ArborParam::StrongChromaticIndex),
];

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Checks every inequality among the supplied parameters; inequalities with
/// a missing operand are skipped. Empty result means all hold.
pub fn check_inequality_chain(params: &BTreeMap<ArborParam, usize>) -> Vec<Violation> {
    let mut out = Vec::new();
    let get = |p: ArborParam| params.get(&p).copied();

    for (rule, p, q) in LINEAR_RULES {
        if let (Some(a), Some(b)) = (get(p), get(q)) {
            if a > b {
                out.push(Violation {
                    rule,
                    lhs: a,
                    rhs: b,
                });
            }
        }
    }

    let a = get(ArborParam::Arboricity);
    let sa = get(ArborParam::StarArboricity);
    let wia = get(ArborParam::WeakInducedArboricity);
    let wisa = get(ArborParam::WeakInducedStarArboricity);
    let ia = get(ArborParam::InducedArboricity);
    let isa = get(ArborParam::InducedStarArboricity);
    let acyc = get(ArborParam::AcyclicChromaticNumber);

    if let (Some(sa), Some(a)) = (sa, a) {
        if sa > 2 * a {
            out.push(Violation { rule: "sa <= 2a", lhs: sa, rhs: 2 * a });
        }
    }
    if let (Some(wisa), Some(wia)) = (wisa, wia) {
        if wisa > 2 * wia {
            out.push(Violation { rule: "wisa <= 2wia", lhs: wisa, rhs: 2 * wia });
        }
    }
    if let (Some(isa), Some(ia)) = (isa, ia) {
        if isa > 3 * ia {
            out.push(Violation { rule: "isa <= 3ia", lhs: isa, rhs: 3 * ia });
        }
    }
    if let (Some(wia), Some(a)) = (wia, a) {
        if wia > 4 * a * a {
            out.push(Violation { rule: "wia <= 4a^2", lhs: wia, rhs: 4 * a * a });
        }
    }
    if let (Some(acyc), Some(ia)) = (acyc, ia) {
        // log_3(chi_acyc) <= ia, i.e. chi_acyc <= 3^ia.
        let bound = 3usize.checked_pow(ia.min(40) as u32).unwrap_or(usize::MAX);
        if acyc > bound {
            out.push(Violation { rule: "chi-acyc <= 3^ia", lhs: acyc, rhs: bound });
        }
        if ia > binom2(acyc) {
            out.push(Violation { rule: "ia <= C(chi-acyc,2)", lhs: ia, rhs: binom2(acyc) });
        }
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructed_violation() {
        let params: BTreeMap<ArborParam, usize> = [
            (ArborParam::Arboricity, 2),
            (ArborParam::WeakInducedArboricity, 1),
        ]
        .into();
        let v = check_inequality_chain(&params);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, "a <= wia");
    }

    #[test]
    fn k4_full_set_is_clean() {
        // a=2, sa=3, wia=3, wisa=3, ia=6, isa=6, chi_s=6, chi'=3, chi_acyc=4.
        let params: BTreeMap<ArborParam, usize> = [
            (ArborParam::Arboricity, 2),
            (ArborParam::StarArboricity, 3),
            (ArborParam::WeakInducedArboricity, 3),
            (ArborParam::WeakInducedStarArboricity, 3),
            (ArborParam::InducedArboricity, 6),
            (ArborParam::InducedStarArboricity, 6),
            (ArborParam::StrongChromaticIndex, 6),
            (ArborParam::EdgeChromaticNumber, 3),
            (ArborParam::AcyclicChromaticNumber, 4),
        ]
        .into();
        assert!(check_inequality_chain(&params).is_empty());
    }

    #[test]
    fn partial_sets_skip_missing_operands() {
        let params: BTreeMap<ArborParam, usize> =
            [(ArborParam::InducedArboricity, 100)].into();
        assert!(check_inequality_chain(&params).is_empty());
    }

    #[test]
    fn acyclic_bounds() {
        let params: BTreeMap<ArborParam, usize> = [
            (ArborParam::InducedArboricity, 1),
            (ArborParam::AcyclicChromaticNumber, 4),
        ]
        .into();
        // chi_acyc = 4 > 3^1 and ia = 1 <= C(4,2).
        let v = check_inequality_chain(&params);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].rule, "chi-acyc <= 3^ia");
    }
}
