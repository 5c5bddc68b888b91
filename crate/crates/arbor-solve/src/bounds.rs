use std::collections::BTreeMap;

use arbor_core::{nash_williams_density, CoverMode, ForestClass, Graph};

use crate::chain::{ArborParam, LINEAR_RULES};

/// Upper bound on the cover optimum from known chain-larger parameters
/// (e.g. a known isa bounds ia from above). Partition optima are not
/// bounded this way.
pub fn upper_bound(
    class: ForestClass,
    mode: CoverMode,
    known: &BTreeMap<ArborParam, usize>,
) -> Option<usize> {
    let target = class_param(class, mode)?;
    let mut reach = vec![target];
    let mut changed = true;
    while changed {
        changed = false;
        for (_, p, q) in LINEAR_RULES {
            if reach.contains(&p) && !reach.contains(&q) {
                reach.push(q);
                changed = true;
            }
        }
    }
    reach
        .into_iter()
        .filter(|p| *p != target)
        .filter_map(|p| known.get(&p).copied())
        .min()
}

/// The parameter a cover optimum realizes, used to pull known values
/// through the chain.
pub fn class_param(class: ForestClass, mode: CoverMode) -> Option<ArborParam> {
    if mode == CoverMode::Partition {
        // Partition optima only dominate the cover parameters; they are not
        // chain members themselves.
        return None;
    }
    Some(match class {
        ForestClass::Forest => ArborParam::Arboricity,
        ForestClass::StarForest => ArborParam::StarArboricity,
        ForestClass::WeakInducedForest => ArborParam::WeakInducedArboricity,
        ForestClass::WeakInducedStarForest => ArborParam::WeakInducedStarArboricity,
        ForestClass::InducedForest => ArborParam::InducedArboricity,
        ForestClass::InducedStarForest => ArborParam::InducedStarArboricity,
        ForestClass::InducedMatching => ArborParam::StrongChromaticIndex,
        ForestClass::Matching => ArborParam::EdgeChromaticNumber,
    })
}

/// Sound lower bound for the optimum of (class, mode) on `g`.
///
/// Sources: the Nash-Williams density (a lower bound for every class in the
/// chain, sampled values are still lower bounds), a part-size bound for
/// matching classes, and known values of chain-smaller parameters. Partition
/// optima are bounded from below by the cover optimum of the same class.
pub fn lower_bound(
    g: &Graph,
    class: ForestClass,
    _mode: CoverMode,
    known: &BTreeMap<ArborParam, usize>,
) -> usize {
    let m = g.m();
    if m == 0 {
        return 0;
    }
    let mut lo = 1;

    lo = lo.max(nash_williams_density(g).value);

    if class.requires_matching() {
        let max_part = (g.n() / 2).max(1);
        lo = lo.max((m + max_part - 1) / max_part);
    }

    if let Some(target) = class_param(class, CoverMode::Cover) {
        if let Some(&v) = known.get(&target) {
            lo = lo.max(v);
        }
        // Transitive closure of p <= q over the linear rules.
        let mut reach = vec![target];
        let mut changed = true;
        while changed {
            changed = false;
            for (_, p, q) in LINEAR_RULES {
                if reach.contains(&q) && !reach.contains(&p) {
                    reach.push(p);
                    changed = true;
                }
            }
        }
        for p in reach {
            if let Some(&v) = known.get(&p) {
                lo = lo.max(v);
            }
        }
    }

    lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use arbor_core::Graph;

    #[test]
    fn density_seeds_forest_bound() {
        let mut pairs = Vec::new();
        for u in 1..=5 {
            for v in u + 1..=5 {
                pairs.push((u, v));
            }
        }
        let g = Graph::from_pairs(5, &pairs).unwrap();
        let lo = lower_bound(&g, ForestClass::Forest, CoverMode::Cover, &BTreeMap::new());
        assert_eq!(lo, 3); // ceil(5/2)
    }

    #[test]
    fn known_smaller_parameters_propagate() {
        let g = Graph::from_pairs(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let known: BTreeMap<ArborParam, usize> =
            [(ArborParam::WeakInducedArboricity, 3)].into();
        let lo = lower_bound(&g, ForestClass::InducedForest, CoverMode::Cover, &known);
        assert!(lo >= 3);
    }
}
