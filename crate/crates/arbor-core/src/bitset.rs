/// Fixed-capacity bit set over vertex ids, backed by `u64` words.
///
/// Sized once for a graph's vertex range and reused in the hot paths of the
/// clique search and the cover solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    /// Capacity for values `0..=max_value`.
    pub fn with_capacity(max_value: usize) -> VertexSet {
        VertexSet {
            words: vec![0; max_value / 64 + 1],
        }
    }

    pub fn insert(&mut self, x: usize) {
        self.words[x / 64] |= 1u64 << (x % 64);
    }

    pub fn remove(&mut self, x: usize) {
        self.words[x / 64] &= !(1u64 << (x % 64));
    }

    pub fn contains(&self, x: usize) -> bool {
        self.words[x / 64] >> (x % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Symmetric difference; undoes a prior `union_with` when the operand was
    /// disjoint from the original contents.
    pub fn xor_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let max = items.iter().copied().max().unwrap_or(0);
        let mut s = VertexSet::with_capacity(max);
        for x in items {
            s.insert(x);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::with_capacity(130);
        s.insert(1);
        s.insert(64);
        s.insert(130);
        assert!(s.contains(64));
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 64, 130]);
        s.remove(64);
        assert!(!s.contains(64));
    }

    #[test]
    fn xor_undoes_disjoint_union() {
        let mut a: VertexSet = [1usize, 5].into_iter().collect();
        let mut b = VertexSet::with_capacity(5);
        b.insert(3);
        let before = a.clone();
        a.union_with(&b);
        assert!(a.contains(3));
        a.xor_with(&b);
        assert_eq!(a.iter().collect::<Vec<_>>(), before.iter().collect::<Vec<_>>());
    }
}
