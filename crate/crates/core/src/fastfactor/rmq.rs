/// Sparse table for O(1) range-minimum queries after O(n log n) setup.
#[derive(Debug, Clone)]
pub struct SparseTable {
    levels: Vec<Vec<usize>>,
}

impl SparseTable {
    pub fn new(values: &[usize]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = levels.last().unwrap();
            let next: Vec<usize> = (0..prev.len() - width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        SparseTable { levels }
    }

    /// Minimum of `values[lo..=hi]`.
    pub fn min(&self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let level = &self.levels[k];
        level[lo].min(level[hi + 1 - (1 << k)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_linear_scan(v in prop::collection::vec(0usize..50, 1..80), a in 0usize..80, b in 0usize..80) {
            let (lo, hi) = (a.min(b) % v.len(), a.max(b) % v.len());
            let (lo, hi) = (lo.min(hi), lo.max(hi));
            let table = SparseTable::new(&v);
            prop_assert_eq!(table.min(lo, hi), *v[lo..=hi].iter().min().unwrap());
        }
    }
}
