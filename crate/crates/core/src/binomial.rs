use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Pascal triangle of `C(n,k)` for `0 <= k <= n <= n_max`.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = vec![BigInt::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.rows[n][k].clone()
    }

    pub fn get_ref(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }
}

/// `C(n,2)`, the undirected pair count.
pub fn choose2(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_recurrence_and_symmetry() {
        let t = BinomialTable::new(30);
        for n in 2..=30usize {
            for k in 1..n {
                assert_eq!(t.get(n, k), t.get(n - 1, k - 1) + t.get(n - 1, k));
            }
            for k in 0..=n {
                assert_eq!(t.get(n, k), t.get(n, n - k));
            }
        }
        assert_eq!(t.get(10, 3), BigInt::from(120));
    }
}
