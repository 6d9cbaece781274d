use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Pascal triangle of exact binomial coefficients, rows 0..=n_max.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
    zero: BigUint,
}

impl BinomialTable {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        BinomialTable {
            rows,
            zero: BigUint::zero(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// binom(n, k); zero for k > n or negative arguments.
    ///
    /// Panics if `n` exceeds the table.
    pub fn get(&self, n: i64, k: i64) -> &BigUint {
        if n < 0 || k < 0 || k > n {
            return &self.zero;
        }
        &self.rows[n as usize][k as usize]
    }

    /// Checks binom(n,k) = binom(n−1,k−1) + binom(n−1,k) for every stored entry.
    pub fn pascal_identity_holds(&self) -> bool {
        (1..self.rows.len() as i64).all(|n| {
            (0..=n).all(|k| *self.get(n, k) == self.get(n - 1, k - 1) + self.get(n - 1, k))
        })
    }
}
