use crate::error::Error;

/// Finite multi-subset of the ordered ground set `{1, .., bound}`,
/// stored as a multiplicity vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Multiset {
    counts: Vec<u32>,
}

impl Multiset {
    pub fn empty(bound: usize) -> Self {
        Multiset { counts: vec![0; bound] }
    }

    pub fn from_counts(counts: Vec<u32>) -> Self {
        Multiset { counts }
    }

    /// Build from a list of elements in `{1..bound}`.
    pub fn from_elements(bound: usize, elems: &[usize]) -> Result<Self, Error> {
        let mut m = Multiset::empty(bound);
        for &e in elems {
            if e == 0 || e > bound {
                return Err(Error::usage(format!("element {e} outside ground set 1..{bound}")));
            }
            m.counts[e - 1] += 1;
        }
        Ok(m)
    }

    pub fn bound(&self) -> usize {
        self.counts.len()
    }

    /// Multiplicity of `elem` (1-based).
    pub fn mult(&self, elem: usize) -> u32 {
        self.counts[elem - 1]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Total cardinality, counted with multiplicity.
    pub fn card(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Disjoint union: multiplicities add.
    pub fn disjoint_union(&self, other: &Multiset) -> Multiset {
        assert_eq!(self.bound(), other.bound());
        Multiset {
            counts: self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect(),
        }
    }

    /// Degree of the multiset inside its ordered ground set `{1..n}`:
    /// `sum_{y in Y} Y(y) * (#{x < y} - #{x > y})`.
    ///
    /// Each unit of `y` scores one point per ground element below it and
    /// loses one per ground element above it. On plain subsets this agrees
    /// with the inversion-style count; on multisets it is the statistic
    /// whose generating function over fixed cardinality is the quantum
    /// binomial (see the tests below).
    pub fn degree(&self) -> i64 {
        let n = self.counts.len() as i64;
        let mut deg = 0i64;
        for (i, &m) in self.counts.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let y = i as i64 + 1;
            deg += m as i64 * ((y - 1) - (n - y));
        }
        deg
    }
}

/// Degree of `y` in the ordered set `{1..ground}`; errors if `y` lives in a
/// different ground set.
pub fn multiset_degree(ground: usize, y: &Multiset) -> Result<i64, Error> {
    if y.bound() != ground {
        return Err(Error::usage(format!(
            "multiset over 1..{} used with ground set 1..{}",
            y.bound(),
            ground
        )));
    }
    Ok(y.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::{qbinom, LaurentPoly};

    #[test]
    fn degree_examples() {
        let y = Multiset::from_elements(3, &[2]).unwrap();
        assert_eq!(y.degree(), 0);
        let y = Multiset::from_elements(3, &[3]).unwrap();
        assert_eq!(y.degree(), 2);
        let y = Multiset::empty(1);
        assert_eq!(y.degree(), 0);
        assert!(multiset_degree(2, &y).is_err());
    }

    fn subsets_of_size(n: usize, k: u32) -> Vec<Multiset> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() == k {
                let counts = (0..n).map(|i| (mask >> i) & 1).collect();
                out.push(Multiset::from_counts(counts));
            }
        }
        out
    }

    fn multisets_of_size(n: usize, k: u32) -> Vec<Multiset> {
        fn rec(counts: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Multiset>) {
            if pos == counts.len() {
                if left == 0 {
                    out.push(Multiset::from_counts(counts.clone()));
                }
                return;
            }
            for c in 0..=left {
                counts[pos] = c;
                rec(counts, pos + 1, left - c, out);
            }
            counts[pos] = 0;
        }
        let mut out = Vec::new();
        rec(&mut vec![0; n], 0, k, &mut out);
        out
    }

    /// Generating functions: subsets give `[N choose k]`, multisets give
    /// `(-1)^k [-N choose k]`.
    #[test]
    fn degree_generating_functions() {
        for n in 0..=6usize {
            for k in 0..=6u32 {
                let mut sum = LaurentPoly::zero();
                for y in subsets_of_size(n, k) {
                    sum += &LaurentPoly::monomial(y.degree());
                }
                assert_eq!(sum, qbinom(n as i64, k as i64), "subsets n={n} k={k}");

                let mut msum = LaurentPoly::zero();
                for y in multisets_of_size(n, k) {
                    msum += &LaurentPoly::monomial(y.degree());
                }
                if k % 2 == 1 {
                    msum = -&msum;
                }
                assert_eq!(msum, qbinom(-(n as i64), k as i64), "multisets n={n} k={k}");
            }
        }
    }
}
