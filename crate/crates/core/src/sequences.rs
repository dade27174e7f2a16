//! Graphic degree sequences: the Erdős–Gallai test, its range-restricted
//! form over value counts, and a Havel–Hakimi realizer.

use crate::error::{invalid, Result};
use crate::graph::Graph;

/// Erdős–Gallai test on a non-increasing sequence, checking every prefix.
pub fn erdos_gallai(d: &[usize]) -> Result<bool> {
    if d.windows(2).any(|w| w[0] < w[1]) {
        return Err(invalid("degree sequence must be non-increasing"));
    }
    if d.iter().sum::<usize>() % 2 == 1 {
        return Ok(false);
    }
    let n = d.len();
    let mut prefix = 0;
    for t in 1..=n {
        prefix += d[t - 1];
        let tail: usize = d[t..].iter().map(|&x| x.min(t)).sum();
        if prefix > t * (t - 1) + tail {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A multiset of degrees drawn from `[k - a, k]`, stored as value counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeSequence {
    k: usize,
    a: usize,
    counts: Vec<usize>,
}

impl RangeSequence {
    /// `counts[j]` is the number of entries equal to `k - a + j`.
    pub fn new(k: usize, a: usize, counts: Vec<usize>) -> Result<Self> {
        if a > k {
            return Err(invalid(format!("range width {a} exceeds k = {k}")));
        }
        if counts.len() != a + 1 {
            return Err(invalid(format!("expected {} counts, got {}", a + 1, counts.len())));
        }
        Ok(RangeSequence { k, a, counts })
    }

    /// Counts the entries of `d`, which must all lie in `[k - a, k]`.
    pub fn from_degrees(k: usize, a: usize, d: &[usize]) -> Result<Self> {
        if a > k {
            return Err(invalid(format!("range width {a} exceeds k = {k}")));
        }
        let mut counts = vec![0; a + 1];
        for &x in d {
            if x + a < k || x > k {
                return Err(invalid(format!("degree {x} outside [{}, {k}]", k - a)));
            }
            counts[x + a - k] += 1;
        }
        Ok(RangeSequence { k, a, counts })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn low(&self) -> usize {
        self.k - self.a
    }

    /// Number of entries equal to `i`; zero outside the range.
    pub fn count(&self, i: usize) -> usize {
        if i < self.low() || i > self.k {
            0
        } else {
            self.counts[i - self.low()]
        }
    }

    pub fn n(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Number of entries that are at least `d`.
    pub fn at_least(&self, d: usize) -> usize {
        (d.max(self.low())..=self.k).map(|i| self.count(i)).sum()
    }

    /// The sequence written out in non-increasing order.
    pub fn expand(&self) -> Vec<usize> {
        (self.low()..=self.k)
            .rev()
            .flat_map(|i| std::iter::repeat_n(i, self.count(i)))
            .collect()
    }
}

/// Graphicness test that checks one inequality per value `D` in the range
/// instead of one per prefix.
pub fn range_graphic(seq: &RangeSequence) -> Result<bool> {
    let n = seq.n();
    if n == 0 {
        return Ok(true);
    }
    let k = seq.k;
    if n <= k {
        return Err(invalid(format!("sequence length {n} must exceed k = {k}")));
    }
    let lo = seq.low();
    let sum: usize = (lo..=k).map(|i| i * seq.count(i)).sum();
    if sum % 2 == 1 {
        return Ok(false);
    }
    for d in lo..=k {
        let td = seq.at_least(d);
        if td < lo || td > k {
            continue;
        }
        let lhs: usize = (d..=k).map(|i| i * seq.count(i)).sum();
        let rhs = td * td.saturating_sub(1) + (lo..d).map(|i| i.min(td) * seq.count(i)).sum::<usize>();
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Havel–Hakimi realization: vertex `i` of the result has degree `d[i]`.
/// Returns `None` when the sequence is not graphic.
pub fn realize(d: &[usize]) -> Option<Graph> {
    let n = d.len();
    let mut g = Graph::new(n);
    let mut rest = d.to_vec();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.sort_by(|&x, &y| rest[y].cmp(&rest[x]).then(x.cmp(&y)));
        let v = order.iter().copied().find(|&v| rest[v] > 0);
        let Some(v) = v else { return Some(g) };
        let need = rest[v];
        rest[v] = 0;
        let targets: Vec<usize> = order.iter().copied().filter(|&w| w != v && rest[w] > 0).take(need).collect();
        if targets.len() < need {
            return None;
        }
        for w in targets {
            rest[w] -= 1;
            g.add_edge(v, w).ok()?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn erdos_gallai_examples() {
        assert!(erdos_gallai(&[2, 2, 2]).unwrap());
        assert!(!erdos_gallai(&[3, 3, 3, 1]).unwrap());
        for k in 0..6 {
            assert!(erdos_gallai(&vec![k; k + 1]).unwrap());
        }
        assert!(erdos_gallai(&[]).unwrap());
        assert!(erdos_gallai(&[1, 2]).is_err());
    }

    #[test]
    fn range_graphic_examples() {
        let tri = RangeSequence::new(2, 2, vec![0, 0, 3]).unwrap();
        assert!(range_graphic(&tri).unwrap());
        let bad = RangeSequence::from_degrees(3, 2, &[3, 3, 3, 1]).unwrap();
        assert_eq!(bad.count(1), 1);
        assert_eq!(bad.count(3), 3);
        assert!(!range_graphic(&bad).unwrap());
        let k4 = RangeSequence::new(3, 0, vec![4]).unwrap();
        assert!(range_graphic(&k4).unwrap());
        let short = RangeSequence::new(3, 0, vec![3]).unwrap();
        assert!(range_graphic(&short).is_err());
        assert!(range_graphic(&RangeSequence::new(3, 1, vec![0, 0]).unwrap()).unwrap());
    }

    #[test]
    fn realize_examples() {
        assert_eq!(realize(&[2, 2, 2]).unwrap(), Graph::complete(3));
        assert!(realize(&[1, 1, 1]).is_none());
        let g = realize(&[2, 2, 1, 1]).unwrap();
        assert_eq!((0..4).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![2, 2, 1, 1]);
        assert!(realize(&[3, 3, 3, 1]).is_none());
        let g = realize(&[1, 3, 1, 1]).unwrap();
        assert_eq!(g, Graph::from_edges(4, [(1, 0), (1, 2), (1, 3)]).unwrap());
    }
}
