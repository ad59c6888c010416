use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Weakly decreasing sequence of positive integers; the empty partition is
/// allowed and written `∅`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Panics unless the parts are weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i` (1-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// `|lambda|`, the number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram: `lambda'_j = #{i : lambda_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `lambda` fits in the n x m box: at most `n` parts, each at most `m`.
    pub fn fits_in_box(&self, m: u32, n: usize) -> bool {
        self.len() <= n && self.part(1) <= m
    }

    /// Multiplicities of the column lengths: `a_j` is the number of columns
    /// of length `j`, i.e. the multiplicity of `j` among the parts of the
    /// conjugate.
    pub fn column_counts(&self) -> ColumnCounts {
        let mut counts = BTreeMap::new();
        for &part in self.conjugate().parts() {
            *counts.entry(part).or_insert(0) += 1;
        }
        ColumnCounts { counts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "∅" || s == "()" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let inner = s.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(s);
        let parts: Result<Vec<u32>, _> = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| e.to_string()))
            .collect();
        let parts = parts?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(format!("parts not weakly decreasing: {s}"));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(format!("zero part in {s}"));
        }
        Ok(Partition::new(parts))
    }
}

/// The column-length multiplicities `a_j` of a partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColumnCounts {
    counts: BTreeMap<u32, u32>,
}

impl ColumnCounts {
    /// `a_j`, zero when no column has length `j`.
    pub fn count(&self, j: u32) -> u32 {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    /// Pairs `(j, a_j)` with `a_j > 0`, ascending in `j`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts.iter().map(|(&j, &a)| (j, a))
    }

    /// `sum_j j * a_j`, which must equal `|lambda|`.
    pub fn total_boxes(&self) -> u32 {
        self.counts.iter().map(|(&j, &a)| j * a).sum()
    }
}

/// Restriction applied to a partition sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartitionFilter {
    All,
    /// Every part even.
    EvenParts,
    /// Every part of the conjugate even (all column lengths even).
    EvenConjugate,
}

impl PartitionFilter {
    pub fn accepts(&self, lambda: &Partition) -> bool {
        match self {
            PartitionFilter::All => true,
            PartitionFilter::EvenParts => lambda.parts().iter().all(|&p| p % 2 == 0),
            PartitionFilter::EvenConjugate => {
                lambda.conjugate().parts().iter().all(|&p| p % 2 == 0)
            }
        }
    }
}

/// All partitions fitting in the n x m box and passing the filter, in
/// ascending colexicographic order of the zero-padded part vector. The
/// empty partition always comes first.
pub fn partitions_in_box(m: u32, n: usize, filter: PartitionFilter) -> Vec<Partition> {
    let mut all = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    collect(m, n, &mut current, &mut all);
    all.retain(|p| filter.accepts(p));
    all.sort_by_key(|p| {
        let mut padded: Vec<u32> = p.parts().to_vec();
        padded.resize(n.max(p.len()), 0);
        padded.reverse();
        padded
    });
    all
}

fn collect(m: u32, n: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition::new(current.clone()));
    if current.len() == n {
        return;
    }
    let cap = current.last().copied().unwrap_or(m);
    for next in 1..=cap {
        current.push(next);
        collect(m, n, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// Independent oracle: transpose the Young diagram as a boolean grid.
    fn conjugate_by_grid(lambda: &Partition) -> Partition {
        let rows = lambda.len();
        let cols = lambda.part(1) as usize;
        let mut grid = vec![vec![false; cols]; rows];
        for (i, &part) in lambda.parts().iter().enumerate() {
            for j in 0..part as usize {
                grid[i][j] = true;
            }
        }
        let parts: Vec<u32> = (0..cols)
            .map(|j| (0..rows).filter(|&i| grid[i][j]).count() as u32)
            .collect();
        Partition::new(parts)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[3, 1]).conjugate(), conjugate_by_grid(&p(&[3, 1])));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn conjugate_is_involutive() {
        for lambda in partitions_in_box(4, 4, PartitionFilter::All) {
            assert_eq!(lambda.conjugate().conjugate(), lambda);
            assert_eq!(lambda.conjugate().size(), lambda.size());
        }
    }

    #[test]
    fn column_counts_examples() {
        assert_eq!(Partition::empty().column_counts().total_boxes(), 0);
        let cc = p(&[1]).column_counts();
        assert_eq!(cc.count(1), 1);
        assert_eq!(cc.count(2), 0);
        // lambda = (2,2): conjugate is (2,2), two columns of length 2
        let cc = p(&[2, 2]).column_counts();
        assert_eq!(cc.count(2), 2);
        assert_eq!(cc.count(1), 0);
    }

    #[test]
    fn column_counts_total_boxes() {
        for lambda in partitions_in_box(4, 4, PartitionFilter::All) {
            assert_eq!(lambda.column_counts().total_boxes(), lambda.size());
        }
    }

    #[test]
    fn box_enumeration_order() {
        let got = partitions_in_box(2, 2, PartitionFilter::All);
        let expected = vec![
            Partition::empty(),
            p(&[1]),
            p(&[2]),
            p(&[1, 1]),
            p(&[2, 1]),
            p(&[2, 2]),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn box_enumeration_filters() {
        let even = partitions_in_box(2, 2, PartitionFilter::EvenParts);
        assert_eq!(even, vec![Partition::empty(), p(&[2]), p(&[2, 2])]);

        // (1,1) has conjugate (2)
        let even_conj = partitions_in_box(1, 2, PartitionFilter::EvenConjugate);
        assert_eq!(even_conj, vec![Partition::empty(), p(&[1, 1])]);
    }

    #[test]
    fn box_counts() {
        // binomial(m+n, n) partitions in an n x m box
        assert_eq!(partitions_in_box(4, 3, PartitionFilter::All).len(), 35);
        assert_eq!(partitions_in_box(4, 4, PartitionFilter::All).len(), 70);
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p(&[3, 1, 1]).to_string(), "(3,1,1)");
        assert_eq!(Partition::empty().to_string(), "∅");
        assert_eq!("(3,1,1)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert!("(1,3)".parse::<Partition>().is_err());
    }
}
