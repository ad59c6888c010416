/// One orbit of the n x n x m box under transposition of the first two
/// coordinates: a diagonal point `(i,i,k)` alone, or the pair
/// `{(i,j,k),(j,i,k)}` with `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Orbit {
    i: usize,
    j: usize,
    k: u32,
}

impl Orbit {
    /// `|eta|`: 1 for diagonal orbits, 2 otherwise.
    pub fn size(&self) -> u32 {
        if self.i == self.j {
            1
        } else {
            2
        }
    }

    /// `Ht(eta) = i + j + k - 2`, independent of which representative is
    /// taken since swapping i and j fixes the sum.
    pub fn height_stat(&self) -> u32 {
        (self.i + self.j) as u32 + self.k - 2
    }

    /// The representative with `i <= j`.
    pub fn representative(&self) -> (usize, usize, u32) {
        (self.i, self.j, self.k)
    }
}

/// All orbits of the n x n x m box, ordered by representative `(i, j, k)`.
/// There are `m * n(n+1)/2` of them.
pub fn orbits(n: usize, m: u32) -> Vec<Orbit> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            for k in 1..=m {
                out.push(Orbit { i, j, k });
            }
        }
    }
    out
}
