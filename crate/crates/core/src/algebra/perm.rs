use std::fmt;

/// A permutation of `{1..n}` together with its inversion number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    images: Vec<usize>,
    inversions: u32,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &img in &images {
            assert!(img >= 1 && img <= n && !seen[img], "not a bijection on 1..n");
            seen[img] = true;
        }
        let inversions = count_inversions(&images);
        Permutation { images, inversions }
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        build(n, &mut current, &mut used, &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `sigma(i)`, 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inversions(&self) -> u32 {
        self.inversions
    }

    /// `(-1)^{inv}`.
    pub fn sign(&self) -> i64 {
        if self.inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn compose(&self, inner: &Permutation) -> Permutation {
        assert_eq!(self.n(), inner.n());
        Permutation::new((1..=self.n()).map(|i| self.image(inner.image(i))).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, "]")
    }
}

fn count_inversions(images: &[usize]) -> u32 {
    let mut inv = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                inv += 1;
            }
        }
    }
    inv
}

fn build(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    if current.len() == n {
        out.push(Permutation::new(current.clone()));
        return;
    }
    for img in 1..=n {
        if !used[img] {
            used[img] = true;
            current.push(img);
            build(n, current, used, out);
            current.pop();
            used[img] = false;
        }
    }
}
