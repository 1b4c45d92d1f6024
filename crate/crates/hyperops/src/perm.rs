//! Permutations on 1..n (stored 0-based). Composition is left to right:
//! `p.then(q)` applies `p` first. Cycle notation on the text surface is
//! 1-based, e.g. `(1,2,3,4,5)(6,7)`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("images are not a bijection on 1..{0}")]
    NotBijective(usize),
    #[error("point {point} out of range 1..{degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated in cycle specification")]
    Repeated(usize),
    #[error("cannot parse cycles from {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { images: (0..degree).collect() }
    }

    /// From a 0-based image array.
    pub fn from_images(images: Vec<usize>) -> Result<Perm, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijective(n));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// From a 1-based image array (the JSON wire format).
    pub fn from_one_based(images: &[usize]) -> Result<Perm, PermError> {
        let n = images.len();
        let mut zero = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(PermError::OutOfRange { point: x, degree: n });
            }
            zero.push(x - 1);
        }
        Perm::from_images(zero)
    }

    /// From disjoint cycles of 1-based points; unmentioned points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = cycle[window];
                let to = cycle[(window + 1) % cycle.len()];
                for p in [from, to] {
                    if p == 0 || p > degree {
                        return Err(PermError::OutOfRange { point: p, degree });
                    }
                }
                if seen[from - 1] {
                    return Err(PermError::Repeated(from));
                }
                seen[from - 1] = true;
                images[from - 1] = to - 1;
            }
        }
        Perm::from_images(images)
    }

    /// Parses cycle notation like `(1,2,3)(4,5)`; `()` or blank is the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm, PermError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(PermError::Parse(s.to_string()));
            };
            let Some(close) = stripped.find(')') else {
                return Err(PermError::Parse(s.to_string()));
            };
            let inner = &stripped[..close];
            if !inner.is_empty() {
                let cycle: Result<Vec<usize>, _> = inner
                    .split(',')
                    .map(|p| p.parse::<usize>().map_err(|_| PermError::Parse(s.to_string())))
                    .collect();
                cycles.push(cycle?);
            }
            rest = &stripped[close + 1..];
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based image array for the JSON wire format.
    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    /// Left-to-right composition: (self.then(q))(i) = q(self(i)).
    pub fn then(&self, q: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), q.degree());
        Perm { images: self.images.iter().map(|&x| q.images[x]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut point = self.images[start];
            while point != start {
                seen[point] = true;
                cycle.push(point);
                point = self.images[point];
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn pow(&self, k: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    /// Conjugate c^-1 * self * c (left-to-right).
    pub fn conjugated_by(&self, c: &Perm) -> Perm {
        c.inverse().then(self).then(c)
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.then(other) == other.then(self)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<usize>> =
            self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return f.write_str("()");
        }
        for cycle in nontrivial {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Orbits of 1..n under a set of permutations (as sorted point lists).
pub fn orbits(degree: usize, gens: &[&Perm]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < orbit.len() {
            let point = orbit[head];
            head += 1;
            for g in gens {
                let image = g.apply(point);
                if !seen[image] {
                    seen[image] = true;
                    orbit.push(image);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

pub fn is_transitive(degree: usize, gens: &[&Perm]) -> bool {
    degree == 0 || orbits(degree, gens).len() == 1
}
