use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::algebra::Generator;

/// A PBW basis monomial `I(-m_1)…I(-m_k) L(-n_1)…L(-n_s) 𝟏` with
/// `m_1 ≥ … ≥ m_k > 0` and `n_1 ≥ … ≥ n_s > 0`.
///
/// Monomials are ordered by degree, then lexicographically as words in
/// their factors, where every `I` factor precedes every `L` factor and,
/// within one kind, a larger index precedes a smaller one. In degree 2 this
/// gives `I(-2), I(-1)², I(-1)L(-1), L(-2), L(-1)²`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    i_part: Vec<u32>,
    l_part: Vec<u32>,
}

/// Which family a PBW factor belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorKind {
    I,
    L,
}

impl Monomial {
    /// The highest-weight vector `𝟏`.
    pub fn vacuum() -> Self {
        Self::default()
    }

    /// Builds a monomial from arbitrary-order positive parts.
    pub fn new(mut i_part: Vec<u32>, mut l_part: Vec<u32>) -> Self {
        assert!(
            i_part.iter().chain(&l_part).all(|&x| x > 0),
            "PBW indices must be positive"
        );
        i_part.sort_unstable_by(|a, b| b.cmp(a));
        l_part.sort_unstable_by(|a, b| b.cmp(a));
        Self { i_part, l_part }
    }

    pub fn i_part(&self) -> &[u32] {
        &self.i_part
    }

    pub fn l_part(&self) -> &[u32] {
        &self.l_part
    }

    pub fn degree(&self) -> u32 {
        self.i_part.iter().sum::<u32>() + self.l_part.iter().sum::<u32>()
    }

    /// Number of `I` factors.
    pub fn i_degree(&self) -> usize {
        self.i_part.len()
    }

    /// Total number of factors.
    pub fn length(&self) -> usize {
        self.i_part.len() + self.l_part.len()
    }

    pub fn is_vacuum(&self) -> bool {
        self.i_part.is_empty() && self.l_part.is_empty()
    }

    pub fn is_pure_i(&self) -> bool {
        self.l_part.is_empty()
    }

    fn part(&self, kind: FactorKind) -> &[u32] {
        match kind {
            FactorKind::I => &self.i_part,
            FactorKind::L => &self.l_part,
        }
    }

    /// Multiplicity of the factor `I(-index)` or `L(-index)`.
    pub fn multiplicity(&self, kind: FactorKind, index: u32) -> usize {
        self.part(kind).iter().filter(|&&x| x == index).count()
    }

    pub fn contains(&self, kind: FactorKind, index: u32) -> bool {
        self.multiplicity(kind, index) > 0
    }

    /// The factors from left to right as negative-degree generators.
    pub fn factors(&self) -> impl DoubleEndedIterator<Item = Generator> + '_ {
        self.i_part
            .iter()
            .map(|&m| Generator::I(-(m as i64)))
            .chain(self.l_part.iter().map(|&n| Generator::L(-(n as i64))))
    }

    /// Splits off the leftmost factor: `self = f · rest`.
    pub fn split_first(&self) -> Option<(Generator, Monomial)> {
        if let Some((&m, rest)) = self.i_part.split_first() {
            Some((
                Generator::I(-(m as i64)),
                Monomial {
                    i_part: rest.to_vec(),
                    l_part: self.l_part.clone(),
                },
            ))
        } else {
            let (&n, rest) = self.l_part.split_first()?;
            Some((
                Generator::L(-(n as i64)),
                Monomial {
                    i_part: Vec::new(),
                    l_part: rest.to_vec(),
                },
            ))
        }
    }

    /// `I(-m) · self`, which is already normal ordered after sorting.
    pub(crate) fn with_i(&self, m: u32) -> Monomial {
        let mut i_part = self.i_part.clone();
        let pos = i_part.iter().position(|&x| x < m).unwrap_or(i_part.len());
        i_part.insert(pos, m);
        Monomial {
            i_part,
            l_part: self.l_part.clone(),
        }
    }

    /// `L(-n) · self` when no reordering is needed, i.e. `self` has no `I`
    /// factors and `n` is at least the leading `L` index.
    pub(crate) fn prepend_l(&self, n: u32) -> Option<Monomial> {
        if !self.i_part.is_empty() || self.l_part.first().is_some_and(|&x| x > n) {
            return None;
        }
        let mut l_part = Vec::with_capacity(self.l_part.len() + 1);
        l_part.push(n);
        l_part.extend_from_slice(&self.l_part);
        Some(Monomial {
            i_part: Vec::new(),
            l_part,
        })
    }

    /// Removes one occurrence of the given factor.
    pub(crate) fn without(&self, kind: FactorKind, index: u32) -> Option<Monomial> {
        let mut out = self.clone();
        let part = match kind {
            FactorKind::I => &mut out.i_part,
            FactorKind::L => &mut out.l_part,
        };
        let pos = part.iter().position(|&x| x == index)?;
        part.remove(pos);
        Some(out)
    }

    fn word_cmp(&self, other: &Self) -> Ordering {
        let key = |g: Generator| match g {
            Generator::I(n) => (0u8, n),
            Generator::L(n) => (1u8, n),
            _ => unreachable!("PBW factors are never central"),
        };
        self.factors().map(key).cmp(other.factors().map(key))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.word_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `I(-1)^2 L(-3) 𝟏`; the vacuum renders as `𝟏`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_part = |f: &mut fmt::Formatter<'_>, sym: char, part: &[u32]| {
            let mut i = 0;
            while i < part.len() {
                let j = part[i..].iter().take_while(|&&x| x == part[i]).count();
                if j == 1 {
                    write!(f, "{sym}(-{}) ", part[i])?;
                } else {
                    write!(f, "{sym}(-{})^{j} ", part[i])?;
                }
                i += j;
            }
            Ok(())
        };
        write_part(f, 'I', &self.i_part)?;
        write_part(f, 'L', &self.l_part)?;
        f.write_str("𝟏")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` as weakly decreasing lists, in reverse
/// lexicographic order (`[n]` first).
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The PBW monomials of degree `n` in canonical order.
pub fn basis_of_degree(n: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=n {
        let lparts = partitions(n - a);
        for ip in partitions(a) {
            for lp in &lparts {
                out.push(Monomial {
                    i_part: ip.clone(),
                    l_part: lp.clone(),
                });
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn m(i: &[u32], l: &[u32]) -> Monomial {
        Monomial::new(i.to_vec(), l.to_vec())
    }

    #[test]
    fn low_degree_bases() {
        assert_eq!(basis_of_degree(0), vec![Monomial::vacuum()]);
        assert_eq!(basis_of_degree(1), vec![m(&[1], &[]), m(&[], &[1])]);
        assert_eq!(
            basis_of_degree(2),
            vec![
                m(&[2], &[]),
                m(&[1, 1], &[]),
                m(&[1], &[1]),
                m(&[], &[2]),
                m(&[], &[1, 1]),
            ]
        );
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn gradings() {
        let x = m(&[3, 1, 1], &[2]);
        assert_eq!(x.degree(), 7);
        assert_eq!(x.i_degree(), 3);
        assert_eq!(x.length(), 4);
        assert_eq!(x.multiplicity(FactorKind::I, 1), 2);
        assert!(!x.is_pure_i());
    }

    #[test]
    fn rendering() {
        assert_eq!(Monomial::vacuum().to_string(), "𝟏");
        assert_eq!(m(&[1], &[]).to_string(), "I(-1) 𝟏");
        assert_eq!(m(&[1, 1], &[3]).to_string(), "I(-1)^2 L(-3) 𝟏");
    }

    #[test]
    fn split_first_takes_leftmost_factor() {
        let x = m(&[2, 1], &[1]);
        let (f, rest) = x.split_first().unwrap();
        assert_eq!(f, Generator::I(-2));
        assert_eq!(rest, m(&[1], &[1]));
        let (f, rest) = m(&[], &[3, 1]).split_first().unwrap();
        assert_eq!(f, Generator::L(-3));
        assert_eq!(rest, m(&[], &[1]));
        assert!(Monomial::vacuum().split_first().is_none());
    }
}
