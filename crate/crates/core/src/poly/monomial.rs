use std::cmp::Ordering;
use std::fmt;

/// A power product `x_{v0}^{e0} * x_{v1}^{e1} * ...` stored sparsely.
///
/// Pairs are sorted by variable index and no exponent is zero, so the
/// constant monomial `1` is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    powers: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { powers: Vec::new() }
    }

    pub fn var(index: usize) -> Self {
        Monomial {
            powers: vec![(index, 1)],
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order.
    /// Repeated variables are multiplied together; zero exponents dropped.
    pub fn from_powers<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut powers: Vec<(usize, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        powers.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(usize, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { powers: merged }
    }

    /// Dense exponent vector; entry `i` is the exponent of variable `i`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            powers: exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (v, e))
                .collect(),
        }
    }

    pub fn to_exponents(&self, nvars: usize) -> Vec<u32> {
        let mut out = vec![0; nvars];
        for &(v, e) in &self.powers {
            out[v] = e;
        }
        out
    }

    pub fn powers(&self) -> &[(usize, u32)] {
        &self.powers
    }

    pub fn degree(&self) -> u32 {
        self.powers.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.powers
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.powers[i].1)
            .unwrap_or(0)
    }

    /// Variables with positive exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.powers.iter().map(|&(v, _)| v)
    }

    /// One past the largest variable index used, or 0 for the constant.
    pub fn var_bound(&self) -> usize {
        self.powers.last().map(|&(v, _)| v + 1).unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_powers(self.powers.iter().chain(other.powers.iter()).copied())
    }

    /// `self / x_var`, or `None` if `var` does not divide `self`.
    pub fn div_var(&self, var: usize) -> Option<Monomial> {
        let pos = self.powers.binary_search_by_key(&var, |&(v, _)| v).ok()?;
        let mut powers = self.powers.clone();
        if powers[pos].1 == 1 {
            powers.remove(pos);
        } else {
            powers[pos].1 -= 1;
        }
        Some(Monomial { powers })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.powers.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_powers(other.powers.iter().map(|&(v, e)| (v, e - self.exponent(v)))))
    }

    /// The single variable of a degree-1 monomial.
    pub fn as_var(&self) -> Option<usize> {
        match self.powers.as_slice() {
            [(v, 1)] => Some(*v),
            _ => None,
        }
    }

    pub(crate) fn remap(&self, map: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_powers(self.powers.iter().map(|&(v, e)| (map(v), e)))
    }
}

/// Graded lexicographic order with `x0 > x1 > ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.powers.iter().peekable(), other.powers.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        return Ordering::Greater;
                    }
                    if vb < va {
                        return Ordering::Less;
                    }
                    match ea.cmp(&eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        ord => return ord,
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
