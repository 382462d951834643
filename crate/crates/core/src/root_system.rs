//! Exact root-system combinatorics for the rank ≤ 4 crystallographic types.
//!
//! Roots are integer vectors in the simple-root basis. Coweights are integer
//! vectors in the fundamental-coweight basis, so the pairing of the simple
//! root `α_i` with a coweight is its `i`-th coordinate and every root pairing
//! is integer arithmetic.
//!
//! Conventions (Bourbaki numbering):
//!
//! * `cartan[i][j] = 2(α_i, α_j) / (α_i, α_i)`, so the simple coroot `α_j^∨`
//!   has fundamental-coweight coordinates `cartan[j][·]`.
//! * `symmetrizer[i]` is a positive integer proportional to `(α_i, α_i)`.
//! * The invariant form is normalized so long roots have squared length 2;
//!   the coweight Gram matrix is the inverse of the simple-root Gram matrix.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Cartan–Killing family of a root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
    F,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
            Family::F => 'F',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G" => Ok(Family::G),
            "F" => Ok(Family::F),
            _ => Err(Error::UnsupportedSystem { name: s.to_string() }),
        }
    }
}

/// Type label such as `A2` or `F4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemLabel {
    pub family: Family,
    pub rank: usize,
}

impl SystemLabel {
    pub const fn new(family: Family, rank: usize) -> Self {
        Self { family, rank }
    }

    pub fn is_supported(self) -> bool {
        use Family::*;
        matches!(
            (self.family, self.rank),
            (A, 1..=4) | (B, 2..=4) | (C, 2..=4) | (D, 4) | (G, 2) | (F, 4)
        )
    }
}

/// Every supported type, in a fixed order.
pub const SUPPORTED: [SystemLabel; 13] = [
    SystemLabel::new(Family::A, 1),
    SystemLabel::new(Family::A, 2),
    SystemLabel::new(Family::A, 3),
    SystemLabel::new(Family::A, 4),
    SystemLabel::new(Family::B, 2),
    SystemLabel::new(Family::B, 3),
    SystemLabel::new(Family::B, 4),
    SystemLabel::new(Family::C, 2),
    SystemLabel::new(Family::C, 3),
    SystemLabel::new(Family::C, 4),
    SystemLabel::new(Family::D, 4),
    SystemLabel::new(Family::G, 2),
    SystemLabel::new(Family::F, 4),
];

impl fmt::Display for SystemLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SystemLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unsupported = || Error::UnsupportedSystem { name: s.to_string() };
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let family: Family = head.parse().map_err(|_| unsupported())?;
        let rank: usize = tail.parse().map_err(|_| unsupported())?;
        let label = SystemLabel::new(family, rank);
        if !label.is_supported() {
            return Err(Error::UnsupportedSystem {
                name: label.to_string(),
            });
        }
        Ok(label)
    }
}

impl Serialize for SystemLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Integer vector in the fundamental-coweight basis; encodes a circle subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All coordinates are nonnegative, i.e. the coweight lies in the closed
    /// fundamental chamber.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, m: i64) -> Coweight {
        Coweight(self.0.iter().map(|c| c * m).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Integer vector in the simple-root basis.
pub type Root = Vec<i64>;

/// A semisimple root datum of rank ≤ 4 with all derived data precomputed.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: SystemLabel,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    gram: Vec<Vec<BigRational>>,
    // gram = gram_numer / gram_denom, for fast exact integer maximization
    gram_numer: Vec<Vec<i64>>,
    gram_denom: i64,
}

fn cartan_data(label: SystemLabel) -> (Vec<Vec<i64>>, Vec<i64>) {
    let n = label.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    let sym = match label.family {
        Family::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
            vec![1; n]
        }
        Family::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // α_n short
            link(n - 2, n - 1, -1, -2);
            let mut d = vec![2; n];
            d[n - 1] = 1;
            d
        }
        Family::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // α_n long
            link(n - 2, n - 1, -2, -1);
            let mut d = vec![1; n];
            d[n - 1] = 2;
            d
        }
        Family::D => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -1);
            link(1, 3, -1, -1);
            vec![1; n]
        }
        Family::G => {
            // α_1 short, α_2 long
            link(0, 1, -3, -1);
            vec![1, 3]
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
            vec![2, 2, 1, 1]
        }
    };
    (c, sym)
}

/// Exact inverse by Gauss–Jordan elimination. Panics on a singular input.
pub(crate) fn invert(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular matrix");
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Exact determinant by fraction-preserving elimination.
pub(crate) fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        let pivot_row = a[col].clone();
        for row in a.iter_mut().skip(col + 1) {
            if !row[col].is_zero() {
                let f = &row[col] / &p;
                for (x, q) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * q;
                }
            }
        }
    }
    det
}

impl RootSystem {
    /// Build the root system of the given type.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let label = SystemLabel::new(family, rank);
        if !label.is_supported() {
            return Err(Error::UnsupportedSystem {
                name: label.to_string(),
            });
        }
        let (cartan, symmetrizer) = cartan_data(label);
        let positive_roots = positive_roots_by_reflection(&cartan);

        let dmax = *symmetrizer.iter().max().unwrap();
        let root_gram: Vec<Vec<BigRational>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| BigRational::new(BigInt::from(symmetrizer[i] * cartan[i][j]), BigInt::from(dmax)))
                    .collect()
            })
            .collect();
        let gram = invert(&root_gram);

        let denom = gram.iter().flatten().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let gram_numer = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| {
                        let v = q.numer() * (&denom / q.denom());
                        i64::try_from(v).expect("gram entry fits in i64")
                    })
                    .collect()
            })
            .collect();
        let gram_denom = i64::try_from(denom).expect("gram denominator fits in i64");

        Ok(Self {
            label,
            cartan,
            symmetrizer,
            positive_roots,
            gram,
            gram_numer,
            gram_denom,
        })
    }

    pub fn from_label(label: SystemLabel) -> Result<Self> {
        Self::new(label.family, label.rank)
    }

    pub fn label(&self) -> SystemLabel {
        self.label
    }

    pub fn family(&self) -> Family {
        self.label.family
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Gram matrix of the fundamental coweights.
    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    /// Order of the Weyl group, from the classical table.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank() as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family() {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::G => 12,
            Family::F => 1152,
        }
    }

    /// Number of positive roots, from the classical table.
    pub fn expected_positive_root_count(&self) -> usize {
        let n = self.rank();
        match self.family() {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::G => 6,
            Family::F => 24,
        }
    }

    /// Exponents `m_i` of the group; the degrees of the basic invariants are `m_i + 1`.
    pub fn exponents(&self) -> Vec<u32> {
        let n = self.rank() as u32;
        match self.family() {
            Family::A => (1..=n).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i - 1).collect(),
            Family::D => {
                let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            Family::G => vec![1, 5],
            Family::F => vec![1, 5, 7, 11],
        }
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::Dimension {
                expected: self.rank(),
                got: len,
            });
        }
        Ok(())
    }

    /// `⟨root, ξ⟩ = Σ n_i c_i`.
    pub fn pairing(&self, root: &[i64], xi: &Coweight) -> Result<i64> {
        self.check_dim(root.len())?;
        self.check_dim(xi.rank())?;
        Ok(pair(root, &xi.0))
    }

    /// Exact inner product of two coweights.
    pub fn inner(&self, a: &Coweight, b: &Coweight) -> Result<BigRational> {
        self.check_dim(a.rank())?;
        self.check_dim(b.rank())?;
        Ok(BigRational::new(
            BigInt::from(self.inner_numer(&a.0, &b.0)),
            BigInt::from(self.gram_denom),
        ))
    }

    /// Inner product scaled by [`Self::gram_denominator`]; always an integer.
    pub(crate) fn inner_numer(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.gram_numer[i];
            let s: i128 = b.iter().zip(row).map(|(&bj, &g)| bj as i128 * g as i128).sum();
            acc += ai as i128 * s;
        }
        acc
    }

    pub(crate) fn gram_denominator(&self) -> i64 {
        self.gram_denom
    }

    /// Simple reflection `s_i` acting on a coweight: `ξ - ⟨α_i, ξ⟩ α_i^∨`.
    pub fn reflect_coweight(&self, i: usize, xi: &Coweight) -> Coweight {
        let ci = xi.0[i];
        Coweight(xi.0.iter().zip(&self.cartan[i]).map(|(&c, &a)| c - ci * a).collect())
    }

    /// Simple reflection `s_i` acting on a root in the simple-root basis.
    pub fn reflect_root(&self, i: usize, root: &[i64]) -> Root {
        reflect_root(&self.cartan, i, root)
    }

    /// Visit every point of the Weyl orbit of `ξ` exactly once.
    ///
    /// Each non-dominant point `μ` has a unique parent `s_j μ`, where `j` is
    /// the first coordinate with `μ_j < 0`; walking that tree down from the
    /// dominant representative needs no deduplication.
    pub fn for_each_in_orbit(&self, xi: &Coweight, mut visit: impl FnMut(&[i64])) -> Result<()> {
        let root = self.dominant_representative(xi)?;
        let mut stack = vec![root.0];
        while let Some(v) = stack.pop() {
            for (i, &vi) in v.iter().enumerate() {
                if vi <= 0 {
                    continue;
                }
                let w: Vec<i64> = v.iter().zip(&self.cartan[i]).map(|(&c, &a)| c - vi * a).collect();
                if w.iter().position(|&c| c < 0) == Some(i) {
                    stack.push(w);
                }
            }
            visit(&v);
        }
        Ok(())
    }

    /// Full Weyl orbit of `ξ`, sorted lexicographically.
    pub fn weyl_orbit(&self, xi: &Coweight) -> Result<Vec<Coweight>> {
        let mut orbit = Vec::new();
        self.for_each_in_orbit(xi, |v| orbit.push(Coweight(v.to_vec())))?;
        orbit.sort();
        Ok(orbit)
    }

    /// The unique dominant coweight in the Weyl orbit of `ξ`.
    pub fn dominant_representative(&self, xi: &Coweight) -> Result<Coweight> {
        self.check_dim(xi.rank())?;
        let mut v = xi.clone();
        while let Some(i) = v.0.iter().position(|&c| c < 0) {
            v = self.reflect_coweight(i, &v);
        }
        Ok(v)
    }

    /// Does `ξ` lie in the coroot lattice, i.e. is `θ ↦ exp(2πθξ)` a closed
    /// loop in the simply connected group?
    pub fn in_coroot_lattice(&self, xi: &Coweight) -> Result<bool> {
        self.check_dim(xi.rank())?;
        // ξ = Σ m_j α_j^∨ with c_k = Σ_j m_j cartan[j][k]; solve for m.
        let n = self.rank();
        let ct: Vec<Vec<BigRational>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| BigRational::from_integer(self.cartan[j][k].into()))
                    .collect()
            })
            .collect();
        let inv = invert(&ct);
        Ok(inv.iter().all(|row| {
            let m: BigRational = row
                .iter()
                .zip(&xi.0)
                .map(|(a, &c)| a * BigRational::from_integer(c.into()))
                .sum();
            m.is_integer()
        }))
    }

    /// No positive root pairs to zero with `ξ`.
    pub fn is_regular(&self, xi: &Coweight) -> bool {
        self.positive_roots.iter().all(|r| pair(r, &xi.0) != 0)
    }

    /// `Σ_w t^{2ℓ(w)}` over the parabolic subgroup generated by the simple
    /// reflections listed in `walls`.
    pub fn weyl_poincare(&self, walls: &[usize]) -> Result<Polynomial> {
        for &i in walls {
            if i >= self.rank() {
                return Err(Error::InvalidArgument(format!(
                    "simple root index {i} out of range for rank {}",
                    self.rank()
                )));
            }
        }
        // Elements of W_J are in bijection with the orbit of the regular
        // coweight ρ^∨ = (1, …, 1); BFS depth is the word length.
        let start = Coweight(vec![1; self.rank()]);
        let mut seen = HashSet::new();
        let mut frontier = vec![start.clone()];
        seen.insert(start);
        let mut counts: Vec<i64> = Vec::new();
        while !frontier.is_empty() {
            counts.push(frontier.len() as i64);
            let mut next = Vec::new();
            for v in &frontier {
                for &i in walls {
                    let w = self.reflect_coweight(i, v);
                    if seen.insert(w.clone()) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        let mut coeffs = vec![0; 2 * counts.len() - 1];
        for (len, c) in counts.into_iter().enumerate() {
            coeffs[2 * len] = c;
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Leading principal minors of the coweight Gram matrix.
    pub fn gram_leading_minors(&self) -> Vec<BigRational> {
        (1..=self.rank())
            .map(|k| {
                let sub: Vec<Vec<BigRational>> = self.gram[..k].iter().map(|row| row[..k].to_vec()).collect();
                determinant(&sub)
            })
            .collect()
    }

    /// Enumerate all coweights with coordinates in `[-bound, bound]`.
    pub fn coweight_box(&self, bound: i64) -> impl Iterator<Item = Coweight> + '_ {
        let n = self.rank();
        let side = (2 * bound + 1) as usize;
        let total = side.pow(n as u32);
        (0..total).map(move |mut idx| {
            let mut v = vec![0i64; n];
            for c in v.iter_mut() {
                *c = (idx % side) as i64 - bound;
                idx /= side;
            }
            Coweight(v)
        })
    }
}

pub(crate) fn pair(root: &[i64], xi: &[i64]) -> i64 {
    root.iter().zip(xi).map(|(n, c)| n * c).sum()
}

fn reflect_root(cartan: &[Vec<i64>], i: usize, root: &[i64]) -> Root {
    // ⟨β, α_i^∨⟩ = Σ_j n_j cartan[i][j]
    let k: i64 = root.iter().zip(&cartan[i]).map(|(n, a)| n * a).sum();
    let mut out = root.to_vec();
    out[i] -= k;
    out
}

/// Close the simple roots under simple reflections and keep the positive ones.
fn positive_roots_by_reflection(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut seen: HashSet<Root> = HashSet::new();
    let mut queue: VecDeque<Root> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(r) = queue.pop_front() {
        for i in 0..n {
            let s = reflect_root(cartan, i, &r);
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    let mut pos: Vec<Root> = seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
    pos.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    pos
}

/// Render an exact rational as `p/q` (or `p` when integral).
pub fn fraction_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Floating-point value of an exact rational.
pub fn to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Square root of a nonnegative exact rational, for reporting.
pub fn sqrt_f64(q: &BigRational) -> f64 {
    debug_assert!(!q.is_negative());
    to_f64(q).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn sys(f: Family, r: usize) -> RootSystem {
        RootSystem::new(f, r).unwrap()
    }

    fn bfs_orbit(s: &RootSystem, xi: &Coweight) -> Vec<Coweight> {
        let mut seen: HashSet<Coweight> = HashSet::from([xi.clone()]);
        let mut queue = VecDeque::from([xi.clone()]);
        while let Some(v) = queue.pop_front() {
            for i in 0..s.rank() {
                let w = s.reflect_coweight(i, &v);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut out: Vec<Coweight> = seen.into_iter().collect();
        out.sort();
        out
    }

    #[test]
    fn orbit_walk_matches_breadth_first_closure() {
        for label in SUPPORTED {
            let s = RootSystem::from_label(label).unwrap();
            let bound = if s.rank() <= 2 { 3 } else { 1 };
            for xi in s.coweight_box(bound) {
                assert_eq!(s.weyl_orbit(&xi).unwrap(), bfs_orbit(&s, &xi), "{label} {xi}");
            }
        }
    }

    #[test]
    fn a1_has_one_positive_root() {
        assert_eq!(sys(Family::A, 1).positive_roots(), &[vec![1]]);
    }

    #[test]
    fn a2_positive_roots() {
        let s = sys(Family::A, 2);
        let mut roots = s.positive_roots().to_vec();
        roots.sort();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn g2_highest_root() {
        let s = sys(Family::G, 2);
        assert_eq!(s.positive_roots().len(), 6);
        // highest root of G2 is 3α_1 + 2α_2 with α_1 short
        assert_eq!(s.positive_roots().last().unwrap(), &vec![3, 2]);
    }

    #[test]
    fn unsupported_systems_are_rejected() {
        assert!(matches!(
            RootSystem::new(Family::D, 3),
            Err(Error::UnsupportedSystem { .. })
        ));
        assert!(RootSystem::new(Family::A, 5).is_err());
        assert!(RootSystem::new(Family::G, 3).is_err());
        assert!("E6".parse::<SystemLabel>().is_err());
        assert_eq!("b3".parse::<SystemLabel>().unwrap(), SystemLabel::new(Family::B, 3));
    }

    #[test]
    fn pairing_examples() {
        let a1 = sys(Family::A, 1);
        assert_eq!(a1.pairing(&[1], &Coweight::new(vec![2])).unwrap(), 2);
        let a2 = sys(Family::A, 2);
        assert_eq!(a2.pairing(&[1, 1], &Coweight::new(vec![1, 1])).unwrap(), 2);
        assert_eq!(a2.pairing(&[1, 1], &Coweight::zero(2)).unwrap(), 0);
        assert!(matches!(
            a2.pairing(&[1], &Coweight::new(vec![1, 1])),
            Err(Error::Dimension { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn inner_examples() {
        let a1 = sys(Family::A, 1);
        let coroot = Coweight::new(vec![2]);
        assert_eq!(a1.inner(&coroot, &coroot).unwrap(), q(2, 1));
        assert_eq!(a1.inner(&Coweight::zero(1), &coroot).unwrap(), q(0, 1));
        let a2 = sys(Family::A, 2);
        assert_eq!(
            a2.inner(&Coweight::new(vec![1, 0]), &Coweight::new(vec![0, 1]))
                .unwrap(),
            q(1, 3)
        );
    }

    /// Independent Euclidean realization of A2 inside the sum-zero plane of R^3:
    /// α1 = e1 - e2, α2 = e2 - e3, ω1^∨ = (2,-1,-1)/3, ω2^∨ = (1,1,-2)/3.
    #[test]
    fn a2_gram_matches_euclidean_realization() {
        let w = [[q(2, 3), q(-1, 3), q(-1, 3)], [q(1, 3), q(1, 3), q(-2, 3)]];
        let alpha = [[1, -1, 0], [0, 1, -1]];
        // duality check of the realization itself
        for (i, a) in alpha.iter().enumerate() {
            for (j, wj) in w.iter().enumerate() {
                let p: BigRational = a.iter().zip(wj).map(|(&x, y)| y * q(x, 1)).sum();
                assert_eq!(p, q((i == j) as i64, 1));
            }
        }
        let a2 = sys(Family::A, 2);
        for i in 0..2 {
            for j in 0..2 {
                let dot: BigRational = w[i].iter().zip(&w[j]).map(|(x, y)| x * y).sum();
                assert_eq!(a2.gram()[i][j], dot);
            }
        }
    }

    /// B2 realized in R^2: α1 = e1 - e2 (long), α2 = e2 (short).
    /// Fundamental coweights dual to the simple roots: ω1^∨ = e1, ω2^∨ = e1 + e2.
    #[test]
    fn b2_gram_matches_euclidean_realization() {
        let b2 = sys(Family::B, 2);
        assert_eq!(b2.gram()[0][0], q(1, 1));
        assert_eq!(b2.gram()[0][1], q(1, 1));
        assert_eq!(b2.gram()[1][1], q(2, 1));
    }

    #[test]
    fn weyl_orbit_examples() {
        let a1 = sys(Family::A, 1);
        assert_eq!(
            a1.weyl_orbit(&Coweight::new(vec![2])).unwrap(),
            vec![Coweight::new(vec![-2]), Coweight::new(vec![2])]
        );
        let a2 = sys(Family::A, 2);
        assert_eq!(a2.weyl_orbit(&Coweight::new(vec![1, 1])).unwrap().len(), 6);
        assert_eq!(a2.weyl_orbit(&Coweight::new(vec![1, 0])).unwrap().len(), 3);
        assert_eq!(a2.weyl_orbit(&Coweight::zero(2)).unwrap().len(), 1);
    }

    #[test]
    fn weyl_poincare_examples() {
        let a2 = sys(Family::A, 2);
        assert_eq!(
            a2.weyl_poincare(&[0, 1]).unwrap(),
            Polynomial::new(vec![1, 0, 2, 0, 2, 0, 1])
        );
        assert_eq!(a2.weyl_poincare(&[]).unwrap(), Polynomial::one());
        assert_eq!(
            sys(Family::A, 1).weyl_poincare(&[0]).unwrap(),
            Polynomial::new(vec![1, 0, 1])
        );
        assert!(a2.weyl_poincare(&[2]).is_err());
    }

    #[test]
    fn coroot_lattice_membership() {
        let a1 = sys(Family::A, 1);
        assert!(a1.in_coroot_lattice(&Coweight::new(vec![2])).unwrap());
        assert!(!a1.in_coroot_lattice(&Coweight::new(vec![1])).unwrap());
        let a2 = sys(Family::A, 2);
        assert!(a2.in_coroot_lattice(&Coweight::new(vec![1, 1])).unwrap());
        assert!(!a2.in_coroot_lattice(&Coweight::new(vec![1, 0])).unwrap());
        assert!(a2.in_coroot_lattice(&Coweight::new(vec![3, 0])).unwrap());
        // G2 and F4 have trivial centre: coroot lattice = coweight lattice
        let g2 = sys(Family::G, 2);
        assert!(g2.in_coroot_lattice(&Coweight::new(vec![1, 0])).unwrap());
        assert!(g2.in_coroot_lattice(&Coweight::new(vec![0, 1])).unwrap());
    }

    #[test]
    fn dominant_representative_is_in_orbit() {
        let b3 = sys(Family::B, 3);
        let xi = Coweight::new(vec![-2, 3, -1]);
        let dom = b3.dominant_representative(&xi).unwrap();
        assert!(dom.is_dominant());
        assert!(b3.weyl_orbit(&xi).unwrap().contains(&dom));
    }
}
