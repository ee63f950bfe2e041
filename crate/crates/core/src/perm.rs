//! Permutations of `[n] = {1, …, n}`.
//!
//! Stored in image (one-line) notation: `images[k] = σ(k + 1)`, values 1-based.
//! The preimage-sequence notation `(i₁, …, iₙ)` with `σ(i_k) = k` exists only
//! at the parse/print boundary.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The unique non-identity element of S₂.
    pub fn swap() -> Self {
        Permutation { images: vec![2, 1] }
    }

    /// The adjacent transposition `s_k = (k k+1)` in `S_n`, `1 ≤ k < n`.
    pub fn adjacent(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::InvalidArgument(format!(
                "adjacent transposition s_{k} does not exist in S_{n}"
            )));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(k - 1, k);
        Ok(Permutation { images })
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        check_bijection(&images)?;
        Ok(Permutation { images })
    }

    /// Builds σ from its preimage sequence: `σ(seq[k-1]) = k`.
    pub fn from_preimage_seq(seq: &[usize]) -> Result<Self> {
        check_bijection(seq)?;
        let mut images = vec![0; seq.len()];
        for (k, &x) in seq.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Ok(Permutation { images })
    }

    pub fn preimage_seq(&self) -> Vec<usize> {
        self.inverse().images
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// σ(x), 1-based.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// σ⁻¹(x), 1-based.
    pub fn apply_inverse(&self, x: usize) -> usize {
        self.images.iter().position(|&v| v == x).expect("x in range") + 1
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    /// `στ` with `(στ)(x) = σ(τ(x))`.
    pub fn compose(&self, tau: &Permutation) -> Result<Self> {
        if self.degree() != tau.degree() {
            return Err(Error::InvalidArgument(format!(
                "cannot compose permutations of degree {} and {}",
                self.degree(),
                tau.degree()
            )));
        }
        Ok(Permutation {
            images: tau.images.iter().map(|&t| self.images[t - 1]).collect(),
        })
    }

    /// Partial composition `φ ∘ᵢ σ` in the associative operad.
    ///
    /// Inputs `i..i+n-1` form a block sent to outputs `φ(i)..φ(i)+n-1` through σ;
    /// every other input follows φ on the collapsed position, with outputs above
    /// `φ(i)` shifted by `n - 1`. For `n = 0` the input `i` is deleted.
    pub fn block_substitute(&self, i: usize, sigma: &Permutation) -> Result<Self> {
        let m = self.degree();
        let n = sigma.degree();
        if i == 0 || i > m {
            return Err(Error::InvalidArgument(format!(
                "position {i} out of range for degree {m}"
            )));
        }
        let anchor = self.apply(i);
        let shift = |v: usize| if v > anchor { v + n - 1 } else { v };
        let mut images = Vec::with_capacity(m + n - 1);
        for x in 1..i {
            images.push(shift(self.apply(x)));
        }
        for x in 1..=n {
            images.push(anchor - 1 + sigma.apply(x));
        }
        for x in i + 1..=m {
            images.push(shift(self.apply(x)));
        }
        Ok(Permutation { images })
    }

    /// The shuffle `c_I` whose preimage sequence lists `I` first, then the
    /// complement of `I`, both in increasing order.
    pub fn subset_shuffle(n: usize, subset: &[usize]) -> Result<Self> {
        if subset.windows(2).any(|w| w[0] >= w[1]) || subset.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::InvalidArgument(format!(
                "{subset:?} is not a strictly increasing subset of [{n}]"
            )));
        }
        let mut seq = subset.to_vec();
        seq.extend((1..=n).filter(|x| !subset.contains(x)));
        Permutation::from_preimage_seq(&seq)
    }

    /// Indices `k` with `σ = s_{k₁} ∘ s_{k₂} ∘ … ∘ s_{k_r}`.
    ///
    /// For a right action this means `θ ∗ σ = (…(θ ∗ s_{k₁}) ∗ …) ∗ s_{k_r}`.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        // Bubble-sort the image array by right multiplication with s_k;
        // σ s_{b₁} … s_{b_r} = id gives σ = s_{b_r} … s_{b₁}.
        let mut images = self.images.clone();
        let mut performed = Vec::new();
        let n = images.len();
        for pass in 0..n {
            for k in 0..n.saturating_sub(1 + pass) {
                if images[k] > images[k + 1] {
                    images.swap(k, k + 1);
                    performed.push(k + 1);
                }
            }
        }
        performed.reverse();
        performed
    }

    /// All elements of `S_n` in lexicographic order of their images.
    pub fn all(n: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (1..=n).permutations(n).map(|images| Permutation { images }).collect()
    }
}

fn check_bijection(values: &[usize]) -> Result<()> {
    let n = values.len();
    let mut seen = vec![false; n];
    for &v in values {
        if v == 0 || v > n || seen[v - 1] {
            return Err(Error::InvalidArgument(format!(
                "{values:?} is not a permutation of [{n}]"
            )));
        }
        seen[v - 1] = true;
    }
    Ok(())
}

/// Preimage-sequence notation `(i1,...,in)`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq: Vec<String> = self.preimage_seq().iter().map(ToString::to_string).collect();
        write!(f, "({})", seq.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pre(seq: &[usize]) -> Permutation {
        Permutation::from_preimage_seq(seq).unwrap()
    }

    #[test]
    fn preimage_sequences() {
        assert_eq!(pre(&[1, 2, 3]), Permutation::identity(3));
        assert_eq!(pre(&[2, 1]), Permutation::swap());
        // σ(i_k) = k pointwise.
        let s = pre(&[3, 1, 2]);
        assert_eq!((s.apply(3), s.apply(1), s.apply(2)), (1, 2, 3));
        assert_eq!(s.preimage_seq(), vec![3, 1, 2]);
        assert_eq!(s.to_string(), "(3,1,2)");
        assert!(Permutation::from_preimage_seq(&[1, 1]).is_err());
        assert!(Permutation::from_preimage_seq(&[0, 1]).is_err());
        assert_eq!(Permutation::identity(0).degree(), 0);
    }

    #[test]
    fn preimage_notation_round_trips() {
        for n in 0..=6 {
            for s in Permutation::all(n) {
                assert_eq!(pre(&s.preimage_seq()), s);
            }
        }
    }

    #[test]
    fn composition_basics() {
        let sw = Permutation::swap();
        assert!(sw.compose(&sw).unwrap().is_identity());
        let s = pre(&[3, 1, 2]);
        assert_eq!(s.compose(&Permutation::identity(3)).unwrap(), s);
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert!(s.compose(&sw).is_err());
        let s3 = Permutation::all(3);
        for a in &s3 {
            for b in &s3 {
                for c in &s3 {
                    let left = a.compose(b).unwrap().compose(c).unwrap();
                    let right = a.compose(&b.compose(c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn block_substitute_into_identity_matches_shift_formula() {
        for m in 1..=4 {
            for i in 1..=m {
                for n in 1..=4 {
                    for s in Permutation::all(n) {
                        let sp = Permutation::identity(m).block_substitute(i, &s).unwrap();
                        for k in 1..=n {
                            assert_eq!(sp.apply_inverse(k + i - 1), s.apply_inverse(k) + i - 1);
                        }
                        for x in (1..i).chain(i + n..m + n) {
                            assert_eq!(sp.apply(x), x);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn block_substitute_unit_and_errors() {
        for phi in Permutation::all(3) {
            for i in 1..=3 {
                assert_eq!(phi.block_substitute(i, &Permutation::identity(1)).unwrap(), phi);
            }
        }
        assert!(Permutation::identity(2)
            .block_substitute(3, &Permutation::identity(1))
            .is_err());
        assert!(Permutation::identity(2)
            .block_substitute(0, &Permutation::identity(1))
            .is_err());
    }

    /// Brute force: the family of block substitutions makes S an operad
    /// (both associativity equations and both equivariance equations).
    #[test]
    fn permutations_form_an_operad() {
        let max = 4;
        let perms: Vec<Vec<Permutation>> = (0..=max).map(Permutation::all).collect();
        for l in 1..=max {
            for m in 0..=max {
                for n in 0..=max {
                    if l + m + n > 8 {
                        continue;
                    }
                    for lam in &perms[l] {
                        for mu in &perms[m] {
                            for nu in &perms[n] {
                                for i in 1..=l {
                                    for j in 1..=m {
                                        let lhs = lam
                                            .block_substitute(i, mu)
                                            .unwrap()
                                            .block_substitute(i - 1 + j, nu)
                                            .unwrap();
                                        let rhs =
                                            lam.block_substitute(i, &mu.block_substitute(j, nu).unwrap()).unwrap();
                                        assert_eq!(lhs, rhs);
                                    }
                                    for k in i + 1..=l {
                                        let lhs = lam
                                            .block_substitute(i, mu)
                                            .unwrap()
                                            .block_substitute(k - 1 + m, nu)
                                            .unwrap();
                                        let rhs = lam.block_substitute(k, nu).unwrap().block_substitute(i, mu).unwrap();
                                        assert_eq!(lhs, rhs);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        // Equivariance, with the right action θ ∗ σ = θσ.
        for m in 1..=4 {
            for n in 0..=4 {
                for mu in &perms[m] {
                    for nu in &perms[n] {
                        for i in 1..=m {
                            for s in &perms[n] {
                                let sp = Permutation::identity(m).block_substitute(i, s).unwrap();
                                let lhs = mu.block_substitute(i, &nu.compose(s).unwrap()).unwrap();
                                let rhs = mu.block_substitute(i, nu).unwrap().compose(&sp).unwrap();
                                assert_eq!(lhs, rhs);
                            }
                            for phi in &perms[m] {
                                let pp = phi.block_substitute(i, &Permutation::identity(n)).unwrap();
                                let lhs = mu.compose(phi).unwrap().block_substitute(i, nu).unwrap();
                                let rhs = mu.block_substitute(phi.apply(i), nu).unwrap().compose(&pp).unwrap();
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn subset_shuffles() {
        for n in 0..=5 {
            let all: Vec<usize> = (1..=n).collect();
            assert!(Permutation::subset_shuffle(n, &all).unwrap().is_identity());
        }
        assert_eq!(
            Permutation::subset_shuffle(3, &[2]).unwrap().preimage_seq(),
            vec![2, 1, 3]
        );
        // c_{i1 i2} = (i1, i2, 1, …, î1, …, î2, …, n) with i1 = 1, i2 = 3, n = 4.
        assert_eq!(
            Permutation::subset_shuffle(4, &[1, 3]).unwrap().preimage_seq(),
            vec![1, 3, 2, 4]
        );
        assert!(Permutation::subset_shuffle(3, &[2, 1]).is_err());
        assert!(Permutation::subset_shuffle(3, &[4]).is_err());
    }

    #[test]
    fn subset_shuffle_sends_subset_to_front() {
        use itertools::Itertools;
        for n in 0..=6 {
            for k in 0..=n {
                for subset in (1..=n).combinations(k) {
                    let c = Permutation::subset_shuffle(n, &subset).unwrap();
                    for (pos, &x) in subset.iter().enumerate() {
                        assert_eq!(c.apply(x), pos + 1);
                    }
                    let rest: Vec<usize> = (1..=n).filter(|x| !subset.contains(x)).collect();
                    for (pos, &x) in rest.iter().enumerate() {
                        assert_eq!(c.apply(x), k + pos + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn adjacent_factorization_reassembles() {
        for n in 0..=5 {
            for s in Permutation::all(n) {
                let mut acc = Permutation::identity(n);
                for k in s.adjacent_factorization() {
                    acc = acc.compose(&Permutation::adjacent(n, k).unwrap()).unwrap();
                }
                assert_eq!(acc, s);
            }
        }
    }
}
