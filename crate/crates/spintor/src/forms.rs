//! Sparse exterior algebra over Euclidean R^n.
//!
//! A k-form is stored as a map from strictly increasing 1-based index tuples
//! to real coefficients relative to the orthonormal coordinate frame, so the
//! squared norm is simply the sum of squared coefficients. Everything here is
//! pure value semantics.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ExteriorForm {
    n: usize,
    k: usize,
    coeffs: BTreeMap<Vec<usize>, f64>,
}

/// Sort an index tuple into increasing order, tracking the permutation sign.
/// Returns `None` when an index repeats (the alternating coefficient is zero).
fn sort_signed(indices: &[usize]) -> Option<(Vec<usize>, f64)> {
    let mut v = indices.to_vec();
    let mut sign = 1.0;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

impl ExteriorForm {
    /// The zero form of the given grade.
    pub fn zero(n: usize, k: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("ambient dimension must be ≥ 1".into()));
        }
        if k > n {
            return Err(Error::InvalidParameter(format!("grade {k} exceeds dimension {n}")));
        }
        Ok(Self { n, k, coeffs: BTreeMap::new() })
    }

    /// The constant 0-form with value `c`.
    pub fn scalar(n: usize, c: f64) -> Result<Self> {
        let mut f = Self::zero(n, 0)?;
        if c != 0.0 {
            f.coeffs.insert(Vec::new(), c);
        }
        Ok(f)
    }

    /// `coeff · e_{i1} ∧ … ∧ e_{ik}` for 1-based indices in any order
    /// (sign normalized; repeated indices give the zero form).
    pub fn monomial(n: usize, indices: &[usize], coeff: f64) -> Result<Self> {
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::InvalidIndex(format!("index {i} not in 1..={n}")));
            }
        }
        let mut f = Self::zero(n, indices.len())?;
        if let Some((key, sign)) = sort_signed(indices) {
            if coeff != 0.0 {
                f.coeffs.insert(key, sign * coeff);
            }
        }
        Ok(f)
    }

    /// Sum of monomials of a common grade.
    pub fn from_terms(n: usize, k: usize, terms: &[(Vec<usize>, f64)]) -> Result<Self> {
        let mut acc = Self::zero(n, k)?;
        for (indices, coeff) in terms {
            if indices.len() != k {
                return Err(Error::InvalidParameter(format!(
                    "term of length {} in a grade-{k} form",
                    indices.len()
                )));
            }
            acc = acc.add(&Self::monomial(n, indices, *coeff)?)?;
        }
        Ok(acc)
    }

    /// A k-form with an independent uniform coefficient in [−1, 1] on every
    /// increasing index tuple; used for randomized identity checking.
    pub fn random<R: rand::Rng>(n: usize, k: usize, rng: &mut R) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParameter(format!(
                "random form needs 1 ≤ k ≤ n, got k = {k}, n = {n}"
            )));
        }
        let mut form = Self::zero(n, k)?;
        let mut idx: Vec<usize> = (1..=k).collect();
        loop {
            let coeff = rng.gen_range(-1.0..=1.0);
            form = form.add(&Self::monomial(n, &idx, coeff)?)?;
            // Advance to the next increasing tuple, rightmost digit first.
            let mut p = k;
            loop {
                if p == 0 {
                    return Ok(form);
                }
                if idx[p - 1] < n - (k - p) {
                    idx[p - 1] += 1;
                    for q in p..k {
                        idx[q] = idx[q - 1] + 1;
                    }
                    break;
                }
                p -= 1;
            }
        }
    }

    /// The 1-form (equivalently, vector) with the given components.
    pub fn one_form(n: usize, components: &[f64]) -> Result<Self> {
        if components.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} components for a 1-form on R^{n}",
                components.len()
            )));
        }
        let mut f = Self::zero(n, 1)?;
        for (i, &c) in components.iter().enumerate() {
            if c != 0.0 {
                f.coeffs.insert(vec![i + 1], c);
            }
        }
        Ok(f)
    }

    /// The frame 1-form e_i (1-based).
    pub fn basis(n: usize, i: usize) -> Result<Self> {
        Self::monomial(n, &[i], 1.0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grade(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterate over (increasing index tuple, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], f64)> {
        self.coeffs.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    /// Signed coefficient lookup for an arbitrary index tuple.
    pub fn coeff(&self, indices: &[usize]) -> f64 {
        if indices.len() != self.k {
            return 0.0;
        }
        match sort_signed(indices) {
            None => 0.0,
            Some((key, sign)) => sign * self.coeffs.get(&key).copied().unwrap_or(0.0),
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "forms on R^{} and R^{}",
                self.n, other.n
            )));
        }
        if self.k != other.k {
            return Err(Error::DimensionMismatch(format!(
                "grade {} vs grade {}",
                self.k, other.k
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut coeffs = self.coeffs.clone();
        for (key, &c) in &other.coeffs {
            let entry = coeffs.entry(key.clone()).or_insert(0.0);
            *entry += c;
            if *entry == 0.0 {
                coeffs.remove(key);
            }
        }
        Ok(Self { n: self.n, k: self.k, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, c: f64) -> Self {
        if c == 0.0 {
            return Self { n: self.n, k: self.k, coeffs: BTreeMap::new() };
        }
        let coeffs = self.coeffs.iter().map(|(k, &v)| (k.clone(), c * v)).collect();
        Self { n: self.n, k: self.k, coeffs }
    }

    /// Exterior product. When the grades add up beyond n the result is the
    /// zero form (clamped to grade n).
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "forms on R^{} and R^{}",
                self.n, other.n
            )));
        }
        let k = self.k + other.k;
        if k > self.n {
            return Self::zero(self.n, self.n);
        }
        let mut coeffs: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
        for (ka, &ca) in &self.coeffs {
            for (kb, &cb) in &other.coeffs {
                let mut merged = ka.clone();
                merged.extend_from_slice(kb);
                if let Some((key, sign)) = sort_signed(&merged) {
                    let entry = coeffs.entry(key).or_insert(0.0);
                    *entry += sign * ca * cb;
                }
            }
        }
        coeffs.retain(|_, v| *v != 0.0);
        Ok(Self { n: self.n, k, coeffs })
    }

    /// Interior product with a frame vector e_i (1-based).
    pub fn interior_basis(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.n {
            return Err(Error::InvalidIndex(format!("index {i} not in 1..={}", self.n)));
        }
        if self.k == 0 {
            return Self::zero(self.n, 0);
        }
        let mut out = Self::zero(self.n, self.k - 1)?;
        for (key, &c) in &self.coeffs {
            if let Some(pos) = key.iter().position(|&j| j == i) {
                let mut rest = key.clone();
                rest.remove(pos);
                let sign = if pos % 2 == 0 { 1.0 } else { -1.0 };
                let entry = out.coeffs.entry(rest).or_insert(0.0);
                *entry += sign * c;
            }
        }
        out.coeffs.retain(|_, v| *v != 0.0);
        Ok(out)
    }

    /// Interior product with an arbitrary vector.
    pub fn interior(&self, x: &[f64]) -> Result<Self> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} contracted into a form on R^{}",
                x.len(),
                self.n
            )));
        }
        if self.k == 0 {
            return Self::zero(self.n, 0);
        }
        let mut acc = Self::zero(self.n, self.k - 1)?;
        for (i, &xi) in x.iter().enumerate() {
            if xi != 0.0 {
                acc = acc.add(&self.interior_basis(i + 1)?.scale(xi))?;
            }
        }
        Ok(acc)
    }

    /// The 4-form (1/2) Σ_i (e_i ⌟ T) ∧ (e_i ⌟ T) attached to a 3-form T.
    /// Vanishes identically when n = 4.
    pub fn sigma_t(&self) -> Result<Self> {
        if self.k != 3 {
            return Err(Error::InvalidParameter(format!(
                "sigma is defined for 3-forms, got grade {}",
                self.k
            )));
        }
        let mut acc = Self::zero(self.n, 4.min(self.n))?;
        for i in 1..=self.n {
            let contraction = self.interior_basis(i)?;
            acc = acc.add(&contraction.wedge(&contraction)?)?;
        }
        Ok(acc.scale(0.5))
    }

    /// Squared norm: sum of squared coefficients over increasing tuples.
    pub fn norm_sq(&self) -> f64 {
        self.coeffs.values().map(|c| c * c).sum()
    }

    /// For a 3-form T: the vector T(e_i, e_j, ·)♯, antisymmetric in (i, j).
    pub fn contract_pair(&self, i: usize, j: usize) -> Result<Vec<f64>> {
        if self.k != 3 {
            return Err(Error::InvalidParameter(format!(
                "pair contraction is defined for 3-forms, got grade {}",
                self.k
            )));
        }
        for idx in [i, j] {
            if idx == 0 || idx > self.n {
                return Err(Error::InvalidIndex(format!("index {idx} not in 1..={}", self.n)));
            }
        }
        Ok((1..=self.n).map(|m| self.coeff(&[i, j, m])).collect())
    }

    /// Re-embed into R^{n_new} with all indices shifted up by `offset`
    /// (used to place block torsions on disjoint index ranges).
    pub fn embed(&self, n_new: usize, offset: usize) -> Result<Self> {
        let max_needed = self.coeffs.keys().flatten().copied().max().unwrap_or(0) + offset;
        if max_needed > n_new || self.n + offset > n_new {
            return Err(Error::DimensionMismatch(format!(
                "cannot embed a form on R^{} with offset {offset} into R^{n_new}",
                self.n
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(key, &c)| (key.iter().map(|&i| i + offset).collect(), c))
            .collect();
        Ok(Self { n: n_new, k: self.k, coeffs })
    }

    /// Largest absolute coefficient difference against another form of the
    /// same shape; the comparison metric used by tolerance-based tests.
    pub fn max_coeff_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other)?;
        let mut keys: Vec<&Vec<usize>> = self.coeffs.keys().collect();
        keys.extend(other.coeffs.keys());
        let mut worst = 0.0f64;
        for key in keys {
            let a = self.coeffs.get(key).copied().unwrap_or(0.0);
            let b = other.coeffs.get(key).copied().unwrap_or(0.0);
            worst = worst.max((a - b).abs());
        }
        Ok(worst)
    }

    /// Largest absolute coefficient.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.values().fold(0.0f64, |m, c| m.max(c.abs()))
    }
}

impl fmt::Display for ExteriorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, c) in &self.coeffs {
            if !first {
                write!(f, " {} ", if *c < 0.0 { "-" } else { "+" })?;
            } else {
                if *c < 0.0 {
                    write!(f, "-")?;
                }
                first = false;
            }
            let mag = c.abs();
            if key.is_empty() {
                write!(f, "{mag}")?;
            } else {
                let labels: Vec<String> = key.iter().map(|i| i.to_string()).collect();
                if (mag - 1.0).abs() > 1e-12 {
                    write!(f, "{mag}*")?;
                }
                write!(f, "e({})", labels.join(","))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// Enumerate all strictly increasing k-tuples from 1..=n.
    fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        let mut stack = vec![(Vec::new(), 1usize)];
        while let Some((prefix, start)) = stack.pop() {
            if prefix.len() == k {
                out.push(prefix);
                continue;
            }
            for i in start..=n {
                let mut next = prefix.clone();
                next.push(i);
                stack.push((next, i + 1));
            }
        }
        out.sort();
        out
    }

    /// Independent wedge oracle: evaluate (a ∧ b) on an increasing tuple by the
    /// shuffle formula, Σ over p-subsets S of the tuple of sign(S)·a(S)·b(S^c).
    fn wedge_oracle_value(a: &ExteriorForm, b: &ExteriorForm, tuple: &[usize]) -> f64 {
        let p = a.grade();
        let total = tuple.len();
        assert_eq!(total, p + b.grade());
        let mut sum = 0.0;
        for subset in increasing_tuples(total, p) {
            // subset holds 1-based positions into `tuple`
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut in_subset = vec![false; total];
            for &pos in &subset {
                in_subset[pos - 1] = true;
            }
            for (idx, &val) in tuple.iter().enumerate() {
                if in_subset[idx] {
                    left.push(val);
                } else {
                    right.push(val);
                }
            }
            // Parity of the shuffle putting (left, right) back into sorted order:
            // count inversions between chosen positions and their targets.
            let mut inversions = 0usize;
            for (target, &pos) in subset.iter().enumerate() {
                inversions += (pos - 1) - target;
            }
            let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * a.coeff(&left) * b.coeff(&right);
        }
        sum
    }

    /// Independent interior-product oracle: (x ⌟ w)(i_1..i_{k-1}) = Σ_m x_m · w(m, i_1..).
    fn interior_oracle_value(x: &[f64], w: &ExteriorForm, tuple: &[usize]) -> f64 {
        let mut sum = 0.0;
        for (m, &xm) in x.iter().enumerate() {
            let mut full = vec![m + 1];
            full.extend_from_slice(tuple);
            sum += xm * w.coeff(&full);
        }
        sum
    }

    fn random_form(rng: &mut ChaCha8Rng, n: usize, k: usize, terms: usize) -> ExteriorForm {
        let tuples = increasing_tuples(n, k);
        let mut f = ExteriorForm::zero(n, k).unwrap();
        for _ in 0..terms {
            let key = tuples[rng.gen_range(0..tuples.len())].clone();
            let coeff = rng.gen_range(-2.0..2.0);
            f = f.add(&ExteriorForm::monomial(n, &key, coeff).unwrap()).unwrap();
        }
        f
    }

    #[test]
    fn monomial_normalizes_order_and_sign() {
        let a = ExteriorForm::monomial(5, &[2, 1, 5], 3.0).unwrap();
        assert_eq!(a.coeff(&[1, 2, 5]), -3.0);
        assert_eq!(a.coeff(&[2, 1, 5]), 3.0);
        assert_eq!(a.coeff(&[1, 2, 4]), 0.0);
    }

    #[test]
    fn repeated_index_monomial_is_zero() {
        let a = ExteriorForm::monomial(4, &[1, 1, 3], 2.0).unwrap();
        assert!(a.is_zero());
    }

    #[test]
    fn basis_wedge_is_plain_monomial() {
        let e1 = ExteriorForm::basis(4, 1).unwrap();
        let e2 = ExteriorForm::basis(4, 2).unwrap();
        assert_eq!(e1.wedge(&e2).unwrap(), ExteriorForm::monomial(4, &[1, 2], 1.0).unwrap());
        assert!(e1.wedge(&e1).unwrap().is_zero());
    }

    #[test]
    fn wedge_of_two_forms_matches_worked_value() {
        // (2 e12) ∧ (2 e34) + (2 e34) ∧ (2 e12) = 8 e1234 on R^5
        let a = ExteriorForm::monomial(5, &[1, 2], 2.0).unwrap();
        let b = ExteriorForm::monomial(5, &[3, 4], 2.0).unwrap();
        let sum = a.wedge(&b).unwrap().add(&b.wedge(&a).unwrap()).unwrap();
        assert_eq!(sum, ExteriorForm::monomial(5, &[1, 2, 3, 4], 8.0).unwrap());
    }

    #[test]
    fn wedge_beyond_top_grade_clamps_to_zero() {
        let a = ExteriorForm::monomial(4, &[1, 2, 3], 1.0).unwrap();
        let b = ExteriorForm::monomial(4, &[2, 3, 4], 1.0).unwrap();
        let w = a.wedge(&b).unwrap();
        assert!(w.is_zero());
        assert_eq!(w.grade(), 4);
    }

    #[test]
    fn wedge_dimension_mismatch_rejected() {
        let a = ExteriorForm::basis(4, 1).unwrap();
        let b = ExteriorForm::basis(5, 1).unwrap();
        assert!(a.wedge(&b).is_err());
    }

    #[test]
    fn wedge_agrees_with_shuffle_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in 4..=7 {
            for (p, q) in [(1, 2), (2, 2), (1, 3), (2, 3), (3, 3)] {
                if p + q > n {
                    continue;
                }
                let a = random_form(&mut rng, n, p, 4);
                let b = random_form(&mut rng, n, q, 4);
                let w = a.wedge(&b).unwrap();
                for tuple in increasing_tuples(n, p + q) {
                    let expected = wedge_oracle_value(&a, &b, &tuple);
                    assert!(
                        (w.coeff(&tuple) - expected).abs() < 1e-12,
                        "n={n} p={p} q={q} tuple={tuple:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn interior_matches_oracle_and_worked_values() {
        // e5 ⌟ (2 e125 + 2 e345) = 2 e12 + 2 e34
        let t = ExteriorForm::from_terms(
            5,
            3,
            &[(vec![1, 2, 5], 2.0), (vec![3, 4, 5], 2.0)],
        )
        .unwrap();
        let c5 = t.interior_basis(5).unwrap();
        assert_eq!(
            c5,
            ExteriorForm::from_terms(5, 2, &[(vec![1, 2], 2.0), (vec![3, 4], 2.0)]).unwrap()
        );
        // e1 ⌟ (2 e125) = 2 e25
        let t1 = ExteriorForm::monomial(5, &[1, 2, 5], 2.0).unwrap();
        assert_eq!(t1.interior_basis(1).unwrap(), ExteriorForm::monomial(5, &[2, 5], 2.0).unwrap());
        // e3 ⌟ e12 = 0
        let e12 = ExteriorForm::monomial(5, &[1, 2], 1.0).unwrap();
        assert!(e12.interior_basis(3).unwrap().is_zero());

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 4..=7 {
            for k in 1..=3 {
                let w = random_form(&mut rng, n, k, 4);
                let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let c = w.interior(&x).unwrap();
                for tuple in increasing_tuples(n, k - 1) {
                    let expected = interior_oracle_value(&x, &w, &tuple);
                    assert!((c.coeff(&tuple) - expected).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn interior_of_scalar_is_zero_scalar() {
        let s = ExteriorForm::scalar(4, 3.0).unwrap();
        let c = s.interior(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(c.grade(), 0);
        assert!(c.is_zero());
    }

    #[test]
    fn sigma_of_contact_torsion() {
        // T = 2 e125 + 2 e345 on R^5: σ_T = 4 e1234, and dη∧dη = 2 σ_T for η = e5.
        let t = ExteriorForm::from_terms(
            5,
            3,
            &[(vec![1, 2, 5], 2.0), (vec![3, 4, 5], 2.0)],
        )
        .unwrap();
        let sigma = t.sigma_t().unwrap();
        assert_eq!(sigma, ExteriorForm::monomial(5, &[1, 2, 3, 4], 4.0).unwrap());
        // dη = 2 e12 + 2 e34 (so that η ∧ dη = T), dη ∧ dη = 8 e1234 = 2 σ_T.
        let deta =
            ExteriorForm::from_terms(5, 2, &[(vec![1, 2], 2.0), (vec![3, 4], 2.0)]).unwrap();
        let dt = deta.wedge(&deta).unwrap();
        assert!(dt.max_coeff_diff(&sigma.scale(2.0)).unwrap() < 1e-14);
    }

    #[test]
    fn sigma_vanishes_in_dimension_four() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let t = random_form(&mut rng, 4, 3, 4);
            let sigma = t.sigma_t().unwrap();
            assert!(sigma.max_abs_coeff() < 1e-12, "sigma = {sigma}");
        }
    }

    #[test]
    fn sigma_rejects_wrong_grade() {
        let w = ExteriorForm::monomial(5, &[1, 2], 1.0).unwrap();
        assert!(w.sigma_t().is_err());
    }

    #[test]
    fn norm_sq_of_contact_torsion_is_eight() {
        let t = ExteriorForm::from_terms(
            5,
            3,
            &[(vec![1, 2, 5], 2.0), (vec![3, 4, 5], 2.0)],
        )
        .unwrap();
        assert_eq!(t.norm_sq(), 8.0);
        assert_eq!(ExteriorForm::zero(5, 3).unwrap().norm_sq(), 0.0);
    }

    #[test]
    fn contract_pair_reads_off_vector() {
        // T = 2 e125: T(e1, e2) = 2 e5, antisymmetric in the pair.
        let t = ExteriorForm::monomial(5, &[1, 2, 5], 2.0).unwrap();
        assert_eq!(t.contract_pair(1, 2).unwrap(), vec![0.0, 0.0, 0.0, 0.0, 2.0]);
        assert_eq!(t.contract_pair(2, 1).unwrap(), vec![0.0, 0.0, 0.0, 0.0, -2.0]);
        assert_eq!(t.contract_pair(1, 1).unwrap(), vec![0.0; 5]);
        assert!(t.contract_pair(0, 2).is_err());
        assert!(t.contract_pair(1, 6).is_err());
    }

    #[test]
    fn embed_shifts_indices() {
        let t = ExteriorForm::monomial(4, &[1, 2, 3], 1.5).unwrap();
        let e = t.embed(9, 4).unwrap();
        assert_eq!(e.n(), 9);
        assert_eq!(e.coeff(&[5, 6, 7]), 1.5);
        assert!(t.embed(6, 4).is_err());
    }
}
