//! Exact Laurent polynomial arithmetic in one variable `v` and in two
//! independent variables `(v, v')`.
//!
//! Coefficients are checked 128-bit integers; any overflow aborts with a
//! distinct panic message rather than wrapping. `q` is represented as `v^2`
//! throughout the crate, so q-polynomials are stored with even exponents.

use std::collections::BTreeMap;
use std::fmt;

#[inline]
pub(crate) fn cadd(a: i128, b: i128) -> i128 {
    a.checked_add(b)
        .expect("coefficient overflow in exact arithmetic")
}

#[inline]
pub(crate) fn cmul(a: i128, b: i128) -> i128 {
    a.checked_mul(b)
        .expect("coefficient overflow in exact arithmetic")
}

/// Laurent polynomial in `v` with integer coefficients.
///
/// Stored densely between the minimal and maximal supported exponent. The
/// zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    val: i64,
    coeffs: Vec<i128>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i128) -> Self {
        Self::monomial(c, 0)
    }

    /// The single term `c * v^e`.
    pub fn monomial(c: i128, e: i64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Self { val: e, coeffs: vec![c] }
        }
    }

    /// Builds from ascending coefficients starting at exponent `val`.
    pub fn from_coeffs(val: i64, coeffs: &[i128]) -> Self {
        let mut p = Self { val, coeffs: coeffs.to_vec() };
        p.normalize();
        p
    }

    /// Builds a q-polynomial from ascending q-coefficients (`q = v^2`).
    pub fn from_q_coeffs(coeffs: &[i128]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                p.add_term(c, 2 * i as i64);
            }
        }
        p
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().rposition(|&c| c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.val = 0;
            }
            Some(hi) => {
                self.coeffs.truncate(hi + 1);
                let lo = self.coeffs.iter().position(|&c| c != 0).unwrap();
                if lo > 0 {
                    self.coeffs.drain(..lo);
                    self.val += lo as i64;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1] && self.val == 0
    }

    /// Maximal supported exponent, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.val + self.coeffs.len() as i64 - 1)
        }
    }

    /// Minimal supported exponent, `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.val)
        }
    }

    pub fn coeff(&self, e: i64) -> i128 {
        if self.is_zero() || e < self.val {
            return 0;
        }
        let i = (e - self.val) as usize;
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Iterator over (exponent, coefficient) pairs, ascending, zeros skipped.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.val + i as i64, c))
    }

    pub fn eval_one(&self) -> i128 {
        self.coeffs.iter().fold(0, |acc, &c| cadd(acc, c))
    }

    fn add_term(&mut self, c: i128, e: i64) {
        if c == 0 {
            return;
        }
        if self.is_zero() {
            self.val = e;
            self.coeffs.push(c);
            return;
        }
        if e < self.val {
            let pad = (self.val - e) as usize;
            let mut nc = vec![0; pad];
            nc.extend_from_slice(&self.coeffs);
            self.coeffs = nc;
            self.val = e;
        }
        let i = (e - self.val) as usize;
        if i >= self.coeffs.len() {
            self.coeffs.resize(i + 1, 0);
        }
        self.coeffs[i] = cadd(self.coeffs[i], c);
        if i == 0 || i + 1 == self.coeffs.len() {
            self.normalize();
        }
    }

    /// Accumulates `other * c * v^shift` into `self`.
    pub fn add_mul(&mut self, other: &Self, c: i128, shift: i64) {
        if c == 0 || other.is_zero() {
            return;
        }
        let lo = other.val + shift;
        let hi = lo + other.coeffs.len() as i64 - 1;
        if self.is_zero() {
            self.val = lo;
            self.coeffs = other.coeffs.iter().map(|&x| cmul(x, c)).collect();
            self.normalize();
            return;
        }
        if lo < self.val {
            let pad = (self.val - lo) as usize;
            let mut nc = vec![0; pad];
            nc.extend_from_slice(&self.coeffs);
            self.coeffs = nc;
            self.val = lo;
        }
        let need = (hi - self.val + 1) as usize;
        if need > self.coeffs.len() {
            self.coeffs.resize(need, 0);
        }
        let off = (lo - self.val) as usize;
        for (i, &x) in other.coeffs.iter().enumerate() {
            self.coeffs[off + i] = cadd(self.coeffs[off + i], cmul(x, c));
        }
        self.normalize();
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_mul(other, 1, 0);
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_mul(other, -1, 0);
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, c: i128) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self {
            val: self.val,
            coeffs: self.coeffs.iter().map(|&x| cmul(x, c)).collect(),
        }
    }

    /// Multiplies by `v^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { val: self.val + k, coeffs: self.coeffs.clone() }
    }

    /// Substitutes `v -> v^factor` (every exponent scaled).
    pub fn inflate(&self, factor: i64) -> Self {
        assert!(factor >= 1);
        if self.is_zero() || factor == 1 {
            return self.clone();
        }
        let mut coeffs = vec![0i128; (self.coeffs.len() - 1) * factor as usize + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * factor as usize] = c;
        }
        Self { val: self.val * factor, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    coeffs[i + j] = cadd(coeffs[i + j], cmul(a, b));
                }
            }
        }
        let mut r = Self { val: self.val + other.val, coeffs };
        r.normalize();
        r
    }

    /// The bar operation `v -> v^{-1}`: every exponent negated.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            val: -(self.val + self.coeffs.len() as i64 - 1),
            coeffs,
        }
    }

    /// True when every supported exponent is even, i.e. the value lies in Z[q, q^{-1}].
    pub fn is_even(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// Ascending q-coefficients starting at q^0, when the value is a genuine
    /// polynomial in q (even nonnegative exponents only).
    pub fn q_coeffs(&self) -> Option<Vec<i128>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        if !self.is_even() || self.val < 0 {
            return None;
        }
        let deg = self.degree().unwrap() / 2;
        Some((0..=deg).map(|k| self.coeff(2 * k)).collect())
    }

    /// JSON form `{"val": <min exponent>, "coeffs": [ascending]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<i64> = self
            .coeffs
            .iter()
            .map(|&c| i64::try_from(c).expect("coefficient too large for JSON emission"))
            .collect();
        serde_json::json!({ "val": self.val, "coeffs": coeffs })
    }

    /// Canonical textual form, e.g. `-1*v^-2 + 3 + v^4`.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| match (c, e) {
                (c, 0) => format!("{c}"),
                (1, e) => format!("v^{e}"),
                (c, e) => format!("{c}*v^{e}"),
            })
            .collect();
        parts.join(" + ")
    }

    /// Math-style rendering in `q` for even-exponent polynomials,
    /// e.g. `1 + 2q + 2q^2 + q^3`.
    pub fn q_string(&self) -> Option<String> {
        if self.is_zero() {
            return Some("0".into());
        }
        if !self.is_even() {
            return None;
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let k = e / 2;
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else if c < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let body = match (mag, k) {
                (m, 0) => format!("{m}"),
                (1, 1) => "q".into(),
                (m, 1) => format!("{m}q"),
                (1, k) => format!("q^{k}"),
                (m, k) => format!("{m}q^{k}"),
            };
            out.push_str(&body);
        }
        Some(out)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

/// Laurent polynomial in two independent variables `v` and `v'`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiLaurentPolynomial {
    terms: BTreeMap<(i64, i64), i128>,
}

impl BiLaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: i128, e: i64, ep: i64) -> Self {
        let mut t = BTreeMap::new();
        if c != 0 {
            t.insert((e, ep), c);
        }
        Self { terms: t }
    }

    /// Embeds a one-variable polynomial as a polynomial in `v`.
    pub fn from_v(p: &LaurentPolynomial) -> Self {
        let mut t = BTreeMap::new();
        for (e, c) in p.terms() {
            t.insert((e, 0), c);
        }
        Self { terms: t }
    }

    /// Embeds a one-variable polynomial as a polynomial in `v'`.
    pub fn from_vprime(p: &LaurentPolynomial) -> Self {
        let mut t = BTreeMap::new();
        for (e, c) in p.terms() {
            t.insert((0, e), c);
        }
        Self { terms: t }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (i64, i64), c: i128) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(key).or_insert(0);
        *entry = cadd(*entry, c);
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (&k, &c) in &other.terms {
            r.add_term(k, c);
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (&k, &c) in &other.terms {
            r.add_term(k, -c);
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (&(a, b), &c1) in &self.terms {
            for (&(x, y), &c2) in &other.terms {
                r.add_term((a + x, b + y), cmul(c1, c2));
            }
        }
        r
    }
}

impl fmt::Debug for BiLaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(e, ep), &c)| format!("{c}*v^{e}*v'^{ep}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(pairs: &[(i64, i128)]) -> LaurentPolynomial {
        let mut r = LaurentPolynomial::zero();
        for &(e, c) in pairs {
            r.add_term(c, e);
        }
        r
    }

    #[test]
    fn binomial_square() {
        let f = p(&[(1, 1), (-1, 1)]);
        let sq = f.mul(&f);
        assert_eq!(sq, p(&[(2, 1), (0, 2), (-2, 1)]));
    }

    #[test]
    fn zero_annihilates() {
        let f = p(&[(3, 1), (0, -5)]);
        assert!(LaurentPolynomial::zero().mul(&f).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(2, 1), (0, -1)]);
        let b = p(&[(2, 1), (0, 1)]);
        assert_eq!(a.mul(&b), p(&[(4, 1), (0, -1)]));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p(&[(2, 1), (0, -1)]).bar(), p(&[(-2, 1), (0, -1)]));
        let f = p(&[(5, 3), (-1, 1)]);
        assert_eq!(f.bar().bar(), f);
        assert_eq!(LaurentPolynomial::constant(7).bar(), LaurentPolynomial::constant(7));
    }

    #[test]
    fn canonical_string_form() {
        let f = p(&[(-2, -1), (0, 3), (4, 1)]);
        assert_eq!(f.canonical_string(), "-1*v^-2 + 3 + v^4");
        assert_eq!(LaurentPolynomial::zero().canonical_string(), "0");
    }

    #[test]
    fn q_string_form() {
        let f = LaurentPolynomial::from_q_coeffs(&[1, 2, 2, 1]);
        assert_eq!(f.q_string().unwrap(), "1 + 2q + 2q^2 + q^3");
        let g = LaurentPolynomial::from_q_coeffs(&[-1, 1]);
        assert_eq!(g.q_string().unwrap(), "-1 + q");
        assert!(p(&[(1, 1)]).q_string().is_none());
    }

    #[test]
    fn q_coeffs_roundtrip() {
        let f = LaurentPolynomial::from_q_coeffs(&[1, 0, 4]);
        assert_eq!(f.q_coeffs().unwrap(), vec![1, 0, 4]);
        assert!(p(&[(-2, 1)]).q_coeffs().is_none());
    }

    #[test]
    fn inflate_doubles_exponents() {
        let f = p(&[(-1, 2), (0, 1), (3, 5)]);
        let g = f.inflate(2);
        assert_eq!(g, p(&[(-2, 2), (0, 1), (6, 5)]));
        assert_eq!(f.inflate(1), f);
        let h = LaurentPolynomial::from_q_coeffs(&[1, 1]);
        assert_eq!(h, p(&[(0, 1)]).add(&p(&[(2, 1)])));
    }

    #[test]
    fn json_shape() {
        let f = p(&[(-1, 2), (1, 3)]);
        assert_eq!(f.to_json().to_string(), r#"{"val":-1,"coeffs":[2,0,3]}"#);
        assert_eq!(
            LaurentPolynomial::zero().to_json().to_string(),
            r#"{"val":0,"coeffs":[]}"#
        );
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn overflow_aborts() {
        let big = LaurentPolynomial::constant(i128::MAX);
        let _ = big.mul(&LaurentPolynomial::constant(2));
    }

    #[test]
    fn bivariate_independence() {
        let v = BiLaurentPolynomial::monomial(1, 1, 0);
        let vp = BiLaurentPolynomial::monomial(1, 0, 1);
        assert_ne!(v, vp);
        assert_eq!(v.mul(&vp), BiLaurentPolynomial::monomial(1, 1, 1));
        let f = v.add(&vp);
        assert_eq!(f.mul(&f).sub(&v.mul(&v)).sub(&vp.mul(&vp)), vp.mul(&v).add(&v.mul(&vp)));
    }

    fn poly_strategy() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-20i64..=20, -100i128..=100), 0..8)
            .prop_map(|pairs| p(&pairs))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), LaurentPolynomial::zero());
        }

        #[test]
        fn bar_properties(a in poly_strategy(), b in poly_strategy()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!(a.mul(&b).bar(), a.bar().mul(&b.bar()));
        }

        #[test]
        fn degree_adds(a in poly_strategy(), b in poly_strategy()) {
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!(a.mul(&b).degree(), Some(da + db));
                prop_assert_eq!(a.mul(&b).valuation(),
                    Some(a.valuation().unwrap() + b.valuation().unwrap()));
            }
        }
    }
}
