//! Arithmetic in Z[2cos(pi/L)], the exact coefficient ring of the geometric
//! reflection representation.
//!
//! Elements are integer coordinate vectors in the power basis of
//! x = 2cos(pi/L); the minimal polynomial is obtained by folding the
//! cyclotomic polynomial Phi_{2L}. Every 2cos(pi/m) with m | L is the
//! Dickson polynomial D_{L/m} evaluated at x, so one ring serves all
//! entries of a given Coxeter matrix.

#[inline]
fn cadd(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("ring coefficient overflow")
}

#[inline]
fn cmul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("ring coefficient overflow")
}

/// Cyclotomic polynomial Phi_n, ascending coefficients.
fn cyclotomic(n: u64) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd] == 1, "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &dc) in den.iter().enumerate() {
                rem[k + i] = cadd(rem[k + i], -cmul(c, dc));
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "nonexact polynomial division");
    quot
}

/// Minimal polynomial of 2cos(pi/L) = 2cos(2pi/(2L)), ascending, monic.
///
/// Writes Phi_{2L}(z) = z^d * C(z + 1/z) and recovers C via the Dickson
/// basis z^j + z^{-j} = D_j(z + 1/z).
fn two_cos_minpoly(l: u64) -> Vec<i64> {
    let phi = cyclotomic(2 * l);
    let d = (phi.len() - 1) / 2;
    // D_j in ascending coefficients: D_0 = 2, D_1 = y, D_{j+1} = y*D_j - D_{j-1}.
    let mut dick: Vec<Vec<i64>> = vec![vec![2], vec![0, 1]];
    for j in 2..=d {
        let mut next = vec![0i64; j + 1];
        for (i, &c) in dick[j - 1].iter().enumerate() {
            next[i + 1] = cadd(next[i + 1], c);
        }
        for (i, &c) in dick[j - 2].iter().enumerate() {
            next[i] = cadd(next[i], -c);
        }
        dick.push(next);
    }
    let mut min = vec![0i64; d + 1];
    min[0] = phi[d];
    for j in 1..=d {
        let c = phi[d + j];
        if c != 0 {
            for (i, &dc) in dick[j].iter().enumerate() {
                min[i] = cadd(min[i], cmul(c, dc));
            }
        }
    }
    assert_eq!(min[d], 1, "folded minimal polynomial must be monic");
    min
}

/// The ring Z[x]/(minpoly of 2cos(pi/L)).
#[derive(Debug, Clone)]
pub(crate) struct NumberRing {
    pub degree: usize,
    minpoly: Vec<i64>,
}

impl NumberRing {
    pub fn new(l: u64) -> Self {
        let minpoly = two_cos_minpoly(l);
        NumberRing { degree: minpoly.len() - 1, minpoly }
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.degree]
    }

    pub fn from_int(&self, c: i64) -> Vec<i64> {
        let mut e = self.zero();
        e[0] = c;
        e
    }

    /// 2cos(k*pi/L) as a ring element (Dickson D_k at the generator).
    pub fn two_cos(&self, k: u64) -> Vec<i64> {
        let (mut prev, mut cur) = (self.from_int(2), {
            let mut x = self.zero();
            if self.degree == 1 {
                // generator reduces to an integer: x = -minpoly[0]
                x[0] = -self.minpoly[0];
            } else {
                x[1] = 1;
            }
            x
        });
        if k == 0 {
            return prev;
        }
        let gen = cur.clone();
        for _ in 1..k {
            let next = self.sub(&self.mul(&gen, &cur), &prev);
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(&x, &y)| cadd(x, y)).collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(&x, &y)| cadd(x, -y)).collect()
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let d = self.degree;
        let mut prod = vec![0i64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    prod[i + j] = cadd(prod[i + j], cmul(x, y));
                }
            }
        }
        // reduce modulo the monic minimal polynomial
        for k in (d..2 * d - 1).rev() {
            let c = prod[k];
            if c != 0 {
                prod[k] = 0;
                for (i, &mc) in self.minpoly.iter().take(d).enumerate() {
                    prod[k - d + i] = cadd(prod[k - d + i], -cmul(c, mc));
                }
            }
        }
        prod.truncate(d);
        prod
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_basics() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn minpoly_small_cases() {
        assert_eq!(two_cos_minpoly(2), vec![0, 1]); // 2cos(pi/2) = 0
        assert_eq!(two_cos_minpoly(3), vec![-1, 1]); // 2cos(pi/3) = 1
        assert_eq!(two_cos_minpoly(4), vec![-2, 0, 1]); // sqrt(2)
        assert_eq!(two_cos_minpoly(5), vec![-1, -1, 1]); // golden ratio
        assert_eq!(two_cos_minpoly(6), vec![-3, 0, 1]); // sqrt(3)
    }

    #[test]
    fn golden_ratio_arithmetic() {
        let r = NumberRing::new(5);
        let phi = r.two_cos(1);
        // phi^2 = phi + 1
        assert_eq!(r.mul(&phi, &phi), r.add(&phi, &r.from_int(1)));
        // 2cos(2pi/5) = phi - 1
        assert_eq!(r.two_cos(2), r.sub(&phi, &r.from_int(1)));
    }

    #[test]
    fn embedded_cosines() {
        // inside Z[2cos(pi/30)]: D_6 gives 2cos(pi/5), D_10 gives 2cos(pi/3) = 1
        let r = NumberRing::new(30);
        assert_eq!(r.degree, 8);
        let one = r.two_cos(10);
        assert_eq!(one, r.from_int(1));
        let zero = r.two_cos(15);
        assert_eq!(zero, r.zero());
        let phi = r.two_cos(6);
        assert_eq!(r.mul(&phi, &phi), r.add(&phi, &r.from_int(1)));
    }
}
