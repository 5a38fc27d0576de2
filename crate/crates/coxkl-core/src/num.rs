//! Exact coefficient rings for root coordinates.
//!
//! Root coordinates of a Coxeter system with bond orders `m` live in the ring
//! `Z[2cos(pi/m) : m finite]`. When every finite off-diagonal bond is 2 or 3
//! the needed values (0 and 1) are integers and the ring is plain `Z`.
//! Otherwise we work in `Z[t]/(psi(t))` where `psi` is the minimal polynomial
//! of `alpha = 2cos(pi/N)` and `N` is the lcm of the finite bond orders;
//! `2cos(pi/m) = D_{N/m}(alpha)` with `D_k` the degree-`k` Dickson
//! polynomial. Signs are decided by interval arithmetic on a certified
//! rational isolating interval for `alpha`, refined by bisection until the
//! value's interval excludes zero (a nonzero element of the ring never
//! evaluates to zero at `alpha` since `psi` is minimal).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A ring element: coefficients of `1, alpha, alpha^2, ...`, with fixed
/// length equal to the ring degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Num(pub(crate) Vec<BigInt>);

/// The exact coefficient ring, either `Z` or a real cyclotomic extension.
#[derive(Debug, Clone)]
pub struct Ring {
    /// Degree of the extension; 1 means plain integers.
    degree: usize,
    /// Monic minimal polynomial of `alpha`, ascending coefficients,
    /// length `degree + 1`. Unused in the integer case.
    modulus: Vec<BigInt>,
    /// `N` with `alpha = 2cos(pi/N)`; 0 in the integer case.
    n: u64,
    /// Certified isolating interval for `alpha`: `psi(lo) < 0 < psi(hi)`
    /// and `alpha` is the largest real root of `psi`.
    lo: BigRational,
    hi: BigRational,
}

impl Ring {
    /// The plain integer ring, adequate when all finite bonds are `<= 3`.
    pub fn integer() -> Ring {
        Ring {
            degree: 1,
            modulus: vec![BigInt::zero(), BigInt::one()],
            n: 0,
            lo: BigRational::zero(),
            hi: BigRational::zero(),
        }
    }

    /// The ring `Z[2cos(pi/n)]` for `n >= 4`.
    pub fn cyclotomic(n: u64) -> Ring {
        assert!(n >= 4, "cyclotomic ring only needed for bond orders >= 4");
        let phi = cyclotomic_poly(2 * n);
        let modulus = fold_palindromic(&phi);
        let degree = modulus.len() - 1;
        let (lo, hi) = isolate_largest_root(&modulus, n);
        Ring { degree, modulus, n, lo, hi }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_integer(&self) -> bool {
        self.n == 0
    }

    pub fn zero(&self) -> Num {
        Num(vec![BigInt::zero(); self.degree])
    }

    pub fn one(&self) -> Num {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Num {
        let mut c = vec![BigInt::zero(); self.degree];
        c[0] = BigInt::from(v);
        Num(c)
    }

    /// The value `2cos(pi/m)` for a finite bond order `m`, which must divide
    /// `N` in the cyclotomic case (guaranteed by taking `N = lcm`).
    pub fn two_cos_pi_over(&self, m: u64) -> Num {
        debug_assert!(m >= 1);
        if self.is_integer() {
            match m {
                1 => self.from_i64(-2),
                2 => self.zero(),
                3 => self.one(),
                _ => panic!("integer ring cannot represent 2cos(pi/{m})"),
            }
        } else {
            debug_assert!(self.n % m == 0);
            self.dickson(self.n / m)
        }
    }

    /// `D_k(alpha)` with `D_0 = 2`, `D_1 = t`, `D_k = t D_{k-1} - D_{k-2}`,
    /// so that `D_k(2cos x) = 2cos(kx)`.
    fn dickson(&self, k: u64) -> Num {
        let alpha = {
            let mut c = vec![BigInt::zero(); self.degree];
            if self.degree > 1 {
                c[1] = BigInt::one();
            }
            Num(c)
        };
        let mut prev = self.from_i64(2);
        if k == 0 {
            return prev;
        }
        let mut cur = alpha.clone();
        for _ in 1..k {
            let next = self.sub(&self.mul(&alpha, &cur), &prev);
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn add(&self, a: &Num, b: &Num) -> Num {
        Num(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &Num, b: &Num) -> Num {
        Num(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &Num) -> Num {
        Num(a.0.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, a: &Num, b: &Num) -> Num {
        if self.degree == 1 {
            return Num(vec![&a.0[0] * &b.0[0]]);
        }
        let mut prod = vec![BigInt::zero(); 2 * self.degree - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        // reduce modulo the monic minimal polynomial
        for i in (self.degree..prod.len()).rev() {
            if prod[i].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut prod[i]);
            for (j, m) in self.modulus.iter().enumerate().take(self.degree) {
                prod[i - self.degree + j] -= &c * m;
            }
        }
        prod.truncate(self.degree);
        Num(prod)
    }

    /// `a - c * b` for an integer scalar-free fused step used by reflections.
    pub fn sub_mul(&self, a: &Num, c: &Num, b: &Num) -> Num {
        self.sub(a, &self.mul(c, b))
    }

    pub fn is_zero(&self, a: &Num) -> bool {
        a.0.iter().all(|x| x.is_zero())
    }

    /// Sign of the real value of `a` at `alpha`: -1, 0, or 1.
    pub fn sign(&self, a: &Num) -> i8 {
        if self.is_zero(a) {
            return 0;
        }
        if self.degree == 1 {
            return if a.0[0].is_positive() { 1 } else { -1 };
        }
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        loop {
            let (vlo, vhi) = interval_eval(&a.0, &lo, &hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            // refine the root interval; psi has no rational roots, so the
            // midpoint sign is always strict
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            let v = eval_rational(&self.modulus, &mid);
            if v.is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
}

/// Cyclotomic polynomial `Phi_n`, ascending integer coefficients.
fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = poly_exact_div(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials, panics if not exact.
fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = core::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, m) in den.iter().enumerate().take(dd) {
            rem[i - dd + j] -= &c * m;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    quot
}

/// For a palindromic `phi` of even degree `2h`, returns the monic `psi`
/// with `phi(x) = x^h psi(x + 1/x)`.
fn fold_palindromic(phi: &[BigInt]) -> Vec<BigInt> {
    let d = phi.len() - 1;
    assert!(d % 2 == 0 && d >= 2);
    let h = d / 2;
    for i in 0..=d {
        assert_eq!(phi[i], phi[d - i], "cyclotomic polynomial not palindromic");
    }
    // x^k + x^-k = D_k(y): build psi = phi[h] + sum_{k=1..h} phi[h+k] D_k(y)
    let mut psi = vec![BigInt::zero(); h + 1];
    psi[0] = phi[h].clone();
    let mut d_prev = {
        // D_0 = 2
        let mut p = vec![BigInt::zero(); h + 1];
        p[0] = BigInt::from(2);
        p
    };
    let mut d_cur = {
        // D_1 = y
        let mut p = vec![BigInt::zero(); h + 1];
        p[1] = BigInt::one();
        p
    };
    for k in 1..=h {
        for (i, c) in d_cur.iter().enumerate() {
            psi[i] += &phi[h + k] * c;
        }
        if k < h {
            // D_{k+1} = y * D_k - D_{k-1}
            let mut next = vec![BigInt::zero(); h + 1];
            for i in 0..h {
                if !d_cur[i].is_zero() {
                    next[i + 1] = d_cur[i].clone();
                }
            }
            for (i, c) in d_prev.iter().enumerate() {
                next[i] -= c;
            }
            d_prev = d_cur;
            d_cur = next;
        }
    }
    assert!(psi[h].is_one());
    psi
}

/// A certified isolating interval for the largest real root of `psi`,
/// which is `2cos(pi/n)`.
fn isolate_largest_root(psi: &[BigInt], n: u64) -> (BigRational, BigRational) {
    let approx = 2.0 * libm::cos(core::f64::consts::PI / n as f64);
    // conjugates of 2cos(pi/n) are 2cos(k pi/n) with gcd(k, 2n) = 1; the
    // nearest one is at distance > 2(cos(pi/n) - cos(3pi/n)), far above the
    // margin used here for any realistic bond order
    let margin = 1e-9;
    let lo = BigRational::from_float(approx - margin).expect("finite float");
    let hi = BigRational::from_float(approx + margin).expect("finite float");
    let vlo = eval_rational(psi, &lo);
    let vhi = eval_rational(psi, &hi);
    assert!(
        vlo.is_negative() && vhi.is_positive(),
        "root isolation failed for 2cos(pi/{n})"
    );
    (lo, hi)
}

fn eval_rational(poly: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in poly.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// Interval Horner evaluation of an integer polynomial on `[lo, hi]`.
fn interval_eval(poly: &[BigInt], lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut alo = BigRational::zero();
    let mut ahi = BigRational::zero();
    for c in poly.iter().rev() {
        let c = BigRational::from_integer(c.clone());
        let candidates = [&alo * lo, &alo * hi, &ahi * lo, &ahi * hi];
        let mut new_lo = candidates[0].clone();
        let mut new_hi = candidates[0].clone();
        for v in &candidates[1..] {
            if *v < new_lo {
                new_lo = v.clone();
            }
            if *v > new_hi {
                new_hi = v.clone();
            }
        }
        alo = new_lo + &c;
        ahi = new_hi + &c;
    }
    (alo, ahi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_ring_values() {
        let ring = Ring::integer();
        assert!(ring.is_zero(&ring.two_cos_pi_over(2)));
        assert_eq!(ring.two_cos_pi_over(3), ring.one());
        assert_eq!(ring.sign(&ring.from_i64(-5)), -1);
    }

    #[test]
    fn sqrt2_ring() {
        // N = 4: alpha = sqrt(2), psi = t^2 - 2
        let ring = Ring::cyclotomic(4);
        assert_eq!(ring.degree(), 2);
        let a = ring.two_cos_pi_over(4);
        let sq = ring.mul(&a, &a);
        assert_eq!(sq, ring.from_i64(2));
        assert_eq!(ring.sign(&a), 1);
        // sqrt(2) - 2 < 0, 3 - 2 sqrt(2) > 0
        assert_eq!(ring.sign(&ring.sub(&a, &ring.from_i64(2))), -1);
        let three = ring.from_i64(3);
        let two_a = ring.add(&a, &a);
        assert_eq!(ring.sign(&ring.sub(&three, &two_a)), 1);
    }

    #[test]
    fn mixed_ring_for_f4_bonds() {
        // bonds {2, 3, 4} -> N = 12, degree phi(24)/2 = 4
        let ring = Ring::cyclotomic(12);
        assert_eq!(ring.degree(), 4);
        let c3 = ring.two_cos_pi_over(3);
        assert_eq!(c3, ring.one());
        let c4 = ring.two_cos_pi_over(4);
        assert_eq!(ring.mul(&c4, &c4), ring.from_i64(2));
        let c6 = ring.two_cos_pi_over(6);
        assert_eq!(ring.mul(&c6, &c6), ring.from_i64(3));
        assert_eq!(ring.sign(&ring.sub(&c4, &c6)), -1);
    }

    #[test]
    fn golden_ratio_ring() {
        // N = 5: alpha = 2cos(pi/5) = golden ratio, psi = t^2 - t - 1
        let ring = Ring::cyclotomic(5);
        assert_eq!(ring.degree(), 2);
        let a = ring.two_cos_pi_over(5);
        let sq = ring.mul(&a, &a);
        // alpha^2 = alpha + 1
        assert_eq!(sq, ring.add(&a, &ring.one()));
    }
}
