use num_bigint::BigInt;

use super::SeriesError;
use crate::ring::Coeff;

/// Truncated power series `c_0 + c_1 q + … + c_{T-1} q^{T-1} + O(q^T)`.
///
/// The precision `T` is the number of stored coefficients and is always at
/// least one. Binary operations truncate to the smaller precision.
#[derive(Clone, PartialEq, Debug)]
pub struct QSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Coeff> QSeries<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::ZeroPrecision);
        }
        if let Some(bad) = coeffs.iter().find(|c| !c.same_ring(&coeffs[0])) {
            return Err(SeriesError::RingMismatch(coeffs[0].ring_name(), bad.ring_name()));
        }
        Ok(Self { coeffs })
    }

    /// The series `1 + O(q^T)` over the ring of `proto`.
    pub fn one(proto: &R, precision: usize) -> Result<Self, SeriesError> {
        let mut s = Self::zero(proto, precision)?;
        s.coeffs[0] = proto.one_like();
        Ok(s)
    }

    pub fn zero(proto: &R, precision: usize) -> Result<Self, SeriesError> {
        if precision == 0 {
            return Err(SeriesError::ZeroPrecision);
        }
        Ok(Self { coeffs: vec![proto.zero_like(); precision] })
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `q^n`; `None` beyond the precision.
    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    fn check_ring(&self, other: &Self) -> Result<(), SeriesError> {
        let (a, b) = (&self.coeffs[0], &other.coeffs[0]);
        if a.same_ring(b) {
            Ok(())
        } else {
            Err(SeriesError::RingMismatch(a.ring_name(), b.ring_name()))
        }
    }

    pub fn truncate(&self, precision: usize) -> Result<Self, SeriesError> {
        if precision == 0 {
            return Err(SeriesError::ZeroPrecision);
        }
        Ok(Self { coeffs: self.coeffs.iter().take(precision).cloned().collect() })
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        let t = self.precision().min(other.precision());
        let mut coeffs: Vec<R> = self.coeffs[..t].to_vec();
        for (a, b) in coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        let t = self.precision().min(other.precision());
        let mut coeffs: Vec<R> = self.coeffs[..t].to_vec();
        for (a, b) in coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(Self { coeffs })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_ring(other)?;
        let t = self.precision().min(other.precision());
        let mut coeffs = vec![self.coeffs[0].zero_like(); t];
        for (i, a) in self.coeffs[..t].iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs[..t - i].iter().enumerate() {
                if !b.is_zero_elem() {
                    coeffs[i + j] += &a.mul_ref(b);
                }
            }
        }
        Ok(Self { coeffs })
    }

    /// Multiplicative inverse to the same precision.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let head = &self.coeffs[0];
        let head_inv = head
            .unit_inverse()
            .ok_or_else(|| SeriesError::NonUnitHead(format!("{head:?}")))?;
        let t = self.precision();
        let mut out: Vec<R> = Vec::with_capacity(t);
        out.push(head_inv.clone());
        for n in 1..t {
            // out[n] = -head^{-1} · Σ_{k=1..n} a_k out[n-k]
            let mut acc = head.zero_like();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero_elem() {
                    acc += &a.mul_ref(&out[n - k]);
                }
            }
            out.push(-head_inv.mul_ref(&acc));
        }
        Ok(Self { coeffs: out })
    }

    pub fn scale(&self, c: &R) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect() }
    }

    /// In place: `self *= (1 - u·q^d)`, `u = None` meaning 1.
    pub fn mul_binomial(&mut self, u: Option<&R>, d: usize) {
        assert!(d >= 1, "binomial step must be positive");
        for n in (d..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            match u {
                None => hi[0] -= &lo[n - d],
                Some(u) => hi[0] -= &lo[n - d].mul_ref(u),
            }
        }
    }

    /// In place: `self /= (1 - u·q^d)`, `u = None` meaning 1.
    pub fn div_binomial(&mut self, u: Option<&R>, d: usize) {
        assert!(d >= 1, "binomial step must be positive");
        for n in d..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            match u {
                None => hi[0] += &lo[n - d],
                Some(u) => hi[0] += &lo[n - d].mul_ref(u),
            }
        }
    }

    /// In place: `self *= (1 - u·q^d + q^{2d})`.
    pub fn mul_pair(&mut self, u: &R, d: usize) {
        assert!(d >= 1, "pair step must be positive");
        for n in (d..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            let mut delta = lo[n - d].mul_ref(u);
            if n >= 2 * d {
                delta -= &lo[n - 2 * d];
            }
            hi[0] -= &delta;
        }
    }

    /// In place: `self /= (1 - u·q^d + q^{2d})`.
    pub fn div_pair(&mut self, u: &R, d: usize) {
        assert!(d >= 1, "pair step must be positive");
        for n in d..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            let mut delta = lo[n - d].mul_ref(u);
            if n >= 2 * d {
                delta -= &lo[n - 2 * d];
            }
            hi[0] += &delta;
        }
    }

    /// `g[n] = f[α n + β]`, with precision `⌈(T - β)/α⌉`.
    pub fn slice_progression(&self, alpha: usize, beta: usize) -> Result<Self, SeriesError> {
        if alpha == 0 || beta >= alpha {
            return Err(SeriesError::BadProgression { alpha, beta });
        }
        let coeffs: Vec<R> = self.coeffs.iter().skip(beta).step_by(alpha).cloned().collect();
        if coeffs.is_empty() {
            return Err(SeriesError::ZeroPrecision);
        }
        Ok(Self { coeffs })
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> QSeries<S> {
        QSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Index of the first non-zero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero_elem())
    }

    pub fn is_zero(&self) -> bool {
        self.first_nonzero().is_none()
    }
}

impl QSeries<BigInt> {
    /// Image of an integer series in the ring of `proto`.
    pub fn promote<S: Coeff>(&self, proto: &S) -> QSeries<S> {
        self.map(|c| proto.from_integer_like(c))
    }

    pub fn from_i64s(values: &[i64]) -> Result<Self, SeriesError> {
        Self::from_coeffs(values.iter().map(|&v| BigInt::from(v)).collect())
    }
}

/// Truncated Cauchy product.
pub fn series_mul<R: Coeff>(a: &QSeries<R>, b: &QSeries<R>) -> Result<QSeries<R>, SeriesError> {
    a.mul(b)
}

pub fn series_inv<R: Coeff>(a: &QSeries<R>) -> Result<QSeries<R>, SeriesError> {
    a.inverse()
}

pub fn slice_progression<R: Coeff>(
    f: &QSeries<R>,
    alpha: usize,
    beta: usize,
) -> Result<QSeries<R>, SeriesError> {
    f.slice_progression(alpha, beta)
}
