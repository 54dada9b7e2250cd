//! Eigenvalues of symmetric tridiagonal matrices by Sturm-count bisection.

/// Symmetric tridiagonal matrix given by its diagonal and off-diagonal.
#[derive(Debug, Clone)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

const PIVOT_GUARD: f64 = 1e-300;

impl SymTridiagonal {
    /// `off.len()` must be `diag.len() - 1` (or 0 for an empty matrix).
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(off.len() + 1, diag.len().max(1), "off-diagonal length mismatch");
        SymTridiagonal { diag, off }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below `lambda` (negative LDLᵀ pivots).
    pub fn count_below(&self, lambda: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diag.iter().enumerate() {
            let coupling = if i == 0 {
                0.0
            } else {
                self.off[i - 1] * self.off[i - 1] / q
            };
            q = d - lambda - coupling;
            if q == 0.0 {
                q = -PIVOT_GUARD;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin enclosure of the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// All eigenvalues in increasing order, each bisected until its bracket
    /// is narrower than `abs_tol` (or cannot shrink in f64).
    pub fn eigenvalues(&self, abs_tol: f64) -> Vec<f64> {
        let n = self.len();
        if n == 0 {
            return Vec::new();
        }
        let (glo, ghi) = self.gershgorin();
        let pad = 1e-12 * (1.0 + glo.abs().max(ghi.abs()));
        let (glo, ghi) = (glo - pad, ghi + pad);
        let mut out = Vec::with_capacity(n);
        let mut floor = glo;
        for k in 0..n {
            // smallest λ with count_below(λ) > k
            let mut lo = floor;
            let mut hi = ghi;
            loop {
                let mid = 0.5 * (lo + hi);
                if hi - lo <= abs_tol || mid <= lo || mid >= hi {
                    break;
                }
                if self.count_below(mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let ev = 0.5 * (lo + hi);
            out.push(ev);
            floor = lo;
        }
        out
    }
}
