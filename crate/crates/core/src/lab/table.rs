use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::classical::zeros_classical;
use crate::xop::XmLaguerreParams;
use crate::zeros::ZeroFinder;
use crate::{Error, Result};

/// One row: the k-th exceptional zero (decreasing order) at each degree,
/// and its limit -x_{m,k}^{(α-1)}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: usize,
    pub values: Vec<f64>,
    pub limit: f64,
}

/// Exceptional zeros of type-I Xm-Laguerre polynomials, rows k = 1..m,
/// columns n.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExceptionalZeroTable {
    pub m: usize,
    pub alpha: f64,
    pub ns: Vec<usize>,
    pub rows: Vec<TableRow>,
}

impl ExceptionalZeroTable {
    pub const DEFAULT_M: usize = 4;
    pub const DEFAULT_ALPHA: f64 = 1.0;
    pub const DEFAULT_NS: [usize; 3] = [6, 10, 14];

    pub fn compute(m: usize, alpha: f64, ns: &[usize], finder: &ZeroFinder) -> Result<Self> {
        let p = XmLaguerreParams::new(m, alpha)?;
        if ns.is_empty() {
            return Err(Error::param("no degrees requested"));
        }
        let columns = ns
            .iter()
            .map(|&n| finder.xm_laguerre(n, &p).map(|z| z.exceptional_decreasing()))
            .collect::<Result<Vec<_>>>()?;
        let limits = zeros_classical(p.eta_family(), m)?;
        let rows = (0..m)
            .map(|k| TableRow {
                k: k + 1,
                values: columns.iter().map(|c| c[k]).collect(),
                limit: -limits[k],
            })
            .collect();
        Ok(ExceptionalZeroTable {
            m,
            alpha,
            ns: ns.to_vec(),
            rows,
        })
    }

    pub fn defaults(finder: &ZeroFinder) -> Result<Self> {
        Self::compute(Self::DEFAULT_M, Self::DEFAULT_ALPHA, &Self::DEFAULT_NS, finder)
    }

    pub fn header(&self) -> Vec<String> {
        std::iter::once("k".to_string())
            .chain(self.ns.iter().map(|n| format!("n={n}")))
            .chain(std::iter::once("limit".to_string()))
            .collect()
    }

    /// CSV with header `k,n=…,limit`, numbers in shortest round-trip form.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Numeric(format!("writing CSV: {e}"));
        w.write_record(self.header()).map_err(io)?;
        for row in &self.rows {
            let mut rec = vec![row.k.to_string()];
            rec.extend(row.values.iter().map(f64::to_string));
            rec.push(row.limit.to_string());
            w.write_record(&rec).map_err(io)?;
        }
        w.flush().map_err(|e| Error::Numeric(format!("writing CSV: {e}")))?;
        Ok(())
    }
}
