//! Ranks of the spinor summands S_r = Sym^rH⊗Λ^{n−r}_∘E and dimensions of
//! the primitive spaces, from the closed formulas and from kernels.

use serde::Serialize;

use crate::clifford::spinor_rank;
use crate::error::{out_of_range, Result};
use crate::rep_spaces::{primitive_dim, ExteriorAlgebra, PrimitiveCalculus};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimsTable {
    pub n: usize,
    /// rank S_r for r = 0..=n.
    pub ranks: Vec<i64>,
    pub sum: i64,
    pub spinor_dim: i64,
}

impl DimsTable {
    pub fn consistent(&self) -> bool {
        self.sum == self.spinor_dim && self.ranks.iter().all(|&r| r >= 0)
    }
}

pub fn dims_table(n: usize) -> Result<DimsTable> {
    if n == 0 {
        return out_of_range("rank table needs n ≥ 1");
    }
    let ranks: Vec<i64> = (0..=n as i32).map(|r| spinor_rank(n, r)).collect();
    Ok(DimsTable { n, sum: ranks.iter().sum(), ranks, spinor_dim: 1 << (2 * n) })
}

/// Formulas against honest kernel dimensions: dim ker(Λ: Λ^s → Λ^{s−2}),
/// and rank S_r against (r+1)·dim Λ^{n−r}_∘E computed that way.
pub fn check_dimensions(n: usize) -> Result<Report> {
    let table = dims_table(n)?;
    let mut rep = Report::new();
    rep.check(format!("Σ rank S_r = 2^{}", 2 * n), table.consistent(), || {
        format!("ranks {:?} sum to {}", table.ranks, table.sum)
    });
    let ext = ExteriorAlgebra::new(n);
    let mut kernel = Vec::new();
    for s in 0..=n as i32 {
        let lam = ext.dual_lefschetz(s);
        let k = ext.dim(s) - lam.rank();
        rep.check(format!("dim Λ^{s}_∘E = C(2n,s) − C(2n,s−2)"), k == primitive_dim(n, s), || {
            format!("kernel has dimension {k}, formula gives {}", primitive_dim(n, s))
        });
        kernel.push(k);
    }
    let pc = PrimitiveCalculus::new(n)?;
    rep.check("primitive calculus uses the same kernels", (0..=n as i32).all(|s| pc.dim(s) == kernel[s as usize]), || {
        format!("{:?}", (0..=n as i32).map(|s| pc.dim(s)).collect::<Vec<_>>())
    });
    for r in 0..=n {
        let from_kernel = ((r + 1) * kernel[n - r]) as i64;
        rep.check(format!("rank S_{r}"), from_kernel == table.ranks[r], || {
            format!("kernel count {from_kernel}, formula {}", table.ranks[r])
        });
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        assert_eq!(dims_table(2).unwrap().ranks, vec![5, 8, 3]);
        assert_eq!(dims_table(3).unwrap().ranks, vec![14, 28, 18, 4]);
        let t1 = dims_table(1).unwrap();
        assert_eq!(t1.ranks, vec![2, 2]);
        assert!(t1.consistent());
        assert!(dims_table(0).is_err());
    }

    #[test]
    fn kernels_match() {
        for n in 1..=4 {
            let rep = check_dimensions(n).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.first_failure());
        }
    }
}
