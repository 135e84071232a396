//! Frame sums Σ_a μ(X_a)μ'(X_a) and the right inverses ι built from them.

use num_traits::Zero;

use super::{Clifford, MuKind, TangentFrame};
use crate::error::{out_of_range, Error, Result};
use crate::report::Report;
use crate::scalars::{q, Space};
use crate::{RatMatrix, Rational, Scalar, ScalarMatrix};

/// Displayed value of Σ_a k1(X_a)k2(X_a) on Sym^rH⊗Λ^s_∘E, or `None`
/// for the mixed combinations, which sum to zero.
pub fn summe_value(n: usize, r: i32, s: i32, k1: MuKind, k2: MuKind) -> Option<Rational> {
    use MuKind::*;
    let (n, r, s) = (n as i64, r as i64, s as i64);
    let e = q(2 * (2 * n - s + 2) * (n - s), n - s + 1);
    let h = q(r + 2, r + 1);
    match (k1, k2) {
        (PlusPlus, MinusMinus) => Some(q(2 * s, 1)),
        (PlusMinus, MinusPlus) => Some(-e),
        (MinusPlus, PlusMinus) => Some(-(q(2 * s, 1) * h)),
        (MinusMinus, PlusPlus) => Some(e * h),
        _ => None,
    }
}

/// Σ_a k1(X_a)∘k2(X_a) on (r,s), computed as 2Σ T_{pq} U_p U_q from the
/// completeness tensor T. `None` when the composite passes through or ends
/// in a degree outside the admissible range, where it is the zero map.
pub fn frame_sum(cl: &Clifford, frame: &TangentFrame, k1: MuKind, k2: MuKind, r: i32, s: i32) -> Result<Option<RatMatrix>> {
    if !cl.fiber(r, s).admissible() {
        return out_of_range(format!("frame sum on inadmissible fiber (r,s)=({r},{s})"));
    }
    let (d1, e1) = k2.shift();
    let (d2, e2) = k1.shift();
    let (mr, ms) = (r + d1, s + e1);
    if !cl.fiber(mr, ms).admissible() || !cl.fiber(mr + d2, ms + e2).admissible() {
        return Ok(None);
    }
    let t = frame.effective_completeness();
    let d = 2 * cl.n();
    let m = 2 * d;
    let mut inner: Vec<Option<RatMatrix>> = vec![None; m];
    let mut acc: Option<RatMatrix> = None;
    for p in 0..m {
        let mut outer: Option<RatMatrix> = None;
        for qq in 0..m {
            let c = &t[(p, qq)];
            if c.is_zero() {
                continue;
            }
            if inner[qq].is_none() {
                inner[qq] = Some(cl.mu_unit(k2, qq / d, qq % d, r, s)?);
            }
            let first = inner[qq].as_ref().expect("just built");
            if outer.is_none() {
                outer = Some(cl.mu_unit(k1, p / d, p % d, mr, ms)?);
            }
            let prod = outer.as_ref().expect("just built").compose(first)?;
            match &mut acc {
                None => acc = Some(prod.scale(&(c * q(2, 1)))),
                Some(a) => a.add_scaled(&(c * q(2, 1)), &prod)?,
            }
        }
    }
    match acc {
        Some(a) => Ok(Some(a)),
        None => {
            let src = cl.fiber(r, s);
            let dst = cl.fiber(mr + d2, ms + e2);
            Ok(Some(
                RatMatrix::zeros(cl.fiber_dim(dst.r, dst.s), cl.fiber_dim(r, s)).labeled(dst.space(), src.space()),
            ))
        }
    }
}

/// The four closed-form sums hold (where they can be formed) on (r,s).
pub(crate) fn summe_holds(cl: &Clifford, frame: &TangentFrame, r: i32, s: i32) -> Result<bool> {
    for (k1, k2) in closed_form_pairs() {
        let value = summe_value(cl.n(), r, s, k1, k2).expect("closed-form pair");
        if let Some(m) = frame_sum(cl, frame, k1, k2, r, s)? {
            let want = RatMatrix::scalar(m.rows(), value).labeled(m.codomain().clone(), m.domain().clone());
            if !m.same_entries(&want) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn closed_form_pairs() -> [(MuKind, MuKind); 4] {
    use MuKind::*;
    [(PlusPlus, MinusMinus), (PlusMinus, MinusPlus), (MinusPlus, PlusMinus), (MinusMinus, PlusPlus)]
}

/// All sixteen frame sums on Sym^rH⊗Λ^s_∘E: the four closed-form ones and
/// the vanishing of every other combination that can be formed.
pub fn check_summe(cl: &Clifford, frame: &TangentFrame, r: i32, s: i32) -> Result<Report> {
    let n = cl.n();
    let mut rep = Report::new();
    for k1 in MuKind::ALL {
        for k2 in MuKind::ALL {
            let name = format!("Σ {}{} on (r,s)=({r},{s})", k1.name(), k2.name());
            let value = summe_value(n, r, s, k1, k2);
            match (frame_sum(cl, frame, k1, k2, r, s)?, value) {
                (Some(m), Some(v)) => {
                    let want = RatMatrix::scalar(m.rows(), v).labeled(m.codomain().clone(), m.domain().clone());
                    rep.matrix_eq(name, &m, &want);
                }
                (Some(m), None) => rep.is_zero(name, &m),
                (None, Some(v)) if v.is_zero() => {
                    rep.note(name, "passes through a zero space; closed-form value is 0")
                }
                (None, Some(v)) => rep.skip(
                    name,
                    format!(
                        "{} leaves the admissible range on this fiber, so the sum is 0; the closed-form value {v} presumes r ≥ 1",
                        k2.name()
                    ),
                ),
                (None, None) => {}
            }
        }
    }
    Ok(rep)
}

/// Σ_a k1(X_a)∘k2(X_a) computed vector by vector in ℚ(i,√2), without the
/// completeness tensor.
pub fn frame_sum_explicit(cl: &Clifford, frame: &TangentFrame, k1: MuKind, k2: MuKind, r: i32, s: i32) -> Result<ScalarMatrix> {
    let (dr, ds) = k2.shift();
    let mut acc: Option<ScalarMatrix> = None;
    for x in &frame.vectors {
        let p = cl.build_mu(k1, x, r + dr, s + ds)?.compose(&cl.build_mu(k2, x, r, s)?)?;
        match &mut acc {
            None => acc = Some(p),
            Some(a) => a.add_scaled(&Scalar::real(q(1, 1)), &p)?,
        }
    }
    acc.ok_or_else(|| Error::Failed("empty frame".into()))
}

/// The four closed-form sums agree for two different frames, each summed
/// vector by vector, on every fiber where all four can be formed.
pub fn check_frame_independence(cl: &Clifford, a: &TangentFrame, b: &TangentFrame) -> Result<Report> {
    let n = cl.n() as i32;
    let mut rep = Report::new();
    for r in 1..=n {
        for s in 1..n {
            for (k1, k2) in closed_form_pairs() {
                let x = frame_sum_explicit(cl, a, k1, k2, r, s)?;
                let y = frame_sum_explicit(cl, b, k1, k2, r, s)?;
                rep.matrix_eq(format!("Σ {}{} on ({r},{s}): {} = {}", k1.name(), k2.name(), a.construction, b.construction), &x, &y);
            }
        }
    }
    Ok(rep)
}

fn opposite(kind: MuKind) -> MuKind {
    match kind {
        MuKind::PlusMinus => MuKind::MinusPlus,
        MuKind::MinusPlus => MuKind::PlusMinus,
        MuKind::PlusPlus => MuKind::MinusMinus,
        MuKind::MinusMinus => MuKind::PlusPlus,
    }
}

/// Coefficient c of ι = c Σ_a X_a⊗μ'(X_a), the right inverse of `kind` on
/// TM⊗S_r.
pub fn iota_coefficient(kind: MuKind, n: usize, r: i32) -> Rational {
    let (n, r) = (n as i64, r as i64);
    match kind {
        // ι^−_+
        MuKind::PlusMinus => q(-(r + 2), 2 * (n + r + 3) * (r + 1)),
        // ι^+_−
        MuKind::MinusPlus => q(-r, 2 * (n - r + 1) * (r + 1)),
        // ι^−_−
        MuKind::PlusPlus => q(1, 2 * (n - r + 1)),
        // ι^+_+
        MuKind::MinusMinus => q(r * (r + 2), 2 * (n + r + 3) * (r + 1) * (r + 1)),
    }
}

fn tangent_label(n: usize) -> Space {
    Space::tensor(&Space::h(), &Space::e(n))
}

/// The right inverse of `kind` : TM⊗S_r → S_r + shift, as a map into
/// (H⊗E)⊗S_r built from the frame vectors.
pub fn build_iota(cl: &Clifford, frame: &TangentFrame, kind: MuKind, r: i32) -> Result<ScalarMatrix> {
    let n = cl.n();
    let s = n as i32 - r;
    let (dr, ds) = kind.shift();
    let src = cl.fiber(r + dr, s + ds);
    if !cl.fiber(r, s).admissible() || !src.admissible() {
        return out_of_range(format!("ι for {} at r={r} has no admissible domain", kind.name()));
    }
    let c = Scalar::real(iota_coefficient(kind, n, r));
    let d = 2 * n;
    let fib = cl.fiber_dim(r, s);
    let mut out = ScalarMatrix::zeros(2 * d * fib, cl.fiber_dim(src.r, src.s))
        .labeled(Space::tensor(&tangent_label(n), &cl.fiber(r, s).space()), src.space());
    let inner = opposite(kind);
    for x in &frame.vectors {
        let m = cl.build_mu(inner, x, src.r, src.s)?.scale(&c);
        for p in 0..2 * d {
            let coeff = &x.coeffs[p];
            if coeff.is_zero() {
                continue;
            }
            let block = m.scale(coeff);
            out.add_block(p * fib, 0, &block);
        }
    }
    Ok(out)
}

/// μ of the given kind as a map (H⊗E)⊗Sym^rH⊗Λ^s_∘E → target fiber.
pub fn mu_on_tangent(cl: &Clifford, kind: MuKind, r: i32, s: i32) -> Result<ScalarMatrix> {
    let n = cl.n();
    let d = 2 * n;
    let (dr, ds) = kind.shift();
    let dst = cl.fiber(r + dr, s + ds);
    let fib = cl.fiber_dim(r, s);
    let mut out = ScalarMatrix::zeros(cl.fiber_dim(dst.r, dst.s), 2 * d * fib)
        .labeled(dst.space(), Space::tensor(&tangent_label(n), &cl.fiber(r, s).space()));
    let sqrt2 = Scalar::sqrt2();
    for p in 0..2 * d {
        let u = cl.mu_unit(kind, p / d, p % d, r, s)?;
        out.set_block(0, p * fib, &u.map(|v| sqrt2.scale(v)));
    }
    Ok(out)
}

/// μ∘ι = id for the four right inverses on TM⊗S_r.
pub fn check_right_inverses(cl: &Clifford, frame: &TangentFrame, r: i32) -> Result<Report> {
    let n = cl.n();
    if r < 0 || r as usize > n {
        return out_of_range(format!("right inverses need 0 ≤ r ≤ n, got r={r}"));
    }
    let s = n as i32 - r;
    let mut rep = Report::new();
    for kind in MuKind::ALL {
        let (dr, ds) = kind.shift();
        let name = format!("{}∘ι on ({},{})", kind.name(), r + dr, s + ds);
        if !cl.fiber(r + dr, s + ds).admissible() {
            let c = iota_coefficient(kind, n, r);
            let detail = format!("target fiber is zero; coefficient {c}");
            rep.note(name, detail);
            continue;
        }
        let iota = build_iota(cl, frame, kind, r)?;
        let mu = mu_on_tangent(cl, kind, r, s)?;
        let comp = mu.compose(&iota)?;
        let id = ScalarMatrix::identity(comp.rows()).labeled(comp.codomain().clone(), comp.domain().clone());
        rep.matrix_eq(name, &comp, &id);
    }
    if rep.checks.is_empty() {
        return Err(Error::Failed("no right inverse was formed".into()));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::super::{build_frame, build_frame_rotated};
    use super::*;
    use crate::scalars::qi;

    fn id_times(m: &RatMatrix, v: i64) -> bool {
        m.same_entries(&RatMatrix::scalar(m.rows(), qi(v)))
    }

    #[test]
    fn n2_examples() {
        let cl = Clifford::new(2).unwrap();
        let f = build_frame(&cl).unwrap();
        use MuKind::*;
        let m = frame_sum(&cl, &f, PlusPlus, MinusMinus, 1, 1).unwrap().unwrap();
        assert!(id_times(&m, 2));
        let m = frame_sum(&cl, &f, MinusPlus, PlusMinus, 1, 1).unwrap().unwrap();
        assert!(id_times(&m, -3));
        let m = frame_sum(&cl, &f, MinusMinus, PlusPlus, 1, 1).unwrap().unwrap();
        assert!(m.same_entries(&RatMatrix::scalar(m.rows(), q(15, 2))));
        let m = frame_sum(&cl, &f, PlusMinus, MinusPlus, 0, 2);
        assert!(m.unwrap().is_none());
    }

    #[test]
    fn n3_mixed_sum_vanishes() {
        let cl = Clifford::new(3).unwrap();
        let f = build_frame(&cl).unwrap();
        // at (1,2) the composite would end in Λ^4_∘E, which is zero for n = 3
        assert!(frame_sum(&cl, &f, MuKind::PlusPlus, MuKind::MinusPlus, 1, 2).unwrap().is_none());
        let m = frame_sum(&cl, &f, MuKind::PlusPlus, MuKind::MinusPlus, 1, 1).unwrap().unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn summe_all_small() {
        for n in 1..=3 {
            let cl = Clifford::new(n).unwrap();
            let f = build_frame(&cl).unwrap();
            for r in 0..=3 {
                for s in 0..=n as i32 {
                    let rep = check_summe(&cl, &f, r, s).unwrap();
                    assert!(rep.passed(), "n={n} r={r} s={s}: {:?}", rep.first_failure());
                }
            }
        }
    }

    #[test]
    fn explicit_frame_sums_agree_with_completeness_tensor() {
        let cl = Clifford::new(2).unwrap();
        let f = build_frame(&cl).unwrap();
        let g = build_frame_rotated(&cl).unwrap();
        for (k1, k2) in closed_form_pairs() {
            let via_t = frame_sum(&cl, &f, k1, k2, 1, 1).unwrap().unwrap();
            let explicit = frame_sum_explicit(&cl, &f, k1, k2, 1, 1).unwrap();
            assert!(explicit.same_entries(&via_t.map(|v| Scalar::real(v.clone()))), "{} {}", k1.name(), k2.name());
        }
        let rep = check_frame_independence(&cl, &f, &g).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn right_inverses() {
        for n in 1..=3 {
            let cl = Clifford::new(n).unwrap();
            let f = build_frame(&cl).unwrap();
            for r in 0..=n as i32 {
                let rep = check_right_inverses(&cl, &f, r).unwrap();
                assert!(rep.passed(), "n={n} r={r}: {:?}", rep.first_failure());
            }
        }
        assert_eq!(iota_coefficient(MuKind::PlusMinus, 2, 0), q(-1, 5));
        assert_eq!(iota_coefficient(MuKind::MinusPlus, 2, 1), q(-1, 8));
        assert_eq!(iota_coefficient(MuKind::MinusPlus, 2, 0), q(0, 1));
    }
}
