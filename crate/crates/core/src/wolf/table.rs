//! The eight Wolf spaces: the trace identity Σ dim𝔨_i(1 − l_i) = dim𝔭/2,
//! the curvature eigenvalues (1 − l_i)/2 and the regularity of ρ^hyper.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{serialize_display, Report};
use crate::scalars::q;
use crate::Rational;

#[derive(Clone, Debug, Serialize)]
pub struct IdealEntry {
    pub name: String,
    pub dim: usize,
    /// `None` when the constant is to be solved from the trace identity.
    #[serde(skip)]
    pub l: Option<Rational>,
    pub quaternionic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WolfEntry {
    pub name: String,
    pub n: usize,
    pub ideals: Vec<IdealEntry>,
    /// ρ eigenvalue per ideal from the classification.
    #[serde(skip)]
    pub rho_tabulated: Vec<Rational>,
    /// Only ℍPⁿ has a degenerate ρ^hyper.
    pub projective: bool,
}

impl WolfEntry {
    pub fn dim_p(&self) -> usize {
        4 * self.n
    }
}

fn ideal(name: &str, dim: usize, l: Option<Rational>, quaternionic: bool) -> IdealEntry {
    IdealEntry { name: name.into(), dim, l, quaternionic }
}

/// l_{𝔰𝔭(1)} = 2/(n+2) for the quaternionic 𝔰𝔭(1).
pub fn quaternionic_l(n: usize) -> Rational {
    q(2, n as i64 + 2)
}

/// The eight entries, with the three classical families at quaternionic
/// dimension `n`.
pub fn wolf_table(n: usize) -> Result<Vec<WolfEntry>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("the classical families need n ≥ 2, got n={n}")));
    }
    let ni = n as i64;
    let sp1 = || ideal("sp(1)", 3, None, true);
    let entry = |name: String, n: usize, ideals: Vec<IdealEntry>, rho: Vec<Rational>| WolfEntry {
        name,
        n,
        ideals,
        rho_tabulated: rho,
        projective: false,
    };
    let mut hp = entry(
        format!("Sp({})/Sp(1)Sp({n})", n + 1),
        n,
        vec![sp1(), ideal(&format!("sp({n})"), n * (2 * n + 1), Some(q(ni + 1, ni + 2)), false)],
        vec![q(ni, 2 * (ni + 2)), q(1, 2 * (ni + 2))],
    );
    hp.projective = true;
    Ok(vec![
        hp,
        entry(
            format!("SU({})/S(U(2)U({n}))", n + 2),
            n,
            vec![sp1(), ideal(&format!("su({n})"), n * n - 1, Some(q(ni, ni + 2)), false), ideal("R", 1, Some(q(0, 1)), false)],
            vec![q(ni, 2 * (ni + 2)), q(1, ni + 2), q(1, 2)],
        ),
        entry(
            format!("SO({})/S(O(4)O({n}))", n + 4),
            n,
            vec![sp1(), ideal("sp~(1)", 3, None, false), ideal(&format!("so({n})"), n * (n - 1) / 2, Some(q(ni - 2, ni + 2)), false)],
            vec![q(ni, 2 * (ni + 2)), q(ni, 2 * (ni + 2)), q(2, ni + 2)],
        ),
        entry("G2/SO(4)".into(), 2, vec![sp1(), ideal("sp~(1)", 3, None, false)], vec![q(1, 4), q(5, 12)]),
        entry("F4/Sp(1)Sp(3)".into(), 7, vec![sp1(), ideal("sp(3)", 21, None, false)], vec![q(7, 18), q(5, 18)]),
        entry("E6/Sp(1)SU(6)".into(), 10, vec![sp1(), ideal("su(6)", 35, None, false)], vec![q(5, 12), q(1, 4)]),
        entry("E7/Sp(1)Spin(12)".into(), 16, vec![sp1(), ideal("so(12)", 66, None, false)], vec![q(4, 9), q(2, 9)]),
        entry("E8/Sp(1)E7".into(), 28, vec![sp1(), ideal("e7", 133, None, false)], vec![q(7, 15), q(1, 5)]),
    ])
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceIdentity {
    #[serde(serialize_with = "serialize_list")]
    pub l: Vec<Rational>,
    /// Index of the ideal whose constant was solved for.
    pub solved: Option<usize>,
}

fn serialize_list<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Σ_i dim𝔨_i(1 − l_i) = dim𝔭/2 = 2n, with the quaternionic l supplied
/// and at most one other constant unknown, which is then solved for.
pub fn check_trace_identity(entry: &WolfEntry) -> Result<TraceIdentity> {
    let target = q(entry.dim_p() as i64, 2);
    let mut l: Vec<Option<Rational>> = entry
        .ideals
        .iter()
        .map(|i| if i.quaternionic && i.l.is_none() { Some(quaternionic_l(entry.n)) } else { i.l.clone() })
        .collect();
    let unknown: Vec<usize> = (0..l.len()).filter(|&i| l[i].is_none()).collect();
    if unknown.len() > 1 {
        return Err(Error::Invalid(format!("{}: {} unknown constants, the trace identity fixes one", entry.name, unknown.len())));
    }
    let known: Rational = entry
        .ideals
        .iter()
        .zip(&l)
        .filter_map(|(i, l)| l.as_ref().map(|l| q(i.dim as i64, 1) * (q(1, 1) - l)))
        .fold(q(0, 1), |a, b| a + b);
    let solved = unknown.first().copied();
    match solved {
        Some(u) => {
            let dim = q(entry.ideals[u].dim as i64, 1);
            l[u] = Some(q(1, 1) - (&target - known) / dim);
        }
        None if known != target => {
            return Err(Error::Failed(format!("{}: Σ dim(1 − l) = {known}, expected {target}", entry.name)));
        }
        None => {}
    }
    Ok(TraceIdentity { l: l.into_iter().map(|x| x.expect("filled")).collect(), solved })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regularity {
    #[serde(rename = "REGULAR")]
    Regular,
    #[serde(rename = "DEGENERATE")]
    Degenerate,
}

/// ρ^hyper eigenvalue (1 − l_i)/2 − 1/(2(n+2)) on each ideal inside 𝔰𝔭(n).
pub fn check_regularity_criterion(entry: &WolfEntry, l: &[Rational]) -> Result<(Vec<(String, Rational)>, Regularity)> {
    if l.len() != entry.ideals.len() {
        return Err(Error::Invalid(format!("{}: {} l-values for {} ideals", entry.name, l.len(), entry.ideals.len())));
    }
    let reference = q(1, 2 * (entry.n as i64 + 2));
    let hyper: Vec<(String, Rational)> = entry
        .ideals
        .iter()
        .zip(l)
        .filter(|(i, _)| !i.quaternionic)
        .map(|(i, l)| (i.name.clone(), (q(1, 1) - l) / q(2, 1) - &reference))
        .collect();
    let verdict = if hyper.iter().any(|(_, v)| v.is_zero()) { Regularity::Degenerate } else { Regularity::Regular };
    Ok((hyper, verdict))
}

/// One printable row of the table.
#[derive(Clone, Debug, Serialize)]
pub struct WolfRow {
    pub name: String,
    pub n: usize,
    pub ideals: Vec<WolfRowIdeal>,
    pub verdict: Regularity,
}

#[derive(Clone, Debug, Serialize)]
pub struct WolfRowIdeal {
    pub name: String,
    pub dim: usize,
    #[serde(serialize_with = "serialize_display")]
    pub l: Rational,
    pub solved: bool,
    #[serde(serialize_with = "serialize_display")]
    pub rho: Rational,
    /// Absent on the quaternionic 𝔰𝔭(1).
    #[serde(serialize_with = "serialize_opt")]
    pub rho_hyper: Option<Rational>,
}

fn serialize_opt<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

pub fn wolf_row(entry: &WolfEntry) -> Result<WolfRow> {
    let tr = check_trace_identity(entry)?;
    let (hyper, verdict) = check_regularity_criterion(entry, &tr.l)?;
    let ideals = entry
        .ideals
        .iter()
        .enumerate()
        .map(|(k, i)| WolfRowIdeal {
            name: i.name.clone(),
            dim: i.dim,
            l: tr.l[k].clone(),
            solved: tr.solved == Some(k),
            rho: (q(1, 1) - &tr.l[k]) / q(2, 1),
            rho_hyper: hyper.iter().find(|(name, _)| *name == i.name).map(|(_, v)| v.clone()),
        })
        .collect();
    Ok(WolfRow { name: entry.name.clone(), n: entry.n, ideals, verdict })
}

/// Trace identity, tabulated ρ, and regularity for all eight entries.
pub fn check_wolf_table(n: usize) -> Result<Report> {
    let mut rep = Report::new();
    // ρ^H = −2n proj_𝔰𝔭(1), ρ^E = −2 proj_𝔰𝔭(n), κ = 2n
    let ni = n as i64;
    let weyl = q(-2 * ni, 8 * ni * (ni + 2));
    let reference = [&weyl * q(-2 * ni, 1), &weyl * q(-2, 1)];
    rep.check(
        "−κ/(8n(n+2))(ρ^H + ρ^E) at κ = 2n",
        reference == [q(ni, 2 * (ni + 2)), q(1, 2 * (ni + 2))],
        || format!("{} and {}", reference[0], reference[1]),
    );
    for entry in wolf_table(n)? {
        let row = match wolf_row(&entry) {
            Ok(r) => r,
            Err(e) => {
                rep.fail(format!("{}: trace identity", entry.name), e.to_string());
                continue;
            }
        };
        rep.pass(format!("{}: trace identity", entry.name));
        let rho: Vec<Rational> = row.ideals.iter().map(|i| i.rho.clone()).collect();
        rep.check(format!("{}: ρ = (1 − l)/2 matches the known values", entry.name), rho == entry.rho_tabulated, || {
            format!("{:?}", rho.iter().map(|x| x.to_string()).collect::<Vec<_>>())
        });
        let quat = row.ideals.iter().find(|i| entry.ideals.iter().any(|e| e.quaternionic && e.name == i.name));
        if let Some(qi) = quat {
            let hyper = &qi.rho - q(entry.n as i64, 2 * (entry.n as i64 + 2));
            rep.check(format!("{}: ρ^hyper = 0 on the quaternionic sp(1)", entry.name), hyper.is_zero(), || hyper.to_string());
        }
        let want = if entry.projective { Regularity::Degenerate } else { Regularity::Regular };
        rep.check(format!("{}: {:?}", entry.name, want), row.verdict == want, || format!("{:?}", row.verdict));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solved(name_prefix: &str) -> Rational {
        let t = wolf_table(2).unwrap();
        let e = t.iter().find(|e| e.name.starts_with(name_prefix)).unwrap();
        let tr = check_trace_identity(e).unwrap();
        tr.l[tr.solved.unwrap()].clone()
    }

    #[test]
    fn solved_constants() {
        assert_eq!(solved("F4"), q(4, 9));
        assert_eq!(solved("E6"), q(1, 2));
        assert_eq!(solved("E7"), q(5, 9));
        assert_eq!(solved("E8"), q(3, 5));
        assert_eq!(solved("G2"), q(1, 6));
        assert_eq!(solved("SO"), q(1, 2));
    }

    #[test]
    fn regularity() {
        let t = wolf_table(3).unwrap();
        let verdicts: Vec<_> = t.iter().map(|e| wolf_row(e).unwrap().verdict).collect();
        assert_eq!(verdicts[0], Regularity::Degenerate);
        assert!(verdicts[1..].iter().all(|v| *v == Regularity::Regular));
        let g2 = wolf_row(&t[3]).unwrap();
        assert_eq!(g2.ideals[1].rho_hyper, Some(q(7, 24)));
        let gr = wolf_row(&t[1]).unwrap();
        assert_eq!(gr.ideals[1].rho_hyper, Some(q(1, 10)));
    }

    #[test]
    fn two_unknowns_rejected() {
        let mut e = wolf_table(2).unwrap().remove(4);
        e.ideals.push(ideal("extra", 1, None, false));
        assert!(check_trace_identity(&e).is_err());
    }

    #[test]
    fn inconsistent_rejected() {
        let mut e = wolf_table(2).unwrap().remove(0);
        e.ideals[1].l = Some(q(1, 2));
        assert!(check_trace_identity(&e).is_err());
    }

    #[test]
    fn whole_table() {
        for n in 2..=6 {
            let rep = check_wolf_table(n).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.first_failure());
        }
    }
}
