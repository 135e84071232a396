//! Verification suites and the instance grid each one runs over.

use std::sync::OnceLock;
use std::time::Instant;

use clap::ValueEnum;
use qksl_core::clifford::{
    build_frame, check_right_inverses, check_summe, check_wedge_identities, Clifford, TangentFrame,
};
use qksl_core::killing::{
    check_curvature_term_vanishing, check_killing_curvature, check_killing_equation_consequences, check_laplace,
    check_skew_hermitian, CurvatureModel, Quartic,
};
use qksl_core::rep_spaces::{
    check_kom1, check_kom2, check_operator_identity, check_pr_tilde_k, check_projector_relations_e,
    check_projector_relations_h, check_wedge_circ,
};
use qksl_core::scalars::q;
use qksl_core::weitzenbock::{
    check_twistor_corollary, d_minus_minus_closed_form, derive_min_identity, solve_limiting_system,
    solve_psi_minus_row,
};
use qksl_core::wolf::{check_classical_family, check_wolf_table, ClassicalFamily};
use qksl_core::{Error, Report, Result, Status};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Kom1,
    Kom2,
    Proj,
    Summe,
    Iota,
    Projectors,
    Weitzenbock,
    Twistor,
    KillingCurvature,
    Laplace,
    Hermitian,
    Wolf,
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Kom1,
    Kom2,
    Proj,
    Summe,
    Iota,
    Projectors,
    Weitzenbock,
    Twistor,
    KillingCurvature,
    Laplace,
    Hermitian,
    Wolf,
    All,
}

impl SuiteArg {
    pub fn suites(self) -> Vec<Suite> {
        let all = Suite::value_variants().to_vec();
        match self {
            SuiteArg::All => all,
            one => {
                let name = one.to_possible_value().expect("named").get_name().to_string();
                all.into_iter().filter(|s| s.name() == name).collect()
            }
        }
    }
}

/// Parameters identifying one instance; the derived order is the emission
/// order within a suite.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
}

impl Params {
    fn n(n: usize) -> Self {
        Params { n: Some(n), ..Default::default() }
    }

    fn r(mut self, r: i32) -> Self {
        self.r = Some(r);
        self
    }

    fn s(mut self, s: i32) -> Self {
        self.s = Some(s);
        self
    }

    fn case(mut self, c: &str) -> Self {
        self.case = Some(c.into());
        self
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(f) = &self.family {
            parts.push(f.clone());
        }
        if let Some(c) = &self.case {
            parts.push(c.clone());
        }
        for (k, v) in [("n", self.n.map(|x| x as i64)), ("r", self.r.map(i64::from)), ("s", self.s.map(i64::from))] {
            if let Some(v) = v {
                parts.push(format!("{k}={v}"));
            }
        }
        parts.join(" ")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Skip {
    pub check: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub suite: Suite,
    #[serde(flatten)]
    pub params: Params,
    pub status: Status,
    /// Number of checks that passed.
    pub checks: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Skip>,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Clone, Copy, Debug)]
pub struct Grid {
    pub n_max: usize,
    pub r_max: i32,
}

/// Clifford data per n, built once and shared across instances.
struct Cache {
    cl: Vec<OnceLock<Result<(Clifford, TangentFrame)>>>,
}

impl Cache {
    fn new(n_max: usize) -> Self {
        Cache { cl: (0..=n_max).map(|_| OnceLock::new()).collect() }
    }

    fn get(&self, n: usize) -> Result<&(Clifford, TangentFrame)> {
        self.cl[n]
            .get_or_init(|| {
                let cl = Clifford::new(n)?;
                let frame = build_frame(&cl)?;
                Ok((cl, frame))
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

type Job = Box<dyn Fn(&Cache) -> Result<Report> + Send + Sync>;

struct Task {
    suite: Suite,
    params: Params,
    job: Job,
}

#[cfg(test)]
fn task(suite: Suite, params: Params, job: impl Fn(&Cache) -> Result<Report> + Send + Sync + 'static) -> Task {
    Task { suite, params, job: Box::new(job) }
}

fn tasks(suite: Suite, grid: Grid) -> Vec<Task> {
    let ns = 2..=grid.n_max;
    let rs = 0..=grid.r_max;
    let mut out = Vec::new();
    let t = |p: Params, job: Job| Task { suite, params: p, job };
    match suite {
        Suite::Kom1 => {
            for n in ns {
                for s in 0..=n as i32 {
                    out.push(t(Params::n(n).s(s), Box::new(move |c| check_kom1(&c.get(n)?.0.pc, s))));
                }
            }
        }
        Suite::Kom2 => {
            for r in rs {
                out.push(t(Params::default().r(r), Box::new(move |_| check_kom2(r))));
            }
        }
        Suite::Proj => {
            for n in ns {
                for s in 0..n as i32 {
                    out.push(t(Params::n(n).s(s), Box::new(move |c| check_wedge_circ(&c.get(n)?.0.pc, s))));
                }
            }
        }
        Suite::Summe => {
            for n in ns {
                for r in rs.clone() {
                    for s in 0..=n as i32 {
                        out.push(t(
                            Params::n(n).r(r).s(s),
                            Box::new(move |c| {
                                let (cl, frame) = c.get(n)?;
                                check_summe(cl, frame, r, s)
                            }),
                        ));
                    }
                }
            }
        }
        Suite::Iota => {
            for n in ns {
                for r in 0..=(n as i32).min(grid.r_max) {
                    out.push(t(
                        Params::n(n).r(r),
                        Box::new(move |c| {
                            let (cl, frame) = c.get(n)?;
                            check_right_inverses(cl, frame, r)
                        }),
                    ));
                }
            }
        }
        Suite::Projectors => {
            for r in rs {
                out.push(t(Params::default().r(r).case("H"), Box::new(move |_| check_projector_relations_h(r))));
            }
            for n in ns {
                for s in 1..=n as i32 {
                    out.push(t(Params::n(n).s(s).case("p̃r_K"), Box::new(move |c| check_pr_tilde_k(&c.get(n)?.0.pc, s))));
                    if s >= 2 {
                        out.push(t(
                            Params::n(n).s(s).case("E"),
                            Box::new(move |c| check_projector_relations_e(&c.get(n)?.0.pc, s)),
                        ));
                        out.push(t(
                            Params::n(n).s(s).case("operator identity"),
                            Box::new(move |c| check_operator_identity(&c.get(n)?.0.pc, s)),
                        ));
                    }
                }
            }
        }
        Suite::Weitzenbock => {
            for n in ns {
                for r in 1..n as i32 {
                    out.push(t(Params::n(n).r(r).case("key identity"), Box::new(move |_| key_identity(n, r))));
                }
                out.push(t(Params::n(n).case("limiting system"), Box::new(move |_| limiting(n))));
                out.push(t(Params::n(n).case("ψ₋ row"), Box::new(move |_| solve_psi_minus_row(n))));
            }
        }
        Suite::Twistor => {
            for n in ns {
                for r in rs.clone() {
                    for s in 2..=n as i32 {
                        out.push(t(Params::n(n).r(r).s(s).case("corollary"), Box::new(move |_| check_twistor_corollary(n, r, s))));
                        out.push(t(
                            Params::n(n).r(r).s(s).case("curvature term"),
                            Box::new(move |c| {
                                let mut rng = ChaCha8Rng::seed_from_u64(seed(n, r, s));
                                check_curvature_term_vanishing(&c.get(n)?.0, r, s, &mut rng)
                            }),
                        ));
                    }
                }
            }
        }
        Suite::KillingCurvature => {
            for n in ns {
                out.push(t(
                    Params::n(n).case("ℍPⁿ model"),
                    Box::new(move |c| check_killing_curvature(&c.get(n)?.0, &CurvatureModel::projective(n, q(2 * n as i64, 1)))),
                ));
                for k in 0..5 {
                    out.push(t(
                        Params::n(n).case(&format!("random quartic {k}")),
                        Box::new(move |c| {
                            let mut rng = ChaCha8Rng::seed_from_u64(seed(n, k, 0));
                            let model = CurvatureModel::new(n, q(k as i64 - 2, 3), Quartic::random(2 * n, &mut rng))?;
                            check_killing_curvature(&c.get(n)?.0, &model)
                        }),
                    ));
                }
                out.push(t(
                    Params::n(n).case("wedge identities"),
                    Box::new(move |c| {
                        let mut rng = ChaCha8Rng::seed_from_u64(seed(n, 0, 1));
                        check_wedge_identities(&c.get(n)?.0, 3, &mut rng)
                    }),
                ));
                out.push(t(
                    Params::n(n).case("Killing equation"),
                    Box::new(move |c| {
                        let (cl, frame) = c.get(n)?;
                        check_killing_equation_consequences(cl, frame)
                    }),
                ));
            }
        }
        Suite::Laplace => {
            for n in ns {
                out.push(t(Params::n(n), Box::new(move |_| check_laplace(n))));
            }
        }
        Suite::Hermitian => {
            for n in ns {
                out.push(t(
                    Params::n(n),
                    Box::new(move |c| {
                        let (cl, frame) = c.get(n)?;
                        check_skew_hermitian(cl, frame)
                    }),
                ));
            }
        }
        Suite::Wolf => {
            for n in ns {
                for family in ClassicalFamily::ALL {
                    let p = Params { family: Some(family.name().into()), ..Params::n(n) };
                    out.push(t(p, Box::new(move |_| check_classical_family(family, n))));
                }
                out.push(t(Params::n(n).case("table"), Box::new(move |_| check_wolf_table(n))));
            }
        }
    }
    out
}

fn seed(n: usize, a: i32, b: i32) -> u64 {
    (n as u64) << 32 | (a as u64 & 0xffff) << 16 | (b as u64 & 0xffff)
}

fn key_identity(n: usize, r: i32) -> Result<Report> {
    let found = derive_min_identity(n, r)?;
    let mut rep = Report::new();
    for m in found {
        rep.note(format!("dictionary {}", m.dictionary), format!("{:?}", m.coefficients));
        rep.pass(format!("key identity via {}", m.dictionary));
    }
    Ok(rep)
}

fn limiting(n: usize) -> Result<Report> {
    let sol = solve_limiting_system(n)?;
    let mut rep = Report::new();
    rep.check("(D⁻₋)*D⁻₋ψ₁ = (κ/2)(n+4)(n−1)/(n(n+2))ψ₁", sol.d_minus_minus == d_minus_minus_closed_form(n), || {
        format!("got {}κ", sol.d_minus_minus)
    });
    rep.check("(T⁻)*T⁻ψ₁ = 0", sol.t_minus == q(0, 1), || format!("got {}κ", sol.t_minus));
    Ok(rep)
}

fn instance(t: &Task, cache: &Cache, timing: bool) -> Instance {
    let start = Instant::now();
    let outcome = (t.job)(cache);
    let timing_ms = timing.then(|| start.elapsed().as_millis());
    let base = |status, checks, skipped, witness| Instance {
        suite: t.suite,
        params: t.params.clone(),
        status,
        checks,
        skipped,
        witness,
        timing_ms,
    };
    match outcome {
        Ok(rep) => {
            let skipped = rep
                .checks
                .iter()
                .filter(|c| c.status == Status::Skipped)
                .map(|c| Skip { check: c.name.clone(), reason: c.detail.clone().unwrap_or_default() })
                .collect();
            let witness = rep
                .first_failure()
                .map(|c| Witness { check: c.name.clone(), detail: c.detail.clone().unwrap_or_default() });
            base(rep.status(), rep.count(Status::Pass), skipped, witness)
        }
        Err(Error::OutOfRange(why)) => {
            base(Status::Skipped, 0, vec![Skip { check: "precondition".into(), reason: why }], None)
        }
        Err(e) => base(Status::Fail, 0, Vec::new(), Some(Witness { check: "error".into(), detail: e.to_string() })),
    }
}

/// Run every instance of the given suites, in parallel, and return them
/// sorted by suite and parameters.
pub fn run(suites: &[Suite], grid: Grid, timing: bool) -> Vec<Instance> {
    let cache = Cache::new(grid.n_max.max(1));
    let all: Vec<Task> = suites.iter().flat_map(|&s| tasks(s, grid)).collect();
    let mut out: Vec<Instance> = all.par_iter().map(|t| instance(t, &cache, timing)).collect();
    out.sort_by(|a, b| (a.suite, &a.params).cmp(&(b.suite, &b.params)));
    out
}

/// Pass only if every instance passes; skipped instances do not count
/// against the aggregate.
pub fn aggregate(instances: &[Instance]) -> Status {
    if instances.iter().any(|i| i.status == Status::Fail) {
        Status::Fail
    } else {
        Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::value_variants() {
            assert_eq!(SuiteArg::from_str(&s.name(), false).unwrap().suites(), vec![*s]);
        }
        assert_eq!(SuiteArg::All.suites().len(), 12);
    }

    #[test]
    fn grid_sizes() {
        let g = Grid { n_max: 3, r_max: 3 };
        assert_eq!(tasks(Suite::Kom1, g).len(), 3 + 4);
        assert_eq!(tasks(Suite::Summe, g).len(), 4 * 3 + 4 * 4);
        assert_eq!(tasks(Suite::Wolf, g).len(), 8);
    }

    #[test]
    fn failing_report_carries_witness() {
        let t = task(Suite::Kom2, Params::default(), |_| {
            let mut rep = Report::new();
            rep.fail("entry", "(0,1) is 2");
            Ok(rep)
        });
        let i = instance(&t, &Cache::new(1), false);
        assert_eq!(i.status, Status::Fail);
        assert_eq!(i.witness.unwrap().detail, "(0,1) is 2");
    }

    #[test]
    fn precondition_becomes_skip() {
        let t = task(Suite::Kom2, Params::default(), |_| check_kom2(-1));
        let i = instance(&t, &Cache::new(1), false);
        assert_eq!(i.status, Status::Skipped);
        assert_eq!(aggregate(&[i]), Status::Pass);
    }
}
