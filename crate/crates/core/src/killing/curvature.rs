//! Symmetric quartics 𝔎 ∈ Sym⁴E* and the curvature tensor they determine.

use rand::Rng;

use crate::clifford::Clifford;
use crate::error::{Error, Result};
use crate::rep_spaces::actions::sym2_endo;
use crate::report::Report;
use crate::scalars::{q, random_rational};
use crate::{RatMatrix, Rational};

/// A 4-linear form on E stored densely, index (i,j,k,l) ↦ i·d³ + j·d² + k·d + l.
#[derive(Clone, Debug, PartialEq)]
pub struct Quartic {
    pub dim: usize,
    data: Vec<Rational>,
}

fn perms4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    if p.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

impl Quartic {
    pub fn zero(dim: usize) -> Self {
        Quartic { dim, data: vec![q(0, 1); dim.pow(4)] }
    }

    fn idx(&self, i: [usize; 4]) -> usize {
        let d = self.dim;
        ((i[0] * d + i[1]) * d + i[2]) * d + i[3]
    }

    pub fn get(&self, i: [usize; 4]) -> &Rational {
        &self.data[self.idx(i)]
    }

    /// From raw entries; rejected unless totally symmetric.
    pub fn from_fn(dim: usize, f: impl Fn([usize; 4]) -> Rational) -> Result<Self> {
        let mut t = Self::zero(dim);
        for (k, v) in t.data.iter_mut().enumerate() {
            let i = [k / dim.pow(3), (k / dim.pow(2)) % dim, (k / dim) % dim, k % dim];
            *v = f(i);
        }
        if !t.is_symmetric() {
            return Err(Error::Invalid("quartic is not totally symmetric".into()));
        }
        Ok(t)
    }

    /// α⁴ for a covector α.
    pub fn power(alpha: &[Rational]) -> Self {
        Self::from_fn(alpha.len(), |i| &(&alpha[i[0]] * &alpha[i[1]]) * &(&alpha[i[2]] * &alpha[i[3]]))
            .expect("α⁴ is symmetric")
    }

    /// Symmetrization of a random rational 4-tensor.
    pub fn random<G: Rng + ?Sized>(dim: usize, rng: &mut G) -> Self {
        let raw: Vec<Rational> = (0..dim.pow(4)).map(|_| random_rational(rng, 6)).collect();
        let ps = perms4();
        let mut t = Self::zero(dim);
        for k in 0..t.data.len() {
            let i = [k / dim.pow(3), (k / dim.pow(2)) % dim, (k / dim) % dim, k % dim];
            let mut acc = q(0, 1);
            for p in &ps {
                let j = [i[p[0]], i[p[1]], i[p[2]], i[p[3]]];
                acc += &raw[((j[0] * dim + j[1]) * dim + j[2]) * dim + j[3]];
            }
            t.data[k] = acc / q(24, 1);
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.dim;
        let ps = perms4();
        (0..self.data.len()).all(|k| {
            let i = [k / d.pow(3), (k / d.pow(2)) % d, (k / d) % d, k % d];
            ps.iter().all(|p| self.get([i[p[0]], i[p[1]], i[p[2]], i[p[3]]]) == &self.data[k])
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(num_traits::Zero::is_zero)
    }

    /// 𝔎(x, y, z, ·) as a covector.
    fn partial(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let d = self.dim;
        let mut out = vec![q(0, 1); d];
        for i in 0..d {
            if num_traits::Zero::is_zero(&x[i]) {
                continue;
            }
            for j in 0..d {
                let xy = &x[i] * &y[j];
                if num_traits::Zero::is_zero(&xy) {
                    continue;
                }
                for k in 0..d {
                    let xyz = &xy * &z[k];
                    if num_traits::Zero::is_zero(&xyz) {
                        continue;
                    }
                    for (l, o) in out.iter_mut().enumerate() {
                        *o += &xyz * self.get([i, j, k, l]);
                    }
                }
            }
        }
        out
    }

    /// 𝔎_{e₁,e₂} : e ↦ 𝔎(e₁,e₂,e,·)^♭ as a matrix on E.
    pub fn endo(&self, cl: &Clifford, e1: &[Rational], e2: &[Rational]) -> RatMatrix {
        let d = self.dim;
        let mut m = RatMatrix::zeros(d, d);
        for col in 0..d {
            let mut unit = vec![q(0, 1); d];
            unit[col] = q(1, 1);
            let v = cl.pc.e.flat(&self.partial(e1, e2, &unit));
            for (row, x) in v.into_iter().enumerate() {
                m[(row, col)] = x;
            }
        }
        m
    }
}

/// Fiberwise curvature model: scalar curvature κ and the hyperkähler quartic 𝔎.
#[derive(Clone, Debug)]
pub struct CurvatureModel {
    pub n: usize,
    pub kappa: Rational,
    pub quartic: Quartic,
}

impl CurvatureModel {
    pub fn new(n: usize, kappa: Rational, quartic: Quartic) -> Result<Self> {
        if quartic.dim != 2 * n {
            return Err(Error::Invalid(format!("quartic on a {}-dimensional space, expected {}", quartic.dim, 2 * n)));
        }
        if !quartic.is_symmetric() {
            return Err(Error::Invalid("quartic is not totally symmetric".into()));
        }
        Ok(CurvatureModel { n, kappa, quartic })
    }

    /// The ℍPⁿ model: 𝔎 = 0.
    pub fn projective(n: usize, kappa: Rational) -> Self {
        CurvatureModel { n, kappa, quartic: Quartic::zero(2 * n) }
    }

    /// −κ/(8n(n+2)).
    pub fn weyl_factor(&self) -> Rational {
        let n = self.n as i64;
        -(&self.kappa * q(1, 8 * n * (n + 2)))
    }
}

/// A decomposable tangent vector h⊗e with rational entries.
pub type Dec<'a> = (&'a [Rational], &'a [Rational]);

fn id(d: usize) -> RatMatrix {
    RatMatrix::identity(d)
}

/// R^H_{X,Y}, R^E_{X,Y} and R^hyper_{X,Y} on H⊗E (H index major).
pub fn curvature_parts(cl: &Clifford, model: &CurvatureModel, x: Dec, y: Dec) -> [RatMatrix; 3] {
    let d = 2 * cl.n();
    let rh = sym2_endo(&cl.h, x.0, y.0).kron(&id(d)).scale(&cl.pc.e.sigma(x.1, y.1));
    let re = id(2).kron(&sym2_endo(&cl.pc.e, x.1, y.1)).scale(&cl.h.sigma(x.0, y.0));
    let rhyp = id(2).kron(&model.quartic.endo(cl, x.1, y.1)).scale(&cl.h.sigma(x.0, y.0));
    [rh, re, rhyp]
}

/// R_{X,Y} = −κ/(8n(n+2))(R^H + R^E) + R^hyper on H⊗E.
pub fn assemble_r(cl: &Clifford, model: &CurvatureModel, x: Dec, y: Dec) -> RatMatrix {
    let [rh, re, rhyp] = curvature_parts(cl, model, x, y);
    &(&rh + &re).scale(&model.weyl_factor()) + &rhyp
}

/// g = σ_H⊗σ_E on rational vectors of H⊗E.
fn pairing(cl: &Clifford, z: &[Rational], w: &[Rational]) -> Rational {
    let sig = cl.h.sigma.kron(&cl.pc.e.sigma);
    let sz = sig.apply(w);
    z.iter().zip(&sz).map(|(a, b)| a * b).fold(q(0, 1), |acc, v| acc + v)
}

fn dec_vec(h: &[Rational], e: &[Rational]) -> Vec<Rational> {
    h.iter().flat_map(|a| e.iter().map(move |b| a * b)).collect()
}

/// Recover 𝔎 from the assembled R by the symmetrization formula with the
/// given h₁..h₄, and compare with the model's quartic.
pub fn check_symmetrization(cl: &Clifford, model: &CurvatureModel, hs: [&[Rational]; 4]) -> Result<Report> {
    let d = 2 * cl.n();
    let norm = &cl.h.sigma(hs[0], hs[1]) * &cl.h.sigma(hs[2], hs[3]);
    if num_traits::Zero::is_zero(&norm) {
        return Err(Error::Invalid("σ_H(h₁,h₂)σ_H(h₃,h₄) = 0".into()));
    }
    let units: Vec<Vec<Rational>> = (0..d)
        .map(|k| (0..d).map(|j| q((j == k) as i64, 1)).collect())
        .collect();
    // R_{h₁⊗e_a, h₂⊗e_b} for all a, b
    let mut rs = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            rs.push(assemble_r(cl, model, (hs[0], &units[a]), (hs[1], &units[b])));
        }
    }
    let ps = perms4();
    let mut rep = Report::new();
    let mut bad: Option<String> = None;
    'outer: for i in 0..d {
        for j in i..d {
            for k in j..d {
                for l in k..d {
                    let e = [i, j, k, l];
                    let mut acc = q(0, 1);
                    for p in &ps {
                        let t = [e[p[0]], e[p[1]], e[p[2]], e[p[3]]];
                        let z = dec_vec(hs[2], &units[t[2]]);
                        let w = dec_vec(hs[3], &units[t[3]]);
                        acc += pairing(cl, &rs[t[0] * d + t[1]].apply(&z), &w);
                    }
                    let got = acc / (&norm * q(24, 1));
                    if &got != model.quartic.get(e) {
                        bad = Some(format!("entry {e:?}: recovered {got}, expected {}", model.quartic.get(e)));
                        break 'outer;
                    }
                }
            }
        }
    }
    match bad {
        None => rep.pass("symmetrized R recovers 𝔎"),
        Some(w) => rep.fail("symmetrized R recovers 𝔎", w),
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qi;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn asymmetric_quartic_rejected() {
        assert!(Quartic::from_fn(2, |i| qi((i[0] == 0 && i[1] == 1 && i[2] == 1 && i[3] == 1) as i64)).is_err());
    }

    #[test]
    fn r_is_antisymmetric() {
        let cl = Clifford::new(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let model = CurvatureModel::new(2, qi(5), Quartic::random(4, &mut rng)).unwrap();
        let (h1, e1) = (vec![qi(1), qi(2)], vec![qi(1), qi(0), qi(-1), qi(3)]);
        let (h2, e2) = (vec![qi(0), qi(1)], vec![qi(2), qi(1), qi(0), qi(1)]);
        let xy = assemble_r(&cl, &model, (&h1, &e1), (&h2, &e2));
        let yx = assemble_r(&cl, &model, (&h2, &e2), (&h1, &e1));
        assert!((&xy + &yx).is_zero());
        assert!(assemble_r(&cl, &model, (&h1, &e1), (&h1, &e1)).is_zero());
    }

    #[test]
    fn projective_model_at_n2() {
        // 𝔎 = 0: R = −(κ/64)(R^H + R^E), checked on one entry by hand:
        // X = h₀⊗e₀, Y = h₁⊗e₂ has σ_E(e₀,e₂) = 1, σ_H(h₀,h₁) = 1.
        let cl = Clifford::new(2).unwrap();
        let model = CurvatureModel::projective(2, qi(64));
        let (h0, h1) = (vec![qi(1), qi(0)], vec![qi(0), qi(1)]);
        let (e0, e2) = (vec![qi(1), qi(0), qi(0), qi(0)], vec![qi(0), qi(0), qi(1), qi(0)]);
        let r = assemble_r(&cl, &model, (&h0, &e0), (&h1, &e2));
        // (h₀h₁)h₀ = σ(h₀,h₀)h₁ + σ(h₁,h₀)h₀ = −h₀ ; (e₀e₂)e₀ = σ(e₂,e₀)e₀ = −e₀
        // so R(h₀⊗e₀) = −(−h₀⊗e₀ − h₀⊗e₀) = 2 h₀⊗e₀
        let v = r.apply(&dec_vec(&h0, &e0));
        assert_eq!(v, dec_vec(&h0, &e0).iter().map(|x| x * qi(2)).collect::<Vec<_>>());
    }

    #[test]
    fn fourth_power_hand_oracle() {
        // 𝔎 = α⁴: 𝔎_{e₁,e₂}e = α(e₁)α(e₂)α(e)·α^♭
        let cl = Clifford::new(2).unwrap();
        let alpha = vec![qi(1), qi(-2), qi(0), qi(3)];
        let k = Quartic::power(&alpha);
        let e1 = vec![qi(1), qi(1), qi(0), qi(2)];
        let e2 = vec![qi(0), qi(3), qi(1), qi(-1)];
        let ev = |v: &[Rational]| alpha.iter().zip(v).map(|(a, b)| a * b).fold(qi(0), |s, x| s + x);
        let m = k.endo(&cl, &e1, &e2);
        let e = vec![qi(2), qi(0), qi(1), qi(1)];
        let coef = ev(&e1) * ev(&e2) * ev(&e);
        let want: Vec<Rational> = cl.pc.e.flat(&alpha).iter().map(|x| x * &coef).collect();
        assert_eq!(m.apply(&e), want);
    }

    #[test]
    fn symmetrization_recovers_quartic() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=3 {
            let cl = Clifford::new(n).unwrap();
            let model = CurvatureModel::new(n, qi(7), Quartic::random(2 * n, &mut rng)).unwrap();
            let h = [vec![qi(1), qi(0)], vec![qi(0), qi(1)], vec![qi(2), qi(1)], vec![qi(-1), qi(3)]];
            let rep = check_symmetrization(&cl, &model, [&h[0], &h[1], &h[2], &h[3]]).unwrap();
            assert!(rep.passed(), "n={n}: {:?}", rep.first_failure());
        }
    }
}
