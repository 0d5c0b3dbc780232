//! The module map `μ: P_σ → P_τ` at `κ₀ = 1/(m+2)` and the reverse
//! polynomials `q_T ∈ P_σ`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::brick::sigma_checked;
use super::family::{family_members, isotype_of, singular_kappa, FamilyMember};
use super::norms::{gamma_product, norm_squared};
use crate::combinatorics::bricks::tau;
use crate::combinatorics::{Composition, Tableau};
use crate::error::Error;
use crate::json::{self, poly_to_json, PolyJson};
use crate::operators::dunkl;
use crate::poly::{Irrep, TermKey, VectorPoly};

/// `μ(Σ f_S ⊗ S) = Σ f_S γ_S J_{π{S}}` with `J` specialized at `1/(m+2)`.
#[derive(Clone, Debug)]
pub struct MuMap {
    pub m: usize,
    pub k: usize,
    pub kappa: BigRational,
    sigma: Arc<Irrep>,
    tau: Arc<Irrep>,
    /// `γ_S J_{π{S}}`, indexed like the basis of `V_σ`.
    images: Vec<VectorPoly<BigRational>>,
    norms: Vec<BigRational>,
}

impl MuMap {
    pub fn new(m: usize, k: usize) -> Result<Self, Error> {
        let members = family_members(m, k, 1)?;
        Self::from_members(m, k, &members)
    }

    pub fn from_members(m: usize, k: usize, members: &[FamilyMember]) -> Result<Self, Error> {
        let sigma = Irrep::of(&sigma_checked(m, k)?);
        let tau = Irrep::of(&tau(m, k));
        let mut images = vec![VectorPoly::zero(tau.clone()); sigma.dim()];
        let mut norms = vec![BigRational::zero(); sigma.dim()];
        for f in members {
            if f.jack.label.alpha != f.pair.beta {
                return Err(Error::BadParams("mu needs the family at n = 1".into()));
            }
            let idx = sigma.index_of(&f.source).ok_or_else(|| Error::ShapeMismatch(format!("{:?}", f.source)))?;
            images[idx] = f.value.scale(&gamma_product(&f.source, &f.pair.beta)?);
            norms[idx] = norm_squared(&f.source);
        }
        Ok(MuMap { m, k, kappa: singular_kappa(m, 1)?, sigma, tau, images, norms })
    }

    pub fn sigma(&self) -> &Arc<Irrep> {
        &self.sigma
    }

    pub fn tau(&self) -> &Arc<Irrep> {
        &self.tau
    }

    /// `γ_S J_{π{S}}` for the tableau with index `s` in `V_σ`.
    pub fn image_of_basis(&self, s: usize) -> &VectorPoly<BigRational> {
        &self.images[s]
    }

    pub fn apply(&self, g: &VectorPoly<BigRational>) -> Result<VectorPoly<BigRational>, Error> {
        if g.irrep() != &self.sigma {
            return Err(Error::ShapeMismatch(format!("mu expects values in V_{}, got V_{}", self.sigma.shape(), g.irrep().shape())));
        }
        let mut out = VectorPoly::zero(self.tau.clone());
        for (key, c) in g.terms() {
            out.add_scaled(&self.images[key.tab].mul_monomial(&key.exp, c), &BigRational::from_integer(1.into()))?;
        }
        Ok(out)
    }

    /// Which of `μx_i = x_iμ`, `μs_i = s_iμ`, `μD_i = D_iμ` hold on `g`.
    pub fn commutation(&self, g: &VectorPoly<BigRational>) -> Result<Commutation, Error> {
        let n = g.n();
        let mu_g = self.apply(g)?;
        let mut c = Commutation::default();
        for i in 1..=n {
            c.x.push(self.apply(&g.mul_x(i))? == mu_g.mul_x(i));
            c.d.push(self.apply(&dunkl(i, g, &self.kappa))? == dunkl(i, &mu_g, &self.kappa));
            if i < n {
                c.s.push(self.apply(&g.act_simple(i))? == mu_g.act_simple(i));
            }
        }
        Ok(c)
    }

    /// `p_{S,T}` read off `γ_S J_{π{S}} = Σ_T p_{S,T} ⊗ T`, reassembled as
    /// `q_T = Σ_S p_{S,T} (‖T‖²/‖S‖²) ⊗ S` for the tableau of index `t` in `V_τ`.
    pub fn q_polynomial(&self, t: usize) -> VectorPoly<BigRational> {
        let nt = norm_squared(self.tau.tableau(t));
        let mut q = VectorPoly::zero(self.sigma.clone());
        for (s, img) in self.images.iter().enumerate() {
            let w = &nt / &self.norms[s];
            for (key, c) in img.terms().filter(|(key, _)| key.tab == t) {
                q.add_term(TermKey::new(key.exp.clone(), s), &(c * &w));
            }
        }
        q
    }

    /// The linear extension `Σ g_T ⊗ T ↦ Σ g_T q_T`.
    pub fn q_map(&self, h: &VectorPoly<BigRational>) -> Result<VectorPoly<BigRational>, Error> {
        if h.irrep() != &self.tau {
            return Err(Error::ShapeMismatch(format!("q-map expects values in V_{}", self.tau.shape())));
        }
        let one = BigRational::from_integer(1.into());
        let mut out = VectorPoly::zero(self.sigma.clone());
        for (key, c) in h.terms() {
            out.add_scaled(&self.q_polynomial(key.tab).mul_monomial(&key.exp, c), &one)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Commutation {
    pub x: Vec<bool>,
    pub s: Vec<bool>,
    pub d: Vec<bool>,
}

impl Commutation {
    pub fn all(&self) -> bool {
        self.x.iter().chain(&self.s).chain(&self.d).all(|&b| b)
    }
}

/// A random element of `P_σ` of degree at most `degree` with small rational
/// coefficients.
pub fn random_input(irrep: &Arc<Irrep>, degree: u32, rng: &mut impl Rng) -> VectorPoly<BigRational> {
    let n = irrep.n();
    let mut p = VectorPoly::zero(irrep.clone());
    let terms = rng.gen_range(1..=4);
    while p.num_terms() < terms {
        let d = rng.gen_range(0..=degree);
        let mut exp = vec![0u32; n];
        for _ in 0..d {
            exp[rng.gen_range(0..n)] += 1;
        }
        let num = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let den = rng.gen_range(1..=3);
        let tab = rng.gen_range(0..irrep.dim());
        p.add_term(TermKey::new(Composition(exp), tab), &BigRational::new(BigInt::from(num), BigInt::from(den)));
    }
    p
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MuCase {
    pub input: PolyJson,
    pub commutation: Commutation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MuReport {
    pub m: usize,
    pub k: usize,
    pub degree: u32,
    pub seed: u64,
    #[serde(with = "json::rational")]
    pub kappa: BigRational,
    pub cases: Vec<MuCase>,
    pub passed: bool,
}

/// `trials` seeded random inputs of degree at most `degree`, each checked
/// against every `x_i`, `s_i` and `D_i`.
pub fn mu_verify(m: usize, k: usize, degree: u32, trials: usize, seed: u64) -> Result<MuReport, Error> {
    let mu = MuMap::new(m, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(trials);
    for _ in 0..trials {
        let g = random_input(mu.sigma(), degree, &mut rng);
        let commutation = mu.commutation(&g)?;
        cases.push(MuCase { input: poly_to_json(&g), commutation });
    }
    let passed = cases.iter().all(|c| c.commutation.all());
    Ok(MuReport { m, k, degree, seed, kappa: mu.kappa.clone(), cases, passed })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QEntry {
    pub tableau: Tableau,
    #[serde(with = "json::rational")]
    pub norm_squared: BigRational,
    pub num_terms: usize,
    /// `D_i q_T = 0` at `κ = −1/(m+2)` for all `i`.
    pub singular: bool,
    /// Tableau whose contents are the `ω_i`-eigenvalues of `q_T`, if any.
    pub isotype: Option<Tableau>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QReport {
    pub m: usize,
    pub k: usize,
    #[serde(with = "json::rational")]
    pub kappa: BigRational,
    pub entries: Vec<QEntry>,
    pub all_singular: bool,
    /// Every `q_T` is a simultaneous `ω`-eigenvector with eigenvalues from a tableau of shape `τ`.
    pub all_isotype_tau: bool,
}

/// Builds every `q_T` and tests it at `κ = −1/(m+2)`. Empirical only.
pub fn reverse_map_q(m: usize, k: usize) -> Result<QReport, Error> {
    let mu = MuMap::new(m, k)?;
    reverse_map_q_on(&mu)
}

pub fn reverse_map_q_on(mu: &MuMap) -> Result<QReport, Error> {
    let kappa = -mu.kappa.clone();
    let tau_shape = mu.tau.shape().clone();
    let entries: Vec<QEntry> = (0..mu.tau.dim())
        .map(|t| {
            let q = mu.q_polynomial(t);
            let singular = !q.is_zero() && (1..=q.n()).all(|i| dunkl(i, &q, &kappa).is_zero());
            QEntry {
                tableau: mu.tau.tableau(t).clone(),
                norm_squared: norm_squared(mu.tau.tableau(t)),
                num_terms: q.num_terms(),
                singular,
                isotype: isotype_of(&q).ok(),
            }
        })
        .collect();
    let all_singular = entries.iter().all(|e| e.singular);
    let all_isotype_tau = entries.iter().all(|e| e.isotype.as_ref().is_some_and(|t| t.shape() == &tau_shape));
    Ok(QReport { m: mu.m, k: mu.k, kappa, entries, all_singular, all_isotype_tau })
}
