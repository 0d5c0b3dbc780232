//! The singular family `{J_{nβ{S},T{S}} : S ∈ Y(σ)}` at `κ₀ = n/(m+2)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::brick::{brick_map, sigma_checked, BrickPair};
use super::norms::gamma_product;
use crate::combinatorics::bricks::tau;
use crate::combinatorics::{enumerate_rsyt, rsyt_from_contents, Composition, Tableau};
use crate::error::Error;
use crate::field::{format_rational, rational};
use crate::jack::{construct_jack, JackPolynomial};
use crate::json::{self, poly_from_json, poly_to_json, PolyJson};
use crate::operators::{cherednik_prime, dunkl, jucys_murphy};
use crate::poly::{Irrep, VectorPoly};

/// `κ₀ = n/(m+2)` after checking `n ≥ 1` and `gcd(n, m+2) = 1`.
pub fn singular_kappa(m: usize, n: usize) -> Result<BigRational, Error> {
    if n == 0 || n.gcd(&(m + 2)) != 1 {
        return Err(Error::BadParams(format!("need n >= 1 with gcd(n, m+2) = 1, got n={n}, m+2={}", m + 2)));
    }
    Ok(rational(n as i64, m as i64 + 2))
}

/// One member of the family before any verification.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub source: Tableau,
    pub pair: BrickPair,
    /// `J_{nβ{S},T{S}}` over Q(κ).
    pub jack: JackPolynomial,
    /// Its value at `κ₀`.
    pub value: VectorPoly<BigRational>,
}

/// Builds and specializes every `J_{nβ{S},T{S}}`, sorted by the content
/// vector of `S` (descending). A pole at `κ₀` is returned as an error.
pub fn family_members(m: usize, k: usize, n: usize) -> Result<Vec<FamilyMember>, Error> {
    let shape = sigma_checked(m, k)?;
    let kappa0 = singular_kappa(m, n)?;
    let sources = enumerate_rsyt(&shape);
    sources
        .par_iter()
        .map(|s| {
            let pair = brick_map(s, m)?;
            let jack = construct_jack(&pair.beta.scaled(n as u32), &pair.tableau)?;
            let value = jack.specialize(&kappa0)?;
            Ok(FamilyMember { source: s.clone(), pair, jack, value })
        })
        .collect()
}

/// Evidence for one `S`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemberRecord {
    pub source: Tableau,
    pub contents: Vec<i64>,
    /// `nβ{S}`
    pub beta: Composition,
    pub tableau: Tableau,
    /// `ζ′_{nβ,T}` at `κ₀`.
    #[serde(with = "json::rational_vec")]
    pub spectral: Vec<BigRational>,
    /// `D_i J` at `κ₀` for `i = 1..N`; all empty when singular.
    pub dunkl_images: Vec<PolyJson>,
    /// `c` with `ω_i J = c J`, or `null` when `ω_i J` is not a multiple of `J`.
    pub omega_eigenvalues: Vec<Option<String>>,
    /// `U′_i J = ω_i J` at `κ₀` for every `i`.
    pub u_prime_equals_omega: bool,
    #[serde(with = "json::rational")]
    pub gamma: BigRational,
    pub num_terms: usize,
    pub num_monomials: usize,
    /// `J_{nβ{S},T{S}}` at `κ₀`.
    pub polynomial: PolyJson,
    pub singular: bool,
    pub eigen: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularCertificate {
    pub m: usize,
    pub k: usize,
    pub n: usize,
    #[serde(with = "json::rational")]
    pub kappa: BigRational,
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
    pub members: Vec<MemberRecord>,
    pub passed: bool,
}

fn record(member: &FamilyMember, kappa0: &BigRational) -> Result<MemberRecord, Error> {
    let p = &member.value;
    let nvars = p.n();
    let dunkl_images: Vec<VectorPoly<BigRational>> = (1..=nvars).map(|i| dunkl(i, p, kappa0)).collect();
    let contents = member.source.content_vector();
    let mut eigen = true;
    let mut omega_eigenvalues = Vec::with_capacity(nvars);
    let mut u_prime_equals_omega = true;
    for i in 1..=nvars {
        let w = jucys_murphy(i, p);
        let r = w.ratio_to(p);
        eigen &= r.as_ref() == Some(&BigRational::from_integer(BigInt::from(contents[i - 1])));
        omega_eigenvalues.push(r.as_ref().map(format_rational));
        u_prime_equals_omega &= cherednik_prime(i, p, kappa0)? == w;
    }
    let singular = dunkl_images.iter().all(VectorPoly::is_zero);
    Ok(MemberRecord {
        source: member.source.clone(),
        contents,
        beta: member.jack.label.alpha.clone(),
        tableau: member.pair.tableau.clone(),
        spectral: member.jack.spectral.evaluate(kappa0)?,
        dunkl_images: dunkl_images.iter().map(poly_to_json).collect(),
        omega_eigenvalues,
        u_prime_equals_omega,
        gamma: gamma_product(&member.source, &member.pair.beta)?,
        num_terms: p.num_terms(),
        num_monomials: p.num_monomials(),
        polynomial: poly_to_json(p),
        singular,
        eigen,
    })
}

/// Constructs the family at `κ₀ = n/(m+2)` and records, for every `S`, all
/// Dunkl images and Jucys-Murphy eigenvalues. Use
/// [`SingularCertificate::check`] to turn the evidence into a verdict.
pub fn singular_family(m: usize, k: usize, n: usize) -> Result<SingularCertificate, Error> {
    let kappa0 = singular_kappa(m, n)?;
    let members = family_members(m, k, n)?;
    let records = members.par_iter().map(|mem| record(mem, &kappa0)).collect::<Result<Vec<_>, _>>()?;
    let passed = records.iter().all(|r| r.singular && r.eigen && r.u_prime_equals_omega);
    Ok(SingularCertificate {
        m,
        k,
        n,
        kappa: kappa0,
        sigma: sigma_checked(m, k)?.parts().to_vec(),
        tau: tau(m, k).parts().to_vec(),
        members: records,
        passed,
    })
}

impl SingularCertificate {
    /// The first failing record as an error.
    pub fn check(&self) -> Result<(), Error> {
        for r in &self.members {
            if let Some(i) = r.dunkl_images.iter().position(|d| !d.is_empty()) {
                return Err(Error::NonzeroDunklImage { index: i + 1, label: format!("{:?} / {:?}", r.beta, r.tableau) });
            }
            if !r.eigen {
                let i = r
                    .omega_eigenvalues
                    .iter()
                    .zip(&r.contents)
                    .position(|(e, c)| e.as_deref() != Some(c.to_string().as_str()))
                    .unwrap_or(0);
                return Err(Error::NotIsotypic(i + 1));
            }
            if !r.u_prime_equals_omega {
                return Err(Error::ClosureViolation(format!("U'_i != omega_i on {:?}", r.beta)));
            }
        }
        Ok(())
    }

    /// Recomputes every Dunkl image and eigenvalue from the stored
    /// polynomials alone, trusting nothing else in the certificate.
    pub fn reverify(&self) -> Result<(), Error> {
        let irrep = Irrep::of(&crate::combinatorics::Partition::new(self.tau.clone())?);
        for r in &self.members {
            let p = poly_from_json(irrep.clone(), &r.polynomial)?;
            if p.is_zero() {
                return Err(Error::ClosureViolation("zero polynomial in certificate".into()));
            }
            for i in 1..=p.n() {
                if !dunkl(i, &p, &self.kappa).is_zero() {
                    return Err(Error::NonzeroDunklImage { index: i, label: format!("{:?}", r.beta) });
                }
                let c = BigRational::from_integer(BigInt::from(r.source.content(i)));
                if jucys_murphy(i, &p) != p.scale(&c) {
                    return Err(Error::NotIsotypic(i));
                }
            }
        }
        Ok(())
    }
}

/// The RSYT whose content vector lists the Jucys-Murphy eigenvalues of `p`.
pub fn isotype_of(p: &VectorPoly<BigRational>) -> Result<Tableau, Error> {
    if p.is_zero() {
        return Err(Error::NotIsotypic(0));
    }
    let mut contents = Vec::with_capacity(p.n());
    for i in 1..=p.n() {
        let c = jucys_murphy(i, p).ratio_to(p).ok_or(Error::NotIsotypic(i))?;
        if !c.is_integer() {
            return Err(Error::NotIsotypic(i));
        }
        let c: i64 = c.to_integer().try_into().map_err(|_| Error::NotIsotypic(i))?;
        contents.push(c);
    }
    rsyt_from_contents(&contents).map_err(|_| Error::NotIsotypic(p.n()))
}

/// Which of the four situations `(i, S)` falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureCase {
    /// `|c(i,S) − c(i+1,S)| ≥ 2`: `(s_i − b)J_{π{S}}` is a nonzero multiple of `J_{π{S^{(i)}}}`.
    Distant,
    /// `i`, `i+1` in one column of `S`: `s_iJ = −J`.
    SameColumn,
    /// `i`, `i+1` in one row and one brick: `s_iJ = J`.
    SameRowSameBrick,
    /// `i`, `i+1` in one row, adjacent bricks: `s_iJ = J` once `J_{s_iβ,T}` is pole-free.
    SameRowAcrossBricks,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosureInstance {
    pub source: Tableau,
    pub i: usize,
    pub case: ClosureCase,
    /// `b_{β,T}(i)` at `κ₀`.
    #[serde(with = "json::rational")]
    pub b: BigRational,
    /// For `Distant`: the scalar `γ` in `(s_i − b)J = γJ′`.
    pub multiple: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub m: usize,
    pub k: usize,
    #[serde(with = "json::rational")]
    pub kappa: BigRational,
    /// `β{S}_{2mk} = 0` for every `S`.
    pub last_part_zero: bool,
    pub instances: Vec<ClosureInstance>,
    pub passed: bool,
}

impl ClosureReport {
    pub fn count(&self, case: ClosureCase) -> usize {
        self.instances.iter().filter(|c| c.case == case).count()
    }

    pub fn check(&self) -> Result<(), Error> {
        if !self.last_part_zero {
            return Err(Error::ClosureViolation("some beta{S} has a nonzero last part".into()));
        }
        match self.instances.iter().find(|c| !c.passed) {
            Some(c) => Err(Error::ClosureViolation(format!("s_{} on {:?} ({:?})", c.i, c.source, c.case))),
            None => Ok(()),
        }
    }
}

/// Classifies every `(i, S)` and checks the predicted action of `s_i` on the
/// specialized family at `κ₀ = 1/(m+2)`.
pub fn closure_check(m: usize, k: usize) -> Result<ClosureReport, Error> {
    let members = family_members(m, k, 1)?;
    closure_check_on(m, k, &members)
}

/// [`closure_check`] on an already constructed family (`n = 1`).
pub fn closure_check_on(m: usize, k: usize, members: &[FamilyMember]) -> Result<ClosureReport, Error> {
    let kappa0 = singular_kappa(m, 1)?;
    let by_source: std::collections::HashMap<&Tableau, &FamilyMember> = members.iter().map(|f| (&f.source, f)).collect();
    let mut instances = Vec::new();
    let mut last_part_zero = true;
    for f in members {
        let s = &f.source;
        let nvars = s.n();
        let beta = &f.pair.beta;
        last_part_zero &= beta.get(nvars) == 0;
        for i in 1..nvars {
            let d = s.content(i) - s.content(i + 1);
            let b = BigRational::new(BigInt::one(), BigInt::from(d));
            let b_generic = f.jack.spectral.b_value(i)?.evaluate_at(&kappa0)?;
            let si = f.value.act_simple(i);
            let same_brick = beta.get(i) == beta.get(i + 1);
            let (case, passed, multiple) = if d.abs() >= 2 {
                let lhs = si.sub(&f.value.scale(&b))?;
                let target = by_source.get(&s.swapped(i, i + 1)).copied();
                match target {
                    Some(t) => {
                        let c = lhs.ratio_to(&t.value);
                        let ok = c.as_ref().is_some_and(|c| !c.is_zero());
                        (ClosureCase::Distant, ok, c.map(|c| format_rational(&c)))
                    }
                    None => (ClosureCase::Distant, false, None),
                }
            } else if d == -1 {
                (ClosureCase::SameColumn, same_brick && si == f.value.neg(), None)
            } else if same_brick {
                (ClosureCase::SameRowSameBrick, si == f.value, None)
            } else {
                let raised = construct_jack(&beta.swap(i), &f.pair.tableau)?;
                let pole_free = raised.specialize(&kappa0).is_ok();
                (ClosureCase::SameRowAcrossBricks, beta.get(i) > beta.get(i + 1) && pole_free && si == f.value, None)
            };
            instances.push(ClosureInstance {
                source: s.clone(),
                i,
                case,
                passed: passed && b == b_generic,
                b,
                multiple,
            });
        }
    }
    let passed = last_part_zero && instances.iter().all(|c| c.passed);
    Ok(ClosureReport { m, k, kappa: kappa0, last_part_zero, instances, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bricks::s0;

    #[test]
    fn kappa_condition() {
        assert_eq!(singular_kappa(1, 2).unwrap(), rational(2, 3));
        assert!(singular_kappa(2, 2).is_err());
        assert!(singular_kappa(1, 0).is_err());
    }

    #[test]
    fn smallest_family() {
        let c = singular_family(1, 2, 1).unwrap();
        assert_eq!(c.members.len(), 2);
        c.check().unwrap();
        c.reverify().unwrap();
        assert!(c.passed);
    }

    #[test]
    fn isotype_recovers_source() {
        for f in family_members(1, 2, 1).unwrap() {
            assert_eq!(isotype_of(&f.value).unwrap(), f.source);
        }
    }

    #[test]
    fn isotype_of_constant() {
        let t = Tableau::rsyt(vec![vec![3, 1], vec![2]]).unwrap();
        let ir = Irrep::of(t.shape());
        let p = VectorPoly::monomial(ir.clone(), Composition::zero(3), ir.index_of(&t).unwrap(), BigRational::one());
        assert_eq!(isotype_of(&p).unwrap(), t);
        assert!(matches!(isotype_of(&VectorPoly::zero(ir)), Err(Error::NotIsotypic(0))));
    }

    #[test]
    fn closure_smallest() {
        let r = closure_check(1, 2).unwrap();
        r.check().unwrap();
        assert_eq!(r.instances.len(), 2 * 3);
        assert!(r.instances.iter().any(|c| c.source == s0(1, 2).unwrap()));
    }
}
