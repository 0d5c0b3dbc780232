//! JSON forms shared by the CLI and the certificates.
//!
//! Rationals are `"p/q"` strings. A rational function is `{"num": [...],
//! "den": [...]}` with coefficients as decimal strings in ascending powers of
//! `κ`. A polynomial is a list of terms `{"exp", "tableau", "coeff"}` where
//! `tableau` is the content vector of the basis tableau.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{rsyt_from_contents, Composition};
use crate::error::Error;
use crate::field::{format_rational, parse_rational, IntPoly, RatFunc, Scalar};
use crate::poly::{Irrep, TermKey, VectorPoly};

/// `#[serde(with = "rectjack::json::rational")]` for a `BigRational` field.
pub mod rational {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Same as [`rational`] for `Vec<BigRational>`.
pub mod rational_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_rational(s).map_err(serde::de::Error::custom)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl From<&RatFunc> for RatFuncJson {
    fn from(f: &RatFunc) -> Self {
        let dec = |p: &IntPoly| p.coeffs().iter().map(|c| c.to_string()).collect();
        RatFuncJson { num: dec(f.numer()), den: dec(f.denom()) }
    }
}

impl TryFrom<&RatFuncJson> for RatFunc {
    type Error = Error;

    fn try_from(j: &RatFuncJson) -> Result<Self, Error> {
        let parse = |v: &[String]| -> Result<IntPoly, Error> {
            v.iter()
                .map(|s| {
                    let t = s.trim();
                    let digits = t.strip_prefix('-').unwrap_or(t);
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(Error::Parse(format!("invalid integer {s:?}")));
                    }
                    t.parse::<BigInt>().map_err(|_| Error::Parse(format!("invalid integer {s:?}")))
                })
                .collect::<Result<Vec<_>, _>>()
                .map(IntPoly::from_coeffs)
        };
        RatFunc::new(parse(&j.num)?, parse(&j.den)?)
    }
}

/// One term `x^exp ⊗ T` with `T` given by its content vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson<C> {
    pub exp: Vec<u32>,
    pub tableau: Vec<i64>,
    pub coeff: C,
}

pub type PolyJson = Vec<TermJson<String>>;
pub type RatPolyJson = Vec<TermJson<RatFuncJson>>;

fn terms_to_json<C: Scalar, J>(p: &VectorPoly<C>, f: impl Fn(&C) -> J) -> Vec<TermJson<J>> {
    let irrep = p.irrep();
    p.terms()
        .map(|(k, c)| TermJson {
            exp: k.exp.0.clone(),
            tableau: irrep.tableau(k.tab).content_vector(),
            coeff: f(c),
        })
        .collect()
}

pub fn poly_to_json(p: &VectorPoly<BigRational>) -> PolyJson {
    terms_to_json(p, format_rational)
}

pub fn ratpoly_to_json(p: &VectorPoly<RatFunc>) -> RatPolyJson {
    terms_to_json(p, |c| RatFuncJson::from(c))
}

fn terms_from_json<C: Scalar, J>(
    irrep: Arc<Irrep>,
    terms: &[TermJson<J>],
    f: impl Fn(&J) -> Result<C, Error>,
) -> Result<VectorPoly<C>, Error> {
    let mut p = VectorPoly::zero(irrep.clone());
    for t in terms {
        if t.exp.len() != irrep.n() {
            return Err(Error::ShapeMismatch(format!("exponent of length {} in {} variables", t.exp.len(), irrep.n())));
        }
        let tab = irrep
            .index_of_contents(&t.tableau)
            .ok_or_else(|| Error::ShapeMismatch(format!("content vector {:?} is not a tableau of shape {}", t.tableau, irrep.shape())))?;
        p.add_term(TermKey::new(Composition(t.exp.clone()), tab), &f(&t.coeff)?);
    }
    Ok(p)
}

/// Reads a polynomial with values in `V_τ`, `τ` the shape of `irrep`.
pub fn poly_from_json(irrep: Arc<Irrep>, terms: &[TermJson<String>]) -> Result<VectorPoly<BigRational>, Error> {
    terms_from_json(irrep, terms, |s| parse_rational(s))
}

pub fn ratpoly_from_json(irrep: Arc<Irrep>, terms: &[TermJson<RatFuncJson>]) -> Result<VectorPoly<RatFunc>, Error> {
    terms_from_json(irrep, terms, |j| RatFunc::try_from(j))
}

/// Like [`poly_from_json`], taking the shape from the first term.
pub fn poly_from_json_infer(terms: &[TermJson<String>]) -> Result<VectorPoly<BigRational>, Error> {
    let first = terms.first().ok_or_else(|| Error::Parse("empty polynomial carries no shape".into()))?;
    let t = rsyt_from_contents(&first.tableau)?;
    poly_from_json(Irrep::of(t.shape()), terms)
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Error> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Err(Error::Parse(format!("empty {what}")));
    }
    s.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| Error::Parse(format!("invalid {what} entry {:?}", p.trim()))))
        .collect()
}

/// `"3,2,0,0,0"` (brackets optional) as a composition.
pub fn parse_composition(s: &str) -> Result<Composition, Error> {
    parse_list::<u32>(s, "composition").map(Composition)
}

/// `"2,1,0,-1,-2"` as a content vector `c(1,T), …, c(N,T)`.
pub fn parse_contents(s: &str) -> Result<Vec<i64>, Error> {
    parse_list::<i64>(s, "content vector")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use crate::field::rational;

    #[test]
    fn ratfunc_round_trip() {
        let f = RatFunc::new(IntPoly::from_i64s(&[1, -2]), IntPoly::from_i64s(&[3, 0, 5])).unwrap();
        let j = RatFuncJson::from(&f);
        assert_eq!(j.num, vec!["1", "-2"]);
        assert_eq!(RatFunc::try_from(&j).unwrap(), f);
        let bad = RatFuncJson { num: vec!["1".into()], den: vec![] };
        assert!(RatFunc::try_from(&bad).is_err());
    }

    #[test]
    fn poly_round_trip() {
        let ir = Irrep::of(&Partition::new(vec![2, 1]).unwrap());
        let mut p = VectorPoly::zero(ir.clone());
        p.add_term(TermKey::new(Composition(vec![1, 0, 2]), 0), &rational(-3, 4));
        p.add_term(TermKey::new(Composition(vec![0, 0, 0]), 1), &rational(5, 1));
        let j = poly_to_json(&p);
        let text = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(poly_from_json(ir, &back).unwrap(), p);
        assert_eq!(poly_from_json_infer(&back).unwrap(), p);
    }

    #[test]
    fn list_parsers() {
        assert_eq!(parse_composition("[3, 2,0]").unwrap(), Composition(vec![3, 2, 0]));
        assert_eq!(parse_contents("0,-1,1").unwrap(), vec![0, -1, 1]);
        assert!(parse_composition("1,-2").is_err());
        assert!(parse_contents("").is_err());
    }
}
