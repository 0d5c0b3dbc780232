//! Exact construction of `J_{α,T}` over Q(κ) by spectral projection.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::spectral::{SpectralEntry, SpectralVector};
use crate::combinatorics::{lower_set, rank_function, Composition, Tableau};
use crate::error::Error;
use crate::field::{IntPoly, RatFunc};
use crate::operators::kappa_u_prime_column;
use crate::poly::{Irrep, TermKey, VectorPoly};

/// The pair `(α, T)` labelling one nonsymmetric Jack polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct JackLabel {
    pub alpha: Composition,
    pub tableau: Tableau,
}

impl JackLabel {
    pub fn new(alpha: Composition, tableau: Tableau) -> Result<Self, Error> {
        if alpha.len() != tableau.n() {
            return Err(Error::ShapeMismatch(format!(
                "composition of length {} with tableau on {} entries",
                alpha.len(),
                tableau.n()
            )));
        }
        if !tableau.is_rsyt() {
            return Err(Error::InvalidTableau(format!("{tableau:?} is not reverse standard")));
        }
        Ok(JackLabel { alpha, tableau })
    }

    pub fn spectral(&self) -> SpectralVector {
        SpectralVector::of(&self.alpha, &self.tableau).expect("validated label")
    }
}

/// `J_{α,T}` with its label and spectral vector.
#[derive(Clone, Debug)]
pub struct JackPolynomial {
    pub label: JackLabel,
    pub poly: VectorPoly<RatFunc>,
    pub spectral: SpectralVector,
}

impl JackPolynomial {
    pub fn specialize(&self, kappa0: &BigRational) -> Result<VectorPoly<BigRational>, Error> {
        self.poly.specialize(kappa0)
    }

    pub fn irrep(&self) -> &Arc<Irrep> {
        self.poly.irrep()
    }
}

/// Sizes of the projection run behind one construction.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ConstructionStats {
    /// Dimension of the span of `x^γ ⊗ T′`, `γ ⊴ α`.
    pub basis_size: usize,
    /// Labels `(γ, T′)` with `γ ⊲ α` that were projected away.
    pub lower_labels: usize,
    /// Distinct factors `(U′_i − v)` after merging equal `(i, v)`.
    pub factors: usize,
}

/// `τ(r_α⁻¹)T` as a sparse vector in `V_τ`.
pub fn leading_vector(irrep: &Irrep, alpha: &Composition, t: usize) -> Vec<(usize, BigRational)> {
    let w = rank_function(alpha).inverse();
    irrep.matrix_of(&w).column(t).to_vec()
}

pub fn construct_jack(alpha: &Composition, t: &Tableau) -> Result<JackPolynomial, Error> {
    construct_jack_with_stats(alpha, t).map(|(j, _)| j)
}

/// `κU′_i` on the basis, scaled to integer entries `a + bκ`; stored by rows.
struct IntMatrix {
    rows: Vec<Vec<(usize, BigInt, BigInt)>>,
    scale: BigInt,
}

fn assemble(irrep: &Irrep, i: usize, keys: &[TermKey], index: &HashMap<TermKey, usize>) -> IntMatrix {
    let mut entries = Vec::new();
    let mut den = BigInt::one();
    for (col, key) in keys.iter().enumerate() {
        for (img, a, b) in kappa_u_prime_column(irrep, i, key) {
            let row = *index
                .get(&img)
                .unwrap_or_else(|| panic!("U'_{i} leaves the lower set: {:?} -> {:?}", key.exp, img.exp));
            den = den.lcm(a.denom()).lcm(b.denom());
            entries.push((row, col, a, b));
        }
    }
    let mut rows = vec![Vec::new(); keys.len()];
    for (row, col, a, b) in entries {
        let a = (a * &den).to_integer();
        let b = (b * &den).to_integer();
        rows[row].push((col, a, b));
    }
    IntMatrix { rows, scale: den }
}

/// `(a + bκ)` made primitive with positive leading coefficient; returns the
/// signed integer removed.
fn normalize_linear(p: IntPoly) -> (IntPoly, BigInt) {
    let mut c = p.content();
    if p.leading().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    (p.div_exact_int(&c), c)
}

/// Constructs `J_{α,T}` as `Π (U′_i − v)/(ζ′_{α,T}(i) − v) · x^α ⊗ τ(r_α⁻¹)T`,
/// one factor for every label `(γ, T′)` with `γ ⊲ α`, using the smallest
/// index `i` at which the spectral vectors differ.
///
/// The numerator is accumulated in `Z[κ]` with the integer scaling of every
/// factor tracked separately; the denominator is a product of linear factors
/// which is cancelled against each coefficient at the end.
pub fn construct_jack_with_stats(alpha: &Composition, t: &Tableau) -> Result<(JackPolynomial, ConstructionStats), Error> {
    let label = JackLabel::new(alpha.clone(), t.clone())?;
    let irrep = Irrep::of(t.shape());
    let t_idx = irrep.index_of(t).expect("tableau of this shape");
    let zeta = label.spectral();
    let dim = irrep.dim();

    let lower = lower_set(alpha);
    let keys: Vec<TermKey> = lower
        .iter()
        .flat_map(|g| (0..dim).map(move |tt| TermKey::new(g.clone(), tt)))
        .collect();
    let index: HashMap<TermKey, usize> = keys.iter().cloned().enumerate().map(|(n, k)| (k, n)).collect();

    let mut factors: BTreeSet<(usize, SpectralEntry)> = BTreeSet::new();
    let mut lower_labels = 0;
    for g in lower.iter().filter(|g| *g != alpha) {
        for tt in irrep.tableaux() {
            lower_labels += 1;
            let z = SpectralVector::of(g, tt)?;
            let i = (1..=zeta.len())
                .find(|&i| z.get(i) != zeta.get(i))
                .ok_or_else(|| Error::SpectralCollision(alpha.0.clone()))?;
            factors.insert((i, z.get(i)));
        }
    }
    let stats = ConstructionStats { basis_size: keys.len(), lower_labels, factors: factors.len() };

    // starting vector, scaled to integers
    let lead = leading_vector(&irrep, alpha, t_idx);
    let d0 = lead.iter().fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
    let mut x: Vec<IntPoly> = vec![IntPoly::zero(); keys.len()];
    for (tt, q) in &lead {
        let k = TermKey::new(alpha.clone(), *tt);
        x[index[&k]] = IntPoly::constant((q * &d0).to_integer());
    }
    let mut num_scale = BigInt::one();
    let mut den_scale = d0;
    let mut linear: BTreeMap<Vec<BigInt>, (IntPoly, usize)> = BTreeMap::new();

    let mut matrices: HashMap<usize, IntMatrix> = HashMap::new();
    for &(i, v) in &factors {
        let m = matrices.entry(i).or_insert_with(|| assemble(&irrep, i, &keys, &index));
        let va = &m.scale * BigInt::from(v.alpha);
        let vc = &m.scale * BigInt::from(v.content);
        let y: Vec<IntPoly> = m
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut acc = IntPoly::zero();
                for (c, a, b) in row {
                    let xc = &x[*c];
                    if xc.is_zero() {
                        continue;
                    }
                    acc.add_scaled(xc, a, 0);
                    acc.add_scaled(xc, b, 1);
                }
                if !x[r].is_zero() {
                    acc.add_scaled(&x[r], &-&va, 0);
                    acc.add_scaled(&x[r], &-&vc, 1);
                }
                acc
            })
            .collect();
        x = y;
        let g = x.iter().fold(BigInt::zero(), |g, p| if g.is_one() { g } else { g.gcd(&p.content()) });
        if g.is_zero() {
            panic!("projection annihilated the leading term of J_{alpha:?}");
        }
        if !g.is_one() {
            for p in x.iter_mut() {
                *p = p.div_exact_int(&g);
            }
            num_scale *= g;
        }
        let zi = zeta.get(i);
        let lin = IntPoly::linear(
            BigInt::from(zi.alpha as i64 - v.alpha as i64),
            BigInt::from(zi.content - v.content),
        );
        let (lin, c) = normalize_linear(lin);
        den_scale *= &m.scale * c;
        let e = linear.entry(lin.coeffs().to_vec()).or_insert((lin, 0));
        e.1 += 1;
    }

    let s = BigRational::new(num_scale, den_scale);
    let mut poly = VectorPoly::zero(irrep.clone());
    for (r, p) in x.into_iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let mut num = p;
        let mut den = IntPoly::constant(s.denom().clone());
        for (lin, mult) in linear.values() {
            let mut left = *mult;
            while left > 0 {
                match num.div_exact(lin) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            for _ in 0..left {
                den = den.mul(lin);
            }
        }
        let num = num.scale(s.numer());
        poly.add_term(keys[r].clone(), &RatFunc::from_coprime(num, den));
    }
    Ok((JackPolynomial { label, poly, spectral: zeta }, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{compare_order, Order, Partition};
    use crate::operators::cherednik_prime;

    fn check_eigen(j: &JackPolynomial) {
        let k = RatFunc::kappa();
        for i in 1..=j.poly.n() {
            let lhs = cherednik_prime(i, &j.poly, &k).unwrap();
            assert_eq!(lhs, j.poly.scale(&j.spectral.get(i).value()), "U'_{i} on {:?}", j.label.alpha);
        }
    }

    fn check_shape(j: &JackPolynomial) {
        let irrep = j.irrep();
        let t = irrep.index_of(&j.label.tableau).unwrap();
        for (tt, q) in leading_vector(irrep, &j.label.alpha, t) {
            assert_eq!(j.poly.coeff(&j.label.alpha, tt), Some(&RatFunc::from_rational(&q)));
        }
        for (k, _) in j.poly.terms() {
            assert!(matches!(compare_order(&k.exp, &j.label.alpha), Order::Below | Order::Equal));
        }
    }

    #[test]
    fn zero_composition() {
        let t = Tableau::rsyt(vec![vec![3, 1], vec![2]]).unwrap();
        let j = construct_jack(&Composition::zero(3), &t).unwrap();
        assert_eq!(j.poly.num_terms(), 1);
        check_eigen(&j);
    }

    #[test]
    fn small_labels_are_eigenvectors() {
        for shape in [vec![2, 1], vec![1, 1, 1], vec![3]] {
            let irrep = Irrep::of(&Partition::new(shape).unwrap());
            for alpha in [vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2], vec![2, 0, 1], vec![1, 1, 0]] {
                for t in irrep.tableaux() {
                    let j = construct_jack(&Composition(alpha.clone()), t).unwrap();
                    check_eigen(&j);
                    check_shape(&j);
                }
            }
        }
    }

    #[test]
    fn scalar_degree_one() {
        // τ = (2): J_{(0,1)} = x_2 and J_{(1,0)} = x_1 + κ/(1+κ) x_2
        let t = Tableau::rsyt(vec![vec![2, 1]]).unwrap();
        let j = construct_jack(&Composition(vec![0, 1]), &t).unwrap();
        assert_eq!(j.poly.num_terms(), 1);
        let j = construct_jack(&Composition(vec![1, 0]), &t).unwrap();
        let want = RatFunc::new(IntPoly::kappa(), IntPoly::from_i64s(&[1, 1])).unwrap();
        assert_eq!(j.poly.coeff(&Composition(vec![0, 1]), 0), Some(&want));
    }
}
