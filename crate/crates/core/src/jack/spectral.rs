use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{rank_function, rsyt_from_contents, Composition, Tableau};
use crate::error::Error;
use crate::field::{IntPoly, RatFunc};

/// One spectral value `a/κ + c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SpectralEntry {
    pub alpha: u32,
    pub content: i64,
}

impl SpectralEntry {
    pub fn value(&self) -> RatFunc {
        // (a + cκ)/κ
        RatFunc::new(self.times_kappa(), IntPoly::kappa()).expect("nonzero denominator")
    }

    /// `κ · (a/κ + c) = a + cκ`
    pub fn times_kappa(&self) -> IntPoly {
        IntPoly::linear(BigInt::from(self.alpha), BigInt::from(self.content))
    }

    pub fn evaluate(&self, kappa0: &BigRational) -> Result<BigRational, Error> {
        if kappa0.is_zero() {
            return Err(Error::PoleAtKappa { kappa: kappa0.clone(), exponents: Vec::new() });
        }
        Ok(BigRational::from_integer(self.alpha.into()) / kappa0 + BigRational::from_integer(self.content.into()))
    }
}

impl fmt::Display for SpectralEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.alpha, self.content) {
            (0, c) => write!(f, "{c}"),
            (a, 0) => write!(f, "{a}/k"),
            (a, c) if c < 0 => write!(f, "{a}/k - {}", -c),
            (a, c) => write!(f, "{a}/k + {c}"),
        }
    }
}

/// `ζ′_{α,T}(i) = α_i/κ + c(r_α(i), T)`, `i = 1..N`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpectralVector {
    entries: Vec<SpectralEntry>,
}

impl SpectralVector {
    pub fn of(alpha: &Composition, t: &Tableau) -> Result<Self, Error> {
        if alpha.len() != t.n() {
            return Err(Error::ShapeMismatch(format!("composition of length {} with tableau on {} entries", alpha.len(), t.n())));
        }
        let r = rank_function(alpha);
        let entries = (1..=alpha.len())
            .map(|i| SpectralEntry { alpha: alpha.get(i), content: t.content(r.apply(i)) })
            .collect();
        Ok(SpectralVector { entries })
    }

    pub fn entries(&self) -> &[SpectralEntry] {
        &self.entries
    }

    /// `ζ′(i)`, 1-indexed.
    pub fn get(&self, i: usize) -> SpectralEntry {
        self.entries[i - 1]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_ratfuncs(&self) -> Vec<RatFunc> {
        self.entries.iter().map(SpectralEntry::value).collect()
    }

    pub fn evaluate(&self, kappa0: &BigRational) -> Result<Vec<BigRational>, Error> {
        self.entries.iter().map(|e| e.evaluate(kappa0)).collect()
    }

    /// `b(i) = 1/(ζ′(i) − ζ′(i+1))`
    pub fn b_value(&self, i: usize) -> Result<RatFunc, Error> {
        let (a, b) = (self.get(i), self.get(i + 1));
        // κ / ((α_i − α_{i+1}) + κ(c_i − c_{i+1}))
        let den = IntPoly::linear(
            BigInt::from(a.alpha as i64 - b.alpha as i64),
            BigInt::from(a.content - b.content),
        );
        if den.is_zero() {
            return Err(Error::ZeroDenominator(i));
        }
        RatFunc::new(IntPoly::kappa(), den)
    }

    /// Recovers `(α, T)`: `α_i` is the coefficient of `1/κ` and the contents
    /// reassemble `T` after undoing the rank permutation.
    pub fn label(&self) -> Result<(Composition, Tableau), Error> {
        let alpha = Composition(self.entries.iter().map(|e| e.alpha).collect());
        let r = rank_function(&alpha);
        let mut contents = vec![0; self.len()];
        for (i, e) in self.entries.iter().enumerate() {
            contents[r.apply(i + 1) - 1] = e.content;
        }
        Ok((alpha, rsyt_from_contents(&contents)?))
    }
}

impl fmt::Display for SpectralVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bricks;
    use crate::field::rational;

    #[test]
    fn lambda_t0_gives_s0_contents() {
        for (m, k) in [(1, 2), (2, 2), (3, 2)] {
            let z = SpectralVector::of(&bricks::lambda(m, k).unwrap(), &bricks::t0(m, k).unwrap()).unwrap();
            let got = z.evaluate(&rational(1, m as i64 + 2)).unwrap();
            let want: Vec<BigRational> =
                bricks::s0(m, k).unwrap().content_vector().iter().map(|&c| rational(c, 1)).collect();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn zero_composition_is_content() {
        let t = Tableau::rsyt(vec![vec![5, 3, 2], vec![4], vec![1]]).unwrap();
        let z = SpectralVector::of(&Composition::zero(5), &t).unwrap();
        assert!(z.entries().iter().zip(t.content_vector()).all(|(e, c)| e.alpha == 0 && e.content == c));
    }

    #[test]
    fn label_round_trip() {
        let t = Tableau::rsyt(vec![vec![5, 4, 3], vec![2], vec![1]]).unwrap();
        let a = Composition(vec![3, 2, 0, 0, 0]);
        let z = SpectralVector::of(&a, &t).unwrap();
        assert_eq!(z.label().unwrap(), (a, t));
    }

    #[test]
    fn b_values_at_equal_parts() {
        let t = Tableau::rsyt(vec![vec![4, 3], vec![2, 1]]).unwrap();
        let z = SpectralVector::of(&Composition(vec![1, 1, 0, 0]), &t).unwrap();
        // r_α = id; entries 1,2 share a row, entries 3,4 share a row
        assert_eq!(z.b_value(1).unwrap(), RatFunc::from_int(1));
        assert_eq!(z.b_value(3).unwrap(), RatFunc::from_int(1));
        let t2 = Tableau::rsyt(vec![vec![4, 2], vec![3, 1]]).unwrap();
        let z2 = SpectralVector::of(&Composition(vec![0, 0, 0, 0]), &t2).unwrap();
        assert_eq!(z2.b_value(1).unwrap(), RatFunc::from_int(-1));
    }
}
