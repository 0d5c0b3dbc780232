//! Human-readable renderings. JSON is the machine contract; these are for eyes.

use std::fmt::Write;

use rectjack::combinatorics::{Composition, Tableau};
use rectjack::field::{format_rational, BigRational, RatFunc, Scalar};
use rectjack::poly::VectorPoly;
use rectjack::singular::{MuReport, N5Report, NormsReport, SingularCertificate, UniquenessReport, Verdict};

/// Tableau grid indented by two spaces.
pub fn indent(t: &Tableau) -> String {
    indent_by(t, 2)
}

fn indent_by(t: &Tableau, n: usize) -> String {
    t.to_string().lines().map(|l| format!("{:n$}{l}", "")).collect::<Vec<_>>().join("\n")
}

fn terms<C: Scalar>(p: &VectorPoly<C>, show: impl Fn(&C) -> String) -> String {
    if p.is_zero() {
        return "  0\n".into();
    }
    let irrep = p.irrep();
    let mut s = String::new();
    for (k, c) in p.terms() {
        let _ = writeln!(s, "  ({}) x^{} ⊗ T{:?}", show(c), k.exp, irrep.tableau(k.tab).content_vector());
    }
    s
}

pub fn poly(p: &VectorPoly<BigRational>) -> String {
    terms(p, format_rational)
}

pub fn ratpoly(p: &VectorPoly<RatFunc>) -> String {
    terms(p, |c| c.to_string())
}

pub fn jack(alpha: &Composition, t: &Tableau, spectral: &str, kappa: Option<&BigRational>, body: &str) -> String {
    let at = kappa.map(|k| format!(" at kappa = {}", format_rational(k))).unwrap_or_default();
    format!("J_{{alpha,T}}, alpha = {alpha}, T =\n{}\nspectral vector{at}: {spectral}\nterms (coefficient, monomial, tableau by contents):\n{body}", indent(t))
}

pub fn certificate(c: &SingularCertificate) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "singular family m={} k={} n={} at kappa = {}: {} members, sigma = {:?}, tau = {:?}",
        c.m,
        c.k,
        c.n,
        format_rational(&c.kappa),
        c.members.len(),
        c.sigma,
        c.tau
    );
    for (idx, r) in c.members.iter().enumerate() {
        let _ = writeln!(s, "\n[{}] S =\n{}", idx + 1, indent(&r.source));
        let _ = writeln!(s, "    beta = {}\n    T =\n{}", r.beta, indent_by(&r.tableau, 6));
        let _ = writeln!(
            s,
            "    terms {}, monomials {}, gamma {}, singular {}, omega eigenvalues = contents {}",
            r.num_terms,
            r.num_monomials,
            format_rational(&r.gamma),
            r.singular,
            r.eigen
        );
    }
    let _ = writeln!(s, "\n{}", if c.passed { "PASSED" } else { "FAILED" });
    s
}

pub fn uniqueness(r: &UniquenessReport) -> String {
    let verdict = match r.verdict {
        Verdict::Unique => "Unique",
        Verdict::Collisions => "Collisions",
    };
    let mut s = format!(
        "{verdict}\nbeta = {} at kappa = {}, T =\n{}\nenumerated {} pairs\n",
        r.beta,
        format_rational(&r.kappa),
        indent(&r.tableau),
        r.enumerated
    );
    for c in &r.collisions {
        let _ = writeln!(s, "collision{}: gamma = {}, T' =\n{}", if c.below { " (below beta)" } else { "" }, c.gamma, indent(&c.tableau));
    }
    s
}

pub fn norms(r: &NormsReport) -> String {
    let mut s = format!("norms for m={} k={}\n", r.m, r.k);
    for e in &r.entries {
        let _ = writeln!(
            s,
            "\ninv {}: ||S||^2 = {}, gamma = {}, {} incoming steps{}\n{}",
            e.inv,
            format_rational(&e.norm_squared),
            format_rational(&e.gamma),
            e.edges,
            if e.consistent { "" } else { ", INCONSISTENT" },
            indent(&e.source)
        );
    }
    let _ = writeln!(s, "\npath independent: {}, product = recursion: {}", r.path_independent, r.all_match);
    s
}

pub fn mu(r: &MuReport) -> String {
    let ok = r.cases.iter().filter(|c| c.commutation.all()).count();
    format!(
        "mu for m={} k={} at kappa = {}: {}/{} random inputs of degree <= {} commute with x_i, s_i, D_i (seed {})\n{}\n",
        r.m,
        r.k,
        format_rational(&r.kappa),
        ok,
        r.cases.len(),
        r.degree,
        r.seed,
        if r.passed { "PASSED" } else { "FAILED" }
    )
}

pub fn n5(r: &N5Report) -> String {
    let label = |l: &rectjack::singular::LabelSummary| {
        format!(
            "alpha = {}, T =\n{}\n  spectral ({}), pole-free {}, {} terms, {} monomials, singular {}, invariant {}",
            l.alpha,
            indent(&l.tableau),
            l.spectral.iter().map(format_rational).collect::<Vec<_>>().join(", "),
            l.pole_free,
            l.num_terms,
            l.num_monomials,
            l.singular,
            l.invariant
        )
    };
    let u: Vec<String> = r.combination_u_prime.iter().map(|c| c.clone().unwrap_or_else(|| "-".into())).collect();
    format!(
        "kappa = {}\nfirst: {}\nsecond: {}\nJ_first + {} J_second: singular {}, invariant {}, U' eigenvalues ({})\nthe oracle flags the two labels as colliding: {}\n{}\n",
        format_rational(&r.kappa),
        label(&r.first),
        label(&r.second),
        r.combination_coefficient,
        r.combination_singular,
        r.combination_invariant,
        u.join(", "),
        r.uniqueness_fails,
        if r.passed { "PASSED" } else { "FAILED" }
    )
}
