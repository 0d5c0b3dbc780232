//! Singular polynomials for `τ = (m^{2k})` of isotype `σ = (mk, mk)`: the
//! brick map, the family at `κ = n/(m+2)`, uniqueness of spectral vectors,
//! norms, and the module map `μ`.

mod brick;
mod example;
mod family;
mod maps;
mod norms;
mod uniqueness;

pub use brick::{brick_map, fundamental_equation_holds, BrickPair};
pub use example::{example_n5, LabelSummary, N5Report};
pub use family::{
    closure_check, closure_check_on, family_members, isotype_of, singular_family, singular_kappa, ClosureCase,
    ClosureInstance, ClosureReport, FamilyMember, MemberRecord, SingularCertificate,
};
pub use maps::{
    mu_verify, random_input, reverse_map_q, reverse_map_q_on, Commutation, MuCase, MuMap, MuReport, QEntry, QReport,
};
pub use norms::{gamma_product, norm_squared, norms_and_gamma, NormEntry, NormsReport};
pub use uniqueness::{
    alpha_variants, pair_tableau, scaled_spectral, uniqueness_oracle, AlphaVariants, Collision, PairTableau,
    UniquenessReport, VariantRow, Verdict,
};
