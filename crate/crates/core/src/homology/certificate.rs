//! Certificates for infinite families of Ext-vanishing conditions.
//!
//! `Ext^i(M, N)` is computed for `i = 1, 2, ...` while the syzygies
//! `Ω^0 M, Ω^1 M, ...` are compared pairwise. Once `Ω^a M ≅ Ω^b M` with
//! `a < b`, dimension shifting gives `Ext^i(M, N) ≅ Ext^{i+(b-a)}(M, N)`
//! for every `i > a`, so vanishing in degrees `1..=b` covers every degree.

use crate::error::HomologyError;
use crate::rep::{is_isomorphic, IsoWitness, Isomorphism, Representation, Side};

use super::duality::transpose;
use super::ext::ExtCalculator;

/// Default bound on the orbit search and on the degrees checked.
pub const DEFAULT_BOUND: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `Ω^a M ≅ Ω^b M` and `Ext^i = 0` for `1 <= i <= b`.
    CertifiedVanishing { repeat: (usize, usize) },
    NonzeroAt { degree: usize, dim: usize },
    UnknownBeyond { bound: usize },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::CertifiedVanishing { .. })
    }

    pub fn is_nonzero(&self) -> bool {
        matches!(self, Verdict::NonzeroAt { .. })
    }

    pub fn is_decisive(&self) -> bool {
        !matches!(self, Verdict::UnknownBeyond { .. })
    }
}

/// Which Ext family a certificate speaks about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtContext {
    /// `Ext^i(M, Λ)`
    AgainstRegular,
    /// `Ext^i(M, M)`
    SelfOrthogonality,
    /// `Ext^i(M, N)` for a named `N`
    Against(String),
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub verdict: Verdict,
    pub context: ExtContext,
    pub bound: usize,
    /// `ext_dims[i - 1] = dim Ext^i(M, N)` for every degree examined.
    pub ext_dims: Vec<usize>,
    /// Dimension vectors of `Ω^0 M, Ω^1 M, ...` as far as examined.
    pub syzygy_dims: Vec<Vec<usize>>,
    /// Isomorphism `Ω^a M -> Ω^b M` behind a vanishing certificate.
    pub witness: Option<IsoWitness>,
}

impl Certificate {
    /// Largest `t` such that `Ext^i = 0` was observed for all `1 <= i <= t`.
    pub fn vanishing_range(&self) -> usize {
        self.ext_dims.iter().take_while(|&&d| d == 0).count()
    }
}

pub fn ext_vanishing_certificate(
    m: &Representation,
    n: &Representation,
    bound: usize,
    context: ExtContext,
) -> Result<Certificate, HomologyError> {
    if bound == 0 {
        return Err(HomologyError::ZeroBound);
    }
    let mut calc = ExtCalculator::new(m, n)?;
    let mut ext_dims = Vec::new();
    let mut syzygies: Vec<Representation> = Vec::new();
    let finish = |verdict, ext_dims, syzygies: &[Representation], witness| Certificate {
        verdict,
        context: context.clone(),
        bound,
        ext_dims,
        syzygy_dims: syzygies.iter().map(|s| s.dims().to_vec()).collect(),
        witness,
    };
    for k in 0..=bound {
        if k >= 1 {
            let d = calc.ext_dim(k);
            ext_dims.push(d);
            if d > 0 {
                let omega = calc.resolution().syzygy(k).clone();
                syzygies.push(omega);
                return Ok(finish(
                    Verdict::NonzeroAt { degree: k, dim: d },
                    ext_dims,
                    &syzygies,
                    None,
                ));
            }
        }
        let omega = calc.resolution().syzygy(k).clone();
        for (j, earlier) in syzygies.iter().enumerate() {
            if earlier.dims() != omega.dims() {
                continue;
            }
            match is_isomorphic(earlier, &omega)? {
                Isomorphism::Yes(w) => {
                    syzygies.push(omega);
                    return Ok(finish(
                        Verdict::CertifiedVanishing { repeat: (j, k) },
                        ext_dims,
                        &syzygies,
                        Some(*w),
                    ));
                }
                Isomorphism::No => {}
                Isomorphism::Undetermined => {
                    return Err(HomologyError::UndeterminedIsomorphism { first: j, second: k })
                }
            }
        }
        syzygies.push(omega);
    }
    Ok(finish(
        Verdict::UnknownBeyond { bound },
        ext_dims,
        &syzygies,
        None,
    ))
}

pub fn is_self_orthogonal(m: &Representation, bound: usize) -> Result<Certificate, HomologyError> {
    ext_vanishing_certificate(m, m, bound, ExtContext::SelfOrthogonality)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpVerdict {
    Certified,
    NotGorensteinProjective,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct GpCertificate {
    pub verdict: GpVerdict,
    /// `Ext^i(M, Λ)`
    pub module: Certificate,
    /// `Ext^i(Tr M, Λ_Λ)` over the opposite algebra.
    pub transpose: Certificate,
}

/// Both `Ext^i(M, Λ)` and `Ext^i(Tr M, Λ)` must vanish for all `i >= 1`.
pub fn is_gorenstein_projective(
    m: &Representation,
    bound: usize,
) -> Result<GpCertificate, HomologyError> {
    let alg = m.algebra();
    let lambda = Representation::regular(alg, Side::Left);
    let module = ext_vanishing_certificate(m, &lambda, bound, ExtContext::AgainstRegular)?;
    let tr = transpose(m);
    let lambda_op = Representation::regular(alg, Side::Right);
    let transpose = ext_vanishing_certificate(&tr, &lambda_op, bound, ExtContext::AgainstRegular)?;
    let verdict = if module.verdict.is_nonzero() || transpose.verdict.is_nonzero() {
        GpVerdict::NotGorensteinProjective
    } else if module.verdict.is_certified() && transpose.verdict.is_certified() {
        GpVerdict::Certified
    } else {
        GpVerdict::Unknown
    };
    Ok(GpCertificate {
        verdict,
        module,
        transpose,
    })
}
