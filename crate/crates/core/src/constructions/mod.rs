//! Realization of [`RingDescriptor`]s as [`FiniteRing`]s.

mod basic;
mod generalized;
mod matrix;
mod series;

use crate::descriptor::{ElementLiteral, EndomorphismSpec, RingDescriptor};
use crate::error::BuildError;
use crate::ring::{verify_axioms, AxiomCheck, Elem, FiniteRing, DEFAULT_AXIOM_CAP};

pub use basic::{corner_members, table_descriptor};
pub use matrix::{from_matrix_entries, matrix_entries};
pub use series::validate_endomorphism;

/// Default bound on the order of any realized ring.
pub const DEFAULT_ORDER_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildOptions {
    pub order_cap: usize,
    pub axiom_cap: usize,
    /// Run the exhaustive axiom scan on every built ring. Table rings are
    /// always scanned.
    pub verify_axioms: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            order_cap: DEFAULT_ORDER_CAP,
            axiom_cap: DEFAULT_AXIOM_CAP,
            verify_axioms: false,
        }
    }
}

impl BuildOptions {
    /// Defaults overridden by `QNIL_ORDER_CAP` / `QNIL_AXIOM_CAP`.
    pub fn from_env() -> Self {
        let mut opts = BuildOptions::default();
        if let Some(v) = std::env::var("QNIL_ORDER_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
        {
            opts.order_cap = v;
        }
        if let Some(v) = std::env::var("QNIL_AXIOM_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
        {
            opts.axiom_cap = v;
        }
        opts
    }

    pub(crate) fn admit(&self, predicted: Option<usize>) -> Result<usize, BuildError> {
        match predicted {
            Some(order) if order <= self.order_cap => Ok(order),
            order => Err(BuildError::OrderCap {
                order,
                cap: self.order_cap,
            }),
        }
    }
}

/// Builds with [`BuildOptions::default`].
pub fn build(descriptor: &RingDescriptor) -> Result<FiniteRing, BuildError> {
    build_with(descriptor, &BuildOptions::default())
}

pub fn build_with(
    descriptor: &RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    use RingDescriptor as D;
    let ring = match descriptor {
        D::Zn { n } => basic::build_zn(*n, opts)?,
        D::Product { factors } => {
            let parts = factors
                .iter()
                .map(|f| build_with(f, opts))
                .collect::<Result<Vec<_>, _>>()?;
            basic::build_product(parts, descriptor.clone(), opts)?
        }
        D::Matrix { family, base, n } => matrix::build_family(
            *family,
            build_with(base, opts)?,
            *n,
            descriptor.clone(),
            opts,
        )?,
        D::Lst { base, s, t } => {
            let base = build_with(base, opts)?;
            let (s, t) = (base.resolve(s)?, base.resolve(t)?);
            matrix::build_lst(base, s, t, descriptor.clone(), opts)?
        }
        D::Hst { base, s, t } => {
            let base = build_with(base, opts)?;
            let (s, t) = (base.resolve(s)?, base.resolve(t)?);
            matrix::build_hst(base, s, t, descriptor.clone(), opts)?
        }
        D::D3Pattern { base } => {
            matrix::build_d3_pattern(build_with(base, opts)?, descriptor.clone(), opts)?
        }
        D::Ks { base, s } => {
            let base = build_with(base, opts)?;
            let s = base.resolve(s)?;
            generalized::build_ks(base, s, descriptor.clone(), opts)?
        }
        D::Dorroh { algebra, scalars } => generalized::build_dorroh(
            build_with(algebra, opts)?,
            *scalars,
            descriptor.clone(),
            opts,
        )?,
        D::Hurwitz {
            base,
            alpha,
            degree,
        } => {
            let base = build_with(base, opts)?;
            let alpha = endomorphism_table(&base, alpha)?;
            series::build_series(base, alpha, *degree, true, descriptor.clone(), opts)?
        }
        D::SkewPower {
            base,
            alpha,
            degree,
        } => {
            let base = build_with(base, opts)?;
            let alpha = endomorphism_table(&base, alpha)?;
            series::build_series(base, alpha, *degree, false, descriptor.clone(), opts)?
        }
        D::TTrunc { r, s, n, embedding } => {
            let r_ring = build_with(r, opts)?;
            let s_ring = build_with(s, opts)?;
            if let Some(table) = embedding {
                basic::validate_embedding(&s_ring, &r_ring, table)?;
            }
            basic::build_t_trunc(r_ring, s_ring, *n, descriptor.clone(), opts)?
        }
        D::Corner { base, e } => {
            let base = build_with(base, opts)?;
            let e = base.resolve(e)?;
            basic::build_corner(base, e, descriptor.clone(), opts)?
        }
        D::XuxuLocal16 => basic::build_xuxu_local16(),
        D::Table {
            add,
            mul,
            zero,
            one,
        } => basic::build_table(add, mul, *zero, *one, descriptor.clone(), opts)?,
    };
    if opts.verify_axioms {
        match verify_axioms(&ring, opts.axiom_cap) {
            AxiomCheck::Verified => {}
            AxiomCheck::Violated(v) => return Err(BuildError::Axioms(v)),
            AxiomCheck::Unchecked { order, cap } => {
                return Err(BuildError::Unchecked { order, cap })
            }
        }
    }
    Ok(ring)
}

/// `eRe` for an already built `base`, without rebuilding it.
pub fn corner_ring(base: &FiniteRing, e: Elem) -> Result<FiniteRing, BuildError> {
    base.check_index(e)?;
    let literal = ElementLiteral::Coords(base.decode(e).iter().map(|&v| v as u64).collect());
    let descriptor = RingDescriptor::corner(base.descriptor().clone(), literal);
    basic::build_corner(base.clone(), e, descriptor, &BuildOptions::default())
}

/// Resolves an endomorphism spec against its base, validating it.
pub fn endomorphism_table(
    base: &FiniteRing,
    alpha: &EndomorphismSpec,
) -> Result<Vec<Elem>, BuildError> {
    let table = match alpha {
        EndomorphismSpec::Named(_) => base.elements().collect(),
        EndomorphismSpec::Table(t) => t.clone(),
    };
    validate_endomorphism(base, &table)?;
    Ok(table)
}

/// Constant term `ε(f) = a_0` of a truncated series element.
pub fn constant_term(ring: &FiniteRing, f: Elem) -> Option<Elem> {
    match ring.descriptor() {
        RingDescriptor::Hurwitz { .. } | RingDescriptor::SkewPower { .. } => {
            Some(ring.decode(f)[0])
        }
        _ => None,
    }
}

/// Embedding `S -> R` of a `T[R, S]` truncation, when one is known.
pub fn t_embedding(ring: &FiniteRing) -> Option<Vec<Elem>> {
    match ring.descriptor() {
        RingDescriptor::TTrunc {
            embedding: Some(table),
            ..
        } => Some(table.clone()),
        RingDescriptor::TTrunc {
            r,
            s,
            embedding: None,
            ..
        } if r == s => Some(ring.part(0).elements().collect()),
        _ => None,
    }
}

/// Wraps a base label in parentheses when it is compound.
pub(crate) fn atom(label: String) -> String {
    if label.chars().any(|c| matches!(c, ' ' | '+' | ',' | '-'))
        && !label.starts_with('[')
        && !label.starts_with('(')
    {
        format!("({label})")
    } else {
        label
    }
}
