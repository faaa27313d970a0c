//! Module-level operations built on syzygy computations: kernels,
//! intersections, preimages, sums, membership, and module identity.

use super::element::{ModuleElement, ModuleOrder, PositionRule};
use super::gb::{groebner_checked, normal_form};
use super::matrix::PolyMatrix;
use super::presentation::SubmodulePresentation;
use crate::config::Context;
use crate::error::{Error, Result};

/// Generators of the syzygy module `{v : P v = 0}`.
///
/// Method: complete the module generated by the columns of `P` stacked on
/// the corresponding unit vectors under a position-over-term order in
/// which the upper block dominates; basis elements whose upper block
/// vanishes project onto kernel generators. Every returned generator is
/// post-checked to annihilate `P` exactly.
pub fn kernel_of_matrix(p: &PolyMatrix, ctx: &Context) -> Result<SubmodulePresentation> {
    let ring = p.ring();
    let (nrows, ncols) = (p.rows(), p.cols());
    let ord = ModuleOrder { base: ctx.base_order, rule: PositionRule::BlockElimination(nrows) };

    let gens: Vec<ModuleElement> = (0..ncols)
        .map(|j| {
            let mut entries = Vec::with_capacity(nrows + ncols);
            for r in 0..nrows {
                entries.push(p.get(r, j).clone());
            }
            for i in 0..ncols {
                entries.push(if i == j {
                    crate::polyring::Polynomial::one(ring)
                } else {
                    crate::polyring::Polynomial::zero(ring)
                });
            }
            ModuleElement::new(ring, entries)
        })
        .collect();

    let gb = groebner_checked(&gens, ord, ctx.spair_cap)?;
    let mut kernel_gens = Vec::new();
    for e in &gb.elements {
        if (0..nrows).all(|r| e.entry(r).is_zero()) {
            kernel_gens.push(ModuleElement::new(ring, e.entries()[nrows..].to_vec()));
        }
    }
    for v in &kernel_gens {
        if !p.mul_vec(v).is_zero() {
            return Err(Error::SelfCheck(
                "kernel generator does not annihilate its matrix".into(),
            ));
        }
    }
    // elimination-order generators can be needlessly large; hand callers
    // the canonical reduced presentation of the same kernel
    SubmodulePresentation::new(ring, ncols, kernel_gens).canonicalized(ctx)
}

/// Membership test: true iff the normal form of `v` against the canonical
/// reduced basis of `u` vanishes.
pub fn is_member(v: &ModuleElement, u: &SubmodulePresentation, ctx: &Context) -> Result<bool> {
    assert_eq!(v.rank(), u.rank(), "rank mismatch in membership test");
    if v.is_zero() {
        return Ok(true);
    }
    let gb = u.canonical_gb(ctx)?;
    Ok(normal_form(v, &gb.elements, gb.order).is_zero())
}

/// Module identity: equality of canonical reduced bases.
pub fn module_equal(
    u: &SubmodulePresentation,
    v: &SubmodulePresentation,
    ctx: &Context,
) -> Result<bool> {
    assert_eq!(u.rank(), v.rank(), "rank mismatch in module comparison");
    let gu = u.canonical_gb(ctx)?;
    let gv = v.canonical_gb(ctx)?;
    Ok(gu.elements == gv.elements)
}

/// Span of the union of the generator lists.
pub fn sum(u: &SubmodulePresentation, v: &SubmodulePresentation) -> SubmodulePresentation {
    assert_eq!(u.rank(), v.rank(), "rank mismatch in module sum");
    let mut gens = u.generators().to_vec();
    gens.extend_from_slice(v.generators());
    SubmodulePresentation::new(u.ring(), u.rank(), gens)
}

/// Intersection via syzygies of the block matrix `[G_U | -G_V]` whose
/// columns are the generators: a syzygy (a, b) satisfies
/// `G_U a = G_V b`, which lies in both modules. Every returned generator
/// is post-checked for membership on both sides.
pub fn intersect(
    u: &SubmodulePresentation,
    v: &SubmodulePresentation,
    ctx: &Context,
) -> Result<SubmodulePresentation> {
    assert_eq!(u.rank(), v.rank(), "rank mismatch in intersection");
    let ring = u.ring();
    let rank = u.rank();
    if u.is_trivial() || v.is_trivial() {
        return Ok(SubmodulePresentation::zero(ring, rank));
    }
    let gu = PolyMatrix::from_columns(ring, rank, u.generators());
    let gv_neg = {
        let cols: Vec<ModuleElement> = v.generators().iter().map(|g| -g).collect();
        PolyMatrix::from_columns(ring, rank, &cols)
    };
    let block = gu.hstack(&gv_neg);
    let syz = kernel_of_matrix(&block, ctx)?;

    let su = u.generators().len();
    let mut gens = Vec::new();
    for s in syz.generators() {
        let mut w = ModuleElement::zero(ring, rank);
        for (i, g) in u.generators().iter().enumerate() {
            if !s.entry(i).is_zero() {
                w = &w + &g.scale_poly(s.entry(i));
            }
        }
        debug_assert!(su <= s.rank());
        if !w.is_zero() {
            gens.push(w);
        }
    }
    // the syzygy route often produces combinations of needlessly high
    // degree; the reduced basis is the same module in small generators,
    // which keeps downstream syzygy runs from compounding degree growth
    let result = SubmodulePresentation::new(ring, rank, gens).canonicalized(ctx)?;
    for g in result.generators() {
        if !is_member(g, u, ctx)? || !is_member(g, v, ctx)? {
            return Err(Error::SelfCheck(
                "intersection generator escapes one of its factors".into(),
            ));
        }
    }
    Ok(result)
}

/// Full preimage `{x : P x in V}` via syzygies of `[P | -G_V]` projected
/// onto the first block of coordinates. Post-checked: `P x` is a member
/// of `V` for every returned generator.
pub fn preimage(
    p: &PolyMatrix,
    v: &SubmodulePresentation,
    ctx: &Context,
) -> Result<SubmodulePresentation> {
    assert_eq!(p.rows(), v.rank(), "rank mismatch between matrix and target module");
    let ring = p.ring();
    let q = p.cols();
    let syz = if v.is_trivial() {
        kernel_of_matrix(p, ctx)?
    } else {
        let gv_neg = {
            let cols: Vec<ModuleElement> = v.generators().iter().map(|g| -g).collect();
            PolyMatrix::from_columns(ring, v.rank(), &cols)
        };
        let block = p.hstack(&gv_neg);
        let wide = kernel_of_matrix(&block, ctx)?;
        let gens: Vec<ModuleElement> = wide
            .generators()
            .iter()
            .map(|s| ModuleElement::new(ring, s.entries()[..q].to_vec()))
            .collect();
        SubmodulePresentation::new(ring, q, gens).canonicalized(ctx)?
    };
    for x in syz.generators() {
        if !is_member(&p.mul_vec(x), v, ctx)? {
            return Err(Error::SelfCheck("preimage generator maps outside the target".into()));
        }
    }
    Ok(syz)
}
