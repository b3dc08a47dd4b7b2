use std::sync::Arc;

use crate::error::Error;
use crate::repcat::field::{Fp, FpMat};
use crate::repcat::quiver::Quiver;
use crate::Result;

/// Hom spaces larger than this are refused rather than scanned.
pub const HOM_SCAN_DIM_CAP: usize = 20;
/// Endomorphism algebras with at most this many elements are searched
/// exhaustively for idempotents.
pub const END_SCAN_SIZE_CAP: u64 = 1 << 16;

/// A representation of an acyclic quiver over F_p: a dimension per vertex
/// and one matrix per arrow mapping the source space into the target space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: Fp,
    dims: Vec<usize>,
    maps: Vec<FpMat>,
}

impl Representation {
    pub fn new(
        quiver: Arc<Quiver>,
        field: Fp,
        dims: Vec<usize>,
        maps: Vec<FpMat>,
    ) -> Result<Representation> {
        if dims.len() != quiver.vertex_count() || maps.len() != quiver.arrows().len() {
            return Err(Error::InvalidInput(
                "dimension vector or map list has the wrong length".to_owned(),
            ));
        }
        for (a, &(s, t)) in quiver.arrows().iter().enumerate() {
            if maps[a].rows != dims[t] || maps[a].cols != dims[s] {
                return Err(Error::InvalidInput(format!(
                    "map for arrow {} has shape {}x{}, expected {}x{}",
                    a, maps[a].rows, maps[a].cols, dims[t], dims[s]
                )));
            }
        }
        Ok(Representation {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn zero(quiver: Arc<Quiver>, field: Fp) -> Representation {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| FpMat::zero(0, 0))
            .collect();
        Representation {
            quiver,
            field,
            dims,
            maps,
        }
    }

    /// The simple representation concentrated at `vertex`.
    pub fn simple(quiver: Arc<Quiver>, field: Fp, vertex: usize) -> Representation {
        let mut dims = vec![0; quiver.vertex_count()];
        dims[vertex] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| FpMat::zero(dims[t], dims[s]))
            .collect();
        Representation {
            quiver,
            field,
            dims,
            maps,
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[FpMat] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.check_compatible(other)?;
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(&a, &b)| a + b)
            .collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = FpMat::zero(dims[t], dims[s]);
                let (ma, mb) = (&self.maps[a], &other.maps[a]);
                for i in 0..ma.rows {
                    for j in 0..ma.cols {
                        m.set(i, j, ma.get(i, j));
                    }
                }
                for i in 0..mb.rows {
                    for j in 0..mb.cols {
                        m.set(self.dims[t] + i, self.dims[s] + j, mb.get(i, j));
                    }
                }
                m
            })
            .collect();
        Representation::new(Arc::clone(&self.quiver), self.field, dims, maps)
    }

    pub(crate) fn check_compatible(&self, other: &Representation) -> Result<()> {
        if self.quiver.as_ref() != other.quiver.as_ref() || self.field != other.field {
            return Err(Error::QuiverMismatch);
        }
        Ok(())
    }
}

/// A morphism of representations: one matrix block per vertex, subject to
/// the intertwining relations `φ_t ∘ M_a = N_a ∘ φ_s` for every arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub blocks: Vec<FpMat>,
}

impl Morphism {
    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(FpMat::is_zero)
    }

    /// A monomorphism has every block of full column rank.
    pub fn is_mono(&self, field: Fp) -> bool {
        self.blocks.iter().all(|b| field.rank(b) == b.cols)
    }

    pub fn is_iso(&self, field: Fp) -> bool {
        self.blocks
            .iter()
            .all(|b| b.rows == b.cols && field.rank(b) == b.rows)
    }
}

/// A basis of `Hom(a, b)`, computed as the nullspace of the stacked
/// intertwining conditions.
pub fn hom_basis(a: &Representation, b: &Representation) -> Result<Vec<Morphism>> {
    a.check_compatible(b)?;
    let field = a.field();
    let quiver = a.quiver();
    let nv = quiver.vertex_count();
    // Unknowns: entries of the per-vertex blocks φ_v (dims_b(v) × dims_a(v)),
    // flattened row-major in vertex order.
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + b.dims()[v] * a.dims()[v];
    }
    let unknowns = offsets[nv];
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (arrow, &(s, t)) in quiver.arrows().iter().enumerate() {
        let ma = &a.maps()[arrow];
        let mb = &b.maps()[arrow];
        // φ_t · M_a − N_a · φ_s = 0, one equation per (i, j).
        for i in 0..b.dims()[t] {
            for j in 0..a.dims()[s] {
                let mut row = vec![0u8; unknowns];
                for k in 0..a.dims()[t] {
                    // coefficient of φ_t[i, k]
                    let idx = offsets[t] + i * a.dims()[t] + k;
                    row[idx] = field.add(row[idx], ma.get(k, j));
                }
                for k in 0..b.dims()[s] {
                    // coefficient of φ_s[k, j]
                    let idx = offsets[s] + k * a.dims()[s] + j;
                    row[idx] = field.sub(row[idx], mb.get(i, k));
                }
                rows.push(row);
            }
        }
    }
    let system = if rows.is_empty() {
        FpMat::zero(0, unknowns)
    } else {
        FpMat::from_rows(rows)
    };
    let basis = field.nullspace(&system);
    Ok(basis
        .into_iter()
        .map(|x| {
            let blocks = (0..nv)
                .map(|v| {
                    let mut m = FpMat::zero(b.dims()[v], a.dims()[v]);
                    let base = offsets[v];
                    for i in 0..b.dims()[v] {
                        for j in 0..a.dims()[v] {
                            m.set(i, j, x[base + i * a.dims()[v] + j]);
                        }
                    }
                    m
                })
                .collect();
            Morphism { blocks }
        })
        .collect())
}

pub fn end_basis(a: &Representation) -> Result<Vec<Morphism>> {
    hom_basis(a, a)
}

fn combine(field: Fp, basis: &[Morphism], coeffs: &[u8]) -> Morphism {
    let blocks = (0..basis[0].blocks.len())
        .map(|v| {
            let mut m = FpMat::zero(basis[0].blocks[v].rows, basis[0].blocks[v].cols);
            for (b, &c) in basis.iter().zip(coeffs) {
                if c != 0 {
                    m = field.mat_add(&m, &field.mat_scale(&b.blocks[v], c));
                }
            }
            m
        })
        .collect();
    Morphism { blocks }
}

/// Iterates all coefficient vectors in `F_p^n` in lexicographic order.
fn for_each_coeff_vector(p: u8, n: usize, mut f: impl FnMut(&[u8]) -> bool) {
    let mut coeffs = vec![0u8; n];
    loop {
        if !f(&coeffs) {
            return;
        }
        let mut k = 0;
        loop {
            if k == n {
                return;
            }
            coeffs[k] += 1;
            if coeffs[k] < p {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
    }
}

/// Whether some monomorphism `a → b` exists, by exhaustive scan of the Hom
/// space.
pub fn exists_mono(a: &Representation, b: &Representation) -> Result<bool> {
    a.check_compatible(b)?;
    // A block of a mono must be injective, which is impossible if the source
    // dimension exceeds the target dimension anywhere.
    if a.dims().iter().zip(b.dims()).any(|(&x, &y)| x > y) {
        return Ok(false);
    }
    if a.is_zero() {
        return Ok(true);
    }
    let basis = hom_basis(a, b)?;
    let scan_size = (a.field().p() as u128).checked_pow(basis.len() as u32);
    if basis.len() > HOM_SCAN_DIM_CAP || scan_size.is_none_or(|s| s > 1 << 24) {
        return Err(Error::HomSpaceTooLarge(basis.len()));
    }
    if basis.is_empty() {
        return Ok(false);
    }
    let field = a.field();
    let mut found = false;
    for_each_coeff_vector(field.p(), basis.len(), |coeffs| {
        let phi = combine(field, &basis, coeffs);
        if phi.is_mono(field) {
            found = true;
            return false;
        }
        true
    });
    Ok(found)
}

/// Isomorphism test: equal dimension vectors plus an injective morphism.
/// (An injective morphism between equal total dimensions is bijective.)
pub fn is_isomorphic(a: &Representation, b: &Representation) -> Result<bool> {
    a.check_compatible(b)?;
    if a.dims() != b.dims() {
        return Ok(false);
    }
    exists_mono(a, b)
}

/// The set of vertices whose simple embeds into `a`.
pub fn socle_simples(a: &Representation) -> Result<Vec<usize>> {
    if a.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    let mut out = Vec::new();
    for v in 0..a.quiver().vertex_count() {
        let s = Representation::simple(Arc::clone(a.quiver()), a.field(), v);
        if exists_mono(&s, a)? {
            out.push(v);
        }
    }
    Ok(out)
}

/// Whether the endomorphism algebra contains a nontrivial idempotent.
///
/// Strategy: exhaustive scan of End when `p^dim` is small enough; otherwise a
/// deterministic Fitting scan over basis elements, their pairwise
/// combinations and products, which exhibits a splitting endomorphism (one
/// that is neither nilpotent nor invertible) whenever it fires.
fn find_splitting_endo(a: &Representation) -> Result<Option<Morphism>> {
    let field = a.field();
    let basis = end_basis(a)?;
    if basis.len() == 1 {
        return Ok(None); // End = F_p, local
    }
    let size = (field.p() as u64).checked_pow(basis.len() as u32);
    if size.is_some_and(|s| s <= END_SCAN_SIZE_CAP) {
        let identity = Morphism {
            blocks: a.dims().iter().map(|&d| FpMat::identity(d)).collect(),
        };
        let mut found = None;
        for_each_coeff_vector(field.p(), basis.len(), |coeffs| {
            let e = combine(field, &basis, coeffs);
            if e.is_zero() || e == identity {
                return true;
            }
            let squared: Vec<FpMat> = e
                .blocks
                .iter()
                .map(|b| field.matmul(b, b))
                .collect();
            if squared == e.blocks {
                found = Some(e);
                return false;
            }
            true
        });
        return Ok(found);
    }
    // Fitting scan. Catches every scanned endomorphism that is neither
    // nilpotent nor invertible; its high power is then an idempotent-like
    // splitter (image and kernel are both nonzero subrepresentations).
    let n = a.total_dim();
    let mut candidates: Vec<Morphism> = basis.clone();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            for c in 1..field.p() {
                candidates.push(combine(
                    field,
                    &[basis[i].clone(), basis[j].clone()],
                    &[1, c],
                ));
            }
            candidates.push(Morphism {
                blocks: basis[i]
                    .blocks
                    .iter()
                    .zip(&basis[j].blocks)
                    .map(|(x, y)| field.matmul(x, y))
                    .collect(),
            });
        }
    }
    for phi in candidates {
        // φ^(2^k) ≥ φ^n stabilizes image and kernel.
        let mut power = phi.clone();
        let mut steps = 1;
        while steps < n {
            power = Morphism {
                blocks: power.blocks.iter().map(|b| field.matmul(b, b)).collect(),
            };
            steps *= 2;
        }
        let total_rank: usize = power.blocks.iter().map(|b| field.rank(b)).sum();
        if total_rank > 0 && total_rank < n {
            return Ok(Some(power));
        }
    }
    Ok(None)
}

/// Extracts the subrepresentation spanned by the images of an endomorphism's
/// blocks (a subrepresentation whenever the endomorphism intertwines).
fn image_subrep(a: &Representation, e: &Morphism) -> Result<Representation> {
    let field = a.field();
    let bases: Vec<FpMat> = e
        .blocks
        .iter()
        .map(|b| field.column_space_basis(b))
        .collect();
    sub_from_bases(a, &bases)
}

/// The subrepresentation spanned by per-vertex column bases. The bases must
/// span arrow-stable subspaces.
fn sub_from_bases(a: &Representation, bases: &[FpMat]) -> Result<Representation> {
    let field = a.field();
    let dims: Vec<usize> = bases.iter().map(|b| b.cols).collect();
    let maps = a
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(arrow, &(s, t))| {
            let mapped = field.matmul(&a.maps()[arrow], &bases[s]);
            // Express the image in the target basis: bases[t] · x = mapped.
            field
                .solve(&bases[t], &mapped)
                .ok_or_else(|| Error::InvalidInput("basis not arrow-stable".to_owned()))
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(Arc::clone(a.quiver()), field, dims, maps)
}

/// Kernel of an endomorphism as a subrepresentation.
fn kernel_subrep(a: &Representation, e: &Morphism) -> Result<Representation> {
    let field = a.field();
    let bases: Vec<FpMat> = e
        .blocks
        .iter()
        .map(|b| {
            let null = field.nullspace(b);
            let mut m = FpMat::zero(b.cols, null.len());
            for (k, v) in null.iter().enumerate() {
                for (i, &value) in v.iter().enumerate() {
                    m.set(i, k, value);
                }
            }
            m
        })
        .collect();
    sub_from_bases(a, &bases)
}

/// Whether a nonzero representation is indecomposable: its endomorphism
/// algebra contains no idempotent besides 0 and the identity.
pub fn is_indecomposable(a: &Representation) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    Ok(find_splitting_endo(a)?.is_none())
}

/// Krull-Remak-Schmidt decomposition into indecomposable summands.
///
/// Splits along a nontrivial idempotent (or the stabilized power of a
/// Fitting splitter) into image and kernel, and recurses. The multiset of
/// summands is unique up to isomorphism.
pub fn decompose(a: &Representation) -> Result<Vec<Representation>> {
    if a.is_zero() {
        return Ok(Vec::new());
    }
    match find_splitting_endo(a)? {
        None => Ok(vec![a.clone()]),
        Some(e) => {
            let image = image_subrep(a, &e)?;
            let kernel = kernel_subrep(a, &e)?;
            debug_assert_eq!(image.total_dim() + kernel.total_dim(), a.total_dim());
            let mut parts = decompose(&image)?;
            parts.extend(decompose(&kernel)?);
            Ok(parts)
        }
    }
}
