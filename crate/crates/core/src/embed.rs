//! The constructive coset embedding G → H^n ⋊ Σ_n, block-induced embeddings,
//! nesting, and exhaustive verification.

use crate::error::Error;
use crate::group::{identify_group, BlockSystem, CosetDecomposition, FiniteGroup, GroupElem};
use crate::perm::Perm;
use crate::wreath::{induced_block_element, WreathElem};
use crate::Result;
use serde_json::json;
use std::collections::HashSet;
use std::sync::Arc;

/// How an embedding was built; carried for reports and JSON export.
#[derive(Clone, Debug)]
pub enum Provenance {
    Cosets {
        subgroup: String,
        subgroup_order: usize,
        num_cosets: usize,
    },
    Blocks {
        degree: usize,
        num_blocks: usize,
        block_size: usize,
    },
    Nested {
        outer: String,
        inner: String,
    },
    Generators {
        description: String,
    },
}

/// A verified-or-verifiable injective homomorphism into a wreath product:
/// one image per domain element.
pub struct Embedding {
    pub domain: Arc<FiniteGroup>,
    pub base: Arc<FiniteGroup>,
    pub arity: usize,
    pub images: Vec<WreathElem>,
    pub provenance: Provenance,
}

/// Result of the exhaustive |G|² homomorphism sweep plus identifications.
#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub homomorphism: bool,
    /// First failing pair, when not a homomorphism.
    pub witness: Option<(usize, usize)>,
    pub injective: bool,
    pub image_size: usize,
    pub top_order: usize,
    pub top_name: String,
    pub bead_order: usize,
    pub bead_name: String,
}

impl EmbeddingReport {
    pub fn ok(&self) -> bool {
        self.homomorphism && self.injective
    }
}

impl Embedding {
    pub fn image(&self, elem: usize) -> &WreathElem {
        &self.images[elem]
    }

    /// Exhaustive homomorphism check over all |G|² pairs, injectivity by
    /// image-set cardinality, and identification of the top and bead groups.
    /// Failures are report entries, not errors.
    pub fn verify(&self) -> EmbeddingReport {
        let n = self.domain.order();
        let mut homomorphism = true;
        let mut witness = None;
        'outer: for g1 in 0..n {
            for g2 in 0..n {
                let lhs = &self.images[self.domain.mul(g1, g2)];
                let rhs = self.images[g1].mul(&self.images[g2]).unwrap();
                if *lhs != rhs {
                    homomorphism = false;
                    witness = Some((g1, g2));
                    break 'outer;
                }
            }
        }
        let image_set: HashSet<&WreathElem> = self.images.iter().collect();
        let injective = image_set.len() == n;

        let top_gens: Vec<GroupElem> = self
            .images
            .iter()
            .map(|w| GroupElem::Perm(w.top.clone()))
            .collect();
        let top_group =
            FiniteGroup::closure("top", &top_gens, crate::group::DEFAULT_CLOSURE_CAP).unwrap();
        let bead_group = self.bead_group();
        EmbeddingReport {
            homomorphism,
            witness,
            injective,
            image_size: image_set.len(),
            top_order: top_group.order(),
            top_name: identify_group(&top_group),
            bead_order: bead_group.order(),
            bead_name: identify_group(&bead_group),
        }
    }

    /// Subgroup of the base generated by every bead that appears.
    pub fn bead_group(&self) -> FiniteGroup {
        let mut gens: Vec<usize> = vec![self.base.identity];
        for w in &self.images {
            for &b in &w.beads {
                gens.push(b as usize);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let set = self.base.subgroup_closure(&gens);
        self.base.subgroup_group("beads", &set).unwrap()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let images: Vec<_> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let mut v = w.to_json();
                v["element"] = json!(self.domain.repr(i));
                v
            })
            .collect();
        json!({
            "domain": self.domain.name,
            "codomain": {
                "base_group": self.base.name,
                "arity": self.arity,
            },
            "provenance": format!("{:?}", self.provenance),
            "images": images,
        })
    }
}

/// The coset construction: top from the coset action, bead on target row j
/// equals h = a_j⁻¹·g·a_i (i = η⁻¹(j)) as an element of the ordered
/// subgroup's own group.
pub fn kk_embed(dec: &CosetDecomposition) -> Result<Embedding> {
    let g = &dec.group;
    let base = Arc::new(g.subgroup_group(
        &format!("{}-subgroup", g.name),
        &dec.subgroup,
    )?);
    let n = dec.num_cosets();
    let mut images = Vec::with_capacity(g.order());
    for x in 0..g.order() {
        let top = dec.coset_action(x);
        let top_inv = top.inv();
        let mut beads = vec![0u32; n];
        for j in 0..n {
            let i = top_inv.apply(j);
            let h = g.mul(g.inv(dec.reps[j]), g.mul(x, dec.reps[i]));
            let idx = base
                .index_of(g.elem(h))
                .ok_or_else(|| Error::NotASubgroup("bead escaped the subgroup".into()))?;
            beads[j] = idx as u32;
        }
        images.push(WreathElem::new(&base, beads, top)?);
    }
    Ok(Embedding {
        domain: Arc::clone(g),
        base,
        arity: n,
        images,
        provenance: Provenance::Cosets {
            subgroup: dec
                .subgroup
                .iter()
                .map(|&h| g.repr(h))
                .collect::<Vec<_>>()
                .join(","),
            subgroup_order: dec.subgroup_order(),
            num_cosets: n,
        },
    })
}

/// Embedding induced by a faithful permutation action and a preserved block
/// system: beads are within-block bijections in the symmetric group on
/// block_size points.
pub fn block_embed(
    domain: &Arc<FiniteGroup>,
    action: &[Perm],
    blocks: &BlockSystem,
) -> Result<Embedding> {
    if action.len() != domain.order() {
        return Err(Error::InvalidArgument(
            "action must assign a permutation to every element".into(),
        ));
    }
    let kernel = action.iter().filter(|p| p.is_identity()).count();
    if kernel != 1 {
        return Err(Error::UnfaithfulAction(kernel));
    }
    let sym = Arc::new(crate::group::symmetric_group(blocks.block_size()));
    let mut images = Vec::with_capacity(domain.order());
    for p in action {
        images.push(induced_block_element(p, blocks, &sym)?);
    }
    Ok(Embedding {
        domain: Arc::clone(domain),
        base: sym,
        arity: blocks.num_blocks(),
        images,
        provenance: Provenance::Blocks {
            degree: blocks.degree,
            num_blocks: blocks.num_blocks(),
            block_size: blocks.block_size(),
        },
    })
}

/// Replace each bead of `outer` by its image under `inner`, producing an
/// embedding into (C^m ⋊ Σ_m)^n ⋊ Σ_n. `inner.domain` must be the same
/// group instance as `outer.base`.
pub fn nest_embedding(outer: &Embedding, inner: &Embedding) -> Result<Embedding> {
    if !Arc::ptr_eq(&outer.base, &inner.domain) {
        return Err(Error::InvalidArgument(
            "inner domain must be the outer base group".into(),
        ));
    }
    // the image of inner is a closed subgroup of the inner wreath product
    let mut inner_imgs: Vec<GroupElem> = Vec::new();
    let mut where_is = vec![usize::MAX; inner.images.len()];
    for (i, w) in inner.images.iter().enumerate() {
        let e = GroupElem::Wreath(w.clone());
        let pos = inner_imgs.iter().position(|x| *x == e).unwrap_or_else(|| {
            inner_imgs.push(e.clone());
            inner_imgs.len() - 1
        });
        where_is[i] = pos;
    }
    let nested_base = Arc::new(FiniteGroup::from_elements(
        &format!("{}-in-wreath", inner.domain.name),
        inner_imgs,
        vec![],
    )?);
    let mut images = Vec::with_capacity(outer.images.len());
    for w in &outer.images {
        let beads: Vec<u32> = w
            .beads
            .iter()
            .map(|&b| where_is[b as usize] as u32)
            .collect();
        images.push(WreathElem::new(&nested_base, beads, w.top.clone())?);
    }
    Ok(Embedding {
        domain: Arc::clone(&outer.domain),
        base: nested_base,
        arity: outer.arity,
        images,
        provenance: Provenance::Nested {
            outer: format!("{:?}", outer.provenance),
            inner: format!("{:?}", inner.provenance),
        },
    })
}

/// An embedding given directly by all images (used by the searches).
pub fn from_images(
    domain: &Arc<FiniteGroup>,
    base: &Arc<FiniteGroup>,
    images: Vec<WreathElem>,
    description: &str,
) -> Result<Embedding> {
    let arity = images
        .first()
        .map(|w| w.arity())
        .ok_or_else(|| Error::InvalidArgument("no images".into()))?;
    Ok(Embedding {
        domain: Arc::clone(domain),
        base: Arc::clone(base),
        arity,
        images,
        provenance: Provenance::Generators {
            description: description.to_string(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{CosetDecomposition, FiniteGroup, GroupElem};
    use crate::quat::Quaternion;

    fn q8() -> Arc<FiniteGroup> {
        // element order: the published regular ordering (−1, 1, −j, j, −i, i, −k, k)
        let (one, i, j, k) = (
            Quaternion::one(),
            Quaternion::i(),
            Quaternion::j(),
            Quaternion::k(),
        );
        let elems = vec![
            GroupElem::Quat(one.neg()),
            GroupElem::Quat(one),
            GroupElem::Quat(j.neg()),
            GroupElem::Quat(j.clone()),
            GroupElem::Quat(i.neg()),
            GroupElem::Quat(i.clone()),
            GroupElem::Quat(k.neg()),
            GroupElem::Quat(k),
        ];
        Arc::new(FiniteGroup::from_elements("q8", elems, vec![5, 3]).unwrap())
    }

    #[test]
    fn kk_on_center_of_q8() {
        let g = q8();
        // H = {±1} ordered (−1, 1); cosets ordered (1, j, i, k)·H
        let dec = CosetDecomposition::new(&g, vec![0, 1], Some(vec![1, 3, 5, 7])).unwrap();
        let e = kk_embed(&dec).unwrap();
        let r = e.verify();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.image_size, 8);
        assert_eq!(r.top_name, "k4");
        assert_eq!(r.bead_name, "z2");
    }

    #[test]
    fn single_coset_gives_regular_representation() {
        let g = q8();
        let all: Vec<usize> = (0..8).collect();
        let dec = CosetDecomposition::new(&g, all, None).unwrap();
        let e = kk_embed(&dec).unwrap();
        let r = e.verify();
        assert!(r.ok());
        assert_eq!(r.top_order, 1);
        assert_eq!(r.bead_name, "q8");
    }

    #[test]
    fn corrupted_bead_is_detected_with_witness() {
        let g = q8();
        let dec = CosetDecomposition::new(&g, vec![0, 1], Some(vec![1, 3, 5, 7])).unwrap();
        let mut e = kk_embed(&dec).unwrap();
        // flip one bead on a non-identity element
        let victim = 3;
        let old = e.images[victim].beads[2];
        e.images[victim].beads[2] = 1 - old;
        let r = e.verify();
        assert!(!r.homomorphism);
        assert!(r.witness.is_some());
    }

    #[test]
    fn trivial_group_embedding() {
        let g = Arc::new(
            FiniteGroup::closure("triv", &[GroupElem::Quat(Quaternion::one())], 4).unwrap(),
        );
        let dec = CosetDecomposition::new(&g, vec![0], None).unwrap();
        let e = kk_embed(&dec).unwrap();
        assert!(e.verify().ok());
    }
}
