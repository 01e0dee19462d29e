//! The exhaustive, deterministic searches: the nonexistence of an
//! eight-string extension for the binary octahedral group, the compressed
//! three-strand codomain question, and the icosahedral twist derivation.

use super::{Checker, VerificationReport};
use crate::catalog::Catalog;
use crate::embed::block_embed;
use crate::group::{isomorphic, BlockSystem, FiniteGroup, GroupElem};
use crate::perm::Perm;
use crate::wreath::WreathElem;
use std::sync::Arc;

fn cat() -> &'static Catalog {
    Catalog::get()
}

/// The eight-string extension search: enumerate all 384 candidates
/// F = ((x,y,z,w); σ) in (Z/2)^4 ⋊ Σ4 such that F² equals the image of i
/// and (φ(a)·F)² equals the image of −1, and certify the set is empty.
pub fn no_extension_search() -> VerificationReport {
    let mut ck = Checker::new("search:no-eight-string-extension");
    let g = &cat().atilde4;
    let dec = cat().at4_n_dec().unwrap();
    let action: Vec<Perm> = (0..g.order()).map(|i| dec.coset_action(i)).collect();
    let blocks = BlockSystem::new(8, (0..4).map(|b| vec![b, b + 4]).collect()).unwrap();
    let phi = block_embed(g, &action, &blocks).unwrap();
    ck.require("phi is a verified embedding", phi.verify().ok());

    let idx = |w: &str| cat().eval_quat(g, w).unwrap();
    let swap = phi
        .base
        .index_of(&GroupElem::Perm(Perm::parse_cycles("(0,1)", 2, 0).unwrap()))
        .unwrap() as u32;
    let ident = phi.base.identity as u32;
    let wre = |bits: [u32; 4], cyc: &str| {
        WreathElem::new(
            &phi.base,
            bits.iter().map(|&b| if b == 1 { swap } else { ident }).collect(),
            Perm::parse_cycles(cyc, 4, 0).unwrap(),
        )
        .unwrap()
    };
    // the anchor values of the embedding
    let phi_a = phi.image(idx("a")).clone();
    let phi_b = phi.image(idx("b")).clone();
    let phi_i = phi.image(idx("i")).clone();
    let phi_m1 = phi.image(idx("-1")).clone();
    ck.require("phi(a) = ((1,1,0,0); (1,2,3))", phi_a == wre([1, 1, 0, 0], "(1,2,3)"));
    ck.require("phi(b) = ((1,1,1,1); (0,1,2))", phi_b == wre([1, 1, 1, 1], "(0,1,2)"));
    ck.require(
        "phi(i) = ((1,0,0,1); (0,1)(2,3))",
        phi_i == wre([1, 0, 0, 1], "(0,1)(2,3)"),
    );
    ck.require("phi(-1) = ((1,1,1,1); ())", phi_m1 == wre([1, 1, 1, 1], "()"));

    // enumerate all 384 candidates
    let sym4 = crate::group::symmetric_group(4);
    let mut square_root_of_i: Vec<WreathElem> = Vec::new();
    let mut both_conditions = 0usize;
    let mut square_root_of_one = 0usize;
    let identity_w = phi_i.identity_like();
    for bead_mask in 0..16u32 {
        for s in 0..sym4.order() {
            let top = sym4.elem(s).as_perm().unwrap().clone();
            let beads: Vec<u32> = (0..4)
                .map(|b| if bead_mask >> b & 1 == 1 { swap } else { ident })
                .collect();
            let f = WreathElem::new(&phi.base, beads, top).unwrap();
            let f2 = f.mul(&f).unwrap();
            if f2 == identity_w {
                square_root_of_one += 1;
            }
            if f2 == phi_i {
                square_root_of_i.push(f.clone());
                let af = phi_a.mul(&f).unwrap();
                if af.mul(&af).unwrap() == phi_m1 {
                    both_conditions += 1;
                }
            }
        }
    }
    ck.note(format!(
        "384 candidates enumerated; {} satisfy F² = phi(i)",
        square_root_of_i.len()
    ));
    // the intermediate fact: the top of every square root of phi(i) is one
    // of the two four-cycles
    let allowed: std::collections::HashSet<Perm> = [
        Perm::parse_cycles("(0,2,1,3)", 4, 0).unwrap(),
        Perm::parse_cycles("(0,3,1,2)", 4, 0).unwrap(),
    ]
    .into_iter()
    .collect();
    let tops: std::collections::HashSet<Perm> =
        square_root_of_i.iter().map(|f| f.top.clone()).collect();
    ck.cell(
        "tops of square roots of phi(i) are the two four-cycles",
        tops == allowed,
        "(0,2,1,3) and (0,3,1,2)",
        &format!("{tops:?}"),
    );
    ck.cell(
        "no candidate satisfies both conditions",
        both_conditions == 0,
        "0",
        &both_conditions.to_string(),
    );
    // control: the searcher does find square roots of the identity
    ck.cell(
        "control: F² = identity has solutions",
        square_root_of_one > 0,
        ">0",
        &square_root_of_one.to_string(),
    );
    // corroboration at the abstract level
    ck.require(
        "gl2z3 is not isomorphic to the binary octahedral group",
        isomorphic(&cat().gl2z3, &cat().sigmatilde4).is_none(),
    );
    ck.finish()
}

/// Outcome of the compressed-codomain generator search.
pub struct Item8Search {
    pub solutions: usize,
    pub definitive: bool,
    pub details: Vec<String>,
}

/// Exhaustive generator-image search for an injective homomorphism of the
/// binary octahedral group into (Q8)^3 ⋊ Σ3: images of a must have order 6,
/// images of f order 8; a valid pair must satisfy a³ = f⁴ = (af)² and
/// generate a subgroup of order 48.
pub fn item8_search() -> Item8Search {
    let base = &cat().q8;
    let sym3 = crate::group::symmetric_group(3);
    let tops: Vec<Perm> = (0..sym3.order())
        .map(|i| sym3.elem(i).as_perm().unwrap().clone())
        .collect();
    let mut elems: Vec<WreathElem> = Vec::new();
    for b0 in 0..8u32 {
        for b1 in 0..8u32 {
            for b2 in 0..8u32 {
                for t in &tops {
                    elems.push(
                        WreathElem::new(base, vec![b0, b1, b2], t.clone()).unwrap(),
                    );
                }
            }
        }
    }
    let mut order6 = Vec::new();
    let mut order8 = Vec::new();
    for w in &elems {
        match w.order() {
            6 => order6.push(w.clone()),
            8 => order8.push(w.clone()),
            _ => {}
        }
    }
    let mut details = vec![format!(
        "(q8)^3:sigma3 has {} elements; {} of order 6 (candidate images of a), {} of order 8 (candidate images of f)",
        elems.len(),
        order6.len(),
        order8.len()
    )];
    let mut solutions = 0usize;
    for alpha in &order6 {
        let a3 = alpha.pow(3);
        for phi in &order8 {
            let f4 = phi.pow(4);
            if a3 != f4 {
                continue;
            }
            let af = alpha.mul(phi).unwrap();
            if af.mul(&af).unwrap() != a3 {
                continue;
            }
            // relations hold; the subgroup order decides
            if generated_order_capped(&[alpha.clone(), phi.clone()], 49) == 48 {
                solutions += 1;
            }
        }
    }
    details.push(format!(
        "exhausted {} ordered (a, f) candidate pairs: {} satisfy the presentation with a subgroup of order 48",
        order6.len() * order8.len(),
        solutions
    ));
    Item8Search {
        solutions,
        definitive: true,
        details,
    }
}

/// Size of ⟨gens⟩, reported exactly when below the cap, else the cap.
fn generated_order_capped(gens: &[WreathElem], cap: usize) -> usize {
    let mut seen = std::collections::HashSet::new();
    let id = gens[0].identity_like();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(w) = frontier.pop() {
        for g in gens {
            let n = w.mul(g).unwrap();
            if seen.insert(n.clone()) {
                if seen.len() >= cap {
                    return cap;
                }
                frontier.push(n);
            }
        }
    }
    seen.len()
}

/// Outcome of the icosahedral twist search.
pub struct TwistSearch {
    /// Half-twist pairs satisfying the relations with subgroup order 120.
    pub solutions: usize,
    /// Quarter-twist pairs (the diagnostic scan; also empty).
    pub z4_solutions: usize,
    /// The constructive route that does exist: beads in the binary
    /// tetrahedral subgroup itself.
    pub tetra_route_verified: bool,
    pub details: Vec<String>,
}

/// Brute-force all 1024 twist-vector pairs (v_a, v_t) in (Z/2)^5 × (Z/2)^5
/// with tops the derived 3-cycle of a and the 5-cycle of t, requiring
/// (ατ)² = α³ = τ⁵ ≠ 1 and a generated subgroup of order 120.
///
/// The scan is exhaustive and finds nothing, and it cannot: any candidate
/// has top(ατ) a double transposition fixing one strand, where the square's
/// bead is 2w = 0, while τ⁵ carries a constant bead vector — so the common
/// central value would be the identity. The search reports that analysis,
/// shows the obstruction also kills quarter-twist beads, and certifies the
/// construction that does exist: the coset embedding with beads in the
/// binary tetrahedral subgroup.
pub fn icosa_twist_search() -> TwistSearch {
    let dec = cat().at5_at4_dec().unwrap();
    let g = &cat().atilde5;
    let a_perm = dec.coset_action(cat().eval_quat(g, "a").unwrap());
    let t_perm = dec.coset_action(cat().eval_quat(g, "t").unwrap());
    let mut details = Vec::new();

    // the half-twist scan, exactly as stated
    let base2 = Arc::new(crate::group::cyclic_group(2));
    let solutions = twist_scan(&base2, 2, &a_perm, &t_perm, &mut Vec::new());
    details.push(format!(
        "1024 half-twist pairs scanned; {solutions} satisfy the relations with subgroup order 120"
    ));
    details.push(
        "structural reason: top(alpha*tau) is a double transposition fixing a strand, where \
         any square has an even bead, while tau^5 has constant beads; the relations force \
         the central involution to the identity, so no half-twist pair can exist"
            .to_string(),
    );

    // quarter twists do not repair it: the parity obstruction persists for
    // every cyclic bead group (the slot fixed by top(ατ) forces the common
    // central value into 2·Z/m while the remaining bead equations force an
    // odd combination)
    let base4 = Arc::new(crate::group::cyclic_group(4));
    let z4_solutions = twist_scan(&base4, 4, &a_perm, &t_perm, &mut Vec::new());
    details.push(format!(
        "diagnostic: {z4_solutions} of 1048576 quarter-twist pairs satisfy the relations with \
         subgroup order 120 — cyclic beads of any order fail; the beads need the nonabelian \
         symmetries of the twenty-four-cell"
    ));

    // the construction that does exist: beads in the binary tetrahedral
    // subgroup
    let e = crate::embed::kk_embed(&dec).unwrap();
    let r = e.verify();
    let tetra_route_verified =
        r.ok() && r.top_name == "a5" && r.top_order == 60 && r.bead_order == 24;
    details.push(format!(
        "coset construction verified: arity 5, top {} (order {}), bead group of order {} \
         (the binary tetrahedral subgroup)",
        r.top_name, r.top_order, r.bead_order
    ));

    TwistSearch {
        solutions,
        z4_solutions,
        tetra_route_verified,
        details,
    }
}

/// Scan all bead-vector pairs over Z/m (m = 2 or 4) for the relation system
/// (ατ)² = α³ = τ⁵ ≠ 1 with ⟨α, τ⟩ of order 120; returns the count and
/// pushes the first solutions found.
fn twist_scan(
    base: &Arc<FiniteGroup>,
    m: u32,
    a_perm: &Perm,
    t_perm: &Perm,
    keep: &mut Vec<(WreathElem, WreathElem)>,
) -> usize {
    let total = m.pow(5);
    let make = |mask: u32, top: &Perm| {
        let beads: Vec<u32> = (0..5).map(|b| (mask / m.pow(b)) % m).collect();
        WreathElem::new(base, beads, top.clone()).unwrap()
    };
    let mut count = 0usize;
    for va in 0..total {
        let alpha = make(va, a_perm);
        let a3 = alpha.pow(3);
        if a3.is_identity() {
            continue;
        }
        // τ⁵ always carries a constant bead vector, so a non-constant α³
        // can never satisfy α³ = τ⁵
        let c = a3.beads[0];
        if a3.beads.iter().any(|&b| b != c) {
            continue;
        }
        for vt in 0..total {
            let tau = make(vt, t_perm);
            if tau.pow(5) != a3 {
                continue;
            }
            let at = alpha.mul(&tau).unwrap();
            if at.mul(&at).unwrap() != a3 {
                continue;
            }
            if generated_order_capped(&[alpha.clone(), tau.clone()], 121) == 120 {
                count += 1;
                if keep.len() < 4 {
                    keep.push((alpha.clone(), tau.clone()));
                }
            }
        }
    }
    count
}
