//! The eleven embedding items: each is constructed from its catalog data,
//! exhaustively verified, and reported with codomain identifications.

use super::searches::{icosa_twist_search, item8_search};
use super::{Checker, VerificationReport};
use crate::catalog::Catalog;
use crate::embed::{block_embed, kk_embed, Embedding};
use crate::error::Error;
use crate::group::{
    identify_group, is_normal, semidirect_witness, BlockSystem, FiniteGroup, GroupElem,
};
use crate::modmat::{mat_act_perm, VectorLabeling};
use crate::perm::Perm;
use crate::quat::{u_n, v_n, Quaternion};
use crate::wreath::induced_bead_group;
use crate::Result;

fn cat() -> &'static Catalog {
    Catalog::get()
}

/// Antipodal pairing of eight labeled points: (ℓ, ℓ+4).
fn antipodal_blocks() -> BlockSystem {
    BlockSystem::new(8, (0..4).map(|b| vec![b, b + 4]).collect()).unwrap()
}

fn check_embedding(ck: &mut Checker, what: &str, e: &Embedding) -> crate::embed::EmbeddingReport {
    let r = e.verify();
    ck.cell(
        &format!("{what}: homomorphism over all pairs"),
        r.homomorphism,
        "homomorphism",
        &format!("{:?}", r.witness),
    );
    ck.cell(
        &format!("{what}: injective"),
        r.injective,
        &e.domain.order().to_string(),
        &r.image_size.to_string(),
    );
    r
}

pub fn verify_item(k: usize) -> Result<VerificationReport> {
    match k {
        1 => Ok(item1()),
        2 => Ok(item2()),
        3 => Ok(item3()),
        4 => Ok(item4()),
        5 => Ok(item5()),
        6 => Ok(item6()),
        7 => Ok(item7()),
        8 => Ok(item8()),
        9 => Ok(item9()),
        10 => Ok(item10()),
        11 => Ok(item11()),
        other => Err(Error::InvalidArgument(format!("item {other} out of range"))),
    }
}

/// Q8 into (Z/2)^4 ⋊ K4 from the regular action with antipodal blocks.
fn item1() -> VerificationReport {
    let mut ck = Checker::new("item-1:q8-into-(z2)^4:k4");
    let g = &cat().q8;
    let action: Vec<Perm> = (0..g.order()).map(|i| g.left_regular_perm(i)).collect();
    let blocks = BlockSystem::new(8, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]]).unwrap();
    let e = block_embed(g, &action, &blocks).unwrap();
    let r = check_embedding(&mut ck, "item 1", &e);
    ck.cell("item 1: beads", r.bead_name == "z2", "z2", &r.bead_name);
    ck.cell("item 1: top", r.top_name == "k4", "k4", &r.top_name);
    // the projection sends ±j, ±i, ±k to the three double transpositions
    for (word, cycles) in [
        ("j", "(0,1)(2,3)"),
        ("i", "(0,2)(1,3)"),
        ("k", "(0,3)(1,2)"),
    ] {
        let want = Perm::parse_cycles(cycles, 4, 0).unwrap();
        for w in [word.to_string(), format!("-{word}")] {
            let idx = cat().eval_quat(g, &w).unwrap();
            ck.cell(
                &format!("item 1: top image of {w}"),
                e.image(idx).top == want,
                cycles,
                &e.image(idx).top.to_cycle_string(0),
            );
        }
    }
    ck.finish()
}

/// Q8 into (Z/4)^2 ⋊ Z/2 over the cyclically ordered subgroup.
fn item2() -> VerificationReport {
    let mut ck = Checker::new("item-2:q8-into-(z4)^2:z2");
    let dec = cat().q8_j_dec().unwrap();
    let e = kk_embed(&dec).unwrap();
    let r = check_embedding(&mut ck, "item 2", &e);
    ck.cell("item 2: beads", r.bead_name == "z4", "z4", &r.bead_name);
    ck.cell("item 2: top", r.top_name == "z2", "z2", &r.top_name);
    let g = &cat().q8;
    let (i_idx, minus_i, minus_one, one) = (
        cat().eval_quat(g, "i").unwrap(),
        cat().eval_quat(g, "-i").unwrap(),
        cat().eval_quat(g, "-1").unwrap(),
        cat().eval_quat(g, "1").unwrap(),
    );
    // quarter-twist bookkeeping: Φ(i)² = Φ(−1), Φ(i)⁴ = Φ(1), Φ(i)⁻¹ = Φ(−i)
    ck.require(
        "item 2: image of i squares to image of -1",
        e.image(i_idx).pow(2) == *e.image(minus_one),
    );
    ck.require(
        "item 2: image of i has order 4",
        e.image(i_idx).pow(4) == *e.image(one),
    );
    ck.require(
        "item 2: inverse of image of i is image of -i",
        e.image(i_idx).inv() == *e.image(minus_i),
    );
    ck.finish()
}

/// Dic_n into (Z/4)^n ⋊ Σ_n for n = 2..8, in the word model; quaternion
/// cross-check for n ≤ 6.
fn item3() -> VerificationReport {
    let mut ck = Checker::new("item-3:dic-into-(z4)^n:sigma_n");
    for n in 2..=8u32 {
        let dec = cat().dic_s_dec(n).unwrap();
        let e = kk_embed(&dec).unwrap();
        let r = check_embedding(&mut ck, &format!("item 3 (n={n})"), &e);
        ck.cell(
            &format!("item 3 (n={n}): beads"),
            r.bead_name == "z4",
            "z4",
            &r.bead_name,
        );
        ck.cell(
            &format!("item 3 (n={n}): top degree"),
            e.arity == n as usize,
            &n.to_string(),
            &e.arity.to_string(),
        );
        // presentation relations hold in the image
        let rho = e.image(cat().dic_idx(n, 1, 0));
        let x = e.image(cat().dic_idx(n, 0, 1));
        let idw = rho.identity_like();
        ck.require(
            &format!("item 3 (n={n}): rho^2n = 1 in the image"),
            rho.pow(2 * n as i64) == idw,
        );
        ck.require(
            &format!("item 3 (n={n}): x^2 = rho^n in the image"),
            x.pow(2) == rho.pow(n as i64),
        );
        ck.require(
            &format!("item 3 (n={n}): rho·x = x·rho^-1 in the image"),
            rho.mul(x).unwrap() == x.mul(&rho.pow(-1)).unwrap(),
        );
        if n == 2 {
            // Dic2 is the quaternion group
            let img_gens: Vec<GroupElem> = vec![
                GroupElem::Wreath(rho.clone()),
                GroupElem::Wreath(x.clone()),
            ];
            let img = FiniteGroup::closure("dic2-image", &img_gens, 100).unwrap();
            ck.cell(
                "item 3 (n=2): image group",
                identify_group(&img) == "q8",
                "q8",
                &identify_group(&img),
            );
        }
        if n <= 6 {
            ck.require(
                &format!("item 3 (n={n}): word model agrees with quaternions"),
                dic_quaternion_agreement(n),
            );
        }
    }
    ck.finish()
}

/// The map ρ^k·x^ε ↦ u_n(k)·j^ε is an isomorphism onto the quaternion model.
fn dic_quaternion_agreement(n: u32) -> bool {
    let g = cat().dic.get(&n).unwrap();
    let to_quat = |e: &GroupElem| -> Quaternion {
        let w = match e {
            GroupElem::Dic(w) => w,
            _ => unreachable!(),
        };
        let u = u_n(n as usize, w.k as i64).unwrap();
        if w.eps == 1 {
            u.mul(&Quaternion::j())
        } else {
            u
        }
    };
    let mut seen = std::collections::HashSet::new();
    for a in 0..g.order() {
        if !seen.insert(to_quat(g.elem(a))) {
            return false; // not injective
        }
    }
    for a in 0..g.order() {
        for b in 0..g.order() {
            let lhs = to_quat(g.elem(g.mul(a, b)));
            let rhs = to_quat(g.elem(a)).mul(&to_quat(g.elem(b)));
            if lhs != rhs {
                return false;
            }
        }
    }
    // v_n(0) = j is the image of x
    v_n(n as usize, 0).unwrap() == Quaternion::j()
}

/// SL2(Z/3) ≅ the binary tetrahedral group into (Z/2)^4 ⋊ A4 from the
/// eight-point action with antipodal blocks.
fn item4() -> VerificationReport {
    let mut ck = Checker::new("item-4:at4-into-(z2)^4:a4");
    let labels = VectorLabeling::standard(3);
    let g = &cat().sl2z3;
    let action: Vec<Perm> = (0..g.order())
        .map(|i| match g.elem(i) {
            GroupElem::Mat(m) => mat_act_perm(m, &labels).unwrap(),
            _ => unreachable!(),
        })
        .collect();
    let e = block_embed(g, &action, &antipodal_blocks()).unwrap();
    let r = check_embedding(&mut ck, "item 4", &e);
    ck.cell("item 4: beads", r.bead_name == "z2", "z2", &r.bead_name);
    ck.cell("item 4: top", r.top_name == "a4", "a4", &r.top_name);
    // kernel of the top projection is the center {±1}
    let trivial_top = (0..g.order())
        .filter(|&i| e.image(i).top.is_identity())
        .count();
    ck.cell(
        "item 4: top kernel is {±1}",
        trivial_top == 2,
        "2",
        &trivial_top.to_string(),
    );
    // the abstract groups agree
    ck.require(
        "item 4: sl2z3 is isomorphic to the binary tetrahedral group",
        crate::group::isomorphic(&cat().sl2z3, &cat().atilde4).is_some(),
    );
    ck.finish()
}

/// The binary tetrahedral group as Q8 ⋊ Z/3, plus its embedding into
/// (Q8)^3 ⋊ Z/3 over the eight-element subgroup.
fn item5() -> VerificationReport {
    let mut ck = Checker::new("item-5:at4-as-q8:z3");
    let g = &cat().atilde4;
    let q8_set: Vec<usize> = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|w| cat().eval_quat(g, w).unwrap())
        .collect();
    let a2 = cat().eval_quat(g, "a^2").unwrap();
    let k_set = g.subgroup_closure(&[a2]);
    ck.require(
        "item 5: semidirect witness (Q8 normal, complement of order 3)",
        semidirect_witness(g, &q8_set, &k_set),
    );
    ck.require("item 5: Q8 is normal", is_normal(g, &q8_set));
    ck.cell(
        "item 5: complement order",
        k_set.len() == 3,
        "3",
        &k_set.len().to_string(),
    );
    let dec = cat().at4_q8_dec().unwrap();
    let e = kk_embed(&dec).unwrap();
    let r = check_embedding(&mut ck, "item 5", &e);
    ck.cell("item 5: beads", r.bead_name == "q8", "q8", &r.bead_name);
    ck.cell("item 5: top", r.top_name == "z3", "z3", &r.top_name);
    ck.finish()
}

/// The regular action of the binary tetrahedral group with the four
/// six-element blocks: the induced bead group has order 18, and the
/// embedding lands in B^4 ⋊ A4 — four blocks, not the three of the
/// stated codomain exponent.
fn item6() -> VerificationReport {
    let mut ck = Checker::new("item-6:at4-into-[(z3xz3):z2]^k:a4");
    let g = &cat().atilde4;
    let dec = cat().at4_n_dec().unwrap();
    // blocks pair antipodal three-element cosets: labels (b, b+4) in the
    // published tuple order
    let blocks = BlockSystem::new(
        24,
        (0..4)
            .map(|b| {
                let mut blk = dec.cosets[b].clone();
                blk.extend(&dec.cosets[b + 4]);
                blk
            })
            .collect(),
    )
    .unwrap();
    let action: Vec<Perm> = (0..g.order()).map(|i| g.left_regular_perm(i)).collect();
    let bead_group = induced_bead_group(&action, &blocks, 0).unwrap();
    ck.cell(
        "item 6: induced bead group order",
        bead_group.order() == 18,
        "18",
        &bead_group.order().to_string(),
    );
    ck.cell(
        "item 6: bead group identification",
        identify_group(&bead_group) == "(z3xz3):z2",
        "(z3xz3):z2",
        &identify_group(&bead_group),
    );
    let e = block_embed(g, &action, &blocks).unwrap();
    let r = check_embedding(&mut ck, "item 6", &e);
    ck.cell("item 6: top", r.top_name == "a4", "a4", &r.top_name);
    ck.cell(
        "item 6: embedding bead group order",
        r.bead_order == 18,
        "18",
        &r.bead_order.to_string(),
    );
    // the computed exponent is 4; the stated codomain says 3
    ck.pinned_cell(
        "item 6: codomain exponent",
        "3",
        &e.arity.to_string(),
        "4",
    );
    ck.finish()
}

/// GL2(Z/3) into (Z/2)^4 ⋊ Σ4, extending item 4 element-by-element.
fn item7() -> VerificationReport {
    let mut ck = Checker::new("item-7:gl2z3-into-(z2)^4:sigma4");
    let labels = VectorLabeling::standard(3);
    let g = &cat().gl2z3;
    let action: Vec<Perm> = (0..g.order())
        .map(|i| match g.elem(i) {
            GroupElem::Mat(m) => mat_act_perm(m, &labels).unwrap(),
            _ => unreachable!(),
        })
        .collect();
    let e = block_embed(g, &action, &antipodal_blocks()).unwrap();
    let r = check_embedding(&mut ck, "item 7", &e);
    ck.cell("item 7: beads", r.bead_name == "z2", "z2", &r.bead_name);
    ck.cell("item 7: top", r.top_name == "sigma4", "sigma4", &r.top_name);
    // determinant −1 elements project to odd permutations
    let mut all_odd = true;
    for i in 0..g.order() {
        if let GroupElem::Mat(m) = g.elem(i) {
            if m.det() == 2 && e.image(i).top.is_even() {
                all_odd = false;
            }
        }
    }
    ck.require("item 7: det −1 elements have odd top image", all_odd);
    // restriction to SL2 equals the item-4 embedding element-by-element
    let labels4 = VectorLabeling::standard(3);
    let sl2 = &cat().sl2z3;
    let sl2_action: Vec<Perm> = (0..sl2.order())
        .map(|i| match sl2.elem(i) {
            GroupElem::Mat(m) => mat_act_perm(m, &labels4).unwrap(),
            _ => unreachable!(),
        })
        .collect();
    let e4 = block_embed(sl2, &sl2_action, &antipodal_blocks()).unwrap();
    let mut restriction_ok = true;
    for i in 0..sl2.order() {
        let in_gl = g.index_of(sl2.elem(i)).unwrap();
        let (a, b) = (e4.image(i), e.image(in_gl));
        if a.top != b.top || a.beads != b.beads {
            restriction_ok = false;
        }
    }
    ck.require(
        "item 7: restriction to det 1 equals item 4",
        restriction_ok,
    );
    ck.finish()
}

/// The six-coset embedding over Q8 with its three-block top, plus the
/// definitive search for a (Q8)^3 ⋊ Σ3 embedding.
fn item8() -> VerificationReport {
    let mut ck = Checker::new("item-8:st4-over-q8");
    let dec = cat().st4_q8_dec().unwrap();
    let e = kk_embed(&dec).unwrap();
    let r = check_embedding(&mut ck, "item 8 (six cosets)", &e);
    ck.cell(
        "item 8: beads",
        r.bead_name == "q8",
        "q8",
        &r.bead_name,
    );
    ck.cell(
        "item 8: top order (regular image of the quotient)",
        r.top_order == 6,
        "6",
        &r.top_order.to_string(),
    );
    // the blocks {1,4},{2,6},{3,5} of the six coset labels carry a natural
    // Σ3 action
    let blocks = BlockSystem::new(6, vec![vec![0, 3], vec![1, 5], vec![2, 4]]).unwrap();
    let tops: Vec<Perm> = e.images.iter().map(|w| w.top.clone()).collect();
    let mut preserved = true;
    let mut block_perms: Vec<GroupElem> = Vec::new();
    for t in &tops {
        match blocks.block_perm(t) {
            Ok(p) => block_perms.push(GroupElem::Perm(p)),
            Err(_) => preserved = false,
        }
    }
    ck.require("item 8: blocks preserved by the top action", preserved);
    if preserved {
        let blk_group = FiniteGroup::closure("item8-blocks", &block_perms, 100).unwrap();
        ck.cell(
            "item 8: block action",
            identify_group(&blk_group) == "sigma3",
            "sigma3",
            &identify_group(&blk_group),
        );
        let a_img = blocks
            .block_perm(&tops[cat().eval_quat(&cat().sigmatilde4, "a").unwrap()])
            .unwrap();
        let f_img = blocks
            .block_perm(&tops[cat().eval_quat(&cat().sigmatilde4, "f").unwrap()])
            .unwrap();
        ck.require("item 8: a acts as a 3-cycle on blocks", a_img.order() == 3);
        ck.require("item 8: f acts as a transposition on blocks", f_img.order() == 2);
    }
    // the compressed codomain: settled by exhaustive search
    let search = item8_search();
    for line in &search.details {
        ck.note(line.clone());
    }
    ck.require(
        "item 8: search outcome is definitive",
        search.definitive,
    );
    if search.solutions == 0 {
        ck.mark_derived();
        ck.note(
            "no injective homomorphism into (q8)^3:sigma3 exists; the stated \
             codomain is unattainable and the six-coset form above is the \
             faithful wreath realization"
                .to_string(),
        );
    }
    ck.finish()
}

/// The binary octahedral group into (Dic4)^3 ⋊ Σ3 over its sixteen-element
/// dicyclic subgroup.
fn item9() -> VerificationReport {
    let mut ck = Checker::new("item-9:st4-into-(dic4)^3:sigma3");
    let dec = cat().st4_dic4_dec().unwrap();
    let e = kk_embed(&dec).unwrap();
    let r = check_embedding(&mut ck, "item 9", &e);
    ck.cell("item 9: beads", r.bead_name == "dic4", "dic4", &r.bead_name);
    ck.cell("item 9: top", r.top_name == "sigma3", "sigma3", &r.top_name);
    ck.finish()
}

/// The sixteen-string representation: blocks of four N-cosets, beads in Σ4,
/// top Σ4.
fn item10() -> VerificationReport {
    let mut ck = Checker::new("item-10:st4-into-(sigma4)^4:sigma4");
    let g = &cat().sigmatilde4;
    let dec = cat().st4_n_dec().unwrap();
    let action: Vec<Perm> = (0..g.order()).map(|i| dec.coset_action(i)).collect();
    let gen_perms: Vec<Perm> = g.generators.iter().map(|&i| action[i].clone()).collect();
    let systems = crate::group::find_block_systems(&gen_perms, 16).unwrap();
    let quads: Vec<&BlockSystem> = systems.iter().filter(|s| s.num_blocks() == 4).collect();
    ck.cell(
        "item 10: a four-block system exists",
        !quads.is_empty(),
        ">=1",
        &quads.len().to_string(),
    );
    let a_idx = cat().eval_quat(g, "a").unwrap();
    let f_idx = cat().eval_quat(g, "f").unwrap();
    let mut chosen = None;
    for s in &quads {
        let e = block_embed(g, &action, s).unwrap();
        let r = e.verify();
        let f_cycle = e.image(f_idx).top.order() == 4;
        let a_cycle = e.image(a_idx).top.order() == 3;
        if r.ok() && r.top_name == "sigma4" && f_cycle && a_cycle {
            chosen = Some((e, r));
            break;
        }
    }
    match chosen {
        Some((e, r)) => {
            ck.note(format!(
                "selected block system {:?}",
                e_blocks_short(&e)
            ));
            ck.require("item 10: homomorphism", r.homomorphism);
            ck.require("item 10: injective", r.injective);
            ck.cell("item 10: top", r.top_name == "sigma4", "sigma4", &r.top_name);
            ck.cell(
                "item 10: beads lie in sigma4",
                r.bead_order <= 24,
                "<=24",
                &format!("{} ({})", r.bead_order, r.bead_name),
            );
            ck.require(
                "item 10: f acts as a 4-cycle on blocks",
                e.image(f_idx).top.order() == 4,
            );
            ck.require(
                "item 10: a acts as a 3-cycle on blocks",
                e.image(a_idx).top.order() == 3,
            );
        }
        None => ck.require("item 10: suitable block system found", false),
    }
    ck.finish()
}

fn e_blocks_short(e: &Embedding) -> String {
    match &e.provenance {
        crate::embed::Provenance::Blocks {
            num_blocks,
            block_size,
            ..
        } => format!("{num_blocks} blocks of {block_size}"),
        _ => "?".into(),
    }
}

/// The binary icosahedral group into (Z/2)^5 ⋊ A5 via the derived coset
/// action and the exhaustive twist search.
fn item11() -> VerificationReport {
    let mut ck = Checker::new("item-11:at5-into-(z2)^5:a5");
    let dec = cat().at5_at4_dec().unwrap();
    let g = &cat().atilde5;
    let t_idx = cat().eval_quat(g, "t").unwrap();
    let a_idx = cat().eval_quat(g, "a").unwrap();
    let t_perm = dec.coset_action(t_idx);
    let a_perm = dec.coset_action(a_idx);
    ck.cell(
        "item 11: t acts as the 5-cycle",
        t_perm == Perm::parse_cycles("(0,1,2,3,4)", 5, 0).unwrap(),
        "(0,1,2,3,4)",
        &t_perm.to_cycle_string(0),
    );
    ck.cell(
        "item 11: coset cycle of a (the printed products force 2 -> 1)",
        a_perm == Perm::parse_cycles("(1,4,2)", 5, 0).unwrap(),
        "(1,4,2)",
        &a_perm.to_cycle_string(0),
    );
    ck.note("printed cyclic decomposition of a reads (1,4,3); the product table gives (1,4,2)");
    // a³ and t⁵ act trivially on cosets and both map to −1
    ck.require(
        "item 11: a^3 and t^5 act trivially on cosets",
        dec.coset_action(g.pow(a_idx, 3)).is_identity()
            && dec.coset_action(g.pow(t_idx, 5)).is_identity(),
    );
    ck.require(
        "item 11: a^3 = t^5 = -1",
        g.pow(a_idx, 3) == cat().eval_quat(g, "-1").unwrap()
            && g.pow(t_idx, 5) == cat().eval_quat(g, "-1").unwrap(),
    );
    // (a*t)² = −1 pins the presentation before the search
    ck.require(
        "item 11: (a*t)^2 = -1",
        g.pow(g.mul(a_idx, t_idx), 2) == cat().eval_quat(g, "-1").unwrap(),
    );
    let search = icosa_twist_search();
    for line in &search.details {
        ck.note(line.clone());
    }
    // the stated codomain requires ≥ 1 half-twist pair; the exhaustive scan
    // proves there is none — this cell fails by design and the report ends
    // in discrepancy, carrying the claim and the computed value
    ck.cell(
        "item 11: half-twist pairs in (z2)^5:a5",
        search.solutions >= 1,
        ">=1 valid (v_a, v_t)",
        &format!("{} (impossible: see details)", search.solutions),
    );
    ck.require(
        "item 11: cyclic beads of order 4 fail as well (diagnostic)",
        search.z4_solutions == 0,
    );
    ck.require(
        "item 11: coset construction with binary-tetrahedral beads verified",
        search.tetra_route_verified,
    );
    ck.require(
        "item 11: binary icosahedral group isomorphic to sl2z5",
        crate::group::isomorphic(&cat().atilde5, &cat().sl2z5).is_some(),
    );
    ck.finish()
}
