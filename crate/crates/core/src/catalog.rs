//! Every group the catalog needs, built with its published orderings, plus
//! the golden tables transcribed from the source material.
//!
//! Orderings of subgroups and coset representatives are stored here as
//! literal data, never recomputed: they are conventions, and all downstream
//! tables are recorded under them.

use crate::error::Error;
use crate::expr;
use crate::group::{CosetDecomposition, DicWord, FiniteGroup, GroupElem};
use crate::modmat::{enumerate_linear_group, DetCondition, ModMatrix};
use crate::quat::{constants, Quaternion};
use crate::Result;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

// ---------------------------------------------------------------------------
// golden tables
// ---------------------------------------------------------------------------

/// Raw golden data: section name → ordered (key, value) lines. Values are
/// interpreted by the verification pass that replays each table.
pub struct GoldenStore {
    sections: HashMap<String, Vec<(String, String)>>,
}

const GOLDEN_FILES: &[(&str, &str)] = &[
    ("q8.gld", include_str!("../goldens/q8.gld")),
    ("sl2.gld", include_str!("../goldens/sl2.gld")),
    ("tetra.gld", include_str!("../goldens/tetra.gld")),
    ("at4.gld", include_str!("../goldens/at4.gld")),
    ("gl2.gld", include_str!("../goldens/gl2.gld")),
    ("st4.gld", include_str!("../goldens/st4.gld")),
    ("ico.gld", include_str!("../goldens/ico.gld")),
    ("sigma.gld", include_str!("../goldens/sigma.gld")),
];

impl GoldenStore {
    /// Load the baked-in tables, honoring the BGW_GOLDEN_DIR override for
    /// any file present there.
    pub fn load() -> GoldenStore {
        let dir = std::env::var("BGW_GOLDEN_DIR").ok();
        let mut sections = HashMap::new();
        for (fname, baked) in GOLDEN_FILES {
            let text = dir
                .as_ref()
                .and_then(|d| std::fs::read_to_string(format!("{d}/{fname}")).ok())
                .unwrap_or_else(|| baked.to_string());
            parse_golden(&text, &mut sections);
        }
        GoldenStore { sections }
    }

    pub fn section(&self, name: &str) -> Result<&[(String, String)]> {
        self.sections
            .get(name)
            .map(|v| v.as_slice())
            .ok_or_else(|| Error::UnknownName(format!("golden section {name}")))
    }
}

fn parse_golden(text: &str, out: &mut HashMap<String, Vec<(String, String)>>) {
    let mut current: Option<String> = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            current = Some(name.to_string());
            out.entry(name.to_string()).or_default();
            continue;
        }
        if let (Some(section), Some((k, v))) = (&current, line.split_once('=')) {
            out.get_mut(section)
                .unwrap()
                .push((k.trim().to_string(), v.trim().to_string()));
        }
    }
}

// ---------------------------------------------------------------------------
// the catalog
// ---------------------------------------------------------------------------

pub struct Catalog {
    /// Q8 with the regular ordering (−1, 1, −j, j, −i, i, −k, k).
    pub q8: Arc<FiniteGroup>,
    pub atilde4: Arc<FiniteGroup>,
    pub sigmatilde4: Arc<FiniteGroup>,
    pub atilde5: Arc<FiniteGroup>,
    pub sl2z3: Arc<FiniteGroup>,
    pub gl2z3: Arc<FiniteGroup>,
    pub sl2z5: Arc<FiniteGroup>,
    /// Dicyclic groups in the word model, n = 2..8.
    pub dic: BTreeMap<u32, Arc<FiniteGroup>>,
    /// Named quaternion constants for word evaluation.
    pub quat_names: HashMap<String, GroupElem>,
    pub goldens: GoldenStore,
}

static CATALOG: OnceLock<Catalog> = OnceLock::new();

impl Catalog {
    pub fn get() -> &'static Catalog {
        CATALOG.get_or_init(|| Catalog::build().expect("catalog construction"))
    }

    fn build() -> Result<Catalog> {
        let quat_names = quat_name_map();

        let q8 = Arc::new(q8_regular_order()?);
        let atilde4 = Arc::new(FiniteGroup::closure(
            "binary-tetrahedral",
            &[
                GroupElem::Quat(constants::a()),
                GroupElem::Quat(constants::b()),
            ],
            100,
        )?);
        let sigmatilde4 = Arc::new(FiniteGroup::closure(
            "binary-octahedral",
            &[
                GroupElem::Quat(constants::a()),
                GroupElem::Quat(constants::f()),
            ],
            200,
        )?);
        let atilde5 = Arc::new(FiniteGroup::closure(
            "binary-icosahedral",
            &[
                GroupElem::Quat(constants::a()),
                GroupElem::Quat(constants::t()),
            ],
            500,
        )?);
        let sl2z3 = Arc::new(enumerate_linear_group(3, DetCondition::DetOne)?);
        let gl2z3 = Arc::new(enumerate_linear_group(3, DetCondition::NonZero)?);
        let sl2z5 = Arc::new(enumerate_linear_group(5, DetCondition::DetOne)?);
        let mut dic = BTreeMap::new();
        for n in 2..=8u32 {
            dic.insert(n, Arc::new(crate::group::dicyclic_group(n)));
        }
        Ok(Catalog {
            q8,
            atilde4,
            sigmatilde4,
            atilde5,
            sl2z3,
            gl2z3,
            sl2z5,
            dic,
            quat_names,
            goldens: GoldenStore::load(),
        })
    }

    /// Evaluate a word in a quaternion group, returning the element index.
    pub fn eval_quat(&self, group: &FiniteGroup, word: &str) -> Result<usize> {
        expr::eval_in_group(word, group, &self.quat_names)
    }

    pub fn quat_of_word(&self, word: &str) -> Result<Quaternion> {
        match expr::eval(word, &self.quat_names)? {
            GroupElem::Quat(q) => Ok(q),
            _ => Err(Error::InvalidArgument("not a quaternion word".into())),
        }
    }

    /// A golden tuple entry: a word over the named constants, or an exact
    /// quaternion literal (recognized by a radical token or a quarter
    /// coefficient).
    pub fn quat_of_entry(&self, entry: &str) -> Result<Quaternion> {
        if entry.contains("r2") || entry.contains("(1/4)") {
            Quaternion::parse(entry)
        } else {
            self.quat_of_word(entry)
        }
    }

    // -- ordered decompositions ------------------------------------------

    fn dec(
        &self,
        group: &Arc<FiniteGroup>,
        sub_words: &[&str],
        rep_words: &[&str],
    ) -> Result<CosetDecomposition> {
        let sub = sub_words
            .iter()
            .map(|w| self.eval_quat(group, w))
            .collect::<Result<Vec<_>>>()?;
        let reps = rep_words
            .iter()
            .map(|w| self.eval_quat(group, w))
            .collect::<Result<Vec<_>>>()?;
        CosetDecomposition::new(group, sub, Some(reps))
    }

    /// Q8 over the center (−1, 1), cosets ordered (1, j, i, k)·H.
    pub fn q8_center_dec(&self) -> Result<CosetDecomposition> {
        self.dec(&self.q8, &["-1", "1"], &["1", "j", "i", "k"])
    }

    /// Q8 over the cyclically ordered (−1, −j, 1, j), cosets (1, i).
    pub fn q8_j_dec(&self) -> Result<CosetDecomposition> {
        self.dec(&self.q8, &["-1", "-j", "1", "j"], &["1", "i"])
    }

    /// Binary tetrahedral over S = (−1, −j, 1, j) with the six cosets
    /// (S, aS, bS, iS, aiS, biS).
    pub fn at4_s_dec(&self) -> Result<CosetDecomposition> {
        self.dec(
            &self.atilde4,
            &["-1", "-j", "1", "j"],
            &["1", "a", "b", "i", "a*i", "b*i"],
        )
    }

    /// Names for the six S-cosets, aligned with `at4_s_dec`.
    pub fn at4_s_coset_names(&self) -> Vec<&'static str> {
        vec!["S", "aS", "bS", "iS", "aiS", "biS"]
    }

    /// Binary tetrahedral over N = (1, a², a⁴) with the labeled cosets 0..7.
    pub fn at4_n_dec(&self) -> Result<CosetDecomposition> {
        self.dec(
            &self.atilde4,
            &["1", "a^2", "a^4"],
            &["1", "i", "j*a", "k", "a", "i*a", "j", "k*a"],
        )
    }

    /// Binary tetrahedral over Q8 ordered S∪iS, three cosets (1, a, b).
    pub fn at4_q8_dec(&self) -> Result<CosetDecomposition> {
        self.dec(
            &self.atilde4,
            &["-1", "-j", "1", "j", "-i", "-k", "i", "k"],
            &["1", "a", "b"],
        )
    }

    /// Binary octahedral over S: the twelve cosets
    /// (S, aS, bS, iS, aiS, biS, fS, faS, fbS, fiS, faiS, fbiS).
    pub fn st4_s_dec(&self) -> Result<CosetDecomposition> {
        self.dec(
            &self.sigmatilde4,
            &["-1", "-j", "1", "j"],
            &[
                "1", "a", "b", "i", "a*i", "b*i", "f", "f*a", "f*b", "f*i", "f*a*i", "f*b*i",
            ],
        )
    }

    /// Names for the twelve S-cosets, aligned with `st4_s_dec`.
    pub fn st4_s_coset_names(&self) -> Vec<&'static str> {
        vec![
            "S", "aS", "bS", "iS", "aiS", "biS", "fS", "faS", "fbS", "fiS", "faiS", "fbiS",
        ]
    }

    /// Binary octahedral over Q8 = S∪iS: six cosets
    /// (Q8, aQ8, bQ8, fQ8, faQ8, fbQ8).
    pub fn st4_q8_dec(&self) -> Result<CosetDecomposition> {
        self.dec(
            &self.sigmatilde4,
            &["-1", "-j", "1", "j", "-i", "-k", "i", "k"],
            &["1", "a", "b", "f", "f*a", "f*b"],
        )
    }

    /// Binary octahedral over the sixteen-element dicyclic subgroup
    /// ⟨f, j⟩ ordered (P, jP), three cosets (1, a, b).
    pub fn st4_dic4_dec(&self) -> Result<CosetDecomposition> {
        let mut sub: Vec<&str> = Vec::new();
        const P: [&str; 8] = ["1", "f", "f^2", "f^3", "f^4", "f^5", "f^6", "f^7"];
        const JP: [&str; 8] = [
            "j", "j*f", "j*f^2", "j*f^3", "j*f^4", "j*f^5", "j*f^6", "j*f^7",
        ];
        sub.extend(P);
        sub.extend(JP);
        self.dec(&self.sigmatilde4, &sub, &["1", "a", "b"])
    }

    /// Binary octahedral over P = (f⁰..f⁷) with the octahedrally arranged
    /// cosets (P, aP, bP, cP, dP, jP).
    pub fn st4_p_dec(&self) -> Result<CosetDecomposition> {
        self.dec(
            &self.sigmatilde4,
            &["1", "f", "f^2", "f^3", "f^4", "f^5", "f^6", "f^7"],
            &["1", "a", "b", "c", "d", "j"],
        )
    }

    /// Names for the six P-cosets, aligned with `st4_p_dec`.
    pub fn st4_p_coset_names(&self) -> Vec<&'static str> {
        vec!["P", "aP", "bP", "cP", "dP", "jP"]
    }

    /// Binary octahedral over N = (1, a², a⁴): sixteen cosets with a greedy
    /// transversal (the grouping into blocks is derived, not transcribed).
    pub fn st4_n_dec(&self) -> Result<CosetDecomposition> {
        let sub = ["1", "a^2", "a^4"]
            .iter()
            .map(|w| self.eval_quat(&self.sigmatilde4, w))
            .collect::<Result<Vec<_>>>()?;
        CosetDecomposition::new(&self.sigmatilde4, sub, None)
    }

    /// Binary icosahedral over the binary tetrahedral subgroup, cosets
    /// labeled by powers of t.
    pub fn at5_at4_dec(&self) -> Result<CosetDecomposition> {
        let a = self.eval_quat(&self.atilde5, "a")?;
        let b = self.eval_quat(&self.atilde5, "b")?;
        let sub = self.atilde5.subgroup_closure(&[a, b]);
        let reps = ["1", "t", "t^2", "t^3", "t^4"]
            .iter()
            .map(|w| self.eval_quat(&self.atilde5, w))
            .collect::<Result<Vec<_>>>()?;
        CosetDecomposition::new(&self.atilde5, sub, Some(reps))
    }

    /// Index of ρ^k·x^ε in the catalog's Dic_n.
    pub fn dic_idx(&self, n: u32, k: i64, eps: u8) -> usize {
        self.dic[&n]
            .index_of(&GroupElem::Dic(DicWord::new(n, k, eps)))
            .unwrap()
    }

    /// Dic_n over S = (ρⁿ, ρⁿx, 1, x) with cosets [ℓ] = ρ^ℓ·S.
    pub fn dic_s_dec(&self, n: u32) -> Result<CosetDecomposition> {
        let g = self
            .dic
            .get(&n)
            .ok_or_else(|| Error::UnknownName(format!("dic{n}")))?;
        let idx = |w: DicWord| g.index_of(&GroupElem::Dic(w)).unwrap();
        let sub = vec![
            idx(DicWord::minus_one(n)),
            idx(DicWord::new(n, n as i64, 1)),
            idx(DicWord::identity(n)),
            idx(DicWord::x(n)),
        ];
        let reps = (0..n as i64).map(|l| idx(DicWord::new(n, l, 0))).collect();
        CosetDecomposition::new(g, sub, Some(reps))
    }

    // -- lookup by CLI name ------------------------------------------------

    pub fn group_names(&self) -> Vec<String> {
        let mut names = vec![
            "q8".to_string(),
            "binary-tetrahedral".to_string(),
            "binary-octahedral".to_string(),
            "binary-icosahedral".to_string(),
            "sl2z3".to_string(),
            "gl2z3".to_string(),
            "sl2z5".to_string(),
        ];
        for n in self.dic.keys() {
            names.push(format!("dic{n}"));
        }
        names
    }

    pub fn group_by_name(&self, name: &str) -> Result<Arc<FiniteGroup>> {
        let g = match name {
            "q8" => &self.q8,
            "binary-tetrahedral" | "atilde4" => &self.atilde4,
            "binary-octahedral" | "sigmatilde4" => &self.sigmatilde4,
            "binary-icosahedral" | "atilde5" => &self.atilde5,
            "sl2z3" => &self.sl2z3,
            "gl2z3" => &self.gl2z3,
            "sl2z5" => &self.sl2z5,
            other => {
                if let Some(n) = other.strip_prefix("dic") {
                    let n: u32 = n
                        .parse()
                        .map_err(|_| Error::UnknownName(other.to_string()))?;
                    return self
                        .dic
                        .get(&n)
                        .cloned()
                        .ok_or_else(|| Error::UnknownName(other.to_string()));
                }
                return Err(Error::UnknownName(other.to_string()));
            }
        };
        Ok(Arc::clone(g))
    }

    /// Generator names available to `eval` for a given group.
    pub fn names_for_group(&self, name: &str) -> Result<HashMap<String, GroupElem>> {
        let g = self.group_by_name(name)?;
        match name {
            n if n.starts_with("dic") => {
                let nn: u32 = n[3..].parse().unwrap();
                let mut m = HashMap::new();
                m.insert("1".into(), GroupElem::Dic(DicWord::identity(nn)));
                m.insert("-1".into(), GroupElem::Dic(DicWord::minus_one(nn)));
                m.insert("r".into(), GroupElem::Dic(DicWord::rho(nn)));
                m.insert("x".into(), GroupElem::Dic(DicWord::x(nn)));
                Ok(m)
            }
            "sl2z3" | "gl2z3" | "sl2z5" => {
                let p = if name == "sl2z5" { 5 } else { 3 };
                let mut m = HashMap::new();
                m.insert("1".into(), GroupElem::Mat(ModMatrix::identity(p)));
                m.insert("-1".into(), GroupElem::Mat(ModMatrix::identity(p).neg()));
                m.insert("g1".into(), GroupElem::Mat(ModMatrix::new(p, 1, 0, -1, 1)));
                m.insert("g2".into(), GroupElem::Mat(ModMatrix::new(p, 1, 1, 0, 1)));
                if p == 3 {
                    m.insert("g3".into(), GroupElem::Mat(ModMatrix::new(p, -1, 1, -1, 0)));
                    m.insert("g4".into(), GroupElem::Mat(ModMatrix::new(p, 0, 1, -1, -1)));
                }
                if name == "gl2z3" {
                    m.insert("d1".into(), GroupElem::Mat(ModMatrix::new(p, -1, 0, 0, 1)));
                }
                Ok(m)
            }
            _ => {
                // quaternion groups: restrict the constant map to members
                let mut m = HashMap::new();
                for (k, v) in &self.quat_names {
                    if g.index_of(v).is_some() {
                        m.insert(k.clone(), v.clone());
                    }
                }
                Ok(m)
            }
        }
    }
}

fn quat_name_map() -> HashMap<String, GroupElem> {
    let mut m = HashMap::new();
    let mut put = |k: &str, q: Quaternion| {
        m.insert(k.to_string(), GroupElem::Quat(q));
    };
    put("1", Quaternion::one());
    put("-1", Quaternion::one().neg());
    put("i", Quaternion::i());
    put("-i", Quaternion::i().neg());
    put("j", Quaternion::j());
    put("-j", Quaternion::j().neg());
    put("k", Quaternion::k());
    put("-k", Quaternion::k().neg());
    put("a", constants::a());
    put("b", constants::b());
    put("c", constants::c());
    put("d", constants::d());
    put("f", constants::f());
    put("t", constants::t());
    m
}

/// Q8 with elements in the regular ordering used throughout:
/// (−1, 1, −j, j, −i, i, −k, k).
fn q8_regular_order() -> Result<FiniteGroup> {
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
        GroupElem::Quat(j),
        GroupElem::Quat(i.neg()),
        GroupElem::Quat(i),
        GroupElem::Quat(k.neg()),
        GroupElem::Quat(k),
    ];
    FiniteGroup::from_elements("q8", elems, vec![5, 3])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_group_orders() {
        let cat = Catalog::get();
        assert_eq!(cat.q8.order(), 8);
        assert_eq!(cat.atilde4.order(), 24);
        assert_eq!(cat.sigmatilde4.order(), 48);
        assert_eq!(cat.atilde5.order(), 120);
        assert_eq!(cat.sl2z3.order(), 24);
        assert_eq!(cat.gl2z3.order(), 48);
        assert_eq!(cat.sl2z5.order(), 120);
        for (n, g) in &cat.dic {
            assert_eq!(g.order(), 4 * *n as usize);
        }
    }

    #[test]
    fn decompositions_build() {
        let cat = Catalog::get();
        assert_eq!(cat.q8_center_dec().unwrap().num_cosets(), 4);
        assert_eq!(cat.q8_j_dec().unwrap().num_cosets(), 2);
        assert_eq!(cat.at4_s_dec().unwrap().num_cosets(), 6);
        assert_eq!(cat.at4_n_dec().unwrap().num_cosets(), 8);
        assert_eq!(cat.at4_q8_dec().unwrap().num_cosets(), 3);
        assert_eq!(cat.st4_s_dec().unwrap().num_cosets(), 12);
        assert_eq!(cat.st4_q8_dec().unwrap().num_cosets(), 6);
        assert_eq!(cat.st4_dic4_dec().unwrap().num_cosets(), 3);
        assert_eq!(cat.st4_p_dec().unwrap().num_cosets(), 6);
        assert_eq!(cat.st4_n_dec().unwrap().num_cosets(), 16);
        assert_eq!(cat.at5_at4_dec().unwrap().num_cosets(), 5);
        for n in 2..=8 {
            assert_eq!(cat.dic_s_dec(n).unwrap().num_cosets(), n as usize);
        }
    }

    #[test]
    fn golden_sections_present() {
        let g = GoldenStore::load();
        for s in [
            "q8.center_action",
            "q8.j_action",
            "sl2.generators",
            "sl2.psl_quotient",
            "tetra.pm",
            "tetra.single",
            "at4.n_cosets",
            "at4.coset_cycles",
            "at4.pprime",
            "at4.s_cosets",
            "at4.a_on_cosets",
            "at4.b_on_cosets",
            "at4.a_brackets",
            "at4.b_brackets",
            "gl2.det_minus_one",
            "st4.f_cosets",
            "st4.ab_brackets",
            "st4.f_brackets",
            "st4.p_cosets",
            "st4.p_brackets",
            "ico.a_products",
            "ico.t_power_values",
            "ico.t_power_identities",
            "h2.table",
            "sigma3.images",
            "sigma3.cosets",
            "sigma4.cosets",
        ] {
            assert!(!g.section(s).unwrap().is_empty(), "missing section {s}");
        }
        assert_eq!(g.section("gl2.det_minus_one").unwrap().len(), 24);
        assert_eq!(g.section("sl2.psl_quotient").unwrap().len(), 12);
    }
}
