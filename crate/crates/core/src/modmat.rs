//! 2×2 matrices over Z/p (p = 3 or 5), their action on the labeled nonzero
//! vectors of (Z/p)², and the SL/GL enumerations.

use crate::error::Error;
use crate::group::{FiniteGroup, GroupElem};
use crate::perm::Perm;
use crate::Result;
use std::fmt;

/// Matrix [[a, b], [c, d]] with entries mod p.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    pub p: u8,
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
}

impl ModMatrix {
    pub fn new(p: u8, a: i64, b: i64, c: i64, d: i64) -> Self {
        let m = p as i64;
        ModMatrix {
            p,
            a: a.rem_euclid(m) as u8,
            b: b.rem_euclid(m) as u8,
            c: c.rem_euclid(m) as u8,
            d: d.rem_euclid(m) as u8,
        }
    }

    pub fn identity(p: u8) -> Self {
        ModMatrix::new(p, 1, 0, 0, 1)
    }

    pub fn det(&self) -> u8 {
        let p = self.p as i64;
        ((self.a as i64 * self.d as i64 - self.b as i64 * self.c as i64).rem_euclid(p)) as u8
    }

    pub fn mul(&self, o: &ModMatrix) -> ModMatrix {
        assert_eq!(self.p, o.p);
        let (a, b, c, d) = (self.a as i64, self.b as i64, self.c as i64, self.d as i64);
        let (e, f, g, h) = (o.a as i64, o.b as i64, o.c as i64, o.d as i64);
        ModMatrix::new(self.p, a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }

    pub fn inv(&self) -> Result<ModMatrix> {
        let det = self.det();
        if det == 0 {
            return Err(Error::SingularMatrix(self.p));
        }
        let p = self.p as i64;
        let det_inv = (1..p).find(|x| (x * det as i64).rem_euclid(p) == 1).unwrap();
        Ok(ModMatrix::new(
            self.p,
            det_inv * self.d as i64,
            -det_inv * self.b as i64,
            -det_inv * self.c as i64,
            det_inv * self.a as i64,
        ))
    }

    pub fn neg(&self) -> ModMatrix {
        ModMatrix::new(
            self.p,
            -(self.a as i64),
            -(self.b as i64),
            -(self.c as i64),
            -(self.d as i64),
        )
    }

    pub fn apply(&self, v: (u8, u8)) -> (u8, u8) {
        let p = self.p as i64;
        let (x, y) = (v.0 as i64, v.1 as i64);
        (
            ((self.a as i64 * x + self.b as i64 * y).rem_euclid(p)) as u8,
            ((self.c as i64 * x + self.d as i64 * y).rem_euclid(p)) as u8,
        )
    }

    pub fn transpose(&self) -> ModMatrix {
        ModMatrix {
            p: self.p,
            a: self.a,
            b: self.c,
            c: self.b,
            d: self.d,
        }
    }

    fn balanced(&self, v: u8) -> i64 {
        // residues printed in {−1, 0, 1} for p = 3, {−2..2} for p = 5
        let half = self.p / 2;
        if v > half {
            v as i64 - self.p as i64
        } else {
            v as i64
        }
    }
}

impl fmt::Display for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]] mod {}",
            self.balanced(self.a),
            self.balanced(self.b),
            self.balanced(self.c),
            self.balanced(self.d),
            self.p
        )
    }
}

impl fmt::Debug for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ModMatrix {
    /// Parse "[[a,b],[c,d]]" with optional " mod p"; entries may be balanced.
    pub fn parse(s: &str, p: u8) -> Result<ModMatrix> {
        let body: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>();
        let body = body.split("mod").next().unwrap_or("").to_string();
        let inner = body
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("bad matrix {s:?}")))?;
        let halves: Vec<&str> = inner.split("],[").collect();
        if halves.len() != 2 {
            return Err(Error::Parse(format!("bad matrix {s:?}")));
        }
        let mut vals = Vec::new();
        for h in halves {
            for t in h.split(',') {
                let v: i64 = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?}")))?;
                vals.push(v);
            }
        }
        if vals.len() != 4 {
            return Err(Error::Parse(format!("bad matrix {s:?}")));
        }
        Ok(ModMatrix::new(p, vals[0], vals[1], vals[2], vals[3]))
    }
}

/// Bijective labeling of the p²−1 nonzero vectors; antipodal pairs differ by
/// a fixed offset (half the count).
#[derive(Clone)]
pub struct VectorLabeling {
    pub p: u8,
    vectors: Vec<(u8, u8)>,
}

impl VectorLabeling {
    /// The fixed labeling used for p = 3:
    /// 0↔(1,0), 1↔(1,1), 2↔(1,−1), 3↔(0,1), 4↔(−1,0), 5↔(−1,−1),
    /// 6↔(−1,1), 7↔(0,−1).
    pub fn standard(p: u8) -> VectorLabeling {
        match p {
            3 => VectorLabeling {
                p,
                vectors: vec![
                    (1, 0),
                    (1, 1),
                    (1, 2),
                    (0, 1),
                    (2, 0),
                    (2, 2),
                    (2, 1),
                    (0, 2),
                ],
            },
            5 => {
                // 12 representatives in lexicographic order, then negatives
                let mut reps = Vec::new();
                for x in 0..5u8 {
                    for y in 0..5u8 {
                        if (x, y) == (0, 0) {
                            continue;
                        }
                        // representative: first nonzero coordinate in {1, 2}
                        let lead = if x != 0 { x } else { y };
                        if lead <= 2 {
                            reps.push((x, y));
                        }
                    }
                }
                let negs: Vec<(u8, u8)> = reps
                    .iter()
                    .map(|&(x, y)| (((5 - x) % 5), ((5 - y) % 5)))
                    .collect();
                let mut vectors = reps;
                vectors.extend(negs);
                VectorLabeling { p, vectors }
            }
            _ => panic!("unsupported modulus {p}"),
        }
    }

    pub fn count(&self) -> usize {
        self.vectors.len()
    }

    pub fn antipodal_offset(&self) -> usize {
        self.count() / 2
    }

    pub fn vector(&self, label: usize) -> (u8, u8) {
        self.vectors[label]
    }

    pub fn label(&self, v: (u8, u8)) -> usize {
        self.vectors.iter().position(|&w| w == v).unwrap()
    }
}

/// The permutation of vector labels under left multiplication by M.
pub fn mat_act_perm(m: &ModMatrix, labels: &VectorLabeling) -> Result<Perm> {
    if m.det() == 0 {
        return Err(Error::SingularMatrix(m.p));
    }
    Perm::from_images(
        (0..labels.count())
            .map(|l| labels.label(m.apply(labels.vector(l))))
            .collect(),
    )
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum DetCondition {
    DetOne,
    NonZero,
}

/// Full enumeration of SL₂ or GL₂ over Z/p, p ∈ {3, 5}.
pub fn enumerate_linear_group(p: u8, cond: DetCondition) -> Result<FiniteGroup> {
    if p != 3 && p != 5 {
        return Err(Error::UnsupportedField(format!("modulus {p}")));
    }
    let mut elems = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = ModMatrix::new(p, a as i64, b as i64, c as i64, d as i64);
                    let keep = match cond {
                        DetCondition::DetOne => m.det() == 1,
                        DetCondition::NonZero => m.det() != 0,
                    };
                    if keep {
                        elems.push(GroupElem::Mat(m));
                    }
                }
            }
        }
    }
    let name = match cond {
        DetCondition::DetOne => format!("sl2z{p}"),
        DetCondition::NonZero => format!("gl2z{p}"),
    };
    FiniteGroup::from_elements(&name, elems, vec![])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_permutations() {
        // the four generator matrices act as the printed 3-cycle pairs
        let labels = VectorLabeling::standard(3);
        let cases = [
            ("[[1,0],[-1,1]]", "(0,2,1)(4,6,5)"),
            ("[[1,1],[0,1]]", "(1,6,3)(2,7,5)"),
            ("[[-1,1],[-1,0]]", "(0,5,3)(1,7,4)"),
            ("[[0,1],[-1,-1]]", "(2,4,3)(0,7,6)"),
        ];
        for (mat, cyc) in cases {
            let m = ModMatrix::parse(mat, 3).unwrap();
            let got = mat_act_perm(&m, &labels).unwrap();
            let want = Perm::parse_cycles(cyc, 8, 0).unwrap();
            assert_eq!(got, want, "matrix {mat}");
        }
        // identity matrix acts trivially
        let id = ModMatrix::identity(3);
        assert!(mat_act_perm(&id, &labels).unwrap().is_identity());
        // a det −1 matrix from the GL listing
        let m = ModMatrix::parse("[[-1,0],[0,1]]", 3).unwrap();
        assert_eq!(
            mat_act_perm(&m, &labels).unwrap(),
            Perm::parse_cycles("(0,4)(1,6)(2,5)", 8, 0).unwrap()
        );
        // singular input is rejected
        let s = ModMatrix::new(3, 1, 1, 1, 1);
        assert!(mat_act_perm(&s, &labels).is_err());
    }

    #[test]
    fn action_is_homomorphism_and_faithful() {
        let labels = VectorLabeling::standard(3);
        let sl2 = enumerate_linear_group(3, DetCondition::DetOne).unwrap();
        let mut images = std::collections::HashSet::new();
        for i in 0..sl2.order() {
            for j in 0..sl2.order() {
                let (mi, mj) = match (sl2.elem(i), sl2.elem(j)) {
                    (GroupElem::Mat(a), GroupElem::Mat(b)) => (a, b),
                    _ => unreachable!(),
                };
                let lhs = mat_act_perm(&mi.mul(mj), &labels).unwrap();
                let rhs = mat_act_perm(mi, &labels)
                    .unwrap()
                    .compose(&mat_act_perm(mj, &labels).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
            let m = match sl2.elem(i) {
                GroupElem::Mat(a) => a,
                _ => unreachable!(),
            };
            images.insert(mat_act_perm(m, &labels).unwrap());
        }
        assert_eq!(images.len(), sl2.order());
    }

    #[test]
    fn enumeration_orders() {
        assert_eq!(
            enumerate_linear_group(3, DetCondition::DetOne).unwrap().order(),
            24
        );
        assert_eq!(
            enumerate_linear_group(3, DetCondition::NonZero).unwrap().order(),
            48
        );
        assert_eq!(
            enumerate_linear_group(5, DetCondition::DetOne).unwrap().order(),
            120
        );
        assert!(enumerate_linear_group(7, DetCondition::DetOne).is_err());
    }

    #[test]
    fn balanced_display_roundtrip() {
        let m = ModMatrix::new(3, 1, 0, -1, 1);
        assert_eq!(m.to_string(), "[[1,0],[-1,1]] mod 3");
        assert_eq!(ModMatrix::parse(&m.to_string(), 3).unwrap(), m);
    }
}
