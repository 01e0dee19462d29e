//! Permutations on labeled finite point sets, cycle notation, and signed
//! permutations.
//!
//! Points are 0-based internally. Composition follows the matrix model with
//! columns e_{σ(j)}: `compose(s, t)` applies `t` first, so
//! M(s)·M(t) = M(s∘t). Under this convention (12)·(23) = (123).

use crate::error::Error;
use crate::Result;
use num_integer::Integer;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if im >= n || seen[im] {
                return Err(Error::MalformedCycles(format!(
                    "images {images:?} are not a bijection"
                )));
            }
            seen[im] = true;
        }
        Ok(Perm { images })
    }

    /// Build from disjoint cycles (0-based points).
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cyc in cycles {
            for (n, &p) in cyc.iter().enumerate() {
                if p >= degree {
                    return Err(Error::MalformedCycles(format!(
                        "point {p} out of range for degree {degree}"
                    )));
                }
                if used[p] {
                    return Err(Error::RepeatedPoint(p));
                }
                used[p] = true;
                images[p] = cyc[(n + 1) % cyc.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// (self ∘ other)(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Perm {
            images: (0..self.degree())
                .map(|x| self.apply(other.apply(x)))
                .collect(),
        })
    }

    pub fn inv(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Perm { images }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base).unwrap();
            }
            base = base.compose(&base).unwrap();
            n >>= 1;
        }
        acc
    }

    /// Cycles of length > 1, each rotated to start at its minimum, sorted by
    /// minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cyc.push(p);
                p = self.apply(p);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// True for even permutations.
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&p| self.apply(p) == p).collect()
    }

    /// Multiset of cycle lengths including fixed points; conjugation
    /// invariant.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(|c| c.len()).sum();
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.extend(std::iter::repeat(1).take(self.degree() - moved));
        t.sort_unstable();
        t
    }

    /// Canonical cycle string: 0- or 1-based points, comma separated, fixed
    /// points omitted, identity printed as "()".
    pub fn to_cycle_string(&self, base: usize) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body = c
                    .iter()
                    .map(|p| (p + base).to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("({body})")
            })
            .collect()
    }

    /// Parse cycle notation. Comma-separated points, or single digits when a
    /// cycle contains no comma ("(04)(123567)" = (0,4)(1,2,3,5,6,7)).
    /// `base` is 0 or 1 depending on the source's labeling. "()" and "" parse
    /// to the identity.
    pub fn parse_cycles(text: &str, degree: usize, base: usize) -> Result<Perm> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "()" || s == "(1)" && base == 1 || s == "(0)" && base == 0 {
            return Ok(Perm::identity(degree));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::MalformedCycles(text.to_string()));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::MalformedCycles(text.to_string()))?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            if body.is_empty() {
                continue;
            }
            let raw: Vec<usize> = if body.contains(',') {
                body.split(',')
                    .map(|p| {
                        p.parse::<usize>()
                            .map_err(|_| Error::MalformedCycles(text.to_string()))
                    })
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::MalformedCycles(text.to_string()))
                    })
                    .collect::<Result<_>>()?
            };
            let cyc: Vec<usize> = raw
                .into_iter()
                .map(|p| {
                    p.checked_sub(base)
                        .ok_or_else(|| Error::MalformedCycles(format!("point below base in {text}")))
                })
                .collect::<Result<_>>()?;
            if cyc.len() > 1 {
                cycles.push(cyc);
            }
        }
        Perm::from_cycles(degree, &cycles)
    }

    /// JSON array form with an explicit base field.
    pub fn to_json(&self, base: usize) -> serde_json::Value {
        serde_json::json!({
            "images": self.images.iter().map(|&i| i + base).collect::<Vec<_>>(),
            "base": base,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Perm> {
        let base = v["base"].as_u64().unwrap_or(0) as usize;
        let images = v["images"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing images".into()))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|n| n as usize)
                    .and_then(|n| n.checked_sub(base))
                    .ok_or_else(|| Error::Parse("bad image entry".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(images)
    }

    /// 0/1 permutation matrix with columns e_{σ(j)}, row major.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let n = self.degree();
        let mut m = vec![vec![0u8; n]; n];
        for j in 0..n {
            m[self.apply(j)][j] = 1;
        }
        m
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string(0))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string(0))
    }
}

/// Signed permutation: as a matrix, one ±1 entry per row and column. The
/// sign vector is indexed by target row, matching the wreath bead
/// convention.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub perm: Perm,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(degree: usize) -> Self {
        SignedPerm {
            perm: Perm::identity(degree),
            signs: vec![1; degree],
        }
    }

    pub fn new(perm: Perm, signs: Vec<i8>) -> Result<Self> {
        if perm.degree() != signs.len() {
            return Err(Error::DegreeMismatch(perm.degree(), signs.len()));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument("signs must be ±1".into()));
        }
        Ok(SignedPerm { perm, signs })
    }

    /// Build from columns (±(index+1)): `(-e2, -e1, -e3)` is
    /// `from_columns(&[-2, -1, -3])`.
    pub fn from_columns(cols: &[i64]) -> Result<Self> {
        let n = cols.len();
        let mut images = vec![0usize; n];
        let mut signs = vec![1i8; n];
        for (j, &c) in cols.iter().enumerate() {
            let row = c.unsigned_abs() as usize;
            if row == 0 || row > n {
                return Err(Error::InvalidArgument(format!("bad column entry {c}")));
            }
            images[j] = row - 1;
            signs[row - 1] = if c < 0 { -1 } else { 1 };
        }
        Ok(SignedPerm {
            perm: Perm::from_images(images)?,
            signs,
        })
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    /// Matrix product semantics: signs compose through the permutation.
    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm> {
        let perm = self.perm.compose(&other.perm)?;
        let inv = self.perm.inv();
        let signs = (0..self.degree())
            .map(|i| self.signs[i] * other.signs[inv.apply(i)])
            .collect();
        Ok(SignedPerm { perm, signs })
    }

    pub fn inv(&self) -> SignedPerm {
        let perm = self.perm.inv();
        let signs = (0..self.degree())
            .map(|j| self.signs[self.perm.apply(j)])
            .collect();
        SignedPerm { perm, signs }
    }

    pub fn det(&self) -> i64 {
        let sign = if self.perm.is_even() { 1 } else { -1 };
        sign * self.signs.iter().map(|&s| s as i64).product::<i64>()
    }

    /// Matrix entry at (row, col), in {−1, 0, 1}.
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        if self.perm.apply(col) == row {
            self.signs[row] as i64
        } else {
            0
        }
    }

    /// Apply to an integer vector (length = degree).
    pub fn apply_vec(&self, v: &[i64]) -> Vec<i64> {
        (0..self.degree())
            .map(|r| (0..self.degree()).map(|c| self.entry(r, c) * v[c]).sum())
            .collect()
    }

    pub fn transpose(&self) -> SignedPerm {
        self.inv()
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // column form "(−e2, −e1, −e3)"
        let cols: Vec<String> = (0..self.degree())
            .map(|j| {
                let r = self.perm.apply(j);
                let sign = if self.signs[r] < 0 { "-" } else { "" };
                format!("{sign}e{}", r + 1)
            })
            .collect();
        write!(f, "({})", cols.join(","))
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize, base: usize) -> Perm {
        Perm::parse_cycles(text, degree, base).unwrap()
    }

    #[test]
    fn compose_convention() {
        // (12)·(23) = (123) when the right factor acts first
        let s = p("(1,2)", 3, 1);
        let t = p("(2,3)", 3, 1);
        assert_eq!(s.compose(&t).unwrap(), p("(1,2,3)", 3, 1));
    }

    #[test]
    fn printed_identity_from_octahedral_proof() {
        // the printed word "(234)(1423)(234)(1423) = (13)(24)" reads
        // left-to-right, i.e. (234) acts first
        let a = p("(234)", 4, 1);
        let s = p("(1423)", 4, 1);
        let word = s
            .compose(&a)
            .unwrap()
            .compose(&s)
            .unwrap()
            .compose(&a)
            .unwrap();
        assert_eq!(word, p("(13)(24)", 4, 1));
        // with σ = (1324) the same word collapses to the identity, which is
        // what forces σ = (1324) in the extension search
        let s2 = p("(1324)", 4, 1);
        let word2 = s2
            .compose(&a)
            .unwrap()
            .compose(&s2)
            .unwrap()
            .compose(&a)
            .unwrap();
        assert!(word2.is_identity());
    }

    #[test]
    fn inverse_and_identity() {
        let s = p("(04)(123567)", 8, 0);
        assert!(s.compose(&s.inv()).unwrap().is_identity());
        assert_eq!(p("", 5, 0), Perm::identity(5));
        assert_eq!(p("()", 5, 0), Perm::identity(5));
    }

    #[test]
    fn props() {
        let four = p("(1324)", 4, 1);
        assert_eq!(four.order(), 4);
        assert!(!four.is_even());
        let id = Perm::identity(4);
        assert_eq!(id.order(), 1);
        assert!(id.is_even());
        // (04)(123567): one transposition + one 6-cycle = 6 transpositions
        let s = p("(04)(123567)", 8, 0);
        assert_eq!(s.order(), 6);
        assert!(s.is_even());
        assert!(s.fixed_points().is_empty());
    }

    #[test]
    fn cycle_string_roundtrip() {
        let s = p("(0,2,1)(4,6,5)", 8, 0);
        assert_eq!(s.to_cycle_string(0), "(0,2,1)(4,6,5)");
        assert_eq!(p("(04)(123567)", 8, 0), p("(0,4)(1,2,3,5,6,7)", 8, 0));
        assert!(Perm::parse_cycles("(011)", 3, 0).is_err());
        assert!(Perm::parse_cycles("(09)", 3, 0).is_err());
    }

    #[test]
    fn matrix_model() {
        // exhaustive on degree 3: M(s)M(t) = M(s∘t)
        let mut all = Vec::new();
        for a in 0..3usize {
            for b in 0..3usize {
                if a == b {
                    continue;
                }
                let c = 3 - a - b;
                all.push(Perm::from_images(vec![a, b, c]).unwrap());
            }
        }
        for s in &all {
            for t in &all {
                let st = s.compose(t).unwrap();
                let ms = s.matrix();
                let mt = t.matrix();
                let mut prod = vec![vec![0u8; 3]; 3];
                for r in 0..3 {
                    for c in 0..3 {
                        prod[r][c] = (0..3).map(|x| ms[r][x] * mt[x][c]).sum();
                    }
                }
                assert_eq!(prod, st.matrix());
            }
        }
    }

    #[test]
    fn signed_perm_examples() {
        // (−e2,−e1,−e3)² = identity
        let s = SignedPerm::from_columns(&[-2, -1, -3]).unwrap();
        assert_eq!(s.compose(&s).unwrap(), SignedPerm::identity(3));
        // det(−e1,−e3,−e2) = sign((23))·(−1)³ = +1
        let t = SignedPerm::from_columns(&[-1, -3, -2]).unwrap();
        assert_eq!(t.det(), 1);
        assert_eq!(
            t.compose(&SignedPerm::identity(3)).unwrap(),
            t
        );
        assert_eq!(s.to_string(), "(-e2,-e1,-e3)");
    }

    #[test]
    fn json_form() {
        let s = p("(0,4)(1,2,3)", 5, 0);
        for base in [0usize, 1] {
            let v = s.to_json(base);
            assert_eq!(v["base"], base);
            assert_eq!(Perm::from_json(&v).unwrap(), s);
        }
    }

    #[test]
    fn signed_det_multiplicative() {
        let a = SignedPerm::from_columns(&[-2, -1, -3]).unwrap();
        let b = SignedPerm::from_columns(&[-1, -3, -2]).unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.det(), a.det() * b.det());
        assert_eq!(a.compose(&a.inv()).unwrap(), SignedPerm::identity(3));
    }
}
