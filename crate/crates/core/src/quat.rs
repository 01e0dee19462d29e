//! Exact quaternions over the scalar field, the SU(2) → SO(3) projection, and
//! the named constants used throughout the catalog.

use crate::error::Error;
use crate::field::{int, rat, FieldElem};
use crate::Result;
use std::fmt;

/// Quaternion w + x·i + y·j + z·k with exact coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: FieldElem,
    pub x: FieldElem,
    pub y: FieldElem,
    pub z: FieldElem,
}

impl Quaternion {
    pub fn new(w: FieldElem, x: FieldElem, y: FieldElem, z: FieldElem) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn zero() -> Self {
        Quaternion::new(
            FieldElem::zero(),
            FieldElem::zero(),
            FieldElem::zero(),
            FieldElem::zero(),
        )
    }

    pub fn one() -> Self {
        Quaternion::new(
            FieldElem::one(),
            FieldElem::zero(),
            FieldElem::zero(),
            FieldElem::zero(),
        )
    }

    pub fn i() -> Self {
        Quaternion::new(
            FieldElem::zero(),
            FieldElem::one(),
            FieldElem::zero(),
            FieldElem::zero(),
        )
    }

    pub fn j() -> Self {
        Quaternion::new(
            FieldElem::zero(),
            FieldElem::zero(),
            FieldElem::one(),
            FieldElem::zero(),
        )
    }

    pub fn k() -> Self {
        Quaternion::new(
            FieldElem::zero(),
            FieldElem::zero(),
            FieldElem::zero(),
            FieldElem::one(),
        )
    }

    /// (s·1 + a·i + b·j + c·k)/2 — the shape of the 24-cell vertices.
    pub fn halves(s: i64, a: i64, b: i64, c: i64) -> Self {
        Quaternion::new(
            FieldElem::ratio(s, 2),
            FieldElem::ratio(a, 2),
            FieldElem::ratio(b, 2),
            FieldElem::ratio(c, 2),
        )
    }

    pub fn neg(&self) -> Self {
        Quaternion::new(self.w.neg(), self.x.neg(), self.y.neg(), self.z.neg())
    }

    pub fn mul(&self, q: &Quaternion) -> Quaternion {
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&q.w, &q.x, &q.y, &q.z);
        Quaternion::new(
            w1.mul(w2) - x1.mul(x2) - y1.mul(y2) - z1.mul(z2),
            w1.mul(x2) + x1.mul(w2) + y1.mul(z2) - z1.mul(y2),
            w1.mul(y2) - x1.mul(z2) + y1.mul(w2) + z1.mul(x2),
            w1.mul(z2) + x1.mul(y2) - y1.mul(x2) + z1.mul(w2),
        )
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.w.clone(), self.x.neg(), self.y.neg(), self.z.neg())
    }

    pub fn norm(&self) -> FieldElem {
        self.w.mul(&self.w) + self.x.mul(&self.x) + self.y.mul(&self.y) + self.z.mul(&self.z)
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Inverse of a unit quaternion (the conjugate). Errors on non-unit input
    /// because the conjugation formula assumes norm 1.
    pub fn inv(&self) -> Result<Quaternion> {
        if !self.is_unit() {
            return Err(Error::NonUnitNorm(self.to_string()));
        }
        Ok(self.conj())
    }

    pub fn pow(&self, e: i64) -> Result<Quaternion> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Quaternion::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        Ok(acc)
    }

    /// Multiplicative order of a unit quaternion of finite order.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut n = 1;
        while p != Quaternion::one() {
            p = p.mul(self);
            n += 1;
            assert!(n <= 1024, "order computation ran away");
        }
        n
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [
            self.w.to_f64(),
            self.x.to_f64(),
            self.y.to_f64(),
            self.z.to_f64(),
        ]
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// 3x3 matrix with exact entries.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat3 {
    pub m: [[FieldElem; 3]; 3],
}

impl Mat3 {
    pub fn identity() -> Self {
        let mut m = Mat3::zero();
        for d in 0..3 {
            m.m[d][d] = FieldElem::one();
        }
        m
    }

    pub fn zero() -> Self {
        Mat3 {
            m: std::array::from_fn(|_| std::array::from_fn(|_| FieldElem::zero())),
        }
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Mat3 {
            m: std::array::from_fn(|r| std::array::from_fn(|c| FieldElem::from_int(rows[r][c]))),
        }
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let mut out = Mat3::zero();
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = FieldElem::zero();
                for t in 0..3 {
                    acc = acc + self.m[r][t].mul(&other.m[t][c]);
                }
                out.m[r][c] = acc;
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat3 {
        let mut out = Mat3::zero();
        for r in 0..3 {
            for c in 0..3 {
                out.m[r][c] = self.m[c][r].clone();
            }
        }
        out
    }

    pub fn det(&self) -> FieldElem {
        let m = &self.m;
        m[0][0].mul(&(m[1][1].mul(&m[2][2]) - m[1][2].mul(&m[2][1])))
            - m[0][1].mul(&(m[1][0].mul(&m[2][2]) - m[1][2].mul(&m[2][0])))
            + m[0][2].mul(&(m[1][0].mul(&m[2][1]) - m[1][1].mul(&m[2][0])))
    }

    /// Columns are exactly orthonormal.
    pub fn is_orthonormal(&self) -> bool {
        self.transpose().mul(self) == Mat3::identity()
    }
}

/// The 2-to-1 covering S³ → SO(3), exactly.
pub fn su2_to_so3(q: &Quaternion) -> Result<Mat3> {
    if !q.is_unit() {
        return Err(Error::NonUnitNorm(q.to_string()));
    }
    let two = FieldElem::from_int(2);
    let one = FieldElem::one();
    let (w, x, y, z) = (&q.w, &q.x, &q.y, &q.z);
    let mut out = Mat3::zero();
    out.m[0][0] = one.clone() - two.mul(&(y.mul(y) + z.mul(z)));
    out.m[0][1] = two.mul(&(x.mul(y) - z.mul(w)));
    out.m[0][2] = two.mul(&(x.mul(z) + y.mul(w)));
    out.m[1][0] = two.mul(&(x.mul(y) + z.mul(w)));
    out.m[1][1] = one.clone() - two.mul(&(x.mul(x) + z.mul(z)));
    out.m[1][2] = two.mul(&(y.mul(z) - x.mul(w)));
    out.m[2][0] = two.mul(&(x.mul(z) - y.mul(w)));
    out.m[2][1] = two.mul(&(y.mul(z) + x.mul(w)));
    out.m[2][2] = one - two.mul(&(x.mul(x) + y.mul(y)));
    Ok(out)
}

/// cos(ℓπ/n) and sin(ℓπ/n) exactly, supported for n ≤ 6.
///
/// n = 5 needs σ = 2·sin(π/5); n ≥ 7 would need cos(π/n) of degree ≥ 3 over
/// Q, which leaves the field.
pub fn exact_cos_sin(n: usize, l: i64) -> Result<(FieldElem, FieldElem)> {
    if n == 0 || n > 6 {
        return Err(Error::UnsupportedField(format!(
            "cos(pi/{n}) is outside Q(r2, r3, r5, s5)"
        )));
    }
    let two_n = 2 * n as i64;
    let l = l.rem_euclid(two_n) as usize;
    let half = FieldElem::ratio(1, 2);
    let r3h = FieldElem::term(rat(1, 2), 2);
    let r2h = FieldElem::term(rat(1, 2), 1);
    let phi_h = FieldElem::phi().scale(&rat(1, 2));
    let phim1_h = (FieldElem::phi() - FieldElem::one()).scale(&rat(1, 2));
    let sig_h = FieldElem::term(rat(1, 2), 8);
    let sigphi_h = FieldElem::sigma().mul(&FieldElem::phi()).scale(&rat(1, 2));
    let one = FieldElem::one();
    let zero = FieldElem::zero();
    // values of cos(mπ/n) for m = 0..n
    let cos_half: Vec<FieldElem> = match n {
        1 => vec![one.clone(), one.neg()],
        2 => vec![one.clone(), zero.clone(), one.neg()],
        3 => vec![one.clone(), half.clone(), half.neg(), one.neg()],
        4 => vec![one.clone(), r2h.clone(), zero.clone(), r2h.neg(), one.neg()],
        5 => vec![
            one.clone(),
            phi_h.clone(),
            phim1_h.clone(),
            phim1_h.neg(),
            phi_h.neg(),
            one.neg(),
        ],
        6 => vec![
            one.clone(),
            r3h.clone(),
            half.clone(),
            zero.clone(),
            half.neg(),
            r3h.neg(),
            one.neg(),
        ],
        _ => unreachable!(),
    };
    // values of sin(mπ/n) for m = 0..n
    let sin_half: Vec<FieldElem> = match n {
        1 => vec![zero.clone(), zero.clone()],
        2 => vec![zero.clone(), one.clone(), zero.clone()],
        3 => vec![zero.clone(), r3h.clone(), r3h.clone(), zero.clone()],
        4 => vec![zero.clone(), r2h.clone(), one.clone(), r2h, zero.clone()],
        5 => vec![
            zero.clone(),
            sig_h.clone(),
            sigphi_h.clone(),
            sigphi_h,
            sig_h,
            zero.clone(),
        ],
        6 => vec![
            zero.clone(),
            half.clone(),
            r3h.clone(),
            one.clone(),
            r3h,
            half,
            zero.clone(),
        ],
        _ => unreachable!(),
    };
    if l <= n {
        Ok((cos_half[l].clone(), sin_half[l].clone()))
    } else {
        let m = 2 * n - l;
        Ok((cos_half[m].clone(), sin_half[m].neg()))
    }
}

/// u_n(ℓ) = cos(ℓπ/n) + sin(ℓπ/n)·i — the image of ρ^ℓ in Dic_n.
pub fn u_n(n: usize, l: i64) -> Result<Quaternion> {
    let (c, s) = exact_cos_sin(n, l)?;
    Ok(Quaternion::new(c, s, FieldElem::zero(), FieldElem::zero()))
}

/// v_n(ℓ) = cos(ℓπ/n)·j + sin(ℓπ/n)·k — the image of ρ^ℓ·x in Dic_n.
pub fn v_n(n: usize, l: i64) -> Result<Quaternion> {
    let (c, s) = exact_cos_sin(n, l)?;
    Ok(Quaternion::new(FieldElem::zero(), FieldElem::zero(), c, s))
}

/// The named unit quaternions used throughout the catalog.
pub mod constants {
    use super::*;

    /// a = (1 + i + j + k)/2, order 6.
    pub fn a() -> Quaternion {
        Quaternion::halves(1, 1, 1, 1)
    }

    /// b = (1 + i + j − k)/2, order 6.
    pub fn b() -> Quaternion {
        Quaternion::halves(1, 1, 1, -1)
    }

    /// c = (1 + i − j − k)/2, order 6.
    pub fn c() -> Quaternion {
        Quaternion::halves(1, 1, -1, -1)
    }

    /// d = (1 + i − j + k)/2, order 6.
    pub fn d() -> Quaternion {
        Quaternion::halves(1, 1, -1, 1)
    }

    /// f = (1 + i)/√2, order 8.
    pub fn f() -> Quaternion {
        Quaternion::new(
            FieldElem::term(rat(1, 2), 1),
            FieldElem::term(rat(1, 2), 1),
            FieldElem::zero(),
            FieldElem::zero(),
        )
    }

    /// t = (φ + (φ−1)i + j)/2, order 10.
    pub fn t() -> Quaternion {
        Quaternion::new(
            FieldElem::phi().scale(&rat(1, 2)),
            (FieldElem::phi() - FieldElem::one()).scale(&rat(1, 2)),
            FieldElem::ratio(1, 2),
            FieldElem::zero(),
        )
    }
}

// ---------------------------------------------------------------------------
// text form
// ---------------------------------------------------------------------------

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::field::term_string;
        use num_traits::Signed;
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (axis, fe) in [(0usize, &self.w), (1, &self.x), (2, &self.y), (3, &self.z)] {
            for (mask, c) in fe.terms() {
                let unit = ["", "i", "j", "k"][axis];
                let mut s = term_string(c, *mask);
                // a bare unit prints as "i", not "1i"
                if !unit.is_empty() && s == "1" {
                    s = String::new();
                }
                parts.push((c.is_negative(), format!("{s}{unit}")));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (n, (neg, body)) in parts.iter().enumerate() {
            if n == 0 {
                if *neg {
                    write!(f, "-")?;
                }
            } else if *neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

impl Quaternion {
    /// Parse the text form produced by Display: signed terms
    /// `[coeff][radical tokens][i|j|k]` joined by `+`/`-`; e.g.
    /// `"(1/2)r2 + (1/2)r2i"` or `"-1"`.
    pub fn parse(input: &str) -> Result<Quaternion> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty quaternion".into()));
        }
        if s == "0" {
            return Ok(Quaternion::zero());
        }
        let bytes = s.as_bytes();
        let mut q = Quaternion::zero();
        let mut pos = 0usize;
        while pos < bytes.len() {
            let mut sign = 1i64;
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
                pos += 1;
            }
            // a '-' inside "(p/q)" cannot occur: rationals print with the
            // sign outside the parentheses
            let term = &s[start..pos];
            if term.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {input:?}")));
            }
            let (coeff, rest) = parse_coeff(term)?;
            let (mask, unit) = parse_tokens(rest)?;
            let fe = FieldElem::term(coeff * crate::field::int(sign), mask);
            match unit {
                0 => q.w = q.w + &fe,
                1 => q.x = q.x + &fe,
                2 => q.y = q.y + &fe,
                3 => q.z = q.z + &fe,
                _ => unreachable!(),
            }
        }
        Ok(q)
    }
}

/// Leading rational coefficient of a term: "(p/q)" or an integer or nothing.
fn parse_coeff(term: &str) -> Result<(crate::field::Rational, &str)> {
    let b = term.as_bytes();
    if b[0] == b'(' {
        let close = term
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed paren in {term:?}")))?;
        let inner = &term[1..close];
        let r = parse_ratio(inner)?;
        Ok((r, &term[close + 1..]))
    } else {
        let digits = term.bytes().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            Ok((int(1), term))
        } else {
            // reject "12/34" without parens to keep the grammar unambiguous
            let n: i64 = term[..digits]
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer in {term:?}")))?;
            Ok((int(n), &term[digits..]))
        }
    }
}

fn parse_ratio(s: &str) -> Result<crate::field::Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator {n:?}")))?;
            let d: i64 = d
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator {d:?}")))?;
            if d == 0 {
                return Err(Error::DivisionByZero);
            }
            Ok(rat(n, d))
        }
        None => {
            let n: i64 = s
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
            Ok(int(n))
        }
    }
}

/// Radical tokens (r2, r3, r5, r6, r10, r15, r30, s5) followed by an optional
/// unit i/j/k. Returns (basis mask, axis) with axis 0 = real part.
fn parse_tokens(mut rest: &str) -> Result<(u8, usize)> {
    let mut mask = 0u8;
    loop {
        if let Some(tail) = rest.strip_prefix('r') {
            let digits = tail.bytes().take_while(|c| c.is_ascii_digit()).count();
            if digits == 0 {
                return Err(Error::Parse(format!("bad radical token near {rest:?}")));
            }
            let r: u32 = tail[..digits].parse().unwrap();
            let m = crate::field::mask_for_radicand(r)
                .ok_or_else(|| Error::Parse(format!("unknown radical r{r}")))?;
            mask |= m;
            rest = &tail[digits..];
        } else if let Some(tail) = rest.strip_prefix("s5") {
            mask |= 8;
            rest = tail;
        } else {
            break;
        }
    }
    let axis = match rest {
        "" => 0,
        "i" => 1,
        "j" => 2,
        "k" => 3,
        other => return Err(Error::Parse(format!("trailing tokens {other:?}"))),
    };
    Ok((mask, axis))
}

#[cfg(test)]
mod tests {
    use super::constants::*;
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(i.mul(&i), Quaternion::one().neg());
        assert_eq!(a().mul(&Quaternion::one()), a());
    }

    #[test]
    fn a_cubed_is_minus_one() {
        for q in [a(), b(), c(), d()] {
            assert_eq!(q.pow(3).unwrap(), Quaternion::one().neg());
            assert_eq!(q.order(), 6);
        }
    }

    #[test]
    fn f_powers() {
        // f⁴ = −1, f⁸ = 1 (consistent with a³ = f⁴ = (af)²)
        assert_eq!(f().pow(4).unwrap(), Quaternion::one().neg());
        assert_eq!(f().pow(8).unwrap(), Quaternion::one());
        assert_eq!(f().order(), 8);
    }

    #[test]
    fn t_has_order_ten() {
        assert_eq!(t().order(), 10);
        assert_eq!(t().pow(5).unwrap(), Quaternion::one().neg());
    }

    #[test]
    fn inverse_is_conjugate() {
        assert_eq!(Quaternion::i().inv().unwrap(), Quaternion::i().neg());
        let tinv = t().inv().unwrap();
        assert_eq!(t().mul(&tinv), Quaternion::one());
        // t⁻¹ = (φ − (φ−1)i − j)/2
        let phi = FieldElem::phi();
        let want = Quaternion::new(
            phi.scale(&rat(1, 2)),
            (phi.clone() - FieldElem::one()).scale(&rat(1, 2)).neg(),
            FieldElem::ratio(-1, 2),
            FieldElem::zero(),
        );
        assert_eq!(tinv, want);
        assert!(Quaternion::halves(4, 0, 0, 0).inv().is_err());
    }

    #[test]
    fn projection_of_one_and_i() {
        assert_eq!(su2_to_so3(&Quaternion::one()).unwrap(), Mat3::identity());
        // p(i) = diag(1, −1, −1), by substituting w=0, x=1 into the formula
        let want = Mat3::from_i64([[1, 0, 0], [0, -1, 0], [0, 0, -1]]);
        assert_eq!(su2_to_so3(&Quaternion::i()).unwrap(), want);
        assert!(su2_to_so3(&Quaternion::halves(1, 1, 0, 0)).is_err());
    }

    #[test]
    fn projection_antipodal() {
        for q in [a(), f(), t()] {
            assert_eq!(
                su2_to_so3(&q).unwrap(),
                su2_to_so3(&q.neg()).unwrap()
            );
        }
    }

    #[test]
    fn u_and_v_generators() {
        assert_eq!(v_n(4, 0).unwrap(), Quaternion::j());
        assert_eq!(u_n(2, 1).unwrap(), Quaternion::i());
        // u_5(1) has real part φ/2 and imaginary norm sin²(π/5)
        let u = u_n(5, 1).unwrap();
        assert!(u.is_unit());
        assert!(u_n(7, 1).is_err());
        assert!(v_n(9, 2).is_err());
    }

    #[test]
    fn text_roundtrip() {
        for q in [
            Quaternion::one().neg(),
            Quaternion::k(),
            a(),
            f(),
            t(),
            t().pow(2).unwrap(),
            u_n(5, 3).unwrap(),
            v_n(6, 5).unwrap(),
        ] {
            let s = q.to_string();
            assert_eq!(Quaternion::parse(&s).unwrap(), q, "roundtrip of {s}");
        }
        assert_eq!(
            a().to_string(),
            "(1/2) + (1/2)i + (1/2)j + (1/2)k"
        );
        assert_eq!(Quaternion::one().neg().to_string(), "-1");
        assert_eq!(f().to_string(), "(1/2)r2 + (1/2)r2i");
    }
}
