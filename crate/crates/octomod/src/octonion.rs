//! Octonions over exact rationals.
//!
//! Basis `e0 = 1, e1..e7` with `e_i e_j = ε_ijk e_k - δ_ij` for imaginary `i, j`.
//! The positive oriented triples are (1,2,3), (1,4,5), (1,6,7), (2,4,6) and the
//! negative ones are (2,5,7), (3,4,7), (3,5,6).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

const TRIPLES: [(usize, usize, usize, i8); 7] = [
    (1, 2, 3, 1),
    (1, 4, 5, 1),
    (1, 6, 7, 1),
    (2, 4, 6, 1),
    (2, 5, 7, -1),
    (3, 4, 7, -1),
    (3, 5, 6, -1),
];

/// Structure constants of the basis: `e_i e_j = sign[i][j] * e_{index[i][j]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonTable {
    sign: [[i8; 8]; 8],
    index: [[usize; 8]; 8],
    epsilon: [[[i8; 8]; 8]; 8],
}

impl EpsilonTable {
    fn build() -> Self {
        let mut epsilon = [[[0i8; 8]; 8]; 8];
        for &(a, b, c, s) in &TRIPLES {
            for (i, j, k, parity) in [
                (a, b, c, 1),
                (b, c, a, 1),
                (c, a, b, 1),
                (b, a, c, -1),
                (a, c, b, -1),
                (c, b, a, -1),
            ] {
                epsilon[i][j][k] = s * parity;
            }
        }
        let mut sign = [[0i8; 8]; 8];
        let mut index = [[0usize; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let (s, k) = if i == 0 {
                    (1, j)
                } else if j == 0 {
                    (1, i)
                } else if i == j {
                    (-1, 0)
                } else {
                    let k = (1..8).find(|&k| epsilon[i][j][k] != 0).expect("fano line");
                    (epsilon[i][j][k], k)
                };
                sign[i][j] = s;
                index[i][j] = k;
            }
        }
        EpsilonTable {
            sign,
            index,
            epsilon,
        }
    }

    pub fn get() -> &'static EpsilonTable {
        static TABLE: OnceLock<EpsilonTable> = OnceLock::new();
        TABLE.get_or_init(EpsilonTable::build)
    }

    /// `(sign, k)` with `e_i e_j = sign * e_k`.
    pub fn product(&self, i: usize, j: usize) -> (i8, usize) {
        (self.sign[i][j], self.index[i][j])
    }

    /// Fully antisymmetric `ε_ijk` on imaginary indices; zero if any index is 0.
    pub fn epsilon(&self, i: usize, j: usize, k: usize) -> i8 {
        self.epsilon[i][j][k]
    }
}

/// `(sign, k)` with `e_i e_j = sign * e_k`.
pub fn basis_product(i: usize, j: usize) -> (i8, usize) {
    EpsilonTable::get().product(i, j)
}

fn signed(r: &Rational, s: i8) -> Rational {
    if s < 0 {
        -r
    } else {
        r.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Octonion([Rational; 8]);

impl Octonion {
    pub fn new(coeffs: [Rational; 8]) -> Self {
        Octonion(coeffs)
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Octonion(c.map(rational::int))
    }

    pub fn zero() -> Self {
        Octonion(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn real(r: Rational) -> Self {
        let mut o = Self::zero();
        o.0[0] = r;
        o
    }

    /// The basis unit `e_i`, with `e_0 = 1`.
    pub fn unit(i: usize) -> Self {
        assert!(i < 8, "basis index out of range");
        let mut o = Self::zero();
        o.0[i] = Rational::one();
        o
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn into_coeffs(self) -> [Rational; 8] {
        self.0
    }

    pub fn re(&self) -> Rational {
        self.0[0].clone()
    }

    pub fn im(&self) -> Octonion {
        let mut o = self.clone();
        o.0[0] = Rational::zero();
        o
    }

    pub fn conj(&self) -> Octonion {
        let mut o = -self;
        o.0[0] = self.0[0].clone();
        o
    }

    pub fn norm_sq(&self) -> Rational {
        self.0.iter().map(|c| c * c).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.0[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] * r))
    }

    pub fn mul(&self, other: &Octonion) -> Octonion {
        let table = EpsilonTable::get();
        let mut out = Octonion::zero();
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (s, k) = table.product(i, j);
                let p = a * b;
                if s < 0 {
                    out.0[k] -= p;
                } else {
                    out.0[k] += p;
                }
            }
        }
        out
    }

    /// `self * e_j` without a full product.
    pub fn mul_unit(&self, j: usize) -> Octonion {
        let mut out = Octonion::zero();
        for (i, a) in self.0.iter().enumerate() {
            if !a.is_zero() {
                let (s, k) = basis_product(i, j);
                out.0[k] = signed(a, s);
            }
        }
        out
    }

    /// `e_i * self` without a full product.
    pub fn unit_mul(&self, i: usize) -> Octonion {
        let mut out = Octonion::zero();
        for (j, b) in self.0.iter().enumerate() {
            if !b.is_zero() {
                let (s, k) = basis_product(i, j);
                out.0[k] = signed(b, s);
            }
        }
        out
    }

    /// `(pq)r - p(qr)`.
    pub fn associator(p: &Octonion, q: &Octonion, r: &Octonion) -> Octonion {
        &p.mul(q).mul(r) - &p.mul(&q.mul(r))
    }

    /// `pq - qp`.
    pub fn commutator(p: &Octonion, q: &Octonion) -> Octonion {
        &p.mul(q) - &q.mul(p)
    }

    /// Parses literals such as `1+2e3-1/2e7`. Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Octonion> {
        LiteralParser::new(s).parse()
    }
}

impl Default for Octonion {
    fn default() -> Self {
        Octonion::zero()
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                write!(f, "e{i}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Octonion> for &Octonion {
            type Output = Octonion;
            fn $m(self, rhs: &Octonion) -> Octonion {
                Octonion(std::array::from_fn(|i| &self.0[i] $op &rhs.0[i]))
            }
        }
        impl $tr for Octonion {
            type Output = Octonion;
            fn $m(self, rhs: Octonion) -> Octonion {
                &self $op &rhs
            }
        }
    };
}
binop!(Add, add, +);
binop!(Sub, sub, -);

impl Mul<&Octonion> for &Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        Octonion::mul(self, rhs)
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        -&self
    }
}

impl AddAssign<&Octonion> for Octonion {
    fn add_assign(&mut self, rhs: &Octonion) {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&Octonion> for Octonion {
    fn sub_assign(&mut self, rhs: &Octonion) {
        for (a, b) in self.0.iter_mut().zip(rhs.0.iter()) {
            *a -= b;
        }
    }
}

struct LiteralParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> LiteralParser<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        LiteralParser { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        (!s.is_empty()).then_some(s)
    }

    fn parse(mut self) -> Result<Octonion> {
        if self.chars.is_empty() {
            return Err(Error::parse(0, "empty literal"));
        }
        let mut out = Octonion::zero();
        let mut first = true;
        while self.pos < self.chars.len() {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(Error::parse(self.offset(), "expected `+` or `-`")),
            };
            first = false;
            let (index, coeff) = self.term()?;
            if negative {
                out.0[index] -= coeff;
            } else {
                out.0[index] += coeff;
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(usize, Rational)> {
        let start = self.offset();
        let coeff = match self.digits() {
            Some(num) => {
                let mut r = rational::parse(&num).map_err(|_| Error::parse(start, "bad number"))?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let at = self.offset();
                    let den = self
                        .digits()
                        .ok_or_else(|| Error::parse(at, "expected denominator"))?;
                    let den = rational::parse(&den).map_err(|_| Error::parse(at, "bad number"))?;
                    if den.is_zero() {
                        return Err(Error::parse(at, "zero denominator"));
                    }
                    r /= den;
                }
                Some(r)
            }
            None => None,
        };
        if self.peek() == Some('e') {
            self.pos += 1;
            let at = self.offset();
            let idx = match self.peek() {
                Some(c @ '0'..='7') => c as usize - '0' as usize,
                _ => return Err(Error::parse(at, "expected basis index 0..7 after `e`")),
            };
            self.pos += 1;
            Ok((idx, coeff.unwrap_or_else(Rational::one)))
        } else {
            match coeff {
                Some(r) => Ok((0, r)),
                None => Err(Error::parse(start, "expected a number or basis unit")),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Octonion {
        Octonion::parse(s).unwrap()
    }

    #[test]
    fn signed_triples() {
        assert_eq!(basis_product(1, 2), (1, 3));
        assert_eq!(basis_product(2, 5), (-1, 7));
        assert_eq!(basis_product(4, 5), (1, 1));
        assert_eq!(basis_product(3, 3), (-1, 0));
    }

    #[test]
    fn frozen_examples() {
        assert_eq!(
            Octonion::associator(&o("e1"), &o("e2"), &o("e4")),
            o("-2e7")
        );
        assert_eq!(Octonion::commutator(&o("e1"), &o("e2")), o("2e3"));
        assert_eq!(&o("1+e1") * &o("1+e2"), o("1+e1+e2+e3"));
        assert_eq!(o("1+e1").norm_sq(), rational::int(2));
        let sandwich = (1..8).fold(Octonion::zero(), |acc, i| {
            acc + Octonion::unit(i).mul(&o("e1")).mul(&Octonion::unit(i))
        });
        assert_eq!(sandwich, o("5e1"));
    }

    #[test]
    fn literal_roundtrip() {
        for s in ["1+2e3-1/2e7", "e1", "-e2", "0", "3/4", "-1-e7"] {
            assert_eq!(o(s).to_string(), s);
        }
        assert_eq!(o(" 1 + e1 "), o("1+e1"));
        assert_eq!(o("e0"), Octonion::one());
    }

    #[test]
    fn literal_errors_report_position() {
        match Octonion::parse("1+e9") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Octonion::parse("").is_err());
        assert!(Octonion::parse("1e1e2").is_err());
        assert!(Octonion::parse("1/").is_err());
    }

    #[test]
    fn unit_shortcuts_match_product() {
        let x = o("1-2e1+1/3e4+e7");
        for i in 0..8 {
            assert_eq!(x.mul_unit(i), x.mul(&Octonion::unit(i)));
            assert_eq!(x.unit_mul(i), Octonion::unit(i).mul(&x));
        }
    }
}
