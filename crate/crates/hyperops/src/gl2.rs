//! Exact 2x2 integer matrix arithmetic over GL2(Z) and classification of
//! periodic elements in GL2(Z) and PGL2(Z).
//!
//! Matrices act on integer row vectors on the right; the basis order is
//! (rho2, rho0) throughout the crate.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gl2Error {
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(i64),
    #[error("integer overflow in exact matrix arithmetic")]
    Overflow,
    #[error("cannot parse matrix from {0:?}: expected \"a,b;c,d\"")]
    Parse(String),
    #[error("canonical word longer than {0} letters; the entries are too large for word output")]
    WordTooLong(usize),
}

/// 2x2 integer matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

pub const I: Mat2 = Mat2::new(1, 0, 0, 1);
pub const NEG_I: Mat2 = Mat2::new(-1, 0, 0, -1);
/// X = [[0,-1],[1,0]], order 4.
pub const X: Mat2 = Mat2::new(0, -1, 1, 0);
/// Y = [[0,-1],[1,1]], order 6.
pub const Y: Mat2 = Mat2::new(0, -1, 1, 1);
/// Y^2 = [[-1,-1],[1,0]], order 3.
pub const Y2: Mat2 = Mat2::new(-1, -1, 1, 0);
/// T = [[0,1],[1,0]], order 2, determinant -1.
pub const T: Mat2 = Mat2::new(0, 1, 1, 0);
/// XT = [[-1,0],[0,1]], order 2, determinant -1.
pub const XT: Mat2 = Mat2::new(-1, 0, 0, 1);

impl Mat2 {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn det(&self) -> Result<i64, Gl2Error> {
        let ad = self.a.checked_mul(self.d).ok_or(Gl2Error::Overflow)?;
        let bc = self.b.checked_mul(self.c).ok_or(Gl2Error::Overflow)?;
        ad.checked_sub(bc).ok_or(Gl2Error::Overflow)
    }

    pub fn trace(&self) -> Result<i64, Gl2Error> {
        self.a.checked_add(self.d).ok_or(Gl2Error::Overflow)
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), Ok(1) | Ok(-1))
    }

    pub fn neg(&self) -> Mat2 {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }

    /// Inverse of a unimodular matrix (adjugate divided by the determinant).
    pub fn inverse(&self) -> Result<Mat2, Gl2Error> {
        match self.det()? {
            1 => Ok(Mat2::new(self.d, -self.b, -self.c, self.a)),
            -1 => Ok(Mat2::new(-self.d, self.b, self.c, -self.a)),
            d => Err(Gl2Error::NotUnimodular(d)),
        }
    }

    pub fn pow(&self, n: u32) -> Result<Mat2, Gl2Error> {
        let mut acc = I;
        for _ in 0..n {
            acc = mat_mul(&acc, self)?;
        }
        Ok(acc)
    }

    /// Parses the CLI text format `a,b;c,d`.
    pub fn parse(s: &str) -> Result<Mat2, Gl2Error> {
        let err = || Gl2Error::Parse(s.to_string());
        let mut rows = s.split(';');
        let r1 = rows.next().ok_or_else(err)?;
        let r2 = rows.next().ok_or_else(err)?;
        if rows.next().is_some() {
            return Err(err());
        }
        let parse_row = |r: &str| -> Result<(i64, i64), Gl2Error> {
            let mut it = r.split(',');
            let x = it.next().ok_or_else(err)?.trim().parse().map_err(|_| err())?;
            let y = it.next().ok_or_else(err)?.trim().parse().map_err(|_| err())?;
            if it.next().is_some() {
                return Err(err());
            }
            Ok((x, y))
        };
        let (a, b) = parse_row(r1)?;
        let (c, d) = parse_row(r2)?;
        Ok(Mat2::new(a, b, c, d))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

/// Exact product; overflow is reported, never wrapped.
pub fn mat_mul(l: &Mat2, r: &Mat2) -> Result<Mat2, Gl2Error> {
    let mul = |x: i64, y: i64| x.checked_mul(y).ok_or(Gl2Error::Overflow);
    let add = |x: i64, y: i64| x.checked_add(y).ok_or(Gl2Error::Overflow);
    Ok(Mat2::new(
        add(mul(l.a, r.a)?, mul(l.b, r.c)?)?,
        add(mul(l.a, r.b)?, mul(l.b, r.d)?)?,
        add(mul(l.c, r.a)?, mul(l.d, r.c)?)?,
        add(mul(l.c, r.b)?, mul(l.d, r.d)?)?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    Gl,
    Pgl,
}

/// Conjugacy class of a periodic element; `Infinite` collects everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassKind {
    Identity,
    MinusIdentity,
    X,
    Y,
    Y2,
    T,
    Xt,
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    pub group: Group,
    pub class: ClassKind,
    pub order: Order,
}

impl ClassLabel {
    fn gl(class: ClassKind, order: u32) -> Self {
        ClassLabel { group: Group::Gl, class, order: Order::Finite(order) }
    }

    fn pgl(class: ClassKind, order: u32) -> Self {
        ClassLabel { group: Group::Pgl, class, order: Order::Finite(order) }
    }

    fn infinite(group: Group) -> Self {
        ClassLabel { group, class: ClassKind::Infinite, order: Order::Infinite }
    }

    pub fn is_periodic(&self) -> bool {
        self.order != Order::Infinite
    }

    pub fn finite_order(&self) -> Option<u32> {
        match self.order {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match (self.group, self.class) {
            (_, ClassKind::Identity) => "I",
            (_, ClassKind::MinusIdentity) => "-I",
            (Group::Gl, ClassKind::X) => "X",
            (Group::Gl, ClassKind::Y) => "Y",
            (Group::Gl, ClassKind::Y2) => "Y2",
            (Group::Gl, ClassKind::T) => "T",
            (Group::Gl, ClassKind::Xt) => "XT",
            (Group::Pgl, ClassKind::X) => "x",
            (Group::Pgl, ClassKind::Y) | (Group::Pgl, ClassKind::Y2) => "y",
            (Group::Pgl, ClassKind::T) => "t",
            (Group::Pgl, ClassKind::Xt) => "xt",
            (_, ClassKind::Infinite) => "infinite",
        };
        f.write_str(name)
    }
}

/// GL2(Z)-conjugacy class of `m`.
///
/// `+-I` are handled first so the degenerate trace -+2 cases never reach the
/// trace tests. A determinant-(-1) involution is in the XT class exactly when
/// its off-diagonal entries are even (it then lies in the principal congruence
/// subgroup of level 2), otherwise in the T class.
pub fn classify_gl(m: &Mat2) -> Result<ClassLabel, Gl2Error> {
    let det = m.det()?;
    if det != 1 && det != -1 {
        return Err(Gl2Error::NotUnimodular(det));
    }
    if *m == I {
        return Ok(ClassLabel::gl(ClassKind::Identity, 1));
    }
    if *m == NEG_I {
        return Ok(ClassLabel::gl(ClassKind::MinusIdentity, 2));
    }
    let tr = m.trace()?;
    let label = if det == 1 {
        match tr {
            -1 => ClassLabel::gl(ClassKind::Y2, 3),
            0 => ClassLabel::gl(ClassKind::X, 4),
            1 => ClassLabel::gl(ClassKind::Y, 6),
            _ => ClassLabel::infinite(Group::Gl),
        }
    } else if tr == 0 {
        if m.b % 2 == 0 && m.c % 2 == 0 {
            ClassLabel::gl(ClassKind::Xt, 2)
        } else {
            ClassLabel::gl(ClassKind::T, 2)
        }
    } else {
        ClassLabel::infinite(Group::Gl)
    };
    Ok(label)
}

/// PGL2(Z)-conjugacy class of the image +-m.
pub fn classify_pgl(m: &Mat2) -> Result<ClassLabel, Gl2Error> {
    let det = m.det()?;
    if det != 1 && det != -1 {
        return Err(Gl2Error::NotUnimodular(det));
    }
    if *m == I || *m == NEG_I {
        return Ok(ClassLabel::pgl(ClassKind::Identity, 1));
    }
    let tr = m.trace()?;
    let label = if det == 1 {
        match tr {
            0 => ClassLabel::pgl(ClassKind::X, 2),
            1 | -1 => ClassLabel::pgl(ClassKind::Y, 3),
            _ => ClassLabel::infinite(Group::Pgl),
        }
    } else if tr == 0 {
        if m.b % 2 == 0 && m.c % 2 == 0 {
            ClassLabel::pgl(ClassKind::Xt, 2)
        } else {
            ClassLabel::pgl(ClassKind::T, 2)
        }
    } else {
        ClassLabel::infinite(Group::Pgl)
    };
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_squares_and_relations() {
        // X^2 = Y^3, X^4 = T^2 = (XT)^2 = (YT)^2 = I
        let x2 = X.pow(2).unwrap();
        assert_eq!(x2, NEG_I);
        assert_eq!(Y.pow(3).unwrap(), x2);
        assert_eq!(X.pow(4).unwrap(), I);
        assert_eq!(T.pow(2).unwrap(), I);
        let xt = mat_mul(&X, &T).unwrap();
        assert_eq!(xt, XT);
        assert_eq!(xt.pow(2).unwrap(), I);
        let yt = mat_mul(&Y, &T).unwrap();
        assert_eq!(yt.pow(2).unwrap(), I);
    }

    #[test]
    fn mul_by_identity() {
        let a = Mat2::new(-2, -3, 1, 2);
        assert_eq!(mat_mul(&a, &I).unwrap(), a);
        assert_eq!(mat_mul(&I, &a).unwrap(), a);
    }

    #[test]
    fn classify_representatives() {
        let cases = [
            (I, ClassKind::Identity, 1),
            (NEG_I, ClassKind::MinusIdentity, 2),
            (T, ClassKind::T, 2),
            (XT, ClassKind::Xt, 2),
            (Y2, ClassKind::Y2, 3),
            (X, ClassKind::X, 4),
            (Y, ClassKind::Y, 6),
        ];
        for (m, class, ord) in cases {
            let label = classify_gl(&m).unwrap();
            assert_eq!(label.class, class, "{m}");
            assert_eq!(label.order, Order::Finite(ord), "{m}");
        }
    }

    #[test]
    fn classify_example_matrix_is_t() {
        let a = Mat2::new(-2, -3, 1, 2);
        let label = classify_gl(&a).unwrap();
        assert_eq!(label.class, ClassKind::T);
        assert_eq!(label.order, Order::Finite(2));
    }

    #[test]
    fn classify_parabolic_is_infinite() {
        let u = Mat2::new(1, 1, 0, 1);
        assert_eq!(classify_gl(&u).unwrap().class, ClassKind::Infinite);
        // cross-check: no power up to 12 reaches +-I
        let mut p = u;
        for _ in 0..12 {
            assert_ne!(p, I);
            assert_ne!(p, NEG_I);
            p = mat_mul(&p, &u).unwrap();
        }
    }

    #[test]
    fn classify_pgl_cases() {
        assert_eq!(classify_pgl(&Y).unwrap().class, ClassKind::Y);
        assert_eq!(classify_pgl(&Y).unwrap().order, Order::Finite(3));
        assert_eq!(classify_pgl(&NEG_I).unwrap().class, ClassKind::Identity);
        let xt = classify_pgl(&XT).unwrap();
        assert_eq!(xt.class, ClassKind::Xt);
        assert_eq!(xt.order, Order::Finite(2));
        assert_eq!(classify_pgl(&X).unwrap().class, ClassKind::X);
        assert_eq!(classify_pgl(&X).unwrap().order, Order::Finite(2));
        // classify_pgl(A) = classify_pgl(-A)
        for m in [X, Y, Y2, T, XT, Mat2::new(1, 1, 0, 1)] {
            assert_eq!(classify_pgl(&m).unwrap(), classify_pgl(&m.neg()).unwrap());
        }
    }

    #[test]
    fn pgl_involutions_distinguished_mod_two() {
        // x, t and xt all have det -1 or trace 0; the mod-2 rule separates t from xt
        assert_eq!(classify_pgl(&T).unwrap().class, ClassKind::T);
        let conj = Mat2::new(-2, -3, 1, 2); // conjugate of T with odd entries
        assert_eq!(classify_pgl(&conj).unwrap().class, ClassKind::T);
    }

    #[test]
    fn minimal_order_of_each_class() {
        // the class order is the least positive exponent reaching I (GL) resp. +-I (PGL)
        for m in [NEG_I, T, XT, Y2, X, Y] {
            let n = classify_gl(&m).unwrap().finite_order().unwrap();
            assert_eq!(m.pow(n).unwrap(), I);
            for k in 1..n {
                assert_ne!(m.pow(k).unwrap(), I);
            }
            let pn = classify_pgl(&m).unwrap().finite_order().unwrap();
            let p = m.pow(pn).unwrap();
            assert!(p == I || p == NEG_I);
            for k in 1..pn {
                let q = m.pow(k).unwrap();
                assert!(q != I && q != NEG_I);
            }
        }
    }

    #[test]
    fn characteristic_polynomial_of_periodic_classes() {
        // lambda^2 - tr*lambda + det must be the cyclotomic-type polynomial of the class order
        let expected = [
            (NEG_I, (-2, 1)), // (lambda+1)^2
            (T, (0, -1)),     // lambda^2 - 1
            (XT, (0, -1)),
            (Y2, (-1, 1)), // lambda^2 + lambda + 1, primitive cube roots
            (X, (0, 1)),   // lambda^2 + 1, order 4
            (Y, (1, 1)),   // lambda^2 - lambda + 1, primitive 6th roots
        ];
        for (m, (tr, det)) in expected {
            assert_eq!((m.trace().unwrap(), m.det().unwrap()), (tr, det));
        }
    }

    #[test]
    fn determinant_guard() {
        let m = Mat2::new(2, 0, 0, 2);
        assert_eq!(classify_gl(&m), Err(Gl2Error::NotUnimodular(4)));
        assert_eq!(classify_pgl(&m), Err(Gl2Error::NotUnimodular(4)));
    }

    #[test]
    fn overflow_is_reported() {
        let big = Mat2::new(i64::MAX, 0, 0, i64::MAX);
        assert_eq!(mat_mul(&big, &big), Err(Gl2Error::Overflow));
    }

    #[test]
    fn parse_matrix_text() {
        assert_eq!(Mat2::parse("-2,-3;1,2").unwrap(), Mat2::new(-2, -3, 1, 2));
        assert_eq!(Mat2::parse(" 0 , 1 ; 1 , 0 ").unwrap(), T);
        assert!(Mat2::parse("1,2,3;4").is_err());
        assert!(Mat2::parse("nope").is_err());
    }
}
