//! Words and endomorphisms of the free group on rho2, rho0 and of the
//! reflection group generated by the involutions r0, r1, r2, together with
//! the named automorphism atlas, composition, abelianization to 2x2
//! matrices, and the restriction/extension maps between the two groups.
//!
//! Conventions fixed here and relied on by the rest of the crate:
//! composition is left to right (`compose(e, f)` applies `e` first), and
//! the inner automorphism of `g` maps `w` to `g^-1 w g`.

use std::fmt;

use thiserror::Error;

use crate::genwords::{GenLetter, GenWord};
use crate::gl2::Mat2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeGroupError {
    #[error("image word has odd length; the map does not preserve the even subgroup")]
    OddImage,
    #[error("unknown letter {0:?} in word")]
    BadLetter(String),
}

/// Generator of the rank-2 free group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FGen {
    Rho2,
    Rho0,
}

/// Signed letter: a generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FLetter {
    pub gen: FGen,
    pub inv: bool,
}

impl FLetter {
    pub const RHO2: FLetter = FLetter { gen: FGen::Rho2, inv: false };
    pub const RHO2_INV: FLetter = FLetter { gen: FGen::Rho2, inv: true };
    pub const RHO0: FLetter = FLetter { gen: FGen::Rho0, inv: false };
    pub const RHO0_INV: FLetter = FLetter { gen: FGen::Rho0, inv: true };

    pub fn inverse(&self) -> FLetter {
        FLetter { gen: self.gen, inv: !self.inv }
    }

    fn cancels(&self, other: &FLetter) -> bool {
        self.gen == other.gen && self.inv != other.inv
    }
}

/// Freely reduced word in rho2, rho0. Text format: tokens over
/// `{a, a', b, b'}` with `a` = rho2 and `b` = rho0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FWord(Vec<FLetter>);

impl FWord {
    pub fn empty() -> FWord {
        FWord(Vec::new())
    }

    pub fn rho2() -> FWord {
        FWord(vec![FLetter::RHO2])
    }

    pub fn rho0() -> FWord {
        FWord(vec![FLetter::RHO0])
    }

    /// rho1 = rho0^-1 rho2^-1, from rho0 rho1 rho2 = 1.
    pub fn rho1() -> FWord {
        FWord(vec![FLetter::RHO0_INV, FLetter::RHO2_INV])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = FLetter>) -> FWord {
        let mut w = FWord::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: FLetter) {
        if self.0.last().is_some_and(|last| last.cancels(&l)) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[FLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FWord) -> FWord {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FWord {
        FWord(self.0.iter().rev().map(FLetter::inverse).collect())
    }

    /// Exponent sums (rho2, rho0) of the abelianized word.
    pub fn exponent_sums(&self) -> (i64, i64) {
        let mut e2 = 0;
        let mut e0 = 0;
        for l in &self.0 {
            let delta = if l.inv { -1 } else { 1 };
            match l.gen {
                FGen::Rho2 => e2 += delta,
                FGen::Rho0 => e0 += delta,
            }
        }
        (e2, e0)
    }

    pub fn parse(s: &str) -> Result<FWord, FreeGroupError> {
        let mut w = FWord::empty();
        for tok in s.split_whitespace() {
            let l = match tok {
                "a" => FLetter::RHO2,
                "a'" => FLetter::RHO2_INV,
                "b" => FLetter::RHO0,
                "b'" => FLetter::RHO0_INV,
                _ => return Err(FreeGroupError::BadLetter(tok.to_string())),
            };
            w.push(l);
        }
        Ok(w)
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            f.write_str(match (l.gen, l.inv) {
                (FGen::Rho2, false) => "a",
                (FGen::Rho2, true) => "a'",
                (FGen::Rho0, false) => "b",
                (FGen::Rho0, true) => "b'",
            })?;
            first = false;
        }
        Ok(())
    }
}

/// Endomorphism of the free group, given by the images of rho2 and rho0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endo {
    pub img2: FWord,
    pub img0: FWord,
}

impl Endo {
    pub fn identity() -> Endo {
        Endo { img2: FWord::rho2(), img0: FWord::rho0() }
    }

    /// alpha_X: rho2 -> rho0^-1, rho0 -> rho2 (matrix X, order 4).
    pub fn alpha_x() -> Endo {
        Endo {
            img2: FWord::from_letters([FLetter::RHO0_INV]),
            img0: FWord::rho2(),
        }
    }

    pub fn alpha_x_inv() -> Endo {
        Endo {
            img2: FWord::rho0(),
            img0: FWord::from_letters([FLetter::RHO2_INV]),
        }
    }

    /// alpha_Y: rho2 -> rho0^-1, rho0 -> rho2 rho0 (matrix Y; infinite
    /// order in Aut, order 6 in Out).
    pub fn alpha_y() -> Endo {
        Endo {
            img2: FWord::from_letters([FLetter::RHO0_INV]),
            img0: FWord::from_letters([FLetter::RHO2, FLetter::RHO0]),
        }
    }

    pub fn alpha_y_inv() -> Endo {
        Endo {
            img2: FWord::from_letters([FLetter::RHO0, FLetter::RHO2]),
            img0: FWord::from_letters([FLetter::RHO2_INV]),
        }
    }

    /// alpha_T: transposes rho2 and rho0 (matrix T, duality).
    pub fn alpha_t() -> Endo {
        Endo { img2: FWord::rho0(), img0: FWord::rho2() }
    }

    /// alpha_r = alpha_{-I}: inverts both generators (orientation reversal).
    pub fn alpha_r() -> Endo {
        Endo {
            img2: FWord::from_letters([FLetter::RHO2_INV]),
            img0: FWord::from_letters([FLetter::RHO0_INV]),
        }
    }

    /// alpha_XT: inverts rho2 and fixes rho0 (twisting operation).
    pub fn alpha_xt() -> Endo {
        Endo {
            img2: FWord::from_letters([FLetter::RHO2_INV]),
            img0: FWord::rho0(),
        }
    }

    /// alpha_{Y^2}: rho2 -> rho1, rho0 -> rho2; triality of exact order 3.
    pub fn alpha_y2() -> Endo {
        Endo { img2: FWord::rho1(), img0: FWord::rho2() }
    }

    pub fn alpha_y2_inv() -> Endo {
        Endo {
            img2: FWord::rho0(),
            img0: FWord::from_letters([FLetter::RHO0_INV, FLetter::RHO2_INV]),
        }
    }

    pub fn apply(&self, w: &FWord) -> FWord {
        let mut out = FWord::empty();
        for l in w.letters() {
            let img = match l.gen {
                FGen::Rho2 => &self.img2,
                FGen::Rho0 => &self.img0,
            };
            if l.inv {
                out = out.mul(&img.inverse());
            } else {
                out = out.mul(img);
            }
        }
        out
    }

    /// Abelianized action on row vectors in the ordered basis (rho2, rho0):
    /// each row is the exponent-sum vector of a generator image.
    pub fn abelianize(&self) -> Mat2 {
        let (a, b) = self.img2.exponent_sums();
        let (c, d) = self.img0.exponent_sums();
        Mat2::new(a, b, c, d)
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: &FWord| if w.is_empty() { "1".to_string() } else { w.to_string() };
        write!(f, "rho2 -> {}; rho0 -> {}", show(&self.img2), show(&self.img0))
    }
}

/// compose(e, f) applies e first, then f; abelianization is multiplicative
/// in the same order.
pub fn compose(e: &Endo, f: &Endo) -> Endo {
    Endo { img2: f.apply(&e.img2), img0: f.apply(&e.img0) }
}

/// Inner automorphism w -> g^-1 w g.
pub fn inner(g: &FWord) -> Endo {
    let ginv = g.inverse();
    Endo {
        img2: ginv.mul(&FWord::rho2()).mul(g),
        img0: ginv.mul(&FWord::rho0()).mul(g),
    }
}

/// Substitutes each letter of an operation word by its atlas automorphism,
/// composed in word order: the sign contributes alpha_r, X and Y^{+-1}
/// their atlas members, a trailing T contributes alpha_T. The result acts
/// as eval_word(w) on the abelianization.
pub fn endo_from_opword(w: &GenWord) -> Endo {
    let mut acc = if w.sign < 0 { Endo::alpha_r() } else { Endo::identity() };
    for letter in &w.body {
        let step = match letter {
            GenLetter::X => Endo::alpha_x(),
            GenLetter::Y { inv: false } => Endo::alpha_y(),
            GenLetter::Y { inv: true } => Endo::alpha_y_inv(),
        };
        acc = compose(&acc, &step);
    }
    if w.eta {
        acc = compose(&acc, &Endo::alpha_t());
    }
    acc
}

/// Exact inverse of `endo_from_opword(w)`: atlas inverses composed in
/// reversed word order.
pub fn inverse_endo_from_opword(w: &GenWord) -> Endo {
    let mut acc = if w.eta { Endo::alpha_t() } else { Endo::identity() };
    for letter in w.body.iter().rev() {
        let step = match letter {
            GenLetter::X => Endo::alpha_x_inv(),
            GenLetter::Y { inv: false } => Endo::alpha_y_inv(),
            GenLetter::Y { inv: true } => Endo::alpha_y(),
        };
        acc = compose(&acc, &step);
    }
    if w.sign < 0 {
        acc = compose(&acc, &Endo::alpha_r());
    }
    acc
}

// --- the reflection group side ------------------------------------------

/// Reduced word in the involutions r0, r1, r2: no two equal adjacent
/// letters. Text format: tokens `0`, `1`, `2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DWord(Vec<u8>);

impl DWord {
    pub fn empty() -> DWord {
        DWord(Vec::new())
    }

    pub fn gen(i: u8) -> DWord {
        assert!(i < 3);
        DWord(vec![i])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = u8>) -> DWord {
        let mut w = DWord::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: u8) {
        debug_assert!(l < 3);
        if self.0.last() == Some(&l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &DWord) -> DWord {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    /// Every letter is an involution, so the inverse is the reverse.
    pub fn inverse(&self) -> DWord {
        DWord(self.0.iter().rev().copied().collect())
    }

    pub fn parse(s: &str) -> Result<DWord, FreeGroupError> {
        let mut w = DWord::empty();
        for tok in s.split_whitespace() {
            let l = match tok {
                "0" => 0,
                "1" => 1,
                "2" => 2,
                _ => return Err(FreeGroupError::BadLetter(tok.to_string())),
            };
            w.push(l);
        }
        Ok(w)
    }

    /// Rewrites an even-length word into the free group via rho0 = r1 r2,
    /// rho1 = r2 r0, rho2 = r0 r1.
    pub fn to_even_subgroup(&self) -> Result<FWord, FreeGroupError> {
        if !self.0.len().is_multiple_of(2) {
            return Err(FreeGroupError::OddImage);
        }
        let mut out = FWord::empty();
        for pair in self.0.chunks_exact(2) {
            let seg: &[FLetter] = match (pair[0], pair[1]) {
                (0, 1) => &[FLetter::RHO2],
                (1, 0) => &[FLetter::RHO2_INV],
                (1, 2) => &[FLetter::RHO0],
                (2, 1) => &[FLetter::RHO0_INV],
                (2, 0) => &[FLetter::RHO0_INV, FLetter::RHO2_INV], // rho1
                (0, 2) => &[FLetter::RHO2, FLetter::RHO0],         // rho1^-1
                _ => unreachable!("reduced word has no equal adjacent letters"),
            };
            out = out.mul(&FWord::from_letters(seg.iter().copied()));
        }
        Ok(out)
    }
}

impl fmt::Display for DWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Endomorphism of the reflection group, given by the images of r0, r1, r2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DEndo {
    pub img: [DWord; 3],
}

impl DEndo {
    pub fn identity() -> DEndo {
        DEndo { img: [DWord::gen(0), DWord::gen(1), DWord::gen(2)] }
    }

    /// alpha_x: r0 -> r2, r1 -> r1, r2 -> r1 r0 r1.
    pub fn alpha_x() -> DEndo {
        DEndo {
            img: [DWord::gen(2), DWord::gen(1), DWord::from_letters([1, 0, 1])],
        }
    }

    pub fn alpha_x_inv() -> DEndo {
        DEndo {
            img: [DWord::from_letters([1, 2, 1]), DWord::gen(1), DWord::gen(0)],
        }
    }

    /// alpha_y: r0 -> r2 r1 r2, r1 -> r2, r2 -> r2 r0 r2.
    pub fn alpha_y() -> DEndo {
        DEndo {
            img: [
                DWord::from_letters([2, 1, 2]),
                DWord::gen(2),
                DWord::from_letters([2, 0, 2]),
            ],
        }
    }

    pub fn alpha_y_inv() -> DEndo {
        DEndo {
            img: [
                DWord::from_letters([1, 2, 1]),
                DWord::from_letters([1, 0, 1]),
                DWord::gen(1),
            ],
        }
    }

    /// alpha_t: r0 -> r1 r2 r1, r1 -> r1, r2 -> r1 r0 r1; an involution.
    pub fn alpha_t() -> DEndo {
        DEndo {
            img: [
                DWord::from_letters([1, 2, 1]),
                DWord::gen(1),
                DWord::from_letters([1, 0, 1]),
            ],
        }
    }

    /// alpha_xt: r0 -> r1 r0 r1, r1 -> r1, r2 -> r2; an involution.
    pub fn alpha_xt() -> DEndo {
        DEndo {
            img: [DWord::from_letters([1, 0, 1]), DWord::gen(1), DWord::gen(2)],
        }
    }

    /// The plain duality transposing r0 and r2 (fixing r1).
    pub fn alpha_02() -> DEndo {
        DEndo { img: [DWord::gen(2), DWord::gen(1), DWord::gen(0)] }
    }

    /// Generator permutation r_i -> r_{sigma(i)}.
    pub fn from_generator_permutation(sigma: [u8; 3]) -> DEndo {
        DEndo {
            img: [DWord::gen(sigma[0]), DWord::gen(sigma[1]), DWord::gen(sigma[2])],
        }
    }

    pub fn apply(&self, w: &DWord) -> DWord {
        let mut out = DWord::empty();
        for &l in w.letters() {
            out = out.mul(&self.img[l as usize]);
        }
        out
    }

    /// Restriction to the even subgroup: the induced endomorphism of the
    /// free group, img2 = image of r0 r1 and img0 = image of r1 r2.
    pub fn restrict(&self) -> Result<Endo, FreeGroupError> {
        let img2 = self.img[0].mul(&self.img[1]).to_even_subgroup()?;
        let img0 = self.img[1].mul(&self.img[2]).to_even_subgroup()?;
        Ok(Endo { img2, img0 })
    }
}

pub fn compose_d(e: &DEndo, f: &DEndo) -> DEndo {
    DEndo {
        img: [f.apply(&e.img[0]), f.apply(&e.img[1]), f.apply(&e.img[2])],
    }
}

/// Inner automorphism of the reflection group, w -> g^-1 w g.
pub fn inner_delta(g: &DWord) -> DEndo {
    let ginv = g.inverse();
    DEndo {
        img: [
            ginv.mul(&DWord::gen(0)).mul(g),
            ginv.mul(&DWord::gen(1)).mul(g),
            ginv.mul(&DWord::gen(2)).mul(g),
        ],
    }
}

/// Extension of a projective operation word to the reflection group:
/// atlas members composed in word order.
pub fn extend_named(w: &GenWord) -> DEndo {
    let mut acc = DEndo::identity();
    for letter in &w.body {
        let step = match letter {
            GenLetter::X => DEndo::alpha_x(),
            GenLetter::Y { inv: false } => DEndo::alpha_y(),
            GenLetter::Y { inv: true } => DEndo::alpha_y_inv(),
        };
        acc = compose_d(&acc, &step);
    }
    if w.eta {
        acc = compose_d(&acc, &DEndo::alpha_t());
    }
    acc
}

/// Exact inverse of `extend_named(w)`.
pub fn inverse_extend_named(w: &GenWord) -> DEndo {
    let mut acc = if w.eta { DEndo::alpha_t() } else { DEndo::identity() };
    for letter in w.body.iter().rev() {
        let step = match letter {
            GenLetter::X => DEndo::alpha_x_inv(),
            GenLetter::Y { inv: false } => DEndo::alpha_y_inv(),
            GenLetter::Y { inv: true } => DEndo::alpha_y(),
        };
        acc = compose_d(&acc, &step);
    }
    acc
}
