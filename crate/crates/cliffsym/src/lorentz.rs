//! Infinitesimal operators of finite-dimensional Lorentz group representations.

use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, Matrix, Relation};
use crate::scalar::{rat, CxRational, Rational, Scalar};
use crate::spinrep::{pauli_basis, SpinBasis};
use crate::symmetries::{matrix_c, matrix_e, matrix_w, partition_sets};
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::HashMap;

/// Pair (l₀, l₁) of a finite-dimensional representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RepParams {
    pub l0: Rational,
    pub l1: Rational,
}

fn is_half_integer(x: Rational) -> bool {
    (x * rat(2, 1)).is_integer()
}

impl RepParams {
    /// Requires 2l₀, 2l₁ integral and |l₁| − |l₀| a positive integer.
    pub fn new(l0: Rational, l1: Rational) -> Result<Self> {
        let gap = l1.abs() - l0.abs();
        if !is_half_integer(l0) || !is_half_integer(l1) || !gap.is_integer() || gap <= Rational::zero() {
            return Err(Error::InfiniteRep { l0: l0.to_string(), l1: l1.to_string() });
        }
        Ok(RepParams { l0, l1 })
    }

    /// Weights (l, m), l = |l₀|..|l₁|−1 ascending, m = −l..l ascending.
    pub fn weights(&self) -> Vec<(Rational, Rational)> {
        let one = Rational::from(1);
        let mut out = Vec::new();
        let mut l = self.l0.abs();
        while l < self.l1.abs() {
            let mut m = -l;
            while m <= l {
                out.push((l, m));
                m += one;
            }
            l += one;
        }
        out
    }

    pub fn dim(&self) -> usize {
        (self.l1 * self.l1 - self.l0 * self.l0).to_integer() as usize
    }
}

/// (2j+1)(2j′+1).
pub fn rep_dimension(j: Rational, jp: Rational) -> Result<usize> {
    if !is_half_integer(j) || !is_half_integer(jp) || j.is_negative() || jp.is_negative() {
        return Err(Error::InfiniteRep { l0: j.to_string(), l1: jp.to_string() });
    }
    let d = |x: Rational| (x * rat(2, 1) + rat(1, 1)).to_integer() as usize;
    Ok(d(j) * d(jp))
}

/// A₂₃, A₁₃, A₁₂ (rotations) and B₁, B₂, B₃ (boosts).
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSet<T: Scalar> {
    pub a23: Matrix<T>,
    pub a13: Matrix<T>,
    pub a12: Matrix<T>,
    pub b1: Matrix<T>,
    pub b2: Matrix<T>,
    pub b3: Matrix<T>,
}

pub const OPERATOR_NAMES: [&str; 6] = ["A23", "A13", "A12", "B1", "B2", "B3"];

/// Named residual of a commutation relation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Residual {
    pub relation: String,
    pub max_abs: f64,
    pub holds: bool,
}

fn residual<T: Scalar>(name: &str, lhs: Matrix<T>, rhs: Matrix<T>) -> Residual {
    let d = &lhs - &rhs;
    Residual { relation: name.to_string(), max_abs: d.max_abs(), holds: d.is_zero() }
}

impl<T: Scalar> OperatorSet<T> {
    pub fn all(&self) -> [&Matrix<T>; 6] {
        [&self.a23, &self.a13, &self.a12, &self.b1, &self.b2, &self.b3]
    }

    pub fn dim(&self) -> usize {
        self.a23.side()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> OperatorSet<U> {
        OperatorSet {
            a23: self.a23.map(f),
            a13: self.a13.map(f),
            a12: self.a12.map(f),
            b1: self.b1.map(f),
            b2: self.b2.map(f),
            b3: self.b3.map(f),
        }
    }

    /// Same rotations, boosts negated.
    pub fn flip_boosts(&self) -> Self {
        OperatorSet {
            b1: -self.b1.clone(),
            b2: -self.b2.clone(),
            b3: -self.b3.clone(),
            ..self.clone()
        }
    }

    /// The fifteen Lie relations of the Lorentz algebra.
    pub fn commut_residuals(&self) -> Vec<Residual> {
        let (a23, a13, a12, b1, b2, b3) = (&self.a23, &self.a13, &self.a12, &self.b1, &self.b2, &self.b3);
        let z = || Matrix::zeros(self.dim());
        vec![
            residual("[A23,A13]=A12", a23.commutator(a13), a12.clone()),
            residual("[A13,A12]=A23", a13.commutator(a12), a23.clone()),
            residual("[A12,A23]=A13", a12.commutator(a23), a13.clone()),
            residual("[B1,B2]=-A12", b1.commutator(b2), -a12.clone()),
            residual("[B2,B3]=A23", b2.commutator(b3), a23.clone()),
            residual("[B3,B1]=A13", b3.commutator(b1), a13.clone()),
            residual("[A23,B1]=0", a23.commutator(b1), z()),
            residual("[A13,B2]=0", a13.commutator(b2), z()),
            residual("[A12,B3]=0", a12.commutator(b3), z()),
            residual("[A23,B2]=-B3", a23.commutator(b2), -b3.clone()),
            residual("[A23,B3]=B2", a23.commutator(b3), b2.clone()),
            residual("[A13,B3]=-B1", a13.commutator(b3), -b1.clone()),
            residual("[A13,B1]=B3", a13.commutator(b1), b3.clone()),
            residual("[A12,B1]=B2", a12.commutator(b1), b2.clone()),
            residual("[A12,B2]=-B1", a12.commutator(b2), -b1.clone()),
        ]
    }

    pub fn satisfies_commut(&self) -> bool {
        self.commut_residuals().iter().all(|r| r.holds)
    }
}

/// Operators in exact arithmetic when every square root is rational, else in floating point.
#[derive(Debug, Clone, PartialEq)]
pub enum GnOperators {
    Exact(OperatorSet<CxRational>),
    Float(OperatorSet<Complex64>),
}

impl GnOperators {
    pub fn is_exact(&self) -> bool {
        matches!(self, GnOperators::Exact(_))
    }

    pub fn to_float(&self) -> OperatorSet<Complex64> {
        match self {
            GnOperators::Exact(o) => o.map(|x| x.to_c64()),
            GnOperators::Float(o) => o.clone(),
        }
    }

    pub fn exact(&self) -> Option<&OperatorSet<CxRational>> {
        match self {
            GnOperators::Exact(o) => Some(o),
            GnOperators::Float(_) => None,
        }
    }

    pub fn commut_residuals(&self) -> Vec<Residual> {
        match self {
            GnOperators::Exact(o) => o.commut_residuals(),
            GnOperators::Float(o) => o.commut_residuals(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            GnOperators::Exact(o) => o.dim(),
            GnOperators::Float(o) => o.dim(),
        }
    }
}

fn gn_build<T: Scalar>(params: &RepParams, sqrt: &dyn Fn(Rational) -> Option<T>) -> Option<OperatorSet<T>> {
    let (l0, l1) = (params.l0, params.l1);
    let weights = params.weights();
    let index: HashMap<(Rational, Rational), usize> = weights.iter().enumerate().map(|(k, &w)| (w, k)).collect();
    let d = weights.len();
    let mut mats: Vec<Matrix<T>> = vec![Matrix::zeros(d); 6];
    let cx = |c: CxRational| T::from_cx(&c);
    let r = |x: Rational| CxRational::real(x);
    let i = CxRational::i();
    let half = rat(1, 2);
    let one = Rational::from(1);

    let a_l = |l: Rational| -> T {
        if l.is_zero() {
            T::zero()
        } else {
            cx(&i * &r(l0 * l1 / (l * (l + one))))
        }
    };
    let c_l = |l: Rational| -> Option<T> {
        let den = rat(4, 1) * l * l - one;
        if l <= l0.abs() || den.is_zero() {
            return Some(T::zero());
        }
        let v = (l * l - l0 * l0) * (l * l - l1 * l1) / den;
        Some(cx(&i * &r(one / l)) * sqrt(v)?)
    };

    for (src, &(l, m)) in weights.iter().enumerate() {
        let mut put = |k: usize, tl: Rational, tm: Rational, val: &dyn Fn() -> Option<T>| -> Option<()> {
            if let Some(&t) = index.get(&(tl, tm)) {
                let cur = mats[k].get(t, src).clone();
                mats[k].set(t, src, cur + val()?);
            }
            Some(())
        };
        let hi = cx(&i * &r(-half));
        let h = cx(r(half));
        let sq = |x: Rational| sqrt(x);
        // rotations
        put(0, l, m + one, &|| Some(hi.clone() * sq((l + m + one) * (l - m))?))?;
        put(0, l, m - one, &|| Some(hi.clone() * sq((l + m) * (l - m + one))?))?;
        put(1, l, m - one, &|| Some(h.clone() * sq((l + m) * (l - m + one))?))?;
        put(1, l, m + one, &|| Some(-h.clone() * sq((l + m + one) * (l - m))?))?;
        put(2, l, m, &|| Some(cx(&i * &r(-m))))?;
        // boosts
        let ia = cx(&i * &r(half)) * a_l(l);
        let ha = h.clone() * a_l(l);
        let c0 = c_l(l);
        let c1 = c_l(l + one);
        let ic = |c: &Option<T>| Some(cx(&i * &r(half)) * c.clone()?);
        let hc = |c: &Option<T>| Some(h.clone() * c.clone()?);
        put(3, l - one, m + one, &|| Some(-ic(&c0)? * sq((l - m) * (l - m - one))?))?;
        put(3, l, m + one, &|| Some(ia.clone() * sq((l - m) * (l + m + one))?))?;
        put(3, l + one, m + one, &|| Some(-ic(&c1)? * sq((l + m + one) * (l + m + rat(2, 1)))?))?;
        put(3, l - one, m - one, &|| Some(ic(&c0)? * sq((l + m) * (l + m - one))?))?;
        put(3, l, m - one, &|| Some(ia.clone() * sq((l + m) * (l - m + one))?))?;
        put(3, l + one, m - one, &|| Some(ic(&c1)? * sq((l - m + one) * (l - m + rat(2, 1)))?))?;
        put(4, l - one, m - one, &|| Some(-hc(&c0)? * sq((l + m) * (l + m - one))?))?;
        put(4, l, m - one, &|| Some(-ha.clone() * sq((l + m) * (l - m + one))?))?;
        put(4, l + one, m - one, &|| Some(-hc(&c1)? * sq((l - m + one) * (l - m + rat(2, 1)))?))?;
        put(4, l - one, m + one, &|| Some(-hc(&c0)? * sq((l - m) * (l - m - one))?))?;
        put(4, l, m + one, &|| Some(ha.clone() * sq((l - m) * (l + m + one))?))?;
        put(4, l + one, m + one, &|| Some(-hc(&c1)? * sq((l + m + one) * (l + m + rat(2, 1)))?))?;
        let neg_i = cx(-i.clone());
        put(5, l - one, m, &|| Some(-(neg_i.clone() * c0.clone()? * sq(l * l - m * m)?)))?;
        put(5, l, m, &|| Some(-(cx(&i * &r(m)) * a_l(l))))?;
        put(5, l + one, m, &|| Some(-(cx(i.clone()) * c1.clone()? * sq((l + one) * (l + one) - m * m)?)))?;
    }
    let mut it = mats.into_iter();
    let mut next = || it.next().expect("six operators");
    Some(OperatorSet { a23: next(), a13: next(), a12: next(), b1: next(), b2: next(), b3: next() })
}

/// Gel'fand–Naimark operators over the weight basis.
pub fn gn_operators(params: &RepParams) -> GnOperators {
    match gn_build(params, &|x| CxRational::sqrt_rational(&x)) {
        Some(o) => GnOperators::Exact(o),
        None => GnOperators::Float(
            gn_build(params, &|x| Some(Complex64::new(*x.numer() as f64 / *x.denom() as f64, 0.0).sqrt()))
                .expect("floating square roots always exist"),
        ),
    }
}

fn half_of(m: &ExactMatrix, s: i128) -> ExactMatrix {
    m.scale(&CxRational::real(rat(s, 2)))
}

/// Comparison of the (½,3/2) operators with Pauli expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Identification {
    pub b1: bool,
    pub b2: bool,
    pub b3: bool,
    pub a23: bool,
    /// A₁₃ = −½σ₁σ₂ as stated.
    pub a13_stated: bool,
    /// A₁₃ = −½σ₁σ₃.
    pub a13_corrected: bool,
    pub a12: bool,
}

pub fn fundamental_identification() -> Identification {
    let ops = gn_operators(&RepParams::new(rat(1, 2), rat(3, 2)).expect("finite"));
    let o = ops.exact().expect("rational entries").clone();
    let [_, s1, s2, s3] = pauli_basis();
    Identification {
        b1: o.b1 == half_of(&s1, -1),
        b2: o.b2 == half_of(&s2, 1),
        b3: o.b3 == half_of(&s3, -1),
        a23: o.a23 == half_of(&(&s2 * &s3), -1),
        a13_stated: o.a13 == half_of(&(&s1 * &s2), -1),
        a13_corrected: o.a13 == half_of(&(&s1 * &s3), -1),
        a12: o.a12 == half_of(&(&s1 * &s2), 1),
    }
}

/// Operators from three generators, indices 1-based with c < a < b.
pub fn tensor_operators(basis: &SpinBasis, c: usize, a: usize, b: usize, conjugated: bool) -> Result<OperatorSet<CxRational>> {
    if !(1 <= c && c < a && a < b && b <= basis.n()) {
        return Err(Error::BadIndices);
    }
    let (ec, ea, eb) = (&basis.mats[c - 1], &basis.mats[a - 1], &basis.mats[b - 1]);
    let ops = OperatorSet {
        a23: half_of(&(ea * eb), -1),
        a13: half_of(&(ec * eb), -1),
        a12: half_of(&(ec * ea), 1),
        b1: half_of(ec, -1),
        b2: half_of(ea, 1),
        b3: half_of(eb, -1),
    };
    Ok(if conjugated { ops.flip_boosts() } else { ops })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum H3Convention {
    /// H₃ = iA₁₃.
    Stated,
    /// H₃ = iA₁₂.
    Corrected,
}

/// Raising and lowering operators.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderSet<T: Scalar> {
    pub hp: Matrix<T>,
    pub hm: Matrix<T>,
    pub h3: Matrix<T>,
    pub fp: Matrix<T>,
    pub fm: Matrix<T>,
    pub f3: Matrix<T>,
}

pub fn ladder<T: Scalar>(ops: &OperatorSet<T>, conv: H3Convention) -> LadderSet<T> {
    let i = T::i();
    let ia = |m: &Matrix<T>| m.scale(&i);
    LadderSet {
        hp: &ia(&ops.a23) - &ops.a13,
        hm: &ia(&ops.a23) + &ops.a13,
        h3: ia(match conv {
            H3Convention::Stated => &ops.a13,
            H3Convention::Corrected => &ops.a12,
        }),
        fp: &ia(&ops.b1) - &ops.b2,
        fm: &ia(&ops.b1) + &ops.b2,
        f3: ia(&ops.b3),
    }
}

impl<T: Scalar> LadderSet<T> {
    pub fn commut2_residuals(&self) -> Vec<Residual> {
        let (hp, hm, h3, fp, fm, f3) = (&self.hp, &self.hm, &self.h3, &self.fp, &self.fm, &self.f3);
        let z = || Matrix::zeros(hp.side());
        let two = T::one() + T::one();
        vec![
            residual("[H+,H3]=-H+", hp.commutator(h3), -hp.clone()),
            residual("[H-,H3]=H-", hm.commutator(h3), hm.clone()),
            residual("[H+,H-]=2H3", hp.commutator(hm), h3.scale(&two)),
            residual("[H+,F+]=0", hp.commutator(fp), z()),
            residual("[H-,F-]=0", hm.commutator(fm), z()),
            residual("[H3,F3]=0", h3.commutator(f3), z()),
            residual("[F+,F3]=-H+", fp.commutator(f3), -hp.clone()),
            residual("[F-,F3]=H-", fm.commutator(f3), hm.clone()),
            residual("[F+,F-]=-2H3", fp.commutator(fm), -h3.scale(&two)),
            residual("[H+,F3]=F+", hp.commutator(f3), fp.clone()),
            residual("[H-,F3]=-F-", hm.commutator(f3), -fm.clone()),
            residual("[H-,F+]=2F3", hm.commutator(fp), f3.scale(&two)),
            residual("[H+,F-]=-2F3", hp.commutator(fm), -f3.scale(&two)),
            residual("[F+,H3]=-F+", fp.commutator(h3), -fp.clone()),
            residual("[F-,H3]=F-", fm.commutator(h3), fm.clone()),
        ]
    }

    pub fn satisfies_commut2(&self) -> bool {
        self.commut2_residuals().iter().all(|r| r.holds)
    }
}

/// Row pattern of a symmetry matrix against (A23, A13, A12; B1, B2, B3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RowLabel {
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
}

impl RowLabel {
    pub const ALL: [RowLabel; 8] =
        [RowLabel::C2, RowLabel::C3, RowLabel::C4, RowLabel::C5, RowLabel::C6, RowLabel::C7, RowLabel::C8, RowLabel::C9];

    /// 'c' commute, 'a' anticommute.
    pub fn pattern(self) -> &'static str {
        match self {
            RowLabel::C2 => "cccaaa",
            RowLabel::C3 => "cccccc",
            RowLabel::C4 => "caacaa",
            RowLabel::C5 => "acacac",
            RowLabel::C6 => "aacaac",
            RowLabel::C7 => "acaaca",
            RowLabel::C8 => "aaccca",
            RowLabel::C9 => "caaacc",
        }
    }

    pub fn of_row(row: &[Relation; 6]) -> Option<RowLabel> {
        let s: String = row
            .iter()
            .map(|r| match r {
                Relation::Commutes => 'c',
                Relation::Anticommutes => 'a',
                Relation::Neither => 'n',
            })
            .collect();
        Self::ALL.into_iter().find(|l| l.pattern() == s)
    }
}

/// Relation families pairing an E-row with a C-row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    T1T2,
    T5T6,
    T9T10,
    T11T12,
    T13T14,
    T17T18,
    T19T20,
    T21T22,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::T1T2,
        Family::T5T6,
        Family::T9T10,
        Family::T11T12,
        Family::T13T14,
        Family::T17T18,
        Family::T19T20,
        Family::T21T22,
    ];

    pub fn rows(self) -> (RowLabel, RowLabel) {
        use RowLabel::*;
        match self {
            Family::T1T2 => (C2, C3),
            Family::T5T6 => (C3, C2),
            Family::T9T10 => (C4, C9),
            Family::T11T12 => (C9, C4),
            Family::T13T14 => (C8, C6),
            Family::T17T18 => (C5, C7),
            Family::T19T20 => (C7, C5),
            Family::T21T22 => (C6, C8),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::T1T2 => "T1&T2",
            Family::T5T6 => "T5&T6",
            Family::T9T10 => "T9&T10",
            Family::T11T12 => "T11&T12",
            Family::T13T14 => "T13&T14",
            Family::T17T18 => "T17&T18",
            Family::T19T20 => "T19&T20",
            Family::T21T22 => "T21&T22",
        }
    }

    /// Families whose printed form is not self-consistent.
    pub fn ambiguous(self) -> bool {
        matches!(self, Family::T5T6 | Family::T11T12)
    }

    pub fn from_rows(e: RowLabel, c: RowLabel) -> Option<Family> {
        Self::ALL.into_iter().find(|f| f.rows() == (e, c))
    }
}

/// Which of 𝓔ₐ, 𝓔_b, 𝓔_c are factors of E.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Membership {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl Membership {
    pub fn all_patterns() -> Vec<Membership> {
        (0..8).map(|k| Membership { a: k & 1 != 0, b: k & 2 != 0, c: k & 4 != 0 }).collect()
    }

    pub fn complement(self) -> Membership {
        Membership { a: !self.a, b: !self.b, c: !self.c }
    }
}

/// Row label predicted by the case analysis from the parity of m and the membership pattern.
pub fn predicted_row(m_odd: bool, pat: Membership) -> RowLabel {
    use RowLabel::*;
    let even = match (pat.a, pat.b, pat.c) {
        (true, true, true) => C2,
        (false, false, false) => C3,
        (true, true, false) => C4,
        (true, false, false) => C5,
        (true, false, true) => C6,
        (false, true, true) => C7,
        (false, true, false) => C8,
        (false, false, true) => C9,
    };
    if !m_odd {
        return even;
    }
    match even {
        C2 => C3,
        C3 => C2,
        C4 => C9,
        C5 => C7,
        C6 => C8,
        C7 => C5,
        C8 => C6,
        C9 => C4,
    }
}

pub fn predicted_family(m_odd: bool, pat: Membership) -> Option<Family> {
    Family::from_rows(predicted_row(m_odd, pat), predicted_row(m_odd, pat.complement()))
}

/// Relations of W, E, C with the six operators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationTable {
    pub w: [Relation; 6],
    pub e: [Relation; 6],
    pub c: [Relation; 6],
}

fn row(m: &ExactMatrix, ops: &OperatorSet<CxRational>) -> [Relation; 6] {
    ops.all().map(|o| m.relation(o))
}

impl RelationTable {
    pub fn compute(w: &ExactMatrix, e: &ExactMatrix, c: &ExactMatrix, ops: &OperatorSet<CxRational>) -> Self {
        RelationTable { w: row(w, ops), e: row(e, ops), c: row(c, ops) }
    }

    /// W commutes with the rotations and anticommutes with the boosts.
    pub fn w_row_ok(&self) -> bool {
        RowLabel::of_row(&self.w) == Some(RowLabel::C2)
    }

    pub fn family(&self) -> Option<Family> {
        Family::from_rows(RowLabel::of_row(&self.e)?, RowLabel::of_row(&self.c)?)
    }

    /// E and C both commute with A23, A13, A12.
    pub fn rotations_commute(&self) -> bool {
        self.e[..3].iter().chain(&self.c[..3]).all(|&r| r == Relation::Commutes)
    }

    pub fn to_text(&self) -> String {
        let line = |name: &str, r: &[Relation; 6]| {
            format!("{name}  {}", r.iter().map(|x| x.symbol().to_string()).collect::<Vec<_>>().join(" "))
        };
        format!(
            "   {}\n{}\n{}\n{}",
            OPERATOR_NAMES.join(" "),
            line("W", &self.w),
            line("E", &self.e),
            line("C", &self.c)
        )
    }
}

/// RelationTable for a symmetry set and operators built on the same basis.
pub fn symmetry_relations(ops: &OperatorSet<CxRational>, sym: &crate::symmetries::SymmetrySet) -> Result<RelationTable> {
    if ops.dim() != sym.w.side() {
        return Err(Error::ContextMismatch(format!("operators of dimension {}", ops.dim()), format!("symmetries of dimension {}", sym.w.side())));
    }
    Ok(RelationTable::compute(&sym.w, &sym.e, &sym.c, ops))
}

/// Generator layout of the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    /// Canonical basis, m = k symmetric generators.
    Canonical,
    /// 𝓔ₖ₊₁ replaced by σ₃^{⊗k}, m = k + 1.
    Shifted,
}

/// Basis of ℂ₂ₖ in the requested regime, symmetric generators first.
pub fn regime_basis(n: usize, regime: Regime) -> Result<SpinBasis> {
    if n % 2 == 1 || n < 2 {
        return Err(Error::NeedsEven(n));
    }
    let k = n / 2;
    let b = crate::spinrep::build_even_spinbasis(k);
    Ok(match regime {
        Regime::Canonical => b,
        Regime::Shifted => {
            let mut mats: Vec<ExactMatrix> = b.mats[..k].to_vec();
            mats.push(crate::spinrep::extend_odd(k));
            mats.extend_from_slice(&b.mats[k + 1..]);
            SpinBasis { context: b.context, mats }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepCase {
    pub n: usize,
    pub regime: Regime,
    pub m: usize,
    pub pattern: Membership,
    /// Generator indices (1-based, in the regime basis) playing c, a, b; None if unrealizable.
    pub roles: Option<[usize; 3]>,
    pub table: Option<RelationTable>,
    pub family: Option<Family>,
    pub predicted: Option<Family>,
    pub w_row_ok: bool,
    pub commut_ok: bool,
}

impl SweepCase {
    pub fn realized(&self) -> bool {
        self.roles.is_some()
    }

    /// True for unrealizable patterns; otherwise the computed family must equal the prediction.
    pub fn passes(&self) -> bool {
        !self.realized() || (self.family.is_some() && self.family == self.predicted && self.w_row_ok && self.commut_ok)
    }
}

/// One case of the relation sweep: place c, a, b at positions 1, 2, 3 with the requested
/// membership in E and build the tensor operators there.
pub fn sweep_case(n: usize, regime: Regime, pattern: Membership) -> Result<SweepCase> {
    let base = regime_basis(n, regime)?;
    let (sym, skew) = partition_sets(&base)?;
    let m = sym.len();
    let in_e = if m % 2 == 1 { sym } else { skew };
    let mut used: Vec<usize> = Vec::new();
    let mut pick = |want: bool| -> Option<usize> {
        let i = (0..n).find(|i| !used.contains(i) && in_e.contains(i) == want)?;
        used.push(i);
        Some(i)
    };
    let roles = (|| Some([pick(pattern.c)?, pick(pattern.a)?, pick(pattern.b)?]))();
    let predicted = predicted_family(m % 2 == 1, pattern);
    let mut case = SweepCase {
        n,
        regime,
        m,
        pattern,
        roles: None,
        table: None,
        family: None,
        predicted,
        w_row_ok: false,
        commut_ok: false,
    };
    let Some(roles) = roles else {
        return Ok(case);
    };
    let mut order: Vec<usize> = roles.to_vec();
    order.extend((0..n).filter(|i| !roles.contains(i)));
    let basis = SpinBasis { context: base.context, mats: order.iter().map(|&i| base.mats[i].clone()).collect() };
    let ops = tensor_operators(&basis, 1, 2, 3, false)?;
    let table = RelationTable::compute(&matrix_w(&basis)?, &matrix_e(&basis)?, &matrix_c(&basis)?, &ops);
    case.roles = Some(roles.map(|i| i + 1));
    case.family = table.family();
    case.w_row_ok = table.w_row_ok();
    case.commut_ok = ops.satisfies_commut();
    case.table = Some(table);
    Ok(case)
}

/// All regimes and membership patterns for each n, optionally in parallel.
pub fn relation_sweep(ns: &[usize], parallel: bool) -> Result<Vec<SweepCase>> {
    let jobs: Vec<(usize, Regime, Membership)> = ns
        .iter()
        .flat_map(|&n| {
            [Regime::Canonical, Regime::Shifted]
                .into_iter()
                .flat_map(move |r| Membership::all_patterns().into_iter().map(move |p| (n, r, p)))
        })
        .collect();
    if parallel {
        use rayon::prelude::*;
        jobs.par_iter().map(|&(n, r, p)| sweep_case(n, r, p)).collect()
    } else {
        jobs.iter().map(|&(n, r, p)| sweep_case(n, r, p)).collect()
    }
}

/// ℂ₂: W = σ₁σ₂ against the (½,3/2) operators.
pub fn n2_anomaly() -> RelationTable {
    let b = crate::spinrep::spinbasis(2).expect("n = 2");
    let ops = gn_operators(&RepParams::new(rat(1, 2), rat(3, 2)).expect("finite")).exact().expect("rational").clone();
    RelationTable::compute(
        &matrix_w(&b).expect("even"),
        &matrix_e(&b).expect("even"),
        &matrix_c(&b).expect("even"),
        &ops,
    )
}

pub fn float_ops(ops: &OperatorSet<CxRational>) -> OperatorSet<Complex64> {
    ops.map(|x| x.to_c64())
}

pub type FloatOperatorSet = OperatorSet<Complex64>;
