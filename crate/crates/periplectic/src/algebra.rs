//! The abstract presentation layer: generator symbols `s_i`, `e_i`, `y_j`,
//! rational-linear combinations of words in them, the defining relation set,
//! Jucys–Murphy elements, central elements, and derived identities.
//!
//! Words are stored flat. No normal form is imposed; two elements are equal
//! exactly when their (pruned) term maps coincide. Simplification happens
//! only by explicit expansion of products.

use crate::linalg::{ri, Rational};
use crate::{Error, Result};
use num::integer::binomial;
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;

/// Which of the three generator families a symbol belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    S,
    E,
    Y,
}

/// A single abstract generator: `s_i`, `e_i` (1 ≤ i ≤ n−1) or `y_j` (1 ≤ j ≤ n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSymbol {
    pub kind: GenKind,
    pub index: usize,
}

impl GeneratorSymbol {
    pub fn s(i: usize) -> Self {
        GeneratorSymbol {
            kind: GenKind::S,
            index: i,
        }
    }

    pub fn e(i: usize) -> Self {
        GeneratorSymbol {
            kind: GenKind::E,
            index: i,
        }
    }

    pub fn y(j: usize) -> Self {
        GeneratorSymbol {
            kind: GenKind::Y,
            index: j,
        }
    }

    /// Index-range check against a strand count.
    pub fn check(&self, n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("strand count {n} < 2")));
        }
        let ok = match self.kind {
            GenKind::S | GenKind::E => self.index >= 1 && self.index < n,
            GenKind::Y => self.index >= 1 && self.index <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "symbol {self} out of range for n = {n}"
            )))
        }
    }
}

impl std::fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let k = match self.kind {
            GenKind::S => 's',
            GenKind::E => 'e',
            GenKind::Y => 'y',
        };
        write!(f, "{k}{}", self.index)
    }
}

/// A word in the generators; the empty word is the unit.
pub type Word = Vec<GeneratorSymbol>;

/// A finite rational-linear combination of words, tied to a strand count `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeElement {
    n: usize,
    terms: BTreeMap<Word, Rational>,
}

impl FreeElement {
    pub fn zero(n: usize) -> Self {
        FreeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), Rational::one());
        FreeElement { n, terms }
    }

    /// Single generator as an element; validates the index range.
    pub fn generator(sym: GeneratorSymbol, n: usize) -> Result<Self> {
        sym.check(n)?;
        let mut terms = BTreeMap::new();
        terms.insert(vec![sym], Rational::one());
        Ok(FreeElement { n, terms })
    }

    /// Single word with unit coefficient; validates every symbol.
    pub fn from_word(word: Word, n: usize) -> Result<Self> {
        for sym in &word {
            sym.check(n)?;
        }
        let mut terms = BTreeMap::new();
        terms.insert(word, Rational::one());
        Ok(FreeElement { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    /// Largest word length with nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> FreeElement {
        if c.is_zero() {
            return FreeElement::zero(self.n);
        }
        FreeElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> FreeElement {
        let mut acc = FreeElement::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl std::ops::Add for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        assert_eq!(self.n, rhs.n, "mixed strand counts");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        assert_eq!(self.n, rhs.n, "mixed strand counts");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl std::ops::Neg for &FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Mul for &FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: &FreeElement) -> FreeElement {
        assert_eq!(self.n, rhs.n, "mixed strand counts");
        let mut out = FreeElement::zero(self.n);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                let mut w = Vec::with_capacity(wa.len() + wb.len());
                w.extend_from_slice(wa);
                w.extend_from_slice(wb);
                out.add_term(w, ca * cb);
            }
        }
        out
    }
}

impl std::fmt::Display for FreeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join("*")
            };
            if first {
                write!(f, "{} {}", crate::linalg::format_rational(c), word)?;
                first = false;
            } else {
                write!(f, " + {} {}", crate::linalg::format_rational(c), word)?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FreeElement(n={}, {})", self.n, self)
    }
}

// Internal panicking constructors; indices come from validated loops.
fn s(i: usize, n: usize) -> FreeElement {
    FreeElement::generator(GeneratorSymbol::s(i), n).expect("s index in range")
}

fn e(i: usize, n: usize) -> FreeElement {
    FreeElement::generator(GeneratorSymbol::e(i), n).expect("e index in range")
}

fn y(j: usize, n: usize) -> FreeElement {
    FreeElement::generator(GeneratorSymbol::y(j), n).expect("y index in range")
}

/// One relation instance: `element` is required to evaluate to zero.
#[derive(Clone, Debug)]
pub struct RelationEntry {
    pub tag: String,
    pub element: FreeElement,
}

/// A tagged list of relation instances for a fixed strand count.
#[derive(Clone, Debug)]
pub struct RelationList {
    pub n: usize,
    pub entries: Vec<RelationEntry>,
}

impl RelationList {
    fn new(n: usize, entries: Vec<RelationEntry>) -> Self {
        debug_assert!(
            {
                let mut tags: Vec<&str> = entries.iter().map(|e| e.tag.as_str()).collect();
                tags.sort_unstable();
                tags.windows(2).all(|w| w[0] != w[1])
            },
            "relation tags must be unique"
        );
        RelationList { n, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn tags(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.tag.as_str())
    }
}

/// Every instance of the defining relations for `n` strands, each expressed
/// as an element that must evaluate to the zero matrix.
pub fn relation_set(n: usize) -> Result<RelationList> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "relation_set needs n >= 2, got {n}"
        )));
    }
    let one = FreeElement::one(n);
    let mut entries = Vec::new();
    let mut push =
        |tag: String, elt: FreeElement| entries.push(RelationEntry { tag, element: elt });

    for i in 1..n {
        push(format!("VV1[{i}]"), &(&s(i, n) * &s(i, n)) - &one);
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                push(
                    format!("VV2(i)[s{i},e{j}]"),
                    &(&s(i, n) * &e(j, n)) - &(&e(j, n) * &s(i, n)),
                );
            }
        }
    }
    for i in 1..n {
        for j in (i + 2)..n {
            push(
                format!("VV2(ii)[e{i},e{j}]"),
                &(&e(i, n) * &e(j, n)) - &(&e(j, n) * &e(i, n)),
            );
        }
    }
    for i in 1..n {
        for j in 1..=n {
            if j != i && j != i + 1 {
                push(
                    format!("VV2(iii)[e{i},y{j}]"),
                    &(&e(i, n) * &y(j, n)) - &(&y(j, n) * &e(i, n)),
                );
            }
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            push(
                format!("VV2(iv)[y{i},y{j}]"),
                &(&y(i, n) * &y(j, n)) - &(&y(j, n) * &y(i, n)),
            );
        }
    }
    for i in 1..n {
        for j in (i + 2)..n {
            push(
                format!("VV3(i)[s{i},s{j}]"),
                &(&s(i, n) * &s(j, n)) - &(&s(j, n) * &s(i, n)),
            );
        }
    }
    for i in 1..=n.saturating_sub(2) {
        push(
            format!("VV3(ii)[{i}]"),
            &(&(&s(i, n) * &s(i + 1, n)) * &s(i, n)) - &(&(&s(i + 1, n) * &s(i, n)) * &s(i + 1, n)),
        );
    }
    for i in 1..n {
        for j in 1..=n {
            if j != i && j != i + 1 {
                push(
                    format!("VV3(iii)[s{i},y{j}]"),
                    &(&s(i, n) * &y(j, n)) - &(&y(j, n) * &s(i, n)),
                );
            }
        }
    }
    for i in 1..=n.saturating_sub(2) {
        push(
            format!("VV4(i)[{i}]"),
            &(&(&e(i + 1, n) * &e(i, n)) * &e(i + 1, n)) + &e(i + 1, n),
        );
        push(
            format!("VV4(ii)[{i}]"),
            &(&(&e(i, n) * &e(i + 1, n)) * &e(i, n)) + &e(i, n),
        );
    }
    for i in 1..n {
        push(format!("VV5(i)a[{i}]"), &(&e(i, n) * &s(i, n)) - &e(i, n));
        push(format!("VV5(i)b[{i}]"), &(&s(i, n) * &e(i, n)) + &e(i, n));
    }
    for i in 1..=n.saturating_sub(2) {
        push(
            format!("VV5(ii)[{i}]"),
            &(&(&s(i, n) * &e(i + 1, n)) * &e(i, n)) - &(&s(i + 1, n) * &e(i, n)),
        );
        push(
            format!("VV5(iii)[{i}]"),
            &(&(&s(i + 1, n) * &e(i, n)) * &e(i + 1, n)) + &(&s(i, n) * &e(i + 1, n)),
        );
        push(
            format!("VV5(iv)[{i}]"),
            &(&(&e(i + 1, n) * &e(i, n)) * &s(i + 1, n)) - &(&e(i + 1, n) * &s(i, n)),
        );
        push(
            format!("VV5(v)[{i}]"),
            &(&(&e(i, n) * &e(i + 1, n)) * &s(i, n)) + &(&e(i, n) * &s(i + 1, n)),
        );
    }
    for i in 1..n {
        push(format!("VV6[{i}]"), &e(i, n) * &e(i, n));
    }
    for i in 1..n {
        push(
            format!("VV7(i)[{i}]"),
            &(&(&(&s(i, n) * &y(i, n)) - &(&y(i + 1, n) * &s(i, n))) + &e(i, n)) + &one,
        );
        push(
            format!("VV7(ii)[{i}]"),
            &(&(&(&y(i, n) * &s(i, n)) - &(&s(i, n) * &y(i + 1, n))) - &e(i, n)) + &one,
        );
    }
    for i in 1..n {
        push(
            format!("VV8(i)[{i}]"),
            &(&(&e(i, n) * &y(i, n)) - &(&e(i, n) * &y(i + 1, n))) + &e(i, n),
        );
        push(
            format!("VV8(ii)[{i}]"),
            &(&(&y(i, n) * &e(i, n)) - &(&y(i + 1, n) * &e(i, n))) - &e(i, n),
        );
    }
    Ok(RelationList::new(n, entries))
}

/// The `j`-th Jucys–Murphy element, fully expanded in the `s`/`e` symbols:
/// `Y_1 = 0`, `Y_{j+1} = s_j Y_j s_j + s_j + e_j`.
pub fn jucys_murphy(j: usize, n: usize) -> Result<FreeElement> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("strand count {n} < 2")));
    }
    if j < 1 || j > n {
        return Err(Error::InvalidParameter(format!(
            "Jucys-Murphy index {j} out of range for n = {n}"
        )));
    }
    let mut cur = FreeElement::zero(n);
    for m in 1..j {
        cur = &(&(&s(m, n) * &cur) * &s(m, n)) + &(&s(m, n) + &e(m, n));
    }
    Ok(cur)
}

/// Factors `1 - (y_i - y_j)^2` over all pairs `1 ≤ i < j ≤ n`.
pub fn theta_tilde_factors(n: usize) -> Result<Vec<FreeElement>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "theta_tilde needs n >= 2, got {n}"
        )));
    }
    let one = FreeElement::one(n);
    let mut factors = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            let diff = &y(i, n) - &y(j, n);
            factors.push(&one - &diff.pow(2));
        }
    }
    Ok(factors)
}

/// The central element `∏_{i<j} (1 - (y_i - y_j)^2)`, fully expanded.
///
/// The term count grows like 5^(n choose 2); expand only at desk scale and
/// prefer [`theta_tilde_factors`] when the element is only going to be
/// evaluated in a representation.
pub fn theta_tilde(n: usize) -> Result<FreeElement> {
    let factors = theta_tilde_factors(n)?;
    Ok(factors.iter().fold(FreeElement::one(n), |acc, f| &acc * f))
}

/// Factors `1 - (Y_i - Y_j)^2` over `2 ≤ i < j ≤ n`, with each `Y` expanded
/// via [`jucys_murphy`] (so no `y` symbols appear).
pub fn theta_finite_factors(n: usize) -> Result<Vec<FreeElement>> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "theta_finite needs n >= 3, got {n}"
        )));
    }
    let one = FreeElement::one(n);
    let jm: Vec<FreeElement> = (1..=n).map(|j| jucys_murphy(j, n)).collect::<Result<_>>()?;
    let mut factors = Vec::new();
    for i in 2..=n {
        for j in (i + 1)..=n {
            let diff = &jm[i - 1] - &jm[j - 1];
            factors.push(&one - &diff.pow(2));
        }
    }
    Ok(factors)
}

/// The finite analogue `∏_{2≤i<j≤n} (1 - (Y_i - Y_j)^2)`, fully expanded.
pub fn theta_finite(n: usize) -> Result<FreeElement> {
    let factors = theta_finite_factors(n)?;
    Ok(factors.iter().fold(FreeElement::one(n), |acc, f| &acc * f))
}

/// The `m`-th elementary symmetric polynomial in `y_1, ..., y_n`.
pub fn elementary_symmetric(m: usize, n: usize) -> Result<FreeElement> {
    if n < 2 || m < 1 || m > n {
        return Err(Error::InvalidParameter(format!(
            "elementary symmetric degree {m} out of range for n = {n}"
        )));
    }
    use itertools::Itertools;
    let mut out = FreeElement::zero(n);
    for combo in (1..=n).combinations(m) {
        let word: Word = combo.into_iter().map(GeneratorSymbol::y).collect();
        out = &out + &FreeElement::from_word(word, n)?;
    }
    Ok(out)
}

fn binom(top: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(BigInt::from(top), BigInt::from(k)))
}

/// Identities that are consequences of the defining relations: the bead
/// disentangling family (with bead exponents capped at `bead_bound`), the
/// crossing-conjugacy identity, the nested cup-cap contraction, the beaded
/// loop `e_1 y_1^k e_1`, and the two redundant relation families.
pub fn derived_identity_set(n: usize, bead_bound: usize) -> Result<RelationList> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "derived_identity_set needs n >= 3, got {n}"
        )));
    }
    if bead_bound < 1 {
        return Err(Error::InvalidParameter("bead bound must be >= 1".into()));
    }
    let b_max = bead_bound;
    let mut entries = Vec::new();
    let mut push =
        |tag: String, elt: FreeElement| entries.push(RelationEntry { tag, element: elt });

    for i in 1..n {
        for b in 1..=b_max {
            let yb = y(i + 1, n).pow(b);
            push(
                format!("dis(i)[i={i},b={b}]"),
                &(&(&s(i, n) * &yb) * &e(i, n)) + &(&yb * &e(i, n)),
            );
            push(
                format!("dis(iii)[i={i},b={b}]"),
                &(&(&e(i, n) * &yb) * &s(i, n)) - &(&e(i, n) * &yb),
            );
        }
        for a in 1..=b_max {
            let ya = y(i, n).pow(a);
            push(
                format!("dis(ii)[i={i},a={a}]"),
                &(&(&s(i, n) * &ya) * &e(i, n)) + &(&ya * &e(i, n)),
            );
            push(
                format!("dis(iv)[i={i},a={a}]"),
                &(&(&e(i, n) * &ya) * &s(i, n)) - &(&e(i, n) * &ya),
            );
        }
        // The binomial forms; at a = b = 0 they degenerate to instances of
        // the defining relations, which is harmless.
        for a in 0..=b_max {
            for b in 0..=b_max {
                let ya = y(i, n).pow(a);
                let yb = y(i + 1, n).pow(b);
                let lhs_v = &(&(&(&e(i, n) * &ya) * &yb) * &s(i, n));
                let mut rhs_v = FreeElement::zero(n);
                for k in 0..=b {
                    rhs_v = &rhs_v + &(&e(i, n) * &y(i, n).pow(a + k)).scale(&binom(b, k));
                }
                push(format!("dis(v)[i={i},a={a},b={b}]"), lhs_v - &rhs_v);

                let lhs_vi = &(&(&(&s(i, n) * &ya) * &yb) * &e(i, n));
                let mut rhs_vi = FreeElement::zero(n);
                for k in 0..=a {
                    rhs_vi = &rhs_vi + &(&y(i + 1, n).pow(b + k) * &e(i, n)).scale(&binom(a, k));
                }
                push(format!("dis(vi)[i={i},a={a},b={b}]"), lhs_vi + &rhs_vi);
            }
        }
    }
    for k in 2..n {
        push(
            format!("conjugacy[k={k}]"),
            &(&(&s(k - 1, n) * &e(k, n)) * &s(k - 1, n)) - &(&(&s(k, n) * &e(k - 1, n)) * &s(k, n)),
        );
    }
    for i in 2..n {
        // e_i = (-1)^{i-1} e_i e_{i-1} ... e_1 ... e_{i-1} e_i
        let mut word: Word = Vec::with_capacity(2 * i - 1);
        for m in (1..=i).rev() {
            word.push(GeneratorSymbol::e(m));
        }
        for m in 2..=i {
            word.push(GeneratorSymbol::e(m));
        }
        let nested = FreeElement::from_word(word, n)?;
        let sign = if (i - 1) % 2 == 0 { ri(1) } else { ri(-1) };
        push(format!("nested[i={i}]"), &e(i, n) - &nested.scale(&sign));
    }
    for k in 1..=b_max {
        push(
            format!("bead-loop[k={k}]"),
            &(&e(1, n) * &y(1, n).pow(k)) * &e(1, n),
        );
    }
    for i in 1..=n.saturating_sub(2) {
        push(
            format!("VV5(ii)-derived[{i}]"),
            &(&(&s(i, n) * &e(i + 1, n)) * &e(i, n)) - &(&s(i + 1, n) * &e(i, n)),
        );
        push(
            format!("VV5(iv)-derived[{i}]"),
            &(&(&e(i + 1, n) * &e(i, n)) * &s(i + 1, n)) - &(&e(i + 1, n) * &s(i, n)),
        );
    }
    Ok(RelationList::new(n, entries))
}
