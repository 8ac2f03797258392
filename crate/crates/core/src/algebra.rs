//! Exact shuffle and stuffle products with rational coefficients.
//!
//! [`LinComb`] is a normalized formal sum (no zero coefficients stored).
//! The shuffle product acts on iterated-integral words, the stuffle
//! (harmonic) product on compositions; merged stuffle entries add their
//! exponents and combine bar flags by XOR, since `(-1)^k (-1)^k = 1`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::composition::{Composition, CompositionError, IndexEntry, Letter, Word};
use crate::numbers::binomial;

/// A finite formal sum with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<T: Ord> {
    terms: BTreeMap<T, BigRational>,
}

impl<T: Ord> Default for LinComb<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Ord> LinComb<T> {
    pub fn new() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn singleton(t: T) -> Self {
        let mut lc = Self::new();
        lc.add_term(t, BigRational::one());
        lc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &T) -> BigRational {
        self.terms.get(t).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, t: T, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self
    where
        T: Clone,
    {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, f: &BigRational) -> Self
    where
        T: Clone,
    {
        if f.is_zero() {
            return Self::new();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone(), c * f))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, &BigRational)> {
        self.terms.iter()
    }

    /// Sum of all coefficients (for shuffles, the interlacing count).
    pub fn total_mass(&self) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    /// Coefficient-preserving reindexing; fails if `f` fails anywhere.
    pub fn try_map<U: Ord, E>(
        &self,
        mut f: impl FnMut(&T) -> Result<U, E>,
    ) -> Result<LinComb<U>, E> {
        let mut out = LinComb::new();
        for (t, c) in &self.terms {
            out.add_term(f(t)?, c.clone());
        }
        Ok(out)
    }
}

fn format_coeff_term(coeff: &BigRational, term: &str, first: bool, out: &mut String) {
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if !mag.is_one() {
        if mag.denom().is_one() {
            out.push_str(&mag.numer().to_string());
        } else {
            out.push_str(&mag.to_string());
        }
        out.push('*');
    }
    out.push_str(term);
}

impl fmt::Display for LinComb<Composition> {
    /// Stable order: by weight, then lexicographically by entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut items: Vec<(&Composition, &BigRational)> = self.terms.iter().collect();
        items.sort_by_key(|(t, _)| (t.stats().weight, (*t).clone()));
        let mut out = String::new();
        for (i, (t, c)) in items.iter().enumerate() {
            let mut body = String::from("(");
            body.push_str(&t.to_string());
            body.push(')');
            format_coeff_term(c, &body, i == 0, &mut out);
        }
        write!(f, "{out}")
    }
}

impl fmt::Display for LinComb<Word> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut items: Vec<(&Word, &BigRational)> = self.terms.iter().collect();
        items.sort_by_key(|(t, _)| (t.len(), (*t).clone()));
        let mut out = String::new();
        for (i, (t, c)) in items.iter().enumerate() {
            format_coeff_term(c, &t.to_string(), i == 0, &mut out);
        }
        write!(f, "{out}")
    }
}

/// Recursive shuffle product:
/// `(a u) sh (b v) = a (u sh b v) + b (a u sh v)`; the empty word is the
/// unit and the coefficient mass is `C(|w1| + |w2|, |w1|)`.
pub fn shuffle(w1: &Word, w2: &Word) -> LinComb<Word> {
    fn rec(
        a: &[Letter],
        b: &[Letter],
        memo: &mut BTreeMap<(usize, usize), LinComb<Vec<Letter>>>,
    ) -> LinComb<Vec<Letter>> {
        if a.is_empty() {
            return LinComb::singleton(b.to_vec());
        }
        if b.is_empty() {
            return LinComb::singleton(a.to_vec());
        }
        let key = (a.len(), b.len());
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut out = LinComb::new();
        for (head, rest) in [(a[0], rec(&a[1..], b, memo)), (b[0], rec(a, &b[1..], memo))] {
            for (t, c) in rest.iter() {
                let mut w = Vec::with_capacity(t.len() + 1);
                w.push(head);
                w.extend_from_slice(t);
                out.add_term(w, c.clone());
            }
        }
        memo.insert(key, out.clone());
        out
    }
    let mut memo = BTreeMap::new();
    rec(w1.letters(), w2.letters(), &mut memo)
        .try_map(|ls| Ok::<_, core::convert::Infallible>(Word::new(ls.clone())))
        .unwrap_or_else(|e| match e {})
}

/// Harmonic (stuffle) product by recursion on the leading (innermost)
/// entries; merged entries add exponents and XOR bar flags.
pub fn stuffle(c1: &Composition, c2: &Composition) -> LinComb<Composition> {
    fn rec(a: &[IndexEntry], b: &[IndexEntry]) -> LinComb<Vec<IndexEntry>> {
        if a.is_empty() {
            return LinComb::singleton(b.to_vec());
        }
        if b.is_empty() {
            return LinComb::singleton(a.to_vec());
        }
        let merged = IndexEntry::new(
            a[0].exponent() + b[0].exponent(),
            a[0].is_barred() ^ b[0].is_barred(),
        );
        let mut out = LinComb::new();
        for (head, rest) in [
            (a[0], rec(&a[1..], b)),
            (b[0], rec(a, &b[1..])),
            (merged, rec(&a[1..], &b[1..])),
        ] {
            for (t, c) in rest.iter() {
                let mut v = Vec::with_capacity(t.len() + 1);
                v.push(head);
                v.extend_from_slice(t);
                out.add_term(v, c.clone());
            }
        }
        out
    }
    rec(c1.entries(), c2.entries())
        .try_map(|es| Composition::new(es.clone()))
        .expect("nonempty by construction")
}

/// Euler decomposition of `zeta(p+1) zeta(q+1)`:
/// `sum_{a1+a2 = p+q+1} [C(a2, p) + C(a2, q)] zeta(a1, a2+1)`.
pub fn euler_decomposition(p: u32, q: u32) -> LinComb<Composition> {
    assert!(p >= 1 && q >= 1);
    let w = p + q + 1;
    let mut out = LinComb::new();
    for a1 in 1..w {
        let a2 = w - a1;
        let coeff = binomial(a2 as u64, p as u64) + binomial(a2 as u64, q as u64);
        out.add_term(Composition::plain(&[a1, a2 + 1]), BigRational::from(coeff));
    }
    out
}

/// Decode a word combination termwise into compositions.
pub fn word_to_zeta(lc: &LinComb<Word>) -> Result<LinComb<Composition>, CompositionError> {
    lc.try_map(|w| w.decode())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn rational(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    #[test]
    fn shuffle_square_of_zeta2() {
        // YX sh YX = 2 YXYX + 4 YYXX, i.e. zeta(2)^2 = 2 zeta(2,2) + 4 zeta(1,3)
        let lc = shuffle(&word("YX"), &word("YX"));
        assert_eq!(lc.len(), 2);
        assert_eq!(lc.coeff(&word("YXYX")), rational(2));
        assert_eq!(lc.coeff(&word("YYXX")), rational(4));
        let z = word_to_zeta(&lc).unwrap();
        assert_eq!(z.coeff(&comp("2,2")), rational(2));
        assert_eq!(z.coeff(&comp("1,3")), rational(4));
    }

    #[test]
    fn shuffle_unit() {
        let w = word("YXX");
        let lc = shuffle(&w, &Word::empty());
        assert_eq!(lc, LinComb::singleton(w.clone()));
        let lc = shuffle(&Word::empty(), &w);
        assert_eq!(lc, LinComb::singleton(w));
    }

    /// Enumerate shuffles by brute force: choose the positions of `a`
    /// inside the merged word.
    fn shuffle_brute(a: &Word, b: &Word) -> LinComb<Word> {
        let (n, m) = (a.len(), b.len());
        let total = n + m;
        if n == 0 || m == 0 {
            return shuffle(a, b);
        }
        let mut out = LinComb::new();
        let mut idx: Vec<usize> = (0..n).collect();
        loop {
            let mut letters = alloc::vec![Letter::X; total];
            let mut bi = b.letters().iter();
            let mut ai = a.letters().iter();
            let mut next = idx.iter().peekable();
            for (pos, slot) in letters.iter_mut().enumerate() {
                if next.peek() == Some(&&pos) {
                    *slot = *ai.next().unwrap();
                    next.next();
                } else {
                    *slot = *bi.next().unwrap();
                }
            }
            out.add_term(Word::new(letters), BigRational::one());
            // advance to the next n-combination of {0..total}
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + total - n {
                    idx[i] += 1;
                    for j in i + 1..n {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn shuffle_matches_brute_force() {
        for (a, b) in [("YX", "YXX"), ("YX", "YX"), ("YYX", "YX"), ("Y", "XXY")] {
            let (a, b) = (word(a), word(b));
            assert_eq!(shuffle(&a, &b), shuffle_brute(&a, &b), "{a} sh {b}");
        }
    }

    #[test]
    fn stuffle_depth_one() {
        // zeta(r) zeta(s) = zeta(r,s) + zeta(s,r) + zeta(r+s)
        let lc = stuffle(&comp("2"), &comp("3"));
        assert_eq!(lc.coeff(&comp("2,3")), rational(1));
        assert_eq!(lc.coeff(&comp("3,2")), rational(1));
        assert_eq!(lc.coeff(&comp("5")), rational(1));
        assert_eq!(lc.len(), 3);
        // zeta(r-bar) zeta(s-bar): merged term loses the bar
        let lc = stuffle(&comp("2~"), &comp("3~"));
        assert_eq!(lc.coeff(&comp("2~,3~")), rational(1));
        assert_eq!(lc.coeff(&comp("3~,2~")), rational(1));
        assert_eq!(lc.coeff(&comp("5")), rational(1));
        // zeta(r) zeta(s-bar): merged term keeps one bar
        let lc = stuffle(&comp("2"), &comp("3~"));
        assert_eq!(lc.coeff(&comp("2,3~")), rational(1));
        assert_eq!(lc.coeff(&comp("3~,2")), rational(1));
        assert_eq!(lc.coeff(&comp("5~")), rational(1));
    }

    #[test]
    fn stuffle_results_admissible() {
        let pairs = [("2", "3"), ("1,2", "2"), ("2~", "1,3"), ("1~", "2~")];
        for (a, b) in pairs {
            for (t, _) in stuffle(&comp(a), &comp(b)).iter() {
                assert!(t.is_admissible(), "{t} from {a} * {b}");
            }
        }
    }

    #[test]
    fn euler_decomposition_examples() {
        // p = q = 1 agrees with the shuffle of YX with itself
        let ed = euler_decomposition(1, 1);
        let sh = word_to_zeta(&shuffle(&word("YX"), &word("YX"))).unwrap();
        assert_eq!(ed, sh);
        // symmetry in p and q
        assert_eq!(euler_decomposition(1, 3), euler_decomposition(3, 1));
    }

    #[test]
    fn display_order_and_format() {
        let mut lc = LinComb::new();
        lc.add_term(comp("2,2"), rational(2));
        lc.add_term(comp("1,3"), rational(4));
        assert_eq!(lc.to_string(), "4*(1,3) + 2*(2,2)");
        let st = stuffle(&comp("2"), &comp("3"));
        assert_eq!(st.to_string(), "(2,3) + (3,2) + (5)");
        let mut neg = LinComb::new();
        neg.add_term(comp("3"), rational(-1));
        neg.add_term(
            comp("1,2"),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        );
        assert_eq!(neg.to_string(), "1/2*(1,2) - (3)");
        // zero coefficients are never stored
        let mut z = LinComb::new();
        z.add_term(comp("2"), rational(5));
        z.add_term(comp("2"), rational(-5));
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    fn small_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(prop_oneof![Just(Letter::X), Just(Letter::Y)], 0..5)
            .prop_map(Word::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn prop_shuffle_mass(a in small_word(), b in small_word()) {
            let lc = shuffle(&a, &b);
            let expect = binomial((a.len() + b.len()) as u64, a.len() as u64);
            prop_assert_eq!(lc.total_mass(), BigRational::from(expect));
        }

        #[test]
        fn prop_shuffle_commutative(a in small_word(), b in small_word()) {
            prop_assert_eq!(shuffle(&a, &b), shuffle(&b, &a));
        }

        #[test]
        fn prop_shuffle_associative(a in small_word(), b in small_word(), c in small_word()) {
            // (a sh b) sh c = a sh (b sh c), extending bilinearly
            let left = {
                let mut acc: LinComb<Word> = LinComb::new();
                for (t, k) in shuffle(&a, &b).iter() {
                    acc = acc.add(&shuffle(t, &c).scale(k));
                }
                acc
            };
            let right = {
                let mut acc: LinComb<Word> = LinComb::new();
                for (t, k) in shuffle(&b, &c).iter() {
                    acc = acc.add(&shuffle(&a, t).scale(k));
                }
                acc
            };
            prop_assert_eq!(left, right);
        }

        #[test]
        fn prop_shuffle_of_admissible_decodes(
            p1 in proptest::collection::vec(1u32..4, 1..3),
            p2 in proptest::collection::vec(1u32..4, 1..3),
        ) {
            let fix = |mut v: alloc::vec::Vec<u32>| {
                if *v.last().unwrap() < 2 { *v.last_mut().unwrap() = 2; }
                Composition::plain(&v)
            };
            let (c1, c2) = (fix(p1), fix(p2));
            let lc = shuffle(&c1.encode_word().unwrap(), &c2.encode_word().unwrap());
            let decoded = word_to_zeta(&lc).unwrap();
            prop_assert!(!decoded.is_zero());
            for (t, _) in decoded.iter() {
                prop_assert!(t.is_admissible());
            }
        }
    }
}
