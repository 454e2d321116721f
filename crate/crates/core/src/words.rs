//! Normal forms for the free heap and the free Abelian heap on an alphabet.
//!
//! Symbols are dense `u32` indices into an [`Alphabet`]; words never carry
//! names, so they compare and hash cheaply.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::traits::Heap;

pub type Sym = u32;
pub type Letters = SmallVec<[Sym; 16]>;

/// Ordered set of distinct generator names.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(|c| c.is_whitespace() || "[],⟨⟩⟦⟧".contains(c)) {
                return Err(Error::Parse(format!("invalid symbol `{s}`")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::Parse(format!("duplicate symbol `{s}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// `a, b, c, …` (then `x26, x27, …`).
    pub fn latin(n: usize) -> Self {
        let symbols = (0..n)
            .map(|i| match u8::try_from(i) {
                Ok(k) if k < 26 => char::from(b'a' + k).to_string(),
                _ => format!("x{i}"),
            })
            .collect();
        Alphabet { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, s: Sym) -> &str {
        &self.symbols[s as usize]
    }

    pub fn sym(&self, name: &str) -> Result<Sym> {
        self.symbols
            .iter()
            .position(|x| x == name)
            .map(|i| i as Sym)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// Parses whitespace-separated symbols.
    pub fn parse_letters(&self, text: &str) -> Result<Letters> {
        text.split_whitespace().map(|t| self.sym(t)).collect()
    }

    pub fn render(&self, letters: &[Sym]) -> String {
        letters.iter().map(|&s| self.name(s)).collect::<Vec<_>>().join(" ")
    }
}

/// An element of the free heap: an odd-length word with no equal neighbours.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    letters: Letters,
}

impl ReducedWord {
    pub fn letter(s: Sym) -> Self {
        ReducedWord {
            letters: SmallVec::from_slice(&[s]),
        }
    }

    pub fn letters(&self) -> &[Sym] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        ReducedWord { letters }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        alphabet.render(&self.letters)
    }

}

/// Pushes `s` onto a reduced stack, cancelling an equal top letter.
#[inline]
pub(crate) fn push_pruned(stack: &mut Letters, s: Sym) {
    if stack.last() == Some(&s) {
        stack.pop();
    } else {
        stack.push(s);
    }
}

/// Deletes adjacent equal pairs until none remain.
pub fn prune(letters: &[Sym]) -> Result<ReducedWord> {
    if letters.len() % 2 == 0 {
        return Err(Error::EvenLength(letters.len()));
    }
    let mut stack = Letters::new();
    for &s in letters {
        push_pruned(&mut stack, s);
    }
    Ok(ReducedWord { letters: stack })
}

/// `[u, v, w]` in the free heap: prune `u · reverse(v) · w`.
pub fn free_heap_op(u: &ReducedWord, v: &ReducedWord, w: &ReducedWord) -> ReducedWord {
    let mut stack = u.letters.clone();
    for &s in v.letters.iter().rev() {
        push_pruned(&mut stack, s);
    }
    for &s in &w.letters {
        push_pruned(&mut stack, s);
    }
    ReducedWord { letters: stack }
}

/// The free heap on an alphabet, as a [`Heap`] over reduced words.
#[derive(Clone, Debug)]
pub struct FreeHeap {
    pub alphabet: Alphabet,
}

impl Heap for FreeHeap {
    type Elem = ReducedWord;

    fn bracket(&self, a: &ReducedWord, b: &ReducedWord, c: &ReducedWord) -> ReducedWord {
        free_heap_op(a, b, c)
    }

    fn contains(&self, x: &ReducedWord) -> bool {
        x.len() % 2 == 1
            && x.letters.iter().all(|&s| (s as usize) < self.alphabet.len())
            && x.letters.windows(2).all(|p| p[0] != p[1])
    }

    fn is_abelian(&self) -> bool {
        self.alphabet.len() <= 2
    }
}

/// Element of a free group: freely reduced `(symbol, ±1)` factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeGroupWord {
    factors: SmallVec<[(Sym, i8); 16]>,
}

impl FreeGroupWord {
    pub fn neutral() -> Self {
        Self::default()
    }

    /// Freely reduces an arbitrary factor list. Exponents must be `±1`.
    pub fn from_factors(factors: impl IntoIterator<Item = (Sym, i8)>) -> Self {
        let mut out = Self::default();
        for f in factors {
            assert!(f.1 == 1 || f.1 == -1, "exponent must be ±1");
            out.push(f);
        }
        out
    }

    fn push(&mut self, (s, e): (Sym, i8)) {
        if self.factors.last() == Some(&(s, -e)) {
            self.factors.pop();
        } else {
            self.factors.push((s, e));
        }
    }

    pub fn factors(&self) -> &[(Sym, i8)] {
        &self.factors
    }

    pub fn is_neutral(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut out = self.clone();
        for &f in &other.factors {
            out.push(f);
        }
        out
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord {
            factors: self.factors.iter().rev().map(|&(s, e)| (s, -e)).collect(),
        }
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.factors.is_empty() {
            return "e".into();
        }
        self.factors
            .iter()
            .map(|&(s, e)| {
                if e > 0 {
                    alphabet.name(s).to_string()
                } else {
                    format!("{}^-1", alphabet.name(s))
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `x₁ x₂⁻¹ x₃ ⋯ x_{2k+1}` in the free group on the alphabet minus `basepoint`,
/// with the basepoint sent to the neutral element.
pub fn to_free_group(w: &ReducedWord, basepoint: Sym) -> FreeGroupWord {
    let mut out = FreeGroupWord::neutral();
    for (i, &s) in w.letters.iter().enumerate() {
        if s != basepoint {
            out.push((s, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    out
}

/// Inverse of [`to_free_group`]: basepoint letters fill the sign slots that
/// the factors do not occupy.
pub fn from_free_group(g: &FreeGroupWord, basepoint: Sym) -> Result<ReducedWord> {
    if let Some(&(s, _)) = g.factors.iter().find(|f| f.0 == basepoint) {
        return Err(Error::Mismatch(format!("factor {s} equals the basepoint")));
    }
    let mut letters = Letters::new();
    for &(s, e) in &g.factors {
        let slot_positive = letters.len() % 2 == 0;
        if slot_positive != (e > 0) {
            letters.push(basepoint);
        }
        letters.push(s);
    }
    if letters.len() % 2 == 0 {
        letters.push(basepoint);
    }
    Ok(ReducedWord { letters })
}

/// An element of the free Abelian heap as a coefficient map summing to 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SymmetricWord {
    coeffs: BTreeMap<Sym, i64>,
}

impl SymmetricWord {
    pub fn letter(s: Sym) -> Self {
        SymmetricWord {
            coeffs: BTreeMap::from([(s, 1)]),
        }
    }

    /// Accepts a coefficient map if it sums to 1; zero entries are dropped.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (Sym, i64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (s, c) in coeffs {
            *map.entry(s).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        let total: i64 = map.values().sum();
        if total != 1 {
            return Err(Error::Parse(format!("coefficients sum to {total}, expected 1")));
        }
        Ok(SymmetricWord { coeffs: map })
    }

    pub fn coeffs(&self) -> &BTreeMap<Sym, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, s: Sym) -> i64 {
        self.coeffs.get(&s).copied().unwrap_or(0)
    }

    /// A shortest word in the class: positive letters (in symbol order, with
    /// multiplicity) interleaved with negative ones.
    pub fn representative(&self) -> Letters {
        let expand = |sign: i64| -> Vec<Sym> {
            self.coeffs
                .iter()
                .filter(|(_, &c)| c.signum() == sign)
                .flat_map(|(&s, &c)| std::iter::repeat(s).take(c.unsigned_abs() as usize))
                .collect()
        };
        let pos = expand(1);
        let neg = expand(-1);
        let mut out = Letters::new();
        for (i, &p) in pos.iter().enumerate() {
            out.push(p);
            if let Some(&n) = neg.get(i) {
                out.push(n);
            }
        }
        out
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        alphabet.render(&self.representative())
    }

    pub fn to_named(&self, alphabet: &Alphabet) -> BTreeMap<String, i64> {
        self.coeffs
            .iter()
            .map(|(&s, &c)| (alphabet.name(s).to_string(), c))
            .collect()
    }

    pub fn from_named(alphabet: &Alphabet, named: &BTreeMap<String, i64>) -> Result<Self> {
        let coeffs = named
            .iter()
            .map(|(k, &c)| alphabet.sym(k).map(|s| (s, c)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(coeffs)
    }
}

/// `+1` per odd-position letter, `−1` per even-position letter.
pub fn abelian_normalize(letters: &[Sym]) -> Result<SymmetricWord> {
    if letters.len() % 2 == 0 {
        return Err(Error::EvenLength(letters.len()));
    }
    let mut coeffs = BTreeMap::new();
    for (i, &s) in letters.iter().enumerate() {
        *coeffs.entry(s).or_insert(0) += if i % 2 == 0 { 1 } else { -1 };
    }
    coeffs.retain(|_, c| *c != 0);
    Ok(SymmetricWord { coeffs })
}

/// `u − v + w` on coefficient maps.
pub fn abelian_heap_op(u: &SymmetricWord, v: &SymmetricWord, w: &SymmetricWord) -> SymmetricWord {
    let mut coeffs = u.coeffs.clone();
    for (&s, &c) in &v.coeffs {
        *coeffs.entry(s).or_insert(0) -= c;
    }
    for (&s, &c) in &w.coeffs {
        *coeffs.entry(s).or_insert(0) += c;
    }
    coeffs.retain(|_, c| *c != 0);
    SymmetricWord { coeffs }
}

/// The free Abelian heap on an alphabet.
#[derive(Clone, Debug)]
pub struct FreeAbelianHeap {
    pub alphabet: Alphabet,
}

impl Heap for FreeAbelianHeap {
    type Elem = SymmetricWord;

    fn bracket(&self, a: &SymmetricWord, b: &SymmetricWord, c: &SymmetricWord) -> SymmetricWord {
        abelian_heap_op(a, b, c)
    }

    fn contains(&self, x: &SymmetricWord) -> bool {
        x.coeffs.values().sum::<i64>() == 1 && x.coeffs.keys().all(|&s| (s as usize) < self.alphabet.len())
    }

    fn is_abelian(&self) -> bool {
        true
    }
}

/// Left fold of a word's letters under `assignment` in `target`.
pub fn eval_letters<H: Heap>(
    letters: &[Sym],
    assignment: &HashMap<Sym, H::Elem>,
    target: &H,
) -> Result<H::Elem> {
    if letters.len() % 2 == 0 {
        return Err(Error::EvenLength(letters.len()));
    }
    let values = letters
        .iter()
        .map(|s| {
            assignment
                .get(s)
                .cloned()
                .ok_or_else(|| Error::UnknownSymbol(s.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(target.fold(&values).expect("odd length"))
}

/// The unique heap morphism out of the free heap extending `assignment`.
pub fn eval_word_in_heap<H: Heap>(
    w: &ReducedWord,
    assignment: &HashMap<Sym, H::Elem>,
    target: &H,
) -> Result<H::Elem> {
    eval_letters(w.letters(), assignment, target)
}

/// The unique heap morphism out of the free Abelian heap; `target` must be Abelian.
pub fn eval_symmetric_in_heap<H: Heap>(
    w: &SymmetricWord,
    assignment: &HashMap<Sym, H::Elem>,
    target: &H,
) -> Result<H::Elem> {
    if !target.is_abelian() {
        return Err(Error::NotAbelian);
    }
    eval_letters(&w.representative(), assignment, target)
}

/// Every reduced word of odd length up to `max_len` over `k` symbols,
/// shortest first, then lexicographic.
pub fn reduced_words(k: usize, max_len: usize) -> Vec<ReducedWord> {
    fn extend(k: usize, target: usize, cur: &mut Letters, out: &mut Vec<ReducedWord>) {
        if cur.len() == target {
            out.push(ReducedWord { letters: cur.clone() });
            return;
        }
        for s in 0..k as Sym {
            if cur.last() != Some(&s) {
                cur.push(s);
                extend(k, target, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    for len in (1..=max_len).step_by(2) {
        extend(k, len, &mut Letters::new(), &mut out);
    }
    out
}

/// Fixed-capacity reduced stack used by the exhaustive checker.
#[derive(Clone, Copy)]
struct Stack {
    len: usize,
    buf: [u8; 48],
}

impl Stack {
    const EMPTY: Stack = Stack { len: 0, buf: [0; 48] };

    #[inline]
    fn push(&mut self, s: u8) {
        if self.len > 0 && self.buf[self.len - 1] == s {
            self.len -= 1;
        } else {
            self.buf[self.len] = s;
            self.len += 1;
        }
    }

    #[inline]
    fn extend(&mut self, letters: &[u8]) {
        for &s in letters {
            self.push(s);
        }
    }

    fn as_slice(&self) -> &[u8] {
        &self.buf[..self.len]
    }
}

/// Checks associativity and both Mal'cev identities of [`free_heap_op`] on
/// every tuple of reduced words of length `≤ max_len` over `k` symbols.
///
/// The inner loops reuse reduced prefixes, so each quintuple costs a few
/// stack pushes; results are compared against independently bracketed
/// evaluations.
pub fn check_free_heap_axioms(k: usize, max_len: usize) -> crate::report::Report {
    use crate::report::{Finding, Report};
    use rayon::prelude::*;

    assert!(k <= 255 && max_len <= 9, "checker sized for short words");
    let words = reduced_words(k, max_len);
    let n = words.len();
    let small: Vec<Vec<u8>> = words
        .iter()
        .map(|w| w.letters().iter().map(|&s| s as u8).collect())
        .collect();
    let reversed: Vec<Vec<u8>> = small.iter().map(|w| w.iter().rev().copied().collect()).collect();
    let inner: Vec<Vec<u8>> = (0..n * n * n)
        .map(|i| {
            let (c, d, e) = (i / (n * n), (i / n) % n, i % n);
            free_heap_op(&words[c], &words[d], &words[e])
                .letters()
                .iter()
                .map(|&s| s as u8)
                .collect()
        })
        .collect();
    let render = |i: usize| words[i].letters().iter().map(|s| s.to_string()).collect::<String>();

    let mut report = Report::new(format!("free heap axioms, {n} words"));
    for a in 0..n {
        for b in 0..n {
            let abb = free_heap_op(&words[a], &words[b], &words[b]);
            if abb != words[a] {
                report.violation(Finding::new("malcev-right", vec![render(a), render(b)], "[a,b,b] != a"));
            }
            let bba = free_heap_op(&words[b], &words[b], &words[a]);
            if bba != words[a] {
                report.violation(Finding::new("malcev-left", vec![render(a), render(b)], "[b,b,a] != a"));
            }
        }
    }
    let failures: Vec<(usize, usize, usize, usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut found = Vec::new();
            for b in 0..n {
                let mut ab = Stack::EMPTY;
                ab.extend(&small[a]);
                ab.extend(&reversed[b]);
                for c in 0..n {
                    let mut abc = ab;
                    abc.extend(&small[c]);
                    for d in 0..n {
                        let mut abcd = abc;
                        abcd.extend(&reversed[d]);
                        let row = &inner[(c * n + d) * n..(c * n + d + 1) * n];
                        for (e, cde) in row.iter().enumerate() {
                            let mut lhs = abcd;
                            lhs.extend(&small[e]);
                            let mut rhs = ab;
                            rhs.extend(cde);
                            if lhs.as_slice() != rhs.as_slice() {
                                found.push((a, b, c, d, e));
                            }
                        }
                    }
                }
            }
            found
        })
        .collect();
    for (a, b, c, d, e) in failures {
        report.violation(Finding::new(
            "associativity",
            [a, b, c, d, e].iter().map(|&i| render(i)).collect(),
            "[[a,b,c],d,e] != [a,b,[c,d,e]]",
        ));
    }
    report.note(format!("{} quintuples checked", (n as u64).pow(5)));
    report
}

/// Parsed word expression: a bare word or a nested ternary bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordExpr {
    Word(Vec<String>),
    Bracket(Box<[WordExpr; 3]>),
}

impl WordExpr {
    /// Parses `"a b a"`, `"[u, v, w]"` (nesting allowed), `⟨a b c⟩` and `⟦u, v, w⟧`.
    pub fn parse(text: &str) -> Result<Self> {
        let tokens = tokenize(text);
        let mut pos = 0;
        let expr = parse_expr(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::Parse(format!("unexpected `{}`", tokens[pos])));
        }
        Ok(expr)
    }

    /// Symbols in order of first appearance.
    pub fn symbols(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<String>) {
        match self {
            WordExpr::Word(w) => {
                for s in w {
                    if !out.contains(s) {
                        out.push(s.clone());
                    }
                }
            }
            WordExpr::Bracket(b) => b.iter().for_each(|e| e.collect(out)),
        }
    }

    pub fn eval_free(&self, alphabet: &Alphabet) -> Result<ReducedWord> {
        match self {
            WordExpr::Word(w) => prune(&resolve(alphabet, w)?),
            WordExpr::Bracket(b) => Ok(free_heap_op(
                &b[0].eval_free(alphabet)?,
                &b[1].eval_free(alphabet)?,
                &b[2].eval_free(alphabet)?,
            )),
        }
    }

    pub fn eval_abelian(&self, alphabet: &Alphabet) -> Result<SymmetricWord> {
        match self {
            WordExpr::Word(w) => abelian_normalize(&resolve(alphabet, w)?),
            WordExpr::Bracket(b) => Ok(abelian_heap_op(
                &b[0].eval_abelian(alphabet)?,
                &b[1].eval_abelian(alphabet)?,
                &b[2].eval_abelian(alphabet)?,
            )),
        }
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordExpr::Word(w) => write!(f, "{}", w.join(" ")),
            WordExpr::Bracket(b) => write!(f, "[{}, {}, {}]", b[0], b[1], b[2]),
        }
    }
}

fn resolve(alphabet: &Alphabet, w: &[String]) -> Result<Letters> {
    w.iter().map(|s| alphabet.sym(s)).collect()
}

fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in text.chars() {
        let punct = match c {
            '[' | '⟦' => Some("["),
            ']' | '⟧' => Some("]"),
            '⟨' => Some("<"),
            '⟩' => Some(">"),
            ',' => Some(","),
            _ => None,
        };
        if punct.is_some() || c.is_whitespace() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            if let Some(p) = punct {
                out.push(p.to_string());
            }
        } else {
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn is_punct(t: &str) -> bool {
    matches!(t, "[" | "]" | "<" | ">" | ",")
}

fn parse_expr(tokens: &[String], pos: &mut usize) -> Result<WordExpr> {
    match tokens.get(*pos).map(String::as_str) {
        None => Err(Error::Parse("unexpected end of expression".into())),
        Some("[") => {
            *pos += 1;
            let a = parse_expr(tokens, pos)?;
            expect(tokens, pos, ",")?;
            let b = parse_expr(tokens, pos)?;
            expect(tokens, pos, ",")?;
            let c = parse_expr(tokens, pos)?;
            expect(tokens, pos, "]")?;
            Ok(WordExpr::Bracket(Box::new([a, b, c])))
        }
        Some("<") => {
            *pos += 1;
            let w = take_symbols(tokens, pos);
            expect(tokens, pos, ">")?;
            if w.is_empty() {
                return Err(Error::Parse("empty multi-bracket".into()));
            }
            Ok(WordExpr::Word(w))
        }
        Some(t) if is_punct(t) => Err(Error::Parse(format!("unexpected `{t}`"))),
        Some(_) => Ok(WordExpr::Word(take_symbols(tokens, pos))),
    }
}

fn take_symbols(tokens: &[String], pos: &mut usize) -> Vec<String> {
    let mut w = Vec::new();
    while let Some(t) = tokens.get(*pos).filter(|t| !is_punct(t)) {
        w.push(t.clone());
        *pos += 1;
    }
    w
}

fn expect(tokens: &[String], pos: &mut usize, want: &str) -> Result<()> {
    match tokens.get(*pos) {
        Some(t) if t == want => {
            *pos += 1;
            Ok(())
        }
        Some(t) => Err(Error::Parse(format!("expected `{want}`, found `{t}`"))),
        None => Err(Error::Parse(format!("expected `{want}` at end of expression"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::latin(3)
    }

    fn w(a: &Alphabet, s: &str) -> Letters {
        a.parse_letters(s).unwrap()
    }

    fn pr(a: &Alphabet, s: &str) -> String {
        prune(&w(a, s)).unwrap().render(a)
    }

    #[test]
    fn prune_examples() {
        let a = Alphabet::latin(4);
        assert_eq!(pr(&a, "a b b"), "a");
        assert_eq!(pr(&a, "a b a b b a b"), "a");
        assert_eq!(pr(&a, "a a c b d"), "c b d");
        assert!(matches!(prune(&w(&a, "a b")), Err(Error::EvenLength(2))));
    }

    #[test]
    fn free_op_examples() {
        let a = abc();
        let r = |s: &str| prune(&w(&a, s)).unwrap();
        assert_eq!(free_heap_op(&r("a"), &r("b a b"), &r("b a b")), r("a"));
        assert_eq!(free_heap_op(&r("a b a"), &r("a"), &r("b")), r("a"));
        assert_eq!(free_heap_op(&r("a"), &r("b"), &r("c")).render(&a), "a b c");
    }

    #[test]
    fn free_group_bridge() {
        let bin = Alphabet::new(["0", "1"]).unwrap();
        let r = prune(&w(&bin, "1 0 1")).unwrap();
        let g = to_free_group(&r, 0);
        assert_eq!(g.factors(), &[(1, 1), (1, 1)]);
        assert!(to_free_group(&ReducedWord::letter(0), 0).is_neutral());
        assert_eq!(from_free_group(&g, 0).unwrap(), r);
    }

    #[test]
    fn round_trip_length_seven() {
        for word in reduced_words(3, 7) {
            for base in 0..3 {
                let g = to_free_group(&word, base);
                assert_eq!(from_free_group(&g, base).unwrap(), word);
            }
        }
    }

    #[test]
    fn abelian_examples() {
        let a = Alphabet::latin(4);
        let n = abelian_normalize(&w(&a, "a b c a d")).unwrap();
        assert_eq!(n.to_named(&a), BTreeMap::from([("b".into(), -1), ("c".into(), 1), ("d".into(), 1)]));
        assert_eq!(n.render(&a), "c b d");
        let m = abelian_normalize(&w(&a, "a b a c d")).unwrap();
        assert_eq!(
            m.to_named(&a),
            BTreeMap::from([("a".into(), 2), ("b".into(), -1), ("c".into(), -1), ("d".into(), 1)])
        );
        assert_eq!(abelian_normalize(&w(&a, "a a a")).unwrap(), SymmetricWord::letter(0));
        let (x, y, z) = (SymmetricWord::letter(0), SymmetricWord::letter(1), SymmetricWord::letter(2));
        assert_eq!(abelian_heap_op(&x, &y, &z).render(&a), "a b c");
        assert_eq!(abelian_heap_op(&x, &x, &z), z);
    }

    #[test]
    fn eval_example() {
        use crate::algebra::{FiniteGroup, FiniteHeap};
        let h = FiniteHeap::from_group(&FiniteGroup::cyclic(4));
        let a = Alphabet::latin(2);
        let assignment = HashMap::from([(0, 1usize), (1, 3usize)]);
        let word = prune(&w(&a, "a b a")).unwrap();
        assert_eq!(eval_word_in_heap(&word, &assignment, &h).unwrap(), 3);
        let missing = HashMap::from([(0, 1usize)]);
        assert!(eval_word_in_heap(&word, &missing, &h).is_err());
    }

    #[test]
    fn expression_parsing() {
        let e = WordExpr::parse("[a b a, ⟨a⟩, ⟦b, c, c⟧]").unwrap();
        assert_eq!(e.to_string(), "[a b a, a, [b, c, c]]");
        let a = Alphabet::new(e.symbols()).unwrap();
        assert_eq!(e.eval_free(&a).unwrap().render(&a), "a");
        assert!(WordExpr::parse("[a, b]").is_err());
        assert!(WordExpr::parse("a ]").is_err());
    }

    #[test]
    fn exhaustive_axioms_small() {
        let r = check_free_heap_axioms(3, 3);
        assert!(r.is_pass(), "{}", r.summary());
    }

    #[test]
    fn word_counts() {
        assert_eq!(reduced_words(3, 5).len(), 63);
    }
}
