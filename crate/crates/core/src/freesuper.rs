//! The free associative superalgebra on generators `t1..ts`, its twisted
//! tensor square and the coproduct-like algebra map `r`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::Zero;

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::scalars::{BigRat, LaurentPoly, RatFunc};

/// Multiplicity of each generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<u32>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// All weights of total degree `<= cap`, by degree then lexicographically.
    pub fn all_up_to(rank: usize, cap: u32) -> Vec<Weight> {
        let mut out = Vec::new();
        for deg in 0..=cap {
            let mut cur = vec![0u32; rank];
            compositions(rank, deg, 0, &mut cur, &mut out);
        }
        out
    }

    /// Every monomial with this weight, in deglex order.
    pub fn monomials(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut left = self.0.clone();
        let mut cur = Vec::with_capacity(self.total() as usize);
        perms(&mut left, &mut cur, self.total() as usize, &mut out);
        out
    }

    pub fn render(&self) -> String {
        self.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn compositions(rank: usize, left: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Weight>) {
    if pos + 1 == rank {
        cur[pos] = left;
        out.push(Weight(cur.clone()));
        cur[pos] = 0;
        return;
    }
    if rank == 0 {
        return;
    }
    for k in (0..=left).rev() {
        cur[pos] = k;
        compositions(rank, left - k, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

fn perms(left: &mut [u32], cur: &mut Vec<u8>, n: usize, out: &mut Vec<Monomial>) {
    if cur.len() == n {
        out.push(Monomial(cur.clone()));
        return;
    }
    for i in 0..left.len() {
        if left[i] > 0 {
            left[i] -= 1;
            cur.push(i as u8);
            perms(left, cur, n, out);
            cur.pop();
            left[i] += 1;
        }
    }
}

/// A word in the generators (0-based letters). Ordered degree-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub Vec<u8>);

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_letters(l: &[u8]) -> Self {
        Monomial(l.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Monomial(v)
    }

    pub fn weight(&self, rank: usize) -> Weight {
        let mut w = Weight::zero(rank);
        for &l in &self.0 {
            w.0[l as usize] += 1;
        }
        w
    }

    pub fn parity(&self, datum: &CartanDatum) -> u8 {
        (self.0.iter().filter(|&&l| datum.is_odd(l as usize)).count() % 2) as u8
    }

    /// `t1*t2^2`; the empty word renders as `1`.
    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut k = 1;
            while i + k < self.0.len() && self.0[i + k] == l {
                k += 1;
            }
            parts.push(if k == 1 {
                format!("t{}", l + 1)
            } else {
                format!("t{}^{}", l + 1, k)
            });
            i += k;
        }
        parts.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn add_term<K: Ord>(map: &mut BTreeMap<K, RatFunc>, k: K, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Element of the free superalgebra with coefficients in Q(q).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeElem {
    terms: BTreeMap<Monomial, RatFunc>,
}

impl FreeElem {
    pub fn zero() -> Self {
        FreeElem::default()
    }

    pub fn one() -> Self {
        FreeElem::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        FreeElem::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: RatFunc) -> Self {
        let mut e = FreeElem::zero();
        e.add_term(m, c);
        e
    }

    pub fn monomial(m: Monomial) -> Self {
        FreeElem::term(m, RatFunc::one())
    }

    pub fn gen(i: usize) -> Self {
        FreeElem::monomial(Monomial(vec![i as u8]))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, RatFunc)>) -> Self {
        let mut e = FreeElem::zero();
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: RatFunc) {
        add_term(&mut self.terms, m, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar if the element has no letters.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Common weight of all terms; `Err(NonHomogeneous)` if they differ and
    /// `Ok(None)` for zero.
    pub fn weight(&self, rank: usize) -> Result<Option<Weight>> {
        let mut w: Option<Weight> = None;
        for m in self.terms.keys() {
            let mw = m.weight(rank);
            match &w {
                None => w = Some(mw),
                Some(x) if *x != mw => return Err(Error::NonHomogeneous),
                _ => {}
            }
        }
        Ok(w)
    }

    pub fn scale(&self, c: &RatFunc) -> FreeElem {
        if c.is_zero() {
            return FreeElem::zero();
        }
        FreeElem {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn add(&self, o: &FreeElem) -> FreeElem {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &FreeElem) -> FreeElem {
        self.add(&o.scale(&-RatFunc::one()))
    }

    /// Concatenation product.
    pub fn mul(&self, o: &FreeElem) -> FreeElem {
        let mut r = FreeElem::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                r.add_term(a.concat(b), x * y);
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> FreeElem {
        (0..n).fold(FreeElem::one(), |acc, _| acc.mul(self))
    }

    /// Value at `q = 1` of every coefficient.
    pub fn specialize_q1(&self) -> Result<BTreeMap<Monomial, BigRat>> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = c.specialize_q1()?;
            if !v.is_zero() {
                out.insert(m.clone(), v);
            }
        }
        Ok(out)
    }

    /// Renders in the syntax accepted by [`parse_elem`].
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let cr = c.render();
            let neg = cr.starts_with('-');
            let body = if neg { (-c).render() } else { cr };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let wrapped = if body.contains([' ', '/']) { format!("({body})") } else { body };
            match (wrapped.as_str(), m.is_empty()) {
                ("1", true) => s.push('1'),
                ("1", false) => s.push_str(&m.render()),
                (w, true) => s.push_str(w),
                (w, false) => {
                    s.push_str(w);
                    s.push('*');
                    s.push_str(&m.render());
                }
            }
        }
        s
    }
}

impl fmt::Display for FreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Element of `f' (x) f'`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElem {
    terms: BTreeMap<(Monomial, Monomial), RatFunc>,
}

impl TensorElem {
    pub fn zero() -> Self {
        TensorElem::default()
    }

    pub fn one() -> Self {
        TensorElem::pure(Monomial::one(), Monomial::one())
    }

    pub fn pure(a: Monomial, b: Monomial) -> Self {
        let mut t = TensorElem::zero();
        t.add_term(a, b, RatFunc::one());
        t
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: RatFunc) {
        add_term(&mut self.terms, (a, b), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &Monomial, b: &Monomial) -> RatFunc {
        self.terms.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &TensorElem) -> TensorElem {
        let mut r = self.clone();
        for ((a, b), c) in &o.terms {
            r.add_term(a.clone(), b.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &RatFunc) -> TensorElem {
        let mut r = TensorElem::zero();
        for ((a, b), x) in &self.terms {
            r.add_term(a.clone(), b.clone(), x * c);
        }
        r
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| format!("({})*{}(x){}", c.render(), a.render(), b.render()))
            .collect();
        parts.join(" + ")
    }
}

/// Element of `f' (x) f' (x) f'`.
pub type Triple = BTreeMap<(Monomial, Monomial, Monomial), RatFunc>;

/// `<nu, nu'> = sum d_i nu_i nu'_j a_ij`, the exponent of `q`.
pub fn weight_pairing(nu: &Weight, nu2: &Weight, datum: &CartanDatum) -> BigRat {
    let mut s = BigRat::zero();
    for (i, &x) in nu.0.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in nu2.0.iter().enumerate() {
            if y != 0 {
                s += datum.sym(i, j) * BigRat::from_integer((x as i64 * y as i64).into());
            }
        }
    }
    s
}

/// Free superalgebra over a fixed datum, with a memo table for `r`.
pub struct FreeSuper {
    datum: CartanDatum,
    unit: u32,
    /// `d_i a_ij` scaled by the unit, as integers.
    sym_v: Vec<Vec<i64>>,
    r_memo: RwLock<HashMap<Monomial, Arc<TensorElem>>>,
}

impl FreeSuper {
    pub fn new(datum: CartanDatum) -> Self {
        let unit = datum.unit_l();
        let s = datum.rank();
        let sym_v = (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| {
                        let x = datum.sym(i, j) * BigRat::from_integer(unit.into());
                        assert!(x.is_integer(), "symmetrized entries must be integral in v");
                        i64::try_from(x.to_integer()).expect("exponent overflow")
                    })
                    .collect()
            })
            .collect();
        FreeSuper {
            datum,
            unit,
            sym_v,
            r_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn parity(&self, m: &Monomial) -> u8 {
        m.parity(&self.datum)
    }

    pub fn weight(&self, m: &Monomial) -> Weight {
        m.weight(self.rank())
    }

    /// Exponent of `v` in `q^<|x|,|y|>`.
    pub fn pairing_v(&self, x: &Monomial, y: &Monomial) -> i64 {
        let mut e = 0;
        for &a in &x.0 {
            for &b in &y.0 {
                e += self.sym_v[a as usize][b as usize];
            }
        }
        e
    }

    /// `(-1)^(p(x2) p(y1)) q^<|x2|,|y1|>`, the cost of moving `y1` past `x2`.
    pub fn twist(&self, x2: &Monomial, y1: &Monomial) -> RatFunc {
        let sign = if self.parity(x2) * self.parity(y1) == 1 { -1 } else { 1 };
        RatFunc::from_laurent(LaurentPoly::monomial(
            self.pairing_v(x2, y1),
            self.unit,
            BigRat::from_integer(sign.into()),
        ))
    }

    pub fn twisted_mul(&self, x: &TensorElem, y: &TensorElem) -> TensorElem {
        let mut r = TensorElem::zero();
        for ((x1, x2), a) in &x.terms {
            for ((y1, y2), b) in &y.terms {
                let c = &(a * b) * &self.twist(x2, y1);
                r.add_term(x1.concat(y1), x2.concat(y2), c);
            }
        }
        r
    }

    /// `r` on a monomial, memoized. Built by appending letters on the right.
    pub fn r_monomial(&self, m: &Monomial) -> Arc<TensorElem> {
        if let Some(t) = self.r_memo.read().unwrap().get(m) {
            return t.clone();
        }
        let t = if m.is_empty() {
            TensorElem::one()
        } else {
            let (last, prefix) = m.0.split_last().unwrap();
            let base = self.r_monomial(&Monomial(prefix.to_vec()));
            let th = Monomial(vec![*last]);
            let mut out = TensorElem::zero();
            for ((a, b), c) in &base.terms {
                out.add_term(a.concat(&th), b.clone(), c * &self.twist(b, &th));
                out.add_term(a.clone(), b.concat(&th), c.clone());
            }
            out
        };
        let t = Arc::new(t);
        self.r_memo.write().unwrap().insert(m.clone(), t.clone());
        t
    }

    pub fn coproduct_r(&self, x: &FreeElem) -> TensorElem {
        let mut out = TensorElem::zero();
        for (m, c) in x.terms() {
            for ((a, b), d) in &self.r_monomial(m).terms {
                out.add_term(a.clone(), b.clone(), c * d);
            }
        }
        out
    }

    /// Product in the triple tensor algebra: every leg of `y` moves past
    /// the later legs of `x`.
    pub fn triple_mul(&self, x: &Triple, y: &Triple) -> Triple {
        let mut r = Triple::new();
        for ((x1, x2, x3), a) in x {
            for ((y1, y2, y3), b) in y {
                let c = &(&(a * b) * &self.twist(x2, y1)) * &(&self.twist(x3, y1) * &self.twist(x3, y2));
                add_term(&mut r, (x1.concat(y1), x2.concat(y2), x3.concat(y3)), c);
            }
        }
        r
    }

    /// `(r (x) 1) r(m)`.
    pub fn r_left(&self, m: &Monomial) -> Triple {
        let mut out = Triple::new();
        for ((a, b), c) in &self.r_monomial(m).terms {
            for ((a1, a2), d) in &self.r_monomial(a).terms {
                add_term(&mut out, (a1.clone(), a2.clone(), b.clone()), c * d);
            }
        }
        out
    }

    /// `(1 (x) r) r(m)`.
    pub fn r_right(&self, m: &Monomial) -> Triple {
        let mut out = Triple::new();
        for ((a, b), c) in &self.r_monomial(m).terms {
            for ((b1, b2), d) in &self.r_monomial(b).terms {
                add_term(&mut out, (a.clone(), b1.clone(), b2.clone()), c * d);
            }
        }
        out
    }

    pub fn memo_len(&self) -> usize {
        self.r_memo.read().unwrap().len()
    }
}

/// Parses expressions such as `t1*t2*t1 - (q+q^-1)*t2*t1^2`. Generators are
/// `t1..t<rank>`; `q` may carry rational exponents `q^(1/2)`; scalars may
/// divide.
pub fn parse_elem(src: &str, rank: usize) -> Result<FreeElem> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, rank };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse("element", format!("unexpected `{}`", p.toks[p.pos])));
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(i64),
    Q,
    Gen(usize),
    Op(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "{n}"),
            Tok::Q => write!(f, "q"),
            Tok::Gen(i) => write!(f, "t{i}"),
            Tok::Op(c) => write!(f, "{c}"),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let num = |i: &mut usize| {
        let st = *i;
        while *i < cs.len() && cs[*i].is_ascii_digit() {
            *i += 1;
        }
        cs[st..*i].iter().collect::<String>()
    };
    while i < cs.len() {
        let c = cs[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '0'..='9' => {
                let d = num(&mut i);
                out.push(Tok::Num(d.parse().map_err(|_| Error::parse("element", format!("number `{d}` too large")))?));
            }
            'q' => {
                out.push(Tok::Q);
                i += 1;
            }
            't' | 'θ' => {
                i += 1;
                let d = num(&mut i);
                let k: usize = d.parse().map_err(|_| Error::parse("element", "generator needs an index, e.g. t1"))?;
                out.push(Tok::Gen(k));
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Tok::Op(c));
                i += 1;
            }
            _ => return Err(Error::parse("element", format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    rank: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse("element", format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<FreeElem> {
        let mut acc = if self.eat('-') {
            self.term()?.scale(&-RatFunc::one())
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FreeElem> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                let s = d
                    .as_scalar()
                    .ok_or_else(|| Error::parse("element", "can only divide by scalars"))?;
                acc = acc.scale(&s.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FreeElem> {
        if self.eat('-') {
            return Ok(self.unary()?.scale(&-RatFunc::one()));
        }
        self.power()
    }

    fn power(&mut self) -> Result<FreeElem> {
        let is_q = self.peek() == Some(&Tok::Q);
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.exponent()?;
        if is_q {
            return Ok(FreeElem::scalar(RatFunc::q_pow(&e)));
        }
        if !e.is_integer() {
            return Err(Error::parse("element", "fractional powers are only allowed on q"));
        }
        let n = i64::try_from(e.to_integer()).map_err(|_| Error::parse("element", "exponent too large"))?;
        if n >= 0 {
            Ok(base.pow(n as u32))
        } else {
            let s = base
                .as_scalar()
                .ok_or_else(|| Error::parse("element", "negative powers are only allowed on scalars"))?;
            Ok(FreeElem::scalar(s.inv()?.pow((-n) as u32)))
        }
    }

    fn exponent(&mut self) -> Result<BigRat> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let mut e = match self.toks.get(self.pos) {
            Some(Tok::Num(n)) => BigRat::from_integer((*n).into()),
            _ => return Err(Error::parse("element", "expected an exponent")),
        };
        self.pos += 1;
        if paren && self.eat('/') {
            match self.toks.get(self.pos) {
                Some(Tok::Num(d)) if *d != 0 => e /= BigRat::from_integer((*d).into()),
                _ => return Err(Error::parse("element", "bad exponent denominator")),
            }
            self.pos += 1;
        }
        if paren {
            self.expect(')')?;
        }
        Ok(if neg { -e } else { e })
    }

    fn atom(&mut self) -> Result<FreeElem> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(FreeElem::scalar(RatFunc::from_int(n)))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                Ok(FreeElem::scalar(RatFunc::q()))
            }
            Some(Tok::Gen(k)) => {
                self.pos += 1;
                if k == 0 || k > self.rank {
                    return Err(Error::parse("element", format!("generator t{k} out of range 1..{}", self.rank)));
                }
                Ok(FreeElem::gen(k - 1))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(t) => Err(Error::parse("element", format!("unexpected `{t}`"))),
            None => Err(Error::parse("element", "unexpected end of input")),
        }
    }
}

impl FreeElem {
    pub fn is_one(&self) -> bool {
        self.as_scalar().is_some_and(|s| s.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;

    fn sl(m: usize, n: usize) -> FreeSuper {
        FreeSuper::new(CartanDatum::builtin(&Family::Sl { m, n }).unwrap())
    }

    fn mono(l: &[u8]) -> Monomial {
        Monomial::from_letters(l)
    }

    #[test]
    fn tensor_of_thetas() {
        let fs = sl(2, 2);
        let x = TensorElem::pure(Monomial::one(), mono(&[1]));
        let y = TensorElem::pure(mono(&[1]), Monomial::one());
        let p = fs.twisted_mul(&x, &y);
        assert_eq!(p.coeff(&mono(&[1]), &mono(&[1])), RatFunc::from_int(-1));
        let x = TensorElem::pure(Monomial::one(), mono(&[0]));
        let y = TensorElem::pure(mono(&[1]), Monomial::one());
        assert_eq!(fs.twisted_mul(&x, &y).coeff(&mono(&[1]), &mono(&[0])), RatFunc::q_pow(&BigRat::from_integer((-1).into())));
    }

    #[test]
    fn r_of_odd_square() {
        let fs = sl(2, 1);
        let r = fs.r_monomial(&mono(&[1, 1]));
        assert_eq!(r.len(), 2);
        assert!(r.coeff(&mono(&[1]), &mono(&[1])).is_zero());
        let r1 = fs.r_monomial(&mono(&[0, 0]));
        let q2 = RatFunc::q_pow(&BigRat::from_integer(2.into()));
        assert_eq!(r1.coeff(&mono(&[0]), &mono(&[0])), &RatFunc::one() + &q2);
    }

    #[test]
    fn weight_pairing_examples() {
        let fs = sl(2, 2);
        let d = fs.datum();
        assert!(weight_pairing(&Weight::unit(3, 1), &Weight::unit(3, 1), d).is_zero());
        assert!(weight_pairing(&Weight::zero(3), &Weight(vec![1, 2, 1]), d).is_zero());
        assert_eq!(weight_pairing(&Weight::unit(3, 0), &Weight::unit(3, 1), d), d.sym(0, 1));
    }

    #[test]
    fn parse_and_render() {
        let e = parse_elem("t1*t2*t1 - (q+q^-1)*t2*t1^2", 2).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.render(), "t1*t2*t1 - (q + q^-1)*t2*t1^2");
        assert_eq!(parse_elem(&e.render(), 2).unwrap(), e);
        let h = parse_elem("q^(1/2)*t1 + 1/2*t2", 2).unwrap();
        assert_eq!(parse_elem(&h.render(), 2).unwrap(), h);
        assert!(parse_elem("t3", 2).is_err());
        assert!(parse_elem("t1 +", 2).is_err());
    }

    #[test]
    fn monomials_of_weight() {
        let ms = Weight(vec![2, 1]).monomials();
        assert_eq!(ms, vec![mono(&[0, 0, 1]), mono(&[0, 1, 0]), mono(&[1, 0, 0])]);
        assert_eq!(Weight::all_up_to(2, 2).len(), 6);
    }
}
