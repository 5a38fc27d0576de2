//! Coxeter systems presented by their bond matrix, with exact arithmetic.
//!
//! Elements are kept in canonical form: the ShortLex-least reduced word
//! under the generator enumeration fixed at construction. All descent and
//! exchange computations go through the reflection representation on root
//! coordinates, with signs decided exactly by [`crate::num::Ring`].

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicU32, Ordering};

use num_integer::Integer;

use crate::error::CoxError;
use crate::num::{Num, Ring};

static NEXT_SYSTEM_ID: AtomicU32 = AtomicU32::new(1);

/// A bond order `m(r, s)` of the Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

/// A subset of the generators, as a bitmask over generator indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> GenSet {
        GenSet((1u64 << rank) - 1)
    }

    pub fn singleton(i: usize) -> GenSet {
        GenSet(1 << i)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_subset(&self, other: &GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.0;
        (0..64).filter(move |i| mask >> i & 1 == 1)
    }

    /// All subsets of `self`, in an arbitrary but deterministic order.
    pub fn subsets(&self) -> Vec<GenSet> {
        let mut out = Vec::new();
        let full = self.0;
        let mut sub = full;
        loop {
            out.push(GenSet(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & full;
        }
        out.reverse();
        out
    }
}

/// A group element in canonical reduced-word form.
///
/// Ordering is ShortLex: by length first, then lexicographically by the
/// generator indices of the canonical word. Two elements are equal iff
/// their canonical words (and systems) are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    // ShortLex ordering relies on the field order: length-major.
    len: u32,
    word: Vec<u8>,
    sys: u32,
}

impl Element {
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Generators occurring in the canonical word.
    pub fn support(&self) -> GenSet {
        let mut s = GenSet::EMPTY;
        for &i in &self.word {
            s.insert(i as usize);
        }
        s
    }

    pub(crate) fn from_canonical(word: Vec<u8>, sys: u32) -> Element {
        Element { len: word.len() as u32, word, sys }
    }

    pub(crate) fn system_id(&self) -> u32 {
        self.sys
    }
}

/// A reflection `t = x s x^{-1}`, carried with the exact coordinates of its
/// positive root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Reflection {
    pub elem: Element,
    pub root: Vec<Num>,
}

impl Reflection {
    /// The set of generators with nonzero root coordinate; equals the
    /// support of the canonical word of the reflection.
    pub fn support(&self, sys: &CoxeterSystem) -> GenSet {
        let mut s = GenSet::EMPTY;
        for (i, c) in self.root.iter().enumerate() {
            if !sys.ring.is_zero(c) {
                s.insert(i);
            }
        }
        s
    }
}

/// Which side a descent is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A Coxeter system given by generators and a symmetric bond matrix.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    id: u32,
    gens: Vec<String>,
    bonds: Vec<Vec<Bond>>,
    pub(crate) ring: Ring,
    /// Doubled symmetric bilinear form: `form[r][s] = -2cos(pi/m(r,s))`
    /// off-diagonal (`-2` for infinite bonds), `2` on the diagonal.
    form: Vec<Vec<Num>>,
}

impl CoxeterSystem {
    pub fn new(gens: Vec<String>, bonds: Vec<Vec<Bond>>) -> Result<CoxeterSystem, CoxError> {
        let n = gens.len();
        if n == 0 || n > 63 {
            return Err(CoxError::InvalidMatrix("rank must be between 1 and 63".into()));
        }
        {
            let mut seen = BTreeSet::new();
            for g in &gens {
                if !seen.insert(g.clone()) {
                    return Err(CoxError::InvalidMatrix("duplicate generator name".into()));
                }
            }
        }
        if bonds.len() != n || bonds.iter().any(|row| row.len() != n) {
            return Err(CoxError::InvalidMatrix("matrix shape does not match generators".into()));
        }
        for i in 0..n {
            if bonds[i][i] != Bond::Finite(1) {
                return Err(CoxError::InvalidMatrix("diagonal entries must be 1".into()));
            }
            for j in 0..n {
                if i != j {
                    if bonds[i][j] != bonds[j][i] {
                        return Err(CoxError::InvalidMatrix("matrix must be symmetric".into()));
                    }
                    if let Bond::Finite(m) = bonds[i][j] {
                        if m < 2 {
                            return Err(CoxError::InvalidMatrix(
                                "off-diagonal entries must be >= 2".into(),
                            ));
                        }
                    }
                }
            }
        }
        // pick the coefficient ring: plain integers unless a finite bond
        // order >= 4 appears
        let mut lcm: u64 = 1;
        let mut needs_field = false;
        for i in 0..n {
            for j in 0..i {
                if let Bond::Finite(m) = bonds[i][j] {
                    lcm = lcm.lcm(&(m as u64));
                    if m >= 4 {
                        needs_field = true;
                    }
                }
            }
        }
        let ring = if needs_field { Ring::cyclotomic(lcm) } else { Ring::integer() };
        let mut form = vec![vec![ring.zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                form[i][j] = if i == j {
                    ring.from_i64(2)
                } else {
                    match bonds[i][j] {
                        Bond::Finite(m) => ring.neg(&ring.two_cos_pi_over(m as u64)),
                        Bond::Infinite => ring.from_i64(-2),
                    }
                };
            }
        }
        let id = NEXT_SYSTEM_ID.fetch_add(1, Ordering::Relaxed);
        Ok(CoxeterSystem { id, gens, bonds, ring, form })
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gens
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.gens[i]
    }

    pub fn generator_index(&self, name: &str) -> Result<usize, CoxError> {
        self.gens
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| CoxError::UnknownGenerator(name.to_string()))
    }

    pub fn bond(&self, i: usize, j: usize) -> Bond {
        self.bonds[i][j]
    }

    pub fn full_set(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn identity(&self) -> Element {
        Element::from_canonical(Vec::new(), self.id)
    }

    pub fn generator(&self, i: usize) -> Element {
        debug_assert!(i < self.rank());
        Element::from_canonical(vec![i as u8], self.id)
    }

    pub fn check_element(&self, x: &Element) -> Result<(), CoxError> {
        if x.sys == self.id {
            Ok(())
        } else {
            Err(CoxError::MixedSystems)
        }
    }

    // ----- root arithmetic -----

    pub(crate) fn simple_root(&self, i: usize) -> Vec<Num> {
        let mut v = vec![self.ring.zero(); self.rank()];
        v[i] = self.ring.one();
        v
    }

    /// Applies the simple reflection `s_i` to a root coordinate vector.
    pub(crate) fn reflect(&self, i: usize, v: &[Num]) -> Vec<Num> {
        // s_i(v) = v - <v, alpha_i> alpha_i with the doubled form
        let mut coef = self.ring.zero();
        for (j, c) in v.iter().enumerate() {
            if !self.ring.is_zero(c) {
                coef = self.ring.add(&coef, &self.ring.mul(c, &self.form[j][i]));
            }
        }
        let mut out = v.to_vec();
        out[i] = self.ring.sub(&out[i], &coef);
        out
    }

    /// Applies a word (as the group element it spells, leftmost letter
    /// acting last) to a root vector.
    pub(crate) fn apply_word(&self, word: &[u8], v: &[Num]) -> Vec<Num> {
        let mut v = v.to_vec();
        for &i in word.iter().rev() {
            v = self.reflect(i as usize, &v);
        }
        v
    }

    /// Applies the inverse of a word to a root vector.
    pub(crate) fn apply_word_inv(&self, word: &[u8], v: &[Num]) -> Vec<Num> {
        let mut v = v.to_vec();
        for &i in word.iter() {
            v = self.reflect(i as usize, &v);
        }
        v
    }

    /// Sign of a root vector: roots have uniformly signed coordinates.
    fn root_is_negative(&self, v: &[Num]) -> bool {
        for c in v {
            match self.ring.sign(c) {
                1 => return false,
                -1 => return true,
                _ => continue,
            }
        }
        unreachable!("root vector cannot be zero")
    }

    // ----- canonical words -----

    /// Multiplies a reduced word by `s` on the right, keeping it reduced.
    /// The strong exchange condition drives the deletion.
    fn right_mul_word(&self, word: &mut Vec<u8>, s: usize) {
        // scan r_j = s_{i_{j+1}} ... s_{i_n}(alpha_s) from the right; a match
        // r_j = alpha_{i_j} happens iff `s` is a right descent
        let alpha_s = self.simple_root(s);
        let mut r = alpha_s.clone();
        for j in (0..word.len()).rev() {
            let i = word[j] as usize;
            if r[i] == self.ring.one()
                && r.iter()
                    .enumerate()
                    .all(|(k, c)| k == i || self.ring.is_zero(c))
            {
                word.remove(j);
                return;
            }
            r = self.reflect(i, &r);
        }
        word.push(s as u8);
    }

    /// Deletes a left descent `s` from a reduced word (so the word becomes
    /// a reduced word of `s * x`). Returns false if `s` is not a descent.
    fn left_del_word(&self, word: &mut Vec<u8>, s: usize) -> bool {
        let mut r = self.simple_root(s);
        for j in 0..word.len() {
            let i = word[j] as usize;
            if r[i] == self.ring.one()
                && r.iter()
                    .enumerate()
                    .all(|(k, c)| k == i || self.ring.is_zero(c))
            {
                word.remove(j);
                return true;
            }
            r = self.reflect(i, &r);
        }
        false
    }

    /// ShortLex normal form of a reduced word: repeatedly extract the
    /// smallest left descent.
    fn lex_normalize(&self, mut word: Vec<u8>) -> Vec<u8> {
        let mut out = Vec::with_capacity(word.len());
        'outer: while !word.is_empty() {
            for s in 0..self.rank() {
                // left descent test via the inverse action on alpha_s
                let img = self.apply_word_inv(&word, &self.simple_root(s));
                if self.root_is_negative(&img) {
                    let ok = self.left_del_word(&mut word, s);
                    debug_assert!(ok);
                    out.push(s as u8);
                    continue 'outer;
                }
            }
            unreachable!("nonempty reduced word must have a left descent");
        }
        out
    }

    /// Canonical element spelled by an arbitrary word of generator indices.
    pub fn reduce_indices(&self, word: &[u8]) -> Element {
        let mut red: Vec<u8> = Vec::with_capacity(word.len());
        for &s in word {
            debug_assert!((s as usize) < self.rank());
            self.right_mul_word(&mut red, s as usize);
        }
        Element::from_canonical(self.lex_normalize(red), self.id)
    }

    /// Canonical element spelled by a word of generator names.
    pub fn reduce_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Element, CoxError> {
        let mut word = Vec::with_capacity(names.len());
        for n in names {
            word.push(self.generator_index(n.as_ref())? as u8);
        }
        Ok(self.reduce_indices(&word))
    }

    // ----- group operations -----

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element, CoxError> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut red = x.word.clone();
        for &s in &y.word {
            self.right_mul_word(&mut red, s as usize);
        }
        Ok(Element::from_canonical(self.lex_normalize(red), self.id))
    }

    /// Product of several elements, left to right.
    pub fn prod(&self, xs: &[&Element]) -> Result<Element, CoxError> {
        let mut acc = self.identity();
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn inv(&self, x: &Element) -> Element {
        let rev: Vec<u8> = x.word.iter().rev().copied().collect();
        Element::from_canonical(self.lex_normalize(rev), self.id)
    }

    pub fn mul_gen(&self, x: &Element, s: usize, side: Side) -> Element {
        match side {
            Side::Right => {
                let mut red = x.word.clone();
                self.right_mul_word(&mut red, s);
                Element::from_canonical(self.lex_normalize(red), self.id)
            }
            Side::Left => {
                let mut red = x.word.clone();
                if !self.left_del_word(&mut red, s) {
                    red.insert(0, s as u8);
                }
                Element::from_canonical(self.lex_normalize(red), self.id)
            }
        }
    }

    pub fn length(&self, x: &Element) -> usize {
        x.word.len()
    }

    // ----- descents -----

    pub fn is_descent(&self, x: &Element, s: usize, side: Side) -> bool {
        match side {
            // s is a right descent iff x(alpha_s) < 0
            Side::Right => self.root_is_negative(&self.apply_word(&x.word, &self.simple_root(s))),
            // s is a left descent iff x^{-1}(alpha_s) < 0
            Side::Left => self.root_is_negative(&self.apply_word_inv(&x.word, &self.simple_root(s))),
        }
    }

    pub fn descents(&self, x: &Element, side: Side) -> GenSet {
        let mut out = GenSet::EMPTY;
        for s in 0..self.rank() {
            if !x.word.is_empty() && self.is_descent(x, s, side) {
                out.insert(s);
            }
        }
        out
    }

    /// Smallest-index descent, the deterministic selection policy used by
    /// the polynomial recursions.
    pub fn first_descent(&self, x: &Element, side: Side) -> Option<usize> {
        if x.word.is_empty() {
            return None;
        }
        (0..self.rank()).find(|&s| self.is_descent(x, s, side))
    }

    // ----- Bruhat order -----

    /// The Chevalley-Bruhat order, by the standard descent recursion.
    pub fn bruhat_leq(&self, x: &Element, y: &Element) -> Result<bool, CoxError> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.bruhat_leq_inner(x.word.clone(), y.word.clone()))
    }

    fn bruhat_leq_inner(&self, x: Vec<u8>, y: Vec<u8>) -> bool {
        if x == y {
            return true;
        }
        if x.len() >= y.len() {
            return false;
        }
        // pick the smallest left descent s of y
        let s = (0..self.rank())
            .find(|&s| self.root_is_negative(&self.apply_word_inv(&y, &self.simple_root(s))))
            .expect("nonidentity element has a descent");
        let mut sy = y;
        self.left_del_word(&mut sy, s);
        let mut sx = x.clone();
        if self.left_del_word(&mut sx, s) {
            self.bruhat_leq_inner(sx, sy)
        } else {
            self.bruhat_leq_inner(x, sy)
        }
    }

    // ----- parabolic structure -----

    /// Whether `x` is a minimal left coset representative for `W_I`
    /// (no right descent in `I`).
    pub fn in_quotient(&self, x: &Element, i_set: GenSet) -> bool {
        i_set.iter().all(|s| !self.is_descent(x, s, Side::Right) || x.word.is_empty())
    }

    /// Unique factorization `x = u v` with `u` in `W^I`, `v` in `W_I` and
    /// additive lengths.
    pub fn coset_decompose(&self, x: &Element, i_set: GenSet) -> (Element, Element) {
        let mut u = x.clone();
        let mut v = self.identity();
        loop {
            let mut found = None;
            for s in i_set.iter() {
                if !u.word.is_empty() && self.is_descent(&u, s, Side::Right) {
                    found = Some(s);
                    break;
                }
            }
            match found {
                Some(s) => {
                    u = self.mul_gen(&u, s, Side::Right);
                    v = self.mul_gen(&v, s, Side::Left);
                }
                None => break,
            }
        }
        (u, v)
    }

    pub fn min_coset_rep(&self, x: &Element, i_set: GenSet) -> Element {
        self.coset_decompose(x, i_set).0
    }

    /// Enumerates the standard parabolic subgroup `W_I`, by increasing
    /// length and ShortLex within a length. `max_len` bounds the word
    /// length; without it the subgroup must be finite within
    /// `element_limit` elements.
    pub fn enumerate_parabolic(
        &self,
        i_set: GenSet,
        max_len: Option<usize>,
        element_limit: usize,
    ) -> Result<Vec<Element>, CoxError> {
        let mut all: Vec<Element> = vec![self.identity()];
        let mut level: BTreeSet<Element> = BTreeSet::new();
        level.insert(self.identity());
        loop {
            if let Some(ml) = max_len {
                if level.iter().next().map(|e| e.length()) == Some(ml) {
                    break;
                }
            }
            let mut next: BTreeSet<Element> = BTreeSet::new();
            for x in &level {
                for s in i_set.iter() {
                    let xs = self.mul_gen(x, s, Side::Right);
                    if xs.length() > x.length() {
                        next.insert(xs);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            all.extend(next.iter().cloned());
            if all.len() > element_limit {
                return match max_len {
                    Some(_) => Err(CoxError::Unbounded),
                    None => Err(CoxError::InfiniteParabolic),
                };
            }
            level = next;
        }
        Ok(all)
    }

    /// Enumerates the parabolic quotient `W^I` inside `W_J` (usually
    /// `J = S`), by increasing length.
    pub fn enumerate_quotient(
        &self,
        i_set: GenSet,
        max_len: Option<usize>,
        element_limit: usize,
    ) -> Result<Vec<Element>, CoxError> {
        let all = self.enumerate_parabolic(self.full_set(), max_len, element_limit)?;
        Ok(all.into_iter().filter(|x| self.in_quotient(x, i_set)).collect())
    }

    /// The longest element of a finite standard parabolic `W_I`.
    pub fn longest_element(&self, i_set: GenSet, element_limit: usize) -> Result<Element, CoxError> {
        let all = self.enumerate_parabolic(i_set, None, element_limit)?;
        let w0 = all.last().expect("nonempty").clone();
        debug_assert_eq!(self.descents(&w0, Side::Left).0 & self.full_set().0, i_set.0);
        Ok(w0)
    }

    // ----- reflections and inversion sets -----

    /// The left inversion set `N(x) = { t in T : l(tx) < l(x) }`, with
    /// `|N(x)| = l(x)`.
    pub fn inversions(&self, x: &Element) -> Vec<Reflection> {
        let mut out = Vec::with_capacity(x.word.len());
        let mut prefix: Vec<u8> = Vec::new();
        for (j, &i) in x.word.iter().enumerate() {
            // root: s_{i_1} ... s_{i_{j-1}}(alpha_{i_j})
            let root = self.apply_word(&prefix, &self.simple_root(i as usize));
            // element: s_{i_1} ... s_{i_j} ... s_{i_1}
            let mut w: Vec<u8> = Vec::with_capacity(2 * j + 1);
            w.extend_from_slice(&prefix);
            w.push(i);
            w.extend(prefix.iter().rev());
            let elem = self.reduce_indices(&w);
            debug_assert!(elem.length() % 2 == 1);
            out.push(Reflection { elem, root });
            prefix.push(i);
        }
        out
    }

    /// All reflections of a finite system, as the inversion set of the
    /// longest element.
    pub fn all_reflections(&self, element_limit: usize) -> Result<Vec<Reflection>, CoxError> {
        let w0 = self.longest_element(self.full_set(), element_limit)?;
        Ok(self.inversions(&w0))
    }
}

impl CoxeterSystem {
    /// Formats an element as a comma-separated word of generator names,
    /// `1` for the identity.
    pub fn format_element(&self, x: &Element) -> String {
        if x.word.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        for (k, &i) in x.word.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&self.gens[i as usize]);
        }
        out
    }

    /// Formats a generator subset as `{s1,s2}` (or `{}`).
    pub fn format_genset(&self, set: GenSet) -> String {
        let mut out = String::from("{");
        for (k, i) in set.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&self.gens[i]);
        }
        out.push('}');
        out
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => write!(f, "inf"),
        }
    }
}
