//! Classical R-polynomials, Kazhdan-Lusztig P and inverse Q, the generic
//! KL-from-R solver shared by every order in the crate, and the
//! reflection-order chain-sum oracle.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::coxeter::{CoxeterSystem, Element, Reflection, Side};
use crate::error::CoxError;
use crate::laurent::{p_normalize, LaurentPoly, QPoly};

/// What a memo table stores.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    RTilde,
    P,
    Q,
    RA,
    PA,
    B,
    C,
}

impl TableKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TableKind::RTilde => "rtilde",
            TableKind::P => "p",
            TableKind::Q => "q",
            TableKind::RA => "ra",
            TableKind::PA => "pa",
            TableKind::B => "b",
            TableKind::C => "c",
        }
    }
}

/// A memoized map from element pairs to Laurent polynomials. Entries are
/// immutable once written; re-inserting must reproduce the stored value.
#[derive(Debug, Clone)]
pub struct PolyTable {
    pub kind: TableKind,
    map: BTreeMap<(Element, Element), LaurentPoly>,
}

impl PolyTable {
    pub fn new(kind: TableKind) -> PolyTable {
        PolyTable { kind, map: BTreeMap::new() }
    }

    pub fn get(&self, x: &Element, y: &Element) -> Option<&LaurentPoly> {
        self.map.get(&(x.clone(), y.clone()))
    }

    pub fn insert(&mut self, x: Element, y: Element, p: LaurentPoly) {
        let prev = self.map.insert((x, y), p.clone());
        debug_assert!(prev.is_none() || prev == Some(p), "memo table overwrite mismatch");
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Element, Element), &LaurentPoly)> {
        self.map.iter()
    }
}

/// Which descent a recursion picks when several are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentPolicy {
    Smallest,
    Largest,
}

fn pick_descent(sys: &CoxeterSystem, y: &Element, side: Side, policy: DescentPolicy) -> Option<usize> {
    let d = sys.descents(y, side);
    match policy {
        DescentPolicy::Smallest => d.iter().next(),
        DescentPolicy::Largest => d.iter().last(),
    }
}

/// The normalized classical R-polynomial `Rtilde_{x,y}` in `Z[abar]`,
/// memoized in `tbl`.
pub fn r_poly(
    sys: &CoxeterSystem,
    tbl: &mut PolyTable,
    x: &Element,
    y: &Element,
) -> Result<LaurentPoly, CoxError> {
    r_poly_with_policy(sys, tbl, x, y, DescentPolicy::Smallest)
}

pub fn r_poly_with_policy(
    sys: &CoxeterSystem,
    tbl: &mut PolyTable,
    x: &Element,
    y: &Element,
    policy: DescentPolicy,
) -> Result<LaurentPoly, CoxError> {
    sys.check_element(x)?;
    sys.check_element(y)?;
    Ok(r_poly_inner(sys, tbl, x, y, policy))
}

fn r_poly_inner(
    sys: &CoxeterSystem,
    tbl: &mut PolyTable,
    x: &Element,
    y: &Element,
    policy: DescentPolicy,
) -> LaurentPoly {
    if x == y {
        return LaurentPoly::one();
    }
    if x.length() >= y.length() {
        return LaurentPoly::zero();
    }
    if let Some(p) = tbl.get(x, y) {
        return p.clone();
    }
    let s = pick_descent(sys, y, Side::Left, policy).expect("y is not the identity");
    let sy = sys.mul_gen(y, s, Side::Left);
    let sx = sys.mul_gen(x, s, Side::Left);
    let value = if sx.length() < x.length() {
        r_poly_inner(sys, tbl, &sx, &sy, policy)
    } else {
        let a = r_poly_inner(sys, tbl, &sx, &sy, policy);
        let b = r_poly_inner(sys, tbl, x, &sy, policy);
        &a + &(&LaurentPoly::abar() * &b)
    };
    tbl.insert(x.clone(), y.clone(), value.clone());
    value
}

/// All `z <= y` in Bruhat order, by closure under single-letter deletions
/// of reduced words. Sorted ShortLex.
pub fn lower_interval(sys: &CoxeterSystem, y: &Element) -> Result<Vec<Element>, CoxError> {
    sys.check_element(y)?;
    let mut seen: BTreeSet<Element> = BTreeSet::new();
    let mut stack: Vec<Element> = Vec::new();
    seen.insert(y.clone());
    stack.push(y.clone());
    while let Some(w) = stack.pop() {
        for j in 0..w.length() {
            let mut sub: Vec<u8> = w.word().to_vec();
            sub.remove(j);
            let z = sys.reduce_indices(&sub);
            if seen.insert(z.clone()) {
                stack.push(z);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The closed Bruhat interval `[x, y]`, sorted ShortLex.
pub fn bruhat_interval(sys: &CoxeterSystem, x: &Element, y: &Element) -> Result<Vec<Element>, CoxError> {
    let below = lower_interval(sys, y)?;
    let mut out = Vec::new();
    for z in below {
        if sys.bruhat_leq(x, &z)? {
            out.push(z);
        }
    }
    Ok(out)
}

/// Output of the generic KL solver: the `u`-normalized `p` and the
/// `q`-form `P` for every comparable pair of the input slice.
#[derive(Debug, Clone)]
pub struct KlTables<K: Ord> {
    pub p: BTreeMap<(K, K), LaurentPoly>,
    pub p_q: BTreeMap<(K, K), QPoly>,
}

impl<K: Ord + Clone> KlTables<K> {
    pub fn p_of(&self, v: &K, w: &K) -> LaurentPoly {
        self.p.get(&(v.clone(), w.clone())).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn q_of(&self, v: &K, w: &K) -> QPoly {
        self.p_q.get(&(v.clone(), w.clone())).cloned().unwrap_or_else(QPoly::zero)
    }
}

/// Solves the KL conditions over an arbitrary finite poset slice with an
/// R-family: the unique table with `p(w,w) = 1`, `p(v,w)` in
/// `u^-1 Z[u^-1]` for `v != w`, and `p(v,w) = sum_z R(v,z) bar(p(z,w))`.
///
/// `nodes` must be closed under taking closed intervals between its
/// comparable pairs; distinct comparable nodes must have distinct lengths
/// (length strictly increases upward). Detects and reports an inconsistent
/// R-table.
pub fn kl_from_r<K, FL, FQ, FR>(
    nodes: &[K],
    mut length: FL,
    mut leq: FQ,
    mut r: FR,
) -> Result<KlTables<K>, CoxError>
where
    K: Ord + Clone,
    FL: FnMut(&K) -> i64,
    FQ: FnMut(&K, &K) -> bool,
    FR: FnMut(&K, &K) -> LaurentPoly,
{
    let n = nodes.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| core::cmp::Reverse(length(&nodes[i])));
    let mut leq_mat = alloc::vec![alloc::vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq_mat[i][j] = leq(&nodes[i], &nodes[j]);
        }
        if !r(&nodes[i], &nodes[i]).is_one() {
            return Err(CoxError::TableInconsistent(format!("R(node {i}, node {i}) != 1")));
        }
    }
    let mut p: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
    let mut p_q: BTreeMap<(K, K), QPoly> = BTreeMap::new();
    let mut p_out: BTreeMap<(K, K), LaurentPoly> = BTreeMap::new();
    for &w in &order {
        // v descending in length, so every z with v < z <= w is done
        for &v in &order {
            if !leq_mat[v][w] {
                continue;
            }
            let value = if v == w {
                LaurentPoly::one()
            } else {
                let mut f = LaurentPoly::zero();
                for &z in &order {
                    if z != v && leq_mat[v][z] && leq_mat[z][w] {
                        let pzw = p.get(&(z, w)).expect("processed in order");
                        f = &f + &(&r(&nodes[v], &nodes[z]) * &pzw.bar());
                    }
                }
                let cand = f.negative_part();
                if &cand - &cand.bar() != f {
                    return Err(CoxError::TableInconsistent(format!(
                        "KL condition unsolvable at pair (node {v}, node {w})"
                    )));
                }
                cand
            };
            let lv = length(&nodes[v]);
            let lw = length(&nodes[w]);
            let q_form = p_normalize(&value, lv, lw).map_err(|_| {
                CoxError::TableInconsistent(format!(
                    "p(node {v}, node {w}) does not q-normalize"
                ))
            })?;
            p.insert((v, w), value.clone());
            p_out.insert((nodes[v].clone(), nodes[w].clone()), value);
            p_q.insert((nodes[v].clone(), nodes[w].clone()), q_form);
        }
    }
    Ok(KlTables { p: p_out, p_q })
}

/// Inverts a triangular P-family: the unique `Q` with
/// `sum_{v<=z<=w} (-1)^{l(z)-l(v)} P(v,z) Q(z,w) = delta_{v,w}`.
pub fn invert_kl<K, FL, FQ, FP>(
    nodes: &[K],
    mut length: FL,
    mut leq: FQ,
    mut p: FP,
) -> BTreeMap<(K, K), QPoly>
where
    K: Ord + Clone,
    FL: FnMut(&K) -> i64,
    FQ: FnMut(&K, &K) -> bool,
    FP: FnMut(&K, &K) -> QPoly,
{
    let n = nodes.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| length(&nodes[i]));
    let mut q: BTreeMap<(usize, usize), QPoly> = BTreeMap::new();
    let mut out: BTreeMap<(K, K), QPoly> = BTreeMap::new();
    for &w in &order {
        // v ascending: solve Q(v, w) from higher-length z first, so walk
        // v downward from w
        for &v in order.iter().rev() {
            if !leq(&nodes[v], &nodes[w]) {
                continue;
            }
            let value = if v == w {
                QPoly::one()
            } else {
                let mut acc = QPoly::zero();
                for &z in &order {
                    if z != v && leq(&nodes[v], &nodes[z]) && leq(&nodes[z], &nodes[w]) {
                        let qzw = q.get(&(z, w)).expect("processed in order");
                        let sign = length(&nodes[z]) - length(&nodes[v]);
                        let term = &p(&nodes[v], &nodes[z]) * qzw;
                        if sign.rem_euclid(2) == 0 {
                            acc = &acc + &term;
                        } else {
                            acc = &acc - &term;
                        }
                    }
                }
                -acc
            };
            q.insert((v, w), value.clone());
            out.insert((nodes[v].clone(), nodes[w].clone()), value);
        }
    }
    out
}

/// The classical Kazhdan-Lusztig polynomial `P_{x,y}(q)`.
pub fn kl_p(
    sys: &CoxeterSystem,
    tbl: &mut PolyTable,
    x: &Element,
    y: &Element,
) -> Result<QPoly, CoxError> {
    if !sys.bruhat_leq(x, y)? {
        return Ok(QPoly::zero());
    }
    let interval = bruhat_interval(sys, x, y)?;
    let mut rmap: BTreeMap<(Element, Element), LaurentPoly> = BTreeMap::new();
    for a in &interval {
        for b in &interval {
            if sys.bruhat_leq(a, b)? {
                rmap.insert((a.clone(), b.clone()), r_poly(sys, tbl, a, b)?);
            }
        }
    }
    let tables = kl_from_r(
        &interval,
        |e| e.length() as i64,
        |a, b| rmap.contains_key(&(a.clone(), b.clone())),
        |a, b| rmap.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(LaurentPoly::zero),
    )?;
    Ok(tables.q_of(x, y))
}

/// The inverse Kazhdan-Lusztig polynomial `Q_{x,y}(q)`.
pub fn kl_q(
    sys: &CoxeterSystem,
    tbl: &mut PolyTable,
    x: &Element,
    y: &Element,
) -> Result<QPoly, CoxError> {
    if !sys.bruhat_leq(x, y)? {
        return Ok(QPoly::zero());
    }
    let interval = bruhat_interval(sys, x, y)?;
    let mut rmap: BTreeMap<(Element, Element), LaurentPoly> = BTreeMap::new();
    for a in &interval {
        for b in &interval {
            if sys.bruhat_leq(a, b)? {
                rmap.insert((a.clone(), b.clone()), r_poly(sys, tbl, a, b)?);
            }
        }
    }
    let tables = kl_from_r(
        &interval,
        |e| e.length() as i64,
        |a, b| rmap.contains_key(&(a.clone(), b.clone())),
        |a, b| rmap.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(LaurentPoly::zero),
    )?;
    let qmap = invert_kl(
        &interval,
        |e| e.length() as i64,
        |a, b| rmap.contains_key(&(a.clone(), b.clone())),
        |a, b| tables.q_of(a, b),
    );
    Ok(qmap.get(&(x.clone(), y.clone())).cloned().unwrap_or_else(QPoly::zero))
}

/// A reflection order on all of `T` for a finite system, represented by
/// the listing coming from a reduced word of the longest element.
#[derive(Debug, Clone)]
pub struct ReflectionOrder {
    pub refs: Vec<Reflection>,
}

impl ReflectionOrder {
    pub fn position(&self, t: &Element) -> Option<usize> {
        self.refs.iter().position(|r| &r.elem == t)
    }
}

/// Builds the reflection order `t_i = s_{i_1} ... s_{i_i} ... s_{i_1}` from
/// a reduced word of the longest element.
pub fn reflection_order_from_w0(
    sys: &CoxeterSystem,
    word: &[u8],
    element_limit: usize,
) -> Result<ReflectionOrder, CoxError> {
    let elem = sys.reduce_indices(word);
    if elem.length() != word.len() {
        return Err(CoxError::NotLongestWord);
    }
    let w0 = sys.longest_element(sys.full_set(), element_limit)?;
    if elem != w0 {
        return Err(CoxError::NotLongestWord);
    }
    let via = Element::from_canonical(word.to_vec(), w0.system_id());
    // the inversion listing of the word is exactly the t_i sequence
    let refs = sys.inversions(&via);
    Ok(ReflectionOrder { refs })
}

/// Chain-sum oracle: `sum abar^n` over `<=`-increasing reflection chains
/// from `x` to `y` with reflections taken in increasing order positions.
/// Equals `Rtilde_{x,y}` for every reflection order when `A` is empty.
pub fn r_gf_oracle(
    sys: &CoxeterSystem,
    x: &Element,
    y: &Element,
    ord: &ReflectionOrder,
) -> Result<LaurentPoly, CoxError> {
    sys.check_element(x)?;
    sys.check_element(y)?;
    let mut acc = LaurentPoly::zero();
    if x == y {
        acc = &acc + &LaurentPoly::one();
    }
    chain_dfs(sys, x, y, ord, 0, 0, &mut acc)?;
    Ok(acc)
}

fn chain_dfs(
    sys: &CoxeterSystem,
    e: &Element,
    y: &Element,
    ord: &ReflectionOrder,
    from: usize,
    steps: usize,
    acc: &mut LaurentPoly,
) -> Result<(), CoxError> {
    for j in from..ord.refs.len() {
        let t = &ord.refs[j].elem;
        let te = sys.mul(t, e)?;
        if te.length() <= e.length() || te.length() > y.length() {
            continue;
        }
        if !sys.bruhat_leq(&te, y)? {
            continue;
        }
        if &te == y {
            *acc = &*acc + &LaurentPoly::abar_pow(steps + 1);
        }
        chain_dfs(sys, &te, y, ord, j + 1, steps + 1, acc)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Bond;
    use alloc::string::ToString;
    use alloc::vec;

    fn a2() -> CoxeterSystem {
        CoxeterSystem::new(
            vec!["s".to_string(), "t".to_string()],
            vec![
                vec![Bond::Finite(1), Bond::Finite(3)],
                vec![Bond::Finite(3), Bond::Finite(1)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn r_poly_dihedral_values() {
        let sys = a2();
        let mut tbl = PolyTable::new(TableKind::RTilde);
        let e = sys.identity();
        let s = sys.generator(0);
        let sts = sys.reduce_names(&["s", "t", "s"]).unwrap();
        assert_eq!(r_poly(&sys, &mut tbl, &s, &s).unwrap(), LaurentPoly::one());
        assert_eq!(r_poly(&sys, &mut tbl, &e, &s).unwrap(), LaurentPoly::abar());
        let expect = &LaurentPoly::abar_pow(3) + &LaurentPoly::abar();
        assert_eq!(r_poly(&sys, &mut tbl, &e, &sts).unwrap(), expect);
    }

    #[test]
    fn kl_p_dihedral_trivial() {
        let sys = a2();
        let mut tbl = PolyTable::new(TableKind::RTilde);
        let all = sys.enumerate_parabolic(sys.full_set(), None, 100).unwrap();
        for x in &all {
            for y in &all {
                if sys.bruhat_leq(x, y).unwrap() {
                    assert!(kl_p(&sys, &mut tbl, x, y).unwrap().is_one());
                    assert!(kl_q(&sys, &mut tbl, x, y).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn gf_oracle_dihedral() {
        let sys = a2();
        let word = [0u8, 1, 0];
        let ord = reflection_order_from_w0(&sys, &word, 100).unwrap();
        // order should be s, sts, t
        assert_eq!(ord.refs[0].elem, sys.generator(0));
        assert_eq!(ord.refs[2].elem, sys.generator(1));
        let e = sys.identity();
        let s = sys.generator(0);
        let sts = sys.reduce_names(&["s", "t", "s"]).unwrap();
        assert_eq!(r_gf_oracle(&sys, &e, &s, &ord).unwrap(), LaurentPoly::abar());
        let expect = &LaurentPoly::abar_pow(3) + &LaurentPoly::abar();
        assert_eq!(r_gf_oracle(&sys, &e, &sts, &ord).unwrap(), expect);
        assert_eq!(r_gf_oracle(&sys, &sts, &sts, &ord).unwrap(), LaurentPoly::one());
    }
}
