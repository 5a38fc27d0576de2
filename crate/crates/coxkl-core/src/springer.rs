//! Springer's poset `V` of triples `[I,a,b]`, the `W x W` action, the
//! Hecke-module recursion computing the `b`-polynomials, `c`- and inverse
//! `c`-polynomials, the edge graph on `V` and poset diagnostics.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coxeter::{CoxeterSystem, Element, GenSet, Side};
use crate::error::CoxError;
use crate::kl::{invert_kl, kl_from_r, r_poly, KlTables, PolyTable, TableKind};
use crate::laurent::{LaurentPoly, QPoly};

/// A triple `[I, a, b]` with `I` a subset of `S`, `a` a minimal coset
/// representative in `W^I` and `b` arbitrary in `W`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VElement {
    pub i_set: GenSet,
    pub a: Element,
    pub b: Element,
}

impl VElement {
    pub fn new(
        sys: &CoxeterSystem,
        i_set: GenSet,
        a: Element,
        b: Element,
    ) -> Result<VElement, CoxError> {
        sys.check_element(&a)?;
        sys.check_element(&b)?;
        if !i_set.is_subset(&sys.full_set()) || !sys.in_quotient(&a, i_set) {
            return Err(CoxError::InvalidTriple);
        }
        Ok(VElement { i_set, a, b })
    }

    /// The dimension `d([I,a,b]) = -l(a) + l(b) + |I|`.
    pub fn dim(&self) -> i64 {
        -(self.a.length() as i64) + self.b.length() as i64 + self.i_set.len() as i64
    }
}

/// A simple generator `(s, 1)` or `(1, s)` of `W x W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairGen {
    pub side: Side,
    pub s: usize,
}

impl PairGen {
    pub fn left(s: usize) -> PairGen {
        PairGen { side: Side::Left, s }
    }

    pub fn right(s: usize) -> PairGen {
        PairGen { side: Side::Right, s }
    }
}

/// The action of a simple pair generator on `V`. For `(s,1)` the three
/// cases for `sa` against `W^I` apply; `(1,s)` always maps `b` to `sb`.
pub fn v_act(sys: &CoxeterSystem, g: PairGen, v: &VElement) -> VElement {
    match g.side {
        Side::Right => VElement {
            i_set: v.i_set,
            a: v.a.clone(),
            b: sys.mul_gen(&v.b, g.s, Side::Left),
        },
        Side::Left => {
            let sa = sys.mul_gen(&v.a, g.s, Side::Left);
            if sa.length() < v.a.length() || sys.in_quotient(&sa, v.i_set) {
                // cases (c) and (a)
                VElement { i_set: v.i_set, a: sa, b: v.b.clone() }
            } else {
                // case (b): sa = at with t a simple generator in I
                let s_elem = sys.generator(g.s);
                let t = sys
                    .prod(&[&sys.inv(&v.a), &s_elem, &v.a])
                    .expect("same system");
                debug_assert!(t.length() == 1 && v.i_set.contains(t.word()[0] as usize));
                VElement {
                    i_set: v.i_set,
                    a: v.a.clone(),
                    b: sys.mul(&v.b, &t).expect("same system"),
                }
            }
        }
    }
}

/// The action of an arbitrary pair `(x, y)` of `W x W` on `V`.
pub fn v_act_pair(sys: &CoxeterSystem, x: &Element, y: &Element, v: &VElement) -> VElement {
    let mut out = v.clone();
    for &i in y.word().iter().rev() {
        out = v_act(sys, PairGen::right(i as usize), &out);
    }
    for &i in x.word().iter().rev() {
        out = v_act(sys, PairGen::left(i as usize), &out);
    }
    out
}

/// `T_g . m_v` in the Hecke module: `m_{g.v}` if `d` rises, else
/// `m_{g.v} + alpha m_v`. Returned as a list of (basis element,
/// coefficient) pairs.
pub fn hecke_act(
    sys: &CoxeterSystem,
    g: PairGen,
    v: &VElement,
) -> Vec<(VElement, LaurentPoly)> {
    let gv = v_act(sys, g, v);
    if gv.dim() > v.dim() {
        alloc::vec![(gv, LaurentPoly::one())]
    } else {
        alloc::vec![(gv, LaurentPoly::one()), (v.clone(), LaurentPoly::alpha())]
    }
}

/// `T_g^{-1} . m_v = (T_g - alpha) . m_v`.
pub fn hecke_act_inv(
    sys: &CoxeterSystem,
    g: PairGen,
    v: &VElement,
) -> Vec<(VElement, LaurentPoly)> {
    let mut terms = hecke_act(sys, g, v);
    let mut acc = BTreeMap::new();
    for (w, c) in terms.drain(..) {
        let e = acc.entry(w).or_insert_with(LaurentPoly::zero);
        *e = &*e + &c;
    }
    let e = acc.entry(v.clone()).or_insert_with(LaurentPoly::zero);
    *e = &*e - &LaurentPoly::alpha();
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Which reduction the `b`-polynomial recursion uses. The right policy
/// always strips a left descent of the `b`-part with `(1,s)`; the mixed
/// policy prefers a length-raising `(s,1)` move on the `a`-part staying
/// in `W^I` when one exists. Both must produce the same table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BPolicy {
    Right,
    Mixed,
}

/// Memoized computation context for one Coxeter system.
pub struct VCtx<'a> {
    pub sys: &'a CoxeterSystem,
    b_tbl: BTreeMap<(VElement, VElement), LaurentPoly>,
    b_mixed_tbl: BTreeMap<(VElement, VElement), LaurentPoly>,
    pub r_tbl: PolyTable,
    pub element_limit: usize,
}

impl<'a> VCtx<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> VCtx<'a> {
        VCtx {
            sys,
            b_tbl: BTreeMap::new(),
            b_mixed_tbl: BTreeMap::new(),
            r_tbl: PolyTable::new(TableKind::RTilde),
            element_limit: 2_000_000,
        }
    }

    /// The polynomial `b_{w,v}`, by the coefficient recursion stripping
    /// left descents of the `b`-part of `v`; base case at `b`-part 1.
    pub fn b_poly(&mut self, w: &VElement, v: &VElement) -> Result<LaurentPoly, CoxError> {
        self.b_poly_with_policy(w, v, BPolicy::Right)
    }

    pub fn b_poly_with_policy(
        &mut self,
        w: &VElement,
        v: &VElement,
        policy: BPolicy,
    ) -> Result<LaurentPoly, CoxError> {
        let tbl = match policy {
            BPolicy::Right => &self.b_tbl,
            BPolicy::Mixed => &self.b_mixed_tbl,
        };
        if let Some(p) = tbl.get(&(w.clone(), v.clone())) {
            return Ok(p.clone());
        }
        let sigma = match policy {
            BPolicy::Mixed => self.mixed_step(v),
            BPolicy::Right => self.sys.first_descent(&v.b, Side::Left).map(PairGen::right),
        };
        let value = match sigma {
            None => self.b_base(w, v)?,
            Some(g) => {
                // v = g . v' with d(v) = d(v') + 1
                let vp = v_act(self.sys, g, v);
                debug_assert_eq!(vp.dim(), v.dim() - 1);
                let gw = v_act(self.sys, g, w);
                let head = self.b_poly_with_policy(&gw, &vp, policy)?;
                if gw.dim() > w.dim() {
                    let tail = self.b_poly_with_policy(w, &vp, policy)?;
                    &head + &(&LaurentPoly::abar() * &tail)
                } else {
                    head
                }
            }
        };
        let tbl = match policy {
            BPolicy::Right => &mut self.b_tbl,
            BPolicy::Mixed => &mut self.b_mixed_tbl,
        };
        tbl.insert((w.clone(), v.clone()), value.clone());
        Ok(value)
    }

    /// A generator move `g` with `d(g.v) = d(v) - 1` under the mixed
    /// policy, or `None` at the base case (`b`-part 1 and `a`-part
    /// maximal in `W^I`).
    fn mixed_step(&self, v: &VElement) -> Option<PairGen> {
        for s in 0..self.sys.rank() {
            let sa = self.sys.mul_gen(&v.a, s, Side::Left);
            if sa.length() > v.a.length() && self.sys.in_quotient(&sa, v.i_set) {
                return Some(PairGen::left(s));
            }
        }
        self.sys.first_descent(&v.b, Side::Left).map(PairGen::right)
    }

    /// Base of the recursion: `b_{[I,a1,b1],[J,a2,1]}` is zero unless
    /// `I` is contained in `J` and `b1` lies in `W_J`, and otherwise
    /// equals `abar^{|J|-|I|} Rtilde_{a2 b1, a1}`.
    fn b_base(&mut self, w: &VElement, v: &VElement) -> Result<LaurentPoly, CoxError> {
        debug_assert!(v.b.is_identity() || self.mixed_applies(v));
        if !w.i_set.is_subset(&v.i_set) || !w.b.support().is_subset(&v.i_set) {
            return Ok(LaurentPoly::zero());
        }
        let a2b1 = self.sys.mul(&v.a, &w.b)?;
        let r = r_poly(self.sys, &mut self.r_tbl, &a2b1, &w.a)?;
        let n = v.i_set.len() - w.i_set.len();
        Ok(&LaurentPoly::abar_pow(n) * &r)
    }

    fn mixed_applies(&self, v: &VElement) -> bool {
        // the mixed policy only bottoms out where the right policy does
        v.b.is_identity()
    }

    // ----- order relations -----

    /// The order on `V`: `w <= v` iff `b_{w,v}` is nonzero.
    pub fn v_leq(&mut self, w: &VElement, v: &VElement) -> Result<bool, CoxError> {
        Ok(!self.b_poly(w, v)?.is_zero())
    }

    /// The literal generating relation `<=_1`: containment of `I`, with
    /// `a` shrinking and `b` growing in Bruhat order.
    pub fn leq1(&self, w: &VElement, v: &VElement) -> Result<bool, CoxError> {
        Ok(w.i_set.is_subset(&v.i_set)
            && self.sys.bruhat_leq(&v.a, &w.a)?
            && self.sys.bruhat_leq(&w.b, &v.b)?)
    }

    /// The literal generating relation `<=_2`: `b1 = b2 c` length-
    /// additively with `c` in `W_J` and `a2 c <= a1`.
    pub fn leq2(&self, w: &VElement, v: &VElement) -> Result<bool, CoxError> {
        if !w.i_set.is_subset(&v.i_set) {
            return Ok(false);
        }
        let c = self.sys.mul(&self.sys.inv(&v.b), &w.b)?;
        if !c.support().is_subset(&v.i_set) {
            return Ok(false);
        }
        if w.b.length() != v.b.length() + c.length() {
            return Ok(false);
        }
        let a2c = self.sys.mul(&v.a, &c)?;
        self.sys.bruhat_leq(&a2c, &w.a)
    }

    /// The closed interval `[w, v]`, via bounded candidate generation
    /// and the `b`-polynomial order test. Sorted by dimension, then
    /// arbitrarily but deterministically.
    pub fn v_interval(&mut self, w: &VElement, v: &VElement) -> Result<Vec<VElement>, CoxError> {
        let mut out = Vec::new();
        if !self.v_leq(w, v)? {
            return Ok(out);
        }
        let a_bound =
            w.a.length() + v.i_set.len() - w.i_set.len();
        for k in v.i_set.subsets() {
            // K ranges over subsets between I_w and I_v
            if !w.i_set.is_subset(&k) {
                continue;
            }
            let quots = self.sys.enumerate_quotient(k, Some(a_bound), self.element_limit)?;
            for a in quots {
                let b_bound = v.dim() + a.length() as i64 - k.len() as i64;
                if b_bound < 0 {
                    continue;
                }
                let bs = self.sys.enumerate_parabolic(
                    self.sys.full_set(),
                    Some(b_bound as usize),
                    self.element_limit,
                )?;
                for b in bs {
                    let z = VElement { i_set: k, a: a.clone(), b };
                    if self.v_leq(w, &z)? && self.v_leq(&z, v)? {
                        out.push(z);
                    }
                }
            }
        }
        out.sort_by_key(|z| (z.dim(), z.clone()));
        Ok(out)
    }

    // ----- c-polynomials -----

    /// Solves the KL-style conditions over the interval `[w, v]` with the
    /// `b`-table as the R-family. Returns `(p, P)` in the u- and q-forms.
    pub fn c_tables(&mut self, interval: &[VElement]) -> Result<KlTables<VElement>, CoxError> {
        let mut bmap: BTreeMap<(VElement, VElement), LaurentPoly> = BTreeMap::new();
        for x in interval {
            for y in interval {
                let p = self.b_poly(x, y)?;
                if !p.is_zero() {
                    bmap.insert((x.clone(), y.clone()), p);
                }
            }
        }
        kl_from_r(
            interval,
            |z| z.dim(),
            |x, y| bmap.contains_key(&(x.clone(), y.clone())),
            |x, y| bmap.get(&(x.clone(), y.clone())).cloned().unwrap_or_else(LaurentPoly::zero),
        )
    }

    /// `c_{w,v}` in the q-form, normalized with exponent `d(v) - d(w)`.
    pub fn c_poly(&mut self, w: &VElement, v: &VElement) -> Result<QPoly, CoxError> {
        if !self.v_leq(w, v)? {
            return Ok(QPoly::zero());
        }
        let interval = self.v_interval(w, v)?;
        let tables = self.c_tables(&interval)?;
        Ok(tables.q_of(w, v))
    }

    /// The inverse family: `sum (-1)^{d(z)-d(w)} c_{w,z} cinv_{z,v} = delta`.
    pub fn c_inv_poly(&mut self, w: &VElement, v: &VElement) -> Result<QPoly, CoxError> {
        if !self.v_leq(w, v)? {
            return Ok(QPoly::zero());
        }
        let interval = self.v_interval(w, v)?;
        let tables = self.c_tables(&interval)?;
        let mut bmap: BTreeMap<(VElement, VElement), bool> = BTreeMap::new();
        for x in interval.iter() {
            for y in interval.iter() {
                bmap.insert((x.clone(), y.clone()), self.v_leq(x, y)?);
            }
        }
        let inv = invert_kl(
            &interval,
            |z| z.dim(),
            |x, y| *bmap.get(&(x.clone(), y.clone())).unwrap_or(&false),
            |x, y| tables.q_of(x, y),
        );
        Ok(inv.get(&(w.clone(), v.clone())).cloned().unwrap_or_else(QPoly::zero))
    }

    // ----- graph and diagnostics -----

    /// The edge criterion via the derivative: nonzero `b'_{w,v}(1)`,
    /// equivalently a nonzero `abar^1`-coefficient.
    pub fn v_graph_edge(&mut self, w: &VElement, v: &VElement) -> Result<bool, CoxError> {
        Ok(!self.b_poly(w, v)?.derivative_at_one().is_zero())
    }

    /// The combinatorial edge characterization: `w = r.v` for a pair
    /// reflection with `d(w) < d(v)`, or an `I`-augmentation by a single
    /// generator with a common right factor `f` in `W_J`.
    pub fn v_graph_edge_combinatorial(
        &mut self,
        w: &VElement,
        v: &VElement,
    ) -> Result<bool, CoxError> {
        if w.dim() < v.dim() {
            let e = self.sys.identity();
            for t in self.sys.all_reflections(self.element_limit)? {
                if &v_act_pair(self.sys, &t.elem, &e, v) == w
                    || &v_act_pair(self.sys, &e, &t.elem, v) == w
                {
                    return Ok(true);
                }
            }
        }
        if w.i_set.is_subset(&v.i_set) && v.i_set.len() == w.i_set.len() + 1 {
            let wj = self.sys.enumerate_parabolic(v.i_set, None, self.element_limit)?;
            for f in wj {
                if self.sys.mul(&v.a, &f)? == w.a && self.sys.mul(&v.b, &f)? == w.b {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Number of graph edges incident to `z` with both endpoints inside
    /// the closed interval `[w, v]`.
    pub fn deodhar_count(
        &mut self,
        w: &VElement,
        z: &VElement,
        v: &VElement,
    ) -> Result<usize, CoxError> {
        let interval = self.v_interval(w, v)?;
        let mut count = 0;
        for y in &interval {
            if y != z && (self.v_graph_edge(z, y)? || self.v_graph_edge(y, z)?) {
                count += 1;
            }
        }
        Ok(count)
    }

    /// The Moebius function of the interval `[w, v]`.
    pub fn mobius(&mut self, w: &VElement, v: &VElement) -> Result<BigInt, CoxError> {
        let interval = self.v_interval(w, v)?;
        let mut mu: BTreeMap<VElement, BigInt> = BTreeMap::new();
        // interval is sorted by dimension, a linear extension
        for z in &interval {
            let value = if z == w {
                BigInt::from(1)
            } else {
                let mut acc = BigInt::zero();
                for y in &interval {
                    if y != z && self.v_leq(y, z)? {
                        if let Some(m) = mu.get(y) {
                            acc += m;
                        }
                    }
                }
                -acc
            };
            mu.insert(z.clone(), value);
        }
        Ok(mu.get(v).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Covering pairs inside an interval slice.
    pub fn covers(&mut self, interval: &[VElement]) -> Result<Vec<(VElement, VElement)>, CoxError> {
        let mut out = Vec::new();
        for x in interval {
            'pair: for y in interval {
                if x == y || !self.v_leq(x, y)? {
                    continue;
                }
                for z in interval {
                    if z != x && z != y && self.v_leq(x, z)? && self.v_leq(z, y)? {
                        continue 'pair;
                    }
                }
                out.push((x.clone(), y.clone()));
            }
        }
        Ok(out)
    }

    /// Whether every maximal chain of `[w, v]` has `d(v) - d(w) + 1`
    /// elements; with the interval closed this is equivalent to every
    /// cover having dimension gap one.
    pub fn is_pure_interval(&mut self, w: &VElement, v: &VElement) -> Result<bool, CoxError> {
        let interval = self.v_interval(w, v)?;
        for (x, y) in self.covers(&interval)? {
            if y.dim() - x.dim() != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// All of `V` for finite `W`, sorted by dimension then arbitrarily but
/// deterministically.
pub fn enumerate_v(sys: &CoxeterSystem, element_limit: usize) -> Result<Vec<VElement>, CoxError> {
    let mut out = Vec::new();
    for i_set in sys.full_set().subsets() {
        let quots = sys.enumerate_quotient(i_set, None, element_limit)?;
        let all = sys.enumerate_parabolic(sys.full_set(), None, element_limit)?;
        for a in &quots {
            for b in &all {
                out.push(VElement { i_set, a: a.clone(), b: b.clone() });
            }
        }
    }
    out.sort_by_key(|z| (z.dim(), z.clone()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Bond;
    use alloc::string::ToString;
    use alloc::vec;

    fn a1() -> CoxeterSystem {
        CoxeterSystem::new(vec!["s".to_string()], vec![vec![Bond::Finite(1)]]).unwrap()
    }

    fn ve(sys: &CoxeterSystem, i: GenSet, a: &Element, b: &Element) -> VElement {
        VElement::new(sys, i, a.clone(), b.clone()).unwrap()
    }

    #[test]
    fn dims_a1() {
        let sys = a1();
        let e = sys.identity();
        let s = sys.generator(0);
        let full = sys.full_set();
        assert_eq!(ve(&sys, full, &e, &s).dim(), 2);
        assert_eq!(ve(&sys, GenSet::EMPTY, &e, &e).dim(), 0);
        assert_eq!(ve(&sys, GenSet::EMPTY, &s, &e).dim(), -1);
    }

    #[test]
    fn act_a1() {
        let sys = a1();
        let e = sys.identity();
        let s = sys.generator(0);
        let full = sys.full_set();
        let v0 = ve(&sys, GenSet::EMPTY, &e, &e);
        assert_eq!(v_act(&sys, PairGen::left(0), &v0), ve(&sys, GenSet::EMPTY, &s, &e));
        let v1 = ve(&sys, full, &e, &e);
        assert_eq!(v_act(&sys, PairGen::left(0), &v1), ve(&sys, full, &e, &s));
        assert_eq!(v_act(&sys, PairGen::right(0), &v0), ve(&sys, GenSet::EMPTY, &e, &s));
        // each generator acts as an involution
        for v in enumerate_v(&sys, 100).unwrap() {
            for g in [PairGen::left(0), PairGen::right(0)] {
                assert_eq!(v_act(&sys, g, &v_act(&sys, g, &v)), v);
            }
        }
    }

    #[test]
    fn b_values_a1() {
        let sys = a1();
        let e = sys.identity();
        let s = sys.generator(0);
        let full = sys.full_set();
        let mut ctx = VCtx::new(&sys);
        let b = |ctx: &mut VCtx, w: &VElement, v: &VElement| ctx.b_poly(w, v).unwrap();
        let w1 = ve(&sys, GenSet::EMPTY, &e, &e);
        let v1 = ve(&sys, full, &e, &e);
        assert_eq!(b(&mut ctx, &w1, &v1), LaurentPoly::abar());
        let w2 = ve(&sys, GenSet::EMPTY, &e, &s);
        assert_eq!(b(&mut ctx, &w2, &v1), LaurentPoly::zero());
        let v2 = ve(&sys, full, &e, &s);
        assert_eq!(b(&mut ctx, &w1, &v2), LaurentPoly::abar_pow(2));
        let w3 = ve(&sys, GenSet::EMPTY, &s, &e);
        let expect = &LaurentPoly::abar_pow(3) + &LaurentPoly::abar();
        assert_eq!(b(&mut ctx, &w3, &v2), expect);
    }

    #[test]
    fn order_and_mobius_a1() {
        let sys = a1();
        let e = sys.identity();
        let s = sys.generator(0);
        let full = sys.full_set();
        let mut ctx = VCtx::new(&sys);
        let w1 = ve(&sys, GenSet::EMPTY, &s, &e);
        let v1 = ve(&sys, GenSet::EMPTY, &e, &e);
        assert!(ctx.leq1(&w1, &v1).unwrap());
        let w2 = ve(&sys, GenSet::EMPTY, &s, &s);
        let v2 = ve(&sys, full, &e, &e);
        assert!(ctx.leq2(&w2, &v2).unwrap());
        let w3 = ve(&sys, GenSet::EMPTY, &e, &s);
        assert!(!ctx.v_leq(&w3, &v2).unwrap());
        // intervals
        let bot = ve(&sys, GenSet::EMPTY, &e, &e);
        assert_eq!(ctx.v_interval(&bot, &v2).unwrap().len(), 2);
        let w4 = ve(&sys, GenSet::EMPTY, &s, &e);
        let v4 = ve(&sys, full, &e, &s);
        assert_eq!(ctx.v_interval(&w4, &v4).unwrap().len(), 6);
        // Moebius values
        assert_eq!(ctx.mobius(&v2, &v2).unwrap(), BigInt::from(1));
        assert_eq!(ctx.mobius(&bot, &v2).unwrap(), BigInt::from(-1));
        assert_eq!(ctx.mobius(&w4, &v4).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn edges_a1() {
        let sys = a1();
        let e = sys.identity();
        let s = sys.generator(0);
        let full = sys.full_set();
        let mut ctx = VCtx::new(&sys);
        let bot = ve(&sys, GenSet::EMPTY, &e, &e);
        let v1 = ve(&sys, full, &e, &e);
        let v2 = ve(&sys, full, &e, &s);
        let w3 = ve(&sys, GenSet::EMPTY, &e, &s);
        assert!(ctx.v_graph_edge(&bot, &v1).unwrap());
        assert!(ctx.v_graph_edge(&v1, &v2).unwrap());
        assert!(!ctx.v_graph_edge(&w3, &v1).unwrap());
        // the two criteria agree on all pairs
        let all = enumerate_v(&sys, 100).unwrap();
        for w in &all {
            for v in &all {
                assert_eq!(
                    ctx.v_graph_edge(w, v).unwrap(),
                    ctx.v_graph_edge_combinatorial(w, v).unwrap(),
                    "edge mismatch"
                );
            }
        }
    }

    #[test]
    fn c_trivial_a1() {
        let sys = a1();
        let mut ctx = VCtx::new(&sys);
        let all = enumerate_v(&sys, 100).unwrap();
        assert_eq!(all.len(), 6);
        for w in &all {
            for v in &all {
                if ctx.v_leq(w, v).unwrap() {
                    assert!(ctx.c_poly(w, v).unwrap().is_one());
                    assert!(ctx.c_inv_poly(w, v).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn policies_agree_a1() {
        let sys = a1();
        let mut ctx = VCtx::new(&sys);
        let all = enumerate_v(&sys, 100).unwrap();
        for w in &all {
            for v in &all {
                let right = ctx.b_poly_with_policy(w, v, BPolicy::Right).unwrap();
                let mixed = ctx.b_poly_with_policy(w, v, BPolicy::Mixed).unwrap();
                assert_eq!(right, mixed);
            }
        }
    }
}
