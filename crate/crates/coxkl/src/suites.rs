//! Named verification suites. Each suite checks one family of exact
//! identities relating the two computation routes (the orbit-poset
//! recursion on V and the twisted-order polynomials on the extended
//! system) and returns a machine-readable report.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use coxkl_core::coxeter::{Bond, CoxeterSystem, Element, GenSet};
use coxkl_core::hat::{HatConfig, HatCtx, HatSystem, OmegaElement};
use coxkl_core::kl::{invert_kl, kl_from_r, r_poly, PolyTable, TableKind};
use coxkl_core::laurent::LaurentPoly;
use coxkl_core::springer::{enumerate_v, v_act, PairGen, VCtx, VElement};

use crate::formats::{config_digest, system_digest};
use crate::grammar::{format_omega, format_velement, format_word};
use crate::report::{SuiteBuilder, SuiteReport};
use crate::{CliError, Result};

pub const SUITE_NAMES: &[&str] = &[
    "iso",
    "lengths",
    "b-dual-route",
    "involution",
    "finite-classical",
    "hat-invariance",
    "purity-mobius",
    "graph-deodhar",
    "remark",
    "enumeration-invariance",
];

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub slow: bool,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> SuiteOptions {
        SuiteOptions { slow: false, seed: 0xC0C0_CAFE }
    }
}

const LIMIT: usize = 2_000_000;
/// Pair grids are exhaustive up to this poset size; above it the suites
/// fall back to seeded sampling with the documented minimum counts.
const EXHAUSTIVE_POSET: usize = 100;

pub fn run_suite(
    name: &str,
    sys: &CoxeterSystem,
    cfg: &HatConfig,
    opts: &SuiteOptions,
) -> Result<SuiteReport> {
    match name {
        "iso" => suite_iso(sys, cfg),
        "lengths" => suite_lengths(sys, cfg),
        "b-dual-route" => suite_b_dual_route(sys, cfg, opts),
        "involution" => suite_involution(sys, cfg, opts),
        "finite-classical" => suite_finite_classical(sys, cfg, opts),
        "hat-invariance" => suite_hat_invariance(sys, cfg),
        "purity-mobius" => suite_purity_mobius(sys, cfg),
        "graph-deodhar" => suite_graph_deodhar(sys, cfg),
        "remark" => suite_remark(sys, cfg, opts),
        "enumeration-invariance" => suite_enumeration_invariance(sys, cfg),
        other => Err(CliError(format!(
            "unknown suite `{other}`; expected one of {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

fn run_digest(sys: &CoxeterSystem, cfg: &HatConfig) -> String {
    config_digest(&[system_digest(sys), format!("{cfg:?}")])
}

fn poly_str(p: &LaurentPoly) -> String {
    format!("{p}")
}

fn sample_index_pairs(rng: &mut StdRng, n: usize, count: usize) -> Vec<(usize, usize)> {
    (0..count).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
}

/// All ordered index pairs when the poset is small, a seeded sample of
/// at least `min_sample` otherwise.
fn pair_grid(n: usize, min_sample: usize, seed: u64) -> Vec<(usize, usize)> {
    if n <= EXHAUSTIVE_POSET {
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push((i, j));
            }
        }
        out
    } else {
        let mut rng = StdRng::seed_from_u64(seed);
        sample_index_pairs(&mut rng, n, min_sample)
    }
}

fn hat_is_finite(hs: &HatSystem) -> bool {
    hs.hat.longest_element(hs.hat.full_set(), LIMIT).is_ok()
}

// -------------------------------------------------------------------- iso

/// Theorem (main)(ii): cardinalities, bijectivity and equivariance of
/// the map from V onto the double-coset union, and agreement of all
/// four order definitions (generated order on V, nonzero-b test,
/// nonzero-R^A test, translated reverse Bruhat order).
fn suite_iso(sys: &CoxeterSystem, cfg: &HatConfig) -> Result<SuiteReport> {
    let mut b = SuiteBuilder::new("iso");
    let hs = HatSystem::build(sys, cfg)?;
    let mut vctx = VCtx::new(sys);
    let mut hctx = HatCtx::new(&hs);
    let vs = enumerate_v(sys, LIMIT)?;
    let os = hs.omega_enumerate(LIMIT)?;

    // cardinality sum_I |W^I| * |W|
    let wn = sys.enumerate_parabolic(sys.full_set(), None, LIMIT)?.len();
    let mut expected = 0usize;
    for i_set in sys.full_set().subsets() {
        expected += sys.enumerate_quotient(i_set, None, LIMIT)?.len() * wn;
    }
    b.case("cardinality |V| = |Omega| = sum_I |W^I||W|", format!("{expected}"), {
        if vs.len() == os.len() {
            format!("{}", vs.len())
        } else {
            format!("|V|={} |Omega|={}", vs.len(), os.len())
        }
    });

    // bijection and round trips
    let image: BTreeSet<OmegaElement> = vs.iter().map(|v| hs.phi(v)).collect();
    let target: BTreeSet<OmegaElement> = os.iter().cloned().collect();
    b.check("phi image equals Omega", image == target, "image mismatch");
    let mut roundtrip = true;
    for v in &vs {
        if &hs.phi_inv(&hs.phi(v))? != v {
            roundtrip = false;
        }
    }
    for o in &os {
        if &hs.phi(&hs.phi_inv(o)?) != o {
            roundtrip = false;
        }
    }
    b.check("phi round trips with its inverse", roundtrip, "round trip failed");

    // equivariance: phi((a,b).v) = a phi(v) b^{-1} on the generators
    for v in &vs {
        for s in 0..sys.rank() {
            let x = hs.omega_compose(&hs.phi(v))?;
            let sg = hs.lift(&sys.generator(s))?;
            let left = hs.omega_compose(&hs.phi(&v_act(sys, PairGen::left(s), v)))?;
            let right = hs.omega_compose(&hs.phi(&v_act(sys, PairGen::right(s), v)))?;
            let ok = left == hs.hat.mul(&sg, &x)? && right == hs.hat.mul(&x, &sg)?;
            b.check(
                format!("equivariance at {} gen {}", format_velement(sys, v), sys.generator_name(s)),
                ok,
                "phi not equivariant",
            );
        }
    }

    // order agreement
    let n = vs.len();
    let mut gen_rel = vec![vec![false; n]; n];
    for (i, w) in vs.iter().enumerate() {
        for (j, v) in vs.iter().enumerate() {
            gen_rel[i][j] = i == j || vctx.leq1(w, v)? || vctx.leq2(w, v)?;
        }
    }
    // reflexive-transitive closure of the generating relations
    for k in 0..n {
        for i in 0..n {
            if gen_rel[i][k] {
                for j in 0..n {
                    if gen_rel[k][j] {
                        gen_rel[i][j] = true;
                    }
                }
            }
        }
    }
    let finite_hat = hat_is_finite(&hs);
    for (i, w) in vs.iter().enumerate() {
        for (j, v) in vs.iter().enumerate() {
            let by_b = vctx.v_leq(w, v)?;
            let by_ra = !hctx.r_a(&hs.phi(w), &hs.phi(v))?.is_zero();
            let mut ok = gen_rel[i][j] == by_b && by_b == by_ra;
            if finite_hat {
                let xw = hs.omega_compose(&hs.phi(w))?;
                let xv = hs.omega_compose(&hs.phi(v))?;
                ok = ok && by_b == hctx.leq_a_translated(&xw, &xv)?;
            }
            b.check(
                format!(
                    "order routes agree at ({}, {})",
                    format_velement(sys, w),
                    format_velement(sys, v)
                ),
                ok,
                format!("closure={} b={} ra={}", gen_rel[i][j], by_b, by_ra),
            );
        }
    }
    Ok(b.finish(run_digest(sys, cfg)))
}

// ---------------------------------------------------------------- lengths

/// Length bridges: the inversion-count twisted length against the
/// normal-form formula, ordinary length additivity of the normal form,
/// Theorem (main)(iii), and the finite-case length of the translated
/// map.
fn suite_lengths(sys: &CoxeterSystem, cfg: &HatConfig) -> Result<SuiteReport> {
    let mut b = SuiteBuilder::new("lengths");
    let hs = HatSystem::build(sys, cfg)?;
    let vs = enumerate_v(sys, LIMIT)?;
    let os = hs.omega_enumerate(LIMIT)?;
    for o in &os {
        let x = hs.omega_compose(o)?;
        let by_inversions = hs.twisted_length(&x)?;
        let by_formula = o.twisted_length(&hs);
        b.case(
            format!("twisted length of {}", format_omega(&hs, o)),
            format!("{by_formula}"),
            format!("{by_inversions}"),
        );
        let lz = hs.rank_base() - o.i_set.len();
        b.case(
            format!("plain length of {}", format_omega(&hs, o)),
            format!("{}", o.a.length() + lz + o.b.length()),
            format!("{}", x.length()),
        );
    }
    let s_card = sys.rank() as i64;
    for v in &vs {
        let o = hs.phi(v);
        b.case(
            format!("l_A(phi({})) = d - |S|", format_velement(sys, v)),
            format!("{}", v.dim() - s_card),
            format!("{}", o.twisted_length(&hs)),
        );
    }
    if let Ok(ws) = sys.longest_element(sys.full_set(), LIMIT) {
        let lws = ws.length() as i64;
        for v in &vs {
            let xp = hs.phi_prime(v, LIMIT)?;
            b.case(
                format!("l(phi'({})) = -d + |S| + l(wS)", format_velement(sys, v)),
                format!("{}", -v.dim() + s_card + lws),
                format!("{}", xp.length()),
            );
        }
    }
    Ok(b.finish(run_digest(sys, cfg)))
}

// ----------------------------------------------------------- b-dual-route

/// Theorem (main)(v): the b-polynomial from the orbit-poset recursion
/// equals `R^A` of the image pair, plus the generic-recursion route on
/// raw extended-group elements.
fn suite_b_dual_route(
    sys: &CoxeterSystem,
    cfg: &HatConfig,
    opts: &SuiteOptions,
) -> Result<SuiteReport> {
    let mut b = SuiteBuilder::new("b-dual-route");
    let hs = HatSystem::build(sys, cfg)?;
    let mut vctx = VCtx::new(sys);
    let mut hctx = HatCtx::new(&hs);
    let vs = enumerate_v(sys, LIMIT)?;
    let pairs = pair_grid(vs.len(), 1000, opts.seed);
    let exhaustive = vs.len() <= EXHAUSTIVE_POSET;
    for (i, j) in pairs {
        let (w, v) = (&vs[i], &vs[j]);
        let lhs = vctx.b_poly(w, v)?;
        let rhs = hctx.r_a(&hs.phi(w), &hs.phi(v))?;
        b.case(
            format!("b({}, {})", format_velement(sys, w), format_velement(sys, v)),
            poly_str(&lhs),
            poly_str(&rhs),
        );
        if exhaustive {
            let xw = hs.omega_compose(&hs.phi(w))?;
            let xv = hs.omega_compose(&hs.phi(v))?;
            let gen = hctx.r_a_generic(&xw, &xv)?;
            b.case(
                format!(
                    "generic route at ({}, {})",
                    format_velement(sys, w),
                    format_velement(sys, v)
                ),
                poly_str(&lhs),
                poly_str(&gen),
            );
        }
    }
    Ok(b.finish(run_digest(sys, cfg)))
}

// ------------------------------------------------------------- involution

/// Corollary maincor (i): `sum_z b_{w,z}(u) b_{z,v}(u^{-1}) = delta`.
fn suite_involution(
    sys: &CoxeterSystem,
    cfg: &HatConfig,
    opts: &SuiteOptions,
) -> Result<SuiteReport> {
    let mut b = SuiteBuilder::new("involution");
    let mut vctx = VCtx::new(sys);
    let vs = enumerate_v(sys, LIMIT)?;
    let pairs = pair_grid(vs.len(), 500, opts.seed);
    for (i, j) in pairs {
        let (w, v) = (&vs[i], &vs[j]);
        let mut acc = LaurentPoly::zero();
        for z in &vs {
            let first = vctx.b_poly(w, z)?;
            if first.is_zero() {
                continue;
            }
            let second = vctx.b_poly(z, v)?;
            acc = &acc + &(&first * &second.bar());
        }
        let delta = if w == v { LaurentPoly::one() } else { LaurentPoly::zero() };
        b.case(
            format!("delta({}, {})", format_velement(sys, w), format_velement(sys, v)),
            poly_str(&delta),
            poly_str(&acc),
        );
    }
    Ok(b.finish(run_digest(sys, cfg)))
}

// ------------------------------------------------------- finite-classical

/// Corollary finitecor: the translated map lands onto a classical
/// reverse Bruhat interval and carries b to classical R-polynomials and
/// c to inverse Kazhdan-Lusztig polynomials; also resolves the two
/// documented orientation ambiguities by brute force and records the
/// outcome in the report notes.
fn suite_finite_classical(
    sys: &CoxeterSystem,
    cfg: &HatConfig,
    opts: &SuiteOptions,
) -> Result<SuiteReport> {
    let mut b = SuiteBuilder::new("finite-classical");
    let hs = HatSystem::build(sys, cfg)?;
    if !hat_is_finite(&hs) {
        return Err(CliError("finite-classical requires a finite extended system".into()));
    }
    let mut vctx = VCtx::new(sys);
    let mut hctx = HatCtx::new(&hs);
    let vs = enumerate_v(sys, LIMIT)?;
    let ws = sys.longest_element(sys.full_set(), LIMIT)?;
    let ws_h = hs.lift(&ws)?;
    let z_empty = hs.z_of(GenSet::EMPTY);
    let top = hs.hat.prod(&[&ws_h, &z_empty, &ws_h])?;

    // image of phi' is the reverse Bruhat interval [wS z_emptyset wS, 1]
    let image: BTreeSet<Element> =
        vs.iter().map(|v| hs.phi_prime(v, LIMIT)).collect::<std::result::Result<_, _>>()?;
    let interval: BTreeSet<Element> =
        coxkl_core::kl::lower_interval(&hs.hat, &top)?.into_iter().collect();
    b.check(
        "phi' image equals the reverse Bruhat interval",
        image == interval,
        format!("image {} vs interval {}", image.len(), interval.len()),
    );

    let prime: Vec<Element> =
        vs.iter().map(|v| hs.phi_prime(v, LIMIT)).collect::<std::result::Result<_, _>>()?;

    // order reversal and finitecor (iv): b = Rtilde of the flipped image
    // pair
    let mut r_hat = PolyTable::new(TableKind::RTilde);
    for (i, w) in vs.iter().enumerate() {
        for (j, v) in vs.iter().enumerate() {
            let by_v = vctx.v_leq(w, v)?;
            let by_h = hs.hat.bruhat_leq(&prime[j], &prime[i])?;
            b.check(
                format!(
                    "order reversal at ({}, {})",
                    format_velement(sys, w),
                    format_velement(sys, v)
                ),
                by_v == by_h,
                format!("v_leq={by_v} reverse-bruhat={by_h}"),
            );
            let lhs = vctx.b_poly(w, v)?;
            let rhs = r_poly(&hs.hat, &mut r_hat, &prime[j], &prime[i])?;
            b.case(
                format!(
                    "b vs classical Rtilde at ({}, {})",
                    format_velement(sys, w),
                    format_velement(sys, v)
                ),
                poly_str(&lhs),
                poly_str(&rhs),
            );
        }
    }

    // finitecor (v): c = Q and c-inverse = P over the whole poset, via
    // one triangular solve per side
    let c_tables = vctx.c_tables(&vs)?;
    let mut leq_v: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    for i in 0..vs.len() {
        for j in 0..vs.len() {
            leq_v.insert((i, j), vctx.v_leq(&vs[i], &vs[j])?);
        }
    }
    let index_of: BTreeMap<&VElement, usize> = vs.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let c_inv = invert_kl(
        &vs,
        |v| v.dim(),
        |w, v| leq_v[&(index_of[w], index_of[v])],
        |w, v| c_tables.q_of(w, v),
    );

    let mut rmap: BTreeMap<(Element, Element), LaurentPoly> = BTreeMap::new();
    for x in &prime {
        for y in &prime {
            if hs.hat.bruhat_leq(x, y)? {
                rmap.insert((x.clone(), y.clone()), r_poly(&hs.hat, &mut r_hat, x, y)?);
            }
        }
    }
    let nodes: Vec<Element> = interval.iter().cloned().collect();
    let hat_tables = kl_from_r(
        &nodes,
        |e| e.length() as i64,
        |x, y| rmap.contains_key(&(x.clone(), y.clone())),
        |x, y| rmap.get(&(x.clone(), y.clone())).cloned().unwrap_or_else(LaurentPoly::zero),
    )?;
    let mut leq_h: BTreeMap<(Element, Element), bool> = BTreeMap::new();
    for x in &nodes {
        for y in &nodes {
            leq_h.insert((x.clone(), y.clone()), hs.hat.bruhat_leq(x, y)?);
        }
    }
    let hat_q = invert_kl(
        &nodes,
        |e| e.length() as i64,
        |x, y| leq_h[&(x.clone(), y.clone())],
        |x, y| hat_tables.q_of(x, y),
    );

    let c_pairs = pair_grid(vs.len(), 300, opts.seed);
    for (i, j) in c_pairs {
        let (w, v) = (&vs[i], &vs[j]);
        let key = (prime[j].clone(), prime[i].clone());
        let q = hat_q.get(&key).cloned().unwrap_or_else(coxkl_core::laurent::QPoly::zero);
        let p = hat_tables.q_of(&prime[j], &prime[i]);
        b.case(
            format!("c vs Q at ({}, {})", format_velement(sys, w), format_velement(sys, v)),
            format!("{}", c_tables.q_of(w, v)),
            format!("{q}"),
        );
        let ci = c_inv
            .get(&(w.clone(), v.clone()))
            .cloned()
            .unwrap_or_else(coxkl_core::laurent::QPoly::zero);
        b.case(
            format!("c-inverse vs P at ({}, {})", format_velement(sys, w), format_velement(sys, v)),
            format!("{ci}"),
            format!("{p}"),
        );
    }

    // orientation resolution for the statement c_{w,v} = P_A(phi(v),
    // phi(w)): evaluate every plausible reading on a few strictly
    // comparable pairs against the ground truth above
    let mut strict: Vec<(usize, usize)> = Vec::new();
    for i in 0..vs.len() {
        for j in 0..vs.len() {
            if i != j && leq_v[&(i, j)] {
                strict.push((i, j));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(opts.seed ^ 0x5eed);
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    while chosen.len() < 12.min(strict.len()) {
        let pick = strict[rng.gen_range(0..strict.len())];
        if !chosen.contains(&pick) {
            chosen.push(pick);
        }
    }
    let mut matches: BTreeMap<&str, bool> = BTreeMap::new();
    for name in ["P_A(phi(w),phi(v))", "P_A(phi(v),phi(w))", "P_{T+A}(phi(v),phi(w))", "P_{T+A}(phi(w),phi(v))"] {
        matches.insert(name, true);
    }
    for &(i, j) in &chosen {
        let (w, v) = (&vs[i], &vs[j]);
        let truth = c_tables.q_of(w, v);
        let (ow, ov) = (hs.phi(w), hs.phi(v));
        let candidates = [
            ("P_A(phi(w),phi(v))", hctx.p_a(&ow, &ov)?),
            ("P_A(phi(v),phi(w))", hctx.p_a(&ov, &ow)?),
            ("P_{T+A}(phi(v),phi(w))", hctx.p_complement(&ov, &ow)?),
            ("P_{T+A}(phi(w),phi(v))", hctx.p_complement(&ow, &ov)?),
        ];
        for (name, value) in candidates {
            if value != truth {
                if let Some(flag) = matches.get_mut(name) {
                    *flag = false;
                }
            }
        }
    }
    let surviving: Vec<&str> = matches.iter().filter(|(_, ok)| **ok).map(|(n, _)| *n).collect();
    b.note(format!(
        "orientation of `c = P_A` resolved on {} strict pairs: matching readings: {}",
        chosen.len(),
        if surviving.is_empty() { "none".to_string() } else { surviving.join(", ") }
    ));
    b.check(
        "some orientation of the c = P_A statement matches",
        !surviving.is_empty(),
        "no orientation matched",
    );

    // orientation of Rtilde_{z_I, z_J} = abar^{|J| - |I|} for I within J
    let mut as_written = true;
    let mut flipped = true;
    for i_set in sys.full_set().subsets() {
        for j_set in sys.full_set().subsets() {
            if !i_set.is_subset(&j_set) || i_set == j_set {
                continue;
            }
            let zi = hs.z_of(i_set);
            let zj = hs.z_of(j_set);
            let expected = LaurentPoly::abar_pow(j_set.len() - i_set.len());
            if r_poly(&hs.hat, &mut r_hat, &zi, &zj)? != expected {
                as_written = false;
            }
            if r_poly(&hs.hat, &mut r_hat, &zj, &zi)? != expected {
                flipped = false;
            }
        }
    }
    b.note(format!(
        "Rtilde power formula between the z-elements (I inside J, so z_I is the longer element): literal reading Rtilde(z_I, z_J) {}; swapped reading Rtilde(z_J, z_I) {}",
        if as_written { "holds" } else { "fails" },
        if flipped { "holds" } else { "fails" }
    ));
    b.check(
        "one orientation of the z-pair Rtilde formula holds",
        as_written || flipped,
        "neither orientation matched",
    );
    Ok(b.finish(run_digest(sys, cfg)))
}

// --------------------------------------------------------- hat-invariance

/// The V-side tables do not depend on the choice of extension bonds;
/// the R^A and P_A tables transported through phi agree across every
/// admissible extension.
fn suite_hat_invariance(sys: &CoxeterSystem, cfg: &HatConfig) -> Result<SuiteReport> {
    let mut b = SuiteBuilder::new("hat-invariance");
    let mut variants: Vec<(String, HatConfig)> = vec![("default".into(), cfg.clone())];
    if sys.rank() == 1 {
        let name = sys.generator_name(0).to_string();
        let mut c4 = cfg.clone();
        c4.hat_bonds.insert(name.clone(), Bond::Finite(4));
        variants.push(("bond 4".into(), c4));
        let mut cinf = cfg.clone();
        cinf.hat_bonds.insert(name, Bond::Infinite);
        variants.push(("bond inf".into(), cinf));
    } else {
        let mut c3 = cfg.clone();
        c3.theta_bonds.push((
            sys.generator_name(0).to_string(),
            sys.generator_name(1).to_string(),
            Bond::Finite(3),
        ));
        variants.push(("theta-theta bond 3".into(), c3));
    }

    let mut vctx = VCtx::new(sys);
    let vs = enumerate_v(sys, LIMIT)?;
    let mut b_table: Vec<LaurentPoly> = Vec::new();
    for w in &vs {
        for v in &vs {
            b_table.push(vctx.b_poly(w, v)?);
        }
    }

    let mut p_tables: Vec<(String, Vec<coxkl_core::laurent::QPoly>)> = Vec::new();
    for (label, variant) in &variants {
        let hs = HatSystem::build(sys, variant)?;
        let mut hctx = HatCtx::new(&hs);
        let mut k = 0usize;
        for w in &vs {
            for v in &vs {
                let ra = hctx.r_a(&hs.phi(w), &hs.phi(v))?;
                b.case(
                    format!(
                        "R^A under {label} at ({}, {})",
                        format_velement(sys, w),
                        format_velement(sys, v)
                    ),
                    poly_str(&b_table[k]),
                    poly_str(&ra),
                );
                k += 1;
            }
        }
        // full P_A table over the poset image in one solve
        let images: Vec<OmegaElement> = vs.iter().map(|v| hs.phi(v)).collect();
        let mut rmap: BTreeMap<(OmegaElement, OmegaElement), LaurentPoly> = BTreeMap::new();
        for x in &images {
            for y in &images {
                let p = hctx.r_a(x, y)?;
                if !p.is_zero() {
                    rmap.insert((x.clone(), y.clone()), p);
                }
            }
        }
        let mut nodes = images.clone();
        nodes.sort_by_key(|o| (o.twisted_length(&hs), o.clone()));
        let tables = kl_from_r(
            &nodes,
            |o| o.twisted_length(&hs),
            |x, y| rmap.contains_key(&(x.clone(), y.clone())),
            |x, y| rmap.get(&(x.clone(), y.clone())).cloned().unwrap_or_else(LaurentPoly::zero),
        )?;
        let mut table = Vec::new();
        for w in &vs {
            for v in &vs {
                table.push(tables.q_of(&hs.phi(w), &hs.phi(v)));
            }
        }
        p_tables.push((label.clone(), table));
    }
    let (base_label, base_table) = &p_tables[0];
    for (label, table) in &p_tables[1..] {
        let mut k = 0usize;
        for w in &vs {
            for v in &vs {
                b.case(
                    format!(
                        "P_A under {label} vs {base_label} at ({}, {})",
                        format_velement(sys, w),
                        format_velement(sys, v)
                    ),
                    format!("{}", base_table[k]),
                    format!("{}", table[k]),
                );
                k += 1;
            }
        }
    }
    Ok(b.finish(run_digest(sys, cfg)))
}

// ---------------------------------------------------------- purity-mobius

/// Corollary maincor (ii)-(iii) consequences: chain purity and Moebius
/// value `(-1)^n` on every interval of dimension gap at most 4.
fn suite_purity_mobius(sys: &CoxeterSystem, cfg: &HatConfig) -> Result<SuiteReport> {
    let mut b = SuiteBuilder::new("purity-mobius");
    let mut vctx = VCtx::new(sys);
    let vs = enumerate_v(sys, LIMIT)?;
    for w in &vs {
        for v in &vs {
            if !vctx.v_leq(w, v)? {
                continue;
            }
            let gap = v.dim() - w.dim();
            if gap > 4 {
                continue;
            }
            let pure = vctx.is_pure_interval(w, v)?;
            b.check(
                format!(
                    "purity of [{}, {}]",
                    format_velement(sys, w),
                    format_velement(sys, v)
                ),
                pure,
                "impure maximal chain",
            );
            let mu = vctx.mobius(w, v)?;
            let expected = if gap % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            b.case(
                format!(
                    "mobius of [{}, {}]",
                    format_velement(sys, w),
                    format_velement(sys, v)
                ),
                format!("{expected}"),
                format!("{mu}"),
            );
        }
    }
    Ok(b.finish(run_digest(sys, cfg)))
}

// ---------------------------------------------------------- graph-deodhar

/// Corollary maincor2: equivalence of the derivative and combinatorial
/// edge criteria, the path characterization of the order, and
/// Deodhar-style edge-count lower bounds on every interval.
fn suite_graph_deodhar(sys: &CoxeterSystem, cfg: &HatConfig) -> Result<SuiteReport> {
    let mut b = SuiteBuilder::new("graph-deodhar");
    let mut vctx = VCtx::new(sys);
    let vs = enumerate_v(sys, LIMIT)?;
    let n = vs.len();
    let mut edge = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            let by_deriv = vctx.v_graph_edge(&vs[i], &vs[j])?;
            let by_comb = vctx.v_graph_edge_combinatorial(&vs[i], &vs[j])?;
            // the derivative criterion applies to comparable pairs; the
            // combinatorial one must agree there
            let comparable = vctx.v_leq(&vs[i], &vs[j])?;
            let effective = by_deriv && comparable;
            edge[i][j] = effective;
            b.check(
                format!(
                    "edge criteria agree at ({}, {})",
                    format_velement(sys, &vs[i]),
                    format_velement(sys, &vs[j])
                ),
                effective == (by_comb && comparable),
                format!("derivative={by_deriv} combinatorial={by_comb}"),
            );
        }
    }
    // path characterization
    let mut reach = edge.clone();
    for i in 0..n {
        reach[i][i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let leq = vctx.v_leq(&vs[i], &vs[j])?;
            b.check(
                format!(
                    "path characterization at ({}, {})",
                    format_velement(sys, &vs[i]),
                    format_velement(sys, &vs[j])
                ),
                leq == reach[i][j],
                format!("leq={} reachable={}", leq, reach[i][j]),
            );
        }
    }
    // Deodhar-style inequality on all chains w <= z <= v
    for i in 0..n {
        for j in 0..n {
            if !vctx.v_leq(&vs[i], &vs[j])? {
                continue;
            }
            let interval = vctx.v_interval(&vs[i], &vs[j])?;
            let idx: Vec<usize> =
                interval.iter().map(|z| vs.iter().position(|u| u == z).unwrap()).collect();
            let need = (vs[j].dim() - vs[i].dim()) as usize;
            let mut bad: Option<usize> = None;
            for &zi in &idx {
                let mut count = 0;
                for &yi in &idx {
                    if yi != zi && (edge[zi][yi] || edge[yi][zi]) {
                        count += 1;
                    }
                }
                if count < need {
                    bad = Some(zi);
                    break;
                }
            }
            b.check(
                format!(
                    "edge-count bound on [{}, {}]",
                    format_velement(sys, &vs[i]),
                    format_velement(sys, &vs[j])
                ),
                bad.is_none(),
                match bad {
                    Some(zi) => format!("deficient at {}", format_velement(sys, &vs[zi])),
                    None => String::new(),
                },
            );
        }
    }
    Ok(b.finish(run_digest(sys, cfg)))
}

// ----------------------------------------------------------------- remark

/// The classical factorization identity behind the finite-case
/// corollary, checked directly on classical R-polynomials.
fn suite_remark(sys: &CoxeterSystem, cfg: &HatConfig, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut b = SuiteBuilder::new("remark");
    let hs = HatSystem::build(sys, cfg)?;
    let mut hctx = HatCtx::new(&hs);
    let w_all = sys.enumerate_parabolic(sys.full_set(), None, LIMIT)?;
    let subsets = sys.full_set().subsets();
    let mut quotients: BTreeMap<GenSet, Vec<Element>> = BTreeMap::new();
    for i_set in &subsets {
        quotients.insert(*i_set, sys.enumerate_quotient(*i_set, None, LIMIT)?);
    }
    let mut tuples: Vec<(GenSet, Element, GenSet, Element, Element)> = Vec::new();
    if sys.rank() == 1 {
        for i1 in &subsets {
            for a1 in &quotients[i1] {
                for i2 in &subsets {
                    for a2 in &quotients[i2] {
                        for b2 in &w_all {
                            tuples.push((*i1, a1.clone(), *i2, a2.clone(), b2.clone()));
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(opts.seed);
        for _ in 0..200 {
            let i1 = subsets[rng.gen_range(0..subsets.len())];
            let i2 = subsets[rng.gen_range(0..subsets.len())];
            let q1 = &quotients[&i1];
            let q2 = &quotients[&i2];
            tuples.push((
                i1,
                q1[rng.gen_range(0..q1.len())].clone(),
                i2,
                q2[rng.gen_range(0..q2.len())].clone(),
                w_all[rng.gen_range(0..w_all.len())].clone(),
            ));
        }
    }
    for (i1, a1, i2, a2, b2) in tuples {
        let z1 = hs.z_of(i1);
        let z2 = hs.z_of(i2);
        let (lhs, rhs) = hctx.remark_check(&a1, &z1, &a2, &z2, &b2)?;
        b.case(
            format!(
                "factorization at a1={} z[{}] a2={} z[{}] b2={}",
                format_word(sys, &a1),
                crate::grammar::format_genset(sys, i1),
                format_word(sys, &a2),
                crate::grammar::format_genset(sys, i2),
                format_word(sys, &b2)
            ),
            poly_str(&lhs),
            poly_str(&rhs),
        );
    }
    Ok(b.finish(run_digest(sys, cfg)))
}

// ------------------------------------------------- enumeration-invariance

/// The b- and c-tables do not depend on the chosen enumeration of the
/// generators (which parametrizes the z-elements).
fn suite_enumeration_invariance(sys: &CoxeterSystem, cfg: &HatConfig) -> Result<SuiteReport> {
    let mut b = SuiteBuilder::new("enumeration-invariance");
    if sys.rank() < 2 {
        b.check("single enumeration", true, "");
        b.note("rank 1 has a unique generator enumeration");
        return Ok(b.finish(run_digest(sys, cfg)));
    }
    // reversed generator enumeration with the correspondingly permuted
    // bond matrix
    let names: Vec<String> = sys.generator_names().iter().rev().cloned().collect();
    let rank = sys.rank();
    let mut bonds = vec![vec![Bond::Finite(2); rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            bonds[i][j] = sys.bond(rank - 1 - i, rank - 1 - j);
        }
    }
    let sys2 = CoxeterSystem::new(names, bonds)?;
    let map_elem = |x: &Element| -> Result<Element> {
        let names: Vec<String> =
            x.word().iter().map(|&i| sys.generator_name(i as usize).to_string()).collect();
        Ok(sys2.reduce_names(&names)?)
    };
    let map_set = |s: GenSet| -> Result<GenSet> {
        let mut out = GenSet::EMPTY;
        for i in s.iter() {
            out.insert(sys2.generator_index(sys.generator_name(i))?);
        }
        Ok(out)
    };
    let mut vctx1 = VCtx::new(sys);
    let mut vctx2 = VCtx::new(&sys2);
    let vs = enumerate_v(sys, LIMIT)?;
    let mapped: Vec<VElement> = vs
        .iter()
        .map(|v| {
            Ok(VElement::new(&sys2, map_set(v.i_set)?, map_elem(&v.a)?, map_elem(&v.b)?)?)
        })
        .collect::<Result<_>>()?;
    for (i, w) in vs.iter().enumerate() {
        for (j, v) in vs.iter().enumerate() {
            let b1 = vctx1.b_poly(w, v)?;
            let b2 = vctx2.b_poly(&mapped[i], &mapped[j])?;
            b.case(
                format!(
                    "b under both enumerations at ({}, {})",
                    format_velement(sys, w),
                    format_velement(sys, v)
                ),
                poly_str(&b1),
                poly_str(&b2),
            );
        }
    }
    let mut sorted2 = mapped.clone();
    sorted2.sort();
    let c1 = vctx1.c_tables(&vs)?;
    let c2 = vctx2.c_tables(&sorted2)?;
    for (i, w) in vs.iter().enumerate() {
        for (j, v) in vs.iter().enumerate() {
            b.case(
                format!(
                    "c under both enumerations at ({}, {})",
                    format_velement(sys, w),
                    format_velement(sys, v)
                ),
                format!("{}", c1.q_of(w, v)),
                format!("{}", c2.q_of(&mapped[i], &mapped[j])),
            );
        }
    }
    Ok(b.finish(run_digest(sys, cfg)))
}
