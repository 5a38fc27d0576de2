//! Acceptance gate: one test per criterion, each emitting a single
//! pass/fail line. Run with `--nocapture` to see the lines for passing
//! criteria as well.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use coxkl_core::coxeter::{Bond, CoxeterSystem, Element, Side};
use coxkl_core::hat::{HatConfig, HatCtx, HatSystem};
use coxkl_core::kl::{
    kl_p, r_gf_oracle, r_poly_with_policy, reflection_order_from_w0, DescentPolicy, PolyTable,
    TableKind,
};
use coxkl_core::springer::{enumerate_v, BPolicy, VCtx};

use coxkl::suites::{run_suite, SuiteOptions};

const LIMIT: usize = 2_000_000;

fn system(name: &str) -> CoxeterSystem {
    let f = Bond::Finite;
    let (gens, bonds): (Vec<&str>, Vec<Vec<Bond>>) = match name {
        "a1" => (vec!["s"], vec![vec![f(1)]]),
        "a2" => (vec!["s1", "s2"], vec![vec![f(1), f(3)], vec![f(3), f(1)]]),
        "b2" => (vec!["s1", "s2"], vec![vec![f(1), f(4)], vec![f(4), f(1)]]),
        "a3" => (
            vec!["s1", "s2", "s3"],
            vec![
                vec![f(1), f(3), f(2)],
                vec![f(3), f(1), f(3)],
                vec![f(2), f(3), f(1)],
            ],
        ),
        "a4" => (
            vec!["s1", "s2", "s3", "s4"],
            vec![
                vec![f(1), f(3), f(2), f(2)],
                vec![f(3), f(1), f(3), f(2)],
                vec![f(2), f(3), f(1), f(3)],
                vec![f(2), f(2), f(3), f(1)],
            ],
        ),
        other => panic!("unknown test system {other}"),
    };
    CoxeterSystem::new(gens.into_iter().map(String::from).collect(), bonds).unwrap()
}

fn gate(criterion: &str, ok: bool, detail: &str) {
    if ok {
        println!("PASS {criterion}");
    } else {
        println!("FAIL {criterion}: {detail}");
        panic!("{criterion} failed: {detail}");
    }
}

fn suites_pass(systems: &[&str], suites: &[&str]) -> Result<(), String> {
    let opts = SuiteOptions::default();
    let cfg = HatConfig::default();
    for name in systems {
        let sys = system(name);
        for suite in suites {
            let report = run_suite(suite, &sys, &cfg, &opts)
                .map_err(|e| format!("{name}/{suite}: {e}"))?;
            if !report.passed() {
                return Err(format!(
                    "{name}/{suite}: {} of {} cases failed; first: {}",
                    report.counts.failed,
                    report.counts.total,
                    report
                        .cases
                        .iter()
                        .find(|c| !c.pass)
                        .map(|c| c.inputs.clone())
                        .unwrap_or_default()
                ));
            }
        }
    }
    Ok(())
}

#[test]
fn criterion_01_cardinalities() {
    let mut detail = String::new();
    let mut ok = true;
    for (name, expected) in [("a1", 6usize), ("a2", 78), ("b2", 136)] {
        let sys = system(name);
        let hs = HatSystem::build(&sys, &HatConfig::default()).unwrap();
        let nv = enumerate_v(&sys, LIMIT).unwrap().len();
        let no = hs.omega_enumerate(LIMIT).unwrap().len();
        if nv != expected || no != expected {
            ok = false;
            detail = format!("{name}: |V|={nv} |Omega|={no} expected {expected}");
        }
    }
    gate("criterion 1 (cardinalities 6/78/136)", ok, &detail);
}

#[test]
fn criterion_02_order_isomorphism_and_lengths() {
    let r = suites_pass(&["a1", "a2"], &["iso", "lengths"]);
    gate(
        "criterion 2 (phi order isomorphism and twisted-length bridge)",
        r.is_ok(),
        &r.err().unwrap_or_default(),
    );
}

#[test]
fn criterion_03_dual_route() {
    let r = suites_pass(&["a1", "a2", "b2"], &["b-dual-route"]);
    gate(
        "criterion 3 (b-polynomials equal R^A through phi)",
        r.is_ok(),
        &r.err().unwrap_or_default(),
    );
}

#[test]
fn criterion_04_involution() {
    let r = suites_pass(&["a1", "a2", "b2"], &["involution"]);
    gate(
        "criterion 4 (b-table is a bar-involution square root of identity)",
        r.is_ok(),
        &r.err().unwrap_or_default(),
    );
}

#[test]
fn criterion_05_finite_classical() {
    let r = suites_pass(&["a1", "a2"], &["finite-classical"]);
    gate(
        "criterion 5 (finite case reduces to classical R/P/Q tables)",
        r.is_ok(),
        &r.err().unwrap_or_default(),
    );
}

#[test]
fn criterion_06_invariance() {
    let r = suites_pass(&["a1", "a2"], &["hat-invariance"])
        .and_then(|_| suites_pass(&["a2"], &["enumeration-invariance"]));
    gate(
        "criterion 6 (extension-choice and enumeration invariance)",
        r.is_ok(),
        &r.err().unwrap_or_default(),
    );
}

#[test]
fn criterion_07_purity_mobius() {
    let r = suites_pass(&["a1", "a2"], &["purity-mobius"]);
    gate(
        "criterion 7 (interval purity and Moebius values)",
        r.is_ok(),
        &r.err().unwrap_or_default(),
    );
}

#[test]
fn criterion_08_graph_deodhar() {
    let r = suites_pass(&["a1", "a2"], &["graph-deodhar"]);
    gate(
        "criterion 8 (edge criteria, path characterization, edge-count bound)",
        r.is_ok(),
        &r.err().unwrap_or_default(),
    );
}

/// All reduced words of an element, by recursion on left descents.
fn reduced_words(sys: &CoxeterSystem, x: &Element) -> Vec<Vec<u8>> {
    if x.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for s in sys.descents(x, Side::Left).iter() {
        let rest = sys.mul_gen(x, s, Side::Left);
        for mut tail in reduced_words(sys, &rest) {
            tail.insert(0, s as u8);
            out.push(tail);
        }
    }
    out
}

/// A reduced word of the longest element built by always stripping the
/// largest-index left descent.
fn greedy_largest_word(sys: &CoxeterSystem, w0: &Element) -> Vec<u8> {
    let mut word = Vec::new();
    let mut x = w0.clone();
    while let Some(s) = sys.descents(&x, Side::Left).iter().last() {
        word.push(s as u8);
        x = sys.mul_gen(&x, s, Side::Left);
    }
    word
}

#[test]
fn criterion_09_chain_sum_oracle() {
    // every reduced word of the longest element of A2, all pairs
    let sys = system("a2");
    let w0 = sys.longest_element(sys.full_set(), LIMIT).unwrap();
    let words = reduced_words(&sys, &w0);
    assert_eq!(words.len(), 2);
    let elements = sys.enumerate_parabolic(sys.full_set(), None, LIMIT).unwrap();
    let mut tbl = PolyTable::new(TableKind::RTilde);
    let mut ok = true;
    let mut detail = String::new();
    for word in &words {
        let ord = reflection_order_from_w0(&sys, word, LIMIT).unwrap();
        for x in &elements {
            for y in &elements {
                let by_chains = r_gf_oracle(&sys, x, y, &ord).unwrap();
                let by_recursion =
                    r_poly_with_policy(&sys, &mut tbl, x, y, DescentPolicy::Smallest).unwrap();
                if by_chains != by_recursion {
                    ok = false;
                    detail = format!(
                        "A2 word {word:?} pair ({}, {})",
                        sys.format_element(x),
                        sys.format_element(y)
                    );
                }
            }
        }
    }
    // three fixed reduced words of the longest element of A4, 100
    // sampled intervals
    let sys4 = system("a4");
    let w04 = sys4.longest_element(sys4.full_set(), LIMIT).unwrap();
    let canonical = w04.word().to_vec();
    let reversed: Vec<u8> = canonical.iter().rev().cloned().collect();
    let greedy = greedy_largest_word(&sys4, &w04);
    let elements4 = sys4.enumerate_parabolic(sys4.full_set(), None, LIMIT).unwrap();
    let mut tbl4 = PolyTable::new(TableKind::RTilde);
    let mut rng = StdRng::seed_from_u64(0x09_ac);
    let mut pairs = Vec::new();
    while pairs.len() < 100 {
        let x = &elements4[rng.gen_range(0..elements4.len())];
        let y = &elements4[rng.gen_range(0..elements4.len())];
        if sys4.bruhat_leq(x, y).unwrap() {
            pairs.push((x.clone(), y.clone()));
        }
    }
    for word in [&canonical, &reversed, &greedy] {
        let ord = reflection_order_from_w0(&sys4, word, LIMIT).unwrap();
        for (x, y) in &pairs {
            let by_chains = r_gf_oracle(&sys4, x, y, &ord).unwrap();
            let by_recursion =
                r_poly_with_policy(&sys4, &mut tbl4, x, y, DescentPolicy::Smallest).unwrap();
            if by_chains != by_recursion {
                ok = false;
                detail = format!(
                    "A4 word {word:?} pair ({}, {})",
                    sys4.format_element(x),
                    sys4.format_element(y)
                );
            }
        }
    }
    gate("criterion 9 (reflection-order chain sums equal R-polynomials)", ok, &detail);
}

#[test]
fn criterion_10_remark_factorization() {
    let r = suites_pass(&["a1", "a2"], &["remark"]);
    gate(
        "criterion 10 (classical factorization identity)",
        r.is_ok(),
        &r.err().unwrap_or_default(),
    );
}

// ---------------------------------------------------------- criterion 11

/// Square integer matrices as an independent multiplication oracle
/// (permutation and signed-permutation models of the test groups).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Mat(Vec<Vec<i64>>);

impl Mat {
    fn identity(n: usize) -> Mat {
        Mat((0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect())
    }

    fn mul(&self, other: &Mat) -> Mat {
        let n = self.0.len();
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[i][j] = (0..n).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        Mat(out)
    }
}

fn perm_mat(n: usize, swap: usize) -> Mat {
    let mut m = Mat::identity(n);
    m.0[swap][swap] = 0;
    m.0[swap + 1][swap + 1] = 0;
    m.0[swap][swap + 1] = 1;
    m.0[swap + 1][swap] = 1;
    m
}

/// Matrix models: adjacent transpositions for type A, sign change plus
/// swap for B2.
fn matrix_generators(name: &str) -> Vec<Mat> {
    match name {
        "a2" => vec![perm_mat(3, 0), perm_mat(3, 1)],
        "a3" => vec![perm_mat(4, 0), perm_mat(4, 1), perm_mat(4, 2)],
        "b2" => {
            let mut sign = Mat::identity(2);
            sign.0[0][0] = -1;
            vec![sign, perm_mat(2, 0)]
        }
        other => panic!("no matrix model for {other}"),
    }
}

fn all_words(rank: usize, max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 0..rank {
                let mut w2 = w.clone();
                w2.push(s as u8);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn criterion_11_property_suites() {
    let mut ok = true;
    let mut detail = String::new();

    // canonical-form soundness against the matrix oracle, words up to
    // length 8
    for name in ["a2", "b2", "a3"] {
        let sys = system(name);
        let gens = matrix_generators(name);
        let n = gens[0].0.len();
        let mut canon_of_mat: std::collections::BTreeMap<Mat, Element> =
            std::collections::BTreeMap::new();
        for word in all_words(sys.rank(), 8) {
            let mat = word
                .iter()
                .fold(Mat::identity(n), |acc, &s| acc.mul(&gens[s as usize]));
            let canon = sys.reduce_indices(&word);
            match canon_of_mat.get(&mat) {
                None => {
                    canon_of_mat.insert(mat, canon);
                }
                Some(prev) => {
                    if prev != &canon {
                        ok = false;
                        detail = format!("{name}: words with equal oracle product reduce differently");
                    }
                }
            }
        }
        let mut seen: std::collections::BTreeSet<Element> = std::collections::BTreeSet::new();
        for canon in canon_of_mat.values() {
            if !seen.insert(canon.clone()) {
                ok = false;
                detail = format!("{name}: distinct oracle products share a canonical form");
            }
        }
    }

    // inversion-count = length and the cocycle law
    for name in ["a2", "b2", "a3"] {
        let sys = system(name);
        let elements = sys.enumerate_parabolic(sys.full_set(), None, LIMIT).unwrap();
        for x in &elements {
            if sys.inversions(x).len() != x.length() {
                ok = false;
                detail = format!("{name}: |N({})| != length", sys.format_element(x));
            }
        }
        let mut rng = StdRng::seed_from_u64(0x11_cc);
        for _ in 0..50 {
            let x = &elements[rng.gen_range(0..elements.len())];
            let y = &elements[rng.gen_range(0..elements.len())];
            let xy = sys.mul(x, y).unwrap();
            let nxy: std::collections::BTreeSet<Element> =
                sys.inversions(&xy).into_iter().map(|t| t.elem).collect();
            let nx: std::collections::BTreeSet<Element> =
                sys.inversions(x).into_iter().map(|t| t.elem).collect();
            let xinv = sys.inv(x);
            let conj: std::collections::BTreeSet<Element> = sys
                .inversions(y)
                .into_iter()
                .map(|t| sys.prod(&[x, &t.elem, &xinv]).unwrap())
                .collect();
            let sym: std::collections::BTreeSet<Element> =
                nx.symmetric_difference(&conj).cloned().collect();
            if nxy != sym {
                ok = false;
                detail = format!(
                    "{name}: cocycle law fails at ({}, {})",
                    sys.format_element(x),
                    sys.format_element(y)
                );
            }
        }
    }

    // descent-policy independence of the polynomial recursions
    for name in ["a2", "b2"] {
        let sys = system(name);
        let elements = sys.enumerate_parabolic(sys.full_set(), None, LIMIT).unwrap();
        let mut t1 = PolyTable::new(TableKind::RTilde);
        let mut t2 = PolyTable::new(TableKind::RTilde);
        for x in &elements {
            for y in &elements {
                let a = r_poly_with_policy(&sys, &mut t1, x, y, DescentPolicy::Smallest).unwrap();
                let b = r_poly_with_policy(&sys, &mut t2, x, y, DescentPolicy::Largest).unwrap();
                if a != b {
                    ok = false;
                    detail = format!("{name}: R-recursion depends on the descent policy");
                }
            }
        }
    }
    {
        let sys = system("a2");
        let vs = enumerate_v(&sys, LIMIT).unwrap();
        let mut vctx = VCtx::new(&sys);
        for w in &vs {
            for v in &vs {
                let a = vctx.b_poly_with_policy(w, v, BPolicy::Right).unwrap();
                let b = vctx.b_poly_with_policy(w, v, BPolicy::Mixed).unwrap();
                if a != b {
                    ok = false;
                    detail = "a2: b-recursion depends on the reduction side".into();
                }
            }
        }
        let hs = HatSystem::build(&sys, &HatConfig::default()).unwrap();
        let mut hctx = HatCtx::new(&hs);
        let os = hs.omega_enumerate(LIMIT).unwrap();
        let mut rng = StdRng::seed_from_u64(0x11_dd);
        for _ in 0..300 {
            let x = &os[rng.gen_range(0..os.len())];
            let y = &os[rng.gen_range(0..os.len())];
            let a = hctx.r_a_with_policy(x, y, DescentPolicy::Smallest).unwrap();
            let b = hctx.r_a_with_policy(x, y, DescentPolicy::Largest).unwrap();
            if a != b {
                ok = false;
                detail = "a2: twisted R-recursion depends on the descent policy".into();
            }
        }
    }

    // a known nontrivial Kazhdan-Lusztig value in A3: the classical
    // 1+q pair is (s2, s2s1s3s2) (one-line 1324 below 3412); for
    // (s1s3, s2s1s3s2) the degree bound (l(y)-l(x)-1)/2 = 0 forces a
    // constant
    {
        let sys = system("a3");
        let mut tbl = PolyTable::new(TableKind::RTilde);
        let y = sys.reduce_names(&["s2", "s1", "s3", "s2"]).unwrap();
        let x = sys.generator(1);
        let p = kl_p(&sys, &mut tbl, &x, &y).unwrap();
        let expected = coxkl_core::laurent::QPoly::from_terms([
            (0u32, num_bigint::BigInt::from(1)),
            (1u32, num_bigint::BigInt::from(1)),
        ]);
        if p != expected {
            ok = false;
            detail = format!("a3: P(s2, s2s1s3s2) = {p}, expected 1+q");
        }
        let x2 = sys.reduce_names(&["s1", "s3"]).unwrap();
        let p2 = kl_p(&sys, &mut tbl, &x2, &y).unwrap();
        if !p2.is_one() {
            ok = false;
            detail = format!("a3: P(s1s3, s2s1s3s2) = {p2}, expected 1 by the degree bound");
        }
    }

    gate("criterion 11 (group-engine property suites)", ok, &detail);
}
