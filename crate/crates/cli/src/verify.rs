//! The theorem checkers run by `hfalg verify`.
//!
//! Each checker runs at fixed default bounds, which the `--bound`, `--sig`,
//! `--height` and `--window` flags can override where they apply.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::Instant;

use hfalg::hf::{big_union, level, print_hf, tuple_encode, von_neumann, HfSet};
use hfalg::iterative::{
    all_structures, exp_valid_set, find_homs, good_primes, mk_zn, next_permutation, skolem_lt_check,
    thm_order_conditions, unary_recursion_fails, Rejection,
};
use hfalg::ordinals::sb::{
    check_bijection, random_affine_instance, sb_bijection, sb_d_lfp, sb_d_union, sufficient_depth, SbInstance,
};
use hfalg::ordinals::{is_sis_wo_member, is_wr_finite, is_zm_prime, zermelo_numerals, zm_prime_union};
use hfalg::term::{
    build, check_free_fragment, check_lemma, enumerate_terms, parse_term, parse_term_compact, print_term,
    print_term_compact, Signature, StringAlgebra, Term,
};
use hfalg::vnn::{
    check_in_prime_global, check_trees_claim, first_failure, fv_apply, gel, h_map, in_ds, in_ons, in_prime,
    in_vnns, is_limit_gen, term_to_v, triple_union, H_MAP_BOUND,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::report::{Status, VerifyReport};
use crate::{builtin_signature, CliError};

pub const THEOREM_IDS: [&str; 16] = [
    "thm1-expset",
    "goodprimes",
    "zn-homs",
    "thm-rec-alg-fragment",
    "lemma-ordergen",
    "thm-uuu",
    "thm-valg",
    "d1s-iso",
    "ons-subalg",
    "vnn-char",
    "zm-prime",
    "sis-wo",
    "sb",
    "skolem",
    "trees",
    "thm-order",
];

const SEED: u64 = 0x5eed;

/// Optional overrides of the default bounds.
#[derive(Debug, Clone, Default)]
pub struct Params {
    pub bound: Option<u64>,
    /// A signature and the name it was loaded from.
    pub sig: Option<(String, Signature)>,
    pub height: Option<usize>,
    pub window: Option<i64>,
}

impl Params {
    fn sigs(&self, defaults: &[&str]) -> Vec<(String, Signature)> {
        match &self.sig {
            Some(s) => vec![s.clone()],
            None => defaults.iter().map(|n| (n.to_string(), builtin_signature(n))).collect(),
        }
    }
}

/// Accumulates witnesses; any failed expectation fails the report.
#[derive(Default)]
struct Check {
    ok: bool,
    witnesses: Vec<String>,
}

impl Check {
    fn new() -> Check {
        Check { ok: true, witnesses: Vec::new() }
    }

    fn note(&mut self, w: impl Into<String>) {
        self.witnesses.push(w.into());
    }

    fn expect(&mut self, cond: bool, w: impl FnOnce() -> String) -> bool {
        if !cond {
            self.ok = false;
            self.witnesses.push(format!("FAIL {}", w()));
        }
        cond
    }
}

type Checker = fn(&Params, &mut Check) -> Result<(), CliError>;

fn checker(id: &str) -> Option<Checker> {
    Some(match id {
        "thm1-expset" => thm1_expset,
        "goodprimes" => goodprimes,
        "zn-homs" => zn_homs,
        "thm-rec-alg-fragment" => thm_rec_alg_fragment,
        "lemma-ordergen" => lemma_ordergen,
        "thm-uuu" => thm_uuu,
        "thm-valg" => thm_valg,
        "d1s-iso" => d1s_iso,
        "ons-subalg" => ons_subalg,
        "vnn-char" => vnn_char,
        "zm-prime" => zm_prime,
        "sis-wo" => sis_wo,
        "sb" => sb,
        "skolem" => skolem,
        "trees" => trees,
        "thm-order" => thm_order,
        _ => return None,
    })
}

/// Runs one checker. Library errors raised at the requested bounds become
/// failing reports; only an unknown id is an error.
pub fn verify(id: &str, params: &Params) -> Result<VerifyReport, CliError> {
    let run = checker(id).ok_or_else(|| CliError::UnknownTheorem(id.to_string()))?;
    let start = Instant::now();
    let mut check = Check::new();
    if let Err(e) = run(params, &mut check) {
        check.expect(false, || format!("error: {e}"));
    }
    Ok(VerifyReport {
        theorem_id: id.to_string(),
        status: if check.ok { Status::Pass } else { Status::Fail },
        witnesses: check.witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Every checker at its defaults, run concurrently and reported in
/// [`THEOREM_IDS`] order.
pub fn verify_all() -> Vec<VerifyReport> {
    let params = Params::default();
    std::thread::scope(|scope| {
        let handles: Vec<_> = THEOREM_IDS
            .iter()
            .map(|id| scope.spawn(|| verify(id, &params).expect("known id")))
            .collect();
        handles.into_iter().map(|h| h.join().expect("checker panicked")).collect()
    })
}

pub fn fmt_set(s: &BTreeSet<u64>) -> String {
    format!("{{{}}}", s.iter().map(u64::to_string).collect::<Vec<_>>().join(", "))
}

fn fmt_factors(f: &[(u64, u32)]) -> String {
    f.iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join("·")
}

pub fn fmt_rejection(r: &Rejection) -> String {
    let b: Vec<String> = r.factors_of_b.iter().map(u64::to_string).collect();
    format!("rejected {} = {} (1 + {})", r.candidate, fmt_factors(&r.factorization), b.join("·"))
}

fn images(sig: &Signature, height: usize) -> Result<Vec<(Term, HfSet)>, CliError> {
    Ok(enumerate_terms(sig, height)?
        .into_iter()
        .map(|t| {
            let v = term_to_v(sig, &t);
            (t, v)
        })
        .collect())
}

/// Every argument tuple of length `arity` over `pool` (odometer order).
fn tuples<T: Clone>(pool: &[T], arity: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pool.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn thm1_expset(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let bound = p.bound.unwrap_or(5000);
    let got = exp_valid_set(bound)?;
    let expected: BTreeSet<u64> = [1, 2, 6, 42, 1806].into_iter().filter(|&n| n <= bound).collect();
    c.note(format!("n ≤ {bound} with a^(n+1) ≡ a (mod n) for all a: {}", fmt_set(&got)));
    c.expect(got == expected, || format!("expected {}", fmt_set(&expected)));
    Ok(())
}

fn goodprimes(_: &Params, c: &mut Check) -> Result<(), CliError> {
    let gp = good_primes();
    for (i, a) in gp.stages.iter().enumerate() {
        c.note(format!("A{} = {}", i + 1, fmt_set(a)));
    }
    let set = |xs: &[u64]| xs.iter().copied().collect::<BTreeSet<u64>>();
    c.expect(gp.stages.len() == 5, || format!("{} distinct stages, expected 5", gp.stages.len()));
    c.expect(gp.stages.get(3) == Some(&set(&[2, 3, 7])), || "A4 ≠ {2, 3, 7}".into());
    c.expect(gp.stages.get(4) == Some(&set(&[2, 3, 7, 43])), || "A5 ≠ {2, 3, 7, 43}".into());
    c.note(format!("fixed point {}", fmt_set(gp.fixed_point())));
    c.expect(*gp.fixed_point() == set(&[2, 3, 7, 43]), || "fixed point ≠ {2, 3, 7, 43}".into());
    for r in &gp.rejections {
        c.note(fmt_rejection(r));
    }
    let got: Vec<(u64, Vec<(u64, u32)>)> =
        gp.rejections.iter().map(|r| (r.candidate, r.factorization.clone())).collect();
    let expected = vec![
        (87, vec![(3, 1), (29, 1)]),
        (259, vec![(7, 1), (37, 1)]),
        (603, vec![(3, 2), (67, 1)]),
        (1807, vec![(13, 1), (139, 1)]),
    ];
    c.expect(got == expected, || "rejections differ from 87, 259, 603, 1807".into());
    Ok(())
}

fn zn_homs(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let bound = p.bound.unwrap_or(12) as usize;
    let mut table = Vec::new();
    for n in 1..=bound {
        let row: Vec<String> = (1..=bound)
            .map(|m| -> Result<String, CliError> {
                let count = find_homs(&mk_zn(n)?, &mk_zn(m)?)?.len();
                let expected = usize::from(n % m == 0);
                c.expect(count == expected, || format!("Z_{n} → Z_{m}: {count} homomorphisms, expected {expected}"));
                Ok(count.to_string())
            })
            .collect::<Result<_, _>>()?;
        table.push(format!("n={n:>2}: {}", row.join(" ")));
    }
    c.note(format!("hom-count(Z_n → Z_m) for 1 ≤ m, n ≤ {bound}, m across:"));
    for line in table {
        c.note(line);
    }
    Ok(())
}

fn fragments(p: &Params) -> Vec<(String, Signature, usize)> {
    match &p.sig {
        Some((name, sig)) => vec![(name.clone(), sig.clone(), p.height.unwrap_or(3))],
        None => vec![
            ("sig-0st.txt".into(), builtin_signature("sig-0st.txt"), p.height.unwrap_or(4)),
            ("sig-0plus.txt".into(), builtin_signature("sig-0plus.txt"), p.height.unwrap_or(3)),
        ],
    }
}

fn random_term(sig: &Signature, rng: &mut StdRng, depth: usize) -> Term {
    let constants: Vec<usize> = (0..sig.len()).filter(|&f| sig.arity(f) == 0).collect();
    let f = if depth == 0 || rng.random_bool(0.25) {
        constants[rng.random_range(0..constants.len())]
    } else {
        rng.random_range(0..sig.len())
    };
    let args = (0..sig.arity(f)).map(|_| random_term(sig, rng, depth - 1)).collect();
    build(sig, f, args).expect("arity respected")
}

fn thm_rec_alg_fragment(p: &Params, c: &mut Check) -> Result<(), CliError> {
    for (name, sig, h) in fragments(p) {
        let r = check_free_fragment(&sig, h, &StringAlgebra)?;
        c.note(format!("{name}, height ≤ {h}: {} terms, {} checks", r.terms, r.checks));
        if let Some(v) = r.violation {
            c.expect(false, || format!("{name}: {v:?}"));
        }
    }
    let trips = p.bound.unwrap_or(10_000);
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut done = 0u64;
    for (name, sig, _) in fragments(p) {
        if !sig.has_constant() {
            c.note(format!("{name}: no constant, no terms to round-trip"));
            continue;
        }
        for _ in 0..trips {
            let t = random_term(&sig, &mut rng, 8);
            let spaced = parse_term(&sig, &print_term(&sig, &t))?;
            let ok = spaced == t
                && (!sig.single_char_names() || parse_term_compact(&sig, &print_term_compact(&sig, &t))? == t);
            if !c.expect(ok, || format!("{name}: round trip changed `{}`", print_term(&sig, &t))) {
                return Ok(());
            }
            done += 1;
        }
    }
    c.note(format!("{done} random parse/print round trips"));
    Ok(())
}

fn lemma_ordergen(p: &Params, c: &mut Check) -> Result<(), CliError> {
    for (name, sig, h) in fragments(p) {
        let terms = enumerate_terms(&sig, h)?;
        let r = check_lemma(&sig, &terms);
        c.note(format!("{name}, height ≤ {h}: five clauses over {} terms, {} checks", r.terms, r.checks));
        if let Some(v) = r.violation {
            c.expect(false, || format!("{name}: {v:?}"));
        }
    }
    Ok(())
}

const VNN_SIGS: [&str; 2] = ["sig-0st.txt", "sig-0plus.txt"];

fn thm_valg(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let h = p.height.unwrap_or(2);
    for (name, sig) in p.sigs(&VNN_SIGS) {
        let pool: Vec<HfSet> = images(&sig, h)?.into_iter().map(|(_, v)| v).collect();
        let mut seen: HashMap<HfSet, (usize, Vec<usize>)> = HashMap::new();
        let mut applications = 0usize;
        let indices: Vec<usize> = (0..pool.len()).collect();
        for f in 0..sig.len() {
            for args in tuples(&indices, sig.arity(f)) {
                let vals: Vec<HfSet> = args.iter().map(|&i| pool[i].clone()).collect();
                let v = fv_apply(&sig, f, &vals)?;
                applications += 1;
                if let Some((g, other)) = seen.insert(v, (f, args.clone())) {
                    let clause = if g == f { "injectivity" } else { "disjoint ranges" };
                    c.expect(false, || {
                        format!("{name}: {clause} fails for {} {args:?} and {} {other:?}", sig.name(f), sig.name(g))
                    });
                    return Ok(());
                }
            }
        }
        c.note(format!(
            "{name}: {applications} applications of F^V to term images of height ≤ {h}, all distinct"
        ));
    }
    Ok(())
}

fn thm_uuu(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let h = p.height.unwrap_or(3);
    for (name, sig) in p.sigs(&VNN_SIGS) {
        let pool: Vec<HfSet> = images(&sig, h)?.into_iter().map(|(_, v)| v).collect();
        let r = check_in_prime_global(&pool);
        c.note(format!(
            "{name}, height ≤ {h}: ∈′ graph on {} sets with {} edges, acyclic: {}",
            r.nodes, r.edges, r.acyclic
        ));
        c.note(format!(
            "{name}: gel(x) ⊆ ⋃⋃⋃x for {}/{}, gel(x) ⊆ ⋃⋃x for {}/{}",
            r.triple_union_holds, r.members, r.double_union_holds, r.members
        ));
        c.expect(r.passed(), || format!("{name}: {r:?}"));
    }
    // random tuples over R(4): the two-fold union lists indices and entries
    let mut rng = StdRng::seed_from_u64(SEED);
    let r4 = level(4);
    let count = p.bound.unwrap_or(100);
    for _ in 0..count {
        let len = rng.random_range(1..=5);
        let entries: Vec<HfSet> = (0..len).map(|_| r4[rng.random_range(0..r4.len())].clone()).collect();
        let x = tuple_encode(&entries).expect("nonempty");
        let expected = HfSet::from_elems((0..len).map(von_neumann).chain(entries.iter().cloned()));
        let ok = big_union(&big_union(&x)) == expected && gel(&x).is_subset(&triple_union(&x));
        if !c.expect(ok, || format!("union identity fails for {}", print_hf(&x))) {
            return Ok(());
        }
    }
    c.note(format!(
        "{count} random tuples: ⋃⋃(x₀,…,x_n) = {{0,…,n,x₀,…,x_n}} and gel(x) ⊆ ⋃⋃⋃x"
    ));
    Ok(())
}

fn d1s_iso(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let n_max = p.bound.unwrap_or(20) as usize;
    if !c.expect(n_max + 2 <= H_MAP_BOUND, || format!("bound {n_max} exceeds {}", H_MAP_BOUND - 2)) {
        return Ok(());
    }
    let sig = builtin_signature("sig-1s.txt");
    let s = sig.index_of("s").expect("bundled signature");
    let hs: Vec<HfSet> = (0..=n_max + 2).map(h_map).collect::<Result<_, _>>()?;
    for n in 0..=n_max {
        c.expect(hs[n + 1] == fv_apply(&sig, s, &[hs[n].clone()])?, || format!("H({}) ≠ s^V(H({n}))", n + 1));
        c.expect(gel(&hs[n]) == HfSet::from_elems(hs[..n].iter().cloned()), || {
            format!("gel(H({n})) ≠ {{H(m) : m < {n}}}")
        });
        c.expect(in_ds(&sig, &hs[n]), || format!("H({n}) ∉ D_S"));
        for m in 0..=n_max {
            c.expect(in_prime(&hs[m], &hs[n]) == (m < n), || format!("H({m}) ∈′ H({n}) disagrees with {m} < {n}"));
        }
    }
    c.note(format!("H(0..={n_max}): successor, gel, D_S membership and ∈′ = < all hold"));

    // Delete one grade element, or add one H(m) not already there.
    let known: HashSet<&HfSet> = hs.iter().collect();
    let (mut total, mut failing) = (0usize, 0usize);
    for n in 1..=n_max {
        let grade = gel(&hs[n]);
        let mut variants: Vec<(String, HfSet)> = grade
            .iter()
            .enumerate()
            .map(|(i, _)| {
                let rest = grade.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, y)| y.clone());
                (format!("H({n}) minus one element"), HfSet::from_elems(rest))
            })
            .collect();
        for (m, hm) in hs.iter().enumerate().filter(|(_, hm)| !grade.contains(hm)) {
            let more = grade.iter().cloned().chain([hm.clone()]);
            variants.push((format!("H({n}) plus H({m})"), HfSet::from_elems(more)));
        }
        for (label, g) in variants {
            let x = tuple_encode(&[g, sig.code(s).clone()]).expect("nonempty");
            total += 1;
            let member = in_ds(&sig, &x);
            failing += usize::from(!member);
            c.expect(member == known.contains(&x), || format!("{label}: in_DS = {member}"));
        }
    }
    c.note(format!(
        "{total} single-element perturbations: {failing} fail in_DS, the rest are H values themselves"
    ));
    c.expect(failing >= 50, || format!("only {failing} failing perturbations"));
    Ok(())
}

fn ons_subalg(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let h = p.height.unwrap_or(3);
    for (name, sig) in p.sigs(&VNN_SIGS) {
        let imgs = images(&sig, h)?;
        for (t, x) in &imgs {
            let f = first_failure(&sig, x)?;
            c.expect(f.is_none(), || format!("{name}: `{}` fails {}", print_term(&sig, t), f.unwrap()));
            c.expect(in_vnns(&sig, x)?, || format!("{name}: `{}` ∉ VNN_S", print_term(&sig, t)));
        }
        // closure under F^V, from the members of height < h
        let lower: Vec<HfSet> = imgs.iter().filter(|(t, _)| t.height() < h).map(|(_, x)| x.clone()).collect();
        let mut applied = 0;
        for f in 0..sig.len() {
            for args in tuples(&lower, sig.arity(f)) {
                let y = fv_apply(&sig, f, &args)?;
                applied += 1;
                c.expect(in_ons(&sig, &y)?, || format!("{name}: F^V of ON_S members leaves ON_S"));
            }
        }
        let pool: Vec<HfSet> = imgs.iter().map(|(_, x)| x.clone()).collect();
        let wf = check_in_prime_global(&pool);
        c.expect(wf.acyclic, || format!("{name}: ∈′ has a cycle"));
        c.note(format!(
            "{name}, height ≤ {h}: {} term images in ON_S and VNN_S, {applied} F^V applications stay in ON_S, \
             ∈′ acyclic on {} sets",
            imgs.len(),
            wf.nodes
        ));
        lemma_pool(c, &name, &sig, &pool)?;
    }
    // D_S members outside ON_S for the transitivity lemmas
    let abs = builtin_signature("sig-ab-s.txt");
    let x0 = counterexample(&abs).expect("two constants and a unary symbol");
    let x1 = fv_apply(&abs, 2, std::slice::from_ref(&x0))?;
    let x2 = fv_apply(&abs, 2, std::slice::from_ref(&x1))?;
    lemma_pool(c, "sig-ab-s.txt", &abs, &[x0, x1, x2])?;
    Ok(())
}

/// Transitivity of ∈′ and closure of D_S and ON_S under graded elements.
fn lemma_pool(c: &mut Check, name: &str, sig: &Signature, pool: &[HfSet]) -> Result<(), CliError> {
    let mut pairs = 0usize;
    for x in pool {
        if !in_ds(sig, x) {
            continue;
        }
        let gx = gel(x);
        let ons = in_ons(sig, x)?;
        for y in gx.iter() {
            c.expect(in_ds(sig, y), || format!("{name}: gel({}) ⊄ D_S", print_hf(x)));
            if ons {
                c.expect(in_ons(sig, y)?, || format!("{name}: gel({}) ⊄ ON_S", print_hf(x)));
            }
            c.expect(!in_prime(y, y), || format!("{name}: {} ∈′ itself", print_hf(y)));
            for z in gel(y).iter() {
                pairs += 1;
                c.expect(gx.contains(z), || format!("{name}: ∈′ not transitive below {}", print_hf(x)));
            }
        }
    }
    c.note(format!("{name}: ∈′ transitive through {pairs} chains; gel(x) ⊆ D_S and ⊆ ON_S where x is"));
    Ok(())
}

/// `({c₁^V, c₂^V}, s)` for the first two constants and first unary symbol.
fn counterexample(sig: &Signature) -> Option<HfSet> {
    let constants: Vec<usize> = (0..sig.len()).filter(|&f| sig.arity(f) == 0).collect();
    let unary = (0..sig.len()).find(|&f| sig.arity(f) == 1)?;
    let [a, b, ..] = constants[..] else {
        return None;
    };
    let grade = HfSet::from_elems([fv_apply(sig, a, &[]).ok()?, fv_apply(sig, b, &[]).ok()?]);
    Some(tuple_encode(&[grade, sig.code(unary).clone()]).expect("nonempty"))
}

fn vnn_char(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let h = p.height.unwrap_or(2);
    for (name, sig) in p.sigs(&["sig-0st.txt", "sig-0plus.txt", "sig-ab-s.txt"]) {
        // (⇒) term images
        let imgs = images(&sig, h + 1)?;
        for (t, x) in &imgs {
            c.expect(in_vnns(&sig, x)?, || format!("{name}: `{}` ∉ VNN_S", print_term(&sig, t)));
        }
        let image_set: HashSet<HfSet> = imgs.iter().map(|(_, x)| x.clone()).collect();
        // (⇐) every tuple whose grades are nonempty sets of images of height ≤ h
        let small: Vec<HfSet> = imgs.iter().filter(|(t, _)| t.height() <= h).map(|(_, x)| x.clone()).collect();
        if small.len() > 16 {
            c.expect(false, || format!("{name}: {} images of height ≤ {h}; grade enumeration capped at 16", small.len()));
            continue;
        }
        let grades: Vec<HfSet> = (1u32..(1 << small.len()))
            .map(|m| HfSet::from_elems((0..small.len()).filter(|i| m >> i & 1 == 1).map(|i| small[i].clone())))
            .collect();
        let (mut candidates, mut members) = (0usize, 0usize);
        for f in 0..sig.len() {
            let combos = grades.len().saturating_pow(sig.arity(f) as u32);
            if combos > 1_000_000 {
                c.expect(false, || format!("{name}: {combos} candidates for `{}`", sig.name(f)));
                continue;
            }
            for gs in tuples(&grades, sig.arity(f)) {
                let mut entries = gs;
                entries.push(sig.code(f).clone());
                let x = tuple_encode(&entries).expect("nonempty");
                candidates += 1;
                if in_ons(&sig, &x)? && !is_limit_gen(&x)? && !gel(&x).iter().any(|y| is_limit_gen(y).unwrap_or(true)) {
                    members += 1;
                    c.expect(image_set.contains(&x), || format!("{name}: {} is in ON_S but no term image", print_hf(&x)));
                }
            }
        }
        c.note(format!(
            "{name}: {} term images of height ≤ {} in VNN_S; {candidates} candidate tuples with grades ⊆ images of \
             height ≤ {h}, {members} in ON_S and non-limit, all term images",
            imgs.len(),
            h + 1
        ));
        if let Some(x) = counterexample(&sig) {
            let ds = in_ds(&sig, &x);
            let failure = first_failure(&sig, &x)?;
            let consts: Vec<&str> = (0..sig.len()).filter(|&f| sig.arity(f) == 0).map(|f| sig.name(f)).collect();
            let unary = (0..sig.len()).find(|&f| sig.arity(f) == 1).map(|f| sig.name(f)).unwrap_or("?");
            c.note(format!(
                "{name}: ({{({}),({})}},{unary}) = {} ∈ D_S: {ds}, ∈ ON_S: {}{}",
                consts[0],
                consts[1],
                print_hf(&x),
                failure.is_none(),
                failure.map(|f| format!(" (fails {f})")).unwrap_or_default()
            ));
            c.expect(ds && failure.is_some() && !in_vnns(&sig, &x)?, || {
                format!("{name}: two-constant tuple should be in D_S and outside ON_S")
            });
        }
    }
    Ok(())
}

fn zm_prime(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let mut members = 0usize;
    let mut mismatches = 0usize;
    let r5 = level(5);
    for x in &r5 {
        let zm = is_zm_prime(x)?;
        members += usize::from(zm);
        if zm != is_sis_wo_member(x)? {
            mismatches += 1;
            c.expect(false, || format!("Zm′ and C disagree on {}", print_hf(x)));
        }
    }
    c.note(format!("{} sets of rank ≤ 4: {members} in Zm′, {mismatches} disagreements with C", r5.len()));
    let rank = p.bound.unwrap_or(5) as usize;
    let union = zm_prime_union(rank)?;
    let expected = zermelo_numerals(rank.saturating_sub(1));
    c.note(format!("⋃ of Zm′ members of rank ≤ {rank} = {}", print_hf(&union)));
    c.expect(union == expected, || format!("expected the numerals of rank ≤ {}", rank.saturating_sub(1)));
    Ok(())
}

fn sis_wo(_: &Params, c: &mut Check) -> Result<(), CliError> {
    let r5 = level(5);
    let mut members = Vec::new();
    for x in &r5 {
        if is_sis_wo_member(x)? {
            members.push(x.clone());
        }
    }
    for x in &members {
        let expected = if x.is_empty() { HfSet::empty() } else { zermelo_numerals(x.len() - 1) };
        c.expect(*x == expected, || format!("{} in C is not an initial segment of numerals", print_hf(x)));
        c.expect(is_zm_prime(x)?, || format!("{} in C but not in Zm′", print_hf(x)));
    }
    c.note(format!(
        "{} sets of rank ≤ 4: C = {{{}}}",
        r5.len(),
        members.iter().map(print_hf).collect::<Vec<_>>().join(", ")
    ));
    let small: Vec<&HfSet> = r5.iter().filter(|x| x.len() <= hfalg::ordinals::WR_FINITE_BOUND).collect();
    for x in &small {
        c.expect(is_wr_finite(x)?, || format!("{} not finite in the inductive sense", print_hf(x)));
    }
    c.note(format!("{} sets with at most 3 elements are finite in the inductive sense", small.len()));
    Ok(())
}

fn sb(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let window = p.window.unwrap_or(64);
    let inst = SbInstance::doubling(window);
    let lfp = sb_d_lfp(&inst)?;
    let union = sb_d_union(&inst, sufficient_depth(&inst))?;
    let powers: BTreeSet<i64> = (0..63).map(|k| 1i64 << k).take_while(|&x| x <= window).collect();
    let show = |s: &BTreeSet<i64>| s.iter().map(i64::to_string).collect::<Vec<_>>().join(", ");
    c.note(format!("doubling instance, D ∩ [0, {window}] = {{{}}} by least fixed point", show(&lfp)));
    c.expect(lfp == powers, || format!("expected {{{}}}", show(&powers)));
    c.expect(union == lfp, || format!("chain union gives {{{}}}", show(&union)));
    let g = sb_bijection(&inst)?;
    for (x, y) in [(1, 2), (2, 4), (6, 6)] {
        if x <= window {
            c.expect(g.get(&x) == Some(&y), || format!("g({x}) = {:?}, expected {y}", g.get(&x)));
        }
    }
    if let Err(e) = check_bijection(&inst, &g) {
        c.expect(false, || e);
    }
    c.note("g(1) = 2, g(2) = 4, g(6) = 6, g a bijection B → A on the window");
    let count = p.bound.unwrap_or(50);
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..count {
        let inst = random_affine_instance(&mut rng);
        let lfp = sb_d_lfp(&inst)?;
        let union = sb_d_union(&inst, sufficient_depth(&inst))?;
        let ok = lfp == union && check_bijection(&inst, &sb_bijection(&inst)?).is_ok();
        if !c.expect(ok, || format!("constructions disagree on\n{inst}")) {
            return Ok(());
        }
    }
    c.note(format!("{count} random affine instances: both constructions agree, g bijective"));
    Ok(())
}

fn skolem(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let x_max = p.bound.unwrap_or(20);
    for m in 2..=10 {
        if let Err(e) = skolem_lt_check(m, x_max) {
            c.expect(false, || e);
        }
        c.expect(unary_recursion_fails(m, x_max), || format!("m = {m}: χ< follows a one-bit recursion"));
    }
    c.note(format!("χ<(m, ·) is the homomorphism into (ℕ × {{0,1}}, (1,0), t) for 2 ≤ m ≤ 10, x ≤ {x_max}"));
    c.note("no recursion on {0,1} alone produces it");
    Ok(())
}

fn trees(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let h = p.height.unwrap_or(4);
    for (name, sig) in p.sigs(&["sig-0st.txt"]) {
        let pool: Vec<HfSet> = images(&sig, h)?.into_iter().map(|(_, x)| x).collect();
        let r = check_trees_claim(&sig, &pool)?;
        c.note(format!(
            "{name}, height ≤ {h}: gel(x) strictly totally ordered by ∈′ for {} images ({} ordered pairs)",
            r.members, r.pairs_checked
        ));
        if let Some(f) = r.failure {
            c.expect(false, || f);
        }
    }
    Ok(())
}

fn thm_order(p: &Params, c: &mut Check) -> Result<(), CliError> {
    let size = p.bound.unwrap_or(4) as usize;
    if !c.expect(size <= 5, || format!("size {size} exceeds 5")) {
        return Ok(());
    }
    let structures = all_structures(size);
    let mut orders = 0usize;
    for s in &structures {
        let mut order: Vec<usize> = (0..s.size()).collect();
        loop {
            let r = thm_order_conditions(s, &order)?;
            orders += 1;
            c.expect(!r.holds_a && !r.holds_b, || format!("{s:?} with order {order:?}"));
            if !next_permutation(&mut order) {
                break;
            }
        }
    }
    c.note(format!(
        "{} structures of size ≤ {size} under {orders} total orders: none has x < s(x) everywhere",
        structures.len()
    ));
    for n in 1..=8 {
        let natural: Vec<usize> = (0..n).collect();
        let r = thm_order_conditions(&mk_zn(n)?, &natural)?;
        c.expect(r.increasing_fails_at == Some(n - 1), || {
            format!("Z_{n} fails at {:?}, expected {}", r.increasing_fails_at, n - 1)
        });
    }
    c.note("Z_n (n ≤ 8) in the natural order fails exactly at n − 1");
    Ok(())
}
