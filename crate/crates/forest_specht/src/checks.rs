//! The consolidated identity suite: every cross-check the library
//! promises, run over exhaustively enumerated small graphs and seeded
//! random families, with one record per tested instance.
//!
//! Identity families are independent pure functions, so the suite may run
//! them on a small thread pool; records are sorted before the report is
//! assembled, making the output order schedule-independent.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::canon;
use crate::diagram::{graph_to_diagram, split_diagram, standard_form, Transversal};
use crate::enumerate;
use crate::generate::{self, SplitMix64};
use crate::graph::{find_apm, is_almost_perfect, is_special, BipartiteGraph};
use crate::linalg::{interpolate, poly_eval};
use crate::partition::{self, factorial, partitions_of, Partition};
use crate::specht;
use crate::symfunc::{
    self, exp_specialize, h_to_schur, hpoly_specialize, leaf_eval, principal_specialize,
    s_forest, schur_coeffs, schur_monomial_expansion, IntegersMod, Rationals, Ring,
};
use crate::tableaux;
use crate::volume::{
    count_standard_labelings, m_count, m_count_diagram, v_apm, v_ehrhart_with,
    v_leaf,
};
use crate::Caps;

/// One tested identity instance.
#[derive(Debug, Clone, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct CheckRecord {
    pub identity: String,
    pub instance: String,
    pub left: String,
    pub right: String,
    pub pass: bool,
}

impl CheckRecord {
    fn compare<L: ToString, R: ToString + PartialEq<L>>(
        identity: &str,
        instance: String,
        left: L,
        right: R,
    ) -> Self {
        let pass = right == left;
        CheckRecord {
            identity: identity.to_string(),
            instance,
            left: left.to_string(),
            right: right.to_string(),
            pass,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub scope: String,
    pub seed: u64,
    pub families: usize,
    pub passed: usize,
    pub failed: usize,
    pub records: Vec<CheckRecord>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// The failing records only, for compact error output.
    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.records.iter().filter(|r| !r.pass).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Small,
    Full,
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub scope: Scope,
    pub seed: u64,
    /// Corrupt one volume inside the leaf-recurrence family; the suite
    /// must then fail with that instance. A self-test of the harness.
    pub inject_fault: bool,
    pub caps: Caps,
    pub threads: usize,
}

impl CheckConfig {
    pub fn new(scope: Scope, seed: u64) -> Self {
        CheckConfig {
            scope,
            seed,
            inject_fault: false,
            caps: Caps::default(),
            threads: default_threads(),
        }
    }
}

/// Worker count: `FOREST_SPECHT_THREADS` caps the available parallelism.
pub fn default_threads() -> usize {
    let available = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    match std::env::var("FOREST_SPECHT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(cap) if cap >= 1 => available.min(cap),
        _ => available,
    }
}

struct Limits {
    forest_cap: u32,
    diagram_cap: u32,
    ssyt_cap: u32,
    strip_cap: u32,
    triples: u64,
    pairs: u64,
    apm_instances: u64,
    seven_edge_samples: u64,
    char_n: u32,
}

fn limits(scope: Scope) -> Limits {
    match scope {
        Scope::Small => Limits {
            forest_cap: 4,
            diagram_cap: 4,
            ssyt_cap: 4,
            strip_cap: 4,
            triples: 25,
            pairs: 25,
            apm_instances: 25,
            seven_edge_samples: 0,
            char_n: 5,
        },
        Scope::Full => Limits {
            forest_cap: 6,
            diagram_cap: 5,
            ssyt_cap: 5,
            strip_cap: 6,
            triples: 100,
            pairs: 100,
            apm_instances: 100,
            seven_edge_samples: 50,
            char_n: 6,
        },
    }
}

fn gname(g: &BipartiteGraph) -> String {
    g.to_json_string()
}

type Family = (&'static str, Box<dyn Fn(&CheckConfig) -> Vec<CheckRecord> + Send + Sync>);

fn families() -> Vec<Family> {
    vec![
        ("volume-agreement", Box::new(volume_agreement)),
        ("leaf-recurrence-volume", Box::new(leaf_recurrence_volume)),
        ("leaf-recurrence-schur-function", Box::new(leaf_recurrence_s)),
        ("leaf-recurrence-decomposition", Box::new(exact_split_decomposition)),
        ("product-rule", Box::new(product_rule)),
        ("apm-recursion", Box::new(apm_recursion)),
        ("corners-branching", Box::new(corners_branching)),
        ("choice-independence-labelings", Box::new(choice_independence_labelings)),
        ("choice-independence-ssyt", Box::new(choice_independence_ssyt)),
        ("color-invariance", Box::new(color_invariance)),
        ("m-count-polynomiality", Box::new(m_polynomiality)),
        ("dimension-identities", Box::new(dimension_identities)),
        ("principal-specialization", Box::new(principal_vs_mcount)),
        ("s-multiplicativity", Box::new(s_multiplicativity)),
        ("universality", Box::new(universality)),
        ("schur-nonnegativity", Box::new(schur_nonnegativity)),
        ("character-orthogonality", Box::new(character_orthogonality)),
        ("hook-length-vs-enumeration", Box::new(hook_vs_enumeration)),
        ("theorem-main", Box::new(theorem_main)),
        ("decomposition-consistency", Box::new(decomposition_consistency)),
        ("restrict-inequality", Box::new(restrict_inequality)),
        ("james-peel-inequality", Box::new(james_peel_inequality)),
        ("transpose-duality", Box::new(transpose_duality)),
        ("modular-rank-agreement", Box::new(modular_rank_agreement)),
        ("strip-counting-identity", Box::new(strip_counting_identity)),
        ("ssyt-branching", Box::new(ssyt_branching)),
        ("ssyt-triple-agreement", Box::new(ssyt_triple_agreement)),
        ("generating-function-vs-schur", Box::new(gen_function_vs_schur)),
        ("tensor-character-consistency", Box::new(tensor_character_consistency)),
        ("strips-are-apm-boxes", Box::new(strips_apm_correspondence)),
        ("standard-tableaux-count", Box::new(standard_tableaux_count)),
        ("diagram-graph-round-trip", Box::new(diagram_graph_round_trip)),
        ("standard-form-iff-special", Box::new(standard_form_iff_special)),
        ("apm-construction-validity", Box::new(apm_validity)),
        ("leaf-step-measure", Box::new(leaf_step_measure)),
    ]
}

/// Runs every identity family and assembles the sorted report.
pub fn run_checks(cfg: &CheckConfig) -> CheckReport {
    let fams = families();
    let n_families = fams.len();
    let next = AtomicUsize::new(0);
    let records: Mutex<Vec<CheckRecord>> = Mutex::new(Vec::new());
    let workers = cfg.threads.clamp(1, n_families);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n_families {
                    break;
                }
                let out = (fams[i].1)(cfg);
                records.lock().unwrap().extend(out);
            });
        }
    });
    let mut records = records.into_inner().unwrap();
    records.sort();
    let passed = records.iter().filter(|r| r.pass).count();
    let failed = records.len() - passed;
    CheckReport {
        scope: match cfg.scope {
            Scope::Small => "small".into(),
            Scope::Full => "full".into(),
        },
        seed: cfg.seed,
        families: n_families,
        passed,
        failed,
        records,
    }
}

fn volume_agreement(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.forest_cap) {
        let reference = v_apm(&g).unwrap();
        out.push(CheckRecord::compare(
            "volume-agreement/leaf",
            gname(&g),
            &reference,
            &v_leaf(&g).unwrap(),
        ));
        out.push(CheckRecord::compare(
            "volume-agreement/ehrhart",
            gname(&g),
            &reference,
            &v_ehrhart_with(&g, &cfg.caps).unwrap(),
        ));
        out.push(CheckRecord::compare(
            "volume-agreement/labelings",
            gname(&g),
            &reference,
            &count_standard_labelings(&g).unwrap(),
        ));
    }
    // Random larger forests; the Ehrhart route joins in below its cap.
    let mut rng = SplitMix64::new(cfg.seed ^ 0x11);
    let samples = match cfg.scope {
        Scope::Small => 20,
        Scope::Full => 200,
    };
    for _ in 0..samples {
        let n = 2 + (rng.below(9)) as u32; // up to 10 edges
        let g = generate::random_forest(n, rng.next_u64());
        let reference = v_apm(&g).unwrap();
        out.push(CheckRecord::compare(
            "volume-agreement/leaf",
            gname(&g),
            &reference,
            &v_leaf(&g).unwrap(),
        ));
        out.push(CheckRecord::compare(
            "volume-agreement/labelings",
            gname(&g),
            &reference,
            &count_standard_labelings(&g).unwrap(),
        ));
        if n as usize <= cfg.caps.ehrhart_n_max {
            out.push(CheckRecord::compare(
                "volume-agreement/ehrhart",
                gname(&g),
                &reference,
                &v_ehrhart_with(&g, &cfg.caps).unwrap(),
            ));
        }
    }
    out
}

fn leaf_recurrence_volume(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for i in 0..lim.triples {
        let t = generate::random_leaf_triple(4, cfg.seed.wrapping_add(i) ^ 0x22);
        let mut left = v_apm(&t.g).unwrap();
        if cfg.inject_fault && i == 0 {
            left += 1; // deliberate corruption: the suite must notice
        }
        let right = v_apm(&t.g1).unwrap() + v_apm(&t.g2).unwrap();
        out.push(CheckRecord::compare(
            "leaf-recurrence-volume",
            format!("triple#{i} g={}", gname(&t.g)),
            &right,
            &left,
        ));
    }
    out
}

fn leaf_recurrence_s(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for i in 0..lim.triples {
        let t = generate::random_leaf_triple(4, cfg.seed.wrapping_add(i) ^ 0x22);
        let left = s_forest(&t.g).unwrap();
        let right = s_forest(&t.g1).unwrap().add(&s_forest(&t.g2).unwrap());
        out.push(CheckRecord::compare(
            "leaf-recurrence-schur-function",
            format!("triple#{i} g={}", gname(&t.g)),
            format!("{left:?}"),
            format!("{right:?}"),
        ));
    }
    out
}

fn exact_split_decomposition(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    let mut rng = SplitMix64::new(cfg.seed ^ 0x33);
    let mut produced = 0u64;
    let mut attempt = 0u64;
    while produced < lim.triples.min(40) && attempt < 10 * lim.triples {
        attempt += 1;
        let t = generate::random_leaf_triple(3, rng.next_u64());
        if t.g.n_edges() > cfg.caps.specht_n_max.min(6) {
            continue;
        }
        produced += 1;
        let dg = graph_to_diagram(&t.g);
        let d1 = graph_to_diagram(&t.g1);
        let d2 = graph_to_diagram(&t.g2);
        let left = specht::specht_decompose_with(&dg, &cfg.caps).unwrap();
        let right = specht::specht_decompose_with(&d1, &cfg.caps)
            .unwrap()
            .add(&specht::specht_decompose_with(&d2, &cfg.caps).unwrap());
        out.push(CheckRecord::compare(
            "leaf-recurrence-decomposition",
            format!("triple g={}", gname(&t.g)),
            format!("{left:?}"),
            format!("{right:?}"),
        ));
    }
    out
}

fn product_rule(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut rng = SplitMix64::new(cfg.seed ^ 0x44);
    let mut out = Vec::new();
    for i in 0..lim.pairs {
        let m = 1 + rng.below(5) as u32;
        let k = 1 + rng.below(5) as u32;
        let g1 = generate::random_forest(m, rng.next_u64());
        let g2 = generate::random_forest(k, rng.next_u64());
        let union = generate::disjoint_union(&[g1.clone(), g2.clone()]);
        let n = m + k;
        let left = v_apm(&union).unwrap() * factorial(m) * factorial(k);
        let right = v_apm(&g1).unwrap() * v_apm(&g2).unwrap() * factorial(n);
        out.push(CheckRecord::compare(
            "product-rule",
            format!("pair#{i} m={m} k={k}"),
            &left,
            &right,
        ));
    }
    out
}

fn apm_recursion(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut rng = SplitMix64::new(cfg.seed ^ 0x55);
    let mut out = Vec::new();
    for i in 0..lim.apm_instances {
        let n = 2 + rng.below(6) as u32;
        let g = generate::random_forest(n, rng.next_u64());
        let apms = enumerate::all_apms(&g);
        let m = &apms[rng.below(apms.len() as u64) as usize];
        let left = v_apm(&g).unwrap();
        let right: BigInt = m
            .edge_ids()
            .iter()
            .map(|&e| v_apm(&g.delete_edge(e)).unwrap())
            .sum();
        out.push(CheckRecord::compare(
            "apm-recursion",
            format!("instance#{i} g={} m={:?}", gname(&g), m.edge_ids()),
            &left,
            &right,
        ));
    }
    out
}

fn corners_branching(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut rng = SplitMix64::new(cfg.seed ^ 0x66);
    let mut out = Vec::new();
    let samples = lim.apm_instances.min(30);
    for i in 0..samples {
        let n = 2 + rng.below(4) as u32; // up to 5 edges keeps characters quick
        let g = generate::random_forest(n, rng.next_u64());
        let apms = enumerate::all_apms(&g);
        let m = &apms[rng.below(apms.len() as u64) as usize];
        let d = graph_to_diagram(&g);
        let left = specht::specht_decompose_with(&d, &cfg.caps)
            .unwrap()
            .restriction_multiset();
        let mut right: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for &e in m.edge_ids() {
            let sub = specht::specht_decompose_with(&graph_to_diagram(&g.delete_edge(e)), &cfg.caps)
                .unwrap();
            for (lam, c) in sub.terms() {
                *right.entry(lam.clone()).or_insert_with(BigInt::zero) += c;
            }
        }
        right.retain(|_, v| !v.is_zero());
        out.push(CheckRecord::compare(
            "corners-branching",
            format!("instance#{i} g={} m={:?}", gname(&g), m.edge_ids()),
            format!("{left:?}"),
            format!("{right:?}"),
        ));
    }
    out
}

fn choice_independence_labelings(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.forest_cap) {
        let reference = count_standard_labelings(&g).unwrap();
        for (k, m) in enumerate::all_apms(&g).iter().enumerate() {
            let via_m: BigInt = m
                .edge_ids()
                .iter()
                .map(|&e| count_standard_labelings(&g.delete_edge(e)).unwrap())
                .sum();
            out.push(CheckRecord::compare(
                "choice-independence-labelings",
                format!("g={} apm#{k}", gname(&g)),
                &reference,
                &via_m,
            ));
        }
    }
    out
}

fn choice_independence_ssyt(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.ssyt_cap.min(5)) {
        let d = graph_to_diagram(&g);
        let (gd, boxes) = d.to_graph().unwrap();
        for n_labels in 1..=3u32 {
            let reference = BigInt::from(tableaux::ssyt_enumerate(&d, n_labels).unwrap().len());
            for (k, m) in enumerate::all_apms(&gd).iter().enumerate() {
                let t = Transversal::new(&d, m.edge_ids().iter().map(|&e| boxes[e])).unwrap();
                let count =
                    tableaux::ssyt_count_with_top_transversal(&d, n_labels, &t).unwrap();
                out.push(CheckRecord::compare(
                    "choice-independence-ssyt",
                    format!("g={} N={n_labels} apm#{k}", gname(&g)),
                    &reference,
                    &count,
                ));
            }
        }
    }
    out
}

fn color_invariance(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.forest_cap) {
        out.push(CheckRecord::compare(
            "color-invariance",
            gname(&g),
            &v_apm(&g).unwrap(),
            &v_apm(&g.color_flip()).unwrap(),
        ));
    }
    out
}

fn m_polynomiality(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.ssyt_cap) {
        let n = g.n_edges() as u32;
        let points: Vec<(BigRational, BigRational)> = (1..=n + 1)
            .map(|t| {
                (
                    BigRational::from_integer(BigInt::from(t)),
                    BigRational::from_integer(m_count(&g, t).unwrap()),
                )
            })
            .collect();
        let coeffs = interpolate(&points);
        let predicted = poly_eval(&coeffs, &BigRational::from_integer(BigInt::from(n + 2)));
        let actual = BigRational::from_integer(m_count(&g, n + 2).unwrap());
        out.push(CheckRecord::compare(
            "m-count-polynomiality",
            gname(&g),
            predicted.to_string(),
            actual.to_string(),
        ));
    }
    out
}

fn dimension_identities(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    // One edge past the general cap: these two identities stay cheap.
    for g in enumerate::forests_up_to(lim.forest_cap + 1) {
        let v = v_apm(&g).unwrap();
        let s = s_forest(&g).unwrap();
        let n = g.n_edges() as u32;
        let exp =
            BigRational::from_integer(factorial(n)) * exp_specialize(&s);
        out.push(CheckRecord::compare(
            "dimension-identities/exponential",
            gname(&g),
            BigRational::from_integer(v.clone()).to_string(),
            exp.to_string(),
        ));
        let se = h_to_schur(&s).unwrap();
        out.push(CheckRecord::compare(
            "dimension-identities/hook-sum",
            gname(&g),
            &v,
            &se.dimension(),
        ));
    }
    out
}

fn principal_vs_mcount(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.forest_cap) {
        let s = s_forest(&g).unwrap();
        for n_vars in 1..=3u32 {
            out.push(CheckRecord::compare(
                "principal-specialization",
                format!("g={} N={n_vars}", gname(&g)),
                &m_count(&g, n_vars).unwrap(),
                &principal_specialize(&s, n_vars).unwrap(),
            ));
        }
    }
    out
}

fn s_multiplicativity(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut rng = SplitMix64::new(cfg.seed ^ 0x77);
    let mut out = Vec::new();
    for i in 0..lim.pairs {
        let g1 = generate::random_forest(1 + rng.below(4) as u32, rng.next_u64());
        let g2 = generate::random_forest(1 + rng.below(4) as u32, rng.next_u64());
        let union = generate::disjoint_union(&[g1.clone(), g2.clone()]);
        let left = s_forest(&union).unwrap();
        let right = symfunc::hpoly_mul(&s_forest(&g1).unwrap(), &s_forest(&g2).unwrap());
        out.push(CheckRecord::compare(
            "s-multiplicativity",
            format!("pair#{i}"),
            format!("{left:?}"),
            format!("{right:?}"),
        ));
    }
    out
}

fn universality(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    let forests = enumerate::forests_up_to(lim.ssyt_cap.min(5));
    // Mod-m rings, prime and not.
    for modulus in [12u64, 97] {
        let ring = IntegersMod(modulus);
        let star = move |r: &IntegersMod, n: u32| {
            r.from_bigint(&BigInt::from((n as u64).pow(2) + 3))
        };
        for g in &forests {
            let direct = leaf_eval(&ring, g, &star).unwrap();
            let via_s = hpoly_specialize(&ring, &s_forest(g).unwrap(), &star);
            out.push(CheckRecord::compare(
                "universality",
                format!("g={} ring=Z/{modulus}", gname(g)),
                format!("{direct:?}"),
                format!("{via_s:?}"),
            ));
        }
    }
    // Rationals with an alternating-sign assignment.
    let ring = Rationals;
    let star = |r: &Rationals, n: u32| {
        let v = if n.is_multiple_of(2) { -(n as i64) } else { n as i64 + 1 };
        r.from_bigint(&BigInt::from(v))
    };
    for g in &forests {
        let direct = leaf_eval(&ring, g, &star).unwrap();
        let via_s = hpoly_specialize(&ring, &s_forest(g).unwrap(), &star);
        out.push(CheckRecord::compare(
            "universality",
            format!("g={} ring=Q", gname(g)),
            direct.to_string(),
            via_s.to_string(),
        ));
    }
    out
}

fn schur_nonnegativity(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.forest_cap) {
        let ok = match schur_coeffs(&g) {
            Ok(se) => se.is_nonnegative(),
            Err(_) => false,
        };
        out.push(CheckRecord::compare(
            "schur-nonnegativity",
            gname(&g),
            true,
            ok,
        ));
    }
    out
}

fn character_orthogonality(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for n in 1..=lim.char_n {
        let parts = partitions_of(n);
        let nf = factorial(n);
        for a in &parts {
            for b in &parts {
                let mut acc = BigInt::zero();
                for rho in &parts {
                    acc += partition::class_size(rho)
                        * BigInt::from(partition::mn_char(a, rho).unwrap())
                        * BigInt::from(partition::mn_char(b, rho).unwrap());
                }
                let expect = if a == b { nf.clone() } else { BigInt::zero() };
                out.push(CheckRecord::compare(
                    "character-orthogonality",
                    format!("n={n} a={a} b={b}"),
                    &expect,
                    &acc,
                ));
            }
        }
    }
    out
}

fn hook_vs_enumeration(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for n in 1..=lim.char_n {
        for lam in partitions_of(n) {
            out.push(CheckRecord::compare(
                "hook-length-vs-enumeration",
                lam.to_string(),
                &partition::hook_dim(&lam),
                &partition::syt_count_by_recursion(&lam),
            ));
        }
    }
    out
}

fn theorem_main(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.forest_cap) {
        let d = graph_to_diagram(&g);
        out.push(CheckRecord::compare(
            "theorem-main",
            gname(&g),
            &v_apm(&g).unwrap(),
            &specht::specht_dim_with(&d, &cfg.caps).unwrap(),
        ));
    }
    let mut rng = SplitMix64::new(cfg.seed ^ 0x88);
    for i in 0..lim.seven_edge_samples {
        let g = generate::random_forest(7, rng.next_u64());
        let d = graph_to_diagram(&g);
        out.push(CheckRecord::compare(
            "theorem-main",
            format!("random7#{i} {}", gname(&g)),
            &v_apm(&g).unwrap(),
            &specht::specht_dim_with(&d, &cfg.caps).unwrap(),
        ));
    }
    out
}

fn decomposition_consistency(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.forest_cap) {
        let d = graph_to_diagram(&g);
        let left = schur_coeffs(&g).unwrap();
        let right = specht::specht_decompose_with(&d, &cfg.caps).unwrap();
        out.push(CheckRecord::compare(
            "decomposition-consistency",
            gname(&g),
            format!("{left:?}"),
            format!("{right:?}"),
        ));
    }
    out
}

fn restrict_inequality(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::bipartite_graphs_up_to(lim.diagram_cap) {
        let d = graph_to_diagram(&g);
        let dim = specht::specht_dim_with(&d, &cfg.caps).unwrap();
        for (k, t) in enumerate::all_special_transversals(&d).iter().enumerate() {
            let sum: BigInt = t
                .boxes()
                .iter()
                .map(|&b| specht::specht_dim_with(&d.without_box(b), &cfg.caps).unwrap())
                .sum();
            out.push(CheckRecord::compare(
                "restrict-inequality",
                format!("d={:?} u#{k}", d.box_list()),
                true,
                dim >= sum,
            ));
        }
    }
    out
}

fn james_peel_inequality(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::bipartite_graphs_up_to(lim.diagram_cap) {
        let d = graph_to_diagram(&g);
        let dim = specht::specht_dim_with(&d, &cfg.caps).unwrap();
        let boxes = d.box_list();
        for &b1 in &boxes {
            for &b2 in &boxes {
                if b1 >= b2 {
                    continue;
                }
                let Ok((da, db)) = split_diagram(&d, b1, b2) else {
                    continue;
                };
                let sum = specht::specht_dim_with(&da, &cfg.caps).unwrap()
                    + specht::specht_dim_with(&db, &cfg.caps).unwrap();
                out.push(CheckRecord::compare(
                    "james-peel-inequality",
                    format!("d={:?} b1={b1:?} b2={b2:?}", d.box_list()),
                    true,
                    dim >= sum,
                ));
            }
        }
    }
    out
}

fn transpose_duality(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::bipartite_graphs_up_to(lim.diagram_cap) {
        let d = graph_to_diagram(&g);
        out.push(CheckRecord::compare(
            "transpose-duality",
            format!("{:?}", d.box_list()),
            &specht::specht_dim_with(&d, &cfg.caps).unwrap(),
            &specht::specht_dim_with(&d.transpose(), &cfg.caps).unwrap(),
        ));
    }
    out
}

fn modular_rank_agreement(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::bipartite_graphs_up_to(lim.diagram_cap) {
        let d = graph_to_diagram(&g);
        let p1 = specht::specht_dim_mod(&d, cfg.caps.prime, &cfg.caps).unwrap();
        let p2 = specht::specht_dim_mod(&d, cfg.caps.prime_alt, &cfg.caps).unwrap();
        out.push(CheckRecord::compare(
            "modular-rank-agreement/two-primes",
            format!("{:?}", d.box_list()),
            &p1,
            &p2,
        ));
        if d.len() <= 4 {
            let q = specht::specht_dim_rational(&d, &cfg.caps).unwrap();
            out.push(CheckRecord::compare(
                "modular-rank-agreement/rational",
                format!("{:?}", d.box_list()),
                &p1,
                &q,
            ));
        }
    }
    out
}

fn strip_counting_identity(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.strip_cap) {
        let d = graph_to_diagram(&g);
        for n_vars in 2..=3u32 {
            let left = m_count_diagram(&d, n_vars).unwrap();
            let mut right = BigInt::zero();
            for strip in tableaux::canonical_strips(&d).unwrap() {
                let removed = strip.iter().copied().collect();
                right += m_count_diagram(&d.without(&removed), n_vars - 1).unwrap();
            }
            out.push(CheckRecord::compare(
                "strip-counting-identity",
                format!("g={} N={n_vars}", gname(&g)),
                &left,
                &right,
            ));
        }
    }
    out
}

fn ssyt_branching(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.ssyt_cap) {
        let d = graph_to_diagram(&g);
        for n_vars in 1..=3u32 {
            let left = BigInt::from(tableaux::ssyt_enumerate(&d, n_vars).unwrap().len());
            let mut right = BigInt::zero();
            for strip in tableaux::canonical_strips(&d).unwrap() {
                let removed = strip.iter().copied().collect();
                right += BigInt::from(
                    tableaux::ssyt_enumerate(&d.without(&removed), n_vars - 1)
                        .unwrap()
                        .len(),
                );
            }
            out.push(CheckRecord::compare(
                "ssyt-branching",
                format!("g={} N={n_vars}", gname(&g)),
                &left,
                &right,
            ));
        }
    }
    out
}

fn ssyt_triple_agreement(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.ssyt_cap) {
        let d = graph_to_diagram(&g);
        let s = s_forest(&g).unwrap();
        for n_vars in 1..=3u32 {
            let ssyt = BigInt::from(tableaux::ssyt_enumerate(&d, n_vars).unwrap().len());
            out.push(CheckRecord::compare(
                "ssyt-triple-agreement/principal",
                format!("g={} N={n_vars}", gname(&g)),
                &ssyt,
                &principal_specialize(&s, n_vars).unwrap(),
            ));
            let tensor = specht::schur_tensor_span_with(&d, n_vars, &cfg.caps).unwrap();
            out.push(CheckRecord::compare(
                "ssyt-triple-agreement/tensor",
                format!("g={} N={n_vars}", gname(&g)),
                &ssyt,
                &tensor.dimension,
            ));
        }
    }
    out
}

fn gen_function_vs_schur(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.ssyt_cap) {
        let d = graph_to_diagram(&g);
        let se = schur_coeffs(&g).unwrap();
        for n_vars in 1..=3u32 {
            let left = tableaux::ssyt_generating_function(&d, n_vars).unwrap();
            let right = schur_monomial_expansion(&se, n_vars).unwrap();
            out.push(CheckRecord::compare(
                "generating-function-vs-schur",
                format!("g={} N={n_vars}", gname(&g)),
                format!("{left:?}"),
                format!("{right:?}"),
            ));
        }
    }
    out
}

fn tensor_character_consistency(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.ssyt_cap) {
        let d = graph_to_diagram(&g);
        let se = schur_coeffs(&g).unwrap();
        for n_vars in 1..=3u32 {
            let tensor = specht::schur_tensor_span_with(&d, n_vars, &cfg.caps).unwrap();
            let expansion = schur_monomial_expansion(&se, n_vars).unwrap();
            out.push(CheckRecord::compare(
                "tensor-character-consistency",
                format!("g={} N={n_vars}", gname(&g)),
                format!("{:?}", tensor.character),
                format!("{expansion:?}"),
            ));
        }
    }
    out
}

fn strips_apm_correspondence(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.strip_cap) {
        let d = graph_to_diagram(&g);
        let u = tableaux::canonical_apm_transversal(&d).unwrap();
        let strips = tableaux::horizontal_strips(&d, &u).unwrap();
        let singles: Vec<(u32, u32)> = strips
            .iter()
            .filter(|s| s.len() == 1)
            .map(|s| *s.iter().next().unwrap())
            .collect();
        let expected: Vec<(u32, u32)> = u.boxes().to_vec();
        out.push(CheckRecord::compare(
            "strips-are-apm-boxes",
            gname(&g),
            format!("{expected:?}"),
            format!("{singles:?}"),
        ));
        let column_rule = strips.iter().all(|s| {
            let cols: std::collections::BTreeSet<u32> = s.iter().map(|&(_, c)| c).collect();
            cols.len() == s.len()
        });
        out.push(CheckRecord::compare(
            "strips-are-apm-boxes/column-rule",
            gname(&g),
            true,
            column_rule,
        ));
    }
    out
}

fn standard_tableaux_count(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.strip_cap) {
        let d = graph_to_diagram(&g);
        let via_chain = BigInt::from(tableaux::standard_tableaux(&d).unwrap().len());
        let via_recursion =
            BigInt::from(tableaux::standard_labelings_by_recursion(&d).unwrap().len());
        out.push(CheckRecord::compare(
            "standard-tableaux-count/routes",
            gname(&g),
            &via_chain,
            &via_recursion,
        ));
        out.push(CheckRecord::compare(
            "standard-tableaux-count/volume",
            gname(&g),
            &via_chain,
            &v_apm(&g).unwrap(),
        ));
        out.push(CheckRecord::compare(
            "standard-tableaux-count/module",
            gname(&g),
            &via_chain,
            &specht::specht_dim_with(&graph_to_diagram(&g), &cfg.caps).unwrap(),
        ));
    }
    out
}

fn diagram_graph_round_trip(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::bipartite_graphs_up_to(lim.diagram_cap + 1) {
        let d = graph_to_diagram(&g);
        let g2 = crate::diagram::diagram_to_graph(&d).unwrap();
        out.push(CheckRecord::compare(
            "diagram-graph-round-trip",
            gname(&g),
            true,
            canon::isomorphic(&g, &g2),
        ));
    }
    out
}

fn standard_form_iff_special(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::bipartite_graphs_up_to(lim.diagram_cap) {
        let (d, boxes) = crate::diagram::graph_to_diagram_with_edges(&g);
        for (k, m) in enumerate::all_matchings(&g).iter().enumerate() {
            if m.is_empty() {
                continue;
            }
            let special = is_special(&g, m);
            let t = Transversal::new(&d, m.edge_ids().iter().map(|&e| boxes[e])).unwrap();
            let formed = standard_form(&d, &t).is_ok();
            out.push(CheckRecord::compare(
                "standard-form-iff-special",
                format!("g={} m#{k}", gname(&g)),
                special,
                formed,
            ));
        }
    }
    out
}

fn apm_validity(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let lim = limits(cfg.scope);
    let mut out = Vec::new();
    for g in enumerate::forests_up_to(lim.forest_cap) {
        let m = find_apm(&g).unwrap();
        out.push(CheckRecord::compare(
            "apm-construction-validity",
            gname(&g),
            true,
            is_almost_perfect(&g, &m),
        ));
        // Every matching of a forest is special.
        let all_special = enumerate::all_matchings(&g)
            .iter()
            .all(|m| is_special(&g, m));
        out.push(CheckRecord::compare(
            "apm-construction-validity/forest-special",
            gname(&g),
            true,
            all_special,
        ));
    }
    let mut rng = SplitMix64::new(cfg.seed ^ 0x99);
    for i in 0..30 {
        let g = generate::random_forest(8, rng.next_u64());
        let m = find_apm(&g).unwrap();
        out.push(CheckRecord::compare(
            "apm-construction-validity",
            format!("random#{i}"),
            true,
            is_almost_perfect(&g, &m),
        ));
    }
    out
}

fn leaf_step_measure(cfg: &CheckConfig) -> Vec<CheckRecord> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0xaa);
    let mut out = Vec::new();
    let mut produced = 0;
    let mut attempts = 0;
    while produced < 40 && attempts < 500 {
        attempts += 1;
        let g = generate::random_forest(2 + rng.below(6) as u32, rng.next_u64());
        if g.components().len() != 1 {
            continue;
        }
        let root = g.canonical_root().unwrap();
        if g.is_star_centered_at(root) {
            continue;
        }
        produced += 1;
        let step = crate::graph::leaf_step(&g, root).unwrap();
        out.push(CheckRecord::compare(
            "leaf-step-measure/distance-sum",
            format!("g={}", gname(&g)),
            g.distance_sum(root) as i64 - 1,
            step.gp.distance_sum(root) as i64,
        ));
        out.push(CheckRecord::compare(
            "leaf-step-measure/disconnects",
            format!("g={}", gname(&g)),
            true,
            step.h.components().len() > 1,
        ));
    }
    out
}

/// Convenience entry point used by tests.
pub fn run(scope: Scope, seed: u64) -> CheckReport {
    run_checks(&CheckConfig::new(scope, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fault_injection_is_caught() {
        let mut cfg = CheckConfig::new(Scope::Small, 7);
        cfg.inject_fault = true;
        let report = run_checks(&cfg);
        assert!(!report.all_passed());
        assert!(report
            .failures()
            .iter()
            .all(|r| r.identity == "leaf-recurrence-volume"));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run(Scope::Small, 11);
        let b = run(Scope::Small, 11);
        assert_eq!(a.records, b.records);
        assert!(a.families >= 10);
    }
}
