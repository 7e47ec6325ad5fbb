//! Exhaustive sweeps over small shapes, collected into reports.
//!
//! Each suite builds its list of instances up front, evaluates them with the
//! chosen [`Strategy`], and merges the per-instance tallies in input order,
//! so reports do not depend on scheduling.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coefficient::{
    classical_terms_restricted, duality_check, fusion_oracle, fusion_remark13, fusion_row,
    fusion_theorem12, gepner_witten, lr_lattice, lr_paths, verify_theorem18,
};
use crate::exec::Strategy;
use crate::involution::{in_d1, in_d2, is_k_fusion, phi, phi1, phi2, psi, SignedTerm};
use crate::partition::{conjugate_composition, sigma_dot, FusionContext, Partition, Permutation};
use crate::path::{for_each_path, Region};
use crate::word::blocks_fit;

pub const SCHEMA: &str = "fusionkit.report/1";

/// Counterexamples kept per check.
const KEEP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    /// Hard checks fail the run; soft checks are informational.
    pub hard: bool,
    pub passed: u64,
    pub failed: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Per-check tallies, merged in a fixed order.
#[derive(Debug, Default, Clone)]
pub struct Tally {
    checks: BTreeMap<&'static str, (u64, u64, Vec<Counterexample>)>,
}

impl Tally {
    pub fn check(
        &mut self,
        name: &'static str,
        ok: bool,
        input: impl FnOnce() -> String,
        detail: impl FnOnce() -> String,
    ) {
        let e = self.checks.entry(name).or_default();
        if ok {
            e.0 += 1;
        } else {
            e.1 += 1;
            if e.2.len() < KEEP {
                e.2.push(Counterexample {
                    input: input(),
                    detail: detail(),
                });
            }
        }
    }

    pub fn merge(&mut self, other: Tally) {
        for (name, (p, f, mut ex)) in other.checks {
            let e = self.checks.entry(name).or_default();
            e.0 += p;
            e.1 += f;
            let room = KEEP.saturating_sub(e.2.len());
            ex.truncate(room);
            e.2.extend(ex);
        }
    }

    pub fn into_reports(self, hard: bool) -> Vec<CheckReport> {
        self.checks
            .into_iter()
            .map(|(name, (passed, failed, counterexamples))| CheckReport {
                name: name.to_string(),
                hard,
                passed,
                failed,
                counterexamples,
            })
            .collect()
    }
}

fn run<T: Sync>(strategy: Strategy, items: &[T], f: impl Fn(&T) -> Tally + Sync + Send) -> Tally {
    let mut total = Tally::default();
    for t in strategy.map(items, f) {
        total.merge(t);
    }
    total
}

/// Partitions with at most `n` rows and at most `max_size` boxes that are
/// `(n, k)`-restricted.
pub fn restricted_shapes(ctx: &FusionContext, max_size: usize) -> Vec<Partition> {
    Partition::all_up_to(max_size, ctx.n())
        .into_iter()
        .filter(|p| ctx.is_restricted(p))
        .collect()
}

/// Triples `(λ, μ, ν)` of restricted partitions with `λ ⊆ ν`,
/// `|λ| + |μ| = |ν| <= max_size`, and `μ` accepted by `keep`.
pub fn restricted_triples(
    ctx: &FusionContext,
    max_size: usize,
    keep: impl Fn(&Partition) -> bool,
) -> Vec<(Partition, Partition, Partition)> {
    let shapes = restricted_shapes(ctx, max_size);
    let mut out = Vec::new();
    for nu in &shapes {
        for lambda in shapes.iter().filter(|l| nu.contains(l)) {
            for mu in Partition::all_of_size(nu.size() - lambda.size(), ctx.n()) {
                if ctx.is_restricted(&mu) && keep(&mu) {
                    out.push((lambda.clone(), mu, nu.clone()));
                }
            }
        }
    }
    out
}

fn show(l: &Partition, m: &Partition, n: &Partition) -> String {
    format!("lambda={l} mu={m} nu={n}")
}

fn show_ctx(l: &Partition, m: &Partition, n: &Partition, c: &FusionContext) -> String {
    format!("lambda={l} mu={m} nu={n} n={} k={}", c.n(), c.k())
}

/// All `(λ, μ, ν)` with `|ν| <= max_size`, `λ ⊆ ν`, `μ ⊢ |ν/λ|`.
fn classical_triples(max_size: usize) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for nu in Partition::all_up_to(max_size, max_size) {
        for lambda in Partition::all_up_to(nu.size(), nu.len())
            .into_iter()
            .filter(|l| nu.contains(l))
        {
            let m = nu.size() - lambda.size();
            for mu in Partition::all_of_size(m, m) {
                out.push((lambda.clone(), mu, nu.clone()));
            }
        }
    }
    out
}

/// Path count against lattice fillings.
pub fn suite_lr(max_size: usize, strategy: Strategy) -> Vec<CheckReport> {
    let items = classical_triples(max_size);
    run(strategy, &items, |(l, m, n)| {
        let mut t = Tally::default();
        let a = lr_paths(l, m, n);
        let b = lr_lattice(l, m, n);
        t.check(
            "lr_paths_equals_lattice",
            a == b,
            || show(l, m, n),
            || format!("paths={a} lattice={b}"),
        );
        t
    })
    .into_reports(true)
}

/// The classical involution on every signed term.
pub fn suite_psi(max_size: usize, strategy: Strategy) -> Vec<CheckReport> {
    let items = classical_triples(max_size);
    run(strategy, &items, |(l, m, n)| {
        let mut t = Tally::default();
        let width = m.part(0);
        let conj = conjugate_composition(m, width);
        let mut signed = 0i64;
        for sigma in Permutation::all(width) {
            let Ok(ascents) = sigma_dot(&sigma, &conj) else {
                continue;
            };
            for_each_path(l, &ascents, Region::Rows(n.len()), Some(n), &mut |p| {
                let term = SignedTerm {
                    sigma: sigma.clone(),
                    path: p.clone(),
                };
                signed += term.sign();
                let input = || format!("{} sigma={:?} path={p:?}", show(l, m, n), sigma.images());
                match psi(&term, m) {
                    Ok(image) => {
                        let back = psi(&image, m);
                        t.check("psi_involution", back.as_ref() == Ok(&term), input, || {
                            format!("{back:?}")
                        });
                        let fixed = image == term;
                        t.check(
                            "psi_fixed_points_fit",
                            fixed == (sigma.is_identity() && blocks_fit(p)),
                            input,
                            || format!("fixed={fixed}"),
                        );
                        if !fixed {
                            t.check(
                                "psi_reverses_sign",
                                image.sign() == -term.sign(),
                                input,
                                String::new,
                            );
                        }
                    }
                    Err(e) => t.check("psi_involution", false, input, || e.to_string()),
                }
            });
        }
        let lr = lr_paths(l, m, n) as i64;
        t.check(
            "psi_signed_sum_equals_lr",
            signed == lr,
            || show(l, m, n),
            || format!("signed={signed} lr={lr}"),
        );
        t
    })
    .into_reports(true)
}

/// Contexts `(n, k)` for `n` in `2..=n_max` and `k` in `1..=k_max`.
pub fn contexts(n_max: usize, k_max: usize) -> Vec<FusionContext> {
    (2..=n_max)
        .flat_map(|n| (1..=k_max).filter_map(move |k| FusionContext::new(n, k).ok()))
        .collect()
}

fn two_column_triples(
    n_max: usize,
    k_max: usize,
    max_size: usize,
) -> Vec<(FusionContext, Partition, Partition, Partition)> {
    contexts(n_max, k_max)
        .into_iter()
        .flat_map(|c| {
            restricted_triples(&c, max_size, |mu| mu.part(0) == 2)
                .into_iter()
                .map(move |(l, m, n)| (c, l, m, n))
        })
        .collect()
}

/// The level-`k` involution, its two new operators, and the fixed-point
/// count against the oracle.
pub fn suite_involution(
    n_max: usize,
    k_max: usize,
    max_size: usize,
    strategy: Strategy,
) -> Vec<CheckReport> {
    let items = two_column_triples(n_max, k_max, max_size);
    run(strategy, &items, |(c, l, m, n)| {
        let mut t = Tally::default();
        let conj = conjugate_composition(m, 2);
        let mut fixed_count = 0i64;
        for sigma in Permutation::all(2) {
            let ascents = sigma_dot(&sigma, &conj).expect("degree two");
            for_each_path(l, &ascents, Region::Restricted(*c), Some(n), &mut |p| {
                let term = SignedTerm {
                    sigma: sigma.clone(),
                    path: p.clone(),
                };
                let input = || {
                    format!(
                        "{} sigma={:?} path={p:?}",
                        show_ctx(l, m, n, c),
                        sigma.images()
                    )
                };
                let image = match phi(&term, c, m) {
                    Ok(image) => image,
                    Err(e) => {
                        t.check("phi_defined", false, input, || e.to_string());
                        return;
                    }
                };
                t.check("phi_defined", true, input, String::new);
                t.check(
                    "phi_stays_restricted",
                    image.path.boundaries_restricted(c),
                    input,
                    || format!("image={:?}", image.path),
                );
                let back = phi(&image, c, m);
                t.check("phi_involution", back.as_ref() == Ok(&term), input, || {
                    format!("image={:?} back={back:?}", image.path)
                });
                let fixed = image == term;
                if fixed {
                    fixed_count += 1;
                } else {
                    t.check(
                        "phi_reverses_sign",
                        image.sign() == -term.sign(),
                        input,
                        String::new,
                    );
                }
                let k_fusion = sigma.is_identity() && is_k_fusion(p, c, m);
                t.check(
                    "phi_fixed_points_are_k_fusion",
                    fixed == k_fusion,
                    input,
                    || format!("fixed={fixed} k_fusion={k_fusion}"),
                );

                if m.len() < c.n() && in_d1(p, c) {
                    match phi1(p, c) {
                        Ok(q) => {
                            t.check("phi1_image_in_d2", in_d2(&q, c).holds(), input, || {
                                format!("{:?}", in_d2(&q, c))
                            });
                            let back = phi2(&q, c);
                            t.check(
                                "phi2_after_phi1_is_identity",
                                back.as_ref() == Ok(p),
                                input,
                                || format!("{back:?}"),
                            );
                        }
                        Err(e) => t.check("phi1_image_in_d2", false, input, || e.to_string()),
                    }
                }
                if m.len() < c.n() && in_d2(p, c).holds() {
                    match phi2(p, c) {
                        Ok(q) => {
                            t.check("phi2_image_in_d1", in_d1(&q, c), input, || format!("{q:?}"));
                            let back = phi1(&q, c);
                            t.check(
                                "phi1_after_phi2_is_identity",
                                back.as_ref() == Ok(p),
                                input,
                                || format!("{back:?}"),
                            );
                        }
                        Err(e) => t.check("phi2_image_in_d1", false, input, || e.to_string()),
                    }
                }
            });
        }
        let oracle = fusion_oracle(l, m, n, c);
        t.check(
            "fixed_points_equal_oracle",
            oracle.as_ref() == Ok(&fixed_count),
            || show_ctx(l, m, n, c),
            || format!("fixed={fixed_count} oracle={oracle:?}"),
        );
        let rule = fusion_theorem12(l, m, n, c);
        t.check(
            "rule_equals_oracle",
            rule.as_ref().ok().map(|&v| v as i64) == oracle.as_ref().ok().copied(),
            || show_ctx(l, m, n, c),
            || format!("rule={rule:?} oracle={oracle:?}"),
        );
        t
    })
    .into_reports(true)
}

/// The filling count with exclusions against the path rule.
pub fn suite_fillings(
    n_max: usize,
    k_max: usize,
    max_size: usize,
    strategy: Strategy,
) -> Vec<CheckReport> {
    let items = two_column_triples(n_max, k_max, max_size);
    run(strategy, &items, |(c, l, m, n)| {
        let mut t = Tally::default();
        let a = fusion_remark13(l, m, n, c);
        let b = fusion_theorem12(l, m, n, c);
        t.check(
            "fillings_equal_rule",
            a == b,
            || show_ctx(l, m, n, c),
            || format!("fillings={a:?} rule={b:?}"),
        );
        t
    })
    .into_reports(true)
}

/// Fusion against classical coefficients.
pub fn suite_classical_bound(
    n_max: usize,
    k_max: usize,
    max_size: usize,
    strategy: Strategy,
) -> Vec<CheckReport> {
    let items: Vec<_> = contexts(n_max, k_max)
        .into_iter()
        .flat_map(|c| {
            restricted_triples(&c, max_size, |mu| mu.part(0) <= 2)
                .into_iter()
                .map(move |(l, m, n)| (c, l, m, n))
        })
        .collect();
    let mut tally = run(strategy, &items, |(c, l, m, n)| {
        let mut t = Tally::default();
        let input = || show_ctx(l, m, n, c);
        let lr = lr_paths(l, m, n) as i64;
        match fusion_oracle(l, m, n, c) {
            Ok(v) => {
                t.check("fusion_at_most_lr", v <= lr, input, || {
                    format!("N={v} c={lr}")
                });
                if classical_terms_restricted(l, m, n, c).unwrap_or(false) {
                    t.check(
                        "fusion_equals_lr_when_terms_restricted",
                        v == lr,
                        input,
                        || format!("N={v} c={lr}"),
                    );
                }
            }
            Err(e) => t.check("fusion_at_most_lr", false, input, || e.to_string()),
        }
        t
    });
    // a level at least |λ|+|μ| restricts nothing, for any μ
    let large: Vec<_> = (2..=n_max)
        .flat_map(|n| {
            Partition::all_up_to(max_size, n)
                .into_iter()
                .flat_map(move |nu| {
                    let c = FusionContext::new(n, nu.size().max(1)).expect("n >= 2");
                    Partition::all_up_to(nu.size(), n)
                        .into_iter()
                        .filter(|l| nu.contains(l))
                        .flat_map(|l| {
                            Partition::all_of_size(nu.size() - l.size(), n)
                                .into_iter()
                                .map(move |m| (l.clone(), m))
                        })
                        .map(|(l, m)| (c, l, m, nu.clone()))
                        .collect::<Vec<_>>()
                })
        })
        .collect();
    tally.merge(run(strategy, &large, |(c, l, m, n)| {
        let mut t = Tally::default();
        let lr = lr_paths(l, m, n) as i64;
        let v = fusion_oracle(l, m, n, c);
        t.check(
            "fusion_equals_lr_at_large_level",
            v == Ok(lr),
            || show_ctx(l, m, n, c),
            || format!("N={v:?} c={lr}"),
        );
        t
    }));
    tally.into_reports(true)
}

/// `N^{(k)} <= N^{(k+1)}` for one- and two-column `μ`.
pub fn suite_monotone(
    n_max: usize,
    k_max: usize,
    max_size: usize,
    strategy: Strategy,
) -> Vec<CheckReport> {
    let items: Vec<_> = contexts(n_max, k_max)
        .into_iter()
        .flat_map(|c| {
            restricted_triples(&c, max_size, |mu| mu.part(0) <= 2)
                .into_iter()
                .map(move |(l, m, n)| (c, l, m, n))
        })
        .collect();
    run(strategy, &items, |(c, l, m, n)| {
        let mut t = Tally::default();
        let next = c.with_level(c.k() + 1);
        let a = fusion_oracle(l, m, n, c);
        let b = fusion_oracle(l, m, n, &next);
        let ok = matches!((&a, &b), (Ok(x), Ok(y)) if x <= y);
        t.check(
            "fusion_monotone_in_level",
            ok,
            || show_ctx(l, m, n, c),
            || format!("N(k)={a:?} N(k+1)={b:?}"),
        );
        t
    })
    .into_reports(true)
}

fn all_restricted_triples(
    n_max: usize,
    k_max: usize,
    max_size: usize,
) -> Vec<(FusionContext, Partition, Partition, Partition)> {
    contexts(n_max, k_max)
        .into_iter()
        .flat_map(|c| {
            restricted_triples(&c, max_size, |_| true)
                .into_iter()
                .map(move |(l, m, n)| (c, l, m, n))
        })
        .collect()
}

/// Oracle invariance under rank-level duality, and positivity of every
/// oracle value met on the way.
pub fn suite_duality(
    n_max: usize,
    k_max: usize,
    max_size: usize,
    strategy: Strategy,
) -> Vec<CheckReport> {
    let items = all_restricted_triples(n_max, k_max, max_size);
    run(strategy, &items, |(c, l, m, n)| {
        let mut t = Tally::default();
        let input = || show_ctx(l, m, n, c);
        match duality_check(l, m, n, c) {
            Ok(d) => {
                t.check("duality_invariance", d.holds(), input, || {
                    format!(
                        "N={} dual N={} dual triple={:?}",
                        d.value, d.dual_value, d.dual
                    )
                });
                t.check(
                    "oracle_nonnegative",
                    d.value >= 0 && d.dual_value >= 0,
                    input,
                    || format!("N={} dual N={}", d.value, d.dual_value),
                );
                if c.n() >= 3 && m.len() <= 2 {
                    let dual_mu = c.rank_level_dual(m).ok();
                    t.check(
                        "two_row_dual_is_conjugate",
                        dual_mu.as_ref() == Some(&m.conjugate()),
                        input,
                        || format!("dual mu={dual_mu:?}"),
                    );
                }
            }
            Err(e) => t.check("duality_invariance", false, input, || e.to_string()),
        }
        t
    })
    .into_reports(true)
}

/// Restricted chain counts against `Σ N f_k`.
pub fn suite_theorem18(
    n_max: usize,
    k_max: usize,
    max_size: usize,
    max_skew: usize,
    strategy: Strategy,
) -> Vec<CheckReport> {
    let items: Vec<_> = contexts(n_max, k_max)
        .into_iter()
        .flat_map(|c| {
            let shapes = restricted_shapes(&c, max_size);
            let mut pairs = Vec::new();
            for nu in &shapes {
                for l in shapes
                    .iter()
                    .filter(|l| nu.contains(l) && nu.size() - l.size() <= max_skew)
                {
                    pairs.push((c, l.clone(), nu.clone()));
                }
            }
            pairs
        })
        .collect();
    run(strategy, &items, |(c, l, n)| {
        let mut t = Tally::default();
        let r = verify_theorem18(l, n, c);
        t.check(
            "restricted_chains_equal_weighted_sum",
            r.as_ref().is_ok_and(|r| r.holds()),
            || format!("lambda={l} nu={n} n={} k={}", c.n(), c.k()),
            || format!("{r:?}"),
        );
        t
    })
    .into_reports(true)
}

/// Oracle positivity over all restricted triples.
pub fn suite_positivity(
    n_max: usize,
    k_max: usize,
    max_size: usize,
    strategy: Strategy,
) -> Vec<CheckReport> {
    let items = all_restricted_triples(n_max, k_max, max_size);
    run(strategy, &items, |(c, l, m, n)| {
        let mut t = Tally::default();
        let v = fusion_oracle(l, m, n, c);
        t.check(
            "oracle_nonnegative",
            matches!(v, Ok(x) if x >= 0),
            || show_ctx(l, m, n, c),
            || format!("{v:?}"),
        );
        t
    })
    .into_reports(true)
}

/// One line of the two-row comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GepnerWittenRow {
    pub k: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub oracle: i64,
    pub printed: u64,
    pub doubled: u64,
}

/// Agreement of the printed two-row formula, and of the same formula with
/// threshold `2k`, with the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GepnerWittenReport {
    pub schema: String,
    pub k_max: usize,
    pub size_max: usize,
    pub instances: u64,
    pub printed_agree: u64,
    pub doubled_agree: u64,
    /// Instances where the printed formula differs from the oracle.
    pub printed_disagreements: Vec<GepnerWittenRow>,
    /// Instances where the doubled threshold differs from the oracle.
    pub doubled_disagreements: Vec<GepnerWittenRow>,
}

impl GepnerWittenReport {
    /// Deterministic markdown rendering, as committed under `reports/`.
    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        s.push_str("# Two-row fusion formula against the oracle\n\n");
        s.push_str(&format!(
            "n = 2, k = 1..={}, |nu| <= {}, all restricted triples with |lambda| + |mu| = |nu|.\n\n",
            self.k_max, self.size_max
        ));
        s.push_str(
            "The formula is `c(lambda, mu, nu)` when `a + b + c <= T` and 0 otherwise, where\n",
        );
        s.push_str("`a, b, c` are the first-minus-second parts of `lambda, mu, nu`.\n\n");
        s.push_str("| threshold | agree | disagree |\n|---|---|---|\n");
        s.push_str(&format!(
            "| T = k | {} | {} |\n| T = 2k | {} | {} |\n\n",
            self.printed_agree,
            self.printed_disagreements.len(),
            self.doubled_agree,
            self.doubled_disagreements.len()
        ));
        for (title, rows) in [
            ("T = k", &self.printed_disagreements),
            ("T = 2k", &self.doubled_disagreements),
        ] {
            s.push_str(&format!("## Disagreements, {title}\n\n"));
            if rows.is_empty() {
                s.push_str("None.\n\n");
                continue;
            }
            s.push_str("| k | lambda | mu | nu | oracle | T = k | T = 2k |\n|---|---|---|---|---|---|---|\n");
            for r in rows {
                s.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} |\n",
                    r.k, r.lambda, r.mu, r.nu, r.oracle, r.printed, r.doubled
                ));
            }
            s.push('\n');
        }
        s
    }
}

pub fn gepner_witten_report(
    k_max: usize,
    max_size: usize,
    strategy: Strategy,
) -> GepnerWittenReport {
    let items: Vec<_> = contexts(2, k_max)
        .into_iter()
        .flat_map(|c| {
            restricted_triples(&c, max_size, |_| true)
                .into_iter()
                .map(move |(l, m, n)| (c, l, m, n))
        })
        .collect();
    let rows = strategy.map(&items, |(c, l, m, n)| {
        let oracle = fusion_oracle(l, m, n, c).expect("restricted inputs");
        let printed = gepner_witten(l, m, n, c.k()).expect("two rows");
        let doubled = gepner_witten(l, m, n, 2 * c.k()).expect("two rows");
        GepnerWittenRow {
            k: c.k(),
            lambda: l.clone(),
            mu: m.clone(),
            nu: n.clone(),
            oracle,
            printed,
            doubled,
        }
    });
    let agree = |v: u64, o: i64| v as i64 == o;
    GepnerWittenReport {
        schema: SCHEMA.to_string(),
        k_max,
        size_max: max_size,
        instances: rows.len() as u64,
        printed_agree: rows.iter().filter(|r| agree(r.printed, r.oracle)).count() as u64,
        doubled_agree: rows.iter().filter(|r| agree(r.doubled, r.oracle)).count() as u64,
        printed_disagreements: rows
            .iter()
            .filter(|r| !agree(r.printed, r.oracle))
            .cloned()
            .collect(),
        doubled_disagreements: rows
            .iter()
            .filter(|r| !agree(r.doubled, r.oracle))
            .cloned()
            .collect(),
    }
}

/// The comparison as soft checks, so it never fails a run.
pub fn suite_gepner_witten(k_max: usize, max_size: usize, strategy: Strategy) -> Vec<CheckReport> {
    let report = gepner_witten_report(k_max, max_size, strategy);
    let summarize = |name: &str, agree: u64, rows: &[GepnerWittenRow]| CheckReport {
        name: name.to_string(),
        hard: false,
        passed: agree,
        failed: rows.len() as u64,
        counterexamples: rows
            .iter()
            .take(KEEP)
            .map(|r| Counterexample {
                input: format!("lambda={} mu={} nu={} n=2 k={}", r.lambda, r.mu, r.nu, r.k),
                detail: format!(
                    "oracle={} printed={} doubled={}",
                    r.oracle, r.printed, r.doubled
                ),
            })
            .collect(),
    };
    vec![
        summarize(
            "gepner_witten_printed_threshold",
            report.printed_agree,
            &report.printed_disagreements,
        ),
        summarize(
            "gepner_witten_doubled_threshold",
            report.doubled_agree,
            &report.doubled_disagreements,
        ),
    ]
}

/// The `λ = μ = (2,1)` row at `n = 3`, `k = 2`.
pub fn su3_level2_adjoint_row() -> BTreeMap<Partition, i64> {
    let c = FusionContext::new(3, 2).expect("valid context");
    let adj = Partition::new(vec![2, 1]).expect("partition");
    fusion_row(&adj, &adj, &c).expect("restricted inputs")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_ok(reports: &[CheckReport]) -> bool {
        reports.iter().all(|r| !r.hard || r.ok())
    }

    #[test]
    fn small_sweeps_pass() {
        let s = Strategy::Parallel;
        assert!(all_ok(&suite_lr(6, s)));
        assert!(all_ok(&suite_psi(5, s)));
        assert!(all_ok(&suite_involution(3, 2, 6, s)));
        assert!(all_ok(&suite_monotone(3, 2, 6, s)));
        assert!(all_ok(&suite_theorem18(2, 2, 5, 3, s)));
    }

    #[test]
    fn strategies_give_identical_reports() {
        assert_eq!(
            suite_involution(3, 2, 5, Strategy::Sequential),
            suite_involution(3, 2, 5, Strategy::Parallel)
        );
    }

    #[test]
    fn tally_keeps_a_bounded_sample() {
        let mut t = Tally::default();
        for i in 0..50 {
            t.check("x", i % 2 == 0, || i.to_string(), String::new);
        }
        let r = t.into_reports(true);
        assert_eq!((r[0].passed, r[0].failed), (25, 25));
        assert_eq!(r[0].counterexamples.len(), KEEP);
    }
}
