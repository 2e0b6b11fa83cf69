//! Acceptance suite: one printed PASS/FAIL line per criterion. Runs as a
//! plain binary (harness = false) so the report is always visible in the
//! test output.

use std::collections::BTreeSet;
use std::process::exit;
use std::time::{Duration, Instant};

use gridmatch::decomp::{cutwidth_of, linearize, path_decomposition, verify_decomposition};
use gridmatch::engine::{brute_force_pm, evaluate_pm, EngineError};
use gridmatch::format::{parse_graph, serialize_graph};
use gridmatch::gen::{random_graph, random_pool, random_pool_graph, seeded_rng, GenConfig};
use gridmatch::grid::{classify_components, concat, validate, ComponentKind, Edge, GridGraph, Vertex};
use gridmatch::monoid::{
    compose, discover_certificate, element_of, verify_certificate, GroupCertificate,
    MonoidElement, SearchStats,
};
use gridmatch::reductions::{b10_block_count, modp_membership, modp_to_graph, parity_to_graph};

enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

fn report(name: &str, outcome: &Outcome) -> bool {
    match outcome {
        Outcome::Pass(detail) => {
            println!("{name}: PASS ({detail})");
            true
        }
        Outcome::Fail(detail) => {
            println!("{name}: FAIL ({detail})");
            false
        }
        Outcome::Skipped(detail) => {
            println!("{name}: SKIPPED-WITH-NOTICE ({detail})");
            true
        }
    }
}

/// The transfer element of a graph, with an all-Zero fold reported as the
/// absorbing Zero element rather than an error.
fn elem(g: &GridGraph) -> MonoidElement {
    match element_of(g) {
        Ok(e) => e,
        Err(EngineError::ZeroFold) => MonoidElement::Zero,
        Err(e) => panic!("unexpected engine error: {e}"),
    }
}

fn bitstrings(n: u32) -> Vec<String> {
    (0..1u32 << n)
        .map(|v| (0..n).rev().map(|b| if v >> b & 1 == 1 { '1' } else { '0' }).collect())
        .collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    // (a) exhaustive: full 2x3 vertex grid, every subset of the feasible edges.
    let vertices: BTreeSet<Vertex> = (0..3)
        .flat_map(|c| (0..2).map(move |r| Vertex::new(c, r)))
        .collect();
    let mut feasible = Vec::new();
    for c in 0..3 {
        feasible.push(Edge::new(Vertex::new(c, 0), Vertex::new(c, 1)));
    }
    for c in 0..2 {
        for r in 0..2 {
            feasible.push(Edge::new(Vertex::new(c, r), Vertex::new(c + 1, r)));
        }
        feasible.push(Edge::new(Vertex::new(c, 0), Vertex::new(c + 1, 1)));
        feasible.push(Edge::new(Vertex::new(c, 1), Vertex::new(c + 1, 0)));
    }
    let mut exhaustive = 0usize;
    for mask in 0u32..1 << feasible.len() {
        let edges: BTreeSet<Edge> = feasible
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        // Subsets with crossing diagonals are not grid layered planar; skip.
        let Ok(g) = GridGraph::new(2, 3, vertices.clone(), edges) else {
            continue;
        };
        exhaustive += 1;
        let fast = evaluate_pm(&g).expect("evaluate");
        let slow = brute_force_pm(&g).expect("brute force");
        if fast != slow {
            return Outcome::Fail(format!("disagreement on exhaustive case {mask:#x}"));
        }
    }
    // (b) 1000 seeded random graphs, W <= 4, L <= 8.
    let mut rng = seeded_rng(0xACC0);
    for i in 0..1000u32 {
        let cfg = GenConfig::new(2 + i % 3, 2 + i % 7);
        let g = random_graph(&mut rng, &cfg);
        let fast = evaluate_pm(&g).expect("evaluate");
        let slow = brute_force_pm(&g).expect("brute force");
        if fast != slow {
            return Outcome::Fail(format!("disagreement on random case {i}"));
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(60) {
        return Outcome::Fail(format!("runtime {} ms exceeds 60 s", t.as_millis()));
    }
    Outcome::Pass(format!(
        "{exhaustive} exhaustive + 1000 random cases, zero disagreements, {} ms",
        t.as_millis()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut cases = 0usize;
    for n in 0..=12u32 {
        for x in bitstrings(n) {
            cases += 1;
            let g = parity_to_graph(&x).expect("parity reduction");
            let even = x.chars().filter(|&c| c == '1').count() % 2 == 0;
            if evaluate_pm(&g).expect("evaluate") != even {
                return Outcome::Fail(format!("PM(G_x) != even-parity for x={x}"));
            }
            if n <= 6 && brute_force_pm(&g).expect("brute force") != even {
                return Outcome::Fail(format!("brute force disagrees for x={x}"));
            }
            let diag = validate(&g);
            if !diag.is_clean() || !diag.bipartite {
                return Outcome::Fail(format!("G_x not a clean bipartite instance for x={x}"));
            }
            let last = g.length() - 1;
            let mut end_to_end_paths = 0usize;
            for c in classify_components(&g) {
                match c.kind {
                    ComponentKind::SingleEdge => {}
                    ComponentKind::Path => {
                        let lo = c.vertices.iter().map(|v| v.col).min().unwrap();
                        let hi = c.vertices.iter().map(|v| v.col).max().unwrap();
                        if lo != 0 || hi != last {
                            return Outcome::Fail(format!(
                                "path component not end-to-end for x={x}"
                            ));
                        }
                        end_to_end_paths += 1;
                    }
                    ComponentKind::Other => {
                        return Outcome::Fail(format!(
                            "component neither single edge nor path for x={x}"
                        ));
                    }
                }
            }
            if end_to_end_paths != 2 {
                return Outcome::Fail(format!("expected 2 end-to-end paths for x={x}"));
            }
            let ones = x.chars().filter(|&c| c == '1').count();
            if b10_block_count(&x).expect("block count") != ones {
                return Outcome::Fail(format!("B10 block count != N1(x) for x={x}"));
            }
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(120) {
        return Outcome::Fail(format!("runtime {} ms exceeds 120 s", t.as_millis()));
    }
    Outcome::Pass(format!("{cases} strings |x| <= 12, {} ms", t.as_millis()))
}

fn criterion_3() -> Outcome {
    let mut rng = seeded_rng(0xACC3);
    let mut checked = 0usize;
    let mut attempts = 0usize;
    while checked < 500 {
        attempts += 1;
        if attempts > 200_000 {
            return Outcome::Fail("could not sample 500 composable pairs".into());
        }
        let width = 2 + (attempts as u32 % 3);
        let Some(g1) = random_pool_graph(&mut rng, width, 6) else {
            continue;
        };
        let Some(g2) = random_pool_graph(&mut rng, width, 6) else {
            continue;
        };
        let Ok(joined) = concat(&g1, &g2) else {
            continue; // boundary occupancies did not match
        };
        let lhs = elem(&joined);
        let rhs = compose(&elem(&g1), &elem(&g2));
        if lhs != rhs {
            return Outcome::Fail(format!("homomorphism violated on pair {checked}"));
        }
        checked += 1;
    }
    Outcome::Pass(format!("{checked} composable pairs, exact equality"))
}

fn run_discovery() -> (Option<(GroupCertificate, u32)>, Vec<SearchStats>) {
    let mut found = None;
    let mut all_stats = Vec::new();
    for width in 2..=6u32 {
        let mut rng = seeded_rng(0xD15C + u64::from(width));
        let pool = random_pool(&mut rng, width, 64);
        let (cert, stats) =
            discover_certificate(&pool, 100_000, 10_000).expect("exploration run");
        all_stats.push(stats);
        if found.is_none() {
            if let Some(c) = cert {
                found = Some((c, width));
            }
        }
    }
    (found, all_stats)
}

fn criterion_4(found: &Option<(GroupCertificate, u32)>) -> Outcome {
    let Some((cert, width)) = found else {
        return Outcome::Skipped(
            "no certificate found at width <= 6 within default budget; \
             existence is proven without a width bound, so this is not an artifact failure"
                .into(),
        );
    };
    if let Err(e) = verify_certificate(cert) {
        return Outcome::Fail(format!("certificate failed recomputation: {e}"));
    }
    for n in 0..=8u32 {
        for z in bitstrings(n) {
            let g = modp_to_graph(&z, cert).expect("mod-p reduction");
            let pm = evaluate_pm(&g).expect("evaluate");
            if pm != !modp_membership(&z, cert.p) {
                return Outcome::Fail(format!("mod-p equivalence violated for z={z}"));
            }
        }
    }
    Outcome::Pass(format!(
        "certificate at width {width}, p = {}, exhaustive |z| <= 8 equivalence",
        cert.p
    ))
}

fn criterion_5(all_stats: &[SearchStats]) -> Outcome {
    let mut groups = 0usize;
    for stats in all_stats {
        if stats.even_period_groups > 0 {
            return Outcome::Fail(format!(
                "{} even-order group(s) extracted during exploration",
                stats.even_period_groups
            ));
        }
        if let Some(order) = stats.group_orders.iter().find(|o| *o % 2 == 0) {
            return Outcome::Fail(format!("even group order {order} recorded"));
        }
        groups += stats.groups_found;
    }
    Outcome::Pass(format!(
        "{groups} group(s) across widths 2..=6, none of even order"
    ))
}

fn criterion_6() -> Outcome {
    let mut max_cutwidth = 0usize;
    for n in 0..=10u32 {
        for x in bitstrings(n) {
            let g = parity_to_graph(&x).expect("parity reduction");
            let arr = linearize(&g).expect("linearize");
            let cw = cutwidth_of(&g, &arr).expect("cutwidth");
            let pd = path_decomposition(&g, &arr);
            if !verify_decomposition(&g, &pd) {
                return Outcome::Fail(format!("invalid decomposition for x={x}"));
            }
            if pd.width() > cw {
                return Outcome::Fail(format!(
                    "width {} exceeds cutwidth {cw} for x={x}",
                    pd.width()
                ));
            }
            max_cutwidth = max_cutwidth.max(cw);
        }
    }
    // Regression pin: measured once over the whole family |x| <= 10.
    if max_cutwidth != 3 {
        return Outcome::Fail(format!("family max cutwidth {max_cutwidth}, pinned value 3"));
    }
    Outcome::Pass("all |x| <= 10 verified, family max cutwidth = 3".into())
}

fn criterion_7() -> Outcome {
    let mut rng = seeded_rng(0xACC7);
    let mut timed = |length: u32| {
        let g = random_graph(&mut rng, &GenConfig::new(6, length));
        let t = Instant::now();
        let _ = evaluate_pm(&g).expect("evaluate");
        t.elapsed()
    };
    let t_small = timed(10_000);
    let t_large = timed(100_000);
    if t_large >= Duration::from_secs(1) {
        return Outcome::Fail(format!(
            "length 10^5 took {} ms (budget 1000 ms)",
            t_large.as_millis()
        ));
    }
    // Within 2x of linear: 10x the length may cost at most 20x the time.
    if t_large.as_secs_f64() > 20.0 * t_small.as_secs_f64() {
        return Outcome::Fail(format!(
            "scaling 10^4 -> 10^5: {} ms -> {} ms is more than 2x linear",
            t_small.as_millis(),
            t_large.as_millis()
        ));
    }
    Outcome::Pass(format!(
        "length 10^4 in {} ms, 10^5 in {} ms",
        t_small.as_millis(),
        t_large.as_millis()
    ))
}

fn criterion_8(found: &Option<(GroupCertificate, u32)>) -> Outcome {
    let mut rng = seeded_rng(0xACC8);
    let mut cases = 0usize;
    let mut check = |g: &GridGraph| -> bool {
        cases += 1;
        parse_graph(&serialize_graph(g)).ok().as_ref() == Some(g)
    };
    for i in 0..100u32 {
        let g = random_graph(&mut rng, &GenConfig::new(2 + i % 5, 2 + i % 11));
        if !check(&g) {
            return Outcome::Fail(format!("round-trip failed on random graph {i}"));
        }
    }
    for n in 0..=8u32 {
        for x in bitstrings(n) {
            let g = parity_to_graph(&x).expect("parity reduction");
            if !check(&g) {
                return Outcome::Fail(format!("round-trip failed on parity instance x={x}"));
            }
        }
    }
    if let Some((cert, _)) = found {
        for n in 0..=6u32 {
            for z in bitstrings(n) {
                let g = modp_to_graph(&z, cert).expect("mod-p reduction");
                if !check(&g) {
                    return Outcome::Fail(format!("round-trip failed on mod-p instance z={z}"));
                }
            }
        }
    }
    Outcome::Pass(format!("{cases} graphs, parse o serialize = id"))
}

fn main() {
    let (found, all_stats) = run_discovery();
    let results = [
        ("criterion 1, engine equivalence", criterion_1()),
        ("criterion 2, parity reduction", criterion_2()),
        ("criterion 3, homomorphism law", criterion_3()),
        ("criterion 4, group discovery pipeline", criterion_4(&found)),
        ("criterion 5, odd-order property", criterion_5(&all_stats)),
        ("criterion 6, decomposition", criterion_6()),
        ("criterion 7, streaming performance", criterion_7()),
        ("criterion 8, format round-trips", criterion_8(&found)),
    ];
    let mut ok = true;
    for (name, outcome) in &results {
        ok &= report(name, outcome);
    }
    if !ok {
        exit(1);
    }
}
