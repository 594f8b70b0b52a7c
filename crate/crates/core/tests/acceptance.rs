//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use edgecolor::bench::run_instance;
use edgecolor::chains::{truncated_vizing, Truncation};
use edgecolor::coloring::{verify, write_coloring, Color};
use edgecolor::graph::{generate, Graph, Model};
use edgecolor::oracle::brute_force_chromatic_index;
use edgecolor::pipeline::{check_good_set, sample_star_set};
use edgecolor::rng::stream;
use edgecolor::stars::{color_light_stars, StarExit};
use edgecolor::{color, extend_coloring, verify_coloring, Algo, ExtendConfig, Mode, PipelineConfig};
use rand::seq::SliceRandom;
use rand::Rng;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn sweep_models() -> Vec<Model> {
    let mut out = Vec::new();
    let gnm: &[(usize, &[usize])] = &[
        (50, &[75, 300, 600, 1000]),
        (100, &[150, 600, 2500, 4000]),
        (200, &[300, 1200, 5000, 10_000]),
        (300, &[450, 3000, 20_000]),
        (500, &[750, 3000, 15_000, 40_000]),
        (1000, &[1500, 6000, 30_000, 100_000]),
        (2000, &[3000, 12_000, 60_000]),
        (3000, &[4500, 24_000, 90_000]),
        (5000, &[7500, 30_000, 150_000]),
    ];
    for &(n, ms) in gnm {
        out.extend(ms.iter().map(|&m| Model::Gnm { n, m }));
    }
    for (n, d) in [(50, 3), (50, 10), (100, 4), (100, 25), (200, 7), (300, 20), (500, 10), (1000, 16), (1000, 40), (2000, 30)] {
        out.push(Model::Regular { n, d });
    }
    for n in [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 20, 25, 30, 31, 40, 50, 60] {
        out.push(Model::Complete { n });
    }
    for (a, b) in [(1, 1), (1, 5), (2, 3), (3, 3), (4, 7), (5, 5), (10, 10), (8, 20), (20, 30), (40, 40), (50, 60), (100, 100), (200, 150)] {
        out.push(Model::CompleteBipartite { a, b });
    }
    for n in [3, 5, 7, 9, 11, 13, 21, 51, 101, 501, 1001, 5001] {
        out.push(Model::Cycle { n });
    }
    for leaves in [1, 2, 3, 4, 5, 10, 20, 50, 100, 500, 1000, 5000] {
        out.push(Model::Star { leaves });
    }
    out.push(Model::Petersen);
    out
}

fn correctness_sweep() -> Outcome {
    let start = Instant::now();
    let models = sweep_models();
    let (mut runs, mut failures, mut fast_runs) = (0, Vec::new(), 0);
    for &model in &models {
        for seed in 0..5 {
            let g = generate(model, seed).unwrap();
            let mut configs = vec![
                (Algo::Baseline, Mode::Practical, None),
                (Algo::Fast, Mode::Practical, None),
                (Algo::Fast, Mode::Paper, None),
            ];
            if g.m() <= 50_000 {
                configs.push((Algo::Fast, Mode::Practical, Some(0.0)));
                configs.push((Algo::Fast, Mode::Paper, Some(0.0)));
            }
            for (algo, mode, threshold) in configs {
                let mut cfg = PipelineConfig::new(algo, mode, seed);
                cfg.threshold = threshold;
                let (chi, stats) = color(&g, &cfg);
                let r = verify_coloring(&chi);
                runs += 1;
                fast_runs += stats.fast.is_some() as usize;
                let ok = r.proper && r.uncolored == 0 && r.colors_used <= g.max_degree() + 1 && stats.phases.total() == g.m();
                if !ok {
                    failures.push(format!("{model}/{seed}/{algo}/{mode}"));
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let detail = format!(
        "{} instances, {runs} colorings ({fast_runs} through the star phases), {} failures, {secs:.1}s{}",
        models.len() * 5,
        failures.len(),
        failures.first().map(|f| format!(", first {f}")).unwrap_or_default()
    );
    (failures.is_empty() && models.len() == 100, detail)
}

fn oracle_bracket() -> Outcome {
    let mut graphs: Vec<(String, Graph)> =
        common::connected_graphs(9).into_iter().map(|s| (format!("{:?}", s.edges), s.graph())).collect();
    let enumerated = graphs.len();
    for model in [Model::Petersen, Model::Complete { n: 4 }, Model::Cycle { n: 5 }, Model::Cycle { n: 7 }] {
        graphs.push((model.to_string(), generate(model, 0).unwrap()));
    }
    let (mut bad, mut class_two) = (Vec::new(), 0);
    for (name, g) in &graphs {
        let delta = g.max_degree() as Color;
        let k = brute_force_chromatic_index(g, delta + 1).unwrap();
        let Some(k) = k.filter(|&k| k == delta || k == delta + 1) else {
            bad.push(format!("{name}: oracle {k:?}"));
            continue;
        };
        class_two += (k == delta + 1) as usize;
        for algo in [Algo::Baseline, Algo::Fast] {
            let mut cfg = PipelineConfig::new(algo, Mode::Practical, 0);
            cfg.threshold = Some(0.0);
            let (chi, _) = color(g, &cfg);
            let r = verify(g, &chi.colors());
            let used = r.colors_used as Color;
            if !r.is_valid_complete() || used > delta + 1 || used < k || (k == delta + 1 && used != delta + 1) {
                bad.push(format!("{name}: {algo} used {used}, oracle {k}"));
            }
        }
    }
    let detail = format!(
        "{enumerated} enumerated + 4 named graphs, {class_two} class two, {} mismatches",
        bad.len()
    );
    (bad.is_empty() && enumerated == 1068, detail)
}

fn chain_contracts() -> Outcome {
    // (model, uncolored fraction, call budget)
    let plan: Vec<(Model, f64, usize)> = vec![
        (Model::Gnm { n: 100, m: 600 }, 0.3, 20_000),
        (Model::Gnm { n: 300, m: 4000 }, 0.2, 20_000),
        (Model::Regular { n: 200, d: 8 }, 0.3, 20_000),
        (Model::Complete { n: 30 }, 0.3, 10_000),
        (Model::Regular { n: 20_000, d: 3 }, 0.002, 10_000),
        (Model::Cycle { n: 4001 }, 0.002, 5_000),
        (Model::CompleteBipartite { a: 25, b: 30 }, 0.3, 20_000),
    ];
    let (mut calls, mut shifted, mut bad) = (0u64, 0u64, Vec::new());
    let mut worst_ratio: f64 = 0.0;
    for (i, &(model, frac, budget)) in plan.iter().enumerate() {
        let mut seed = i as u64 * 1000;
        let mut done = 0;
        while done < budget {
            let g = generate(model, seed).unwrap();
            let mut chi = common::random_partial(&g, seed, frac);
            let cfg = ExtendConfig::for_graph(Mode::Practical, g.n(), g.max_degree());
            let delta = g.max_degree();
            let mut rng = stream(seed, 55);
            let mut pending: Vec<usize> = (0..g.m()).filter(|&e| chi.color(e).is_none()).collect();
            pending.shuffle(&mut rng);
            while let Some(e) = pending.pop() {
                if done >= budget {
                    break;
                }
                let (mut u, mut v) = g.endpoints(e);
                let mut cu = common::random_missing(&chi, u, &mut rng);
                let mut cv = common::random_missing(&chi, v, &mut rng);
                loop {
                    let t = rng.gen_range(1..=cfg.cap_l) as usize + 1;
                    let before = (chi.uncolored_count(), chi.recolor_count());
                    let out = truncated_vizing(&mut chi, u, v, cu, cv, t);
                    calls += 1;
                    done += 1;
                    let changed = (chi.recolor_count() - before.1) as usize;
                    worst_ratio = worst_ratio.max(changed as f64 / (t + delta + 1) as f64);
                    let proper = verify_coloring(&chi).proper;
                    let consistent = calls % 97 != 0 || chi.check_consistency().is_ok();
                    if chi.uncolored_count() > before.0 || changed > t + delta + 1 || !proper || !consistent {
                        bad.push(format!("{model} seed {seed}: changed {changed}, t {t}"));
                    }
                    match out {
                        Ok(Truncation::Shifted { u: a, v: b, c_u, c_v, .. }) => {
                            shifted += 1;
                            (u, v, cu, cv) = (a, b, c_u, c_v);
                        }
                        Ok(Truncation::Done(_)) => break,
                        Err(err) => {
                            bad.push(format!("{model} seed {seed}: {err}"));
                            break;
                        }
                    }
                }
            }
            seed += 1;
        }
    }
    let detail = format!(
        "{calls} calls, {shifted} truncated, max changes/(t+Δ+1) = {worst_ratio:.3}, {} violations",
        bad.len()
    );
    (calls >= 100_000 && bad.is_empty(), detail)
}

fn star_guarantee() -> Outcome {
    let (mut natural, mut caps, mut short, mut min_ratio) = (0, 0, Vec::new(), f64::INFINITY);
    let mut runs = 0;
    for i in 0..50u64 {
        let model = match i % 5 {
            0 => Model::Gnm { n: 300, m: 6000 },
            1 => Model::Gnm { n: 800, m: 20_000 },
            2 => Model::Regular { n: 400, d: 30 },
            3 => Model::Gnm { n: 1500, m: 60_000 },
            _ => Model::Complete { n: 70 },
        };
        let g = generate(model, i).unwrap();
        let (mut chi, _) = edgecolor::baseline_color(&g, &mut stream(i, 1)).unwrap();
        let mut rng = stream(i, 2);
        let rate = [0.02, 0.05, 0.1][i as usize % 3];
        let ustar: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(rate)).collect();
        for &u in &ustar {
            for &(_, e) in g.neighbors(u) {
                if chi.color(e).is_some() {
                    chi.uncolor(e).unwrap();
                }
            }
        }
        let Some(d) = ustar.iter().map(|&u| chi.missing_count(u)).min() else { continue };
        let r = color_light_stars(&mut chi, &ustar, d, &mut stream(i, 3)).unwrap();
        if r.lambda == 0 {
            continue;
        }
        runs += 1;
        match r.exit {
            StarExit::Natural => {
                natural += 1;
                min_ratio = min_ratio.min(r.colored as f64 / r.lambda as f64);
                if r.colored < r.lambda.div_ceil(12) {
                    short.push(format!("{model} #{i}: {} of {}", r.colored, r.lambda));
                }
            }
            StarExit::SafetyCap => caps += 1,
            StarExit::NoEdges => {}
        }
        if !verify_coloring(&chi).proper {
            short.push(format!("{model} #{i}: improper"));
        }
    }
    let detail = format!(
        "{runs} runs, {natural} natural exits, {caps} safety caps, min colored/λ on natural exit {min_ratio:.3}, {} below ⌈λ/12⌉",
        short.len()
    );
    (runs == 50 && short.is_empty() && (caps as f64) < 0.05 * runs as f64, detail)
}

fn path_mass() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut bad = 0;
    for i in 0..20u64 {
        let (n, m) = [(20, 60), (40, 150), (60, 200), (100, 200)][i as usize % 4];
        let g = generate(Model::Gnm { n, m }, i).unwrap();
        let chi = common::random_partial(&g, i, [0.0, 0.1, 0.3, 0.6][i as usize % 4]);
        let colors = chi.colors();
        for x in 1..=chi.palette() {
            let mass = common::alternating_path_mass(&g, &colors, chi.palette(), x);
            worst = worst.max(mass as f64 / g.m() as f64);
            bad += (mass >= 3 * g.m()) as usize;
        }
    }
    (bad == 0, format!("20 graphs, max mass/m {worst:.3}, {bad} colors at or above 3m"))
}

fn extension_termination() -> Outcome {
    let g = generate(Model::Gnm { n: 2000, m: 80_000 }, 6).unwrap();
    let mut lines = Vec::new();
    let mut ok = true;
    for (label, cap) in [("practical", None), ("cap L=8", Some(8))] {
        let mut chi = common::random_partial(&g, 6, 0.025);
        let cfg = ExtendConfig::for_graph(Mode::Practical, g.n(), g.max_degree()).with_overrides(None, cap, None);
        let per_iter = 2 * cfg.cap_l + 3 + g.max_degree() as u64 + 1;
        let mut rng = stream(6, 8);
        let mut iters = Vec::new();
        let (mut fallbacks, mut truncations) = (0, 0);
        let pending: Vec<usize> = (0..g.m()).filter(|&e| chi.color(e).is_none()).collect();
        for &e in &pending {
            let before = chi.uncolored_count();
            let (u, v) = g.endpoints(e);
            let s = extend_coloring(&mut chi, u, v, &cfg, &mut rng).unwrap();
            iters.push(s.iterations);
            fallbacks += s.fallback_used as usize;
            truncations += s.truncations;
            ok &= chi.uncolored_count() + 1 == before;
            if iters.len() % 20 == 0 {
                ok &= verify_coloring(&chi).proper;
            }
            ok &= s.fallback_used || s.recolors <= s.iterations * per_iter;
        }
        ok &= verify_coloring(&chi).is_valid_complete();
        iters.sort_unstable();
        let median = iters[iters.len() / 2];
        if cap.is_none() {
            ok &= median <= 10;
        }
        lines.push(format!(
            "{label}: {} calls, median iterations {median}, max {}, {truncations} truncations, fallback rate {:.4}",
            iters.len(),
            iters.last().unwrap(),
            fallbacks as f64 / iters.len() as f64
        ));
    }
    ok &= g.max_degree() >= 90 && g.max_degree() <= 110;
    (ok, format!("Δ={}; {}", g.max_degree(), lines.join("; ")))
}

fn extraction_success() -> Outcome {
    let cfg = PipelineConfig::new(Algo::Fast, Mode::Practical, 0);
    let (mut trials, mut good, mut min_rate) = (0, 0, 1.0f64);
    let mut graphs = 0;
    for i in 0..30u64 {
        let n = [500, 1000, 2000][i as usize % 3];
        let lg = (n as f64).log2().ceil();
        let model = if i % 2 == 0 {
            Model::Gnm { n, m: (n as f64 * 10.0 * lg / 2.0) as usize }
        } else {
            let d = (9.0 * lg).ceil() as usize;
            Model::Regular { n, d: d + (n * d) % 2 }
        };
        let g = generate(model, i).unwrap();
        let c = cfg.constants(g.n());
        if (g.max_degree() as f64) < 2.0 * c.kappa * lg {
            continue;
        }
        graphs += 1;
        let mut hits = 0;
        for t in 0..10 {
            let in_u = sample_star_set(&g, &c, &mut stream(i, 100 + t));
            hits += check_good_set(&g, &in_u, &c).is_good() as usize;
        }
        trials += 10;
        good += hits;
        min_rate = min_rate.min(hits as f64 / 10.0);
    }
    let rate = good as f64 / trials.max(1) as f64;
    let detail = format!("{graphs} graphs, {trials} trials, success rate {rate:.3}, worst graph {min_rate:.1}");
    (graphs == 30 && trials >= 200 && rate >= 0.4, detail)
}

fn determinism() -> Outcome {
    let cases = [
        (Model::Gnm { n: 1000, m: 30_000 }, Algo::Fast, Mode::Practical, None),
        (Model::Gnm { n: 500, m: 5000 }, Algo::Baseline, Mode::Practical, None),
        (Model::Complete { n: 40 }, Algo::Fast, Mode::Paper, Some(0.0)),
    ];
    let mut differing = 0;
    for (model, algo, mode, threshold) in cases {
        let g = generate(model, 3).unwrap();
        let run = || {
            let mut cfg = PipelineConfig::new(algo, mode, 17);
            cfg.threshold = threshold;
            let (chi, mut s) = color(&g, &cfg);
            s.timings = None;
            let mut out = Vec::new();
            write_coloring(&g, &chi.colors(), &mut out).unwrap();
            (out, serde_json::to_vec(&s).unwrap())
        };
        let first = run();
        differing += (1..20).filter(|_| run() != first).count();
    }
    (differing == 0, format!("3 configurations x 20 runs, {differing} differing outputs"))
}

fn scaling_smoke() -> Outcome {
    let model = Model::Gnm { n: 4000, m: 399_900 };
    let base = run_instance(model, 0, Algo::Baseline, Mode::Practical).unwrap();
    let fast = run_instance(model, 0, Algo::Fast, Mode::Practical).unwrap();
    let ratio = fast.work_per_edge / base.work_per_edge;
    let accounted = base.phase_sum == base.m && fast.phase_sum == fast.m;
    let detail = format!(
        "{model}: work/edge baseline {:.3}, fast {:.3} (ratio {ratio:.2}); fast phases base {} light {} heavy {} per-edge {} fallback {} = {} of m {}",
        base.work_per_edge, fast.work_per_edge, fast.base, fast.light, fast.heavy, fast.per_edge, fast.fallback, fast.phase_sum, fast.m
    );
    (base.valid && fast.valid && accounted && ratio <= 3.0 && fast.branch == "fast", detail)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("correctness sweep", correctness_sweep),
        ("oracle bracket", oracle_bracket),
        ("chain contracts", chain_contracts),
        ("star guarantee", star_guarantee),
        ("alternating-path mass", path_mass),
        ("extension termination", extension_termination),
        ("star extraction success", extraction_success),
        ("determinism", determinism),
        ("scaling smoke", scaling_smoke),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = f();
        failed += !ok as usize;
        println!(
            "{} {}. {name}: {detail} [{:.1}s]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            t.elapsed().as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
