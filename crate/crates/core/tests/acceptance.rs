//! Acceptance criteria 1-7. Runs without the libtest harness so each
//! criterion prints one PASS/FAIL line.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use chainpart::generators::{gen_qk, gen_regular_with_ladder, gen_rn, rn_vertex, DEFAULT_SIZE_CAP};
use chainpart::harness::{random_online_instance, random_poset as random_bounded_poset};
use chainpart::online::{
    chi_ff_exact, first_fit, grundy_to_presentation, run_online, verify_grundy, GrundyColoring, OnlineInstance,
};
use chainpart::poset::{
    antichain_join, antichain_meet, dilworth_partition, find_max_ladder, maximum_antichains, sqsubseteq, width,
    Antichain, Poset,
};
use chainpart::reduction::{CompositeColorer, ReductionOptions};
use chainpart::regular::{ladder_bound_check, verify_p6_p7, verify_regular};
use common::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sample_poset(seed: u64) -> Poset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=9);
    let p = rng.gen_range(0.1..0.6);
    random_poset(&mut rng, n, p)
}

fn first_fit_adversary() -> Outcome {
    for n in 1..=8 {
        let inst = gen_rn(n);
        let g = first_fit(&inst);
        ensure(g.n_colors() == n, || format!("R_{n} used {} colors", g.n_colors()))?;
        let naive = naive_first_fit(inst.poset(), inst.presentation());
        ensure(naive == g.colors(), || format!("R_{n}: oracle disagrees"))?;
        for k in 1..=n {
            for i in 1..=k {
                let c = g.color_of(rn_vertex(k, i));
                ensure(c == i, || format!("R_{n}: x^{k}_{i} got color {c}"))?;
            }
        }
    }
    Ok("R_1..R_8 use n colors, x^k_i gets color i".into())
}

fn grundy_equivalence() -> Outcome {
    let results: Vec<Result<usize, String>> = (0..500u64)
        .into_par_iter()
        .map(|s| {
            let p = sample_poset(0x2000 + s);
            let chi = chi_ff_exact(&p).map_err(|e| e.to_string())?;
            let best = GrundyColoring::new(brute_grundy(&p));
            ensure(verify_grundy(&p, &best).holds(), || format!("seed {s}: oracle coloring fails"))?;
            ensure(chi == best.n_colors(), || {
                format!("seed {s}: chi_ff {chi} vs best Grundy {}", best.n_colors())
            })?;
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let mut order: Vec<usize> = p.vertices().collect();
            order.shuffle(&mut rng);
            let inst = OnlineInstance::new(p.clone(), order, width(&p).max(1)).map_err(|e| e.to_string())?;
            let g = first_fit(&inst);
            let back = grundy_to_presentation(&p, &g).map_err(|e| e.to_string())?;
            ensure(first_fit(&back).colors() == g.colors(), || format!("seed {s}: round trip changed colors"))?;
            Ok(p.len())
        })
        .collect();
    let sizes = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let nine = sizes.iter().filter(|&&n| n == 9).count();
    Ok(format!("500 posets ({nine} with n = 9): exhaustive chi_ff = best Grundy coloring"))
}

fn lattice_laws(p: &Poset, all: &[Antichain]) -> Result<(), String> {
    let le = |a: &Antichain, b: &Antichain| sqsubseteq(p, a, b).unwrap();
    let meet = |a: &Antichain, b: &Antichain| antichain_meet(p, a, b).unwrap();
    let join = |a: &Antichain, b: &Antichain| antichain_join(p, a, b).unwrap();
    for a in all {
        ensure(meet(a, a) == *a && join(a, a) == *a, || "idempotence".into())?;
        for b in all {
            let (m, j) = (meet(a, b), join(a, b));
            ensure(m == meet(b, a) && j == join(b, a), || "commutativity".into())?;
            ensure(meet(a, &j) == *a && join(a, &m) == *a, || "absorption".into())?;
            ensure(le(&m, a) && le(&m, b) && le(a, &j) && le(b, &j), || "bounds".into())?;
            for c in all {
                ensure(meet(&m, c) == meet(a, &meet(b, c)), || "meet associativity".into())?;
                ensure(join(&j, c) == join(a, &join(b, c)), || "join associativity".into())?;
                ensure(!(le(c, a) && le(c, b)) || le(c, &m), || "meet is not greatest".into())?;
                ensure(!(le(a, c) && le(b, c)) || le(&j, c), || "join is not least".into())?;
            }
        }
    }
    Ok(())
}

fn dilworth_and_lattice() -> Outcome {
    let counts: Vec<Result<usize, String>> = (0..1000u64)
        .into_par_iter()
        .map(|s| {
            let p = sample_poset(0x3000 + s);
            let w = width(&p);
            ensure(w == brute_width(&p), || format!("seed {s}: width {w} vs {}", brute_width(&p)))?;
            let d = dilworth_partition(&p);
            ensure(d.n_chains() == w && d.is_valid_for(&p), || format!("seed {s}: bad Dilworth partition"))?;
            let all = maximum_antichains(&p, 100_000).map_err(|e| e.to_string())?;
            let listed: Vec<Vec<usize>> = all.iter().map(|a| a.members().to_vec()).collect();
            ensure(listed == brute_maximum_antichains(&p), || format!("seed {s}: antichain list differs"))?;
            lattice_laws(&p, &all).map_err(|law| format!("seed {s}: {law}"))?;
            Ok(all.len())
        })
        .collect();
    let counts = counts.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(format!(
        "1000 posets: width, Dilworth partitions and lattice laws hold ({} maximum antichains)",
        counts.iter().sum::<usize>()
    ))
}

/// Runs the composite colorer step by step and checks that every level's
/// `X̄` stays narrower than its width bound.
fn reduction_run(inst: &OnlineInstance) -> Result<(CompositeColorer, Vec<usize>), String> {
    let w = inst.width_bound();
    let mut colorer = CompositeColorer::with_options(w, ReductionOptions::default()).map_err(|e| e.to_string())?;
    let p = inst.poset();
    let order = inst.presentation();
    let mut colors = vec![0; p.len()];
    for step in 0..order.len() {
        // replay on a prefix instance so each step sees exactly its own arrivals
        let v = order[step];
        let rel: Vec<_> = order[..step]
            .iter()
            .map(|&u| {
                if p.less(v, u) {
                    chainpart::online::Relation::Below
                } else if p.less(u, v) {
                    chainpart::online::Relation::Above
                } else {
                    chainpart::online::Relation::Incomparable
                }
            })
            .collect();
        use chainpart::online::OnlineColorer;
        colors[v] = colorer.next(&rel).map_err(|e| format!("step {}: {e}", step + 1))?;

        let mut ids: Vec<usize> = order[..=step].to_vec();
        let mut level = Some(&colorer);
        while let Some(c) = level {
            let Some(st) = c.state() else { break };
            let xbar: Vec<usize> = st.xbar().iter().map(|&k| ids[k]).collect();
            let wx = width(&p.induced(&xbar));
            ensure(wx < c.w(), || format!("step {}: width of X̄ is {wx} at level {}", step + 1, c.w()))?;
            ids = xbar;
            level = c.child();
        }
    }
    Ok((colorer, colors))
}

fn reduction_soundness() -> Outcome {
    let rows: Vec<Result<usize, String>> = (0..300u64)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x4000 + s);
            let w = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=40);
            let inst = random_online_instance(0x4000 + s, n, w);
            let (colorer, colors) = reduction_run(&inst).map_err(|e| format!("seed {s}: {e}"))?;
            ensure(classes_are_chains(inst.poset(), &colors), || format!("seed {s}: classes are not chains"))?;
            let run = run_online(
                &mut CompositeColorer::new(w).map_err(|e| e.to_string())?,
                &inst,
            )
            .map_err(|e| format!("seed {s}: {e}"))?;
            ensure(run.colors == colors, || format!("seed {s}: replay differs from run_online"))?;
            let levels = colorer.regular_instances().map_err(|e| e.to_string())?;
            for (lw, reg) in &levels {
                let v = verify_regular(reg);
                ensure(v.passes(), || format!("seed {s} level {lw}: {v:?}"))?;
                let p67 = verify_p6_p7(reg);
                ensure(p67.passes(), || format!("seed {s} level {lw}: {p67:?}"))?;
                ensure(ladder_bound_check(reg).1, || format!("seed {s} level {lw}: ladder too long"))?;
            }
            Ok(levels.len())
        })
        .collect();
    let levels = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(format!(
        "300 instances: valid partitions, {} emitted regular posets verified, X̄ narrower at every step",
        levels.iter().sum::<usize>()
    ))
}

fn regular_ladders() -> Outcome {
    let mut seen = Vec::new();
    for w in 2..=5 {
        let (inst, ladder) = gen_regular_with_ladder(w).map_err(|e| e.to_string())?;
        let v = verify_regular(&inst);
        ensure(v.passes(), || format!("w={w}: {v:?}"))?;
        ensure(width(inst.poset()) == w, || format!("w={w}: width {}", width(inst.poset())))?;
        let expected = w * ((w + 2) / 2);
        ensure(ladder.len() == expected, || format!("w={w}: witness has {} rungs", ladder.len()))?;
        ensure(ladder.is_valid_in(inst.poset()) && is_induced_ladder(inst.poset(), &ladder.rungs), || {
            format!("w={w}: witness is not an induced ladder")
        })?;
        let (m, ok) = ladder_bound_check(&inst);
        ensure(ok && m >= expected, || format!("w={w}: longest ladder {m}, bound {}", 2 * w * w))?;
        seen.push(format!("w={w}: {expected}/{m}"));
    }
    Ok(format!("witness/longest ladder {}", seen.join(", ")))
}

fn lower_bound_family() -> Outcome {
    let mut seen = Vec::new();
    for (m, k) in [(3, 1), (3, 2), (4, 1), (4, 2)] {
        let (q, g) = gen_qk(m, k, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?;
        ensure(verify_grundy(&q, &g).holds(), || format!("Q_{k}({m}): coloring is not Grundy"))?;
        let need = (m - 1).pow(k as u32);
        ensure(g.n_colors() >= need, || format!("Q_{k}({m}): {} < {need} colors", g.n_colors()))?;
        ensure(width(&q) == 1 << k, || format!("Q_{k}({m}): width {}", width(&q)))?;
        let (l, _) = find_max_ladder(&q, m);
        ensure(l < m, || format!("Q_{k}({m}): contains L_{l}"))?;
        seen.push(format!("({m},{k}): {} colors, n={}", g.n_colors(), q.len()));
    }
    Ok(seen.join("; "))
}

fn width_two_sanity() -> Outcome {
    let rows: Vec<Result<Option<(usize, usize)>, String>> = (0..500u64)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7000 + s);
            let n = rng.gen_range(2..=9);
            let p = random_bounded_poset(&mut rng, n, 2);
            if width(&p) != 2 {
                return Ok(None);
            }
            let (star, _) = find_max_ladder(&p, p.len());
            let m = (star + 1).max(2);
            let chi = chi_ff_exact(&p).map_err(|e| e.to_string())?;
            ensure(chi <= 2 * m, || format!("seed {s}: chi_ff {chi} > 2m = {}", 2 * m))?;
            Ok(Some((chi, m)))
        })
        .collect();
    let found: Vec<(usize, usize)> = rows.into_iter().collect::<Result<Vec<_>, _>>()?.into_iter().flatten().collect();
    ensure(!found.is_empty(), || "no width-2 samples".into())?;
    let max_chi = found.iter().map(|f| f.0).max().unwrap();
    Ok(format!("{} width-2 posets, chi_ff <= 2m throughout (max chi_ff {max_chi})", found.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("first-fit adversary", first_fit_adversary),
        ("grundy equivalence", grundy_equivalence),
        ("dilworth and lattice core", dilworth_and_lattice),
        ("reduction soundness", reduction_soundness),
        ("regular-poset ladder bounds", regular_ladders),
        ("lower-bound family", lower_bound_family),
        ("width-2 bound sanity", width_two_sanity),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why}; {secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
