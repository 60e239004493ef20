//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cyconv_core::exact::{brute_force_hn, solve};
use cyconv_core::graph::{is_connected, make_complete, make_gk, make_grid, Multigraph};
use cyconv_core::knot::parse_pd;
use cyconv_core::knot::{bundled_db, census, pd_to_plane_graph, BUNDLED_PD_3_8};
use cyconv_core::plane::{dynamic_percolation, hull_fc, FaceConvexity, PlaneGraph};
use cyconv_core::poly::{hn_chordal, hn_grid, hn_p4sparse};
use cyconv_core::random::{
    glue_at_vertex, random_chordal, random_embedding, random_forest, random_multigraph,
    random_p4sparse, random_planar_four_regular, random_subset,
};
use cyconv_core::reduce::hn_upper_4regular;
use cyconv_core::{
    grid_perimeter, interval_cc, is_boxed, is_convex_cc, is_hull_set, Convexity, CycleConvexity,
    VertexSet,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 knot census 3-8 crossings", census_3_8),
        ("2 exact solver vs brute force", exact_vs_brute_force),
        ("3 closed forms vs brute force", closed_forms),
        ("4 4-regular constructive bound", four_regular_bound),
        ("5 closure axioms", closure_axioms),
        ("6 percolation vs face hull", percolation_equivalence),
        ("7 structural formulas", structural_formulas),
        ("8 grid boxed sets and perimeter", grid_boxed_sets),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name} ({secs:.2}s): {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census_3_8() -> Outcome {
    let db = parse_pd(BUNDLED_PD_3_8).map_err(|e| e.to_string())?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| e.to_string())?;
    let start = Instant::now();
    let c = pool.install(|| census(&db, 8)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let totals: Vec<usize> = (3..=8).map(|k| c.total(k)).collect();
    let ones: Vec<usize> = (3..=8).map(|k| c.count(k, 1)).collect();
    let twos: Vec<usize> = (3..=8).map(|k| c.count(k, 2)).collect();
    check(totals == [1, 1, 2, 3, 7, 21], || {
        format!("totals {totals:?}")
    })?;
    check(ones == [1, 1, 2, 3, 7, 12], || {
        format!("hn=1 counts {ones:?}")
    })?;
    check(twos == [0, 0, 0, 0, 0, 9], || {
        format!("hn=2 counts {twos:?}")
    })?;
    let differing: Vec<&str> = c.differing().iter().map(|r| r.name.as_str()).collect();
    check(differing.is_empty(), || {
        format!("hn_cc != hn_fc on {differing:?}")
    })?;
    check(elapsed < Duration::from_secs(60), || {
        format!("single-threaded census took {elapsed:?}")
    })?;
    Ok(format!(
        "totals {totals:?}, hn=1 {ones:?}, hn=2 {twos:?}, all equal, {:.2}s single-threaded",
        elapsed.as_secs_f64()
    ))
}

fn compare_cycle(g: &Multigraph, label: &str) -> Result<(), String> {
    let conv = CycleConvexity::new(g);
    let fast = solve(&conv);
    let slow = brute_force_hn(&conv).map_err(|e| e.to_string())?;
    check(fast.hn == slow.hn && is_hull_set(g, &fast.witness), || {
        format!(
            "{label}: solve {} vs brute force {} on {:?}",
            fast.hn,
            slow.hn,
            g.to_json()
        )
    })
}

fn compare_face(pg: &PlaneGraph, label: &str) -> Result<(), String> {
    let conv = FaceConvexity::new(pg);
    let fast = solve(&conv);
    let slow = brute_force_hn(&conv).map_err(|e| e.to_string())?;
    check(
        fast.hn == slow.hn && conv.is_hull_set(&fast.witness),
        || format!("{label}: face solve {} vs brute force {}", fast.hn, slow.hn),
    )
}

fn exact_vs_brute_force() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let start = Instant::now();
    let mut cycle_cases = 0;
    let mut face_cases = 0;
    for i in 0..250 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.15..0.7);
        let g = random_multigraph(&mut rng, n, p, 3);
        compare_cycle(&g, &format!("multigraph #{i}"))?;
        cycle_cases += 1;
        let pg = random_embedding(&mut rng, &g);
        compare_face(&pg, &format!("embedded multigraph #{i}"))?;
        face_cases += 1;
    }
    for i in 0..60 {
        let (m, n) = if rng.gen_bool(0.5) { (2, 3) } else { (3, 3) };
        let pg = random_planar_four_regular(&mut rng, m, n, 0.6);
        if pg.order() > 10 {
            continue;
        }
        compare_face(&pg, &format!("plane 4-regular #{i}"))?;
        compare_cycle(pg.underlying(), &format!("plane 4-regular #{i}"))?;
        face_cases += 1;
        cycle_cases += 1;
    }
    for pd in bundled_db(false) {
        let pg = pd_to_plane_graph(&pd).map_err(|e| e.to_string())?;
        compare_face(&pg, &pd.name)?;
        compare_cycle(pg.underlying(), &pd.name)?;
        face_cases += 1;
        cycle_cases += 1;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{cycle_cases} cycle-convexity and {face_cases} face-convexity instances, 0 mismatches"
    ))
}

fn closed_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for i in 0..220 {
        let n = rng.gen_range(1..=13);
        let p = rng.gen_range(0.2..0.9);
        let g = random_chordal(&mut rng, n, p);
        let closed = hn_chordal(&g).map_err(|e| format!("chordal #{i}: {e}"))?;
        let slow = brute_force_hn(&CycleConvexity::new(&g)).map_err(|e| e.to_string())?;
        check(closed.hn == slow.hn, || {
            format!("chordal #{i}: {} vs {}", closed.hn, slow.hn)
        })?;
    }
    for i in 0..220 {
        let n = rng.gen_range(1..=13);
        let g = random_p4sparse(&mut rng, n);
        let closed = hn_p4sparse(&g).map_err(|e| format!("P4-sparse #{i}: {e}"))?;
        let slow = brute_force_hn(&CycleConvexity::new(&g)).map_err(|e| e.to_string())?;
        check(closed.hn == slow.hn, || {
            format!("P4-sparse #{i}: {} vs {}", closed.hn, slow.hn)
        })?;
    }
    for m in 1..=4 {
        for n in 1..=4 {
            let g = make_grid(m, n).map_err(|e| e.to_string())?;
            let closed = hn_grid(m, n).map_err(|e| e.to_string())?;
            let slow = brute_force_hn(&CycleConvexity::new(&g)).map_err(|e| e.to_string())?;
            check(closed.hn == slow.hn, || {
                format!("grid {m}x{n}: {} vs {}", closed.hn, slow.hn)
            })?;
        }
    }
    Ok("220 chordal, 220 P4-sparse, 16 grids, 0 mismatches".into())
}

fn four_regular_bound() -> Outcome {
    let mut graphs: Vec<(String, Multigraph)> = Vec::new();
    for k in 2..=8 {
        graphs.push((format!("G_{k}"), make_gk(k).map_err(|e| e.to_string())?));
    }
    for pd in bundled_db(true) {
        let pg = pd_to_plane_graph(&pd).map_err(|e| e.to_string())?;
        graphs.push((pd.name.clone(), pg.underlying().clone()));
    }
    for (name, g) in &graphs {
        let ub = hn_upper_4regular(g).map_err(|e| format!("{name}: {e}"))?;
        check(is_hull_set(g, &ub.witness), || {
            format!("{name}: witness is not a hull set")
        })?;
        let cap = g.order().div_ceil(2);
        check(ub.bound <= cap, || {
            format!("{name}: bound {} exceeds {cap}", ub.bound)
        })?;
    }
    for k in 2..=6 {
        let g = make_gk(k).map_err(|e| e.to_string())?;
        let hn = solve(&CycleConvexity::new(&g)).hn;
        check(hn == k - 1, || {
            format!("hn(G_{k}) = {hn}, expected {}", k - 1)
        })?;
    }
    Ok(format!(
        "{} graphs verified within ceil(n/2); hn(G_k) = k-1 for k = 2..6",
        graphs.len()
    ))
}

fn axioms_on<C: Convexity>(conv: &C, a: &VertexSet, b: &VertexSet) -> Result<(), &'static str> {
    let ha = conv.hull(a);
    let hb = conv.hull(b);
    if !a.is_subset(&ha) {
        return Err("extensivity");
    }
    if a.is_subset(b) && !ha.is_subset(&hb) {
        return Err("monotonicity");
    }
    if conv.hull(&ha) != ha {
        return Err("idempotence");
    }
    if !conv.is_convex(&ha) {
        return Err("hull convexity");
    }
    if !conv.is_convex(&ha.intersection(&hb)) {
        return Err("intersection closure");
    }
    Ok(())
}

fn closure_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut pairs = 0;
    for i in 0..600 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.6);
        let g = random_multigraph(&mut rng, n, p, 3);
        let p = rng.gen_range(0.1..0.6);
        let a = random_subset(&mut rng, n, p);
        let b = if rng.gen_bool(0.5) {
            a.union(&random_subset(&mut rng, n, 0.3))
        } else {
            random_subset(&mut rng, n, 0.4)
        };
        axioms_on(&CycleConvexity::new(&g), &a, &b)
            .map_err(|ax| format!("{ax} fails on cycle instance #{i}"))?;
        let pg = random_embedding(&mut rng, &g);
        axioms_on(&FaceConvexity::new(&pg), &a, &b)
            .map_err(|ax| format!("{ax} fails on face instance #{i}"))?;
        pairs += 1;
    }
    Ok(format!(
        "{pairs} (graph, set) pairs under each convexity, 0 violations"
    ))
}

fn percolation_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let db = bundled_db(true);
    let mut percolating = 0;
    let mut total = 0;
    for pd in &db {
        let pg = pd_to_plane_graph(pd).map_err(|e| e.to_string())?;
        for i in 0..120 {
            let p = rng.gen_range(0.05..0.6);
            let s = random_subset(&mut rng, pg.order(), p);
            let perc = dynamic_percolation(&pg, &s).map_err(|e| format!("{}: {e}", pd.name))?;
            let full = hull_fc(&pg, &s).hull.is_full();
            check(perc.percolates == full, || {
                format!(
                    "{} seed #{i} {s}: percolation {} vs face hull {full}",
                    pd.name, perc.percolates
                )
            })?;
            percolating += usize::from(full);
            total += 1;
        }
    }
    Ok(format!(
        "{} knot graphs x 120 seeds = {total} sets ({percolating} percolating), 0 mismatches",
        db.len()
    ))
}

fn brute_hn(g: &Multigraph) -> Result<usize, String> {
    brute_force_hn(&CycleConvexity::new(g))
        .map(|r| r.hn)
        .map_err(|e| e.to_string())
}

fn structural_formulas() -> Outcome {
    for n in 1..=8 {
        let hn = brute_hn(&make_complete(n))?;
        check(hn == n.min(2), || format!("hn(K_{n}) = {hn}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for i in 0..100 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.3..1.0);
        let f = random_forest(&mut rng, n, p);
        let hn = brute_hn(&f)?;
        check(hn == n, || {
            format!("forest #{i} on {n} vertices has hn {hn}")
        })?;
    }
    let mut glued = 0;
    while glued < 120 {
        let n1 = rng.gen_range(2..=7);
        let n2 = rng.gen_range(2..=13 - n1);
        let g1 = random_multigraph(&mut rng, n1, 0.6, 2);
        let g2 = random_multigraph(&mut rng, n2, 0.6, 2);
        if !is_connected(&g1) || !is_connected(&g2) {
            continue;
        }
        let (g, _) = glue_at_vertex(&g1, rng.gen_range(0..n1), &g2, rng.gen_range(0..n2));
        let (h1, h2, h) = (brute_hn(&g1)?, brute_hn(&g2)?, brute_hn(&g)?);
        check(h1 + h2 - 1 <= h && h <= h1 + h2, || {
            format!(
                "glued graph #{glued}: hn {h} outside [{}, {}]",
                h1 + h2 - 1,
                h1 + h2
            )
        })?;
        glued += 1;
    }
    Ok(format!(
        "K_1..K_8, 100 forests, {glued} glued graphs, 0 violations"
    ))
}

fn grid_boxed_sets() -> Outcome {
    let mut subsets = 0usize;
    for m in 1..=4 {
        for n in 1..=4 {
            let g = make_grid(m, n).map_err(|e| e.to_string())?;
            let size = m * n;
            for mask in 0u32..(1 << size) {
                let s = VertexSet::from_ids(size, (0..size).filter(|&v| mask >> v & 1 == 1));
                let convex = is_convex_cc(&g, &s);
                check(convex == is_boxed(m, n, &s), || {
                    format!("grid {m}x{n}, set {s}: convex {convex}")
                })?;
                subsets += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let samples = 600;
    for i in 0..samples {
        let (m, n) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let g = make_grid(m, n).map_err(|e| e.to_string())?;
        let p = rng.gen_range(0.1..0.7);
        let s = random_subset(&mut rng, m * n, p);
        let grown = interval_cc(&g, &s);
        let (before, after) = (grid_perimeter(m, n, &s), grid_perimeter(m, n, &grown));
        check(after <= before, || {
            format!("sample #{i} on {m}x{n}: perimeter {before} -> {after}")
        })?;
    }
    Ok(format!(
        "{subsets} grid subsets classified, {samples} perimeter samples, 0 violations"
    ))
}
