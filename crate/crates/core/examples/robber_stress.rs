use copsrange::families;
use copsrange::graph::{Radius, Walk};
use copsrange::strategies::{self, RobberAutomaton};

fn main() {
    let mut failures = 0;
    // spiders at rho 1 and 2
    for (rho, leg) in [(1usize, 4usize), (2, 6)] {
        let g = families::make_triod(leg, leg, leg);
        let auto = RobberAutomaton::triod(&g).unwrap();
        for seed in 0..100u64 {
            let p = families::random_walk(&g, 500, seed);
            let out = strategies::triod_shadow_robber(&g, &auto, &p, Radius(rho)).unwrap();
            if !out.is_evasion() {
                failures += 1;
                if failures < 4 { println!("TRIOD rho={rho} seed={seed} -> {out:?}"); }
            }
        }
        println!("triod leg={leg} rho={rho} done");
    }
    // clique-triods at rho 1 and 2 (legs 2*rho+1)
    for (rho, leg) in [(1usize, 3usize), (2, 5)] {
        let (g, _) = families::make_clique_triod(3, leg, leg, leg).unwrap();
        let auto = RobberAutomaton::clique_triod(&g).unwrap();
        for seed in 0..100u64 {
            let p = families::random_walk(&g, 500, seed);
            let out = strategies::triod_shadow_robber(&g, &auto, &p, Radius(rho)).unwrap();
            if !out.is_evasion() {
                failures += 1;
                if failures < 8 { println!("CLIQUE rho={rho} seed={seed} -> {out:?}"); }
            }
        }
        println!("clique leg={leg} rho={rho} done");
    }
    // grid 11x14 rho 3: fiber + 50 seeded patrols
    let fiber = strategies::grid_fiber_patrol(11, 14).unwrap();
    let out = strategies::grid_projection_robber(11, 14, Radius(3), &fiber.walk).unwrap();
    if !out.is_evasion() { failures += 1; println!("GRID fiber -> {out:?}"); }
    let (grid, _) = families::make_grid(11, 14);
    for seed in 0..50u64 {
        let p = families::random_walk(&grid, 500, seed);
        let out = strategies::grid_projection_robber(11, 14, Radius(3), &p).unwrap();
        if !out.is_evasion() {
            failures += 1;
            if failures < 12 { println!("GRID seed={seed} -> {out:?}"); }
        }
    }
    println!("total failures: {failures}");
    let _ = Walk(vec![]);
}
