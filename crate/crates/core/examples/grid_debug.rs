use copsrange::families;
use copsrange::graph::Radius;
use copsrange::retracts;
use copsrange::strategies;

fn main() {
    let (grid, info) = families::make_grid(11, 14);
    let rho = Radius(3);
    let proj = retracts::grid_projections(11, 14, rho).unwrap();
    let coords = |v: usize| info.coords(v);
    for seed in [25u64, 10, 9] {
        let p = families::random_walk(&grid, 500, seed);
        let out = strategies::grid_projection_robber(11, 14, rho, &p).unwrap();
        println!("seed {seed}: {:?}", match &out {
            strategies::RobberOutcome::Evasion { .. } => "evasion".to_string(),
            strategies::RobberOutcome::Failure { reason, time } => format!("{reason} at {time:?}"),
        });
        if let strategies::RobberOutcome::Failure { time: Some(t), .. } = &out {
            let t = *t;
            for s in t.saturating_sub(6)..=(t + 1).min(p.0.len() - 1) {
                println!("  t={s} cop at {:?}", coords(p.0[s]));
            }
            // replay to get robber track: call with truncated patrols
            for cut in (t.saturating_sub(6)..t).rev() {
                let short = copsrange::graph::Walk(p.0[..=cut].to_vec());
                if let strategies::RobberOutcome::Evasion { walk } =
                    strategies::grid_projection_robber(11, 14, rho, &short).unwrap()
                {
                    println!("  robber track (prefix {cut}): {:?}",
                        walk.0[cut.saturating_sub(6)..].iter().map(|&v| coords(v)).collect::<Vec<_>>());
                    break;
                }
            }
        }
    }
    let _ = proj;
}
