//! Diagram automorphisms permute simples and commute with path lifting.

use dynkin_stab::gauss::rat;
use dynkin_stab::{initial_state, lift_path, CentralCharge, ChargePath, Diagram, Gauss};

fn main() -> dynkin_stab::Result<()> {
    let d: Diagram = "D4~".parse()?;
    let group = d.automorphism_group(false);
    println!(
        "{d}: {} automorphisms, {} fixing the extending vertex",
        group.len(),
        d.automorphism_group(true).len()
    );

    let start = CentralCharge::new(
        [
            (-3, 7, 3, 5),
            (2, 9, 1, 1),
            (1, 11, 7, 3),
            (-5, 13, 2, 7),
            (4, 17, 5, 2),
        ]
        .iter()
        .map(|&(a, b, c, e)| Gauss::new(rat(a, b), rat(c, e)))
        .collect(),
    );
    let end = CentralCharge::new(
        [
            (5, 3, -1, 2),
            (-7, 4, 3, 11),
            (2, 19, 1, 3),
            (9, 5, -2, 9),
            (-1, 23, 4, 3),
        ]
        .iter()
        .map(|&(a, b, c, e)| Gauss::new(rat(a, b), rat(c, e)))
        .collect(),
    );
    let path = ChargePath::new(vec![start.clone(), end])?;
    let s = initial_state(&d, &start)?;
    let (lifted, _) = lift_path(&s, &path)?;
    for g in group.iter().step_by(5) {
        let moved = path.map(|z| CentralCharge::new(g.permute(z)));
        let (lifted_moved, _) = lift_path(&s.act_automorphism(g)?, &moved)?;
        println!(
            "  {:?}: commutes = {}",
            g.perm,
            lifted.act_automorphism(g)? == lifted_moved
        );
    }
    Ok(())
}
