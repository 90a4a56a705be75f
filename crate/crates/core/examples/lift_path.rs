//! Lift a polyline of central charges and print the walls it crosses.

use dynkin_stab::cover::Crossed;
use dynkin_stab::gauss::{format_rational, rat};
use dynkin_stab::{initial_state, lift_path, CentralCharge, ChargePath, Diagram, Gauss};

fn main() -> dynkin_stab::Result<()> {
    let d: Diagram = "A3".parse()?;
    let start = CentralCharge::new(vec![
        Gauss::i(),
        Gauss::new(rat(1, 2), rat(1, 1)),
        Gauss::from_ints(-1, 2),
    ]);
    let via = CentralCharge::new(vec![
        Gauss::from_ints(-2, -1),
        Gauss::new(rat(1, 3), rat(1, 2)),
        Gauss::from_ints(1, 1),
    ]);
    let end = CentralCharge::new(vec![
        Gauss::from_ints(1, -1),
        Gauss::from_ints(2, -1),
        Gauss::new(rat(-1, 5), rat(3, 1)),
    ]);
    let path = ChargePath::new(vec![start.clone(), via, end])?;

    let state = initial_state(&d, &start)?;
    let (out, events) = lift_path(&state, &path)?;
    for e in &events {
        let slot = match e.slot {
            Crossed::Slot(i) => d.label_of(i).to_string(),
            Crossed::All => "all".into(),
        };
        println!(
            "segment {} t = {:>6}  slot {slot}  {:?}",
            e.segment,
            format_rational(&e.time),
            e.direction
        );
    }
    println!("{out}");
    Ok(())
}
