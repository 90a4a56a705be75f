//! θ-semistable nilpotent representations of dimension δ on a cycle.

use dynkin_stab::constellations::{find_semistable, is_semistable, CycleRep, Weight};
use dynkin_stab::gauss::{format_rational, int};

fn show(v: &[dynkin_stab::Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

fn main() -> dynkin_stab::Result<()> {
    for theta in [vec![1, -1], vec![2, -1, -1], vec![-1, 3, -4, 2]] {
        let w = Weight::new(theta.iter().map(|&x| int(x)).collect())?;
        let rep = find_semistable(&w)?;
        println!(
            "θ = {theta:?}: x = [{}] y = [{}]",
            show(&rep.x),
            show(&rep.y)
        );
    }
    let rep = CycleRep {
        x: vec![int(1), int(0)],
        y: vec![int(0), int(0)],
    };
    let w = Weight::new(vec![int(-1), int(1)])?;
    println!("destabilized by {:?}", is_semistable(&rep, &w)?.certificate);
    Ok(())
}
