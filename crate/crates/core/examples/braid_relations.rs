//! Loops of the two sides of each braid relation lift to the same state,
//! while a single generator does not act trivially.

use dynkin_stab::cover::same_monodromy;
use dynkin_stab::{monodromy, BraidWord, Diagram};

fn main() -> dynkin_stab::Result<()> {
    let d: Diagram = "A3".parse()?;
    let w = |s: &str| BraidWord::parse_str(&d, s);
    println!(
        "σ1σ2σ1 = σ2σ1σ2: {}",
        same_monodromy(&d, &w("1,2,1")?, &w("2,1,2")?)?
    );
    println!(
        "σ1σ3 = σ3σ1:     {}",
        same_monodromy(&d, &w("1,3")?, &w("3,1")?)?
    );
    println!(
        "σ1σ2 = σ2σ1:     {}",
        same_monodromy(&d, &w("1,2")?, &w("2,1")?)?
    );
    let m = monodromy(&d, &w("1,2,-1")?)?;
    println!(
        "σ1σ2σ1⁻¹ acts on classes by {:?} with ledger change {:?}",
        m.k_matrix, m.ledger_delta
    );
    Ok(())
}
