//! Matrix-level braid relations and Coxeter numbers.

use dynkin_stab::diagrams::catalog;
use dynkin_stab::weylbraid::matrix_order;
use dynkin_stab::{verify_relations, word_to_matrix, BraidWord};

fn main() -> dynkin_stab::Result<()> {
    for d in catalog(8, false) {
        let report = verify_relations(&d);
        let c = word_to_matrix(&d, &BraidWord::coxeter_element(&d))?;
        println!(
            "{:<3} {} relations {}  Coxeter number {}",
            d.name(),
            report.checks.len(),
            if report.all_passed() { "hold" } else { "FAIL" },
            matrix_order(&c, 100).map_or("inf".into(), |h| h.to_string())
        );
    }
    for d in catalog(4, true) {
        println!(
            "{:<4} relations {}",
            d.name(),
            if verify_relations(&d).all_passed() {
                "hold"
            } else {
                "FAIL"
            }
        );
    }
    Ok(())
}
