//! The *a_i-successor map of a maximal binary prefix code, by formula and by
//! the nearest-right-neighbour recurrence.
//!
//!     cargo run --example successors

use higman_thompson::successor::{succ_all, succ_all_iterative};
use higman_thompson::{Alphabet, PrefixCode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for list in ["0,1", "00,01,10,11", "0,100,101,11"] {
        let p = PrefixCode::parse(list, Alphabet::BINARY)?;
        for i in [2, 3] {
            let formula = succ_all(&p, i)?;
            assert_eq!(formula, succ_all_iterative(&p, i)?);
            let shown: Vec<String> = formula.iter().map(|(p, s)| format!("{p}->{s}")).collect();
            println!("{{{p}}} a_{i}: {}", shown.join(" "));
        }
    }
    Ok(())
}
