//! Partial fixators: does f fix every point of w·A* it is defined on?
//!
//!     cargo run --example partial_fixator

use higman_thompson::embeddings::{pfix_check, pfix_check_bounded, pfix_depth_bound, theta};
use higman_thompson::{Alphabet, GroupElement, Word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let zero = Word::letter(0);
    let t = GroupElement::from_pairs(Alphabet::BINARY, [(Word::letter(0), Word::letter(1)), (Word::letter(1), Word::letter(0))])?;
    println!("transposition fixes 0·A*: {}", pfix_check(&t, &zero));

    for seed in 0..5 {
        let g = GroupElement::random(Alphabet::BINARY, 5, seed)?;
        let tg = theta(&g)?;
        let depth = pfix_depth_bound(&tg, &zero);
        println!(
            "seed {seed}: θ(g) fixes 0·A*: {} (enumerated to depth {depth}: {})",
            pfix_check(&tg, &zero),
            pfix_check_bounded(&tg, &zero, depth)
        );
    }
    Ok(())
}
