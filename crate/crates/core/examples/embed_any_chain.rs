//! Embedding between any two Higman-Thompson groups G_{i,1} → G_{j,1}.
//!
//!     cargo run --example embed_any_chain

use higman_thompson::embeddings::{embed_any, EmbedRoute};
use higman_thompson::{Alphabet, GroupElement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for i in 2..=5 {
        let from = Alphabet::new(i)?;
        let g = GroupElement::random(from, 2 * i - 1, i as u64)?;
        let h = GroupElement::random(from, i, 100 + i as u64)?;
        for j in 2..=5 {
            let to = Alphabet::new(j)?;
            let hom = embed_any(&h.compose(&g)?, to)? == embed_any(&h, to)?.compose(&embed_any(&g, to)?)?;
            let size = embed_any(&g, to)?.table().len();
            println!("{i} -> {j}  {:<12} pairs={size:<3} homomorphic={hom}", EmbedRoute::choose(from, to).describe());
        }
    }
    Ok(())
}
