//! Letterwise substitution embeddings G_{K,1} → G_{k,1}, legal when
//! K = 1 + (k-1)d.
//!
//!     cargo run --example higman_embedding

use higman_thompson::embeddings::{canonical_code, higman_embed, CodeEncoding};
use higman_thompson::format::serialize;
use higman_thompson::{Alphabet, GroupElement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k2 = Alphabet::BINARY;
    let k3 = Alphabet::new(3)?;

    for big in 2..=6 {
        match canonical_code(big, k3) {
            Ok(enc) => println!("K={big} -> 3: code {:?}", enc.code().iter().map(|w| w.to_string()).collect::<Vec<_>>()),
            Err(e) => println!("K={big} -> 3: {e}"),
        }
    }

    let cycle = GroupElement::from_pairs(
        k3,
        [("0", "1"), ("1", "2"), ("2", "0")].map(|(p, q)| (p.parse().unwrap(), q.parse().unwrap())),
    )?;
    let enc = canonical_code(3, k2)?;
    print!("φ(cycle) with the comb code:\n{}", serialize(&higman_embed(&cycle, &enc)?));

    let other = CodeEncoding::new(k3, k2, vec!["00".parse()?, "01".parse()?, "1".parse()?])?;
    print!("φ(cycle) with {{00,01,1}}:\n{}", serialize(&higman_embed(&cycle, &other)?));
    Ok(())
}
