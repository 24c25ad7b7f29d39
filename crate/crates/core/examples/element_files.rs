//! The text format: parse, validate, canonicalize, serialize.
//!
//!     cargo run --example element_files

use higman_thompson::format::{parse, parse_element, serialize};
use higman_thompson::Table;

fn main() {
    let inputs = [
        "G 2\n0 -> 0\n1 -> 1\n",
        "G 2\n\n1 -> 0\n00 -> 10\n01 -> 11\n",
        "G 2\n0 -> 0\n0 -> 1\n",
        "G 2\n0 -> 1\n1 -> 2\n",
        "G 3\n0 -> 0\n10 -> 11\n11 -> 10\n12 -> 2\n2 -> 12\n",
    ];
    for text in inputs {
        println!("--- input\n{}", text.trim_end());
        match parse(text) {
            Err(e) => println!("parse error: {e}"),
            Ok(file) => {
                let defects = Table::check(file.k, &file.pairs);
                if !defects.is_empty() {
                    for d in &defects {
                        println!("invalid: {d}");
                    }
                    continue;
                }
                let g = parse_element(text).expect("valid");
                let out = serialize(&g);
                println!("--- canonical{}\n{}", if out == text { " (unchanged)" } else { "" }, out.trim_end());
            }
        }
    }
}
