//! Parsing, type checking and rendering formulas.
//!
//! cargo run --example parse_and_render

use hierlog::{parse_modal, parse_prop, ParseError};

fn main() {
    for text in ["((p ->1 q) & r) ->2 s", "p ->1 (q ->1 r)", "p ->1 & q"] {
        match parse_prop(text) {
            Ok(f) => println!(
                "{:<24} ok, max index {:?}, size {}",
                text,
                f.max_index().map(|i| i.get()),
                f.size()
            ),
            Err(ParseError::IllTyped(e)) => println!("{:<24} {}", text, e),
            Err(e) => println!("{:<24} {}", text, e),
        }
    }

    let boxed = parse_modal("[]1 ([]0 p -> []0 q)").expect("well-formed");
    println!("\nrendered: {}", boxed);
    println!(
        "json:     {}",
        serde_json::to_string(&boxed).expect("serializes")
    );
}
