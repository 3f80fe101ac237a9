//! Serialize a twist to JSON and read it back: the round trip preserves
//! the canonical ordered form byte-exactly, so independently computed
//! twists can be compared as strings.
//!
//! Run with: cargo run --example serialization

use twistlab::twists::{full_chain, make_plan, ParamSet, TwistElement};

fn main() -> twistlab::Result<()> {
    let plan = make_plan(4)?;
    let params = ParamSet::default_for(&plan);
    let f = full_chain(&plan, &params, 3)?;

    let json = f.to_json();
    let f2 = TwistElement::from_json(&json)?;
    let json2 = f2.to_json();
    assert_eq!(json, json2, "round trip must be byte-exact");
    assert_eq!(f.element, f2.element);

    println!("chain for sl(4), {} bytes of JSON; round trip byte-exact", json.len());
    let preview: String = json.chars().take(200).collect();
    println!("{preview}…");
    Ok(())
}
