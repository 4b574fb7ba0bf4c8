//! Produces the same JSON envelopes as the command-line tool.

use spherinv::cli::{fiber_envelope, to_json, verify_envelope};
use spherinv::liealg::CaseTag;

fn main() -> Result<(), spherinv::Error> {
    print!("{}", to_json(&verify_envelope(CaseTag::JacquetIchino)?));
    let fibers = fiber_envelope(CaseTag::OddGL(1), 0, 4)?;
    println!("fiber status: {:?}, {} samples", fibers.status, fibers.results.samples.len());
    Ok(())
}
