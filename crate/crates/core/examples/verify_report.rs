//! Run the verification suite on one type and print a line per check.
//!
//! cargo run --release --example verify_report -- E7

use orthoroots::verify::{run_suite, VerifyOptions};
use orthoroots::SystemType;

fn main() -> orthoroots::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D6".into());
    let full = std::env::args().any(|a| a == "--full");
    let t = SystemType::parse(&name)?;
    let records = run_suite(t, &VerifyOptions { full, ..Default::default() })?;
    for r in &records {
        println!("{}", r.line());
    }
    let failed = records.iter().filter(|r| !r.pass).count();
    println!("{} checks, {failed} failed", records.len());
    Ok(())
}
