use std::io::Write;

fn main() {
    let (code, out, err) = invgen::cli::run_from(std::env::args_os());
    // A closed pipe on stdout is not an error worth reporting.
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    std::process::exit(code);
}
