use std::io::{stderr, stdout};

fn main() {
    let code = sbgraph::cli::run_command(
        std::env::args_os(),
        &mut stdout().lock(),
        &mut stderr().lock(),
    );
    std::process::exit(code);
}
