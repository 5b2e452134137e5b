use clap::Parser;

use quiver_moduli::cli::{self, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Usage problems exit with clap's code 2; --help and --version
        // exit 0 through the same path.
        Err(err) => err.exit(),
    };
    match cli::execute(cli) {
        Ok(output) => {
            print!("{}", output.stdout);
            std::process::exit(output.exit_code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}
