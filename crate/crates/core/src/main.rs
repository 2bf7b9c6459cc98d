use clap::error::ErrorKind;
use clap::Parser;
use trilogic::cli::{self, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not errors.
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                std::process::exit(cli::EXIT_OK);
            }
            eprintln!("{err}");
            std::process::exit(cli::EXIT_USAGE);
        }
    };
    match cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(cli::EXIT_USAGE);
        }
    }
}
