use clap::Parser;
use wramsey_cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((report, text)) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{text}");
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
