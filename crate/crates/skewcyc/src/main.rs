use clap::Parser;
use skewcyc::cli::{self, Cli};

fn main() {
    let args = Cli::parse();
    match cli::run(&args) {
        Ok(out) => {
            print!("{}", out.text);
            if out.failed {
                std::process::exit(1);
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
