use std::io::Write;

fn main() {
    match dsurg_cli::run(std::env::args_os()) {
        Ok(outcome) => {
            for warning in &outcome.warnings {
                eprintln!("warning: {warning}");
            }
            print!("{}", outcome.stdout);
        }
        Err(err) => {
            if err.exit_code == 0 {
                // --help / --version
                print!("{}", err.message);
                if !err.message.ends_with('\n') {
                    println!();
                }
            } else {
                let _ = writeln!(std::io::stderr(), "{}", err.message.trim_end());
            }
            std::process::exit(err.exit_code);
        }
    }
}
