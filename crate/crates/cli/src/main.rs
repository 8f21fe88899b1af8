use std::io::Write;

fn main() {
    let execution = sylowlab_cli::run(std::env::args().skip(1));
    print!("{}", execution.stdout);
    if !execution.stderr.is_empty() {
        let _ = write!(std::io::stderr(), "{}", execution.stderr);
    }
    std::process::exit(execution.exit_code);
}
