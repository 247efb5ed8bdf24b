use std::io::Write;

fn main() {
    let out = kronpos::cli::dispatch(std::env::args_os().skip(1));
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code);
}
