use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = parafermi::cli::run(&refs, &mut out);
    let _ = out.flush();
    std::process::exit(code);
}
