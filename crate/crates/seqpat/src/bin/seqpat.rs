fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = seqpat::cli::run(&args, &mut std::io::stdout());
    if code != 0 {
        std::process::exit(code);
    }
}
