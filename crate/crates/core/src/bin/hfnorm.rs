fn main() {
    let code = hfnorm::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
