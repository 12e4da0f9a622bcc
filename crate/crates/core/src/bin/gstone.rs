fn main() {
    std::process::exit(gstone::cli::run(std::env::args_os(), &mut std::io::stdout()));
}
