fn main() {
    std::process::exit(fraczeta_cli::run(std::env::args_os()));
}
