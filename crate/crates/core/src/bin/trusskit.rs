fn main() {
    std::process::exit(trusskit::cli::run(std::env::args_os()));
}
