fn main() {
    std::process::exit(gametheory::cli::run(std::env::args_os()));
}
