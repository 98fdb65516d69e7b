fn main() {
    std::process::exit(bifree::cli::run(std::env::args_os()));
}
