fn main() {
    std::process::exit(littlewood::cli::run(std::env::args_os()));
}
