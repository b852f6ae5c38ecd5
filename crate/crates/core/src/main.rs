fn main() {
    std::process::exit(tropigon::cli::main_with_args(std::env::args_os()));
}
