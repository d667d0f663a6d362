fn main() {
    std::process::exit(symlpp::cli::main_with_args(std::env::args_os()));
}
