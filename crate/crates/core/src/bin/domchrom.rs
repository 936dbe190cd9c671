fn main() {
    std::process::exit(domchrom::cli::main_with_args(std::env::args_os()));
}
