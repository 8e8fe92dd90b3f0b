fn main() {
    std::process::exit(twisted_alexander::cli::main_with_args(std::env::args_os()));
}
