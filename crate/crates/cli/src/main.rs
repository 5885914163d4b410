fn main() {
    std::process::exit(cpl_cli::main_with_args(std::env::args_os()));
}
