fn main() {
    let code = higman_thompson::cli::main_with_args(std::env::args_os());
    std::process::exit(code);
}
