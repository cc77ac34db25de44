fn main() {
    std::process::exit(lyndon_dirichlet::cli::main_with_args(std::env::args_os()));
}
