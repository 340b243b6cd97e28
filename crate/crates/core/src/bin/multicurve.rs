fn main() {
    std::process::exit(multicurve::cli::main_with_args(std::env::args_os()));
}
