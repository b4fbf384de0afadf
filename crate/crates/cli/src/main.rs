fn main() {
    std::process::exit(lspline_cli::run(std::env::args_os()));
}
