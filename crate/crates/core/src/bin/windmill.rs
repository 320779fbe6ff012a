fn main() {
    std::process::exit(windmill_core::cli::cli(std::env::args_os()));
}
