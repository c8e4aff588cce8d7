fn main() {
    std::process::exit(sparse_suffix::cli::run(std::env::args_os()));
}
