fn main() {
    std::process::exit(hyperops::cli::run());
}
