fn main() {
    std::process::exit(oddlab::cli::run());
}
