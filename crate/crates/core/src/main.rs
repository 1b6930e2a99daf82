fn main() {
    std::process::exit(gauss_sums::cli::run());
}
