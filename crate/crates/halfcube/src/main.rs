fn main() {
    std::process::exit(halfcube::cli::run());
}
