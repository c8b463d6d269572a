fn main() {
    std::process::exit(spintor::cli::run());
}
