fn main() {
    std::process::exit(betaspectra::cli::run());
}
