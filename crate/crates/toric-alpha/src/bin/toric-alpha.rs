fn main() {
    std::process::exit(toric_alpha::cli::run(std::env::args()));
}
