fn main() {
    std::process::exit(homcas::cli::main());
}
