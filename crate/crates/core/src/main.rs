fn main() {
    std::process::exit(anthem::cli::main());
}
