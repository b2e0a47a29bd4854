fn main() {
    std::process::exit(glweight::cli::main());
}
