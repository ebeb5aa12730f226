fn main() {
    std::process::exit(dendrop::cli::main());
}
