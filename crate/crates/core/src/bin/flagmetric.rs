fn main() {
    std::process::exit(flagmetric::cli::main_exit());
}
