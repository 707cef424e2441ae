fn main() {
    std::process::exit(uce_core::cli::main_from_env());
}
