fn main() {
    std::process::exit(cartan_sheaf::cli::main_with_env());
}
