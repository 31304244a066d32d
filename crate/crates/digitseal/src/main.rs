fn main() {
    std::process::exit(digitseal::cli::main_exit_code());
}
