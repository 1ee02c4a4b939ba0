fn main() {
    std::process::exit(homent_cli::cli::main_exit());
}
