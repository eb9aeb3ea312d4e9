fn main() {
    std::process::exit(middiv::cli::run(std::env::args_os()));
}
