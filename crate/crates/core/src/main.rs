fn main() {
    std::process::exit(orthoroots::cli::run(std::env::args_os()));
}
