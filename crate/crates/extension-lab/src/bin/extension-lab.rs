fn main() {
    std::process::exit(extension_lab::cli::run());
}
