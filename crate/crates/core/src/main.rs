fn main() {
    std::process::exit(qsrgraph::cli::run());
}
