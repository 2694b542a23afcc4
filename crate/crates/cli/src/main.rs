fn main() {
    std::process::exit(harvester_cli::run(std::env::args_os()));
}
