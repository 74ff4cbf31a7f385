fn main() {
    std::process::exit(qbrach_cli::run_cli(std::env::args_os()));
}
