fn main() {
    std::process::exit(qwalk::harness::cli::run(std::env::args_os()));
}
