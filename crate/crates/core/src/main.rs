fn main() {
    std::process::exit(fixglue::io::run_cli(std::env::args_os()));
}
