fn main() {
    std::process::exit(compensating_media::cli::run(std::env::args_os()));
}
