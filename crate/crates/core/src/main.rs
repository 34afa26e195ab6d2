fn main() {
    std::process::exit(tw_approx::cli::cli_main(std::env::args_os()));
}
