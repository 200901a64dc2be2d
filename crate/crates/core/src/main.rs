fn main() {
    std::process::exit(vp_interp::cli::main_with(std::env::args_os()));
}
