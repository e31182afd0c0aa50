fn main() {
    std::process::exit(dirac_invsqrt::cli::run());
}
