fn main() {
    std::process::exit(sconvex_ineq::cli::run());
}
