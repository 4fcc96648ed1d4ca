fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(braidalg::cli::run())
}
