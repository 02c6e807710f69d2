fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SHATTER_BASIS_LOG", "warn")).init();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = shatter_basis::cli::dispatch(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
