use clap::Parser;
use evenspan::cli::{run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let level = match config.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        2 => log::LevelFilter::Debug,
        _ => log::LevelFilter::Trace,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .parse_default_env()
        .init();
    let stdout = std::io::stdout();
    let code = run(&config, &mut stdout.lock(), &mut std::io::stderr());
    std::process::exit(code);
}
