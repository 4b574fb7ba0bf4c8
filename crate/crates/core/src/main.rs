use std::io::IsTerminal;

fn main() -> std::process::ExitCode {
    let color = std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal();
    let code = spherinv::cli::run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr(), color);
    std::process::ExitCode::from(code as u8)
}
