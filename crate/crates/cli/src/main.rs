fn main() {
    let (code, out) = torusbook_cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
