fn main() -> std::process::ExitCode {
    monobrick::cli::main()
}
