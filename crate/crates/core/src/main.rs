use sunit_triples::cli;

fn main() {
    let plan = match cli::parse_args(std::env::args_os()) {
        Ok(plan) => plan,
        Err(err) => {
            err.print();
            std::process::exit(err.exit_code());
        }
    };
    let outcome = cli::execute(&plan);
    match &outcome {
        Ok(summary) if summary.unresolved > 0 => {
            eprintln!(
                "warning: {} record(s) affected by unresolved factorizations",
                summary.unresolved
            );
        }
        Ok(_) => {}
        Err(err) => eprintln!("error: {err}"),
    }
    std::process::exit(cli::exit_code(&outcome));
}
