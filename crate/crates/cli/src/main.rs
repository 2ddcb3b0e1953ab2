use clap::Parser;
use qzeno_cli::{execute, output_path, render, write_output, Cli};

fn main() {
    let cli = Cli::parse();
    let result = execute(&cli).and_then(|(table, common)| {
        let text = render(&table, common.format);
        write_output(&text, output_path(&common, &table.config.command))
    });
    if let Err(e) = result {
        eprintln!("qzeno: {e}");
        std::process::exit(e.exit_code());
    }
}
