// SPDX-License-Identifier: Apache-2.0

use std::io;

fn main() {
    let code = anharmonic_dyson::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
