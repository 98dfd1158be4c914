fn main() {
    std::process::exit(catgrp::cli::main());
}
