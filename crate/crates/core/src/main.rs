fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(mcluster_d::cli::run(&args));
}
