mod cli;

fn main() {
    // die quietly on a closed pipe (`mzv ... | head`) like other filters
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(cli::run());
}
