//! A γ sweep through the command-line front end, read back as CSV.

fn main() {
    let out = oplab::cli::run([
        "oplab", "sweep", "--param", "gamma", "--from", "0.5", "--to", "2", "--steps", "7", "--p", "2", "--q", "2",
        "--certify",
    ]);
    if out.code != 0 {
        eprint!("{}", out.stderr);
        std::process::exit(out.code);
    }
    print!("{}", out.stdout);

    // the balance relation picks out a single γ
    let mut rdr = csv::Reader::from_reader(out.stdout.as_bytes());
    for row in rdr.records() {
        let row = row.expect("csv row");
        if &row[1] == "1" {
            println!("bounded at gamma = {}, sharp {}, certified bound {}", &row[0], &row[2], &row[3]);
        }
    }
}
