// Drive the command-line jobs from code, save records and re-verify them.

use hyperdiff::cli::{parse_records, run_job, Command, Format, JobSpec};

fn main() {
    let jobs = [
        JobSpec::new(Command::CountMasters, "@c3").bind("j1", "1").bind("j2", "1").bind("sigma", "1"),
        JobSpec::new(Command::Expand, "2F1[a*eps, b*eps; 1+c*eps; z]").order(2),
        JobSpec::new(Command::Reduce, "2F1[3/2+eps, 1/3; 7/4-eps; z]"),
        JobSpec::new(Command::CheckParametrization, "3f2(r=1, p=-1, q=2)"),
    ];
    let mut saved = String::new();
    for j in &jobs {
        let out = run_job(j).unwrap();
        print!("{}", out.render(Format::Text));
        saved += &out.render(Format::Jsonl);
    }
    let path = std::env::temp_dir().join(format!("hyperdiff-example-{}.jsonl", std::process::id()));
    std::fs::write(&path, &saved).unwrap();
    assert_eq!(parse_records(&saved).unwrap().len(), jobs.len());
    let check = run_job(&JobSpec::new(Command::Verify, path.to_str().unwrap()).terms(20)).unwrap();
    println!("re-verified {} records, exit code {}", check.records.len(), check.exit_code);
    assert_eq!(check.exit_code, 0);
    std::fs::remove_file(path).ok();
}
