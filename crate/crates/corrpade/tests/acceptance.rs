use corrpade::verify::{self, CRITERIA};

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (id, _, _) in CRITERIA {
        let r = verify::run(id);
        println!("{}", r.line());
        for f in r.failures() {
            println!("    {}: {}", f.name, f.detail);
        }
        if !r.passed() {
            failed.push(r.key);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
