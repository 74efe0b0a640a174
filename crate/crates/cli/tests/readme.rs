use legrack_cli::run_capture;

/// Every `$ legrack ...` line in a `console` block of the README, with the
/// output lines that follow it.
fn examples(readme: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    let mut in_block = false;
    for line in readme.lines() {
        if line.starts_with("```") {
            in_block = line == "```console";
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ ") {
            out.push((cmd.to_string(), String::new()));
        } else if let Some((_, expected)) = out.last_mut() {
            expected.push_str(line);
            expected.push('\n');
        }
    }
    out
}

#[test]
fn readme_examples_match() {
    let readme = include_str!("../../../README.md");
    let ex = examples(readme);
    assert!(ex.len() >= 10, "only {} examples found", ex.len());
    for (cmd, expected) in ex {
        let args: Vec<&str> = cmd.split_whitespace().collect();
        assert_eq!(args[0], "legrack", "{cmd}");
        let (status, stdout, stderr) = run_capture(&args, "");
        assert_eq!(status, 0, "{cmd}: {stderr}");
        assert_eq!(stdout, expected, "{cmd}");
    }
}
