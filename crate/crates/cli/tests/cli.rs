use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use sesx_cli::{compress_bytes, parse, render, SesFile};
use sesx_core::oracle::naive_sre;
use sesx_core::text::random_text;
use sesx_core::Text;
use tempfile::TempDir;

fn sesx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sesx"))
        .args(args)
        .output()
        .unwrap()
}

fn sesx_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sesx"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

struct Scratch(TempDir);

impl Scratch {
    fn new() -> Self {
        Scratch(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, data: &[u8]) -> PathBuf {
        let p = self.0.path().join(name);
        fs::write(&p, data).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compress_empty_file() {
    let dir = Scratch::new();
    let input = dir.file("empty", b"");
    let output = dir.path("empty.ses");
    let out = sesx(&["compress", "--input", s(&input), "--output", s(&output)]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read(&output).unwrap(), b"SESX1\nraw 0\nn 1\nC 1 0\n");
    assert_eq!(
        String::from_utf8(out.stderr).unwrap(),
        "n=1 chi=0 sigma=1 eq=0 ch=1 size=1\n"
    );
}

#[test]
fn compress_figure_example_shape() {
    let out = sesx_stdin(&["compress", "--sizes"], b"aabbaababa");
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("E ")).count(), 3);
    assert_eq!(text.lines().filter(|l| l.starts_with("C ")).count(), 3);
    let log = String::from_utf8(out.stderr).unwrap();
    assert!(log.starts_with("n=11 chi=5 sigma=3 eq=3 ch=3 size=6\n"));
    assert!(log.contains(&format!("words=6 bytes={}", text.len())));
}

#[test]
fn round_trip_through_files() {
    let dir = Scratch::new();
    for (k, raw) in [
        b"abracadabra".to_vec(),
        random_text(3, 5000, 4).unwrap(),
        (1..=255u8).collect(),
        b"x".to_vec(),
        Vec::new(),
    ]
    .iter()
    .enumerate()
    {
        let input = dir.file(&format!("in{k}"), raw);
        let packed = dir.path(&format!("in{k}.ses"));
        let unpacked = dir.path(&format!("in{k}.out"));
        assert_eq!(
            code(&sesx(&[
                "compress",
                "--input",
                s(&input),
                "--output",
                s(&packed)
            ])),
            0
        );
        assert_eq!(
            code(&sesx(&[
                "decompress",
                "--input",
                s(&packed),
                "--output",
                s(&unpacked)
            ])),
            0
        );
        assert_eq!(&fs::read(&unpacked).unwrap(), raw);
        assert_eq!(code(&sesx(&["verify", s(&input), s(&packed)])), 0);
    }
}

#[test]
fn stdin_stdout_pipeline() {
    let packed = sesx_stdin(&["compress"], b"mississippi");
    assert_eq!(code(&packed), 0);
    let unpacked = sesx_stdin(&["decompress"], &packed.stdout);
    assert_eq!(code(&unpacked), 0);
    assert_eq!(unpacked.stdout, b"mississippi");
}

#[test]
fn compress_errors() {
    let dir = Scratch::new();
    let input = dir.file("nul", b"ab\0cd");
    let out = sesx(&["compress", "--input", s(&input)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("offset 2"));
    let missing = dir.path("missing");
    assert_eq!(code(&sesx(&["compress", "--input", s(&missing)])), 1);
}

#[test]
fn decompress_errors() {
    let (good, _) = compress_bytes(b"aabbaababa").unwrap();
    let truncated = &good.as_bytes()[..good.len() - 4];
    assert_eq!(code(&sesx_stdin(&["decompress"], truncated)), 2);

    let mut file = parse(good.as_bytes()).unwrap();
    file.ses.eq[0].len = 11;
    assert_eq!(
        code(&sesx_stdin(&["decompress"], render(&file).as_bytes())),
        2
    );

    let ambiguous = b"SESX1\nraw 2\nn 3\nE 1 2 1\nC 3 0\n";
    let out = sesx_stdin(&["decompress"], ambiguous);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8(out.stderr).unwrap().contains("corrupted"));

    let mut redundant = parse(good.as_bytes()).unwrap();
    redundant.ses.eq.push(redundant.ses.eq[0]);
    let redundant = render(&redundant);
    assert!(sesx_core::decompress(&parse(redundant.as_bytes()).unwrap().ses, 10).is_ok());
    assert_eq!(code(&sesx_stdin(&["decompress"], redundant.as_bytes())), 3);

    let unsat = b"SESX1\nraw 2\nn 3\nE 1 2 1\nC 1 97\nC 2 98\nC 3 0\n";
    assert_eq!(code(&sesx_stdin(&["decompress"], unsat)), 3);

    let interior_sentinel = b"SESX1\nraw 2\nn 3\nC 1 0\nC 2 97\nC 3 0\n";
    assert_eq!(code(&sesx_stdin(&["decompress"], interior_sentinel)), 3);
    let interior_unique = b"SESX1\nraw 2\nn 3\nE 1 3 1\nC 2 97\nC 3 0\n";
    assert_eq!(code(&sesx_stdin(&["decompress"], interior_unique)), 3);

    let dir = Scratch::new();
    assert_eq!(
        code(&sesx(&["decompress", "--input", s(&dir.path("none"))])),
        1
    );
}

#[test]
fn stats_rows() {
    let out = sesx_stdin(&["stats"], b"aa");
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "n\tsigma\tchi\tr\tz_greedy\teq\tch\tsize\tchi_le_2r"
    );
    let row: Vec<&str> = lines[1].split('\t').collect();
    assert_eq!((row[0], row[1], row[2]), ("3", "2", "2"));
    assert!(row[7].parse::<usize>().unwrap() <= 3);
    assert_eq!(row[8], "true");

    let empty = sesx_stdin(&["stats"], b"");
    let text = String::from_utf8(empty.stdout).unwrap();
    assert_eq!(text.lines().nth(1).unwrap(), "1\t1\t0\t1\t1\t0\t1\t1\ttrue");

    let dir = Scratch::new();
    assert_eq!(code(&sesx(&["stats", "--input", s(&dir.path("none"))])), 1);
}

#[test]
fn stats_on_thue_morse() {
    for k in 4..=14 {
        let tm = sesx(&["gen", "thue-morse", &k.to_string()]);
        let out = sesx_stdin(&["stats"], &tm.stdout);
        let text = String::from_utf8(out.stdout).unwrap();
        let row: Vec<&str> = text.lines().nth(1).unwrap().split('\t').collect();
        assert_eq!(row[0], ((1usize << k) + 1).to_string());
        assert_eq!(row[8], "true", "k={k}");
    }
}

#[test]
fn stats_chi_matches_oracle() {
    for seed in 0..40u64 {
        let raw = random_text(
            seed,
            (seed as usize * 37) % 300,
            [2, 3, 8][seed as usize % 3],
        )
        .unwrap();
        let row = sesx_cli::stats_bytes(&raw).unwrap();
        let w = Text::attach_sentinel(&raw).unwrap();
        assert_eq!(row.chi, naive_sre(&w).unwrap().len());
    }
}

#[test]
fn verify_outcomes() {
    let dir = Scratch::new();
    let a = dir.file("a", b"aabbaababa");
    let b = dir.file("b", b"abbbaababa");
    let (ses_a, _) = compress_bytes(b"aabbaababa").unwrap();
    let (ses_b, _) = compress_bytes(b"abbbaababa").unwrap();
    let sa = dir.file("a.ses", ses_a.as_bytes());
    let sb = dir.file("b.ses", ses_b.as_bytes());
    assert_eq!(code(&sesx(&["verify", s(&a), s(&sa)])), 0);
    assert_eq!(code(&sesx(&["verify", s(&b), s(&sb)])), 0);
    assert_eq!(code(&sesx(&["verify", s(&a), s(&sb)])), 4);
    assert_eq!(code(&sesx(&["verify", s(&b), s(&sa)])), 4);
    assert_eq!(code(&sesx(&["verify", s(&a), s(&dir.path("none"))])), 1);
    let garbage = dir.file("g.ses", b"not a container\n");
    assert_eq!(code(&sesx(&["verify", s(&a), s(&garbage)])), 2);
}

/// Edits a single equation so that the system still has a unique solution,
/// which then differs from the original.
#[test]
fn verify_catches_edited_equation() {
    let original = b"aabbaababa";
    let (good, _) = compress_bytes(original).unwrap();
    let file = parse(good.as_bytes()).unwrap();
    let mut found = None;
    'search: for k in 0..file.ses.eq.len() {
        for i in 1..=file.ses.n {
            let mut edited: SesFile = file.clone();
            edited.ses.eq[k].i = i;
            let rendered = render(&edited);
            if let Ok(out) = sesx_core::decompress(&edited.ses, edited.raw_len) {
                if out != original {
                    found = Some(rendered);
                    break 'search;
                }
            }
        }
    }
    let edited = found.expect("some single-equation edit stays uniquely solvable");
    let dir = Scratch::new();
    let orig = dir.file("orig", original);
    let ses = dir.file("edited.ses", edited.as_bytes());
    let out = sesx(&["verify", s(&orig), s(&ses)]);
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8(out.stderr).unwrap().contains("mismatch"));
    assert_eq!(code(&sesx(&["decompress", "--input", s(&ses)])), 3);
}

#[test]
fn gen_examples() {
    assert_eq!(sesx(&["gen", "thue-morse", "3"]).stdout, b"abbabaab");
    assert_eq!(sesx(&["gen", "fibonacci", "5"]).stdout, b"abaababa");
    let args = [
        "gen", "random", "--seed", "7", "--len", "100", "--sigma", "4",
    ];
    let first = sesx(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout.len(), 100);
    assert_eq!(first.stdout, sesx(&args).stdout);
    assert_ne!(
        first.stdout,
        sesx(&["gen", "random", "--seed", "8", "--len", "100", "--sigma", "4"]).stdout
    );
}

#[test]
fn gen_bad_params() {
    assert_eq!(code(&sesx(&["gen", "thue-morse", "25"])), 2);
    assert_eq!(code(&sesx(&["gen", "thue-morse"])), 2);
    assert_eq!(code(&sesx(&["gen", "fibonacci", "-1"])), 2);
    assert_eq!(
        code(&sesx(&["gen", "random", "--len", "10", "--sigma", "0"])),
        2
    );
    assert_eq!(
        code(&sesx(&["gen", "random", "--len", "10", "--sigma", "256"])),
        2
    );
    assert_eq!(code(&sesx(&["gen", "random", "--sigma", "4"])), 2);
    assert_eq!(code(&sesx(&["gen", "zigzag", "3"])), 2);
}
