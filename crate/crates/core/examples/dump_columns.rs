//! Dev utility: print oracle chart columns for regular and induced cells.
use eo_core::bredon::{chart_column, RepSphereIndex, Summand};

fn show(label: &str, idx: RepSphereIndex) {
    let col = chart_column(&idx);
    let mut parts = Vec::new();
    for (f, ss) in &col {
        for s in ss {
            match s {
                Summand::Free => parts.push(format!("f={f}:Z")),
                Summand::Torsion(t) => parts.push(format!("f={f}:Z/{t}")),
            }
        }
    }
    println!("{label}: {}", parts.join("  "));
}

fn main() {
    println!("== positive regular S^(k rho_4), chart (stem = 4k - f, f) ==");
    for k in 1..=8i64 {
        show(&format!("k={k}"), RepSphereIndex::c4(k, k, k));
    }
    println!("\n== larger k, truncated display ==");
    for k in [10i64, 12, 14] {
        show(&format!("k={k}"), RepSphereIndex::c4(k, k, k));
    }
    println!("\n== negative regular S^(-k rho_4) ==");
    for k in 1..=8i64 {
        show(&format!("k=-{k}"), RepSphereIndex::c4(-k, -k, -k));
    }
    println!("\n== positive induced C2 S^(m rho_2) ==");
    for m in 1..=8i64 {
        show(&format!("m={m}"), RepSphereIndex::c2(m, m));
    }
    println!("\n== negative induced C2 ==");
    for m in 1..=8i64 {
        show(&format!("m=-{m}"), RepSphereIndex::c2(-m, -m));
    }
}
