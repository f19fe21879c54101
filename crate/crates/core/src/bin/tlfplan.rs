fn main() {
    let d: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let t = std::time::Instant::now();
    let fams = tlf_planar::enumerate::enumerate_schemes(d).unwrap();
    let (p, a) = tlf_planar::enumerate::family_counts(&fams);
    println!("degree {d}: P={p} A={a}  ({:?})", t.elapsed());
    for f in &fams {
        println!("{} {} {} {}", f.ptv, f.connectivity, f.aperiodic, f.key);
    }
}
