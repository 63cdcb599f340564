// dev scratch: print searched base pairs (deleted before ship)
fn main() {
    for n in [4usize, 8] {
        let t0 = std::time::Instant::now();
        let p = antilat::latinmagic::search_normalized_pair(n).unwrap();
        println!("n={} found in {:?}", n, t0.elapsed());
        println!("A = {:?}", p.a);
        println!("B = {:?}", p.b);
    }
}
