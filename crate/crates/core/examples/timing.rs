use std::time::Instant;

use coalglab::acceptance::{run_criterion, AcceptanceConfig};

fn main() {
    let cfg = AcceptanceConfig::default();
    let ids: Vec<u8> = std::env::args().skip(1).map(|a| a.parse().unwrap()).collect();
    for id in if ids.is_empty() { (1..10).collect() } else { ids } {
        let t = Instant::now();
        let r = run_criterion(id, &cfg);
        print!("{r}");
        println!("  elapsed {:.1?}", t.elapsed());
    }
}
