//! Development probe: balance of group vs space across the etale items.

use std::collections::BTreeMap;

fn main() {
    let items = prehomog_core::catalog::etale_items(260);
    let mut by_prefix: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for it in &items {
        let prefix: String = it.id.split('(').next().unwrap_or(&it.id).to_string();
        let g = it.spec.group_dim() as i64;
        let s = it.spec.space_dim().unwrap() as i64;
        let e = by_prefix.entry(prefix).or_insert((0, 0));
        e.0 += 1;
        if g != s {
            e.1 += 1;
            if e.1 <= 3 {
                println!("UNBALANCED {} g={} s={}", it.id, g, s);
            }
        }
    }
    println!("--- counts (total, unbalanced) ---");
    for (k, v) in by_prefix {
        println!("{k}: {} / {}", v.0, v.1);
    }
}
