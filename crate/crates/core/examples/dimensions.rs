use bmw_cellular::towers::Tower;

fn main() {
    for n in 1..=6 {
        let (total, rows) = Tower::dimension_check(n).unwrap();
        println!("n={}: sum of squares {}", n, total);
        for (lambda, paths, cells) in rows {
            println!("  {}: {} paths, {} cellular basis vectors", lambda, paths, cells);
        }
    }
}
