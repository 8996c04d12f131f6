use bmw_cellular::combin::Partition;
use bmw_cellular::exactring::{AlgebraKind, Specialization};
use bmw_cellular::specsim::{hom_obstruction, necessary_condition_note};

fn main() {
    let s = Specialization::parse(AlgebraKind::Bmw, "r=-q^-3").unwrap();
    let (lambda, mu) = (Partition::of(&[1]), Partition::of(&[3]));
    let possible = hom_obstruction(AlgebraKind::Bmw, &mu, &lambda, 3, &s).unwrap();
    println!("Hom(S^{}, S^{}) may be nonzero: {}", mu, lambda, possible);
    let note = necessary_condition_note(&s, 24).unwrap();
    println!("r = sign * q^k: {:?}", note.r_power);

    let s = Specialization::parse(AlgebraKind::Brauer, "z=4").unwrap();
    for mu in Partition::cell_shapes(3) {
        let lambda = Partition::of(&[3]);
        if mu.size() <= lambda.size() {
            let ok = hom_obstruction(AlgebraKind::Brauer, &lambda, &mu, 3, &s).unwrap();
            println!("z=4: Hom(S^{}, S^{}) may be nonzero: {}", lambda, mu, ok);
        }
    }
}
