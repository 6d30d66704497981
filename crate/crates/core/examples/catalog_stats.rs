use bhk_core::catalog::calabi_yau_catalog;
use bhk_core::smoothness::adequacy;
use bhk_core::Characteristic;

fn main() {
    let max: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    let cat = calabi_yau_catalog(max);
    let mut adequate = 0;
    let mut both = 0;
    for (shape, m) in &cat {
        let a = adequacy(m, Characteristic::ZERO).verdict;
        let t = m.transpose(Characteristic::ZERO).unwrap();
        let b = adequacy(&t, Characteristic::ZERO).verdict;
        adequate += a as usize;
        both += (a && b) as usize;
        if !(a && b) || m.det().unsigned_abs() > 2000 {
            continue;
        }
        println!(
            "{:18} det={:5} d={:4} q={:?} h={} qT={:?} hT={} {:?}",
            shape.name,
            m.det(),
            m.exponent(),
            m.weights(),
            m.degree(),
            t.weights(),
            t.degree(),
            m.matrix().0
        );
    }
    eprintln!("total CY {} adequate {} both {}", cat.len(), adequate, both);
}
