use qaff_core::engine::Engine;
use qaff_core::lattice::AlgebraConfig;
use qaff_core::truncation::Truncation;

fn main() {
    for cfg in [AlgebraConfig::a1(), AlgebraConfig::c2()] {
        let eng = Engine::new(cfg);
        let t = Truncation::new(3, 2, 2);
        let start = std::time::Instant::now();
        let mut all = eng.drinfeld_relation_suite(&t).unwrap();
        println!("theta={} relations: {} in {:?}", cfg.theta(), all.len(), start.elapsed());
        let start = std::time::Instant::now();
        all.extend(eng.nr4_cross_reference(&t).unwrap());
        all.extend(eng.drinfeld_counit_checks(t.mode_cap).unwrap());
        println!("  cross+counit {:?}", start.elapsed());
        let start = std::time::Instant::now();
        let t1 = Truncation::new(1, 2, 2);
        all.extend(eng.twist_check(&t1).unwrap());
        println!("  twist {:?}", start.elapsed());
        let start = std::time::Instant::now();
        all.push(eng.drinfeld_rmatrix_check(&t1).unwrap());
        println!("  nr15=nr16 {:?}", start.elapsed());
        let start = std::time::Instant::now();
        all.extend(eng.residue_suite(&Truncation::new(3, 2, 1)).unwrap());
        println!("  residue {:?}", start.elapsed());
        let fails: Vec<_> = all.iter().filter(|r| !r.passed()).collect();
        println!("  total {} fails {}", all.len(), fails.len());
        for f in fails.iter().take(10) {
            println!("  FAIL {f}");
        }
    }
}
