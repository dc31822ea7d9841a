use panhandle::cable::{reverse_cable_homfly, FramingVector};
use panhandle::reference::TABLES;
use panhandle::TorusParams;

fn compare(id: u32) -> (bool, String) {
    let t = TABLES.iter().find(|t| t.id == id).unwrap();
    let tp = TorusParams::new(t.m, t.n).unwrap();
    let ours = reverse_cable_homfly(tp, &FramingVector(t.framing.to_vec())).unwrap();
    let csv = ours.to_csv();
    (csv == t.csv, csv)
}

#[test]
fn knot_tables_are_exact() {
    for id in 1..=4 {
        let (ok, csv) = compare(id);
        assert!(ok, "table {id}:\n{csv}");
    }
}

#[test]
#[ignore]
fn table_five_probe() {
    let (ok, csv) = compare(5);
    println!("{ok}\n{csv}");
    let tp = TorusParams::new(3, 42).unwrap();
    let t0 = std::time::Instant::now();
    let p = reverse_cable_homfly(tp, &FramingVector(vec![0, 0, 0])).unwrap();
    println!("{:?} z1v83={} z1v55={}", t0.elapsed(), p.coeff(1, 83), p.coeff(1, 55));
}
