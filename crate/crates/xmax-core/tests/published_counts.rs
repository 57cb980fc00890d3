use xmax_core::catalog::build_group;
use xmax_core::Caps;

#[test]
fn published_subgroup_counts() {
    // counts from the standard literature on small-group subgroup lattices
    for (name, count) in [
        ("Alt(4)", 10),
        ("Sym(5)", 156),
        ("Alt(5)", 59),
        ("Alt(6)", 501),
        ("PSL(2,7)", 179),
        ("D(8)", 10),
        ("Q(8)", 6),
        ("Q(16)", 11),
        ("Sym(6)", 1455),
    ] {
        let g = build_group(name, &Caps::default()).unwrap();
        let got = g.lattice().unwrap().subgroup_count();
        assert_eq!(got, count, "{name}");
    }
}
