// The text forms accepted by the tool, and what parsing errors look like.

use hyperdiff::cli::{parse_hyper, parse_input, parse_mb, print_hyper, print_mb};

fn main() {
    let f = parse_hyper("3F2[1/2+eps, -eps, 1; 3/2-2*eps, 1+eps; -1/4*x]").unwrap();
    println!("{}", print_hyper(&f));
    assert_eq!(parse_hyper(&print_hyper(&f)).unwrap(), f);

    let m = parse_mb("MB{ symbols: j1, j2; kappa: -1/4; var: z; A: j1+j2-n/2, j1, j2, n/2; B: n/2, (j1+j2)/2, (j1+j2+1)/2; C: ; D: }").unwrap();
    println!("{}", print_mb(&m));
    assert_eq!(parse_mb(&print_mb(&m)).unwrap(), m);

    for bad in ["2F1[a; b; z]", "2F1[1, eps^2; 1; z]", "MB{ kappa: 1; A: x }", "gauss(p1=1"] {
        println!("{bad:28} -> {}", parse_input(bad).unwrap_err());
    }
}
