// temporary timing probe
use krall::closed::Koornwinder;
use krall::{Rational, Ring, Var};

fn main() {
    let kw = Koornwinder::new(Rational::new(1, 2), Rational::from(0)).unwrap();
    let y = kw.y(2).unwrap();
    let z = kw.z(2).unwrap();
    let dy = y.deriv(Var::T1);
    let p1 = y.clone() * z.clone();
    let p2 = p1.clone() * p1.clone();

    println!("p2 num ({},{}) den ({},{})", p2.num().deg1(), p2.num().deg2(), p2.den().deg1(), p2.den().deg2());
    println!("dy num ({},{}) den ({},{})", dy.num().deg1(), dy.num().deg2(), dy.den().deg1(), dy.den().deg2());

    let t0 = std::time::Instant::now();
    let g = p2.den().gcd(dy.den());
    println!("gcd dens: {:?} -> ({},{})", t0.elapsed(), g.deg1(), g.deg2());

    let t0 = std::time::Instant::now();
    let bp = p2.den().exact_div(&g).unwrap();
    let dp = dy.den().exact_div(&g).unwrap();
    println!("exact divs: {:?}", t0.elapsed());

    let t0 = std::time::Instant::now();
    let t = p2.num().clone() * dp.clone() + dy.num().clone() * bp.clone();
    println!("cross mults: {:?} t=({},{})", t0.elapsed(), t.deg1(), t.deg2());

    let t0 = std::time::Instant::now();
    let h = t.gcd(&g);
    println!("gcd(t,g): {:?} -> ({},{})", t0.elapsed(), h.deg1(), h.deg2());

    let t0 = std::time::Instant::now();
    let _s = p2.clone() + dy.clone();
    println!("full add: {:?}", t0.elapsed());
}
