//! Truncated power series: ordinary and Hadamard products, inverses, and the
//! substitution pair u = 4t/(1+t)^2, v = its compositional inverse.

use permcluster::series::{u_series, v_series};
use permcluster::{Series, Truncation, Var};

fn main() -> permcluster::Result<()> {
    let tr = Truncation::tx(5, 3);
    let t = Series::var(Var::T, tr);
    let x = Series::var(Var::X, tr);
    let one = Series::one(tr);

    let f = &one - &(&t * &x);
    println!("1/(1 - t x) = {}", f.invert()?);

    let a = (&one - &t).invert()?.pow(2);
    let b = &one + &(&t * &x);
    println!("1/(1-t)^2 * (1 + t x) in Hadamard = {}", a.hadamard_t(&b));
    println!("Hadamard inverse of 1/(1-t)^2 = {}", a.hadamard_inv()?);

    let tr = Truncation::tx(8, 0);
    let u = u_series(tr)?;
    let v = v_series(tr)?;
    println!("u = {u}");
    println!("v = {v}");
    println!("u(v(t)) = {}", u.substitute(Var::T, &v)?);
    Ok(())
}
