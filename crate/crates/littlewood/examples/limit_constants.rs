//! The two limit constants and the integrals behind them.
//!
//! The reciprocal limit is Gamma(1/4)^2/(4 sqrt(2) pi^3) and the skew limit
//! 1/(2 pi^(3/2)). Each arises as a prefactor times an integral over the
//! sector opening:
//!
//! ```text
//! int_0^1 dt / sqrt(1 + sin^2(pi t/2))   = Gamma(1/4)^2 / sqrt(8 pi^3)
//! int_0^1 dt / sqrt(1 + sinh^2(2 a t))   = pi / (8 a),  a = log sqrt(1+sqrt 2)
//! ```
//!
//! Both integrals are evaluated by adaptive quadrature to 1e-12 and compared
//! against their closed forms, and the consistency chain tying them to the
//! limit constants is checked to 1e-9.
//!
//! ```bash
//! cargo run --release -p littlewood --example limit_constants
//! ```

use littlewood::asymptotics::{
    alpha, gamma_quarter, limit_constant, quadrature_limit_integral, self_check_constants,
};
use littlewood::Family;
use std::f64::consts::PI;

fn main() {
    self_check_constants().expect("embedded constants pass their independent checks");
    println!("Gamma(1/4) = {:.15}", gamma_quarter());
    println!("alpha      = {:.15}\n", alpha());

    for family in [Family::Reciprocal, Family::Skew] {
        let q = quadrature_limit_integral(family);
        let c = limit_constant(family);
        println!("{family}:");
        println!("  quadrature  = {:.12}", q.value);
        println!("  closed form = {:.12}  (|diff| = {:.2e})", q.closed_form, (q.value - q.closed_form).abs());
        println!("  limit       = {:.12}", c);
        let prefactor = match family {
            Family::Reciprocal => 1.0 / (2.0 * PI.powf(1.5)),
            Family::Skew => 4.0 * alpha() / PI.powf(2.5),
        };
        let chained = prefactor * q.closed_form;
        println!(
            "  prefactor * integral = {:.12}  (|diff from limit| = {:.2e})\n",
            chained,
            (chained - c).abs()
        );
        assert!((q.value - q.closed_form).abs() < 1e-9);
        assert!((chained - c).abs() < 1e-9);
    }
}
