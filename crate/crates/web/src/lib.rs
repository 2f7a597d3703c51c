//! Browser bindings. Every export takes plain numbers and returns a JSON
//! string; failures come back as `{"error": "..."}` so the page never has
//! to catch exceptions.

use num_complex::Complex64;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use zetaforge::arithmetic::Discriminant;
use zetaforge::specialfn::{wilton_g_combo, SeriesParams};
use zetaforge::wilton::{classify_trend, convergence_sweep};
use zetaforge::zetavalues::{
    dedekind_zeta_direct, dedekind_zeta_even_real_closed, dedekind_zeta_factored, dedekind_zeta_odd_imaginary,
    zagier_zeta2_imaginary, ZetaValue,
};

type Result<T> = std::result::Result<T, String>;

fn render(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn entry(z: &ZetaValue) -> Value {
    json!({ "route": z.route.name(), "value": z.value.re, "err": z.error_estimate })
}

/// zeta_K(s) for integer s by every applicable route.
pub fn zeta_routes_value(d: i64, s: u32) -> Result<Value> {
    let disc = Discriminant::new(d).map_err(|e| e.to_string())?;
    if s < 2 {
        return Err("s must be at least 2".into());
    }
    let p = SeriesParams::default();
    let sc = Complex64::new(s as f64, 0.0);
    let mut routes = vec![
        dedekind_zeta_direct(disc, sc, &p).map_err(|e| e.to_string())?,
        dedekind_zeta_factored(disc, sc).map_err(|e| e.to_string())?,
    ];
    if d > 0 && s.is_multiple_of(2) {
        routes.push(dedekind_zeta_even_real_closed(disc, s / 2).map_err(|e| e.to_string())?);
    }
    if d < 0 && s % 2 == 1 {
        routes.push(dedekind_zeta_odd_imaginary(disc, s / 2).map_err(|e| e.to_string())?);
    }
    if d < 0 && s == 2 {
        routes.push(zagier_zeta2_imaginary(disc).map_err(|e| e.to_string())?);
    }
    let reference = routes[1].value.re;
    let rows: Vec<Value> = routes
        .iter()
        .map(|z| {
            let mut e = entry(z);
            e["delta"] = json!((z.value.re - reference).abs());
            e
        })
        .collect();
    Ok(json!({ "D": d, "s": s, "routes": rows }))
}

/// Residual reports of the Wilton-type identity for M = m0, 2 m0, 4 m0, ...
pub fn wilton_sweep_value(d: i64, u: f64, v: f64, m0: usize, steps: usize) -> Result<Value> {
    if m0 == 0 || steps == 0 || steps > 12 {
        return Err("need m0 >= 1 and 1 <= steps <= 12".into());
    }
    let ms: Vec<usize> = (0..steps).map(|k| m0 << k).collect();
    let p = SeriesParams::default();
    let reports = convergence_sweep(d, Complex64::new(u, 0.0), Complex64::new(v, 0.0), &ms, &p)
        .map_err(|e| e.to_string())?;
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "M": r.truncation_m,
                "residual": r.residual,
                // JSON has no infinity.
                "tail": if r.tail_estimate.is_finite() { json!(r.tail_estimate) } else { Value::Null },
                "flags": r.flags.iter().map(|f| f.name()).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({
        "D": d, "u": u, "v": v,
        "lhs": reports[0].lhs.re,
        "trend": classify_trend(&reports).name(),
        "reports": rows,
    }))
}

/// The real-field Meijer G combination on a log-spaced grid of x.
pub fn combo_curve_value(u: f64, x_min: f64, x_max: f64, n: usize) -> Result<Value> {
    if !(x_min > 0.0 && x_max > x_min) || !(2..=400).contains(&n) {
        return Err("need 0 < x_min < x_max and 2 <= n <= 400".into());
    }
    let p = SeriesParams::default();
    let ratio = (x_max / x_min).ln() / (n - 1) as f64;
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    let mut flags = Vec::new();
    for k in 0..n {
        let x = x_min * (ratio * k as f64).exp();
        let g = wilton_g_combo(Complex64::new(u, 0.0), x, &p).map_err(|e| e.to_string())?;
        for f in g.flags.iter() {
            if !flags.contains(&f.name()) {
                flags.push(f.name());
            }
        }
        xs.push(x);
        ys.push(g.value.re);
    }
    Ok(json!({ "u": u, "x": xs, "y": ys, "flags": flags }))
}

#[wasm_bindgen]
pub fn zeta_routes(d: i32, s: u32) -> String {
    render(zeta_routes_value(d as i64, s))
}

#[wasm_bindgen]
pub fn wilton_sweep(d: i32, u: f64, v: f64, m0: u32, steps: u32) -> String {
    render(wilton_sweep_value(d as i64, u, v, m0 as usize, steps as usize))
}

#[wasm_bindgen]
pub fn combo_curve(u: f64, x_min: f64, x_max: f64, n: u32) -> String {
    render(combo_curve_value(u, x_min, x_max, n as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_agree_for_minus_seven() {
        let v: Value = serde_json::from_str(&zeta_routes(-7, 2)).unwrap();
        let routes = v["routes"].as_array().unwrap();
        assert_eq!(routes.len(), 3);
        for r in routes {
            let err = r["err"].as_f64().unwrap().max(1e-12);
            assert!((r["value"].as_f64().unwrap() - 1.894_841_448_968_8).abs() <= err, "{r}");
        }
    }

    #[test]
    fn bad_input_is_reported() {
        let v: Value = serde_json::from_str(&zeta_routes(9, 2)).unwrap();
        assert!(v["error"].is_string());
        let v: Value = serde_json::from_str(&wilton_sweep(5, 1.0, 2.0, 10, 3)).unwrap();
        assert!(v["error"].as_str().unwrap().contains("u ≠ 1"));
        let v: Value = serde_json::from_str(&combo_curve(2.5, 1.0, 0.5, 10)).unwrap();
        assert!(v["error"].is_string());
    }

    #[test]
    fn sweep_and_curve_shapes() {
        let v: Value = serde_json::from_str(&wilton_sweep(0, 2.0, 2.0, 100, 3)).unwrap();
        assert_eq!(v["reports"].as_array().unwrap().len(), 3);
        assert_eq!(v["trend"], "decreasing");
        let v: Value = serde_json::from_str(&wilton_sweep(5, 2.3, 2.4, 50, 2)).unwrap();
        assert!(v["reports"][0]["tail"].is_null());
        let v: Value = serde_json::from_str(&combo_curve(2.5, 0.05, 5.0, 30)).unwrap();
        assert_eq!(v["x"].as_array().unwrap().len(), 30);
        assert!((v["x"][29].as_f64().unwrap() - 5.0).abs() < 1e-12);
    }
}
