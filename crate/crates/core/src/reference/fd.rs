/// Central difference of order 1 or 2 with step `h`, accurate to `O(h²)`.
///
/// # Panics
/// If `order` is not 1 or 2, or `h` is not positive.
pub fn fd_derivative(f: impl Fn(f64) -> f64, t: f64, order: u8, h: f64) -> f64 {
    assert!(h > 0.0, "step must be positive");
    match order {
        1 => (f(t + h) - f(t - h)) / (2.0 * h),
        2 => (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h),
        _ => panic!("finite differences support order 1 or 2, got {order}"),
    }
}
