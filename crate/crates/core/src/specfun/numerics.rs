//! Small numerical helpers shared by the special-function evaluators.

/// Neumaier-compensated running sum that also tracks sum |x_i|.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
    abs_sum: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs_sum += x.abs();
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub(crate) fn abs_sum(&self) -> f64 {
        self.abs_sum
    }
}

// 15-point Kronrod nodes on [-1, 1] (nonnegative half) with the embedded
// 7-point Gauss weights at the odd indices.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// (kronrod estimate, |kronrod - gauss|, integral of |f|)
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs = fc.abs() * WGK[7];
    for j in 0..7 {
        let dx = h * XGK[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        kron += WGK[j] * (f1 + f2);
        abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    (kron * h, ((kron - gauss) * h).abs(), abs * h.abs())
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Quadrature {
    pub value: f64,
    pub est_abs_error: f64,
    pub evaluations: usize,
}

/// Adaptive Gauss-Kronrod over the listed breakpoints. Subdivides the
/// interval with the largest error until the total error is below `tol` or
/// `max_intervals` is reached.
pub(crate) fn integrate<F: Fn(f64) -> f64>(
    f: F,
    breakpoints: &[f64],
    tol: f64,
    max_intervals: usize,
) -> Quadrature {
    let mut pieces: Vec<(f64, f64, f64, f64, f64)> = Vec::new();
    let mut evaluations = 0;
    for w in breakpoints.windows(2) {
        if w[1] > w[0] {
            let (v, e, a) = gk15(&f, w[0], w[1]);
            evaluations += 15;
            pieces.push((w[0], w[1], v, e, a));
        }
    }
    loop {
        let err: f64 = pieces.iter().map(|p| p.3).sum();
        if err <= tol || pieces.len() >= max_intervals {
            break;
        }
        let (idx, _) = pieces
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("at least one interval");
        let (a, b, ..) = pieces.swap_remove(idx);
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            // interval cannot be split further in floating point
            let (v, e, abs) = gk15(&f, a, b);
            pieces.push((a, b, v, e.min(f64::EPSILON * abs), abs));
            continue;
        }
        let (v1, e1, a1) = gk15(&f, a, m);
        let (v2, e2, a2) = gk15(&f, m, b);
        evaluations += 30;
        pieces.push((a, m, v1, e1, a1));
        pieces.push((m, b, v2, e2, a2));
    }
    let mut value = CompensatedSum::default();
    let mut est = 0.0;
    let mut abs_integral = 0.0;
    for p in &pieces {
        value.add(p.2);
        est += p.3;
        abs_integral += p.4;
    }
    Quadrature {
        value: value.value(),
        est_abs_error: est + 50.0 * f64::EPSILON * abs_integral,
        evaluations,
    }
}
