//! Adaptive Gauss–Kronrod (7/15) quadrature on finite intervals.

/// Result of an adaptive integration: the value and the accumulated
/// Kronrod–Gauss error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
}

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

// Gauss weights for the 7-point rule living on XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Quadrature {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let pair = f(c - dx) + f(c + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Quadrature {
        value: kronrod * h,
        error: ((kronrod - gauss) * h).abs(),
    }
}

/// Integrates `f` over `[a, b]`, bisecting until each piece meets its share
/// of `tol` or `max_depth` is reached.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, max_depth: u32) -> Quadrature {
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        whole: Quadrature,
        tol: f64,
        depth: u32,
    ) -> Quadrature {
        if whole.error <= tol || depth == 0 {
            return whole;
        }
        let m = 0.5 * (a + b);
        let left = gk15(f, a, m);
        let right = gk15(f, m, b);
        let l = recurse(f, a, m, left, 0.5 * tol, depth - 1);
        let r = recurse(f, m, b, right, 0.5 * tol, depth - 1);
        Quadrature {
            value: l.value + r.value,
            error: l.error + r.error,
        }
    }
    if a == b {
        return Quadrature { value: 0.0, error: 0.0 };
    }
    let whole = gk15(&f, a, b);
    recurse(&f, a, b, whole, tol, max_depth)
}

/// Integrates over consecutive panels `[edges[i], edges[i+1]]`, summing
/// values and error estimates.
pub fn integrate_panels<F: Fn(f64) -> f64>(f: F, edges: &[f64], tol_per_panel: f64) -> Quadrature {
    edges.windows(2).fold(Quadrature { value: 0.0, error: 0.0 }, |acc, w| {
        let q = integrate(&f, w[0], w[1], tol_per_panel, 30);
        Quadrature {
            value: acc.value + q.value,
            error: acc.error + q.error,
        }
    })
}
