#include "hrs/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hrs {

namespace {

double simpson_recurse(const std::function<double(double)>& f, double a, double b,
                       double fa, double fm, double fb, double whole, double tol,
                       int depth, int max_depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // second acceptance clause: the panel difference has reached the
    // round-off floor of the panel values themselves
    if (std::abs(delta) <= 15.0 * tol ||
        std::abs(delta) <= 1e-14 * (std::abs(left) + std::abs(right)) || (b - a) < 1e-300) {
        return left + right + delta / 15.0;
    }
    if (depth >= max_depth) {
        throw std::runtime_error("integrate_simpson: tolerance unreachable at max depth");
    }
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

// G7/K15 nodes and weights on [-1, 1] (QUADPACK constants).
constexpr double kKronrodNodes[8] = {
    0.0,
    0.2077849550078985,
    0.4058451513773972,
    0.5860872354676911,
    0.7415311855993945,
    0.8648644233597691,
    0.9491079123427585,
    0.9914553711208126,
};
constexpr double kKronrodWeights[8] = {
    0.2094821410847278,
    0.2044329400752989,
    0.1903505780647854,
    0.1690047266392679,
    0.1406532597155259,
    0.1047900103222502,
    0.0630920926299785,
    0.0229353220105292,
};
// Gauss weights aligned with the even Kronrod node indices {0, 2, 4, 6}.
constexpr double kGaussWeights[4] = {
    0.4179591836734694,
    0.3818300505051189,
    0.2797053914892767,
    0.1294849661688697,
};

struct GkPanel {
    double kronrod;
    double err;
};

GkPanel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fk[8], fk_neg[8];
    fk[0] = f(c);
    fk_neg[0] = fk[0];
    for (int i = 1; i < 8; ++i) {
        fk[i] = f(c + h * kKronrodNodes[i]);
        fk_neg[i] = f(c - h * kKronrodNodes[i]);
    }
    double kr = kKronrodWeights[0] * fk[0];
    for (int i = 1; i < 8; ++i) kr += kKronrodWeights[i] * (fk[i] + fk_neg[i]);
    double gs = kGaussWeights[0] * fk[0];
    for (int i = 1; i < 4; ++i) gs += kGaussWeights[i] * (fk[2 * i] + fk_neg[2 * i]);
    kr *= h;
    gs *= h;
    return {kr, std::abs(kr - gs)};
}

double gk_recurse(const std::function<double(double)>& f, double a, double b, double tol,
                  int depth, int max_depth) {
    const GkPanel p = gk15(f, a, b);
    if (p.err <= tol || p.err <= 1e-14 * std::abs(p.kronrod) || (b - a) < 1e-300) {
        return p.kronrod;
    }
    if (depth >= max_depth) {
        throw std::runtime_error("integrate_gauss_kronrod: tolerance unreachable at max depth");
    }
    const double m = 0.5 * (a + b);
    return gk_recurse(f, a, m, 0.5 * tol, depth + 1, max_depth) +
           gk_recurse(f, m, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         QuadratureOptions opt) {
    if (!(a < b)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // coarse magnitude estimate for the absolute budget; refined once
    double scale = std::abs(whole);
    double result = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
        const double tol = opt.rel_tol * std::max(scale, 1e-300);
        result = simpson_recurse(f, a, b, fa, fm, fb, whole, tol, 0, opt.max_depth);
        if (std::abs(result) >= 0.25 * scale || result == 0.0) break;
        scale = std::abs(result);
    }
    return result;
}

double integrate_gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                               QuadratureOptions opt) {
    if (!(a < b)) return 0.0;
    const GkPanel whole = gk15(f, a, b);
    double scale = std::abs(whole.kronrod);
    double result = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
        const double tol = opt.rel_tol * std::max(scale, 1e-300);
        result = gk_recurse(f, a, b, tol, 0, opt.max_depth);
        if (std::abs(result) >= 0.25 * scale || result == 0.0) break;
        scale = std::abs(result);
    }
    return result;
}

}  // namespace hrs
