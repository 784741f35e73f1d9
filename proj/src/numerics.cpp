#include "hbflow/numerics.hpp"
#include "hbflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace hbflow::num {

tolerance& default_root_tol() {
    static tolerance t{1e-12, 1e-10, 200};
    return t;
}

tolerance& default_quad_tol() {
    static tolerance t{1e-12, 1e-10, 200};
    return t;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const tolerance& tol) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw bracket_error("find_root: no sign change on the supplied bracket");

    // Brent: b is the current best, a the previous iterate, c brackets b.
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double eps = std::numeric_limits<double>::epsilon();
        const double tol1 =
            0.5 * (tol.abs_tol + tol.rel_tol * std::fabs(b)) + 2.0 * eps * std::fabs(b);
        const double xm = 0.5 * (c - b);
        // Stop on bracket collapse only: an |f| <= abs_tol stop would bail
        // out early whenever the residual scale is far below abs_tol (the
        // stiff large-B regime), leaving x-accuracy unbounded.
        if (std::fabs(xm) <= tol1 || fb == 0.0)
            return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // inverse quadratic interpolation, or secant when a == c
            const double s = fb / fa;
            double pp, q;
            if (a == c) {
                pp = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double rr = fb / fc;
                pp = s * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
                q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (pp > 0.0) q = -q;
            pp = std::fabs(pp);
            if (2.0 * pp < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = pp / q;
            } else {
                d = xm; e = d; // interpolation rejected: bisect
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    throw convergence_error("find_root: iteration cap reached", b);
}

namespace {

// Gauss-Kronrod 7/15 nodes and weights (positive half, node 7 is the center).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct segment {
    double a, b;      // bounds
    double integral;  // K15 estimate
    double err;       // |K15 - G7|
};

segment evaluate(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double k15 = wgk[7] * f(c);
    double g7 = wg[3] * f(c);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const double sum = f(c - dx) + f(c + dx);
        k15 += wgk[j] * sum;
        if (j % 2 == 1) g7 += wg[j / 2] * sum;
    }
    k15 *= h;
    g7 *= h;
    if (!std::isfinite(k15))
        throw quadrature_error("integrate: non-finite integrand sample", k15,
                               std::numeric_limits<double>::infinity());
    return {a, b, k15, std::fabs(k15 - g7)};
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const tolerance& tol) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) { std::swap(a, b); sign = -1.0; }

    std::vector<segment> segs;
    segs.push_back(evaluate(f, a, b));
    const std::size_t max_segments =
        static_cast<std::size_t>(std::max(tol.max_iter, 1)) * 50;

    for (;;) {
        double total = 0.0, err = 0.0;
        for (const segment& s : segs) {
            total += s.integral;
            err += s.err;
        }
        if (err <= std::max(tol.abs_tol, tol.rel_tol * std::fabs(total)))
            return sign * total;
        if (segs.size() >= max_segments)
            throw quadrature_error("integrate: subdivision budget exhausted",
                                   sign * total, err);
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        const segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b)
            throw quadrature_error("integrate: interval collapsed below machine width",
                                   sign * s.integral, s.err);
        segs[worst] = evaluate(f, s.a, mid);
        segs.push_back(evaluate(f, mid, s.b));
    }
}

double derivative(const std::function<double(double)>& f, double x, double h) {
    if (h <= 0.0) h = std::max(1e-6, 1e-6 * std::fabs(x));
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace hbflow::num
