#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

// Globally adaptive Gauss-Kronrod (G7-K15) quadrature for complex-valued
// integrands of a real variable.
//
// Error control is component-wise: the real and imaginary parts are each
// driven to rel_tol * |component integral| + abs_tol. The two parts of the
// surface integrals differ by many orders of magnitude (the real part is
// the physical rate, the imaginary part a large dispersive diagnostic), so
// a single tolerance on the complex magnitude would leave the real part
// uncontrolled. Each component also carries a roundoff floor proportional
// to the integral of |f| below which refinement cannot help.
//
// The caller supplies the initial panel edges. Refinement bisects the
// panel with the worst normalized error until the targets are met or the
// split budget is exhausted; a spent budget is reported as converged =
// false with the partial value and error estimate attached.

namespace spinflip {

struct QuadratureSettings {
    double rel_tol = 1e-8;
    double abs_tol = 1e-300;
    int max_subdivisions = 60;     ///< bisection budget per adaptive run
    double tail_exponent_cutoff = 45.0;  ///< evanescent tail truncated at 2 u k z = this
};

struct QuadratureOutcome {
    std::complex<double> value{0.0, 0.0};
    double error_re = 0.0;
    double error_im = 0.0;
    std::size_t evaluations = 0;
    int subdivisions = 0;
    bool converged = false;

    double error() const { return std::hypot(error_re, error_im); }
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Nodes are symmetric; index 0 is the center.
inline constexpr double kGK15Nodes[8] = {
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
};
inline constexpr double kK15Weights[8] = {
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
};
// Gauss-7 weights aligned with the odd Kronrod node indices (2, 4, 6) and
// the center.
inline constexpr double kG7Weights[4] = {
    0.417959183673469387755102040816327,   // center
    0.381830050505118944950369775488975,   // +/- nodes[2]
    0.279705391489276667901467771423780,   // +/- nodes[4]
    0.129484966168869693270611432679082,   // +/- nodes[6]
};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    std::complex<double> value{0.0, 0.0};
    double err_re = 0.0;
    double err_im = 0.0;
    double resabs_re = 0.0;  ///< integral of |Re f|
    double resabs_im = 0.0;
    bool splittable = true;
};

template <typename F>
Panel gk15_panel(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::complex<double> samples[15];
    const std::complex<double> fc = f(center);
    samples[0] = fc;
    std::complex<double> k15 = kK15Weights[0] * fc;
    std::complex<double> g7 = kG7Weights[0] * fc;
    double resabs_re = kK15Weights[0] * std::abs(fc.real());
    double resabs_im = kK15Weights[0] * std::abs(fc.imag());

    int n = 1;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK15Nodes[i];
        const std::complex<double> flo = f(center - dx);
        const std::complex<double> fhi = f(center + dx);
        samples[n++] = flo;
        samples[n++] = fhi;
        const std::complex<double> pair = flo + fhi;
        k15 += kK15Weights[i] * pair;
        resabs_re += kK15Weights[i] * (std::abs(flo.real()) + std::abs(fhi.real()));
        resabs_im += kK15Weights[i] * (std::abs(flo.imag()) + std::abs(fhi.imag()));
        if (i % 2 == 0) g7 += kG7Weights[i / 2] * pair;
    }

    Panel p;
    p.a = a;
    p.b = b;
    p.value = half * k15;
    p.resabs_re = half * resabs_re;
    p.resabs_im = half * resabs_im;

    // Kronrod error model: compare against the smoothness scale
    // resasc = integral of |f - mean| so that the (200 d)^{3/2} sharpening
    // only applies once the panel resolves the integrand.
    const std::complex<double> mean = k15 * 0.5;
    double resasc_re = 0.0, resasc_im = 0.0;
    resasc_re += kK15Weights[0] * std::abs(samples[0].real() - mean.real());
    resasc_im += kK15Weights[0] * std::abs(samples[0].imag() - mean.imag());
    n = 1;
    for (int i = 1; i < 8; ++i) {
        for (int s = 0; s < 2; ++s, ++n) {
            resasc_re += kK15Weights[i] * std::abs(samples[n].real() - mean.real());
            resasc_im += kK15Weights[i] * std::abs(samples[n].imag() - mean.imag());
        }
    }
    resasc_re *= half;
    resasc_im *= half;

    auto component_error = [half](double k15_c, double g7_c, double resasc) {
        double d = std::abs(half * (k15_c - g7_c));
        if (resasc != 0.0 && d != 0.0)
            d = resasc * std::min(1.0, std::pow(200.0 * d / resasc, 1.5));
        return d;
    };
    p.err_re = component_error(k15.real(), g7.real(), resasc_re);
    p.err_im = component_error(k15.imag(), g7.imag(), resasc_im);
    return p;
}

}  // namespace detail

/// Integrate f over the union of [edges[i], edges[i+1]] panels with global
/// adaptive bisection. Edges must be strictly increasing.
template <typename F>
QuadratureOutcome integrate_adaptive(F&& f, std::span<const double> edges,
                                     const QuadratureSettings& settings = {}) {
    if (edges.size() < 2) throw std::invalid_argument("integrate_adaptive: need >= 2 edges");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (!(edges[i] < edges[i + 1]))
            throw std::invalid_argument("integrate_adaptive: edges must be increasing");
    if (!(settings.rel_tol > 0.0))
        throw std::invalid_argument("integrate_adaptive: rel_tol must be > 0");

    std::vector<detail::Panel> panels;
    panels.reserve(edges.size() - 1 + static_cast<std::size_t>(std::max(0, settings.max_subdivisions)));
    QuadratureOutcome out;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        panels.push_back(detail::gk15_panel(f, edges[i], edges[i + 1]));
        out.evaluations += 15;
    }

    constexpr double kRoundoffFactor = 100.0 * std::numeric_limits<double>::epsilon();

    auto totals = [&panels] {
        std::complex<double> v{0.0, 0.0};
        double ere = 0.0, eim = 0.0, rre = 0.0, rim = 0.0;
        for (const auto& p : panels) {
            v += p.value;
            ere += p.err_re;
            eim += p.err_im;
            rre += p.resabs_re;
            rim += p.resabs_im;
        }
        return std::tuple{v, ere, eim, rre, rim};
    };

    while (true) {
        auto [value, err_re, err_im, resabs_re, resabs_im] = totals();
        const double tol_re = std::max({settings.rel_tol * std::abs(value.real()),
                                        settings.abs_tol, kRoundoffFactor * resabs_re});
        const double tol_im = std::max({settings.rel_tol * std::abs(value.imag()),
                                        settings.abs_tol, kRoundoffFactor * resabs_im});
        const bool ok_re = err_re <= tol_re;
        const bool ok_im = err_im <= tol_im;
        out.value = value;
        out.error_re = err_re;
        out.error_im = err_im;
        if (ok_re && ok_im) {
            out.converged = true;
            return out;
        }
        if (out.subdivisions >= settings.max_subdivisions) return out;  // budget spent

        // worst panel by error normalized against the component targets
        std::size_t worst = panels.size();
        double worst_score = 0.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (!panels[i].splittable) continue;
            const double score = (ok_re ? 0.0 : panels[i].err_re / tol_re) +
                                 (ok_im ? 0.0 : panels[i].err_im / tol_im);
            if (worst == panels.size() || score > worst_score) {
                worst = i;
                worst_score = score;
            }
        }
        if (worst == panels.size()) return out;  // nothing left to split

        detail::Panel& p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (!(p.a < mid && mid < p.b)) {
            p.splittable = false;  // width at machine resolution
            continue;
        }
        detail::Panel left = detail::gk15_panel(f, p.a, mid);
        detail::Panel right = detail::gk15_panel(f, mid, p.b);
        out.evaluations += 30;
        ++out.subdivisions;
        p = left;
        panels.push_back(right);
    }
}

}  // namespace spinflip
