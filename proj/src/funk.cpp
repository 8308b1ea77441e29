#include "radon/funk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radon::funk {

namespace {
constexpr double pi = std::numbers::pi;
}

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vec3 normalize(const Vec3& a) {
    double n = std::sqrt(dot(a, a));
    if (n == 0) throw std::invalid_argument("normalize: zero vector");
    return {a.x / n, a.y / n, a.z / n};
}

GreatCircle GreatCircle::from_normal(const Vec3& n) {
    GreatCircle c;
    c.normal = normalize(n);
    // pick the coordinate axis least aligned with the normal
    Vec3 axis{1, 0, 0};
    double ax = std::abs(c.normal.x), ay = std::abs(c.normal.y), az = std::abs(c.normal.z);
    if (ay <= ax && ay <= az)
        axis = {0, 1, 0};
    else if (az <= ax && az <= ay)
        axis = {0, 0, 1};
    c.u = normalize(cross(axis, c.normal));
    c.v = cross(c.normal, c.u);
    return c;
}

Vec3 GreatCircle::point(double t) const {
    double ct = std::cos(t), st = std::sin(t);
    return {ct * u.x + st * v.x, ct * u.y + st * v.y, ct * u.z + st * v.z};
}

uint64_t Rng::next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Vec3 random_unit(Rng& rng) {
    double z = 1.0 - 2.0 * rng.uniform();
    double phi = 2.0 * pi * rng.uniform();
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

namespace {

// associated Legendre P_l^m(x) without the Condon-Shortley factor
double assoc_legendre(int l, int m, double x) {
    double somx2 = std::sqrt(std::max(0.0, 1.0 - x * x));
    double pmm = 1.0;
    for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0) * somx2;
    if (l == m) return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pmmp1;
    double pll = 0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = ((2.0 * ll - 1.0) * x * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

double norm_factor(int l, int m) {
    double f = (2.0 * l + 1.0) / (4.0 * pi);
    for (int k = l - m + 1; k <= l + m; ++k) f /= k;
    return std::sqrt(f);
}

}  // namespace

double eval_harmonic(const HarmonicSpec& h, const Vec3& p) {
    if (h.l < 0 || std::abs(h.m) > h.l) throw std::invalid_argument("eval_harmonic: need |m| <= l");
    double r2 = dot(p, p);
    if (std::abs(r2 - 1.0) > 1e-12) throw std::invalid_argument("eval_harmonic: point not on the unit sphere");
    int am = std::abs(h.m);
    double theta = std::acos(std::clamp(p.z, -1.0, 1.0));
    double phi = std::atan2(p.y, p.x);
    double base = norm_factor(h.l, am) * assoc_legendre(h.l, am, std::cos(theta));
    if (h.m == 0) return base;
    double sq2 = std::numbers::sqrt2;
    return h.m > 0 ? sq2 * base * std::cos(am * phi) : sq2 * base * std::sin(am * phi);
}

double legendre_P(int l, double x) {
    if (l < 0) throw std::invalid_argument("legendre_P: l >= 0");
    double p0 = 1.0, p1 = x;
    if (l == 0) return p0;
    for (int k = 2; k <= l; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double legendre_P0(int l) {
    if (l % 2 == 1) return 0.0;
    // P_0(0) = 1, P_l(0) = -P_{l-2}(0) * (l-1)/l for even l
    double v = 1.0;
    for (int k = 2; k <= l; k += 2) v *= -(k - 1.0) / k;
    return v;
}

double funk_transform(const std::function<double(const Vec3&)>& f, const GreatCircle& c, int n) {
    if (n < 4) throw std::invalid_argument("funk_transform: need at least 4 samples");
    double acc = 0;
    for (int k = 0; k < n; ++k) acc += f(c.point(2.0 * pi * k / n));
    return acc / n;
}

namespace {

RatioResult hecke_fit(int l, const std::vector<int>& orders, int trials, uint64_t seed, int samples) {
    if (trials < 1) throw std::invalid_argument("funk_hecke_ratio: trials must be positive");
    Rng rng(seed);
    double sxy = 0, sxx = 0, maxabs = 0;
    std::vector<std::pair<double, double>> pts;
    for (int t = 0; t < trials; ++t) {
        GreatCircle c = GreatCircle::from_normal(random_unit(rng));
        for (int m : orders) {
            HarmonicSpec h{l, m};
            double tau = funk_transform([&](const Vec3& p) { return eval_harmonic(h, p); }, c, samples);
            double y = eval_harmonic(h, c.normal);
            sxy += y * tau;
            sxx += y * y;
            maxabs = std::max(maxabs, std::abs(tau));
            pts.emplace_back(y, tau);
        }
    }
    if (sxx < 1e-12) throw std::invalid_argument("funk_hecke_ratio: degenerate trial set");
    RatioResult r;
    r.ratio = sxy / sxx;
    r.max_abs_transform = maxabs;
    double rss = 0;
    for (auto [y, tau] : pts) rss += (tau - r.ratio * y) * (tau - r.ratio * y);
    r.residual = std::sqrt(rss / static_cast<double>(pts.size()));
    return r;
}

}  // namespace

RatioResult funk_hecke_ratio(int l, int trials, uint64_t seed, int samples) {
    std::vector<int> orders;
    for (int m = -l; m <= l; ++m) orders.push_back(m);
    return hecke_fit(l, orders, trials, seed, samples);
}

RatioResult funk_hecke_ratio_m(int l, int m, int trials, uint64_t seed, int samples) {
    return hecke_fit(l, {m}, trials, seed, samples);
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0);
    w.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = t;
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

}  // namespace

double sphere_integral(const std::function<double(const Vec3&)>& f, int glpoints, int azimuthal) {
    std::vector<double> x, w;
    gauss_legendre(glpoints, x, w);
    double acc = 0;
    for (int i = 0; i < glpoints; ++i) {
        double z = x[i], r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double ring = 0;
        for (int j = 0; j < azimuthal; ++j) {
            double phi = 2.0 * pi * j / azimuthal;
            ring += f({r * std::cos(phi), r * std::sin(phi), z});
        }
        acc += w[i] * ring * (2.0 * pi / azimuthal);
    }
    return acc;
}

NormReport boundedness_check(const std::vector<HarmonicCoeff>& coeffs, int n_circles, uint64_t seed,
                             int samples) {
    int lmax = 0;
    for (const auto& c : coeffs) lmax = std::max(lmax, c.h.l);
    auto f = [&](const Vec3& p) {
        double v = 0;
        for (const auto& c : coeffs) v += c.c * eval_harmonic(c.h, p);
        return v;
    };
    NormReport rep;
    // exact-degree product quadrature for the input norm; harmonics are
    // orthonormal for the surface measure, so ||Y_l^m|| = 1 in this convention
    double in2 = sphere_integral([&](const Vec3& p) { double v = f(p); return v * v; },
                                 2 * lmax + 2, 4 * lmax + 4);
    rep.norm_in = std::sqrt(std::max(0.0, in2));

    // Monte Carlo over uniform circle normals, total mass matched to 4 pi
    Rng rng(seed);
    double s1 = 0, s2 = 0;
    for (int i = 0; i < n_circles; ++i) {
        GreatCircle c = GreatCircle::from_normal(random_unit(rng));
        double tau = funk_transform(f, c, samples);
        s1 += tau * tau;
        s2 += tau * tau * tau * tau;
    }
    double mean = s1 / n_circles;
    double var = std::max(0.0, s2 / n_circles - mean * mean);
    double out2 = 4.0 * pi * mean;
    double out2_se = 4.0 * pi * std::sqrt(var / n_circles);
    rep.norm_out = std::sqrt(out2);
    rep.stderr_out = rep.norm_out > 1e-12 ? out2_se / (2.0 * rep.norm_out) : std::sqrt(out2_se);
    return rep;
}

Vec3 Rot3::apply(const Vec3& p) const {
    return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
            m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
            m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
}

Rot3 random_rotation(Rng& rng) {
    // rotation from a uniform axis and angle via Rodrigues' formula
    Vec3 a = random_unit(rng);
    double ang = 2.0 * pi * rng.uniform();
    double c = std::cos(ang), s = std::sin(ang), t = 1.0 - c;
    Rot3 r;
    r.m = {{{t * a.x * a.x + c, t * a.x * a.y - s * a.z, t * a.x * a.z + s * a.y},
            {t * a.x * a.y + s * a.z, t * a.y * a.y + c, t * a.y * a.z - s * a.x},
            {t * a.x * a.z - s * a.y, t * a.y * a.z + s * a.x, t * a.z * a.z + c}}};
    return r;
}

}  // namespace radon::funk
