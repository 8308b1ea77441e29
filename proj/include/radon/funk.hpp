#pragma once

// Numerical Funk transform on the 2-sphere: real orthonormal spherical
// harmonics (no Condon-Shortley phase), great-circle trapezoid quadrature,
// Funk-Hecke ratios against Legendre values P_l(0), and an L2 boundedness
// check by Monte Carlo over circles.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace radon::funk {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 normalize(const Vec3& a);

struct GreatCircle {
    Vec3 normal, u, v;  // {u, v, normal} right-handed orthonormal

    static GreatCircle from_normal(const Vec3& n);
    Vec3 point(double t) const;  // cos(t) u + sin(t) v
};

// deterministic splitmix64 stream; identical across platforms
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next();
    double uniform();  // [0, 1)
};

Vec3 random_unit(Rng& rng);

struct HarmonicSpec {
    int l = 0, m = 0;  // |m| <= l
};

// real orthonormal spherical harmonic at a unit point (tolerance 1e-12)
double eval_harmonic(const HarmonicSpec& h, const Vec3& p);

double legendre_P(int l, double x);
double legendre_P0(int l);  // P_l(0) by the exact recurrence

// normalized great-circle average, trapezoid rule with n >= 4 samples
double funk_transform(const std::function<double(const Vec3&)>& f, const GreatCircle& c, int n);

struct RatioResult {
    double ratio = 0;              // least-squares tau(Y)/Y(normal) over circles and orders
    double max_abs_transform = 0;  // sup of |tau(Y_l^m)| over the trials
    double residual = 0;           // rms deviation from the fitted ratio
};

// least-squares Funk-Hecke ratio for degree l over `trials` seeded circles
RatioResult funk_hecke_ratio(int l, int trials, uint64_t seed = 42, int samples = 64);

// per-order variant used by the CLI table
RatioResult funk_hecke_ratio_m(int l, int m, int trials, uint64_t seed = 42, int samples = 64);

// product quadrature on the sphere, exact for harmonic expansions of degree
// <= 2*glpoints - 1
double sphere_integral(const std::function<double(const Vec3&)>& f, int glpoints, int azimuthal);

struct HarmonicCoeff {
    HarmonicSpec h;
    double c = 0;
};

struct NormReport {
    double norm_in = 0;
    double norm_out = 0;
    double stderr_out = 0;  // Monte Carlo standard error of norm_out
};

// ||f||_2 on the sphere versus ||tau f||_2 over uniformly random circles
NormReport boundedness_check(const std::vector<HarmonicCoeff>& coeffs, int n_circles,
                             uint64_t seed = 42, int samples = 64);

struct Rot3 {
    std::array<std::array<double, 3>, 3> m;
    Vec3 apply(const Vec3& p) const;
};

Rot3 random_rotation(Rng& rng);

}  // namespace radon::funk
