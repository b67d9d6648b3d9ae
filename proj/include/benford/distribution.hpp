#pragma once

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace benford {

struct KernelAtom {
    double t = 0;       // location
    double weight = 0;  // mass carried by the atom
};

// Inverse Laplace kernel f of a density F, i.e. F(x) = integral of
// f(t) e^{-tx} dt. Either a continuous function with a certified effective
// support, or a finite set of atoms (exponential densities reduce to a
// single atom at t = rate with weight rate).
struct LaplaceKernel {
    std::function<double(double)> f;  // empty for atomic kernels
    double t_lo = 0, t_hi = 0;        // effective support of f(t)/t mass
    double tail_mass = 0;             // certified |f(t)/t| mass outside [t_lo, t_hi]
    bool sign_definite = false;
    std::vector<KernelAtom> atoms;

    bool atomic() const { return !atoms.empty(); }
};

struct SupportHint {
    double lower = 0;
    double upper = 0;
    double tail_mass = 0;  // certified probability mass outside [lower, upper]
};

using Sampler = std::function<double(std::mt19937_64&)>;

// A positive-support probability law. density is mandatory; cdf, kernel and
// sampler are optional capabilities that unlock cheaper or additional
// operations.
struct Distribution {
    std::string name;
    std::function<double(double)> density;
    std::function<double(double)> cdf;  // may be empty
    std::optional<LaplaceKernel> kernel;
    Sampler sampler;  // may be empty
    SupportHint support;
    bool sqrt_singularity_at_origin = false;  // density ~ x^(-1/2) near 0

    bool has_cdf() const { return static_cast<bool>(cdf); }
    bool has_kernel() const { return kernel.has_value(); }
    bool has_sampler() const { return static_cast<bool>(sampler); }
};

Distribution make_exponential(double rate);
Distribution make_sqrt_exp();
Distribution make_quintic_tail();
Distribution make_log_uniform(int decades);
Distribution make_uniform01();
Distribution make_half_normal(double sigma);

// The stock distributions: exponential(1), sqrt_exp, quintic_tail,
// log_uniform over [1, 10^6), uniform over [0,1), half_normal(1).
std::vector<Distribution> catalog();

// Builds a distribution from a "name:key=value,key=value" spec, e.g.
// "exp:rate=1", "loguniform:decades=6", "sqrt_exp".
Distribution parse_dist_spec(const std::string& spec);

// Probability mass of [a, b): cdf difference when a cdf is present,
// otherwise adaptive quadrature of the density at absolute tolerance tol.
double interval_mass(const Distribution& dist, double a, double b, double tol);

// Max |integral_of(f(t) e^{-tx} dt) - density(x)| over the probe points.
// Requires a kernel.
double verify_pair(const Distribution& dist, std::span<const double> probes);

// integral of f(t)/t dt; equals 1 for any kernel of a normalized density.
double kernel_normalization(const LaplaceKernel& kernel, double tol = 1e-9);

// integral of |f(t)/t| dt; equals 1 for sign-definite kernels, larger for
// oscillating ones.
double kernel_abs_mass(const LaplaceKernel& kernel, double tol = 1e-9);

// Uniform draw in [0, 1) built from the top 53 bits of the generator;
// identical across platforms for a fixed seed.
double uniform01(std::mt19937_64& rng);

}  // namespace benford
