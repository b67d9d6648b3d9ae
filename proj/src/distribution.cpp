#include "benford/distribution.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <utility>

#include "benford/quadrature.hpp"

namespace benford {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Integrates density over [a, b] handling an integrable x^(-1/2) singularity
// at the origin via u = sqrt(x).
double density_mass(const Distribution& dist, double a, double b, double tol) {
    if (b <= a) return 0.0;
    const auto& density = dist.density;
    double total = 0.0;
    if (dist.sqrt_singularity_at_origin && a < 1.0) {
        const double cut = std::min(b, 1.0);
        total += integrate_or_throw(
            [&density](double u) { return 2.0 * u * density(u * u); }, std::sqrt(a),
            std::sqrt(cut), tol / 2);
        a = cut;
        tol /= 2;
    }
    if (b > a) {
        total += integrate_or_throw(density, a, b, tol);
    }
    return total;
}

// Construction-time sanity check for catalog entries: the density must
// integrate to 1 over its effective support.
Distribution checked(Distribution dist) {
    const double mass =
        density_mass(dist, dist.support.lower, dist.support.upper, 1e-10);
    if (std::fabs(mass - 1.0) > 1e-8) {
        throw numerical_error("distribution '" + dist.name +
                              "': density integrates to " + std::to_string(mass) +
                              ", expected 1 within 1e-8");
    }
    return dist;
}

}  // namespace

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Distribution make_exponential(double rate) {
    if (!(rate > 0)) {
        throw std::domain_error("exponential: rate must be > 0");
    }
    Distribution d;
    d.name = "exponential(rate=" + std::to_string(rate) + ")";
    d.density = [rate](double x) { return x < 0 ? 0.0 : rate * std::exp(-rate * x); };
    d.cdf = [rate](double x) { return x <= 0 ? 0.0 : -std::expm1(-rate * x); };
    LaplaceKernel k;
    k.atoms = {{rate, rate}};  // F(x) = rate * e^{-rate x}: point mass at t = rate
    k.sign_definite = true;
    d.kernel = k;
    d.sampler = [rate](std::mt19937_64& rng) {
        double u;
        do {
            u = uniform01(rng);
        } while (u == 0.0);
        return -std::log1p(-u) / rate;
    };
    d.support = {0.0, 30.0 / rate, 1e-13};  // 1 - cdf(30/rate) = e^-30 < 1e-13
    return checked(std::move(d));
}

Distribution make_sqrt_exp() {
    Distribution d;
    d.name = "sqrt_exp";
    // Density of the square of a unit exponential: e^{-sqrt x} / (2 sqrt x).
    d.density = [](double x) {
        if (x <= 0) return 0.0;
        const double r = std::sqrt(x);
        return std::exp(-r) / (2.0 * r);
    };
    d.cdf = [](double x) { return x <= 0 ? 0.0 : -std::expm1(-std::sqrt(x)); };
    LaplaceKernel k;
    k.f = [](double t) { return std::exp(-1.0 / (4.0 * t)) / (2.0 * std::sqrt(kPi * t)); };
    // f(t)/t decays like t^(-3/2): tail above 1e20 is under 6e-11; below 1e-3
    // the e^{-1/(4t)} factor crushes everything.
    k.t_lo = 1e-3;
    k.t_hi = 1e20;
    k.tail_mass = 1e-10;
    k.sign_definite = true;
    d.kernel = k;
    d.sampler = [](std::mt19937_64& rng) {
        double u;
        do {
            u = uniform01(rng);
        } while (u == 0.0);
        const double e = -std::log1p(-u);
        return e * e;
    };
    d.support = {0.0, 900.0, 1e-13};  // 1 - cdf(900) = e^-30 < 1e-13
    d.sqrt_singularity_at_origin = true;
    return checked(std::move(d));
}

Distribution make_quintic_tail() {
    Distribution d;
    d.name = "quintic_tail";
    d.density = [](double x) {
        if (x < 0) return 0.0;
        const double y = 1.0 + x;
        return 4.0 / (y * y * y * y * y);
    };
    d.cdf = [](double x) {
        if (x <= 0) return 0.0;
        const double y = 1.0 + x;
        return 1.0 - 1.0 / (y * y * y * y);
    };
    LaplaceKernel k;
    k.f = [](double t) { return t * t * t * t * std::exp(-t) / 6.0; };
    // Tail of f(t)/t below 1e-3 is t^4/24 ~ 4e-14; above 50, e^-50 scale.
    k.t_lo = 1e-3;
    k.t_hi = 50.0;
    k.tail_mass = 1e-10;
    k.sign_definite = true;
    d.kernel = k;
    d.sampler = [](std::mt19937_64& rng) {
        double u;
        do {
            u = uniform01(rng);
        } while (u == 0.0);
        return std::pow(1.0 - u, -0.25) - 1.0;
    };
    d.support = {0.0, 1800.0, 1e-13};  // (1801)^-4 < 1e-13
    return checked(std::move(d));
}

Distribution make_log_uniform(int decades) {
    if (decades < 1) {
        throw std::domain_error("log_uniform: decades must be >= 1");
    }
    Distribution d;
    d.name = "log_uniform(decades=" + std::to_string(decades) + ")";
    const double hi = std::pow(10.0, decades);
    const double norm = decades * std::log(10.0);
    d.density = [hi, norm](double x) { return (x >= 1.0 && x < hi) ? 1.0 / (x * norm) : 0.0; };
    d.cdf = [hi, norm](double x) {
        if (x <= 1.0) return 0.0;
        if (x >= hi) return 1.0;
        return std::log(x) / norm;
    };
    d.sampler = [norm](std::mt19937_64& rng) { return std::exp(uniform01(rng) * norm); };
    d.support = {1.0, hi, 0.0};  // compact support, no tail
    return checked(std::move(d));
}

Distribution make_uniform01() {
    Distribution d;
    d.name = "uniform01";
    d.density = [](double x) { return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0; };
    d.cdf = [](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return x;
    };
    d.sampler = [](std::mt19937_64& rng) {
        double u;
        do {
            u = uniform01(rng);
        } while (u == 0.0);  // zero has no leading digit
        return u;
    };
    d.support = {0.0, 1.0, 0.0};
    return checked(std::move(d));
}

Distribution make_half_normal(double sigma) {
    if (!(sigma > 0)) {
        throw std::domain_error("half_normal: sigma must be > 0");
    }
    Distribution d;
    d.name = "half_normal(sigma=" + std::to_string(sigma) + ")";
    const double inv = 1.0 / sigma;
    d.density = [inv](double x) {
        if (x < 0) return 0.0;
        const double z = x * inv;
        return std::sqrt(2.0 / kPi) * inv * std::exp(-0.5 * z * z);
    };
    d.cdf = [inv](double x) { return x <= 0 ? 0.0 : std::erf(x * inv / std::sqrt(2.0)); };
    d.sampler = [sigma](std::mt19937_64& rng) {
        // Box-Muller on our own uniform bits keeps draws platform-stable.
        double u1;
        do {
            u1 = uniform01(rng);
        } while (u1 == 0.0);
        const double u2 = uniform01(rng);
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
        double x = sigma * std::fabs(z);
        return x > 0 ? x : std::numeric_limits<double>::min();
    };
    d.support = {0.0, 8.5 * sigma, 1e-13};  // erfc(8.5/sqrt 2) < 2e-17
    return checked(std::move(d));
}

std::vector<Distribution> catalog() {
    std::vector<Distribution> all;
    all.push_back(make_exponential(1.0));
    all.push_back(make_sqrt_exp());
    all.push_back(make_quintic_tail());
    all.push_back(make_log_uniform(6));
    all.push_back(make_uniform01());
    all.push_back(make_half_normal(1.0));
    return all;
}

Distribution parse_dist_spec(const std::string& spec) {
    std::string name = spec;
    std::string params;
    if (const auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        params = spec.substr(colon + 1);
    }
    // Collect key=value pairs.
    std::vector<std::pair<std::string, double>> kv;
    std::size_t pos = 0;
    while (pos < params.size()) {
        auto comma = params.find(',', pos);
        if (comma == std::string::npos) comma = params.size();
        const std::string item = params.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::domain_error("dist spec: expected key=value, got '" + item + "'");
        }
        const std::string key = item.substr(0, eq);
        char* end = nullptr;
        const double value = std::strtod(item.c_str() + eq + 1, &end);
        if (end != item.c_str() + item.size()) {
            throw std::domain_error("dist spec: bad numeric value in '" + item + "'");
        }
        kv.emplace_back(key, value);
    }
    auto param = [&kv](const std::string& key, double fallback) {
        for (const auto& [k, v] : kv) {
            if (k == key) return v;
        }
        return fallback;
    };

    if (name == "exp" || name == "exponential") return make_exponential(param("rate", 1.0));
    if (name == "sqrt_exp") return make_sqrt_exp();
    if (name == "quintic_tail") return make_quintic_tail();
    if (name == "loguniform" || name == "log_uniform") {
        return make_log_uniform(static_cast<int>(param("decades", 6.0)));
    }
    if (name == "uniform") return make_uniform01();
    if (name == "halfnormal" || name == "half_normal") {
        return make_half_normal(param("sigma", 1.0));
    }
    throw std::domain_error("unknown distribution '" + name + "'");
}

double interval_mass(const Distribution& dist, double a, double b, double tol) {
    if (b <= a) return 0.0;
    if (dist.has_cdf()) {
        return dist.cdf(b) - dist.cdf(a);
    }
    const double lo = std::max(a, dist.support.lower);
    const double hi = std::min(b, dist.support.upper);
    if (hi <= lo) return 0.0;
    return density_mass(dist, lo, hi, tol);
}

double verify_pair(const Distribution& dist, std::span<const double> probes) {
    if (!dist.has_kernel()) {
        throw unsupported_error("verify_pair: distribution '" + dist.name +
                                "' has no inverse-Laplace kernel");
    }
    const LaplaceKernel& k = *dist.kernel;
    double worst = 0.0;
    for (const double x : probes) {
        double reconstructed;
        if (k.atomic()) {
            reconstructed = 0.0;
            for (const auto& atom : k.atoms) {
                reconstructed += atom.weight * std::exp(-atom.t * x);
            }
        } else {
            // Integrate f(t) e^{-tx} dt on the log axis t = e^s: both tails
            // then decay at least exponentially. Above t = 800/x the factor
            // e^{-tx} underflows to exactly 0.
            const double s_lo = std::log(k.t_lo);
            const double s_hi = std::min(std::log(k.t_hi), std::log(800.0 / x));
            reconstructed =
                s_hi <= s_lo ? 0.0
                             : integrate_or_throw(
                                   [&k, x](double s) {
                                       const double t = std::exp(s);
                                       return k.f(t) * std::exp(-t * x) * t;
                                   },
                                   s_lo, s_hi, 1e-9, 20000);
        }
        worst = std::max(worst, std::fabs(reconstructed - dist.density(x)));
    }
    return worst;
}

double kernel_normalization(const LaplaceKernel& kernel, double tol) {
    if (kernel.atomic()) {
        double total = 0.0;
        for (const auto& atom : kernel.atoms) total += atom.weight / atom.t;
        return total;
    }
    return integrate_or_throw(
        [&kernel](double s) { return kernel.f(std::exp(s)); }, std::log(kernel.t_lo),
        std::log(kernel.t_hi), tol, 20000);
}

double kernel_abs_mass(const LaplaceKernel& kernel, double tol) {
    if (kernel.atomic()) {
        double total = 0.0;
        for (const auto& atom : kernel.atoms) total += std::fabs(atom.weight / atom.t);
        return total;
    }
    return integrate_or_throw(
        [&kernel](double s) { return std::fabs(kernel.f(std::exp(s))); },
        std::log(kernel.t_lo), std::log(kernel.t_hi), tol, 20000);
}

}  // namespace benford
