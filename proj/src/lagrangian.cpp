#include "riselab/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace riselab {

Chi Chi::abs_pow(double p) {
    if (!(p >= 1.0 && p <= 4.0)) throw std::invalid_argument("Chi: exponent must lie in [1, 4]");
    return Chi(Kind::AbsPow, p);
}
Chi Chi::rational() { return Chi(Kind::Rational, 0.0); }
Chi Chi::huber() { return Chi(Kind::Huber, 0.0); }

const std::vector<Chi>& Chi::catalogue() {
    static const std::vector<Chi> cat = {abs_pow(1.0), abs_pow(1.5), abs_pow(2.0), abs_pow(3.0),
                                         abs_pow(4.0), rational(),   huber()};
    return cat;
}

std::optional<Chi> Chi::by_name(const std::string& name) {
    for (const Chi& c : catalogue())
        if (c.name() == name) return c;
    return std::nullopt;
}

double Chi::operator()(double t) const {
    const double a = std::abs(t);
    switch (kind_) {
        case Kind::AbsPow:
            if (p_ == 1.0) return a;
            if (p_ == 2.0) return a * a;
            return std::pow(a, p_);
        case Kind::Rational:
            return a * a / (1.0 + a);
        case Kind::Huber:
            return a <= 5.0 ? a * a : 10.0 * a - 25.0;
    }
    return 0.0;
}

std::string Chi::name() const {
    switch (kind_) {
        case Kind::AbsPow: {
            if (p_ == static_cast<int>(p_)) return "p" + std::to_string(static_cast<int>(p_));
            return "p1.5";
        }
        case Kind::Rational:
            return "rational";
        case Kind::Huber:
            return "huber5";
    }
    return "?";
}

double ordered_product_integral(const StepFunction& f, const StepFunction& g) {
    double acc = 0.0, lo = 0.0;
    for (double hi : merged_breakpoints(f, g)) {
        const double mid = 0.5 * (lo + hi);
        acc += f.eval(mid) * g.eval(mid) * (hi - lo);
        lo = hi;
    }
    return acc;
}

namespace {

double evaluate_weight(const WeightLagrangian& L, const WeightedSample& xi) {
    return ordered_product_integral(rearrange(xi), L.profile);
}

double evaluate_orlicz_integral(const OrliczIntegralLagrangian& L, const WeightedSample& xi) {
    double acc = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) acc += L.chi(xi.values()[i]) * xi.weights()[i];
    return acc;
}

double evaluate_orlicz_norm(const OrliczNormLagrangian& L, const WeightedSample& xi) {
    double maxabs = 0.0;
    for (double v : xi.values()) maxabs = std::max(maxabs, std::abs(v));
    if (maxabs == 0.0) return 0.0;
    const double budget = L.chi(1.0);
    auto phi = [&](double r) {
        double acc = 0.0;
        for (std::size_t i = 0; i < xi.size(); ++i) acc += L.chi(xi.values()[i] / r) * xi.weights()[i];
        return acc;
    };
    double hi = std::max(1e-6, 2.0 * maxabs);
    for (int guard = 0; guard < 200 && phi(hi) > budget; ++guard) hi *= 2.0;
    double lo = 1e-12;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (phi(mid) <= budget ? hi : lo) = mid;
    }
    return hi;
}

double evaluate_fenchel(const FenchelLagrangian& L, const WeightedSample& xi) {
    if (L.members.empty()) throw std::invalid_argument("FenchelLagrangian: empty family");
    const StepFunction xs = rearrange(xi);
    double best = -std::numeric_limits<double>::infinity();
    for (const FenchelMember& mem : L.members)
        best = std::max(best, mem.offset + ordered_product_integral(xs, rearrange(mem.profile)));
    return best;
}

}  // namespace

double evaluate(const LagrangianSpec& L, const WeightedSample& xi) {
    return std::visit(
        [&](const auto& spec) -> double {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, WeightLagrangian>) return evaluate_weight(spec, xi);
            else if constexpr (std::is_same_v<T, OrliczIntegralLagrangian>)
                return evaluate_orlicz_integral(spec, xi);
            else if constexpr (std::is_same_v<T, OrliczNormLagrangian>)
                return evaluate_orlicz_norm(spec, xi);
            else
                return evaluate_fenchel(spec, xi);
        },
        L);
}

double l_star(const LagrangianSpec& L, const StepFunction& zeta) {
    std::vector<double> values(zeta.plateau_count()), weights(zeta.plateau_count());
    for (std::size_t k = 0; k < zeta.plateau_count(); ++k) {
        values[k] = zeta.plateau_values()[k];
        weights[k] = zeta.length(k);
    }
    return evaluate(L, WeightedSample(std::move(values), std::move(weights)));
}

double hardy_littlewood_sup_gap(const WeightedSample& xi, const WeightedSample& f) {
    if (xi.size() != f.size() || xi.size() > 7)
        throw std::invalid_argument("hardy_littlewood_sup_check: need matching samples of <= 7 atoms");
    const double w0 = xi.weights()[0];
    for (std::size_t i = 0; i < xi.size(); ++i)
        if (xi.weights()[i] != w0 || f.weights()[i] != w0)
            throw std::invalid_argument("hardy_littlewood_sup_check: weights must be equal");

    const double lhs = ordered_product_integral(rearrange(xi), rearrange(f));
    std::vector<std::size_t> perm(f.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = -std::numeric_limits<double>::infinity();
    do {
        double acc = 0.0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            acc += xi.values()[i] * f.values()[perm[i]] * w0;
        best = std::max(best, acc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::abs(lhs - best);
}

bool hardy_littlewood_sup_check(const WeightedSample& xi, const WeightedSample& f) {
    double scale = 1.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        scale = std::max(scale, std::abs(xi.values()[i] * f.values()[i]));
    return hardy_littlewood_sup_gap(xi, f) <= 1e-10 * scale;
}

DerivedLagrangians derived_lagrangians(const FenchelLagrangian& L) {
    if (L.members.empty()) throw std::invalid_argument("derived_lagrangians: empty family");
    DerivedLagrangians out;
    for (const FenchelMember& mem : L.members) {
        out.plus.members.push_back(
            {mem.offset, mem.profile.map([](double v) { return std::max(0.0, v); })});
        out.minus.members.push_back(
            {mem.offset, mem.profile.map([](double v) { return std::max(0.0, -v); })});
        out.abs.members.push_back({mem.offset, mem.profile.map([](double v) { return std::abs(v); })});
    }
    return out;
}

namespace {

// L^| |(xi) = max_k a_k + int |xi|* |f_k|*: the family is closed under sign
// choices, so the supremum pairs |xi| with |f| similarly ordered.
double evaluate_abs_fenchel(const FenchelLagrangian& Labs, const WeightedSample& xi) {
    return evaluate_fenchel(Labs, xi.map([](double v) { return std::abs(v); }));
}

}  // namespace

double comparison_violation(const FenchelLagrangian& L, const WeightedSample& xi) {
    const DerivedLagrangians d = derived_lagrangians(L);
    const double V = xi.total_mass();
    const double mean = xi.integral() / V;
    double abs_mean = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i)
        abs_mean += std::abs(xi.values()[i]) * xi.weights()[i];
    abs_mean /= V;

    auto constant = [&](double c) { return WeightedSample({c}, {V}); };
    auto scale = [&](double a) { return xi.map([a](double v) { return a * v; }); };

    double worst = 0.0;
    // 2L+(xi) <= L(2xi) + L-(2 mean)
    worst = std::max(worst, 2.0 * evaluate_fenchel(d.plus, xi) -
                                evaluate_fenchel(L, scale(2.0)) -
                                evaluate_fenchel(d.minus, constant(2.0 * mean)));
    // 2L-(xi) <= L(-2xi) + L+(2 mean); the sign of the mean term is the one the
    // substitution f -> -f in the first inequality produces (the flipped sign
    // fails already on two atoms: f = (1,-1), xi = (0,2))
    worst = std::max(worst, 2.0 * evaluate_fenchel(d.minus, xi) -
                                evaluate_fenchel(L, scale(-2.0)) -
                                evaluate_fenchel(d.plus, constant(2.0 * mean)));
    // 2L||(xi) <= max(L(8xi), L(-8xi)) + L||(6 avg|xi|)
    worst = std::max(worst,
                     2.0 * evaluate_abs_fenchel(d.abs, xi) -
                         std::max(evaluate_fenchel(L, scale(8.0)), evaluate_fenchel(L, scale(-8.0))) -
                         evaluate_abs_fenchel(d.abs, constant(6.0 * abs_mean)));
    // |L(xi) - L(0)| <= L||(xi) - L||(0)
    const double L0 = evaluate_fenchel(L, constant(0.0));
    const double Labs0 = evaluate_abs_fenchel(d.abs, constant(0.0));
    worst = std::max(worst, std::abs(evaluate_fenchel(L, xi) - L0) -
                                (evaluate_abs_fenchel(d.abs, xi) - Labs0));
    return std::max(0.0, worst);
}

bool comparison_check(const FenchelLagrangian& L, const WeightedSample& xi, double tol) {
    return comparison_violation(L, xi) <= tol;
}

double finiteness_bound(const FenchelLagrangian& L, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("finiteness_bound: lambda must be positive");
    if (L.members.empty()) throw std::invalid_argument("finiteness_bound: empty family");
    double best = -std::numeric_limits<double>::infinity();
    for (const FenchelMember& mem : L.members) {
        double mass = 0.0;
        for (std::size_t i = 0; i < mem.profile.size(); ++i)
            mass += std::abs(mem.profile.values()[i]) * mem.profile.weights()[i];
        best = std::max(best, mem.offset + lambda * mass);
    }
    return best;
}

double ac_modulus(const FenchelLagrangian& L, double lambda, double delta) {
    if (!(lambda > 0.0)) throw std::invalid_argument("ac_modulus: lambda must be positive");
    if (L.members.empty()) throw std::invalid_argument("ac_modulus: empty family");
    double best = -std::numeric_limits<double>::infinity();
    for (const FenchelMember& mem : L.members) {
        if (!(delta > 0.0) || delta > mem.profile.total_mass() * (1.0 + 1e-12))
            throw std::invalid_argument("ac_modulus: delta outside (0, V]");
        const StepFunction astar =
            rearrange(mem.profile.map([](double v) { return std::abs(v); }));
        best = std::max(best, mem.offset + lambda * astar.partial_integral(
                                               std::min(delta, astar.V())));
    }
    return best;
}

}  // namespace riselab
