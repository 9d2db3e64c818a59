#pragma once

#include <memory>
#include <span>
#include <vector>

namespace mfdr {

/// Recombining binomial model of a one-dimensional Brownian motion on [0, T].
///
/// Level k holds k+1 nodes; node (k, j) carries the Brownian value
/// (2j - k) * sqrt(dt) and is reached with probability C(k, j) * 2^-k.
/// One-step transitions are up/down with probability 1/2 each.
class Lattice {
public:
    Lattice(double horizon, int steps);

    double horizon() const noexcept { return horizon_; }
    int steps() const noexcept { return steps_; }
    int levels() const noexcept { return steps_ + 1; }
    int nodes_at(int level) const noexcept { return level + 1; }
    double dt() const noexcept { return dt_; }
    double sqrt_dt() const noexcept { return sqrt_dt_; }

    /// Time of level k; the terminal level maps to the horizon exactly.
    double time_at(int level) const noexcept {
        return level == steps_ ? horizon_ : level * dt_;
    }
    double brownian(int level, int node) const noexcept {
        return (2 * node - level) * sqrt_dt_;
    }

    /// Binomial node probabilities of one level; they sum to 1.
    std::span<const double> level_weights(int level) const;

    bool same_shape(const Lattice& other) const noexcept {
        return steps_ == other.steps_ && horizon_ == other.horizon_;
    }

private:
    double horizon_;
    int steps_;
    double dt_;
    double sqrt_dt_;
    std::shared_ptr<const std::vector<double>> weights_;  // flattened by level
};

/// Real-valued process indexed by lattice nodes. Adaptedness is structural:
/// the value at (k, j) depends on the node only.
class AdaptedProcess {
public:
    explicit AdaptedProcess(Lattice lattice, double fill = 0.0);

    template <typename F>
    static AdaptedProcess generate(const Lattice& lattice, F&& f) {
        AdaptedProcess p(lattice);
        for (int k = 0; k <= lattice.steps(); ++k)
            for (int j = 0; j <= k; ++j) p.at(k, j) = f(k, j);
        return p;
    }

    double operator()(int level, int node) const {
        return values_[offset(level) + node];
    }
    double& at(int level, int node) { return values_[offset(level) + node]; }

    std::span<const double> level(int k) const {
        return {values_.data() + offset(k), static_cast<size_t>(k + 1)};
    }
    std::span<double> level(int k) {
        return {values_.data() + offset(k), static_cast<size_t>(k + 1)};
    }

    const Lattice& lattice() const noexcept { return lattice_; }
    int steps() const noexcept { return lattice_.steps(); }

    AdaptedProcess& operator+=(const AdaptedProcess& rhs);
    AdaptedProcess& operator-=(const AdaptedProcess& rhs);
    AdaptedProcess& operator*=(double s);

private:
    static size_t offset(int level) {
        return static_cast<size_t>(level) * (level + 1) / 2;
    }

    Lattice lattice_;
    std::vector<double> values_;
};

AdaptedProcess operator+(AdaptedProcess lhs, const AdaptedProcess& rhs);
AdaptedProcess operator-(AdaptedProcess lhs, const AdaptedProcess& rhs);
AdaptedProcess operator*(double s, AdaptedProcess p);

/// One-step conditional expectation: maps k+1 level values to k level values,
/// entry j = (next[j+1] + next[j]) / 2.
std::vector<double> conditional_expectation(std::span<const double> next_level);
std::vector<double> conditional_expectation(const AdaptedProcess& p, int level);

/// Coefficient of the Brownian increment in the one-step martingale
/// decomposition: entry j = (next[j+1] - next[j]) / (2 sqrt(dt)).
std::vector<double> martingale_increment(std::span<const double> next_level,
                                         double dt);
std::vector<double> martingale_increment(const AdaptedProcess& p, int level);

/// Unconditional expectation at a level, with exact binomial weights.
double expectation(const Lattice& lattice, std::span<const double> values,
                   int level);
double expectation(const AdaptedProcess& p, int level);

/// E[p_k] for every level k at once.
std::vector<double> expectation_per_level(const AdaptedProcess& p);

/// sup over stopping times tau of E|p_tau|, via the Snell envelope of |p|.
/// The windowed overload restricts tau to levels [first_level, last_level].
double d_norm(const AdaptedProcess& p);
double d_norm(const AdaptedProcess& p, int first_level, int last_level);

/// Steps cap for exhaustive path enumeration in sp_norm.
inline constexpr int kPathEnumerationCap = 20;

/// Exact E[sup_k |p_k|^q] by enumeration of all 2^N paths. Refuses lattices
/// beyond kPathEnumerationCap; use d_norm there instead.
double sp_norm(const AdaptedProcess& p, double exponent);
double sp_norm(const AdaptedProcess& p, double exponent, int first_level,
               int last_level);

}  // namespace mfdr
