#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace egonet {

// Finite-support probability mass function over non-negative integer
// degrees. Immutable after construction; stored renormalized to sum
// exactly 1.
class DegreeDistribution {
public:
    static constexpr double kSumTolerance = 1e-9;

    // masses[k] = p_k. Validates non-negativity and total mass, then
    // renormalizes.
    static DegreeDistribution from_masses(std::vector<double> masses) {
        return DegreeDistribution(std::move(masses), kSumTolerance);
    }

    static DegreeDistribution from_map(const std::map<int, double>& masses) {
        int max_k = 0;
        for (const auto& [k, p] : masses) {
            if (k < 0) throw std::invalid_argument("degree must be non-negative");
            max_k = std::max(max_k, k);
        }
        std::vector<double> dense(static_cast<std::size_t>(max_k) + 1, 0.0);
        for (const auto& [k, p] : masses) dense[static_cast<std::size_t>(k)] += p;
        return from_masses(std::move(dense));
    }

    static DegreeDistribution point_mass(int k) {
        if (k < 0) throw std::invalid_argument("degree must be non-negative");
        std::vector<double> dense(static_cast<std::size_t>(k) + 1, 0.0);
        dense.back() = 1.0;
        return DegreeDistribution(std::move(dense), 0.0);
    }

    // Empirical distribution from integer counts; frequencies count/total
    // are formed directly so no further renormalization error is incurred.
    static DegreeDistribution from_counts(const std::vector<std::int64_t>& counts) {
        std::int64_t total = 0;
        for (std::int64_t c : counts) {
            if (c < 0) throw std::invalid_argument("negative count");
            total += c;
        }
        if (total == 0) throw std::invalid_argument("empty degree sample");
        std::vector<double> dense(counts.size());
        for (std::size_t k = 0; k < counts.size(); ++k)
            dense[k] = static_cast<double>(counts[k]) / static_cast<double>(total);
        DegreeDistribution d;
        d.masses_ = std::move(dense);
        d.trim();
        return d;
    }

    double mass(int k) const {
        if (k < 0 || static_cast<std::size_t>(k) >= masses_.size()) return 0.0;
        return masses_[static_cast<std::size_t>(k)];
    }

    const std::vector<double>& masses() const { return masses_; }

    int max_degree() const { return static_cast<int>(masses_.size()) - 1; }

    double mean() const {
        double m = 0.0;
        for (std::size_t k = 1; k < masses_.size(); ++k) m += static_cast<double>(k) * masses_[k];
        return m;
    }

    double variance() const {
        double m = mean(), m2 = 0.0;
        for (std::size_t k = 1; k < masses_.size(); ++k)
            m2 += static_cast<double>(k) * static_cast<double>(k) * masses_[k];
        return m2 - m * m;
    }

    // E[D(D-1)], the numerator of the mean excess degree
    double factorial_moment2() const {
        double f = 0.0;
        for (std::size_t k = 2; k < masses_.size(); ++k)
            f += static_cast<double>(k) * static_cast<double>(k - 1) * masses_[k];
        return f;
    }

    // rho(s) = sum_k s^k p_k for s in [0,1]
    double pgf(double s) const {
        check_unit(s);
        double acc = 0.0;  // Horner from the top degree down
        for (std::size_t i = masses_.size(); i-- > 0;) acc = acc * s + masses_[i];
        return acc;
    }

    // rho'(s) = sum_k k s^{k-1} p_k
    double pgf_derivative(double s) const {
        check_unit(s);
        double acc = 0.0;
        for (std::size_t i = masses_.size(); i-- > 1;)
            acc = acc * s + static_cast<double>(i) * masses_[i];
        return acc;
    }

    bool operator==(const DegreeDistribution& o) const { return masses_ == o.masses_; }

    // Two-column "k p_k" text, '#' comments and blank lines ignored.
    static DegreeDistribution parse(std::istream& in) {
        std::map<int, double> m;
        std::string line;
        while (std::getline(in, line)) {
            std::string_view sv = strip_comment(line);
            if (sv.empty()) continue;
            std::istringstream row{std::string(sv)};
            int k;
            double p;
            if (!(row >> k >> p)) throw std::runtime_error("bad degree-distribution row: " + line);
            m[k] += p;
        }
        if (m.empty()) throw std::runtime_error("empty degree-distribution file");
        return from_map(m);
    }

    void write(std::ostream& out) const {
        out << "# degree probability\n";
        for (std::size_t k = 0; k < masses_.size(); ++k)
            if (masses_[k] > 0.0) out << k << ' ' << format_prob(masses_[k]) << '\n';
    }

    static std::string_view strip_comment(std::string_view line) {
        auto pos = line.find('#');
        if (pos != std::string_view::npos) line = line.substr(0, pos);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        return line;
    }

    static std::string format_prob(double p) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", p);
        return buf;
    }

private:
    DegreeDistribution() = default;

    DegreeDistribution(std::vector<double> masses, double sum_tol) : masses_(std::move(masses)) {
        double sum = 0.0;
        for (double p : masses_) {
            if (p < 0.0 || !std::isfinite(p)) throw std::invalid_argument("mass out of range");
            sum += p;
        }
        if (sum <= 0.0) throw std::invalid_argument("distribution has no mass");
        if (sum_tol > 0.0 && std::abs(sum - 1.0) > sum_tol)
            throw std::invalid_argument("masses must sum to 1 within 1e-9");
        for (double& p : masses_) p /= sum;
        trim();
    }

    void trim() {
        while (masses_.size() > 1 && masses_.back() == 0.0) masses_.pop_back();
    }

    static void check_unit(double s) {
        if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("pgf argument outside [0,1]");
    }

    std::vector<double> masses_;
};

// Poisson(mu) truncated once the dropped tail mass is <= tail_eps, then
// renormalized. mu = 0 degenerates to a point mass at 0.
inline DegreeDistribution poisson_distribution(double mu, double tail_eps = 1e-12) {
    if (mu < 0.0 || !std::isfinite(mu)) throw std::invalid_argument("poisson mean must be >= 0");
    if (mu == 0.0) return DegreeDistribution::point_mass(0);
    std::vector<double> masses;
    double log_p = -mu;  // log pmf at k = 0
    double cum = 0.0;
    for (int k = 0; cum < 1.0 - tail_eps; ++k) {
        if (k > 0) log_p += std::log(mu) - std::log(static_cast<double>(k));
        double p = std::exp(log_p);
        masses.push_back(p);
        cum += p;
        if (k > 10'000'000) throw std::runtime_error("poisson truncation did not terminate");
    }
    return DegreeDistribution::from_masses(std::move(masses));
}

// Negative binomial with given mean and variance (requires over-dispersion
// sigma2 > mu), truncated at tail mass <= tail_eps and renormalized.
inline DegreeDistribution negative_binomial_distribution(double mu, double sigma2,
                                                         double tail_eps = 1e-12) {
    if (!(mu > 0.0)) throw std::invalid_argument("negative binomial mean must be > 0");
    if (!(sigma2 - mu > 1e-12 * std::max(1.0, mu)))
        throw std::invalid_argument("negative binomial requires sigma2 > mu");
    const double q = mu / sigma2;            // success probability
    const double r = mu * mu / (sigma2 - mu); // shape
    std::vector<double> masses;
    double cum = 0.0;
    const double log_q = std::log(q), log_1q = std::log1p(-q), lg_r = std::lgamma(r);
    for (int k = 0; cum < 1.0 - tail_eps; ++k) {
        double log_p = std::lgamma(k + r) - lg_r - std::lgamma(k + 1.0) + r * log_q +
                       static_cast<double>(k) * log_1q;
        double p = std::exp(log_p);
        masses.push_back(p);
        cum += p;
        if (k > 10'000'000) throw std::runtime_error("negative binomial truncation did not terminate");
    }
    return DegreeDistribution::from_masses(std::move(masses));
}

// Finite-support pmf over (single degree k1, triangle degree kdelta) pairs.
// Sparse storage, sorted by (k1, kdelta).
class JointDegreeDistribution {
public:
    struct Entry {
        int k1;
        int kdelta;
        double p;
    };

    static JointDegreeDistribution from_entries(std::vector<Entry> entries) {
        return JointDegreeDistribution(std::move(entries), DegreeDistribution::kSumTolerance);
    }

    static JointDegreeDistribution from_map(const std::map<std::pair<int, int>, double>& m) {
        std::vector<Entry> es;
        es.reserve(m.size());
        for (const auto& [kk, p] : m) es.push_back({kk.first, kk.second, p});
        return from_entries(std::move(es));
    }

    static JointDegreeDistribution from_counts(const std::map<std::pair<int, int>, std::int64_t>& m) {
        std::int64_t total = 0;
        for (const auto& [kk, c] : m) {
            if (c < 0) throw std::invalid_argument("negative count");
            total += c;
        }
        if (total == 0) throw std::invalid_argument("empty joint-degree sample");
        std::vector<Entry> es;
        es.reserve(m.size());
        for (const auto& [kk, c] : m)
            if (c > 0)
                es.push_back({kk.first, kk.second,
                              static_cast<double>(c) / static_cast<double>(total)});
        JointDegreeDistribution j;
        j.entries_ = std::move(es);
        return j;
    }

    const std::vector<Entry>& entries() const { return entries_; }

    double mean_single() const {
        double m = 0.0;
        for (const auto& e : entries_) m += e.k1 * e.p;
        return m;
    }

    double mean_triangle() const {
        double m = 0.0;
        for (const auto& e : entries_) m += e.kdelta * e.p;
        return m;
    }

    double e_single_sq_minus_single() const {
        double m = 0.0;
        for (const auto& e : entries_) m += static_cast<double>(e.k1) * (e.k1 - 1) * e.p;
        return m;
    }

    double e_triangle_sq_minus_triangle() const {
        double m = 0.0;
        for (const auto& e : entries_) m += static_cast<double>(e.kdelta) * (e.kdelta - 1) * e.p;
        return m;
    }

    double e_single_triangle() const {
        double m = 0.0;
        for (const auto& e : entries_) m += static_cast<double>(e.k1) * e.kdelta * e.p;
        return m;
    }

    // distribution of the total degree k1 + 2*kdelta
    DegreeDistribution total_degree_marginal() const {
        std::map<int, double> m;
        for (const auto& e : entries_) m[e.k1 + 2 * e.kdelta] += e.p;
        return DegreeDistribution::from_map(m);
    }

    DegreeDistribution single_degree_marginal() const {
        std::map<int, double> m;
        for (const auto& e : entries_) m[e.k1] += e.p;
        return DegreeDistribution::from_map(m);
    }

    bool triangle_free() const {
        for (const auto& e : entries_)
            if (e.kdelta > 0 && e.p > 0.0) return false;
        return true;
    }

    // Three-column "k1 kdelta p" text, '#' comments ignored.
    static JointDegreeDistribution parse(std::istream& in) {
        std::map<std::pair<int, int>, double> m;
        std::string line;
        while (std::getline(in, line)) {
            std::string_view sv = DegreeDistribution::strip_comment(line);
            if (sv.empty()) continue;
            std::istringstream row{std::string(sv)};
            int k1, kd;
            double p;
            if (!(row >> k1 >> kd >> p))
                throw std::runtime_error("bad joint-distribution row: " + line);
            m[{k1, kd}] += p;
        }
        if (m.empty()) throw std::runtime_error("empty joint-distribution file");
        return from_map(m);
    }

    void write(std::ostream& out) const {
        out << "# single_degree triangle_degree probability\n";
        for (const auto& e : entries_)
            out << e.k1 << ' ' << e.kdelta << ' ' << DegreeDistribution::format_prob(e.p) << '\n';
    }

private:
    JointDegreeDistribution() = default;

    JointDegreeDistribution(std::vector<Entry> entries, double sum_tol) : entries_(std::move(entries)) {
        double sum = 0.0;
        for (auto& e : entries_) {
            if (e.k1 < 0 || e.kdelta < 0) throw std::invalid_argument("degrees must be non-negative");
            if (e.p < 0.0 || !std::isfinite(e.p)) throw std::invalid_argument("mass out of range");
            sum += e.p;
        }
        if (sum <= 0.0) throw std::invalid_argument("distribution has no mass");
        if (std::abs(sum - 1.0) > sum_tol)
            throw std::invalid_argument("masses must sum to 1 within 1e-9");
        for (auto& e : entries_) e.p /= sum;
        std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
            return std::pair{a.k1, a.kdelta} < std::pair{b.k1, b.kdelta};
        });
        std::erase_if(entries_, [](const Entry& e) { return e.p == 0.0; });
        for (std::size_t i = 1; i < entries_.size(); ++i)
            if (entries_[i - 1].k1 == entries_[i].k1 && entries_[i - 1].kdelta == entries_[i].kdelta)
                throw std::invalid_argument("duplicate (k1, kdelta) entry");
    }

    std::vector<Entry> entries_;
};

}  // namespace egonet
