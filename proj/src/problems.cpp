#include "l0path/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "l0path/errors.hpp"

namespace l0path {

const char* to_string(ProblemKind kind) noexcept {
    return kind == ProblemKind::jumps ? "jumps" : "deconvolution";
}

Scenario scenario_preset(const std::string& name) {
    using K = ProblemKind;
    auto make = [&](K kind, double snr, std::size_t k, std::size_t f, std::size_t delta, std::size_t sigma) {
        Scenario s;
        s.name = name;
        s.kind = kind;
        s.snr_db = snr;
        s.k = k;
        s.f = f;
        s.delta = delta;
        s.sigma = sigma;
        return s;
    };
    if (name == "A") return make(K::deconvolution, 25, 30, 1, 1, 3);
    if (name == "B") return make(K::deconvolution, 10, 10, 1, 1, 8);
    if (name == "C") return make(K::deconvolution, 25, 10, 3, 1, 24);
    if (name == "D") return make(K::deconvolution, 25, 30, 6, 1, 18);
    if (name == "E") return make(K::jumps, 25, 10, 1, 1, 0);
    if (name == "F") return make(K::jumps, 25, 30, 1, 1, 0);
    if (name == "G") return make(K::jumps, 10, 10, 1, 1, 0);
    if (name == "H") return make(K::deconvolution, infinity, 10, 3, 2, 24);
    if (name == "I") return make(K::deconvolution, infinity, 30, 3, 2, 24);
    if (name == "J") return make(K::deconvolution, infinity, 10, 1, 4, 8);
    throw Error(ErrorCode::invalid_argument, "unknown scenario '" + name + "'");
}

std::vector<std::string> scenario_names() { return {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J"}; }

DictionaryPtr gaussian_deconv_dictionary(std::size_t m_base, std::size_t sigma, std::size_t delta) {
    const std::size_t taps = 6 * sigma;
    if (sigma < 1 || m_base <= taps || delta < 1 || m_base % delta != 0) {
        throw Error(ErrorCode::bad_dims, "m_base=" + std::to_string(m_base) + " sigma=" + std::to_string(sigma) +
                                             " delta=" + std::to_string(delta));
    }
    const auto s = static_cast<double>(sigma);
    Eigen::VectorXd h(static_cast<Index>(taps));
    for (std::size_t q = 0; q < taps; ++q) {
        const double t = static_cast<double>(q) - 3.0 * s;
        h(static_cast<Index>(q)) = std::exp(-t * t / (2.0 * s * s));
    }
    const std::size_t n = m_base - taps;
    const std::size_t m = m_base / delta;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Index>(m), static_cast<Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t q = 0; q < taps; ++q) {
            const std::size_t row = j + q;
            if (row % delta == 0) a(static_cast<Index>(row / delta), static_cast<Index>(j)) = h(static_cast<Index>(q));
        }
    }
    return build_dictionary(std::move(a));
}

DictionaryPtr jump_dictionary(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::bad_dims, "jump dictionary needs n >= 1");
    const auto size = static_cast<Index>(n);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size);
    a.triangularView<Eigen::Lower>().setOnes();
    return build_dictionary(std::move(a));
}

DictionaryPtr scenario_dictionary(const Scenario& scenario) {
    if (scenario.kind == ProblemKind::jumps) return jump_dictionary(scenario.m_base());
    return gaussian_deconv_dictionary(scenario.m_base(), scenario.sigma, scenario.delta);
}

Instance draw_instance(const Scenario& scenario, DictionaryPtr dict, std::uint64_t trial) {
    const Index n = dict->cols();
    const Index m = dict->rows();
    if (scenario.k > static_cast<std::size_t>(n)) {
        throw Error(ErrorCode::bad_dims, "k exceeds the number of atoms");
    }
    std::seed_seq seq{static_cast<std::uint32_t>(scenario.seed), static_cast<std::uint32_t>(scenario.seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);

    // Partial Fisher-Yates for k distinct locations.
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index{0});
    for (std::size_t i = 0; i < scenario.k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, perm.size() - 1);
        std::swap(perm[i], perm[pick(rng)]);
    }
    std::vector<Index> locations(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(scenario.k));
    std::sort(locations.begin(), locations.end());

    Instance inst;
    inst.dict = std::move(dict);
    inst.x_star = Eigen::VectorXd::Zero(n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (Index i : locations) inst.x_star(i) = gauss(rng);
    inst.support_star = Support(std::move(locations));

    const Eigen::VectorXd clean = inst.dict->matrix() * inst.x_star;
    inst.y = clean;
    if (std::isfinite(scenario.snr_db)) {
        inst.sigma_n_sq = clean.squaredNorm() / (static_cast<double>(m) * std::pow(10.0, scenario.snr_db / 10.0));
        const double sd = std::sqrt(inst.sigma_n_sq);
        for (Index r = 0; r < m; ++r) inst.y(r) += sd * gauss(rng);
    }
    return inst;
}

Instance draw_instance(const Scenario& scenario, std::uint64_t trial) {
    return draw_instance(scenario, scenario_dictionary(scenario), trial);
}

}  // namespace l0path
