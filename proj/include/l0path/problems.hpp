#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "l0path/dictionary.hpp"

namespace l0path {

enum class ProblemKind { deconvolution, jumps };

const char* to_string(ProblemKind kind) noexcept;

/// Benchmark configuration. Dimensions derive from the size factor f:
/// m_base = 300 f; deconvolution uses n = m_base - 6 sigma columns and keeps
/// every delta-th row (m = m_base / delta); jumps use m = n = m_base.
struct Scenario {
    std::string name;
    ProblemKind kind = ProblemKind::jumps;
    double snr_db = infinity;
    std::size_t k = 10;
    std::size_t f = 1;
    std::size_t delta = 1;
    std::size_t sigma = 0;
    std::uint64_t seed = 0;

    std::size_t m_base() const noexcept { return 300 * f; }
    std::size_t m() const noexcept { return kind == ProblemKind::jumps ? m_base() : m_base() / delta; }
    std::size_t n() const noexcept { return kind == ProblemKind::jumps ? m_base() : m_base() - 6 * sigma; }
};

/// Presets "A" .. "J". Throws InvalidArgument for unknown names.
Scenario scenario_preset(const std::string& name);
std::vector<std::string> scenario_names();

/// Gaussian impulse exp(-t^2 / (2 sigma^2)) sampled at t = -3 sigma .. 3 sigma - 1
/// (peak 1), as an m_base x (m_base - 6 sigma) Toeplitz matrix whose shifted
/// responses all fit in the observation window, keeping every delta-th row.
/// Throws BadDims unless m_base > 6 sigma, sigma >= 1 and delta divides m_base.
DictionaryPtr gaussian_deconv_dictionary(std::size_t m_base, std::size_t sigma, std::size_t delta);

/// n x n lower-triangular ones: atom j is a unit step starting at sample j.
DictionaryPtr jump_dictionary(std::size_t n);

DictionaryPtr scenario_dictionary(const Scenario& scenario);

struct Instance {
    DictionaryPtr dict;
    Eigen::VectorXd x_star;
    Support support_star;
    Eigen::VectorXd y;
    double sigma_n_sq = 0.0;

    ProblemPtr problem() const { return make_problem(dict, y); }
};

/// Draws k atom locations uniformly without replacement, standard Gaussian
/// amplitudes and white Gaussian noise of variance ||A x*||^2 / (m 10^(SNR/10))
/// (zero for infinite SNR). Deterministic in (scenario.seed, trial).
Instance draw_instance(const Scenario& scenario, DictionaryPtr dict, std::uint64_t trial);
Instance draw_instance(const Scenario& scenario, std::uint64_t trial);

}  // namespace l0path
