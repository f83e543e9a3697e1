#include <doctest.h>

#include "l0path/errors.hpp"
#include "l0path/problems.hpp"

using namespace l0path;

TEST_CASE("presets reproduce the scenario table") {
    struct Row {
        const char* name;
        ProblemKind kind;
        double snr;
        std::size_t k, f, delta, m, n, sigma;
    };
    const double inf = infinity;
    const Row rows[] = {
        {"A", ProblemKind::deconvolution, 25, 30, 1, 1, 300, 282, 3},
        {"B", ProblemKind::deconvolution, 10, 10, 1, 1, 300, 252, 8},
        {"C", ProblemKind::deconvolution, 25, 10, 3, 1, 900, 756, 24},
        {"D", ProblemKind::deconvolution, 25, 30, 6, 1, 1800, 1692, 18},
        {"E", ProblemKind::jumps, 25, 10, 1, 1, 300, 300, 0},
        {"F", ProblemKind::jumps, 25, 30, 1, 1, 300, 300, 0},
        {"G", ProblemKind::jumps, 10, 10, 1, 1, 300, 300, 0},
        {"H", ProblemKind::deconvolution, inf, 10, 3, 2, 450, 756, 24},
        {"I", ProblemKind::deconvolution, inf, 30, 3, 2, 450, 756, 24},
        {"J", ProblemKind::deconvolution, inf, 10, 1, 4, 75, 252, 8},
    };
    for (const Row& r : rows) {
        CAPTURE(r.name);
        const Scenario s = scenario_preset(r.name);
        CHECK(s.kind == r.kind);
        CHECK(s.snr_db == r.snr);
        CHECK(s.k == r.k);
        CHECK(s.f == r.f);
        CHECK(s.delta == r.delta);
        CHECK(s.m() == r.m);
        CHECK(s.n() == r.n);
        if (r.kind == ProblemKind::deconvolution) CHECK(s.sigma == r.sigma);
    }
    CHECK_THROWS_AS(scenario_preset("Z"), Error);
}

TEST_CASE("generated dictionary sizes") {
    for (const char* name : {"A", "B", "E", "H", "J"}) {
        CAPTURE(name);
        const Scenario s = scenario_preset(name);
        const auto d = scenario_dictionary(s);
        CHECK(static_cast<std::size_t>(d->rows()) == s.m());
        CHECK(static_cast<std::size_t>(d->cols()) == s.n());
    }
}

TEST_CASE("deconvolution dictionary structure") {
    const auto d = gaussian_deconv_dictionary(300, 3, 1);
    const Eigen::MatrixXd& a = d->matrix();
    CHECK(a.rows() == 300);
    CHECK(a.cols() == 282);
    // Toeplitz: constant diagonals.
    for (Index i = 1; i < a.rows(); ++i)
        for (Index j = 1; j < a.cols(); ++j) REQUIRE(a(i, j) == a(i - 1, j - 1));
    for (Index j = 0; j < a.cols(); ++j) CHECK(d->col_norms_sq()(j) == doctest::Approx(d->col_norms_sq()(0)));
    // Peak 1 at the centre tap, 3 sigma below the first row of the support.
    CHECK(a(9, 0) == 1.0);
    CHECK(a(0, 0) == doctest::Approx(std::exp(-81.0 / 18.0)));
    CHECK(a(17, 0) == doctest::Approx(std::exp(-64.0 / 18.0)));
    CHECK(a(18, 0) == 0.0);

    const auto dec = gaussian_deconv_dictionary(900, 24, 2);
    CHECK(dec->rows() == 450);
    CHECK(dec->cols() == 756);
    // Decimated rows are every other row of the full-rate matrix.
    const auto full = gaussian_deconv_dictionary(900, 24, 1);
    for (Index r = 0; r < 450; r += 37) CHECK(dec->matrix().row(r) == full->matrix().row(2 * r));

    CHECK_THROWS_AS(gaussian_deconv_dictionary(18, 3, 1), Error);
    CHECK_THROWS_AS(gaussian_deconv_dictionary(300, 3, 7), Error);
    CHECK_THROWS_AS(gaussian_deconv_dictionary(300, 0, 1), Error);
}

TEST_CASE("jump dictionary") {
    const auto d = jump_dictionary(3);
    Eigen::Matrix3d expected;
    expected << 1, 0, 0, 1, 1, 0, 1, 1, 1;
    CHECK(d->matrix() == expected);
    CHECK(d->col_norms_sq() == Eigen::Vector3d(3, 2, 1));
    CHECK(d->matrix() * Eigen::Vector3d(2, 0, -1) == Eigen::Vector3d(2, 2, 1));
}

TEST_CASE("instances are deterministic and well-formed") {
    Scenario s = scenario_preset("E");
    s.seed = 42;
    const Instance a = draw_instance(s, 7);
    const Instance b = draw_instance(s, 7);
    const Instance c = draw_instance(s, 8);
    CHECK(a.y == b.y);
    CHECK(a.support_star == b.support_star);
    CHECK(a.y != c.y);
    CHECK(a.support_star.size() == 10);
    CHECK(a.y.size() == 300);
    for (Index i = 0; i < a.x_star.size(); ++i) CHECK((a.x_star(i) != 0.0) == a.support_star.contains(i));

    Scenario clean = scenario_preset("J");
    const Instance j = draw_instance(clean, 0);
    CHECK(j.sigma_n_sq == 0.0);
    CHECK(j.y == j.dict->matrix() * j.x_star);
}

TEST_CASE("empirical SNR matches the target") {
    Scenario s = scenario_preset("G");
    const auto dict = scenario_dictionary(s);
    double sum_db = 0.0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const Instance inst = draw_instance(s, dict, static_cast<std::uint64_t>(t));
        const Eigen::VectorXd clean = dict->matrix() * inst.x_star;
        const double noise = (inst.y - clean).squaredNorm() / static_cast<double>(clean.size());
        sum_db += 10.0 * std::log10(clean.squaredNorm() / (static_cast<double>(clean.size()) * noise));
    }
    CHECK(std::abs(sum_db / trials - s.snr_db) <= 0.5);
}
