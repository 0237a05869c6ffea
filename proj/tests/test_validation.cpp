#include <doctest.h>

#include <sstream>

#include "dimred/error.hpp"
#include "dimred/validation.hpp"

using namespace dimred;

TEST_CASE("generated cases are argmax-consistent") {
    const auto cases = generate_cases(250, 7);
    CHECK(cases.size() == 250);
    CHECK(count_misclassified(cases) == 0);
    for (const auto& c : cases) {
        CHECK(c.integrity == 1.0 - c.alpha);
        CHECK(c.si_fs >= 0.0);
        CHECK(c.si_fs <= 1.0);
        CHECK(c.interpretability_score == c.alpha * c.si_fs);
        CHECK(c.integrity_score == c.integrity * c.si_fe);
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(count_misclassified(generate_cases(100, seed)) == 0);
}

TEST_CASE("case generation is deterministic") {
    const auto a = generate_cases(1, 3);
    const auto b = generate_cases(1, 3);
    CHECK(a[0].si_fs == b[0].si_fs);
    CHECK(a[0].si_fe == b[0].si_fe);
    CHECK(a[0].alpha == b[0].alpha);
    CHECK_THROWS_AS(generate_cases(0, 1), ParameterError);
}

TEST_CASE("misclassification counter detects a wrong label") {
    auto cases = generate_cases(10, 1);
    cases[3].chosen = cases[3].chosen == Method::Selection ? Method::Extraction : Method::Selection;
    CHECK(count_misclassified(cases) == 1);
}

TEST_CASE("alpha = 1 always selects") {
    DecisionConfig c;
    c.interpretability_oriented = 1.0;
    c.integrity_oriented = 0.0;
    CHECK(decide(0.01, 0.99, c).method == Method::Selection);
    CHECK(decide(0.01, 0.99, c).integrity_score == 0.0);
}

TEST_CASE("sweep on reference weights") {
    const auto rows = resolution_sweep(reference_frsd_weights(), reference_pca_weights(), default_sweep_targets());
    REQUIRE(rows.size() == 10);
    const auto& full = rows.back();
    CHECK(full.target == 1.0);
    CHECK(full.m_fs == 8);
    CHECK(full.m_fe == 8);

    const auto r85 = resolution_sweep(reference_frsd_weights(), reference_pca_weights(), {0.85}).front();
    CHECK(r85.m_fs == 7);
    CHECK(r85.m_fe == 7);
    CHECK(std::abs(r85.achieved_fs - 0.8826) < 5e-4);
    CHECK(std::abs(r85.achieved_fe - 0.9069) < 5e-4);
    REQUIRE(r85.delta.has_value());
    CHECK(std::abs(*r85.delta - 0.0243) < 5e-4);

    const auto& r50 = rows[4];
    CHECK(r50.m_fs == 4);
    CHECK(r50.m_fe == 4);
    CHECK(std::abs(*r50.delta - 0.0191) < 5e-4);
    CHECK(delta_violations(rows).empty());
}

TEST_CASE("CSV outputs have one row per item") {
    const auto cases = generate_cases(5, 2);
    std::ostringstream a, b, c;
    write_cases_csv(a, cases);
    write_scatter_csv(b, cases);
    write_sweep_csv(c, resolution_sweep(reference_frsd_weights(), reference_pca_weights(), {0.3, 1.0}));
    auto lines = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
    CHECK(lines(a.str()) == 6);
    CHECK(lines(b.str()) == 6);
    CHECK(lines(c.str()) == 3);
    CHECK(b.str().rfind("interpretability_score,integrity_score,class\n", 0) == 0);
}
