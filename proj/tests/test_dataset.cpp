#include <doctest.h>

#include <sstream>

#include "dimred/dataset.hpp"
#include "dimred/error.hpp"
#include "dimred/rng.hpp"
#include "dimred/synthetic.hpp"

using namespace dimred;

namespace {

Dataset parse(const std::string& text) {
    std::istringstream in(text);
    return parse_csv(in, "test.csv");
}

Dataset single_column_pair(std::vector<double> col) {
    const auto n = static_cast<Eigen::Index>(col.size());
    Matrix values(n, 2);
    std::vector<std::string> ids;
    for (Eigen::Index i = 0; i < n; ++i) {
        values(i, 0) = col[static_cast<std::size_t>(i)];
        values(i, 1) = static_cast<double>(i);
        ids.push_back(std::to_string(i));
    }
    return Dataset(ids, {"x", "idx"}, values);
}

}  // namespace

TEST_CASE("load minimal well-formed file") {
    const auto d = parse("ward,IMD Score,Income Score\nE1,1.5,2\nE2,3,4.25\n");
    CHECK(d.n_samples() == 2);
    CHECK(d.n_features() == 2);
    CHECK(d.feature_names() == std::vector<std::string>{"IMD Score", "Income Score"});
    CHECK(d.ids() == std::vector<std::string>{"E1", "E2"});
    CHECK(d.values()(1, 1) == 4.25);
}

TEST_CASE("CRLF, quoted ids and a trailing blank line are accepted") {
    const auto d = parse("id,a,b\r\n\"Ward, North\",1,2\r\nW2,3,-4e-1\r\n\r\n");
    CHECK(d.ids()[0] == "Ward, North");
    CHECK(d.values()(1, 1) == doctest::Approx(-0.4));
}

TEST_CASE("non-numeric cell names row and column") {
    try {
        parse("id,a,b\nr1,1,2\nr2,abc,3\n");
        FAIL("expected IngestionError");
    } catch (const IngestionError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("'r2'") != std::string::npos);
        CHECK(msg.find("'a'") != std::string::npos);
        CHECK(msg.find("abc") != std::string::npos);
    }
}

TEST_CASE("wrong arity names the line") {
    try {
        parse("id,a,b\nr1,1,2\nr2,3\n");
        FAIL("expected IngestionError");
    } catch (const IngestionError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("schema violations") {
    CHECK_THROWS_AS(parse("id,a,a\nr1,1,2\nr2,3,4\n"), SchemaError);
    CHECK_THROWS_AS(parse("id,a\nr1,1\nr2,2\n"), SchemaError);
    // fewer samples than features
    CHECK_THROWS_AS(parse("id,a,b,c\nr1,1,2,3\nr2,3,4,5\n"), SchemaError);
    CHECK_THROWS_AS(parse(""), IngestionError);
    CHECK_THROWS_AS(parse("id,a,b\nr1,1,nan\nr2,3,4\n"), IngestionError);
    CHECK_THROWS_AS(parse("id,a,b\nr1,1,\nr2,3,4\n"), IngestionError);
    CHECK_THROWS_AS(load_csv("/nonexistent/file.csv"), IoError);
}

TEST_CASE("630-row eight-feature file round-trips through CSV") {
    const auto original = synthetic::london_style(630, 11);
    std::stringstream buf;
    write_csv(buf, original);
    const auto back = parse_csv(buf);
    CHECK(back.n_samples() == 630);
    CHECK(back.n_features() == 8);
    CHECK(back.feature_names() == original.feature_names());
    CHECK((back.values() - original.values()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("minmax examples") {
    SUBCASE("symmetric range") {
        const auto z = minmax_normalize(single_column_pair({0, 5, 10}));
        CHECK(z.data.values()(0, 0) == 0.0);
        CHECK(z.data.values()(1, 0) == 0.5);
        CHECK(z.data.values()(2, 0) == 1.0);
        CHECK(z.warnings.empty());
    }
    SUBCASE("constant column") {
        const auto z = minmax_normalize(single_column_pair({7, 7, 7}));
        CHECK(z.data.values().col(0).isZero(0.0));
        REQUIRE(z.warnings.size() == 1);
        CHECK(z.warnings[0].find("'x'") != std::string::npos);
    }
    SUBCASE("two points") {
        const auto z = minmax_normalize(single_column_pair({2, 4}));
        CHECK(z.data.values()(0, 0) == 0.0);
        CHECK(z.data.values()(1, 0) == 1.0);
    }
}

TEST_CASE("minmax properties on random data") {
    Rng rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(30));
        const int d = 2 + static_cast<int>(rng.below(3));
        Matrix v(n, d);
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < d; ++c) v(i, c) = rng.uniform(-50, 50);
        std::vector<std::string> ids(static_cast<std::size_t>(n), "r");
        std::vector<std::string> names;
        for (int c = 0; c < d; ++c) names.push_back("f" + std::to_string(c));
        const Dataset data(ids, names, v);

        const auto once = minmax_normalize(data).data.values();
        const auto twice = minmax_normalize(minmax_normalize(data).data).data.values();
        CHECK((once - twice).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(once.minCoeff() >= 0.0);
        CHECK(once.maxCoeff() <= 1.0);

        for (int c = 0; c < d; ++c) {
            CHECK(once.col(c).minCoeff() == 0.0);
            CHECK(once.col(c).maxCoeff() == 1.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (v(i, c) < v(j, c)) CHECK(once(i, c) <= once(j, c));
        }

        const double a = rng.uniform(0.1, 20.0);
        const double b = rng.uniform(-100, 100);
        const Matrix affine = (v.array() * a + b).matrix();
        const auto scaled = minmax_normalize(Dataset(ids, names, affine)).data.values();
        CHECK((scaled - once).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("select_columns keeps order and names") {
    const auto d = synthetic::london_style(20, 1);
    const auto s = d.select_columns({6, 2, 0});
    CHECK(s.feature_names() == std::vector<std::string>{"Crime Score", "Employment Score", "IMD Score"});
    CHECK(s.values().col(0) == d.values().col(6));
    CHECK_THROWS_AS(d.select_columns({0, 9}), ParameterError);
}
