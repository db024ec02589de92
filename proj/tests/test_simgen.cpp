#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "tbr/simgen.hpp"

using namespace tbr;

TEST_CASE("regression curves") {
    CHECK(regression_value(RegressionKind::Parabola, 0.5) == 0.0);
    CHECK(regression_value(RegressionKind::Parabola, 0.0) == 2.5);
    CHECK(regression_value(RegressionKind::Parabola, 1.0) == 2.5);
    CHECK(regression_value(RegressionKind::SineLinear, 0.25) ==
          doctest::Approx(1.5).epsilon(1e-14));
    CHECK(regression_value(RegressionKind::SineLinear, 0.0) == 0.0);
    CHECK_THROWS(regression_value(RegressionKind::Parabola, -0.1));
    CHECK_THROWS(regression_value(RegressionKind::Parabola, 1.1));
}

TEST_CASE("error draws are nonpositive with the right means") {
    Rng rng(1);
    const std::size_t big = 1000000;
    const auto weib = sample_errors(ErrorKind::WeibullNeg, big, rng);
    double sum = 0.0;
    std::size_t positives = 0;
    for (double e : weib) {
        if (e > 0.0) ++positives;
        sum -= e;
    }
    CHECK(positives == 0);
    // E[-eps] = Gamma(1 + 1/3) for Weibull(1, 3)
    CHECK(std::abs(sum / big - std::tgamma(4.0 / 3.0)) < 0.01);

    const auto expo = sample_errors(ErrorKind::ExpNeg, big, rng);
    sum = 0.0;
    positives = 0;
    for (double e : expo) {
        if (e > 0.0) ++positives;
        sum -= e;
    }
    CHECK(positives == 0);
    CHECK(std::abs(sum / big - 1.0 / 3.0) < 0.005);
}

TEST_CASE("fixed design grid") {
    const ScenarioSpec spec = ScenarioSpec::model(1, 1.0, 3, Design::Fixed, 1);
    const Dataset data = make_dataset(spec);
    REQUIRE(data.size() == 3);
    CHECK(data[0].x == 0.25);
    CHECK(data[1].x == 0.5);
    CHECK(data[2].x == 0.75);
}

TEST_CASE("identity parameter leaves the regression-plus-error sum") {
    const ScenarioSpec spec = ScenarioSpec::model(1, 1.0, 50, Design::Fixed, 17);
    const Dataset data = make_dataset(spec);
    for (const Sample& s : data.samples()) {
        const double h = regression_value(RegressionKind::Parabola, s.x);
        CHECK(s.y <= h);  // errors are nonpositive
    }
}

TEST_CASE("generation round-trip recovers the errors") {
    for (double theta0 : {0.0, 0.5, 1.7, 2.0}) {
        ScenarioSpec spec = ScenarioSpec::model(3, theta0, 64, Design::Fixed, 23);
        const Dataset data = make_dataset(spec);
        const TransformSpec tf = TransformSpec::yeo_johnson(theta0);
        for (const Sample& s : data.samples()) {
            const double eps =
                tf.forward(s.y) - regression_value(RegressionKind::SineLinear, s.x);
            CHECK(eps <= 1e-10);
            CHECK(eps > -10.0);
        }
    }
}

TEST_CASE("boundary validity of transformed responses") {
    const ScenarioSpec spec = ScenarioSpec::model(2, 0.5, 200, Design::Fixed, 3);
    const Dataset data = make_dataset(spec);
    const TransformSpec tf = TransformSpec::yeo_johnson(0.5);
    for (const Sample& s : data.samples()) {
        CHECK(tf.forward(s.y) <=
              regression_value(RegressionKind::Parabola, s.x) + 1e-10);
    }
}

TEST_CASE("determinism: identical specs give identical bytes") {
    const ScenarioSpec spec = ScenarioSpec::model(4, 0.5, 100, Design::Random, 99);
    std::ostringstream a, b;
    make_dataset(spec).write_csv(a);
    make_dataset(spec).write_csv(b);
    CHECK(a.str() == b.str());
    ScenarioSpec other = spec;
    other.seed = 100;
    std::ostringstream c;
    make_dataset(other).write_csv(c);
    CHECK(a.str() != c.str());
}

TEST_CASE("random design stays sorted inside [0,1]") {
    const ScenarioSpec spec = ScenarioSpec::model(1, 0.5, 128, Design::Random, 8);
    const Dataset data = make_dataset(spec);
    for (std::size_t i = 1; i < data.size(); ++i) {
        CHECK(data[i - 1].x <= data[i].x);
    }
    CHECK(data[0].x >= 0.0);
    CHECK(data[data.size() - 1].x <= 1.0);
}

TEST_CASE("scenario validation") {
    ScenarioSpec spec = ScenarioSpec::model(1, 0.5, 100, Design::Fixed, 1);
    spec.n = 1;
    CHECK_THROWS(spec.validate());
    spec.n = 100;
    spec.theta0 = 3.0;
    CHECK_THROWS(spec.validate());
    CHECK_THROWS(ScenarioSpec::model(5, 0.5, 100, Design::Fixed, 1));
}

TEST_CASE("csv round trip") {
    const ScenarioSpec spec = ScenarioSpec::model(1, 0.7, 30, Design::Fixed, 55);
    const Dataset data = make_dataset(spec);
    std::ostringstream out;
    data.write_csv(out);
    std::istringstream in(out.str());
    const Dataset back = Dataset::read_csv(in, Design::Fixed);
    REQUIRE(back.size() == data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        CHECK(back[i].x == data[i].x);
        CHECK(back[i].y == data[i].y);
    }
}
