#include "agewatch/error.hpp"
#include "agewatch/mlp.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace agewatch;
using namespace agewatch::mlp;

namespace {

MlpNetwork zeros(std::size_t d, std::size_t h, std::size_t j) {
    MlpNetwork net;
    net.input_dim = d;
    net.hidden_dim = h;
    net.output_dim = j;
    net.w1 = Matrix(h, d);
    net.b1.assign(h, 0.0);
    net.w2 = Matrix(j, h);
    net.b2.assign(j, 0.0);
    return net;
}

WindowedDataset toy_dataset(std::mt19937_64& rng, std::size_t d, std::size_t q) {
    WindowedDataset ds;
    ds.order_m = d - 1;
    for (std::size_t i = 0; i < q; ++i) {
        ds.inputs.push_back(oracle::random_vector(rng, d, 0, 1));
        ds.targets.push_back(oracle::random_vector(rng, 1, 0, 1)[0]);
    }
    return ds;
}

// Parameter blocks in a fixed order, for finite differences.
std::vector<std::span<double>> blocks(MlpNetwork& net) {
    return {net.w1.flat(), net.b1, net.w2.flat(), net.b2};
}

} // namespace

TEST_SUITE("mlp") {

TEST_CASE("mlp_forward closed forms") {
    CHECK(mlp_forward(zeros(3, 4, 2), std::vector<double>{1, 2, 3}) == std::vector<double>{0, 0});
    auto bias = zeros(2, 3, 1);
    bias.b2[0] = 3;
    CHECK(mlp_forward(bias, std::vector<double>{-7, 9})[0] == 3.0);
    auto unit = zeros(1, 1, 1);
    unit.w1(0, 0) = 1;
    unit.w2(0, 0) = 1;
    CHECK(mlp_forward(unit, std::vector<double>{0.5})[0] == doctest::Approx(0.46211715726000974).epsilon(1e-15));
    CHECK_THROWS_AS(mlp_forward(unit, std::vector<double>{0.5, 1}), Error);
}

TEST_CASE("init_mlp is seeded and bounded") {
    const auto a = init_mlp(4, 8, 1, 5);
    CHECK(a == init_mlp(4, 8, 1, 5));
    CHECK_FALSE(a == init_mlp(4, 8, 1, 6));
    for (const double w : a.w1.flat()) {
        CHECK(std::abs(w) <= 0.5 / std::sqrt(4.0));
    }
    for (const double w : a.w2.flat()) {
        CHECK(std::abs(w) <= 0.5 / std::sqrt(8.0));
    }
    CHECK_THROWS_AS(init_mlp(1, 0, 1, 0), Error);
}

TEST_CASE("backprop gradient matches central finite differences") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        auto net = init_mlp(3, 4, 1, rng());
        for (auto block : blocks(net)) {
            for (auto& p : block) p = oracle::random_vector(rng, 1, -1.5, 1.5)[0];
        }
        const auto x = oracle::random_vector(rng, 3, -1, 1);
        const auto t = oracle::random_vector(rng, 1, -1, 1);
        const auto g = mlp_gradient(net, x, t);
        std::vector<double> analytic;
        for (auto block : std::vector<std::span<const double>>{g.w1.flat(), g.b1, g.w2.flat(), g.b2}) {
            analytic.insert(analytic.end(), block.begin(), block.end());
        }
        std::vector<double> numeric;
        for (auto block : blocks(net)) {
            const auto part = oracle::central_differences(block, [&] { return mlp_sample_error(net, x, t); });
            numeric.insert(numeric.end(), part.begin(), part.end());
        }
        REQUIRE(oracle::relative_error(analytic, numeric) < 1e-6);
    }
}

TEST_CASE("multi-output gradient also matches") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        auto net = init_mlp(2, 5, 3, rng());
        const auto x = oracle::random_vector(rng, 2, -1, 1);
        const auto t = oracle::random_vector(rng, 3, -1, 1);
        const auto g = mlp_gradient(net, x, t);
        const auto numeric = oracle::central_differences(net.w1.flat(), [&] { return mlp_sample_error(net, x, t); });
        REQUIRE(oracle::relative_error(g.w1.flat(), numeric) < 1e-6);
    }
}

TEST_CASE("train_mlp") {
    std::mt19937_64 rng(71);
    const auto ds = toy_dataset(rng, 3, 40);

    SUBCASE("zero epochs leaves parameters unchanged") {
        auto net = init_mlp(3, 4, 1, 1);
        const auto before = net;
        TrainConfig config;
        config.epochs = 0;
        const auto report = train_mlp(net, ds, config);
        CHECK(net == before);
        CHECK(report.mse_history.empty());
    }
    SUBCASE("fixed seed gives identical parameters") {
        TrainConfig config;
        config.epochs = 30;
        config.learning_rate = 0.05;
        config.shuffle = true;
        config.seed = 3;
        auto a = init_mlp(3, 8, 1, 12);
        auto b = init_mlp(3, 8, 1, 12);
        const auto ra = train_mlp(a, ds, config);
        const auto rb = train_mlp(b, ds, config);
        CHECK(a == b);
        CHECK(ra.mse_history == rb.mse_history);
        CHECK(ra.mse_history.back() < ra.mse_history.front());
    }
    SUBCASE("batch mode reduces the loss with a small step") {
        auto net = init_mlp(3, 8, 1, 2);
        const double before = mlp_mse(net, ds);
        TrainConfig config;
        config.mode = TrainMode::Batch;
        config.learning_rate = 1e-3;
        config.epochs = 20;
        const auto report = train_mlp(net, ds, config);
        CHECK(report.mse_history.back() < before);
    }
    SUBCASE("divergence and bad inputs") {
        auto net = init_mlp(3, 8, 1, 2);
        TrainConfig config;
        config.learning_rate = 1e4;
        config.epochs = 100;
        CHECK_THROWS_WITH_AS(train_mlp(net, ds, config), doctest::Contains("diverged"), Error);
        config.learning_rate = 0.1;
        CHECK_THROWS_AS(train_mlp(net, WindowedDataset{}, config), Error);
        auto wrong = init_mlp(2, 8, 1, 2);
        CHECK_THROWS_AS(train_mlp(wrong, ds, config), Error);
    }
}

TEST_CASE("mlp model documents") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        const auto net = init_mlp(1 + rng() % 5, 1 + rng() % 9, 1 + rng() % 3, rng());
        const auto text = save_model(net);
        CHECK(text.starts_with("agewatch-mlp v1\n"));
        REQUIRE(load_model(text) == net);
    }
    const auto text = save_model(init_mlp(2, 2, 1, 0));
    CHECK_THROWS_AS(load_model(text.substr(0, text.size() - 4)), Error);
    CHECK_THROWS_AS(load_model(text + "1\n"), Error);
    CHECK_THROWS_WITH_AS(load_model("agewatch-mlp v7\n"), doctest::Contains("unsupported"), Error);
}

}
