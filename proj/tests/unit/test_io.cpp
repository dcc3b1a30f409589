#include "../oracles.hpp"

#include "rainbow/ecg_io.hpp"

#include <doctest.h>

#include <filesystem>

using namespace rainbow;

namespace {

std::size_t error_line(const std::string &text) {
    try {
        parse_ecg(text);
    } catch (const EcgParseError &e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("serialize emits the canonical text") {
    const auto g = build_graph(3, {{2, 1, 4}, {0, 1, 3}});
    CHECK(serialize_ecg(g) == "ecg 1\n3 2\n0 1 3\n1 2 4\n");
}

TEST_CASE("round trip is exact on random graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = std::uniform_int_distribution<std::size_t>(0, 15)(rng);
        const auto g = oracle::random_graph(rng, n, 0.4, 1 + trial % 9);
        const auto text = serialize_ecg(g);
        const auto back = parse_ecg(text);
        CHECK(back == g);
        CHECK(serialize_ecg(back) == text);
    }
}

TEST_CASE("malformed input names the offending line") {
    CHECK(error_line("ecg 2\n1 0\n") == 1);
    CHECK(error_line("ecg 1\n3 1\n0 1 01\n") == 3);
    CHECK(error_line("ecg 1\n3 1\n0  1 1\n") == 3);
    CHECK(error_line("ecg 1\r\n3 0\n") == 1);
    CHECK(error_line("ecg 1\n3 1\n1 0 1\n") == 3);
    CHECK(error_line("ecg 1\n3 2\n0 2 1\n0 1 1\n") == 4);
    CHECK(error_line("ecg 1\n3 1\n0 3 1\n") == 3);
    CHECK(error_line("ecg 1\n3 4\n") == 2);
    CHECK(error_line("ecg 1\n3 1\n0 1 1") == 3);
    CHECK(error_line("ecg 1\n3 1\n0 1 1\n0 2 1\n") != 0);
    CHECK(error_line("ecg 1\n3 2\n0 1 1\n") != 0);
    CHECK(error_line("ecg 1\n3 1\n0 1 x\n") == 3);
    CHECK(error_line("ecg 1\n3 1\n0 1 1 5\n") == 3);
}

TEST_CASE("files round trip") {
    const auto path = std::filesystem::temp_directory_path() / "rainbowkit_io_test.ecg";
    const auto g = build_graph(4, {{0, 1, 0}, {2, 3, 0}});
    write_ecg_file(path, g);
    CHECK(read_ecg_file(path) == g);
    std::filesystem::remove(path);
}
