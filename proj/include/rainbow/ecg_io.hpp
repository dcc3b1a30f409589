#pragma once

#include "rainbow/graph.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

// The .ecg text format:
//
//   ecg 1
//   <n> <m>
//   <u> <v> <color>      (m lines, u < v, sorted by (u, v))
//
// ASCII decimal without leading zeros, single spaces, every line ends in '\n'.
// serialize_ecg emits exactly this form and parse_ecg accepts nothing else.

class EcgParseError : public std::runtime_error {
public:
    EcgParseError(std::size_t line, const std::string &what);

    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

EdgeColoredGraph parse_ecg(std::string_view text);
std::string serialize_ecg(const EdgeColoredGraph &g);

EdgeColoredGraph read_ecg_file(const std::filesystem::path &path);
void write_ecg_file(const std::filesystem::path &path, const EdgeColoredGraph &g);

} // namespace rainbow
