#include "rainbow/ecg_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>
#include <vector>

namespace rainbow {

EcgParseError::EcgParseError(std::size_t line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::uint64_t parse_number(std::string_view tok, std::size_t line, std::uint64_t limit) {
    if (tok.empty()) {
        throw EcgParseError(line, "empty field");
    }
    if (tok.size() > 1 && tok[0] == '0') {
        throw EcgParseError(line, "leading zero in '" + std::string(tok) + "'");
    }
    std::uint64_t value = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') {
            throw EcgParseError(line, "non-digit in '" + std::string(tok) + "'");
        }
        const auto digit = static_cast<std::uint64_t>(ch - '0');
        if (value > (limit - digit) / 10) {
            throw EcgParseError(line, "value '" + std::string(tok) + "' out of range");
        }
        value = value * 10 + digit;
    }
    return value;
}

std::vector<std::string_view> split_fields(std::string_view line, std::size_t line_no, std::size_t expected) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ' ') {
            if (i == start) {
                throw EcgParseError(line_no, "expected single spaces between fields");
            }
            fields.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    if (fields.size() != expected) {
        throw EcgParseError(line_no, "expected " + std::to_string(expected) + " fields, found " +
                                         std::to_string(fields.size()));
    }
    return fields;
}

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    std::string_view next() {
        ++line_;
        if (pos_ >= text_.size()) {
            throw EcgParseError(line_, "unexpected end of input");
        }
        auto nl = text_.find('\n', pos_);
        if (nl == std::string_view::npos) {
            throw EcgParseError(line_, "missing trailing newline");
        }
        auto line = text_.substr(pos_, nl - pos_);
        pos_ = nl + 1;
        if (line.find('\r') != std::string_view::npos) {
            throw EcgParseError(line_, "carriage return in line");
        }
        return line;
    }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

} // namespace

EdgeColoredGraph parse_ecg(std::string_view text) {
    LineReader in(text);
    if (in.next() != "ecg 1") {
        throw EcgParseError(1, "expected header 'ecg 1'");
    }
    auto counts = split_fields(in.next(), 2, 2);
    const auto n = parse_number(counts[0], 2, std::numeric_limits<Vertex>::max());
    const auto m = parse_number(counts[1], 2, std::numeric_limits<std::uint32_t>::max());
    if (m > n * (n - (n > 0 ? 1 : 0)) / 2) {
        throw EcgParseError(2, "edge count exceeds n(n-1)/2");
    }

    std::vector<ColoredEdge> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        auto line = in.next();
        const auto no = in.line();
        auto f = split_fields(line, no, 3);
        const auto u = parse_number(f[0], no, std::numeric_limits<Vertex>::max());
        const auto v = parse_number(f[1], no, std::numeric_limits<Vertex>::max());
        const auto c = parse_number(f[2], no, std::numeric_limits<Color>::max());
        if (u >= n || v >= n) {
            throw EcgParseError(no, "vertex id out of range");
        }
        if (u >= v) {
            throw EcgParseError(no, "edge must satisfy u < v");
        }
        ColoredEdge e{static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(c)};
        if (!edges.empty() && std::tie(edges.back().u, edges.back().v) >= std::tie(e.u, e.v)) {
            throw EcgParseError(no, "edges not strictly sorted by (u, v)");
        }
        edges.push_back(e);
    }
    if (!in.at_end()) {
        throw EcgParseError(in.line() + 1, "trailing content after " + std::to_string(m) + " edges");
    }
    return EdgeColoredGraph::build(static_cast<std::size_t>(n), std::move(edges));
}

std::string serialize_ecg(const EdgeColoredGraph &g) {
    std::string out;
    out.reserve(16 + g.edge_count() * 16);
    out += "ecg 1\n";
    out += std::to_string(g.vertex_count());
    out += ' ';
    out += std::to_string(g.edge_count());
    out += '\n';
    for (const auto &e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += ' ';
        out += std::to_string(e.color);
        out += '\n';
    }
    return out;
}

EdgeColoredGraph read_ecg_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ecg(buf.str());
}

void write_ecg_file(const std::filesystem::path &path, const EdgeColoredGraph &g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << serialize_ecg(g);
}

} // namespace rainbow
