#include "hg/text_io.hpp"

#include <istream>
#include <sstream>

namespace hg {

namespace {

constexpr std::string_view kVerticesPrefix = "# vertices:";

std::string render_edge(const Hypergraph& h, Hyperedge e) {
    std::string out;
    bool first = true;
    for (std::size_t v : e.positions()) {
        if (!first) out.push_back(',');
        out += h.vertex_set().label(v);
        first = false;
    }
    return out;
}

Hypergraph parse_lines(const std::vector<std::string>& lines) {
    if (lines.empty() || !lines[0].starts_with(kVerticesPrefix))
        throw ParseError("expected '# vertices:' header line", 0);
    std::istringstream header(lines[0].substr(kVerticesPrefix.size()));
    std::vector<std::string> labels;
    std::string token;
    while (header >> token) labels.push_back(token);
    VertexSet vertices(std::move(labels));

    std::vector<Hyperedge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) break;
        std::uint64_t bits = 0;
        for (const std::string& member : split_top_level(lines[i], ',')) {
            auto pos = vertices.position_of(member);
            if (!pos) throw ParseError("unknown vertex label '" + member + "'", i);
            bits |= std::uint64_t{1} << *pos;
        }
        edges.push_back(Hyperedge(bits));
    }
    return Hypergraph(std::move(vertices), std::move(edges));
}

}  // namespace

std::string to_text(const Hypergraph& h) {
    std::string out(kVerticesPrefix);
    for (const auto& label : h.vertex_set().labels()) {
        out.push_back(' ');
        out += label;
    }
    out.push_back('\n');
    for (Hyperedge e : h.edges()) {
        out += render_edge(h, e);
        out.push_back('\n');
    }
    out.push_back('\n');
    return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return parse_lines(lines);
}

std::optional<Hypergraph> read_hypergraph(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            if (lines.empty()) continue;  // tolerate leading blank lines
            break;
        }
        lines.push_back(line);
    }
    if (lines.empty()) return std::nullopt;
    return parse_lines(lines);
}

std::vector<std::string> split_top_level(std::string_view text, char delim) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == delim && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace hg
