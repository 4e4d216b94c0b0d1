#include "hg/prob.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hg/sampler.hpp"
#include "hg/text_io.hpp"

namespace hg {

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void check_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
        throw InvalidInput(std::string(what) + " must lie in [0,1], got " + format_double(v));
}

}  // namespace

struct ProbabilityMap::Node {
    enum class Kind { Constant, PerDimension, Table, Complemented, Meet, JoinUnion, JoinOf };

    Kind kind;
    VertexSet vertices;
    std::string description;

    double constant = 0.0;
    std::vector<double> dims;
    std::unordered_map<std::uint64_t, double> table;
    std::shared_ptr<const Node> left;   // Complemented uses only `left`
    std::shared_ptr<const Node> right;
    std::size_t left_size = 0;  // JoinOf: |V'| (left block width)

    double evaluate(Hyperedge sigma) const {
        switch (kind) {
            case Kind::Constant:
                return constant;
            case Kind::PerDimension: {
                std::size_t i = static_cast<std::size_t>(sigma.cardinality()) - 1;
                return i < dims.size() ? dims[i] : 0.0;
            }
            case Kind::Table: {
                auto it = table.find(sigma.bits());
                if (it == table.end())
                    throw InvalidInput("table map is not total over Delta[V]: missing an edge value");
                return it->second;
            }
            case Kind::Complemented:
                return 1.0 - left->evaluate(sigma);
            case Kind::Meet:
                return left->evaluate(sigma) * right->evaluate(sigma);
            case Kind::JoinUnion:
                return 1.0 - (1.0 - left->evaluate(sigma)) * (1.0 - right->evaluate(sigma));
            case Kind::JoinOf: {
                std::uint64_t lmask = (left_size >= 64) ? ~std::uint64_t{0}
                                                        : ((std::uint64_t{1} << left_size) - 1);
                std::uint64_t lbits = sigma.bits() & lmask;
                std::uint64_t rbits = sigma.bits() >> left_size;
                double v = 1.0;  // empty block contributes an empty product
                if (lbits) v *= left->evaluate(Hyperedge(lbits));
                if (rbits) v *= right->evaluate(Hyperedge(rbits));
                return v;
            }
        }
        throw Error("unreachable probability-map kind");
    }
};

ProbabilityMap::ProbabilityMap(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ProbabilityMap ProbabilityMap::constant(VertexSet v, double value) {
    check_unit(value, "constant probability");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Constant;
    n->vertices = std::move(v);
    n->constant = value;
    n->description = "const:" + format_double(value);
    return ProbabilityMap(std::move(n));
}

ProbabilityMap ProbabilityMap::per_dimension(VertexSet v, std::vector<double> dims) {
    if (dims.empty()) throw InvalidInput("per-dimension map needs at least one entry");
    if (dims.size() > v.size())
        throw InvalidInput("per-dimension vector longer than the vertex count");
    for (double d : dims) check_unit(d, "per-dimension probability");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::PerDimension;
    n->vertices = std::move(v);
    std::string desc = "dims:";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) desc.push_back(',');
        desc += format_double(dims[i]);
    }
    n->description = std::move(desc);
    n->dims = std::move(dims);
    return ProbabilityMap(std::move(n));
}

ProbabilityMap ProbabilityMap::table(VertexSet v,
                                     std::unordered_map<std::uint64_t, double> values) {
    for (const auto& [bits, val] : values) {
        if (!Hyperedge(bits).valid_over(v.size()))
            throw InvalidInput("table map entry uses an edge outside Delta[V]");
        check_unit(val, "table probability");
    }
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Table;
    n->vertices = std::move(v);
    n->description = "table:" + std::to_string(values.size()) + "-entries";
    n->table = std::move(values);
    return ProbabilityMap(std::move(n));
}

ProbabilityMap ProbabilityMap::seeded_random_table(VertexSet v, std::uint64_t seed) {
    SampleStream stream(seed);
    std::unordered_map<std::uint64_t, double> values;
    for (Hyperedge e : canonical_all_edges(v)) values[e.bits()] = stream.uniform();
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Table;
    n->vertices = std::move(v);
    n->description = "rtable:" + std::to_string(seed);
    n->table = std::move(values);
    return ProbabilityMap(std::move(n));
}

const VertexSet& ProbabilityMap::vertex_set() const { return node_->vertices; }
const std::string& ProbabilityMap::description() const { return node_->description; }

double ProbabilityMap::evaluate(Hyperedge sigma) const {
    if (!sigma.valid_over(node_->vertices.size()))
        throw InvalidInput("edge is not valid over the map's vertex set");
    double v = node_->evaluate(sigma);
    if (!(v >= 0.0 && v <= 1.0))
        throw Error("probability map produced a value outside [0,1]");
    return v;
}

ProbabilityMap complement_map(const ProbabilityMap& p) {
    using Node = ProbabilityMap::Node;
    if (p.node_->kind == Node::Kind::Complemented)
        return ProbabilityMap(p.node_->left);  // exact involution
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Complemented;
    n->vertices = p.node_->vertices;
    n->left = p.node_;
    n->description = "comp(" + p.node_->description + ")";
    return ProbabilityMap(std::move(n));
}

ProbabilityMap meet(const ProbabilityMap& a, const ProbabilityMap& b) {
    using Node = ProbabilityMap::Node;
    if (a.vertex_set() != b.vertex_set())
        throw InvalidInput("meet requires identical vertex sets");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Meet;
    n->vertices = a.node_->vertices;
    n->left = a.node_;
    n->right = b.node_;
    n->description = "meet(" + a.node_->description + "," + b.node_->description + ")";
    return ProbabilityMap(std::move(n));
}

ProbabilityMap join_union(const ProbabilityMap& a, const ProbabilityMap& b) {
    using Node = ProbabilityMap::Node;
    if (a.vertex_set() != b.vertex_set())
        throw InvalidInput("join_union requires identical vertex sets");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::JoinUnion;
    n->vertices = a.node_->vertices;
    n->left = a.node_;
    n->right = b.node_;
    n->description = "join_union(" + a.node_->description + "," + b.node_->description + ")";
    return ProbabilityMap(std::move(n));
}

ProbabilityMap star(const ProbabilityMap& left, const ProbabilityMap& right) {
    using Node = ProbabilityMap::Node;
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::JoinOf;
    n->vertices = VertexSet::joined(left.vertex_set(), right.vertex_set());
    n->left = left.node_;
    n->right = right.node_;
    n->left_size = left.vertex_set().size();
    n->description = "star(" + left.node_->description + "," + right.node_->description + ")";
    return ProbabilityMap(std::move(n));
}

ProbabilityMap combine_maps(const ProbabilityMap& a, const ProbabilityMap& b, MapBinaryOp op) {
    switch (op) {
        case MapBinaryOp::Meet: return meet(a, b);
        case MapBinaryOp::JoinUnion: return join_union(a, b);
        case MapBinaryOp::Star: return star(a, b);
    }
    throw Error("unreachable map op");
}

ProbabilityMap preset_map(PresetModel model, double q, const VertexSet& v, std::size_t d) {
    check_unit(q, "preset probability");
    const std::size_t n = v.size();
    std::vector<double> dims(n, 0.0);
    switch (model) {
        case PresetModel::Gnp:
            d = 1;
            break;
        case PresetModel::LinialMeshulam:
            d = 2;
            break;
        case PresetModel::MeshulamWallach:
            break;
        case PresetModel::Clique: {
            if (n < 2) throw InvalidInput("clique preset needs at least 2 vertices");
            std::fill(dims.begin(), dims.end(), 1.0);
            dims[1] = q;
            return ProbabilityMap::per_dimension(v, std::move(dims));
        }
    }
    if (d >= n)
        throw InvalidInput("preset dimension " + std::to_string(d) +
                           " out of range for " + std::to_string(n) + " vertices");
    for (std::size_t i = 0; i < d; ++i) dims[i] = 1.0;
    dims[d] = q;
    return ProbabilityMap::per_dimension(v, std::move(dims));
}

ProbabilityMap parse_prob_spec(std::string_view spec, const VertexSet& v) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("probability spec needs a '<kind>:' prefix", 0);
    std::string kind(spec.substr(0, colon));
    std::string rest(spec.substr(colon + 1));
    auto to_double = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            double val = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return val;
        } catch (const std::exception&) {
            throw ParseError("bad number '" + s + "' in probability spec", colon + 1);
        }
    };
    if (kind == "const") return ProbabilityMap::constant(v, to_double(rest));
    if (kind == "dims") {
        std::vector<double> dims;
        for (const auto& part : split_top_level(rest, ',')) dims.push_back(to_double(part));
        return ProbabilityMap::per_dimension(v, std::move(dims));
    }
    if (kind == "gnp") return preset_map(PresetModel::Gnp, to_double(rest), v);
    if (kind == "lm") return preset_map(PresetModel::LinialMeshulam, to_double(rest), v);
    if (kind == "clique") return preset_map(PresetModel::Clique, to_double(rest), v);
    if (kind == "mw") {
        auto colon2 = rest.find(':');
        if (colon2 == std::string::npos)
            throw ParseError("mw spec is mw:<d>:<float>", colon + 1);
        std::size_t d = 0;
        try {
            d = std::stoul(rest.substr(0, colon2));
        } catch (const std::exception&) {
            throw ParseError("bad dimension in mw spec", colon + 1);
        }
        return preset_map(PresetModel::MeshulamWallach, to_double(rest.substr(colon2 + 1)), v, d);
    }
    if (kind == "rtable") {
        std::uint64_t seed = 0;
        try {
            seed = std::stoull(rest);
        } catch (const std::exception&) {
            throw ParseError("bad seed in rtable spec", colon + 1);
        }
        return ProbabilityMap::seeded_random_table(v, seed);
    }
    if (kind == "table") {
        std::ifstream in(rest);
        if (!in) throw InvalidInput("cannot open table file '" + rest + "'");
        std::unordered_map<std::uint64_t, double> values;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw ParseError("table line needs '<edge>\\t<float>'", lineno);
            std::uint64_t bits = 0;
            for (const auto& member : split_top_level(line.substr(0, tab), ',')) {
                auto pos = v.position_of(member);
                if (!pos) throw ParseError("unknown vertex label '" + member + "'", lineno);
                bits |= std::uint64_t{1} << *pos;
            }
            values[bits] = to_double(line.substr(tab + 1));
        }
        return ProbabilityMap::table(v, std::move(values));
    }
    throw ParseError("unknown probability spec kind '" + kind + "'", 0);
}

std::string_view to_string(ModelFamily f) {
    switch (f) {
        case ModelFamily::PBar: return "pbar";
        case ModelFamily::P: return "p";
        case ModelFamily::Q: return "q";
    }
    return "?";
}

double mass_hypergraph(const ProbabilityMap& p, const Hypergraph& h) {
    if (p.vertex_set() != h.vertex_set())
        throw InvalidInput("mass_hypergraph: map and hypergraph vertex sets differ");
    double mass = 1.0;
    for (Hyperedge e : canonical_all_edges(h.vertex_set())) {
        double pe = p.evaluate(e);
        mass *= h.contains(e) ? pe : 1.0 - pe;
    }
    return mass;
}

double mass_complex(const ProbabilityMap& p, const Hypergraph& k) {
    if (p.vertex_set() != k.vertex_set())
        throw InvalidInput("mass_complex: map and hypergraph vertex sets differ");
    double mass = 1.0;
    for (Hyperedge e : k.edges()) mass *= p.evaluate(e);
    for (Hyperedge e : external_faces(k)) mass *= 1.0 - p.evaluate(e);  // validates K
    return mass;
}

double mass_indep(const ProbabilityMap& p, const Hypergraph& l) {
    if (p.vertex_set() != l.vertex_set())
        throw InvalidInput("mass_indep: map and hypergraph vertex sets differ");
    double mass = 1.0;
    for (Hyperedge e : l.edges()) mass *= p.evaluate(e);
    for (Hyperedge e : co_external_faces(l)) mass *= 1.0 - p.evaluate(e);  // validates L
    return mass;
}

double pushforward_closed_form(const ProbabilityMap& p, const Hypergraph& target,
                               ClosureOp op) {
    if (p.vertex_set() != target.vertex_set())
        throw InvalidInput("pushforward_closed_form: vertex sets differ");
    switch (op) {
        case ClosureOp::Up: {
            if (!is_complex(target))
                throw InvalidInput("closure-op Up needs a simplicial complex target");
            double mass = 1.0;
            for (Hyperedge e : extremal_edges(target, Extremal::Maximal))
                mass *= p.evaluate(e);
            for (Hyperedge e : canonical_all_edges(target.vertex_set()))
                if (!target.contains(e)) mass *= 1.0 - p.evaluate(e);
            return mass;
        }
        case ClosureOp::IUp: {
            if (!is_independence(target))
                throw InvalidInput("closure-op IUp needs an independence-hypergraph target");
            double mass = 1.0;
            for (Hyperedge e : extremal_edges(target, Extremal::Minimal))
                mass *= p.evaluate(e);
            for (Hyperedge e : canonical_all_edges(target.vertex_set()))
                if (!target.contains(e)) mass *= 1.0 - p.evaluate(e);
            return mass;
        }
        case ClosureOp::Down:
            return mass_complex(p, target);
        case ClosureOp::IDown:
            return mass_indep(p, target);
    }
    throw Error("unreachable closure op");
}

}  // namespace hg
