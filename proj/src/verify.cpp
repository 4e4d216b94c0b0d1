#include "hg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "hg/text_io.hpp"

namespace hg {

// ---------------------------------------------------------------------------
// Enumeration

HypergraphEnumeration::HypergraphEnumeration(const VertexSet& vertices,
                                             std::optional<HypergraphClass> filter)
    : index_(vertices), filter_(filter) {}

bool HypergraphEnumeration::matches(std::uint64_t state) const {
    if (!filter_) return true;
    HypergraphClass c = classify(index_.to_hypergraph(state));
    if (c == *filter_) return true;
    // "Both" satisfies either closed-class filter.
    if (c == HypergraphClass::Both &&
        (*filter_ == HypergraphClass::Complex || *filter_ == HypergraphClass::Independence))
        return true;
    return false;
}

HypergraphEnumeration::iterator::iterator(const HypergraphEnumeration* owner,
                                          std::uint64_t state)
    : owner_(owner), state_(state) {
    advance_to_match();
}

void HypergraphEnumeration::iterator::advance_to_match() {
    while (state_ < owner_->state_count() && !owner_->matches(state_)) ++state_;
}

Hypergraph HypergraphEnumeration::iterator::operator*() const {
    return owner_->index_.to_hypergraph(state_);
}

HypergraphEnumeration::iterator& HypergraphEnumeration::iterator::operator++() {
    ++state_;
    advance_to_match();
    return *this;
}

HypergraphEnumeration::iterator HypergraphEnumeration::begin() const {
    return iterator(this, 0);
}

HypergraphEnumeration::iterator HypergraphEnumeration::end() const {
    return iterator(this, state_count());
}

// ---------------------------------------------------------------------------
// Tables

DistributionTable exact_table(const ModelDescriptor& model) {
    EdgeIndex index(model.map.vertex_set());
    std::vector<double> masses(index.state_count(), 0.0);
    for (std::uint64_t s = 0; s < index.state_count(); ++s) {
        Hypergraph h = index.to_hypergraph(s);
        switch (model.family) {
            case ModelFamily::PBar:
                masses[s] = mass_hypergraph(model.map, h);
                break;
            case ModelFamily::P:
                masses[s] = is_complex(h) ? mass_complex(model.map, h) : 0.0;
                break;
            case ModelFamily::Q:
                masses[s] = is_independence(h) ? mass_indep(model.map, h) : 0.0;
                break;
        }
    }
    return DistributionTable(model.map.vertex_set(), std::move(masses));
}

DistributionTable pushforward_table(const Expr& e,
                                    std::span<const DistributionTable> tables) {
    return pushforward_expr(e, tables);
}

namespace {

DistributionTable empirical_counts(const VertexSet& result_set, std::uint64_t trials,
                                   unsigned workers,
                                   const std::function<std::uint64_t(std::uint64_t)>& draw) {
    EdgeIndex index(result_set);
    if (trials == 0) throw InvalidInput("empirical table needs at least one trial");
    workers = std::max(1u, workers);
    std::vector<std::vector<std::uint64_t>> partial(
        workers, std::vector<std::uint64_t>(index.state_count(), 0));
    auto run = [&](unsigned w) {
        std::uint64_t lo = trials * w / workers;
        std::uint64_t hi = trials * (w + 1) / workers;
        for (std::uint64_t t = lo; t < hi; ++t) ++partial[w][draw(t)];
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    std::vector<double> masses(index.state_count(), 0.0);
    for (unsigned w = 0; w < workers; ++w)  // fixed-order reduction
        for (std::size_t s = 0; s < masses.size(); ++s)
            masses[s] += static_cast<double>(partial[w][s]);
    for (double& m : masses) m /= static_cast<double>(trials);
    return DistributionTable(result_set, std::move(masses));
}

}  // namespace

DistributionTable empirical_table(const Expr& e, std::span<const ProbabilityMap> maps,
                                  std::uint64_t trials, std::uint64_t seed,
                                  unsigned workers) {
    std::vector<VertexSet> leaf_sets;
    for (const auto& m : maps) leaf_sets.push_back(m.vertex_set());
    Signature sig = infer_signature(e, leaf_sets);
    EdgeIndex out_index(sig.result_vertex_set);
    return empirical_counts(sig.result_vertex_set, trials, workers, [&](std::uint64_t t) {
        SampleStream stream = SampleStream::substream(seed, t);
        std::vector<Hypergraph> draws;
        draws.reserve(maps.size());
        for (const auto& m : maps) draws.push_back(sample_hypergraph(m, stream));
        return out_index.to_mask(eval_expr(e, draws));
    });
}

DistributionTable empirical_table(const ModelDescriptor& model, std::uint64_t trials,
                                  std::uint64_t seed, unsigned workers) {
    EdgeIndex out_index(model.map.vertex_set());
    return empirical_counts(model.map.vertex_set(), trials, workers, [&](std::uint64_t t) {
        SampleStream stream = SampleStream::substream(seed, t);
        return out_index.to_mask(sample_model(model, stream));
    });
}

ChiSquare chi_square_vs_exact(const DistributionTable& empirical,
                              const DistributionTable& exact, std::uint64_t trials) {
    if (empirical.vertex_set() != exact.vertex_set())
        throw InvalidInput("chi-square: vertex sets differ");
    const double n = static_cast<double>(trials);
    double stat = 0.0;
    std::size_t cells = 0;
    double pooled_obs = 0.0, pooled_exp = 0.0;
    for (std::size_t s = 0; s < exact.size(); ++s) {
        double expct = exact.masses()[s] * n;
        double obs = empirical.masses()[s] * n;
        if (expct >= 5.0) {
            stat += (obs - expct) * (obs - expct) / expct;
            ++cells;
        } else {  // Cochran pooling for sparse cells
            pooled_obs += obs;
            pooled_exp += expct;
        }
    }
    if (pooled_exp > 0.0) {
        stat += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
        ++cells;
    }
    std::size_t dof = cells > 1 ? cells - 1 : 1;
    // Wilson-Hilferty approximation of the 99.9th percentile.
    constexpr double z = 3.090232306167813;
    double k = static_cast<double>(dof);
    double threshold = k * std::pow(1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k)), 3.0);
    return ChiSquare{stat, threshold, dof};
}

// ---------------------------------------------------------------------------
// Reports

std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::MaxAbsDiff: return "max-abs-diff";
        case Metric::TotalVariation: return "total-variation";
        case Metric::ChiSquareStat: return "chi-square";
        case Metric::MismatchCount: return "mismatch-count";
    }
    return "?";
}

std::string render_report(const CheckReport& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << " metric=" << to_string(r.metric)
       << " value=" << r.value << " threshold=" << r.threshold << " params=" << r.params;
    return os.str();
}

// ---------------------------------------------------------------------------
// Check registry

namespace {

struct Ctx {
    CheckParams prm;

    VertexSet v_single() const {
        return prm.vertex_blocks.empty() ? VertexSet{"a", "b", "c"} : prm.vertex_blocks[0];
    }
    VertexSet v_pair() const {
        return prm.vertex_blocks.empty() ? VertexSet{"a", "b"} : prm.vertex_blocks[0];
    }
    VertexSet v_block(std::size_t i, VertexSet fallback) const {
        return prm.vertex_blocks.size() > i ? prm.vertex_blocks[i] : fallback;
    }
    std::string spec(std::size_t i, const char* fallback) const {
        return prm.p_specs.size() > i ? prm.p_specs[i] : std::string(fallback);
    }
    ProbabilityMap map0(const VertexSet& v) const { return parse_prob_spec(spec(0, "const:0.5"), v); }
    ProbabilityMap map1(const VertexSet& v) const { return parse_prob_spec(spec(1, "const:0.2"), v); }
    double tol(double fallback) const { return prm.tolerance.value_or(fallback); }

    std::string params_str(const VertexSet& v, std::initializer_list<std::string> extras = {}) const {
        std::string out = "V=";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out.push_back(',');
            out += v.label(i);
        }
        out += " seed=" + std::to_string(prm.seed);
        for (const auto& e : extras) {
            out.push_back(' ');
            out += e;
        }
        return out;
    }
};

CheckReport make_report(std::string name, std::string params, Metric metric, double value,
                        double threshold) {
    CheckReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.metric = metric;
    r.value = value;
    r.threshold = threshold;
    r.pass = value <= threshold;
    return r;
}

DistributionTable push1(const char* expr_text, const DistributionTable& in) {
    std::vector<DistributionTable> leaves{in};
    return pushforward_expr(parse_expr(expr_text), leaves);
}

DistributionTable push2(const char* expr_text, const DistributionTable& a,
                        const DistributionTable& b) {
    std::vector<DistributionTable> leaves{a, b};
    return pushforward_expr(parse_expr(expr_text), leaves);
}

// --- thm1.1 / cor3.6 -------------------------------------------------------

std::vector<CheckReport> check_thm11_part(int part, const Ctx& ctx, std::string name) {
    VertexSet v = ctx.v_single();
    ProbabilityMap p = ctx.map0(v);
    DistributionTable in = exact_table({ModelFamily::PBar, p});
    static constexpr const char* kExprs[5] = {"comp($0)", "comp(up($0))", "comp(iup($0))",
                                              "down($0)", "idown($0)"};
    static constexpr ModelFamily kFam[5] = {ModelFamily::PBar, ModelFamily::Q, ModelFamily::P,
                                            ModelFamily::P, ModelFamily::Q};
    DistributionTable lhs = push1(kExprs[part - 1], in);
    ProbabilityMap q = part <= 3 ? complement_map(p) : p;
    DistributionTable rhs = exact_table({kFam[part - 1], q});
    double diff = max_abs_diff(lhs, rhs);
    return {make_report(std::move(name),
                        ctx.params_str(v, {"p=" + p.description(), std::string("expr=") + kExprs[part - 1]}),
                        Metric::MaxAbsDiff, diff, ctx.tol(1e-12))};
}

// --- thm3.5: closed form vs preimage sum -----------------------------------

std::vector<CheckReport> check_thm35_part(int part, const Ctx& ctx) {
    VertexSet v = ctx.v_single();
    ProbabilityMap p = ctx.map0(v);
    DistributionTable in = exact_table({ModelFamily::PBar, p});
    static constexpr const char* kExprs[4] = {"up($0)", "iup($0)", "down($0)", "idown($0)"};
    static constexpr ClosureOp kOps[4] = {ClosureOp::Up, ClosureOp::IUp, ClosureOp::Down,
                                          ClosureOp::IDown};
    const bool complex_side = part == 1 || part == 3;
    DistributionTable lhs = push1(kExprs[part - 1], in);  // brute-force preimage sums
    EdgeIndex index(v);
    double diff = 0.0;
    for (std::uint64_t s = 0; s < lhs.size(); ++s) {
        Hypergraph target = index.to_hypergraph(s);
        bool in_class = complex_side ? is_complex(target) : is_independence(target);
        double expected =
            in_class ? pushforward_closed_form(p, target, kOps[part - 1]) : 0.0;
        diff = std::max(diff, std::abs(lhs.mass(s) - expected));
    }
    return {make_report("thm3.5-part-" + std::to_string(part),
                        ctx.params_str(v, {"p=" + p.description()}), Metric::MaxAbsDiff, diff,
                        ctx.tol(1e-12))};
}

// --- cor1.2 (join) and cor1.3 (cap/cup) -------------------------------------

std::vector<CheckReport> check_cor12_part(int part, const Ctx& ctx) {
    VertexSet v1 = ctx.v_block(0, VertexSet{"a", "b"});
    VertexSet v2 = ctx.v_block(1, VertexSet{"c", "d"});
    ProbabilityMap p1 = parse_prob_spec(ctx.spec(0, "const:0.5"), v1);
    ProbabilityMap p2 = parse_prob_spec(ctx.spec(1, "const:0.2"), v2);
    static constexpr ModelFamily kFam[3] = {ModelFamily::PBar, ModelFamily::P, ModelFamily::Q};
    ModelFamily fam = kFam[part - 1];
    DistributionTable lhs =
        push2("$0 * $1", exact_table({fam, p1}), exact_table({fam, p2}));
    DistributionTable rhs = exact_table({fam, star(p1, p2)});
    double diff = max_abs_diff(lhs, rhs);
    VertexSet joined = VertexSet::joined(v1, v2);
    return {make_report("cor1.2-join-" + std::to_string(part),
                        ctx.params_str(joined, {"p1=" + p1.description(), "p2=" + p2.description(),
                                                std::string("family=") + std::string(to_string(fam))}),
                        Metric::MaxAbsDiff, diff, ctx.tol(1e-12))};
}

std::vector<CheckReport> check_cor13_part(int part, const Ctx& ctx) {
    VertexSet v = ctx.v_single();
    ProbabilityMap p1 = ctx.map0(v);
    ProbabilityMap p2 = ctx.map1(v);
    double diff = 0.0;
    std::string extra;
    if (part == 1) {
        DistributionTable a = exact_table({ModelFamily::PBar, p1});
        DistributionTable b = exact_table({ModelFamily::PBar, p2});
        diff = std::max(
            max_abs_diff(push2("$0 & $1", a, b), exact_table({ModelFamily::PBar, meet(p1, p2)})),
            max_abs_diff(push2("$0 | $1", a, b),
                         exact_table({ModelFamily::PBar, join_union(p1, p2)})));
        extra = "ops=&,|";
    } else {
        ModelFamily fam = part == 2 ? ModelFamily::P : ModelFamily::Q;
        diff = max_abs_diff(push2("$0 & $1", exact_table({fam, p1}), exact_table({fam, p2})),
                            exact_table({fam, meet(p1, p2)}));
        extra = "ops=&";
    }
    return {make_report("cor1.3-capcup-" + std::to_string(part),
                        ctx.params_str(v, {"p1=" + p1.description(), "p2=" + p2.description(), extra}),
                        Metric::MaxAbsDiff, diff, ctx.tol(1e-12))};
}

std::vector<CheckReport> check_cor37(const Ctx& ctx) {
    VertexSet v = ctx.v_single();
    ProbabilityMap p1 = ctx.map0(v);
    ProbabilityMap p2 = ctx.map1(v);
    double diff = 0.0;
    for (ModelFamily fam : {ModelFamily::P, ModelFamily::Q})
        diff = std::max(diff, max_abs_diff(push2("$0 & $1", exact_table({fam, p1}),
                                                 exact_table({fam, p2})),
                                           exact_table({fam, meet(p1, p2)})));
    return {make_report("cor3.7", ctx.params_str(v, {"p1=" + p1.description(),
                                                     "p2=" + p2.description()}),
                        Metric::MaxAbsDiff, diff, ctx.tol(1e-12))};
}

std::vector<CheckReport> check_cor38(const Ctx& ctx) {
    VertexSet v1 = ctx.v_block(0, VertexSet{"a", "b"});
    VertexSet v2 = ctx.v_block(1, VertexSet{"c", "d"});
    ProbabilityMap p1 = parse_prob_spec(ctx.spec(0, "const:0.5"), v1);
    ProbabilityMap p2 = parse_prob_spec(ctx.spec(1, "const:0.2"), v2);
    double diff = 0.0;
    for (ModelFamily fam : {ModelFamily::P, ModelFamily::Q})
        diff = std::max(diff, max_abs_diff(push2("$0 * $1", exact_table({fam, p1}),
                                                 exact_table({fam, p2})),
                                           exact_table({fam, star(p1, p2)})));
    return {make_report("cor3.8",
                        ctx.params_str(VertexSet::joined(v1, v2),
                                       {"p1=" + p1.description(), "p2=" + p2.description()}),
                        Metric::MaxAbsDiff, diff, ctx.tol(1e-12))};
}

// --- lemma 2.4 ---------------------------------------------------------------

std::vector<CheckReport> check_lemma24(const Ctx& ctx) {
    VertexSet v = ctx.v_single();
    std::uint64_t mismatches = 0, cases = 0;
    for (const Hypergraph& h : HypergraphEnumeration(v)) {
        ++cases;
        if (assoc_indep(h) != complement(lower_complex(complement(h)))) ++mismatches;
        if (lower_indep(h) != complement(assoc_complex(complement(h)))) ++mismatches;
    }
    return {make_report("lemma2.4",
                        ctx.params_str(v, {"cases=" + std::to_string(cases)}),
                        Metric::MismatchCount, static_cast<double>(mismatches), ctx.tol(0))};
}

// --- lemma 3.1 ---------------------------------------------------------------

std::vector<CheckReport> check_lemma31(const Ctx& ctx) {
    VertexSet v = ctx.v_pair();
    VertexSet v2 = ctx.v_block(1, VertexSet{"c", "d"});
    DistributionTable ta = DistributionTable::seeded_random(v, ctx.prm.seed);
    DistributionTable tb = DistributionTable::seeded_random(v, ctx.prm.seed + 1);
    DistributionTable tc = DistributionTable::seeded_random(v2, ctx.prm.seed + 2);
    struct Id {
        const char* name;
        const char* lhs;  // unaries first, then the binary
        const char* rhs;  // binary first, then the unary
        bool star;
    };
    static constexpr Id kIds[8] = {
        {"lemma3.1-cup-up", "up($0) | up($1)", "up($0 | $1)", false},
        {"lemma3.1-cup-iup", "iup($0) | iup($1)", "iup($0 | $1)", false},
        {"lemma3.1-cap-down", "down($0) & down($1)", "down($0 & $1)", false},
        {"lemma3.1-cap-idown", "idown($0) & idown($1)", "idown($0 & $1)", false},
        {"lemma3.1-star-up", "up($0) * up($1)", "up($0 * $1)", true},
        {"lemma3.1-star-down", "down($0) * down($1)", "down($0 * $1)", true},
        {"lemma3.1-star-iup", "iup($0) * iup($1)", "iup($0 * $1)", true},
        {"lemma3.1-star-idown", "idown($0) * idown($1)", "idown($0 * $1)", true},
    };
    std::vector<CheckReport> out;
    for (const Id& id : kIds) {
        const DistributionTable& right = id.star ? tc : tb;
        double diff = max_abs_diff(push2(id.lhs, ta, right), push2(id.rhs, ta, right));
        out.push_back(make_report(id.name, ctx.params_str(v, {"tables=seeded-random"}),
                                  Metric::MaxAbsDiff, diff, ctx.tol(1e-12)));
    }
    return out;
}

// --- relations 2.1 ------------------------------------------------------------

struct LawCounter {
    std::uint64_t mismatches = 0;
    std::uint64_t cases = 0;
    void tally(bool ok) {
        ++cases;
        if (!ok) ++mismatches;
    }
};

bool equal_up_to_labels(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_set().size() != b.vertex_set().size()) return false;
    std::vector<std::size_t> mapping(b.vertex_set().size());
    for (std::size_t i = 0; i < mapping.size(); ++i) {
        auto pos = a.vertex_set().position_of(b.vertex_set().label(i));
        if (!pos) return false;
        mapping[i] = *pos;
    }
    return apply_vertex_map(VertexMap(b.vertex_set(), a.vertex_set(), std::move(mapping)), b) == a;
}

// Relation catalog entries, each a predicate over one, two, or three inputs.
using Law1 = std::function<bool(const Hypergraph&)>;
using Law2 = std::function<bool(const Hypergraph&, const Hypergraph&)>;
using Law3 = std::function<bool(const Hypergraph&, const Hypergraph&, const Hypergraph&)>;

bool unary_relations_hold(const Hypergraph& h) {
    const Hypergraph full = Hypergraph::full(h.vertex_set());
    const Hypergraph none = Hypergraph::empty(h.vertex_set());
    Hypergraph up = assoc_complex(h), down = lower_complex(h);
    Hypergraph iup = assoc_indep(h), idown = lower_indep(h);
    if (complement(complement(h)) != h) return false;                    // involution
    if (iup != complement(lower_complex(complement(h)))) return false;   // gamma-delta-gamma
    if (idown != complement(assoc_complex(complement(h)))) return false;
    if (assoc_complex(down) != down || lower_complex(up) != up) return false;    // absorption
    if (assoc_indep(idown) != idown || lower_indep(iup) != iup) return false;
    if (assoc_complex(up) != up || lower_complex(down) != down) return false;    // idempotence
    if (assoc_indep(iup) != iup || lower_indep(idown) != idown) return false;
    {   // composite idempotence
        Hypergraph a = lower_complex(iup);
        if (lower_complex(assoc_indep(a)) != a) return false;
        Hypergraph b = assoc_indep(down);
        if (assoc_indep(lower_complex(b)) != b) return false;
        Hypergraph c = assoc_complex(idown);
        if (assoc_complex(lower_indep(c)) != c) return false;
        Hypergraph d = lower_indep(up);
        if (lower_indep(assoc_complex(d)) != d) return false;
    }
    {   // saturation
        Hypergraph uu = assoc_complex(iup);
        if (uu != (h.edge_count() ? full : none)) return false;
        Hypergraph ud = assoc_complex(idown);
        bool has_top = h.contains(Hyperedge((h.vertex_set().size() >= 64)
                                                ? ~std::uint64_t{0}
                                                : ((std::uint64_t{1} << h.vertex_set().size()) - 1)));
        if (ud != (has_top ? full : none)) return false;
        // Delta[V] and the empty hypergraph absorb every closure operator.
        for (const Hypergraph* s : {&uu, &ud}) {
            if (assoc_complex(*s) != *s || assoc_indep(*s) != *s) return false;
            if (lower_complex(*s) != *s || lower_indep(*s) != *s) return false;
        }
    }
    return true;
}

bool set_laws_hold(const Hypergraph& a, const Hypergraph& b) {
    Hypergraph cap = combine(a, b, SetOp::Intersect);
    Hypergraph cup = combine(a, b, SetOp::Unite);
    if (complement(cap) != combine(complement(a), complement(b), SetOp::Unite)) return false;
    if (complement(cup) != combine(complement(a), complement(b), SetOp::Intersect)) return false;
    if (assoc_complex(cup) != combine(assoc_complex(a), assoc_complex(b), SetOp::Unite))
        return false;
    if (!assoc_complex(cap).is_subset_of(
            combine(assoc_complex(a), assoc_complex(b), SetOp::Intersect)))
        return false;
    if (lower_complex(cap) != combine(lower_complex(a), lower_complex(b), SetOp::Intersect))
        return false;
    if (!combine(lower_complex(a), lower_complex(b), SetOp::Unite).is_subset_of(lower_complex(cup)))
        return false;
    if (assoc_indep(cup) != combine(assoc_indep(a), assoc_indep(b), SetOp::Unite)) return false;
    if (!assoc_indep(cap).is_subset_of(combine(assoc_indep(a), assoc_indep(b), SetOp::Intersect)))
        return false;
    if (lower_indep(cap) != combine(lower_indep(a), lower_indep(b), SetOp::Intersect))
        return false;
    if (!combine(lower_indep(a), lower_indep(b), SetOp::Unite).is_subset_of(lower_indep(cup)))
        return false;
    return true;
}

struct RelationsChecks {
    LawCounter gamma, lemma24;
    LawCounter join_up, join_down, join_iup, join_idown;
    LawCounter dist_star_cup, dist_star_cap, dist_box_cup, dist_box_cap, dist_box_star;

    void run_unary(const Hypergraph& h) {
        gamma.tally(complement(complement(h)) == h);
        lemma24.tally(assoc_indep(h) == complement(lower_complex(complement(h))) &&
                      lower_indep(h) == complement(assoc_complex(complement(h))));
    }

    void run_joins(const Hypergraph& a, const Hypergraph& b) {
        Hypergraph j = join(a, b);
        join_up.tally(assoc_complex(j) == join(assoc_complex(a), assoc_complex(b)));
        join_down.tally(lower_complex(j) == join(lower_complex(a), lower_complex(b)));
        join_iup.tally(assoc_indep(j) == join(assoc_indep(a), assoc_indep(b)));
        join_idown.tally(lower_indep(j) == join(lower_indep(a), lower_indep(b)));
    }

    void run_star_dist(const Hypergraph& h1, const Hypergraph& h2, const Hypergraph& h3) {
        dist_star_cup.tally(join(h1, combine(h2, h3, SetOp::Unite)) ==
                            combine(join(h1, h2), join(h1, h3), SetOp::Unite));
        dist_star_cap.tally(join(h1, combine(h2, h3, SetOp::Intersect)) ==
                            combine(join(h1, h2), join(h1, h3), SetOp::Intersect));
        dist_box_cup.tally(box_product(h1, combine(h2, h3, SetOp::Unite)) ==
                           combine(box_product(h1, h2), box_product(h1, h3), SetOp::Unite));
        dist_box_cap.tally(box_product(h1, combine(h2, h3, SetOp::Intersect)) ==
                           combine(box_product(h1, h2), box_product(h1, h3), SetOp::Intersect));
    }

    void run_box_star(const Hypergraph& h1, const Hypergraph& h2, const Hypergraph& h3) {
        dist_box_star.tally(equal_up_to_labels(box_product(h1, join(h2, h3)),
                                               join(box_product(h1, h2), box_product(h1, h3))));
    }
};

std::vector<CheckReport> check_relations21(const Ctx& ctx) {
    LawCounter unary_all;
    RelationsChecks rc;

    // Exhaustive unary suites on |V|=3.
    VertexSet v3{"a", "b", "c"};
    for (const Hypergraph& h : HypergraphEnumeration(v3)) {
        unary_all.tally(unary_relations_hold(h));
        rc.run_unary(h);
    }
    // Binary laws exhaustively on |V|=2 pairs and triples.
    VertexSet v2{"a", "b"};
    VertexSet w2{"c", "d"};
    VertexSet u2{"e", "f"};
    LawCounter setlaws;
    {
        EdgeIndex i2(v2);
        std::vector<Hypergraph> all2, allw, allu;
        for (std::uint64_t s = 0; s < i2.state_count(); ++s) all2.push_back(i2.to_hypergraph(s));
        EdgeIndex iw(w2);
        for (std::uint64_t s = 0; s < iw.state_count(); ++s) allw.push_back(iw.to_hypergraph(s));
        EdgeIndex iu(u2);
        for (std::uint64_t s = 0; s < iu.state_count(); ++s) allu.push_back(iu.to_hypergraph(s));
        for (const auto& a : all2)
            for (const auto& b : all2) setlaws.tally(set_laws_hold(a, b));
        for (const auto& a : all2)
            for (const auto& b : allw) rc.run_joins(a, b);
        for (const auto& a : all2)
            for (const auto& b : allw)
                for (const auto& c : allw) rc.run_star_dist(a, b, c);
        for (const auto& a : all2)
            for (const auto& b : allw)
                for (const auto& c : allu) rc.run_box_star(a, b, c);
    }
    // 1000 seeded random cases on five-vertex configurations.
    VertexSet v5{"v0", "v1", "v2", "v3", "v4"};
    VertexSet a2{"p0", "p1"};
    VertexSet b3{"q0", "q1", "q2"};
    VertexSet c1{"r0"};
    ProbabilityMap half5 = ProbabilityMap::constant(v5, 0.5);
    ProbabilityMap half_a = ProbabilityMap::constant(a2, 0.5);
    ProbabilityMap half_b = ProbabilityMap::constant(b3, 0.5);
    ProbabilityMap half_c = ProbabilityMap::constant(c1, 0.5);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        SampleStream stream = SampleStream::substream(ctx.prm.seed, i);
        Hypergraph h5 = sample_hypergraph(half5, stream);
        unary_all.tally(unary_relations_hold(h5));
        rc.run_unary(h5);
        Hypergraph h5b = sample_hypergraph(half5, stream);
        setlaws.tally(set_laws_hold(h5, h5b));
        Hypergraph ha = sample_hypergraph(half_a, stream);
        Hypergraph hb = sample_hypergraph(half_b, stream);
        Hypergraph hb2 = sample_hypergraph(half_b, stream);
        rc.run_joins(ha, hb);
        rc.run_star_dist(ha, hb, hb2);
        Hypergraph hw = sample_hypergraph(ProbabilityMap::constant(w2, 0.5), stream);
        Hypergraph hc = sample_hypergraph(half_c, stream);
        rc.run_box_star(ha, hw, hc);
    }

    auto rep = [&](const char* name, const LawCounter& c) {
        return make_report(name,
                           ctx.params_str(v3, {"cases=" + std::to_string(c.cases)}),
                           Metric::MismatchCount, static_cast<double>(c.mismatches), ctx.tol(0));
    };
    return {
        rep("relations-2.1-unary", unary_all),
        rep("relations-2.1-gamma", rc.gamma),
        rep("relations-2.1-lemma2.4", rc.lemma24),
        rep("relations-2.1-set-laws", setlaws),
        rep("relations-2.1-join-up", rc.join_up),
        rep("relations-2.1-join-down", rc.join_down),
        rep("relations-2.1-join-iup", rc.join_iup),
        rep("relations-2.1-join-idown", rc.join_idown),
        rep("relations-2.1-dist-star-cup", rc.dist_star_cup),
        rep("relations-2.1-dist-star-cap", rc.dist_star_cap),
        rep("relations-2.1-dist-box-cup", rc.dist_box_cup),
        rep("relations-2.1-dist-box-cap", rc.dist_box_cap),
        rep("relations-2.1-dist-box-star", rc.dist_box_star),
    };
}

// --- worked-example fixtures --------------------------------------------------

std::vector<CheckReport> check_example_fixtures(const Ctx& ctx) {
    VertexSet v{"v0", "v1"};
    VertexSet w{"u0", "u1", "u2", "u3"};
    Hypergraph h = hypergraph_from_labels(v, {{"v0"}, {"v0", "v1"}});
    Hypergraph hp = hypergraph_from_labels(w, {{"u0", "u1"}, {"u0", "u1", "u2"}});
    VertexSet jv = VertexSet::joined(v, w);

    std::uint64_t mismatches = 0;
    auto expect = [&](const Hypergraph& got, const Hypergraph& want) {
        if (to_text(got) != to_text(want)) ++mismatches;
    };

    expect(assoc_complex(h), hypergraph_from_labels(v, {{"v0"}, {"v1"}, {"v0", "v1"}}));
    expect(lower_complex(h), hypergraph_from_labels(v, {{"v0"}}));
    expect(assoc_indep(h), h);
    expect(lower_indep(h), h);

    expect(assoc_complex(hp),
           hypergraph_from_labels(w, {{"u0"}, {"u1"}, {"u2"}, {"u0", "u1"}, {"u0", "u2"},
                                      {"u1", "u2"}, {"u0", "u1", "u2"}}));
    expect(lower_complex(hp), Hypergraph::empty(w));
    expect(assoc_indep(hp),
           hypergraph_from_labels(w, {{"u0", "u1"}, {"u0", "u1", "u2"}, {"u0", "u1", "u3"},
                                      {"u0", "u1", "u2", "u3"}}));
    expect(lower_indep(hp), Hypergraph::empty(w));

    expect(join(h, hp),
           hypergraph_from_labels(
               jv, {{"v0"}, {"v0", "v1"}, {"u0", "u1"}, {"u0", "u1", "u2"}, {"v0", "u0", "u1"},
                    {"v0", "u0", "u1", "u2"}, {"v0", "v1", "u0", "u1"},
                    {"v0", "v1", "u0", "u1", "u2"}}));

    {
        VertexSet pv = VertexSet::product(v, w);
        expect(box_product(h, hp),
               hypergraph_from_labels(
                   pv, {{"(v0,u0)", "(v0,u1)"},
                        {"(v0,u0)", "(v0,u1)", "(v0,u2)"},
                        {"(v0,u0)", "(v0,u1)", "(v1,u0)", "(v1,u1)"},
                        {"(v0,u0)", "(v0,u1)", "(v0,u2)", "(v1,u0)", "(v1,u1)", "(v1,u2)"}}));
    }

    {   // join of the subset closures: the full complex on the five used labels
        std::vector<Hyperedge> edges;
        for (std::uint64_t m = 1; m < 32; ++m) edges.push_back(Hyperedge(m));  // u3 is bit 5
        expect(join(assoc_complex(h), assoc_complex(hp)), Hypergraph(jv, std::move(edges)));
    }
    expect(join(lower_complex(h), lower_complex(hp)), hypergraph_from_labels(jv, {{"v0"}}));
    expect(join(assoc_indep(h), assoc_indep(hp)),
           hypergraph_from_labels(
               jv, {{"v0"}, {"v0", "v1"}, {"u0", "u1"}, {"u0", "u1", "u2"}, {"u0", "u1", "u3"},
                    {"u0", "u1", "u2", "u3"},
                    {"v0", "u0", "u1"}, {"v0", "u0", "u1", "u2"}, {"v0", "u0", "u1", "u3"},
                    {"v0", "u0", "u1", "u2", "u3"},
                    {"v0", "v1", "u0", "u1"}, {"v0", "v1", "u0", "u1", "u2"},
                    {"v0", "v1", "u0", "u1", "u3"}, {"v0", "v1", "u0", "u1", "u2", "u3"}}));
    expect(join(lower_indep(h), lower_indep(hp)),
           hypergraph_from_labels(jv, {{"v0"}, {"v0", "v1"}}));

    return {make_report("example-2.1-fixtures", ctx.params_str(jv, {"fixtures=13"}),
                        Metric::MismatchCount, static_cast<double>(mismatches), ctx.tol(0))};
}

// --- sampler statistics ---------------------------------------------------------

std::vector<CheckReport> check_sampler_stat(ModelFamily fam, const Ctx& ctx) {
    VertexSet v = ctx.v_single();
    ProbabilityMap p = ctx.map0(v);
    ModelDescriptor model{fam, p};
    DistributionTable exact = exact_table(model);
    DistributionTable emp = empirical_table(model, ctx.prm.trials, ctx.prm.seed, ctx.prm.workers);
    double tv = total_variation(emp, exact);
    ChiSquare cs = chi_square_vs_exact(emp, exact, ctx.prm.trials);
    std::string base = "sampler-stat-" + std::string(to_string(fam));
    std::string params = ctx.params_str(
        v, {"p=" + p.description(), "trials=" + std::to_string(ctx.prm.trials)});
    std::vector<CheckReport> out;
    out.push_back(make_report(base, params, Metric::TotalVariation, tv, ctx.tol(0.02)));
    CheckReport chi = make_report(base + "-chisq", params + " dof=" + std::to_string(cs.dof),
                                  Metric::ChiSquareStat, cs.statistic, cs.threshold);
    out.push_back(std::move(chi));
    return out;
}

std::vector<CheckReport> check_sampler_cross(ModelFamily fam, const Ctx& ctx) {
    VertexSet v = ctx.v_single();
    ProbabilityMap p = ctx.map0(v);
    const char* expr_text = fam == ModelFamily::P ? "down($0)" : "idown($0)";
    std::vector<ProbabilityMap> maps{p};
    DistributionTable via_expr =
        empirical_table(parse_expr(expr_text), maps, ctx.prm.trials, ctx.prm.seed, ctx.prm.workers);
    DistributionTable via_model =
        empirical_table(ModelDescriptor{fam, p}, ctx.prm.trials, ctx.prm.seed + 1, ctx.prm.workers);
    double tv = total_variation(via_expr, via_model);
    std::string name = std::string("sampler-cross-") + std::string(to_string(fam));
    return {make_report(name,
                        ctx.params_str(v, {"p=" + p.description(),
                                           "trials=" + std::to_string(ctx.prm.trials),
                                           std::string("expr=") + expr_text}),
                        Metric::TotalVariation, tv, ctx.tol(0.03))};
}

// --- pipeline soundness -----------------------------------------------------------

std::vector<CheckReport> check_pipeline_class(PipelineKind kind, const Ctx& ctx) {
    std::uint64_t violations = 0;
    const std::uint64_t runs = 1000;
    for (std::uint64_t i = 0; i < runs; ++i) {
        PipelineConfig cfg = random_pipeline_config(kind, ctx.prm.seed + i);
        Expr e = build_pipeline(cfg);
        std::vector<VertexSet> leaf_sets = pipeline_leaf_sets(cfg);
        Signature sig = infer_signature(e, leaf_sets);
        ClassBound want =
            kind == PipelineKind::Complex ? ClassBound::Complex : ClassBound::Independence;
        if (sig.result_class_bound != want) {
            ++violations;
            continue;
        }
        std::vector<ProbabilityMap> maps;
        for (const auto& ls : leaf_sets) maps.push_back(ProbabilityMap::constant(ls, 0.5));
        SampleStream stream = SampleStream::substream(ctx.prm.seed, i);
        SampledObject obj = sample_expr(e, maps, stream);
        bool ok = kind == PipelineKind::Complex ? is_complex(obj.hypergraph)
                                                : is_independence(obj.hypergraph);
        if (!ok) ++violations;
    }
    std::string name = kind == PipelineKind::Complex ? "pipeline-class-complex"
                                                     : "pipeline-class-indep";
    return {make_report(name, "seed=" + std::to_string(ctx.prm.seed) + " runs=1000",
                        Metric::MismatchCount, static_cast<double>(violations), ctx.tol(0))};
}

// --- registry ------------------------------------------------------------------

using CheckFn = std::function<std::vector<CheckReport>(const Ctx&)>;

const std::map<std::string, CheckFn, std::less<>>& registry() {
    static const std::map<std::string, CheckFn, std::less<>> reg = [] {
        std::map<std::string, CheckFn, std::less<>> m;
        for (int part = 1; part <= 5; ++part)
            m["thm1.1-part-" + std::to_string(part)] = [part](const Ctx& c) {
                return check_thm11_part(part, c, "thm1.1-part-" + std::to_string(part));
            };
        for (int part = 1; part <= 4; ++part)
            m["thm3.5-part-" + std::to_string(part)] = [part](const Ctx& c) {
                return check_thm35_part(part, c);
            };
        for (int part = 1; part <= 3; ++part) {
            m["cor1.2-join-" + std::to_string(part)] = [part](const Ctx& c) {
                return check_cor12_part(part, c);
            };
            m["cor1.3-capcup-" + std::to_string(part)] = [part](const Ctx& c) {
                return check_cor13_part(part, c);
            };
        }
        m["cor3.6-1"] = [](const Ctx& c) { return check_thm11_part(2, c, "cor3.6-1"); };
        m["cor3.6-2"] = [](const Ctx& c) { return check_thm11_part(3, c, "cor3.6-2"); };
        m["cor3.7"] = check_cor37;
        m["cor3.8"] = check_cor38;
        m["lemma2.4"] = check_lemma24;
        m["lemma3.1-all"] = check_lemma31;
        m["relations-2.1"] = check_relations21;
        m["example-2.1-fixtures"] = check_example_fixtures;
        m["sampler-stat-pbar"] = [](const Ctx& c) { return check_sampler_stat(ModelFamily::PBar, c); };
        m["sampler-stat-p"] = [](const Ctx& c) { return check_sampler_stat(ModelFamily::P, c); };
        m["sampler-stat-q"] = [](const Ctx& c) { return check_sampler_stat(ModelFamily::Q, c); };
        m["sampler-cross-p"] = [](const Ctx& c) { return check_sampler_cross(ModelFamily::P, c); };
        m["sampler-cross-q"] = [](const Ctx& c) { return check_sampler_cross(ModelFamily::Q, c); };
        m["pipeline-class-complex"] = [](const Ctx& c) {
            return check_pipeline_class(PipelineKind::Complex, c);
        };
        m["pipeline-class-indep"] = [](const Ctx& c) {
            return check_pipeline_class(PipelineKind::Independence, c);
        };
        return m;
    }();
    return reg;
}

const std::map<std::string, std::vector<std::string>, std::less<>>& groups() {
    static const std::map<std::string, std::vector<std::string>, std::less<>> g = [] {
        std::map<std::string, std::vector<std::string>, std::less<>> m;
        m["thm1.1-all"] = {"thm1.1-part-1", "thm1.1-part-2", "thm1.1-part-3", "thm1.1-part-4",
                           "thm1.1-part-5"};
        m["thm3.5-all"] = {"thm3.5-part-1", "thm3.5-part-2", "thm3.5-part-3", "thm3.5-part-4"};
        m["cor1.2-all"] = {"cor1.2-join-1", "cor1.2-join-2", "cor1.2-join-3"};
        m["cor1.3-all"] = {"cor1.3-capcup-1", "cor1.3-capcup-2", "cor1.3-capcup-3"};
        std::vector<std::string> all;
        for (const auto& [name, fn] : registry()) all.push_back(name);
        m["all"] = std::move(all);
        return m;
    }();
    return g;
}

}  // namespace

std::vector<CheckReport> run_checks(std::string_view name, const CheckParams& params) {
    Ctx ctx{params};
    auto git = groups().find(name);
    if (git != groups().end()) {
        std::vector<CheckReport> out;
        for (const auto& sub : git->second) {
            auto reports = registry().at(sub)(ctx);
            out.insert(out.end(), reports.begin(), reports.end());
        }
        return out;
    }
    auto it = registry().find(name);
    if (it == registry().end())
        throw InvalidInput("unknown check '" + std::string(name) + "'");
    return it->second(ctx);
}

std::vector<std::string> registered_check_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    for (const auto& [name, members] : groups()) out.push_back(name);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_registered_check(std::string_view name) {
    return registry().count(name) > 0 || groups().count(name) > 0;
}

}  // namespace hg
