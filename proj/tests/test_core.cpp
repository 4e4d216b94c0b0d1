#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hg/core.hpp"
#include "hg/sampler.hpp"
#include "hg/text_io.hpp"
#include "hg/verify.hpp"

using namespace hg;

namespace {

const VertexSet kAB{"a", "b"};
const VertexSet kABC{"a", "b", "c"};

Hypergraph make(const VertexSet& v, std::vector<std::vector<std::string>> edges) {
    return hypergraph_from_labels(v, edges);
}

std::vector<Hypergraph> all_on(const VertexSet& v) {
    std::vector<Hypergraph> out;
    for (const Hypergraph& h : HypergraphEnumeration(v)) out.push_back(h);
    return out;
}

Hypergraph random_on(const VertexSet& v, SampleStream& stream) {
    return sample_hypergraph(ProbabilityMap::constant(v, 0.5), stream);
}

}  // namespace

TEST_CASE("vertex set validation") {
    CHECK_THROWS_AS(VertexSet({}), InvalidInput);
    CHECK_THROWS_AS(VertexSet({"a", "a"}), InvalidInput);
    CHECK_THROWS_AS(VertexSet({"a b"}), InvalidInput);
    CHECK_THROWS_AS(VertexSet({"x,y"}), InvalidInput);
    CHECK_THROWS_AS(VertexSet({"(a"}), InvalidInput);
    CHECK(VertexSet{"(a,b)"}.size() == 1);  // balanced product label is fine
    CHECK(VertexSet::from_csv("a,b,c") == kABC);
    CHECK(*kABC.position_of("c") == 2);
    CHECK(!kABC.position_of("z"));
}

TEST_CASE("canonical edge order: cardinality, then position-lex") {
    // {a} < {b} < {c} < {a,b} < {a,c} < {b,c} < {a,b,c}
    auto edges = canonical_all_edges(kABC);
    REQUIRE(edges.size() == 7);
    CHECK(edges[0] == Hyperedge::of({0}));
    CHECK(edges[1] == Hyperedge::of({1}));
    CHECK(edges[2] == Hyperedge::of({2}));
    CHECK(edges[3] == Hyperedge::of({0, 1}));
    CHECK(edges[4] == Hyperedge::of({0, 2}));
    CHECK(edges[5] == Hyperedge::of({1, 2}));
    CHECK(edges[6] == Hyperedge::of({0, 1, 2}));
    // {a,d} precedes {b,c}: sequences (0,3) < (1,2)
    CHECK(canonical_less(Hyperedge::of({0, 3}), Hyperedge::of({1, 2})));
    CHECK_FALSE(canonical_less(Hyperedge::of({1, 2}), Hyperedge::of({0, 3})));
}

TEST_CASE("complement") {
    CHECK(complement(Hypergraph::empty(kAB)) == Hypergraph::full(kAB));
    CHECK(complement(make(kAB, {{"a"}, {"a", "b"}})) == make(kAB, {{"b"}}));
    Hypergraph h = make(kAB, {{"a"}, {"a", "b"}});
    CHECK(complement(complement(h)) == h);
    CHECK(complement(h).edge_count() == 3 - h.edge_count());
}

TEST_CASE("assoc_complex") {
    VertexSet v{"v0", "v1"};
    Hypergraph h = make(v, {{"v0"}, {"v0", "v1"}});
    CHECK(assoc_complex(h) == make(v, {{"v0"}, {"v1"}, {"v0", "v1"}}));

    VertexSet w{"u0", "u1", "u2", "u3"};
    Hypergraph hp = make(w, {{"u0", "u1"}, {"u0", "u1", "u2"}});
    CHECK(assoc_complex(hp).edge_count() == 7);  // all nonempty subsets of {u0,u1,u2}
    CHECK(assoc_complex(hp) ==
          make(w, {{"u0"}, {"u1"}, {"u2"}, {"u0", "u1"}, {"u0", "u2"}, {"u1", "u2"},
                   {"u0", "u1", "u2"}}));

    Hypergraph k = make(kAB, {{"a"}, {"b"}});
    CHECK(assoc_complex(k) == k);  // already a complex
}

TEST_CASE("lower_complex") {
    VertexSet v{"v0", "v1"};
    CHECK(lower_complex(make(v, {{"v0"}, {"v0", "v1"}})) == make(v, {{"v0"}}));
    VertexSet w{"u0", "u1", "u2", "u3"};
    CHECK(lower_complex(make(w, {{"u0", "u1"}, {"u0", "u1", "u2"}})) == Hypergraph::empty(w));
    CHECK(lower_complex(Hypergraph::full(kABC)) == Hypergraph::full(kABC));
}

TEST_CASE("assoc_indep") {
    VertexSet w{"u0", "u1", "u2", "u3"};
    Hypergraph hp = make(w, {{"u0", "u1"}, {"u0", "u1", "u2"}});
    // Supersets of {u0,u1}: itself, +u2, +u3, +u2+u3.
    CHECK(assoc_indep(hp) == make(w, {{"u0", "u1"},
                                      {"u0", "u1", "u2"},
                                      {"u0", "u1", "u3"},
                                      {"u0", "u1", "u2", "u3"}}));
    VertexSet v{"v0", "v1"};
    Hypergraph h = make(v, {{"v0"}, {"v0", "v1"}});
    CHECK(assoc_indep(h) == h);
    CHECK(assoc_indep(Hypergraph::empty(v)) == Hypergraph::empty(v));
}

TEST_CASE("lower_indep") {
    VertexSet w{"u0", "u1", "u2", "u3"};
    CHECK(lower_indep(make(w, {{"u0", "u1"}, {"u0", "u1", "u2"}})) == Hypergraph::empty(w));
    VertexSet v{"v0", "v1"};
    Hypergraph h = make(v, {{"v0"}, {"v0", "v1"}});
    CHECK(lower_indep(h) == h);
    CHECK(lower_indep(Hypergraph::full(kABC)) == Hypergraph::full(kABC));
}

TEST_CASE("external faces") {
    auto faces = external_faces(Hypergraph::empty(kAB));
    CHECK(faces == std::vector<Hyperedge>{Hyperedge::of({0}), Hyperedge::of({1})});
    CHECK(external_faces(make(kAB, {{"a"}, {"b"}})) ==
          std::vector<Hyperedge>{Hyperedge::of({0, 1})});
    CHECK(external_faces(Hypergraph::full(kAB)).empty());
    CHECK_THROWS_AS(external_faces(make(kAB, {{"a", "b"}})), InvalidInput);  // not a complex
}

TEST_CASE("co-external faces") {
    CHECK(co_external_faces(Hypergraph::empty(kAB)) ==
          std::vector<Hyperedge>{Hyperedge::of({0, 1})});
    CHECK(co_external_faces(make(kAB, {{"a", "b"}})) ==
          std::vector<Hyperedge>{Hyperedge::of({0}), Hyperedge::of({1})});
    CHECK(co_external_faces(Hypergraph::full(kAB)).empty());
    CHECK_THROWS_AS(co_external_faces(make(kAB, {{"a"}})), InvalidInput);
}

TEST_CASE("extremal edges") {
    Hypergraph h = make(kAB, {{"a"}, {"a", "b"}});
    CHECK(extremal_edges(h, Extremal::Maximal) == std::vector<Hyperedge>{Hyperedge::of({0, 1})});
    CHECK(extremal_edges(h, Extremal::Minimal) == std::vector<Hyperedge>{Hyperedge::of({0})});
    CHECK(extremal_edges(Hypergraph::empty(kAB), Extremal::Maximal).empty());
    CHECK(extremal_edges(Hypergraph::empty(kAB), Extremal::Minimal).empty());
}

TEST_CASE("classify") {
    CHECK(classify(Hypergraph::full(kAB)) == HypergraphClass::Both);
    CHECK(classify(Hypergraph::empty(kAB)) == HypergraphClass::Both);
    CHECK(classify(make(kAB, {{"a"}, {"a", "b"}})) == HypergraphClass::Independence);
    CHECK(classify(make(kAB, {{"a"}, {"b"}})) == HypergraphClass::Complex);
    CHECK(classify(make(kABC, {{"a"}, {"a", "b"}})) == HypergraphClass::Neither);
}

TEST_CASE("combine") {
    Hypergraph a = make(kAB, {{"a"}});
    Hypergraph ab = make(kAB, {{"a"}, {"b"}});
    CHECK(combine(a, ab, SetOp::Intersect) == a);
    CHECK(combine(a, make(kAB, {{"b"}}), SetOp::Unite) == ab);
    Hypergraph h = make(kAB, {{"a"}, {"a", "b"}});
    CHECK(combine(h, complement(h), SetOp::Intersect) == Hypergraph::empty(kAB));
    CHECK_THROWS_AS(combine(a, make(kABC, {{"a"}}), SetOp::Intersect), InvalidInput);
    // same labels, different order: still a mismatch
    CHECK_THROWS_AS(combine(a, make(VertexSet{"b", "a"}, {{"a"}}), SetOp::Unite), InvalidInput);
}

TEST_CASE("join") {
    VertexSet v{"v0", "v1"};
    VertexSet w{"u0", "u1", "u2", "u3"};
    Hypergraph h = make(v, {{"v0"}, {"v0", "v1"}});
    Hypergraph hp = make(w, {{"u0", "u1"}, {"u0", "u1", "u2"}});
    Hypergraph j = join(h, hp);
    VertexSet jv = VertexSet::joined(v, w);
    CHECK(j.vertex_set() == jv);
    CHECK(j == make(jv, {{"v0"},
                         {"v0", "v1"},
                         {"u0", "u1"},
                         {"u0", "u1", "u2"},
                         {"v0", "u0", "u1"},
                         {"v0", "u0", "u1", "u2"},
                         {"v0", "v1", "u0", "u1"},
                         {"v0", "v1", "u0", "u1", "u2"}}));
    CHECK(j.edge_count() == 8);

    Hypergraph je = join(h, Hypergraph::empty(w));
    CHECK(je == make(VertexSet::joined(v, w), {{"v0"}, {"v0", "v1"}}));

    // Join of the subset closures is the full complex on the five used labels.
    Hypergraph full5 = [&] {
        std::vector<Hyperedge> edges;
        for (std::uint64_t m = 1; m < 32; ++m) edges.push_back(Hyperedge(m));
        return Hypergraph(jv, std::move(edges));
    }();
    CHECK(join(assoc_complex(h), assoc_complex(hp)) == full5);

    CHECK_THROWS_AS(join(h, make(VertexSet{"v0"}, {{"v0"}})), InvalidInput);
}

TEST_CASE("box product") {
    VertexSet v{"v0", "v1"};
    VertexSet w{"u0", "u1", "u2", "u3"};
    Hypergraph h = make(v, {{"v0"}, {"v0", "v1"}});
    Hypergraph hp = make(w, {{"u0", "u1"}, {"u0", "u1", "u2"}});
    Hypergraph b = box_product(h, hp);
    VertexSet pv = VertexSet::product(v, w);
    CHECK(b.vertex_set() == pv);
    CHECK(b == make(pv, {{"(v0,u0)", "(v0,u1)"},
                         {"(v0,u0)", "(v0,u1)", "(v0,u2)"},
                         {"(v0,u0)", "(v0,u1)", "(v1,u0)", "(v1,u1)"},
                         {"(v0,u0)", "(v0,u1)", "(v0,u2)", "(v1,u0)", "(v1,u1)", "(v1,u2)"}}));

    Hypergraph single = box_product(make(VertexSet{"a"}, {{"a"}}), make(VertexSet{"b"}, {{"b"}}));
    CHECK(single == make(VertexSet{"(a,b)"}, {{"(a,b)"}}));

    CHECK(box_product(h, Hypergraph::empty(w)) == Hypergraph::empty(pv));
}

TEST_CASE("apply_vertex_map") {
    Hypergraph h = make(kAB, {{"a", "b"}});
    CHECK(apply_vertex_map(VertexMap::identity(kAB), h) == h);

    VertexMap collapse(kAB, VertexSet{"x"}, {0, 0});
    CHECK(apply_vertex_map(collapse, h) == make(VertexSet{"x"}, {{"x"}}));

    VertexMap embed(kAB, kABC, {0, 1});
    CHECK(apply_vertex_map(embed, assoc_complex(h)) == assoc_complex(apply_vertex_map(embed, h)));

    CHECK_THROWS_AS(apply_vertex_map(collapse, make(kABC, {{"a"}})), InvalidInput);
    CHECK_THROWS_AS(VertexMap(kAB, VertexSet{"x"}, {0}), InvalidInput);      // not total
    CHECK_THROWS_AS(VertexMap(kAB, VertexSet{"x"}, {0, 1}), InvalidInput);   // image range
}

TEST_CASE("unary relation suites, exhaustive on up to three vertices") {
    for (const VertexSet& v : {VertexSet{"a"}, kAB, kABC}) {
        const Hypergraph full = Hypergraph::full(v);
        const Hypergraph none = Hypergraph::empty(v);
        for (const Hypergraph& h : all_on(v)) {
            CHECK(complement(complement(h)) == h);
            // gamma-conjugation between the two closure pairs
            CHECK(assoc_indep(h) == complement(lower_complex(complement(h))));
            CHECK(lower_indep(h) == complement(assoc_complex(complement(h))));
            // absorption and idempotence
            Hypergraph up = assoc_complex(h), down = lower_complex(h);
            Hypergraph iup = assoc_indep(h), idown = lower_indep(h);
            CHECK(assoc_complex(down) == down);
            CHECK(lower_complex(up) == up);
            CHECK(assoc_indep(idown) == idown);
            CHECK(lower_indep(iup) == iup);
            CHECK(assoc_complex(up) == up);
            CHECK(lower_complex(down) == down);
            CHECK(assoc_indep(iup) == iup);
            CHECK(lower_indep(idown) == idown);
            // composite idempotence
            Hypergraph a = lower_complex(iup);
            CHECK(lower_complex(assoc_indep(a)) == a);
            Hypergraph b2 = assoc_indep(down);
            CHECK(assoc_indep(lower_complex(b2)) == b2);
            Hypergraph c2 = assoc_complex(idown);
            CHECK(assoc_complex(lower_indep(c2)) == c2);
            Hypergraph d2 = lower_indep(up);
            CHECK(lower_indep(assoc_complex(d2)) == d2);
            // saturation
            CHECK(assoc_complex(iup) == (h.edge_count() ? full : none));
            bool has_top = h.contains(Hyperedge((std::uint64_t{1} << v.size()) - 1));
            CHECK(assoc_complex(idown) == (has_top ? full : none));
        }
    }
}

TEST_CASE("unary relation suites, randomized on four and five vertices") {
    SampleStream stream(20260808);
    for (const VertexSet& v :
         {VertexSet{"a", "b", "c", "d"}, VertexSet{"a", "b", "c", "d", "e"}}) {
        for (int i = 0; i < 50; ++i) {
            Hypergraph h = random_on(v, stream);
            CHECK(complement(complement(h)) == h);
            CHECK(assoc_indep(h) == complement(lower_complex(complement(h))));
            CHECK(lower_indep(h) == complement(assoc_complex(complement(h))));
            CHECK(assoc_complex(assoc_complex(h)) == assoc_complex(h));
            CHECK(lower_indep(lower_indep(h)) == lower_indep(h));
        }
    }
}

TEST_CASE("distribution laws over intersection and union, exhaustive pairs") {
    auto pairs = all_on(kAB);
    for (const Hypergraph& x : pairs) {
        for (const Hypergraph& y : pairs) {
            Hypergraph cap = combine(x, y, SetOp::Intersect);
            Hypergraph cup = combine(x, y, SetOp::Unite);
            CHECK(complement(cap) == combine(complement(x), complement(y), SetOp::Unite));
            CHECK(complement(cup) == combine(complement(x), complement(y), SetOp::Intersect));
            CHECK(assoc_complex(cup) == combine(assoc_complex(x), assoc_complex(y), SetOp::Unite));
            CHECK(assoc_complex(cap).is_subset_of(
                combine(assoc_complex(x), assoc_complex(y), SetOp::Intersect)));
            CHECK(lower_complex(cap) ==
                  combine(lower_complex(x), lower_complex(y), SetOp::Intersect));
            CHECK(combine(lower_complex(x), lower_complex(y), SetOp::Unite)
                      .is_subset_of(lower_complex(cup)));
            CHECK(assoc_indep(cup) == combine(assoc_indep(x), assoc_indep(y), SetOp::Unite));
            CHECK(assoc_indep(cap).is_subset_of(
                combine(assoc_indep(x), assoc_indep(y), SetOp::Intersect)));
            CHECK(lower_indep(cap) == combine(lower_indep(x), lower_indep(y), SetOp::Intersect));
            CHECK(combine(lower_indep(x), lower_indep(y), SetOp::Unite)
                      .is_subset_of(lower_indep(cup)));
        }
    }
}

TEST_CASE("closure operators over joins") {
    VertexSet w{"c", "d"};
    auto left = all_on(kAB);
    auto right = all_on(w);
    for (const Hypergraph& x : left) {
        for (const Hypergraph& y : right) {
            Hypergraph j = join(x, y);
            CHECK(assoc_complex(j) == join(assoc_complex(x), assoc_complex(y)));
            CHECK(lower_complex(j) == join(lower_complex(x), lower_complex(y)));
            // Superset closures only satisfy one-sided inclusions over joins:
            // a pure left edge has mixed supersets the right factor cannot see.
            CHECK(join(assoc_indep(x), assoc_indep(y)).is_subset_of(assoc_indep(j)));
            CHECK(lower_indep(j).is_subset_of(join(lower_indep(x), lower_indep(y))));
        }
    }
    // Pinned strict-inclusion witnesses.
    Hypergraph x = make(kAB, {{"a"}});
    Hypergraph y = make(w, {{"c"}});
    Hypergraph lhs = assoc_indep(join(x, y));
    Hypergraph rhs = join(assoc_indep(x), assoc_indep(y));
    CHECK(rhs.is_subset_of(lhs));
    CHECK(lhs != rhs);  // {a,d} is a superset of {a} the join form misses
    Hypergraph x2 = make(kAB, {{"a", "b"}});
    Hypergraph lhs2 = lower_indep(join(x2, Hypergraph::empty(w)));
    Hypergraph rhs2 = join(lower_indep(x2), Hypergraph::empty(w));
    CHECK(lhs2 == Hypergraph::empty(lhs2.vertex_set()));
    CHECK(rhs2.edge_count() == 1);
}

TEST_CASE("binary distributivity on exhaustive two-vertex triples") {
    VertexSet w{"c", "d"};
    VertexSet u{"e", "f"};
    auto as = all_on(kAB);
    auto bs = all_on(w);
    auto cs = all_on(u);
    for (const Hypergraph& h1 : as) {
        for (const Hypergraph& h2 : bs) {
            for (const Hypergraph& h3 : bs) {
                CHECK(join(h1, combine(h2, h3, SetOp::Unite)) ==
                      combine(join(h1, h2), join(h1, h3), SetOp::Unite));
                CHECK(join(h1, combine(h2, h3, SetOp::Intersect)) ==
                      combine(join(h1, h2), join(h1, h3), SetOp::Intersect));
                CHECK(box_product(h1, combine(h2, h3, SetOp::Unite)) ==
                      combine(box_product(h1, h2), box_product(h1, h3), SetOp::Unite));
                CHECK(box_product(h1, combine(h2, h3, SetOp::Intersect)) ==
                      combine(box_product(h1, h2), box_product(h1, h3), SetOp::Intersect));
            }
        }
    }
    // Box over join: one-sided only. The mixed join pairs (s1#s2)*(s1'#s3)
    // with s1 != s1' have no preimage on the left.
    auto relabel_onto = [](const Hypergraph& target_side, const Hypergraph& b) {
        std::vector<std::size_t> mapping(b.vertex_set().size());
        for (std::size_t i = 0; i < mapping.size(); ++i)
            mapping[i] = *target_side.vertex_set().position_of(b.vertex_set().label(i));
        return apply_vertex_map(VertexMap(b.vertex_set(), target_side.vertex_set(), mapping), b);
    };
    for (const Hypergraph& h1 : as) {
        for (const Hypergraph& h2 : bs) {
            for (const Hypergraph& h3 : cs) {
                Hypergraph lhs = box_product(h1, join(h2, h3));
                Hypergraph rhs = join(box_product(h1, h2), box_product(h1, h3));
                CHECK(lhs.is_subset_of(relabel_onto(lhs, rhs)));
            }
        }
    }
    // Pinned strict-inclusion witness: two left edges, nonempty right factors.
    Hypergraph h1 = make(kAB, {{"a"}, {"b"}});
    Hypergraph h2 = make(w, {{"c"}});
    Hypergraph h3 = make(u, {{"e"}});
    Hypergraph lhs = box_product(h1, join(h2, h3));
    Hypergraph rhs = join(box_product(h1, h2), box_product(h1, h3));
    CHECK(lhs.edge_count() == 6);
    CHECK(rhs.edge_count() == 8);
}

TEST_CASE("closure extremality against filtered enumeration") {
    for (const VertexSet& v : {kAB, kABC}) {
        std::vector<Hypergraph> complexes, indeps;
        for (const Hypergraph& k : HypergraphEnumeration(v, HypergraphClass::Complex))
            complexes.push_back(k);
        for (const Hypergraph& l : HypergraphEnumeration(v, HypergraphClass::Independence))
            indeps.push_back(l);
        for (const Hypergraph& h : all_on(v)) {
            Hypergraph up = assoc_complex(h), down = lower_complex(h);
            Hypergraph iup = assoc_indep(h), idown = lower_indep(h);
            for (const Hypergraph& k : complexes) {
                if (h.is_subset_of(k)) CHECK(up.is_subset_of(k));
                if (k.is_subset_of(h)) CHECK(k.is_subset_of(down));
            }
            for (const Hypergraph& l : indeps) {
                if (h.is_subset_of(l)) CHECK(iup.is_subset_of(l));
                if (l.is_subset_of(h)) CHECK(l.is_subset_of(idown));
            }
        }
    }
}

TEST_CASE("external faces match the extremal edges of the complement") {
    for (const VertexSet& v : {kAB, kABC}) {
        for (const Hypergraph& k : HypergraphEnumeration(v, HypergraphClass::Complex))
            CHECK(external_faces(k) == extremal_edges(complement(k), Extremal::Minimal));
        for (const Hypergraph& l : HypergraphEnumeration(v, HypergraphClass::Independence))
            CHECK(co_external_faces(l) == extremal_edges(complement(l), Extremal::Maximal));
    }
}

TEST_CASE("morphism images") {
    std::vector<VertexSet> sets = {VertexSet{"a"}, kAB, kABC};
    std::vector<VertexSet> codoms = {VertexSet{"x"}, VertexSet{"x", "y"},
                                     VertexSet{"x", "y", "z"}};
    for (const VertexSet& dom : sets) {
        for (const VertexSet& cod : codoms) {
            std::size_t count = 1;
            for (std::size_t i = 0; i < dom.size(); ++i) count *= cod.size();
            for (std::size_t code = 0; code < count; ++code) {
                std::vector<std::size_t> mapping(dom.size());
                std::size_t c = code;
                for (std::size_t i = 0; i < dom.size(); ++i) {
                    mapping[i] = c % cod.size();
                    c /= cod.size();
                }
                VertexMap f(dom, cod, mapping);
                for (const Hypergraph& h : all_on(dom)) {
                    Hypergraph fh = apply_vertex_map(f, h);
                    CHECK(apply_vertex_map(f, assoc_complex(h)) == assoc_complex(fh));
                    CHECK(apply_vertex_map(f, lower_complex(h)).is_subset_of(lower_complex(fh)));
                    CHECK(apply_vertex_map(f, assoc_indep(h)).is_subset_of(assoc_indep(fh)));
                }
            }
        }
    }
    // delta is monotone, so the inclusion extends to any superset target.
    SampleStream stream(99);
    for (int i = 0; i < 200; ++i) {
        Hypergraph small = random_on(kABC, stream);
        Hypergraph big = combine(small, random_on(kABC, stream), SetOp::Unite);
        CHECK(lower_complex(small).is_subset_of(lower_complex(big)));
        CHECK(lower_indep(small).is_subset_of(lower_indep(big)));
    }
}

TEST_CASE("join and box cardinalities") {
    SampleStream stream(7);
    VertexSet v{"a", "b", "c"};
    VertexSet w{"d", "e", "f", "g"};
    for (int i = 0; i < 100; ++i) {
        Hypergraph x = random_on(v, stream);
        Hypergraph y = random_on(w, stream);
        if (!x.edge_count() || !y.edge_count()) continue;
        Hyperedge sx = x.edges()[0], sy = y.edges()[0];
        Hypergraph jx(v, {sx}), jy(w, {sy});
        Hypergraph j = join(jx, jy);
        Hypergraph b = box_product(jx, jy);
        // the mixed edge is the largest one in the join
        CHECK(extremal_edges(j, Extremal::Maximal)[0].cardinality() ==
              sx.cardinality() + sy.cardinality());
        CHECK(b.edges()[0].cardinality() == sx.cardinality() * sy.cardinality());
    }
}

TEST_CASE("serialization round trip") {
    for (const Hypergraph& h : all_on(kABC)) {
        std::string text = to_text(h);
        CHECK(to_text(parse_hypergraph(text)) == text);
    }
    // product labels embed commas and parentheses
    Hypergraph b = box_product(make(kAB, {{"a", "b"}}), make(VertexSet{"c", "d"}, {{"c", "d"}}));
    CHECK(to_text(parse_hypergraph(to_text(b))) == to_text(b));
    // unordered edge lines canonicalize
    Hypergraph parsed = parse_hypergraph("# vertices: a b\na,b\nb\na\n\n");
    CHECK(parsed == Hypergraph::full(kAB));
    CHECK_THROWS_AS(parse_hypergraph("no header"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("# vertices: a\nz\n\n"), ParseError);
}

TEST_CASE("dense enumeration bound") {
    std::vector<std::string> labels;
    for (int i = 0; i < 21; ++i) labels.push_back("v" + std::to_string(i));
    VertexSet big(labels);
    CHECK_THROWS_AS(Hypergraph::full(big), BoundError);
    CHECK_THROWS_AS(complement(Hypergraph::empty(big)), BoundError);
}
