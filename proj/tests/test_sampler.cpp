#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hg/sampler.hpp"
#include "hg/text_io.hpp"
#include "hg/verify.hpp"

using namespace hg;

namespace {

const VertexSet kABC{"a", "b", "c"};

VertexSet six() { return VertexSet{"a", "b", "c", "d", "e", "f"}; }

}  // namespace

TEST_CASE("stream determinism") {
    SampleStream s1(42), s2(42);
    for (int i = 0; i < 1000; ++i) CHECK(s1.uniform() == s2.uniform());
    CHECK(s1.draw_count() == 1000);

    SampleStream a = SampleStream::substream(7, 3);
    SampleStream b = SampleStream::substream(7, 3);
    SampleStream c = SampleStream::substream(7, 4);
    CHECK(a.uniform() == b.uniform());
    CHECK(a.uniform() != c.uniform());

    SampleStream u(0);
    double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
}

TEST_CASE("degenerate probabilities") {
    ProbabilityMap ones = ProbabilityMap::constant(kABC, 1.0);
    ProbabilityMap zeros = ProbabilityMap::constant(kABC, 0.0);
    SampleStream stream(1);
    CHECK(sample_hypergraph(ones, stream) == Hypergraph::full(kABC));
    CHECK(sample_hypergraph(zeros, stream) == Hypergraph::empty(kABC));
    CHECK(sample_complex(ones, stream) == Hypergraph::full(kABC));
    CHECK(sample_indep(ones, stream) == Hypergraph::full(kABC));

    // no accepted singletons: the staged complex sampler stops immediately
    ProbabilityMap no_points = ProbabilityMap::per_dimension(kABC, {0.0, 1.0, 1.0});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SampleStream s(seed);
        CHECK(sample_complex(no_points, s) == Hypergraph::empty(kABC));
    }
    // V rejected: nothing below it can ever be drawn
    ProbabilityMap no_top = ProbabilityMap::per_dimension(kABC, {1.0, 1.0, 0.0});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SampleStream s(seed);
        CHECK(sample_indep(no_top, s) == Hypergraph::empty(kABC));
    }
}

TEST_CASE("sampler reproducibility") {
    ProbabilityMap p = ProbabilityMap::seeded_random_table(kABC, 9);
    for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
        SampleStream s1(seed), s2(seed);
        CHECK(to_text(sample_hypergraph(p, s1)) == to_text(sample_hypergraph(p, s2)));
        CHECK(to_text(sample_complex(p, s1)) == to_text(sample_complex(p, s2)));
        CHECK(to_text(sample_indep(p, s1)) == to_text(sample_indep(p, s2)));
    }
    // one Bernoulli draw per edge of Delta[V], in canonical order
    SampleStream s(11);
    sample_hypergraph(ProbabilityMap::constant(kABC, 0.5), s);
    CHECK(s.draw_count() == 7);
}

TEST_CASE("class guarantees over seeded sweeps") {
    ProbabilityMap p6 = ProbabilityMap::constant(six(), 0.5);
    ProbabilityMap p3 = ProbabilityMap::constant(kABC, 0.7);
    for (std::uint64_t seed = 0; seed < 5000; ++seed) {
        SampleStream s = SampleStream::substream(2026, seed);
        const ProbabilityMap& p = (seed % 2) ? p6 : p3;
        CHECK(is_complex(sample_complex(p, s)));
        CHECK(is_independence(sample_indep(p, s)));
    }
}

TEST_CASE("model dispatch") {
    ProbabilityMap p = ProbabilityMap::constant(kABC, 0.5);
    SampleStream s1(3), s2(3);
    CHECK(sample_model({ModelFamily::PBar, p}, s1) == sample_hypergraph(p, s2));
    SampleStream s3(4), s4(4);
    CHECK(sample_model({ModelFamily::P, p}, s3) == sample_complex(p, s4));
    SampleStream s5(5), s6(5);
    CHECK(sample_model({ModelFamily::Q, p}, s5) == sample_indep(p, s6));
}

TEST_CASE("statistical smoke at reduced trial counts") {
    // Tight statistical gates live in the acceptance suite; this catches
    // gross distribution bugs quickly.
    ProbabilityMap p = ProbabilityMap::constant(kABC, 0.5);
    DistributionTable exact_pbar = exact_table({ModelFamily::PBar, p});
    DistributionTable emp = empirical_table(ModelDescriptor{ModelFamily::PBar, p}, 20000, 424242);
    CHECK(total_variation(emp, exact_pbar) < 0.05);

    DistributionTable exact_p = exact_table({ModelFamily::P, p});
    DistributionTable emp_p = empirical_table(ModelDescriptor{ModelFamily::P, p}, 20000, 424243);
    CHECK(total_variation(emp_p, exact_p) < 0.05);

    DistributionTable exact_q = exact_table({ModelFamily::Q, p});
    DistributionTable emp_q = empirical_table(ModelDescriptor{ModelFamily::Q, p}, 20000, 424244);
    CHECK(total_variation(emp_q, exact_q) < 0.05);
}
