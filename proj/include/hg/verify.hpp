#pragma once

// Brute-force enumeration engine and the named check suites: exact
// distributions, pushforwards, statistical comparison of samplers, and the
// operator-identity catalog.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hg/algebra.hpp"
#include "hg/dist_table.hpp"
#include "hg/expr.hpp"
#include "hg/prob.hpp"
#include "hg/pushforward.hpp"

namespace hg {

/// Iterable range over every hypergraph on V (2^|Delta[V]| states), in
/// bitmask order, optionally filtered by class.
class HypergraphEnumeration {
public:
    explicit HypergraphEnumeration(const VertexSet& vertices,
                                   std::optional<HypergraphClass> filter = std::nullopt);

    class iterator {
    public:
        using value_type = Hypergraph;
        using difference_type = std::ptrdiff_t;

        iterator(const HypergraphEnumeration* owner, std::uint64_t state);
        Hypergraph operator*() const;
        iterator& operator++();
        bool operator!=(const iterator& other) const { return state_ != other.state_; }
        std::uint64_t state() const noexcept { return state_; }

    private:
        void advance_to_match();
        const HypergraphEnumeration* owner_;
        std::uint64_t state_;
    };

    iterator begin() const;
    iterator end() const;
    std::uint64_t state_count() const { return index_.state_count(); }
    const EdgeIndex& index() const noexcept { return index_; }

private:
    bool matches(std::uint64_t state) const;
    EdgeIndex index_;
    std::optional<HypergraphClass> filter_;
};

/// Exact law of a model family: mass at every index from the family's mass
/// function; indices outside the family's support get 0.
DistributionTable exact_table(const ModelDescriptor& model);

/// Delegates to pushforward_expr.
DistributionTable pushforward_table(const Expr& e,
                                    std::span<const DistributionTable> tables);

/// Frequency table over `trials` independent sample_expr draws.  Each trial
/// uses the substream (seed, trial), so results do not depend on `workers`.
DistributionTable empirical_table(const Expr& e, std::span<const ProbabilityMap> maps,
                                  std::uint64_t trials, std::uint64_t seed,
                                  unsigned workers = 1);

/// Frequency table of a model-family sampler.
DistributionTable empirical_table(const ModelDescriptor& model, std::uint64_t trials,
                                  std::uint64_t seed, unsigned workers = 1);

/// Pearson statistic against the exact law, pooling cells with expected
/// count below 5; compared to the Wilson-Hilferty 99.9th-percentile
/// approximation in the sampler checks.
struct ChiSquare {
    double statistic;
    double threshold;  // 99.9th percentile of chi^2 with `dof` degrees of freedom
    std::size_t dof;
};
ChiSquare chi_square_vs_exact(const DistributionTable& empirical,
                              const DistributionTable& exact, std::uint64_t trials);

enum class Metric { MaxAbsDiff, TotalVariation, ChiSquareStat, MismatchCount };
std::string_view to_string(Metric m);

struct CheckReport {
    std::string name;
    std::string params;
    Metric metric = Metric::MaxAbsDiff;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// "PASS|FAIL <name> metric=<m> value=<v> threshold=<t> params=<...>"
std::string render_report(const CheckReport& r);

struct CheckParams {
    std::vector<VertexSet> vertex_blocks;   // empty -> per-check defaults
    std::vector<std::string> p_specs;       // empty -> {"const:0.5", ...}
    std::uint64_t seed = 7;
    std::uint64_t trials = 200000;
    std::optional<double> tolerance;        // overrides the per-check default
    unsigned workers = 1;
};

/// Run one registered check (or a "-all"/"all" group); one report per
/// sub-assertion.  Unknown names throw InvalidInput.
std::vector<CheckReport> run_checks(std::string_view name, const CheckParams& params);

std::vector<std::string> registered_check_names();
bool is_registered_check(std::string_view name);

}  // namespace hg
