#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "arbor/quiver.hpp"

namespace arbor {

/// One insertion made while saturating: `added` entered the set in `round`
/// (1-based), produced by the quadruple a <= b <= c <= d whose morphisms
/// (a,c) and (b,d) were already present.
struct SaturationStep {
    Morphism added;
    int round = 0;
    std::array<int, 4> quadruple{};

    friend bool operator==(const SaturationStep&, const SaturationStep&) = default;
};

/// A 2-out-of-6 closed morphism set together with the set it was generated
/// from. Instances only come out of the closure routines or from
/// `from_closed`, which validates.
class ClosedMorphismSet {
public:
    /// Wraps an already-closed set. Throws DomainError if `set` is not closed.
    static ClosedMorphismSet from_closed(const MorphismSet& set);
    /// Rebuilds a saturation result (e.g. from a serialized report). Checks
    /// that `members` is closed and contains `provenance`.
    static ClosedMorphismSet restore(const MorphismSet& members, const MorphismSet& provenance,
                                     int passes, std::vector<SaturationStep> trace);

    const MorphismSet& members() const { return members_; }
    const MorphismSet& provenance() const { return provenance_; }
    const LinearQuiver& quiver() const { return members_.quiver(); }
    bool contains(Morphism f) const { return members_.contains(f); }

    /// Full scans performed by the saturation, including the final one that
    /// inserted nothing. Zero for sets built by the brute-force oracle.
    int passes() const { return passes_; }
    const std::vector<SaturationStep>& trace() const { return trace_; }
    std::optional<SaturationStep> step_for(Morphism f) const;

    bool is_full() const;

private:
    ClosedMorphismSet(MorphismSet members, MorphismSet provenance, int passes,
                      std::vector<SaturationStep> trace);

    friend ClosedMorphismSet closure_2of6(const LinearQuiver&, const MorphismSet&);
    friend ClosedMorphismSet brute_force_minimal_closed_superset(const LinearQuiver&,
                                                                 const MorphismSet&);
    friend void for_each_closed_set(const LinearQuiver&,
                                    const std::function<void(const ClosedMorphismSet&)>&);

    MorphismSet members_;
    MorphismSet provenance_;
    int passes_ = 0;
    std::vector<SaturationStep> trace_;
};

/// Least 2-out-of-6 closed superset of W and the identities, by round-based
/// saturation: round i+1 reads the set produced by round i, scans quadruples
/// in lexicographic order and inserts (a,b), (b,c), (c,d), (a,d) whenever
/// (a,c) and (b,d) are present. Stops after a round that inserts nothing.
ClosedMorphismSet closure_2of6(const LinearQuiver& q, const MorphismSet& w);

/// True iff `w` holds every identity and no quadruple rule adds a member.
bool is_two_of_six_closed(const LinearQuiver& q, const MorphismSet& w);

/// Largest quiver accepted by the exhaustive routines below (21 non-identity
/// morphisms, 2^21 subsets).
inline constexpr int kBruteForceMaxSize = 7;

/// Oracle for closure_2of6: enumerates every superset of W (identities
/// forced), keeps the closed ones, and returns their intersection after
/// checking it coincides with the unique cardinality-minimal closed superset.
ClosedMorphismSet brute_force_minimal_closed_superset(const LinearQuiver& q,
                                                      const MorphismSet& w);

/// Visits every 2-out-of-6 closed set exactly once, in increasing order of
/// non-identity bitmask.
void for_each_closed_set(const LinearQuiver& q,
                         const std::function<void(const ClosedMorphismSet&)>& visit);

std::vector<ClosedMorphismSet> enumerate_closed_sets(const LinearQuiver& q);

}  // namespace arbor
