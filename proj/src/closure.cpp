#include "arbor/closure.hpp"

#include <bit>
#include <limits>
#include <string>

#include "arbor/error.hpp"

namespace arbor {

namespace {

void require_members_in(const LinearQuiver& q, const MorphismSet& w) {
    if (w.quiver() != q) {
        throw DomainError("morphism set belongs to a quiver with " +
                          std::to_string(w.quiver().size()) + " objects, expected " +
                          std::to_string(q.size()));
    }
}

// The 2-out-of-6 rule compiled to bitmasks over non-identity indices.
// Identities are implicit members, so they drop out of both masks.
struct RuleMask {
    std::uint64_t premise;
    std::uint64_t conclusion;
};

std::vector<RuleMask> compile_rules(const LinearQuiver& q) {
    auto bit = [&](int x, int y) -> std::uint64_t {
        return x == y ? 0 : std::uint64_t{1} << q.non_identity_index({x, y});
    };
    std::vector<RuleMask> rules;
    const int s = q.size();
    for (int a = 0; a < s; ++a)
        for (int b = a; b < s; ++b)
            for (int c = b; c < s; ++c)
                for (int d = c; d < s; ++d) {
                    const auto premise = bit(a, c) | bit(b, d);
                    const auto conclusion = bit(a, b) | bit(b, c) | bit(c, d) | bit(a, d);
                    if ((conclusion & ~premise) != 0) rules.push_back({premise, conclusion});
                }
    return rules;
}

bool mask_closed(const std::vector<RuleMask>& rules, std::uint64_t set) {
    for (const auto& r : rules) {
        if ((set & r.premise) == r.premise && (set & r.conclusion) != r.conclusion) return false;
    }
    return true;
}

void require_brute_force_size(const LinearQuiver& q) {
    if (q.size() > kBruteForceMaxSize) {
        throw CapacityError("exhaustive enumeration supports quivers of at most " +
                            std::to_string(kBruteForceMaxSize) + " objects (n <= " +
                            std::to_string(kBruteForceMaxSize - 2) + "), got " +
                            std::to_string(q.size()));
    }
}

}  // namespace

ClosedMorphismSet::ClosedMorphismSet(MorphismSet members, MorphismSet provenance, int passes,
                                     std::vector<SaturationStep> trace)
    : members_(std::move(members)),
      provenance_(std::move(provenance)),
      passes_(passes),
      trace_(std::move(trace)) {}

ClosedMorphismSet ClosedMorphismSet::from_closed(const MorphismSet& set) {
    if (!is_two_of_six_closed(set.quiver(), set)) {
        throw DomainError("morphism set {" + to_string(set) +
                          "} is not 2-out-of-6 closed; close it first");
    }
    return ClosedMorphismSet(set, set, 0, {});
}

ClosedMorphismSet ClosedMorphismSet::restore(const MorphismSet& members,
                                             const MorphismSet& provenance, int passes,
                                             std::vector<SaturationStep> trace) {
    if (!is_two_of_six_closed(members.quiver(), members)) {
        throw DomainError("restored set {" + to_string(members) + "} is not 2-out-of-6 closed");
    }
    if (!provenance.is_subset_of(members)) {
        throw DomainError("restored closure does not contain its generating set");
    }
    return ClosedMorphismSet(members, provenance, passes, std::move(trace));
}

std::optional<SaturationStep> ClosedMorphismSet::step_for(Morphism f) const {
    for (const auto& step : trace_) {
        if (step.added == f) return step;
    }
    return std::nullopt;
}

bool ClosedMorphismSet::is_full() const {
    return members_.count() == members_.quiver().morphism_count();
}

ClosedMorphismSet closure_2of6(const LinearQuiver& q, const MorphismSet& w) {
    require_members_in(q, w);
    MorphismSet current = w | MorphismSet::identities(q);
    std::vector<SaturationStep> trace;
    const int s = q.size();
    int round = 0;
    for (;;) {
        ++round;
        MorphismSet next = current;
        bool changed = false;
        for (int a = 0; a < s; ++a)
            for (int b = a; b < s; ++b)
                for (int c = b; c < s; ++c)
                    for (int d = c; d < s; ++d) {
                        if (!current.contains({a, c}) || !current.contains({b, d})) continue;
                        for (Morphism f : {Morphism{a, b}, Morphism{b, c}, Morphism{c, d},
                                           Morphism{a, d}}) {
                            if (!next.contains(f)) {
                                next.insert(f);
                                trace.push_back({f, round, {a, b, c, d}});
                                changed = true;
                            }
                        }
                    }
        if (!changed) break;
        current = std::move(next);
    }
    return ClosedMorphismSet(std::move(current), w, round, std::move(trace));
}

bool is_two_of_six_closed(const LinearQuiver& q, const MorphismSet& w) {
    require_members_in(q, w);
    if (!w.contains_all_identities()) return false;
    const int s = q.size();
    for (int a = 0; a < s; ++a)
        for (int b = a; b < s; ++b)
            for (int c = b; c < s; ++c)
                for (int d = c; d < s; ++d) {
                    if (!w.contains({a, c}) || !w.contains({b, d})) continue;
                    if (!w.contains({a, b}) || !w.contains({b, c}) || !w.contains({c, d}) ||
                        !w.contains({a, d})) {
                        return false;
                    }
                }
    return true;
}

ClosedMorphismSet brute_force_minimal_closed_superset(const LinearQuiver& q,
                                                      const MorphismSet& w) {
    require_members_in(q, w);
    require_brute_force_size(q);
    const auto rules = compile_rules(q);
    const auto k = q.non_identity_count();
    const std::uint64_t full = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
    const std::uint64_t base = w.non_identity_mask();
    const std::uint64_t free = full & ~base;

    std::uint64_t intersection = full;
    std::uint64_t minimal = full;
    int minimal_size = std::numeric_limits<int>::max();
    int minimal_ties = 0;
    // Walk every submask of `free`, including 0 and `free` itself.
    std::uint64_t extra = free;
    for (;;) {
        const std::uint64_t candidate = base | extra;
        if (mask_closed(rules, candidate)) {
            intersection &= candidate;
            const int size = std::popcount(candidate);
            if (size < minimal_size) {
                minimal_size = size;
                minimal = candidate;
                minimal_ties = 1;
            } else if (size == minimal_size) {
                ++minimal_ties;
            }
        }
        if (extra == 0) break;
        extra = (extra - 1) & free;
    }
    if (minimal_ties != 1 || minimal != intersection) {
        throw ModelViolation("closed supersets of {" + to_string(w) +
                             "} have no unique least element");
    }
    MorphismSet members = MorphismSet::from_non_identity_mask(q, intersection) |
                          MorphismSet::identities(q);
    return ClosedMorphismSet(std::move(members), w, 0, {});
}

void for_each_closed_set(const LinearQuiver& q,
                         const std::function<void(const ClosedMorphismSet&)>& visit) {
    require_brute_force_size(q);
    const auto rules = compile_rules(q);
    const auto k = q.non_identity_count();
    const std::uint64_t limit = std::uint64_t{1} << k;
    const auto ids = MorphismSet::identities(q);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        if (!mask_closed(rules, mask)) continue;
        MorphismSet members = MorphismSet::from_non_identity_mask(q, mask) | ids;
        MorphismSet provenance = members;
        visit(ClosedMorphismSet(std::move(members), std::move(provenance), 0, {}));
    }
}

std::vector<ClosedMorphismSet> enumerate_closed_sets(const LinearQuiver& q) {
    std::vector<ClosedMorphismSet> out;
    for_each_closed_set(q, [&](const ClosedMorphismSet& c) { out.push_back(c); });
    return out;
}

}  // namespace arbor
