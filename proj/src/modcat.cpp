#include "arbor/modcat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "arbor/error.hpp"

namespace arbor {

namespace {

void require_mask_capacity(const LinearQuiver& q) {
    if (q.morphism_count() > 64) {
        throw CapacityError("invertibility signatures need at most 64 morphisms (n <= 8)");
    }
}

MorphismSet from_canonical_mask(const LinearQuiver& q, std::uint64_t mask) {
    MorphismSet s(q);
    while (mask != 0) {
        s.insert(q.morphism_at(static_cast<std::size_t>(std::countr_zero(mask))));
        mask &= mask - 1;
    }
    return s;
}

std::uint64_t canonical_mask(const MorphismSet& set) {
    std::uint64_t mask = 0;
    for (const auto& f : set.members()) mask |= std::uint64_t{1} << set.quiver().index_of(f);
    return mask;
}

void validate_family(const LinearQuiver& q, int prime, int dmax) {
    if (!is_prime(prime)) throw DomainError("field size " + std::to_string(prime) + " is not prime");
    if (dmax < 1) throw DomainError("dimension bound must be >= 1, got " + std::to_string(dmax));
    const auto count = count_representations(q, prime, dmax);
    if (count > kMaxRepresentations) {
        throw CapacityError("enumerating " + std::to_string(count) +
                            " representations exceeds the bound of " +
                            std::to_string(kMaxRepresentations) +
                            "; lower --dmax, --p or --n");
    }
}

}  // namespace

FpMatrix Representation::map(Morphism f) const {
    if (f.source < 0 || f.target >= static_cast<int>(dims.size()) || f.source > f.target) {
        throw DomainError("morphism " + to_string(f) + " is outside the representation's quiver");
    }
    FpMatrix m = FpMatrix::identity(prime, dims[static_cast<std::size_t>(f.source)]);
    for (int i = f.source; i < f.target; ++i) m = arrows[static_cast<std::size_t>(i)] * m;
    return m;
}

std::uint64_t Representation::invertible_mask() const {
    const LinearQuiver q(static_cast<int>(dims.size()));
    require_mask_capacity(q);
    std::uint64_t mask = 0;
    for (int a = 0; a < q.size(); ++a) {
        FpMatrix m = FpMatrix::identity(prime, dims[static_cast<std::size_t>(a)]);
        for (int b = a; b < q.size(); ++b) {
            if (b > a) m = arrows[static_cast<std::size_t>(b - 1)] * m;
            if (m.is_invertible()) mask |= std::uint64_t{1} << q.index_of({a, b});
        }
    }
    return mask;
}

std::string to_string(OracleKind kind) {
    return kind == OracleKind::Representations ? "reps" : "representable";
}

std::uint64_t count_representations(const LinearQuiver& q, int prime, int dmax) {
    // ways[d]: number of assignments of objects 0..i with dims[i] = d.
    using Wide = long double;
    std::vector<Wide> ways(static_cast<std::size_t>(dmax) + 1, 0);
    ways[0] = 1;  // object 0 is zero-dimensional
    for (int i = 1; i < q.size(); ++i) {
        std::vector<Wide> next(ways.size(), 0);
        for (int d = 0; d <= dmax; ++d) {
            for (int prev = 0; prev <= dmax; ++prev) {
                next[static_cast<std::size_t>(d)] +=
                    ways[static_cast<std::size_t>(prev)] * std::pow(Wide(prime), Wide(prev * d));
            }
        }
        ways = std::move(next);
    }
    const Wide total = std::accumulate(ways.begin(), ways.end(), Wide(0));
    if (total >= Wide(std::numeric_limits<std::uint64_t>::max())) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(total + Wide(0.5));
}

void enumerate_representations(const LinearQuiver& q, const MorphismSet& w, int prime, int dmax,
                               const std::function<void(const Representation&)>& visit) {
    if (w.quiver() != q) throw DomainError("morphism set belongs to a different quiver");
    validate_family(q, prime, dmax);
    const int s = q.size();
    std::vector<Morphism> required;
    for (const auto& f : w.members()) {
        if (!f.is_identity()) required.push_back(f);
    }

    Representation rep;
    rep.prime = prime;
    rep.dims.assign(static_cast<std::size_t>(s), 0);
    for (;;) {
        rep.arrows.clear();
        for (int i = 0; i + 1 < s; ++i) {
            rep.arrows.emplace_back(prime, rep.dims[static_cast<std::size_t>(i) + 1],
                                    rep.dims[static_cast<std::size_t>(i)]);
        }
        std::vector<int*> entries;
        for (auto& m : rep.arrows) {
            for (auto& e : m.entries()) entries.push_back(&e);
        }
        for (;;) {
            const bool admissible = std::all_of(required.begin(), required.end(),
                                                [&](Morphism f) { return rep.is_invertible(f); });
            if (admissible) visit(rep);
            // Advance the entry odometer, last entry fastest.
            std::size_t k = entries.size();
            while (k > 0 && *entries[k - 1] == prime - 1) {
                *entries[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
            ++*entries[k - 1];
        }
        // Advance the dimension odometer over objects 1..s-1.
        int i = s - 1;
        while (i >= 1 && rep.dims[static_cast<std::size_t>(i)] == dmax) {
            rep.dims[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 1) break;
        ++rep.dims[static_cast<std::size_t>(i)];
    }
}

ForcedIsoSet forced_iso_reps(const LinearQuiver& q, const MorphismSet& w, int prime, int dmax) {
    ForcedIsoSet out{all_morphisms(q, true), OracleKind::Representations, prime, dmax, 0};
    enumerate_representations(q, w, prime, dmax, [&](const Representation& rep) {
        ++out.family_size;
        for (const auto& f : out.forced.members()) {
            if (!rep.is_invertible(f)) out.forced.erase(f);
        }
    });
    return out;
}

RepresentationFamily::RepresentationFamily(const LinearQuiver& q, int prime, int dmax)
    : quiver_(q), prime_(prime), dmax_(dmax) {
    require_mask_capacity(q);
    std::map<std::uint64_t, std::uint64_t> seen;
    enumerate_representations(q, MorphismSet(q), prime, dmax, [&](const Representation& rep) {
        ++seen[rep.invertible_mask()];
        ++total_;
    });
    for (const auto& [mask, count] : seen) signatures_.push_back({mask, count});
}

ForcedIsoSet RepresentationFamily::forced_isos(const MorphismSet& w) const {
    if (w.quiver() != quiver_) throw DomainError("morphism set belongs to a different quiver");
    const std::uint64_t required = canonical_mask(w);
    std::uint64_t forced = canonical_mask(all_morphisms(quiver_, true));
    std::uint64_t admissible = 0;
    for (const auto& sig : signatures_) {
        if ((sig.invertible & required) != required) continue;
        forced &= sig.invertible;
        admissible += sig.count;
    }
    return {from_canonical_mask(quiver_, forced), OracleKind::Representations, prime_, dmax_,
            admissible};
}

// ---------------------------------------------------------------------------

std::vector<RepresentableModule> representable_modules(const LocalizedCategory& lc, int prime) {
    const int s = lc.object_count();
    std::vector<RepresentableModule> out;
    for (int v = 0; v < s; ++v) {
        // basis[x]: class ids of Hom(v, x) that do not factor through 0.
        std::vector<std::vector<int>> basis(static_cast<std::size_t>(s));
        bool reduced = false;
        for (int x = 0; x < s; ++x) {
            const auto hom = lc.hom(v, x);
            std::vector<bool> factors(hom.size(), false);
            for (const auto& to_zero : lc.hom(v, 0)) {
                for (const auto& from_zero : lc.hom(0, x)) {
                    factors[static_cast<std::size_t>(lc.compose(to_zero, from_zero).class_id)] = true;
                }
            }
            for (std::size_t i = 0; i < hom.size(); ++i) {
                if (factors[i]) {
                    reduced = reduced || x != 0;
                } else {
                    basis[static_cast<std::size_t>(x)].push_back(static_cast<int>(i));
                }
            }
        }
        RepresentableModule module;
        module.vertex = v;
        module.reduced = reduced;
        module.rep.prime = prime;
        for (int x = 0; x < s; ++x) {
            module.rep.dims.push_back(static_cast<int>(basis[static_cast<std::size_t>(x)].size()));
        }
        if (module.rep.dims[0] != 0) {
            throw ModelViolation("representable module of " + std::to_string(v) +
                                 " does not vanish at the initial object");
        }
        for (int x = 0; x + 1 < s; ++x) {
            const auto& from = basis[static_cast<std::size_t>(x)];
            const auto& to = basis[static_cast<std::size_t>(x) + 1];
            FpMatrix m(prime, static_cast<int>(to.size()), static_cast<int>(from.size()));
            const auto& step = lc.image({x, x + 1});
            for (std::size_t col = 0; col < from.size(); ++col) {
                const auto& phi = lc.hom(v, x)[static_cast<std::size_t>(from[col])];
                const int target = lc.compose(phi, step).class_id;
                const auto row = std::find(to.begin(), to.end(), target);
                if (row != to.end()) m.set(static_cast<int>(row - to.begin()), static_cast<int>(col), 1);
            }
            module.rep.arrows.push_back(std::move(m));
        }
        out.push_back(std::move(module));
    }
    return out;
}

ForcedIsoSet forced_iso_representable(const LinearQuiver& q, const ClosedMorphismSet& wbar) {
    const LocalizedCategory lc(q, wbar);
    const auto modules = representable_modules(lc);
    ForcedIsoSet out{all_morphisms(q, true), OracleKind::Representable, 2, 0, modules.size()};
    for (const auto& module : modules) {
        for (const auto& f : out.forced.members()) {
            if (!module.rep.is_invertible(f)) out.forced.erase(f);
        }
    }
    return out;
}

SkeletonReport skeleton(const LocalizedCategory& lc) {
    const int s = lc.object_count();
    std::vector<int> root(static_cast<std::size_t>(s));
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
        return x;
    };
    for (int a = 0; a < s; ++a) {
        for (int b = a + 1; b < s; ++b) {
            if (lc.find_iso(a, b) != nullptr) {
                const int ra = find(a);
                const int rb = find(b);
                root[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
            }
        }
    }
    SkeletonReport report;
    std::map<int, std::size_t> class_index;
    for (int v = 0; v < s; ++v) {
        const int r = find(v);
        auto [it, inserted] = class_index.emplace(r, report.classes.size());
        if (inserted) report.classes.emplace_back();
        report.classes[it->second].push_back(v);
    }
    for (const auto& a : report.classes) {
        std::vector<std::size_t> row;
        for (const auto& b : report.classes) row.push_back(lc.hom_size(a.front(), b.front()));
        report.hom_sizes.push_back(std::move(row));
    }
    for (const auto& f : lc.inverted().members().members()) {
        if (find(f.source) != find(f.target)) {
            throw ModelViolation("inverted morphism " + to_string(f) +
                                 " joins non-isomorphic objects");
        }
    }
    const bool all_collapse = report.classes.size() == 1;
    const bool everything_inverted = lc.inverted().is_full();
    if (all_collapse != everything_inverted) {
        throw ModelViolation("vanishing computed from isomorphism classes disagrees with the "
                             "inverted set");
    }
    report.vanishing = all_collapse;
    return report;
}

}  // namespace arbor
