#include "arbor/localization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "arbor/error.hpp"

namespace arbor {

namespace {

std::string describe(int a, int b, Zigzag z) {
    return std::to_string(a) + "->" + std::to_string(z.apex) + "<-" + std::to_string(z.pivot) +
           "->" + std::to_string(b);
}

// Plain union-find over zigzag positions.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) parent_[std::max(x, y)] = std::min(x, y);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

bool is_valid_zigzag(const ClosedMorphismSet& wbar, int a, int b, Zigzag z) {
    const auto& q = wbar.quiver();
    if (!q.has_object(a) || !q.has_object(b) || !q.has_object(z.apex) || !q.has_object(z.pivot)) {
        return false;
    }
    return a <= z.apex && z.pivot <= z.apex && z.pivot <= b && wbar.contains({z.pivot, z.apex});
}

Zigzag compose_zigzags(const ClosedMorphismSet& wbar, int a, int b, int c, Zigzag first,
                       Zigzag second) {
    const int m = first.apex;
    const int m0 = first.pivot;
    const int n = second.apex;
    const int n0 = second.pivot;
    Zigzag result;
    if (m0 <= n0) {
        result = {m, m0};
        if (m <= n) {
            // Both rules apply; their outputs are related by one generating step.
            const Zigzag other{n, n0};
            if (!is_valid_zigzag(wbar, a, c, other)) {
                throw ModelViolation("composition cases disagree for " + describe(a, b, first) +
                                     " then " + describe(b, c, second));
            }
        }
    } else if (m <= n) {
        result = {n, n0};
    } else {
        // n0 < m0 <= b <= n < m, with (n0, n) and (m0, m) inverted.
        if (!wbar.contains({n0, m})) {
            throw ModelViolation("inverted set is not closed: (" + std::to_string(n0) + "," +
                                 std::to_string(m) + ") missing while composing " +
                                 describe(a, b, first) + " then " + describe(b, c, second));
        }
        result = {m, n0};
    }
    if (!is_valid_zigzag(wbar, a, c, result)) {
        throw ModelViolation("composite " + describe(a, c, result) + " is not a valid zigzag");
    }
    return result;
}

// ---------------------------------------------------------------------------

LocalizedCategory::LocalizedCategory(const LinearQuiver& q, const ClosedMorphismSet& wbar)
    : quiver_(q), wbar_(wbar) {
    if (wbar.quiver() != q) {
        throw DomainError("inverted set belongs to a different quiver");
    }
    if (!is_two_of_six_closed(q, wbar.members())) {
        throw DomainError("localization requires a 2-out-of-6 closed set");
    }
    build_hom_sets();
    build_composition();
    verify_laws();
    compute_iso_flags();
}

void LocalizedCategory::build_hom_sets() {
    const int s = quiver_.size();
    homs_.resize(static_cast<std::size_t>(s) * s);
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
            HomTable& t = homs_[pair_index(a, b)];
            for (int m = a; m < s; ++m) {
                for (int m0 = 0; m0 <= std::min(m, b); ++m0) {
                    if (wbar_.contains({m0, m})) t.zigzags.push_back({m, m0});
                }
            }
            const std::size_t z = t.zigzags.size();
            DisjointSets sets(z);
            for (std::size_t i = 0; i < z; ++i) {
                for (std::size_t j = 0; j < z; ++j) {
                    const auto& x = t.zigzags[i];
                    const auto& y = t.zigzags[j];
                    if (i != j && x.apex <= y.apex && x.pivot <= y.pivot) sets.unite(i, j);
                }
            }
            // Roots are the smallest index of each class, and zigzags are
            // sorted, so classes come out ordered by their least member.
            std::vector<int> root_to_class(z, -1);
            t.class_of_zigzag.assign(z, -1);
            for (std::size_t i = 0; i < z; ++i) {
                const auto root = sets.find(i);
                if (root_to_class[root] < 0) {
                    root_to_class[root] = static_cast<int>(t.classes.size());
                    t.classes.push_back({a, b, root_to_class[root], t.zigzags[i]});
                    t.members.emplace_back();
                }
                const int id = root_to_class[root];
                t.class_of_zigzag[i] = id;
                t.members[static_cast<std::size_t>(id)].push_back(t.zigzags[i]);
            }
        }
    }
}

void LocalizedCategory::build_composition() {
    const int s = quiver_.size();
    composition_.resize(static_cast<std::size_t>(s) * s * s);
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
            const HomTable& ab = table(a, b);
            if (ab.classes.empty()) continue;
            for (int c = 0; c < s; ++c) {
                const HomTable& bc = table(b, c);
                auto& cell = composition_[triple_index(a, b, c)];
                cell.assign(ab.classes.size() * bc.classes.size(), -1);
                for (std::size_t i = 0; i < ab.classes.size(); ++i) {
                    for (std::size_t j = 0; j < bc.classes.size(); ++j) {
                        // Every pair of representatives must land in one class.
                        int landed = -1;
                        for (const auto& x : ab.members[i]) {
                            for (const auto& y : bc.members[j]) {
                                const Zigzag r = compose_zigzags(wbar_, a, b, c, x, y);
                                const int id = class_of(a, c, r).class_id;
                                if (landed < 0) {
                                    landed = id;
                                } else if (landed != id) {
                                    throw ModelViolation(
                                        "composition is not well defined on classes: " +
                                        describe(a, b, x) + " then " + describe(b, c, y));
                                }
                            }
                        }
                        cell[i * bc.classes.size() + j] = landed;
                    }
                }
            }
        }
    }
}

void LocalizedCategory::verify_laws() const {
    const int s = quiver_.size();
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
            for (const auto& f : hom(a, b)) {
                if (!(compose(identity(a), f) == f) || !(compose(f, identity(b)) == f)) {
                    throw ModelViolation("unit law fails in Hom(" + std::to_string(a) + "," +
                                         std::to_string(b) + ")");
                }
            }
        }
    }
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c)
                for (int d = 0; d < s; ++d)
                    for (const auto& f : hom(a, b))
                        for (const auto& g : hom(b, c))
                            for (const auto& h : hom(c, d)) {
                                if (!(compose(compose(f, g), h) == compose(f, compose(g, h)))) {
                                    throw ModelViolation(
                                        "associativity fails on " + std::to_string(a) + "->" +
                                        std::to_string(b) + "->" + std::to_string(c) + "->" +
                                        std::to_string(d));
                                }
                            }
    // Functoriality of Q -> Q[W^{-1}].
    for (int a = 0; a < s; ++a)
        for (int b = a; b < s; ++b)
            for (int c = b; c < s; ++c) {
                if (!(compose(image({a, b}), image({b, c})) == image({a, c}))) {
                    throw ModelViolation("canonical functor does not preserve composition");
                }
            }
}

void LocalizedCategory::compute_iso_flags() {
    const int s = quiver_.size();
    iso_.resize(static_cast<std::size_t>(s) * s);
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
            auto& flags = iso_[pair_index(a, b)];
            const auto fs = hom(a, b);
            flags.assign(fs.size(), false);
            for (std::size_t i = 0; i < fs.size(); ++i) {
                for (const auto& g : hom(b, a)) {
                    if (compose(fs[i], g) == identity(a) && compose(g, fs[i]) == identity(b)) {
                        flags[i] = true;
                        break;
                    }
                }
            }
        }
    }
}

const LocalizedCategory::HomTable& LocalizedCategory::table(int a, int b) const {
    if (!quiver_.has_object(a) || !quiver_.has_object(b)) {
        throw DomainError("object out of range: " + std::to_string(a) + ", " + std::to_string(b));
    }
    return homs_[pair_index(a, b)];
}

void LocalizedCategory::check_member(const LocMorphism& f) const {
    const auto& t = table(f.source, f.target);
    if (f.class_id < 0 || static_cast<std::size_t>(f.class_id) >= t.classes.size()) {
        throw DomainError("no class " + std::to_string(f.class_id) + " in Hom(" +
                          std::to_string(f.source) + "," + std::to_string(f.target) + ")");
    }
}

std::span<const LocMorphism> LocalizedCategory::hom(int a, int b) const {
    return table(a, b).classes;
}

const std::vector<Zigzag>& LocalizedCategory::class_members(const LocMorphism& f) const {
    check_member(f);
    return table(f.source, f.target).members[static_cast<std::size_t>(f.class_id)];
}

const LocMorphism& LocalizedCategory::identity(int a) const { return class_of(a, a, {a, a}); }

const LocMorphism& LocalizedCategory::image(Morphism f) const {
    if (!quiver_.contains(f)) throw DomainError("not a morphism of Q: " + to_string(f));
    return class_of(f.source, f.target, {f.source, f.source});
}

const LocMorphism& LocalizedCategory::class_of(int a, int b, Zigzag z) const {
    const auto& t = table(a, b);
    const auto it = std::lower_bound(t.zigzags.begin(), t.zigzags.end(), z);
    if (it == t.zigzags.end() || *it != z) {
        throw DomainError("not a valid zigzag: " + describe(a, b, z));
    }
    const auto pos = static_cast<std::size_t>(it - t.zigzags.begin());
    return t.classes[static_cast<std::size_t>(t.class_of_zigzag[pos])];
}

const LocMorphism& LocalizedCategory::compose(const LocMorphism& first,
                                              const LocMorphism& second) const {
    check_member(first);
    check_member(second);
    if (first.target != second.source) {
        throw CompositionError("cannot compose Hom(" + std::to_string(first.source) + "," +
                               std::to_string(first.target) + ") with Hom(" +
                               std::to_string(second.source) + "," +
                               std::to_string(second.target) + ")");
    }
    const auto& cell = composition_[triple_index(first.source, first.target, second.target)];
    const auto width = table(second.source, second.target).classes.size();
    const int id = cell[static_cast<std::size_t>(first.class_id) * width +
                        static_cast<std::size_t>(second.class_id)];
    return table(first.source, second.target).classes[static_cast<std::size_t>(id)];
}

bool LocalizedCategory::is_iso(const LocMorphism& f) const {
    check_member(f);
    return iso_[pair_index(f.source, f.target)][static_cast<std::size_t>(f.class_id)];
}

const LocMorphism* LocalizedCategory::find_iso(int a, int b) const {
    const auto fs = hom(a, b);
    for (const auto& f : fs) {
        if (is_iso(f)) return &f;
    }
    return nullptr;
}

std::size_t LocalizedCategory::max_hom_size() const {
    std::size_t m = 0;
    for (const auto& t : homs_) m = std::max(m, t.classes.size());
    return m;
}

// ---------------------------------------------------------------------------

std::vector<LocMorphism> hom_set(const LinearQuiver& q, const ClosedMorphismSet& wbar, int a,
                                 int b) {
    const LocalizedCategory lc(q, wbar);
    const auto fs = lc.hom(a, b);
    return {fs.begin(), fs.end()};
}

LocMorphism compose_loc(const LocalizedCategory& lc, const LocMorphism& first,
                        const LocMorphism& second) {
    if (first.target != second.source) {
        throw CompositionError("endpoint mismatch in localized composition");
    }
    const Zigzag r = compose_zigzags(lc.inverted(), first.source, first.target, second.target,
                                     first.representative, second.representative);
    return lc.class_of(first.source, second.target, r);
}

bool is_iso(const LocalizedCategory& lc, const LocMorphism& f) {
    for (const auto& g : lc.hom(f.target, f.source)) {
        if (compose_loc(lc, f, g) == lc.identity(f.source) &&
            compose_loc(lc, g, f) == lc.identity(f.target)) {
            return true;
        }
    }
    return false;
}

MorphismSet iso_image_set(const LinearQuiver& q, const ClosedMorphismSet& wbar) {
    const LocalizedCategory lc(q, wbar);
    MorphismSet out(q);
    for (int a = 0; a < q.size(); ++a) {
        for (int b = a; b < q.size(); ++b) {
            if (is_iso(lc, lc.image({a, b}))) out.insert({a, b});
        }
    }
    return out;
}

LocalizedCategory build_localized_category(const LinearQuiver& q, const ClosedMorphismSet& wbar) {
    return LocalizedCategory(q, wbar);
}

Localization localize(const LinearQuiver& q, const MorphismSet& w) {
    return {w, LocalizedCategory(q, closure_2of6(q, w))};
}

}  // namespace arbor
