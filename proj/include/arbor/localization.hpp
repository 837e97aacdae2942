#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "arbor/closure.hpp"
#include "arbor/quiver.hpp"

namespace arbor {

/// The diagram a -> apex <- pivot -> b, i.e. g w^{-1} f with f = (a, apex),
/// w = (pivot, apex) in the inverted set and g = (pivot, b). Source and target
/// are implied by the hom set holding it.
struct Zigzag {
    int apex = 0;
    int pivot = 0;

    friend auto operator<=>(const Zigzag&, const Zigzag&) = default;
};

/// A morphism of the localized category: the equivalence class `class_id` of
/// zigzags in Hom(source, target). The representative is the lexicographically
/// least (apex, pivot) in the class.
struct LocMorphism {
    int source = 0;
    int target = 0;
    int class_id = 0;
    Zigzag representative;

    friend bool operator==(const LocMorphism& x, const LocMorphism& y) {
        return x.source == y.source && x.target == y.target && x.class_id == y.class_id;
    }
};

/// True iff (apex, pivot) is a zigzag from a to b whose backward arrow is in
/// the inverted set.
bool is_valid_zigzag(const ClosedMorphismSet& wbar, int a, int b, Zigzag z);

/// Raw composition of representatives: `first` in Hom(a,b) followed by
/// `second` in Hom(b,c). Picks the pivot-comparable case, then the
/// apex-comparable case, then the case where both comparisons fail and the
/// inverted arrow is (second.pivot, first.apex). Throws ModelViolation when
/// the first two cases disagree or the third lacks its inverted arrow.
Zigzag compose_zigzags(const ClosedMorphismSet& wbar, int a, int b, int c, Zigzag first,
                       Zigzag second);

/// Finite model of Q[W^{-1}] for a closed W: hom sets as zigzag classes and a
/// full composition table. Construction checks well-definedness on classes,
/// associativity and the unit laws exhaustively, throwing ModelViolation on
/// any failure.
class LocalizedCategory {
public:
    LocalizedCategory(const LinearQuiver& q, const ClosedMorphismSet& wbar);

    const LinearQuiver& quiver() const { return quiver_; }
    const ClosedMorphismSet& inverted() const { return wbar_; }
    int object_count() const { return quiver_.size(); }

    std::span<const LocMorphism> hom(int a, int b) const;
    std::size_t hom_size(int a, int b) const { return hom(a, b).size(); }
    /// Every zigzag in the class of `f`, sorted.
    const std::vector<Zigzag>& class_members(const LocMorphism& f) const;

    const LocMorphism& identity(int a) const;
    /// Image of a quiver morphism under Q -> Q[W^{-1}].
    const LocMorphism& image(Morphism f) const;
    /// Class of an arbitrary valid zigzag in Hom(a,b).
    const LocMorphism& class_of(int a, int b, Zigzag z) const;

    /// `first` (a -> b) followed by `second` (b -> c), read from the table.
    const LocMorphism& compose(const LocMorphism& first, const LocMorphism& second) const;

    bool is_iso(const LocMorphism& f) const;
    /// Some isomorphism a -> b, if any exists.
    const LocMorphism* find_iso(int a, int b) const;

    std::size_t max_hom_size() const;

private:
    struct HomTable {
        std::vector<Zigzag> zigzags;             // all valid zigzags, sorted
        std::vector<int> class_of_zigzag;        // parallel to `zigzags`
        std::vector<LocMorphism> classes;
        std::vector<std::vector<Zigzag>> members;  // per class, sorted
    };

    std::size_t pair_index(int a, int b) const {
        return static_cast<std::size_t>(a) * quiver_.size() + b;
    }
    std::size_t triple_index(int a, int b, int c) const {
        return (static_cast<std::size_t>(a) * quiver_.size() + b) * quiver_.size() + c;
    }
    const HomTable& table(int a, int b) const;
    void check_member(const LocMorphism& f) const;

    void build_hom_sets();
    void build_composition();
    void verify_laws() const;
    void compute_iso_flags();

    LinearQuiver quiver_;
    ClosedMorphismSet wbar_;
    std::vector<HomTable> homs_;
    // composition_[triple(a,b,c)][i * |Hom(b,c)| + j] = class id in Hom(a,c)
    std::vector<std::vector<int>> composition_;
    std::vector<std::vector<bool>> iso_;  // per pair, per class
};

/// Zigzag classes of Hom(a, b); empty when no zigzag exists.
std::vector<LocMorphism> hom_set(const LinearQuiver& q, const ClosedMorphismSet& wbar, int a,
                                 int b);

/// Composition by the case rule on representatives, then a class lookup.
LocMorphism compose_loc(const LocalizedCategory& lc, const LocMorphism& first,
                        const LocMorphism& second);

/// Searches Hom(b, a) for a two-sided inverse.
bool is_iso(const LocalizedCategory& lc, const LocMorphism& f);

/// Quiver morphisms whose image in Q[W^{-1}] is invertible, computed through
/// the inverse search (not read off the inverted set).
MorphismSet iso_image_set(const LinearQuiver& q, const ClosedMorphismSet& wbar);

LocalizedCategory build_localized_category(const LinearQuiver& q, const ClosedMorphismSet& wbar);

/// Closes an arbitrary W first; keeps W alongside the localized category.
struct Localization {
    MorphismSet input;
    LocalizedCategory category;
};
Localization localize(const LinearQuiver& q, const MorphismSet& w);

}  // namespace arbor
