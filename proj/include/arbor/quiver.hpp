#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arbor {

/// A morphism of the linear quiver: the unique arrow source -> target.
struct Morphism {
    int source = 0;
    int target = 0;

    bool is_identity() const { return source == target; }
    friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

/// The linear quiver A_{n+2}: objects 0..n+1 totally ordered, viewed as a thin
/// category. Object 0 is the appended initial object, object 1 the root of
/// the tree A_{n+1}.
///
/// Morphisms carry a fixed canonical index, row-major over the upper
/// triangle: (0,0),(0,1),...,(0,s-1),(1,1),... Every set encoding and every
/// text/JSON payload uses this order.
class LinearQuiver {
public:
    static constexpr int kMaxSize = 64;

    explicit LinearQuiver(int size);

    int size() const { return size_; }
    int ambient_n() const { return size_ - 2; }
    std::size_t morphism_count() const {
        return static_cast<std::size_t>(size_) * (size_ + 1) / 2;
    }
    std::size_t non_identity_count() const {
        return static_cast<std::size_t>(size_) * (size_ - 1) / 2;
    }

    bool has_object(int v) const { return v >= 0 && v < size_; }
    bool contains(Morphism f) const {
        return has_object(f.source) && has_object(f.target) && f.source <= f.target;
    }

    std::size_t index_of(Morphism f) const;
    Morphism morphism_at(std::size_t index) const;

    // Index among non-identity morphisms only, same row-major order.
    std::size_t non_identity_index(Morphism f) const;
    Morphism non_identity_at(std::size_t index) const;

    /// `first` followed by `second`. Throws CompositionError on mismatched
    /// endpoints.
    Morphism compose(Morphism first, Morphism second) const;

    friend bool operator==(const LinearQuiver&, const LinearQuiver&) = default;

private:
    int size_;
};

/// Quiver for ambient parameter n >= 1: n+2 objects.
LinearQuiver make_quiver(int n);

Morphism compose(const LinearQuiver& q, Morphism first, Morphism second);

/// Subset of Mor(Q), stored as a bitset over canonical indices.
class MorphismSet {
public:
    explicit MorphismSet(const LinearQuiver& q);
    MorphismSet(const LinearQuiver& q, const std::vector<Morphism>& members);

    static MorphismSet identities(const LinearQuiver& q);
    /// Builds a set from a bitmask over non-identity indices (quivers with at
    /// most 64 non-identity morphisms).
    static MorphismSet from_non_identity_mask(const LinearQuiver& q, std::uint64_t mask);

    const LinearQuiver& quiver() const { return quiver_; }

    bool contains(Morphism f) const;
    void insert(Morphism f);
    void erase(Morphism f);

    std::size_t count() const;
    bool empty() const { return count() == 0; }
    bool has_identity_member() const;
    bool contains_all_identities() const;

    bool is_subset_of(const MorphismSet& other) const;
    MorphismSet operator|(const MorphismSet& other) const;
    MorphismSet operator&(const MorphismSet& other) const;
    MorphismSet without_identities() const;

    std::uint64_t non_identity_mask() const;

    /// Members in canonical order.
    std::vector<Morphism> members() const;

    friend bool operator==(const MorphismSet&, const MorphismSet&) = default;

private:
    void check(Morphism f) const;
    void require_same_quiver(const MorphismSet& other) const;

    LinearQuiver quiver_;
    std::vector<std::uint64_t> words_;
};

MorphismSet all_morphisms(const LinearQuiver& q, bool include_identities);

std::string to_string(Morphism f);
/// Sorted, comma-separated "a->b" list; the empty set encodes as "".
std::string to_string(const MorphismSet& set);

/// Parses "a->b", whitespace-insensitive.
Morphism parse_morphism(std::string_view text);
/// Parses a comma-separated morphism list; each member must lie in `q`.
MorphismSet parse_morphism_set(const LinearQuiver& q, std::string_view text);

}  // namespace arbor
