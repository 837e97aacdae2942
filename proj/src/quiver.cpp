#include "arbor/quiver.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "arbor/error.hpp"

namespace arbor {

LinearQuiver::LinearQuiver(int size) : size_(size) {
    if (size < 2) {
        throw DomainError("linear quiver needs at least 2 objects, got " + std::to_string(size));
    }
    if (size > kMaxSize) {
        throw CapacityError("linear quiver size " + std::to_string(size) + " exceeds " +
                            std::to_string(kMaxSize));
    }
}

std::size_t LinearQuiver::index_of(Morphism f) const {
    if (!contains(f)) {
        throw DomainError("morphism " + to_string(f) + " is not in the quiver with " +
                          std::to_string(size_) + " objects");
    }
    const auto a = static_cast<std::size_t>(f.source);
    const auto b = static_cast<std::size_t>(f.target);
    const auto s = static_cast<std::size_t>(size_);
    return a * s - a * (a - (a > 0 ? 1 : 0)) / 2 + (b - a);
}

Morphism LinearQuiver::morphism_at(std::size_t index) const {
    std::size_t row_start = 0;
    for (int a = 0; a < size_; ++a) {
        const auto row_len = static_cast<std::size_t>(size_ - a);
        if (index < row_start + row_len) {
            return {a, a + static_cast<int>(index - row_start)};
        }
        row_start += row_len;
    }
    throw DomainError("morphism index " + std::to_string(index) + " out of range");
}

std::size_t LinearQuiver::non_identity_index(Morphism f) const {
    if (!contains(f) || f.is_identity()) {
        throw DomainError("not a non-identity morphism of the quiver: " + to_string(f));
    }
    const auto a = static_cast<std::size_t>(f.source);
    const auto b = static_cast<std::size_t>(f.target);
    const auto s = static_cast<std::size_t>(size_);
    return a * (s - 1) - a * (a - (a > 0 ? 1 : 0)) / 2 + (b - a - 1);
}

Morphism LinearQuiver::non_identity_at(std::size_t index) const {
    std::size_t row_start = 0;
    for (int a = 0; a + 1 < size_; ++a) {
        const auto row_len = static_cast<std::size_t>(size_ - a - 1);
        if (index < row_start + row_len) {
            return {a, a + 1 + static_cast<int>(index - row_start)};
        }
        row_start += row_len;
    }
    throw DomainError("non-identity index " + std::to_string(index) + " out of range");
}

Morphism LinearQuiver::compose(Morphism first, Morphism second) const {
    if (!contains(first) || !contains(second)) {
        throw DomainError("cannot compose morphisms outside the quiver: " + to_string(first) +
                          ", " + to_string(second));
    }
    if (first.target != second.source) {
        throw CompositionError("cannot compose " + to_string(first) + " then " +
                               to_string(second) + ": endpoints do not match");
    }
    return {first.source, second.target};
}

LinearQuiver make_quiver(int n) {
    if (n < 1) {
        throw DomainError("ambient parameter n must be >= 1, got " + std::to_string(n));
    }
    return LinearQuiver(n + 2);
}

Morphism compose(const LinearQuiver& q, Morphism first, Morphism second) {
    return q.compose(first, second);
}

// ---------------------------------------------------------------------------

MorphismSet::MorphismSet(const LinearQuiver& q)
    : quiver_(q), words_((q.morphism_count() + 63) / 64, 0) {}

MorphismSet::MorphismSet(const LinearQuiver& q, const std::vector<Morphism>& members)
    : MorphismSet(q) {
    for (const auto& f : members) insert(f);
}

MorphismSet MorphismSet::identities(const LinearQuiver& q) {
    MorphismSet s(q);
    for (int v = 0; v < q.size(); ++v) s.insert({v, v});
    return s;
}

MorphismSet MorphismSet::from_non_identity_mask(const LinearQuiver& q, std::uint64_t mask) {
    if (q.non_identity_count() > 64) {
        throw CapacityError("bitmask encoding needs at most 64 non-identity morphisms");
    }
    if (q.non_identity_count() < 64 && (mask >> q.non_identity_count()) != 0) {
        throw DomainError("bitmask has bits beyond the quiver's morphisms");
    }
    MorphismSet s(q);
    while (mask != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(mask));
        s.insert(q.non_identity_at(bit));
        mask &= mask - 1;
    }
    return s;
}

void MorphismSet::check(Morphism f) const {
    if (!quiver_.contains(f)) {
        throw DomainError("morphism " + to_string(f) + " is not in the quiver with " +
                          std::to_string(quiver_.size()) + " objects");
    }
}

void MorphismSet::require_same_quiver(const MorphismSet& other) const {
    if (quiver_ != other.quiver_) {
        throw DomainError("morphism sets belong to different quivers");
    }
}

bool MorphismSet::contains(Morphism f) const {
    if (!quiver_.contains(f)) return false;
    const auto i = quiver_.index_of(f);
    return (words_[i / 64] >> (i % 64)) & 1U;
}

void MorphismSet::insert(Morphism f) {
    check(f);
    const auto i = quiver_.index_of(f);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void MorphismSet::erase(Morphism f) {
    check(f);
    const auto i = quiver_.index_of(f);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t MorphismSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool MorphismSet::has_identity_member() const {
    for (int v = 0; v < quiver_.size(); ++v) {
        if (contains({v, v})) return true;
    }
    return false;
}

bool MorphismSet::contains_all_identities() const {
    for (int v = 0; v < quiver_.size(); ++v) {
        if (!contains({v, v})) return false;
    }
    return true;
}

bool MorphismSet::is_subset_of(const MorphismSet& other) const {
    require_same_quiver(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

MorphismSet MorphismSet::operator|(const MorphismSet& other) const {
    require_same_quiver(other);
    MorphismSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
    return r;
}

MorphismSet MorphismSet::operator&(const MorphismSet& other) const {
    require_same_quiver(other);
    MorphismSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
    return r;
}

MorphismSet MorphismSet::without_identities() const {
    MorphismSet r = *this;
    for (int v = 0; v < quiver_.size(); ++v) r.erase({v, v});
    return r;
}

std::uint64_t MorphismSet::non_identity_mask() const {
    if (quiver_.non_identity_count() > 64) {
        throw CapacityError("bitmask encoding needs at most 64 non-identity morphisms");
    }
    std::uint64_t mask = 0;
    for (const auto& f : members()) {
        if (!f.is_identity()) mask |= std::uint64_t{1} << quiver_.non_identity_index(f);
    }
    return mask;
}

std::vector<Morphism> MorphismSet::members() const {
    std::vector<Morphism> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits != 0) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
            out.push_back(quiver_.morphism_at(w * 64 + bit));
            bits &= bits - 1;
        }
    }
    return out;
}

MorphismSet all_morphisms(const LinearQuiver& q, bool include_identities) {
    MorphismSet s(q);
    for (int a = 0; a < q.size(); ++a) {
        for (int b = include_identities ? a : a + 1; b < q.size(); ++b) s.insert({a, b});
    }
    return s;
}

// ---------------------------------------------------------------------------

std::string to_string(Morphism f) {
    return std::to_string(f.source) + "->" + std::to_string(f.target);
}

std::string to_string(const MorphismSet& set) {
    std::string out;
    for (const auto& f : set.members()) {
        if (!out.empty()) out += ',';
        out += to_string(f);
    }
    return out;
}

namespace {

std::string strip_spaces(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    return s;
}

int parse_object(std::string_view token, std::string_view whole) {
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last || value < 0) {
        throw DomainError("malformed morphism '" + std::string(whole) +
                          "': expected non-negative integers in the form a->b");
    }
    return value;
}

}  // namespace

Morphism parse_morphism(std::string_view text) {
    const std::string s = strip_spaces(text);
    const auto arrow = s.find("->");
    if (arrow == std::string::npos) {
        throw DomainError("malformed morphism '" + std::string(text) + "': missing '->'");
    }
    const std::string_view view(s);
    return {parse_object(view.substr(0, arrow), text), parse_object(view.substr(arrow + 2), text)};
}

MorphismSet parse_morphism_set(const LinearQuiver& q, std::string_view text) {
    MorphismSet set(q);
    const std::string s = strip_spaces(text);
    if (s.empty()) return set;
    std::stringstream ss(s);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw DomainError("empty entry in morphism list '" + s + "'");
        const Morphism f = parse_morphism(token);
        if (!q.contains(f)) {
            throw DomainError("morphism " + to_string(f) + " is not in Q (objects 0.." +
                              std::to_string(q.size() - 1) + ", source <= target)");
        }
        set.insert(f);
    }
    if (s.back() == ',') throw DomainError("trailing comma in morphism list '" + s + "'");
    return set;
}

}  // namespace arbor
