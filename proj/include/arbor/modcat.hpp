#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arbor/closure.hpp"
#include "arbor/fp_matrix.hpp"
#include "arbor/localization.hpp"
#include "arbor/quiver.hpp"

namespace arbor {

/// Degree-0 module of the linear quiver over F_p: a vector space per object
/// (object 0 always zero-dimensional) and one matrix per generating arrow
/// i -> i+1, shaped dims[i+1] x dims[i].
struct Representation {
    int prime = 2;
    std::vector<int> dims;
    std::vector<FpMatrix> arrows;

    /// Ordered product of generator matrices along f; identity for f = 1_a.
    FpMatrix map(Morphism f) const;
    bool is_invertible(Morphism f) const { return map(f).is_invertible(); }
    /// Bitmask over canonical morphism indices of the invertible maps.
    std::uint64_t invertible_mask() const;
};

enum class OracleKind { Representations, Representable };
std::string to_string(OracleKind kind);

/// Morphisms sent to invertible maps by every module in a tested family.
struct ForcedIsoSet {
    MorphismSet forced;
    OracleKind kind = OracleKind::Representations;
    int prime = 2;
    int dmax = 0;                 // 0 for the representable family
    std::uint64_t family_size = 0;  // modules that passed the admissibility filter
};

/// Enumeration bound: candidate representations per run.
inline constexpr std::uint64_t kMaxRepresentations = 100'000'000;

/// Number of candidates (before the admissibility filter) with all dimensions
/// <= dmax. Saturates at UINT64_MAX.
std::uint64_t count_representations(const LinearQuiver& q, int prime, int dmax);

/// Visits every representation with dimensions <= dmax, rho(0) = 0, and
/// rho(w) invertible for all w in W. Dimension vectors are enumerated
/// lexicographically, matrix entries row-major lexicographically. The
/// visited object is reused between calls.
void enumerate_representations(const LinearQuiver& q, const MorphismSet& w, int prime, int dmax,
                               const std::function<void(const Representation&)>& visit);

ForcedIsoSet forced_iso_reps(const LinearQuiver& q, const MorphismSet& w, int prime, int dmax);

/// All representations up to `dmax`, reduced to their distinct invertibility
/// signatures so that forced sets for many W can be answered without
/// re-enumerating. Answers agree with forced_iso_reps.
class RepresentationFamily {
public:
    RepresentationFamily(const LinearQuiver& q, int prime, int dmax);

    ForcedIsoSet forced_isos(const MorphismSet& w) const;
    std::uint64_t size() const { return total_; }
    std::size_t distinct_signatures() const { return signatures_.size(); }

private:
    struct Signature {
        std::uint64_t invertible;
        std::uint64_t count;
    };
    LinearQuiver quiver_;
    int prime_;
    int dmax_;
    std::uint64_t total_ = 0;
    std::vector<Signature> signatures_;
};

/// The module a -> F_p[Hom(v, a)] of the localized category, acting by
/// post-composition. When classes in Hom(v, a) factor through object 0 they
/// span a submodule; `reduced` records that it was quotiented out so that
/// the module vanishes at 0.
struct RepresentableModule {
    int vertex = 0;
    bool reduced = false;
    Representation rep;
};

std::vector<RepresentableModule> representable_modules(const LocalizedCategory& lc,
                                                       int prime = 2);

ForcedIsoSet forced_iso_representable(const LinearQuiver& q, const ClosedMorphismSet& wbar);

/// Isomorphism classes of objects of the localized category.
struct SkeletonReport {
    std::vector<std::vector<int>> classes;            // sorted, by least member
    std::vector<std::vector<std::size_t>> hom_sizes;  // between class minima
    bool vanishing = false;
};

/// Groups objects by mutual isomorphism. The vanishing flag is computed both
/// as "everything is isomorphic to 0" and as "the inverted set is everything";
/// a mismatch throws ModelViolation.
SkeletonReport skeleton(const LocalizedCategory& lc);

}  // namespace arbor
