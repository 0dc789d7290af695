#pragma once

// Index families I with a map a: I -> G. Ids are the positions 0..|I|-1; the
// map may repeat points, and repetitions count towards every density.

#include "framelab/frame_core.hpp"
#include "framelab/group.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace framelab {

using IdList = std::vector<std::size_t>;

struct IndexedSet {
    GroupSpec spec;
    std::vector<GroupElement> locations;   // a(i) for id i
    std::optional<Window> support;         // truncation region, if any

    std::size_t size() const { return locations.size(); }

    /// Identity map on the window [lo, hi] of a Z (ids ordered by location).
    static IndexedSet line(std::int64_t lo, std::int64_t hi);
};

/// Vectors together with their index map; the common currency of the
/// analysis modules.
struct LocatedFamily {
    VectorFamily vectors;
    IndexedSet index;

    /// Throws std::invalid_argument if the vector count and id count differ.
    void validate() const;
};

/// I_N(j) = a^{-1}(S_N(j)), in id order.
IdList preimage_box(const IndexedSet& I, const GroupElement& j, std::int64_t N);
std::size_t preimage_count(const IndexedSet& I, const GroupElement& j, std::int64_t N);

/// |a^{-1}(E)| for a finite set E (duplicates in E are ignored).
std::size_t preimage_size(const IndexedSet& I, std::span<const GroupElement> E);

/// K = max fiber size |a^{-1}(n)|.
std::size_t fiber_bound(const IndexedSet& I);

/// The cell (N, center) is valid when I has no support window or S_N(center)
/// lies inside it.
bool cell_valid(const IndexedSet& I, const GroupElement& center, std::int64_t N);

/// Centers whose box of size N_max is valid; all points of the image of a
/// when I has no support window.
std::vector<GroupElement> valid_centers(const IndexedSet& I, std::int64_t N_max);

struct DensityCell {
    std::int64_t N = 0;
    GroupElement center;
    std::size_t count = 0;
    double ratio = 0.0;
    bool valid = false;
};

struct DensityProfile {
    std::vector<std::int64_t> N_values;
    std::vector<double> inf_ratio;  // NaN when no valid cell at that N
    std::vector<double> sup_ratio;
    std::vector<DensityCell> cells;  // N-major, then centers in input order

    /// inf / sup ratio at the largest N with a valid cell. Any ultrafilter
    /// density D(p, c) of the underlying infinite family lies between the
    /// inf and sup envelopes.
    double lower_estimate() const;
    double upper_estimate() const;
};

/// Ratios |I_N(c)| / |S_N(c)| for every (N, c). Throws TruncationError when no
/// cell is valid.
DensityProfile density_profile(const IndexedSet& I, std::span<const GroupElement> centers,
                               std::span<const std::int64_t> N_values);

/// Fiber-splitting embedding into G x Z_K: every point n of a(I) carries K
/// slots; the first |a^{-1}(n)| hold the original vectors (in id order) and the
/// rest are zero vectors.
struct FiberEmbedding {
    std::size_t K = 0;
    LocatedFamily family;                          // a'(n, k) = n
    std::vector<std::size_t> slot;                 // k in Z_K for every new id
    std::vector<std::optional<std::size_t>> source;  // original id, empty for padding
};

FiberEmbedding embed_fibers(const IndexedSet& I, const VectorFamily& F);

}  // namespace framelab
