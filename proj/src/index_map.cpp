#include "framelab/index_map.hpp"

#include "framelab/errors.hpp"
#include "framelab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace framelab {

IndexedSet IndexedSet::line(std::int64_t lo, std::int64_t hi) {
    IndexedSet I;
    I.spec = GroupSpec::integers(1);
    for (std::int64_t k = lo; k <= hi; ++k) I.locations.push_back(GroupElement::on_line(I.spec, k));
    I.support = Window::interval(lo, hi);
    return I;
}

void LocatedFamily::validate() const {
    if (vectors.size() != index.size())
        throw std::invalid_argument("LocatedFamily: vector count differs from index count");
}

IdList preimage_box(const IndexedSet& I, const GroupElement& j, std::int64_t N) {
    check_element(I.spec, j);
    IdList out;
    for (std::size_t i = 0; i < I.size(); ++i)
        if (in_box(I.spec, subtract(I.spec, I.locations[i], j), N)) out.push_back(i);
    return out;
}

std::size_t preimage_count(const IndexedSet& I, const GroupElement& j, std::int64_t N) {
    std::size_t n = 0;
    for (const auto& loc : I.locations)
        if (in_box(I.spec, subtract(I.spec, loc, j), N)) ++n;
    return n;
}

std::size_t preimage_size(const IndexedSet& I, std::span<const GroupElement> E) {
    std::set<GroupElement> targets(E.begin(), E.end());
    std::size_t n = 0;
    for (const auto& loc : I.locations)
        if (targets.count(loc)) ++n;
    return n;
}

std::size_t fiber_bound(const IndexedSet& I) {
    std::map<GroupElement, std::size_t> fibers;
    std::size_t K = 0;
    for (const auto& loc : I.locations) K = std::max(K, ++fibers[loc]);
    return K;
}

bool cell_valid(const IndexedSet& I, const GroupElement& center, std::int64_t N) {
    return !I.support || box_inside(I.spec, *I.support, center, N);
}

std::vector<GroupElement> valid_centers(const IndexedSet& I, std::int64_t N_max) {
    if (I.support) return interior_points(I.spec, *I.support, N_max);
    std::set<GroupElement> image(I.locations.begin(), I.locations.end());
    return {image.begin(), image.end()};
}

namespace {

double extreme_at_largest(const DensityProfile& p, const std::vector<double>& v) {
    for (std::size_t k = p.N_values.size(); k-- > 0;)
        if (!std::isnan(v[k])) return v[k];
    throw TruncationError("density profile has no valid cell");
}

}  // namespace

double DensityProfile::lower_estimate() const { return extreme_at_largest(*this, inf_ratio); }
double DensityProfile::upper_estimate() const { return extreme_at_largest(*this, sup_ratio); }

DensityProfile density_profile(const IndexedSet& I, std::span<const GroupElement> centers,
                               std::span<const std::int64_t> N_values) {
    if (centers.empty()) throw std::invalid_argument("density_profile: no centers");
    DensityProfile prof;
    prof.N_values.assign(N_values.begin(), N_values.end());
    if (!std::is_sorted(prof.N_values.begin(), prof.N_values.end()))
        throw std::invalid_argument("density_profile: N values must be increasing");

    const std::size_t nc = centers.size();
    prof.cells.resize(N_values.size() * nc);
    parallel_for(prof.cells.size(), [&](std::size_t k) {
        DensityCell& cell = prof.cells[k];
        cell.N = N_values[k / nc];
        cell.center = centers[k % nc];
        cell.valid = cell_valid(I, cell.center, cell.N);
        if (!cell.valid) return;
        cell.count = preimage_count(I, cell.center, cell.N);
        cell.ratio = static_cast<double>(cell.count) / static_cast<double>(box_cardinality(I.spec, cell.N));
    });

    const double nan = std::numeric_limits<double>::quiet_NaN();
    prof.inf_ratio.assign(N_values.size(), nan);
    prof.sup_ratio.assign(N_values.size(), nan);
    bool any = false;
    for (std::size_t k = 0; k < prof.cells.size(); ++k) {
        const auto& cell = prof.cells[k];
        if (!cell.valid) continue;
        any = true;
        const std::size_t n = k / nc;
        if (std::isnan(prof.inf_ratio[n]) || cell.ratio < prof.inf_ratio[n]) prof.inf_ratio[n] = cell.ratio;
        if (std::isnan(prof.sup_ratio[n]) || cell.ratio > prof.sup_ratio[n]) prof.sup_ratio[n] = cell.ratio;
    }
    if (!any) throw TruncationError("density_profile: no valid (N, center) cell; window too small");
    return prof;
}

FiberEmbedding embed_fibers(const IndexedSet& I, const VectorFamily& F) {
    if (F.size() != I.size()) throw std::invalid_argument("embed_fibers: family and index set differ in size");
    std::map<GroupElement, IdList> fibers;
    for (std::size_t i = 0; i < I.size(); ++i) fibers[I.locations[i]].push_back(i);

    FiberEmbedding out;
    out.K = fiber_bound(I);
    const std::size_t total = fibers.size() * out.K;
    out.family.vectors.columns = Matrix::Zero(F.columns.rows(), static_cast<Eigen::Index>(total));
    out.family.index.spec = I.spec;
    out.family.index.support = I.support;
    out.family.index.locations.reserve(total);
    std::size_t col = 0;
    for (const auto& [point, ids] : fibers) {
        for (std::size_t k = 0; k < out.K; ++k, ++col) {
            out.family.index.locations.push_back(point);
            out.slot.push_back(k);
            if (k < ids.size()) {
                out.family.vectors.columns.col(static_cast<Eigen::Index>(col)) =
                    F.columns.col(static_cast<Eigen::Index>(ids[k]));
                out.source.emplace_back(ids[k]);
            } else {
                out.source.emplace_back(std::nullopt);
            }
        }
    }
    return out;
}

}  // namespace framelab
