#include "dimer/counting.hpp"

#include "dimer/errors.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dimer {

namespace {

// For each site of a row-major box, the bitmask of neighbors with a larger
// index. Every edge appears exactly once, on its smaller endpoint.
std::vector<std::uint64_t> box_neighbors(const std::vector<int>& sides, bool periodic) {
    const int axes = static_cast<int>(sides.size());
    std::int64_t volume = 1;
    for (int side : sides) volume *= side;

    std::vector<std::int64_t> stride(axes, 1);
    for (int i = axes - 2; i >= 0; --i) stride[i] = stride[i + 1] * sides[i + 1];

    std::vector<std::uint64_t> higher(static_cast<std::size_t>(volume), 0);
    auto add_edge = [&](std::int64_t u, std::int64_t v) {
        if (u > v) std::swap(u, v);
        higher[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    };
    for (std::int64_t site = 0; site < volume; ++site) {
        std::int64_t rem = site;
        for (int i = 0; i < axes; ++i) {
            const std::int64_t coord = rem / stride[i];
            rem %= stride[i];
            if (coord + 1 < sides[i]) add_edge(site, site + stride[i]);
            // Wrap edges exist only for sides >= 3; shorter sides would
            // duplicate an edge or loop onto the site itself.
            if (periodic && sides[i] >= 3 && coord == sides[i] - 1)
                add_edge(site, site - (sides[i] - 1) * stride[i]);
        }
    }
    return higher;
}

struct CrossSection {
    int num_sites = 0;
    std::uint32_t full_mask = 0;
    std::vector<std::uint32_t> higher_neighbors;
};

CrossSection build_cross_section(const LatticeSpec& spec) {
    std::vector<int> axes(spec.sides.begin(), spec.sides.end() - 1);
    CrossSection cs;
    std::int64_t area = 1;
    for (int side : axes) area *= side;
    cs.num_sites = static_cast<int>(area);
    cs.full_mask = static_cast<std::uint32_t>((std::uint64_t{1} << area) - 1);
    for (std::uint64_t mask : box_neighbors(axes, spec.boundary == Boundary::periodic))
        cs.higher_neighbors.push_back(static_cast<std::uint32_t>(mask));
    return cs;
}

// Enumerate every covering of one layer. Sites in `incoming` are already
// covered by protrusions from the previous layer; each remaining site either
// pairs with a free in-layer neighbor or (when allowed) protrudes into the
// next layer. Calls visit(outgoing) once per covering.
template <typename Visit>
void for_each_covering(const CrossSection& cs, std::uint32_t incoming, bool allow_protrusion,
                       Visit&& visit) {
    auto rec = [&](auto&& self, std::uint32_t covered, std::uint32_t outgoing) -> void {
        const std::uint32_t open = cs.full_mask & ~covered;
        if (!open) {
            visit(outgoing);
            return;
        }
        const int site = std::countr_zero(open);
        const std::uint32_t bit = std::uint32_t{1} << site;
        if (allow_protrusion) self(self, covered | bit, outgoing | bit);
        std::uint32_t partners = cs.higher_neighbors[site] & ~covered;
        while (partners) {
            const std::uint32_t pbit = partners & (0u - partners);
            partners &= partners - 1;
            self(self, covered | bit | pbit, outgoing);
        }
    };
    rec(rec, incoming, 0);
}

// Final layer of a periodic sweep: the set of protruding sites must equal
// `seam` exactly, closing the wrap-around dimers opened at layer 0.
template <typename Visit>
void for_each_covering_closing(const CrossSection& cs, std::uint32_t incoming, std::uint32_t seam,
                               Visit&& visit) {
    if (incoming & seam) return;  // a seam site is already covered: impossible
    auto rec = [&](auto&& self, std::uint32_t covered) -> void {
        const std::uint32_t open = cs.full_mask & ~covered;
        if (!open) {
            visit();
            return;
        }
        const int site = std::countr_zero(open);
        const std::uint32_t bit = std::uint32_t{1} << site;
        if (seam & bit) {  // must protrude across the seam
            self(self, covered | bit);
            return;
        }
        std::uint32_t partners = cs.higher_neighbors[site] & ~covered & ~seam;
        while (partners) {
            const std::uint32_t pbit = partners & (0u - partners);
            partners &= partners - 1;
            self(self, covered | bit | pbit);
        }
    };
    rec(rec, incoming);
}

class DenseStore {
  public:
    explicit DenseStore(int bits) : slots_(std::size_t{1} << bits) {}
    void reset() {
        for (auto& s : slots_)
            if (s != 0) s = 0;
    }
    void seed(std::uint32_t state) { slots_[state] = 1; }
    void add(std::uint32_t state, const BigInt& weight) { slots_[state] += weight; }
    template <typename F>
    void for_each(F&& f) const {
        for (std::uint32_t state = 0; state < slots_.size(); ++state)
            if (slots_[state] != 0) f(state, slots_[state]);
    }
    BigInt at(std::uint32_t state) const { return slots_[state]; }
    void swap(DenseStore& other) { slots_.swap(other.slots_); }

  private:
    std::vector<BigInt> slots_;
};

class SparseStore {
  public:
    explicit SparseStore(int) {}
    void reset() { slots_.clear(); }
    void seed(std::uint32_t state) { slots_[state] = 1; }
    void add(std::uint32_t state, const BigInt& weight) { slots_[state] += weight; }
    template <typename F>
    void for_each(F&& f) const {
        for (const auto& [state, weight] : slots_)
            if (weight != 0) f(state, weight);
    }
    BigInt at(std::uint32_t state) const {
        const auto it = slots_.find(state);
        return it == slots_.end() ? BigInt(0) : it->second;
    }
    void swap(SparseStore& other) { slots_.swap(other.slots_); }

  private:
    std::unordered_map<std::uint32_t, BigInt> slots_;
};

template <typename Store>
MatchCount sweep_free(const CrossSection& cs, int layers, Store& dp, Store& scratch) {
    dp.seed(0);
    for (int layer = 0; layer < layers; ++layer) {
        const bool last = layer + 1 == layers;
        scratch.reset();
        dp.for_each([&](std::uint32_t in, const BigInt& weight) {
            for_each_covering(cs, in, !last,
                              [&](std::uint32_t out) { scratch.add(out, weight); });
        });
        dp.swap(scratch);
    }
    return dp.at(0);
}

template <typename Store>
MatchCount sweep_periodic(const CrossSection& cs, int layers, Store& dp, Store& scratch) {
    MatchCount total = 0;
    for (std::uint32_t seam = 0;; ++seam) {
        dp.reset();
        dp.seed(seam);
        for (int layer = 0; layer + 1 < layers; ++layer) {
            scratch.reset();
            dp.for_each([&](std::uint32_t in, const BigInt& weight) {
                for_each_covering(cs, in, true,
                                  [&](std::uint32_t out) { scratch.add(out, weight); });
            });
            dp.swap(scratch);
        }
        dp.for_each([&](std::uint32_t in, const BigInt& weight) {
            for_each_covering_closing(cs, in, seam, [&] { total += weight; });
        });
        if (seam == cs.full_mask) break;
    }
    return total;
}

}  // namespace

MatchCount brute_force_count(const LatticeSpec& spec) {
    validate(spec);
    const std::int64_t volume = spec.volume();
    if (volume > kBruteForceMaxSites)
        throw std::invalid_argument("brute force handles at most " +
                                    std::to_string(kBruteForceMaxSites) + " sites, got V=" +
                                    std::to_string(volume) + "; use transfer_matrix_count");

    const std::vector<std::uint64_t> higher =
        box_neighbors(spec.sides, spec.boundary == Boundary::periodic);
    const std::uint64_t full =
        volume == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << volume) - 1;

    MatchCount count = 0;
    auto rec = [&](auto&& self, std::uint64_t covered) -> void {
        const std::uint64_t open = full & ~covered;
        if (!open) {
            ++count;
            return;
        }
        const int site = std::countr_zero(open);
        const std::uint64_t bit = std::uint64_t{1} << site;
        std::uint64_t partners = higher[static_cast<std::size_t>(site)] & ~covered;
        while (partners) {
            const std::uint64_t pbit = partners & (0ull - partners);
            partners &= partners - 1;
            self(self, covered | bit | pbit);
        }
    };
    rec(rec, 0);
    return count;
}

MatchCount transfer_matrix_count(const LatticeSpec& spec, int state_budget_bits) {
    validate(spec);
    if (state_budget_bits < 1 || state_budget_bits > 30)
        throw std::invalid_argument("state budget must be between 1 and 30 bits");

    const CrossSection cs = build_cross_section(spec);
    if (cs.num_sites > state_budget_bits)
        throw BudgetError("cross-section of " + dims_string(spec) + " needs " +
                          std::to_string(cs.num_sites) + "-bit frontier states, over the " +
                          std::to_string(state_budget_bits) +
                          "-bit budget; put the longest side last or raise the budget");

    const int layers = spec.sides.back();
    const bool periodic = spec.boundary == Boundary::periodic;
    // Dense tables up to 2^20 states; sparse maps beyond that.
    if (cs.num_sites <= 20) {
        DenseStore dp(cs.num_sites), scratch(cs.num_sites);
        return periodic ? sweep_periodic(cs, layers, dp, scratch)
                        : sweep_free(cs, layers, dp, scratch);
    }
    SparseStore dp(cs.num_sites), scratch(cs.num_sites);
    return periodic ? sweep_periodic(cs, layers, dp, scratch)
                    : sweep_free(cs, layers, dp, scratch);
}

}  // namespace dimer
