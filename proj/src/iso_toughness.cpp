#include "isofactor/iso_toughness.hpp"

#include <bit>
#include <string>

#include "isofactor/errors.hpp"

namespace isofactor {

namespace {

// Running maximizer of m*iso - n*|S| with the deterministic tie-break.
class DeficiencyTracker {
public:
    explicit DeficiencyTracker(const FamilyParams& params) : n_(params.n()), m_(params.m()) {}

    void offer(std::uint64_t s_mask, int iso) {
        const int size = std::popcount(s_mask);
        const std::int64_t score = m_ * iso - n_ * size;
        if (!seen_ || score > best_score_ || (score == best_score_ && better_set(s_mask, size))) {
            seen_ = true;
            best_score_ = score;
            best_mask_ = s_mask;
            best_size_ = size;
        }
    }

    ConditionVerdict verdict() const {
        ConditionVerdict out;
        out.worst_deficiency = Rational(best_score_, m_);
        out.holds = best_score_ <= 0;
        if (!out.holds) out.witness = mask_to_set(best_mask_);
        return out;
    }

private:
    bool better_set(std::uint64_t mask, int size) const {
        if (size != best_size_) return size < best_size_;
        return lex_less_equal_size(mask, best_mask_);
    }

    std::int64_t n_;
    std::int64_t m_;
    bool seen_ = false;
    std::int64_t best_score_ = 0;
    std::uint64_t best_mask_ = 0;
    int best_size_ = 0;
};

void require_cap(const Graph& g, int cap, const char* what) {
    if (cap > 63) cap = 63;
    if (g.vertex_count() > cap)
        throw CapacityError(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                            " vertices, cap is " + std::to_string(cap));
}

void scan_exhaustive(const Graph& g, DeficiencyTracker& tracker) {
    const std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t s = 0; s < limit; ++s) tracker.offer(s, iso_count(g, s));
}

// Enumerates independent sets I by branching on vertices in index order and
// offers S = N(I) for each.
void scan_independent(const Graph& g, Vertex next, std::uint64_t allowed, std::uint64_t neighbourhood,
                      DeficiencyTracker& tracker) {
    if (next == g.vertex_count()) {
        tracker.offer(neighbourhood, iso_count(g, neighbourhood));
        return;
    }
    scan_independent(g, next + 1, allowed, neighbourhood, tracker);
    const std::uint64_t bit = std::uint64_t{1} << next;
    if (allowed & bit) {
        scan_independent(g, next + 1, allowed & ~g.neighbor_mask(next) & ~bit, neighbourhood | g.neighbor_mask(next),
                         tracker);
    }
}

}  // namespace

bool lex_less_equal_size(std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & (~diff + 1))) != 0;
}

ConditionVerdict check_condition(const Graph& g, const FamilyParams& params, const CheckOptions& options) {
    DeficiencyTracker tracker(params);
    if (options.mode == CheckMode::exhaustive) {
        require_cap(g, options.max_vertices.value_or(kDefaultExhaustiveVertexCap), "exhaustive condition check");
        scan_exhaustive(g, tracker);
    } else {
        require_cap(g, options.max_vertices.value_or(kDefaultReducedVertexCap), "reduced condition check");
        const std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
        scan_independent(g, 0, all, 0, tracker);
    }
    return tracker.verdict();
}

bool satisfies_condition(const Graph& g, const FamilyParams& params) { return check_condition(g, params).holds; }

Toughness isolated_toughness(const Graph& g, int max_vertices) {
    require_cap(g, max_vertices, "isolated toughness");
    Toughness best;
    const std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t s = 0; s < limit; ++s) {
        const int iso = iso_count(g, s);
        if (iso < 2) continue;
        Rational ratio(std::popcount(s), iso);
        if (best.infinite || ratio < best.value) {
            best.infinite = false;
            best.value = ratio;
        }
    }
    return best;
}

}  // namespace isofactor
