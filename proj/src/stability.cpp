#include "tsq/stability.hpp"

#include "tsq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tsq {

namespace {

constexpr int kMaxMaskVertices = 62;

std::vector<int> supportVertices(const ToricQuiver& q, const ArrowSubset& arrows) {
    std::set<int> used;
    for (int j : arrows) {
        used.insert(q.arrow(j).tail);
        used.insert(q.arrow(j).head);
    }
    return {used.begin(), used.end()};
}

/// Core scan: walks every nonempty proper subset of `domain` closed under the
/// given arrows and records the first one with theta-sum <= 0 and the first
/// with sum < 0. The subquiver's own vertex set is the quantification domain;
/// a set violating semistability also witnesses the stability failure.
StabilityVerdict scanClosedSets(const std::vector<Arrow>& arrows, const std::vector<int>& domain,
                                const Weight& theta) {
    const int k = static_cast<int>(domain.size());
    if (k > kMaxMaskVertices)
        throw Error(ErrorKind::TooManyVertices,
                    "stability checks enumerate vertex subsets; domain exceeds " +
                        std::to_string(kMaxMaskVertices) + " vertices");
    std::vector<int> position(theta.size(), -1);
    for (int i = 0; i < k; ++i) position[domain[i]] = i;

    StabilityVerdict verdict;
    std::optional<std::uint64_t> nonPositive, negative;
    const std::uint64_t full = (k == 0) ? 0 : ((1ull << k) - 1);
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        bool closed = true;
        for (const Arrow& a : arrows) {
            if ((mask >> position[a.tail] & 1u) && !(mask >> position[a.head] & 1u)) {
                closed = false;
                break;
            }
        }
        if (!closed) continue;
        long long sum = 0;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1u) sum += theta[domain[i]];
        if (sum <= 0 && !nonPositive) nonPositive = mask;
        if (sum < 0 && !negative) {
            negative = mask;
            break; // nothing further can change either verdict
        }
    }
    verdict.stable = !nonPositive.has_value();
    verdict.semistable = !negative.has_value();
    std::uint64_t witnessMask = negative ? *negative : nonPositive.value_or(0);
    if (witnessMask != 0) {
        std::vector<int> witness;
        for (int i = 0; i < k; ++i)
            if (witnessMask >> i & 1u) witness.push_back(domain[i]);
        verdict.witness = std::move(witness);
    }
    return verdict;
}

std::vector<Arrow> arrowsOf(const ToricQuiver& q, const ArrowSubset& subset) {
    std::vector<Arrow> arrows;
    arrows.reserve(subset.size());
    for (int j : subset) arrows.push_back(q.arrow(j));
    return arrows;
}

StabilityVerdict checkOnSupport(const ArrowSubset& arrows, const ToricQuiver& q,
                                const Weight& theta) {
    return scanClosedSets(arrowsOf(q, arrows), supportVertices(q, arrows), theta);
}

/// Tightness quantifies over all of Q0 (the deletion subquiver keeps the full
/// vertex set), unlike the support-restricted subquiver checks.
bool deletionStable(const ToricQuiver& q, const Weight& theta, int droppedArrow) {
    ArrowSubset rest;
    for (int j = 0; j < q.arrowCount(); ++j)
        if (j != droppedArrow) rest.push_back(j);
    std::vector<int> domain(q.vertexCount());
    std::iota(domain.begin(), domain.end(), 0);
    return scanClosedSets(arrowsOf(q, rest), domain, theta).stable;
}

ArrowSubset maskToSubset(std::uint64_t mask, int m) {
    ArrowSubset out;
    for (int j = 0; j < m; ++j)
        if (mask >> j & 1u) out.push_back(j);
    return out;
}

/// Shared engine for the two maximal-subquiver searches. Support-restricted
/// instability is not monotone under arrow removal, so maximality is decided
/// against all supersets, not just the one-arrow extensions.
MaximalSubquivers maximalFailingSubquivers(const ToricQuiver& q, const Weight& theta,
                                           bool semistableVariant) {
    validateWeight(q, theta);
    const int m = q.arrowCount();
    if (m > 20)
        throw Error(ErrorKind::TooLarge, "maximal subquiver search enumerates 2^|Q1| subsets");

    const std::uint64_t count = 1ull << m;
    std::vector<char> bad(count, 0);
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        StabilityVerdict v = checkOnSupport(maskToSubset(mask, m), q, theta);
        bad[mask] = semistableVariant ? !v.semistable : !v.stable;
    }
    // existsBadSuperset via the usual superset OR; strict supersets only
    std::vector<char> badAbove(count, 0);
    for (std::uint64_t mask = count - 1;; --mask) {
        for (int j = 0; j < m; ++j) {
            if (mask >> j & 1u) continue;
            std::uint64_t up = mask | (1ull << j);
            if (bad[up] || badAbove[up]) {
                badAbove[mask] = 1;
                break;
            }
        }
        if (mask == 0) break;
    }

    MaximalSubquivers result;
    std::vector<bool> covered(q.vertexCount(), false);
    for (std::uint64_t mask = 1; mask < count; ++mask) {
        if (!bad[mask] || badAbove[mask]) continue;
        for (int j = 0; j < m; ++j)
            if (mask >> j & 1u) {
                covered[q.arrow(j).tail] = true;
                covered[q.arrow(j).head] = true;
            }
        result.nonSingletons.push_back(maskToSubset(mask, m));
    }
    std::sort(result.nonSingletons.begin(), result.nonSingletons.end());
    for (int v = 0; v < q.vertexCount(); ++v) {
        bool failing = semistableVariant ? theta[v] < 0 : theta[v] <= 0;
        if (failing && !covered[v]) result.singletonVertices.push_back(v);
    }
    return result;
}

} // namespace

bool isClosedUnderArrows(const std::vector<int>& vertices, const ToricQuiver& q,
                         const ArrowSubset& arrows) {
    validateArrowSubset(q, arrows);
    std::vector<bool> in(q.vertexCount(), false);
    for (int v : vertices) {
        if (v < 0 || v >= q.vertexCount())
            throw Error(ErrorKind::IndexOutOfRange, "vertex index " + std::to_string(v));
        in[v] = true;
    }
    for (int j : arrows) {
        const Arrow& a = q.arrow(j);
        if (in[a.tail] && !in[a.head]) return false;
    }
    return true;
}

bool isClosedUnderArrows(const std::vector<int>& vertices, const ToricQuiver& q) {
    ArrowSubset all(q.arrowCount());
    std::iota(all.begin(), all.end(), 0);
    return isClosedUnderArrows(vertices, q, all);
}

StabilityVerdict checkStability(const ArrowSubset& arrows, const ToricQuiver& q,
                                const Weight& theta) {
    validateWeight(q, theta);
    validateArrowSubset(q, arrows);
    return checkOnSupport(arrows, q, theta);
}

bool isStable(const ArrowSubset& arrows, const ToricQuiver& q, const Weight& theta) {
    return checkStability(arrows, q, theta).stable;
}

bool isSemistable(const ArrowSubset& arrows, const ToricQuiver& q, const Weight& theta) {
    return checkStability(arrows, q, theta).semistable;
}

MaximalSubquivers maximalUnstableSubquivers(const ToricQuiver& q, const Weight& theta) {
    return maximalFailingSubquivers(q, theta, /*semistableVariant=*/true);
}

MaximalSubquivers maximalNonstableSubquivers(const ToricQuiver& q, const Weight& theta) {
    return maximalFailingSubquivers(q, theta, /*semistableVariant=*/false);
}

bool isTight(const ToricQuiver& q, const Weight& theta) {
    validateWeight(q, theta);
    for (int drop = 0; drop < q.arrowCount(); ++drop)
        if (!deletionStable(q, theta, drop)) return false;
    return true;
}

bool isTight(const ToricQuiver& q) { return isTight(q, q.weight()); }

Flow treeFlow(const Weight& theta, const ToricQuiver& q, const ArrowSubset& tree) {
    if (!isSpanningTree(q, tree))
        throw Error(ErrorKind::NotSpanningTree, "arrow subset is not a spanning tree");
    return incInverse(theta, q, tree);
}

std::vector<ArrowSubset> stableTrees(const Weight& theta, const ToricQuiver& q) {
    validateWeight(q, theta);
    std::vector<ArrowSubset> result;
    for (const ArrowSubset& tree : allSpanningTrees(q)) {
        Flow w = incInverse(theta, q, tree);
        bool regular = std::all_of(w.begin(), w.end(), [](long long x) { return x >= 0; });
        if (regular && isStable(tree, q, theta)) result.push_back(tree);
    }
    return result;
}

namespace {

struct Contracted {
    ToricQuiver quiver;
    Weight theta;
};

Contracted contractArrow(const ToricQuiver& q, const Weight& theta, int arrowIndex) {
    const Arrow contracted = q.arrow(arrowIndex);
    const int keep = std::min(contracted.tail, contracted.head);
    const int gone = std::max(contracted.tail, contracted.head);
    auto remap = [&](int v) {
        if (v == gone) return keep;
        return v > gone ? v - 1 : v;
    };
    std::vector<Arrow> arrows;
    Flow flow;
    for (int j = 0; j < q.arrowCount(); ++j) {
        if (j == arrowIndex) continue;
        Arrow a{remap(q.arrow(j).tail), remap(q.arrow(j).head)};
        if (a.tail == a.head) continue; // arrows parallel to the contracted one
        arrows.push_back(a);
        flow.push_back(q.flow()[j]);
    }
    Weight newTheta;
    for (int v = 0; v < q.vertexCount(); ++v) {
        if (v == gone) continue;
        newTheta.push_back(v == keep ? theta[keep] + theta[gone] : theta[v]);
    }
    return {ToricQuiver(q.vertexCount() - 1, std::move(arrows), std::move(flow)),
            std::move(newTheta)};
}

bool hasRegularTreeFlow(const Weight& theta, const ToricQuiver& q) {
    for (const ArrowSubset& tree : allSpanningTrees(q)) {
        Flow w = incInverse(theta, q, tree);
        if (std::all_of(w.begin(), w.end(), [](long long x) { return x >= 0; })) return true;
    }
    return false;
}

} // namespace

ToricQuiver makeTight(const Weight& theta, const ToricQuiver& q) {
    validateWeight(q, theta);
    if (!hasRegularTreeFlow(theta, q))
        throw Error(ErrorKind::WeightNotInCone, "the flow polytope of the weight is empty");

    ToricQuiver current = q;
    Weight th = theta;
    const int guard = q.arrowCount() + 1;
    for (int iteration = 0; iteration < guard; ++iteration) {
        int violating = -1;
        for (int drop = 0; drop < current.arrowCount() && violating < 0; ++drop)
            if (!deletionStable(current, th, drop)) violating = drop;
        if (violating < 0)
            return replaceFlow(current, incInverse(th, current));
        Contracted next = contractArrow(current, th, violating);
        current = std::move(next.quiver);
        th = std::move(next.theta);
    }
    throw Error(ErrorKind::NonConvergence, "tightening did not terminate; this is a bug");
}

} // namespace tsq
