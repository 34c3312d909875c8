#ifndef TSQ_STABILITY_HPP
#define TSQ_STABILITY_HPP

#include "tsq/quiver.hpp"

#include <optional>
#include <vector>

namespace tsq {

/// Verdict of a (semi)stability check. A witness is present exactly when the
/// corresponding verdict is false: a successor-closed vertex set whose theta
/// sum is <= 0 (not stable) resp. < 0 (not semistable).
struct StabilityVerdict {
    bool stable = false;
    bool semistable = false;
    std::optional<std::vector<int>> witness;
};

/// True iff no arrow of the subquiver (Q restricted to the arrows in I) has
/// its tail in V and its head outside V.
bool isClosedUnderArrows(const std::vector<int>& vertices, const ToricQuiver& q,
                         const ArrowSubset& arrows);
/// Same check against all arrows of q.
bool isClosedUnderArrows(const std::vector<int>& vertices, const ToricQuiver& q);

/// Quantifies over all nonempty proper successor-closed vertex subsets of the
/// subquiver given by the arrows in I.
StabilityVerdict checkStability(const ArrowSubset& arrows, const ToricQuiver& q,
                                const Weight& theta);
bool isStable(const ArrowSubset& arrows, const ToricQuiver& q, const Weight& theta);
bool isSemistable(const ArrowSubset& arrows, const ToricQuiver& q, const Weight& theta);

struct MaximalSubquivers {
    std::vector<ArrowSubset> nonSingletons; // maximal failing subsets with >= 1 arrow
    std::vector<int> singletonVertices;     // failing vertices not covered by any of those
};

MaximalSubquivers maximalUnstableSubquivers(const ToricQuiver& q, const Weight& theta);
MaximalSubquivers maximalNonstableSubquivers(const ToricQuiver& q, const Weight& theta);

/// theta is tight iff deleting any single arrow leaves a theta-stable subquiver.
bool isTight(const ToricQuiver& q, const Weight& theta);
bool isTight(const ToricQuiver& q); // against the stored weight

/// Contracts arrows whose deletion is not theta-stable until the weight is
/// tight. The flow polytope's lattice data is invariant across the loop. The
/// returned quiver carries the contracted weight (its flow is a preimage of it
/// under inc).
ToricQuiver makeTight(const Weight& theta, const ToricQuiver& q);

/// Spanning trees T whose unique T-supported flow with incMap = theta is
/// nonnegative and whose subquiver is theta-stable; lexicographically sorted.
std::vector<ArrowSubset> stableTrees(const Weight& theta, const ToricQuiver& q);

/// The unique flow supported on the spanning tree with incMap = theta.
Flow treeFlow(const Weight& theta, const ToricQuiver& q, const ArrowSubset& tree);

} // namespace tsq

#endif
