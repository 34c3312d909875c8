#ifndef TSQ_CHAMBERS_HPP
#define TSQ_CHAMBERS_HPP

#include "tsq/geometry.hpp"
#include "tsq/quiver.hpp"

#include <vector>

namespace tsq {

/// Arrows with no alternative directed path (of two or more arrows) from tail
/// to head. Parallel duplicates do not disqualify each other; the inc images
/// of the primitive arrows generate the whole cone of weights.
ArrowSubset primitiveArrows(const ToricQuiver& q);

/// C(Q): the weights with nonempty flow polytope, generated by the inc-matrix
/// columns of the primitive arrows. Lives in the hyperplane sum(theta) = 0.
Cone coneOfWeights(const ToricQuiver& q);

/// A vertex bipartition whose two induced subquivers are connected. The wall
/// is the hyperplane where theta sums to zero on qPlus; (tPlus, tMinus) count
/// the arrows crossing out of resp. into qPlus. Outer iff one count is zero.
struct Wall {
    std::vector<int> qPlus;
    int tPlus = 0;
    int tMinus = 0;

    bool outer() const { return tPlus == 0 || tMinus == 0; }

    friend bool operator==(const Wall& a, const Wall& b) {
        return a.qPlus == b.qPlus && a.tPlus == b.tPlus && a.tMinus == b.tMinus;
    }
};

/// One wall per bipartition with both sides connected; qPlus is the side not
/// containing vertex 0, sorted by (size, lexicographic).
std::vector<Wall> potentialWalls(const ToricQuiver& q, int vertexCap = 20);

/// C_T: the cone generated by the inc columns of a spanning tree's arrows.
Cone treeChamber(const ArrowSubset& tree, const ToricQuiver& q);

struct ChamberSystem {
    Cone ambient;                               // C(Q)
    std::vector<ArrowSubset> trees;             // all spanning trees, lex order
    std::vector<Cone> chambers;                 // full-dimensional cells
    std::vector<std::vector<int>> treeConeIndex; // per chamber: trees T with chamber inside C_T
};

/// Refines C(Q) along every facet hyperplane of every spanning-tree cone; the
/// resulting full-dimensional cells refine (or equal) the wall-and-chamber
/// decomposition, and each cell lies in at least one C_T.
ChamberSystem coneSystem(const ToricQuiver& q, std::size_t treeCap = 10000);

/// One integer weight strictly interior to each chamber: the primitive-ray sum
/// divided by its content.
std::vector<Weight> referenceThetas(const ChamberSystem& cs);

/// Decides the defining equivalence: both weights see exactly the same
/// semistable and the same stable arrow subsets. Throws Indeterminate when
/// either weight has no stable trees.
bool sameChamber(const Weight& theta1, const Weight& theta2, const ToricQuiver& q);

} // namespace tsq

#endif
