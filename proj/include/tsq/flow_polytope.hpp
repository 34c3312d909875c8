#ifndef TSQ_FLOW_POLYTOPE_HPP
#define TSQ_FLOW_POLYTOPE_HPP

#include "tsq/geometry.hpp"
#include "tsq/quiver.hpp"

#include <vector>

namespace tsq {

/// A lattice basis of the circulation space attached to a spanning tree: one
/// column per non-tree arrow (ascending index), carrying -1 at that arrow and
/// the signed tree path from its tail to its head. The square submatrix on the
/// non-tree rows is -identity.
struct CycleBasis {
    ArrowSubset tree;
    std::vector<IntVector> columns; // each of length |Q1|
};

CycleBasis basisForFlowPolytope(const ArrowSubset& tree, const ToricQuiver& q);
CycleBasis basisForFlowPolytope(const ToricQuiver& q); // lex-smallest spanning tree

/// The vertices of the flow polytope in ambient flow coordinates: all
/// nonnegative spanning-tree flows with incMap = theta, deduplicated and
/// sorted. Empty exactly when theta lies outside the cone of weights.
std::vector<Flow> flowPolytopeVertices(const Weight& theta, const ToricQuiver& q);

/// Ambient vertices translated by a base flow and written in cycle-basis
/// coordinates (dimension |Q1| - |Q0| + 1). The base flow is the quiver's
/// stored flow when its weight equals theta, otherwise the lexicographically
/// smallest vertex; either way the coordinates are integral.
std::vector<std::vector<long long>> flowPolytopeInTreeBasis(const Weight& theta,
                                                            const ToricQuiver& q,
                                                            const ArrowSubset& tree);
std::vector<std::vector<long long>> flowPolytopeInTreeBasis(const Weight& theta,
                                                            const ToricQuiver& q);

/// Convex hull of the cycle-basis vertices.
Polytope flowPolytopeHull(const Weight& theta, const ToricQuiver& q);
Polytope flowPolytopeHull(const Weight& theta, const ToricQuiver& q, const ArrowSubset& tree);

/// Translates the unique interior lattice point of the cycle-basis polytope to
/// the origin and tests reflexivity. theta must be strictly interior to the
/// cone of weights, and the interior lattice point must be unique.
bool isFlowPolytopeReflexive(const Weight& theta, const ToricQuiver& q);

} // namespace tsq

#endif
