#pragma once

#include <stdexcept>
#include <vector>

namespace ribbon {

/// Planar binary tree given by its internal nodes; children are indices of
/// other internal nodes or -1 for a leaf. Node 0 is the root; the one-leaf
/// tree has no internal nodes at all.
struct PlanarBinaryTree {
    std::vector<int> left, right;
    int internal_count() const { return static_cast<int>(left.size()); }
    int leaf_count() const { return internal_count() + 1; }
};

/// All shapes with the given number of leaves (Catalan(leaves-1) many),
/// ordered by the position of the root split, left factor first.
inline std::vector<PlanarBinaryTree> binary_trees(int leaves) {
    if (leaves < 1) throw std::invalid_argument("trees need at least one leaf");
    if (leaves == 1) return {PlanarBinaryTree{}};
    std::vector<PlanarBinaryTree> out;
    for (int a = 1; a < leaves; ++a) {
        for (const auto& tl : binary_trees(a)) {
            for (const auto& tr : binary_trees(leaves - a)) {
                PlanarBinaryTree t;
                int nl = tl.internal_count(), nr = tr.internal_count();
                t.left.resize(1 + nl + nr);
                t.right.resize(1 + nl + nr);
                t.left[0] = nl ? 1 : -1;
                t.right[0] = nr ? 1 + nl : -1;
                for (int i = 0; i < nl; ++i) {
                    t.left[1 + i] = tl.left[i] == -1 ? -1 : tl.left[i] + 1;
                    t.right[1 + i] = tl.right[i] == -1 ? -1 : tl.right[i] + 1;
                }
                for (int i = 0; i < nr; ++i) {
                    t.left[1 + nl + i] = tr.left[i] == -1 ? -1 : tr.left[i] + 1 + nl;
                    t.right[1 + nl + i] = tr.right[i] == -1 ? -1 : tr.right[i] + 1 + nl;
                }
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

}  // namespace ribbon
