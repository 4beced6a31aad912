#pragma once

#include <memory>
#include <string>

#include "remixed/comb.hpp"
#include "remixed/qrat.hpp"

namespace remixed {

// ---------------------------------------------------------------------------
// Decreasing binary trees and the classical bijection with permutations.

struct DecTreeNode {
  int label = 0;
  std::unique_ptr<DecTreeNode> left, right;
};

/// u -> T(u): root carries the maximum of u, subtrees built from the factors
/// around it. Defined for any word with distinct letters.
std::unique_ptr<DecTreeNode> perm_to_dec_tree(const Perm& u);
/// Inverse: read labels in inorder.
Perm dec_tree_to_perm(const DecTreeNode* root);

/// Binary tree shape, encoded canonically: "." for an empty subtree,
/// "(" left right ")" for a node.
using Shape = std::string;
Shape shape_of_perm(const Perm& u);
/// All Cat_r shapes with r nodes.
std::vector<Shape> all_shapes(int r);

/// q-hooklength identity for one shape:
///   sum_{u : shape(T(u)) = shape} q^{inv(u)}
///     = q^{stat(T)} [r]! / prod_v [h_v],
/// with h_v the subtree size at v and stat(T) the total number of right
/// edges on root-to-node paths.
bool hooklength_check(const Shape& shape, int r, int bound = kMaxPermEnum);

// ---------------------------------------------------------------------------
// Postnikov trees: weighted histories of the sequential process.

struct PostnikovNode {
  int bs = 0;    // binary-search label
  int dec = 0;   // decreasing label = position in the source word
  int site = 0;  // compatible coloring f(v), a letter of the word
  int lo = 0, hi = 0;  // bs-label range [l_v, r_v] of the subtree
  std::unique_ptr<PostnikovNode> left, right;
};

struct PostnikovTree {
  std::unique_ptr<PostnikovNode> root;
  QRat weight;  // prod_v wt_q([l_v, r_v], bs(v), f(v))
};

/// All word-compatible trees, via the split recursion (condition (*) is
/// checked by letter counts before recursing).
std::vector<PostnikovTree> enumerate_postnikov(const Word& word);

/// A_{cont(word)}(q) = sum_T [r]! wt(T, word). Each summand is itself a
/// polynomial; a non-polynomial summand raises ExactnessError.
QPoly remixed_via_postnikov(const Word& word);

// ---------------------------------------------------------------------------
// Bilabeled trees.

/// Decreasing tree of u completed with r+1 leaves, plus an injective labeling
/// lr of nodes and leaves by {1, ..., 2r+1}: every node label exceeds its
/// left child's and is below its right child's, and leaf labels increase left
/// to right. Leaf labels determine the content via c_i = l_{i+1} - l_i - 1.
struct BilabeledTree {
  Perm u;                    // u_i = decreasing label of the inorder-i node
  std::vector<int> node_lr;  // lr of internal nodes, by inorder position
  std::vector<int> leaf_lr;  // lr of leaves, left to right (r+1 values)

  bool operator==(const BilabeledTree& o) const {
    return u == o.u && node_lr == o.node_lr && leaf_lr == o.leaf_lr;
  }
  bool operator<(const BilabeledTree& o) const {
    if (u != o.u) return u < o.u;
    if (node_lr != o.node_lr) return node_lr < o.node_lr;
    return leaf_lr < o.leaf_lr;
  }
};

Composition bilabeled_content(const BilabeledTree& t);

inline constexpr int kMaxBilabeledEnum = 7;

/// All bilabeled trees with content c (fixes the leaf labels from c, then
/// backtracks over lr assignments for each u in S_r).
std::vector<BilabeledTree> enumerate_bilabeled(const Composition& c,
                                               int bound = kMaxBilabeledEnum);

/// A_c(q) = sum over B(c) of q^{inv(u)}.
QPoly remixed_via_bilabeled(const Composition& c, int bound = kMaxBilabeledEnum);

/// Removal of the dec-label-1 node: its two leaves merge into one labeled by
/// the node's lr value, labels are compacted by the increasing bijection.
/// leaf_index is the position i of the absorbed leaf pair; absorbed_label is
/// the pre-compaction lr value j of the removed node.
struct ShrinkResult {
  BilabeledTree tree;
  int leaf_index = 0;
  int absorbed_label = 0;
};
ShrinkResult liu_shrink(const BilabeledTree& t);

}  // namespace remixed
