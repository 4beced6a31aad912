#include "remixed/trees.hpp"

#include <algorithm>

#include "remixed/process.hpp"

namespace remixed {

// --------------------------- decreasing trees ------------------------------

namespace {

std::unique_ptr<DecTreeNode> build_dec_tree(const Perm& u, int lo, int hi) {
  if (lo > hi) return nullptr;
  int m = lo;
  for (int k = lo + 1; k <= hi; ++k)
    if (u[k] > u[m]) m = k;
  auto node = std::make_unique<DecTreeNode>();
  node->label = u[m];
  node->left = build_dec_tree(u, lo, m - 1);
  node->right = build_dec_tree(u, m + 1, hi);
  return node;
}

void inorder_labels(const DecTreeNode* n, Perm& out) {
  if (!n) return;
  inorder_labels(n->left.get(), out);
  out.push_back(n->label);
  inorder_labels(n->right.get(), out);
}

Shape shape_of(const DecTreeNode* n) {
  if (!n) return ".";
  return "(" + shape_of(n->left.get()) + shape_of(n->right.get()) + ")";
}

}  // namespace

std::unique_ptr<DecTreeNode> perm_to_dec_tree(const Perm& u) {
  return build_dec_tree(u, 0, static_cast<int>(u.size()) - 1);
}

Perm dec_tree_to_perm(const DecTreeNode* root) {
  Perm out;
  inorder_labels(root, out);
  return out;
}

Shape shape_of_perm(const Perm& u) { return shape_of(perm_to_dec_tree(u).get()); }

std::vector<Shape> all_shapes(int r) {
  if (r < 0) throw std::invalid_argument("all_shapes: negative r");
  std::vector<std::vector<Shape>> table(r + 1);
  table[0] = {"."};
  for (int n = 1; n <= r; ++n)
    for (int k = 0; k < n; ++k)
      for (const auto& l : table[k])
        for (const auto& rt : table[n - 1 - k]) table[n].push_back("(" + l + rt + ")");
  return table[r];
}

namespace {

struct ParsedShape {
  int size = 0;       // node count of this subtree
  int stat = 0;       // sum over nodes of #right edges on the root path
  QPoly hook_prod;    // prod_v [h_v]
};

// pos points at '.' or '('; depth_right = right edges accumulated so far.
ParsedShape parse_shape(const Shape& s, size_t& pos, int depth_right) {
  if (pos >= s.size()) throw std::invalid_argument("bad shape string");
  if (s[pos] == '.') {
    ++pos;
    return {0, 0, QPoly(1)};
  }
  if (s[pos] != '(') throw std::invalid_argument("bad shape string");
  ++pos;
  ParsedShape l = parse_shape(s, pos, depth_right);
  ParsedShape r = parse_shape(s, pos, depth_right + 1);
  if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("bad shape string");
  ++pos;
  ParsedShape out;
  out.size = l.size + r.size + 1;
  out.stat = l.stat + r.stat + depth_right;
  out.hook_prod = l.hook_prod * r.hook_prod * qint(out.size);
  return out;
}

}  // namespace

bool hooklength_check(const Shape& shape, int r, int bound) {
  size_t pos = 0;
  ParsedShape p = parse_shape(shape, pos, 0);
  if (pos != shape.size() || p.size != r)
    throw std::invalid_argument("hooklength_check: shape has wrong size");
  QPoly rhs = QPoly::monomial(p.stat) * qfact(r).exact_div(p.hook_prod);
  QPoly lhs;
  for (const auto& u : all_permutations(r, bound))
    if (shape_of_perm(u) == shape) lhs += QPoly::monomial(perm_stats(u).inv);
  return lhs == rhs;
}

// --------------------------- Postnikov trees -------------------------------

namespace {

using Letter = std::pair<int, int>;  // (site, original 1-based position)
using WeightedNode = std::pair<std::unique_ptr<PostnikovNode>, QRat>;

std::vector<WeightedNode> enumerate_rec(const std::vector<Letter>& letters, int a, int b) {
  std::vector<WeightedNode> out;
  if (a > b) {
    if (letters.empty()) out.emplace_back(nullptr, QRat(1));
    return out;
  }
  int m = b - a + 1;
  if (static_cast<int>(letters.size()) != m) return out;
  for (const auto& [site, pos] : letters)
    if (site < a || site > b) return out;

  const Letter& last = letters.back();
  for (int j = a; j <= b; ++j) {
    int cnt_lo = 0, cnt_hi = 0;
    for (int t = 0; t + 1 < m; ++t) {
      if (letters[t].first < j) ++cnt_lo;
      else if (letters[t].first > j) ++cnt_hi;
    }
    if (cnt_lo != j - a || cnt_hi != b - j) continue;  // condition (*)
    std::vector<Letter> lows, highs;
    for (int t = 0; t + 1 < m; ++t)
      (letters[t].first < j ? lows : highs).push_back(letters[t]);
    auto lefts = enumerate_rec(lows, a, j - 1);
    auto rights = enumerate_rec(highs, j + 1, b);
    QRat root_wt = wt_q(a, b, j, last.first);
    for (auto& [ln, lw] : lefts) {
      for (auto& [rn, rw] : rights) {
        auto node = std::make_unique<PostnikovNode>();
        node->bs = j;
        node->dec = last.second;
        node->site = last.first;
        node->lo = a;
        node->hi = b;
        // children are shared across combinations only structurally; deep
        // copy keeps each tree independently owned
        auto clone = [](const PostnikovNode* src, auto&& self) -> std::unique_ptr<PostnikovNode> {
          if (!src) return nullptr;
          auto n = std::make_unique<PostnikovNode>();
          *n = PostnikovNode{src->bs, src->dec, src->site, src->lo, src->hi,
                             self(src->left.get(), self), self(src->right.get(), self)};
          return n;
        };
        node->left = clone(ln.get(), clone);
        node->right = clone(rn.get(), clone);
        out.emplace_back(std::move(node), root_wt * lw * rw);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<PostnikovTree> enumerate_postnikov(const Word& word) {
  int r = static_cast<int>(word.size());
  for (int x : word)
    if (x < 1 || x > r) throw std::invalid_argument("enumerate_postnikov: word not over [r]");
  std::vector<Letter> letters;
  for (int t = 0; t < r; ++t) letters.emplace_back(word[t], t + 1);
  std::vector<PostnikovTree> out;
  for (auto& [node, w] : enumerate_rec(letters, 1, r))
    out.push_back(PostnikovTree{std::move(node), w});
  return out;
}

QPoly remixed_via_postnikov(const Word& word) {
  int r = static_cast<int>(word.size());
  QPoly total;
  QPoly rfact = qfact(r);
  for (const auto& t : enumerate_postnikov(word))
    total += (QRat(rfact) * t.weight).to_poly();
  return total;
}

// --------------------------- bilabeled trees -------------------------------

namespace {

struct TreeStructure {
  // children of internal node at inorder position i (1-based): positive =
  // internal node position, negative = leaf slot -(value)
  std::vector<int> left_child, right_child;
  std::vector<int> postorder;  // internal node positions in post-order
  int root = 0;
};

int build_structure(const Perm& u, int lo, int hi, TreeStructure& ts) {
  int m = lo;
  for (int k = lo + 1; k <= hi; ++k)
    if (u[k - 1] > u[m - 1]) m = k;
  ts.left_child[m - 1] = (lo <= m - 1) ? build_structure(u, lo, m - 1, ts) : -lo;
  ts.right_child[m - 1] = (m + 1 <= hi) ? build_structure(u, m + 1, hi, ts) : -(hi + 1);
  ts.postorder.push_back(m);
  return m;
}

TreeStructure structure_of(const Perm& u) {
  int r = static_cast<int>(u.size());
  TreeStructure ts;
  ts.left_child.assign(r, 0);
  ts.right_child.assign(r, 0);
  ts.root = build_structure(u, 1, r, ts);
  return ts;
}

void assign_rec(const TreeStructure& ts, const std::vector<int>& leaf_lr,
                std::vector<int>& node_lr, std::vector<int>& pool,
                std::vector<bool>& used, size_t step, const Perm& u,
                std::vector<BilabeledTree>& out) {
  if (step == ts.postorder.size()) {
    out.push_back(BilabeledTree{u, node_lr, leaf_lr});
    return;
  }
  int v = ts.postorder[step];
  auto child_label = [&](int ch) {
    return ch > 0 ? node_lr[ch - 1] : leaf_lr[-ch - 1];
  };
  int lo = child_label(ts.left_child[v - 1]);
  int hi = child_label(ts.right_child[v - 1]);
  for (size_t k = 0; k < pool.size(); ++k) {
    if (used[k] || pool[k] <= lo || pool[k] >= hi) continue;
    used[k] = true;
    node_lr[v - 1] = pool[k];
    assign_rec(ts, leaf_lr, node_lr, pool, used, step + 1, u, out);
    used[k] = false;
  }
}

}  // namespace

Composition bilabeled_content(const BilabeledTree& t) {
  Composition c;
  for (size_t i = 0; i + 1 < t.leaf_lr.size(); ++i)
    c.push_back(t.leaf_lr[i + 1] - t.leaf_lr[i] - 1);
  return c;
}

std::vector<BilabeledTree> enumerate_bilabeled(const Composition& c, int bound) {
  if (!is_in_wr(c)) throw std::invalid_argument("enumerate_bilabeled: c not in W_r");
  int r = static_cast<int>(c.size());
  if (r > bound) throw std::invalid_argument("enumerate_bilabeled: r beyond bound");

  std::vector<int> leaf_lr(r + 1);
  leaf_lr[0] = 1;
  for (int i = 1; i <= r; ++i) leaf_lr[i] = leaf_lr[i - 1] + c[i - 1] + 1;

  std::vector<bool> is_leaf_label(2 * r + 2, false);
  for (int l : leaf_lr) is_leaf_label[l] = true;
  std::vector<int> pool;
  for (int v = 1; v <= 2 * r + 1; ++v)
    if (!is_leaf_label[v]) pool.push_back(v);

  std::vector<BilabeledTree> out;
  if (r == 0) {
    out.push_back(BilabeledTree{{}, {}, leaf_lr});
    return out;
  }
  for (const auto& u : all_permutations(r)) {
    TreeStructure ts = structure_of(u);
    std::vector<int> node_lr(r, 0);
    std::vector<bool> used(pool.size(), false);
    assign_rec(ts, leaf_lr, node_lr, pool, used, 0, u, out);
  }
  return out;
}

QPoly remixed_via_bilabeled(const Composition& c, int bound) {
  QPoly total;
  for (const auto& t : enumerate_bilabeled(c, bound))
    total += QPoly::monomial(perm_stats(t.u).inv);
  return total;
}

ShrinkResult liu_shrink(const BilabeledTree& t) {
  int r = static_cast<int>(t.u.size());
  if (r < 2) throw std::invalid_argument("liu_shrink: requires r >= 2");
  int p = 0;
  for (int i = 1; i <= r; ++i)
    if (t.u[i - 1] == 1) p = i;
  int j = t.node_lr[p - 1];

  Perm u2;
  for (int x : t.u)
    if (x != 1) u2.push_back(x - 1);

  std::vector<int> new_leaves;
  for (int i = 1; i <= r + 1; ++i) {
    if (i == p) new_leaves.push_back(j);
    else if (i != p + 1) new_leaves.push_back(t.leaf_lr[i - 1]);
  }
  std::vector<int> new_nodes;
  for (int i = 1; i <= r; ++i)
    if (i != p) new_nodes.push_back(t.node_lr[i - 1]);

  // increasing bijection {1..2r+1} \ {l_p, l_{p+1}} -> {1..2r-1}
  std::vector<int> relabel(2 * r + 2, 0);
  int next = 0;
  for (int v = 1; v <= 2 * r + 1; ++v) {
    if (v == t.leaf_lr[p - 1] || v == t.leaf_lr[p]) continue;
    relabel[v] = ++next;
  }
  for (int& v : new_leaves) v = relabel[v];
  for (int& v : new_nodes) v = relabel[v];

  return ShrinkResult{BilabeledTree{u2, new_nodes, new_leaves}, p, j};
}

}  // namespace remixed
