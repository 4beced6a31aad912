#include "remixed/serialize.hpp"

#include <sstream>

namespace remixed {

using nlohmann::json;

namespace {

json rat_coeff_to_json(const Rat& a) {
  if (a.get_den() == 1) {
    if (a.get_num().fits_slong_p()) return json(a.get_num().get_si());
    return json(a.get_num().get_str());
  }
  return json::array({a.get_num().get_str(), a.get_den().get_str()});
}

Rat rat_coeff_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rat(Int(j.get<std::string>()));
  if (j.is_array() && j.size() == 2)
    return Rat(Int(j[0].get<std::string>())) / Rat(Int(j[1].get<std::string>()));
  throw std::invalid_argument("bad coefficient encoding");
}

}  // namespace

json qpoly_to_json(const QPoly& p) {
  json coeffs = json::array();
  int v = 0;
  if (!p.is_zero()) {
    v = p.valuation();
    for (int k = v; k <= p.degree(); ++k) coeffs.push_back(rat_coeff_to_json(p.coeff(k)));
  }
  return json{{"valuation", v}, {"coeffs", coeffs}};
}

QPoly qpoly_from_json(const json& j) {
  int v = j.at("valuation").get<int>();
  QPoly p;
  int k = v;
  for (const auto& c : j.at("coeffs")) p += QPoly::monomial(k++) * rat_coeff_from_json(c);
  return p;
}

json simulation_to_json(const SimulationReport& rep, const StableDistribution* exact_law) {
  json out;
  out["c"] = rep.c;
  out["q"] = rat_to_string(rep.q_value);
  out["samples"] = rep.samples;
  out["seed"] = rep.seed;
  if (rep.cap_hits > 0) out["cap_hits"] = rep.cap_hits;
  json outcomes = json::array();
  for (const auto& o : rep.outcomes) {
    json row;
    row["sites"] = o.sites;
    row["count"] = o.count;
    row["freq"] = static_cast<double>(o.count) / static_cast<double>(rep.samples);
    if (exact_law) {
      auto it = exact_law->find(o.sites);
      row["exact"] = it == exact_law->end()
                         ? "0"
                         : rat_to_string(it->second.eval_at(rep.q_value));
    } else {
      row["exact"] = nullptr;
    }
    outcomes.push_back(std::move(row));
  }
  out["outcomes"] = std::move(outcomes);
  return out;
}

json postnikov_to_json(const PostnikovNode* node) {
  if (!node) return nullptr;
  return json{{"bs", node->bs},   {"dec", node->dec}, {"f", node->site},
              {"lo", node->lo},   {"hi", node->hi},
              {"left", postnikov_to_json(node->left.get())},
              {"right", postnikov_to_json(node->right.get())}};
}

json postnikov_tree_to_json(const PostnikovTree& t) {
  return json{{"tree", postnikov_to_json(t.root.get())},
              {"weight", t.weight.to_string()}};
}

namespace {

void postnikov_dot_rec(const PostnikovNode* n, std::ostringstream& os, int& next_id,
                       int parent) {
  if (!n) return;
  int id = next_id++;
  os << "  n" << id << " [label=\"" << n->bs << " / " << n->dec << "\\nf=" << n->site
     << "\"];\n";
  if (parent >= 0) os << "  n" << parent << " -> n" << id << ";\n";
  postnikov_dot_rec(n->left.get(), os, next_id, id);
  postnikov_dot_rec(n->right.get(), os, next_id, id);
}

}  // namespace

std::string postnikov_to_dot(const PostnikovTree& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  node [shape=circle];\n";
  os << "  label=\"wt = " << t.weight.to_string() << "\";\n";
  int next_id = 0;
  postnikov_dot_rec(t.root.get(), os, next_id, -1);
  os << "}\n";
  return os.str();
}

namespace {

// Subtree over inorder positions [lo, hi]; an empty range is the leaf sitting
// in slot lo-1 (0-based: leaf_lr[lo-1]).
json bilabeled_json_rec(const BilabeledTree& t, int lo, int hi) {
  if (lo > hi) return json{{"leaf", true}, {"lr", t.leaf_lr[lo - 1]}};
  int m = lo;
  for (int k = lo + 1; k <= hi; ++k)
    if (t.u[k - 1] > t.u[m - 1]) m = k;
  return json{{"dec", t.u[m - 1]},
              {"lr", t.node_lr[m - 1]},
              {"left", bilabeled_json_rec(t, lo, m - 1)},
              {"right", bilabeled_json_rec(t, m + 1, hi)}};
}

int bilabeled_dot_rec(const BilabeledTree& t, int lo, int hi, std::ostringstream& os,
                      int& next_id) {
  int id = next_id++;
  if (lo > hi) {
    os << "  n" << id << " [shape=none, label=\"" << t.leaf_lr[lo - 1] << "\"];\n";
    return id;
  }
  int m = lo;
  for (int k = lo + 1; k <= hi; ++k)
    if (t.u[k - 1] > t.u[m - 1]) m = k;
  os << "  n" << id << " [shape=circle, label=\"" << t.u[m - 1] << " / "
     << t.node_lr[m - 1] << "\"];\n";
  int l = bilabeled_dot_rec(t, lo, m - 1, os, next_id);
  int r = bilabeled_dot_rec(t, m + 1, hi, os, next_id);
  os << "  n" << id << " -> n" << l << ";\n  n" << id << " -> n" << r << ";\n";
  return id;
}

}  // namespace

json bilabeled_to_json(const BilabeledTree& t) {
  if (t.u.empty()) return json{{"leaf", true}, {"lr", t.leaf_lr.at(0)}};
  return bilabeled_json_rec(t, 1, static_cast<int>(t.u.size()));
}

std::string bilabeled_to_dot(const BilabeledTree& t, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  int next_id = 0;
  if (t.u.empty()) {
    os << "  n0 [shape=none, label=\"" << t.leaf_lr.at(0) << "\"];\n";
  } else {
    bilabeled_dot_rec(t, 1, static_cast<int>(t.u.size()), os, next_id);
  }
  os << "}\n";
  return os.str();
}

json check_to_json(const CheckResult& res) {
  json out{{"check", res.name}, {"r", res.r}, {"pass", res.pass}};
  out["witness"] = res.witness.empty() ? json(nullptr) : json(res.witness);
  return out;
}

}  // namespace remixed
