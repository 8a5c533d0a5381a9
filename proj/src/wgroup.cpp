#include "qu2/wgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include <fmt/format.h>
#include "json.hpp"

#include "qu2/errors.hpp"

namespace qu2 {

Diagram Diagram::identity() { return {{Word()}, {Word()}, {0}, {Int(0)}}; }

void validate(const Diagram& d) {
  const std::size_t n = d.tplus.size();
  if (n == 0 || d.tminus.size() != n) throw DomainError("diagram: leaf counts differ or are zero");
  if (d.tau.size() != n || d.v.size() != n) throw DomainError("diagram: tau and v need one entry per leaf");
  if (!std::is_sorted(d.tplus.begin(), d.tplus.end()) ||
      !std::is_sorted(d.tminus.begin(), d.tminus.end())) {
    throw DomainError("diagram: leaves must be listed left to right");
  }
  if (!is_partition(d.tplus) || !is_partition(d.tminus)) {
    throw DomainError("diagram: leaf set is not a complete binary tree");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t q : d.tau) {
    if (q >= n || seen[q]) throw DomainError("diagram: tau is not a permutation");
    seen[q] = true;
  }
}

Element to_element(const Diagram& d) {
  validate(d);
  Element out;
  for (std::size_t p = 0; p < d.tplus.size(); ++p) {
    out.add_term(Monomial{d.tplus[p], d.v[p], d.tminus[d.tau[p]]}, 1);
  }
  return out;
}

namespace {

using TermSet = std::map<Word, Monomial>;  // keyed by alpha

Diagram from_terms(const TermSet& terms) {
  Diagram d;
  std::vector<Word> betas;
  for (const auto& [alpha, m] : terms) {
    d.tplus.push_back(alpha);
    d.v.push_back(m.k);
    betas.push_back(m.beta);
  }
  d.tminus = betas;
  std::sort(d.tminus.begin(), d.tminus.end());
  for (const Word& b : betas) {
    d.tau.push_back(static_cast<std::size_t>(
        std::lower_bound(d.tminus.begin(), d.tminus.end(), b) - d.tminus.begin()));
  }
  return d;
}

TermSet to_terms(const Diagram& d) {
  validate(d);
  TermSet terms;
  for (std::size_t p = 0; p < d.tplus.size(); ++p) {
    terms.emplace(d.tplus[p], Monomial{d.tplus[p], d.v[p], d.tminus[d.tau[p]]});
  }
  return terms;
}

// The merged monomial if the two children of `parent` match an expansion pattern.
std::optional<Monomial> merge_children(const TermSet& terms, const Word& parent) {
  auto left = terms.find(parent.child('1'));
  auto right = terms.find(parent.child('2'));
  if (left == terms.end() || right == terms.end()) return std::nullopt;
  const Monomial& a = left->second;
  const Monomial& b = right->second;
  if (a.beta.size() != b.beta.size() || a.beta.empty()) return std::nullopt;
  const std::size_t n = a.beta.size() - 1;
  const Word x = a.beta.prefix(n);
  if (b.beta.prefix(n) != x) return std::nullopt;
  const char la = a.beta[n];
  const char lb = b.beta[n];
  // even: (w1, k, x1) + (w2, k, x2) = (w, 2k, x)
  if (la == '1' && lb == '2' && a.k == b.k) return Monomial{parent, 2 * a.k, x};
  // odd: (w1, k, x2) + (w2, k+1, x1) = (w, 2k+1, x)
  if (la == '2' && lb == '1' && b.k == a.k + 1) return Monomial{parent, 2 * a.k + 1, x};
  return std::nullopt;
}

std::vector<Word> available_moves(const TermSet& terms) {
  std::set<Word> parents;
  for (const auto& [alpha, m] : terms) {
    if (!alpha.empty()) parents.insert(alpha.prefix(alpha.size() - 1));
  }
  std::vector<Word> moves;
  for (const Word& w : parents) {
    if (merge_children(terms, w)) moves.push_back(w);
  }
  return moves;
}

void apply_move(TermSet& terms, const Word& parent) {
  Monomial merged = *merge_children(terms, parent);
  terms.erase(parent.child('1'));
  terms.erase(parent.child('2'));
  terms.emplace(parent, std::move(merged));
}

template <class Pick>
Diagram reduce_with(const Diagram& d, Pick pick) {
  TermSet terms = to_terms(d);
  for (;;) {
    std::vector<Word> moves = available_moves(terms);
    if (moves.empty()) break;
    apply_move(terms, pick(moves));
  }
  return from_terms(terms);
}

}  // namespace

Diagram from_element(const Element& e) {
  if (!is_unitary(e)) throw DomainError("from_element: input is not a unitary of W");
  TermSet terms;
  const Element canon = normalize(e);
  for (const auto& [m, c] : canon.terms()) terms.emplace(m.alpha, m);
  return from_terms(terms);
}

Diagram reduce(const Diagram& d) {
  return reduce_with(d, [](const std::vector<Word>& moves) {
    // deepest parent first, then lexicographic
    return *std::min_element(moves.begin(), moves.end(), [](const Word& a, const Word& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
  });
}

Diagram reduce_shuffled(const Diagram& d, std::mt19937_64& rng) {
  return reduce_with(d, [&rng](const std::vector<Word>& moves) {
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    return moves[pick(rng)];
  });
}

Diagram group_mul(const Diagram& a, const Diagram& b) {
  return reduce(from_element(mul(to_element(a), to_element(b))));
}

Diagram group_inv(const Diagram& d) {
  validate(d);
  const std::size_t n = d.tau.size();
  Diagram out{d.tminus, d.tplus, std::vector<std::size_t>(n), std::vector<Int>(n)};
  for (std::size_t p = 0; p < n; ++p) {
    out.tau[d.tau[p]] = p;
    out.v[d.tau[p]] = -d.v[p];
  }
  return out;
}

nlohmann::json tree_to_json(const std::vector<Word>& leaves) {
  const std::set<Word> leaf_set(leaves.begin(), leaves.end());
  std::size_t longest = 0;
  for (const Word& w : leaves) longest = std::max(longest, w.size());
  std::function<nlohmann::json(const Word&)> build = [&](const Word& w) -> nlohmann::json {
    if (leaf_set.count(w)) return nlohmann::json::array();
    if (w.size() >= longest) throw DomainError("tree_to_json: leaves do not form a tree");
    return nlohmann::json::array({build(w.child('1')), build(w.child('2'))});
  };
  return build(Word());
}

std::vector<Word> tree_from_json(const nlohmann::json& j) {
  std::vector<Word> leaves;
  std::function<void(const nlohmann::json&, const Word&)> walk = [&](const nlohmann::json& node,
                                                                     const Word& w) {
    if (!node.is_array()) throw UsageError("tree JSON: nodes must be arrays");
    if (node.empty()) {
      leaves.push_back(w);
    } else if (node.size() == 2) {
      walk(node[0], w.child('1'));
      walk(node[1], w.child('2'));
    } else {
      throw UsageError("tree JSON: a node has 0 or 2 children");
    }
  };
  walk(j, Word());
  return leaves;
}

nlohmann::json to_json(const Diagram& d) {
  nlohmann::json tau = nlohmann::json::array();
  nlohmann::json v = nlohmann::json::array();
  for (std::size_t q : d.tau) tau.push_back(q + 1);
  for (const Int& k : d.v) {
    if (fits_int64(k)) {
      v.push_back(static_cast<std::int64_t>(k));
    } else {
      v.push_back(k.str());
    }
  }
  return {{"tplus", tree_to_json(d.tplus)}, {"tminus", tree_to_json(d.tminus)}, {"tau", tau}, {"v", v}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("diagram JSON must be an object");
  for (const char* key : {"tplus", "tminus", "tau", "v"}) {
    if (!j.contains(key)) throw UsageError(std::string("diagram JSON: missing '") + key + "'");
  }
  Diagram d;
  d.tplus = tree_from_json(j["tplus"]);
  d.tminus = tree_from_json(j["tminus"]);
  for (const auto& q : j["tau"]) {
    if (!q.is_number_integer() || q.get<std::int64_t>() < 1) {
      throw UsageError("diagram JSON: tau entries are 1-based integers");
    }
    d.tau.push_back(static_cast<std::size_t>(q.get<std::int64_t>() - 1));
  }
  for (const auto& k : j["v"]) {
    if (k.is_number_integer()) {
      d.v.emplace_back(k.get<std::int64_t>());
    } else if (k.is_string() && parse_int(k.get<std::string>())) {
      d.v.push_back(*parse_int(k.get<std::string>()));
    } else {
      throw UsageError("diagram JSON: v entries are integers");
    }
  }
  validate(d);
  return d;
}

std::string to_string(const Diagram& d) {
  std::vector<std::string> plus, minus, tau, v;
  for (const Word& w : d.tplus) plus.push_back(w.str());
  for (const Word& w : d.tminus) minus.push_back(w.str());
  for (std::size_t q : d.tau) tau.push_back(std::to_string(q + 1));
  for (const Int& k : d.v) v.push_back(k.str());
  return fmt::format("tplus=[{}] tminus=[{}] tau=[{}] v=[{}]", fmt::join(plus, ","),
                     fmt::join(minus, ","), fmt::join(tau, ","), fmt::join(v, ","));
}

namespace {

// Every node of the tree (leaves and their ancestors), parents before children.
std::vector<Word> tree_nodes(const std::vector<Word>& leaves) {
  std::set<Word> nodes;
  for (const Word& w : leaves) {
    for (std::size_t n = 0; n <= w.size(); ++n) nodes.insert(w.prefix(n));
  }
  std::vector<Word> out(nodes.begin(), nodes.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  return out;
}

std::string render_dot(const Diagram& d) {
  std::string out = "digraph W {\n  node [shape=point];\n  edge [arrowhead=none];\n";
  out += "  subgraph cluster_plus {\n    label=\"T+\";\n";
  for (const Word& w : tree_nodes(d.tplus)) {
    if (!w.empty()) out += fmt::format("    p_{} -> p_{};\n", w.prefix(w.size() - 1).str(), w.str());
  }
  if (d.tplus.size() == 1) out += "    p_e;\n";
  out += "  }\n  subgraph cluster_minus {\n    label=\"T-\";\n";
  for (const Word& w : tree_nodes(d.tminus)) {
    // drawn upside down: children above their parent
    if (!w.empty()) out += fmt::format("    m_{} -> m_{};\n", w.str(), w.prefix(w.size() - 1).str());
  }
  if (d.tminus.size() == 1) out += "    m_e;\n";
  out += "  }\n";
  for (std::size_t p = 0; p < d.tplus.size(); ++p) {
    out += fmt::format("  p_{} -> m_{} [style=dashed, label=\"{}\"];\n", d.tplus[p].str(),
                       d.tminus[d.tau[p]].str(), d.v[p].str());
  }
  out += "}\n";
  return out;
}

// fmt prints -0.0 as "-0.00"
double tidy(double x) { return x == 0.0 ? 0.0 : x; }

std::string render_tikz(const Diagram& d) {
  std::size_t depth = 0;
  for (const Word& w : d.tplus) depth = std::max(depth, w.size());
  for (const Word& w : d.tminus) depth = std::max(depth, w.size());
  const double gap = 1.0;
  const double bottom = -(2.0 * static_cast<double>(depth) + gap);

  // Leaves sit at x = 0, 1, ...; inner nodes at the mean of their children.
  auto layout = [](const std::vector<Word>& leaves) {
    std::map<Word, double> x;
    for (std::size_t i = 0; i < leaves.size(); ++i) x[leaves[i]] = static_cast<double>(i);
    std::vector<Word> nodes = tree_nodes(leaves);
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
      if (!x.count(*it)) x[*it] = (x.at(it->child('1')) + x.at(it->child('2'))) / 2.0;
    }
    return x;
  };
  const auto xp = layout(d.tplus);
  const auto xm = layout(d.tminus);
  const double leaf_plus_y = -static_cast<double>(depth);
  const double leaf_minus_y = bottom + static_cast<double>(depth);

  std::string out = "\\begin{tikzpicture}[every node/.style={font=\\scriptsize}]\n";
  for (const Word& w : tree_nodes(d.tplus)) {
    if (w.empty()) continue;
    const Word up = w.prefix(w.size() - 1);
    const bool leaf = std::binary_search(d.tplus.begin(), d.tplus.end(), w);
    out += fmt::format("  \\draw ({:.2f},{:.2f}) -- ({:.2f},{:.2f});\n", xp.at(up),
                       tidy(-static_cast<double>(up.size())), xp.at(w),
                       tidy(leaf ? leaf_plus_y : -static_cast<double>(w.size())));
  }
  for (const Word& w : tree_nodes(d.tminus)) {
    if (w.empty()) continue;
    const Word up = w.prefix(w.size() - 1);
    const bool leaf = std::binary_search(d.tminus.begin(), d.tminus.end(), w);
    out += fmt::format("  \\draw ({:.2f},{:.2f}) -- ({:.2f},{:.2f});\n", xm.at(up),
                       bottom + static_cast<double>(up.size()), xm.at(w),
                       leaf ? leaf_minus_y : bottom + static_cast<double>(w.size()));
  }
  for (std::size_t p = 0; p < d.tplus.size(); ++p) {
    const double x0 = xp.at(d.tplus[p]);
    const double x1 = xm.at(d.tminus[d.tau[p]]);
    out += fmt::format("  \\draw[dashed] ({:.2f},{:.2f}) -- ({:.2f},{:.2f});\n", x0, leaf_plus_y, x1,
                       leaf_minus_y);
    out += fmt::format("  \\node[above] at ({:.2f},{:.2f}) {{${}$}};\n", x0, leaf_plus_y, d.v[p].str());
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

}  // namespace

std::string render(const Diagram& d, const std::string& format) {
  validate(d);
  if (format == "dot") return render_dot(d);
  if (format == "tikz") return render_tikz(d);
  throw UsageError("unknown render format '" + format + "' (expected dot or tikz)");
}

}  // namespace qu2
