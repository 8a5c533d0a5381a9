// Acceptance gate: one PASS/FAIL line per criterion. Exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include <fmt/core.h>

#include "qu2/canrep.hpp"
#include "qu2/endo.hpp"
#include "qu2/parse.hpp"
#include "qu2/suites.hpp"
#include "qu2/table.hpp"
#include "qu2/wgroup.hpp"
#include "support.hpp"

using namespace qu2;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (detail.empty() && secs > budget_s) detail = fmt::format("over budget ({}s)", budget_s);
  const bool pass = detail.empty();
  failures += pass ? 0 : 1;
  std::cout << fmt::format("{} {} {} ({:.2f}s){}", pass ? "PASS" : "FAIL", id, name, secs,
                           pass ? "" : ": " + detail)
            << std::endl;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

std::string level2() {
  const std::map<std::string, std::set<std::string>> expected = {
      {"pure+", {"(2 3)", "(1 3 4 2)"}},     {"pure-", {"(1 2 4 3)", "(1 4)"}},
      {"mixed1:h=0", {"(2 4 3)"}},          {"mixed2:h=0", {"(1 2 3)"}},
      {"inner:id", {"id"}},                 {"inner*:id", {"(1 3)(2 4)"}},
      {"inner:(1 2)", {"(1 4)(2 3)"}},      {"inner*:(1 2)", {"(1 2)(3 4)"}},
  };
  std::map<std::string, std::set<std::string>> found;
  std::size_t pairs = 0;
  for (const Template& t : u_templates(2)) {
    for (const PermUnitary& u : enumerate_extendible(2, t, EnumMode::Brute)) {
      found[t.name].insert(u.cycles());
      ++pairs;
    }
  }
  if (pairs != 10 || found != expected) return fmt::format("{} pairs, classification differs", pairs);
  const Element mixed = parse_element("U^2 P[2] + U^-2 P[1]");
  const Element other = parse_element("U^-2 P[2] + U^2 P[1]");
  const auto c134 = check_extension_detail(PermUnitary::from_cycles(2, "(1 3 4)"), mixed);
  const auto c142 = check_extension_detail(PermUnitary::from_cycles(2, "(1 4 2)"), other);
  if (c134.ext2 || c142.ext2) return "u_134 or u_142 passes ext2";
  if (!check_extension(PermUnitary::from_cycles(2, "(1 2 3)"), mixed)) return "u_123 fails";
  if (!check_extension(PermUnitary::from_cycles(2, "(2 4 3)"), other)) return "u_243 fails";
  return "";
}

std::string appendix() {
  const auto report = verify_table(load_table(std::string(QU2_DATA_DIR) + "/appendix.tsv"));
  return report.summary() == "40/40 verified" ? "" : report.summary();
}

std::string level3() {
  const std::vector<std::string> names = {"pure+", "pure-", "mixed1:h=0", "mixed2:h=0", "mixed1:h=1", "mixed2:h=1"};
  const std::vector<std::size_t> counts = {24, 24, 4, 4, 4, 4};
  std::vector<std::size_t> brute_sizes;
  std::vector<PermUnitary> pure_plus;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const Template t = template_by_name(3, names[i]);
    const auto brute = enumerate_extendible(3, t, EnumMode::Brute);
    const auto constructive = enumerate_extendible(3, t, EnumMode::Constructive);
    if (constructive.size() != counts[i]) return fmt::format("{}: {} constructive", names[i], constructive.size());
    for (const auto& u : constructive) {
      if (std::find(brute.begin(), brute.end(), u) == brute.end()) return names[i] + ": constructive not in brute";
    }
    brute_sizes.push_back(brute.size());
    if (i == 0) pure_plus = brute;
  }
  const auto rows = load_table(std::string(QU2_DATA_DIR) + "/appendix.tsv");
  for (std::size_t i = 0; i < 24; ++i) {
    const PermUnitary u = PermUnitary::from_element(parse_element(rows[i].element), 3);
    if (std::find(pure_plus.begin(), pure_plus.end(), u) == pure_plus.end()) {
      return fmt::format("appendix row {} not in the U^4 brute set", i + 1);
    }
  }
  std::cout << fmt::format("INFO 3 brute-force sizes {} {} {} {} {} {}", brute_sizes[0], brute_sizes[1],
                           brute_sizes[2], brute_sizes[3], brute_sizes[4], brute_sizes[5])
            << std::endl;
  return "";
}

std::string counts() {
  for (const CountCheck& c : count_suite(4, 1000, 20260101)) {
    if (!c.ok()) return to_string(c);
    if (c.k == 4 && c.family.starts_with("pure") && c.checked < 1000) return "pure sample below 1000";
  }
  return "";
}

std::string tower() {
  for (std::size_t k = 2; k <= 5; ++k) {
    const Perm id = identity_perm(std::size_t{1} << (k - 1));
    const Element plus = make_u_p(k, id, 1).element;
    if (!eq(plus, F_tower(k - 1))) return fmt::format("k={}: u_id^+ != F_{}", k, k - 1);
    if (!eq(mul(make_u_p(k, id, -1).element, flip()), plus)) return fmt::format("k={}: u_id^- f != u_id^+", k);
  }
  return "";
}

std::string oracle() {
  testing::Rng rng(6);
  std::size_t agree_true = 0, agree_false = 0;
  for (int i = 0; i < 10000; ++i) {
    const Element a = testing::random_element(rng, 6, 16, 32);
    Element b;
    switch (i % 4) {
      case 0:
      case 1:
        b = testing::rewrite(rng, a);
        break;
      case 2: {
        b = testing::rewrite(rng, a);
        b.add_term(testing::random_monomial(rng, 6, 32), Rational(1, 2));
        break;
      }
      default:
        b = testing::random_element(rng, 6, 16, 32);
    }
    const bool s = eq(a, b);
    if (s != semantic_eq(a, b)) return fmt::format("pair {} disagrees: {} vs {}", i, to_string(a), to_string(b));
    (s ? agree_true : agree_false) += 1;
  }
  if (agree_true == 0 || agree_false == 0) return "degenerate sample";
  return "";
}

std::string w_group() {
  testing::Rng rng(7);
  const Element one = Element::identity();
  for (int i = 0; i < 1000; ++i) {
    const Diagram a = testing::random_diagram(rng, 6, 8);
    const Diagram b = testing::random_diagram(rng, 6, 8);
    const Diagram c = testing::random_diagram(rng, 6, 8);
    const Element ea = to_element(a);
    if (!eq(to_element(group_mul(group_mul(a, b), c)), to_element(group_mul(a, group_mul(b, c)))))
      return fmt::format("associativity fails at {}", i);
    if (!eq(to_element(group_mul(a, Diagram::identity())), ea) ||
        !eq(to_element(group_mul(Diagram::identity(), a)), ea))
      return fmt::format("identity fails at {}", i);
    if (!eq(to_element(group_mul(a, group_inv(a))), one) || !eq(to_element(group_mul(group_inv(a), a)), one))
      return fmt::format("inverse fails at {}", i);
    if (!eq(to_element(group_mul(a, b)), mul(ea, to_element(b)))) return fmt::format("product mismatch at {}", i);
    if (total_charge(to_element(group_mul(a, b))) != total_charge(ea) + total_charge(to_element(b)))
      return fmt::format("charge not additive at {}", i);
    if (total_charge(to_element(reduce(a))) != total_charge(ea) || !eq(to_element(reduce(a)), ea))
      return fmt::format("reduce changes the element at {}", i);
  }
  return "";
}

std::string normalizer() {
  testing::Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const Element w = testing::random_w_element(rng, 7, 6);
    const BdvFactor f = bd_v_factor(w);
    if (!eq(mul(f.bd, f.v), w)) return fmt::format("product differs at {}", i);
    if (!membership(f.bd).in_QT || !is_unitary(f.bd)) return fmt::format("bd factor not in QT at {}", i);
    if (!membership(f.v).in_O2 || !is_unitary(f.v)) return fmt::format("v factor not in O2 at {}", i);
    const PutnamCheck pc = check_putnam(putnam_form(f.bd));
    if (!pc.sums_to_one || !pc.shifted_sums_to_one) return fmt::format("putnam conditions fail at {}", i);
    if (!eq(putnam_sum(putnam_form(f.bd)), f.bd)) return fmt::format("putnam sum differs at {}", i);
  }
  return "";
}

std::string phase() {
  const auto word = parse_generator_word("Uz U Uz*");
  for (long n = 0; n <= 8; ++n) {
    const long den = 1L << n;
    for (long a = 0; a < den; ++a) {
      const DyadicAngle z(Rational(a, den));
      for (long k = -256; k <= 256; ++k) {
        const auto v = phase_apply(z, word, Int(k));
        if (!v || v->index != Int(k + 1) || !(v->phase == z)) return fmt::format("z={}/{} k={}", a, den, k);
      }
    }
  }
  return "";
}

}  // namespace

int main() {
  criterion(1, "level-2 classification", 1, level2);
  criterion(2, "appendix table 40/40", 10, appendix);
  criterion(3, "level-3 brute force contains constructive", 600, level3);
  criterion(4, "count formulas k=2..4", 300, counts);
  criterion(5, "phi tower k=2..5", 60, tower);
  criterion(6, "eq agrees with semantic_eq on 10^4 pairs", 600, oracle);
  criterion(7, "W group laws on 10^3 triples", 600, w_group);
  criterion(8, "normalizer factorization on 10^3 W elements", 600, normalizer);
  criterion(9, "phase gadget", 60, phase);
  try {
    const auto printed = verify_table(load_table(std::string(QU2_DATA_DIR) + "/appendix_as_printed.tsv"));
    std::cout << "INFO table as printed: " << printed.summary() << std::endl;
  } catch (const std::exception& e) {
    std::cout << "INFO table as printed: " << e.what() << std::endl;
  }
  std::cout << (failures == 0 ? "ALL PASS" : fmt::format("{} FAILED", failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
