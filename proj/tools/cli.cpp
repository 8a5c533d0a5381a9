#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "qu2/canrep.hpp"
#include "qu2/element.hpp"
#include "qu2/endo.hpp"
#include "qu2/errors.hpp"
#include "qu2/json_io.hpp"
#include "qu2/parse.hpp"
#include "qu2/suites.hpp"
#include "qu2/table.hpp"
#include "qu2/wgroup.hpp"

namespace qu2::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::optional<std::size_t> depth;
  std::size_t level = 2;
  bool level_given = false;
  std::string templ;
  bool all_templates = false;
  std::string mode = "brute";
  int jobs = 0;
  std::string format = "dot";
  std::string phase = "0";
  std::vector<std::string> pos;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void emit(const json& payload, const std::string& text) {
    if (o_.json) {
      out_ << payload.dump() << "\n";
    } else {
      out_ << text << "\n";
    }
  }

  const std::string& arg(std::size_t i, const char* what) const {
    if (i >= o_.pos.size()) throw UsageError(std::string("missing argument: ") + what);
    return o_.pos[i];
  }

  void expect_args(std::size_t n) const {
    if (o_.pos.size() > n) throw UsageError("unexpected extra argument '" + o_.pos[n] + "'");
  }

  Element element(std::size_t i) const { return parse_element(arg(i, "element expression")); }

  void emit_element(const Element& e) { emit(to_json(e), to_string(e)); }

  void emit_bool(const char* key, bool value) { emit(json{{key, value}}, value ? "true" : "false"); }

  // an element expression, or a diagram in JSON
  Diagram diagram_arg(std::size_t i, bool reduce_expr) const {
    const std::string& text = arg(i, "element expression or diagram JSON");
    if (text.find('{') != std::string::npos) {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("bad diagram JSON: ") + e.what(), e.byte);
      }
      return diagram_from_json(j);
    }
    Diagram d = from_element(parse_element(text));
    return reduce_expr ? reduce(d) : d;
  }

  PermUnitary perm_unitary(std::size_t i) const {
    const std::string& text = arg(i, "permutation unitary");
    const bool is_cycles = !text.empty() && (text[0] == '(' || text == "id");
    if (is_cycles) return PermUnitary::from_cycles(o_.level, text);
    const Element e = parse_element(text);
    return PermUnitary::from_element(e, o_.level_given ? o_.level : std::max<std::size_t>(e.depth(), 1));
  }

  EnumMode mode() const {
    if (o_.mode == "brute") return EnumMode::Brute;
    if (o_.mode == "constructive") return EnumMode::Constructive;
    throw UsageError("unknown mode '" + o_.mode + "' (expected brute or constructive)");
  }

  std::vector<Template> selected_templates() const {
    if (o_.all_templates) return u_templates(o_.level);
    if (o_.templ.empty()) throw UsageError("pass --template NAME|expr or --all-templates");
    return {template_by_name(o_.level, o_.templ)};
  }

  int dispatch(const std::string& verb);

 private:
  const Options& o_;
  std::ostream& out_;
};

json membership_json(const Membership& m) {
  return {{"in_O2", m.in_O2}, {"in_QT", m.in_QT}, {"in_F2", m.in_F2}, {"in_D2", m.in_D2}};
}

std::string index_arg(const std::string& text) {
  // "e_3", "e3" or "3"
  std::string s = text;
  if (s.starts_with("e_")) s = s.substr(2);
  else if (s.starts_with("e")) s = s.substr(1);
  return s;
}

int Runner::dispatch(const std::string& verb) {
  if (verb == "normalize") {
    expect_args(1);
    emit_element(normalize(element(0), o_.depth));
  } else if (verb == "mul") {
    expect_args(2);
    emit_element(normalize(mul(element(0), element(1))));
  } else if (verb == "eq") {
    expect_args(2);
    emit_bool("eq", eq(element(0), element(1)));
  } else if (verb == "adjoint") {
    expect_args(1);
    emit_element(adjoint(element(0)));
  } else if (verb == "unitary") {
    expect_args(1);
    const Element e = element(0);
    const bool w = is_unitary(e);
    const bool alg = is_unitary_algebraic(e);
    emit(json{{"unitary", w}, {"algebraic", alg}}, w ? "true" : "false");
  } else if (verb == "membership") {
    expect_args(1);
    const Membership m = membership(element(0));
    emit(membership_json(m), fmt::format("in_O2={} in_QT={} in_F2={} in_D2={}", m.in_O2, m.in_QT,
                                         m.in_F2, m.in_D2));
  } else if (verb == "putnam") {
    expect_args(1);
    const auto form = putnam_form(element(0));
    const PutnamCheck c = check_putnam(form);
    json terms = json::array();
    std::string text;
    for (const auto& [p, n] : form) {
      terms.push_back({{"projection", to_json(p)}, {"exponent", to_json(n)}});
      text += fmt::format("({}) U^{}\n", to_string(p), n.str());
    }
    text += fmt::format("sum p = 1: {}\nsum Ad(U^-n)(p) = 1: {}", c.sums_to_one, c.shifted_sums_to_one);
    emit(json{{"terms", terms}, {"sums_to_one", c.sums_to_one}, {"shifted_sums_to_one", c.shifted_sums_to_one}},
         text);
  } else if (verb == "factor") {
    expect_args(1);
    const BdvFactor f = bd_v_factor(element(0));
    emit(json{{"bd", to_json(f.bd)}, {"v", to_json(f.v)}},
         "bd = " + to_string(f.bd) + "\nv = " + to_string(f.v));
  } else if (verb == "charge") {
    expect_args(1);
    const Int c = total_charge(element(0));
    emit(json{{"charge", to_json(c)}}, c.str());
  } else if (verb == "diagram") {
    expect_args(1);
    const Diagram d = from_element(element(0));
    emit(to_json(d), to_string(d));
  } else if (verb == "reduce") {
    expect_args(1);
    const Diagram d = reduce(diagram_arg(0, false));
    emit(to_json(d), to_string(d));
  } else if (verb == "render") {
    expect_args(1);
    const std::string text = render(diagram_arg(0, true), o_.format);
    emit(json{{"format", o_.format}, {"text", text}}, text.substr(0, text.size() - 1));
  } else if (verb == "eval") {
    expect_args(2);
    const std::string& what = arg(0, "generator word or element");
    auto n = parse_int(index_arg(arg(1, "basis index")));
    if (!n) throw UsageError("bad basis index '" + o_.pos[1] + "'");
    std::optional<std::vector<GeneratorToken>> word;
    try {
      word = parse_generator_word(what);
    } catch (const UsageError&) {
    }
    if (word) {
      const auto v = phase_apply(DyadicAngle::parse(o_.phase), *word, *n);
      emit(to_json(v), v ? fmt::format("phase {} index {}", to_string(v->phase), v->index.str()) : "zero");
    } else {
      const auto image = apply_basis(parse_element(what), *n);
      std::string text;
      for (const auto& [c, j] : image) text += (text.empty() ? "" : " + ") + to_string(c) + "*e_" + j.str();
      emit(to_json(image), text.empty() ? "zero" : text);
    }
  } else if (verb == "check-ext") {
    expect_args(2);
    const PermUnitary u = perm_unitary(0);
    const ExtensionCheck c = check_extension_detail(u, element(1));
    emit(json{{"extends", c.holds()}, {"ext1", c.ext1}, {"ext2", c.ext2}, {"u", u.cycles()}},
         fmt::format("{} (ext1={} ext2={})", c.holds(), c.ext1, c.ext2));
  } else if (verb == "templates") {
    expect_args(0);
    json list = json::array();
    std::string text;
    for (const Template& t : u_templates(o_.level)) {
      list.push_back({{"name", t.name}, {"u_tilde", to_json(t.u_tilde)}});
      text += t.name + "\t" + to_string(t.u_tilde) + "\n";
    }
    emit(list, text + fmt::format("{} templates", list.size()));
  } else if (verb == "construct") {
    expect_args(0);
    json list = json::array();
    std::string text;
    std::size_t verified = 0;
    for (const Template& t : selected_templates()) {
      for (const PermUnitary& u : enumerate_extendible(o_.level, t, EnumMode::Constructive)) {
        const bool ok = check_extension(u, t.u_tilde);
        verified += ok ? 1 : 0;
        list.push_back({{"template", t.name}, {"u", u.cycles()}, {"element", to_json(u.element)}, {"verified", ok}});
        text += fmt::format("{}\t{}\t{}\t{}\n", t.name, u.cycles(), ok ? "verified" : "FAILED", to_string(u.element));
      }
    }
    emit(json{{"results", list}, {"verified", verified}},
         text + fmt::format("{}/{} verified", verified, list.size()));
  } else if (verb == "enumerate") {
    expect_args(0);
    const EnumMode m = mode();
    json list = json::array();
    std::string text;
    for (const Template& t : selected_templates()) {
      for (const PermUnitary& u : enumerate_extendible(o_.level, t, m, o_.jobs)) {
        list.push_back({{"template", t.name}, {"u", u.cycles()}});
        text += t.name + "\t" + u.cycles() + "\n";
      }
    }
    emit(json{{"results", list}, {"count", list.size()}}, text + fmt::format("{} results", list.size()));
  } else if (verb == "probe") {
    expect_args(1);
    const PermUnitary u = perm_unitary(0);
    const ProbeResult r = automorphism_probe(u, o_.depth.value_or(4));
    if (r.stabilized) {
      emit(json{{"status", "stabilized"}, {"stabilized_at", r.stabilized_at}, {"witness", to_json(r.witness)}},
           fmt::format("stabilized at {}: witness {}", r.stabilized_at, to_string(r.witness)));
    } else {
      emit(json{{"status", "inconclusive"}}, "inconclusive");
    }
  } else if (verb == "verify-table") {
    expect_args(1);
    std::string path;
    if (!o_.pos.empty()) {
      path = o_.pos[0];
    } else if (const char* env = std::getenv("QU2_TABLE")) {
      path = env;
    } else {
      throw UsageError("verify-table needs a table path or QU2_TABLE");
    }
    const TableReport report = verify_table(load_table(path));
    json rows = json::array();
    std::string text;
    for (const RowResult& r : report.rows) {
      rows.push_back({{"line", r.row.line}, {"cycle", r.row.cycle}, {"verified", r.verified}, {"reason", r.reason}});
      text += fmt::format("line {}\t{}\t{}\n", r.row.line, r.row.cycle,
                          r.verified ? "verified" : "FAILED: " + r.reason);
    }
    if (o_.json) {
      out_ << json{{"rows", rows}}.dump() << "\n";
      out_ << json{{"summary", report.summary()}, {"verified", report.verified}, {"total", report.rows.size()}}.dump()
           << "\n";
    } else {
      out_ << text << report.summary() << "\n";
    }
  } else if (verb == "verify-counts") {
    expect_args(0);
    const std::size_t max_k = o_.level_given ? o_.level : 4;
    const auto checks = count_suite(max_k, 1000, 20260101);
    std::size_t ok = 0;
    json rows = json::array();
    std::string text;
    for (const CountCheck& c : checks) {
      ok += c.ok() ? 1 : 0;
      rows.push_back({{"k", c.k}, {"family", c.family}, {"expected", c.expected}, {"distinct", c.distinct},
                      {"checked", c.checked}, {"extend", c.extend}, {"ok", c.ok()}});
      text += to_string(c) + "\n";
    }
    const std::string summary = fmt::format("{}/{} counts ok", ok, checks.size());
    if (o_.json) {
      out_ << json{{"rows", rows}}.dump() << "\n";
      out_ << json{{"summary", summary}, {"ok", ok}, {"total", checks.size()}}.dump() << "\n";
    } else {
      out_ << text << summary << "\n";
    }
  } else {
    throw UsageError("unknown command '" + verb + "'");
  }
  return 0;
}

const std::vector<std::string> kVerbs = {
    "normalize", "mul",    "eq",     "adjoint",   "unitary",   "membership", "putnam",
    "factor",    "charge", "diagram", "render",   "reduce",    "eval",       "check-ext",
    "templates", "construct", "enumerate", "probe", "verify-table", "verify-counts"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qu2: exact computations in the 2-adic ring C*-algebra", "qu2"};
  Options o;
  std::string verb;
  std::size_t depth = 0;
  app.add_option("command", verb, "one of: " + fmt::format("{}", fmt::join(kVerbs, ", ")))->required();
  app.add_option("args", o.pos, "command arguments");
  app.add_flag("--json", o.json, "machine-readable output");
  auto* depth_opt = app.add_option("--depth", depth, "normalization depth, or probe depth");
  auto* level_opt = app.add_option("--level", o.level, "level k of permutation unitaries");
  app.add_option("--template", o.templ, "template name or U~ expression");
  app.add_flag("--all-templates", o.all_templates, "use the whole template menu");
  app.add_option("--mode", o.mode, "brute or constructive");
  app.add_option("--jobs", o.jobs, "worker threads for enumeration");
  app.add_option("--format", o.format, "dot or tikz");
  app.add_option("--phase", o.phase, "angle a/2^n for Uz in eval");
  app.positionals_at_end(false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (*depth_opt) o.depth = depth;
  o.level_given = static_cast<bool>(*level_opt);

  try {
    Runner runner(o, out);
    return runner.dispatch(verb);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qu2::cli
