#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hilbtan/conjecture.hpp"
#include "hilbtan/error.hpp"
#include "hilbtan/families.hpp"
#include "hilbtan/hull.hpp"
#include "hilbtan/search.hpp"
#include "hilbtan/serialize.hpp"
#include "hilbtan/staircase.hpp"
#include "hilbtan/tangent.hpp"

namespace hilbtan::cli {

namespace {

/// Bad flag values found after parsing (environment fallbacks).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
T from_env(const char* name, const std::optional<T>& flag, T fallback) {
  if (flag) return *flag;
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  std::istringstream in(raw);
  T value{};
  if (!(in >> value) || !in.eof()) throw UsageError(std::string("invalid value for ") + name + ": " + raw);
  return value;
}

std::optional<std::string> dir_from_env(const std::optional<std::string>& flag) {
  if (flag) return flag;
  const char* raw = std::getenv("STAIRCASE_CACHE_DIR");
  if (!raw || !*raw) return std::nullopt;
  return std::string(raw);
}

void require_three(std::size_t nvars, const std::string& command) {
  if (nvars != 3) throw InvalidArgument(command + " works in 3 variables only (got --nvars " + std::to_string(nvars) + ")");
}

std::string triple(const std::array<Exponent, 3>& m) {
  return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")";
}

std::string weight_text(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::string swap_text(const std::vector<std::pair<std::size_t, std::size_t>>& swaps) {
  static constexpr const char* names[] = {"x", "y", "z"};
  if (swaps.empty()) return "none";
  std::string s;
  for (const auto& [i, j] : swaps) s += (s.empty() ? "" : " ") + std::string(names[i]) + "<->" + names[j];
  return s;
}

constexpr const char* kConditionOrder[] = {"zero_dimensional", "borel", "necessary", "spanned", "a",  "b",
                                           "c",  "d",   "e",   "a'",  "b'", "c'", "d'", "e'",
                                           "a''", "b''", "c''", "d''", "e''"};

/// Options shared by every subcommand.
struct Common {
  bool json = false;
  std::size_t nvars = 3;
};

class Runner {
 public:
  Runner(std::ostream& out, const Common& common) : out_(out), common_(common) {}

  void emit(const std::string& command, Json body) const {
    Json doc{{"schema", kJsonSchema}, {"command", command}, {"nvars", common_.nvars}};
    for (auto& [key, value] : body.items()) doc[key] = std::move(value);
    out_ << doc.dump(2) << '\n';
  }

  void tangent(const std::string& text, std::optional<std::size_t> cap_flag, bool per_weight) const {
    const auto ideal = parse_ideal(text, common_.nvars);
    TangentOptions options;
    options.colength_cap = from_env<std::size_t>("STAIRCASE_CAP", cap_flag, kDefaultColengthCap);
    options.per_weight = per_weight;
    const auto n = colength(ideal, options.colength_cap);
    const auto result = tangent_dimension(ideal, options);
    if (common_.json) {
      Json body{{"ideal", render(ideal)}, {"colength", n}, {"tangent", result.dimension}};
      if (result.per_weight) {
        Json pieces = Json::array();
        for (const auto& [w, d] : *result.per_weight) pieces.push_back(Json{{"weight", w}, {"dim", d}});
        body["per_weight"] = std::move(pieces);
      }
      emit("tangent", std::move(body));
      return;
    }
    out_ << "ideal     " << render(ideal) << '\n'
         << "colength  " << n << '\n'
         << "tangent   " << result.dimension << '\n';
    if (result.per_weight) {
      for (const auto& [w, d] : *result.per_weight) out_ << "  weight " << weight_text(w) << "  " << d << '\n';
    }
  }

  void colength_of(const std::string& text, std::optional<std::size_t> cap_flag, bool list) const {
    const auto ideal = parse_ideal(text, common_.nvars);
    const auto cap = from_env<std::size_t>("STAIRCASE_CAP", cap_flag, kDefaultColengthCap);
    const Staircase stairs(ideal, cap);
    if (common_.json) {
      Json body{{"ideal", render(ideal)}, {"colength", stairs.size()}};
      if (list) {
        Json members = Json::array();
        for (const auto& m : stairs.members()) members.push_back(to_json(m));
        body["standard_monomials"] = std::move(members);
      }
      emit("colength", std::move(body));
      return;
    }
    out_ << stairs.size() << '\n';
    if (list) {
      for (const auto& m : stairs.members()) out_ << "  " << render_monomial(m) << '\n';
    }
  }

  void necessary(const std::string& text) const {
    const auto ideal = parse_ideal(text, common_.nvars);
    const auto report = check_necessary(ideal);
    if (common_.json) {
      Json body{{"ideal", render(ideal)}};
      body.update(to_json(report));
      emit("check necessary", std::move(body));
      return;
    }
    out_ << "colength  " << report.n << '\n'
         << "k         " << report.k << '\n'
         << "m1        " << report.m1 << '\n'
         << "necessary condition m1 = k: " << (report.passes ? "holds" : "fails") << '\n';
  }

  void classify(const std::string& text, const ClassifyOptions& options) const {
    require_three(common_.nvars, "classify");
    const auto ideal = parse_ideal(text, 3);
    const auto report = classify_type(ideal, options);
    if (common_.json) {
      Json body{{"ideal", render(ideal)}};
      body.update(to_json(report));
      emit("classify", std::move(body));
      return;
    }
    out_ << "ideal     " << render(ideal) << '\n'
         << "m         " << triple(report.m) << "  n " << report.n << "  k " << report.k << '\n'
         << "label     " << report.subtype << '\n'
         << "symmetry  " << swap_text(report.symmetric_swaps) << '\n';
    for (const char* name : kConditionOrder) {
      const auto it = report.conditions.find(name);
      if (it == report.conditions.end()) continue;
      const auto& c = it->second;
      out_ << "  " << std::left << std::setw(17) << name << std::setw(6)
           << (c.evaluated ? (c.passed ? "pass" : "fail") : "skip") << c.detail << '\n';
    }
  }

  void family(const std::string& kind_name, std::int64_t param, const std::string& emit_as) const {
    require_three(common_.nvars, "family");
    const auto tag = parse_family_tag(kind_name);
    if (!tag) throw UsageError("unknown family kind '" + kind_name + "'");
    const FamilyKind kind{*tag, param};
    const auto ideal = family_ideal(kind);
    if (emit_as == "off") {
      out_ << export_off(convex_hull(ideal.generators()));
      return;
    }
    if (emit_as == "json" || common_.json) {
      Json body{{"kind", std::string(family_name(kind.tag))},
                {"k", param},
                {"ideal", render(ideal)},
                {"colength", colength(ideal)},
                {"predicted_colength", predicted_colength(kind)},
                {"tangent", tangent_dimension(ideal).dimension},
                {"predicted_tangent", predicted_tangent(kind)},
                {"claimed_type", std::string(family_claimed_type(kind.tag))}};
      emit("family", std::move(body));
      return;
    }
    out_ << render(ideal) << '\n';
  }

  void hull(const std::string& text, const std::string& emit_as) const {
    require_three(common_.nvars, "hull");
    const auto ideal = parse_ideal(text, 3);
    const auto h = convex_hull(ideal.generators());
    if (emit_as == "off") {
      out_ << export_off(h);
      return;
    }
    std::optional<std::array<std::size_t, 3>> counts;
    if (h.dim >= 2) {
      counts = std::array<std::size_t, 3>{boundary_lattice_points(h, Side::lower).size(),
                                          boundary_lattice_points(h, Side::upper).size(),
                                          boundary_lattice_points(h, Side::both).size()};
    }
    if (common_.json) {
      Json body{{"ideal", render(ideal)}};
      body.update(to_json(h));
      if (counts) body["lattice_points"] = Json{{"lower", (*counts)[0]}, {"upper", (*counts)[1]}, {"both", (*counts)[2]}};
      emit("hull", std::move(body));
      return;
    }
    out_ << "dim       " << h.dim << '\n'
         << "vertices  " << h.vertices.size() << '\n'
         << "facets    " << h.facets.size() << '\n';
    if (counts) {
      out_ << "lattice points  lower " << (*counts)[0] << "  upper " << (*counts)[1] << "  both " << (*counts)[2]
           << '\n';
    }
  }

  void search(std::int64_t n, const SearchOptions& options, bool timing) const {
    require_three(common_.nvars, "search");
    const auto result = max_tangent(n, options);
    if (common_.json) {
      emit("search", to_json(result, timing));
      return;
    }
    out_ << "n " << result.n << "  max T " << result.max_tangent << "  scanned " << result.ideals_scanned
         << (result.borel_only ? " Borel-fixed ideals" : " ideals") << '\n';
    if (timing) out_ << "elapsed " << result.elapsed_ms << " ms, cache hits " << result.cache_hits << '\n';
    out_ << "argmax (" << result.argmax.size() << "):\n";
    for (const auto& ideal : result.argmax) out_ << "  " << render(ideal) << '\n';
  }

  void table(std::int64_t n_max, const SearchOptions& options, bool timing) const {
    require_three(common_.nvars, "table");
    const auto rows = reproduce_table(n_max, options);
    if (common_.json) {
      Json list = Json::array();
      for (const auto& row : rows) list.push_back(to_json(row, timing));
      emit("table", Json{{"max", n_max}, {"rows", std::move(list)}});
      return;
    }
    for (const auto& row : rows) {
      std::vector<std::string> labels = row.type_labels;
      std::sort(labels.begin(), labels.end());
      labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
      std::string joined;
      for (const auto& l : labels) joined += (joined.empty() ? "" : ",") + l;
      out_ << std::right << std::setw(3) << row.n << "  T " << std::setw(4) << row.computed_max << "  argmax "
           << std::setw(3) << row.argmax.size() << "  " << (row.match ? "match" : "MISMATCH") << "  [" << joined
           << "]  " << row.detail;
      if (timing) out_ << "  " << row.elapsed_ms << " ms";
      out_ << '\n';
    }
  }

  void count(std::int64_t n) const {
    require_three(common_.nvars, "count");
    const auto c = count_ideals(n);
    if (common_.json) {
      emit("count", Json{{"n", n}, {"count", c}});
      return;
    }
    out_ << c << '\n';
  }

 private:
  std::ostream& out_;
  const Common& common_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tangent spaces to Hilbert schemes of points at monomial ideals", "hilbtan"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;
  app.add_flag("--json", common.json, "Machine-readable JSON output (schema 1)");
  app.add_option("--nvars", common.nvars, "Number of variables")->check(CLI::Range(1, 64))->capture_default_str();

  std::string ideal_text;
  std::optional<std::size_t> cap_flag;
  std::optional<std::int64_t> search_cap_flag;
  std::optional<std::uint64_t> budget_flag;
  std::optional<std::string> cache_flag;
  bool per_weight = false;
  bool list = false;
  bool evaluate_all = false;
  bool any_colength = false;
  bool borel_only = false;
  bool timing = false;
  std::size_t workers = 1;
  std::string kind;
  std::int64_t param = 0;
  std::int64_t n = 0;
  std::string emit_as;

  auto* tangent = app.add_subcommand("tangent", "Tangent dimension T(I) and colength");
  tangent->add_option("ideal", ideal_text, "Generators, e.g. \"x^2,y^2,z^4,x*y,x*z^2,y*z^2\"")->required();
  tangent->add_option("--cap", cap_flag, "Colength cap (env STAIRCASE_CAP, default 512)");
  tangent->add_flag("--per-weight", per_weight, "List the nonzero graded pieces");

  auto* col = app.add_subcommand("colength", "Number of standard monomials");
  col->add_option("ideal", ideal_text, "Generators")->required();
  col->add_option("--cap", cap_flag, "Colength cap (env STAIRCASE_CAP, default 512)");
  col->add_flag("--list", list, "Also list the standard monomials");

  auto* check = app.add_subcommand("check", "Mechanical checks");
  check->require_subcommand(1);
  auto* necessary = check->add_subcommand("necessary", "Is m1 equal to the colength bracket k?");
  necessary->add_option("ideal", ideal_text, "Generators")->required();

  auto* classify = app.add_subcommand("classify", "Hull criterion type I, II, III or none");
  classify->add_option("ideal", ideal_text, "Generators")->required();
  classify->add_option("--budget", budget_flag, "Search nodes per maximality check (env STAIRCASE_BUDGET)");
  classify->add_flag("--evaluate-all", evaluate_all, "Run maximality checks for failing types too");
  classify->add_flag("--any-colength", any_colength, "Also report maxima over every colength");

  auto* family = app.add_subcommand("family", "Ideals of the explicit families");
  family->add_option("--kind", kind, "MK, T1..T7, STAR (*), DOUBLESTAR (**)")->required();
  family->add_option("--k", param, "Family parameter (j for STAR)")->required();
  family->add_option("--emit", emit_as, "ideal, json or off")
      ->check(CLI::IsMember({"ideal", "json", "off"}))
      ->default_val("ideal");

  auto* hull = app.add_subcommand("hull", "Convex hull of the generator exponents");
  hull->add_option("ideal", ideal_text, "Generators")->required();
  hull->add_option("--emit", emit_as, "summary or off")->check(CLI::IsMember({"summary", "off"}))->default_val("summary");

  auto add_search_flags = [&](CLI::App* sub) {
    sub->add_option("--workers", workers, "Worker threads (0 = all cores)")->capture_default_str();
    sub->add_option("--cache", cache_flag, "JSONL cache directory (env STAIRCASE_CACHE_DIR)");
    sub->add_option("--cap", search_cap_flag, "Colength cap, at most 40 (env STAIRCASE_CAP, default 30)");
    sub->add_flag("--timing", timing, "Report elapsed times");
  };
  auto* search = app.add_subcommand("search", "Certified maximum of T over all ideals of colength n");
  search->add_option("--n", n, "Colength")->required();
  search->add_flag("--borel-only", borel_only, "Only Borel-fixed ideals");
  add_search_flags(search);

  auto* table = app.add_subcommand("table", "Reproduce the colength table up to --max");
  table->add_option("--max", n, "Largest colength")->required();
  add_search_flags(table);

  auto* count = app.add_subcommand("count", "Number of monomial ideals of colength n (plane partitions)");
  count->add_option("--n", n, "Colength")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  const Runner runner(out, common);
  auto search_options = [&] {
    SearchOptions options;
    options.borel_only = borel_only;
    options.workers = workers;
    options.cache_dir = dir_from_env(cache_flag);
    options.cap = from_env<std::int64_t>("STAIRCASE_CAP", search_cap_flag, kDefaultSearchCap);
    return options;
  };
  try {
    if (tangent->parsed()) {
      runner.tangent(ideal_text, cap_flag, per_weight);
    } else if (col->parsed()) {
      runner.colength_of(ideal_text, cap_flag, list);
    } else if (necessary->parsed()) {
      runner.necessary(ideal_text);
    } else if (classify->parsed()) {
      ClassifyOptions options;
      options.budget = from_env<std::uint64_t>("STAIRCASE_BUDGET", budget_flag, kDefaultSearchBudget);
      options.evaluate_all = evaluate_all;
      options.any_colength = any_colength;
      runner.classify(ideal_text, options);
    } else if (family->parsed()) {
      runner.family(kind, param, emit_as);
    } else if (hull->parsed()) {
      runner.hull(ideal_text, emit_as);
    } else if (search->parsed()) {
      runner.search(n, search_options(), timing);
    } else if (table->parsed()) {
      runner.table(n, search_options(), timing);
    } else if (count->parsed()) {
      runner.count(n);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace hilbtan::cli
