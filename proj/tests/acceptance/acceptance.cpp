/// Acceptance run: one PASS/FAIL line per criterion.
///
/// Exit status is 0 when every criterion passes or fails only in a
/// documented, reproducible way (see kKnownRed); --strict turns any FAIL
/// into a nonzero exit. --extended N adds a full table reproduction up to
/// colength N.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hilbtan/conjecture.hpp"
#include "hilbtan/families.hpp"
#include "hilbtan/search.hpp"
#include "hilbtan/tangent.hpp"
#include "worked_examples.hpp"

namespace {

using namespace hilbtan;

struct Verdict {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

/// Failures that are reproducible and explained: criterion -> the exact
/// failure strings expected. Anything else is a regression.
const std::map<int, std::vector<std::string>> kKnownRed{
    {2, {"N: computed 66, printed 78"}},
};

MonomialIdeal example_ideal(const std::string& name) { return parse_ideal(fixtures::example(name).ideal, 3); }

Verdict power_ideals() {
  Verdict v;
  const std::vector<std::int64_t> expected{3, 18, 60, 150, 315, 588};
  for (Exponent k = 1; k <= 6; ++k) {
    const auto t = tangent_dimension(power_ideal(3, k)).dimension;
    const auto formula = binomial(k + 1, 2) * binomial(k + 2, 2);
    v.require(t == formula && t == expected[static_cast<std::size_t>(k - 1)],
              "m^" + std::to_string(k) + ": computed " + std::to_string(t) + ", formula " + std::to_string(formula));
  }
  v.summary = "T(m^k) = C(k+1,2) C(k+2,2) for k = 1..6";
  return v;
}

Verdict printed_examples() {
  Verdict v;
  std::size_t checked = 0;
  for (const char* name : {"L", "F", "U", "V", "W", "O", "G", "H", "M", "N"}) {
    const auto& e = fixtures::example(name);
    const auto t = tangent_dimension(parse_ideal(e.ideal, 3)).dimension;
    ++checked;
    v.require(t == *e.printed_tangent,
              std::string(name) + ": computed " + std::to_string(t) + ", printed " + std::to_string(*e.printed_tangent));
  }
  v.summary = std::to_string(checked) + " printed tangent dimensions";
  return v;
}

Verdict fat_points() {
  Verdict v;
  std::size_t checked = 0;
  for (Exponent a = 1; a <= 3; ++a)
    for (Exponent b = 1; b <= 3; ++b)
      for (Exponent c = 1; c <= 3; ++c)
        for (Exponent k = 1; k <= 3; ++k) {
          const std::array<Exponent, 3> g{a, b, c};
          if (fat_point_colength(g, k) > 60) continue;
          const auto ideal = fat_point_ideal(g, k);
          const auto n = static_cast<std::int64_t>(colength(ideal));
          const auto t = tangent_dimension(ideal).dimension;
          ++checked;
          std::ostringstream id;
          id << "g=(" << a << "," << b << "," << c << ") k=" << k;
          v.require(n == fat_point_colength(g, k), id.str() + ": colength " + std::to_string(n));
          v.require(t == fat_point_tangent(g, k), id.str() + ": tangent " + std::to_string(t));
        }
  v.summary = std::to_string(checked) + " fat-point ideals";
  return v;
}

Verdict certified_maxima() {
  Verdict v;
  const auto rows = reproduce_table(16);
  for (const auto& row : rows) v.require(row.match, "row " + std::to_string(row.n) + ": " + row.detail);
  const auto& last = rows.back();
  v.require(last.computed_max == 88, "max T at n=16 is " + std::to_string(last.computed_max));
  const auto n_ideal = example_ideal("N");
  const auto t_n = tangent_dimension(n_ideal).dimension;
  const bool in_argmax = std::find(last.argmax.begin(), last.argmax.end(), n_ideal) != last.argmax.end();
  v.require(t_n < last.computed_max && !in_argmax, "N is not strictly below the maximum");
  v.summary = "table rows 1..16 reproduced, max T(16) = " + std::to_string(last.computed_max) + ", T(N) = " +
              std::to_string(t_n) + " < " + std::to_string(last.computed_max);
  return v;
}

Verdict classifier() {
  Verdict v;
  const std::vector<std::pair<const char*, const char*>> expected{
      {"Sturmfels", "I(a)(ii)"}, {"F", "I(a)(ii)"},     {"U", "I(a)(ii)"},      {"L", "I(a)(iii)"},
      {"V", "II"},               {"W", "III(a'')(i)"}, {"O", "III(a'')(ii)"}, {"M", "none"},
      {"G", "none"},             {"H", "none"},
  };
  for (const auto& [name, label] : expected) {
    const auto got = classify_type(example_ideal(name)).subtype;
    v.require(got == label, std::string(name) + ": " + got + ", expected " + label);
  }
  v.summary = std::to_string(expected.size()) + " labels";
  return v;
}

Verdict family_formulas() {
  Verdict v;
  std::size_t checked = 0;
  for (FamilyTag tag : kAllFamilyTags) {
    for (std::int64_t k = family_min_param(tag);; ++k) {
      const FamilyKind kind{tag, k};
      if (predicted_colength(kind) > 40) break;
      const auto ideal = family_ideal(kind);
      const auto n = static_cast<std::int64_t>(colength(ideal));
      const auto t = tangent_dimension(ideal).dimension;
      ++checked;
      const std::string id = std::string(family_name(tag)) + " k=" + std::to_string(k);
      v.require(n == predicted_colength(kind), id + ": colength " + std::to_string(n));
      v.require(t == predicted_tangent(kind),
                id + ": tangent " + std::to_string(t) + ", predicted " + std::to_string(predicted_tangent(kind)));
    }
  }
  v.summary = std::to_string(checked) + " family members with colength <= 40";
  return v;
}

Verdict enumeration() {
  Verdict v;
  std::uint64_t total = 0;
  for (std::int64_t n = 1; n <= 16; ++n) {
    std::set<std::string> seen;
    std::uint64_t visited = 0;
    bool duplicate = false;
    enumerate_ideals(n, [&](const MonomialIdeal& ideal) {
      ++visited;
      duplicate |= !seen.insert(render(ideal)).second;
      return true;
    });
    total += visited;
    v.require(visited == count_ideals(n), "n=" + std::to_string(n) + ": " + std::to_string(visited) + " ideals");
    v.require(!duplicate, "n=" + std::to_string(n) + ": duplicate ideal");
    std::vector<std::size_t> perm{0, 1, 2};
    bool closed = true;
    do {
      for (const auto& text : seen) closed &= seen.count(render(permute_variables(parse_ideal(text, 3), perm))) > 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    v.require(closed, "n=" + std::to_string(n) + ": not closed under permutations");
  }
  v.summary = std::to_string(total) + " ideals, n = 1..16";
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::uint64_t exhaustive = 0;
  for (std::int64_t n = 1; n <= 10; ++n) {
    enumerate_ideals(n, [&](const MonomialIdeal& ideal) {
      ++exhaustive;
      const auto graded = tangent_dimension(ideal).dimension;
      const auto dense = tangent_dimension_dense(ideal);
      v.require(graded == dense, render(ideal) + ": graded " + std::to_string(graded) + ", dense " +
                                     std::to_string(dense));
      return true;
    });
  }
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<std::int64_t> pick_n(11, 20);
  const std::size_t samples = 200;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto n = pick_n(rng);
    std::uniform_int_distribution<std::uint64_t> pick(0, count_ideals(n) - 1);
    const auto target = pick(rng);
    std::uint64_t index = 0;
    enumerate_ideals(n, [&](const MonomialIdeal& ideal) {
      if (index++ != target) return true;
      const auto graded = tangent_dimension(ideal).dimension;
      const auto dense = tangent_dimension_dense(ideal);
      v.require(graded == dense, render(ideal) + ": graded " + std::to_string(graded) + ", dense " +
                                     std::to_string(dense));
      return false;
    });
  }
  v.summary = std::to_string(exhaustive) + " ideals with colength <= 10 and " + std::to_string(samples) +
              " random ideals with colength 11..20";
  return v;
}

Verdict boundary_colength() {
  Verdict v;
  std::vector<std::string> found;
  std::uint64_t borel = 0;
  enumerate_ideals(10, [&](const MonomialIdeal& ideal) {
    if (!is_borel_fixed(ideal)) return true;
    ++borel;
    if (ideal.pure_powers()[0] == 3) found.push_back(render(ideal));
    return true;
  });
  v.require(found == std::vector<std::string>{render(power_ideal(3, 3))},
            std::to_string(found.size()) + " Borel-fixed ideals with m1 = 3");
  v.summary = std::to_string(borel) + " Borel-fixed ideals of colength 10; only m^3 has m1 = 3";
  return v;
}

/// Opt-in: table rows 1..n_max, resumable through STAIRCASE_CACHE_DIR.
Verdict extended_table(std::int64_t n_max) {
  Verdict v;
  SearchOptions options;
  options.cap = n_max;
  if (const char* dir = std::getenv("STAIRCASE_CACHE_DIR"); dir && *dir) options.cache_dir = dir;
  const auto rows = reproduce_table(n_max, options);
  for (const auto& row : rows) {
    std::cout << "    row " << row.n << ": max T " << row.computed_max << ", " << row.argmax.size() << " maximizers, "
              << (row.match ? "match" : "MISMATCH") << " (" << row.elapsed_ms << " ms)\n";
    v.require(row.match, "row " + std::to_string(row.n) + ": " + row.detail);
  }
  v.summary = "table rows 1.." + std::to_string(n_max);
  return v;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  std::int64_t extended = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--strict") == 0) {
      strict = true;
    } else if (std::strcmp(argv[i], "--extended") == 0 && i + 1 < argc) {
      extended = std::atoll(argv[++i]);
    } else {
      std::cerr << "usage: hilbtan_acceptance [--strict] [--extended N]\n";
      return 2;
    }
  }
  if (extended < 0 || extended > kHardSearchCap) {
    std::cerr << "--extended must lie in 1.." << kHardSearchCap << "\n";
    return 2;
  }
  const std::vector<Criterion> criteria{
      {1, "power ideals", power_ideals},
      {2, "printed examples", printed_examples},
      {3, "fat points", fat_points},
      {4, "certified maxima", certified_maxima},
      {5, "classifier", classifier},
      {6, "family formulas", family_formulas},
      {7, "enumeration", enumeration},
      {8, "oracle equivalence", oracle_equivalence},
      {9, "boundary colength", boundary_colength},
  };
  auto all = criteria;
  if (extended > 0) all.push_back({10, "extended table", [extended] { return extended_table(extended); }});
  int unexpected = 0;
  int red = 0;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << c.id << " " << (v.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << v.summary
              << " (" << ms << " ms)\n";
    for (const auto& f : v.failures) std::cout << "    " << f << '\n';
    if (v.pass) continue;
    ++red;
    const auto known = kKnownRed.find(c.id);
    if (known != kKnownRed.end() && known->second == v.failures) {
      std::cout << "    known: reproducible and documented\n";
    } else {
      ++unexpected;
    }
  }
  std::cout << (static_cast<int>(all.size()) - red) << "/" << all.size() << " criteria pass";
  if (red > 0) std::cout << ", " << (red - unexpected) << " known red, " << unexpected << " unexpected";
  std::cout << '\n';
  if (unexpected > 0) return 1;
  return strict && red > 0 ? 1 : 0;
}
