#include "hilbtan/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "hilbtan/error.hpp"

namespace hilbtan {

namespace {

void check_nonnegative(std::span<const Exponent> e) {
  for (Exponent v : e) {
    if (v < 0) throw InvalidArgument("exponent vectors must be nonnegative");
  }
}

}  // namespace

ExponentVector::ExponentVector(std::initializer_list<Exponent> e) : e_(e) {
  check_nonnegative(e_);
}

ExponentVector::ExponentVector(std::vector<Exponent> e) : e_(std::move(e)) {
  check_nonnegative(e_);
}

std::int64_t ExponentVector::degree() const noexcept {
  std::int64_t d = 0;
  for (Exponent v : e_) d += v;
  return d;
}

std::size_t ExponentVector::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(e_.begin(), e_.end(), [](Exponent v) { return v > 0; }));
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::with(std::size_t i, Exponent value) const {
  ExponentVector copy = *this;
  if (value < 0) throw InvalidArgument("exponent vectors must be nonnegative");
  copy.e_.at(i) = value;
  return copy;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("lcm of vectors of different length");
  std::vector<Exponent> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return ExponentVector(std::move(out));
}

bool canonical_less(const ExponentVector& a, const ExponentVector& b) noexcept {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  // Same degree: the lexicographically larger monomial comes first.
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> generators)
    : nvars_(nvars) {
  if (nvars == 0) throw InvalidArgument("an ideal needs at least one variable");
  if (generators.empty()) throw InvalidArgument("empty generator list");
  for (const auto& g : generators) {
    if (g.size() != nvars) {
      throw InvalidArgument("generator has " + std::to_string(g.size()) +
                            " entries, expected " + std::to_string(nvars));
    }
  }
  // After sorting by degree a vector can only be divisible by earlier ones.
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                       [&](const ExponentVector& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

bool MonomialIdeal::contains(const ExponentVector& m) const noexcept {
  return contains(m.values());
}

bool MonomialIdeal::contains(std::span<const Exponent> m) const noexcept {
  if (m.size() != nvars_) return false;
  for (const auto& g : gens_) {
    bool divides = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (g[i] > m[i]) {
        divides = false;
        break;
      }
    }
    if (divides) return true;
  }
  return false;
}

std::optional<Exponent> MonomialIdeal::pure_power(std::size_t var) const noexcept {
  for (const auto& g : gens_) {
    if (g.support_size() == 1 && g[var] > 0) return g[var];
  }
  return std::nullopt;
}

std::vector<Exponent> MonomialIdeal::pure_powers() const {
  std::vector<Exponent> m(nvars_);
  for (std::size_t v = 0; v < nvars_; ++v) {
    auto p = pure_power(v);
    if (!p) throw NotZeroDimensional();
    m[v] = *p;
  }
  return m;
}

MonomialIdeal minimalize(std::span<const ExponentVector> generators) {
  if (generators.empty()) throw InvalidArgument("empty generator list");
  return MonomialIdeal(generators.front().size(),
                       std::vector<ExponentVector>(generators.begin(), generators.end()));
}

namespace {

class IdealParser {
 public:
  IdealParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  MonomialIdeal parse() {
    if (nvars_ == 0) throw InvalidArgument("nvars must be positive");
    std::vector<ExponentVector> gens;
    skip_space();
    if (at_end()) throw ParseError("empty generator list", pos_);
    while (true) {
      gens.push_back(term());
      skip_space();
      if (at_end()) break;
      if (text_[pos_] != ',') throw ParseError("expected ',' or end of input", pos_);
      ++pos_;
    }
    return MonomialIdeal(nvars_, std::move(gens));
  }

 private:
  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  ExponentVector term() {
    std::vector<Exponent> e(nvars_, 0);
    skip_space();
    factor(e);
    while (true) {
      skip_space();
      if (at_end() || text_[pos_] == ',') break;
      if (text_[pos_] == '*') {
        ++pos_;
        skip_space();
      }
      factor(e);
    }
    return ExponentVector(std::move(e));
  }

  void factor(std::vector<Exponent>& e) {
    const std::size_t start = pos_;
    const std::size_t var = variable();
    skip_space();
    std::int64_t power = 1;
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      power = positive_integer();
    }
    const std::int64_t total = static_cast<std::int64_t>(e[var]) + power;
    if (total > std::numeric_limits<Exponent>::max()) {
      throw ParseError("exponent overflow", start);
    }
    e[var] = static_cast<Exponent>(total);
  }

  std::size_t variable() {
    if (at_end()) throw ParseError("expected a variable", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if ((c == 'y' && nvars_ >= 2 && nvars_ <= 3) || (c == 'z' && nvars_ == 3)) {
      ++pos_;
      return c == 'y' ? 1 : 2;
    }
    if (c != 'x') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    ++pos_;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t index = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + static_cast<std::size_t>(text_[pos_] - '0');
        if (index > nvars_) throw ParseError("variable index out of range", start);
        ++pos_;
      }
      if (index == 0) throw ParseError("variable index out of range", start);
      return index - 1;
    }
    if (nvars_ > 3) throw ParseError("expected x1..x" + std::to_string(nvars_), start);
    return 0;
  }

  std::int64_t positive_integer() {
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<Exponent>::max()) {
        throw ParseError("exponent overflow", start);
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a positive integer exponent", pos_);
    if (value == 0) throw ParseError("exponent must be positive", start);
    return value;
  }
};

std::string variable_name(std::size_t nvars, std::size_t v) {
  if (nvars <= 3) return std::string(1, "xyz"[v]);
  return "x" + std::to_string(v + 1);
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, std::size_t nvars) {
  return IdealParser(text, nvars).parse();
}

std::string render_monomial(const ExponentVector& m) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(m.size(), v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string render(const MonomialIdeal& ideal) {
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ',';
    out += render_monomial(g);
  }
  return out;
}

bool is_zero_dimensional(const MonomialIdeal& ideal) noexcept {
  for (std::size_t v = 0; v < ideal.nvars(); ++v) {
    if (!ideal.pure_power(v)) return false;
  }
  return true;
}

bool is_borel_fixed(const MonomialIdeal& ideal) noexcept {
  const std::size_t n = ideal.nvars();
  std::vector<Exponent> moved(n);
  for (const auto& g : ideal.generators()) {
    for (std::size_t j = 1; j < n; ++j) {
      if (g[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        std::copy(g.begin(), g.end(), moved.begin());
        --moved[j];
        ++moved[i];
        if (!ideal.contains(std::span<const Exponent>(moved))) return false;
      }
    }
  }
  return true;
}

MonomialIdeal power_ideal(std::size_t nvars, Exponent k) {
  if (nvars == 0) throw InvalidArgument("nvars must be positive");
  if (k <= 0) throw InvalidArgument("power must be positive");
  std::vector<ExponentVector> gens;
  std::vector<Exponent> e(nvars, 0);
  // Compositions of k into nvars parts.
  auto recurse = [&](auto&& self, std::size_t v, Exponent left) -> void {
    if (v + 1 == nvars) {
      e[v] = left;
      gens.emplace_back(e);
      return;
    }
    for (Exponent a = left; a >= 0; --a) {
      e[v] = a;
      self(self, v + 1, left - a);
    }
  };
  recurse(recurse, 0, k);
  return MonomialIdeal(nvars, std::move(gens));
}

std::vector<ExponentVector> mixed_generators(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> out;
  for (const auto& g : ideal.generators()) {
    if (g.support_size() >= 2) out.push_back(g);
  }
  return out;
}

MonomialIdeal permute_variables(const MonomialIdeal& ideal,
                                std::span<const std::size_t> perm) {
  const std::size_t n = ideal.nvars();
  if (perm.size() != n) throw InvalidArgument("permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = true;
  }
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  std::vector<Exponent> e(n);
  for (const auto& g : ideal.generators()) {
    for (std::size_t v = 0; v < n; ++v) e[perm[v]] = g[v];
    gens.emplace_back(e);
  }
  return MonomialIdeal(n, std::move(gens));
}

std::vector<std::size_t> swap_permutation(std::size_t nvars, std::size_t i, std::size_t j) {
  if (i >= nvars || j >= nvars) throw InvalidArgument("variable index out of range");
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::swap(perm[i], perm[j]);
  return perm;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace hilbtan
