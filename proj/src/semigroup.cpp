#include "severi/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace severi {

NumericalSemigroup NumericalSemigroup::from_generators(
    const std::vector<long>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generating set");
  for (long g : gens)
    if (g <= 0) throw std::invalid_argument("generators must be positive");

  long d = 0;
  for (long g : gens) d = std::gcd(d, g);
  if (d != 1) throw std::invalid_argument("not cofinite");

  long lo = *std::min_element(gens.begin(), gens.end());
  long hi = *std::max_element(gens.begin(), gens.end());
  // Frobenius number < lo*hi for coprime generator sets.
  long bound = lo * hi + hi + 1;

  std::vector<char> member(bound + 1, 0);
  member[0] = 1;
  for (long v = 1; v <= bound; ++v)
    for (long g : gens)
      if (g <= v && member[v - g]) {
        member[v] = 1;
        break;
      }

  long conductor = 0;
  for (long v = bound; v >= 1; --v)
    if (!member[v]) {
      conductor = v + 1;
      break;
    }

  member.resize(std::max<long>(conductor, 1));
  NumericalSemigroup s;
  s.membership_ = std::move(member);
  s.conductor_ = conductor;
  s.derive_invariants();
  return s;
}

NumericalSemigroup NumericalSemigroup::from_membership(
    std::vector<char> membership, long conductor) {
  if (conductor < 0) throw std::invalid_argument("negative conductor");
  membership.resize(std::max<long>(conductor, 1), 0);
  if (!membership.empty()) membership[0] = 1;
  if (conductor > 0 && membership[conductor - 1])
    throw std::invalid_argument("conductor - 1 must be a gap");
  NumericalSemigroup s;
  s.membership_ = std::move(membership);
  s.conductor_ = conductor;
  s.derive_invariants();
  return s;
}

void NumericalSemigroup::derive_invariants() {
  gaps_.clear();
  for (long v = 1; v < conductor_; ++v)
    if (!membership_[v]) gaps_.push_back(v);

  long g = genus();
  long sum = 0;
  for (long q : gaps_) sum += q;
  weight_ = sum - g * (g + 1) / 2;

  // Minimal generators: elements not expressible as a sum of two nonzero
  // elements. They all lie below conductor + multiplicity.
  generators_.clear();
  long mult = multiplicity();
  for (long v = 1; v <= conductor_ + mult; ++v) {
    if (!contains(v)) continue;
    bool decomposable = false;
    for (long a = mult; a <= v / 2 && !decomposable; ++a)
      if (contains(a) && contains(v - a)) decomposable = true;
    if (!decomposable) generators_.push_back(v);
  }

  // Hyperellipticity degree. Counting even members of [2, 4c] forces
  // c <= conductor/2: above the conductor every even number is in S.
  gamma_ = -1;
  for (long c = 0; c <= conductor_ / 2 + 2; ++c) {
    long evens = 0;
    for (long v = 2; v <= 4 * c; v += 2)
      if (contains(v)) ++evens;
    if (evens == c && contains(4 * c + 2)) {
      gamma_ = c;
      break;
    }
  }
  if (gamma_ < 0) throw std::logic_error("hyperellipticity search failed");
}

bool NumericalSemigroup::contains(long v) const {
  if (v < 0) return false;
  if (v >= conductor_) return true;
  return membership_[v] != 0;
}

long NumericalSemigroup::rho(long s) const {
  if (s < 0) s = 0;
  auto it = std::upper_bound(gaps_.begin(), gaps_.end(), s);
  return static_cast<long>(gaps_.end() - it);
}

long NumericalSemigroup::multiplicity() const {
  for (long v = 1; v < conductor_; ++v)
    if (membership_[v]) return v;
  return std::max<long>(conductor_, 1);
}

std::string NumericalSemigroup::id() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ",";
    os << generators_[i];
  }
  os << ">";
  return os.str();
}

long weight(const NumericalSemigroup& s) { return s.weight(); }

long hyperellipticity_degree(const NumericalSemigroup& s) { return s.gamma(); }

NumericalSemigroup max_weight_gamma_semigroup(long g, long gamma) {
  if (gamma < 0 || g < 4 * gamma + 1)
    throw std::invalid_argument("parameters outside Torres regime");
  return NumericalSemigroup::from_generators(
      {4, 4 * gamma + 2, 2 * g - 4 * gamma + 1});
}

NumericalSemigroup min_weight_gamma_semigroup(long g, long gamma) {
  if (gamma < 0 || g < 2 * gamma + 1)
    throw std::invalid_argument("parameters outside Torres regime");
  long conductor = 2 * g - 2 * gamma;
  std::vector<char> member(conductor, 0);
  member[0] = 1;
  for (long v = 2 * gamma + 2; v < conductor; v += 2) member[v] = 1;
  return NumericalSemigroup::from_membership(std::move(member), conductor);
}

}  // namespace severi
