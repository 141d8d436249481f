#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

using VarId = int;

// Exponents of a monomial: sorted (variable, power>0) pairs.
using Mono = std::vector<std::pair<VarId, int>>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// std::map keys keep term order canonical and output deterministic.
class Poly {
 public:
  Poly() = default;
  static Poly constant(Rat c);
  static Poly variable(VarId v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Mono, Rat>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  Poly& scale(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Rat eval(const std::vector<Rat>& point) const;

  // Coefficient polynomial of x_v: treats the polynomial as affine in x_v
  // and returns (A, B) with P = A*x_v + B. Throws when x_v occurs with
  // exponent above 1.
  std::pair<Poly, Poly> split_affine(VarId v) const;

  // d/dx_v evaluated at a point.
  Rat derivative_at(VarId v, const std::vector<Rat>& point) const;

  // Substitute exact values for every variable on which `known` is set,
  // keeping the rest symbolic.
  Poly substitute(const std::vector<bool>& known,
                  const std::vector<Rat>& values) const;

  void collect_vars(std::set<VarId>& out) const;
  int total_degree() const;

  std::string to_string(
      const std::function<std::string(VarId)>& name) const;

  void add_term(Mono m, Rat c);

 private:
  std::map<Mono, Rat> terms_;
};

}  // namespace severi
