#include "severi/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace severi {

Poly Poly::constant(Rat c) {
  Poly p;
  if (c != 0) p.terms_.emplace(Mono{}, std::move(c));
  return p;
}

Poly Poly::variable(VarId v) {
  Poly p;
  p.terms_.emplace(Mono{{v, 1}}, Rat(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void Poly::add_term(Mono m, Rat c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::scale(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

namespace {

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) out.push_back(a[i++]);
    else if (a[i].first > b[j].first) out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(mono_mul(ma, mb), ca * cb);
  return out;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  Rat sum(0);
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (const auto& [var, e] : m) {
      const Rat& x = point.at(var);
      for (int t = 0; t < e; ++t) v *= x;
    }
    sum += v;
  }
  return sum;
}

std::pair<Poly, Poly> Poly::split_affine(VarId v) const {
  Poly a, b;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    Mono rest;
    for (const auto& [var, exp] : m) {
      if (var == v) e = exp;
      else rest.push_back({var, exp});
    }
    if (e == 0) b.add_term(m, c);
    else if (e == 1) a.add_term(rest, c);
    else throw std::logic_error("polynomial not affine in requested variable");
  }
  return {a, b};
}

Rat Poly::derivative_at(VarId v, const std::vector<Rat>& point) const {
  Rat sum(0);
  for (const auto& [m, c] : terms_) {
    int e = 0;
    Rat rest = c;
    for (const auto& [var, exp] : m) {
      if (var == v) {
        e = exp;
        for (int t = 0; t < exp - 1; ++t) rest *= point.at(var);
      } else {
        for (int t = 0; t < exp; ++t) rest *= point.at(var);
      }
    }
    if (e > 0) sum += Rat(e) * rest;
  }
  return sum;
}

Poly Poly::substitute(const std::vector<bool>& known,
                      const std::vector<Rat>& values) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Rat coef = c;
    Mono rest;
    for (const auto& [var, exp] : m) {
      if (static_cast<std::size_t>(var) < known.size() && known[var]) {
        for (int t = 0; t < exp; ++t) coef *= values[var];
      } else {
        rest.push_back({var, exp});
      }
    }
    out.add_term(std::move(rest), std::move(coef));
  }
  return out;
}

void Poly::collect_vars(std::set<VarId>& out) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [var, e] : m) out.insert(var);
}

int Poly::total_degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (const auto& [var, e] : m) d += e;
    deg = std::max(deg, d);
  }
  return deg;
}

std::string Poly::to_string(
    const std::function<std::string(VarId)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool need_coef = (a != 1) || m.empty();
    if (need_coef) os << a.get_str();
    bool first_factor = !need_coef;
    for (const auto& [var, e] : m) {
      if (!first_factor) os << "*";
      first_factor = false;
      os << name(var);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace severi
