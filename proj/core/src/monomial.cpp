#include "grodeg/monomial.hpp"

#include <numeric>

namespace grodeg {

int Monomial::check_nvars(int nvars) {
  if (nvars <= 0) throw DimensionError("monomial needs at least one variable");
  return nvars;
}

Monomial Monomial::variable(int nvars, int i, uint32_t power) {
  Monomial m(nvars);
  if (i < 0 || i >= nvars)
    throw DimensionError("variable index " + std::to_string(i) +
                         " out of range for " + std::to_string(nvars) +
                         " variables");
  m.exp_[static_cast<size_t>(i)] = power;
  return m;
}

Monomial Monomial::from_exponents(std::vector<uint32_t> exps) {
  Monomial m(static_cast<int>(exps.size()));
  m.exp_ = std::move(exps);
  return m;
}

long Monomial::degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), 0L);
}

bool Monomial::is_one() const {
  for (uint32_t e : exp_)
    if (e) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  for (uint32_t e : exp_)
    if (e > 1) return false;
  return true;
}

void Monomial::require_same_nvars(const Monomial& m) const {
  if (nvars() != m.nvars())
    throw DimensionError("monomials over different variable counts: " +
                         std::to_string(nvars()) + " vs " +
                         std::to_string(m.nvars()));
}

bool Monomial::divides(const Monomial& m) const {
  require_same_nvars(m);
  for (size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > m.exp_[i]) return false;
  return true;
}

bool Monomial::coprime_with(const Monomial& m) const {
  require_same_nvars(m);
  for (size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] && m.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  require_same_nvars(m);
  Monomial r(nvars());
  for (size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = exp_[i] + m.exp_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  if (!m.divides(*this))
    throw PreconditionError("monomial quotient " + to_string() + " / " +
                            m.to_string() + " is not a monomial");
  Monomial r(nvars());
  for (size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = exp_[i] - m.exp_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  a.require_same_nvars(b);
  Monomial r(a.nvars());
  for (size_t i = 0; i < a.exp_.size(); ++i)
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  return r;
}

bool Monomial::lex_less(const Monomial& a, const Monomial& b) {
  a.require_same_nvars(b);
  for (size_t i = 0; i < a.exp_.size(); ++i)
    if (a.exp_[i] != b.exp_[i]) return a.exp_[i] < b.exp_[i];
  return false;
}

std::vector<Monomial> monomials_of_degree(int nvars, long degree) {
  if (nvars <= 0) throw DimensionError("monomial needs at least one variable");
  if (degree < 0) return {};
  std::vector<Monomial> out;
  std::vector<uint32_t> exps(static_cast<size_t>(nvars), 0);
  // recursive distribution of the degree over the variables, lex ascending
  auto rec = [&](auto&& self, int pos, long left) -> void {
    if (pos == nvars - 1) {
      exps[static_cast<size_t>(pos)] = static_cast<uint32_t>(left);
      out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (long e = 0; e <= left; ++e) {
      exps[static_cast<size_t>(pos)] = static_cast<uint32_t>(e);
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (size_t i = 0; i < exp_.size(); ++i) {
    if (!exp_[i]) continue;
    if (!s.empty()) s += '*';
    s += 'X';
    s += std::to_string(i);
    if (exp_[i] > 1) {
      s += '^';
      s += std::to_string(exp_[i]);
    }
  }
  return s.empty() ? "1" : s;
}

}  // namespace grodeg
