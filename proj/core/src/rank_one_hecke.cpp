// Copyright 2026 The lsfactors Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lsf/rank_one_hecke.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cmath>
#include <cstdlib>

namespace lsf {

// -- LaurentPoly ------------------------------------------------------------------

LaurentPoly LaurentPoly::constant(std::int64_t c) { return term(c, 0, 0); }

LaurentPoly LaurentPoly::term(std::int64_t c, int q_power, int a_power) {
  LaurentPoly p;
  p.add({q_power, a_power}, c);
  return p;
}

void LaurentPoly::add(const Key& k, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int LaurentPoly::a_degree_span() const {
  if (terms_.empty()) return -1;
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [k, c] : terms_) {
    lo = std::min(lo, k.second);
    hi = std::max(hi, k.second);
  }
  return hi - lo;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [k, c] : terms_) r.add(k, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
  return r;
}

bool LaurentPoly::vanishes_at(const UnitCoefficient& a, const QSymbol& q) const {
  // group terms whose substituted monomials coincide
  std::vector<std::pair<UnitCoefficient, std::int64_t>> groups;
  for (const auto& [k, c] : terms_) {
    auto u = mul(UnitCoefficient::q_power(k.first), pow(a, k.second), q);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return eq(g.first, u, q); });
    if (it == groups.end()) groups.emplace_back(u, c);
    else it->second += c;
  }
  std::erase_if(groups, [](const auto& g) { return g.second == 0; });
  if (groups.empty()) return true;
  if (groups.size() == 1) return false;
  if (groups.size() == 2 && std::llabs(groups[0].second) == std::llabs(groups[1].second)) {
    // c u1 + c' u2 = 0  <=>  u1 / u2 = -c'/c
    auto ratio = mul(groups[0].first, inv(groups[1].first), q);
    auto target = (groups[0].second == groups[1].second) ? UnitCoefficient::minus_one()
                                                         : UnitCoefficient::one();
    return eq(ratio, target, q);
  }
  if (q.is_formal())
    throw DomainError("vanishing test needs a concrete q for " + to_string());
  std::complex<double> v = 0;
  for (const auto& g : groups) v += static_cast<double>(g.second) * g.first.evaluate(q);
  double scale = 0;
  for (const auto& g : groups) scale = std::max(scale, std::abs(g.first.evaluate(q)));
  return std::abs(v) <= approx_tolerance() * scale;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // descending powers of q, then of a
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [k, c] = *it;
    std::string mono;
    auto power = [](const char* sym, int e) -> std::string {
      if (e == 0) return "";
      if (e == 1) return sym;
      return std::string(sym) + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    };
    auto qp = power("q", k.first), ap = power("a", k.second);
    mono = qp + (qp.empty() || ap.empty() ? "" : "*") + ap;
    std::int64_t mag = std::llabs(c);
    std::string body = mono.empty() ? std::to_string(mag)
                                    : (mag == 1 ? mono : std::to_string(mag) + "*" + mono);
    if (out.empty()) out = (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
  }
  return out;
}

// -- Matrix2 ----------------------------------------------------------------------

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[2 * i + j] = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
  return r;
}

Matrix2 Matrix2::operator+(const Matrix2& o) const {
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = m[i] + o.m[i];
  return r;
}

Matrix2 Matrix2::operator-(const Matrix2& o) const {
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = m[i] - o.m[i];
  return r;
}

bool Matrix2::is_zero() const {
  return std::all_of(m.begin(), m.end(), [](const auto& p) { return p.is_zero(); });
}

LaurentPoly Matrix2::det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }
LaurentPoly Matrix2::trace() const { return at(0, 0) + at(1, 1); }

Matrix2 Matrix2::scalar(const LaurentPoly& c) { return {{c, LaurentPoly(), LaurentPoly(), c}}; }

// -- modules ---------------------------------------------------------------------

std::string to_string(RankOneKind k) { return k == RankOneKind::SL2 ? "sl2" : "su21"; }

RankOneKind parse_rank_one_kind(std::string_view s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "sl2") return RankOneKind::SL2;
  if (t == "su21" || t == "su(2,1)") return RankOneKind::SU21;
  throw BadInput("unknown rank-one group '" + std::string(s) + "' (expected sl2 or su21)");
}

HeckeMatrices matrices(const RankOneGroup& g) {
  const auto one = LaurentPoly::constant(1);
  const auto qw = LaurentPoly::term(1, g.q_w_power(), 0);
  const auto q = LaurentPoly::q();
  HeckeMatrices h;
  h.T_w = {{LaurentPoly(), qw, one, qw - one}};
  h.T_s = {{q - one, LaurentPoly::a(), LaurentPoly::term(1, 1, -1), LaurentPoly()}};
  return h;
}

bool quadratic_check(const HeckeMatrices& m, const RankOneGroup& g) {
  const auto id = Matrix2::scalar(LaurentPoly::constant(1));
  auto rel = [&](const Matrix2& t, int power) {
    return ((t + id) * (t - Matrix2::scalar(LaurentPoly::term(1, power, 0)))).is_zero();
  };
  return rel(m.T_w, g.q_w_power()) && rel(m.T_s, g.q_s_power());
}

namespace {

std::array<LaurentPoly, 2> strip_monomial(std::array<LaurentPoly, 2> v) {
  int qmin = INT_MAX, amin = INT_MAX;
  for (const auto& c : v)
    for (const auto& [k, x] : c.terms()) {
      qmin = std::min(qmin, k.first);
      amin = std::min(amin, k.second);
    }
  if (qmin == INT_MAX) return v;
  auto d = LaurentPoly::term(1, -qmin, -amin);
  for (auto& c : v) c = c * d;
  return v;
}

std::array<Eigenline, 2> eigenlines(const Matrix2& t) {
  const auto minus_one = LaurentPoly::constant(-1);
  // lambda^2 - tr lambda + det, at lambda = -1
  if (!(LaurentPoly::constant(1) + t.trace() + t.det()).is_zero())
    throw DomainError("Hecke generator does not have eigenvalue -1");
  std::array<Eigenline, 2> out;
  out[0].eigenvalue = minus_one;
  out[1].eigenvalue = -t.det();
  for (auto& line : out) {
    std::array<LaurentPoly, 2> v{t.at(0, 1), line.eigenvalue - t.at(0, 0)};
    if (v[0].is_zero() && v[1].is_zero()) v = {line.eigenvalue - t.at(1, 1), t.at(1, 0)};
    line.vector = strip_monomial(v);
  }
  return out;
}

UnitCoefficient linear_root(const LaurentPoly& p) {
  // p = c0 q^i0 + c1 q^i1 a with |c0| = |c1| = 1
  std::int64_t c0 = 0, c1 = 0;
  int i0 = 0, i1 = 0;
  for (const auto& [k, c] : p.terms()) {
    if (k.second == 0 && c0 == 0) { c0 = c; i0 = k.first; }
    else if (k.second == 1 && c1 == 0) { c1 = c; i1 = k.first; }
    else throw DomainError("common-line determinant is not a binomial linear in a: " + p.to_string());
  }
  if (c0 == 0 || c1 == 0 || std::llabs(c0) != 1 || std::llabs(c1) != 1)
    throw DomainError("common-line determinant has no unit root: " + p.to_string());
  auto root = UnitCoefficient::q_power(i0 - i1);
  return c0 == c1 ? neg(root) : root;
}

}  // namespace

EigenReport eigen(const HeckeMatrices& m) {
  EigenReport r;
  r.T_w = eigenlines(m.T_w);
  r.T_s = eigenlines(m.T_s);
  return r;
}

std::string to_string(ReducibilityCase c) {
  switch (c) {
    case ReducibilityCase::Irreducible: return "Irreducible";
    case ReducibilityCase::TrivialSub: return "TrivialSub";
    case ReducibilityCase::TrivialQuotient: return "TrivialQuotient";
    case ReducibilityCase::TwoMaximalCompactSplit: return "TwoMaximalCompactSplit";
    case ReducibilityCase::DiscreteSeriesSub: return "DiscreteSeriesSub";
  }
  return "?";
}

std::vector<CommonLine> common_line_loci(const RankOneGroup& g) {
  auto e = eigen(matrices(g));
  std::vector<CommonLine> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto& v = e.T_w[i].vector;
      const auto& u = e.T_s[j].vector;
      CommonLine c;
      c.w_index = i;
      c.s_index = j;
      c.determinant = v[0] * u[1] - v[1] * u[0];
      c.locus = linear_root(c.determinant);
      out.push_back(std::move(c));
    }
  return out;
}

ReducibilityReport reducibility(const RankOneGroup& g, const UnitCoefficient& a, const QSymbol& q) {
  ReducibilityReport r;
  for (auto& c : common_line_loci(g)) {
    if (!c.determinant.vanishes_at(a, q)) continue;
    if (c.w_index == 1) r.K_fixed_line = true;
    else r.Kprime_fixed_line = true;
    r.common_lines.push_back(std::move(c));
  }
  for (const auto& c : r.common_lines) {
    ReducibilityCase k;
    if (c.w_index == 1 && c.s_index == 1) k = ReducibilityCase::TrivialSub;
    else if (c.w_index == 0 && c.s_index == 0) k = ReducibilityCase::TrivialQuotient;
    else if (c.w_index == 1) k = ReducibilityCase::TwoMaximalCompactSplit;
    else k = g.kind == RankOneKind::SL2 ? ReducibilityCase::TwoMaximalCompactSplit
                                        : ReducibilityCase::DiscreteSeriesSub;
    if (r.kind != ReducibilityCase::Irreducible && r.kind != k)
      throw DomainError("reducibility loci overlap at a = " + to_string(a));
    r.kind = k;
  }
  return r;
}

std::string to_string(CompactSide s) { return s == CompactSide::K ? "K" : "Kprime"; }

WhittakerReport whittaker(const RankOneGroup& g, int conductor_exponent) {
  if (g.kind != RankOneKind::SL2) throw BadInput("Whittaker values are only available for sl2");
  WhittakerReport w;
  w.conductor_exponent = conductor_exponent;
  w.generic_component = conductor_exponent % 2 == 0 ? CompactSide::K : CompactSide::Kprime;
  if (conductor_exponent < 0) return w;
  if (conductor_exponent == 0) {
    w.lambda_e = LaurentPoly::term(-1, 0, -1);
    w.lambda_f = LaurentPoly::constant(1);
  } else {
    w.lambda_e = LaurentPoly();
    w.lambda_f = LaurentPoly();
  }
  w.lambda_e_plus_f = *w.lambda_e + *w.lambda_f;
  return w;
}

}  // namespace lsf
