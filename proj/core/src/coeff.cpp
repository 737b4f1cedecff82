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

#include "lsf/coeff.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace lsf {

namespace {

std::atomic<double> g_approx_tol{1e-9};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw BadInput("not a rational number: '" + std::string(whole) + "'");
  return v;
}

double turn_of(std::complex<double> z) {
  double t = std::arg(z) / (2 * std::numbers::pi);
  if (t < 0) t += 1.0;
  if (t >= 1.0) t -= 1.0;
  return t;
}

std::string exponent_string(const Rational& e) {
  if (e.denominator() == 1) return "q^" + to_string(e);
  return "q^(" + to_string(e) + ")";
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  auto num = parse_int(s.substr(0, slash), text);
  auto den = parse_int(s.substr(slash + 1), text);
  if (den == 0) throw BadInput("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

Rational mod_one(const Rational& r) {
  auto n = r.numerator();
  auto d = r.denominator();
  auto fl = n / d;
  if (n % d != 0 && n < 0) --fl;
  return r - Rational(fl);
}

// -- QSymbol ----------------------------------------------------------------

QSymbol QSymbol::concrete(const Rational& value) {
  if (value <= 1) throw BadInput("q must be > 1, got " + lsf::to_string(value));
  QSymbol q;
  q.value_ = value;
  return q;
}

QSymbol QSymbol::parse(std::string_view text) {
  auto s = trim(text);
  if (s == "formal") return formal();
  return concrete(parse_rational(s));
}

const Rational& QSymbol::value() const {
  if (!value_) throw ModeMismatch("q is formal; a concrete q is required here");
  return *value_;
}

double QSymbol::to_double() const {
  const auto& v = value();
  return static_cast<double>(v.numerator()) / static_cast<double>(v.denominator());
}

std::string QSymbol::to_string() const { return value_ ? lsf::to_string(*value_) : "formal"; }

double approx_tolerance() { return g_approx_tol.load(); }
void set_approx_tolerance(double tol) { g_approx_tol.store(tol); }

// -- UnitCoefficient --------------------------------------------------------

UnitCoefficient UnitCoefficient::exact(const Rational& turn, const Rational& exponent) {
  return UnitCoefficient(Exact{mod_one(turn), exponent});
}

UnitCoefficient UnitCoefficient::approx(std::complex<double> value) {
  if (!(std::abs(value) > 0) || !std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw DomainError("approximate coefficient must be finite and nonzero");
  return UnitCoefficient(value);
}

const Rational& UnitCoefficient::turn() const {
  if (!is_exact()) throw ModeMismatch("turn() of an approximate coefficient");
  return std::get<Exact>(value_).turn;
}

const Rational& UnitCoefficient::exponent() const {
  if (!is_exact()) throw ModeMismatch("exponent() of an approximate coefficient");
  return std::get<Exact>(value_).exponent;
}

std::complex<double> UnitCoefficient::approx_value() const {
  if (is_exact()) throw ModeMismatch("approx_value() of an exact coefficient");
  return std::get<std::complex<double>>(value_);
}

std::complex<double> UnitCoefficient::evaluate(const QSymbol& q) const {
  if (!is_exact()) return approx_value();
  const auto& ex = std::get<Exact>(value_);
  double t = boost::rational_cast<double>(ex.turn);
  double mod = std::pow(q.to_double(), boost::rational_cast<double>(ex.exponent));
  return std::polar(mod, 2 * std::numbers::pi * t);
}

UnitCoefficient to_approx(const UnitCoefficient& a, const QSymbol& q) {
  return a.is_exact() ? UnitCoefficient::approx(a.evaluate(q)) : a;
}

int sign(const Abscissa& x, double tol) {
  if (auto* r = std::get_if<Rational>(&x)) return (*r > 0) - (*r < 0);
  double d = std::get<double>(x);
  if (std::abs(d) <= tol) return 0;
  return d > 0 ? 1 : -1;
}

double to_double(const Abscissa& x) {
  if (auto* r = std::get_if<Rational>(&x)) return boost::rational_cast<double>(*r);
  return std::get<double>(x);
}

std::string to_string(const Abscissa& x) {
  if (auto* r = std::get_if<Rational>(&x)) return to_string(*r);
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(x);
  return os.str();
}

UnitCoefficient mul(const UnitCoefficient& a, const UnitCoefficient& b, const QSymbol& q) {
  if (a.is_exact() && b.is_exact())
    return UnitCoefficient::exact(a.turn() + b.turn(), a.exponent() + b.exponent());
  if (a.is_exact() != b.is_exact() && q.is_formal())
    throw ModeMismatch("cannot combine exact and approximate coefficients with formal q");
  return UnitCoefficient::approx(a.evaluate(q) * b.evaluate(q));
}

UnitCoefficient inv(const UnitCoefficient& a) {
  if (a.is_exact()) return UnitCoefficient::exact(-a.turn(), -a.exponent());
  return UnitCoefficient::approx(1.0 / a.approx_value());
}

UnitCoefficient pow(const UnitCoefficient& a, std::int64_t k) {
  if (a.is_exact()) return UnitCoefficient::exact(a.turn() * k, a.exponent() * k);
  return UnitCoefficient::approx(std::pow(a.approx_value(), static_cast<double>(k)));
}

UnitCoefficient neg(const UnitCoefficient& a) {
  if (a.is_exact()) return mul(a, UnitCoefficient::minus_one());
  return UnitCoefficient::approx(-a.approx_value());
}

std::vector<UnitCoefficient> roots(const UnitCoefficient& a, int k) {
  if (k < 1) throw BadInput("root order must be >= 1");
  std::vector<UnitCoefficient> out;
  out.reserve(k);
  if (a.is_exact()) {
    for (int j = 0; j < k; ++j)
      out.push_back(UnitCoefficient::exact((a.turn() + j) / k, a.exponent() / k));
  } else {
    auto z = a.approx_value();
    double r = std::pow(std::abs(z), 1.0 / k);
    double th = std::arg(z);
    for (int j = 0; j < k; ++j)
      out.push_back(UnitCoefficient::approx(std::polar(r, (th + 2 * std::numbers::pi * j) / k)));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return compare(x, y) < 0; });
  return out;
}

bool eq(const UnitCoefficient& a, const UnitCoefficient& b, const QSymbol& q) {
  if (a.is_exact() && b.is_exact())
    return a.turn() == b.turn() && a.exponent() == b.exponent();
  if (a.is_exact() != b.is_exact() && q.is_formal())
    throw ModeMismatch("cannot compare exact and approximate coefficients with formal q");
  auto x = a.evaluate(q);
  auto y = b.evaluate(q);
  return std::abs(x - y) <= approx_tolerance() * std::max(std::abs(x), std::abs(y));
}

bool is_one(const UnitCoefficient& a, const QSymbol& q) {
  if (a.is_exact()) return a.turn() == 0 && a.exponent() == 0;
  return eq(a, UnitCoefficient::approx(1.0), q);
}

Abscissa log_q_modulus(const UnitCoefficient& a, const QSymbol& q) {
  if (a.is_exact()) return a.exponent();
  if (q.is_formal()) throw ModeMismatch("log_q_modulus of an approximate value needs a concrete q");
  return std::log(std::abs(a.approx_value())) / std::log(q.to_double());
}

int compare(const UnitCoefficient& a, const UnitCoefficient& b) {
  if (a.is_exact() != b.is_exact()) return a.is_exact() ? -1 : 1;
  if (a.is_exact()) {
    if (a.exponent() != b.exponent()) return a.exponent() < b.exponent() ? -1 : 1;
    if (a.turn() != b.turn()) return a.turn() < b.turn() ? -1 : 1;
    return 0;
  }
  auto x = a.approx_value();
  auto y = b.approx_value();
  double lx = std::log(std::abs(x)), ly = std::log(std::abs(y));
  if (lx != ly) return lx < ly ? -1 : 1;
  double tx = turn_of(x), ty = turn_of(y);
  if (tx != ty) return tx < ty ? -1 : 1;
  return 0;
}

std::string to_string(const UnitCoefficient& a) {
  if (!a.is_exact()) {
    std::ostringstream os;
    os.precision(12);
    auto z = a.approx_value();
    os << '(' << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
  }
  const auto& t = a.turn();
  const auto& e = a.exponent();
  std::string root;
  if (t == Rational(1, 2)) {
    root = "-";
  } else if (t != 0) {
    root = "e(" + to_string(t) + ")";
  }
  if (e == 0) {
    if (root.empty()) return "1";
    return root == "-" ? "-1" : root;
  }
  std::string qs = e == 1 ? "q" : exponent_string(e);
  if (root.empty() || root == "-") return root + qs;
  return root + "*" + qs;
}

UnitCoefficient parse_coefficient(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) throw BadInput("empty coefficient");
  if (s.front() == '(' && s.find(',') != std::string_view::npos && s.back() == ')') {
    auto inner = s.substr(1, s.size() - 2);
    auto comma = inner.find(',');
    std::string re(trim(inner.substr(0, comma)));
    std::string im(trim(inner.substr(comma + 1)));
    try {
      return UnitCoefficient::approx({std::stod(re), std::stod(im)});
    } catch (const std::logic_error&) {
      throw BadInput("bad approximate coefficient '" + std::string(text) + "'");
    }
  }
  Rational turn = 0;
  Rational expo = 0;
  if (s.front() == '-') {
    turn += Rational(1, 2);
    s.remove_prefix(1);
  } else if (s.front() == '+') {
    s.remove_prefix(1);
  }
  while (!s.empty()) {
    auto star = s.find('*');
    auto factor = trim(s.substr(0, star));
    s = star == std::string_view::npos ? std::string_view{} : s.substr(star + 1);
    if (factor.empty()) throw BadInput("bad coefficient '" + std::string(text) + "'");
    if (factor == "1") continue;
    if (factor == "i") {
      turn += Rational(1, 4);
    } else if (factor.front() == 'q') {
      if (factor.size() == 1) {
        expo += 1;
      } else if (factor[1] == '^') {
        expo += parse_rational(factor.substr(2));
      } else {
        throw BadInput("bad q-power '" + std::string(factor) + "'");
      }
    } else if (factor.starts_with("e(") || factor.starts_with("zeta(")) {
      auto open = factor.find('(');
      if (factor.back() != ')') throw BadInput("bad root of unity '" + std::string(factor) + "'");
      turn += parse_rational(factor.substr(open + 1, factor.size() - open - 2));
    } else {
      throw BadInput("unrecognised coefficient factor '" + std::string(factor) + "'");
    }
  }
  return UnitCoefficient::exact(turn, expo);
}

}  // namespace lsf
