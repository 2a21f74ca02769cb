#include "eqcc/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "eqcc/error.hpp"
#include "eqcc/geometry.hpp"

namespace eqcc::tropical {

Rational parse_rational(const std::string& text) {
  static const std::regex re(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidArgument("not a rational: '" + text + "'");
  const boost::multiprecision::cpp_int num(m[1].str());
  const boost::multiprecision::cpp_int den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// ---- MassPoly

MassPoly MassPoly::constant(const Rational& c) {
  MassPoly p;
  p.add_term({0, 0, 0, 0, 0}, c);
  return p;
}

MassPoly MassPoly::mass(int label) {
  if (label < 1 || label > 5) throw InvalidArgument("mass label out of range");
  Exponents e{};
  e[label - 1] = 1;
  MassPoly p;
  p.add_term(e, 1);
  return p;
}

void MassPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational MassPoly::evaluate(const std::array<Rational, 5>& masses) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < 5; ++k)
      for (int n = 0; n < e[k]; ++n) t *= masses[k];
    total += t;
  }
  return total;
}

MassPoly& MassPoly::operator+=(const MassPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MassPoly operator-(const MassPoly& a) {
  MassPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

MassPoly operator*(const MassPoly& a, const MassPoly& b) {
  MassPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MassPoly::Exponents e{};
      for (int k = 0; k < 5; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string MassPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (out.empty()) out = c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    const Rational mag = c < 0 ? Rational(-c) : c;
    std::vector<std::string> parts;
    if (e == Exponents{} || mag != 1) parts.push_back(tropical::to_string(mag));
    for (int k = 0; k < 5; ++k) {
      if (e[k] == 0) continue;
      parts.push_back("m" + std::to_string(k + 1) + (e[k] > 1 ? "^" + std::to_string(e[k]) : ""));
    }
    for (std::size_t n = 0; n < parts.size(); ++n) out += (n ? "*" : "") + parts[n];
  }
  return out;
}

// ---- LaurentPoly

void LaurentPoly::add_term(const Exponents& e, const MassPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::constant(const MassPoly& c) { return monomial(Exponents{}, c); }

LaurentPoly LaurentPoly::monomial(const Exponents& e, const MassPoly& c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int index, int power) {
  if (index < 0 || index >= 12) throw InvalidArgument("variable index out of range");
  Exponents e{};
  e[index] = power;
  return monomial(e, MassPoly::constant(1));
}

LaurentPoly LaurentPoly::cleared() const {
  if (terms_.empty()) return *this;
  Exponents shift{};
  for (int v = 0; v < 12; ++v) {
    int lo = 0;
    for (const auto& [e, c] : terms_) lo = std::min(lo, e[v]);
    shift[v] = -lo;
  }
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    for (int v = 0; v < 12; ++v) s[v] += shift[v];
    out.add_term(s, c);
  }
  return out;
}

LaurentPoly LaurentPoly::specialized(const std::array<Rational, 5>& masses) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e, MassPoly::constant(c.evaluate(masses)));
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      LaurentPoly::Exponents e{};
      for (int v = 0; v < 12; ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream ss;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) ss << " + ";
    first = false;
    ss << "(" << c.to_string() << ")";
    for (int v = 0; v < 12; ++v) {
      if (e[v] == 0) continue;
      ss << "*" << kVariableNames[v];
      if (e[v] != 1) ss << "^" << e[v];
    }
  }
  return ss.str();
}

// ---- weights and symmetry

WeightVector WeightVector::parse(const std::string& csv) {
  WeightVector w;
  std::stringstream ss(csv);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 6) throw InvalidArgument("weight vector needs exactly 6 entries");
    w.r[n++] = parse_rational(item);
  }
  if (n != 6) throw InvalidArgument("weight vector needs exactly 6 entries");
  return w;
}

std::array<Rational, 12> WeightVector::lifted(const Rational& A) const {
  std::array<Rational, 12> out;
  for (int c = 0; c < 6; ++c) {
    out[c] = r[c];
    out[c + 6] = (2 - A) * r[c];
  }
  return out;
}

Rational WeightVector::sum() const {
  Rational s = 0;
  for (const auto& x : r) s += x;
  return s;
}

std::string WeightVector::to_string() const {
  std::string s = "(";
  for (int c = 0; c < 6; ++c) {
    if (c) s += ", ";
    s += tropical::to_string(r[c]);
  }
  return s + ")";
}

WeightVector c5_rotate(const WeightVector& w) {
  static constexpr std::array<std::pair<int, int>, 5> kMap = {{{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}}};
  WeightVector o = w;
  for (const auto& [s, t] : kMap) o.r[t] = w.r[s];
  return o;
}

WeightVector reflect(const WeightVector& w) {
  WeightVector o = w;
  std::swap(o.r[1], o.r[4]);
  std::swap(o.r[2], o.r[3]);
  return o;
}

std::vector<WeightVector> c5_orbit(const WeightVector& w) {
  std::vector<WeightVector> out;
  WeightVector cur = w;
  for (int n = 0; n < 5; ++n) {
    if (std::find(out.begin(), out.end(), cur) == out.end()) out.push_back(cur);
    cur = c5_rotate(cur);
  }
  return out;
}

std::vector<WeightVector> d5_orbit(const WeightVector& w) {
  std::vector<WeightVector> out = c5_orbit(w);
  for (const auto& v : c5_orbit(reflect(w)))
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

std::string to_string(Convention c) { return c == Convention::Min ? "min" : "max"; }

// ---- system

namespace {

int r_var(int i, int j) { return static_cast<int>(distance_class(i, j)); }
int q_var(int i, int j) { return 6 + static_cast<int>(distance_class(i, j)); }

LaurentPoly r_squared(int i, int j) { return LaurentPoly::variable(r_var(i, j), 2); }

void check_exponent(const Rational& A) {
  if (A < 2) throw InvalidArgument("tropical exponent must satisfy A >= 2");
}

// Leibniz expansion; the matrices here are 5x5 and sparse in zeros.
LaurentPoly determinant(const std::array<std::array<LaurentPoly, 5>, 5>& m) {
  std::array<int, 5> perm = {0, 1, 2, 3, 4};
  LaurentPoly det;
  do {
    int inversions = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        if (perm[a] > perm[b]) ++inversions;
    LaurentPoly prod = LaurentPoly::constant(MassPoly::constant(inversions % 2 ? -1 : 1));
    bool zero = false;
    for (int row = 0; row < 5 && !zero; ++row) {
      const LaurentPoly& e = m[row][perm[row]];
      if (e.is_zero()) zero = true;
      else prod = prod * e;
    }
    if (!zero) det += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

LaurentPoly cayley_menger_poly(int i, int j, int k, int l) {
  const std::array<int, 4> p = {i, j, k, l};
  std::array<std::array<LaurentPoly, 5>, 5> m;
  const LaurentPoly one = LaurentPoly::constant(MassPoly::constant(1));
  for (int a = 1; a < 5; ++a) {
    m[0][a] = one;
    m[a][0] = one;
    for (int b = 1; b < 5; ++b)
      if (a != b) m[a][b] = r_squared(p[a - 1], p[b - 1]);
  }
  return determinant(m);
}

}  // namespace

System build_system(const Rational& A) {
  check_exponent(A);
  const auto p = numerator(A);
  const auto q = denominator(A);
  if (p > 10000 || q > 10000) throw InvalidArgument("exponent numerator/denominator too large");
  const int pi = static_cast<int>(p);
  const int qi = static_cast<int>(q);

  System sys;
  sys.A = A;
  const LaurentPoly one = LaurentPoly::constant(MassPoly::constant(1));

  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      LaurentPoly f;
      for (int k = 1; k <= 5; ++k) {
        if (k == i) continue;
        LaurentPoly aijk = (k == j ? LaurentPoly() : r_squared(j, k)) - r_squared(i, k) - r_squared(i, j);
        // S_ik = Q_ik r_ik^-2 - 1 with λ̃ = 1
        const LaurentPoly s = LaurentPoly::variable(q_var(i, k)) * LaurentPoly::variable(r_var(i, k), -2) - one;
        f += LaurentPoly::constant(MassPoly::mass(k)) * s * aijk;
      }
      sys.polys.push_back({"f" + std::to_string(i) + std::to_string(j), f.cleared()});
    }

  const std::array<std::array<int, 4>, 5> quads = {
      {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}}};
  for (const auto& qd : quads) {
    std::string label = "CM";
    for (int x : qd) label += std::to_string(x);
    sys.polys.push_back({label, cayley_menger_poly(qd[0], qd[1], qd[2], qd[3])});
  }

  for (int c = 0; c < 6; ++c) {
    LaurentPoly b = LaurentPoly::variable(6 + c, qi) * LaurentPoly::variable(c, pi) -
                    LaurentPoly::variable(c, 2 * qi);
    sys.polys.push_back({std::string("Q") + (kVariableNames[c] + 1), b});
  }
  return sys;
}

System build_system(const Rational& A, const std::array<Rational, 5>& masses) {
  System sys = build_system(A);
  sys.generic_masses = false;
  for (auto& lp : sys.polys) lp.poly = lp.poly.specialized(masses);
  return sys;
}

namespace {

Rational term_weight(const LaurentPoly::Exponents& e, const std::array<Rational, 12>& w) {
  Rational s = 0;
  for (int v = 0; v < 12; ++v)
    if (e[v] != 0) s += e[v] * w[v];
  return s;
}

}  // namespace

LaurentPoly initial_form(const LaurentPoly& poly, const std::array<Rational, 12>& weights,
                         Convention convention) {
  if (poly.is_zero()) return poly;
  std::optional<Rational> best;
  for (const auto& [e, c] : poly.terms()) {
    const Rational w = term_weight(e, weights);
    if (!best || (convention == Convention::Min ? w < *best : w > *best)) best = w;
  }
  LaurentPoly out;
  for (const auto& [e, c] : poly.terms())
    if (term_weight(e, weights) == *best) out += LaurentPoly::monomial(e, c);
  return out;
}

LaurentPoly initial_form(const LaurentPoly& poly, const WeightVector& w, const Rational& A,
                         Convention convention) {
  return initial_form(poly, w.lifted(A), convention);
}

Membership in_prevariety(const WeightVector& w, const System& system, Convention convention) {
  const auto lifted = w.lifted(system.A);
  Membership m;
  for (std::size_t n = 0; n < system.polys.size(); ++n) {
    const LaurentPoly in = initial_form(system.polys[n].poly, lifted, convention);
    if (in.size() < 2) {
      m.member = false;
      m.witness_index = n;
      m.witness_label = system.polys[n].label;
      m.witness_form = in.to_string();
      return m;
    }
  }
  return m;
}

// ---- affine forms and tables

AffineA AffineA::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InvalidArgument("empty affine form");
  AffineA out;
  static const std::regex term(R"(([+-]?)(\d+(?:/\d+)?)?(\*?A)?)");
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::smatch m;
    const std::string rest = s.substr(pos);
    if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) ||
        m.length(0) == 0 || (!m[2].matched && !m[3].matched)) {
      throw InvalidArgument("cannot parse affine form '" + text + "'");
    }
    Rational c = m[2].matched ? parse_rational(m[2].str()) : Rational(1);
    if (m[1].str() == "-") c = -c;
    if (m[3].matched) out.slope += c;
    else out.constant += c;
    pos += static_cast<std::size_t>(m.length(0));
  }
  return out;
}

std::string AffineA::to_string() const {
  if (slope == 0) return tropical::to_string(constant);
  std::string s = slope == 1 ? "A" : (slope == -1 ? "-A" : tropical::to_string(slope) + "A");
  if (constant > 0) s += "+" + tropical::to_string(constant);
  if (constant < 0) s += tropical::to_string(constant);
  return s;
}

WeightVector specialize(const SymbolicRay& ray, const Rational& A) {
  WeightVector w;
  for (int c = 0; c < 6; ++c) w.r[c] = ray[c].at(A);
  return w;
}

TableReport verify_tables(const Rational& A, const RayTable& table, Convention convention) {
  check_exponent(A);
  const System sys = build_system(A);
  TableReport rep;
  rep.A = A;
  rep.convention = convention;
  rep.pass = true;

  for (const auto& rc : table.rays) {
    RayReport rr;
    rr.label = rc.label;
    rr.representative = specialize(rc.representative, A);
    rr.multiplicity = rc.multiplicity;
    const auto c5 = c5_orbit(rr.representative);
    rr.c5_orbit_size = c5.size();
    rr.d5_orbit_size = d5_orbit(rr.representative).size();
    if (static_cast<std::size_t>(rc.multiplicity) == rr.c5_orbit_size) rr.multiplicity_matches = "C5";
    else if (static_cast<std::size_t>(rc.multiplicity) == rr.d5_orbit_size) rr.multiplicity_matches = "D5";
    else rr.multiplicity_matches = "none";
    rr.pass = true;
    for (const auto& w : c5) {
      Membership m = in_prevariety(w, sys, convention);
      rr.pass = rr.pass && m.member;
      rr.members.push_back({w, std::move(m)});
    }
    if (rr.representative.sum() < 0) rep.negative_sum_rays.push_back(rr.label);
    rep.pass = rep.pass && rr.pass;
    rep.rays.push_back(std::move(rr));
  }
  rep.h1_unique_negative = rep.negative_sum_rays == std::vector<std::string>{"h1"};

  for (const auto& cc : table.cones) {
    ConeReport cr;
    cr.label = cc.label;
    for (const auto& ray : cc.rays) {
      const WeightVector w = specialize(ray, A);
      for (int c = 0; c < 6; ++c) cr.interior.r[c] += w.r[c];
    }
    cr.pass = true;
    for (const auto& w : c5_orbit(cr.interior)) {
      Membership m = in_prevariety(w, sys, convention);
      cr.pass = cr.pass && m.member;
      cr.members.push_back({w, std::move(m)});
    }
    rep.pass = rep.pass && cr.pass;
    rep.cones.push_back(std::move(cr));
  }
  return rep;
}

RandomCheck random_weight_check(const System& system, std::size_t count, std::uint64_t seed,
                                int bound, const RayTable& table, Convention convention) {
  std::set<WeightVector> listed;
  for (const auto& rc : table.rays)
    for (const auto& w : d5_orbit(specialize(rc.representative, system.A))) listed.insert(w);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  RandomCheck out;
  while (out.samples.size() < count) {
    WeightVector w;
    for (auto& x : w.r) x = dist(rng);
    if (listed.count(w)) continue;
    Membership m = in_prevariety(w, system, convention);
    if (!m.member) ++out.rejected;
    out.samples.push_back({w, std::move(m)});
  }
  return out;
}

}  // namespace eqcc::tropical
