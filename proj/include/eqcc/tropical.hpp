#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqcc::tropical {

using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text);  // "3", "-5/2"
std::string to_string(const Rational& q);

// Polynomial in m1..m5 with rational coefficients; zero terms never stored.
class MassPoly {
 public:
  using Exponents = std::array<int, 5>;

  MassPoly() = default;
  static MassPoly constant(const Rational& c);
  static MassPoly mass(int label);  // m_label, 1-based

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Value at explicit masses.
  Rational evaluate(const std::array<Rational, 5>& masses) const;

  MassPoly& operator+=(const MassPoly& o);
  friend MassPoly operator+(MassPoly a, const MassPoly& b) { return a += b; }
  friend MassPoly operator-(const MassPoly& a) ;
  friend MassPoly operator*(const MassPoly& a, const MassPoly& b);
  friend bool operator==(const MassPoly& a, const MassPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

// Variables (r12, r13, r14, r24, r25, r35, Q12, Q13, Q14, Q24, Q25, Q35).
inline constexpr std::array<const char*, 12> kVariableNames = {
    "r12", "r13", "r14", "r24", "r25", "r35", "Q12", "Q13", "Q14", "Q24", "Q25", "Q35"};

class LaurentPoly {
 public:
  using Exponents = std::array<int, 12>;

  LaurentPoly() = default;
  static LaurentPoly constant(const MassPoly& c);
  static LaurentPoly monomial(const Exponents& e, const MassPoly& c);
  // Single variable raised to a power (index into kVariableNames).
  static LaurentPoly variable(int index, int power = 1);

  const std::map<Exponents, MassPoly>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Multiplies by the monomial that makes every exponent nonnegative with
  // no common variable factor left from the negative part.
  LaurentPoly cleared() const;
  // Substitutes numeric masses, dropping terms that vanish.
  LaurentPoly specialized(const std::array<Rational, 5>& masses) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const MassPoly& c);
  std::map<Exponents, MassPoly> terms_;
};

// Weights on the six r-classes; Q-weights follow from w(Q) = (2 - A) w(r).
struct WeightVector {
  std::array<Rational, 6> r{};

  static WeightVector parse(const std::string& csv);  // "1,0,0,0,0,0"
  std::array<Rational, 12> lifted(const Rational& A) const;
  Rational sum() const;
  std::string to_string() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.r == b.r; }
  friend bool operator<(const WeightVector& a, const WeightVector& b) { return a.r < b.r; }
};

// C5 on coordinate indices: 1->3, 3->5, 5->2, 2->4, 4->1 (r12 fixed).
WeightVector c5_rotate(const WeightVector& w);
// Relabeling 1<->2, 3<->5 on the bodies.
WeightVector reflect(const WeightVector& w);
std::vector<WeightVector> c5_orbit(const WeightVector& w);
std::vector<WeightVector> d5_orbit(const WeightVector& w);

enum class Convention { Min, Max };
std::string to_string(Convention c);

struct LabeledPoly {
  std::string label;
  LaurentPoly poly;
};

struct System {
  Rational A;
  bool generic_masses = true;
  std::vector<LabeledPoly> polys;  // 20 f_ij, 5 Cayley-Menger, 6 Q binomials
};

// A = p/q >= 2; InvalidArgument otherwise.
System build_system(const Rational& A);
System build_system(const Rational& A, const std::array<Rational, 5>& masses);

LaurentPoly initial_form(const LaurentPoly& poly, const std::array<Rational, 12>& weights,
                         Convention convention = Convention::Min);
LaurentPoly initial_form(const LaurentPoly& poly, const WeightVector& w, const Rational& A,
                         Convention convention = Convention::Min);

struct Membership {
  bool member = true;
  std::optional<std::size_t> witness_index;
  std::string witness_label;
  std::string witness_form;  // the monomial initial form
};

Membership in_prevariety(const WeightVector& w, const System& system,
                         Convention convention = Convention::Max);

// a + b·A with rational a, b.
struct AffineA {
  Rational constant = 0;
  Rational slope = 0;

  static AffineA parse(const std::string& text);  // "A-2", "-2", "1", "2A-4"
  Rational at(const Rational& A) const { return constant + slope * A; }
  std::string to_string() const;
};

using SymbolicRay = std::array<AffineA, 6>;

WeightVector specialize(const SymbolicRay& ray, const Rational& A);

struct RayClass {
  std::string label;
  SymbolicRay representative;
  int multiplicity = 1;
};

struct ConeClass {
  std::string label;
  std::vector<SymbolicRay> rays;
};

struct RayTable {
  int version = 0;
  std::vector<RayClass> rays;
  std::vector<ConeClass> cones;

  static RayTable parse(const std::string& json_text);
  static const RayTable& shipped();
};

struct OrbitMember {
  WeightVector w;
  Membership membership;
};

struct RayReport {
  std::string label;
  WeightVector representative;
  int multiplicity = 0;
  std::size_t c5_orbit_size = 0;
  std::size_t d5_orbit_size = 0;
  std::string multiplicity_matches;  // "C5", "D5" or "none"
  std::vector<OrbitMember> members;  // the C5 orbit
  bool pass = false;
};

struct ConeReport {
  std::string label;
  WeightVector interior;  // sum of the listed generators
  std::vector<OrbitMember> members;  // C5 orbit of the interior point
  bool pass = false;
};

struct TableReport {
  Rational A;
  Convention convention = Convention::Max;
  std::vector<RayReport> rays;
  std::vector<ConeReport> cones;
  std::vector<std::string> negative_sum_rays;
  bool h1_unique_negative = false;
  bool pass = false;  // membership of every orbit element and cone point
};

TableReport verify_tables(const Rational& A, const RayTable& table = RayTable::shipped(),
                          Convention convention = Convention::Max);

struct RandomCheck {
  std::vector<OrbitMember> samples;
  std::size_t rejected = 0;
};

// Uniform integer weights in [-bound, bound]^6, skipping table orbit points.
RandomCheck random_weight_check(const System& system, std::size_t count, std::uint64_t seed,
                                int bound = 1000, const RayTable& table = RayTable::shipped(),
                                Convention convention = Convention::Max);

}  // namespace eqcc::tropical
