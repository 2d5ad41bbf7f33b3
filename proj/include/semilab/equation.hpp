#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semilab/characters.hpp"
#include "semilab/morphisms.hpp"
#include "semilab/semigroup.hpp"

namespace semilab {

// The six equation shapes, all instances of
//   s1*f(arg1) + s2*mu(y)*f(arg2) = 2*f(x)*f(y)
// with arg1 = x*y(*z0) and arg2 = x*tau(y)(*z0) or tau(y)*x(*z0).
enum class EquationFamily {
  kannappan,          // f(x y z0) + mu(y) f(x tau(y) z0) = 2 f(x) f(y)
  kannappan_variant,  // f(x y z0) + mu(y) f(tau(y) x z0) = 2 f(x) f(y)
  vanvleck,           // mu(y) f(x tau(y) z0) - f(x y z0) = 2 f(x) f(y)
  vanvleck_variant,   // mu(y) f(tau(y) x z0) - f(x y z0) = 2 f(x) f(y)
  dalembert,          // g(x y) + mu(y) g(x tau(y)) = 2 g(x) g(y)
  dalembert_variant,  // g(x y) + mu(y) g(tau(y) x) = 2 g(x) g(y)
};

constexpr EquationFamily kZ0Families[] = {
    EquationFamily::kannappan, EquationFamily::kannappan_variant,
    EquationFamily::vanvleck, EquationFamily::vanvleck_variant};

std::string to_string(EquationFamily family);
EquationFamily family_from_string(const std::string& name);

bool is_kannappan_type(EquationFamily family);
bool is_vanvleck_type(EquationFamily family);

enum class TauSide { right, left };

struct EquationSpec {
  EquationFamily family;
  int s1;  // sign of the f(x*y...) term
  int s2;  // sign of the mu(y)*f(...tau(y)...) term
  TauSide tau_side;
  bool uses_z0;

  static EquationSpec of(EquationFamily family);
};

constexpr double kDefaultTol = 1e-9;
constexpr double kDedupTol = 1e-7;

// A complex-valued function on the elements.  Entries must be finite.
class ComplexFunction {
 public:
  ComplexFunction() = default;
  explicit ComplexFunction(std::vector<Cx> values);

  static ComplexFunction zero(int n);
  static ComplexFunction constant(int n, Cx c);

  int size() const { return static_cast<int>(values_.size()); }
  Cx operator[](int x) const { return values_[x]; }
  const std::vector<Cx>& values() const { return values_; }

  double max_abs() const;
  bool is_zero(double tol = kDefaultTol) const { return max_abs() <= tol; }

 private:
  std::vector<Cx> values_;
};

bool approx_equal(const ComplexFunction& a, const ComplexFunction& b,
                  double tol);

// Componentwise rounding to the dedup quantum; equal keys identify solutions.
std::vector<std::pair<long long, long long>> canonical_key(
    const ComplexFunction& f, double quantum = kDedupTol);

struct ResidualReport {
  double max_abs = 0.0;
  std::pair<int, int> argmax_pair{0, 0};
  // |LHS - RHS| per (x, y), row-major; filled only on request.
  std::optional<std::vector<double>> per_pair;
};

// Scans all pairs (x, y).  Throws MissingZ0Error / NonCentralZ0Error.
ResidualReport residual(const ComplexFunction& f, const EquationSpec& spec,
                        const Semigroup& s, const InvolutiveMorphism& tau,
                        const Character& mu, std::optional<int> z0,
                        bool include_per_pair = false);

bool is_solution(const ComplexFunction& f, const EquationSpec& spec,
                 const Semigroup& s, const InvolutiveMorphism& tau,
                 const Character& mu, std::optional<int> z0,
                 double tol = kDefaultTol);

struct LemmaCheck {
  std::string id;  // equation number, e.g. "4.3"
  bool pass = false;
  double deviation = 0.0;
};

// Evaluates the identity suite proved for the family's solutions ("2.1"-"2.4"
// for kannappan, "3.1"-"3.4" for the variant, "4.1"-"4.6" for vanvleck,
// "5.1"-"5.8" for its variant).  Diagnostic: f need not be a solution, each
// identity reports its own deviation.  Nonexistence-style items ("2.4",
// "3.4", "4.2", "5.2") check the falsifiable direction: f nonzero implies
// f(z0) nonzero.  Throws UnknownFamilyError for the z0-free families.
std::vector<LemmaCheck> lemma_suite(const ComplexFunction& f,
                                    EquationFamily family, const Semigroup& s,
                                    const InvolutiveMorphism& tau,
                                    const Character& mu, int z0,
                                    double tol = kDefaultTol);

bool all_pass(const std::vector<LemmaCheck>& checks);

// max over pairs of |f(x*y) - f(x)g(y) - f(y)g(x)|.
double sine_addition_residual(const ComplexFunction& f,
                              const ComplexFunction& g, const Semigroup& s);

enum class SolutionClass { A, M };

// Class A: solutions g of the d'Alembert equation with g(z0) != 0 and
// g(x*z0) = g(z0)g(x); class M: same over the variant equation.
struct ClassMembership {
  bool member = false;
  std::string reason;  // first failing clause when member is false
  double equation_residual = 0.0;
  double z0_value_abs = 0.0;
  double shift_condition_dev = 0.0;
};

ClassMembership class_membership(const ComplexFunction& g, SolutionClass cls,
                                 const Semigroup& s,
                                 const InvolutiveMorphism& tau,
                                 const Character& mu, int z0,
                                 double tol = kDefaultTol);

}  // namespace semilab
