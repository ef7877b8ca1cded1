#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spintaut/taut.hpp"

namespace spintaut {

/// Polynomial in one variable with exact coefficients (index = power).
struct RationalPolynomial {
  std::vector<Rational> coeffs;

  /// Interpolates through the first degree+1 points (distinct xs).
  static RationalPolynomial fit(const std::vector<Rational>& xs, const std::vector<Rational>& ys,
                                int degree);
  Rational operator()(const Rational& x) const;
  int degree() const;  // -1 for the zero polynomial
};

/// Raised when r-samples do not fit a polynomial of the declared degree.
class PolynomialityError : public std::runtime_error {
 public:
  PolynomialityError(const std::string& what, Term offending)
      : std::runtime_error(what), term(std::move(offending)) {}
  Term term;
};

/// Degree-c part of the spin Pixton formula at a fixed r (weightings mod 2r).
TautClass pixton_spin_r(int g, const std::vector<int>& a, int k, int c, int r);

/// Smallest admissible start of an r-window: 2r > max(Σ|a_i|, k(2g-2+n))·(c+2).
int pixton_r_start(int g, const std::vector<int>& a, int k, int c);

struct PixtonFit {
  TautClass constant;
  int r_start = 0;
  int samples = 0;
  int max_degree = -1;  // largest fitted degree over all terms
  bool residual_zero = true;
  std::optional<Term> offending;  // first term with a nonzero residual
};

/// Samples 2c+4 consecutive r from r_start, fits each canonical term with
/// degree ≤ 2c and checks the 3 surplus points. Does not throw on residue.
PixtonFit pixton_fit(int g, const std::vector<int>& a, int k, int c, int r_start);

/// Constant term in r. Retries on later windows before giving up with
/// PolynomialityError. `r_start` defaults to pixton_r_start.
TautClass pixton_spin(int g, const std::vector<int>& a, int k, int c,
                      std::optional<int> r_start = std::nullopt);

/// DR^±_g(a,k) = P^±_g(a,k), the degree-g constant term.
TautClass dr_spin(int g, const std::vector<int>& a, int k);

/// Caps worker threads used for r-sampling (0 means hardware concurrency).
void set_thread_limit(int n);
int thread_limit();

}  // namespace spintaut
