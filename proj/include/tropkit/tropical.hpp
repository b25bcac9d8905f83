#pragma once

#include "tropkit/fan_engine.hpp"

#include <map>
#include <string>
#include <vector>

namespace tropkit {

/** A nonzero coefficient, known only through its valuation and a residue label. */
struct ValuedCoefficient {
  Rational valuation;
  std::string tag;
  friend bool operator==(const ValuedCoefficient&, const ValuedCoefficient&) = default;
};

/** Laurent polynomial in rank variables with valued coefficients; at least one term. */
class ValuedLaurentPolynomial {
 public:
  ValuedLaurentPolynomial(std::size_t rank, std::map<ZVector, ValuedCoefficient> terms);

  std::size_t rank() const { return rank_; }
  const std::map<ZVector, ValuedCoefficient>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_constant_coefficient() const;

  friend bool operator==(const ValuedLaurentPolynomial&, const ValuedLaurentPolynomial&) = default;

 private:
  std::size_t rank_;
  std::map<ZVector, ValuedCoefficient> terms_;
};

/// Terms attaining min(val(c_m) + <w, m>), in exponent order.
struct InitialForm {
  Rational value;
  std::vector<ZVector> exponents;
  std::vector<std::string> tags;
  bool is_monomial() const { return exponents.size() == 1; }
};

InitialForm initial_form(const ValuedLaurentPolynomial& f, const QVector& w);

/// Either a generator whose initial form at w is a monomial, or undetermined.
struct TropicalCertificate {
  bool excluded = false;
  std::size_t witness = 0;  ///< index into the generator list when excluded
  std::vector<InitialForm> forms;  ///< initial form of every generator, in order
};

TropicalCertificate is_in_tropicalization_certificate(const std::vector<ValuedLaurentPolynomial>& generators,
                                                      const QVector& w);

struct TropicalHypersurface {
  PolyhedralComplex complex;
  /// For each cell of the complex, the exponents tied for the minimum in its relative interior.
  std::vector<std::vector<ZVector>> tied;
  /// Set when the input has a single term; the complex is then empty.
  bool monomial_input = false;
};

TropicalHypersurface tropical_hypersurface(const ValuedLaurentPolynomial& f);

/// The hypersurface of a constant-coefficient polynomial as a fan.  Throws
/// InvalidArgument if some coefficient has nonzero valuation.
Fan constant_coefficient_fan(const ValuedLaurentPolynomial& f);

}  // namespace tropkit
