#pragma once

/**
 * Line-oriented text documents.
 *
 *   tropkit 1
 *   kind fan
 *   rank 2
 *   cone
 *     ray [1, 0]
 *     ray [1, 1]
 *   end
 *
 * Blank lines and text after '#' are ignored.  Rationals are written p/q or
 * as integers; vectors as [a, b, ...].  render() emits the canonical layout
 * and parse(render(d)) == d for every document d.
 */

#include "tropkit/exact_lattice.hpp"
#include "tropkit/error.hpp"
#include "tropkit/geomtrop_schoen.hpp"
#include "tropkit/tropical.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tropkit {

struct ConeSpec {
  std::vector<QVector> rays;
  std::vector<QVector> lineality;
  friend bool operator==(const ConeSpec&, const ConeSpec&) = default;
};

struct FanDocument {
  std::size_t rank = 0;
  std::vector<ConeSpec> cones;
  friend bool operator==(const FanDocument&, const FanDocument&) = default;
};

struct AdmissibleFanDocument {
  FanDocument fan;
  Integer scale = 1;
  friend bool operator==(const AdmissibleFanDocument&, const AdmissibleFanDocument&) = default;
};

struct CellSpec {
  std::vector<QVector> vertices;
  std::vector<QVector> rays;
  std::vector<QVector> lineality;
  friend bool operator==(const CellSpec&, const CellSpec&) = default;
};

struct ComplexDocument {
  std::size_t rank = 0;
  std::vector<CellSpec> cells;
  friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

struct TermSpec {
  ZVector exponent;
  Rational valuation;
  std::string tag;
  friend bool operator==(const TermSpec&, const TermSpec&) = default;
};

struct PolynomialDocument {
  std::size_t rank = 0;
  std::vector<std::vector<TermSpec>> polynomials;
  friend bool operator==(const PolynomialDocument&, const PolynomialDocument&) = default;
};

using Payload = std::variant<FanDocument, ComplexDocument, PolynomialDocument, BoundaryData, AdmissibleFanDocument>;

struct Document {
  int version = 1;
  Payload payload;
  friend bool operator==(const Document&, const Document&) = default;
};

/// "fan", "complex", "polynomial", "boundary_data" or "admissible_fan".
std::string kind_name(const Document& doc);

/// Parse failure with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Largest accepted valuation denominator.
inline constexpr long max_valuation_denominator = 1000000;

/// Throws ParseError on syntax errors and InvalidArgument / RankMismatch /
/// DeskScaleExceeded (rank above max_rank) on invariant violations.
Document parse_document(const std::string& text, std::size_t max_rank = 8);
std::string render(const Document& doc);

// Conversions between documents and toolkit values.
std::vector<Cone> to_cones(const FanDocument& doc);
FanDocument to_document(const Fan& fan);
std::vector<Polyhedron> to_cells(const ComplexDocument& doc);
ComplexDocument to_document(const PolyhedralComplex& complex);
std::vector<ValuedLaurentPolynomial> to_polynomials(const PolynomialDocument& doc);

/// Parses a rational "p/q" or "p".
Rational parse_rational(const std::string& text);
/// Parses a whitespace-separated list of vectors "[a, b] [c, d]".
std::vector<QVector> parse_vector_list(const std::string& text);

}  // namespace tropkit
