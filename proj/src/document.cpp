#include "tropkit/document.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace tropkit {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

const char* const kind_names[] = {"fan", "complex", "polynomial", "boundary_data", "admissible_fan"};

class Cursor {
 public:
  Cursor(std::string text, std::size_t line) : s_(std::move(text)), line_(line) {}

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, pos_ + 1, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, pos + 1, message);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  std::size_t position() {
    skip_space();
    return pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '[' &&
           s_[pos_] != ']' && s_[pos_] != ',')
      ++pos_;
    if (start == pos_) fail("expected a word");
    return s_.substr(start, pos_ - start);
  }

  Rational rational() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                                s_[pos_] == '+' || s_[pos_] == '/'))
      ++pos_;
    const std::string token = s_.substr(start, pos_ - start);
    try {
      return parse_rational(token);
    } catch (const InvalidArgument& e) {
      fail_at(start, e.what());
    }
  }

  Integer integer() {
    const std::size_t start = position();
    const Rational r = rational();
    if (denominator(r) != 1) fail_at(start, "expected an integer");
    return numerator(r);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  QVector vector(std::size_t rank) {
    const std::size_t start = position();
    expect('[');
    std::vector<Rational> entries;
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
    } else {
      while (true) {
        entries.push_back(rational());
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    }
    if (entries.size() != rank)
      fail_at(start, "vector has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(rank));
    return QVector(std::move(entries));
  }

  ZVector integer_vector(std::size_t rank) {
    const std::size_t start = position();
    const QVector v = vector(rank);
    if (!v.is_integral()) fail_at(start, "expected an integer vector");
    return v.to_integers();
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing text");
  }

 private:
  std::string s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> meaningful_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    if (raw.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(Line{number, raw});
  }
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, std::size_t max_rank) : lines_(meaningful_lines(text)), max_rank_(max_rank) {}

  Document parse() {
    Document doc;
    {
      Cursor c = next("expected header 'tropkit 1'");
      if (c.word() != "tropkit") c.fail_at(0, "expected header 'tropkit 1'");
      const std::size_t at = c.position();
      const Integer v = c.integer();
      if (v != 1) c.fail_at(at, "unsupported format version " + v.str());
      c.finish();
    }
    std::string kind;
    {
      Cursor c = next("expected 'kind'");
      if (c.word() != "kind") c.fail_at(0, "expected 'kind'");
      const std::size_t at = c.position();
      kind = c.word();
      if (std::find(std::begin(kind_names), std::end(kind_names), kind) == std::end(kind_names))
        c.fail_at(at, "unknown document kind '" + kind + "'");
      c.finish();
    }
    {
      Cursor c = next("expected 'rank'");
      if (c.word() != "rank") c.fail_at(0, "expected 'rank'");
      const std::size_t at = c.position();
      const Integer r = c.integer();
      if (r < 1) c.fail_at(at, "rank must be at least 1");
      if (r > max_rank_)
        throw DeskScaleExceeded("ambient rank " + r.str() + " exceeds the cap " + std::to_string(max_rank_));
      rank_ = r.convert_to<std::size_t>();
      c.finish();
    }
    if (kind == "fan") {
      doc.payload = fan_body();
    } else if (kind == "admissible_fan") {
      AdmissibleFanDocument a;
      Cursor c = next("expected 'scale'");
      if (c.word() != "scale") c.fail_at(0, "expected 'scale'");
      const std::size_t at = c.position();
      a.scale = c.integer();
      if (a.scale < 1) c.fail_at(at, "scale must be at least 1");
      c.finish();
      a.fan = fan_body();
      doc.payload = std::move(a);
    } else if (kind == "complex") {
      doc.payload = complex_body();
    } else if (kind == "polynomial") {
      doc.payload = polynomial_body();
    } else {
      doc.payload = boundary_body();
    }
    return doc;
  }

 private:
  Cursor next(const std::string& what) {
    if (i_ >= lines_.size()) {
      const std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(line, 1, what + ", found end of input");
    }
    const Line& l = lines_[i_++];
    return Cursor(l.text, l.number);
  }
  bool more() const { return i_ < lines_.size(); }

  // reads "<opener>" ... "end" blocks of "<keyword> <vector>" lines
  template <typename Handle>
  void blocks(const std::string& opener, Handle handle) {
    while (more()) {
      Cursor c = next("");
      const std::string w = c.word();
      if (w != opener) c.fail_at(0, "expected '" + opener + "'");
      c.finish();
      block_line_ = lines_[i_ - 1].number;
      bool closed = false;
      while (more()) {
        Cursor b = next("");
        const std::size_t at = b.position();
        const std::string key = b.word();
        if (key == "end") {
          b.finish();
          closed = true;
          break;
        }
        handle(key, b, at);
        b.finish();
      }
      if (!closed) throw ParseError(lines_.back().number + 1, 1, "missing 'end' for '" + opener + "'");
      after_block();
    }
  }

  std::function<void()> after_block = [] {};
  std::size_t block_line_ = 0;

  FanDocument fan_body() {
    FanDocument f;
    f.rank = rank_;
    ConeSpec current;
    after_block = [&] {
      f.cones.push_back(std::move(current));
      current = ConeSpec{};
    };
    blocks("cone", [&](const std::string& key, Cursor& c, std::size_t at) {
      if (key == "ray")
        current.rays.push_back(c.vector(rank_));
      else if (key == "lineality")
        current.lineality.push_back(c.vector(rank_));
      else
        c.fail_at(at, "expected 'ray', 'lineality' or 'end'");
    });
    return f;
  }

  ComplexDocument complex_body() {
    ComplexDocument d;
    d.rank = rank_;
    CellSpec current;
    after_block = [&] {
      if (current.vertices.empty())
        throw ParseError(block_line_, 1, "cell without a vertex");
      d.cells.push_back(std::move(current));
      current = CellSpec{};
    };
    blocks("cell", [&](const std::string& key, Cursor& c, std::size_t at) {
      if (key == "vertex")
        current.vertices.push_back(c.vector(rank_));
      else if (key == "ray")
        current.rays.push_back(c.vector(rank_));
      else if (key == "lineality")
        current.lineality.push_back(c.vector(rank_));
      else
        c.fail_at(at, "expected 'vertex', 'ray', 'lineality' or 'end'");
    });
    return d;
  }

  PolynomialDocument polynomial_body() {
    PolynomialDocument d;
    d.rank = rank_;
    std::vector<TermSpec> current;
    std::set<ZVector> seen;
    after_block = [&] {
      if (current.empty()) throw ParseError(block_line_, 1, "polynomial without terms");
      d.polynomials.push_back(std::move(current));
      current.clear();
      seen.clear();
    };
    blocks("polynomial", [&](const std::string& key, Cursor& c, std::size_t at) {
      if (key != "term") c.fail_at(at, "expected 'term' or 'end'");
      TermSpec t;
      const std::size_t exp_at = c.position();
      t.exponent = c.integer_vector(rank_);
      if (!seen.insert(t.exponent).second) c.fail_at(exp_at, "repeated exponent");
      const std::size_t val_at = c.position();
      if (c.word() != "val") c.fail_at(val_at, "expected 'val'");
      const std::size_t num_at = c.position();
      t.valuation = c.rational();
      if (denominator(t.valuation) > max_valuation_denominator)
        c.fail_at(num_at, "valuation denominator exceeds 1000000");
      t.tag = "1";
      if (!c.at_end()) {
        const std::size_t tag_at = c.position();
        if (c.word() != "tag") c.fail_at(tag_at, "expected 'tag'");
        t.tag = c.word();
      }
      current.push_back(std::move(t));
    });
    return d;
  }

  BoundaryData boundary_body() {
    BoundaryData d;
    d.rank = rank_;
    while (more()) {
      Cursor c = next("");
      const std::size_t at = c.position();
      const std::string key = c.word();
      if (key == "divisor") {
        BoundaryDivisor div;
        div.id = c.word();
        div.val = c.integer_vector(rank_);
        d.divisors.push_back(std::move(div));
      } else if (key == "stratum") {
        std::vector<std::string> ids;
        while (!c.at_end()) ids.push_back(c.word());
        d.strata.push_back(std::move(ids));
      } else {
        c.fail_at(at, "expected 'divisor' or 'stratum'");
      }
      c.finish();
    }
    validate_boundary_data(d);
    return d;
  }

  std::vector<Line> lines_;
  std::size_t i_ = 0;
  std::size_t max_rank_;
  std::size_t rank_ = 0;
};

void render_fan(std::ostream& os, const FanDocument& f) {
  for (const auto& c : f.cones) {
    os << "cone\n";
    for (const auto& r : c.rays) os << "  ray " << r << '\n';
    for (const auto& l : c.lineality) os << "  lineality " << l << '\n';
    os << "end\n";
  }
}

}  // namespace

Rational parse_rational(const std::string& text) {
  static const auto digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  };
  std::string body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  const auto slash = body.find('/');
  const std::string num = body.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw InvalidArgument("malformed rational '" + text + "'");
  const Integer d(den);
  if (d == 0) throw InvalidArgument("zero denominator");
  Rational r(Integer(num), d);
  return negative ? Rational(-r) : r;
}

std::vector<QVector> parse_vector_list(const std::string& text) {
  Cursor c(text, 1);
  std::vector<QVector> out;
  while (!c.at_end()) {
    const std::size_t start = c.position();
    c.expect('[');
    std::vector<Rational> entries;
    while (true) {
      entries.push_back(c.rational());
      if (c.at_end()) c.fail("expected ']'");
      const std::size_t p = c.position();
      if (text[p] == ',') {
        c.expect(',');
        continue;
      }
      c.expect(']');
      break;
    }
    if (entries.empty()) c.fail_at(start, "empty vector");
    out.emplace_back(std::move(entries));
  }
  return out;
}

std::string kind_name(const Document& doc) { return kind_names[doc.payload.index()]; }

Document parse_document(const std::string& text, std::size_t max_rank) {
  return Parser(text, max_rank).parse();
}

std::string render(const Document& doc) {
  std::ostringstream os;
  os << "tropkit " << doc.version << '\n' << "kind " << kind_name(doc) << '\n';
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FanDocument>) {
          os << "rank " << p.rank << '\n';
          render_fan(os, p);
        } else if constexpr (std::is_same_v<T, AdmissibleFanDocument>) {
          os << "rank " << p.fan.rank << '\n' << "scale " << p.scale << '\n';
          render_fan(os, p.fan);
        } else if constexpr (std::is_same_v<T, ComplexDocument>) {
          os << "rank " << p.rank << '\n';
          for (const auto& c : p.cells) {
            os << "cell\n";
            for (const auto& v : c.vertices) os << "  vertex " << v << '\n';
            for (const auto& r : c.rays) os << "  ray " << r << '\n';
            for (const auto& l : c.lineality) os << "  lineality " << l << '\n';
            os << "end\n";
          }
        } else if constexpr (std::is_same_v<T, PolynomialDocument>) {
          os << "rank " << p.rank << '\n';
          for (const auto& poly : p.polynomials) {
            os << "polynomial\n";
            for (const auto& t : poly) os << "  term " << t.exponent << " val " << t.valuation << " tag " << t.tag << '\n';
            os << "end\n";
          }
        } else {
          os << "rank " << p.rank << '\n';
          for (const auto& d : p.divisors) os << "divisor " << d.id << ' ' << d.val << '\n';
          for (const auto& s : p.strata) {
            os << "stratum";
            for (const auto& id : s) os << ' ' << id;
            os << '\n';
          }
        }
      },
      doc.payload);
  return os.str();
}

std::vector<Cone> to_cones(const FanDocument& doc) {
  std::vector<Cone> out;
  for (const auto& c : doc.cones) out.push_back(Cone::from_generators(doc.rank, c.rays, c.lineality));
  return out;
}

FanDocument to_document(const Fan& fan) {
  FanDocument out;
  out.rank = fan.ambient_rank();
  for (const auto& c : fan.maximal_cones()) {
    ConeSpec spec;
    for (const auto& r : c.rays()) spec.rays.emplace_back(r);
    for (const auto& l : c.lineality()) spec.lineality.emplace_back(l);
    out.cones.push_back(std::move(spec));
  }
  return out;
}

std::vector<Polyhedron> to_cells(const ComplexDocument& doc) {
  std::vector<Polyhedron> out;
  for (const auto& c : doc.cells) out.push_back(Polyhedron::from_generators(doc.rank, c.vertices, c.rays, c.lineality));
  return out;
}

ComplexDocument to_document(const PolyhedralComplex& complex) {
  ComplexDocument out;
  out.rank = complex.ambient_rank();
  for (const auto& p : complex.cells()) {
    CellSpec spec;
    spec.vertices = p.vertices();
    for (const auto& r : p.rays()) spec.rays.emplace_back(r);
    for (const auto& l : p.lineality()) spec.lineality.emplace_back(l);
    out.cells.push_back(std::move(spec));
  }
  return out;
}

std::vector<ValuedLaurentPolynomial> to_polynomials(const PolynomialDocument& doc) {
  std::vector<ValuedLaurentPolynomial> out;
  for (const auto& terms : doc.polynomials) {
    std::map<ZVector, ValuedCoefficient> t;
    for (const auto& term : terms) t.emplace(term.exponent, ValuedCoefficient{term.valuation, term.tag});
    out.emplace_back(doc.rank, std::move(t));
  }
  return out;
}

}  // namespace tropkit
