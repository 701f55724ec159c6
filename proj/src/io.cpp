#include "cevian/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <vector>

namespace cevian {
namespace {

/// Whitespace-free view of the input that remembers original offsets.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != ' ' && text[i] != '\t') {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
  }

  bool done() const { return pos_ == chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[pos_]; }
  void advance(std::size_t n = 1) { pos_ += n; }
  std::string_view rest() const { return {chars_.data() + pos_, chars_.size() - pos_}; }

  [[noreturn]] void fail(const std::string& what) const {
    const std::size_t where = done() ? text_.size() : offsets_[pos_];
    throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(where) + " in \"" +
                                           std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t pos_ = 0;
};

double parse_decimal(Cursor& cur) {
  const std::string_view rest = cur.rest();
  if (rest.empty() || !(std::isdigit(static_cast<unsigned char>(rest[0])) || rest[0] == '.')) {
    cur.fail("expected a number");
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc() || !std::isfinite(v)) cur.fail("malformed number");
  cur.advance(static_cast<std::size_t>(ptr - rest.data()));
  return v;
}

/// decimal ['/' decimal]
double parse_magnitude(Cursor& cur) {
  const double num = parse_decimal(cur);
  if (cur.peek() != '/') return num;
  cur.advance();
  const double den = parse_decimal(cur);
  if (den == 0.0) cur.fail("zero denominator");
  return num / den;
}

struct Term {
  double value;
  bool imaginary;
};

/// [sign] (magnitude ['i'] | 'i')
Term parse_term(Cursor& cur, bool sign_required) {
  double sign = 1.0;
  if (cur.peek() == '+' || cur.peek() == '-') {
    sign = cur.peek() == '-' ? -1.0 : 1.0;
    cur.advance();
  } else if (sign_required) {
    cur.fail("expected '+' or '-'");
  }
  if (cur.peek() == 'i') {
    cur.advance();
    return {sign, true};
  }
  const double m = parse_magnitude(cur);
  if (cur.peek() == 'i') {
    cur.advance();
    return {sign * m, true};
  }
  return {sign * m, false};
}

}  // namespace

Complex parse_complex(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty complex literal");
  const Term first = parse_term(cur, false);
  if (cur.done()) return first.imaginary ? Complex{0.0, first.value} : Complex{first.value, 0.0};
  if (first.imaginary) cur.fail("imaginary part must come last");
  const Term second = parse_term(cur, true);
  if (!second.imaginary) cur.fail("expected an imaginary part ending in 'i'");
  if (!cur.done()) cur.fail("trailing characters");
  return {first.value, second.value};
}

double parse_real(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) cur.fail("empty number");
  const Term t = parse_term(cur, false);
  if (t.imaginary) cur.fail("expected a real number");
  if (!cur.done()) cur.fail("trailing characters");
  return t.value;
}

TriangleTriple parse_triangle_csv(std::string_view text) {
  std::vector<double> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    fields.push_back(parse_real(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 6) {
    throw Error(ErrorKind::ParseError, "triangle record needs 6 fields, got " + std::to_string(fields.size()));
  }
  return make_triple({fields[0], fields[1]}, {fields[2], fields[3]}, {fields[4], fields[5]});
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string format_triangle_csv(const TriangleTriple& t) {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) out += ',';
    out += format_real(t.vertices()[i].real());
    out += ',';
    out += format_real(t.vertices()[i].imag());
  }
  return out;
}

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json sphere_json(const SphereValue& s) {
  return s.is_infinite() ? nlohmann::json("inf") : complex_json(s.value());
}

nlohmann::json chart_json(const ChartComponent& c) {
  switch (c.outcome) {
    case ChartOutcome::Determinate: return complex_json(c.value);
    case ChartOutcome::ChartEscape: return "inf";
    case ChartOutcome::Indeterminate: return nullptr;
  }
  return nullptr;
}

nlohmann::json classification_json(const Classification& c, const PqChart& params) {
  nlohmann::json j;
  j["p"] = chart_json(params.p);
  j["q"] = chart_json(params.q);
  j["eta"] = complex_json(c.eta.eta);
  j["etap"] = complex_json(c.eta.etap);
  j["xi"] = c.xi ? sphere_json(*c.xi) : nlohmann::json(nullptr);
  j["t"] = c.t ? sphere_json(*c.t) : nlohmann::json(nullptr);
  j["regular"] = c.is_regular;
  j["normal"] = c.is_normal;
  j["area_preserving"] = c.is_area_preserving;
  j["identity"] = c.is_identity;
  j["cyclic"] = c.is_cyclic_permutation;
  j["collapses_moduli"] = c.collapses_moduli;
  return j;
}

}  // namespace cevian
