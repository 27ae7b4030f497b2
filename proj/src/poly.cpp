#include "cyclelift/poly.hpp"

#include <cctype>
#include <sstream>

namespace cyclelift {

namespace {

constexpr std::size_t kMaxParsedDegree = 1u << 16;

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  PolyFunc parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool human = text_.find('x') != std::string_view::npos ||
                 text_.find('X') != std::string_view::npos;
    return human ? parse_human() : parse_list();
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  bool at_x() const { return at('x') || at('X'); }

  PolyFunc::Coefficient unsigned_integer() {
    if (!at_digit()) fail("expected digit");
    PolyFunc::Coefficient v = 0;
    while (at_digit()) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  PolyFunc parse_list() {
    std::vector<PolyFunc::Coefficient> coeffs;
    while (true) {
      skip_ws();
      bool negative = false;
      if (at('-') || at('+')) {
        negative = at('-');
        ++pos_;
        skip_ws();
      }
      PolyFunc::Coefficient v = unsigned_integer();
      coeffs.push_back(negative ? PolyFunc::Coefficient(-v) : v);
      skip_ws();
      if (pos_ == text_.size()) break;
      if (!at(',')) fail("expected ',' between coefficients");
      ++pos_;
    }
    return PolyFunc(std::move(coeffs));
  }

  PolyFunc parse_human() {
    std::vector<PolyFunc::Coefficient> coeffs(1, 0);
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) {
        if (first) fail("empty polynomial");
        break;
      }
      bool negative = false;
      if (at('+') || at('-')) {
        negative = at('-');
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      std::size_t term_start = pos_;
      PolyFunc::Coefficient c = 1;
      bool have_coeff = false;
      if (at_digit()) {
        c = unsigned_integer();
        have_coeff = true;
        skip_ws();
      }
      std::size_t exponent = 0;
      if (at_x()) {
        ++pos_;
        exponent = 1;
        skip_ws();
        if (at('^')) {
          ++pos_;
          skip_ws();
          std::size_t exp_pos = pos_;
          PolyFunc::Coefficient e = unsigned_integer();
          if (e > kMaxParsedDegree) {
            pos_ = exp_pos;
            fail("exponent too large");
          }
          exponent = static_cast<std::size_t>(e);
        }
      } else if (!have_coeff) {
        pos_ = term_start;
        fail("expected term");
      }
      if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
      coeffs[exponent] += negative ? PolyFunc::Coefficient(-c) : c;
    }
    return PolyFunc(std::move(coeffs));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint64_t reduce_big(const PolyFunc::Coefficient& c, std::uint64_t m) {
  PolyFunc::Coefficient r = c % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

}  // namespace

PolyFunc::PolyFunc(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyFunc::PolyFunc(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void PolyFunc::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

ModularPoly PolyFunc::modulo(std::uint64_t m) const {
  std::vector<std::uint64_t> reduced;
  reduced.reserve(coeffs_.size());
  for (const Coefficient& c : coeffs_) reduced.push_back(reduce_big(c, m));
  return ModularPoly(std::move(reduced), m);
}

std::string PolyFunc::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Coefficient& c = coeffs_[i];
    if (c == 0) continue;
    Coefficient mag = c < 0 ? Coefficient(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

PolyFunc operator+(const PolyFunc& a, const PolyFunc& b) {
  std::vector<PolyFunc::Coefficient> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return PolyFunc(std::move(out));
}

PolyFunc parse_poly(std::string_view text) { return PolyParser(text).parse(); }

Residue eval(const PolyFunc& f, const Residue& a, const Modulus& m) {
  const std::uint64_t mod = m.value();
  return {f.modulo(mod)(a.value % mod), mod};
}

PolyFunc derivative(const PolyFunc& f) {
  const auto& c = f.coeffs();
  if (c.size() == 1) return PolyFunc{};
  std::vector<PolyFunc::Coefficient> out;
  out.reserve(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i] * i);
  return PolyFunc(std::move(out));
}

Residue iterate_eval(const PolyFunc& f, const Residue& a, std::uint64_t t, const Modulus& m) {
  const std::uint64_t mod = m.value();
  return {f.modulo(mod).iterate(a.value % mod, t), mod};
}

}  // namespace cyclelift
