#include "hyperset/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "hyperset/error.hpp"

namespace hyperset {

Ordinal::Ordinal(std::vector<CnfTerm> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient == 0) throw PreconditionError("CNF coefficient must be positive");
    if (i > 0 && terms_[i - 1].exponent <= terms_[i].exponent)
      throw PreconditionError("CNF exponents must strictly decrease");
  }
}

Ordinal Ordinal::finite(std::uint64_t n) {
  if (n == 0) return {};
  return Ordinal({CnfTerm{0, n}});
}

Ordinal Ordinal::omega(std::uint64_t coefficient) {
  if (coefficient == 0) return {};
  return Ordinal({CnfTerm{1, coefficient}});
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto rhs = b.terms();
  const std::uint32_t lead = rhs.front().exponent;
  std::vector<CnfTerm> out;
  // Left terms below the right's leading exponent are absorbed.
  for (const CnfTerm& t : a.terms()) {
    if (t.exponent > lead) out.push_back(t);
    else if (t.exponent == lead) {
      out.push_back({lead, t.coefficient + rhs.front().coefficient});
      out.insert(out.end(), rhs.begin() + 1, rhs.end());
      return Ordinal(std::move(out));
    } else {
      break;
    }
  }
  out.insert(out.end(), rhs.begin(), rhs.end());
  return Ordinal(std::move(out));
}

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) {
  const auto x = a.terms();
  const auto y = b.terms();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].exponent != y[i].exponent) return x[i].exponent <=> y[i].exponent;
    if (x[i].coefficient != y[i].coefficient) return x[i].coefficient <=> y[i].coefficient;
  }
  return x.size() <=> y.size();
}

OrdinalKind ord_kind(const Ordinal& a) {
  if (a.is_zero()) return OrdinalKind::Zero;
  return a.terms().back().exponent == 0 ? OrdinalKind::Successor : OrdinalKind::Limit;
}

Ordinal ord_successor(const Ordinal& a) { return ord_add(a, Ordinal::finite(1)); }

Ordinal ord_max(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) == std::strong_ordering::less ? b : a; }

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const CnfTerm& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent > 1) out += '^' + std::to_string(t.exponent);
    if (t.coefficient > 1) out += '.' + std::to_string(t.coefficient);
  }
  return out;
}

namespace {

class OrdinalReader {
 public:
  explicit OrdinalReader(std::string_view text) : text_(text) {}

  Ordinal read() {
    skip_space();
    if (peek() == '0' && (pos_ + 1 == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      skip_space();
      if (pos_ != text_.size()) throw ParseError("trailing input after ordinal", pos_);
      return {};
    }
    std::vector<CnfTerm> terms;
    for (;;) {
      terms.push_back(term());
      skip_space();
      if (pos_ == text_.size()) break;
      if (peek() != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
      skip_space();
    }
    try {
      return Ordinal(std::move(terms));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), 0);
    }
  }

 private:
  CnfTerm term() {
    if (peek() == 'w') {
      ++pos_;
      CnfTerm t{1, 1};
      if (peek() == '^') {
        ++pos_;
        t.exponent = static_cast<std::uint32_t>(number());
      }
      if (peek() == '.') {
        ++pos_;
        t.coefficient = number();
      }
      return t;
    }
    return CnfTerm{0, number()};
  }

  std::uint64_t number() {
    std::uint64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw ParseError("expected natural number", pos_);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalReader(text).read(); }

Dimension Dimension::fin(std::uint64_t n) {
  if (n == 0) throw PreconditionError("finite membership dimension is at least 1");
  return Dimension(n, false);
}

std::strong_ordering Dimension::operator<=>(const Dimension& other) const {
  if (aleph0_ != other.aleph0_) return aleph0_ ? std::strong_ordering::greater : std::strong_ordering::less;
  return value_ <=> other.value_;
}

Dimension dim_sup_plus1(std::span<const Dimension> ds) {
  std::uint64_t best = 0;
  for (const Dimension& d : ds) {
    if (d.is_aleph0()) return Dimension::aleph0();
    best = std::max(best, d.value());
  }
  return Dimension::fin(best + 1);
}

std::string to_string(const Dimension& d) { return d.is_aleph0() ? "aleph0" : std::to_string(d.value()); }

}  // namespace hyperset
