#pragma once

// Ordinals below omega^omega in Cantor normal form, and the finite / aleph-0
// membership dimension.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperset {

/// One Cantor-normal-form term omega^exponent * coefficient.
struct CnfTerm {
  std::uint32_t exponent = 0;
  std::uint64_t coefficient = 1;

  bool operator==(const CnfTerm&) const = default;
};

/// An ordinal sum of CNF terms, highest exponent first. Empty is zero.
class Ordinal {
 public:
  Ordinal() = default;

  /// Builds from terms; throws PreconditionError unless exponents strictly
  /// decrease and coefficients are positive.
  explicit Ordinal(std::vector<CnfTerm> terms);

  static Ordinal zero() { return {}; }
  static Ordinal finite(std::uint64_t n);
  static Ordinal omega(std::uint64_t coefficient = 1);

  std::span<const CnfTerm> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0); }
  /// Value of a finite ordinal; undefined for infinite ones.
  std::uint64_t finite_value() const { return terms_.empty() ? 0 : terms_[0].coefficient; }

  bool operator==(const Ordinal&) const = default;

 private:
  std::vector<CnfTerm> terms_;
};

enum class OrdinalKind { Zero, Successor, Limit };

/// Non-commutative ordinal sum a + b.
Ordinal ord_add(const Ordinal& a, const Ordinal& b);
/// Lexicographic comparison of the CNF term lists.
std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);
OrdinalKind ord_kind(const Ordinal& a);
Ordinal ord_successor(const Ordinal& a);
Ordinal ord_max(const Ordinal& a, const Ordinal& b);

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b); }
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }

/// Renders "0", "5", "w", "w+3", "w.2+1", "w^2.3+w".
std::string to_string(const Ordinal& a);
/// Parses the grammar produced by to_string. Throws ParseError.
Ordinal parse_ordinal(std::string_view text);

/// Membership dimension: Fin(n) with n >= 1, or aleph-0.
class Dimension {
 public:
  static Dimension fin(std::uint64_t n);
  static Dimension aleph0() { return Dimension(0, true); }

  bool is_aleph0() const { return aleph0_; }
  /// Finite value; 0 for aleph-0.
  std::uint64_t value() const { return value_; }

  bool operator==(const Dimension&) const = default;
  /// Fin(n) < Fin(n+1) < ... < aleph0.
  std::strong_ordering operator<=>(const Dimension& other) const;

 private:
  Dimension(std::uint64_t v, bool a) : value_(v), aleph0_(a) {}
  std::uint64_t value_ = 1;
  bool aleph0_ = false;
};

/// sup{ds} + 1 with sup of the empty list taken as Fin(0), so [] -> Fin(1).
Dimension dim_sup_plus1(std::span<const Dimension> ds);
inline Dimension dim_sup_plus1(std::initializer_list<Dimension> ds) {
  return dim_sup_plus1(std::span<const Dimension>(ds.begin(), ds.size()));
}

/// "3" or "aleph0".
std::string to_string(const Dimension& d);

}  // namespace hyperset
