#pragma once

// Dirichlet characters mod q. The unit group (Z/qZ)* is written as a product
// of cyclic groups with fixed generators; a character is an exponent vector
// against that basis and its values are exact rational angles k/E, where E is
// the group exponent, converted to complex numbers only on evaluation.

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gzlab {

inline constexpr std::uint32_t kMaxCharacterModulus = 100000;

struct Generator {
  std::uint32_t residue;
  std::uint32_t order;
};

class Character;

class CharacterGroup {
 public:
  [[nodiscard]] std::uint32_t q() const noexcept { return impl_->q; }
  [[nodiscard]] std::uint32_t size() const noexcept { return impl_->size; }
  [[nodiscard]] std::span<const Generator> generators() const noexcept { return impl_->gens; }
  // Exponent of the group: lcm of the generator orders (1 for trivial groups).
  [[nodiscard]] std::uint32_t exponent() const noexcept { return impl_->exponent; }

  [[nodiscard]] bool is_unit(std::uint64_t m) const noexcept { return impl_->unit[m % impl_->q] != 0; }

  // Exponent vector of a unit residue, one entry per generator.
  [[nodiscard]] std::span<const std::uint32_t> dlog(std::uint64_t m) const;

  // Residue with the given exponent vector.
  [[nodiscard]] std::uint32_t residue(std::span<const std::uint32_t> exps) const;

  // Unit residues in increasing order.
  [[nodiscard]] std::span<const std::uint32_t> units() const noexcept { return impl_->units; }

  // exp(2 pi i k / exponent()); exact at multiples of a quarter turn.
  [[nodiscard]] std::complex<double> root(std::uint32_t k) const noexcept { return impl_->roots[k % impl_->exponent]; }

  [[nodiscard]] Character character(std::vector<std::uint32_t> index) const;
  [[nodiscard]] Character principal() const;

  // All size() characters, principal first, index vectors in lexicographic order.
  [[nodiscard]] std::vector<Character> characters() const;

 private:
  friend CharacterGroup build_group(std::uint32_t q);

  struct Impl {
    std::uint32_t q = 1;
    std::uint32_t size = 1;
    std::uint32_t exponent = 1;
    std::vector<Generator> gens;
    std::vector<std::uint8_t> unit;
    std::vector<std::uint32_t> units;
    std::vector<std::uint32_t> dlog;  // q rows of gens.size() entries
    std::vector<std::complex<double>> roots;
  };
  std::shared_ptr<const Impl> impl_;
};

// Throws SizeError unless 1 <= q <= 100000.
[[nodiscard]] CharacterGroup build_group(std::uint32_t q);

class Character {
 public:
  [[nodiscard]] const CharacterGroup& group() const noexcept { return group_; }
  [[nodiscard]] std::uint32_t q() const noexcept { return group_.q(); }
  [[nodiscard]] std::span<const std::uint32_t> index() const noexcept { return index_; }
  [[nodiscard]] int parity() const noexcept { return parity_; }
  [[nodiscard]] bool is_real() const noexcept { return is_real_; }
  [[nodiscard]] bool is_principal() const noexcept { return is_principal_; }

  // Angle numerator k with chi(m) = exp(2 pi i k / E), or nullopt when gcd(m, q) > 1.
  [[nodiscard]] std::optional<std::uint32_t> angle(std::uint64_t m) const;

  [[nodiscard]] std::complex<double> operator()(std::uint64_t m) const noexcept { return values_[m % q()]; }

  // chi(0), ..., chi(q - 1).
  [[nodiscard]] std::span<const std::complex<double>> values() const noexcept { return values_; }

  [[nodiscard]] Character conj() const;

  // Smallest d | q such that chi is trivial on units congruent to 1 mod d.
  [[nodiscard]] std::uint32_t conductor() const;
  [[nodiscard]] bool is_primitive() const { return conductor() == q(); }

  // "q:<q>,idx:<v1,v2,...>"
  [[nodiscard]] std::string id() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.q() == b.q() && a.index_ == b.index_;
  }

 private:
  friend class CharacterGroup;
  Character(CharacterGroup group, std::vector<std::uint32_t> index);

  CharacterGroup group_;
  std::vector<std::uint32_t> index_;
  std::vector<std::int32_t> angles_;  // -1 off the units
  std::vector<std::complex<double>> values_;
  int parity_ = 1;
  bool is_real_ = true;
  bool is_principal_ = true;
};

[[nodiscard]] inline std::complex<double> chi_eval(const Character& chi, std::uint64_t m) { return chi(m); }
[[nodiscard]] inline int parity(const Character& chi) noexcept { return chi.parity(); }

// Real characters, principal first, then in the group's enumeration order.
[[nodiscard]] std::vector<Character> real_characters(const CharacterGroup& group);

struct CharacterId {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> index;
};

// Accepts "q:<q>,idx:<v1,...>". Throws DomainError on malformed input.
[[nodiscard]] CharacterId parse_character_id(std::string_view text);

// Index vector from "v1,v2,..." (empty string for trivial groups).
[[nodiscard]] std::vector<std::uint32_t> parse_index_vector(std::string_view text);

// Real zeros of L(s, chi) in (0, 1) for a real non-principal chi.
using RealZeroProvider = std::function<std::vector<double>(const Character&)>;

struct ExceptionalCandidate {
  std::optional<Character> character;  // empty: no real non-principal character
  bool fallback = false;               // true: no real zero found, chosen by conductor
  std::optional<double> beta;          // largest real zero, when found
};

// Real non-principal character owning the largest real zero in (0, 1); if
// none has one, the real non-principal character of largest conductor
// (first in enumeration order on ties), flagged as a fallback. Throws
// DomainError for q < 3.
[[nodiscard]] ExceptionalCandidate exceptional_candidate(const CharacterGroup& group,
                                                         const RealZeroProvider& zeros);

// max |sum_chi chi(a) conj(chi(b)) - phi(q) [a == b]| over unit pairs.
[[nodiscard]] double orthogonality_check(const CharacterGroup& group);

// max over non-principal chi of |sum_{m mod q} chi(m)|.
[[nodiscard]] double row_orthogonality_defect(const CharacterGroup& group);

}  // namespace gzlab
