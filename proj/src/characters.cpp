#include "gzlab/characters.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>
#include <utility>

#include "gzlab/arith.hpp"
#include "gzlab/compensated.hpp"
#include "gzlab/errors.hpp"

namespace gzlab {

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = a % m;
  if (a1 < 0) a1 += m;
  while (a1) {
    const std::int64_t t = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - t * a1);
    std::tie(x, x1) = std::make_pair(x1, x - t * x1);
  }
  return ((x % m) + m) % m;
}

// x = r mod m, x = 1 mod q/m.
std::uint32_t crt_lift(std::uint64_t r, std::uint64_t m, std::uint64_t q) {
  const std::uint64_t rest = q / m;
  if (rest == 1) return static_cast<std::uint32_t>(r % q);
  const auto inv_rest = static_cast<std::uint64_t>(inverse_mod(static_cast<std::int64_t>(rest % m), static_cast<std::int64_t>(m)));
  const auto inv_m = static_cast<std::uint64_t>(inverse_mod(static_cast<std::int64_t>(m % rest), static_cast<std::int64_t>(rest)));
  const std::uint64_t x = (r % m * rest % q * inv_rest + m * inv_m) % q;
  return static_cast<std::uint32_t>(x);
}

std::uint64_t primitive_root_mod_prime(std::uint64_t p) {
  if (p == 2) return 1;
  const Factorization f = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& pp : f.factors)
      if (powmod(g, (p - 1) / pp.prime, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw DomainError("no primitive root found");
}

}  // namespace

CharacterGroup build_group(std::uint32_t q) {
  if (q < 1 || q > kMaxCharacterModulus)
    throw SizeError("build_group: q must lie in [1, " + std::to_string(kMaxCharacterModulus) + "]");

  auto impl = std::make_shared<CharacterGroup::Impl>();
  impl->q = q;
  const Factorization f = factorize(q);
  for (const auto& [p, e] : f.factors) {
    std::uint64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e >= 2) impl->gens.push_back({crt_lift(pe - 1, pe, q), 2});
      if (e >= 3) impl->gens.push_back({crt_lift(5, pe, q), static_cast<std::uint32_t>(pe / 4)});
      continue;
    }
    std::uint64_t g = primitive_root_mod_prime(p);
    if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
    impl->gens.push_back({crt_lift(g, pe, q), static_cast<std::uint32_t>(pe / p * (p - 1))});
  }

  const std::size_t r = impl->gens.size();
  impl->size = 1;
  impl->exponent = 1;
  for (const auto& g : impl->gens) {
    impl->size *= g.order;
    impl->exponent = std::lcm(impl->exponent, g.order);
  }

  impl->unit.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a)
    if (std::gcd(a, q) == 1) {
      impl->unit[a] = 1;
      impl->units.push_back(a);
    }
  if (impl->units.size() != impl->size) throw DomainError("build_group: generator orders do not multiply to phi(q)");

  // Walk every exponent vector (last generator fastest) and record its residue.
  impl->dlog.assign(static_cast<std::size_t>(q) * r, 0);
  std::vector<std::uint32_t> e(r, 0);
  std::vector<std::uint8_t> seen(q, 0);
  for (std::uint32_t count = 0; count < impl->size; ++count) {
    std::uint64_t x = 1 % q;
    for (std::size_t j = 0; j < r; ++j) x = x * powmod(impl->gens[j].residue, e[j], q) % q;
    if (seen[x]) throw DomainError("build_group: generators are not independent");
    seen[x] = 1;
    std::copy(e.begin(), e.end(), impl->dlog.begin() + static_cast<std::ptrdiff_t>(x * r));
    for (std::size_t j = r; j-- > 0;) {
      if (++e[j] < impl->gens[j].order) break;
      e[j] = 0;
    }
  }

  const std::uint32_t E = impl->exponent;
  impl->roots.resize(E);
  for (std::uint32_t k = 0; k < E; ++k) {
    if ((4 * static_cast<std::uint64_t>(k)) % E == 0) {
      static constexpr std::complex<double> quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      impl->roots[k] = quarter[(4 * static_cast<std::uint64_t>(k)) / E];
    } else {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(E);
      impl->roots[k] = {std::cos(theta), std::sin(theta)};
    }
  }

  CharacterGroup group;
  group.impl_ = std::move(impl);
  return group;
}

std::span<const std::uint32_t> CharacterGroup::dlog(std::uint64_t m) const {
  const std::size_t r = impl_->gens.size();
  const std::uint64_t a = m % impl_->q;
  if (!impl_->unit[a]) throw DomainError("dlog of a non-unit residue");
  return std::span<const std::uint32_t>(impl_->dlog).subspan(a * r, r);
}

std::uint32_t CharacterGroup::residue(std::span<const std::uint32_t> exps) const {
  if (exps.size() != impl_->gens.size()) throw DomainError("exponent vector has wrong length");
  std::uint64_t x = 1 % impl_->q;
  for (std::size_t j = 0; j < exps.size(); ++j) x = x * powmod(impl_->gens[j].residue, exps[j], impl_->q) % impl_->q;
  return static_cast<std::uint32_t>(x);
}

Character CharacterGroup::character(std::vector<std::uint32_t> index) const {
  if (index.size() != impl_->gens.size())
    throw DomainError("character index has " + std::to_string(index.size()) + " entries, expected " +
                      std::to_string(impl_->gens.size()));
  for (std::size_t j = 0; j < index.size(); ++j)
    if (index[j] >= impl_->gens[j].order) throw DomainError("character index entry out of range");
  return Character(*this, std::move(index));
}

Character CharacterGroup::principal() const { return character(std::vector<std::uint32_t>(impl_->gens.size(), 0)); }

std::vector<Character> CharacterGroup::characters() const {
  std::vector<Character> out;
  out.reserve(impl_->size);
  const std::size_t r = impl_->gens.size();
  std::vector<std::uint32_t> idx(r, 0);
  for (std::uint32_t count = 0; count < impl_->size; ++count) {
    out.push_back(character(idx));
    for (std::size_t j = r; j-- > 0;) {
      if (++idx[j] < impl_->gens[j].order) break;
      idx[j] = 0;
    }
  }
  return out;
}

Character::Character(CharacterGroup group, std::vector<std::uint32_t> index)
    : group_(std::move(group)), index_(std::move(index)) {
  const std::uint32_t q = group_.q();
  const std::uint32_t E = group_.exponent();
  const auto gens = group_.generators();
  angles_.assign(q, -1);
  values_.assign(q, {0.0, 0.0});
  for (std::uint32_t a : group_.units()) {
    const auto d = group_.dlog(a);
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < gens.size(); ++j)
      k = (k + static_cast<std::uint64_t>(index_[j]) * d[j] * (E / gens[j].order)) % E;
    angles_[a] = static_cast<std::int32_t>(k);
    values_[a] = group_.root(static_cast<std::uint32_t>(k));
  }
  is_principal_ = std::all_of(index_.begin(), index_.end(), [](std::uint32_t v) { return v == 0; });
  is_real_ = true;
  for (std::size_t j = 0; j < gens.size(); ++j)
    if ((2 * static_cast<std::uint64_t>(index_[j])) % gens[j].order != 0) is_real_ = false;
  parity_ = (values_[(q - 1) % q].real() < 0) ? -1 : 1;
}

std::optional<std::uint32_t> Character::angle(std::uint64_t m) const {
  const std::int32_t a = angles_[m % q()];
  if (a < 0) return std::nullopt;
  return static_cast<std::uint32_t>(a);
}

Character Character::conj() const {
  std::vector<std::uint32_t> idx(index_.size());
  const auto gens = group_.generators();
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = (gens[j].order - index_[j]) % gens[j].order;
  return group_.character(std::move(idx));
}

std::uint32_t Character::conductor() const {
  const std::uint32_t n = q();
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool trivial = true;
    for (std::uint32_t a = 1 % d; a < n && trivial; a += d)
      if (group_.is_unit(a) && angles_[a] != 0) trivial = false;
    if (trivial) return d;
  }
  return n;
}

std::string Character::id() const {
  std::string s = "q:" + std::to_string(q()) + ",idx:";
  for (std::size_t j = 0; j < index_.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(index_[j]);
  }
  return s;
}

std::vector<Character> real_characters(const CharacterGroup& group) {
  std::vector<Character> out;
  for (auto& chi : group.characters())
    if (chi.is_real()) out.push_back(std::move(chi));
  return out;
}

std::vector<std::uint32_t> parse_index_vector(std::string_view text) {
  std::vector<std::uint32_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view part = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw DomainError("malformed character index '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

CharacterId parse_character_id(std::string_view text) {
  constexpr std::string_view q_tag = "q:";
  constexpr std::string_view idx_tag = ",idx:";
  const std::size_t idx_pos = text.find(idx_tag);
  if (!text.starts_with(q_tag) || idx_pos == std::string_view::npos)
    throw DomainError("malformed character id '" + std::string(text) + "'");
  const std::string_view qs = text.substr(q_tag.size(), idx_pos - q_tag.size());
  CharacterId id;
  const auto [ptr, ec] = std::from_chars(qs.data(), qs.data() + qs.size(), id.q);
  if (ec != std::errc() || ptr != qs.data() + qs.size() || qs.empty())
    throw DomainError("malformed modulus in character id '" + std::string(text) + "'");
  id.index = parse_index_vector(text.substr(idx_pos + idx_tag.size()));
  return id;
}

ExceptionalCandidate exceptional_candidate(const CharacterGroup& group, const RealZeroProvider& zeros) {
  if (group.q() < 3) throw DomainError("exceptional_candidate: q must be >= 3");
  ExceptionalCandidate best;
  for (const auto& chi : real_characters(group)) {
    if (chi.is_principal()) continue;
    const std::vector<double> z = zeros(chi);
    if (z.empty()) continue;
    const double top = *std::max_element(z.begin(), z.end());
    if (!best.beta || top > *best.beta) {
      best.character = chi;
      best.beta = top;
    }
  }
  if (best.character) return best;

  std::uint32_t best_conductor = 0;
  for (const auto& chi : real_characters(group)) {
    if (chi.is_principal()) continue;
    const std::uint32_t c = chi.conductor();
    if (c > best_conductor) {
      best_conductor = c;
      best.character = chi;
    }
  }
  best.fallback = best.character.has_value();
  return best;
}

double orthogonality_check(const CharacterGroup& group) {
  if (group.size() > 10000) throw SizeError("orthogonality_check: phi(q) above 10^4");
  const auto chars = group.characters();
  const auto units = group.units();
  const double phi = group.size();
  double defect = 0.0;

  if (group.size() <= 256) {
    for (std::uint32_t a : units)
      for (std::uint32_t b : units) {
        std::complex<double> s = 0.0;
        for (const auto& chi : chars) s += chi(a) * std::conj(chi(b));
        defect = std::max(defect, std::abs(s - std::complex<double>(a == b ? phi : 0.0)));
      }
    return defect;
  }

  // Large groups: chi(a) conj(chi(b)) = chi(c) with c = a b^-1 (exact in the
  // angle representation), so each column sum is formed once.
  const std::uint32_t q = group.q();
  std::vector<std::complex<double>> column(q, 0.0);
  for (std::uint32_t c : units) {
    CompensatedSum re, im;
    for (const auto& chi : chars) {
      re.add(chi(c).real());
      im.add(chi(c).imag());
    }
    column[c] = {re.value(), im.value()};
  }
  for (std::uint32_t a : units)
    for (std::uint32_t b : units) {
      const auto c = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(inverse_mod(b, q)) % q);
      defect = std::max(defect, std::abs(column[c] - std::complex<double>(a == b ? phi : 0.0)));
    }
  return defect;
}

double row_orthogonality_defect(const CharacterGroup& group) {
  double defect = 0.0;
  for (const auto& chi : group.characters()) {
    if (chi.is_principal()) continue;
    CompensatedSum re, im;
    for (const auto& v : chi.values()) {
      re.add(v.real());
      im.add(v.imag());
    }
    defect = std::max(defect, std::hypot(re.value(), im.value()));
  }
  return defect;
}

}  // namespace gzlab
