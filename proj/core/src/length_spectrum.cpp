#include "orbitdeg/length_spectrum.hpp"

#include <algorithm>
#include <random>
#include <string>

#include <json.hpp>

#include "orbitdeg/errors.hpp"

namespace orbitdeg {

namespace {

std::vector<long> first_primes(std::size_t count) {
  std::vector<long> primes;
  for (long candidate = 2; primes.size() < count; ++candidate) {
    const bool prime = std::none_of(primes.begin(), primes.end(), [&](long p) {
      return p * p <= candidate && candidate % p == 0;
    });
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

}  // namespace

LengthScheme parse_length_scheme(std::string_view name) {
  if (name == "sqrt-primes") return LengthScheme::sqrt_primes;
  if (name == "uniform-random") return LengthScheme::uniform_random;
  throw DomainError("unknown length scheme '" + std::string(name) + "'");
}

std::string_view to_string(LengthScheme scheme) {
  return scheme == LengthScheme::sqrt_primes ? "sqrt-primes" : "uniform-random";
}

BondLengthAssignment default_lengths(int V, LengthScheme scheme, std::uint64_t seed) {
  if (V < 2) throw DomainError("default_lengths needs V >= 2");
  const std::vector<Bond> bonds = GraphSpec::complete(V).bonds();
  BondLengthAssignment out;
  if (scheme == LengthScheme::sqrt_primes) {
    const std::vector<long> primes = first_primes(bonds.size());
    for (std::size_t k = 0; k < bonds.size(); ++k) out.lengths.emplace(bonds[k], sqrt(Real(primes[k])));
  } else {
    // mt19937_64 output is fully specified, and the mapping to (1, 2) uses
    // the top 53 bits exactly, so a seed gives the same lengths everywhere.
    std::mt19937_64 rng(seed);
    const Real scale = Real(1) / Real(Integer(1) << 53);
    for (const Bond& b : bonds) {
      const auto bits = rng() >> 11;
      out.lengths.emplace(b, Real(1) + (Real(bits) + Real(0.5)) * scale);
    }
  }
  return out;
}

Real length_of(const ClassCode& code, const BondLengthAssignment& lengths) {
  Real total = 0;
  for (const auto& e : code.entries()) {
    const auto it = lengths.lengths.find(Bond{e.i, e.j});
    if (it == lengths.lengths.end()) {
      throw DomainError("no length assigned to bond (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
    }
    total += Real(e.q) * it->second;
  }
  return total;
}

std::vector<SpectrumEntry> build_spectrum(const GraphSpec& g, int n_max, const BondLengthAssignment& lengths,
                                          const OracleCaps& caps) {
  std::vector<SpectrumEntry> entries;
  for (int n = 2; n <= n_max; ++n) {
    const std::vector<OrbitRep> orbits = enumerate_orbits(g, n, caps);
    for (const auto& [code, members] : group_by_class(orbits)) {
      entries.push_back({code, length_of(code, lengths), members.degeneracy, n});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.code < b.code;
  });
  return entries;
}

void write_spectrum_jsonl(std::ostream& out, std::span<const SpectrumEntry> entries) {
  for (const auto& e : entries) {
    nlohmann::ordered_json row;
    row["period"] = e.period;
    auto code = nlohmann::json::array();
    for (const auto& b : e.code.entries()) code.push_back({b.i, b.j, b.q});
    row["code"] = std::move(code);
    row["length"] = to_decimal(e.length, kSpectrumDigits);
    row["degeneracy"] = e.degeneracy;
    out << row.dump() << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, std::span<const SpectrumEntry> entries) {
  out << "period,length,degeneracy\n";
  for (const auto& e : entries) {
    out << e.period << ',' << to_decimal(e.length, kSpectrumDigits) << ',' << e.degeneracy << '\n';
  }
}

}  // namespace orbitdeg
