#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "orbitdeg/graph.hpp"
#include "orbitdeg/numeric.hpp"
#include "orbitdeg/oracle.hpp"

namespace orbitdeg {

enum class LengthScheme {
  sqrt_primes,     // L_(i,j) = sqrt(k-th prime), pairs in lexicographic order
  uniform_random,  // seeded draws from (1, 2)
};

LengthScheme parse_length_scheme(std::string_view name);
std::string_view to_string(LengthScheme scheme);

struct BondLengthAssignment {
  std::map<Bond, Real> lengths;
  // Spectrum lines are told apart by their integer codes, never by comparing
  // lengths numerically.
  bool symbolic = true;
};

BondLengthAssignment default_lengths(int V, LengthScheme scheme, std::uint64_t seed = 0);

/// sum_b q_b L_b. DomainError if a used bond has no length.
Real length_of(const ClassCode& code, const BondLengthAssignment& lengths);

struct SpectrumEntry {
  ClassCode code;
  Real length;
  std::size_t degeneracy = 0;
  int period = 0;
};

/// One entry per degeneracy class for every period 2..n_max, sorted by
/// length, ties broken by code.
std::vector<SpectrumEntry> build_spectrum(const GraphSpec& g, int n_max, const BondLengthAssignment& lengths,
                                          const OracleCaps& caps = {});

// JSON lines: {"period", "code": [[i,j,q],...], "length" (50 significant
// digits, as a string), "degeneracy"} in that key order.
void write_spectrum_jsonl(std::ostream& out, std::span<const SpectrumEntry> entries);
// CSV with header period,length,degeneracy.
void write_spectrum_csv(std::ostream& out, std::span<const SpectrumEntry> entries);

inline constexpr int kSpectrumDigits = 50;

}  // namespace orbitdeg
