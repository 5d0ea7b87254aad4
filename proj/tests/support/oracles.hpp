// Copyright 2026 The plcpem Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force ground truth for the tests. None of this touches the library's
// own reference constructions; suffixes are compared symbol by symbol.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace plcpem::testing {

using Seq = std::vector<std::uint32_t>;

/// Maps "banana$" style strings to ranks by sorted distinct characters.
/// '$' is always rank 0 when present.
Seq ranks_of(std::string_view s);
std::uint32_t sigma_of(const Seq& s);

/// Suffix array of a terminated text by comparing whole suffixes.
std::vector<std::uint64_t> brute_sa(const Seq& s);
/// Rotation order of a circular text (length-n windows, ties by index).
std::vector<std::uint64_t> brute_circular_sa(const Seq& s);

/// Longest common prefix of suffixes p and q; circular texts wrap and stop at n.
std::uint64_t brute_lcp(const Seq& s, std::uint64_t p, std::uint64_t q, bool circular);

struct Brute {
    std::vector<std::uint64_t> sa;
    std::vector<std::uint64_t> isa;
    std::vector<std::uint64_t> lcp;
    std::vector<std::uint64_t> plcp;
    Seq bwt;
};
Brute brute_all(const Seq& s, bool circular);

/// K from its definition: position order starting at `shift`, each entry
/// contributes PLCP[i] - PLCP[i-1] + 1 zeros then a one, the value before
/// the first encoded entry taken as 0.
std::string brute_k(const std::vector<std::uint64_t>& plcp, std::uint64_t shift);
/// Rank-order PD: for rank r the zero count of its text position.
std::string brute_pd(const Brute& b, bool circular);

/// Smallest p dividing n with s[i] == s[i mod p].
std::uint64_t brute_period(const Seq& s);

// Generators. All take a caller-owned engine.
Seq random_linear(std::mt19937_64& rng, std::size_t n, std::uint32_t sigma);
Seq random_circular_primitive(std::mt19937_64& rng, std::size_t n, std::uint32_t sigma);
Seq power_of(const Seq& root, std::size_t k);
Seq all_equal_linear(std::size_t n);
Seq de_bruijn_linear(unsigned order, std::uint32_t sigma);
Seq aka_linear(std::size_t k);
Seq worst_case_linear(std::size_t n);

/// Named linear texts used by several suites, each ending in rank 0.
struct Named {
    std::string name;
    Seq seq;
};
std::vector<Named> adversarial_suite();
std::vector<Named> random_suite(std::uint64_t seed, std::size_t count, std::size_t max_n);

std::string bits_string(const std::vector<bool>& bits);

}  // namespace plcpem::testing
