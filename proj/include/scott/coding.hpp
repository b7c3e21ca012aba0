#ifndef SCOTT_CODING_HPP
#define SCOTT_CODING_HPP

#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace scott {

// Arbitrary-precision non-negative integer. All coding operations stay within
// the non-negative range; subtraction is never exposed.
using Natural = boost::multiprecision::cpp_int;

// ⟨x,y⟩ = ((x+y)^2 + 3x + y) / 2. The division is exact; checked at runtime.
Natural pair_code(const Natural& x, const Natural& y);

// Inverse of pair_code: pair_code(unpair(c)) == c.
std::pair<Natural, Natural> unpair_code(const Natural& c);

// A finite set of naturals is coded as sum of 2^a over its elements.
// Exponents beyond a sanity bound (the code would not fit in memory) throw.
Natural encode_set(const std::set<Natural>& s);
std::set<Natural> decode_set(const Natural& code);

// A sequence (a_0, ..., a_{k-1}) is coded as the set {⟨i, a_i⟩ : i < k}.
// The empty sequence has code 0.
Natural encode_seq(const std::vector<Natural>& seq);

// Returns nothing when the bit-set of `code` is not of the functional form
// {⟨0,a_0⟩, ..., ⟨k-1,a_{k-1}⟩}.
std::optional<std::vector<Natural>> decode_seq(const Natural& code);

bool is_seq_code(const Natural& code);

// Length of the coded sequence; rejects non-sequence codes.
Natural seq_len(const Natural& code);

// Code of the concatenation of the two coded sequences.
Natural seq_concat(const Natural& left, const Natural& right);

} // namespace scott

#endif
