#include "scott/coding.hpp"

#include <stdexcept>

namespace scott {

namespace {

// Largest set element we are willing to expand into a bit position.
constexpr unsigned long kMaxBitExponent = 1u << 24;

unsigned long to_bit_exponent(const Natural& a) {
  if (a < 0 || a > kMaxBitExponent)
    throw std::overflow_error("set element too large to place as a bit position");
  return a.convert_to<unsigned long>();
}

} // namespace

Natural pair_code(const Natural& x, const Natural& y) {
  if (x < 0 || y < 0) throw std::domain_error("pair_code: negative input");
  Natural s = x + y;
  Natural num = s * s + 3 * x + y;
  if (num % 2 != 0) throw std::logic_error("pair_code: parity violated");
  return num / 2;
}

std::pair<Natural, Natural> unpair_code(const Natural& c) {
  if (c < 0) throw std::domain_error("unpair_code: negative input");
  // c = w(w+1)/2 + x with w = x + y, 0 <= x <= w.
  Natural w = (boost::multiprecision::sqrt(8 * c + 1) - 1) / 2;
  Natural tri = w * (w + 1) / 2;
  if (tri > c) { w -= 1; tri = w * (w + 1) / 2; } // guard isqrt edge
  Natural x = c - tri;
  Natural y = w - x;
  return {x, y};
}

Natural encode_set(const std::set<Natural>& s) {
  Natural code = 0;
  for (const Natural& a : s) bit_set(code, to_bit_exponent(a));
  return code;
}

std::set<Natural> decode_set(const Natural& code) {
  if (code < 0) throw std::domain_error("decode_set: negative input");
  std::set<Natural> out;
  for (unsigned long i = 0; i < msb(code + 1) + 1; ++i)
    if (code != 0 && bit_test(code, i)) out.insert(Natural(i));
  return out;
}

Natural encode_seq(const std::vector<Natural>& seq) {
  std::set<Natural> s;
  for (std::size_t i = 0; i < seq.size(); ++i)
    s.insert(pair_code(Natural(i), seq[i]));
  return encode_set(s);
}

std::optional<std::vector<Natural>> decode_seq(const Natural& code) {
  if (code < 0) return std::nullopt;
  std::set<Natural> s = decode_set(code);
  std::vector<std::optional<Natural>> slots(s.size());
  for (const Natural& e : s) {
    auto [i, a] = unpair_code(e);
    if (i >= s.size()) return std::nullopt; // index outside [0, |s|)
    std::size_t idx = i.convert_to<std::size_t>();
    if (slots[idx].has_value()) return std::nullopt; // duplicate index
    slots[idx] = a;
  }
  std::vector<Natural> out;
  out.reserve(slots.size());
  for (auto& v : slots) {
    if (!v.has_value()) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

bool is_seq_code(const Natural& code) { return decode_seq(code).has_value(); }

Natural seq_len(const Natural& code) {
  auto seq = decode_seq(code);
  if (!seq) throw std::invalid_argument("seq_len: not a sequence code");
  return Natural(seq->size());
}

Natural seq_concat(const Natural& left, const Natural& right) {
  auto l = decode_seq(left);
  auto r = decode_seq(right);
  if (!l || !r) throw std::invalid_argument("seq_concat: not a sequence code");
  l->insert(l->end(), r->begin(), r->end());
  return encode_seq(*l);
}

} // namespace scott
