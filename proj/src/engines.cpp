#include "aoxlab/engines.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "aoxlab/scramblers.hpp"

namespace aoxlab {

namespace c = constants;

// --- u128 text helpers ------------------------------------------------------

u128 parse_hex_u128(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty() || text.size() > 32) {
    throw std::invalid_argument("seed must be 1 to 32 hex digits");
  }
  u128 value = 0;
  for (char ch : text) {
    int digit;
    if (ch >= '0' && ch <= '9') {
      digit = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      digit = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      digit = ch - 'A' + 10;
    } else {
      throw std::invalid_argument("invalid hex digit in '" + std::string(text) + "'");
    }
    value = (value << 4) | static_cast<u128>(digit);
  }
  return value;
}

std::string format_hex_u128(u128 value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  do {
    out.insert(out.begin(), kDigits[static_cast<int>(value & 0xF)]);
    value >>= 4;
  } while (value != 0);
  return "0x" + out;
}

std::string format_dec_u128(u128 value) {
  std::string out;
  do {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  } while (value != 0);
  return out;
}

// --- ShiftTriple ------------------------------------------------------------

ShiftTriple ShiftTriple::from(int a, int b, int c) {
  const ShiftTriple t(a, b, c);
  if (t != original() && t != revised()) {
    throw std::invalid_argument("unsupported shift triple " + t.to_string() +
                                " (expected 55-14-36 or 24-16-37)");
  }
  return t;
}

ShiftTriple ShiftTriple::parse(std::string_view text) {
  int values[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    if (i > 0) {
      if (pos >= text.size() || (text[pos] != ',' && text[pos] != '-')) {
        throw std::invalid_argument("malformed shift triple '" + std::string(text) + "'");
      }
      ++pos;
    }
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), values[i]);
    if (ec != std::errc()) {
      throw std::invalid_argument("malformed shift triple '" + std::string(text) + "'");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  if (pos != text.size()) {
    throw std::invalid_argument("malformed shift triple '" + std::string(text) + "'");
  }
  return from(values[0], values[1], values[2]);
}

std::string ShiftTriple::to_string() const {
  return std::to_string(a_) + "-" + std::to_string(b_) + "-" + std::to_string(c_);
}

// --- xoroshiro128 -------------------------------------------------------------

Xoroshiro128::Xoroshiro128(Engine128State state, ShiftTriple shifts, OutputFunction output)
    : state_(state), shifts_(shifts), output_(output) {
  if (state.is_zero()) throw std::invalid_argument("xoroshiro128 state must be nonzero");
}

void Xoroshiro128::set_state(Engine128State state) {
  if (state.is_zero()) throw std::invalid_argument("xoroshiro128 state must be nonzero");
  state_ = state;
}

std::uint64_t Xoroshiro128::next() {
  const std::uint64_t res = apply_output(output_, state_.s0, state_.s1);
  state_ = xoroshiro_next_state(state_, shifts_);
  return res;
}

void Xoroshiro128::fill(std::span<std::uint64_t> out) {
  // Hoisted branches; the shift amounts stay runtime values.
  std::uint64_t s0 = state_.s0;
  std::uint64_t s1 = state_.s1;
  const int a = shifts_.a(), b = shifts_.b(), cc = shifts_.c();
  if (output_ == OutputFunction::aox) {
    for (auto& w : out) {
      const std::uint64_t sx = s0 ^ s1;
      const std::uint64_t sa = s0 & s1;
      w = sx ^ (rotl64(sa, 1) | rotl64(sa, 2));
      s0 = rotl64(s0, a) ^ sx ^ (sx << b);
      s1 = rotl64(sx, cc);
    }
  } else {
    for (auto& w : out) {
      const std::uint64_t sx = s0 ^ s1;
      w = s0 + s1;
      s0 = rotl64(s0, a) ^ sx ^ (sx << b);
      s1 = rotl64(sx, cc);
    }
  }
  state_ = {s0, s1};
}

// --- pcg64 ------------------------------------------------------------------

namespace {

constexpr std::uint64_t rotr64(std::uint64_t x, unsigned r) {
  return r == 0 ? x : (x >> r) | (x << (64 - r));
}

constexpr std::uint64_t xsl_rr(u128 state) {
  return rotr64(hi64(state) ^ lo64(state), static_cast<unsigned>(state >> 122));
}

}  // namespace

std::pair<Pcg64State, std::uint64_t> pcg64_next(Pcg64State st) {
  st.state = st.state * c::kPcgMultiplier128 + st.increment;
  return {st, xsl_rr(st.state)};
}

Pcg64::Pcg64(u128 initstate, u128 initseq) {
  st_.state = 0;
  st_.increment = (initseq << 1) | 1;
  st_.state = st_.state * c::kPcgMultiplier128 + st_.increment;
  st_.state += initstate;
  st_.state = st_.state * c::kPcgMultiplier128 + st_.increment;
}

Pcg64 Pcg64::from_state(Pcg64State st) {
  Pcg64 p;
  p.st_ = {st.state, st.increment | 1};
  return p;
}

std::uint64_t Pcg64::next() {
  auto [st, out] = pcg64_next(st_);
  st_ = st;
  return out;
}

void Pcg64::fill(std::span<std::uint64_t> out) {
  u128 state = st_.state;
  const u128 inc = st_.increment;
  for (auto& w : out) {
    state = state * c::kPcgMultiplier128 + inc;
    w = xsl_rr(state);
  }
  st_.state = state;
}

// --- philox4x32-10 ------------------------------------------------------------

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  for (int round = 0; round < c::kPhiloxRounds; ++round) {
    if (round > 0) {
      key[0] += c::kPhiloxW0;
      key[1] += c::kPhiloxW1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(c::kPhiloxM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(c::kPhiloxM1) * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
  }
  return ctr;
}

Philox4x32::Philox4x32(PhiloxState st) : st_(st) {}

std::uint64_t Philox4x32::next() {
  if (buffered_ == 0) {
    const PhiloxCounter block = philox4x32_10(st_.counter, st_.key);
    st_.counter = increment(st_.counter);
    buffer_[0] = (static_cast<std::uint64_t>(block[1]) << 32) | block[0];
    buffer_[1] = (static_cast<std::uint64_t>(block[3]) << 32) | block[2];
    buffered_ = 2;
  }
  return buffer_[2 - buffered_--];
}

void Philox4x32::fill(std::span<std::uint64_t> out) {
  std::size_t i = 0;
  while (i < out.size() && buffered_ != 0) out[i++] = next();
  for (; i + 2 <= out.size(); i += 2) {
    const PhiloxCounter block = philox4x32_10(st_.counter, st_.key);
    st_.counter = increment(st_.counter);
    out[i] = (static_cast<std::uint64_t>(block[1]) << 32) | block[0];
    out[i + 1] = (static_cast<std::uint64_t>(block[3]) << 32) | block[2];
  }
  if (i < out.size()) out[i] = next();
}

// --- mt32 -------------------------------------------------------------------

Mt32::Mt32(std::uint32_t seed) {
  auto& mt = st_.words;
  mt[0] = seed;
  for (int i = 1; i < c::kMtN; ++i) {
    mt[i] = c::kMtInitMultiplier * (mt[i - 1] ^ (mt[i - 1] >> 30)) + static_cast<std::uint32_t>(i);
  }
  st_.index = c::kMtN;
}

Mt32 Mt32::from_words(const std::array<std::uint32_t, c::kMtN>& words) {
  Mt32 m(0);
  auto& x = m.st_.words;
  x = words;
  std::uint32_t y0 = x[c::kMtM - 1] ^ x[c::kMtN - 1];
  if (y0 & c::kMtUpperMask) {
    y0 = ((y0 ^ c::kMtMatrixA) << 1) | 1;
  } else {
    y0 = y0 << 1;
  }
  x[0] = (x[0] & c::kMtUpperMask) | (y0 & c::kMtLowerMask);
  bool all_zero = true;
  for (auto w : x) all_zero = all_zero && w == 0;
  if (all_zero) x[0] = c::kMtUpperMask;
  m.st_.index = c::kMtN;
  return m;
}

void Mt32::twist() {
  auto& mt = st_.words;
  constexpr std::uint32_t mag01[2] = {0u, c::kMtMatrixA};
  int kk = 0;
  for (; kk < c::kMtN - c::kMtM; ++kk) {
    const std::uint32_t y = (mt[kk] & c::kMtUpperMask) | (mt[kk + 1] & c::kMtLowerMask);
    mt[kk] = mt[kk + c::kMtM] ^ (y >> 1) ^ mag01[y & 1];
  }
  for (; kk < c::kMtN - 1; ++kk) {
    const std::uint32_t y = (mt[kk] & c::kMtUpperMask) | (mt[kk + 1] & c::kMtLowerMask);
    mt[kk] = mt[kk + (c::kMtM - c::kMtN)] ^ (y >> 1) ^ mag01[y & 1];
  }
  const std::uint32_t y = (mt[c::kMtN - 1] & c::kMtUpperMask) | (mt[0] & c::kMtLowerMask);
  mt[c::kMtN - 1] = mt[c::kMtM - 1] ^ (y >> 1) ^ mag01[y & 1];
  st_.index = 0;
}

std::uint32_t Mt32::next32() {
  if (st_.index >= c::kMtN) twist();
  std::uint32_t y = st_.words[st_.index++];
  y ^= y >> 11;
  y ^= (y << 7) & c::kMtTemperB;
  y ^= (y << 15) & c::kMtTemperC;
  y ^= y >> 18;
  return y;
}

std::uint64_t Mt32::next() {
  const std::uint64_t lo = next32();
  const std::uint64_t hi = next32();
  return (hi << 32) | lo;
}

void Mt32::fill(std::span<std::uint64_t> out) {
  for (auto& w : out) w = next();
}

// --- Engine -----------------------------------------------------------------

GeneratorKind parse_generator(std::string_view name) {
  if (name == "xoroshiro128aox") return GeneratorKind::xoroshiro128aox;
  if (name == "xoroshiro128plus" || name == "xoroshiro128+") return GeneratorKind::xoroshiro128plus;
  if (name == "pcg64") return GeneratorKind::pcg64;
  if (name == "philox4x32-10" || name == "philox") return GeneratorKind::philox4x32_10;
  if (name == "mt32" || name == "mt19937") return GeneratorKind::mt32;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::xoroshiro128aox:
      return "xoroshiro128aox";
    case GeneratorKind::xoroshiro128plus:
      return "xoroshiro128plus";
    case GeneratorKind::pcg64:
      return "pcg64";
    case GeneratorKind::philox4x32_10:
      return "philox4x32-10";
    case GeneratorKind::mt32:
      return "mt32";
  }
  return "?";
}

std::uint64_t Engine::next() {
  return std::visit([](auto& e) -> std::uint64_t { return e.next(); }, impl_);
}

std::uint64_t Engine::next_native() {
  if (auto* mt = std::get_if<Mt32>(&impl_)) return mt->next32();
  return next();
}

void Engine::fill(std::span<std::uint64_t> out) {
  std::visit([out](auto& e) { e.fill(out); }, impl_);
}

Engine seed_engine(GeneratorKind kind, u128 seed, ShiftTriple shifts) {
  switch (kind) {
    case GeneratorKind::xoroshiro128aox:
    case GeneratorKind::xoroshiro128plus: {
      Engine128State st{lo64(seed), hi64(seed)};
      if (st.is_zero()) st = kZeroSeedFallback;
      const auto out = kind == GeneratorKind::xoroshiro128aox ? OutputFunction::aox : OutputFunction::plus;
      return Engine(kind, Xoroshiro128(st, shifts, out));
    }
    case GeneratorKind::pcg64:
      return Engine(kind, Pcg64(lo64(seed), hi64(seed)));
    case GeneratorKind::philox4x32_10: {
      PhiloxState st;
      st.key = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
      return Engine(kind, Philox4x32(st));
    }
    case GeneratorKind::mt32:
      return Engine(kind, Mt32(static_cast<std::uint32_t>(seed)));
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace aoxlab
