#pragma once
// Shared plumbing for the whole library: error taxonomy and overflow-checked
// 64-bit integer arithmetic.  Everything downstream is exact; any overflow is
// a hard failure, never a silent wrap.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swc {

// Bad input at the API boundary: unknown generator index, malformed element
// string, unsupported rank, void complex where a facet is required.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured face/term cap.
struct size_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exactness violation: integer overflow, nonzero remainder in a division that
// must be exact, or a theorem-backed uniqueness failing to hold.  Always a bug.
struct arithmetic_error : std::logic_error {
  using std::logic_error::logic_error;
};

namespace checked {

inline int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw arithmetic_error("int64 overflow in add");
  return r;
}

inline int64_t sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_error("int64 overflow in sub");
  return r;
}

inline int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_error("int64 overflow in mul");
  return r;
}

inline int64_t neg(int64_t a) {
  if (a == INT64_MIN) throw arithmetic_error("int64 overflow in neg");
  return -a;
}

}  // namespace checked
}  // namespace swc
