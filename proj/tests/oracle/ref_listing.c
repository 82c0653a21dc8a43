/* The published listing, one copy per output function and shift triple.
 * Only names differ from the original. */
#include <stdint.h>

#include "ref_listing.h"

/* aox, 55-14-36 */
static uint64_t ref_aox_55_s0, ref_aox_55_s1; // State vectors

static uint64_t ref_aox_55_rotl(uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

uint64_t ref_aox_55_next(void) {
  uint64_t s0 = ref_aox_55_s0, s1 = ref_aox_55_s1;
  uint64_t sx = s0 ^ s1;
  // Calculate the result, the 'AOX' step.
  uint64_t sa = s0 & s1;
  uint64_t res =
    sx ^ (ref_aox_55_rotl(sa, 1) | ref_aox_55_rotl(sa, 2));
  (void)sa;
  // State update
  s0 = ref_aox_55_rotl(s0, 55) ^ sx ^ (sx << 14);
  s1 = ref_aox_55_rotl(sx, 36);
  ref_aox_55_s0 = s0;
  ref_aox_55_s1 = s1;
  return res;
}

void ref_aox_55_seed(uint64_t s0, uint64_t s1) {
  ref_aox_55_s0 = s0;
  ref_aox_55_s1 = s1;
}

/* aox, 24-16-37 */
static uint64_t ref_aox_24_s0, ref_aox_24_s1; // State vectors

static uint64_t ref_aox_24_rotl(uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

uint64_t ref_aox_24_next(void) {
  uint64_t s0 = ref_aox_24_s0, s1 = ref_aox_24_s1;
  uint64_t sx = s0 ^ s1;
  // Calculate the result, the 'AOX' step.
  uint64_t sa = s0 & s1;
  uint64_t res =
    sx ^ (ref_aox_24_rotl(sa, 1) | ref_aox_24_rotl(sa, 2));
  (void)sa;
  // State update
  s0 = ref_aox_24_rotl(s0, 24) ^ sx ^ (sx << 16);
  s1 = ref_aox_24_rotl(sx, 37);
  ref_aox_24_s0 = s0;
  ref_aox_24_s1 = s1;
  return res;
}

void ref_aox_24_seed(uint64_t s0, uint64_t s1) {
  ref_aox_24_s0 = s0;
  ref_aox_24_s1 = s1;
}

/* plus, 55-14-36 */
static uint64_t ref_plus_55_s0, ref_plus_55_s1; // State vectors

static uint64_t ref_plus_55_rotl(uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

uint64_t ref_plus_55_next(void) {
  uint64_t s0 = ref_plus_55_s0, s1 = ref_plus_55_s1;
  uint64_t sx = s0 ^ s1;
  // Calculate the result, the 'AOX' step.
  uint64_t sa = s0 & s1;
  uint64_t res =
    s0 + s1;
  (void)sa;
  // State update
  s0 = ref_plus_55_rotl(s0, 55) ^ sx ^ (sx << 14);
  s1 = ref_plus_55_rotl(sx, 36);
  ref_plus_55_s0 = s0;
  ref_plus_55_s1 = s1;
  return res;
}

void ref_plus_55_seed(uint64_t s0, uint64_t s1) {
  ref_plus_55_s0 = s0;
  ref_plus_55_s1 = s1;
}

/* plus, 24-16-37 */
static uint64_t ref_plus_24_s0, ref_plus_24_s1; // State vectors

static uint64_t ref_plus_24_rotl(uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

uint64_t ref_plus_24_next(void) {
  uint64_t s0 = ref_plus_24_s0, s1 = ref_plus_24_s1;
  uint64_t sx = s0 ^ s1;
  // Calculate the result, the 'AOX' step.
  uint64_t sa = s0 & s1;
  uint64_t res =
    s0 + s1;
  (void)sa;
  // State update
  s0 = ref_plus_24_rotl(s0, 24) ^ sx ^ (sx << 16);
  s1 = ref_plus_24_rotl(sx, 37);
  ref_plus_24_s0 = s0;
  ref_plus_24_s1 = s1;
  return res;
}

void ref_plus_24_seed(uint64_t s0, uint64_t s1) {
  ref_plus_24_s0 = s0;
  ref_plus_24_s1 = s1;
}
