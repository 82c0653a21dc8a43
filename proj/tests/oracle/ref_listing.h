#pragma once

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

void ref_aox_55_seed(uint64_t s0, uint64_t s1);
uint64_t ref_aox_55_next(void);
void ref_aox_24_seed(uint64_t s0, uint64_t s1);
uint64_t ref_aox_24_next(void);
void ref_plus_55_seed(uint64_t s0, uint64_t s1);
uint64_t ref_plus_55_next(void);
void ref_plus_24_seed(uint64_t s0, uint64_t s1);
uint64_t ref_plus_24_next(void);

#ifdef __cplusplus
}
#endif
